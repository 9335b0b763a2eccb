#include "splitcycle/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "splitcycle/errors.hpp"

namespace splitcycle {

namespace {

constexpr std::string_view kProfileHeader = "# splitcycle profile v1";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename Int>
bool to_int(std::string_view s, Int& v) {
    s = trim(s);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size();
}

template <typename Int>
Int parse_int(std::string_view s, int line, const char* what) {
    Int v{};
    if (!to_int(s, v)) throw ParseError(std::string("expected ") + what + ", got '" + std::string(trim(s)) + "'", line);
    return v;
}

// Splits "count: a,b,c" into count and ranking tokens.
std::pair<std::int64_t, std::vector<std::string_view>> ballot_line(std::string_view s, int line) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'count: ballot'", line);
    auto count = parse_int<std::int64_t>(s.substr(0, colon), line, "a voter count");
    if (count < 1) throw ParseError("voter count must be positive", line);
    return {count, split(s.substr(colon + 1), ',')};
}

std::vector<std::string_view> lines_of(std::string_view text) {
    auto out = split(text, '\n');
    if (!out.empty() && trim(out.back()).empty()) out.pop_back();
    return out;
}

}  // namespace

Profile parse_preflib(std::string_view text) {
    int declared = -1;
    std::map<int, std::string> names;
    struct Row {
        std::int64_t count;
        std::vector<int> ranking;
        int line;
    };
    std::vector<Row> rows;

    auto lines = lines_of(text);
    for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
        auto s = trim(lines[ln - 1]);
        if (s.empty()) continue;
        if (s.front() == '#') {
            auto body = trim(s.substr(1));
            auto colon = body.find(':');
            if (colon == std::string_view::npos) continue;
            auto key = trim(body.substr(0, colon));
            auto value = trim(body.substr(colon + 1));
            if (key == "NUMBER ALTERNATIVES") {
                declared = parse_int<int>(value, ln, "a number of alternatives");
            } else if (key.starts_with("ALTERNATIVE NAME")) {
                int id = parse_int<int>(key.substr(16), ln, "an alternative number");
                names[id] = std::string(value);
            } else if (key == "DATA TYPE" && value != "soc") {
                throw ParseError("unsupported data type '" + std::string(value) + "' (strict complete orders only)",
                                 ln);
            }
            continue;
        }
        if (s.find('{') != std::string_view::npos)
            throw ParseError("unsupported format: tied alternatives (linear ballots only)", ln);
        auto [count, tokens] = ballot_line(s, ln);
        Row r{count, {}, ln};
        for (auto t : tokens) r.ranking.push_back(parse_int<int>(t, ln, "an alternative number"));
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw ParseError("no ballots", static_cast<int>(lines.size()));

    int k = declared;
    if (k < 0)
        for (const auto& r : rows)
            for (int c : r.ranking) k = std::max(k, c);
    if (k < 1) throw ParseError("no alternatives", 1);

    std::vector<BallotCount> ballots;
    for (auto& r : rows) {
        std::set<int> seen;
        for (int& c : r.ranking) {
            if (c < 1 || c > k) throw ParseError("alternative " + std::to_string(c) + " out of range", r.line);
            if (!seen.insert(c).second)
                throw ParseError("alternative " + std::to_string(c) + " listed twice", r.line);
            c -= 1;
        }
        if (static_cast<int>(seen.size()) != k)
            throw ParseError("unsupported format: ballot ranks " + std::to_string(seen.size()) + " of " +
                                 std::to_string(k) + " alternatives",
                             r.line);
        ballots.push_back({std::move(r.ranking), r.count});
    }
    std::vector<std::pair<int, std::string>> labels;
    for (const auto& [id, name] : names)
        if (id >= 1 && id <= k) labels.emplace_back(id - 1, name);
    std::vector<int> ids(k);
    for (int i = 0; i < k; ++i) ids[i] = i;
    return Profile(std::move(ids), std::move(ballots), std::move(labels));
}

std::string serialize_profile(const Profile& p) {
    std::ostringstream out;
    out << kProfileHeader << '\n' << "candidates: ";
    for (std::size_t i = 0; i < p.candidates().size(); ++i) out << (i ? "," : "") << p.candidates()[i];
    out << '\n';
    for (const auto& [id, text] : p.labels()) {
        std::string clean = text;
        std::replace(clean.begin(), clean.end(), '\n', ' ');
        out << "label " << id << ": " << clean << '\n';
    }
    for (const auto& b : p.ballots()) {
        out << b.count << ": ";
        for (std::size_t i = 0; i < b.ranking.size(); ++i) out << (i ? "," : "") << b.ranking[i];
        out << '\n';
    }
    return out.str();
}

Profile deserialize_profile(std::string_view text) {
    auto lines = lines_of(text);
    if (lines.empty() || trim(lines[0]) != kProfileHeader)
        throw ParseError("missing header '" + std::string(kProfileHeader) + "'", 1);
    std::vector<int> candidates;
    bool have_candidates = false;
    std::vector<std::pair<int, std::string>> labels;
    std::vector<BallotCount> ballots;

    for (int ln = 2; ln <= static_cast<int>(lines.size()); ++ln) {
        auto s = trim(lines[ln - 1]);
        if (s.empty() || s.front() == '#') continue;
        if (s.starts_with("candidates:")) {
            if (have_candidates) throw ParseError("candidates listed twice", ln);
            have_candidates = true;
            for (auto t : split(s.substr(11), ',')) candidates.push_back(parse_int<int>(t, ln, "a candidate id"));
            auto sorted = candidates;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw ParseError("duplicate candidate id", ln);
            continue;
        }
        if (!have_candidates) throw ParseError("'candidates:' line must come first", ln);
        if (s.starts_with("label ")) {
            auto colon = s.find(':');
            if (colon == std::string_view::npos) throw ParseError("expected 'label id: text'", ln);
            int id = parse_int<int>(s.substr(6, colon - 6), ln, "a candidate id");
            if (std::find(candidates.begin(), candidates.end(), id) == candidates.end())
                throw ParseError("label for unknown candidate " + std::to_string(id), ln);
            labels.emplace_back(id, std::string(trim(s.substr(colon + 1))));
            continue;
        }
        auto [count, tokens] = ballot_line(s, ln);
        Ballot r;
        std::set<int> seen;
        for (auto t : tokens) {
            int c = parse_int<int>(t, ln, "a candidate id");
            if (std::find(candidates.begin(), candidates.end(), c) == candidates.end())
                throw ParseError("unknown candidate " + std::to_string(c), ln);
            if (!seen.insert(c).second) throw ParseError("candidate " + std::to_string(c) + " listed twice", ln);
            r.push_back(c);
        }
        if (r.size() != candidates.size()) throw ParseError("ballot does not rank every candidate", ln);
        ballots.push_back({std::move(r), count});
    }
    if (!have_candidates) throw ParseError("missing 'candidates:' line", static_cast<int>(lines.size()));
    if (ballots.empty()) throw ParseError("no ballots", static_cast<int>(lines.size()));
    return Profile(std::move(candidates), std::move(ballots), std::move(labels));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Profile load_profile(const std::string& path) {
    auto text = read_file(path);
    if (trim(std::string_view(text).substr(0, text.find('\n'))) == kProfileHeader) return deserialize_profile(text);
    return parse_preflib(text);
}

void write_csv_header(std::ostream& out) { out << kCsvVersionLine << '\n' << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const SimRecord& r) {
    out << r.model << ',' << r.candidates << ',' << r.voters << ',' << r.trial << ',' << r.method << ','
        << r.winners.size() << ',';
    for (std::size_t i = 0; i < r.winners.size(); ++i) out << (i ? ";" : "") << r.winners[i];
    out << ',' << r.seed << '\n';
}

void write_csv(const std::vector<SimRecord>& records, std::ostream& out) {
    write_csv_header(out);
    for (const auto& r : records) write_csv_row(out, r);
    out.flush();
    if (!out) throw std::runtime_error("failed to write CSV output");
}

std::vector<SimRecord> read_csv(std::string_view text) {
    auto lines = lines_of(text);
    if (lines.size() < 2 || trim(lines[0]) != kCsvVersionLine || trim(lines[1]) != kCsvHeader)
        throw ParseError("expected CSV version line and header '" + std::string(kCsvHeader) + "'", 1);
    std::vector<SimRecord> out;
    for (int ln = 3; ln <= static_cast<int>(lines.size()); ++ln) {
        auto fields = split(trim(lines[ln - 1]), ',');
        if (fields.size() != 8) throw ParseError("expected 8 fields", ln);
        SimRecord r;
        r.model = std::string(fields[0]);
        r.candidates = parse_int<int>(fields[1], ln, "candidates");
        r.voters = parse_int<std::int64_t>(fields[2], ln, "voters");
        r.trial = parse_int<std::uint64_t>(fields[3], ln, "trial");
        r.method = std::string(fields[4]);
        auto count = parse_int<std::size_t>(fields[5], ln, "winner_count");
        for (auto t : split(fields[6], ';')) r.winners.push_back(parse_int<int>(t, ln, "a winner id"));
        if (r.winners.size() != count) throw ParseError("winner_count does not match winners", ln);
        r.seed = parse_int<std::uint64_t>(fields[7], ln, "seed");
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace splitcycle
