#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "splitcycle/profile.hpp"

namespace splitcycle {

// Strict complete orders in the preflib text layout: '#' metadata lines, then
// "count: c1,c2,...,ck" with 1-based alternative numbers. Candidate j becomes id j-1
// and takes its label from "# ALTERNATIVE NAME j: ..." when present.
// Ties ("{...}") and incomplete ballots raise ParseError naming the line.
Profile parse_preflib(std::string_view text);

// Canonical loss-free text form:
//   # splitcycle profile v1
//   candidates: 0,1,2
//   label 1: Gore
//   3: 0,2,1
// Ballot lines follow the profile's sorted order, so equal profiles serialize identically.
std::string serialize_profile(const Profile& p);
Profile deserialize_profile(std::string_view text);

std::string read_file(const std::string& path);
// Canonical form if the text starts with the canonical header, preflib otherwise.
Profile load_profile(const std::string& path);

struct SimRecord {
    std::string model;
    int candidates = 0;
    std::int64_t voters = 0;
    std::uint64_t trial = 0;
    std::string method;
    std::vector<int> winners;
    std::uint64_t seed = 0;
};

inline constexpr std::string_view kCsvVersionLine = "# splitcycle-sim-csv v1";
inline constexpr std::string_view kCsvHeader = "model,candidates,voters,trial,method,winner_count,winners,seed";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SimRecord& r);
// Version comment, header row, then one row per record. Throws std::runtime_error if the stream fails.
void write_csv(const std::vector<SimRecord>& records, std::ostream& out);
std::vector<SimRecord> read_csv(std::string_view text);

}  // namespace splitcycle
