#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "splitcycle/criteria.hpp"
#include "splitcycle/errors.hpp"
#include "splitcycle/generators.hpp"
#include "splitcycle/io.hpp"
#include "splitcycle/methods.hpp"
#include "splitcycle/simulation.hpp"

using namespace splitcycle;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string method_catalog() {
    std::vector<std::string> names;
    for (Method m : all_methods()) names.emplace_back(method_name(m));
    return join(names);
}

std::string criterion_catalog() {
    std::vector<std::string> names;
    for (Criterion c : all_criteria()) names.emplace_back(criterion_name(c));
    return join(names);
}

std::vector<Method> parse_methods(const std::string& list) {
    if (list == "all") return all_methods();
    std::vector<Method> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto m = parse_method(item);
        if (!m) throw InputError("unknown method '" + item + "'; valid: " + method_catalog() + ", all");
        if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    }
    if (out.empty()) throw InputError("no methods given; valid: " + method_catalog() + ", all");
    return out;
}

Model parse_model_or_throw(const std::string& name) {
    auto m = parse_model(name);
    if (!m) throw InputError("unknown model '" + name + "'; valid: impartial_culture, mallows, mallows_two_ref, limit");
    return *m;
}

std::string names_of(const Profile& p, const std::vector<int>& ids) {
    std::vector<std::string> out;
    for (int id : ids) out.push_back(p.name(id));
    return "{" + join(out) + "}";
}

// ---------------------------------------------------------------------------
// winners

struct WinnersArgs {
    std::string input;
    std::string methods = "all";
    std::string format = "table";
    bool show_defeats = false;
};

int cmd_winners(const WinnersArgs& a) {
    const Profile p = load_profile(a.input);
    const auto methods = parse_methods(a.methods);
    const Margins m = margin_graph(p);
    const auto s = strength_matrix(m);

    struct Row {
        Method method;
        std::vector<int> winners;
        std::string note;
    };
    std::vector<Row> rows;
    for (Method meth : methods) {
        try {
            rows.push_back({meth, winners(meth, p), {}});
        } catch (const CapabilityError& e) {
            rows.push_back({meth, e.partial(), std::string("incomplete: ") + e.what()});
        }
    }

    if (a.format == "json") {
        nlohmann::json j;
        j["candidates"] = p.candidates();
        j["voters"] = p.num_voters();
        j["labels"] = nlohmann::json::object();
        for (int c : p.candidates()) j["labels"][std::to_string(c)] = p.name(c);
        for (const auto& r : rows) {
            nlohmann::json entry{{"winners", r.winners}};
            if (!r.note.empty()) entry["note"] = r.note;
            j["methods"][std::string(method_name(r.method))] = entry;
        }
        if (a.show_defeats) {
            j["edges"] = nlohmann::json::array();
            for (int i = 0; i < m.size(); ++i)
                for (int k = 0; k < m.size(); ++k)
                    if (m(i, k) > 0)
                        j["edges"].push_back({{"from", m.id(i)}, {"to", m.id(k)}, {"margin", m(i, k)},
                                              {"reverse_strength", s(k, i)}, {"defeat", m(i, k) > s(k, i)}});
        }
        std::cout << j.dump(2) << '\n';
        return kOk;
    }

    std::cout << "candidates: " << names_of(p, p.candidates()) << "  voters: " << p.num_voters() << '\n';
    for (const auto& r : rows) {
        std::cout << std::left << std::setw(20) << method_name(r.method) << names_of(p, r.winners);
        if (!r.note.empty()) std::cout << "  (" << r.note << ")";
        std::cout << '\n';
    }
    if (a.show_defeats) {
        std::cout << "\nmajority edges (split_cycle):\n";
        for (int i = 0; i < m.size(); ++i)
            for (int k = 0; k < m.size(); ++k)
                if (m(i, k) > 0) {
                    std::cout << "  " << p.name(m.id(i)) << " -> " << p.name(m.id(k)) << "  margin " << m(i, k);
                    if (m(i, k) > s(k, i))
                        std::cout << "  defeat\n";
                    else
                        std::cout << "  discarded (cycle with splitting number " << s(k, i) << ")\n";
                }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
    std::string criterion;
    std::string method = "split_cycle";
    std::string input;
    std::vector<std::string> search;
    bool emit_witness = false;
    double dispersion = 0.8;
};

int cmd_check(const CheckArgs& a) {
    auto crit = parse_criterion(a.criterion);
    if (!crit) throw InputError("unknown criterion '" + a.criterion + "'; valid: " + criterion_catalog());
    auto meth = parse_method(a.method);
    if (!meth) throw InputError("unknown method '" + a.method + "'; valid: " + method_catalog());
    if (a.input.empty() == a.search.empty()) throw InputError("give exactly one of --input or --search");

    std::optional<Witness> first;
    std::uint64_t checked = 0, found = 0;
    if (!a.input.empty()) {
        Philox rng(0, 0, 0);
        first = check_profile(*crit, *meth, load_profile(a.input), rng);
        checked = 1;
        found = first ? 1 : 0;
    } else {
        if (a.search.size() != 5) throw InputError("--search takes MODEL K N TRIALS SEED");
        GeneratorConfig cfg;
        cfg.model = parse_model_or_throw(a.search[0]);
        if (cfg.model == Model::limit) throw InputError("criterion search needs a ballot model");
        auto num = [](const std::string& s, const char* what) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(s, &used);
                if (used != s.size() || v < 0) throw std::invalid_argument(s);
                return v;
            } catch (const std::logic_error&) {
                throw InputError(std::string("bad ") + what + " '" + s + "'");
            }
        };
        cfg.candidates = static_cast<int>(num(a.search[1], "candidate count"));
        cfg.voters = num(a.search[2], "voter count");
        const auto trials = static_cast<std::uint64_t>(num(a.search[3], "trial count"));
        cfg.seed = static_cast<std::uint64_t>(num(a.search[4], "seed"));
        cfg.dispersion = a.dispersion;
        cfg.validate();
        for (std::uint64_t t = 0; t < trials; ++t) {
            Philox rng(cfg.seed, t, 1u << 31);
            auto w = check_profile(*crit, *meth, generate(cfg, t), rng);
            ++checked;
            if (w) {
                ++found;
                if (!first) first = std::move(w);
            }
        }
    }

    std::cout << criterion_name(*crit) << " / " << method_name(*meth) << ": " << found << " violation(s) in "
              << checked << " profile(s)\n";
    if (first) {
        const auto& p = first->profiles.front();
        std::cout << "first witness: candidates " << names_of(p, first->candidates);
        if (!first->detail.empty()) std::cout << ", " << first->detail;
        std::cout << '\n';
        for (std::size_t i = 0; i < first->profiles.size(); ++i)
            std::cout << "  profile " << i << " (" << first->profiles[i].num_voters()
                      << " voters) winners " << names_of(first->profiles[i], first->outputs[i]) << '\n';
        if (a.emit_witness) std::cout << witness_json(*first) << '\n';
    }
    return found ? kViolation : kOk;
}

// ---------------------------------------------------------------------------
// simulate and limit-sim

struct SimArgs {
    std::string model = "impartial_culture";
    int candidates = 0;
    std::int64_t voters = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string methods = "split_cycle,beat_path,getcha";
    std::string out;
    int threads = 1;
    double dispersion = 0.8;
    bool ranked_pairs_large = false;
    std::int64_t rp_node_budget = 1'000'000;
};

std::vector<Method> simulation_methods(const SimArgs& a, bool limit) {
    auto methods = parse_methods(a.methods);
    const bool all = a.methods == "all";
    std::vector<Method> kept;
    for (Method m : methods) {
        if (all && limit && !margin_based(m)) continue;
        if (m == Method::ranked_pairs && a.candidates > 7 && !a.ranked_pairs_large) {
            if (all) continue;
            throw InputError("ranked_pairs is off above 7 candidates; pass --ranked-pairs-large to run it");
        }
        kept.push_back(m);
    }
    return kept;
}

void emit(const std::vector<SimRecord>& records, const std::string& out, bool summary) {
    if (out.empty() || out == "-") {
        write_csv(records, std::cout);
    } else {
        std::ofstream f(out);
        if (!f) throw InputError("cannot write " + out);
        write_csv(records, f);
    }
    if (!summary) return;
    std::ostream& log = (out.empty() || out == "-") ? std::cerr : std::cout;
    log << std::left << std::setw(20) << "method" << std::setw(12) << "mean size" << "multiple winners\n";
    for (const auto& [name, s] : summarize(records))
        log << std::setw(20) << name << std::setw(12) << std::fixed << std::setprecision(4) << s.mean_size
            << std::setprecision(2) << 100.0 * s.multiple_rate << "%\n";
}

int cmd_simulate(const SimArgs& a) {
    GeneratorConfig cfg;
    cfg.model = parse_model_or_throw(a.model);
    cfg.candidates = a.candidates;
    cfg.voters = cfg.model == Model::limit ? std::max<std::int64_t>(a.voters, 1) : a.voters;
    cfg.dispersion = a.dispersion;
    cfg.seed = a.seed;
    cfg.validate();
    Options opt;
    opt.rp_node_budget = a.rp_node_budget;
    auto records = run_simulation(cfg, a.trials, simulation_methods(a, cfg.model == Model::limit), a.threads, opt);
    emit(records, a.out, true);
    return kOk;
}

int cmd_limit(SimArgs a) {
    a.model = "limit";
    a.voters = 1;
    return cmd_simulate(a);
}

void add_sim_flags(CLI::App* cmd, SimArgs& a, bool limit) {
    cmd->add_option("--candidates", a.candidates, "number of candidates")->required()->check(CLI::Range(1, 64));
    cmd->add_option("--trials", a.trials, "number of sampled profiles")->required();
    cmd->add_option("--seed", a.seed, "random seed");
    cmd->add_option("--methods", a.methods, "comma-separated method names or 'all'");
    cmd->add_option("--out", a.out, "CSV path (standard output when omitted)");
    cmd->add_option("--threads", a.threads, "worker threads")->check(CLI::Range(1, 1024));
    cmd->add_flag("--ranked-pairs-large", a.ranked_pairs_large, "run ranked_pairs above 7 candidates");
    cmd->add_option("--rp-node-budget", a.rp_node_budget, "ranked_pairs search node budget");
    if (!limit) {
        cmd->add_option("--model", a.model, "impartial_culture | mallows | mallows_two_ref | limit");
        cmd->add_option("--voters", a.voters, "number of voters");
        cmd->add_option("--dispersion", a.dispersion, "Mallows dispersion in (0, 1]");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split Cycle and rival voting methods: winners, criterion checks and simulations"};
    app.require_subcommand(1);

    WinnersArgs wa;
    auto* win = app.add_subcommand("winners", "winner sets for a profile file");
    win->add_option("--input", wa.input, "preflib .soc or canonical profile file")->required();
    win->add_option("--methods", wa.methods, "comma-separated method names or 'all'");
    win->add_option("--format", wa.format, "table | json")->check(CLI::IsMember({"table", "json"}));
    win->add_flag("--show-defeats", wa.show_defeats, "list majority edges with Split Cycle defeat status");

    CheckArgs ca;
    auto* chk = app.add_subcommand("check", "look for criterion violations");
    chk->add_option("--criterion", ca.criterion, "criterion name")->required();
    chk->add_option("--method", ca.method, "method name");
    chk->add_option("--input", ca.input, "profile file");
    chk->add_option("--search", ca.search, "MODEL K N TRIALS SEED")->expected(5);
    chk->add_option("--dispersion", ca.dispersion, "Mallows dispersion for --search");
    chk->add_flag("--emit-witness", ca.emit_witness, "print the first witness as JSON");

    SimArgs sa;
    auto* sim = app.add_subcommand("simulate", "sample profiles and record winner sets as CSV");
    add_sim_flags(sim, sa, false);

    SimArgs la;
    la.methods = "split_cycle,copeland,uncovered,getcha";
    auto* lim = app.add_subcommand("limit-sim", "sample limit margin graphs (many voters) and record winner sets");
    add_sim_flags(lim, la, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*win) return cmd_winners(wa);
        if (*chk) return cmd_check(ca);
        if (*sim) return cmd_simulate(sa);
        if (*lim) return cmd_limit(la);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
