#include "splitcycle/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "splitcycle/errors.hpp"

namespace splitcycle {

std::vector<SimRecord> run_simulation(const GeneratorConfig& cfg, std::uint64_t trials,
                                      const std::vector<Method>& methods, int threads, const Options& opt) {
    cfg.validate();
    const bool limit = cfg.model == Model::limit;
    if (limit)
        for (Method m : methods)
            if (!margin_based(m))
                throw CapabilityError(std::string(method_name(m)) + " needs ballots and cannot run on limit margin graphs");

    std::vector<std::vector<SimRecord>> per_trial(trials);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        while (true) {
            const std::uint64_t t = next.fetch_add(1);
            if (t >= trials) return;
            try {
                auto& out = per_trial[t];
                SimRecord base;
                base.model = std::string(model_name(cfg.model));
                base.candidates = cfg.candidates;
                base.voters = limit ? 0 : cfg.voters;
                base.trial = t;
                base.seed = cfg.seed;
                if (limit) {
                    const auto g = limit_sampler(cfg.candidates).sample(cfg.seed, t);
                    for (Method m : methods) {
                        out.push_back(base);
                        out.back().method = std::string(method_name(m));
                        out.back().winners = winners(m, g, opt);
                    }
                } else {
                    const Profile p = generate(cfg, t);
                    const Margins g = margin_graph(p);
                    for (Method m : methods) {
                        out.push_back(base);
                        out.back().method = std::string(method_name(m));
                        out.back().winners = margin_based(m) ? winners(m, g, opt) : winners(m, p, opt);
                    }
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = trials;
                return;
            }
        }
    };

    const int n = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(trials, 1024))));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<SimRecord> records;
    records.reserve(trials * methods.size());
    for (auto& rows : per_trial)
        for (auto& r : rows) records.push_back(std::move(r));
    return records;
}

std::map<std::string, SizeSummary> summarize(const std::vector<SimRecord>& records) {
    std::map<std::string, SizeSummary> out;
    for (const auto& r : records) {
        auto& s = out[r.method];
        ++s.trials;
        s.mean_size += static_cast<double>(r.winners.size());
        s.multiple_rate += r.winners.size() > 1 ? 1.0 : 0.0;
    }
    for (auto& [name, s] : out) {
        s.mean_size /= static_cast<double>(s.trials);
        s.multiple_rate /= static_cast<double>(s.trials);
    }
    return out;
}

}  // namespace splitcycle
