#pragma once

#include <array>
#include <cstdint>

namespace splitcycle {

// Philox4x32-10 counter-based generator. The key is the seed; the 128-bit counter is
// (block, stream, trial low, trial high), so each (trial, stream) pair owns an
// independent sequence and parallel generation is reproducible.
class Philox {
public:
    using Block = std::array<std::uint32_t, 4>;

    Philox(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream = 0);

    static Block block(Block counter, std::array<std::uint32_t, 2> key);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    // Uniform on [0, 1) with 53 random bits.
    double uniform();
    // Uniform integer in [0, n), n > 0, by rejection.
    std::uint64_t below(std::uint64_t n);
    // Standard normal (Box-Muller).
    double normal();

private:
    std::array<std::uint32_t, 2> key_;
    Block counter_;
    Block out_{};
    int used_ = 4;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace splitcycle
