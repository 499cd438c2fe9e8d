#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace gm {

/// xoshiro256** seeded through splitmix64.
///
/// The algorithm is pinned so generated instances are identical across
/// compilers and standard libraries; std distributions are avoided for the
/// same reason. Satisfies UniformRandomBitGenerator.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    result_type operator()() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept;
    /// Uniform integer in [0, bound), unbiased.
    std::uint64_t below(std::uint64_t bound) noexcept;
    /// Uniformly random permutation of [0, n) by Fisher-Yates.
    std::vector<std::int64_t> permutation(std::int64_t n);

private:
    std::array<std::uint64_t, 4> s_;
};

/// Derives an independent stream seed from a base seed and a stream index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

} // namespace gm
