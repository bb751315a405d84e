#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace stratitr {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Hashes a root seed and a sequence of tags (replication index, DGP index,
/// sample size, ...) into a stream key. Distinct tag sequences give
/// statistically independent streams.
constexpr std::uint64_t derive_key(std::uint64_t root, std::initializer_list<std::uint64_t> tags) {
    std::uint64_t h = mix64(root + kGoldenGamma);
    for (std::uint64_t tag : tags) h = mix64(h ^ mix64(tag + 0x632be59bd9b4e019ULL));
    return h;
}

/// Counter-based generator: the k-th output is mix64(key + (k + 1) * gamma),
/// so any position of a stream can be produced without generating the prefix.
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
   public:
    using result_type = std::uint64_t;

    explicit constexpr CounterRng(std::uint64_t key, std::uint64_t counter = 0)
        : key_(key), counter_(counter) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() { return at(key_, counter_++); }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    constexpr std::uint64_t key() const { return key_; }
    constexpr std::uint64_t counter() const { return counter_; }

    static constexpr result_type at(std::uint64_t key, std::uint64_t k) {
        return mix64(key + (k + 1) * kGoldenGamma);
    }

   private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace stratitr
