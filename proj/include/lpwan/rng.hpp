#ifndef LPWAN_RNG_HPP_
#define LPWAN_RNG_HPP_

#include <cstdint>
#include <random>

namespace lpwan {

/// SplitMix64 mixing step, used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for the stream identified by (master_seed, rep_index, stream_id).
/// Streams are independent of scheduling order, so parallel replication
/// dispatch cannot change results.
inline std::uint64_t derive_seed(std::uint64_t master_seed,
                                 std::uint64_t rep_index,
                                 std::uint64_t stream_id) {
    std::uint64_t s = splitmix64(master_seed);
    s = splitmix64(s ^ rep_index);
    s = splitmix64(s ^ stream_id);
    return s;
}

inline std::mt19937_64 make_engine(std::uint64_t master_seed,
                                   std::uint64_t rep_index,
                                   std::uint64_t stream_id) {
    return std::mt19937_64(derive_seed(master_seed, rep_index, stream_id));
}

/// Uniform double in [0,1) from the top 53 bits.
inline double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in {0, ..., n-1}, n >= 1.
inline std::uint32_t uniform_below(std::mt19937_64& rng, std::uint32_t n) {
    std::uniform_int_distribution<std::uint32_t> dist(0, n - 1);
    return dist(rng);
}

}  // namespace lpwan

#endif  // LPWAN_RNG_HPP_
