#ifndef HSW_RNG_HPP
#define HSW_RNG_HPP

#include <cstdint>
#include <random>

namespace hsw {

// splitmix64 step; good enough to decorrelate counter-derived seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream per (master seed, stream index); trials seeded this
// way give the same numbers no matter which thread runs them.
inline std::mt19937_64 stream_rng(std::uint64_t master_seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(master_seed ^ splitmix64(stream)));
}

} // namespace hsw

#endif
