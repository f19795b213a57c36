#ifndef EVORL_RNG_HPP
#define EVORL_RNG_HPP

#include <cstdint>
#include <random>

namespace evorl {

/// splitmix64 finalizer; used to decorrelate derived seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic per-entity seed from a master seed and an entity id.
/// Individuals own generators seeded this way, which makes their
/// train/evaluate pipelines independent of scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t entity_id) {
    return mix64(mix64(master_seed) ^ mix64(entity_id));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace evorl

#endif  // EVORL_RNG_HPP
