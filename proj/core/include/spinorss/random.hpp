#pragma once

#include <cstdint>
#include <map>

#include "spinorss/gaussian_rational.hpp"
#include "spinorss/symbol_table.hpp"

namespace spinorss {

/// SplitMix64: tiny, platform-independent deterministic generator.
/// Used for witness search and instantiation oracles so golden files and
/// test expectations are reproducible everywhere.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t range(std::uint64_t n) { return next() % n; }
};

/// Small exact rational p/q, p in [-9,9], q in [1,3]; nonzero on request.
BigRational random_rational(SplitMix64& rng, bool nonzero);

/// Random Gaussian rational; real symbols get a real value, complex ones
/// a generic complex value. `nonzero` guarantees a nonzero result.
GaussianRational random_scalar(SplitMix64& rng, bool real, bool nonzero);

/// Deterministic instantiation of every primary symbol of a table;
/// symbols listed in `nonzero` are guaranteed nonzero values.
std::map<SymbolId, GaussianRational> random_point(const SymbolTable& table,
                                                  const std::set<SymbolId>& nonzero,
                                                  SplitMix64& rng);

} // namespace spinorss
