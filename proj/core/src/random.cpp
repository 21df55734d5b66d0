#include "spinorss/random.hpp"

namespace spinorss {

BigRational random_rational(SplitMix64& rng, bool nonzero) {
    long p = long(rng.range(19)) - 9;
    if (nonzero && p == 0) p = 1 + long(rng.range(9));
    const long q = 1 + long(rng.range(3));
    return BigRational(p, q);
}

GaussianRational random_scalar(SplitMix64& rng, bool real, bool nonzero) {
    if (real) return GaussianRational(random_rational(rng, nonzero));
    const BigRational re = random_rational(rng, false);
    BigRational im = random_rational(rng, false);
    if (nonzero && re.is_zero() && im.is_zero()) im = BigRational(1 + long(rng.range(9)));
    return {re, im};
}

std::map<SymbolId, GaussianRational> random_point(const SymbolTable& table,
                                                  const std::set<SymbolId>& nonzero,
                                                  SplitMix64& rng) {
    std::map<SymbolId, GaussianRational> point;
    for (SymbolId id : table.primary_symbols()) {
        const SymbolInfo inf = table.info(id);
        const bool must = nonzero.count(id) > 0 || nonzero.count(inf.conjugate) > 0;
        point[id] = random_scalar(rng, inf.kind == SymbolKind::real_valued, must);
    }
    return point;
}

} // namespace spinorss
