#include "spinorss/conditions.hpp"

#include <algorithm>
#include <sstream>

#include "spinorss/errors.hpp"
#include "spinorss/random.hpp"

namespace spinorss {

const char* to_string(ConditionName n) {
    switch (n) {
        case ConditionName::weyl_full_4: return "weyl-full";
        case ConditionName::weyl_contracted_6: return "weyl-contracted";
        case ConditionName::mixed_5: return "mixed";
        case ConditionName::ricci_full_7: return "ricci-full";
        case ConditionName::ricci_full_8: return "ricci-full-primed";
        case ConditionName::ricci_s1_9: return "ricci-s1";
        case ConditionName::ricci_s2_10: return "ricci-s2";
    }
    return "?";
}

namespace {

ConditionResidual make_residual(ConditionName name, GeneralSpinor s,
                                const std::vector<std::vector<std::size_t>>& groups) {
    ConditionResidual out;
    out.name = name;
    out.spinor = std::move(s);
    for (std::size_t f : independent_component_indices(out.spinor.slot_count(), groups))
        out.components.push_back(out.spinor.at(f));
    out.vanishes = std::all_of(out.components.begin(), out.components.end(),
                               [](const Polynomial& p) { return p.is_zero(); });
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Spinor-level builders

GeneralSpinor weyl_full_spinor(const GeneralSpinor& x, const GeneralSpinor& psi) {
    GeneralSpinor t = GeneralSpinor::outer(x.raise(3), psi); // [A,B,C,G^,D,E,F,G]
    t = t.contract(3, 7);                                    // [A,B,C,D,E,F]
    return t.symmetrize({2, 3, 4, 5});
}

GeneralSpinor weyl_contracted_spinor(const GeneralSpinor& psi, const Polynomial& lambda) {
    GeneralSpinor p = psi.raise(0).raise(1);                // [G^,H^,A,D]
    GeneralSpinor t = GeneralSpinor::outer(p, psi);         // [G^,H^,A,D,E,F,G,H]
    t = t.contract(0, 6);                                   // [H^,A,D,E,F,H]
    t = t.contract(0, 5);                                   // [A,D,E,F]
    t = t.symmetrize({0, 1, 2, 3});
    return t - psi.scaled(lambda.scaled(GaussianRational(2)));
}

GeneralSpinor mixed_spinor(const GeneralSpinor& phi, const GeneralSpinor& psi) {
    GeneralSpinor p = phi.permute_slots({2, 3, 0, 1}).raise(3); // [A',B',C,G^]
    GeneralSpinor t = GeneralSpinor::outer(p, psi);             // [A',B',C,G^,D,E,F,G]
    t = t.contract(3, 7);                                       // [A',B',C,D,E,F]
    t = t.symmetrize({2, 3, 4, 5});
    return t.permute_slots({2, 3, 4, 5, 0, 1}); // [C,D,E,F,A',B']
}

GeneralSpinor ricci_full_spinor(const GeneralSpinor& x, const GeneralSpinor& phi) {
    GeneralSpinor t1 = GeneralSpinor::outer(x.raise(3), phi); // [A,B,C,E^,D,E,C',D']
    t1 = t1.contract(3, 5);                                   // [A,B,C,D,C',D']
    t1 = t1.symmetrize({2, 3}).scaled(GaussianRational(-2));

    GeneralSpinor t2 = GeneralSpinor::outer(phi.raise(3), phi); // [A,B,C',E'^,C,D,D',E']
    t2 = t2.contract(3, 7);                                     // [A,B,C',C,D,D']
    t2 = t2.permute_slots({0, 1, 3, 4, 2, 5});                  // [A,B,C,D,C',D']
    t2 = t2.symmetrize({4, 5}).scaled(GaussianRational(-2));
    return t1 + t2;
}

GeneralSpinor ricci_full_primed_spinor(const GeneralSpinor& xbar, const GeneralSpinor& phi) {
    GeneralSpinor t1 = GeneralSpinor::outer(xbar.raise(3), phi); // [A',B',C',E'^,C,D,D',E']
    t1 = t1.contract(3, 7);                                      // [A',B',C',C,D,D']
    t1 = t1.permute_slots({3, 4, 0, 1, 2, 5});                   // [C,D,A',B',C',D']
    t1 = t1.symmetrize({4, 5}).scaled(GaussianRational(-2));

    GeneralSpinor t2 =
        GeneralSpinor::outer(phi.permute_slots({2, 3, 0, 1}).raise(3), phi); // [A',B',C,E^,D,E,C',D']
    t2 = t2.contract(3, 5);                                                  // [A',B',C,D,C',D']
    t2 = t2.permute_slots({2, 3, 0, 1, 4, 5});                               // [C,D,A',B',C',D']
    t2 = t2.symmetrize({0, 1}).scaled(GaussianRational(-2));
    return t1 + t2;
}

GeneralSpinor ricci_s1_spinor(const GeneralSpinor& psi4, const GeneralSpinor& phi) {
    GeneralSpinor t = GeneralSpinor::outer(psi4.raise(3), phi); // [A,B,C,E^,D,E,C',D']
    t = t.contract(3, 5);                                       // [A,B,C,D,C',D']
    return t.symmetrize({0, 1, 2, 3});
}

GeneralSpinor ricci_s2_spinor(const GeneralSpinor& psi4, const GeneralSpinor& phi,
                              const Polynomial& lambda) {
    GeneralSpinor t1 = phi.scaled(lambda.scaled(GaussianRational(4)));

    GeneralSpinor t2 = GeneralSpinor::outer(psi4.raise(0).raise(1), phi); // [E^,F^,A,C,E,F,C',D']
    t2 = t2.contract(0, 4);                                               // [F^,A,C,F,C',D']
    t2 = t2.contract(0, 3);                                               // [A,C,C',D']
    t2 = t2.scaled(GaussianRational(-1));

    GeneralSpinor t3 = GeneralSpinor::outer(phi.raise(0).raise(2), phi); // [E^,A,F'^,C',C,E,D',F']
    t3 = t3.contract(0, 5);                                              // [A,F'^,C',C,D',F']
    t3 = t3.contract(1, 5);                                              // [A,C',C,D']
    t3 = t3.permute_slots({0, 2, 1, 3});                                 // [A,C,C',D']
    t3 = t3.symmetrize({2, 3}).scaled(GaussianRational(-2));

    // The printed right-hand side is already symmetric in (A,C); the
    // symmetrization matches the operator side and is idempotent here.
    return (t1 + t2 + t3).symmetrize({0, 1});
}

// ---------------------------------------------------------------------------
// Named residuals

ConditionResidual cond_weyl_full(const CurvatureSet& c) {
    return make_residual(ConditionName::weyl_full_4,
                         weyl_full_spinor(build_X(c), c.weyl.expand()),
                         {{0, 1}, {2, 3, 4, 5}});
}

ConditionResidual cond_weyl_contracted(const CurvatureSet& c) {
    return make_residual(ConditionName::weyl_contracted_6,
                         weyl_contracted_spinor(c.weyl.expand(), c.scalar.lambda),
                         {{0, 1, 2, 3}});
}

ConditionResidual cond_mixed(const CurvatureSet& c) {
    return make_residual(ConditionName::mixed_5,
                         mixed_spinor(c.ricci.expand(), c.weyl.expand()),
                         {{0, 1, 2, 3}, {4, 5}});
}

ConditionResidual cond_ricci_full(const CurvatureSet& c) {
    return make_residual(ConditionName::ricci_full_7,
                         ricci_full_spinor(build_X(c), c.ricci.expand()),
                         {{0, 1}, {2, 3}, {4, 5}});
}

ConditionResidual cond_ricci_full_primed(const CurvatureSet& c) {
    return make_residual(ConditionName::ricci_full_8,
                         ricci_full_primed_spinor(build_X(c).conj(), c.ricci.expand()),
                         {{0, 1}, {2, 3}, {4, 5}});
}

ConditionResidual cond_ricci_S1(const CurvatureSet& c) {
    return make_residual(ConditionName::ricci_s1_9,
                         ricci_s1_spinor(c.weyl.expand(), c.ricci.expand()),
                         {{0, 1, 2, 3}, {4, 5}});
}

ConditionResidual cond_ricci_S2(const CurvatureSet& c) {
    return make_residual(ConditionName::ricci_s2_10,
                         ricci_s2_spinor(c.weyl.expand(), c.ricci.expand(), c.scalar.lambda),
                         {{0, 1}, {2, 3}});
}

GeneralSpinor weyl_full_bc_contraction(const CurvatureSet& c) {
    const GeneralSpinor e4 = weyl_full_spinor(build_X(c), c.weyl.expand());
    return e4.raise(1).contract(1, 2); // [A,D,E,F]
}

std::optional<GaussianRational> proportionality_factor(const GeneralSpinor& a,
                                                       const GeneralSpinor& b) {
    if (a.slots() != b.slots()) return std::nullopt;
    if (b.is_zero()) return a.is_zero() ? std::optional<GaussianRational>(GaussianRational(0))
                                        : std::nullopt;
    GaussianRational q;
    for (std::size_t f = 0; f < b.component_count(); ++f) {
        if (b.at(f).is_zero()) continue;
        const Monomial lead = std::prev(b.at(f).terms().end())->first;
        q = a.at(f).coefficient(lead) / b.at(f).coefficient(lead);
        break;
    }
    for (std::size_t f = 0; f < b.component_count(); ++f)
        if (a.at(f) != b.at(f).scaled(q)) return std::nullopt;
    return q;
}

GeneralSpinor ricci_full_trace(const CurvatureSet& c) {
    GeneralSpinor w = ricci_full_spinor(build_X(c), c.ricci.expand());
    w = w.raise(0).raise(1); // [A^,B^,C,D,C',D']
    w = w.contract(0, 2);    // [B^,D,C',D']
    return w.contract(0, 1); // [C',D']
}

// ---------------------------------------------------------------------------
// Rank reports

RankReport verify_reduction_4_to_6(const CurvatureSet& c) {
    const ConditionResidual e4 = cond_weyl_full(c);
    const ConditionResidual e6 = cond_weyl_contracted(c);
    RankReport r;
    r.count_a = int(e4.components.size());
    r.count_b = int(e6.components.size());
    r.rank_a = coefficient_rank(e4.components);
    r.rank_b = coefficient_rank(e6.components);
    std::vector<Polynomial> both = e4.components;
    both.insert(both.end(), e6.components.begin(), e6.components.end());
    r.rank_union = coefficient_rank(both);
    r.pass = r.rank_a == 5 && r.rank_b == 5 && r.rank_union == 5;
    return r;
}

RankReport verify_decomposition_7_to_9_10(const CurvatureSet& c) {
    const ConditionResidual e7 = cond_ricci_full(c);
    const ConditionResidual s1 = cond_ricci_S1(c);
    const ConditionResidual s2 = cond_ricci_S2(c);
    RankReport r;
    r.count_a = int(e7.components.size());
    r.count_b = int(s1.components.size() + s2.components.size());
    r.rank_a = coefficient_rank(e7.components);
    std::vector<Polynomial> repl = s1.components;
    repl.insert(repl.end(), s2.components.begin(), s2.components.end());
    r.rank_b = coefficient_rank(repl);
    std::vector<Polynomial> both = e7.components;
    both.insert(both.end(), repl.begin(), repl.end());
    r.rank_union = coefficient_rank(both);
    r.trace_zero = ricci_full_trace(c).is_zero();
    r.pass = r.rank_a == r.rank_b && r.rank_b == r.rank_union && r.trace_zero;
    return r;
}

// ---------------------------------------------------------------------------
// Verdicts

std::string Witness::to_text(const SymbolTable& table) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, v] : values) {
        if (!first) os << ", ";
        os << table.name(id) << " = " << v.str();
        first = false;
    }
    return os.str();
}

namespace {

std::set<SymbolId> nonzero_closure(const Assumptions& a, const Polynomial::Table& table) {
    std::set<SymbolId> out = a.nonzero;
    if (table)
        for (SymbolId id : a.nonzero) out.insert(table->conjugate_of(id));
    return out;
}

Polynomial::Table table_of(const std::vector<Polynomial>& polys) {
    for (const auto& p : polys)
        if (p.table()) return p.table();
    return nullptr;
}

} // namespace

std::vector<Polynomial> normalize_generators(const std::vector<Polynomial>& components,
                                             const Assumptions& assumptions) {
    const Polynomial::Table table = table_of(components);
    const std::set<SymbolId> nz = nonzero_closure(assumptions, table);
    std::map<std::string, Polynomial> dedup;
    for (const auto& comp : components) {
        if (comp.is_zero()) continue;
        const Monomial mc = comp.monomial_content();
        Monomial assumed_part;
        for (const auto& [s, e] : mc.factors())
            if (nz.count(s)) assumed_part = assumed_part * Monomial::symbol(s, e);
        const Polynomial p = comp.divided_by(assumed_part).normalized();
        dedup.emplace(p.str(), p);
    }
    std::vector<Polynomial> out;
    out.reserve(dedup.size());
    for (auto& [k, p] : dedup) out.push_back(p);
    return out;
}

namespace {

bool group_satisfied(const std::set<SymbolId>& group,
                     const std::map<SymbolId, GaussianRational>& point,
                     const Polynomial::Table& table) {
    for (SymbolId s : group) {
        auto it = point.find(s);
        if (it == point.end() && table) it = point.find(table->conjugate_of(s));
        if (it != point.end() && !it->second.is_zero()) return true;
    }
    return false;
}

bool point_admissible(const std::map<SymbolId, GaussianRational>& point,
                      const Assumptions& assumptions, const Polynomial::Table& table) {
    for (SymbolId s : assumptions.nonzero) {
        auto it = point.find(s);
        if (it == point.end() && table) it = point.find(table->conjugate_of(s));
        if (it == point.end() || it->second.is_zero()) return false;
    }
    for (const auto& g : assumptions.not_all_zero)
        if (!group_satisfied(g, point, table)) return false;
    return true;
}

std::optional<Witness> find_failure_witness(const std::vector<Polynomial>& components,
                                            const Assumptions& assumptions,
                                            const Polynomial::Table& table) {
    if (!table) {
        // constant residuals: any nonzero component is its own witness
        for (const auto& c : components)
            if (!c.is_zero()) return Witness{};
        return std::nullopt;
    }
    std::set<SymbolId> all;
    for (SymbolId id : table->primary_symbols()) all.insert(id);
    for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
        SplitMix64 rng(0x5eed5a1700ull + attempt);
        auto point = random_point(*table, all, rng); // generic: everything nonzero
        if (!point_admissible(point, assumptions, table)) continue;
        for (const auto& comp : components) {
            if (comp.is_zero()) continue;
            if (!comp.evaluate(point).is_zero()) return Witness{point};
        }
    }
    return std::nullopt;
}

// Deterministic nonzero values for the assumed symbols, zero elsewhere.
std::map<SymbolId, GaussianRational> zero_candidate(const Polynomial::Table& table,
                                                    const std::set<SymbolId>& nz) {
    std::map<SymbolId, GaussianRational> point;
    SplitMix64 rng(0xad0015c4ull);
    for (SymbolId id : table->primary_symbols()) {
        const SymbolInfo inf = table->info(id);
        const bool keep = nz.count(id) || nz.count(inf.conjugate);
        point[id] = keep ? random_scalar(rng, inf.kind == SymbolKind::real_valued, true)
                         : GaussianRational();
    }
    return point;
}

bool gens_vanish_at(const std::vector<Polynomial>& gens,
                    const std::map<SymbolId, GaussianRational>& point) {
    for (const auto& g : gens)
        if (!g.evaluate(point).is_zero()) return false;
    return true;
}

/// Looks for an admissible rational point of the constraint surface
/// {all generators = 0}. Complete for the families in this engine:
/// a zero candidate plus an affine-linear solve over real symbols.
bool admissible_point_exists(const std::vector<Polynomial>& gens, const Assumptions& assumptions,
                             const Polynomial::Table& table) {
    if (!table) return false;
    const std::set<SymbolId> nz = nonzero_closure(assumptions, table);

    const auto candidate = zero_candidate(table, nz);
    if (point_admissible(candidate, assumptions, table) && gens_vanish_at(gens, candidate))
        return true;

    // Affine solve: every generator symbol real, unknowns the non-assumed ones.
    std::set<SymbolId> unknowns;
    for (const auto& g : gens)
        for (SymbolId s : g.symbols()) {
            if (!table->is_real(s)) return false;
            if (!nz.count(s)) unknowns.insert(s);
        }
    if (unknowns.empty()) return false;
    std::vector<SymbolId> cols(unknowns.begin(), unknowns.end());
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
        SplitMix64 rng(0xa11ce5ull + trial * 977);
        std::map<SymbolId, GaussianRational> fixed;
        for (SymbolId id : table->primary_symbols())
            if (!unknowns.count(id)) {
                const SymbolInfo inf = table->info(id);
                const bool keep = nz.count(id) || nz.count(inf.conjugate);
                fixed[id] = keep ? random_scalar(rng, inf.kind == SymbolKind::real_valued, true)
                                 : GaussianRational();
            }
        // substitute fixed values, require affine-linear in the unknowns
        QMatrix aug;
        bool linear = true;
        for (const auto& g : gens) {
            QVector row(cols.size() + 1);
            for (const auto& [mono, coeff] : g.terms()) {
                GaussianRational value = coeff;
                int unknown_slot = -1;
                unsigned unknown_exp = 0;
                for (const auto& [s, e] : mono.factors()) {
                    if (unknowns.count(s)) {
                        unknown_slot = int(std::find(cols.begin(), cols.end(), s) - cols.begin());
                        unknown_exp += e;
                    } else {
                        auto it = fixed.find(s);
                        GaussianRational base = it != fixed.end()
                                                    ? it->second
                                                    : fixed.at(table->conjugate_of(s)).conj();
                        for (unsigned k = 0; k < e; ++k) value *= base;
                    }
                }
                if (unknown_exp > 1) {
                    linear = false;
                    break;
                }
                if (unknown_slot < 0) row[cols.size()] += value;
                else row[std::size_t(unknown_slot)] += value;
            }
            if (!linear) break;
            aug.push_back(std::move(row));
        }
        if (!linear) return false;
        // Solve A u = -b; consistency via ranks, particular solution via RREF.
        QMatrix a = aug;
        for (auto& row : a) row.pop_back();
        const int ra = rank(a);
        const int raug = rank(aug);
        if (ra != raug) continue; // inconsistent at this instantiation
        // RREF on augmented matrix to read a particular solution.
        QMatrix m = aug;
        std::vector<long> pivot_of_col(cols.size(), -1);
        std::size_t row_i = 0;
        for (std::size_t col = 0; col < cols.size() && row_i < m.size(); ++col) {
            std::size_t piv = row_i;
            while (piv < m.size() && m[piv][col].is_zero()) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[row_i], m[piv]);
            const GaussianRational inv = GaussianRational(1) / m[row_i][col];
            for (auto& e : m[row_i]) e *= inv;
            for (std::size_t r = 0; r < m.size(); ++r) {
                if (r == row_i || m[r][col].is_zero()) continue;
                const GaussianRational f = m[r][col];
                for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] = m[r][j] - f * m[row_i][j];
            }
            pivot_of_col[col] = long(row_i);
            ++row_i;
        }
        auto point = fixed;
        for (std::size_t col = 0; col < cols.size(); ++col) {
            const GaussianRational v = pivot_of_col[col] >= 0
                                           ? -m[std::size_t(pivot_of_col[col])][cols.size()]
                                           : GaussianRational();
            if (!v.is_real()) {
                point.clear();
                break;
            }
            point[cols[col]] = v;
        }
        if (point.empty()) continue;
        if (point_admissible(point, assumptions, table) && gens_vanish_at(gens, point))
            return true;
    }
    return false;
}

} // namespace

Verdict evaluate_condition_set(const std::vector<Polynomial>& components,
                               const Assumptions& assumptions, const Polynomial::Table& table) {
    Verdict v;
    v.generators = normalize_generators(components, assumptions);
    if (v.generators.empty()) {
        v.state = Verdict::State::holds;
        return v;
    }
    v.witness = find_failure_witness(components, assumptions, table);
    const bool impossible = std::any_of(v.generators.begin(), v.generators.end(),
                                        [](const Polynomial& g) { return g.is_constant(); });
    if (impossible) {
        // some residual is a nonzero constant on the family: it can never
        // hold, and the generator list carries no extra information
        v.generators.clear();
        v.state = Verdict::State::fails_generically;
        return v;
    }
    if (v.generators.size() <= 4 && admissible_point_exists(v.generators, assumptions, table))
        v.state = Verdict::State::holds_iff;
    else
        v.state = Verdict::State::fails_generically;
    return v;
}

PredicateVerdicts predicates(const CurvatureSet& c, const Assumptions& assumptions) {
    const ConditionResidual mixed = cond_mixed(c);
    const ConditionResidual weyl6 = cond_weyl_contracted(c);
    const ConditionResidual s1 = cond_ricci_S1(c);
    const ConditionResidual s2 = cond_ricci_S2(c);

    std::vector<Polynomial> conf = mixed.components;
    conf.insert(conf.end(), weyl6.components.begin(), weyl6.components.end());
    std::vector<Polynomial> ric = s1.components;
    ric.insert(ric.end(), s2.components.begin(), s2.components.end());
    std::vector<Polynomial> all = conf;
    all.insert(all.end(), ric.begin(), ric.end());

    PredicateVerdicts out;
    out.conformal = evaluate_condition_set(conf, assumptions, c.table);
    out.ricci = evaluate_condition_set(ric, assumptions, c.table);
    out.semisymmetric = evaluate_condition_set(all, assumptions, c.table);
    return out;
}

} // namespace spinorss
