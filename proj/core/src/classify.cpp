#include "spinorss/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spinorss/errors.hpp"
#include "spinorss/random.hpp"
#include "spinorss/univariate.hpp"

namespace spinorss {

// ---------------------------------------------------------------------------
// Petrov typing

PetrovType petrov_type(const WeylSpinor& w) {
    std::array<GaussianRational, 5> c;
    for (int n = 0; n < 5; ++n) c[n] = w.psi[n].constant_value(); // SymbolicCoefficient if not
    // q(z) = Psi0 z^4 + 4 Psi1 z^3 + 6 Psi2 z^2 + 4 Psi3 z + Psi4
    UnivariatePoly q({c[4], c[3] * GaussianRational(4), c[2] * GaussianRational(6),
                      c[1] * GaussianRational(4), c[0]});
    if (q.is_zero()) return PetrovType::O;
    std::multiset<int> partition;
    const int infinity_mult = 4 - q.degree();
    if (infinity_mult > 0) partition.insert(infinity_mult);
    for (const auto& [factor, mult] : squarefree_decompose(q).factors)
        for (int k = 0; k < factor.degree(); ++k) partition.insert(int(mult));
    if (partition == std::multiset<int>{1, 1, 1, 1}) return PetrovType::I;
    if (partition == std::multiset<int>{2, 1, 1}) return PetrovType::II;
    if (partition == std::multiset<int>{2, 2}) return PetrovType::D;
    if (partition == std::multiset<int>{3, 1}) return PetrovType::III;
    if (partition == std::multiset<int>{4}) return PetrovType::N;
    throw Error("impossible multiplicity partition");
}

std::optional<PetrovType> recognize_standard_weyl(const WeylSpinor& w) {
    const bool z0 = w.psi[0].is_zero(), z1 = w.psi[1].is_zero(), z2 = w.psi[2].is_zero(),
               z3 = w.psi[3].is_zero(), z4 = w.psi[4].is_zero();
    if (z0 && z1 && z2 && z3 && z4) return PetrovType::O;
    if (!z1) return std::nullopt; // psi1 nonzero matches no standard form
    if (z0 && z2 && z3 && !z4) return PetrovType::N;
    if (z0 && z2 && !z3 && z4) return PetrovType::III;
    if (z0 && !z2 && z3 && z4) return PetrovType::D;
    if (z0 && !z2 && z3 && !z4) return PetrovType::II;
    if (!z0 && z3 && w.psi[0] == w.psi[4]) return PetrovType::I;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Segre pattern recognition

namespace {

bool offdiag_zero(const RicciSpinor& r) {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b && !r.phi[a][b].is_zero()) return false;
    return true;
}

} // namespace

SegrePattern segre_pattern(const RicciSpinor& r, const CurvatureScalar& lambda) {
    const bool phi_zero = r.is_zero();
    if (phi_zero && lambda.lambda.is_zero()) return {PhiPattern::vacuum, "vacuum", {}};
    if (offdiag_zero(r) && !phi_zero) {
        const Polynomial& d0 = r.phi[0][0];
        const Polynomial& d1 = r.phi[1][1];
        const Polynomial& d2 = r.phi[2][2];
        if (d0.is_zero() && d2.is_zero() && !d1.is_zero())
            return {PhiPattern::a1_11_11, "A1[(11)(1,1)]", {"only Phi11' nonzero"}};
        if (d0.is_zero() && d1.is_zero() && !d2.is_zero())
            return {PhiPattern::a3_11_2, "A3[(11,2)]", {"only Phi22' nonzero"}};
        if (!d1.is_zero() && d0 == d1.scaled(GaussianRational(2)) &&
            d2 == d1.scaled(GaussianRational(2)))
            return {PhiPattern::perfect_fluid, "A1[(111),1]",
                    {"Phi00' = 2*Phi11'", "Phi22' = 2*Phi11'"}};
        if (!d1.is_zero() && d0 == d1.scaled(GaussianRational(-2)) &&
            d2 == d1.scaled(GaussianRational(-2)))
            return {PhiPattern::tachyon, "A1[1(11,1)]",
                    {"Phi00' = -2*Phi11'", "Phi22' = -2*Phi11'"}};
    }
    if (phi_zero) return {PhiPattern::vacuum, "A1[(111,1)]", {"Phi = 0, Lambda-term"}};
    return {PhiPattern::generic, "other", {}};
}

// ---------------------------------------------------------------------------
// Phi kernel

namespace {

const char* direction_name(int a, int b) {
    static const char* names[3][3] = {
        {"Phi00'", "Phi01'", "Phi02'"},
        {"Phi10'", "Phi11'", "Phi12'"},
        {"Phi20'", "Phi21'", "Phi22'"},
    };
    return names[a][b];
}

/// Phi with formal unknowns in the Hermitian arrangement: the lower
/// triangle holds the conjugate-partner symbols of the upper triangle,
/// so conjugating a condition polynomial swaps the unknowns exactly the
/// way Hermiticity does.
GeneralSpinor placeholder_phi(const Polynomial::Table& table,
                              std::array<std::array<Polynomial, 3>, 3>& u_out) {
    for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
            const Polynomial u = Polynomial::symbol(
                table, "u" + std::to_string(a) + std::to_string(b),
                a == b ? SymbolKind::real_valued : SymbolKind::complex_valued);
            u_out[a][b] = u;
            if (a != b) u_out[b][a] = u.conj();
        }
    GeneralSpinor s({lower_unprimed(), lower_unprimed(), lower_primed(), lower_primed()});
    for (std::size_t f = 0; f < 16; ++f) {
        const int a = int((f >> 3) & 1) + int((f >> 2) & 1);
        const int b = int((f >> 1) & 1) + int(f & 1);
        s.set(f, u_out[a][b]);
    }
    return s;
}

std::vector<Polynomial> kernel_condition_components(const GeneralSpinor& psi,
                                                    const GeneralSpinor& phi, KernelWhich which) {
    std::vector<Polynomial> comps;
    auto append = [&comps](const GeneralSpinor& s,
                           const std::vector<std::vector<std::size_t>>& groups) {
        // a real (Hermitian) Phi satisfies a condition iff it also
        // satisfies the conjugate condition, so both rows enter the system
        for (std::size_t f : independent_component_indices(s.slot_count(), groups)) {
            comps.push_back(s.at(f));
            comps.push_back(s.at(f).conj());
        }
    };
    if (which == KernelWhich::S1 || which == KernelWhich::Both)
        append(ricci_s1_spinor(psi, phi), {{0, 1, 2, 3}, {4, 5}});
    if (which == KernelWhich::Mixed5 || which == KernelWhich::Both)
        append(mixed_spinor(phi, psi), {{0, 1, 2, 3}, {4, 5}});
    return comps;
}

} // namespace

KernelReport phi_kernel(const WeylSpinor& w, const Polynomial::Table& table,
                        const std::vector<SymbolId>& assume_nonzero, KernelWhich which,
                        int instantiation_checks) {
    std::array<std::array<Polynomial, 3>, 3> u;
    const std::optional<PetrovType> recognized = recognize_standard_weyl(w);
    const GeneralSpinor phi = placeholder_phi(table, u);
    const GeneralSpinor psi = w.expand();

    // unknown order: (a,b') row-major
    std::vector<SymbolId> unknowns;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) unknowns.push_back(*u[a][b].symbols().begin());

    const std::vector<Polynomial> comps = kernel_condition_components(psi, phi, which);

    // coefficient matrix: rows over the 9 unknowns, entries polynomial in psi symbols
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& comp : comps) {
        std::vector<Polynomial> row(9);
        for (const auto& [mono, coeff] : comp.terms()) {
            int slot = -1;
            Monomial rest;
            for (const auto& [s, e] : mono.factors()) {
                auto it = std::find(unknowns.begin(), unknowns.end(), s);
                if (it != unknowns.end()) {
                    if (e != 1 || slot >= 0) throw Error("kernel system is not linear in Phi");
                    slot = int(it - unknowns.begin());
                } else {
                    rest = rest * Monomial::symbol(s, e);
                }
            }
            if (slot < 0) throw Error("kernel system has a Phi-free term");
            Polynomial cell;
            cell += Polynomial(coeff);
            if (!rest.is_unit()) {
                Polynomial m(1);
                for (const auto& [s, e] : rest.factors())
                    m *= Polynomial::symbol(table, s).pow(e);
                cell = cell * m;
            }
            row[std::size_t(slot)] += cell;
        }
        rows.push_back(std::move(row));
    }

    Assumptions assumptions;
    for (SymbolId id : assume_nonzero) {
        assumptions.nonzero.insert(id);
        assumptions.nonzero.insert(table->conjugate_of(id)); // conjugated rows
    }
    const PolyKernel pk = poly_kernel(rows, assumptions);

    KernelReport report;
    report.petrov = recognized.value_or(PetrovType::O);
    report.which = which;
    report.dimension = int(pk.basis.size());
    report.genericity = pk.genericity;

    // instantiation cross-check
    for (int check = 0; check < instantiation_checks; ++check) {
        SplitMix64 rng(0xbeef00dull + std::uint64_t(check) * 7919);
        std::map<SymbolId, GaussianRational> point;
        WeylSpinor sampled;
        const PetrovType target = recognized.value_or(PetrovType::I);
        for (int tries = 0; tries < 64; ++tries) {
            point = random_point(*table, std::set<SymbolId>(assume_nonzero.begin(),
                                                            assume_nonzero.end()),
                                 rng);
            for (int n = 0; n < 5; ++n)
                sampled.psi[n] = Polynomial(w.psi[n].evaluate(point));
            if (w.psi[0].is_zero() && w.psi[1].is_zero() && w.psi[2].is_zero() &&
                w.psi[3].is_zero() && w.psi[4].is_zero())
                break; // type O: nothing to preserve
            if (petrov_type(sampled) == target) break; // admissible sample
        }
        QMatrix numeric;
        for (const auto& row : rows) {
            QVector r(9);
            for (int j = 0; j < 9; ++j) r[std::size_t(j)] = row[std::size_t(j)].evaluate(point);
            numeric.push_back(std::move(r));
        }
        const int numeric_dim = 9 - rank(numeric);
        if (numeric_dim != report.dimension)
            throw InconsistentInstantiationRank(
                "symbolic kernel dimension " + std::to_string(report.dimension) +
                " vs instantiated " + std::to_string(numeric_dim));
    }

    // basis description + S2 restricted to the kernel parametrization
    RicciSpinor param;
    bool have_param = report.dimension > 0;
    for (std::size_t v = 0; v < pk.basis.size(); ++v) {
        KernelBasisVector kb;
        kb.coords = pk.basis[v];
        int nonzero_slot = -1;
        int nonzero_count = 0;
        for (int j = 0; j < 9; ++j)
            if (!pk.basis[v][std::size_t(j)].is_zero()) {
                nonzero_slot = j;
                ++nonzero_count;
            }
        if (nonzero_count == 1) kb.direction = direction_name(nonzero_slot / 3, nonzero_slot % 3);
        else kb.direction = "mixed";
        report.basis.push_back(kb);
    }
    if (have_param) {
        // Coordinate directions get their natural component symbol; a
        // diagonal direction is a real degree of freedom.
        bool all_coordinate = true;
        for (const auto& kb : report.basis)
            if (kb.direction == "mixed") all_coordinate = false;
        if (all_coordinate) {
            for (const auto& kb : report.basis) {
                int slot = 0;
                for (int j = 0; j < 9; ++j)
                    if (!kb.coords[std::size_t(j)].is_zero()) slot = j;
                const int a = slot / 3, b = slot % 3;
                const std::string name = "p" + std::to_string(a) + std::to_string(b);
                const Polynomial t = Polynomial::symbol(
                    table, name,
                    a == b ? SymbolKind::real_valued : SymbolKind::complex_valued);
                param.phi[a][b] = t;
                if (a != b) param.phi[b][a] = t.conj();
            }
            param.check_hermitian();
        } else {
            // general parametrization over complex coordinates
            for (std::size_t v = 0; v < pk.basis.size(); ++v) {
                const Polynomial t = Polynomial::symbol(table, "t" + std::to_string(v),
                                                        SymbolKind::complex_valued);
                for (int j = 0; j < 9; ++j)
                    param.phi[j / 3][j % 3] += t * pk.basis[v][std::size_t(j)];
            }
        }
        const Polynomial lam = Polynomial::symbol(table, "lam", SymbolKind::real_valued);
        const GeneralSpinor s2 = ricci_s2_spinor(psi, param.expand(), lam);
        std::vector<Polynomial> s2comps;
        for (std::size_t f : independent_component_indices(4, {{0, 1}, {2, 3}}))
            s2comps.push_back(s2.at(f));
        Assumptions param_assumptions; // generators keep every symbol visible
        report.conditions_on_kernel = normalize_generators(s2comps, param_assumptions);
    }
    return report;
}

KernelReport phi_kernel(PetrovType t, KernelWhich which, int instantiation_checks) {
    auto table = SymbolTable::create();
    const StandardWeyl sw = standard_weyl(t, table);
    KernelReport r = phi_kernel(sw.weyl, table, sw.assume_nonzero, which, instantiation_checks);
    r.petrov = t;
    return r;
}

// ---------------------------------------------------------------------------
// classify_case

ClassificationReport classify_case(const CurvatureSet& c, const Assumptions& assumptions,
                                   std::optional<PetrovType> declared) {
    ClassificationReport out;
    bool constant_weyl = true;
    for (const auto& p : c.weyl.psi)
        if (!p.is_constant()) constant_weyl = false;
    if (constant_weyl) {
        out.petrov = petrov_type(c.weyl);
    } else if (declared) {
        out.petrov = *declared;
        out.petrov_declared = true;
    } else if (auto t = recognize_standard_weyl(c.weyl)) {
        out.petrov = *t;
        out.petrov_declared = true;
    } else {
        throw ParseError("symbolic Weyl spinor in a non-standard form: declare petrov_hint");
    }
    out.segre = segre_pattern(c.ricci, c.scalar);
    out.verdicts = predicates(c, assumptions);
    auto collect = [&out](const char* name, const Verdict& v) {
        for (const auto& g : v.generators)
            out.residuals.push_back(std::string(name) + ": " + g.str());
    };
    collect("conformal", out.verdicts.conformal);
    collect("ricci", out.verdicts.ricci);
    return out;
}

} // namespace spinorss
