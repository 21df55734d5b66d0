#include <doctest.h>

#include "spinorss/conditions.hpp"
#include "spinorss/errors.hpp"

#include "test_helpers.hpp"

using namespace spinorss;
using spinorss::testing::random_curvature_set;
using spinorss::testing::random_dyad;

TEST_SUITE_BEGIN("conditions");

namespace {

CurvatureSet fully_symbolic() {
    CurvatureSet c;
    c.table = SymbolTable::create();
    for (int n = 0; n < 5; ++n)
        c.weyl.psi[n] =
            Polynomial::symbol(c.table, "psi" + std::to_string(n), SymbolKind::complex_valued);
    c.scalar.lambda = Polynomial::symbol(c.table, "lam", SymbolKind::real_valued);
    c.ricci = standard_phi(PhiPattern::generic, c.table).ricci;
    return c;
}

/// Type-D family: psi2 (optionally real), Phi11' only, Lambda free or matched.
CurvatureSet type_d_family(bool psi2_real, bool lambda_matched, Assumptions* assumptions) {
    CurvatureSet c;
    c.table = SymbolTable::create();
    WeylNaming naming;
    naming.psi2_real = psi2_real;
    const StandardWeyl sw = standard_weyl(PetrovType::D, c.table, naming);
    c.weyl = sw.weyl;
    const StandardPhi sp = standard_phi(PhiPattern::a1_11_11, c.table);
    c.ricci = sp.ricci;
    if (lambda_matched) {
        c.scalar.lambda = sw.weyl.psi[2].scaled(GaussianRational(BigRational(-1, 2)));
    } else {
        c.scalar.lambda = Polynomial::symbol(c.table, "lam", SymbolKind::real_valued);
    }
    if (assumptions) {
        assumptions->nonzero.insert(sw.assume_nonzero.begin(), sw.assume_nonzero.end());
        assumptions->nonzero.insert(sp.assume_nonzero.begin(), sp.assume_nonzero.end());
    }
    return c;
}

} // namespace

// ---------------------------------------------------------------------------
// identity suite, fully symbolic

TEST_CASE("the printed ricci commutator equals the Box action on Phi") {
    const CurvatureSet c = fully_symbolic();
    const GeneralSpinor box = box_on(c, c.ricci.expand(), BoxKind::unprimed_pair);
    const GeneralSpinor printed = ricci_full_spinor(build_X(c), c.ricci.expand());
    CHECK((box - printed).is_zero());
}

TEST_CASE("the AB-trace of the ricci commutator vanishes identically") {
    const CurvatureSet c = fully_symbolic();
    CHECK(ricci_full_trace(c).is_zero());
}

TEST_CASE("the primed commutator is the conjugate of the unprimed one") {
    const CurvatureSet c = fully_symbolic();
    const GeneralSpinor conj7 = ricci_full_spinor(build_X(c), c.ricci.expand()).conj();
    const GeneralSpinor e8 = ricci_full_primed_spinor(build_X(c).conj(), c.ricci.expand());
    CHECK((conj7 - e8).is_zero());
    // and it gives no new conditions: same independent component span
    std::vector<Polynomial> c7, c8;
    for (std::size_t f : independent_component_indices(6, {{0, 1}, {2, 3}, {4, 5}})) {
        c7.push_back(conj7.at(f));
        c8.push_back(e8.at(f));
    }
    CHECK(c7 == c8);
}

TEST_CASE("the BC-contraction of the full Weyl condition is 3/4 of the contracted form") {
    const CurvatureSet c = fully_symbolic();
    const GeneralSpinor contraction = weyl_full_bc_contraction(c);
    const GeneralSpinor e6 = weyl_contracted_spinor(c.weyl.expand(), c.scalar.lambda);
    const auto factor = proportionality_factor(contraction, e6);
    REQUIRE(factor.has_value());
    CHECK(*factor == GaussianRational(BigRational(3, 4)));
    // the contraction is itself totally symmetric
    CHECK(contraction.symmetrize({0, 1, 2, 3}) == contraction);
}

TEST_CASE("the symmetrized Ricci part is the same built from X or from Psi") {
    const CurvatureSet c = fully_symbolic();
    const GeneralSpinor from_x = ricci_s1_spinor(build_X(c), c.ricci.expand());
    const GeneralSpinor from_psi = ricci_s1_spinor(c.weyl.expand(), c.ricci.expand());
    CHECK((from_x - from_psi).is_zero());
}

TEST_CASE("both symmetric parts agree with the operator side") {
    const CurvatureSet c = fully_symbolic();
    const GeneralSpinor box = box_on(c, c.ricci.expand(), BoxKind::unprimed_pair);
    SUBCASE("fully symmetrized commutator is -2 S1") {
        const GeneralSpinor lhs = box.symmetrize({0, 1, 2, 3});
        const GeneralSpinor rhs = ricci_s1_spinor(c.weyl.expand(), c.ricci.expand())
                                      .scaled(GaussianRational(-2));
        CHECK((lhs - rhs).is_zero());
    }
    SUBCASE("cross-contracted commutator is the printed S2") {
        // Box_(A^F Phi_C)F C'D' : raise the second operator slot, contract
        // with Phi's second unprimed index, symmetrize the free pair
        const GeneralSpinor cross = box.raise(1).contract(1, 3).symmetrize({0, 1});
        const GeneralSpinor s2 =
            ricci_s2_spinor(c.weyl.expand(), c.ricci.expand(), c.scalar.lambda);
        CHECK((cross - s2).is_zero());
    }
}

TEST_CASE("the printed S2 right-hand side is already symmetric in its free pair") {
    const CurvatureSet c = fully_symbolic();
    const GeneralSpinor s2 = ricci_s2_spinor(c.weyl.expand(), c.ricci.expand(), c.scalar.lambda);
    CHECK(s2.permute_slots({1, 0, 2, 3}) == s2);
    CHECK(s2.permute_slots({0, 1, 3, 2}) == s2);
}

// ---------------------------------------------------------------------------
// per-operation examples

TEST_CASE("full Weyl condition: vacuum type O vanishes") {
    CurvatureSet c;
    c.table = SymbolTable::create();
    CHECK(cond_weyl_full(c).vanishes);
}

TEST_CASE("full Weyl condition: 15 components spanning rank 5") {
    const CurvatureSet c = fully_symbolic();
    const ConditionResidual r = cond_weyl_full(c);
    CHECK(r.components.size() == 15);
    CHECK(coefficient_rank(r.components) == 5);
}

TEST_CASE("full Weyl condition vanishes on the matched type-D family") {
    const CurvatureSet c = type_d_family(/*psi2_real=*/true, /*lambda_matched=*/true, nullptr);
    CHECK(cond_weyl_full(c).vanishes);
    CHECK(cond_weyl_contracted(c).vanishes);
}

TEST_CASE("contracted Weyl condition on standard families") {
    SUBCASE("type N: the residual is generated by lam*psi4") {
        CurvatureSet c;
        c.table = SymbolTable::create();
        const StandardWeyl sw = standard_weyl(PetrovType::N, c.table);
        c.weyl = sw.weyl;
        c.scalar.lambda = Polynomial::symbol(c.table, "lam", SymbolKind::real_valued);
        const ConditionResidual r = cond_weyl_contracted(c);
        CHECK(!r.vanishes);
        const auto gens = normalize_generators(r.components, {});
        REQUIRE(gens.size() == 1);
        CHECK(gens[0] == (c.scalar.lambda * c.weyl.psi[4]).normalized());
    }
    SUBCASE("type D: vanishes exactly on 2*lam+psi2 = 0") {
        Assumptions assumptions;
        const CurvatureSet c = type_d_family(true, false, &assumptions);
        const ConditionResidual r = cond_weyl_contracted(c);
        CHECK(!r.vanishes);
        const auto gens = normalize_generators(r.components, assumptions);
        REQUIRE(gens.size() == 1);
        CHECK(gens[0] ==
              (c.scalar.lambda.scaled(GaussianRational(2)) + c.weyl.psi[2]).normalized());
    }
    SUBCASE("type O vanishes for any Lambda and Phi") {
        CurvatureSet c = fully_symbolic();
        for (auto& p : c.weyl.psi) p = Polynomial();
        CHECK(cond_weyl_contracted(c).vanishes);
        CHECK(cond_mixed(c).vanishes);
    }
}

TEST_CASE("mixed condition: Phi = 0 vanishes") {
    CurvatureSet c = fully_symbolic();
    c.ricci = RicciSpinor{};
    CHECK(cond_mixed(c).vanishes);
    CHECK(cond_mixed(c).components.size() == 15);
}

TEST_CASE("S1: every term carries Psi") {
    CurvatureSet c = fully_symbolic();
    for (auto& p : c.weyl.psi) p = Polynomial();
    CHECK(cond_ricci_S1(c).vanishes);
    CHECK(cond_ricci_S1(fully_symbolic()).components.size() == 15);
}

TEST_CASE("S2 on the conformally flat special families") {
    SUBCASE("perfect fluid: vanishes exactly on Lambda = Phi11'") {
        CurvatureSet c;
        c.table = SymbolTable::create();
        const StandardPhi sp = standard_phi(PhiPattern::perfect_fluid, c.table);
        c.ricci = sp.ricci;
        Assumptions assumptions;
        assumptions.nonzero.insert(sp.assume_nonzero.begin(), sp.assume_nonzero.end());
        SUBCASE("matched") {
            c.scalar.lambda = sp.ricci.phi[1][1];
            CHECK(cond_ricci_S2(c).vanishes);
        }
        SUBCASE("free Lambda") {
            c.scalar.lambda = Polynomial::symbol(c.table, "lam", SymbolKind::real_valued);
            const ConditionResidual r = cond_ricci_S2(c);
            CHECK(!r.vanishes);
            const auto gens = normalize_generators(r.components, assumptions);
            REQUIRE(gens.size() == 1);
            CHECK(gens[0] == (c.scalar.lambda - sp.ricci.phi[1][1]).normalized());
        }
    }
    SUBCASE("tachyon: vanishes exactly on Lambda = Phi11'") {
        CurvatureSet c;
        c.table = SymbolTable::create();
        const StandardPhi sp = standard_phi(PhiPattern::tachyon, c.table);
        c.ricci = sp.ricci;
        c.scalar.lambda = sp.ricci.phi[1][1];
        CHECK(cond_ricci_S2(c).vanishes);
    }
    SUBCASE("only Phi22': vanishes exactly on Lambda * Phi22' = 0") {
        CurvatureSet c;
        c.table = SymbolTable::create();
        const StandardPhi sp = standard_phi(PhiPattern::a3_11_2, c.table);
        c.ricci = sp.ricci;
        c.scalar.lambda = Polynomial::symbol(c.table, "lam", SymbolKind::real_valued);
        const ConditionResidual r = cond_ricci_S2(c);
        CHECK(!r.vanishes);
        Assumptions assumptions;
        assumptions.nonzero.insert(sp.assume_nonzero.begin(), sp.assume_nonzero.end());
        const auto gens = normalize_generators(r.components, assumptions);
        REQUIRE(gens.size() == 1);
        CHECK(gens[0] == c.scalar.lambda.normalized());
        // with Lambda = 0 it vanishes
        c.scalar.lambda = Polynomial();
        CHECK(cond_ricci_S2(c).vanishes);
    }
    SUBCASE("Phi = 0: vacuum and Lambda-term Ricci semi-symmetry") {
        CurvatureSet c = fully_symbolic();
        c.ricci = RicciSpinor{};
        CHECK(cond_ricci_S2(c).vanishes);
        CHECK(cond_ricci_S1(c).vanishes);
    }
}

TEST_CASE("type-N Ricci scalar condition is Lambda * Phi22'") {
    CurvatureSet c;
    c.table = SymbolTable::create();
    c.weyl = standard_weyl(PetrovType::N, c.table).weyl;
    const StandardPhi sp = standard_phi(PhiPattern::a3_11_2, c.table);
    c.ricci = sp.ricci;
    c.scalar.lambda = Polynomial::symbol(c.table, "lam", SymbolKind::real_valued);
    CHECK(cond_ricci_S1(c).vanishes); // Phi22' lies in the type-N kernel
    const ConditionResidual s2 = cond_ricci_S2(c);
    const auto gens = normalize_generators(s2.components, {});
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == (c.scalar.lambda * sp.ricci.phi[2][2]).normalized());
}

TEST_CASE("type-D Ricci kernel condition is Phi11' (2 Lambda + Psi2)") {
    Assumptions assumptions;
    const CurvatureSet c = type_d_family(true, false, &assumptions);
    CHECK(cond_ricci_S1(c).vanishes); // Phi11' lies in the type-D kernel
    CHECK(cond_mixed(c).vanishes);
    const ConditionResidual s2 = cond_ricci_S2(c);
    const auto gens = normalize_generators(s2.components, {});
    REQUIRE(gens.size() == 1);
    const Polynomial expected =
        ((c.scalar.lambda.scaled(GaussianRational(2)) + c.weyl.psi[2]) * c.ricci.phi[1][1])
            .normalized();
    CHECK(gens[0] == expected);
    // matched family: everything vanishes
    const CurvatureSet matched = type_d_family(true, true, nullptr);
    CHECK(cond_ricci_S2(matched).vanishes);
    CHECK(cond_ricci_S1(matched).vanishes);
}

TEST_CASE("S2 has 9 independent components") {
    CHECK(cond_ricci_S2(fully_symbolic()).components.size() == 9);
    CHECK(cond_ricci_full(fully_symbolic()).components.size() == 27);
}

// ---------------------------------------------------------------------------
// rank reports

TEST_CASE("reduction of the full Weyl condition to its contraction") {
    SUBCASE("generic symbolic input has ranks (5, 5, 5)") {
        const RankReport r = verify_reduction_4_to_6(fully_symbolic());
        CHECK(r.rank_a == 5);
        CHECK(r.rank_b == 5);
        CHECK(r.rank_union == 5);
        CHECK(r.count_a == 15);
        CHECK(r.count_b == 5);
        CHECK(r.pass);
    }
    SUBCASE("Psi = 0 gives ranks (0, 0, 0)") {
        CurvatureSet c = fully_symbolic();
        for (auto& p : c.weyl.psi) p = Polynomial();
        const RankReport r = verify_reduction_4_to_6(c);
        CHECK(r.rank_a == 0);
        CHECK(r.rank_b == 0);
        CHECK(r.rank_union == 0);
        CHECK(!r.pass);
    }
    SUBCASE("rank cross-checked at random rational instantiations") {
        const CurvatureSet c = fully_symbolic();
        const ConditionResidual e4 = cond_weyl_full(c);
        for (std::uint64_t seed : {101ull, 202ull, 303ull})
            CHECK(instantiation_rank(e4.components, 20, seed) == 5);
    }
}

TEST_CASE("decomposition of the ricci commutator into its symmetric parts") {
    SUBCASE("generic symbolic input: equal spans, vanishing trace") {
        const RankReport r = verify_decomposition_7_to_9_10(fully_symbolic());
        CHECK(r.pass);
        CHECK(r.trace_zero);
        CHECK(r.count_a == 27);
        CHECK(r.count_b == 24);
        // 27 slots lose exactly the 3 trace components; the 15 + 9
        // replacement components are linearly independent
        CHECK(r.rank_a == 24);
        CHECK(r.rank_b == 24);
        CHECK(r.rank_union == 24);
    }
    SUBCASE("Phi = 0: all spans zero") {
        CurvatureSet c = fully_symbolic();
        c.ricci = RicciSpinor{};
        const RankReport r = verify_decomposition_7_to_9_10(c);
        CHECK(r.rank_a == 0);
        CHECK(r.rank_b == 0);
        CHECK(r.rank_union == 0);
        CHECK(r.pass);
    }
    SUBCASE("span equality re-verified at instantiations") {
        const CurvatureSet c = fully_symbolic();
        const ConditionResidual e7 = cond_ricci_full(c);
        std::vector<Polynomial> repl = cond_ricci_S1(c).components;
        const auto s2 = cond_ricci_S2(c).components;
        repl.insert(repl.end(), s2.begin(), s2.end());
        std::vector<Polynomial> both = e7.components;
        both.insert(both.end(), repl.begin(), repl.end());
        for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
            const int ra = instantiation_rank(e7.components, 40, seed);
            const int rb = instantiation_rank(repl, 40, seed);
            const int ru = instantiation_rank(both, 40, seed);
            CHECK(ra == rb);
            CHECK(rb == ru);
        }
    }
}

// ---------------------------------------------------------------------------
// predicates

TEST_CASE("predicate examples") {
    SUBCASE("vacuum of any Petrov type is Ricci semi-symmetric") {
        for (PetrovType t : {PetrovType::I, PetrovType::II, PetrovType::III, PetrovType::D,
                             PetrovType::N, PetrovType::O}) {
            CurvatureSet c;
            c.table = SymbolTable::create();
            const StandardWeyl sw = standard_weyl(t, c.table);
            c.weyl = sw.weyl;
            Assumptions assumptions;
            assumptions.nonzero.insert(sw.assume_nonzero.begin(), sw.assume_nonzero.end());
            const PredicateVerdicts v = predicates(c, assumptions);
            CHECK(v.ricci.holds_identically());
        }
    }
    SUBCASE("any type O is conformally semi-symmetric") {
        CurvatureSet c = fully_symbolic();
        for (auto& p : c.weyl.psi) p = Polynomial();
        const PredicateVerdicts v = predicates(c, {});
        CHECK(v.conformal.holds_identically());
    }
    SUBCASE("matched type D with Phi11' only: all three hold") {
        Assumptions assumptions;
        const CurvatureSet c = type_d_family(true, true, &assumptions);
        const PredicateVerdicts v = predicates(c, assumptions);
        CHECK(v.conformal.holds_identically());
        CHECK(v.ricci.holds_identically());
        CHECK(v.semisymmetric.holds_identically());
    }
    SUBCASE("unmatched type D: holds exactly on 2*lam+psi2 = 0") {
        Assumptions assumptions;
        const CurvatureSet c = type_d_family(true, false, &assumptions);
        const PredicateVerdicts v = predicates(c, assumptions);
        CHECK(v.conformal.state == Verdict::State::holds_iff);
        REQUIRE(v.conformal.generators.size() == 1);
        CHECK(v.conformal.generators[0] ==
              (c.scalar.lambda.scaled(GaussianRational(2)) + c.weyl.psi[2]).normalized());
        REQUIRE(v.conformal.witness.has_value());
        CHECK(v.ricci.state == Verdict::State::holds_iff);
    }
}

TEST_CASE("monotone structure") {
    SplitMix64 rng(83);
    for (int k = 0; k < 5; ++k) {
        CurvatureSet c = random_curvature_set(rng);
        CurvatureSet vac = c;
        vac.ricci = RicciSpinor{};
        CHECK(predicates(vac, {}).ricci.holds_identically());
        CurvatureSet flat = c;
        flat.weyl = WeylSpinor{};
        CHECK(predicates(flat, {}).conformal.holds_identically());
    }
}

TEST_CASE("frame invariance of the predicate verdicts (sample)") {
    SplitMix64 rng(89);
    for (int k = 0; k < 10; ++k) {
        const CurvatureSet c = random_curvature_set(rng);
        const CurvatureSet t = dyad_transform(c, random_dyad(rng));
        const PredicateVerdicts v0 = predicates(c, {});
        const PredicateVerdicts v1 = predicates(t, {});
        CHECK(v0.conformal.holds_identically() == v1.conformal.holds_identically());
        CHECK(v0.ricci.holds_identically() == v1.ricci.holds_identically());
        CHECK(v0.semisymmetric.holds_identically() == v1.semisymmetric.holds_identically());
    }
    // and on a family where the verdicts hold
    Assumptions assumptions;
    const CurvatureSet d = type_d_family(true, true, &assumptions);
    const CurvatureSet td = dyad_transform(d, random_dyad(rng));
    CHECK(predicates(td, assumptions).semisymmetric.holds_identically());
}

TEST_SUITE_END();
