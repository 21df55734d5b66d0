#include <doctest.h>

#include <fstream>
#include <sstream>

#include "spinorss/classify.hpp"
#include "spinorss/errors.hpp"
#include "spinorss/table.hpp"

#include "test_helpers.hpp"

using namespace spinorss;
using spinorss::testing::random_dyad;

TEST_SUITE_BEGIN("classify");

namespace {

WeylSpinor constant_weyl(std::array<long, 5> v) {
    WeylSpinor w;
    for (int n = 0; n < 5; ++n)
        if (v[std::size_t(n)] != 0) w.psi[n] = Polynomial(v[std::size_t(n)]);
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("petrov typing of constant Weyl spinors") {
    CHECK(petrov_type(constant_weyl({0, 0, 1, 0, 0})) == PetrovType::D);
    CHECK(petrov_type(constant_weyl({0, 0, 0, 0, 1})) == PetrovType::N);
    CHECK(petrov_type(constant_weyl({0, 0, 0, 1, 0})) == PetrovType::III);
    CHECK(petrov_type(constant_weyl({0, 0, 0, 0, 0})) == PetrovType::O);
    CHECK(petrov_type(constant_weyl({0, 0, 1, 0, 1})) == PetrovType::II);
    CHECK(petrov_type(constant_weyl({1, 0, 1, 0, 1})) == PetrovType::I);
    // quartic z^2 (z^2 + 6): double root plus two simple roots
    CHECK(petrov_type(constant_weyl({1, 0, 1, 0, 0})) == PetrovType::II);
    // the degenerate locus of the type-I form (psi0 = 3 psi2: quartic
    // 3 (z^2+1)^2) is type D; this is the genericity surface the kernel
    // elimination records for type I
    CHECK(petrov_type(constant_weyl({3, 0, 1, 0, 3})) == PetrovType::D);

    auto table = SymbolTable::create();
    WeylSpinor symbolic;
    symbolic.psi[2] = Polynomial::symbol(table, "psi2", SymbolKind::complex_valued);
    CHECK_THROWS_AS((void)petrov_type(symbolic), SymbolicCoefficient);
}

TEST_CASE("petrov round trip on the standard forms") {
    SplitMix64 rng(97);
    for (PetrovType t : {PetrovType::I, PetrovType::II, PetrovType::III, PetrovType::D,
                         PetrovType::N, PetrovType::O}) {
        auto table = SymbolTable::create();
        const StandardWeyl sw = standard_weyl(t, table);
        for (int k = 0; k < 5; ++k) {
            const auto point = random_point(*table, std::set<SymbolId>(sw.assume_nonzero.begin(),
                                                                       sw.assume_nonzero.end()),
                                            rng);
            WeylSpinor inst;
            for (int n = 0; n < 5; ++n) inst.psi[n] = Polynomial(sw.weyl.psi[n].evaluate(point));
            CHECK(petrov_type(inst) == t);
        }
    }
}

TEST_CASE("petrov type is invariant under unimodular dyad transforms") {
    SplitMix64 rng(101);
    for (PetrovType t : {PetrovType::I, PetrovType::II, PetrovType::III, PetrovType::D,
                         PetrovType::N}) {
        auto table = SymbolTable::create();
        const StandardWeyl sw = standard_weyl(t, table);
        const auto point = random_point(*table, std::set<SymbolId>(sw.assume_nonzero.begin(),
                                                                   sw.assume_nonzero.end()),
                                        rng);
        CurvatureSet c;
        c.table = table;
        for (int n = 0; n < 5; ++n) c.weyl.psi[n] = Polynomial(sw.weyl.psi[n].evaluate(point));
        REQUIRE(petrov_type(c.weyl) == t);
        for (int k = 0; k < 3; ++k) {
            const CurvatureSet moved = dyad_transform(c, random_dyad(rng));
            CHECK(petrov_type(moved.weyl) == t);
        }
    }
}

TEST_CASE("segre pattern recognition") {
    auto table = SymbolTable::create();
    CurvatureScalar zero;
    CurvatureScalar lam;
    lam.lambda = Polynomial::symbol(table, "lam", SymbolKind::real_valued);

    SUBCASE("vacuum and Lambda-term") {
        RicciSpinor phi;
        CHECK(segre_pattern(phi, zero).kind == PhiPattern::vacuum);
        CHECK(segre_pattern(phi, zero).label == "vacuum");
        CHECK(segre_pattern(phi, lam).label == "A1[(111,1)]");
    }
    SUBCASE("standard patterns match themselves") {
        CHECK(segre_pattern(standard_phi(PhiPattern::a1_11_11, table).ricci, lam).label ==
              "A1[(11)(1,1)]");
        CHECK(segre_pattern(standard_phi(PhiPattern::a3_11_2, table).ricci, zero).label ==
              "A3[(11,2)]");
        CHECK(segre_pattern(standard_phi(PhiPattern::perfect_fluid, table).ricci, lam).label ==
              "A1[(111),1]");
        CHECK(segre_pattern(standard_phi(PhiPattern::tachyon, table).ricci, lam).label ==
              "A1[1(11,1)]");
    }
    SUBCASE("numeric perfect fluid") {
        RicciSpinor phi;
        phi.phi[0][0] = Polynomial(6);
        phi.phi[1][1] = Polynomial(3);
        phi.phi[2][2] = Polynomial(6);
        CHECK(segre_pattern(phi, zero).kind == PhiPattern::perfect_fluid);
    }
    SUBCASE("unlisted diagonal patterns fall through to other") {
        RicciSpinor phi;
        phi.phi[0][0] = Polynomial(1);
        CHECK(segre_pattern(phi, zero).label == "other");
    }
}

TEST_CASE("phi kernels per Petrov type") {
    SUBCASE("type D: dimension 1 along Phi11'") {
        const KernelReport r = phi_kernel(PetrovType::D, KernelWhich::Both);
        CHECK(r.dimension == 1);
        REQUIRE(r.basis.size() == 1);
        CHECK(r.basis[0].direction == "Phi11'");
        // condition on the kernel: p11 (2 lam + psi2) = 0
        REQUIRE(r.conditions_on_kernel.size() == 1);
        const Polynomial g = r.conditions_on_kernel[0];
        const Monomial content = g.monomial_content();
        CHECK(content.total_degree() == 1); // the kernel coordinate p11
        CHECK(g.divided_by(content).terms().size() == 2); // 2 lam + psi2
    }
    SUBCASE("type N: dimension 1 along Phi22'") {
        const KernelReport r = phi_kernel(PetrovType::N, KernelWhich::Both);
        CHECK(r.dimension == 1);
        REQUIRE(r.basis.size() == 1);
        CHECK(r.basis[0].direction == "Phi22'");
        REQUIRE(r.conditions_on_kernel.size() == 1);
        // condition on the kernel: lam * p22 = 0
        CHECK(r.conditions_on_kernel[0].terms().size() == 1);
        CHECK(r.conditions_on_kernel[0].monomial_content().total_degree() == 2);
    }
    SUBCASE("types I, II, III: dimension 0") {
        CHECK(phi_kernel(PetrovType::I, KernelWhich::Both).dimension == 0);
        CHECK(phi_kernel(PetrovType::II, KernelWhich::Both).dimension == 0);
        CHECK(phi_kernel(PetrovType::III, KernelWhich::Both).dimension == 0);
        // the separate condition sets force the same kernels
        CHECK(phi_kernel(PetrovType::I, KernelWhich::S1).dimension == 0);
        CHECK(phi_kernel(PetrovType::III, KernelWhich::Mixed5).dimension == 0);
    }
    SUBCASE("type D: each condition set alone already pins the kernel") {
        CHECK(phi_kernel(PetrovType::D, KernelWhich::S1).dimension == 1);
        CHECK(phi_kernel(PetrovType::D, KernelWhich::Mixed5).dimension == 1);
        CHECK(phi_kernel(PetrovType::N, KernelWhich::S1).dimension == 1);
        CHECK(phi_kernel(PetrovType::N, KernelWhich::Mixed5).dimension == 1);
    }
    SUBCASE("type O: every Phi is in the kernel") {
        CHECK(phi_kernel(PetrovType::O, KernelWhich::Both).dimension == 9);
    }
}

TEST_CASE("kernel dimension is invariant under dyads preserving the standard form") {
    // diagonal boosts and the antidiagonal swap keep the type-D pattern;
    // diagonal boosts keep the type-N pattern (psi4 rescales)
    const GaussianRational a(BigRational(3, 2));
    const DyadMatrix boost = {{{a, GaussianRational(0)}, {GaussianRational(0), GaussianRational(1) / a}}};
    const DyadMatrix swap = {{{GaussianRational(0), GaussianRational(1)},
                              {GaussianRational(-1), GaussianRational(0)}}};
    for (PetrovType t : {PetrovType::D, PetrovType::N}) {
        auto table = SymbolTable::create();
        const StandardWeyl sw = standard_weyl(t, table);
        const int base = phi_kernel(sw.weyl, table, sw.assume_nonzero, KernelWhich::Both).dimension;
        CurvatureSet c;
        c.table = table;
        c.weyl = sw.weyl;
        const CurvatureSet boosted = dyad_transform(c, DyadTransform(boost));
        CHECK(phi_kernel(boosted.weyl, table, sw.assume_nonzero, KernelWhich::Both).dimension ==
              base);
        if (t == PetrovType::D) {
            const CurvatureSet swapped = dyad_transform(c, DyadTransform(swap));
            CHECK(phi_kernel(swapped.weyl, table, sw.assume_nonzero, KernelWhich::Both).dimension ==
                  base);
        }
    }
}

TEST_CASE("classify_case examples") {
    SUBCASE("flat space is semi-symmetric") {
        CurvatureSet c;
        c.table = SymbolTable::create();
        const ClassificationReport r = classify_case(c, {});
        CHECK(r.petrov == PetrovType::O);
        CHECK(r.verdicts.semisymmetric.holds_identically());
        CHECK(r.residuals.empty());
    }
    SUBCASE("type O with generic Phi: conformal holds, Ricci fails generically") {
        CurvatureSet c;
        c.table = SymbolTable::create();
        const StandardPhi sp = standard_phi(PhiPattern::generic, c.table);
        c.ricci = sp.ricci;
        c.scalar.lambda = Polynomial::symbol(c.table, "lam", SymbolKind::real_valued);
        Assumptions assumptions;
        std::set<SymbolId> group;
        for (const char* n : {"p00", "p01", "p02", "p11", "p12", "p22"})
            group.insert(*c.table->find(n));
        assumptions.not_all_zero.push_back(group);
        const ClassificationReport r = classify_case(c, assumptions);
        CHECK(r.verdicts.conformal.holds_identically());
        CHECK(r.verdicts.ricci.state == Verdict::State::fails_generically);
        REQUIRE(r.verdicts.ricci.witness.has_value());
        // the witness is a concrete failing instantiation
        bool some_nonzero = false;
        for (const auto& comp : cond_ricci_S2(c).components)
            if (!comp.evaluate(r.verdicts.ricci.witness->values).is_zero()) some_nonzero = true;
        CHECK(some_nonzero);
    }
    SUBCASE("type I vacuum: Ricci holds, conformal fails generically") {
        CurvatureSet c;
        c.table = SymbolTable::create();
        const StandardWeyl sw = standard_weyl(PetrovType::I, c.table);
        c.weyl = sw.weyl;
        Assumptions assumptions;
        assumptions.nonzero.insert(sw.assume_nonzero.begin(), sw.assume_nonzero.end());
        const ClassificationReport r = classify_case(c, assumptions);
        CHECK(r.petrov == PetrovType::I);
        CHECK(r.petrov_declared); // symbolic standard form
        CHECK(r.verdicts.ricci.holds_identically());
        CHECK(r.verdicts.conformal.state == Verdict::State::fails_generically);
        REQUIRE(r.verdicts.conformal.witness.has_value());
    }
}

TEST_CASE("the reproduced table matches the golden files byte for byte") {
    const TableDocument doc = reproduce_table();
    CHECK(doc.to_text() == read_file(std::string(SPINORSS_GOLDEN_DIR) + "/appendix_a.txt"));
    CHECK(doc.to_json() == read_file(std::string(SPINORSS_GOLDEN_DIR) + "/appendix_a.json"));
}

TEST_CASE("pinned table cells") {
    const TableDocument doc = reproduce_table();
    // Lambda-term with Lambda = -1/2 Psi2 at type D
    CHECK(doc.cell(1, PetrovType::D).label == "semi-sym");
    // A3[(11,2)] with Lambda = 0 at type N
    CHECK(doc.cell(4, PetrovType::N).label == "semi-sym");
    // A1[(11)(1,1)] with Lambda = -1/2 Psi2 at type I
    CHECK(doc.cell(2, PetrovType::I).label == "-");
    // the matched rows do not exist where Psi2 vanishes identically
    CHECK(!doc.cell(1, PetrovType::III).exists);
    CHECK(!doc.cell(1, PetrovType::N).exists);
    CHECK(!doc.cell(1, PetrovType::O).exists);
    CHECK(!doc.cell(2, PetrovType::O).exists);
    // vacuum-or-term row: Ric s-s everywhere, semi-sym at type O
    for (PetrovType t : {PetrovType::I, PetrovType::II, PetrovType::III, PetrovType::D,
                         PetrovType::N})
        CHECK(doc.cell(0, t).label == "Ric s-s");
    CHECK(doc.cell(0, PetrovType::O).label == "semi-sym");
}

TEST_CASE("every semi-symmetric cell survives the independent re-check") {
    // for cells labeled semi-sym, the full commutator conditions vanish
    const TableDocument doc = reproduce_table();
    auto rebuild = [](const TableCell& cell) {
        auto table = SymbolTable::create();
        CurvatureSet c;
        c.table = table;
        WeylNaming naming;
        naming.psi2_real = cell.row_label.find("-1/2*Psi2") != std::string::npos;
        const StandardWeyl sw = standard_weyl(cell.column, table, naming);
        c.weyl = sw.weyl;
        PhiPattern pattern = PhiPattern::vacuum;
        if (cell.row_label.find("A1[(11)(1,1)]") == 0) pattern = PhiPattern::a1_11_11;
        else if (cell.row_label.find("A3[(11,2)]") == 0) pattern = PhiPattern::a3_11_2;
        else if (cell.row_label.find("perfect fluid") != std::string::npos)
            pattern = PhiPattern::perfect_fluid;
        else if (cell.row_label.find("tachyon") != std::string::npos) pattern = PhiPattern::tachyon;
        const StandardPhi sp = standard_phi(pattern, table);
        c.ricci = sp.ricci;
        if (naming.psi2_real) c.scalar.lambda = sw.weyl.psi[2].scaled(GaussianRational(BigRational(-1, 2)));
        else if (cell.row_label.find("Lambda = 0") != std::string::npos) c.scalar.lambda = Polynomial();
        else if (pattern == PhiPattern::perfect_fluid || pattern == PhiPattern::tachyon)
            c.scalar.lambda = sp.ricci.phi[1][1];
        else if (cell.row_label.find("or vacuum") != std::string::npos)
            c.scalar.lambda = Polynomial::symbol(table, "lam", SymbolKind::real_valued);
        return c;
    };
    int checked = 0;
    for (const TableCell& cell : doc.cells) {
        if (cell.label != "semi-sym") continue;
        // the vacuum-or-term row needs both sub-cases; rebuild covers the
        // lambda-term one, the vacuum one is its lambda = 0 specialization
        CurvatureSet c = rebuild(cell);
        CHECK(cond_ricci_full(c).vanishes);
        CHECK(cond_mixed(c).vanishes);
        CHECK(cond_weyl_contracted(c).vanishes);
        ++checked;
    }
    CHECK(checked == 7); // semi-sym cells in the table
}

TEST_SUITE_END();
