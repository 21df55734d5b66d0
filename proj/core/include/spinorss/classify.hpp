#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinorss/conditions.hpp"
#include "spinorss/curvature.hpp"
#include "spinorss/petrov.hpp"

namespace spinorss {

/// Petrov type of a constant-component Weyl spinor by the multiplicity
/// partition of the binary quartic with coefficients
/// (Psi0, 4 Psi1, 6 Psi2, 4 Psi3, Psi4); a degree drop counts as a root
/// at infinity. Throws SymbolicCoefficient on symbolic components.
PetrovType petrov_type(const WeylSpinor& w);

/// Zero-pattern recognition of the standard forms, for symbolic input.
std::optional<PetrovType> recognize_standard_weyl(const WeylSpinor& w);

struct SegrePattern {
    PhiPattern kind;
    std::string label; // table row label family, e.g. "A1[(11)(1,1)]"
    std::vector<std::string> bindings;
};

/// First matching pattern among vacuum, A1[(11)(1,1)], A3[(11,2)],
/// perfect fluid, tachyon, A1[(111,1)] (Phi = 0 with Lambda), else other;
/// matching is exact polynomial equality of the pattern relations.
SegrePattern segre_pattern(const RicciSpinor& r, const CurvatureScalar& lambda);

enum class KernelWhich { S1, Mixed5, Both };

struct KernelBasisVector {
    std::string direction;             // e.g. "Phi11'" for a coordinate direction
    std::vector<Polynomial> coords;    // 9 entries, component order (a,b') row-major
};

struct KernelReport {
    PetrovType petrov;
    KernelWhich which;
    int dimension = 0;
    std::vector<KernelBasisVector> basis;
    std::vector<Polynomial> conditions_on_kernel; // normalized S2 on the kernel parametrization
    std::vector<Polynomial> genericity;           // non-monomial pivots assumed nonzero
};

/// Exact kernel of the selected linear-in-Phi condition set for a Weyl
/// spinor in standard form, over rational functions of its symbols;
/// cross-checked at `instantiation_checks` admissible rational
/// instantiations (InconsistentInstantiationRank on disagreement).
KernelReport phi_kernel(const WeylSpinor& w, const Polynomial::Table& table,
                        const std::vector<SymbolId>& assume_nonzero, KernelWhich which,
                        int instantiation_checks = 3);
KernelReport phi_kernel(PetrovType t, KernelWhich which, int instantiation_checks = 3);

struct ClassificationReport {
    PetrovType petrov;
    bool petrov_declared = false; // true when taken from a hint / standard form
    SegrePattern segre;
    PredicateVerdicts verdicts;
    /// Named nonzero residual generators, e.g. "conformal: 2*lam+psi2".
    std::vector<std::string> residuals;
};

ClassificationReport classify_case(const CurvatureSet& c, const Assumptions& assumptions,
                                   std::optional<PetrovType> declared = std::nullopt);

} // namespace spinorss
