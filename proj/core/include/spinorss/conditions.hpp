#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinorss/curvature.hpp"
#include "spinorss/linalg.hpp"

namespace spinorss {

enum class ConditionName {
    weyl_full_4,       // X_{AB(C}^G Psi_{DEF)G}
    weyl_contracted_6, // Psi^{GH}_{(AD} Psi_{EF)GH} - 2 Lambda Psi_{ADEF}
    mixed_5,           // Phi_{A'B'(C}^G Psi_{DEF)G}
    ricci_full_7,      // -2 X_{AB(C}^E Phi_{D)EC'D'} - 2 Phi_{AB(C'}^{E'} Phi_{D')E'CD}
    ricci_full_8,      // conjugate counterpart of ricci_full_7
    ricci_s1_9,        // Psi_{(ABC}^E Phi_{D)EC'D'}
    ricci_s2_10        // 4 L Phi_{ACC'D'} - Psi^{EF}_{AC} Phi_{EFC'D'} - 2 Phi^E_A^{F'}_(C' Phi_{D')F'CE}
};

const char* to_string(ConditionName n);

/// A named condition spinor with its independent components flattened in
/// ascending index order; vanishes iff every component is identically zero.
struct ConditionResidual {
    ConditionName name;
    GeneralSpinor spinor;
    std::vector<Polynomial> components;
    bool vanishes;
};

// Spinor-level builders (targets in canonical slot order, all lower).
GeneralSpinor weyl_full_spinor(const GeneralSpinor& x, const GeneralSpinor& psi);
GeneralSpinor weyl_contracted_spinor(const GeneralSpinor& psi, const Polynomial& lambda);
GeneralSpinor mixed_spinor(const GeneralSpinor& phi, const GeneralSpinor& psi);
GeneralSpinor ricci_full_spinor(const GeneralSpinor& x, const GeneralSpinor& phi);
GeneralSpinor ricci_full_primed_spinor(const GeneralSpinor& xbar, const GeneralSpinor& phi);
GeneralSpinor ricci_s1_spinor(const GeneralSpinor& psi4, const GeneralSpinor& phi);
GeneralSpinor ricci_s2_spinor(const GeneralSpinor& psi4, const GeneralSpinor& phi,
                              const Polynomial& lambda);

ConditionResidual cond_weyl_full(const CurvatureSet& c);
ConditionResidual cond_weyl_contracted(const CurvatureSet& c);
ConditionResidual cond_mixed(const CurvatureSet& c);
ConditionResidual cond_ricci_full(const CurvatureSet& c);
ConditionResidual cond_ricci_full_primed(const CurvatureSet& c);
ConditionResidual cond_ricci_S1(const CurvatureSet& c);
ConditionResidual cond_ricci_S2(const CurvatureSet& c);

/// Contraction of the full Weyl condition over its second and third
/// slots; a fixed rational multiple of the contracted condition (the
/// multiple is 3/4, pinned by the identity suite).
GeneralSpinor weyl_full_bc_contraction(const CurvatureSet& c);
/// The unique q with contraction == q * contracted-condition, when the
/// two spinors are exactly proportional.
std::optional<GaussianRational> proportionality_factor(const GeneralSpinor& a,
                                                       const GeneralSpinor& b);

/// AB-trace of the ricci_full_7 spinor: Box^{AB} Phi_{ABC'D'}, identically
/// zero for every curvature set.
GeneralSpinor ricci_full_trace(const CurvatureSet& c);

struct RankReport {
    int rank_a = 0;        // components of the first condition set
    int rank_b = 0;        // components of the replacement set
    int rank_union = 0;
    int count_a = 0;
    int count_b = 0;
    bool trace_zero = true; // only meaningful for the 7 -> (9),(10) report
    bool pass = false;
};

/// Rank claim: the 15 components of the full Weyl condition span the same
/// 5-dimensional space as the 5 components of the contracted condition.
RankReport verify_reduction_4_to_6(const CurvatureSet& symbolic);

/// Decomposition claim: span of the 27 components of the full Ricci
/// commutator equals the span of the 15 + 9 components of its symmetric
/// and trace parts, and the AB-trace vanishes identically.
RankReport verify_decomposition_7_to_9_10(const CurvatureSet& symbolic);

// ---------------------------------------------------------------------------
// Verdicts

struct Witness {
    std::map<SymbolId, GaussianRational> values; // primary symbols only
    std::string to_text(const SymbolTable& table) const;
};

/// One of: holds identically; holds exactly where the residual generators
/// vanish (an admissible point of the constraint surface exists); fails
/// generically. Non-holding verdicts carry a rational witness.
struct Verdict {
    enum class State { holds, holds_iff, fails_generically };
    State state = State::holds;
    std::vector<Polynomial> generators; // normalized residual generators
    std::optional<Witness> witness;

    bool holds_identically() const { return state == State::holds; }
};

struct PredicateVerdicts {
    Verdict conformal;
    Verdict ricci;
    Verdict semisymmetric;
};

/// Content-normalized, deduplicated residual generators; monomial factors
/// of assumed-nonzero symbols divided out.
std::vector<Polynomial> normalize_generators(const std::vector<Polynomial>& components,
                                             const Assumptions& assumptions);

Verdict evaluate_condition_set(const std::vector<Polynomial>& components,
                               const Assumptions& assumptions, const Polynomial::Table& table);

/// Conformal semi-symmetry is the vanishing of the mixed and contracted
/// Weyl conditions; Ricci semi-symmetry the vanishing of the two
/// symmetric Ricci commutator parts; semi-symmetry their conjunction.
PredicateVerdicts predicates(const CurvatureSet& c, const Assumptions& assumptions);

} // namespace spinorss
