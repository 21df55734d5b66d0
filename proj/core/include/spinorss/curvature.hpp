#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinorss/petrov.hpp"
#include "spinorss/spinor.hpp"

namespace spinorss {

/// Weyl spinor by its five components; psi[n] is the component with n
/// indices equal to 1. Expands to a totally symmetric 4-index spinor.
struct WeylSpinor {
    std::array<Polynomial, 5> psi;

    bool is_zero() const;
    GeneralSpinor expand() const; // 4 lower unprimed slots
    /// Extracts the five components; throws unless the spinor is a
    /// totally symmetric (4 lower unprimed) spinor.
    static WeylSpinor from_spinor(const GeneralSpinor& s);
};

/// Trace-free Ricci spinor by its 3x3 component matrix phi[a][b'],
/// a ones among the unprimed pair, b' among the primed pair.
/// Hermitian: phi[a][b] == conj(phi[b][a]).
struct RicciSpinor {
    std::array<std::array<Polynomial, 3>, 3> phi;

    bool is_zero() const;
    void check_hermitian() const; // throws HermiticityError
    GeneralSpinor expand() const; // slots [A,B,A',B'] all lower
    static RicciSpinor from_spinor(const GeneralSpinor& s);
};

struct CurvatureScalar {
    Polynomial lambda;
    void check_real() const; // throws ConjugationMismatch unless self-conjugate
};

/// The input datum of every condition: (Psi, Phi, Lambda) over one table.
struct CurvatureSet {
    WeylSpinor weyl;
    RicciSpinor ricci;
    CurvatureScalar scalar;
    Polynomial::Table table;

    void validate() const;
};

/// Unimodular 2x2 change of spinor dyad (SL(2,C) with exact entries).
class DyadTransform {
  public:
    explicit DyadTransform(const DyadMatrix& m); // NotUnimodular unless det == 1
    static DyadTransform identity();
    const DyadMatrix& matrix() const { return m_; }
    DyadMatrix conj_matrix() const;
    DyadTransform compose(const DyadTransform& inner) const; // this after inner

  private:
    DyadMatrix m_;
};

/// X_ABCD = Psi_ABCD + Lambda (eps_AC eps_BD + eps_AD eps_BC);
/// symmetric in AB, in CD, and under pair exchange.
GeneralSpinor build_X(const CurvatureSet& c);

enum class BoxKind { unprimed_pair, primed_pair };

/// Algebraic commutator action on an all-lower spinor whose slots are in
/// canonical order (unprimed block then primed block). Leibniz sum over
/// the target's slots; each unprimed slot contributes -X_{AB.}{}^E (the
/// conjugate X for the primed pair), each primed slot the Phi term. The
/// operator pair is prepended at the front of its primedness block.
GeneralSpinor box_on(const CurvatureSet& c, const GeneralSpinor& target, BoxKind kind);

struct WeylNaming {
    std::string prefix = "psi";
    bool psi2_real = false; // used by families constrained to Lambda = -1/2 Psi2
};

struct StandardWeyl {
    WeylSpinor weyl;
    std::vector<SymbolId> assume_nonzero;
};

/// Standard-frame Weyl component patterns per Petrov type:
/// D (0,0,psi2,0,0), N (0,0,0,0,psi4), III (0,0,0,psi3,0),
/// II (0,0,psi2,0,psi4), I (psi0,0,psi2,0,psi0), O all zero.
StandardWeyl standard_weyl(PetrovType t, const Polynomial::Table& table,
                           const WeylNaming& naming = {});

enum class PhiPattern {
    vacuum,        // Phi = 0
    a1_11_11,      // A1[(11)(1,1)]: only Phi11'
    a3_11_2,       // A3[(11,2)]: only Phi22'
    perfect_fluid, // A1[(111),1]: Phi00' = Phi22' = 2 Phi11'
    tachyon,       // A1[1(11,1)]: Phi00' = Phi22' = -2 Phi11'
    generic        // all nine components symbolic
};

struct StandardPhi {
    RicciSpinor ricci;
    std::vector<std::string> constraints; // the pattern's equality relations
    std::vector<SymbolId> assume_nonzero;
};

StandardPhi standard_phi(PhiPattern pattern, const Polynomial::Table& table);

/// Every unprimed slot transformed by m, every primed slot by conj(m);
/// Lambda unchanged. Hermiticity of Phi is preserved exactly.
CurvatureSet dyad_transform(const CurvatureSet& c, const DyadTransform& t);

} // namespace spinorss
