#include "spinorss/curvature.hpp"

#include <bit>

#include "spinorss/errors.hpp"

namespace spinorss {

namespace {
int popcount4(std::size_t f) { return std::popcount(unsigned(f) & 0xFu); }
} // namespace

// ---------------------------------------------------------------------------
// WeylSpinor

bool WeylSpinor::is_zero() const {
    for (const auto& p : psi)
        if (!p.is_zero()) return false;
    return true;
}

GeneralSpinor WeylSpinor::expand() const {
    GeneralSpinor s(std::vector<IndexSlot>(4, lower_unprimed()));
    for (std::size_t f = 0; f < 16; ++f) s.set(f, psi[popcount4(f)]);
    return s;
}

WeylSpinor WeylSpinor::from_spinor(const GeneralSpinor& s) {
    if (s.slots() != std::vector<IndexSlot>(4, lower_unprimed()))
        throw SignatureMismatch("Weyl spinor expects 4 lower unprimed slots");
    WeylSpinor w;
    for (std::size_t f = 0; f < 16; ++f) {
        const int n = popcount4(f);
        if (w.psi[n].is_zero()) w.psi[n] = s.at(f);
        else if (w.psi[n] != s.at(f))
            throw SignatureMismatch("spinor is not totally symmetric");
    }
    // re-check the zero entries too
    for (std::size_t f = 0; f < 16; ++f)
        if (s.at(f) != w.psi[popcount4(f)])
            throw SignatureMismatch("spinor is not totally symmetric");
    return w;
}

// ---------------------------------------------------------------------------
// RicciSpinor

bool RicciSpinor::is_zero() const {
    for (const auto& row : phi)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

void RicciSpinor::check_hermitian() const {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (phi[a][b] != phi[b][a].conj())
                throw HermiticityError("Phi[" + std::to_string(a) + "][" + std::to_string(b) +
                                       "] != conj(Phi[" + std::to_string(b) + "][" +
                                       std::to_string(a) + "])");
}

GeneralSpinor RicciSpinor::expand() const {
    GeneralSpinor s({lower_unprimed(), lower_unprimed(), lower_primed(), lower_primed()});
    for (std::size_t f = 0; f < 16; ++f) {
        const int a = int((f >> 3) & 1) + int((f >> 2) & 1);
        const int b = int((f >> 1) & 1) + int(f & 1);
        s.set(f, phi[a][b]);
    }
    return s;
}

RicciSpinor RicciSpinor::from_spinor(const GeneralSpinor& s) {
    if (s.slots() != std::vector<IndexSlot>{lower_unprimed(), lower_unprimed(), lower_primed(),
                                            lower_primed()})
        throw SignatureMismatch("Ricci spinor expects slots [A,B,A',B']");
    RicciSpinor r;
    bool seen[3][3] = {};
    for (std::size_t f = 0; f < 16; ++f) {
        const int a = int((f >> 3) & 1) + int((f >> 2) & 1);
        const int b = int((f >> 1) & 1) + int(f & 1);
        if (!seen[a][b]) {
            r.phi[a][b] = s.at(f);
            seen[a][b] = true;
        } else if (r.phi[a][b] != s.at(f)) {
            throw SignatureMismatch("spinor is not symmetric within its index pairs");
        }
    }
    return r;
}

void CurvatureScalar::check_real() const {
    if (!lambda.is_self_conjugate())
        throw ConjugationMismatch("Lambda must be self-conjugate: " + lambda.str());
}

void CurvatureSet::validate() const {
    ricci.check_hermitian();
    scalar.check_real();
}

// ---------------------------------------------------------------------------
// DyadTransform

DyadTransform::DyadTransform(const DyadMatrix& m) : m_(m) {
    const GaussianRational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (!det.is_one()) throw NotUnimodular("dyad transform determinant is " + det.str());
}

DyadTransform DyadTransform::identity() {
    return DyadTransform({{{GaussianRational(1), GaussianRational(0)},
                           {GaussianRational(0), GaussianRational(1)}}});
}

DyadMatrix DyadTransform::conj_matrix() const {
    return {{{m_[0][0].conj(), m_[0][1].conj()}, {m_[1][0].conj(), m_[1][1].conj()}}};
}

DyadTransform DyadTransform::compose(const DyadTransform& inner) const {
    DyadMatrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i][j] = m_[i][0] * inner.m_[0][j] + m_[i][1] * inner.m_[1][j];
    return DyadTransform(out);
}

// ---------------------------------------------------------------------------
// X spinor and the Box action

GeneralSpinor build_X(const CurvatureSet& c) {
    const GeneralSpinor epseps = GeneralSpinor::outer(GeneralSpinor::epsilon(),
                                                      GeneralSpinor::epsilon());
    // outer(eps,eps)[p,q,r,s] = eps_pq eps_rs
    // eps_AC eps_BD: A<-0, C<-1, B<-2, D<-3
    const GeneralSpinor t1 = epseps.permute_slots({0, 2, 1, 3});
    // eps_AD eps_BC: A<-0, D<-1, B<-2, C<-3
    const GeneralSpinor t2 = epseps.permute_slots({0, 2, 3, 1});
    return c.weyl.expand() + (t1 + t2).scaled(c.scalar.lambda);
}

namespace {

// One Leibniz term: op4 is a 4-slot all-lower spinor [P,Q,R,S]; S gets
// raised and contracted against target slot k, R takes that slot's place,
// the operator pair [P,Q] lands at the front.
GeneralSpinor leibniz_term(const GeneralSpinor& op4, const GeneralSpinor& target, std::size_t k) {
    GeneralSpinor t = GeneralSpinor::outer(op4.raise(3), target); // [P,Q,R,S^, t0..]
    t = t.contract(3, 4 + k);                                     // [P,Q,R, t minus k]
    const std::size_t n = target.slot_count();
    std::vector<std::size_t> perm;
    perm.reserve(n + 2);
    perm.push_back(0);
    perm.push_back(1);
    for (std::size_t j = 0; j < n; ++j) {
        if (j < k) perm.push_back(3 + j);
        else if (j == k) perm.push_back(2);
        else perm.push_back(2 + j);
    }
    return t.permute_slots(perm);
}

} // namespace

GeneralSpinor box_on(const CurvatureSet& c, const GeneralSpinor& target, BoxKind kind) {
    std::size_t unprimed_count = 0;
    bool primed_seen = false;
    for (const IndexSlot& s : target.slots()) {
        if (s.variance != Variance::lower)
            throw UpperSlot("box_on expects an all-lower target");
        if (s.primedness == Primedness::unprimed) {
            if (primed_seen)
                throw SignatureMismatch("box_on expects canonical slot order (unprimed block first)");
            ++unprimed_count;
        } else {
            primed_seen = true;
        }
    }

    const Primedness op_p =
        kind == BoxKind::unprimed_pair ? Primedness::unprimed : Primedness::primed;
    const GeneralSpinor x = build_X(c);
    const GeneralSpinor xbar = x.conj();
    const GeneralSpinor phi = c.ricci.expand();               // [A,B,A',B']
    const GeneralSpinor phi_swapped = phi.permute_slots({2, 3, 0, 1}); // [A',B',A,B]

    std::vector<IndexSlot> out_slots(2, IndexSlot{op_p, Variance::lower});
    out_slots.insert(out_slots.end(), target.slots().begin(), target.slots().end());
    GeneralSpinor acc(out_slots);

    for (std::size_t k = 0; k < target.slot_count(); ++k) {
        const bool slot_primed = target.slots()[k].primedness == Primedness::primed;
        const GeneralSpinor* op = nullptr;
        if (kind == BoxKind::unprimed_pair) {
            op = slot_primed ? &phi : &x; // Box_AB tau_C' = -Phi_ABC'^E' tau_E'
        } else {
            op = slot_primed ? &xbar : &phi_swapped;
        }
        acc = acc + leibniz_term(*op, target, k);
    }
    acc = acc.scaled(GaussianRational(-1));

    if (kind == BoxKind::primed_pair) {
        // move the operator pair to the front of the primed block
        const std::size_t n = target.slot_count();
        std::vector<std::size_t> perm;
        perm.reserve(n + 2);
        for (std::size_t j = 0; j < unprimed_count; ++j) perm.push_back(2 + j);
        perm.push_back(0);
        perm.push_back(1);
        for (std::size_t j = unprimed_count; j < n; ++j) perm.push_back(2 + j);
        acc = acc.permute_slots(perm);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Standard forms

StandardWeyl standard_weyl(PetrovType t, const Polynomial::Table& table,
                           const WeylNaming& naming) {
    auto sym = [&](int n) {
        const SymbolKind kind = (n == 2 && naming.psi2_real) ? SymbolKind::real_valued
                                                             : SymbolKind::complex_valued;
        return Polynomial::symbol(table, naming.prefix + std::to_string(n), kind);
    };
    StandardWeyl out;
    auto mark = [&](const Polynomial& p) {
        out.assume_nonzero.push_back(*p.symbols().begin());
        return p;
    };
    switch (t) {
        case PetrovType::O:
            break;
        case PetrovType::N:
            out.weyl.psi[4] = mark(sym(4));
            break;
        case PetrovType::III:
            out.weyl.psi[3] = mark(sym(3));
            break;
        case PetrovType::D:
            out.weyl.psi[2] = mark(sym(2));
            break;
        case PetrovType::II:
            out.weyl.psi[2] = mark(sym(2));
            out.weyl.psi[4] = mark(sym(4));
            break;
        case PetrovType::I: {
            const Polynomial p0 = mark(sym(0));
            out.weyl.psi[0] = p0;
            out.weyl.psi[2] = sym(2);
            out.weyl.psi[4] = p0;
            break;
        }
    }
    return out;
}

StandardPhi standard_phi(PhiPattern pattern, const Polynomial::Table& table) {
    StandardPhi out;
    auto real_sym = [&](const std::string& n) {
        return Polynomial::symbol(table, n, SymbolKind::real_valued);
    };
    auto complex_sym = [&](const std::string& n) {
        return Polynomial::symbol(table, n, SymbolKind::complex_valued);
    };
    auto mark = [&](const Polynomial& p) {
        out.assume_nonzero.push_back(*p.symbols().begin());
        return p;
    };
    switch (pattern) {
        case PhiPattern::vacuum:
            break;
        case PhiPattern::a1_11_11:
            out.ricci.phi[1][1] = mark(real_sym("p11"));
            out.constraints = {"only Phi11' nonzero"};
            break;
        case PhiPattern::a3_11_2:
            out.ricci.phi[2][2] = mark(real_sym("p22"));
            out.constraints = {"only Phi22' nonzero"};
            break;
        case PhiPattern::perfect_fluid: {
            const Polynomial p11 = mark(real_sym("p11"));
            out.ricci.phi[0][0] = p11.scaled(GaussianRational(2));
            out.ricci.phi[1][1] = p11;
            out.ricci.phi[2][2] = p11.scaled(GaussianRational(2));
            out.constraints = {"Phi00' = 2*Phi11'", "Phi22' = 2*Phi11'"};
            break;
        }
        case PhiPattern::tachyon: {
            const Polynomial p11 = mark(real_sym("p11"));
            out.ricci.phi[0][0] = p11.scaled(GaussianRational(-2));
            out.ricci.phi[1][1] = p11;
            out.ricci.phi[2][2] = p11.scaled(GaussianRational(-2));
            out.constraints = {"Phi00' = -2*Phi11'", "Phi22' = -2*Phi11'"};
            break;
        }
        case PhiPattern::generic: {
            out.ricci.phi[0][0] = real_sym("p00");
            out.ricci.phi[1][1] = real_sym("p11");
            out.ricci.phi[2][2] = real_sym("p22");
            const Polynomial p01 = complex_sym("p01");
            const Polynomial p02 = complex_sym("p02");
            const Polynomial p12 = complex_sym("p12");
            out.ricci.phi[0][1] = p01;
            out.ricci.phi[1][0] = p01.conj();
            out.ricci.phi[0][2] = p02;
            out.ricci.phi[2][0] = p02.conj();
            out.ricci.phi[1][2] = p12;
            out.ricci.phi[2][1] = p12.conj();
            break;
        }
        default:
            throw UnknownPattern("unsupported Phi pattern");
    }
    out.ricci.check_hermitian();
    return out;
}

CurvatureSet dyad_transform(const CurvatureSet& c, const DyadTransform& t) {
    const DyadMatrix m = t.matrix();
    const DyadMatrix mc = t.conj_matrix();
    CurvatureSet out;
    out.table = c.table;
    out.weyl = WeylSpinor::from_spinor(transform_slots(c.weyl.expand(), m, mc));
    out.ricci = RicciSpinor::from_spinor(transform_slots(c.ricci.expand(), m, mc));
    out.ricci.check_hermitian();
    out.scalar = c.scalar;
    return out;
}

} // namespace spinorss
