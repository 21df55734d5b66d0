#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "spinorss/gaussian_rational.hpp"
#include "spinorss/symbol_table.hpp"

namespace spinorss {

/// Power product over a symbol table: sorted (symbol, exponent>0) pairs.
/// Ordered lexicographically over symbol ids (lower id more significant).
class Monomial {
  public:
    Monomial() = default;
    static Monomial unit() { return Monomial(); }
    static Monomial symbol(SymbolId id, unsigned exp = 1);

    bool is_unit() const { return factors_.empty(); }
    unsigned exponent(SymbolId id) const;
    unsigned total_degree() const;
    const std::vector<std::pair<SymbolId, unsigned>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const;
    /// Componentwise min of exponents.
    Monomial gcd(const Monomial& o) const;
    /// Exact quotient; throws if not divisible.
    Monomial operator/(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator<(const Monomial& a, const Monomial& b);

  private:
    std::vector<std::pair<SymbolId, unsigned>> factors_;
};

/// Multivariate polynomial over Gaussian rationals with conjugation-aware
/// symbols. Terms are kept normalized: no zero coefficients. Values are
/// immutable after construction; every operation is a pure function.
class Polynomial {
  public:
    using Table = std::shared_ptr<SymbolTable>;
    using TermMap = std::map<Monomial, GaussianRational>;

    Polynomial() = default; // zero
    Polynomial(long n) { set_term(Monomial::unit(), GaussianRational(n)); }
    explicit Polynomial(const GaussianRational& c) { set_term(Monomial::unit(), c); }
    static Polynomial constant(const GaussianRational& c) { return Polynomial(c); }
    static Polynomial symbol(const Table& table, SymbolId id);
    static Polynomial symbol(const Table& table, const std::string& name, SymbolKind kind);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
    /// Throws unless is_constant().
    GaussianRational constant_value() const;
    const TermMap& terms() const { return terms_; }
    const Table& table() const { return table_; }
    std::set<SymbolId> symbols() const;
    GaussianRational coefficient(const Monomial& m) const;
    unsigned total_degree() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const GaussianRational& c) const;
    Polynomial pow(unsigned k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Coefficients conjugated, every symbol swapped with its partner.
    /// An involution and a ring homomorphism.
    Polynomial conj() const;
    bool is_self_conjugate() const { return *this == conj(); }

    /// Exact substitution. Bindings must respect conjugation: a bound
    /// complex symbol requires its partner bound to the conjugate value,
    /// a bound real symbol requires a self-conjugate value. Throws
    /// ConjugationMismatch otherwise.
    Polynomial substitute(const std::map<SymbolId, Polynomial>& bindings) const;

    /// Adds the missing partner bindings (partner -> conj(value)).
    static std::map<SymbolId, Polynomial> with_conjugates(const Table& table,
                                                          std::map<SymbolId, Polynomial> bindings);

    /// Full evaluation; `point` binds primary symbols, partners take the
    /// conjugate value. Throws on an unbound symbol.
    GaussianRational evaluate(const std::map<SymbolId, GaussianRational>& point) const;

    /// GCD of all monomials (min exponents).
    Monomial monomial_content() const;
    Polynomial divided_by(const Monomial& m) const;

    /// Canonical associate: coefficients scaled to content-free Gaussian
    /// integers, leading coefficient rotated to re > 0 (or re == 0, im > 0).
    Polynomial normalized() const;

    /// Deterministic scalar syntax, re-parseable: "2*lam*p11+psi2*p11".
    std::string str() const;

  private:
    void set_term(const Monomial& m, const GaussianRational& c);
    static Table unify(const Table& a, const Table& b);

    Table table_; // may be null for constants
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

bool is_identically_zero(const Polynomial& p);

} // namespace spinorss
