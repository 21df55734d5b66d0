#pragma once

#include <utility>
#include <vector>

#include "spinorss/polynomial.hpp"

namespace spinorss {

/// Dense univariate polynomial over exact Gaussian rationals, ascending
/// degree, trailing zeros trimmed. The gcd runs on fraction-free
/// pseudo-division with Gaussian-integer content normalization.
class UnivariatePoly {
  public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<GaussianRational> coeffs);

    static UnivariatePoly constant(const GaussianRational& c) { return UnivariatePoly({c}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const GaussianRational& leading() const;
    GaussianRational coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : GaussianRational();
    }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    UnivariatePoly operator-() const;
    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    UnivariatePoly scaled(const GaussianRational& c) const;
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.c_ == b.c_; }

    UnivariatePoly derivative() const;

    /// Field division with remainder.
    static std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a,
                                                            const UnivariatePoly& b);
    /// Exact quotient; throws if the remainder is nonzero.
    UnivariatePoly exact_divide(const UnivariatePoly& b) const;
    bool divides(const UnivariatePoly& a) const;

    /// Primitive over the Gaussian integers with canonical leading unit.
    UnivariatePoly primitive() const;

    GaussianRational evaluate(const GaussianRational& x) const;

    std::string str(const std::string& var) const;

  private:
    void trim();
    std::vector<GaussianRational> c_;
};

/// Primitive-PRS gcd; result primitive with canonical leading unit.
UnivariatePoly univariate_gcd(UnivariatePoly a, UnivariatePoly b);

/// Yun decomposition: q = content * prod f_i^{m_i}, the f_i squarefree,
/// pairwise coprime, primitive with canonical leading unit.
struct SquarefreeFactor {
    UnivariatePoly factor;
    unsigned multiplicity;
};
struct SquarefreeDecomposition {
    GaussianRational content;
    std::vector<SquarefreeFactor> factors;
};
SquarefreeDecomposition squarefree_decompose(const UnivariatePoly& q);

/// Multivariate-container entry point: `q` must involve at most one
/// symbol (SymbolicCoefficient otherwise) and must not be identically
/// zero. Factors are returned over the same table and symbol.
struct PolynomialSquarefreeDecomposition {
    GaussianRational content;
    std::vector<std::pair<Polynomial, unsigned>> factors;
};
PolynomialSquarefreeDecomposition squarefree_decomposition(const Polynomial& q);

} // namespace spinorss
