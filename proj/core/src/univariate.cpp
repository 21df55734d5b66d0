#include "spinorss/univariate.hpp"

#include <gmpxx.h>

#include "spinorss/errors.hpp"

namespace spinorss {

namespace {

struct GaussInt {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt gi_mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, num = 2 * a + b, den = 2 * b;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

GaussInt gi_gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
        const mpz_class n = b.re * b.re + b.im * b.im;
        const GaussInt t = gi_mul(a, {b.re, -b.im});
        const GaussInt q{round_div(t.re, n), round_div(t.im, n)};
        const GaussInt r{a.re - (q.re * b.re - q.im * b.im), a.im - (q.re * b.im + q.im * b.re)};
        a = b;
        b = r;
    }
    for (int k = 0; k < 4 && !(a.re > 0 && a.im >= 0); ++k) a = {-a.im, a.re};
    return a;
}

} // namespace

UnivariatePoly::UnivariatePoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void UnivariatePoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const GaussianRational& UnivariatePoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

UnivariatePoly UnivariatePoly::operator-() const {
    std::vector<GaussianRational> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(-c);
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) { return a + (-b); }

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::scaled(const GaussianRational& k) const {
    std::vector<GaussianRational> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c * k);
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussianRational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * GaussianRational(long(i));
    return UnivariatePoly(std::move(out));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& a,
                                                                 const UnivariatePoly& b) {
    if (b.is_zero()) throw Error("univariate division by zero");
    std::vector<GaussianRational> rem = a.c_;
    if (a.degree() < b.degree()) return {UnivariatePoly{}, a};
    std::vector<GaussianRational> quo(a.degree() - b.degree() + 1);
    const GaussianRational inv = GaussianRational(1) / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const GaussianRational q = rem[k + b.degree()] * inv;
        quo[k] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] = rem[k + j] - q * b.c_[j];
    }
    return {UnivariatePoly(std::move(quo)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly UnivariatePoly::exact_divide(const UnivariatePoly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw Error("univariate division is not exact");
    return q;
}

bool UnivariatePoly::divides(const UnivariatePoly& a) const {
    return divmod(a, *this).second.is_zero();
}

UnivariatePoly UnivariatePoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class lcm = 1;
    for (const auto& c : c_) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.re().denominator().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), l.get_mpz_t(), c.im().denominator().get_mpz_t());
    }
    std::vector<GaussInt> ints;
    ints.reserve(c_.size());
    for (const auto& c : c_) {
        const mpq_class re = c.re().raw() * lcm;
        const mpq_class im = c.im().raw() * lcm;
        ints.push_back({re.get_num(), im.get_num()});
    }
    GaussInt g{0, 0};
    for (const auto& z : ints) g = gi_gcd(g, z);
    const mpz_class n = g.re * g.re + g.im * g.im;
    std::vector<GaussInt> divided;
    divided.reserve(ints.size());
    for (const auto& z : ints) {
        const GaussInt t = gi_mul(z, {g.re, -g.im});
        divided.push_back({t.re / n, t.im / n});
    }
    GaussInt lead = divided.back();
    GaussInt unit{1, 0};
    for (int k = 0; k < 4 && !(lead.re > 0 && lead.im >= 0); ++k) {
        lead = {-lead.im, lead.re};
        unit = gi_mul(unit, {mpz_class(0), mpz_class(1)});
    }
    std::vector<GaussianRational> out;
    out.reserve(divided.size());
    for (const auto& z : divided) {
        const GaussInt t = gi_mul(z, unit);
        out.push_back({BigRational(mpq_class(t.re)), BigRational(mpq_class(t.im))});
    }
    return UnivariatePoly(std::move(out));
}

GaussianRational UnivariatePoly::evaluate(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UnivariatePoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        std::string term;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        const GaussianRational& c = c_[k];
        if (mono.empty()) term = c.str();
        else if (c.is_one()) term = mono;
        else if ((-c).is_one()) term = "-" + mono;
        else if (c.is_real() || c.re().is_zero()) term = c.str() + "*" + mono;
        else term = "(" + c.str() + ")*" + mono;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += term;
        else out += "+" + term;
    }
    return out;
}

UnivariatePoly univariate_gcd(UnivariatePoly a, UnivariatePoly b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    UnivariatePoly f = a.primitive();
    UnivariatePoly g = b.primitive();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // fraction-free pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g
        UnivariatePoly r = f.scaled(g.leading().is_one()
                                        ? GaussianRational(1)
                                        : [&] {
                                              GaussianRational k(1);
                                              for (int i = 0; i <= f.degree() - g.degree(); ++i)
                                                  k *= g.leading();
                                              return k;
                                          }());
        r = UnivariatePoly::divmod(r, g).second;
        f = g;
        g = r.primitive();
    }
    return f.primitive();
}

SquarefreeDecomposition squarefree_decompose(const UnivariatePoly& q) {
    if (q.is_zero()) throw Error("squarefree decomposition of the zero polynomial");
    SquarefreeDecomposition out;
    if (q.degree() == 0) {
        out.content = q.leading();
        return out;
    }
    const UnivariatePoly f = q.primitive();
    // Yun's algorithm.
    UnivariatePoly g = univariate_gcd(f, f.derivative());
    UnivariatePoly w = f.exact_divide(g);
    UnivariatePoly y = f.derivative().exact_divide(g);
    unsigned i = 1;
    UnivariatePoly rebuilt = UnivariatePoly::constant(GaussianRational(1));
    while (w.degree() > 0) {
        const UnivariatePoly z = y - w.derivative();
        const UnivariatePoly h = univariate_gcd(w, z);
        if (h.degree() > 0) {
            out.factors.push_back({h, i});
            for (unsigned k = 0; k < i; ++k) rebuilt = rebuilt * h;
        }
        w = w.exact_divide(h);
        y = z.exact_divide(h);
        ++i;
    }
    // content: q = content * prod f_i^{m_i}
    out.content = q.leading() / rebuilt.leading();
    return out;
}

PolynomialSquarefreeDecomposition squarefree_decomposition(const Polynomial& q) {
    if (q.is_zero()) throw Error("squarefree decomposition of the zero polynomial");
    const auto syms = q.symbols();
    if (syms.size() > 1)
        throw SymbolicCoefficient("polynomial is not univariate: " + q.str());
    PolynomialSquarefreeDecomposition out;
    if (syms.empty()) {
        out.content = q.constant_value();
        return out;
    }
    const SymbolId var = *syms.begin();
    std::vector<GaussianRational> coeffs;
    for (const auto& [m, c] : q.terms()) {
        const unsigned e = m.exponent(var);
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e] = c;
    }
    const auto dec = squarefree_decompose(UnivariatePoly(std::move(coeffs)));
    out.content = dec.content;
    for (const auto& [f, mult] : dec.factors) {
        Polynomial p;
        for (int k = 0; k <= f.degree(); ++k) {
            if (f.coeff(k).is_zero()) continue;
            Polynomial term = Polynomial(f.coeff(k));
            if (k > 0) term *= Polynomial::symbol(q.table(), var).pow(unsigned(k));
            p += term;
        }
        out.factors.emplace_back(p, mult);
    }
    return out;
}

} // namespace spinorss
