#include "spinorss/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "spinorss/errors.hpp"

namespace spinorss {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::symbol(SymbolId id, unsigned exp) {
    Monomial m;
    if (exp > 0) m.factors_.push_back({id, exp});
    return m;
}

unsigned Monomial::exponent(SymbolId id) const {
    for (const auto& [s, e] : factors_)
        if (s == id) return e;
    return 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [s, e] : factors_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial out;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first) ++a;
        else if (b->first < a->first) ++b;
        else {
            out.factors_.push_back({a->first, std::min(a->second, b->second)});
            ++a;
            ++b;
        }
    }
    return out;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (const auto& [s, e] : o.factors_)
        if (exponent(s) < e) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!divisible_by(o)) throw Error("monomial division is not exact");
    Monomial out;
    for (const auto& [s, e] : factors_) {
        const unsigned q = e - o.exponent(s);
        if (q > 0) out.factors_.push_back({s, q});
    }
    return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
    // Lexicographic over symbol ids: first id with differing exponent decides.
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        const SymbolId sa = (i != a.factors_.end()) ? i->first : SymbolId(-1);
        const SymbolId sb = (j != b.factors_.end()) ? j->first : SymbolId(-1);
        if (sa == sb) {
            if (i->second != j->second) return i->second < j->second;
            ++i;
            ++j;
        } else if (sa < sb) {
            return false; // a has a positive exponent at a more significant id
        } else {
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Gaussian-integer content helpers

namespace {

struct GaussInt {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt gi_mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt gi_sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// round(a/b) to the nearest integer, b > 0
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_class num = 2 * a + b;
    mpz_class den = 2 * b;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

GaussInt gi_canonical_unit_rotate(GaussInt g) {
    // arg in [0, 90): re > 0 and im >= 0
    for (int k = 0; k < 4; ++k) {
        if (g.re > 0 && g.im >= 0) return g;
        g = {-g.im, g.re}; // multiply by i
    }
    return g; // zero
}

GaussInt gi_gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
        const mpz_class n = b.re * b.re + b.im * b.im;
        const GaussInt t = gi_mul(a, {b.re, -b.im});
        const GaussInt q{round_div(t.re, n), round_div(t.im, n)};
        const GaussInt r = gi_sub(a, gi_mul(q, b));
        a = b;
        b = r;
    }
    return gi_canonical_unit_rotate(a);
}

} // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::symbol(const Table& table, SymbolId id) {
    if (!table || id >= table->size()) throw Error("symbol id outside table");
    Polynomial p;
    p.table_ = table;
    p.set_term(Monomial::symbol(id), GaussianRational(1));
    return p;
}

Polynomial Polynomial::symbol(const Table& table, const std::string& name, SymbolKind kind) {
    if (!table) throw Error("null symbol table");
    return symbol(table, table->intern(name, kind));
}

void Polynomial::set_term(const Monomial& m, const GaussianRational& c) {
    if (!c.is_zero()) terms_[m] = c;
}

Polynomial::Table Polynomial::unify(const Table& a, const Table& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    throw Error("polynomials over different symbol tables");
}

GaussianRational Polynomial::constant_value() const {
    if (terms_.empty()) return GaussianRational();
    if (!is_constant()) throw SymbolicCoefficient("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

std::set<SymbolId> Polynomial::symbols() const {
    std::set<SymbolId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.factors()) out.insert(s);
    return out;
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    out.table_ = table_;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.table_ = Polynomial::unify(a.table_, b.table_);
    out.terms_ = a.terms_;
    for (const auto& [m, c] : b.terms_) {
        auto [it, inserted] = out.terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.table_ = Polynomial::unify(a.table_, b.table_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            const Monomial m = ma * mb;
            const GaussianRational c = ca * cb;
            auto [it, inserted] = out.terms_.emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial out;
    out.table_ = table_;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial out(1);
    out.table_ = table_;
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

Polynomial Polynomial::conj() const {
    Polynomial out;
    out.table_ = table_;
    for (const auto& [m, c] : terms_) {
        Monomial cm;
        for (const auto& [s, e] : m.factors())
            cm = cm * Monomial::symbol(table_->conjugate_of(s), e);
        auto [it, inserted] = out.terms_.emplace(cm, c.conj());
        if (!inserted) it->second += c.conj();
    }
    return out;
}

std::map<SymbolId, Polynomial> Polynomial::with_conjugates(const Table& table,
                                                           std::map<SymbolId, Polynomial> bindings) {
    std::map<SymbolId, Polynomial> extra;
    for (const auto& [s, v] : bindings) {
        const SymbolId c = table->conjugate_of(s);
        if (c != s && bindings.find(c) == bindings.end()) extra.emplace(c, v.conj());
    }
    bindings.merge(extra);
    return bindings;
}

Polynomial Polynomial::substitute(const std::map<SymbolId, Polynomial>& bindings) const {
    if (!table_ || bindings.empty()) return *this;
    for (const auto& [s, v] : bindings) {
        const SymbolInfo inf = table_->info(s);
        if (inf.kind == SymbolKind::real_valued) {
            if (!v.is_self_conjugate())
                throw ConjugationMismatch("real symbol '" + inf.name +
                                          "' bound to a non-self-conjugate value");
        } else {
            auto it = bindings.find(inf.conjugate);
            if (it == bindings.end())
                throw ConjugationMismatch("complex symbol '" + inf.name +
                                          "' bound without its conjugate partner");
            if (it->second != v.conj())
                throw ConjugationMismatch("conjugate pair '" + inf.name +
                                          "' bound to incoherent values");
        }
    }
    Polynomial out;
    out.table_ = table_;
    for (const auto& [m, c] : terms_) {
        Monomial unbound;
        Polynomial bound(1);
        bound.table_ = table_;
        for (const auto& [s, e] : m.factors()) {
            auto it = bindings.find(s);
            if (it == bindings.end()) unbound = unbound * Monomial::symbol(s, e);
            else bound *= it->second.pow(e);
        }
        Polynomial piece;
        piece.table_ = table_;
        piece.set_term(unbound, c);
        out += piece * bound;
    }
    return out;
}

GaussianRational Polynomial::evaluate(const std::map<SymbolId, GaussianRational>& point) const {
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational v = c;
        for (const auto& [s, e] : m.factors()) {
            GaussianRational base;
            if (auto it = point.find(s); it != point.end()) {
                base = it->second;
            } else {
                const SymbolId partner = table_->conjugate_of(s);
                auto jt = point.find(partner);
                if (jt == point.end())
                    throw Error("unbound symbol in evaluation: " + table_->name(s));
                base = jt->second.conj();
            }
            for (unsigned k = 0; k < e; ++k) v *= base;
        }
        acc += v;
    }
    return acc;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return Monomial::unit();
    auto it = terms_.begin();
    Monomial g = it->first;
    for (++it; it != terms_.end(); ++it) g = g.gcd(it->first);
    return g;
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
    Polynomial out;
    out.table_ = table_;
    for (const auto& [mm, c] : terms_) out.terms_.emplace(mm / m, c);
    return out;
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return *this;
    // Clear denominators.
    mpz_class lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.re().denominator().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), l.get_mpz_t(), c.im().denominator().get_mpz_t());
    }
    std::vector<GaussInt> ints;
    ints.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        const mpq_class re = c.re().raw() * lcm;
        const mpq_class im = c.im().raw() * lcm;
        ints.push_back({re.get_num(), im.get_num()});
    }
    // Gaussian-integer content.
    GaussInt g{0, 0};
    for (const auto& z : ints) g = gi_gcd(g, z);
    // Rotate so the leading (lex-greatest) coefficient is canonical.
    const GaussInt lead = [&] {
        std::size_t idx = ints.size() - 1; // terms_ ascends; last term is leading
        const mpz_class n = g.re * g.re + g.im * g.im;
        const GaussInt t = gi_mul(ints[idx], {g.re, -g.im});
        return GaussInt{t.re / n, t.im / n};
    }();
    GaussInt unit{1, 0};
    GaussInt rotated = lead;
    for (int k = 0; k < 4 && !(rotated.re > 0 && rotated.im >= 0); ++k) {
        rotated = {-rotated.im, rotated.re};
        unit = gi_mul(unit, {mpz_class(0), mpz_class(1)});
    }
    Polynomial out;
    out.table_ = table_;
    const mpz_class n = g.re * g.re + g.im * g.im;
    std::size_t i = 0;
    for (const auto& [m, c] : terms_) {
        const GaussInt t = gi_mul(gi_mul(ints[i++], {g.re, -g.im}), unit);
        out.terms_.emplace(m, GaussianRational(BigRational(mpq_class(t.re, n)),
                                               BigRational(mpq_class(t.im, n))));
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const GaussianRational& c = it->second;
        std::string mono;
        for (const auto& [s, e] : m.factors()) {
            if (!mono.empty()) mono += "*";
            mono += table_->name(s);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string term;
        if (mono.empty()) {
            term = c.str();
        } else if (c.is_one()) {
            term = mono;
        } else if ((-c).is_one()) {
            term = "-" + mono;
        } else if (c.is_real() || c.re().is_zero()) {
            term = c.str() + "*" + mono;
        } else {
            term = "(" + c.str() + ")*" + mono;
        }
        if (out.empty()) out = term;
        else if (!term.empty() && term[0] == '-') out += term;
        else out += "+" + term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

bool is_identically_zero(const Polynomial& p) { return p.is_zero(); }

} // namespace spinorss
