#include "spinorss/linalg.hpp"

#include <algorithm>

#include "spinorss/errors.hpp"
#include "spinorss/random.hpp"

namespace spinorss {

int rank(QMatrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const GaussianRational inv = GaussianRational(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const GaussianRational f = m[r][col];
            for (std::size_t j = col; j < cols; ++j)
                m[r][j] = m[r][j] - f * m[row][j];
        }
        ++row;
    }
    return int(row);
}

std::vector<QVector> kernel(const QMatrix& m_in) {
    if (m_in.empty()) return {};
    QMatrix m = m_in;
    const std::size_t cols = m[0].size();
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const GaussianRational inv = GaussianRational(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const GaussianRational f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] = m[r][j] - f * m[row][j];
        }
        pivot_of_col[col] = long(row);
        ++row;
    }
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        QVector v(cols);
        v[free] = GaussianRational(1);
        for (std::size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = -m[std::size_t(pivot_of_col[col])][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix coefficient_matrix(const std::vector<Polynomial>& polys) {
    std::vector<Monomial> monos;
    {
        std::set<Monomial> seen;
        for (const auto& p : polys)
            for (const auto& [m, c] : p.terms()) seen.insert(m);
        monos.assign(seen.begin(), seen.end());
    }
    QMatrix rows;
    rows.reserve(polys.size());
    for (const auto& p : polys) {
        QVector row(monos.size());
        for (std::size_t j = 0; j < monos.size(); ++j) row[j] = p.coefficient(monos[j]);
        rows.push_back(std::move(row));
    }
    if (monos.empty()) rows.assign(polys.size(), QVector(1));
    return rows;
}

int coefficient_rank(const std::vector<Polynomial>& polys) {
    return rank(coefficient_matrix(polys));
}

int instantiation_rank(const std::vector<Polynomial>& polys, int points, std::uint64_t seed) {
    if (polys.empty()) return 0;
    Polynomial::Table table;
    for (const auto& p : polys)
        if (p.table()) {
            table = p.table();
            break;
        }
    SplitMix64 rng(seed);
    QMatrix m(polys.size(), QVector(std::size_t(points)));
    for (int j = 0; j < points; ++j) {
        std::map<SymbolId, GaussianRational> point;
        if (table) point = random_point(*table, {}, rng);
        for (std::size_t i = 0; i < polys.size(); ++i) m[i][std::size_t(j)] = polys[i].evaluate(point);
    }
    return rank(std::move(m));
}

// ---------------------------------------------------------------------------
// Kernel over the rational-function field

namespace {

/// Minimal rational function num/den; den never zero. Reduced only by
/// monomial and rational content, never by polynomial gcd.
struct RatFunc {
    Polynomial num;
    Polynomial den = Polynomial(1);

    bool is_zero() const { return num.is_zero(); }

    void reduce() {
        if (num.is_zero()) {
            den = Polynomial(1);
            return;
        }
        const Monomial g = num.monomial_content().gcd(den.monomial_content());
        if (!g.is_unit()) {
            num = num.divided_by(g);
            den = den.divided_by(g);
        }
        // scale so den is content-normalized
        const Polynomial dn = den.normalized();
        if (!den.is_zero()) {
            // find the rational ratio den/dn on the leading term
            const auto& lead = std::prev(dn.terms().end())->first;
            const GaussianRational ratio = den.coefficient(lead) / dn.coefficient(lead);
            den = dn;
            num = num.scaled(GaussianRational(1) / ratio);
        }
    }
};

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
    RatFunc r{a.num * b.num, a.den * b.den};
    r.reduce();
    return r;
}

RatFunc rf_div(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error("rational function division by zero");
    RatFunc r{a.num * b.den, a.den * b.num};
    r.reduce();
    return r;
}

RatFunc rf_sub(const RatFunc& a, const RatFunc& b) {
    RatFunc r{a.num * b.den - b.num * a.den, a.den * b.den};
    r.reduce();
    return r;
}

bool is_safe_pivot(const Polynomial& p, const Assumptions& assumptions) {
    if (p.terms().size() != 1) return false;
    for (const auto& [s, e] : p.terms().begin()->first.factors()) {
        if (!assumptions.nonzero.count(s)) return false;
    }
    return true;
}

} // namespace

PolyKernel poly_kernel(const std::vector<std::vector<Polynomial>>& rows,
                       const Assumptions& assumptions) {
    PolyKernel out;
    if (rows.empty()) return out;
    const std::size_t cols = rows[0].size();
    std::vector<std::vector<RatFunc>> m(rows.size(), std::vector<RatFunc>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = RatFunc{rows[i][j]};

    std::vector<long> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        // prefer pivots that are monomials in assumed-nonzero symbols
        std::size_t pivot = m.size();
        for (std::size_t r = row; r < m.size(); ++r) {
            if (m[r][col].is_zero()) continue;
            if (is_safe_pivot(m[r][col].num, assumptions)) {
                pivot = r;
                break;
            }
            if (pivot == m.size()) pivot = r;
        }
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        if (!is_safe_pivot(m[row][col].num, assumptions))
            out.genericity.push_back(m[row][col].num.normalized());
        const RatFunc p = m[row][col];
        for (std::size_t j = 0; j < cols; ++j) m[row][j] = rf_div(m[row][j], p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const RatFunc f = m[r][col];
            for (std::size_t j = 0; j < cols; ++j)
                m[r][j] = rf_sub(m[r][j], rf_mul(f, m[row][j]));
        }
        pivot_of_col[col] = long(row);
        ++row;
    }

    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        // v[free] = 1, v[pivot col] = -entry(pivot row, free); clear denominators
        std::vector<RatFunc> v(cols);
        v[free] = RatFunc{Polynomial(1)};
        for (std::size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0) {
                RatFunc e = m[std::size_t(pivot_of_col[col])][free];
                e.num = -e.num;
                v[col] = e;
            }
        Polynomial common(1);
        for (const auto& e : v)
            if (!e.is_zero()) common *= e.den;
        std::vector<Polynomial> vec(cols);
        for (std::size_t col = 0; col < cols; ++col) {
            if (v[col].is_zero()) continue;
            RatFunc scaled = rf_mul(v[col], RatFunc{common});
            if (!scaled.den.is_constant())
                throw Error("kernel vector failed to clear denominators");
            vec[col] = scaled.num.scaled(GaussianRational(1) / scaled.den.constant_value());
        }
        // content-normalize the vector by the gcd of its monomial contents
        Monomial g;
        bool first = true;
        for (const auto& p : vec) {
            if (p.is_zero()) continue;
            g = first ? p.monomial_content() : g.gcd(p.monomial_content());
            first = false;
        }
        if (!first && !g.is_unit())
            for (auto& p : vec)
                if (!p.is_zero()) p = p.divided_by(g);
        out.basis.push_back(std::move(vec));
    }
    return out;
}

} // namespace spinorss
