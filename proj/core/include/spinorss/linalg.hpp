#pragma once

#include <cstdint>
#include <vector>

#include "spinorss/polynomial.hpp"

namespace spinorss {

using QVector = std::vector<GaussianRational>;
using QMatrix = std::vector<QVector>;

/// Rank by exact Gaussian elimination.
int rank(QMatrix m);

/// Column-kernel basis (vectors v with M v = 0), reduced echelon based.
std::vector<QVector> kernel(const QMatrix& m);

/// Rows are the coefficient vectors of `polys` over the union of their
/// monomials (sorted); the span of the rows is the span of the polynomials.
QMatrix coefficient_matrix(const std::vector<Polynomial>& polys);
int coefficient_rank(const std::vector<Polynomial>& polys);

/// Independent estimate of coefficient_rank: evaluates every polynomial
/// at `points` deterministic pseudo-random rational points (conjugate
/// pairs respected) and takes the rank of the evaluation matrix.
int instantiation_rank(const std::vector<Polynomial>& polys, int points, std::uint64_t seed);

/// Kernel of a matrix of polynomial entries over the field of rational
/// functions of their symbols. Pivots that are not monomials in
/// assumed-nonzero symbols are recorded as genericity requirements.
/// Basis vectors are cleared to polynomial coordinates and content-
/// normalized.
struct PolyKernel {
    std::vector<std::vector<Polynomial>> basis;
    std::vector<Polynomial> genericity; // pivot polynomials assumed nonzero
};
PolyKernel poly_kernel(const std::vector<std::vector<Polynomial>>& rows,
                       const Assumptions& assumptions);

} // namespace spinorss
