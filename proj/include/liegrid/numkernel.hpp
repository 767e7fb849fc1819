#ifndef LIEGRID_NUMKERNEL_HPP
#define LIEGRID_NUMKERNEL_HPP

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace liegrid {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Numerical thresholds used throughout; rank_cut is relative to the largest
/// singular value of the matrix at hand.
struct Tolerance {
  double algebraic = 1e-10;
  double exponential = 1e-9;
  double rank_cut = 1e-8;
};

/// [a, b] = ab - ba. Throws std::invalid_argument on shape mismatch.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// {a, b} = ab + ba. Throws std::invalid_argument on shape mismatch.
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

/// exp(h) by scaling-and-squaring with the series truncated once terms fall
/// below machine precision. exp of the zero matrix is the identity exactly.
CMatrix matrix_exponential(const CMatrix& h);

/// Kronecker product with `a` on the slow (leftmost) index.
CMatrix kronecker(const CMatrix& a, const CMatrix& b);

/// Largest entry magnitude; 0 for an empty matrix.
double max_abs(const CMatrix& m);

/// Orthonormal basis of the (right) nullspace of m via SVD. A singular value
/// sigma belongs to the kernel when sigma <= rank_cut * sigma_max. Each basis
/// vector has unit norm and its first entry of largest magnitude is made
/// positive real.
std::vector<CVector> nullspace_basis(const CMatrix& m, const Tolerance& tol = {});

/// One row of a sparse linear system: (column, coefficient) pairs.
using SparseRow = std::vector<std::pair<int, Complex>>;

/// Nullspace of a sparse row-stacked system. Small systems densify and reuse
/// the SVD path; large ones go through nullspace_basis_gram.
std::vector<CVector> nullspace_basis(const std::vector<SparseRow>& rows, int ncols,
                                     const Tolerance& tol = {});

/// Large-system nullspace route: forms the Gram matrix M^H M and eigensolves.
/// Same rank_cut semantics on sqrt(eigenvalue), with the relative cut floored
/// at 1e-6 because squaring halves the attainable precision.
std::vector<CVector> nullspace_basis_gram(const std::vector<SparseRow>& rows, int ncols,
                                          const Tolerance& tol = {});

}  // namespace liegrid

#endif
