#include "liegrid/numkernel.hpp"

#include <cmath>
#include <stdexcept>

namespace liegrid {

namespace {

void check_same_square(const CMatrix& a, const CMatrix& b, const char* who) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument(std::string(who) + ": square matrices of equal size required");
  }
}

/// Rotate a unit vector so its first entry of largest magnitude is positive real.
void fix_phase(CVector& v) {
  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > best) {
      best = m;
      imax = i;
    }
  }
  if (best > 0.0) v *= std::conj(v[imax]) / best;
}

}  // namespace

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  check_same_square(a, b, "commutator");
  return a * b - b * a;
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  check_same_square(a, b, "anticommutator");
  return a * b + b * a;
}

CMatrix matrix_exponential(const CMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix_exponential: square matrix required");
  const Eigen::Index n = h.rows();
  if (n == 0) return CMatrix::Identity(0, 0);

  const double norm = h.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));

  CMatrix a = h / std::ldexp(1.0, squarings);
  CMatrix result = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
    const double tn = term.cwiseAbs().maxCoeff();
    if (tn == 0.0 || tn <= 1e-17 * result.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

CMatrix kronecker(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

std::vector<CVector> nullspace_basis(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("nullspace_basis: empty matrix");
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = tol.rank_cut * smax;
  std::vector<CVector> basis;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double s = j < sv.size() ? sv(j) : 0.0;
    if (s <= cut) {
      CVector v = svd.matrixV().col(j);
      fix_phase(v);
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

std::vector<CVector> nullspace_basis(const std::vector<SparseRow>& rows, int ncols,
                                     const Tolerance& tol) {
  if (ncols <= 0) throw std::invalid_argument("nullspace_basis: ncols must be positive");
  const std::size_t nrows = rows.empty() ? 1 : rows.size();

  if (nrows * static_cast<std::size_t>(ncols) <= 4'000'000) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(nrows), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) m(static_cast<Eigen::Index>(r), c) += v;
    return nullspace_basis(m, tol);
  }
  return nullspace_basis_gram(rows, ncols, tol);
}

std::vector<CVector> nullspace_basis_gram(const std::vector<SparseRow>& rows, int ncols,
                                          const Tolerance& tol) {
  if (ncols <= 0) throw std::invalid_argument("nullspace_basis_gram: ncols must be positive");
  CMatrix gram = CMatrix::Zero(ncols, ncols);
  for (const auto& row : rows)
    for (const auto& [ci, vi] : row)
      for (const auto& [cj, vj] : row) gram(ci, cj) += std::conj(vi) * vj;

  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
  if (es.info() != Eigen::Success) throw std::runtime_error("nullspace_basis_gram: eigensolver failed");
  const auto& ev = es.eigenvalues();  // ascending
  const double smax = std::sqrt(std::max(0.0, ev(ncols - 1)));
  const double cut = std::max(tol.rank_cut, 1e-6) * smax;
  std::vector<CVector> basis;
  for (int j = 0; j < ncols; ++j) {
    const double s = std::sqrt(std::max(0.0, ev(j)));
    if (s <= cut) {
      CVector v = es.eigenvectors().col(j);
      fix_phase(v);
      basis.push_back(std::move(v));
    } else {
      break;
    }
  }
  return basis;
}

}  // namespace liegrid
