#include "liegrid/basis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace liegrid {

namespace {

void check_hermitian(const CMatrix& m, double tol, const char* who) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": square matrix required");
  if (max_abs(m - m.adjoint()) > tol)
    throw std::invalid_argument(std::string(who) + ": matrix is not hermitian within tolerance");
}

/// Real Gram matrix g(mu,nu) = tr(J^mu J^nu); real for hermitian inputs.
RMatrix gram_matrix(const std::vector<CMatrix>& mats) {
  const int m = static_cast<int>(mats.size());
  RMatrix g(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      const double v = (mats[a] * mats[b]).trace().real();
      g(a, b) = v;
      g(b, a) = v;
    }
  return g;
}

}  // namespace

GeneratorBasis canonical_basis(int n) {
  if (n < 2) throw std::invalid_argument("canonical_basis: n must be at least 2");
  GeneratorBasis b;
  b.n = n;
  b.kind = BasisKind::canonical;
  b.mats.reserve(n * n);

  // symmetric off-diagonal pairs: (E_ab + E_ba) / 2, a < b
  for (int a = 0; a < n; ++a)
    for (int c = a + 1; c < n; ++c) {
      CMatrix m = CMatrix::Zero(n, n);
      m(a, c) = 0.5;
      m(c, a) = 0.5;
      b.mats.push_back(m);
    }
  // antisymmetric off-diagonal pairs: -i (E_ab - E_ba) / 2, a < b
  for (int a = 0; a < n; ++a)
    for (int c = a + 1; c < n; ++c) {
      CMatrix m = CMatrix::Zero(n, n);
      m(a, c) = Complex(0, -0.5);
      m(c, a) = Complex(0, 0.5);
      b.mats.push_back(m);
    }
  // diagonal traceless combinations, one per a = 2..n:
  // (sum_{k<a-1} E_kk - (a-1) E_{a-1,a-1}) / sqrt(2 a (a-1))
  for (int a = 2; a <= n; ++a) {
    CMatrix m = CMatrix::Zero(n, n);
    const double coef = 1.0 / std::sqrt(2.0 * a * (a - 1));
    for (int k = 0; k < a - 1; ++k) m(k, k) = coef;
    m(a - 1, a - 1) = -coef * (a - 1);
    b.mats.push_back(m);
  }
  // identity direction, the single nonzero-trace element, always last
  b.mats.push_back(CMatrix::Identity(n, n) / std::sqrt(2.0 * n));

  b.source_index.resize(n * n);
  std::iota(b.source_index.begin(), b.source_index.end(), 0);
  return b;
}

GeneratorBasis custom_basis(int n, std::vector<CMatrix> mats, const Tolerance& tol) {
  if (n < 2) throw std::invalid_argument("custom_basis: n must be at least 2");
  if (static_cast<int>(mats.size()) != n * n)
    throw std::invalid_argument("custom_basis: expected n*n matrices");

  int traced = -1;
  for (int i = 0; i < n * n; ++i) {
    if (mats[i].rows() != n || mats[i].cols() != n)
      throw std::invalid_argument("custom_basis: matrices must be n x n");
    check_hermitian(mats[i], tol.algebraic, "custom_basis");
    if (std::abs(mats[i].trace()) > tol.algebraic) {
      if (traced >= 0)
        throw std::invalid_argument("custom_basis: more than one matrix carries nonzero trace");
      traced = i;
    }
  }
  if (traced < 0) throw std::invalid_argument("custom_basis: no matrix carries nonzero trace");

  GeneratorBasis b;
  b.n = n;
  b.kind = BasisKind::custom;
  b.source_index.reserve(n * n);
  for (int i = 0; i < n * n; ++i) {
    if (i == traced) continue;
    b.mats.push_back(std::move(mats[i]));
    b.source_index.push_back(i);
  }
  b.mats.push_back(std::move(mats[traced]));
  b.source_index.push_back(traced);

  const RMatrix g = gram_matrix(b.mats);
  Eigen::JacobiSVD<RMatrix> svd(g);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * sv(0))
    throw std::invalid_argument("custom_basis: matrices do not span (singular Gram matrix)");
  return b;
}

std::vector<CMatrix> anti_rep(const std::vector<CMatrix>& mats) {
  std::vector<CMatrix> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(CMatrix(-m.transpose()));
  return out;
}

RVector decompose_hermitian(const GeneratorBasis& b, const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != b.n || m.cols() != b.n)
    throw std::invalid_argument("decompose_hermitian: matrix size does not match basis");
  check_hermitian(m, tol.algebraic, "decompose_hermitian");

  const int d = b.dim();
  RVector traces(d);
  for (int nu = 0; nu < d; ++nu) {
    const Complex t = (m * b.mats[nu]).trace();
    if (std::abs(t.imag()) > tol.algebraic)
      throw std::runtime_error("decompose_hermitian: trace has imaginary residue above tolerance");
    traces(nu) = t.real();
  }
  if (b.kind == BasisKind::canonical) return 2.0 * traces;

  const RMatrix g = gram_matrix(b.mats);
  return g.fullPivLu().solve(traces);
}

BasisChange basis_change(const GeneratorBasis& b, const GeneratorBasis& primed,
                         const Tolerance& tol) {
  if (b.n != primed.n) throw std::invalid_argument("basis_change: mismatched n");
  const int d = b.dim();
  BasisChange out;
  out.r.resize(d, d);
  for (int mu = 0; mu < d; ++mu) out.r.row(mu) = decompose_hermitian(b, primed.mats[mu], tol).transpose();

  // traceless rows carry no identity-direction component: assert, then store
  // the exact structural zero
  for (int i = 0; i + 1 < d; ++i) {
    if (std::abs(out.r(i, d - 1)) > tol.algebraic)
      throw std::runtime_error("basis_change: traceless row leaks into the trace direction");
    out.r(i, d - 1) = 0.0;
  }

  out.r_inverse = out.r.fullPivLu().inverse();
  for (int i = 0; i + 1 < d; ++i) {
    if (std::abs(out.r_inverse(i, d - 1)) > tol.algebraic)
      throw std::runtime_error("basis_change: inverse leaks into the trace direction");
    out.r_inverse(i, d - 1) = 0.0;
  }
  if ((out.r * out.r_inverse - RMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol.algebraic)
    throw std::runtime_error("basis_change: inverse verification failed");
  return out;
}

}  // namespace liegrid
