#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liegrid/numkernel.hpp"

using namespace liegrid;
using namespace std::complex_literals;

namespace {

CMatrix pauli_x_half() {
  CMatrix m(2, 2);
  m << 0, 0.5, 0.5, 0;
  return m;
}

CMatrix pauli_y_half() {
  CMatrix m(2, 2);
  m << 0, -0.5i, 0.5i, 0;
  return m;
}

CMatrix pauli_z_half() {
  CMatrix m(2, 2);
  m << 0.5, 0, 0, -0.5;
  return m;
}

CMatrix random_complex(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(u(rng), u(rng));
  return m;
}

CMatrix random_hermitian(int n, std::mt19937_64& rng) {
  CMatrix m = random_complex(n, n, rng);
  return CMatrix(0.5 * (m + m.adjoint()));
}

CMatrix random_unitary(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_complex(n, n, rng));
  return qr.householderQ() * CMatrix::Identity(n, n);
}

}  // namespace

TEST_CASE("commutator of the first two su(2) generators gives i times the third") {
  const CMatrix c = commutator(pauli_x_half(), pauli_y_half());
  CHECK(max_abs(c - CMatrix(1.0i * pauli_z_half())) == 0.0);
}

TEST_CASE("commutator of a matrix with itself vanishes") {
  CHECK(max_abs(commutator(pauli_y_half(), pauli_y_half())) == 0.0);
}

TEST_CASE("commutator rejects shape mismatch") {
  CHECK_THROWS_AS(commutator(CMatrix::Zero(2, 2), CMatrix::Zero(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(commutator(CMatrix::Zero(2, 3), CMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("anticommutator of equal su(2) generators gives half the identity") {
  const CMatrix a = anticommutator(pauli_x_half(), pauli_x_half());
  CHECK(max_abs(a - CMatrix(0.5 * CMatrix::Identity(2, 2))) == 0.0);
}

TEST_CASE("anticommutator of distinct su(2) generators vanishes") {
  CHECK(max_abs(anticommutator(pauli_x_half(), pauli_y_half())) == 0.0);
}

TEST_CASE("anticommutator with the zero matrix vanishes") {
  CHECK(max_abs(anticommutator(pauli_z_half(), CMatrix::Zero(2, 2))) == 0.0);
}

TEST_CASE("matrix exponential of zero is the identity exactly") {
  const CMatrix e = matrix_exponential(CMatrix::Zero(4, 4));
  CHECK(max_abs(e - CMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("matrix exponential of i pi sigma_x is minus the identity") {
  const CMatrix h = 1.0i * std::acos(-1.0) * 2.0 * pauli_x_half();
  CHECK(max_abs(matrix_exponential(h) + CMatrix::Identity(2, 2)) < 1e-13);
}

TEST_CASE("matrix exponential of a diagonal generator matches the scalar exponential") {
  const double pi = std::acos(-1.0);
  const CMatrix e = matrix_exponential(CMatrix(1.0i * pi * pauli_z_half()));
  CMatrix want(2, 2);
  want << std::exp(0.5i * pi), 0, 0, std::exp(-0.5i * pi);
  CHECK(max_abs(e - want) < 1e-13);
}

TEST_CASE("matrix exponential rejects non-square input") {
  CHECK_THROWS_AS(matrix_exponential(CMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("exp of i times hermitian is unitary") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const CMatrix u = matrix_exponential(CMatrix(1.0i * random_hermitian(n, rng)));
    CHECK(max_abs(u * u.adjoint() - CMatrix::Identity(n, n)) < 1e-12);
  }
}

TEST_CASE("exp(h) exp(-h) recovers the identity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix h = random_complex(5, 5, rng);
    const CMatrix p = matrix_exponential(h) * matrix_exponential(CMatrix(-h));
    CHECK(max_abs(p - CMatrix::Identity(5, 5)) < 1e-12);
  }
}

TEST_CASE("kronecker product places the left factor on the slow index") {
  CMatrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  const CMatrix k = kronecker(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == Complex(1));
  CHECK(k(0, 3) == Complex(2));
  CHECK(k(2, 1) == Complex(3));
  CHECK(k(3, 2) == Complex(4));
  CHECK(k(0, 0) == Complex(0));
}

TEST_CASE("nullspace of the identity is empty") {
  CHECK(nullspace_basis(CMatrix::Identity(3, 3)).empty());
}

TEST_CASE("nullspace of the zero matrix is the full space, orthonormal and phase-fixed") {
  const auto basis = nullspace_basis(CMatrix::Zero(2, 3));
  REQUIRE(basis.size() == 3);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Complex ip = basis[i].dot(basis[j]);
      CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-14);
    }
    // phase convention: the first entry of largest magnitude is positive real
    Eigen::Index imax = 0;
    double best = -1;
    for (Eigen::Index k = 0; k < basis[i].size(); ++k)
      if (std::abs(basis[i][k]) > best) best = std::abs(basis[i][k]), imax = k;
    CHECK(basis[i][imax].imag() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(basis[i][imax].real() > 0.0);
  }
}

TEST_CASE("nullspace of the all-ones 2x2 matrix is spanned by (1,-1)/sqrt(2)") {
  CMatrix m(2, 2);
  m << 1, 1, 1, 1;
  const auto basis = nullspace_basis(m);
  REQUIRE(basis.size() == 1);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(basis[0][0] - Complex(r)) < 1e-12);
  CHECK(std::abs(basis[0][1] - Complex(-r)) < 1e-12);
}

TEST_CASE("returned nullspace vectors are annihilated up to the rank cut") {
  std::mt19937_64 rng(7);
  Tolerance tol;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 6);
    const int r = 2 + static_cast<int>(rng() % 3);
    const CMatrix m = random_complex(n + 3, r, rng) * random_complex(r, n, rng);
    Eigen::BDCSVD<CMatrix> svd(m);
    const double smax = svd.singularValues()(0);
    const auto basis = nullspace_basis(m, tol);
    CHECK(basis.size() == static_cast<std::size_t>(n - r));
    for (const auto& v : basis) CHECK((m * v).norm() <= 10 * tol.rank_cut * smax);
  }
}

TEST_CASE("nullspace dimension is stable under unitary row mixing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix m = random_complex(9, 3, rng) * random_complex(3, 8, rng);
    const CMatrix u = random_unitary(9, rng);
    CHECK(nullspace_basis(m).size() == nullspace_basis(CMatrix(u * m)).size());
  }
}

TEST_CASE("sparse-row nullspace agrees with the dense path") {
  std::mt19937_64 rng(21);
  const int cols = 12, rank = 7;
  const CMatrix m = random_complex(20, rank, rng) * random_complex(rank, cols, rng);
  std::vector<SparseRow> rows(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (int j = 0; j < cols; ++j) rows[i].push_back({j, m(i, j)});

  const auto dense = nullspace_basis(m);
  const auto sparse = nullspace_basis(rows, cols);
  const auto gram = nullspace_basis_gram(rows, cols);
  REQUIRE(dense.size() == static_cast<std::size_t>(cols - rank));
  REQUIRE(sparse.size() == dense.size());
  REQUIRE(gram.size() == dense.size());

  // same subspace: compare orthogonal projectors
  auto projector = [cols](const std::vector<CVector>& basis) {
    CMatrix p = CMatrix::Zero(cols, cols);
    for (const auto& v : basis) p += v * v.adjoint();
    return p;
  };
  CHECK(max_abs(projector(dense) - projector(sparse)) < 1e-12);
  CHECK(max_abs(projector(dense) - projector(gram)) < 1e-7);
  for (const auto& v : gram) CHECK((m * v).norm() < 1e-6);
}

TEST_CASE("empty sparse system returns the full space") {
  const auto basis = nullspace_basis(std::vector<SparseRow>{}, 4);
  CHECK(basis.size() == 4);
}
