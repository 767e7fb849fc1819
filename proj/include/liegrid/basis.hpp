#ifndef LIEGRID_BASIS_HPP
#define LIEGRID_BASIS_HPP

#include <vector>

#include "liegrid/numkernel.hpp"

namespace liegrid {

enum class BasisKind { canonical, custom };

/// Hermitian generator set for su(N) extended by the identity direction:
/// N*N matrices, exactly the last one carrying nonzero trace.
///
/// Canonical index layout (0-based position p, P = N(N-1)/2):
///   p in [0, P)         symmetric off-diagonal pairs (a<b), lexicographic
///   p in [P, 2P)        antisymmetric off-diagonal pairs (a<b), lexicographic
///   p in [2P, 2P+N-1)   diagonal traceless combinations, a = 2..N
///   p = N*N - 1         identity / sqrt(2N)
struct GeneratorBasis {
  int n = 0;
  BasisKind kind = BasisKind::canonical;
  std::vector<CMatrix> mats;
  /// Position each matrix held in the caller's list (identity for canonical).
  std::vector<int> source_index;

  int dim() const { return n * n; }
};

/// The orthonormal generator set with tr(J^mu J^nu) = delta^{mu nu} / 2.
GeneratorBasis canonical_basis(int n);

/// Validate a caller-supplied generator set: hermitian, spanning, exactly one
/// matrix of nonzero trace. Reorders so that matrix comes last and records the
/// permutation in source_index. Throws std::invalid_argument on violation.
GeneratorBasis custom_basis(int n, std::vector<CMatrix> mats, const Tolerance& tol = {});

/// Conjugate representation, entrywise Jbar_{st} = -J_{ts}.
std::vector<CMatrix> anti_rep(const std::vector<CMatrix>& mats);

/// Coefficients beta with m = sum_mu beta_mu J^mu; m must be hermitian.
/// Canonical bases use beta_nu = 2 tr(m J^nu); custom bases solve the Gram
/// system. The imaginary residue of the traces must stay below tolerance.
RVector decompose_hermitian(const GeneratorBasis& b, const CMatrix& m, const Tolerance& tol = {});

/// Real change of basis, primed^mu = sum_sigma r(mu,sigma) b^sigma.
/// Rows 0..N*N-2 have an exact zero in the last column (traceless matrices
/// carry no identity-direction component); same for r_inverse.
struct BasisChange {
  RMatrix r;
  RMatrix r_inverse;
};

BasisChange basis_change(const GeneratorBasis& b, const GeneratorBasis& primed,
                         const Tolerance& tol = {});

}  // namespace liegrid

#endif
