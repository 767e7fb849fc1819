#ifndef LIEGRID_MOMENTUM_HPP
#define LIEGRID_MOMENTUM_HPP

#include "liegrid/spacetime.hpp"

namespace liegrid {

/// One solved momentum family element. tilde[lambda] is the block matrix in
/// the pair form of the spacetime index, lambda = N*lambda1 + lambda0;
/// phys[mu] = sum_lambda S^{-1}(mu, lambda) tilde[lambda]. Both hold N^2
/// matrices of shape (out pair dim) x (in pair dim). The flattened tilde
/// array has unit Euclidean norm.
struct MomentumElement {
  std::vector<CMatrix> tilde;
  std::vector<CMatrix> phys;
};

struct MomentumBlock {
  int out_rows = 0;
  int in_cols = 0;
  double residual = 0.0;  // worst equation violation over the returned elements
  std::vector<MomentumElement> elements;
  int dim() const { return static_cast<int>(elements.size()); }
};

/// Intertwiner families for the block representation (A (x) B) (+) (C (x) D):
/// `plus` holds momenta mapping C (x) D -> A (x) B (upper-right block),
/// `minus` the reverse direction (lower-left block). Each family solves, for
/// every traceless generator index j,
///   Btilde (J_C (x) 1 + 1 (x) J_D) - (J_A (x) 1 + 1 (x) J_B) Btilde
///       = (J (x) 1 + 1 (x) Jbar) Btilde                (rotations)
///   Btilde (J_C (x) 1 - 1 (x) J_D) - (J_A (x) 1 - 1 (x) J_B) Btilde
///       = eps (J (x) 1 - 1 (x) Jbar) Btilde            (boosts)
/// where J/Jbar act on the lambda1/lambda0 slots of the spacetime index.
struct MomentumSolution {
  int n = 0;
  int epsilon = +1;
  RepSpec a, b, c, d;
  MomentumBlock plus;
  MomentumBlock minus;
};

MomentumSolution solve_intertwiners(const Rep& a, const Rep& b, const Rep& c,
                                    const Rep& d, int epsilon,
                                    const SimilarityMap& s, const Tolerance& tol = {});

/// Rotations, boosts, and momenta realized on one space. k follows the fixed
/// pair convention -i(J (x) 1 - 1 (x) J); epsilon selects which spacetime
/// boost family the momenta answer to.
struct PoincareSystem {
  int n = 0;
  int epsilon = +1;
  int dim = 0;
  std::vector<CMatrix> j;  // N^2 - 1
  std::vector<CMatrix> k;  // N^2 - 1
  std::vector<CMatrix> p;  // N^2
};

/// Block-diagonal system for (A (x) B) (+) (C (x) D) with momenta from a
/// linear combination of solved elements placed in the upper-right
/// (minus_block = false) or lower-left (minus_block = true) corner.
PoincareSystem assemble_momentum(const Rep& a, const Rep& b, const Rep& c,
                                 const Rep& d, const MomentumSolution& sol,
                                 bool minus_block, const std::vector<Complex>& coeffs);

/// 2N-dimensional closed-form fixture: J^i = diag(J^i, J^i),
/// K^i = diag(+i J^i, -i J^i), and P^mu = scale * J^mu placed upper-right for
/// epsilon = +1, lower-left for epsilon = -1.
PoincareSystem doubled_rep_fixture(int n, int epsilon, double scale = 1.0);

/// Residuals of [P^mu, J^i] = i f^{mu i nu} P^nu,
/// [P^mu, K^i] = -eps i d^{mu i nu} P^nu, and [P^mu, P^nu] = 0.
struct PoincareReport {
  double pj = 0.0;
  double pk = 0.0;
  double pp = 0.0;
  double worst() const { return std::max(pj, std::max(pk, pp)); }
};

PoincareReport poincare_check(const PoincareSystem& sys, const StructureTensors& t);

/// exp(i coeffs . P). The momenta must commute (checked); for the strictly
/// off-diagonal families the series terminates and the result is exactly
/// I + i coeffs . P.
CMatrix translation(const PoincareSystem& sys, const RVector& coeffs,
                    const Tolerance& tol = {});

}  // namespace liegrid

#endif
