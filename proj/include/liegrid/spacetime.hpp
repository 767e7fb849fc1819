#ifndef LIEGRID_SPACETIME_HPP
#define LIEGRID_SPACETIME_HPP

#include "liegrid/basis.hpp"
#include "liegrid/reps.hpp"
#include "liegrid/tensors.hpp"

namespace liegrid {

/// Generators acting on the N^2-dimensional spacetime index mu = 0..N^2-1
/// (last component is the time direction):
///   (J^i)_{mu nu}       =  i f^{mu i nu}
///   (K^{(eps)i})_{mu nu} = -eps i d^{mu i nu}
/// for i = 0..N^2-2.
struct SpacetimeGenerators {
  int n = 0;
  int dim = 0;  // n*n
  std::vector<CMatrix> j;
  std::vector<CMatrix> k_plus;
  std::vector<CMatrix> k_minus;
};

SpacetimeGenerators spacetime_generators(const StructureTensors& t);

/// Slices for any index mu in 0..N^2-1, extending the families above to the
/// time component (canonical basis: rotation slice 0, boost slice a multiple
/// of the identity).
CMatrix rotation_slice(const StructureTensors& t, int mu);
CMatrix boost_slice(const StructureTensors& t, int mu, int epsilon);

/// Residuals of [J,J] = i f J, [J,K] = i f K, [K,K] = -i f J for an arbitrary
/// rotation/boost family sharing one antisymmetric tensor f.
struct FamilyReport {
  double jj = 0.0;
  double jk = 0.0;
  double kk = 0.0;
  double worst() const { return std::max(jj, std::max(jk, kk)); }
};

FamilyReport lorentz_families(const std::vector<CMatrix>& j,
                              const std::vector<CMatrix>& k, const Tensor3& f);

/// Full commutator audit of the spacetime generators: the three families for
/// both boost signs, plus the self-referential form in which the structure
/// constants are read back off the rotation matrices themselves,
/// [J^i, J^j] = sum_k (J^j)_{ik} J^k and its K analogues.
struct LorentzReport {
  FamilyReport plus;
  FamilyReport minus;
  double self_referential = 0.0;
  double worst() const {
    return std::max({plus.worst(), minus.worst(), self_referential});
  }
};

LorentzReport lorentz_check(const SpacetimeGenerators& g, const StructureTensors& t);

/// Pair representation on A (x) B:
///   J^i = J_A^i (x) 1 + 1 (x) J_B^i
///   K^i = -i (J_A^i (x) 1 - 1 (x) J_B^i)
struct PairRep {
  Rep a, b;
  int dim = 0;
  std::vector<CMatrix> j;
  std::vector<CMatrix> k;
};

PairRep pair_rep(const Rep& a, const Rep& b);

/// Similarity S mapping the spacetime index onto the N (x) Nbar pair:
/// S(lambda, sigma) = J^sigma(m, n) with lambda = N*m + n, intertwining
///   S J^mu = (J^mu (x) 1 + 1 (x) Jbar^mu) S                (all mu, time too)
///   S K^{(eps)mu} = -eps i (J^mu (x) 1 - 1 (x) Jbar^mu) S
/// For a custom basis S is composed with the change of basis back to the
/// canonical one.
struct SimilarityMap {
  int n = 0;
  CMatrix s;
  CMatrix s_inverse;
  Complex det;
};

SimilarityMap similarity_S(const GeneratorBasis& b, const Tolerance& tol = {});

/// Conjectured closed form i^{N(N-1)/2} / 2^{N^2/2} for det(S) in the
/// canonical basis.
Complex expected_det_s(int n);

struct SimilarityReport {
  double j_residual = 0.0;
  double k_plus_residual = 0.0;
  double k_minus_residual = 0.0;
  double worst() const {
    return std::max(j_residual, std::max(k_plus_residual, k_minus_residual));
  }
};

SimilarityReport verify_similarity(const SimilarityMap& s, const SpacetimeGenerators& g,
                                   const GeneratorBasis& b, const Tolerance& tol = {});

}  // namespace liegrid

#endif
