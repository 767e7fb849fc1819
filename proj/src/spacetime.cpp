#include "liegrid/spacetime.hpp"

#include <stdexcept>

namespace liegrid {

CMatrix rotation_slice(const StructureTensors& t, int mu) {
  int m = t.dim();
  CMatrix g(m, m);
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) g(a, c) = Complex(0.0, t.f(a, mu, c));
  return g;
}

CMatrix boost_slice(const StructureTensors& t, int mu, int epsilon) {
  int m = t.dim();
  CMatrix g(m, m);
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) g(a, c) = Complex(0.0, -epsilon * t.d(a, mu, c));
  return g;
}

SpacetimeGenerators spacetime_generators(const StructureTensors& t) {
  SpacetimeGenerators g;
  g.n = t.n;
  g.dim = t.dim();
  g.j.reserve(g.dim - 1);
  g.k_plus.reserve(g.dim - 1);
  g.k_minus.reserve(g.dim - 1);
  for (int i = 0; i < g.dim - 1; ++i) {
    g.j.push_back(rotation_slice(t, i));
    g.k_plus.push_back(boost_slice(t, i, +1));
    g.k_minus.push_back(boost_slice(t, i, -1));
  }
  return g;
}

FamilyReport lorentz_families(const std::vector<CMatrix>& j,
                              const std::vector<CMatrix>& k, const Tensor3& f) {
  FamilyReport rep;
  int m = static_cast<int>(j.size());
  int dim = static_cast<int>(j.front().rows());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      CMatrix fj = CMatrix::Zero(dim, dim);
      CMatrix fk = CMatrix::Zero(dim, dim);
      for (int c = 0; c < m; ++c) {
        Complex coef(0.0, f(a, b, c));
        if (coef != 0.0) {
          fj += coef * j[c];
          fk += coef * k[c];
        }
      }
      rep.jj = std::max(rep.jj, max_abs(commutator(j[a], j[b]) - fj));
      rep.jk = std::max(rep.jk, max_abs(commutator(j[a], k[b]) - fk));
      rep.kk = std::max(rep.kk, max_abs(commutator(k[a], k[b]) + fj));
    }
  return rep;
}

LorentzReport lorentz_check(const SpacetimeGenerators& g, const StructureTensors& t) {
  LorentzReport rep;
  rep.plus = lorentz_families(g.j, g.k_plus, t.f);
  rep.minus = lorentz_families(g.j, g.k_minus, t.f);
  int m = g.dim - 1;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      CMatrix cj = CMatrix::Zero(g.dim, g.dim);
      CMatrix ck = CMatrix::Zero(g.dim, g.dim);
      for (int c = 0; c < m; ++c) {
        Complex coef = g.j[b](a, c);
        if (coef != 0.0) {
          cj += coef * g.j[c];
          ck += coef * g.k_plus[c];
        }
      }
      rep.self_referential =
          std::max({rep.self_referential, max_abs(commutator(g.j[a], g.j[b]) - cj),
                    max_abs(commutator(g.j[a], g.k_plus[b]) - ck),
                    max_abs(commutator(g.k_plus[a], g.k_plus[b]) + cj)});
    }
  return rep;
}

PairRep pair_rep(const Rep& a, const Rep& b) {
  if (a.n != b.n) throw std::invalid_argument("pair_rep: mismatched group rank");
  PairRep p;
  p.a = a;
  p.b = b;
  p.dim = a.dim * b.dim;
  CMatrix ia = CMatrix::Identity(a.dim, a.dim);
  CMatrix ib = CMatrix::Identity(b.dim, b.dim);
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    CMatrix left = kronecker(a.gens[i], ib);
    CMatrix right = kronecker(ia, b.gens[i]);
    p.j.push_back(left + right);
    p.k.push_back(Complex(0.0, -1.0) * (left - right));
  }
  return p;
}

SimilarityMap similarity_S(const GeneratorBasis& b, const Tolerance& tol) {
  int n = b.n;
  int dim = n * n;
  GeneratorBasis canonical = canonical_basis(n);
  CMatrix s(dim, dim);
  for (int m = 0; m < n; ++m)
    for (int nn = 0; nn < n; ++nn)
      for (int sigma = 0; sigma < dim; ++sigma)
        s(n * m + nn, sigma) = canonical.mats[sigma](m, nn);
  if (b.kind == BasisKind::custom) {
    BasisChange change = basis_change(canonical, b, tol);
    s = s * change.r_inverse.cast<Complex>();
  }
  SimilarityMap sm;
  sm.n = n;
  sm.det = s.fullPivLu().determinant();
  sm.s_inverse = s.fullPivLu().inverse();
  if (max_abs(s * sm.s_inverse - CMatrix::Identity(dim, dim)) > tol.algebraic)
    throw std::runtime_error("similarity_S: map is numerically singular");
  sm.s = std::move(s);
  return sm;
}

Complex expected_det_s(int n) {
  static const Complex units[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  Complex unit = units[(n * (n - 1) / 2) % 4];
  return unit / std::pow(2.0, 0.5 * n * n);
}

SimilarityReport verify_similarity(const SimilarityMap& sm, const SpacetimeGenerators& g,
                                   const GeneratorBasis& b, const Tolerance& tol) {
  if (sm.n != b.n || g.n != b.n)
    throw std::invalid_argument("verify_similarity: mismatched sizes");
  int dim = g.dim;
  StructureTensors t = compute_tensors(b, tol);
  std::vector<CMatrix> bar = anti_rep(b.mats);
  CMatrix id = CMatrix::Identity(b.n, b.n);
  SimilarityReport rep;
  for (int mu = 0; mu < dim; ++mu) {
    CMatrix left = kronecker(b.mats[mu], id);
    CMatrix right = kronecker(id, bar[mu]);
    CMatrix jslice = mu < dim - 1 ? g.j[mu] : rotation_slice(t, mu);
    rep.j_residual =
        std::max(rep.j_residual, max_abs(sm.s * jslice - (left + right) * sm.s));
    for (int eps : {+1, -1}) {
      CMatrix kslice = mu < dim - 1 ? (eps > 0 ? g.k_plus[mu] : g.k_minus[mu])
                                    : boost_slice(t, mu, eps);
      CMatrix pair = Complex(0.0, -eps) * (left - right);
      double resid = max_abs(sm.s * kslice - pair * sm.s);
      (eps > 0 ? rep.k_plus_residual : rep.k_minus_residual) =
          std::max(eps > 0 ? rep.k_plus_residual : rep.k_minus_residual, resid);
    }
  }
  return rep;
}

}  // namespace liegrid
