#include "liegrid/momentum.hpp"

#include <stdexcept>

namespace liegrid {

namespace {

struct UnknownIndex {
  int n, da, db, dc, dd;
  int operator()(int l1, int l0, int a, int b, int c, int d) const {
    return ((((l1 * n + l0) * da + a) * db + b) * dc + c) * dd + d;
  }
  int count() const { return n * n * da * db * dc * dd; }
};

double apply_rows_max(const std::vector<SparseRow>& rows, const CVector& v) {
  double worst = 0.0;
  for (const SparseRow& row : rows) {
    Complex sum = 0.0;
    for (const auto& [c, coef] : row) sum += coef * v(c);
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

// One off-diagonal family: out pair (oa, ob) <- in pair (ic, id).
MomentumBlock solve_block(const Rep& oa, const Rep& ob, const Rep& ic, const Rep& id,
                          int epsilon, const SimilarityMap& sm, const Tolerance& tol) {
  int n = oa.n;
  int m = n * n - 1;
  GeneratorBasis cb = canonical_basis(n);
  std::vector<CMatrix> jn(cb.mats.begin(), cb.mats.end() - 1);
  std::vector<CMatrix> jbar = anti_rep(jn);
  UnknownIndex u{n, oa.dim, ob.dim, ic.dim, id.dim};

  std::vector<SparseRow> rows;
  rows.reserve(2u * m * static_cast<std::size_t>(u.count()));
  for (int j = 0; j < m; ++j) {
    const CMatrix& ja = oa.gens[j];
    const CMatrix& jb = ob.gens[j];
    const CMatrix& jc = ic.gens[j];
    const CMatrix& jd = id.gens[j];
    for (int l1 = 0; l1 < n; ++l1)
      for (int l0 = 0; l0 < n; ++l0)
        for (int a = 0; a < oa.dim; ++a)
          for (int b = 0; b < ob.dim; ++b)
            for (int c = 0; c < ic.dim; ++c)
              for (int d = 0; d < id.dim; ++d) {
                SparseRow r1;
                for (int s = 0; s < ic.dim; ++s)
                  if (jc(s, c) != 0.0) r1.emplace_back(u(l1, l0, a, b, s, d), jc(s, c));
                for (int r = 0; r < oa.dim; ++r)
                  if (ja(a, r) != 0.0) r1.emplace_back(u(l1, l0, r, b, c, d), -ja(a, r));
                if (epsilon > 0) {
                  for (int p1 = 0; p1 < n; ++p1)
                    if (jn[j](l1, p1) != 0.0)
                      r1.emplace_back(u(p1, l0, a, b, c, d), -jn[j](l1, p1));
                } else {
                  for (int p0 = 0; p0 < n; ++p0)
                    if (jbar[j](l0, p0) != 0.0)
                      r1.emplace_back(u(l1, p0, a, b, c, d), -jbar[j](l0, p0));
                }
                rows.push_back(std::move(r1));

                SparseRow r2;
                for (int s = 0; s < id.dim; ++s)
                  if (jd(s, d) != 0.0) r2.emplace_back(u(l1, l0, a, b, c, s), jd(s, d));
                for (int r = 0; r < ob.dim; ++r)
                  if (jb(b, r) != 0.0) r2.emplace_back(u(l1, l0, a, r, c, d), -jb(b, r));
                if (epsilon > 0) {
                  for (int p0 = 0; p0 < n; ++p0)
                    if (jbar[j](l0, p0) != 0.0)
                      r2.emplace_back(u(l1, p0, a, b, c, d), -jbar[j](l0, p0));
                } else {
                  for (int p1 = 0; p1 < n; ++p1)
                    if (jn[j](l1, p1) != 0.0)
                      r2.emplace_back(u(p1, l0, a, b, c, d), -jn[j](l1, p1));
                }
                rows.push_back(std::move(r2));
              }
  }

  std::vector<CVector> kernel = nullspace_basis(rows, u.count(), tol);

  MomentumBlock block;
  block.out_rows = oa.dim * ob.dim;
  block.in_cols = ic.dim * id.dim;
  for (const CVector& v : kernel) {
    block.residual = std::max(block.residual, apply_rows_max(rows, v));
    MomentumElement e;
    e.tilde.reserve(n * n);
    for (int l1 = 0; l1 < n; ++l1)
      for (int l0 = 0; l0 < n; ++l0) {
        CMatrix t(block.out_rows, block.in_cols);
        for (int a = 0; a < oa.dim; ++a)
          for (int b = 0; b < ob.dim; ++b)
            for (int c = 0; c < ic.dim; ++c)
              for (int d = 0; d < id.dim; ++d)
                t(a * ob.dim + b, c * id.dim + d) = v(u(l1, l0, a, b, c, d));
        e.tilde.push_back(std::move(t));
      }
    for (int mu = 0; mu < n * n; ++mu) {
      CMatrix phys = CMatrix::Zero(block.out_rows, block.in_cols);
      for (int lambda = 0; lambda < n * n; ++lambda)
        phys += sm.s_inverse(mu, lambda) * e.tilde[lambda];
      e.phys.push_back(std::move(phys));
    }
    block.elements.push_back(std::move(e));
  }
  return block;
}

}  // namespace

MomentumSolution solve_intertwiners(const Rep& a, const Rep& b, const Rep& c,
                                    const Rep& d, int epsilon,
                                    const SimilarityMap& s, const Tolerance& tol) {
  if (a.n != b.n || a.n != c.n || a.n != d.n || a.n != s.n)
    throw std::invalid_argument("solve_intertwiners: mismatched group rank");
  if (epsilon != 1 && epsilon != -1)
    throw std::invalid_argument("solve_intertwiners: epsilon must be +-1");
  MomentumSolution sol;
  sol.n = a.n;
  sol.epsilon = epsilon;
  sol.a = a.spec;
  sol.b = b.spec;
  sol.c = c.spec;
  sol.d = d.spec;
  sol.plus = solve_block(a, b, c, d, epsilon, s, tol);
  sol.minus = solve_block(c, d, a, b, epsilon, s, tol);
  return sol;
}

PoincareSystem assemble_momentum(const Rep& a, const Rep& b, const Rep& c,
                                 const Rep& d, const MomentumSolution& sol,
                                 bool minus_block, const std::vector<Complex>& coeffs) {
  const MomentumBlock& block = minus_block ? sol.minus : sol.plus;
  if (coeffs.size() != block.elements.size())
    throw std::invalid_argument("assemble_momentum: one coefficient per element required");
  PairRep out = pair_rep(a, b);
  PairRep in = pair_rep(c, d);
  PoincareSystem sys;
  sys.n = sol.n;
  sys.epsilon = sol.epsilon;
  sys.dim = out.dim + in.dim;
  for (std::size_t i = 0; i < out.j.size(); ++i) {
    CMatrix j = CMatrix::Zero(sys.dim, sys.dim);
    j.topLeftCorner(out.dim, out.dim) = out.j[i];
    j.bottomRightCorner(in.dim, in.dim) = in.j[i];
    sys.j.push_back(std::move(j));
    CMatrix k = CMatrix::Zero(sys.dim, sys.dim);
    k.topLeftCorner(out.dim, out.dim) = out.k[i];
    k.bottomRightCorner(in.dim, in.dim) = in.k[i];
    sys.k.push_back(std::move(k));
  }
  int nn = sol.n * sol.n;
  for (int mu = 0; mu < nn; ++mu) {
    CMatrix p = CMatrix::Zero(sys.dim, sys.dim);
    CMatrix combo = CMatrix::Zero(block.out_rows, block.in_cols);
    for (std::size_t e = 0; e < coeffs.size(); ++e)
      combo += coeffs[e] * block.elements[e].phys[mu];
    if (minus_block)
      p.bottomLeftCorner(block.out_rows, block.in_cols) = combo;
    else
      p.topRightCorner(block.out_rows, block.in_cols) = combo;
    sys.p.push_back(std::move(p));
  }
  return sys;
}

PoincareSystem doubled_rep_fixture(int n, int epsilon, double scale) {
  if (epsilon != 1 && epsilon != -1)
    throw std::invalid_argument("doubled_rep_fixture: epsilon must be +-1");
  GeneratorBasis cb = canonical_basis(n);
  PoincareSystem sys;
  sys.n = n;
  sys.epsilon = epsilon;
  sys.dim = 2 * n;
  int m = n * n - 1;
  for (int i = 0; i < m; ++i) {
    CMatrix j = CMatrix::Zero(sys.dim, sys.dim);
    j.topLeftCorner(n, n) = cb.mats[i];
    j.bottomRightCorner(n, n) = cb.mats[i];
    sys.j.push_back(std::move(j));
    CMatrix k = CMatrix::Zero(sys.dim, sys.dim);
    k.topLeftCorner(n, n) = Complex(0.0, 1.0) * cb.mats[i];
    k.bottomRightCorner(n, n) = Complex(0.0, -1.0) * cb.mats[i];
    sys.k.push_back(std::move(k));
  }
  for (int mu = 0; mu < n * n; ++mu) {
    CMatrix p = CMatrix::Zero(sys.dim, sys.dim);
    if (epsilon > 0)
      p.topRightCorner(n, n) = scale * cb.mats[mu];
    else
      p.bottomLeftCorner(n, n) = scale * cb.mats[mu];
    sys.p.push_back(std::move(p));
  }
  return sys;
}

PoincareReport poincare_check(const PoincareSystem& sys, const StructureTensors& t) {
  if (sys.n != t.n) throw std::invalid_argument("poincare_check: mismatched group rank");
  int nn = sys.n * sys.n;
  int m = nn - 1;
  PoincareReport rep;
  for (int mu = 0; mu < nn; ++mu) {
    for (int i = 0; i < m; ++i) {
      CMatrix fp = CMatrix::Zero(sys.dim, sys.dim);
      CMatrix dp = CMatrix::Zero(sys.dim, sys.dim);
      for (int nu = 0; nu < nn; ++nu) {
        if (t.f(mu, i, nu) != 0.0) fp += Complex(0.0, t.f(mu, i, nu)) * sys.p[nu];
        if (t.d(mu, i, nu) != 0.0)
          dp += Complex(0.0, -sys.epsilon * t.d(mu, i, nu)) * sys.p[nu];
      }
      rep.pj = std::max(rep.pj, max_abs(commutator(sys.p[mu], sys.j[i]) - fp));
      rep.pk = std::max(rep.pk, max_abs(commutator(sys.p[mu], sys.k[i]) - dp));
    }
    for (int nu = mu + 1; nu < nn; ++nu)
      rep.pp = std::max(rep.pp, max_abs(commutator(sys.p[mu], sys.p[nu])));
  }
  return rep;
}

CMatrix translation(const PoincareSystem& sys, const RVector& coeffs,
                    const Tolerance& tol) {
  if (coeffs.size() != static_cast<Eigen::Index>(sys.p.size()))
    throw std::invalid_argument("translation: one coefficient per momentum required");
  double commute = 0.0;
  for (std::size_t mu = 0; mu < sys.p.size(); ++mu)
    for (std::size_t nu = mu + 1; nu < sys.p.size(); ++nu)
      commute = std::max(commute, max_abs(commutator(sys.p[mu], sys.p[nu])));
  if (commute > tol.algebraic)
    throw std::runtime_error("translation: momenta do not commute");
  CMatrix arg = CMatrix::Zero(sys.dim, sys.dim);
  for (std::size_t mu = 0; mu < sys.p.size(); ++mu)
    arg += Complex(0.0, coeffs(static_cast<Eigen::Index>(mu))) * sys.p[mu];
  return matrix_exponential(arg);
}

}  // namespace liegrid
