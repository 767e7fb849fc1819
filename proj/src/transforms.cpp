#include "liegrid/transforms.hpp"

#include <random>
#include <stdexcept>

namespace liegrid {

CMatrix lorentz_transform(const SpacetimeGenerators& g, const LorentzParams& p) {
  int m = g.dim - 1;
  if (p.theta.size() != m || p.phi.size() != m)
    throw std::invalid_argument("lorentz_transform: parameter size mismatch");
  if (p.epsilon != 1 && p.epsilon != -1)
    throw std::invalid_argument("lorentz_transform: epsilon must be +-1");
  const std::vector<CMatrix>& k = p.epsilon > 0 ? g.k_plus : g.k_minus;
  CMatrix rot = CMatrix::Zero(g.dim, g.dim);
  CMatrix boost = CMatrix::Zero(g.dim, g.dim);
  for (int i = 0; i < m; ++i) {
    rot += Complex(0.0, p.theta(i)) * g.j[i];
    boost += Complex(0.0, p.phi(i)) * k[i];
  }
  return matrix_exponential(boost) * matrix_exponential(rot);
}

RVector apply_transform(const CMatrix& d, const RVector& x, const Tolerance& tol) {
  if (d.cols() != x.size())
    throw std::invalid_argument("apply_transform: size mismatch");
  CVector y = d * x.cast<Complex>();
  if (y.imag().cwiseAbs().maxCoeff() > tol.exponential)
    throw std::runtime_error("apply_transform: transform left the real slice");
  return y.real();
}

double interval(const RVector& x) {
  int last = static_cast<int>(x.size()) - 1;
  return x.head(last).squaredNorm() - x(last) * x(last);
}

InvarianceReport invariance_report(const SpacetimeGenerators& g, int epsilon,
                                   int trials, std::uint64_t seed,
                                   double witness_threshold) {
  InvarianceReport rep;
  rep.n = g.n;
  rep.epsilon = epsilon;
  rep.seed = seed;
  rep.trials = trials;
  int m = g.dim - 1;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> rapidity(-2.0, 2.0);
  auto draw = [&](std::uniform_real_distribution<double>& dist, int len) {
    RVector v(len);
    for (int i = 0; i < len; ++i) v(i) = dist(rng);
    return v;
  };
  LorentzParams p;
  p.epsilon = epsilon;
  for (int t = 0; t < trials; ++t) {
    p.theta = draw(unit, m);
    p.phi = RVector::Zero(m);
    RVector x = draw(unit, g.dim);
    RVector y = apply_transform(lorentz_transform(g, p), x);
    rep.rotation_norm_max =
        std::max(rep.rotation_norm_max,
                 std::abs(y.head(m).squaredNorm() - x.head(m).squaredNorm()));
    rep.rotation_time_max = std::max(rep.rotation_time_max, std::abs(y(m) - x(m)));
  }
  for (int t = 0; t < trials; ++t) {
    p.theta = RVector::Zero(m);
    p.phi = draw(rapidity, m);
    RVector x = draw(unit, g.dim);
    RVector y = apply_transform(lorentz_transform(g, p), x);
    double deviation = std::abs(interval(y) - interval(x));
    rep.boost_interval_max = std::max(rep.boost_interval_max, deviation);
    if (!rep.witness_found && deviation > witness_threshold) {
      rep.witness_found = true;
      rep.witness = {p.phi, x, deviation};
    }
  }
  return rep;
}

}  // namespace liegrid
