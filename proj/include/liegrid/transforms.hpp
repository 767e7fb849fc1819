#ifndef LIEGRID_TRANSFORMS_HPP
#define LIEGRID_TRANSFORMS_HPP

#include <cstdint>

#include "liegrid/spacetime.hpp"

namespace liegrid {

/// Finite transform D = exp(i phi . K^{(eps)}) exp(i theta . J) acting on the
/// N^2-dimensional spacetime vector. theta and phi each carry N^2 - 1 entries.
struct LorentzParams {
  RVector theta;
  RVector phi;
  int epsilon = +1;
};

CMatrix lorentz_transform(const SpacetimeGenerators& g, const LorentzParams& p);

/// D x for a real vector x. The result of a rotation or boost stays real;
/// a significant imaginary residue throws.
RVector apply_transform(const CMatrix& d, const RVector& x, const Tolerance& tol = {});

/// Interval sum_{i<last} (x^i)^2 - (x^last)^2.
double interval(const RVector& x);

struct WitnessRecord {
  RVector phi;
  RVector x;
  double deviation = 0.0;
};

/// Seeded random sweep: `trials` pure rotations checking that the spatial
/// norm and the time component are preserved, then `trials` pure boosts
/// checking the interval. The first boost deviating from interval
/// preservation by more than witness_threshold is recorded (the sweep still
/// runs to completion so the maxima cover every trial).
struct InvarianceReport {
  int n = 0;
  int epsilon = +1;
  std::uint64_t seed = 0;
  int trials = 0;
  double rotation_norm_max = 0.0;
  double rotation_time_max = 0.0;
  double boost_interval_max = 0.0;
  bool witness_found = false;
  WitnessRecord witness;
};

InvarianceReport invariance_report(const SpacetimeGenerators& g, int epsilon,
                                   int trials = 100, std::uint64_t seed = 777,
                                   double witness_threshold = 1e-3);

}  // namespace liegrid

#endif
