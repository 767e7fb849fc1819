#ifndef LIEGRID_TENSORS_HPP
#define LIEGRID_TENSORS_HPP

#include <cstdint>
#include <vector>

#include "liegrid/basis.hpp"

namespace liegrid {

/// Real cubic tensor with equal extents, stored flat in row-major order.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int extent)
      : extent_(extent), v_(static_cast<std::size_t>(extent) * extent * extent, 0.0) {}

  double& operator()(int a, int b, int c) { return v_[idx(a, b, c)]; }
  double operator()(int a, int b, int c) const { return v_[idx(a, b, c)]; }
  int extent() const { return extent_; }
  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

 private:
  std::size_t idx(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * extent_ + b) * extent_ + c;
  }
  int extent_ = 0;
  std::vector<double> v_;
};

struct SymmetryEntry {
  double max_violation = 0.0;
  bool ok = false;
};

/// Measured symmetry of the tensors. Antisymmetry/symmetry in the first index
/// pair holds for every valid basis; the (2,3) entries hold for the canonical
/// basis and may fail for custom ones — the report states, never assumes.
struct SymmetryReport {
  SymmetryEntry f_antisym_12, f_antisym_23, d_sym_12, d_sym_23;
};

struct StructureTensors {
  int n = 0;
  Tensor3 f, d;
  SymmetryReport symmetry;

  int dim() const { return n * n; }
};

SymmetryReport symmetry_report(const Tensor3& f, const Tensor3& d, const Tolerance& tol = {});

/// f^{mu nu lambda} and d^{mu nu lambda} from [J,J] = i f J and {J,J} = d J.
/// The commutator column for the trace direction is asserted below tolerance
/// and then stored as an exact zero (a trace of a commutator vanishes, and
/// only the last basis element carries trace).
StructureTensors compute_tensors(const GeneratorBasis& b, const Tolerance& tol = {});

struct JacobiReport {
  double ff_max = 0.0;
  double df_max = 0.0;
  std::uint64_t tuples = 0;
  bool exhaustive = true;
};

/// Quadratic identities
///   f^{l m s} f^{s n t} + f^{m n s} f^{s l t} + f^{n l s} f^{s m t} = 0
///   d^{l m s} f^{s n t} + d^{m n s} f^{s l t} + d^{n l s} f^{s m t} = 0
/// checked over all index tuples up to N=6, over a seeded million-tuple sample
/// beyond that.
JacobiReport jacobi_checks(const StructureTensors& t, std::uint64_t seed = 12345);

/// Tensors of the primed basis from those of the unprimed one:
/// f'^{mu nu lambda} = r^mu_sigma r^nu_rho f^{sigma rho tau} rinv^tau_lambda.
StructureTensors primed_tensors(const StructureTensors& t, const BasisChange& r,
                                const Tolerance& tol = {});

}  // namespace liegrid

#endif
