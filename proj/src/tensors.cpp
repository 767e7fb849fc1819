#include "liegrid/tensors.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace liegrid {

SymmetryReport symmetry_report(const Tensor3& f, const Tensor3& d, const Tolerance& tol) {
  const int m = f.extent();
  SymmetryReport rep;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        rep.f_antisym_12.max_violation =
            std::max(rep.f_antisym_12.max_violation, std::abs(f(a, b, c) + f(b, a, c)));
        rep.f_antisym_23.max_violation =
            std::max(rep.f_antisym_23.max_violation, std::abs(f(a, b, c) + f(a, c, b)));
        rep.d_sym_12.max_violation =
            std::max(rep.d_sym_12.max_violation, std::abs(d(a, b, c) - d(b, a, c)));
        rep.d_sym_23.max_violation =
            std::max(rep.d_sym_23.max_violation, std::abs(d(a, b, c) - d(a, c, b)));
      }
  for (SymmetryEntry* e :
       {&rep.f_antisym_12, &rep.f_antisym_23, &rep.d_sym_12, &rep.d_sym_23})
    e->ok = e->max_violation <= tol.algebraic;
  return rep;
}

StructureTensors compute_tensors(const GeneratorBasis& b, const Tolerance& tol) {
  const int m = b.dim();
  StructureTensors out;
  out.n = b.n;
  out.f = Tensor3(m);
  out.d = Tensor3(m);

  for (int mu = 0; mu < m; ++mu)
    for (int nu = 0; nu < m; ++nu) {
      // [J,J]/i and {J,J} are hermitian; the decomposition checks that and
      // rejects any imaginary residue above tolerance
      const CMatrix comm_over_i = Complex(0, -1) * commutator(b.mats[mu], b.mats[nu]);
      const RVector fc = decompose_hermitian(b, comm_over_i, tol);
      const RVector dc = decompose_hermitian(b, anticommutator(b.mats[mu], b.mats[nu]), tol);
      for (int lam = 0; lam < m; ++lam) {
        out.f(mu, nu, lam) = fc(lam);
        out.d(mu, nu, lam) = dc(lam);
      }
      // a commutator is traceless, so its component along the one traced basis
      // element vanishes identically: assert, then store the exact zero
      if (std::abs(out.f(mu, nu, m - 1)) > tol.algebraic)
        throw std::runtime_error("compute_tensors: commutator leaks into the trace direction");
      out.f(mu, nu, m - 1) = 0.0;
    }

  out.symmetry = symmetry_report(out.f, out.d, tol);
  return out;
}

JacobiReport jacobi_checks(const StructureTensors& t, std::uint64_t seed) {
  const int m = t.dim();
  const auto& f = t.f;
  const auto& d = t.d;
  JacobiReport rep;

  auto check_tuple = [&](int l, int mu, int nu, int ta) {
    double ff = 0.0, df = 0.0;
    for (int s = 0; s < m; ++s) {
      ff += f(l, mu, s) * f(s, nu, ta) + f(mu, nu, s) * f(s, l, ta) + f(nu, l, s) * f(s, mu, ta);
      df += d(l, mu, s) * f(s, nu, ta) + d(mu, nu, s) * f(s, l, ta) + d(nu, l, s) * f(s, mu, ta);
    }
    rep.ff_max = std::max(rep.ff_max, std::abs(ff));
    rep.df_max = std::max(rep.df_max, std::abs(df));
    ++rep.tuples;
  };

  if (t.n <= 6) {
    rep.exhaustive = true;
    for (int l = 0; l < m; ++l)
      for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu)
          for (int ta = 0; ta < m; ++ta) check_tuple(l, mu, nu, ta);
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int k = 0; k < 1'000'000; ++k) check_tuple(pick(rng), pick(rng), pick(rng), pick(rng));
  }
  return rep;
}

StructureTensors primed_tensors(const StructureTensors& t, const BasisChange& r,
                                const Tolerance& tol) {
  const int m = t.dim();
  if (r.r.rows() != m || r.r.cols() != m)
    throw std::invalid_argument("primed_tensors: change-of-basis size does not match tensors");

  auto transform = [&](const Tensor3& src) {
    Tensor3 t1(m), t2(m), out(m);
    // contract one slot at a time
    for (int mu = 0; mu < m; ++mu)
      for (int rho = 0; rho < m; ++rho)
        for (int ta = 0; ta < m; ++ta) {
          double acc = 0.0;
          for (int s = 0; s < m; ++s) acc += r.r(mu, s) * src(s, rho, ta);
          t1(mu, rho, ta) = acc;
        }
    for (int mu = 0; mu < m; ++mu)
      for (int nu = 0; nu < m; ++nu)
        for (int ta = 0; ta < m; ++ta) {
          double acc = 0.0;
          for (int rho = 0; rho < m; ++rho) acc += r.r(nu, rho) * t1(mu, rho, ta);
          t2(mu, nu, ta) = acc;
        }
    for (int mu = 0; mu < m; ++mu)
      for (int nu = 0; nu < m; ++nu)
        for (int lam = 0; lam < m; ++lam) {
          double acc = 0.0;
          for (int ta = 0; ta < m; ++ta) acc += t2(mu, nu, ta) * r.r_inverse(ta, lam);
          out(mu, nu, lam) = acc;
        }
    return out;
  };

  StructureTensors out;
  out.n = t.n;
  out.f = transform(t.f);
  out.d = transform(t.d);

  // the structural zero survives any valid change of basis; enforce it after
  // checking the contraction only left roundoff behind
  for (int mu = 0; mu < m; ++mu)
    for (int nu = 0; nu < m; ++nu) {
      if (std::abs(out.f(mu, nu, m - 1)) > tol.algebraic)
        throw std::runtime_error("primed_tensors: trace-direction column is not vanishing");
      out.f(mu, nu, m - 1) = 0.0;
    }

  out.symmetry = symmetry_report(out.f, out.d, tol);
  return out;
}

}  // namespace liegrid
