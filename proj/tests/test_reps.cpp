#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "liegrid/basis.hpp"
#include "liegrid/reps.hpp"

using namespace liegrid;

namespace {

StructureTensors tensors_for(int n) { return compute_tensors(canonical_basis(n)); }

double commutation_residual(const Rep& r, const StructureTensors& t) {
  int m = t.dim() - 1;
  double worst = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      CMatrix lhs = commutator(r.gens[i], r.gens[j]);
      CMatrix rhs = CMatrix::Zero(r.dim, r.dim);
      for (int k = 0; k < m; ++k) rhs += Complex(0.0, t.f(i, j, k)) * r.gens[k];
      worst = std::max(worst, max_abs(lhs - rhs));
    }
  return worst;
}

double hermiticity_residual(const Rep& r) {
  double worst = 0.0;
  for (const CMatrix& g : r.gens) worst = std::max(worst, max_abs(g - g.adjoint()));
  return worst;
}

double casimir_residual(const Rep& r, double expected) {
  CMatrix sum = CMatrix::Zero(r.dim, r.dim);
  for (const CMatrix& g : r.gens) sum += g * g;
  return max_abs(sum - expected * CMatrix::Identity(r.dim, r.dim));
}

}  // namespace

TEST_CASE("parse round-trips through str") {
  for (const char* text : {"F", "A", "1", "F*A", "F+A", "sym2(F)", "antisym2(F*A)",
                           "(F+A)*F", "sym2(F)*antisym2(F)+1", "F*A*F", "F+A+1"}) {
    RepSpec s = RepSpec::parse(text);
    CHECK(s.str() == text);
    CHECK(RepSpec::parse(s.str()).str() == s.str());
  }
}

TEST_CASE("parse normalizes whitespace and redundant parens") {
  CHECK(RepSpec::parse(" F * F + 1 ").str() == "F*F+1");
  CHECK(RepSpec::parse("((F))").str() == "F");
  CHECK(RepSpec::parse("sym2( F* A)").str() == "sym2(F*A)");
  CHECK(RepSpec::parse("(F*A)+(1)").str() == "F*A+1");
}

TEST_CASE("parse rejects malformed expressions") {
  for (const char* text : {"", "F*", "*F", "F**A", "sym2(F", "sym2 F", "Q",
                           "F A", "()", "F+", "antisym2()", "sym3(F)"}) {
    CHECK_THROWS_AS(RepSpec::parse(text), std::invalid_argument);
  }
}

TEST_CASE("realized dimensions follow the constructors") {
  for (int n : {2, 3}) {
    StructureTensors t = tensors_for(n);
    CHECK(realize(RepSpec::parse("F"), t).dim == n);
    CHECK(realize(RepSpec::parse("A"), t).dim == n);
    CHECK(realize(RepSpec::parse("1"), t).dim == 1);
    CHECK(realize(RepSpec::parse("F*A"), t).dim == n * n);
    CHECK(realize(RepSpec::parse("F+A"), t).dim == 2 * n);
    CHECK(realize(RepSpec::parse("sym2(F)"), t).dim == n * (n + 1) / 2);
    CHECK(realize(RepSpec::parse("antisym2(F)"), t).dim == n * (n - 1) / 2);
    CHECK(realize(RepSpec::parse("sym2(F*A)"), t).dim == n * n * (n * n + 1) / 2);
    CHECK(static_cast<int>(realize(RepSpec::parse("F"), t).gens.size()) == n * n - 1);
  }
}

TEST_CASE("every constructor preserves the commutation tensor") {
  for (int n : {2, 3}) {
    StructureTensors t = tensors_for(n);
    for (const char* text : {"F", "A", "1", "F*A", "F*F", "F+A", "sym2(F)",
                             "antisym2(F)", "sym2(F)+antisym2(F)", "antisym2(F*A)"}) {
      Rep r = realize(RepSpec::parse(text), t);
      CAPTURE(n);
      CAPTURE(text);
      CHECK(commutation_residual(r, t) < 1e-12);
      CHECK(hermiticity_residual(r) < 1e-13);
    }
  }
}

TEST_CASE("antisymmetric square of the su(2) fundamental is trivial") {
  StructureTensors t = tensors_for(2);
  Rep r = realize(RepSpec::parse("antisym2(F)"), t);
  CHECK(r.dim == 1);
  for (const CMatrix& g : r.gens) CHECK(max_abs(g) < 1e-14);
}

TEST_CASE("quadratic casimirs of small representations") {
  {
    StructureTensors t = tensors_for(2);
    CHECK(casimir_residual(realize(RepSpec::parse("F"), t), 0.75) < 1e-13);
    CHECK(casimir_residual(realize(RepSpec::parse("sym2(F)"), t), 2.0) < 1e-13);
  }
  {
    StructureTensors t = tensors_for(3);
    CHECK(casimir_residual(realize(RepSpec::parse("F"), t), 4.0 / 3.0) < 1e-13);
    CHECK(casimir_residual(realize(RepSpec::parse("A"), t), 4.0 / 3.0) < 1e-13);
    CHECK(casimir_residual(realize(RepSpec::parse("antisym2(F)"), t), 4.0 / 3.0) < 1e-13);
    CHECK(casimir_residual(realize(RepSpec::parse("sym2(F)"), t), 10.0 / 3.0) < 1e-13);
  }
}

TEST_CASE("multiplicities in su(2) tensor products") {
  StructureTensors t = tensors_for(2);
  Rep ff = realize(RepSpec::parse("F*F"), t);
  Rep fa = realize(RepSpec::parse("F*A"), t);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("sym2(F)"), t), ff) == 1);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("1"), t), ff) == 1);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("F"), t), ff) == 0);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("1"), t), fa) == 1);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("F"), t), fa) == 0);
}

TEST_CASE("multiplicities in su(3) tensor products") {
  StructureTensors t = tensors_for(3);
  Rep ff = realize(RepSpec::parse("F*F"), t);
  Rep fa = realize(RepSpec::parse("F*A"), t);
  Rep aa = realize(RepSpec::parse("A*A"), t);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("sym2(F)"), t), ff) == 1);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("antisym2(F)"), t), ff) == 1);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("A"), t), ff) == 1);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("F"), t), ff) == 0);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("1"), t), ff) == 0);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("1"), t), fa) == 1);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("F"), t), aa) == 1);
}

TEST_CASE("oracle counts repeated summands and survives similarity trials") {
  StructureTensors t = tensors_for(2);
  Rep f = realize(RepSpec::parse("F"), t);
  Rep f_twice = realize(RepSpec::parse("F+F"), t);
  CHECK(multiplicity_oracle(f, f_twice, 3) == 2);
  Rep ff = realize(RepSpec::parse("F*F"), t);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("sym2(F)"), t), ff, 3) == 1);
  CHECK(multiplicity_oracle(realize(RepSpec::parse("F"), t), ff, 3) == 0);
}

TEST_CASE("oracle rejects mismatched group ranks") {
  StructureTensors t2 = tensors_for(2);
  StructureTensors t3 = tensors_for(3);
  Rep a = realize(RepSpec::parse("F"), t2);
  Rep b = realize(RepSpec::parse("F"), t3);
  CHECK_THROWS_AS(multiplicity_oracle(a, b), std::invalid_argument);
}
