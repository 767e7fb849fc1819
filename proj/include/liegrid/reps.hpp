#ifndef LIEGRID_REPS_HPP
#define LIEGRID_REPS_HPP

#include <string>

#include "liegrid/tensors.hpp"

namespace liegrid {

/// Representation expression. Grammar accepted by parse():
///   expr   := term { '+' term }            direct sum
///   term   := factor { '*' factor }        tensor product
///   factor := 'F' | 'A' | '1'              fundamental / antifundamental / trivial
///           | 'sym2' '(' expr ')'          symmetric square
///           | 'antisym2' '(' expr ')'      antisymmetric square
///           | '(' expr ')'
struct RepSpec {
  enum class Kind { fundamental, antifundamental, trivial, tensor, directsum, sym2, antisym2 };

  Kind kind = Kind::fundamental;
  std::vector<RepSpec> children;

  static RepSpec parse(const std::string& text);
  std::string str() const;

  static RepSpec fundamental() { return {Kind::fundamental, {}}; }
  static RepSpec antifundamental() { return {Kind::antifundamental, {}}; }
  static RepSpec trivial() { return {Kind::trivial, {}}; }
  static RepSpec tensor(RepSpec a, RepSpec b) { return {Kind::tensor, {std::move(a), std::move(b)}}; }
  static RepSpec directsum(RepSpec a, RepSpec b) { return {Kind::directsum, {std::move(a), std::move(b)}}; }
  static RepSpec sym2(RepSpec a) { return {Kind::sym2, {std::move(a)}}; }
  static RepSpec antisym2(RepSpec a) { return {Kind::antisym2, {std::move(a)}}; }
};

/// Realized representation over su(N): one hermitian dim x dim generator per
/// traceless canonical direction, N^2 - 1 in all, satisfying the same
/// commutation tensor f as the canonical basis.
struct Rep {
  int n = 0;
  int dim = 0;
  RepSpec spec;
  std::vector<CMatrix> gens;
};

Rep realize(const RepSpec& spec, const StructureTensors& t);

/// Dimension of the space of equivariant maps X: c -> product with
/// X J_c = J_product X, via brute-force nullspace of the stacked system.
/// When trials > 0 the count is re-derived under that many random similarity
/// conjugations of both reps and must come out identical each time.
int multiplicity_oracle(const Rep& c, const Rep& product, int trials = 0,
                        std::uint64_t seed = 12345);

}  // namespace liegrid

#endif
