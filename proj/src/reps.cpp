#include "liegrid/reps.hpp"

#include <cctype>
#include <random>
#include <stdexcept>

#include "liegrid/basis.hpp"

namespace liegrid {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("rep expression: " + what + " at position " +
                                std::to_string(pos) + " in \"" + text + "\"");
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  RepSpec expr() {
    RepSpec lhs = term();
    while (eat('+')) lhs = RepSpec::directsum(std::move(lhs), term());
    return lhs;
  }

  RepSpec term() {
    RepSpec lhs = factor();
    while (eat('*')) lhs = RepSpec::tensor(std::move(lhs), factor());
    return lhs;
  }

  RepSpec factor() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      RepSpec inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '1') {
      ++pos;
      return RepSpec::trivial();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])))) ++pos;
      std::string word = text.substr(start, pos - start);
      if (word == "F") return RepSpec::fundamental();
      if (word == "A") return RepSpec::antifundamental();
      if (word == "sym2" || word == "antisym2") {
        if (!eat('(')) fail("expected '(' after " + word);
        RepSpec inner = expr();
        if (!eat(')')) fail("expected ')'");
        return word == "sym2" ? RepSpec::sym2(std::move(inner))
                              : RepSpec::antisym2(std::move(inner));
      }
      pos = start;
      fail("unknown name \"" + word + "\"");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

// Precedence for printing: directsum 0, tensor 1, leaves/calls 2.
int precedence(RepSpec::Kind k) {
  switch (k) {
    case RepSpec::Kind::directsum: return 0;
    case RepSpec::Kind::tensor: return 1;
    default: return 2;
  }
}

std::string print(const RepSpec& s, int parent_prec) {
  int prec = precedence(s.kind);
  std::string out;
  switch (s.kind) {
    case RepSpec::Kind::fundamental: out = "F"; break;
    case RepSpec::Kind::antifundamental: out = "A"; break;
    case RepSpec::Kind::trivial: out = "1"; break;
    case RepSpec::Kind::tensor:
      out = print(s.children[0], prec) + "*" + print(s.children[1], prec + 1);
      break;
    case RepSpec::Kind::directsum:
      out = print(s.children[0], prec) + "+" + print(s.children[1], prec + 1);
      break;
    case RepSpec::Kind::sym2:
      out = "sym2(" + print(s.children[0], 0) + ")";
      break;
    case RepSpec::Kind::antisym2:
      out = "antisym2(" + print(s.children[0], 0) + ")";
      break;
  }
  if (prec < parent_prec) out = "(" + out + ")";
  return out;
}

std::vector<CMatrix> tensor_gens(const Rep& a, const Rep& b) {
  std::vector<CMatrix> gens;
  gens.reserve(a.gens.size());
  CMatrix ia = CMatrix::Identity(a.dim, a.dim);
  CMatrix ib = CMatrix::Identity(b.dim, b.dim);
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    gens.push_back(kronecker(a.gens[i], ib) + kronecker(ia, b.gens[i]));
  return gens;
}

std::vector<CMatrix> directsum_gens(const Rep& a, const Rep& b) {
  std::vector<CMatrix> gens;
  gens.reserve(a.gens.size());
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    CMatrix g = CMatrix::Zero(a.dim + b.dim, a.dim + b.dim);
    g.topLeftCorner(a.dim, a.dim) = a.gens[i];
    g.bottomRightCorner(b.dim, b.dim) = b.gens[i];
    gens.push_back(std::move(g));
  }
  return gens;
}

// Orthonormal basis of the (anti)symmetric subspace of V (x) V as columns of
// a d^2 x ds isometry: e_i(x)e_i for sym, (e_i(x)e_j +- e_j(x)e_i)/sqrt(2), i<j.
CMatrix square_isometry(int d, bool symmetric) {
  int ds = symmetric ? d * (d + 1) / 2 : d * (d - 1) / 2;
  CMatrix q = CMatrix::Zero(d * d, ds);
  int col = 0;
  if (symmetric)
    for (int i = 0; i < d; ++i) q(i * d + i, col++) = 1.0;
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double sign = symmetric ? 1.0 : -1.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      q(i * d + j, col) = inv_sqrt2;
      q(j * d + i, col) = sign * inv_sqrt2;
      ++col;
    }
  return q;
}

std::vector<CMatrix> square_gens(const Rep& a, bool symmetric) {
  Rep doubled;
  doubled.n = a.n;
  doubled.dim = a.dim * a.dim;
  doubled.gens = tensor_gens(a, a);
  CMatrix q = square_isometry(a.dim, symmetric);
  std::vector<CMatrix> gens;
  gens.reserve(doubled.gens.size());
  for (const CMatrix& g : doubled.gens) gens.push_back(q.adjoint() * g * q);
  return gens;
}

CMatrix random_invertible(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    CMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::JacobiSVD<CMatrix> svd(m);
    double smin = svd.singularValues()(d - 1);
    double smax = svd.singularValues()(0);
    if (smin > 1e-3 * smax) return m;
  }
}

int equivariant_map_count(const std::vector<CMatrix>& gc,
                          const std::vector<CMatrix>& gp, const Tolerance& tol) {
  int dc = static_cast<int>(gc.front().rows());
  int dp = static_cast<int>(gp.front().rows());
  auto unknown = [dc](int p, int c) { return p * dc + c; };
  std::vector<SparseRow> rows;
  rows.reserve(gc.size() * static_cast<std::size_t>(dp) * dc);
  for (std::size_t i = 0; i < gc.size(); ++i) {
    for (int p = 0; p < dp; ++p)
      for (int c = 0; c < dc; ++c) {
        SparseRow row;
        for (int q = 0; q < dp; ++q)
          if (gp[i](p, q) != 0.0) row.emplace_back(unknown(q, c), gp[i](p, q));
        for (int s = 0; s < dc; ++s)
          if (gc[i](s, c) != 0.0) row.emplace_back(unknown(p, s), -gc[i](s, c));
        rows.push_back(std::move(row));
      }
  }
  return static_cast<int>(nullspace_basis(rows, dp * dc, tol).size());
}

}  // namespace

RepSpec RepSpec::parse(const std::string& text) {
  Parser p{text};
  RepSpec s = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return s;
}

std::string RepSpec::str() const { return print(*this, 0); }

Rep realize(const RepSpec& spec, const StructureTensors& t) {
  Rep r;
  r.n = t.n;
  r.spec = spec;
  switch (spec.kind) {
    case RepSpec::Kind::fundamental: {
      GeneratorBasis b = canonical_basis(t.n);
      r.dim = t.n;
      r.gens.assign(b.mats.begin(), b.mats.end() - 1);
      break;
    }
    case RepSpec::Kind::antifundamental: {
      GeneratorBasis b = canonical_basis(t.n);
      r.dim = t.n;
      std::vector<CMatrix> traceless(b.mats.begin(), b.mats.end() - 1);
      r.gens = anti_rep(traceless);
      break;
    }
    case RepSpec::Kind::trivial:
      r.dim = 1;
      r.gens.assign(t.dim() - 1, CMatrix::Zero(1, 1));
      break;
    case RepSpec::Kind::tensor: {
      Rep a = realize(spec.children[0], t);
      Rep b = realize(spec.children[1], t);
      r.dim = a.dim * b.dim;
      r.gens = tensor_gens(a, b);
      break;
    }
    case RepSpec::Kind::directsum: {
      Rep a = realize(spec.children[0], t);
      Rep b = realize(spec.children[1], t);
      r.dim = a.dim + b.dim;
      r.gens = directsum_gens(a, b);
      break;
    }
    case RepSpec::Kind::sym2: {
      Rep a = realize(spec.children[0], t);
      r.dim = a.dim * (a.dim + 1) / 2;
      r.gens = square_gens(a, true);
      break;
    }
    case RepSpec::Kind::antisym2: {
      Rep a = realize(spec.children[0], t);
      r.dim = a.dim * (a.dim - 1) / 2;
      r.gens = square_gens(a, false);
      break;
    }
  }
  return r;
}

int multiplicity_oracle(const Rep& c, const Rep& product, int trials,
                        std::uint64_t seed) {
  if (c.n != product.n)
    throw std::invalid_argument("multiplicity_oracle: mismatched group rank");
  if (c.gens.size() != product.gens.size())
    throw std::invalid_argument("multiplicity_oracle: mismatched generator count");
  Tolerance tol;
  int count = equivariant_map_count(c.gens, product.gens, tol);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    CMatrix tc = random_invertible(c.dim, rng);
    CMatrix tp = random_invertible(product.dim, rng);
    CMatrix tc_inv = tc.fullPivLu().inverse();
    CMatrix tp_inv = tp.fullPivLu().inverse();
    std::vector<CMatrix> gc, gp;
    gc.reserve(c.gens.size());
    gp.reserve(product.gens.size());
    for (const CMatrix& g : c.gens) gc.push_back(tc_inv * g * tc);
    for (const CMatrix& g : product.gens) gp.push_back(tp_inv * g * tp);
    int again = equivariant_map_count(gc, gp, tol);
    if (again != count)
      throw std::runtime_error("multiplicity_oracle: count unstable under similarity (" +
                               std::to_string(count) + " vs " + std::to_string(again) + ")");
  }
  return count;
}

}  // namespace liegrid
