#include "liegrid/json_io.hpp"

#include <stdexcept>

namespace liegrid {

namespace {

Json tensor3_to_json(const Tensor3& t) {
  int m = t.extent();
  Json out = Json::array();
  for (int a = 0; a < m; ++a) {
    Json plane = Json::array();
    for (int b = 0; b < m; ++b) {
      Json line = Json::array();
      for (int c = 0; c < m; ++c) line.push_back(t(a, b, c));
      plane.push_back(std::move(line));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

Tensor3 tensor3_from_json(const Json& j, int m) {
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw std::invalid_argument("tensor3_from_json: bad outer extent");
  Tensor3 t(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) t(a, b, c) = j.at(a).at(b).at(c).get<double>();
  return t;
}

Json symmetry_entry_to_json(const SymmetryEntry& e) {
  return Json{{"max_violation", e.max_violation}, {"ok", e.ok}};
}

Json mats_to_json(const std::vector<CMatrix>& mats) {
  Json out = Json::array();
  for (const CMatrix& m : mats) out.push_back(matrix_to_json(m));
  return out;
}

}  // namespace

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex_from_json: expected [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix_from_json: expected nested array");
  Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("matrix_from_json: ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row.at(c));
  }
  return m;
}

std::string index_map_description() {
  return "generators 0..P-1 symmetric pairs (lex), P..2P-1 antisymmetric pairs, "
         "2P..N^2-2 diagonal traceless, N^2-1 traced (P = N(N-1)/2); "
         "spacetime index lambda = N*lambda1 + lambda0 with lambda1 slow; "
         "kron(a, b) puts a on the slow (left) index; intertwiner unknown "
         "u = ((((lambda1*N + lambda0)*dimA + a)*dimB + b)*dimC + c)*dimD + d";
}

Json basis_to_json(const GeneratorBasis& b) {
  return Json{{"n", b.n},
              {"kind", b.kind == BasisKind::canonical ? "canonical" : "custom"},
              {"source_index", b.source_index},
              {"mats", mats_to_json(b.mats)}};
}

GeneratorBasis basis_from_json(const Json& j) {
  GeneratorBasis b;
  b.n = j.at("n").get<int>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind != "canonical" && kind != "custom")
    throw std::invalid_argument("basis_from_json: unknown kind \"" + kind + "\"");
  b.kind = kind == "canonical" ? BasisKind::canonical : BasisKind::custom;
  const Json& mats = j.at("mats");
  if (static_cast<int>(mats.size()) != b.n * b.n)
    throw std::invalid_argument("basis_from_json: expected n^2 matrices");
  for (const Json& m : mats) {
    CMatrix mat = matrix_from_json(m);
    if (mat.rows() != b.n || mat.cols() != b.n)
      throw std::invalid_argument("basis_from_json: matrix size mismatch");
    b.mats.push_back(std::move(mat));
  }
  if (j.contains("source_index"))
    b.source_index = j.at("source_index").get<std::vector<int>>();
  else
    for (int i = 0; i < b.n * b.n; ++i) b.source_index.push_back(i);
  return b;
}

Json tensors_to_json(const StructureTensors& t) {
  int m = t.dim();
  return Json{{"n", t.n},
              {"dims", Json::array({m, m, m})},
              {"f", tensor3_to_json(t.f)},
              {"d", tensor3_to_json(t.d)},
              {"symmetry",
               Json{{"f_antisym_12", symmetry_entry_to_json(t.symmetry.f_antisym_12)},
                    {"f_antisym_23", symmetry_entry_to_json(t.symmetry.f_antisym_23)},
                    {"d_sym_12", symmetry_entry_to_json(t.symmetry.d_sym_12)},
                    {"d_sym_23", symmetry_entry_to_json(t.symmetry.d_sym_23)}}}};
}

StructureTensors tensors_from_json(const Json& j, const Tolerance& tol) {
  int n = j.at("n").get<int>();
  int m = n * n;
  const Json& dims = j.at("dims");
  if (!dims.is_array() || dims.size() != 3 || dims.at(0).get<int>() != m ||
      dims.at(1).get<int>() != m || dims.at(2).get<int>() != m)
    throw std::invalid_argument("tensors_from_json: dims must be [n^2, n^2, n^2]");
  StructureTensors t;
  t.n = n;
  t.f = tensor3_from_json(j.at("f"), m);
  t.d = tensor3_from_json(j.at("d"), m);
  t.symmetry = symmetry_report(t.f, t.d, tol);
  return t;
}

Json spacetime_to_json(const SpacetimeGenerators& g) {
  return Json{{"n", g.n},
              {"j", mats_to_json(g.j)},
              {"k_plus", mats_to_json(g.k_plus)},
              {"k_minus", mats_to_json(g.k_minus)}};
}

Json similarity_to_json(const SimilarityMap& s) {
  return Json{{"n", s.n},
              {"s", matrix_to_json(s.s)},
              {"s_inverse", matrix_to_json(s.s_inverse)},
              {"det", complex_to_json(s.det)},
              {"det_closed_form", complex_to_json(expected_det_s(s.n))}};
}

Json momentum_to_json(const MomentumSolution& sol) {
  auto block_to_json = [](const MomentumBlock& b) {
    Json elements = Json::array();
    for (const MomentumElement& e : b.elements)
      elements.push_back(Json{{"tilde", mats_to_json(e.tilde)},
                              {"phys", mats_to_json(e.phys)}});
    return Json{{"dim", b.dim()},
                {"out_rows", b.out_rows},
                {"in_cols", b.in_cols},
                {"residual", b.residual},
                {"elements", std::move(elements)}};
  };
  return Json{{"n", sol.n},
              {"epsilon", sol.epsilon},
              {"a", sol.a.str()},
              {"b", sol.b.str()},
              {"c", sol.c.str()},
              {"d", sol.d.str()},
              {"index_map", index_map_description()},
              {"plus", block_to_json(sol.plus)},
              {"minus", block_to_json(sol.minus)}};
}

}  // namespace liegrid
