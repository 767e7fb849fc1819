#ifndef LIEGRID_JSON_IO_HPP
#define LIEGRID_JSON_IO_HPP

#include "json.hpp"
#include "liegrid/momentum.hpp"

namespace liegrid {

using Json = nlohmann::json;

/// Complex numbers serialize as [re, im]; matrices as row-major nested
/// arrays of those pairs; rank-3 tensors as triple-nested real arrays.
Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

/// Fixed description of every index convention the artifacts rely on.
std::string index_map_description();

Json basis_to_json(const GeneratorBasis& b);
GeneratorBasis basis_from_json(const Json& j);

Json tensors_to_json(const StructureTensors& t);
StructureTensors tensors_from_json(const Json& j, const Tolerance& tol = {});

Json spacetime_to_json(const SpacetimeGenerators& g);
Json similarity_to_json(const SimilarityMap& s);
Json momentum_to_json(const MomentumSolution& sol);

}  // namespace liegrid

#endif
