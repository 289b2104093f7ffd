#ifndef GENUS1_JSON_IO_HPP
#define GENUS1_JSON_IO_HPP

#include <json.hpp>

#include "genus1/gp_fm.hpp"
#include "genus1/laurent.hpp"
#include "genus1/sheaf_ops.hpp"
#include "genus1/triples.hpp"

namespace g1 {

using nlohmann::json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const json& j);

json poly_to_json(const Poly& p);
Poly poly_from_json(const Field& f, const json& j);

json laurent_matrix_to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const Field& f, const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

json charge_to_json(const Charge& c);

json descriptor_to_json(const Descriptor& d);
Descriptor descriptor_from_json(const Field& f, const json& j);

json module_to_json(const TorsionModuleDescriptor& t);
TorsionModuleDescriptor module_from_json(const Field& f, const json& j);

json nodal_triple_to_json(const NodalTriple& t);
NodalTriple nodal_triple_from_json(const Field& f, const json& j);

json cuspidal_triple_to_json(const CuspidalTriple& t);
CuspidalTriple cuspidal_triple_from_json(const Field& f, const json& j);

json decomposition_to_json(const DecompositionResult& r);

/// Dispatches one operation: {"op": name, "args": {...}} -> result object.
/// Throws g1::error on invalid input; "inconclusive" results use the code
/// "inconclusive".
json run_op(const std::string& op, const json& args);

/// Named verification suites (birkhoff, cohomology, tensor, duality, stable,
/// pushforward, or all); deterministic given the seed.
json run_verify(const std::string& suite, const Field& field, std::uint64_t seed, long cases);

}  // namespace g1

#endif
