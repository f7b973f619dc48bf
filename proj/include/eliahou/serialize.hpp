#pragma once

#include <json.hpp>

#include "eliahou/complexes.hpp"
#include "eliahou/fragment.hpp"
#include "eliahou/homology.hpp"
#include "eliahou/module.hpp"
#include "eliahou/resolution.hpp"

namespace eliahou {

// Insertion-ordered so that dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json config_json(const TermOrder& order, const Field& k);

GeneratorMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const GeneratorMatrix& a);

Json integer_to_json(const mpz_class& v);
mpz_class integer_from_json(const Json& j);
Json degree_to_json(const SDegree& m);
SDegree degree_from_json(const Json& j);
Json monomial_to_json(const Monomial& x);
Monomial monomial_from_json(const Json& j);

// [[index, "p/q"], ...]
Json sparse_to_json(const SparseVec& v);
SparseVec sparse_from_json(const Json& j);

Json chain_basis_to_json(const ChainBasis& b);
ChainBasis chain_basis_from_json(const Json& j);

// [{"monomial": [...], "coeff": "p/q"}, ...], decreasing under the order.
Json polynomial_to_json(const Polynomial& p, const TermOrder& order);
Polynomial polynomial_from_json(const Json& j, const Field& k);

Json generator_id_to_json(const GeneratorId& id);
GeneratorId generator_id_from_json(const Json& j, const Semigroup& s);

// [{"generator": id, "coeff": polynomial}, ...]
Json module_element_to_json(const ModuleElement& v, const TermOrder& order);
ModuleElement module_element_from_json(const Json& j, const Semigroup& s, const Field& k);

Json generator_record_to_json(const GeneratorRecord& r, const TermOrder& order);
GeneratorRecord generator_record_from_json(const Json& j, const Semigroup& s, const Field& k);

Json fragment_to_json(const ResolutionFragment& f, const TermOrder& order);
ResolutionFragment fragment_from_json(const Json& j, const Semigroup& s, const Field& k);
Json report_to_json(const FragmentReport& r);

Json decomposition_to_json(const DecompositionResult& d, const ResolutionEngine& engine);

Json nabla_to_json(const NablaComplex& k);
Json delta_to_json(const DeltaComplex& k);

}  // namespace eliahou
