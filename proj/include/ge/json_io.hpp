#ifndef GE_JSON_IO_HPP
#define GE_JSON_IO_HPP

#include <json.hpp>

#include "ge/analogue.hpp"
#include "ge/artin.hpp"
#include "ge/braid.hpp"
#include "ge/ge_action.hpp"
#include "ge/sge.hpp"

namespace ge {

// Fixed key orders throughout; CLI output must be byte-stable across runs.
using Json = nlohmann::ordered_json;

Json word_to_json(const BraidWord &w);
Json ge_to_json(const GeElement &e);
Json sge_to_json(const SgeElement &e);
Json matrix_to_json(const IntMatrix &m);

// Root-indexed vectors serialize as {label: value} with nonzero entries in
// ascending label order; Coxeter elements as root permutation arrays.
Json root_vector_to_json(const std::vector<Int> &v);
Json artin_to_json(const ArtinElement &e);
Json root_system_to_json(const RootSystem &rs);
Json relation_report_to_json(const RelationReport &report);

Json analogue_result_to_json(const AnalogueResult &result, const ConstraintSystem &cs);

// Presentation file schema:
// {"generators": [...], "exponents": [[a, b, m], ...],
//  "points": [...], "rep": {gen: [image labels]}}
void parse_presentation_json(const Json &doc, Presentation &pres, PermRep &rep);

} // namespace ge

#endif
