#ifndef UNICOMP_JSON_IO_H_
#define UNICOMP_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "unicomp/complex_matrix.h"
#include "unicomp/group.h"
#include "unicomp/integrate.h"

namespace unicomp {

using Json = nlohmann::ordered_json;

// Compact serialization with every floating value printed with 17
// significant digits (%.17g).
std::string dump_json(const Json& j);

// {"group":"U"|"SU","d":d,"lambda":[[...]]}; (d,d) written as 0.0 for SU.
Json to_json(const ParamMatrix& params);
ParamMatrix param_matrix_from_json(const Json& j);

// {"d":d,"re":[[...]],"im":[[...]]}. On input "d" (or "dim") is optional and
// inferred from the arrays.
Json to_json(const ComplexMatrix& m);
// {"re":[[...]],"im":[[...]]} without the dimension field.
Json to_json_entries(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const Json& j);

// JSON array of {"re","im","w"} objects.
std::vector<WeightedUnitary> weighted_set_from_json(const Json& j);
Json to_json(const DesignReport& report);

}  // namespace unicomp

#endif  // UNICOMP_JSON_IO_H_
