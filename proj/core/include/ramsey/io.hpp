#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/cosets.hpp"
#include "ramsey/coxeter.hpp"
#include "ramsey/faces.hpp"
#include "ramsey/function_monoids.hpp"
#include "ramsey/monoid.hpp"
#include "ramsey/poset.hpp"

namespace ramsey {

using Json = nlohmann::json;

/// Parse errors and missing or mistyped fields throw InputError naming the field.
Json parse_json(std::string_view text);

/// {"n": 3, "covers": [[0, 1], [1, 2]]}
Json poset_to_json(const FinitePoset& poset);
FinitePoset poset_from_json(const Json& j);

/// {"size", "identity", "gens": [element], "names": [generator name],
///  "mul": [[...]], "labels": [element name]}
Json monoid_to_json(const FiniteMonoid& monoid);
/// Reads "mul" and "identity"; "gens" and "names" are optional.
FiniteMonoid monoid_from_json(const Json& j);

/// {"dim": 2, "normals": [["1", "0"], ["0", "1"], ["1", "-1"]]}; integers are accepted too.
Arrangement arrangement_from_json(const Json& j);
Json arrangement_to_json(const Arrangement& arrangement);
/// [{"sign": "+0-", "witness": ["1", "0"]}, ...]
Json faces_to_json(const std::vector<Face>& faces);

/// {"poset": {...}, "order_preserving": bool, "k_level_lipschitz": int|null,
///  "chain_1_lipschitz": bool}
FunctionClassSpec function_class_spec_from_json(const Json& j);

/// {"type": "A"|"B"|"I2", "n": int} or {"custom_gens": [[...]], "matrix": [[...]]}
CoxeterRealization coxeter_from_json(const Json& j);

using ElementNamer = std::function<std::string(Index)>;

/// Hasse diagram, edges from lower to upper cover.
std::string hasse_dot(const FinitePoset& poset, const std::vector<std::string>& labels,
                      std::string_view graph_name = "P");

/// X(M) as a Hasse diagram; nodes are labelled by their owners.
std::string coset_dot(const CosetPoset& cosets, const ElementNamer& name,
                      std::string_view graph_name = "XM");

/// {"cosets": [{"owners": [...], "members": [...]}], "covers": [[i, j]],
///  "linear": bool, "witness": [name, name] | null}
Json coset_json(const FiniteMonoid& monoid, const CosetPoset& cosets, const ElementNamer& name);

/// One row per coset: "owners | {members}", owners joined by " = ".
std::string coset_table(const CosetPoset& cosets, const ElementNamer& name);

}  // namespace ramsey
