#include "ramsey/io.hpp"

#include <sstream>

namespace ramsey {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object around \"" + std::string(key) + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError("missing field \"" + std::string(key) + "\"");
  return *it;
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("field \"" + std::string(key) + "\" has the wrong type");
  }
}

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw InputError("field \"normals\" holds a value that is not a rational string or integer");
}

std::string join(const std::vector<Index>& items, const ElementNamer& name, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += name(items[i]);
  }
  return s;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json poset_to_json(const FinitePoset& poset) {
  Json covers = Json::array();
  for (auto [a, b] : poset.covers()) covers.push_back({a, b});
  return Json{{"n", poset.size()}, {"covers", covers}};
}

FinitePoset poset_from_json(const Json& j) {
  const auto n = get<std::size_t>(j, "n");
  const auto pairs = get<std::vector<IndexPair>>(j, "covers");
  return FinitePoset::from_covers(n, pairs);
}

Json monoid_to_json(const FiniteMonoid& monoid) {
  const auto n = static_cast<Index>(monoid.size());
  Json mul = Json::array();
  for (Index a = 0; a < n; ++a) {
    Json row = Json::array();
    for (Index b = 0; b < n; ++b) row.push_back(monoid.product(a, b));
    mul.push_back(std::move(row));
  }
  Json labels = Json::array();
  for (Index e = 0; e < n; ++e) labels.push_back(monoid.name(e));
  return Json{{"size", n},
              {"identity", monoid.identity()},
              {"gens", monoid.generators()},
              {"names", monoid.generator_names()},
              {"mul", mul},
              {"labels", labels}};
}

FiniteMonoid monoid_from_json(const Json& j) {
  const auto mul = get<std::vector<std::vector<Index>>>(j, "mul");
  const auto identity = get<Index>(j, "identity");
  std::optional<std::vector<Index>> gens;
  if (j.contains("gens")) gens = get<std::vector<Index>>(j, "gens");
  std::vector<std::string> names;
  if (j.contains("names")) names = get<std::vector<std::string>>(j, "names");
  if (j.contains("size") && get<std::size_t>(j, "size") != mul.size()) {
    throw InputError("field \"size\" disagrees with the rows of \"mul\"");
  }
  return monoid_from_cayley(mul, identity, gens, std::move(names));
}

Arrangement arrangement_from_json(const Json& j) {
  const auto dim = get<std::size_t>(j, "dim");
  const auto& rows = field(j, "normals");
  if (!rows.is_array()) throw InputError("field \"normals\" must be an array");
  std::vector<RationalVec> normals;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("field \"normals\" must hold arrays");
    RationalVec v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    normals.push_back(std::move(v));
  }
  return arrangement_from_normals(dim, std::move(normals));
}

Json arrangement_to_json(const Arrangement& arrangement) {
  Json normals = Json::array();
  for (const auto& row : arrangement.normals) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    normals.push_back(std::move(r));
  }
  return Json{{"dim", arrangement.dim}, {"normals", normals}};
}

Json faces_to_json(const std::vector<Face>& faces) {
  Json out = Json::array();
  for (const auto& f : faces) {
    Json w = Json::array();
    for (const auto& x : f.witness) w.push_back(to_string(x));
    out.push_back(Json{{"sign", to_string(f.sign)}, {"witness", w}});
  }
  return out;
}

FunctionClassSpec function_class_spec_from_json(const Json& j) {
  FunctionClassSpec spec{poset_from_json(field(j, "poset")), false, std::nullopt, false};
  if (j.contains("order_preserving")) spec.order_preserving = get<bool>(j, "order_preserving");
  if (j.contains("k_level_lipschitz") && !j.at("k_level_lipschitz").is_null()) {
    const auto k = get<long long>(j, "k_level_lipschitz");
    if (k <= 0) throw InputError("field \"k_level_lipschitz\" must be a positive integer");
    spec.level_lipschitz_k = static_cast<unsigned>(k);
  }
  if (j.contains("chain_1_lipschitz")) spec.chain_1_lipschitz = get<bool>(j, "chain_1_lipschitz");
  return spec;
}

CoxeterRealization coxeter_from_json(const Json& j) {
  if (j.contains("custom_gens")) {
    auto gens = get<std::vector<Permutation>>(j, "custom_gens");
    if (gens.empty()) throw InputError("field \"custom_gens\" is empty");
    CoxeterMatrix matrix{get<std::vector<std::vector<unsigned>>>(j, "matrix")};
    return custom_realization(std::move(gens), std::move(matrix));
  }
  const auto type = get<std::string>(j, "type");
  const auto n = get<long long>(j, "n");
  if (n <= 0) throw InputError("field \"n\" must be positive");
  CoxeterType t{CoxeterFamily::A, static_cast<unsigned>(n)};
  if (type == "A") {
    t.family = CoxeterFamily::A;
  } else if (type == "B") {
    t.family = CoxeterFamily::B;
  } else if (type == "I2") {
    t.family = CoxeterFamily::I2;
  } else {
    throw InputError("field \"type\" must be \"A\", \"B\" or \"I2\", got \"" + type + "\"");
  }
  return realization(t);
}

std::string hasse_dot(const FinitePoset& poset, const std::vector<std::string>& labels,
                      std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (Index x = 0; x < poset.size(); ++x) {
    out << "  n" << x << " [label=" << quoted(x < labels.size() ? labels[x] : std::to_string(x))
        << "];\n";
  }
  for (auto [a, b] : poset.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string coset_dot(const CosetPoset& cosets, const ElementNamer& name,
                      std::string_view graph_name) {
  std::vector<std::string> labels;
  for (const auto& owners : cosets.owners) labels.push_back(join(owners, name, " = "));
  return hasse_dot(cosets.order, labels, graph_name);
}

Json coset_json(const FiniteMonoid& monoid, const CosetPoset& cosets, const ElementNamer& name) {
  Json list = Json::array();
  for (std::size_t i = 0; i < cosets.cosets.size(); ++i) {
    Json owners = Json::array(), members = Json::array();
    for (Index e : cosets.owners[i]) owners.push_back(name(e));
    for (Index e : cosets.cosets[i]) members.push_back(name(e));
    list.push_back(Json{{"owners", owners}, {"members", members}});
  }
  Json covers = Json::array();
  for (auto [a, b] : cosets.order.covers()) covers.push_back({a, b});
  const auto linear = is_xm_linear(monoid);
  Json witness = nullptr;
  if (linear.witness) witness = {name(linear.witness->first), name(linear.witness->second)};
  return Json{{"size", monoid.size()},
              {"cosets", list},
              {"covers", covers},
              {"linear", linear.linear},
              {"witness", witness}};
}

std::string coset_table(const CosetPoset& cosets, const ElementNamer& name) {
  std::string out;
  for (std::size_t i = 0; i < cosets.cosets.size(); ++i) {
    out += join(cosets.owners[i], name, " = ") + " | {" + join(cosets.cosets[i], name, ", ") + "}\n";
  }
  return out;
}

}  // namespace ramsey
