#include "ramsey/verify.hpp"

#include <ostream>

#include <nlohmann/json.hpp>

#include "ramsey/cosets.hpp"
#include "ramsey/function_monoids.hpp"
#include "ramsey/poset_enum.hpp"

namespace ramsey {

namespace {

bool is_short_chain(const FinitePoset& poset, std::size_t max_elements) {
  return poset.size() >= 1 && poset.size() <= max_elements && is_linear_order(poset).linear;
}

std::string witness_text(const FiniteMonoid& monoid, const XmLinearity& result) {
  if (!result.witness) return "none";
  return monoid.name(result.witness->first) + " | " + monoid.name(result.witness->second);
}

nlohmann::json covers_json(const FinitePoset& poset) {
  auto covers = nlohmann::json::array();
  for (auto [a, b] : poset.covers()) covers.push_back({a, b});
  return covers;
}

}  // namespace

bool predict_all_regressive(const FinitePoset& poset) { return poset.comparable_pair_count() <= 1; }

bool predict_op_lattice(const FiniteLattice& lattice) { return is_short_chain(lattice.poset(), 2); }

bool predict_k_lip(const FiniteLattice& lattice, unsigned k) {
  if (k == 0) throw InputError("k must be positive");
  return is_short_chain(lattice.poset(), k == 1 ? 3 : 2);
}

std::string to_string(const FamilySpec& family) {
  switch (family.family) {
    case Family::all_regressive: return "all_regressive";
    case Family::op_lattice: return "op_lattice";
    case Family::k_lip: return "k_lip(" + std::to_string(family.k) + ")";
    case Family::constants_lemma: return "constants_lemma";
  }
  return "?";
}

ProductOrder product_order(const FamilySpec& family) {
  switch (family.family) {
    case Family::all_regressive:
    case Family::constants_lemma:
      return ProductOrder::right_action;
    case Family::op_lattice:
    case Family::k_lip:
      return ProductOrder::left_action;
  }
  return ProductOrder::left_action;
}

std::size_t max_instance_size(const FamilySpec& family) {
  switch (family.family) {
    case Family::all_regressive:
    case Family::constants_lemma:
      return 5;
    case Family::op_lattice:
    case Family::k_lip:
      return 6;
  }
  return 0;
}

std::size_t ClassificationReport::disagreements() const {
  std::size_t count = 0;
  for (const auto& r : instances) count += r.agrees() ? 0 : 1;
  return count;
}

std::size_t ClassificationReport::skipped() const {
  std::size_t count = 0;
  for (const auto& r : instances) count += r.skipped ? 1 : 0;
  return count;
}

ClassificationReport run_classification(const FamilySpec& family, std::size_t n_max,
                                        std::size_t element_budget) {
  if (family.family == Family::k_lip && family.k == 0) throw InputError("k must be positive");
  if (n_max > max_instance_size(family)) {
    throw InputError(to_string(family) + " is verified for sizes up to " +
                     std::to_string(max_instance_size(family)) + ", got " + std::to_string(n_max));
  }
  const bool lattices = family.family == Family::op_lattice || family.family == Family::k_lip;
  const auto order = product_order(family);

  ClassificationReport report{family, n_max, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto posets = enumerate_posets(n, lattices);
    for (std::size_t i = 0; i < posets.size(); ++i) {
      const auto& poset = posets[i];
      InstanceRecord record{"n" + std::to_string(n) + "-" + std::to_string(i), poset, 0, false,
                            std::nullopt, std::nullopt, std::nullopt};
      try {
        switch (family.family) {
          case Family::all_regressive: {
            record.predicted = predict_all_regressive(poset);
            const auto fns = all_regressive(poset);
            const auto monoid = function_monoid(n, fns, order, element_budget);
            const auto result = is_xm_linear(monoid);
            record.monoid_size = monoid.size();
            record.observed = result.linear;
            if (result.linear != record.predicted) record.witness = witness_text(monoid, result);
            break;
          }
          case Family::op_lattice:
          case Family::k_lip: {
            const auto lattice = is_lattice(poset);
            auto fns = all_op_regressive(poset);
            if (family.family == Family::k_lip) {
              record.predicted = predict_k_lip(*lattice.lattice, family.k);
              fns = k_level_lipschitz_filter(poset, fns, family.k);
            } else {
              record.predicted = predict_op_lattice(*lattice.lattice);
            }
            const auto monoid = function_monoid(n, fns, order, element_budget);
            const auto result = is_xm_linear(monoid);
            record.monoid_size = monoid.size();
            record.observed = result.linear;
            if (result.linear != record.predicted) record.witness = witness_text(monoid, result);
            break;
          }
          case Family::constants_lemma: {
            const auto fns = all_regressive(poset);
            const auto plain = function_monoid(n, fns, order, element_budget);
            const auto augmented = augment_with_constants(fns, poset, order, element_budget);
            if (!is_almost_r_trivial(augmented)) {
              throw std::logic_error("constants-augmented monoid is not almost R-trivial");
            }
            record.predicted = is_xm_linear(plain).linear;
            const auto result = is_xm_linear(augmented);
            record.monoid_size = augmented.size();
            record.observed = result.linear;
            if (result.linear != record.predicted) record.witness = witness_text(augmented, result);
            break;
          }
        }
      } catch (const BudgetError& e) {
        record.observed.reset();
        record.skipped = e.what();
      }
      report.instances.push_back(std::move(record));
    }
  }
  return report;
}

void write_jsonl(const ClassificationReport& report, std::ostream& out) {
  for (const auto& r : report.instances) {
    nlohmann::json line;
    line["id"] = r.id;
    line["family"] = to_string(report.family);
    line["n"] = r.poset.size();
    line["covers"] = covers_json(r.poset);
    line["predicted"] = r.predicted;
    line["observed"] = r.observed ? nlohmann::json(*r.observed) : nlohmann::json(nullptr);
    line["monoid_size"] = r.monoid_size;
    if (r.witness) line["witness"] = *r.witness;
    if (r.skipped) line["skipped"] = *r.skipped;
    out << line.dump() << '\n';
  }
  nlohmann::json summary;
  summary["family"] = to_string(report.family);
  summary["n_max"] = report.n_max;
  summary["instances"] = report.instances.size();
  summary["disagreements"] = report.disagreements();
  summary["skipped"] = report.skipped();
  out << nlohmann::json{{"summary", summary}}.dump() << '\n';
}

std::vector<TetrisRow> tetris_linearity_table(std::size_t n_max) {
  if (n_max > 8) throw InputError("tetris table goes up to n = 8");
  std::vector<TetrisRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto monoid = tetris_monoid(n);
    rows.push_back({n, monoid.size(), is_xm_linear(monoid).linear});
  }
  return rows;
}

std::optional<GeneratorPair> generator_incomparability(const FiniteMonoid& monoid) {
  const auto& gens = monoid.generators();
  if (gens.size() < 2) return std::nullopt;
  const auto cosets = coset_poset(monoid);
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (gens[a] == gens[b]) continue;
      const Index ca = cosets.coset_of[gens[a]];
      const Index cb = cosets.coset_of[gens[b]];
      if (!cosets.order.comparable(ca, cb)) return GeneratorPair{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace ramsey
