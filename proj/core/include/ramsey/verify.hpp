#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/monoid.hpp"
#include "ramsey/poset.hpp"

namespace ramsey {

/// Antichain plus at most one 2-element chain: at most one strict comparable pair.
bool predict_all_regressive(const FinitePoset& poset);
/// A chain of 1 or 2 elements.
bool predict_op_lattice(const FiniteLattice& lattice);
/// k = 1: a chain of 1, 2 or 3 elements; k >= 2: a chain of 1 or 2 elements.
bool predict_k_lip(const FiniteLattice& lattice, unsigned k);

enum class Family {
  all_regressive,   // every regressive map on a poset, right action
  op_lattice,       // order-preserving regressive maps on a lattice, left action
  k_lip,            // k-level-Lipschitz OP regressive maps on a lattice, left action
  constants_lemma,  // all regressive maps with and without minimal constants, right action
};

struct FamilySpec {
  Family family = Family::all_regressive;
  unsigned k = 0;  // k_lip only
};

std::string to_string(const FamilySpec& family);
ProductOrder product_order(const FamilySpec& family);
/// Largest n_max accepted by run_classification.
std::size_t max_instance_size(const FamilySpec& family);

struct InstanceRecord {
  std::string id;  // "n<size>-<index in canonical order>"
  FinitePoset poset;
  std::size_t monoid_size = 0;
  bool predicted = false;
  std::optional<bool> observed;         // empty when skipped
  std::optional<std::string> witness;   // names of two incomparable cosets, on disagreement
  std::optional<std::string> skipped;   // budget message

  bool agrees() const { return !observed || *observed == predicted; }
};

struct ClassificationReport {
  FamilySpec family;
  std::size_t n_max = 0;
  std::vector<InstanceRecord> instances;

  std::size_t disagreements() const;
  std::size_t skipped() const;
  bool ok() const { return disagreements() == 0 && skipped() == 0; }
};

/// For each unlabeled poset (lattice for the lattice families) of size
/// 1..n_max, builds the monoid, decides X(M) linearity directly and compares
/// with the prediction. For constants_lemma the prediction is the linearity
/// of X(M) and the observation that of X(M with constants). Budget overruns
/// become skip records. Throws InputError when n_max is over the family limit.
ClassificationReport run_classification(const FamilySpec& family, std::size_t n_max,
                                        std::size_t element_budget = kDefaultElementBudget);

/// One JSON object per line: instances, then {"summary": ...}.
void write_jsonl(const ClassificationReport& report, std::ostream& out);

struct TetrisRow {
  std::size_t n = 0;
  std::size_t size = 0;
  bool linear = false;
};

/// X(I_n) linearity for n = 1..n_max (n_max <= 8), left action.
std::vector<TetrisRow> tetris_linearity_table(std::size_t n_max);

struct GeneratorPair {
  std::size_t a = 0;  // generator positions
  std::size_t b = 0;
};

/// First pair of generators a < b (distinct elements) whose cosets aM and bM
/// are incomparable; nothing with fewer than two generators.
std::optional<GeneratorPair> generator_incomparability(const FiniteMonoid& monoid);

}  // namespace ramsey
