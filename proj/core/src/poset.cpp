#include "ramsey/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ramsey {

namespace {

std::string pair_text(Index a, Index b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Finds a directed cycle in the cover digraph, returned as a vertex list
// v0 -> v1 -> ... -> v0 (first vertex not repeated).
std::optional<std::vector<Index>> find_cycle(std::size_t n,
                                             const std::vector<std::vector<Index>>& succ) {
  enum : std::uint8_t { white, grey, black };
  std::vector<std::uint8_t> colour(n, white);
  std::vector<Index> parent(n, 0);
  for (Index root = 0; root < n; ++root) {
    if (colour[root] != white) continue;
    // iterative DFS: stack of (vertex, next successor position)
    std::vector<std::pair<Index, std::size_t>> stack{{root, 0}};
    colour[root] = grey;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos == succ[v].size()) {
        colour[v] = black;
        stack.pop_back();
        continue;
      }
      const Index w = succ[v][pos++];
      if (colour[w] == grey) {
        std::vector<Index> cycle{w};
        for (Index u = v; u != w; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (colour[w] == white) {
        colour[w] = grey;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FinitePoset::FinitePoset(std::size_t n, std::vector<std::uint8_t> leq)
    : n_(n), leq_(std::move(leq)) {
  compute_levels();
}

FinitePoset FinitePoset::from_covers(std::size_t n, std::span<const IndexPair> covers) {
  std::vector<std::vector<Index>> succ(n);
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) {
      throw InputError("cover " + pair_text(lo, hi) + " is out of range for " +
                       std::to_string(n) + " elements");
    }
    succ[lo].push_back(hi);
  }
  if (auto cycle = find_cycle(n, succ)) {
    std::string text;
    for (Index v : *cycle) text += std::to_string(v) + " -> ";
    text += std::to_string(cycle->front());
    throw CycleError("cover relation has a cycle: " + text, std::move(*cycle));
  }
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Index root = 0; root < n; ++root) {
    std::vector<Index> stack{root};
    leq[root * n + root] = 1;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      for (Index w : succ[v]) {
        if (!leq[root * n + w]) {
          leq[root * n + w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return FinitePoset(n, std::move(leq));
}

FinitePoset FinitePoset::from_relation(std::size_t n, std::vector<std::uint8_t> leq) {
  if (leq.size() != n * n) throw InputError("relation matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i * n + i]) throw InputError("relation is not reflexive at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i * n + j] && leq[j * n + i]) {
        throw InputError("relation is not antisymmetric at " +
                         pair_text(static_cast<Index>(i), static_cast<Index>(j)));
      }
      if (!leq[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq[j * n + k] && !leq[i * n + k]) {
          throw InputError("relation is not transitive through " + std::to_string(j));
        }
      }
    }
  }
  return FinitePoset(n, std::move(leq));
}

FinitePoset FinitePoset::from_trusted_relation(std::size_t n, std::vector<std::uint8_t> leq) {
  return FinitePoset(n, std::move(leq));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) leq[i * n + j] = 1;
  }
  return FinitePoset(n, std::move(leq));
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  return FinitePoset(n, std::move(leq));
}

void FinitePoset::compute_levels() {
  // a < b implies |down(a)| < |down(b)|, so sorting by down-set size gives a
  // linear extension.
  std::vector<std::size_t> below(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) below[j] += leq_[i * n_ + j];
  }
  std::vector<Index> order(n_);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return below[a] < below[b]; });
  levels_.assign(n_, 1);
  for (std::size_t pos = 0; pos < n_; ++pos) {
    const Index x = order[pos];
    for (std::size_t prev = 0; prev < pos; ++prev) {
      const Index y = order[prev];
      if (leq_[y * n_ + x]) levels_[x] = std::max<Index>(levels_[x], levels_[y] + 1);
    }
  }
}

Index FinitePoset::height() const noexcept {
  Index h = 0;
  for (Index l : levels_) h = std::max(h, l);
  return h;
}

std::vector<IndexPair> FinitePoset::covers() const {
  std::vector<IndexPair> out;
  for (Index a = 0; a < n_; ++a) {
    for (Index b = 0; b < n_; ++b) {
      if (!less(a, b)) continue;
      bool direct = true;
      for (Index c = 0; c < n_ && direct; ++c) direct = !(less(a, c) && less(c, b));
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Index> FinitePoset::minimal_elements() const {
  std::vector<Index> out;
  for (Index x = 0; x < n_; ++x) {
    bool minimal = true;
    for (Index y = 0; y < n_ && minimal; ++y) minimal = !less(y, x);
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<Index> FinitePoset::maximal_elements() const {
  std::vector<Index> out;
  for (Index x = 0; x < n_; ++x) {
    bool maximal = true;
    for (Index y = 0; y < n_ && maximal; ++y) maximal = !less(x, y);
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<Index> FinitePoset::down_set(Index x) const {
  std::vector<Index> out;
  for (Index y = 0; y < n_; ++y) {
    if (leq(y, x)) out.push_back(y);
  }
  return out;
}

std::size_t FinitePoset::comparable_pair_count() const {
  std::size_t count = 0;
  for (Index a = 0; a < n_; ++a) {
    for (Index b = 0; b < n_; ++b) count += less(a, b) ? 1 : 0;
  }
  return count;
}

FinitePoset FinitePoset::relabeled(std::span<const Index> perm) const {
  if (perm.size() != n_) throw InputError("relabeling has the wrong length");
  std::vector<std::uint8_t> leq(n_ * n_, 0);
  for (Index a = 0; a < n_; ++a) {
    for (Index b = 0; b < n_; ++b) leq[perm[a] * n_ + perm[b]] = leq_[a * n_ + b];
  }
  return FinitePoset(n_, std::move(leq));
}

LatticeCheck is_lattice(const FinitePoset& poset) {
  const auto n = static_cast<Index>(poset.size());
  LatticeCheck result;
  if (n == 0) return result;

  std::vector<std::size_t> below(n, 0);
  for (Index a = 0; a < n; ++a) below[a] = poset.down_set(a).size();

  FiniteLattice lattice;
  lattice.meet_.assign(std::size_t{n} * n, 0);
  lattice.join_.assign(std::size_t{n} * n, 0);
  std::vector<Index> bounds;
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      // meet: the lower bound that every lower bound sits under
      bounds.clear();
      for (Index c = 0; c < n; ++c) {
        if (poset.leq(c, a) && poset.leq(c, b)) bounds.push_back(c);
      }
      std::optional<Index> meet;
      if (!bounds.empty()) {
        const Index best = *std::max_element(bounds.begin(), bounds.end(), [&](Index x, Index y) {
          return below[x] < below[y];
        });
        if (std::all_of(bounds.begin(), bounds.end(), [&](Index c) { return poset.leq(c, best); })) {
          meet = best;
        }
      }
      bounds.clear();
      for (Index c = 0; c < n; ++c) {
        if (poset.leq(a, c) && poset.leq(b, c)) bounds.push_back(c);
      }
      std::optional<Index> join;
      if (!bounds.empty()) {
        const Index best = *std::min_element(bounds.begin(), bounds.end(), [&](Index x, Index y) {
          return below[x] < below[y];
        });
        if (std::all_of(bounds.begin(), bounds.end(), [&](Index c) { return poset.leq(best, c); })) {
          join = best;
        }
      }
      if (!meet || !join) {
        result.missing_bound = IndexPair{a, b};
        return result;
      }
      lattice.meet_[a * n + b] = lattice.meet_[b * n + a] = *meet;
      lattice.join_[a * n + b] = lattice.join_[b * n + a] = *join;
    }
  }
  lattice.poset_ = poset;
  lattice.bottom_ = poset.minimal_elements().front();
  lattice.top_ = poset.maximal_elements().front();
  result.lattice = std::move(lattice);
  return result;
}

LinearityCheck is_linear_order(const FinitePoset& poset) {
  const auto n = static_cast<Index>(poset.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (!poset.comparable(a, b)) return {false, IndexPair{a, b}};
    }
  }
  return {};
}

Index level(const FinitePoset& poset, Index x) {
  if (x >= poset.size()) throw InputError("element out of range");
  return poset.level(x);
}

std::vector<Chain> maximal_chains(const FinitePoset& poset) {
  const auto n = static_cast<Index>(poset.size());
  std::vector<std::vector<Index>> up(n);
  for (const auto& [lo, hi] : poset.covers()) up[lo].push_back(hi);

  std::vector<Chain> out;
  Chain current;
  // recursive walk along covers; depth is bounded by the height
  auto walk = [&](auto&& self, Index v) -> void {
    current.push_back(v);
    if (up[v].empty()) {
      out.push_back(current);
    } else {
      for (Index w : up[v]) self(self, w);
    }
    current.pop_back();
  };
  for (Index m : poset.minimal_elements()) walk(walk, m);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_chain(const FinitePoset& poset, std::span<const Index> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= poset.size()) return false;
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i] == elements[j] || !poset.comparable(elements[i], elements[j])) return false;
    }
  }
  return true;
}

bool is_maximal_chain(const FinitePoset& poset, std::span<const Index> elements) {
  if (!is_chain(poset, elements)) return false;
  const auto n = static_cast<Index>(poset.size());
  for (Index x = 0; x < n; ++x) {
    if (std::find(elements.begin(), elements.end(), x) != elements.end()) continue;
    const bool extends = std::all_of(elements.begin(), elements.end(),
                                     [&](Index c) { return poset.comparable(c, x); });
    if (extends) return false;
  }
  return !elements.empty() || n == 0;
}

IndexPair level_lemma_witness(const FinitePoset& poset, Index x, Index y, Index z) {
  const auto n = poset.size();
  if (x >= n || y >= n || z >= n) throw InputError("level lemma: index out of range");
  if (!poset.leq(y, x) || !poset.leq(z, x)) throw InputError("level lemma: y and z must lie below x");
  if (poset.comparable(y, z)) throw InputError("level lemma: y and z must be incomparable");

  if (poset.level(y) == poset.level(z)) return {y, z};

  // Walk a longest chain under the higher element down to the lower level.
  const bool y_lower = poset.level(y) < poset.level(z);
  const Index low = y_lower ? y : z;
  Index walker = y_lower ? z : y;
  while (poset.level(walker) > poset.level(low)) {
    for (Index p = 0; p < n; ++p) {
      if (poset.less(p, walker) && poset.level(p) + 1 == poset.level(walker)) {
        walker = p;
        break;
      }
    }
  }
  if (walker != low && !poset.comparable(walker, low)) {
    return y_lower ? IndexPair{low, walker} : IndexPair{walker, low};
  }

  for (Index a = 0; a < n; ++a) {
    if (!poset.leq(a, y)) continue;
    for (Index b = 0; b < n; ++b) {
      if (poset.leq(b, z) && !poset.comparable(a, b) && poset.level(a) == poset.level(b)) {
        return {a, b};
      }
    }
  }
  throw std::logic_error("level lemma: no witness pair exists");
}

Transformation phi_chain(const FiniteLattice& lattice, std::span<const Index> chain) {
  const FinitePoset& poset = lattice.poset();
  if (!is_maximal_chain(poset, chain)) throw InputError("phi_chain needs a maximal chain");
  std::vector<Index> sorted(chain.begin(), chain.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](Index a, Index b) { return poset.level(a) < poset.level(b); });
  const auto n = static_cast<Index>(poset.size());
  std::vector<Index> images(n);
  for (Index x = 0; x < n; ++x) {
    auto it = std::find_if(sorted.rbegin(), sorted.rend(), [&](Index c) { return poset.leq(c, x); });
    if (it == sorted.rend()) throw InputError("phi_chain: chain misses the bottom element");
    images[x] = *it;
  }
  return Transformation(std::move(images));
}

}  // namespace ramsey
