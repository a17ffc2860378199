#include "ramsey/poset_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

namespace ramsey {

namespace {

std::uint64_t encode(const FinitePoset& poset, std::span<const Index> order) {
  // order[k] = original element placed at position k
  const auto n = static_cast<Index>(poset.size());
  std::uint64_t code = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      code = (code << 1) | (poset.leq(order[i], order[j]) ? 1u : 0u);
    }
  }
  return code;
}

// Steps `order` to the next arrangement that only permutes inside cells.
bool next_within_cells(std::vector<Index>& order, const std::vector<std::size_t>& cell_starts) {
  for (std::size_t c = cell_starts.size() - 1; c-- > 0;) {
    auto first = order.begin() + static_cast<std::ptrdiff_t>(cell_starts[c]);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(cell_starts[c + 1]);
    if (std::next_permutation(first, last)) return true;
    // wrapped to sorted; carry into the previous cell
  }
  return false;
}

std::vector<FinitePoset> extend_by_maximal(const std::vector<FinitePoset>& reps) {
  std::map<std::uint64_t, FinitePoset> found;
  for (const auto& base : reps) {
    const auto m = static_cast<Index>(base.size());
    const auto n = m + 1;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      // the new top-most element sits above exactly the down-closed set `mask`
      bool down_closed = true;
      for (Index a = 0; a < m && down_closed; ++a) {
        if (!(mask >> a & 1u)) continue;
        for (Index b = 0; b < m && down_closed; ++b) {
          if (base.leq(b, a) && !(mask >> b & 1u)) down_closed = false;
        }
      }
      if (!down_closed) continue;
      std::vector<std::uint8_t> leq(std::size_t{n} * n, 0);
      for (Index a = 0; a < m; ++a) {
        for (Index b = 0; b < m; ++b) leq[a * n + b] = base.leq(a, b) ? 1 : 0;
        leq[a * n + m] = (mask >> a & 1u) ? 1 : 0;
      }
      leq[m * n + m] = 1;
      auto poset = FinitePoset::from_trusted_relation(n, std::move(leq));
      auto form = canonical_form(poset);
      if (!found.contains(form.code)) found.emplace(form.code, poset.relabeled(form.perm));
    }
  }
  std::vector<FinitePoset> out;
  out.reserve(found.size());
  for (auto& [code, poset] : found) out.push_back(std::move(poset));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const FinitePoset& poset) {
  const auto n = static_cast<Index>(poset.size());
  if (std::size_t{n} * (n == 0 ? 0 : n - 1) > 64) {
    throw InputError("canonical codes support at most " + std::to_string(kMaxEnumerationBound) +
                     " elements");
  }
  using Key = std::tuple<Index, std::size_t, std::size_t>;
  std::vector<Key> key(n);
  for (Index x = 0; x < n; ++x) {
    std::size_t below = 0, above = 0;
    for (Index y = 0; y < n; ++y) {
      below += poset.less(y, x) ? 1 : 0;
      above += poset.less(x, y) ? 1 : 0;
    }
    key[x] = {poset.level(x), below, above};
  }
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return std::tie(key[a], a) < std::tie(key[b], b);
  });
  std::vector<std::size_t> cell_starts{0};
  for (Index k = 1; k < n; ++k) {
    if (key[order[k]] != key[order[k - 1]]) cell_starts.push_back(k);
  }
  cell_starts.push_back(n);
  // each cell starts sorted by index, the first arrangement next_permutation sees

  CanonicalForm best;
  std::vector<Index> best_order = order;
  best.code = encode(poset, order);
  while (next_within_cells(order, cell_starts)) {
    const auto code = encode(poset, order);
    if (code < best.code) {
      best.code = code;
      best_order = order;
    }
  }
  best.perm.assign(n, 0);
  for (Index k = 0; k < n; ++k) best.perm[best_order[k]] = k;
  return best;
}

std::vector<FinitePoset> enumerate_posets(std::size_t n, bool lattices_only, std::size_t bound) {
  bound = std::min(bound, kMaxEnumerationBound);
  if (n > bound) {
    throw InputError("poset enumeration is limited to n <= " + std::to_string(bound) +
                     " (requested " + std::to_string(n) +
                     "); raise the bound (max " + std::to_string(kMaxEnumerationBound) + ")");
  }
  std::vector<FinitePoset> level{FinitePoset{}};
  for (std::size_t k = 0; k < n; ++k) level = extend_by_maximal(level);
  if (lattices_only) {
    std::erase_if(level, [](const FinitePoset& p) { return !is_lattice(p); });
  }
  return level;
}

void for_each_poset(std::size_t n, bool lattices_only,
                    const std::function<void(const FinitePoset&)>& visit, std::size_t bound) {
  for (const auto& poset : enumerate_posets(n, lattices_only, bound)) visit(poset);
}

}  // namespace ramsey
