#include "ramsey/cosets.hpp"

#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

namespace ramsey {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct Components {
  std::vector<Index> component;  // component id per vertex
  /// vertices of each component; components appear sinks first
  std::vector<std::vector<Index>> members;
};

// Iterative Tarjan over the graph whose successors of v are succ(v, 0..k-1).
template <typename Succ>
Components strongly_connected(std::size_t n, std::size_t k, Succ succ) {
  constexpr Index unvisited = static_cast<Index>(-1);
  Components out;
  out.component.assign(n, unvisited);
  std::vector<Index> index(n, unvisited), low(n, 0);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<Index> stack;
  Index counter = 0;
  std::vector<std::pair<Index, std::size_t>> call;
  for (Index root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < k) {
        const Index w = succ(v, pos++);
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Index finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
      if (low[finished] == index[finished]) {
        std::vector<Index> comp;
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.component[w] = static_cast<Index>(out.members.size());
          comp.push_back(w);
        } while (w != finished);
        std::sort(comp.begin(), comp.end());
        out.members.push_back(std::move(comp));
      }
    }
  }
  return out;
}

Components right_components(const FiniteMonoid& m) {
  return strongly_connected(m.size(), m.generators().size(),
                            [&](Index v, std::size_t g) { return m.times_generator(v, g); });
}

// Coset of every R-class (as a bitset over elements), indexed like
// Components::members.
std::vector<Bits> class_cosets(const FiniteMonoid& m, const Components& comps) {
  const std::size_t k = m.generators().size();
  std::vector<Bits> reach(comps.members.size());
  // sinks come first, so successors' sets are complete when needed
  for (std::size_t c = 0; c < comps.members.size(); ++c) {
    Bits bits(m.size());
    for (Index v : comps.members[c]) {
      bits.set(v);
      for (std::size_t g = 0; g < k; ++g) {
        const Index w = m.times_generator(v, g);
        if (comps.component[w] != c) bits |= reach[comps.component[w]];
      }
    }
    reach[c] = std::move(bits);
  }
  return reach;
}

// Component ids ordered by smallest member.
std::vector<Index> by_smallest_member(const Components& comps) {
  std::vector<Index> order(comps.members.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return comps.members[a].front() < comps.members[b].front();
  });
  return order;
}

std::vector<Index> to_list(const Bits& bits) {
  std::vector<Index> out;
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<Index>(i));
  }
  return out;
}

}  // namespace

std::vector<Index> left_coset(const FiniteMonoid& monoid, Index m) {
  if (m >= monoid.size()) throw InputError("element out of range");
  // mM is everything reachable from m in the right Cayley graph
  Bits seen(monoid.size());
  std::vector<Index> stack{m};
  seen.set(m);
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < monoid.generators().size(); ++g) {
      const Index w = monoid.times_generator(v, g);
      if (!seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    }
  }
  return to_list(seen);
}

CosetPoset coset_poset(const FiniteMonoid& monoid) {
  const auto comps = right_components(monoid);
  const auto reach = class_cosets(monoid, comps);
  const auto order = by_smallest_member(comps);
  const std::size_t k = order.size();

  CosetPoset out;
  out.coset_of.assign(monoid.size(), 0);
  std::vector<std::uint8_t> leq(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const Index c = order[i];
    out.cosets.push_back(to_list(reach[c]));
    out.owners.push_back(comps.members[c]);
    for (Index v : comps.members[c]) out.coset_of[v] = static_cast<Index>(i);
    for (std::size_t j = 0; j < k; ++j) {
      leq[i * k + j] = reach[c].is_subset_of(reach[order[j]]) ? 1 : 0;
    }
  }
  out.order = FinitePoset::from_trusted_relation(k, std::move(leq));
  return out;
}

std::vector<std::vector<Index>> r_classes(const FiniteMonoid& monoid) {
  auto comps = right_components(monoid);
  std::vector<std::vector<Index>> out;
  for (Index c : by_smallest_member(comps)) out.push_back(std::move(comps.members[c]));
  return out;
}

XmLinearity is_xm_linear(const FiniteMonoid& monoid) {
  const auto comps = right_components(monoid);
  const auto reach = class_cosets(monoid, comps);
  auto order = by_smallest_member(comps);
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return reach[a].count() > reach[b].count(); });
  // a chain iff each coset sits inside the previous (larger or equal) one
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!reach[order[i]].is_subset_of(reach[order[i - 1]])) {
      return {false, IndexPair{comps.members[order[i - 1]].front(), comps.members[order[i]].front()}};
    }
  }
  return {};
}

bool is_r_trivial(const FiniteMonoid& monoid) {
  return right_components(monoid).members.size() == monoid.size();
}

bool is_almost_r_trivial(const FiniteMonoid& monoid) {
  const auto comps = right_components(monoid);
  for (const auto& members : comps.members) {
    if (members.size() < 2) continue;
    for (Index m : members) {
      // x m = m for all x follows from g m = m for every generator g
      for (std::size_t g = 0; g < monoid.generators().size(); ++g) {
        if (monoid.generator_times(g, m) != m) return false;
      }
    }
  }
  return true;
}

bool is_l_trivial(const FiniteMonoid& monoid) {
  const auto comps =
      strongly_connected(monoid.size(), monoid.generators().size(),
                         [&](Index v, std::size_t g) { return monoid.generator_times(g, v); });
  return comps.members.size() == monoid.size();
}

bool is_j_trivial(const FiniteMonoid& monoid) {
  // MxM = MyM iff x and y are mutually reachable using both Cayley graphs
  const std::size_t k = monoid.generators().size();
  const auto comps = strongly_connected(monoid.size(), 2 * k, [&](Index v, std::size_t g) {
    return g < k ? monoid.times_generator(v, g) : monoid.generator_times(g - k, v);
  });
  return comps.members.size() == monoid.size();
}

RegressiveRepresentation regressive_representation(const FiniteMonoid& monoid) {
  const auto comps = right_components(monoid);
  const std::size_t n = monoid.size();
  if (comps.members.size() != n) {
    throw InputError("regressive representation needs an R-trivial monoid");
  }
  const auto reach = class_cosets(monoid, comps);
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Index y = 0; y < n; ++y) {
    // x <= y iff x is in yM
    const Bits& coset = reach[comps.component[y]];
    for (auto x = coset.find_first(); x != Bits::npos; x = coset.find_next(x)) leq[x * n + y] = 1;
  }
  RegressiveRepresentation rep;
  rep.order = FinitePoset::from_trusted_relation(n, std::move(leq));
  rep.maps.reserve(n);
  for (Index m = 0; m < n; ++m) {
    std::vector<Index> images(n);
    for (Index x = 0; x < n; ++x) images[x] = monoid.product(x, m);
    rep.maps.emplace_back(std::move(images));
  }
  return rep;
}

RepresentationCheck check_representation(const FiniteMonoid& monoid,
                                         const RegressiveRepresentation& rep) {
  RepresentationCheck check;
  const auto n = static_cast<Index>(monoid.size());
  for (Index m = 0; m < n; ++m) {
    if (rep.maps[m](monoid.identity()) != m) check.faithful = false;
    if (!rep.maps[m].is_regressive(rep.order)) check.regressive = false;
  }
  std::vector<Index> right_factors;
  if (n <= 200) {
    right_factors.resize(n);
    std::iota(right_factors.begin(), right_factors.end(), Index{0});
  } else {
    right_factors.assign(monoid.generators().begin(), monoid.generators().end());
  }
  for (Index a = 0; a < n && check.homomorphism; ++a) {
    for (Index b : right_factors) {
      const auto expected = multiply(rep.maps[a], rep.maps[b], ProductOrder::right_action);
      if (rep.maps[monoid.product(a, b)] != expected) {
        check.homomorphism = false;
        break;
      }
    }
  }
  return check;
}

}  // namespace ramsey
