#include "ramsey/monoid.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace ramsey {

namespace {

std::string triple_text(Index a, Index b, Index c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

std::vector<std::string> default_generator_names(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : "g" + std::to_string(i));
  }
  return names;
}

Index FiniteMonoid::product(Index a, Index b) const {
  if (!table_.empty()) return table_[a * size_ + b];
  Index current = a;
  for (std::size_t g : label(b)) current = times_generator(current, g);
  return current;
}

std::vector<std::size_t> FiniteMonoid::label(Index e) const {
  std::vector<std::size_t> word;
  while (e != identity_) {
    word.push_back(last_gen_[e]);
    e = parent_[e];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string FiniteMonoid::word(Index e) const {
  const bool single = std::all_of(gen_names_.begin(), gen_names_.end(),
                                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t g : label(e)) {
    if (!single && !out.empty()) out += '.';
    out += gen_names_[g];
  }
  return out;
}

std::string FiniteMonoid::name(Index e) const {
  return e == identity_ ? std::string("id") : word(e);
}

Index FiniteMonoid::evaluate(std::span<const std::size_t> word) const {
  Index current = identity_;
  for (std::size_t g : word) {
    if (g >= gens_.size()) throw InputError("word uses an unknown generator");
    current = times_generator(current, g);
  }
  return current;
}

std::optional<Index> FiniteMonoid::find(const Transformation& map) const {
  auto it = index_.find(map);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void FiniteMonoid::fill_dense_table() {
  table_.assign(size_ * size_, 0);
  for (Index a = 0; a < size_; ++a) {
    Index* row = &table_[a * size_];
    // bfs_order_ lists every element after its parent
    for (Index b : bfs_order_) {
      row[b] = b == identity_ ? a : times_generator(row[parent_[b]], last_gen_[b]);
    }
  }
}

FiniteMonoid closure_from_transformations(std::size_t domain_size,
                                          std::span<const Transformation> gens,
                                          ProductOrder order, std::size_t max_elements,
                                          std::vector<std::string> names) {
  for (const auto& g : gens) {
    if (g.domain_size() != domain_size) {
      throw InputError("generator " + g.to_string() + " does not act on " +
                       std::to_string(domain_size) + " points");
    }
  }
  if (names.empty()) names = default_generator_names(gens.size());
  if (names.size() != gens.size()) throw InputError("one name per generator is required");

  FiniteMonoid m;
  const std::size_t k = gens.size();
  m.order_ = order;
  m.gen_names_ = std::move(names);
  m.identity_ = 0;
  m.maps_.push_back(Transformation::identity(domain_size));
  m.index_.emplace(m.maps_.front(), 0);
  m.parent_.push_back(0);
  m.last_gen_.push_back(0);

  for (std::size_t i = 0; i < m.maps_.size(); ++i) {
    for (std::size_t g = 0; g < k; ++g) {
      auto next = multiply(m.maps_[i], gens[g], order);
      auto [it, inserted] = m.index_.try_emplace(std::move(next), static_cast<Index>(m.maps_.size()));
      if (inserted) {
        if (m.maps_.size() >= max_elements) {
          throw BudgetError("closure exceeded the element budget of " +
                                std::to_string(max_elements) + " (" +
                                std::to_string(m.maps_.size() + 1) + " elements found so far)",
                            m.maps_.size() + 1);
        }
        m.maps_.push_back(it->first);
        m.parent_.push_back(static_cast<Index>(i));
        m.last_gen_.push_back(static_cast<std::uint32_t>(g));
      }
      m.right_.push_back(it->second);
    }
  }
  m.size_ = m.maps_.size();
  m.bfs_order_.resize(m.size_);
  for (Index e = 0; e < m.size_; ++e) m.bfs_order_[e] = e;

  for (const auto& g : gens) m.gens_.push_back(m.index_.at(g));
  m.left_.resize(m.size_ * k);
  for (Index e = 0; e < m.size_; ++e) {
    for (std::size_t g = 0; g < k; ++g) {
      m.left_[e * k + g] = m.index_.at(multiply(gens[g], m.maps_[e], order));
    }
  }
  if (m.size_ <= kDenseTableLimit) m.fill_dense_table();
  return m;
}

FiniteMonoid monoid_from_cayley(std::span<const std::vector<Index>> table, Index identity,
                                std::optional<std::vector<Index>> gens,
                                std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("Cayley table is empty");
  if (identity >= n) throw InputError("identity index out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw InputError("Cayley table row " + std::to_string(a) + " has " +
                       std::to_string(table[a].size()) + " entries, expected " + std::to_string(n));
    }
    for (Index v : table[a]) {
      if (v >= n) throw InputError("Cayley table entry " + std::to_string(v) + " out of range");
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (table[identity][a] != a || table[a][identity] != a) {
      throw InputError("identity law fails at element " + std::to_string(a));
    }
  }
  auto mul = [&](Index a, Index b) { return table[a][b]; };

  // greedy generating set, grown incrementally
  auto reach_with = [&](const std::vector<Index>& g_list, std::vector<std::uint8_t>& reached,
                        std::vector<Index>& frontier, std::size_t first_new) {
    // frontier: reached elements still to be multiplied by generators >= first_new;
    // newly discovered ones are multiplied by every generator
    std::deque<std::pair<Index, std::size_t>> queue;
    for (Index e : frontier) queue.emplace_back(e, first_new);
    while (!queue.empty()) {
      auto [e, from] = queue.front();
      queue.pop_front();
      for (std::size_t g = from; g < g_list.size(); ++g) {
        const Index next = mul(e, g_list[g]);
        if (!reached[next]) {
          reached[next] = 1;
          frontier.push_back(next);
          queue.emplace_back(next, 0);
        }
      }
    }
  };

  std::vector<Index> gen_list;
  if (gens) {
    gen_list = *gens;
    for (Index g : gen_list) {
      if (g >= n) throw InputError("generator index " + std::to_string(g) + " out of range");
    }
    std::vector<std::uint8_t> reached(n, 0);
    reached[identity] = 1;
    std::vector<Index> frontier{identity};
    reach_with(gen_list, reached, frontier, 0);
    if (std::count(reached.begin(), reached.end(), 1) != static_cast<std::ptrdiff_t>(n)) {
      throw InputError("the given generators do not generate the whole table");
    }
  } else {
    std::vector<std::uint8_t> reached(n, 0);
    reached[identity] = 1;
    std::vector<Index> frontier{identity};
    for (Index c = 0; c < n; ++c) {
      if (reached[c]) continue;
      gen_list.push_back(c);
      reach_with(gen_list, reached, frontier, gen_list.size() - 1);
    }
  }

  // associativity: full check when small, Light's test x(gy) = (xg)y otherwise
  if (n <= kFullAssociativityLimit) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        const Index ab = mul(a, b);
        for (Index c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw InputError("table is not associative at " + triple_text(a, b, c));
          }
        }
      }
    }
  } else {
    for (Index g : gen_list) {
      for (Index a = 0; a < n; ++a) {
        const Index ag = mul(a, g);
        for (Index b = 0; b < n; ++b) {
          if (mul(ag, b) != mul(a, mul(g, b))) {
            throw InputError("table is not associative at " + triple_text(a, g, b));
          }
        }
      }
    }
  }

  if (names.empty()) names = default_generator_names(gen_list.size());
  if (names.size() != gen_list.size()) throw InputError("one name per generator is required");

  FiniteMonoid m;
  const std::size_t k = gen_list.size();
  m.size_ = n;
  m.identity_ = identity;
  m.gens_ = gen_list;
  m.gen_names_ = std::move(names);
  m.right_.resize(n * k);
  m.left_.resize(n * k);
  for (Index e = 0; e < n; ++e) {
    for (std::size_t g = 0; g < k; ++g) {
      m.right_[e * k + g] = mul(e, gen_list[g]);
      m.left_[e * k + g] = mul(gen_list[g], e);
    }
  }
  // shortlex labels by BFS over the generator list
  m.parent_.assign(n, identity);
  m.last_gen_.assign(n, 0);
  std::vector<std::uint8_t> seen(n, 0);
  seen[identity] = 1;
  m.bfs_order_.push_back(identity);
  for (std::size_t i = 0; i < m.bfs_order_.size(); ++i) {
    const Index e = m.bfs_order_[i];
    for (std::size_t g = 0; g < k; ++g) {
      const Index next = m.right_[e * k + g];
      if (!seen[next]) {
        seen[next] = 1;
        m.parent_[next] = e;
        m.last_gen_[next] = static_cast<std::uint32_t>(g);
        m.bfs_order_.push_back(next);
      }
    }
  }
  m.table_.resize(n * n);
  for (Index a = 0; a < n; ++a) std::copy(table[a].begin(), table[a].end(), &m.table_[a * n]);
  return m;
}

}  // namespace ramsey
