#include "ramsey/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "ramsey/cosets.hpp"

namespace ramsey {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Index v : p) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Index{0});
  return p;
}

Permutation transposition(std::size_t n, std::initializer_list<std::pair<Index, Index>> swaps) {
  auto p = identity_permutation(n);
  for (auto [a, b] : swaps) std::swap(p[a], p[b]);
  return p;
}

void check_permutation(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) throw InputError("generator has wrong degree");
  std::vector<bool> seen(degree, false);
  for (Index v : p) {
    if (v >= degree || seen[v]) throw InputError("generator is not a permutation");
    seen[v] = true;
  }
}

void check_orders(const CoxeterRealization& r) {
  const auto id = identity_permutation(r.degree);
  for (std::size_t i = 0; i < r.gens.size(); ++i) {
    if (r.gens[i] == id || compose(r.gens[i], r.gens[i]) != id) {
      throw InputError("generator " + std::to_string(i) + " is not an involution");
    }
    for (std::size_t j = i + 1; j < r.gens.size(); ++j) {
      const auto order = permutation_order(compose(r.gens[i], r.gens[j]));
      if (order != r.matrix.m[i][j]) {
        throw InputError("generators " + std::to_string(i) + " and " + std::to_string(j) +
                         " have product of order " + std::to_string(order) + ", matrix says " +
                         std::to_string(r.matrix.m[i][j]));
      }
    }
  }
}

// Product of s_i s_j s_i ... with `len` letters, as maps composed in `order`.
Transformation alternating(const Transformation& a, const Transformation& b, unsigned len,
                           ProductOrder order) {
  auto acc = Transformation::identity(a.domain_size());
  for (unsigned k = 0; k < len; ++k) acc = multiply(acc, k % 2 == 0 ? a : b, order);
  return acc;
}

}  // namespace

void CoxeterMatrix::validate() const {
  const auto n = m.size();
  if (n == 0) throw InputError("Coxeter matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InputError("Coxeter matrix is not square");
    if (m[i][i] != 1) throw InputError("Coxeter matrix needs 1 on the diagonal");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m[i][j] < 2) throw InputError("Coxeter matrix entries off the diagonal must be >= 2");
      if (m[i][j] != m[j][i]) throw InputError("Coxeter matrix is not symmetric");
    }
  }
}

std::string to_string(const CoxeterType& type) {
  switch (type.family) {
    case CoxeterFamily::A: return "A" + std::to_string(type.n);
    case CoxeterFamily::B: return "B" + std::to_string(type.n);
    case CoxeterFamily::I2: return "I2(" + std::to_string(type.n) + ")";
  }
  return "?";
}

std::size_t permutation_order(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t order = 1;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (auto x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

CoxeterRealization realization(const CoxeterType& type) {
  CoxeterRealization r;
  const unsigned n = type.n;
  auto square = [](std::size_t k) {
    std::vector<std::vector<unsigned>> m(k, std::vector<unsigned>(k, 2));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
  };
  switch (type.family) {
    case CoxeterFamily::A:
      if (n < 1) throw InputError("type A needs n >= 1");
      r.degree = n + 1;
      r.matrix.m = square(n);
      for (Index i = 0; i < n; ++i) {
        r.gens.push_back(transposition(r.degree, {{i, i + 1}}));
        if (i + 1 < n) r.matrix.m[i][i + 1] = r.matrix.m[i + 1][i] = 3;
      }
      break;
    case CoxeterFamily::B:
      if (n < 2) throw InputError("type B needs n >= 2");
      // point i is +e_i, point i + n is -e_i
      r.degree = 2 * n;
      r.matrix.m = square(n);
      r.gens.push_back(transposition(r.degree, {{0, n}}));
      for (Index i = 1; i < n; ++i) {
        r.gens.push_back(transposition(r.degree, {{i - 1, i}, {i - 1 + n, i + n}}));
        const unsigned mij = i == 1 ? 4 : 3;
        r.matrix.m[i - 1][i] = r.matrix.m[i][i - 1] = mij;
      }
      break;
    case CoxeterFamily::I2: {
      if (n < 3) throw InputError("type I2 needs m >= 3");
      r.degree = n;
      r.matrix.m = {{1, n}, {n, 1}};
      Permutation s(n), t(n);
      for (Index k = 0; k < n; ++k) {
        s[k] = (n - k) % n;
        t[k] = (n + 1 - k) % n;
      }
      r.gens = {s, t};
      break;
    }
  }
  check_orders(r);
  return r;
}

CoxeterRealization custom_realization(std::vector<Permutation> gens, CoxeterMatrix matrix) {
  matrix.validate();
  if (gens.size() != matrix.rank()) {
    throw InputError("custom realization has " + std::to_string(gens.size()) +
                     " generators but the matrix has rank " + std::to_string(matrix.rank()));
  }
  CoxeterRealization r;
  r.degree = gens.front().size();
  for (const auto& g : gens) check_permutation(g, r.degree);
  r.gens = std::move(gens);
  r.matrix = std::move(matrix);
  check_orders(r);
  return r;
}

CoxeterGroupTable build_coxeter_group(const CoxeterRealization& r, std::size_t budget) {
  r.matrix.validate();
  CoxeterGroupTable g;
  g.matrix = r.matrix;
  const auto k = r.gens.size();
  std::unordered_map<Permutation, Index, PermutationHash> index;

  g.elements.push_back(identity_permutation(r.degree));
  g.length.push_back(0);
  g.reduced_word.emplace_back();
  index.emplace(g.elements[0], 0);

  // BFS on right multiplication gives shortlex reduced words
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    std::vector<Index> row(k);
    for (std::size_t i = 0; i < k; ++i) {
      auto next = compose(g.elements[head], r.gens[i]);
      auto [it, fresh] = index.try_emplace(next, static_cast<Index>(g.elements.size()));
      if (fresh) {
        if (g.elements.size() >= budget) {
          throw BudgetError("Coxeter group exceeds " + std::to_string(budget) + " elements",
                            g.elements.size());
        }
        g.elements.push_back(std::move(next));
        g.length.push_back(g.length[head] + 1);
        auto word = g.reduced_word[head];
        word.push_back(static_cast<Index>(i));
        g.reduced_word.push_back(std::move(word));
      }
      row[i] = it->second;
    }
    g.right.push_back(std::move(row));
  }

  g.left.assign(g.size(), std::vector<Index>(k));
  for (Index w = 0; w < g.size(); ++w) {
    for (std::size_t i = 0; i < k; ++i) {
      g.left[w][i] = index.at(compose(r.gens[i], g.elements[w]));
    }
  }

  for (Index w = 0; w < g.size(); ++w) {
    for (std::size_t i = 0; i < k; ++i) {
      for (Index v : {g.left[w][i], g.right[w][i]}) {
        const auto a = static_cast<long>(g.length[w]);
        const auto b = static_cast<long>(g.length[v]);
        if (a - b != 1 && b - a != 1) throw std::logic_error("length changed by other than one");
      }
    }
  }
  return g;
}

std::vector<Transformation> hecke_generators(const CoxeterGroupTable& group, ProductOrder order) {
  const auto& mult = order == ProductOrder::left_action ? group.left : group.right;
  std::vector<Transformation> gens;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    std::vector<Index> images(group.size());
    for (Index w = 0; w < group.size(); ++w) {
      const Index v = mult[w][i];
      images[w] = group.length[v] > group.length[w] ? v : w;
    }
    gens.emplace_back(std::move(images));
  }
  return gens;
}

FiniteMonoid hecke_monoid(const CoxeterGroupTable& group, ProductOrder order) {
  const auto gens = hecke_generators(group, order);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (multiply(gens[i], gens[i], order) != gens[i]) {
      throw std::logic_error("0-Hecke generator is not idempotent");
    }
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto m = group.matrix.m[i][j];
      if (alternating(gens[i], gens[j], m, order) != alternating(gens[j], gens[i], m, order)) {
        throw std::logic_error("0-Hecke braid relation fails");
      }
    }
  }
  auto monoid = closure_from_transformations(group.size(), gens, order,
                                             std::max<std::size_t>(group.size(), 1) + 1,
                                             default_generator_names(gens.size()));
  if (monoid.size() != group.size()) throw std::logic_error("|H0(W)| differs from |W|");
  if (!is_r_trivial(monoid) || !is_j_trivial(monoid)) {
    throw std::logic_error("0-Hecke monoid is not R- and J-trivial");
  }
  return monoid;
}

SubwordReport verify_initial_subword(const FiniteMonoid& hecke, std::size_t max_len) {
  SubwordReport report;
  const auto n = static_cast<Index>(hecke.size());
  const auto k = hecke.generators().size();

  // starts[x] = elements given by a prefix of some word for x
  std::vector<boost::dynamic_bitset<>> starts(n, boost::dynamic_bitset<>(n));
  std::vector<bool> has_word(n, false);
  struct Walk {
    Index value;
    boost::dynamic_bitset<> prefixes;
  };
  boost::dynamic_bitset<> root(n);
  root.set(hecke.identity());
  std::vector<Walk> frontier{{hecke.identity(), root}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& w : frontier) {
      starts[w.value] |= w.prefixes;
      has_word[w.value] = true;
      ++report.words_enumerated;
    }
    if (len == max_len) break;
    std::vector<Walk> next;
    next.reserve(frontier.size() * k);
    for (const auto& w : frontier) {
      for (Index g = 0; g < k; ++g) {
        Walk longer{hecke.times_generator(w.value, g), w.prefixes};
        longer.prefixes.set(longer.value);
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
  }

  const auto cosets = coset_poset(hecke);
  for (Index x = 0; x < n; ++x) {
    if (!has_word[x]) continue;
    for (Index y = 0; y < n; ++y) {
      if (!has_word[y]) continue;
      ++report.pairs_checked;
      const bool included = cosets.order.leq(cosets.coset_of[x], cosets.coset_of[y]);
      if (included != starts[x].test(y)) {
        report.counterexample = std::pair{x, y};
        return report;
      }
    }
  }
  return report;
}

}  // namespace ramsey
