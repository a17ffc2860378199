#include "ramsey/faces.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ramsey/cosets.hpp"

namespace ramsey {

namespace {

using boost::multiprecision::cpp_int;

Rational dot(const RationalVec& a, const RationalVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RationalVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVec>& rows, std::size_t dim) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                           [c](const RationalVec& row) { return row[c] != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), it);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Columns form a basis of {x : rows . x = 0}.
std::vector<RationalVec> nullspace(std::vector<RationalVec> rows, std::size_t dim) {
  const auto pivots = rref(rows, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVec> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RationalVec v(dim, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Scale by a positive factor so the leading nonzero magnitude is 1; keeps
// duplicate constraints from multiplying during elimination.
RationalVec normalized(RationalVec v) {
  for (const auto& x : v) {
    if (x != 0) {
      const Rational s = abs(x);
      for (auto& y : v) y /= s;
      break;
    }
  }
  return v;
}

// Strict homogeneous system rows . y > 0 over `vars` variables.
std::optional<RationalVec> fourier_motzkin(std::vector<RationalVec> rows, std::size_t vars) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if (vars == 0) {
    // every remaining constraint reads 0 > 0
    if (!rows.empty()) return std::nullopt;
    return RationalVec{};
  }
  const std::size_t last = vars - 1;
  std::vector<RationalVec> lower, upper, rest;
  for (auto& row : rows) {
    if (row[last] > 0) {
      lower.push_back(row);
    } else if (row[last] < 0) {
      upper.push_back(row);
    } else {
      rest.push_back(row);
    }
  }
  // row . y > 0 with c = row[last]: y_last > -(sum_{j<last} row_j y_j) / c when c > 0
  auto bound_coeffs = [&](const RationalVec& row) {
    RationalVec b(last);
    for (std::size_t j = 0; j < last; ++j) b[j] = -row[j] / row[last];
    return b;
  };
  std::vector<RationalVec> reduced;
  for (const auto& row : rest) {
    RationalVec r(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(last));
    if (is_zero(r)) return std::nullopt;
    reduced.push_back(normalized(std::move(r)));
  }
  for (const auto& lo : lower) {
    const auto l = bound_coeffs(lo);
    for (const auto& hi : upper) {
      const auto u = bound_coeffs(hi);
      // l . y < u . y
      RationalVec r(last);
      for (std::size_t j = 0; j < last; ++j) r[j] = u[j] - l[j];
      if (is_zero(r)) return std::nullopt;
      reduced.push_back(normalized(std::move(r)));
    }
  }
  auto point = fourier_motzkin(std::move(reduced), last);
  if (!point) return std::nullopt;

  std::optional<Rational> lo_val, hi_val;
  for (const auto& row : lower) {
    const Rational v = dot(bound_coeffs(row), *point);
    if (!lo_val || v > *lo_val) lo_val = v;
  }
  for (const auto& row : upper) {
    const Rational v = dot(bound_coeffs(row), *point);
    if (!hi_val || v < *hi_val) hi_val = v;
  }
  Rational y = 0;
  if (lo_val && hi_val) {
    y = (*lo_val + *hi_val) / 2;
  } else if (lo_val) {
    y = *lo_val + 1;
  } else if (hi_val) {
    y = *hi_val - 1;
  }
  point->push_back(y);
  return point;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw InputError("not a rational number: \"" + std::string(text) + "\"");
    }
    if (s[0] == '+') s.erase(0, 1);
    return cpp_int(s);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const cpp_int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rational& value) { return value.str(); }

SignVector parse_sign_vector(std::string_view text) {
  SignVector out;
  for (char c : text) {
    switch (c) {
      case '+': out.push_back(Sign::positive); break;
      case '0': out.push_back(Sign::zero); break;
      case '-': out.push_back(Sign::negative); break;
      default: throw InputError("sign vectors use '+', '0', '-': \"" + std::string(text) + "\"");
    }
  }
  return out;
}

std::string to_string(const SignVector& signs) {
  std::string s;
  for (Sign x : signs) s += x == Sign::positive ? '+' : x == Sign::negative ? '-' : '0';
  return s;
}

Sign sign_of(const Rational& value) {
  return value > 0 ? Sign::positive : value < 0 ? Sign::negative : Sign::zero;
}

SignVector face_product(const SignVector& a, const SignVector& b) {
  if (a.size() != b.size()) throw InputError("sign vectors differ in length");
  SignVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] != Sign::zero ? a[i] : b[i];
  return out;
}

bool face_order(const SignVector& a, const SignVector& b) {
  if (a.size() != b.size()) throw InputError("sign vectors differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != Sign::zero && a[i] != b[i]) return false;
  }
  return true;
}

std::size_t rank(const std::vector<RationalVec>& rows, std::size_t dim) {
  auto copy = rows;
  return rref(copy, dim).size();
}

Arrangement arrangement_from_normals(std::size_t dim, std::vector<RationalVec> normals) {
  if (dim == 0) throw InputError("arrangement dimension must be positive");
  if (normals.empty()) throw InputError("arrangement needs at least one hyperplane");
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != dim) {
      throw InputError("normal " + std::to_string(i) + " has " + std::to_string(normals[i].size()) +
                       " coordinates, expected " + std::to_string(dim));
    }
    if (is_zero(normals[i])) throw InputError("normal " + std::to_string(i) + " is zero");
  }
  const auto r = rank(normals, dim);
  if (r < dim) {
    throw InputError("normals have rank " + std::to_string(r) + " < " + std::to_string(dim) +
                     "; the hyperplanes must meet only in the origin, so pass the arrangement "
                     "in the quotient by their common intersection");
  }
  return Arrangement{dim, std::move(normals)};
}

std::optional<RationalVec> strict_feasible_point(const std::vector<RationalVec>& equalities,
                                                 const std::vector<RationalVec>& strict,
                                                 std::size_t dim) {
  // x = B y with the columns of B spanning the solutions of the equalities
  const auto basis = nullspace(equalities, dim);
  std::vector<RationalVec> rows;
  for (const auto& s : strict) {
    RationalVec c(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) c[j] = dot(s, basis[j]);
    if (is_zero(c)) return std::nullopt;
    rows.push_back(normalized(std::move(c)));
  }
  auto y = fourier_motzkin(std::move(rows), basis.size());
  if (!y) return std::nullopt;

  RationalVec x(dim, Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) x[i] += (*y)[j] * basis[j][i];
  }
  cpp_int scale = 1;
  for (const auto& v : x) scale = boost::multiprecision::lcm(scale, denominator(v));
  for (auto& v : x) v *= scale;

  for (const auto& e : equalities) {
    if (dot(e, x) != 0) throw std::logic_error("feasible point breaks an equality");
  }
  for (const auto& s : strict) {
    if (dot(s, x) <= 0) throw std::logic_error("feasible point breaks a strict inequality");
  }
  return x;
}

std::vector<Face> realizable_sign_vectors(const Arrangement& arrangement) {
  const auto k = arrangement.normals.size();
  if (k > kMaxHyperplanes) {
    throw BudgetError("arrangement has " + std::to_string(k) + " hyperplanes; at most " +
                          std::to_string(kMaxHyperplanes) + " are enumerated",
                      k);
  }
  std::vector<Face> faces;
  SignVector prefix;
  std::vector<RationalVec> eqs, strict;

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    const auto point = strict_feasible_point(eqs, strict, arrangement.dim);
    if (!point) return;
    if (i == k) {
      faces.push_back(Face{prefix, *point});
      return;
    }
    const auto& a = arrangement.normals[i];
    RationalVec neg(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) neg[j] = -a[j];

    prefix.push_back(Sign::zero);
    eqs.push_back(a);
    self(self, i + 1);
    eqs.pop_back();

    prefix.back() = Sign::positive;
    strict.push_back(a);
    self(self, i + 1);
    strict.back() = neg;
    prefix.back() = Sign::negative;
    self(self, i + 1);
    strict.pop_back();
    prefix.pop_back();
  };
  dfs(dfs, 0);

  auto weight = [](const SignVector& s) {
    return std::count_if(s.begin(), s.end(), [](Sign x) { return x != Sign::zero; });
  };
  auto rank_of = [](Sign x) { return x == Sign::zero ? 0 : x == Sign::positive ? 1 : 2; };
  std::stable_sort(faces.begin(), faces.end(), [&](const Face& a, const Face& b) {
    const auto wa = weight(a.sign), wb = weight(b.sign);
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.sign.begin(), a.sign.end(), b.sign.begin(),
                                        b.sign.end(), [&](Sign x, Sign y) {
                                          return rank_of(x) < rank_of(y);
                                        });
  });
  return faces;
}

FaceMonoid face_monoid(const Arrangement& arrangement) {
  auto faces = realizable_sign_vectors(arrangement);
  const auto n = faces.size();
  std::map<SignVector, Index> index;
  for (Index i = 0; i < n; ++i) index.emplace(faces[i].sign, i);

  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const auto it = index.find(face_product(faces[a].sign, faces[b].sign));
      if (it == index.end()) throw std::logic_error("faces are not closed under the product");
      table[a][b] = it->second;
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (table[a][a] != a) throw std::logic_error("face is not idempotent");
    for (Index b = 0; b < n; ++b) {
      if (table[table[a][b]][a] != table[a][b]) throw std::logic_error("ABA = AB fails");
      if ((table[a][b] == b) != face_order(faces[a].sign, faces[b].sign)) {
        throw std::logic_error("AB = B disagrees with the face order");
      }
    }
  }

  // greedy generators in face order: rays come before chambers
  std::vector<Index> gens;
  {
    std::vector<bool> reached(n, false);
    reached[0] = true;
    std::vector<Index> members{0};
    for (Index c = 1; c < n; ++c) {
      if (reached[c]) continue;
      gens.push_back(c);
      for (std::size_t head = 0; head < members.size(); ++head) {
        for (Index g : gens) {
          const Index next = table[members[head]][g];
          if (!reached[next]) {
            reached[next] = true;
            members.push_back(next);
          }
        }
      }
    }
  }
  std::vector<std::string> names;
  for (Index g : gens) names.push_back(to_string(faces[g].sign));
  auto monoid = monoid_from_cayley(table, 0, gens, std::move(names));
  if (!is_r_trivial(monoid)) throw std::logic_error("face monoid is not R-trivial");
  return FaceMonoid{std::move(faces), std::move(monoid)};
}

}  // namespace ramsey
