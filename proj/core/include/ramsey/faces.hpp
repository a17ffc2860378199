#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ramsey/monoid.hpp"

namespace ramsey {

using Rational = boost::multiprecision::cpp_rational;
using RationalVec = std::vector<Rational>;

/// "p/q" or an integer, optional leading sign. Throws InputError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

enum class Sign : signed char { negative = -1, zero = 0, positive = 1 };

using SignVector = std::vector<Sign>;

/// Characters '+', '0', '-'. Throws InputError on anything else.
SignVector parse_sign_vector(std::string_view text);
std::string to_string(const SignVector& signs);
Sign sign_of(const Rational& value);

/// Component i is a_i when nonzero, else b_i. Throws InputError on length mismatch.
SignVector face_product(const SignVector& a, const SignVector& b);
/// a <= b iff each a_i is 0 or equals b_i.
bool face_order(const SignVector& a, const SignVector& b);

/// Central arrangement: hyperplane i is the kernel of x -> normals[i] . x.
struct Arrangement {
  std::size_t dim = 0;
  std::vector<RationalVec> normals;
};

/// Rejects an empty list, wrong lengths, zero normals, and normals that do
/// not span the space (quotient by the common intersection first).
Arrangement arrangement_from_normals(std::size_t dim, std::vector<RationalVec> normals);

/// Rank by exact Gaussian elimination.
std::size_t rank(const std::vector<RationalVec>& rows, std::size_t dim);

/// A point x with eq . x = 0 for every eq and s . x > 0 for every s, or
/// nothing when the system is infeasible. The point has integer coordinates.
std::optional<RationalVec> strict_feasible_point(const std::vector<RationalVec>& equalities,
                                                 const std::vector<RationalVec>& strict,
                                                 std::size_t dim);

struct Face {
  SignVector sign;
  RationalVec witness;
};

inline constexpr std::size_t kMaxHyperplanes = 12;

/// Every realizable sign vector with a witness point, origin first, then by
/// number of nonzero signs and lexicographically in the order 0 < + < -.
/// Throws BudgetError above kMaxHyperplanes hyperplanes.
std::vector<Face> realizable_sign_vectors(const Arrangement& arrangement);

struct FaceMonoid {
  std::vector<Face> faces;  // element i of the monoid is faces[i]
  FiniteMonoid monoid;
};

/// The faces under face_product, generated greedily from the lowest faces
/// (rays before chambers) and named by sign strings. Throws std::logic_error
/// if closure, A^2 = A, ABA = AB, (AB = B <=> A <= B) or R-triviality fails.
FaceMonoid face_monoid(const Arrangement& arrangement);

}  // namespace ramsey
