#pragma once

// Exact coefficient structures: the explicit semirings gsk RES_* and
// gsk RES[k], the graded ring Z[X, Y^(2)] = Z ⊕ X Z[X,Y]/(Y^2 + Y), its
// quotient Z^(2) by (1 + 2XY + X), and Laurent polynomials.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "tzeta/rat.hpp"

namespace tzeta {

/// Element (dim, euler) of gsk RES_*. The set is ({0} x N) ∪ (N+ x Z).
struct ResStarElem {
  std::int64_t dim = 0;
  BigInt euler = 0;

  ResStarElem() = default;
  ResStarElem(std::int64_t d, BigInt e);

  friend bool operator==(const ResStarElem&, const ResStarElem&) = default;
};

ResStarElem operator+(const ResStarElem& x, const ResStarElem& y);
ResStarElem operator*(const ResStarElem& x, const ResStarElem& y);

/// Element (grade, dim, euler) of gsk RES[grade].
struct ResGradedElem {
  std::int64_t grade = 0;
  std::int64_t dim = 0;
  BigInt euler = 0;

  ResGradedElem() = default;
  ResGradedElem(std::int64_t k, std::int64_t i, BigInt a);

  friend bool operator==(const ResGradedElem&, const ResGradedElem&) = default;
};

/// Throws GradeMismatch when the grades differ.
ResGradedElem operator+(const ResGradedElem& x, const ResGradedElem& y);
ResGradedElem operator*(const ResGradedElem& x, const ResGradedElem& y);

/// Groupification sends (k, i, a) to a.
inline const BigInt& groupify(const ResGradedElem& x) { return x.euler; }

/// Z[t, t^-1] with a display variable name; zero coefficients never stored.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(BigInt c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long long c) : LaurentPoly(BigInt(c)) {}  // NOLINT
  static LaurentPoly monomial(BigInt c, std::int64_t exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt coeff(std::int64_t exponent) const;
  /// Lowest/highest exponent; only meaningful when nonzero.
  std::int64_t min_degree() const { return terms_.begin()->first; }
  std::int64_t max_degree() const { return terms_.rbegin()->first; }

  void add_term(std::int64_t exponent, const BigInt& c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Value at an integer point; requires unit value when negative exponents occur.
  BigInt evaluate(const BigInt& at) const;
  /// Multiply every exponent by s (s = -1 inverts the variable).
  LaurentPoly scale_exponents(std::int64_t s) const;

  std::string str(std::string_view var = "X") const;

 private:
  Terms terms_;
};

/// Element of Z[X, Y^(2)]: coefficients on X^a Y^b with b in {0, 1}, a >= 1 when b = 1.
class RvRingElem {
 public:
  using Monomial = std::pair<std::int64_t, int>;  // (X-degree, Y-degree)
  using Terms = std::map<Monomial, BigInt>;

  RvRingElem() = default;
  RvRingElem(BigInt c);  // NOLINT(google-explicit-constructor)
  RvRingElem(long long c) : RvRingElem(BigInt(c)) {}  // NOLINT
  static RvRingElem X(std::int64_t power = 1);
  /// X^a Y; a must be >= 1.
  static RvRingElem XY(std::int64_t a = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(std::int64_t a, int b) const;
  bool is_homogeneous(std::int64_t degree) const;

  RvRingElem& operator+=(const RvRingElem& o);
  RvRingElem& operator-=(const RvRingElem& o);
  RvRingElem& operator*=(const RvRingElem& o);
  RvRingElem operator-() const;
  friend RvRingElem operator+(RvRingElem a, const RvRingElem& b) { return a += b; }
  friend RvRingElem operator-(RvRingElem a, const RvRingElem& b) { return a -= b; }
  friend RvRingElem operator*(RvRingElem a, const RvRingElem& b) { return a *= b; }
  friend bool operator==(const RvRingElem&, const RvRingElem&) = default;

  /// Replace X by c*X (graded rescaling).
  RvRingElem scale_x(const BigInt& c) const;

  /// Exponents descending in X then Y, e.g. "2*X^2*Y - X + 1".
  std::string str() const;
  static RvRingElem parse(std::string_view text);

 private:
  void add_term(std::int64_t a, int b, const BigInt& c);
  Terms terms_;
};

/// c0 + c1*Y in Z^(2), Y^2 = -Y.
struct Z2Elem {
  BigInt c0 = 0;
  BigInt c1 = 0;

  friend bool operator==(const Z2Elem&, const Z2Elem&) = default;
  std::string str() const;
};

Z2Elem operator+(const Z2Elem& x, const Z2Elem& y);
Z2Elem operator-(const Z2Elem& x, const Z2Elem& y);
Z2Elem operator*(const Z2Elem& x, const Z2Elem& y);

/// Y := -1 (the "g" Euler characteristic on Z[X, Y^(2)]).
LaurentPoly euler_spec_g(const RvRingElem& x);
/// Y := 0 (the "b" Euler characteristic).
LaurentPoly euler_spec_b(const RvRingElem& x);

/// Projection Z[X, Y^(2)] -> Z^(2) = Z[X, Y^(2)]/(1 + 2XY + X).
///
/// In the quotient X(1 + 2Y) = -1 and (1 + 2Y)^2 = 1 + 4Y + 4Y^2 = 1, so
/// X = -(1 + 2Y); the map substitutes X := -1 - 2Y and reduces Y^2 = -Y.
/// Hence X^a maps to 1 (a even) or -1 - 2Y (a odd), and X^a Y maps to Y.
/// The target is identified with Z[Z]/(Z + Z^2) through Z := Y.
Z2Elem z2_project(const RvRingElem& x);

}  // namespace tzeta
