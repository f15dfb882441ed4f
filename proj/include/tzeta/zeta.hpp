#pragma once

// Rational generating functions
//
//   Z(Y) = P(Y) + Σ_i c_i v^{s_i} Y^{p_i} / Π_j (1 - v^{a_ij} Y^{b_ij})
//
// with integer c_i, b_ij >= 1 and v = [1]/[A!]. A ledger series keeps v
// symbolic; an evaluated series (plus/minus) has v := -1 and the (±1)^n
// sign applied, so its coefficients are integers.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tzeta/classes.hpp"
#include "tzeta/rings.hpp"

namespace tzeta {

enum class ZetaRing { Ledger, Plus, Minus };

/// 1 - v^a Y^b.
struct DenFactor {
  std::int64_t a = 0;
  std::int64_t b = 1;
  auto operator<=>(const DenFactor&) const = default;
};

struct GeoTerm {
  BigInt c = 1;
  std::int64_t s = 0;  // v exponent
  std::int64_t p = 0;  // Y exponent
  std::map<DenFactor, int> factors;  // factor -> multiplicity

  int factor_count() const;
  std::int64_t total_b() const;
  std::int64_t total_a() const;
  friend bool operator==(const GeoTerm&, const GeoTerm&) = default;
};

class RationalZeta {
 public:
  explicit RationalZeta(ZetaRing ring = ZetaRing::Ledger) : ring_(ring) {}

  ZetaRing ring() const { return ring_; }
  const std::map<std::int64_t, LaurentPoly>& poly() const { return poly_; }
  const std::vector<GeoTerm>& terms() const { return terms_; }

  void add_poly(std::int64_t m, const LaurentPoly& c);
  void add_term(GeoTerm t);
  RationalZeta& operator+=(const RationalZeta& o);
  /// Multiply by c v^s.
  RationalZeta scaled(const BigInt& c, std::int64_t s) const;

  /// Sorts factors and terms, merges equal shapes, drops zeros; for
  /// evaluated rings reduces v-exponents (v = -1). Idempotent.
  void normalize();

  bool is_zero() const { return poly_.empty() && terms_.empty(); }
  friend bool operator==(const RationalZeta&, const RationalZeta&) = default;

 private:
  ZetaRing ring_;
  std::map<std::int64_t, LaurentPoly> poly_;
  std::vector<GeoTerm> terms_;
};

/// prefactor · v^q Y^p / (1 - v^q Y^p). Throws InvalidPeriod for p < 1.
RationalZeta zeta_from_res_block(const LaurentPoly& prefactor, std::int64_t q, std::int64_t p);

/// Σ_m Y^m Σ_{β in (1/m)Z - w0} d(β) v^{m(w0+β)} over the given pieces.
RationalZeta zeta_from_gamma_block(const std::vector<SigmaPiece>& pieces, const Rat& w0);

/// Coefficientwise product. Throws RingMismatch; Unsupported when two
/// terms both have more than one denominator factor.
RationalZeta hadamard(const RationalZeta& a, const RationalZeta& b);

/// Exact coefficient of Y^m (a constant for evaluated rings).
LaurentPoly coefficient(const RationalZeta& z, std::int64_t m);

/// Constant term of the expansion at Y = ∞. Throws NoLimit.
LaurentPoly limit_at_infinity(const RationalZeta& z);

/// v := -1 and multiply by (±1)^n. Throws RingMismatch unless z is a ledger.
RationalZeta evaluate(const RationalZeta& z, Assignment a, std::int64_t n);

/// Ledger zeta of a homogeneous, doubly bounded block sum.
RationalZeta zeta_of_blocks(const BlockSum& s);

/// "Z(Y) = ..." canonical text.
std::string render(const RationalZeta& z);

}  // namespace tzeta
