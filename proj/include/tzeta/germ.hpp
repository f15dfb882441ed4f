#pragma once

// Monomial germs f = ±x1^a1···xn^an: compilation of the lifted Milnor
// fibres into block presentations, an independent brute-force e_m oracle,
// and the assembled zeta functions.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tzeta/classes.hpp"
#include "tzeta/zeta.hpp"

namespace tzeta {

struct MonomialGerm {
  std::vector<std::int64_t> exponents;
  Sign coefficient_sign = Sign::Plus;
  std::vector<std::string> names;  // display only

  std::size_t nvars() const { return exponents.size(); }
  std::string str() const;
};

enum class FiberSide { Plus, Minus };

/// Grammar: [±][1*]v^a*v^b*... with v either x<i> (indexed) or any other
/// identifier (numbered by first appearance). Throws Parse, NotAGerm or
/// UnsupportedGerm.
MonomialGerm parse_germ(std::string_view text);

/// Throws NotAGerm (all exponents zero) and UnsupportedGerm (some zero).
void validate_germ(const MonomialGerm& g);

BlockSum compile_monomial(const MonomialGerm& g, FiberSide side);

/// Direct slice enumeration; shares no code with the zeta closed forms.
/// Throws DeskScaleExceeded beyond n = 4 or m = 60, InvalidLevel for m < 1.
EmValue brute_force_em(const MonomialGerm& g, FiberSide side, std::int64_t m);

struct GermZeta {
  RationalZeta ledger;
  RationalZeta plus{ZetaRing::Plus};
  RationalZeta minus{ZetaRing::Minus};
};

GermZeta zeta_of_germ(const MonomialGerm& g, FiberSide side);
GermZeta zeta_of_presentation(const BlockSum& s);

/// The fixed corpus x, x^2, x^3, xy, x^2y^3, xyz, x^2y^2.
std::vector<MonomialGerm> corpus();

}  // namespace tzeta
