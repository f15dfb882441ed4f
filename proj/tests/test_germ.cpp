#include "doctest.h"
#include "support.hpp"
#include "tzeta/error.hpp"
#include "tzeta/germ.hpp"

using namespace tzeta;
using namespace tzeta::testing;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Unsupported;
}

// Independent sign enumeration: count ε with sgn(c)·Π ε_i^{a_i} = side.
int admissible_count(const std::vector<std::int64_t>& a, int c, int side) {
  int count = 0;
  const std::size_t n = a.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    int s = c;
    for (std::size_t i = 0; i < n; ++i)
      for (std::int64_t k = 0; k < a[i]; ++k) s *= (mask >> i) & 1 ? -1 : 1;
    if (s == side) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("germ grammar") {
  MonomialGerm g = parse_germ("x^2*y^3");
  CHECK(g.exponents == std::vector<std::int64_t>{2, 3});
  CHECK(g.str() == "x^2*y^3");
  CHECK(parse_germ("-x1*x3^2*x2").exponents == std::vector<std::int64_t>{1, 1, 2});
  CHECK(parse_germ("-x1*x2").coefficient_sign == Sign::Minus);
  CHECK(parse_germ("1*x*x").exponents == std::vector<std::int64_t>{2});
  CHECK(parse_germ(" x * y * z ").nvars() == 3);
  CHECK(kind_of([] { parse_germ("x^0"); }) == ErrorKind::NotAGerm);
  CHECK(kind_of([] { parse_germ("1"); }) == ErrorKind::NotAGerm);
  CHECK(kind_of([] { parse_germ("x1*x3"); }) == ErrorKind::UnsupportedGerm);
  CHECK(kind_of([] { parse_germ("x*y^0"); }) == ErrorKind::UnsupportedGerm);
  CHECK(kind_of([] { parse_germ("3*x"); }) == ErrorKind::UnsupportedGerm);
  CHECK(kind_of([] { parse_germ("x+y"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_germ("x^"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_germ(""); }) == ErrorKind::Parse);
}

TEST_CASE("compilation of the fibre") {
  BlockSum sq = compile_monomial(parse_germ("x^2"), FiberSide::Plus);
  CHECK(sq.ambient_vf_dim == 1);
  REQUIRE(sq.blocks.size() == 2);
  for (const auto& b : sq.blocks) {
    auto pieces = sigma_range(b.gamma);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].is_point);
    CHECK(pieces[0].lo == Rat(BigInt(1), BigInt(2)));
    CHECK(b.total_grade() == 1);
  }
  CHECK(compile_monomial(parse_germ("x^2"), FiberSide::Minus).blocks.empty());
  BlockSum xy = compile_monomial(parse_germ("x*y"), FiberSide::Plus);
  REQUIRE(xy.blocks.size() == 2);
  CHECK(xy.blocks[0].gamma.cells[0].signs == std::vector<Sign>{Sign::Plus, Sign::Plus});
  CHECK(xy.blocks[1].gamma.cells[0].signs == std::vector<Sign>{Sign::Minus, Sign::Minus});
  for (const auto& g : corpus()) {
    for (auto side : {FiberSide::Plus, FiberSide::Minus}) {
      BlockSum b = compile_monomial(g, side);
      CHECK(b.blocks.size() == static_cast<std::size_t>(admissible_count(
                                   g.exponents, 1, side == FiberSide::Plus ? 1 : -1)));
      for (const auto& blk : b.blocks) {
        CHECK(is_doubly_bounded(blk.gamma));
        CHECK_NOTHROW(validate_block(blk));
      }
    }
  }
}

TEST_CASE("empty-fibre symmetry") {
  for (const char* s : {"x^2", "x^2*y^2", "x^4*y^2", "x^2*y^2*z^2"}) {
    MonomialGerm g = parse_germ(s);
    MonomialGerm neg = g;
    neg.coefficient_sign = Sign::Minus;
    CHECK(compile_monomial(neg, FiberSide::Plus).blocks.empty() ==
          compile_monomial(g, FiberSide::Minus).blocks.empty());
    CHECK(compile_monomial(g, FiberSide::Minus).blocks.empty());
  }
}

TEST_CASE("brute-force oracle anchors") {
  MonomialGerm sq = parse_germ("x^2");
  for (std::int64_t m = 1; m <= 20; ++m) {
    EmValue e = brute_force_em(sq, FiberSide::Plus, m);
    if (m % 2) {
      CHECK(e.plus.is_zero());
      CHECK(e.minus.is_zero());
    } else {
      CHECK(e.plus.coeff(0) == -2 * neg_one_pow(static_cast<long long>(m / 2)));
    }
  }
  MonomialGerm xy = parse_germ("x*y");
  // Σα ≡ 1 on the segment: one slice per pattern, each an open segment (χ = -1)
  EmValue e3 = brute_force_em(xy, FiberSide::Plus, 3);
  CHECK(e3.plus.coeff(0) == -2);
  CHECK(kind_of([&] { brute_force_em(xy, FiberSide::Plus, 61); }) == ErrorKind::DeskScaleExceeded);
  CHECK(kind_of([&] { brute_force_em(parse_germ("x1*x2*x3*x4*x5"), FiberSide::Plus, 2); }) ==
        ErrorKind::DeskScaleExceeded);
  CHECK(kind_of([&] { brute_force_em(xy, FiberSide::Plus, 0); }) == ErrorKind::InvalidLevel);
}

TEST_CASE("zeta of the corpus agrees with the oracle and with e_m") {
  for (const auto& g : corpus()) {
    for (auto side : {FiberSide::Plus, FiberSide::Minus}) {
      GermZeta z = zeta_of_germ(g, side);
      BlockSum b = compile_monomial(g, side);
      for (std::int64_t m = 1; m <= 40; ++m) {
        EmValue direct = e_m(b, m);
        CHECK(coefficient(z.ledger, m) == direct.ledger);
        CHECK(coefficient(z.plus, m) == direct.plus);
        CHECK(coefficient(z.minus, m) == direct.minus);
        if (m <= 12) CHECK(brute_force_em(g, side, m) == direct);
      }
    }
  }
}

TEST_CASE("anchors of the assembled zeta") {
  GermZeta sq = zeta_of_germ(parse_germ("x^2"), FiberSide::Plus);
  CHECK(sq.plus.terms().size() == 1);
  CHECK(render(sq.plus) == "Z(Y) = 2*Y^2/(1 + Y^2)");
  GermZeta lin = zeta_of_germ(parse_germ("x"), FiberSide::Plus);
  for (std::int64_t m = 1; m <= 20; ++m) CHECK(abs(coefficient(lin.plus, m).coeff(0)) == 1);
  GermZeta none = zeta_of_germ(parse_germ("x^2"), FiberSide::Minus);
  CHECK(none.plus.is_zero());
  CHECK(none.minus.is_zero());
}

TEST_CASE("product germs") {
  // x^a y^b: admissible patterns of the product are pairs of factor patterns
  // with matching side products, and every block has total grade 2.
  BlockSum p = compile_monomial(parse_germ("x^2*y^3"), FiberSide::Plus);
  for (const auto& b : p.blocks) CHECK(b.total_grade() == 2);
  std::size_t pairs = 0;
  for (auto s1 : {FiberSide::Plus, FiberSide::Minus})
    for (auto s2 : {FiberSide::Plus, FiberSide::Minus})
      if (s1 == s2)
        pairs += compile_monomial(parse_germ("x^2"), s1).blocks.size() *
                 compile_monomial(parse_germ("y^3"), s2).blocks.size();
  CHECK(p.blocks.size() == pairs);
}
