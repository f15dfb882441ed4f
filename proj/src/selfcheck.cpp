#include <cstdlib>

#include "tzeta/cli.hpp"
#include "tzeta/germ.hpp"
#include "tzeta/io.hpp"

namespace tzeta {

namespace {

const char* side_name(FiberSide s) { return s == FiberSide::Plus ? "plus" : "minus"; }

CheckResult oracle_equivalence() {
  CheckResult r{"oracle-equivalence", true, "corpus x {plus, minus}, 1 <= m <= 30"};
  for (const auto& g : corpus()) {
    for (auto side : {FiberSide::Plus, FiberSide::Minus}) {
      GermZeta z = zeta_of_germ(g, side);
      for (std::int64_t m = 1; m <= 30; ++m) {
        EmValue bf = brute_force_em(g, side, m);
        if (coefficient(z.plus, m) != bf.plus || coefficient(z.minus, m) != bf.minus) {
          return {r.name, false, g.str() + " " + side_name(side) + " differs at m = " + std::to_string(m)};
        }
      }
    }
  }
  return r;
}

CheckResult limit_identity() {
  CheckResult r{"limit-identity", true, "lim Z^± · X^n = -∫R^±"};
  for (const auto& g : corpus()) {
    for (auto side : {FiberSide::Plus, FiberSide::Minus}) {
      BlockSum b = compile_monomial(g, side);
      GermZeta z = zeta_of_germ(g, side);
      RPair ir = int_R_pm(b);
      LaurentPoly xn = LaurentPoly::monomial(1, b.ambient_vf_dim);
      if (limit_at_infinity(z.plus) * xn != -ir.plus || limit_at_infinity(z.minus) * xn != -ir.minus) {
        return {r.name, false, g.str() + " " + side_name(side)};
      }
    }
  }
  return r;
}

CheckResult rationality_shape() {
  CheckResult r{"rationality-shape", true, "denominators 1 - v^a Y^b with b >= 1"};
  for (const auto& g : corpus()) {
    for (auto side : {FiberSide::Plus, FiberSide::Minus}) {
      GermZeta z = zeta_of_germ(g, side);
      for (const RationalZeta* s : {&z.ledger, &z.plus, &z.minus}) {
        RationalZeta again = *s;
        again.normalize();
        if (!(again == *s)) return {r.name, false, g.str() + ": normal form not idempotent"};
        for (const auto& t : s->terms())
          for (const auto& [f, k] : t.factors)
            if (f.b < 1) return {r.name, false, g.str() + ": factor with b < 1"};
      }
    }
  }
  return r;
}

CheckResult anchors() {
  CheckResult r{"anchors", true, "x^2 even support |2|, x |1|"};
  GermZeta sq = zeta_of_germ(parse_germ("x^2"), FiberSide::Plus);
  if (sq.plus.terms().size() != 1 || !sq.plus.poly().empty())
    return {r.name, false, "x^2 closed form is not a single term"};
  GermZeta lin = zeta_of_germ(parse_germ("x"), FiberSide::Plus);
  for (std::int64_t m = 1; m <= 30; ++m) {
    BigInt c = coefficient(sq.plus, m).coeff(0);
    BigInt want = m % 2 == 0 ? 2 : 0;
    if (abs(c) != want) return {r.name, false, "x^2 at m = " + std::to_string(m)};
    if (abs(coefficient(lin.plus, m).coeff(0)) != 1) return {r.name, false, "x at m = " + std::to_string(m)};
  }
  return r;
}

CheckResult quotient_relation() {
  CheckResult r{"quotient-relation", true, "1 + 2XY + X vanishes under ∫G, ∫R^g, ∫R^b"};
  // 1_K + [J] as a block list: the point, both open value rays, and [1]·(-1).
  BlockSum s;
  s.blocks.push_back(pure_gamma_block(GammaSet::unit()));
  for (Sign sg : {Sign::Plus, Sign::Minus}) {
    GammaSet ray{1, {}};
    GammaCell c;
    c.ambient = 1;
    c.signs = {sg};
    c.strict.push_back({{Rat(1)}, Rat(0), Direction::Greater});
    ray.cells.push_back(c);
    Block b = pure_gamma_block(ray);
    s.blocks.push_back(b);
  }
  s.blocks.push_back(pure_res_block(1, 0, -1));
  if (rv_class(s) != RvRingElem::parse("2*X*Y + X + 1")) return {r.name, false, "generator images"};
  if (!(int_G(s) == Z2Elem{})) return {r.name, false, "int_G"};
  if (int_R_g(s) != 0 || int_R_b(s) != 0) return {r.name, false, "int_R"};
  return r;
}

CheckResult round_trip() {
  CheckResult r{"round-trip", true, "save ∘ load byte-stable"};
  for (const auto& g : corpus()) {
    for (auto side : {FiberSide::Plus, FiberSide::Minus}) {
      BlockSum b = compile_monomial(g, side);
      std::string text = dump_presentation(b);
      BlockSum back = parse_presentation(text);
      if (!(back == b) || dump_presentation(back) != text)
        return {r.name, false, g.str() + " " + side_name(side)};
    }
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_self_checks() {
  std::vector<CheckResult> out;
  for (auto f : {quotient_relation, oracle_equivalence, rationality_shape, limit_identity, anchors,
                 round_trip}) {
    try {
      out.push_back(f());
    } catch (const std::exception& e) {
      out.push_back({"exception", false, e.what()});
    }
  }
  return out;
}

}  // namespace tzeta
