// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "support.hpp"
#include "tzeta/error.hpp"
#include "tzeta/germ.hpp"
#include "tzeta/io.hpp"

using namespace tzeta;
using namespace tzeta::testing;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string side_name(FiberSide s) { return s == FiberSide::Plus ? "plus" : "minus"; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Exhaustive semiring tables.
std::string semiring_tables() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::int64_t, std::int64_t>> star;
  for (std::int64_t a = 0; a <= 5; ++a)
    for (std::int64_t b = -5; b <= 5; ++b)
      if (a > 0 || b >= 0) star.emplace_back(a, b);
  std::size_t n = 0;
  for (auto [a, b] : star)
    for (auto [c, d] : star) {
      ResStarElem x(a, b), y(c, d);
      expect(x + y == ResStarElem(std::max(a, c), b + d), "RES_* sum");
      expect(x * y == ResStarElem(a + c, BigInt(b * d)), "RES_* product");
      expect(x + y == y + x && x * y == y * x, "RES_* commutativity");
      ++n;
    }
  std::vector<ResGradedElem> graded;
  for (std::int64_t k = 0; k <= 5; ++k)
    for (std::int64_t i = 0; i <= k; ++i)
      for (std::int64_t a = -5; a <= 5; ++a)
        if (k > 0 || a >= 0) graded.emplace_back(k, i, a);
  for (const auto& x : graded)
    for (const auto& y : graded) {
      ResGradedElem p = x * y;
      expect(p == ResGradedElem(x.grade + y.grade, x.dim + y.dim, x.euler * y.euler), "RES[*] product");
      expect(groupify(p) == groupify(x) * groupify(y), "groupification of products");
      if (x.grade == y.grade) {
        ResGradedElem s = x + y;
        expect(s == ResGradedElem(x.grade, std::max(x.dim, y.dim), x.euler + y.euler), "RES[k] sum");
        expect(groupify(s) == groupify(x) + groupify(y), "groupification of sums");
      } else {
        bool threw = false;
        try {
          (void)(x + y);
        } catch (const Error& e) {
          threw = e.kind() == ErrorKind::GradeMismatch;
        }
        expect(threw, "mixed-grade sum must raise GradeMismatch");
      }
      ++n;
    }
  double s = seconds_since(t0);
  expect(s < 1.0, "runtime over 1 s");
  std::ostringstream o;
  o << n << " operand pairs in " << s << " s";
  return o.str();
}

// 2. Quotient relation and kernel.
std::string quotient_relation() {
  const RvRingElem rel = RvRingElem::parse("1 + 2*X*Y + X");
  expect(z2_project(rel) == Z2Elem{}, "z2_project(1 + 2XY + X)");
  Rng r(1);
  for (int i = 0; i < 100; ++i) {
    expect(z2_project(rel * random_rv(r)) == Z2Elem{}, "ideal multiple");
    BlockSum x = random_blocksum(r);
    BlockSum ideal = tensor(one_plus_j(), x);
    expect(rv_class(ideal) == rel * rv_class(x), "block presentation of the ideal");
    expect(int_R_g(ideal) == 0, "int_R_g kernel");
    expect(int_R_b(ideal) == 0, "int_R_b kernel");
    expect(int_G(ideal) == Z2Elem{}, "int_G kernel");
  }
  return "100 random multiples";
}

// 3. Euler characteristics.
std::string euler_characteristics() {
  GammaCell ray;
  ray.ambient = 1;
  ray.signs = {Sign::Plus};
  ray.strict.push_back({{Rat(1)}, Rat(0), Direction::Greater});
  GammaSet rs{1, {ray}};
  expect(chi_g(rs) == -1, "chi_g of open ray");
  expect(chi_b(rs) == 0, "chi_b of open ray");
  Rng r(3);
  for (int i = 0; i < 200; ++i) {
    KnownSet a = random_known_set(r, static_cast<std::size_t>(uniform(r, 0, 2)));
    KnownSet b = random_known_set(r, static_cast<std::size_t>(uniform(r, 0, 2)));
    GammaSet p = product(a.set, b.set);
    expect(chi_g(p) == chi_g(a.set) * chi_g(b.set), "chi_g multiplicative");
    expect(chi_b(p) == chi_b(a.set) * chi_b(b.set), "chi_b multiplicative");
    // partition of an interval box along its first coordinate at c
    Piece q = random_piece(r, true);
    q.kind = Piece::Bounded;
    Rat c = (q.a + q.b) / Rat(2);
    std::vector<Piece> rest;
    for (int k = uniform(r, 0, 2); k > 0; --k) rest.push_back(random_piece(r));
    auto with = [&](Piece first) {
      std::vector<Piece> ps{first};
      ps.insert(ps.end(), rest.begin(), rest.end());
      return box_of(ps);
    };
    GammaSet whole{1 + rest.size(), {with(q)}};
    GammaSet parts{1 + rest.size(),
                   {with(Piece{Piece::Bounded, q.a, c}), with(Piece{Piece::Point, c, c}),
                    with(Piece{Piece::Bounded, c, q.b})}};
    validate(parts);
    expect(chi_g(parts) == chi_g(whole), "chi_g additive");
    expect(chi_b(parts) == chi_b(whole), "chi_b additive");
  }
  std::vector<std::size_t> perm(3);
  for (int i = 0; i < 50; ++i) {
    GammaCell c = random_polyhedron(r, 3);
    GammaSet s{3, {c}};
    auto g = chi_g(s), b = chi_b(s);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      GammaSet q{3, {permute_coordinates(c, perm)}};
      expect(chi_g(q) == g && chi_b(q) == b, "elimination-order invariance");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return "ray normalisation, 200 products/partitions, 50 3-D polyhedra x 6 orders";
}

// 4. Class map and Euler specialisations.
std::string decomposition_consistency() {
  Rng r(4);
  for (int i = 0; i < 100; ++i) {
    std::size_t l = static_cast<std::size_t>(uniform(r, 1, 3));
    GammaSet s{l, {}};
    std::size_t cells = static_cast<std::size_t>(uniform(r, 1, l == 1 ? 2 : 3));
    for (std::size_t k = 0; k < cells; ++k) {
      // distinct sign vectors keep the cells disjoint
      GammaCell c = random_polyhedron(r, l);
      c.signs = signs_of_mask(k, l);
      s.cells.push_back(c);
    }
    validate(s);
    auto L = static_cast<std::int64_t>(l);
    expect(euler_spec_g(gamma_class(s)) == LaurentPoly::monomial(chi_g(s), L), "euler_spec_g");
    expect(euler_spec_b(gamma_class(s)) == LaurentPoly::monomial(chi_b(s), L), "euler_spec_b");
  }
  return "100 random Γ-sets";
}

// 5. Oracle equivalence.
std::string oracle_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  for (const auto& g : corpus()) {
    for (auto side : {FiberSide::Plus, FiberSide::Minus}) {
      GermZeta z = zeta_of_germ(g, side);
      for (std::int64_t m = 1; m <= 30; ++m) {
        EmValue bf = brute_force_em(g, side, m);
        expect(coefficient(z.plus, m) == bf.plus && coefficient(z.minus, m) == bf.minus,
               g.str() + " " + side_name(side) + " m=" + std::to_string(m));
        ++checked;
      }
    }
  }
  double s = seconds_since(t0);
  expect(s < 300, "runtime over 5 min");
  std::ostringstream o;
  o << checked << " coefficients in " << s << " s";
  return o.str();
}

// 6. Rationality shape.
std::string rationality_shape() {
  int factors = 0;
  for (const auto& g : corpus()) {
    for (auto side : {FiberSide::Plus, FiberSide::Minus}) {
      GermZeta z = zeta_of_germ(g, side);
      for (const RationalZeta* s : {&z.ledger, &z.plus, &z.minus}) {
        RationalZeta again = *s;
        again.normalize();
        expect(again == *s, "normal form idempotent");
        for (const auto& t : s->terms()) {
          expect(t.p >= 1, "no constant term");
          for (const auto& [f, k] : t.factors) {
            expect(f.b >= 1, "factor with b < 1");
            factors += k;
          }
        }
      }
    }
  }
  return std::to_string(factors) + " denominator factors, all b >= 1";
}

// 7. Limit identity.
std::string limit_identity() {
  for (const auto& g : corpus()) {
    for (auto side : {FiberSide::Plus, FiberSide::Minus}) {
      BlockSum b = compile_monomial(g, side);
      GermZeta z = zeta_of_germ(g, side);
      RPair ir = int_R_pm(b);
      LaurentPoly xn = LaurentPoly::monomial(1, b.ambient_vf_dim);
      expect(limit_at_infinity(z.plus) * xn == -ir.plus, g.str() + " " + side_name(side) + " plus");
      expect(limit_at_infinity(z.minus) * xn == -ir.minus, g.str() + " " + side_name(side) + " minus");
      if (b.ambient_vf_dim % 2 == 1 && !b.blocks.empty())
        expect(ir.plus != ir.minus, "odd n must separate the two maps");
    }
  }
  return "corpus x {plus, minus}";
}

// 8. Hadamard products of geometric terms.
std::string hadamard_pairs() {
  Rng r(8);
  for (int i = 0; i < 50; ++i) {
    std::int64_t s[2], p[2], a[2], b[2];
    BigInt c[2];
    RationalZeta z[2];
    for (int k = 0; k < 2; ++k) {
      c[k] = uniform(r, -4, 4);
      if (c[k] == 0) c[k] = 1;
      s[k] = uniform(r, -3, 3);
      p[k] = uniform(r, 0, 6);
      a[k] = uniform(r, -3, 3);
      b[k] = uniform(r, 1, 6);
      GeoTerm t;
      t.c = c[k];
      t.s = s[k];
      t.p = p[k];
      t.factors[DenFactor{a[k], b[k]}] = 1;
      z[k].add_term(t);
      z[k].normalize();
    }
    RationalZeta h = hadamard(z[0], z[1]);
    for (std::int64_t m = 0; m <= 40; ++m) {
      LaurentPoly want = geo_coeff(c[0], s[0], p[0], a[0], b[0], m) * geo_coeff(c[1], s[1], p[1], a[1], b[1], m);
      expect(coefficient(h, m) == want, "pair " + std::to_string(i) + " at m=" + std::to_string(m));
    }
    expect(h.terms().size() <= 1, "geometric pair must merge into one term");
  }
  return "50 random pairs to order 40";
}

// 9. Anchors.
std::string anchors() {
  MonomialGerm sq = parse_germ("x^2"), lin = parse_germ("x");
  GermZeta zs = zeta_of_germ(sq, FiberSide::Plus);
  GermZeta zl = zeta_of_germ(lin, FiberSide::Plus);
  expect(zs.plus.terms().size() == 1 && zs.plus.poly().empty(), "x^2 single geometric term");
  for (std::int64_t m = 1; m <= 30; ++m) {
    BigInt cs = coefficient(zs.plus, m).coeff(0);
    BigInt bs = brute_force_em(sq, FiberSide::Plus, m).plus.coeff(0);
    expect(cs == bs, "x^2 vs oracle");
    expect(abs(cs) == (m % 2 == 0 ? 2 : 0), "x^2 support at m=" + std::to_string(m));
    BigInt cl = coefficient(zl.plus, m).coeff(0);
    expect(cl == brute_force_em(lin, FiberSide::Plus, m).plus.coeff(0), "x vs oracle");
    expect(abs(cl) == 1, "x magnitude at m=" + std::to_string(m));
  }
  return render(zs.plus) + "; x: " + render(zl.plus);
}

// 10. Round trip.
std::string round_trip() {
  std::vector<BlockSum> cases;
  for (const auto& g : corpus())
    for (auto side : {FiberSide::Plus, FiberSide::Minus}) cases.push_back(compile_monomial(g, side));
  for (const char* s : {"x^4", "-x^3", "x*y^2", "x^3*y", "x1*x2*x3*x4"})
    cases.push_back(compile_monomial(parse_germ(s), FiberSide::Plus));
  BlockSum hand;
  hand.ambient_vf_dim = 2;
  hand.q = Rat(1);
  Block b;
  b.res = VolResBlock{1, 1, 3, Sign::Minus, Rat(BigInt(2), BigInt(3))};
  b.gamma = GammaSet{1, {box_cell({{Rat(0), Rat(BigInt(1), BigInt(2))}}), point_cell({Rat(BigInt(1), BigInt(2))})}};
  hand.blocks.push_back(b);
  cases.push_back(hand);
  expect(cases.size() == 20, "corpus size");
  for (const auto& c : cases) {
    std::string text = dump_presentation(c);
    BlockSum back = parse_presentation(text);
    expect(back == c, "load(save(B)) = B");
    expect(dump_presentation(back) == text, "byte-stable output");
  }
  return "20 presentations";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"semiring tables", semiring_tables},
      {"quotient relation", quotient_relation},
      {"Euler characteristics", euler_characteristics},
      {"decomposition consistency", decomposition_consistency},
      {"oracle equivalence", oracle_equivalence},
      {"rationality shape", rationality_shape},
      {"limit identity", limit_identity},
      {"Hadamard correctness", hadamard_pairs},
      {"x^2 and x anchors", anchors},
      {"round trip", round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string line;
    bool ok = false;
    try {
      line = criteria[i].second();
      ok = true;
    } catch (const Failure& f) {
      line = f.what;
    } catch (const std::exception& e) {
      line = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << line << "\n";
  }
  return failed == 0 ? 0 : 1;
}
