#pragma once

// Random generators and small independent oracles shared by the test
// binaries. Nothing here calls the closed forms under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tzeta/classes.hpp"
#include "tzeta/gamma.hpp"
#include "tzeta/rings.hpp"

namespace tzeta::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& r, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(r);
}

inline Rat random_rat(Rng& r, std::int64_t span = 6, std::int64_t den = 4) {
  return Rat(BigInt(uniform(r, -span * den, span * den)), BigInt(uniform(r, 1, den)));
}

// One coordinate of a box: its type fixes both Euler characteristics.
struct Piece {
  enum Kind { Point, Bounded, Up, Down, Line } kind = Point;
  Rat a, b;
};

inline Piece random_piece(Rng& r, bool bounded_only = false) {
  Piece p;
  p.kind = static_cast<Piece::Kind>(uniform(r, 0, bounded_only ? 1 : 4));
  p.a = random_rat(r);
  p.b = p.a + Rat(BigInt(uniform(r, 1, 12)), BigInt(uniform(r, 1, 4)));
  return p;
}

inline int piece_chi_g(const Piece& p) { return p.kind == Piece::Point ? 1 : -1; }

inline int piece_chi_b(const Piece& p) {
  switch (p.kind) {
    case Piece::Point: return 1;
    case Piece::Bounded: return -1;
    case Piece::Up:
    case Piece::Down: return 0;
    case Piece::Line: return 1;
  }
  return 0;
}

inline GammaCell box_of(const std::vector<Piece>& ps, std::vector<Sign> signs = {}) {
  const std::size_t n = ps.size();
  GammaCell c;
  c.ambient = n;
  c.signs = signs.empty() ? std::vector<Sign>(n, Sign::Plus) : std::move(signs);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = 1;
    switch (ps[i].kind) {
      case Piece::Point: c.equalities.push_back({e, ps[i].a}); break;
      case Piece::Bounded:
        c.strict.push_back({e, ps[i].a, Direction::Greater});
        c.strict.push_back({e, ps[i].b, Direction::Less});
        break;
      case Piece::Up: c.strict.push_back({e, ps[i].a, Direction::Greater}); break;
      case Piece::Down: c.strict.push_back({e, ps[i].b, Direction::Less}); break;
      case Piece::Line: break;
    }
  }
  return c;
}

inline std::vector<Sign> signs_of_mask(std::size_t mask, std::size_t n) {
  std::vector<Sign> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? Sign::Minus : Sign::Plus;
  return s;
}

/// A set of boxes with pairwise distinct sign vectors (hence disjoint), and
/// its Euler characteristics computed from the piece types.
struct KnownSet {
  GammaSet set;
  BigInt chi_g = 0;
  BigInt chi_b = 0;
};

inline KnownSet random_known_set(Rng& r, std::size_t ambient, bool bounded_only = false) {
  KnownSet k;
  k.set.ambient = ambient;
  const std::size_t patterns = std::size_t{1} << ambient;
  std::size_t cells = static_cast<std::size_t>(uniform(r, 1, std::min<std::int64_t>(3, patterns)));
  std::vector<std::size_t> masks(patterns);
  for (std::size_t i = 0; i < patterns; ++i) masks[i] = i;
  std::shuffle(masks.begin(), masks.end(), r);
  for (std::size_t c = 0; c < cells; ++c) {
    std::vector<Piece> ps;
    int g = 1, b = 1;
    for (std::size_t i = 0; i < ambient; ++i) {
      ps.push_back(random_piece(r, bounded_only));
      g *= piece_chi_g(ps.back());
      b *= piece_chi_b(ps.back());
    }
    k.set.cells.push_back(box_of(ps, signs_of_mask(masks[c], ambient)));
    k.chi_g += g;
    k.chi_b += b;
  }
  return k;
}

/// Random nonempty relatively open polyhedron through a random point.
inline GammaCell random_polyhedron(Rng& r, std::size_t n) {
  std::vector<Rat> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_rat(r, 3, 2));
  GammaCell c;
  c.ambient = n;
  for (std::size_t i = 0; i < n; ++i) c.signs.push_back(uniform(r, 0, 1) ? Sign::Plus : Sign::Minus);
  const std::int64_t eqs = uniform(r, 0, 3) == 0 ? 1 : 0;
  const std::int64_t ineqs = uniform(r, 1, 6);
  auto random_row = [&] {
    std::vector<Rat> a;
    for (std::size_t i = 0; i < n; ++i) a.emplace_back(uniform(r, -3, 3));
    return a;
  };
  auto dot = [&](const std::vector<Rat>& a) {
    Rat s;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * p[i];
    return s;
  };
  for (std::int64_t k = 0; k < eqs; ++k) {
    auto a = random_row();
    c.equalities.push_back({a, dot(a)});
  }
  for (std::int64_t k = 0; k < ineqs; ++k) {
    auto a = random_row();
    Rat slack(BigInt(uniform(r, 1, 8)), BigInt(uniform(r, 1, 3)));
    if (uniform(r, 0, 1)) {
      c.strict.push_back({a, dot(a) + slack, Direction::Less});
    } else {
      c.strict.push_back({a, dot(a) - slack, Direction::Greater});
    }
  }
  return c;
}

inline RvRingElem random_rv(Rng& r) {
  RvRingElem x(BigInt(uniform(r, -4, 4)));
  for (int i = uniform(r, 0, 4); i > 0; --i) {
    std::int64_t a = uniform(r, 1, 4);
    BigInt c = uniform(r, -5, 5);
    x += uniform(r, 0, 1) ? RvRingElem(c) * RvRingElem::X(a) : RvRingElem(c) * RvRingElem::XY(a);
  }
  return x;
}

inline BlockSum random_blocksum(Rng& r) {
  BlockSum s;
  for (int i = uniform(r, 1, 4); i > 0; --i) {
    Block b;
    b.res.grade = uniform(r, 0, 2);
    b.res.dim = uniform(r, 0, b.res.grade);
    b.res.euler = uniform(r, -3, 3);
    b.res.weight = Rat(BigInt(uniform(r, 0, 6)), BigInt(uniform(r, 1, 3)));
    b.gamma = random_known_set(r, static_cast<std::size_t>(uniform(r, 0, 2))).set;
    s.blocks.push_back(std::move(b));
  }
  return s;
}

/// 1_K + [J]: the point, both open value rays, and -[1].
inline BlockSum one_plus_j() {
  BlockSum s;
  s.blocks.push_back(pure_gamma_block(GammaSet::unit()));
  for (Sign sg : {Sign::Plus, Sign::Minus}) {
    GammaSet ray{1, {box_of({Piece{Piece::Up, Rat(0), Rat(0)}}, {sg})}};
    s.blocks.push_back(pure_gamma_block(ray));
  }
  s.blocks.push_back(pure_res_block(1, 0, -1));
  return s;
}

/// Coefficient of Y^m in c v^s Y^p / (1 - v^a Y^b), by reading off the progression.
inline LaurentPoly geo_coeff(const BigInt& c, std::int64_t s, std::int64_t p, std::int64_t a,
                             std::int64_t b, std::int64_t m) {
  if (m < p || (m - p) % b != 0) return LaurentPoly();
  return LaurentPoly::monomial(c, s + a * ((m - p) / b));
}

}  // namespace tzeta::testing
