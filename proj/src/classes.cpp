#include "tzeta/classes.hpp"

#include <string>

#include "tzeta/error.hpp"

namespace tzeta {

void validate_block(const Block& b, bool check_disjoint) {
  if (b.res.dim < 0 || b.res.grade < b.res.dim) {
    throw Error(ErrorKind::SchemaViolation, "res block needs grade >= dim >= 0");
  }
  validate(b.gamma, check_disjoint);
}

void validate_homogeneous(const BlockSum& s) {
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    if (s.blocks[i].total_grade() != s.ambient_vf_dim) {
      throw Error(ErrorKind::GradeMismatch,
                  "block " + std::to_string(i) + " has total grade " +
                      std::to_string(s.blocks[i].total_grade()) + ", expected " +
                      std::to_string(s.ambient_vf_dim));
    }
  }
}

Block pure_gamma_block(GammaSet g) {
  Block b;
  b.res = VolResBlock{0, 0, 1, Sign::Plus, Rat(0)};
  b.gamma = std::move(g);
  return b;
}

Block pure_res_block(std::int64_t grade, std::int64_t dim, BigInt euler, Rat weight) {
  Block b;
  b.res = VolResBlock{grade, dim, std::move(euler), Sign::Plus, std::move(weight)};
  b.gamma = GammaSet::unit();
  return b;
}

BlockSum concat(const BlockSum& a, const BlockSum& b) {
  BlockSum out = a;
  out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
  return out;
}

Block tensor(const Block& a, const Block& b) {
  Block out;
  out.res.grade = a.res.grade + b.res.grade;
  out.res.dim = a.res.dim + b.res.dim;
  out.res.euler = a.res.euler * b.res.euler;
  out.res.sign = a.res.sign * b.res.sign;
  out.res.weight = a.res.weight + b.res.weight;
  out.gamma = product(a.gamma, b.gamma);
  return out;
}

BlockSum tensor(const BlockSum& a, const BlockSum& b) {
  BlockSum out;
  out.ambient_vf_dim = a.ambient_vf_dim + b.ambient_vf_dim;
  for (const auto& x : a.blocks)
    for (const auto& y : b.blocks) out.blocks.push_back(tensor(x, y));
  return out;
}

RvRingElem rv_class(const Block& b) {
  // [U] ↦ χ(U)·(-X)^k since [1] ↦ -X.
  RvRingElem res(b.res.euler);
  if (b.res.grade > 0) res *= RvRingElem::X(b.res.grade).scale_x(-1);
  return res * gamma_class(b.gamma);
}

RvRingElem rv_class(const BlockSum& s) {
  RvRingElem t;
  for (const auto& b : s.blocks) t += rv_class(b);
  return t;
}

Z2Elem int_G(const BlockSum& s) { return z2_project(rv_class(s)); }

BigInt int_R_g(const Block& b) {
  return b.res.euler * chi_g(b.gamma) * neg_one_pow(static_cast<long long>(b.res.grade));
}

BigInt int_R_b(const Block& b) {
  return b.res.euler * chi_b(b.gamma) * neg_one_pow(static_cast<long long>(b.gamma.ambient));
}

BigInt int_R_g(const BlockSum& s) {
  BigInt t = 0;
  for (const auto& b : s.blocks) t += int_R_g(b);
  return t;
}

BigInt int_R_b(const BlockSum& s) {
  BigInt t = 0;
  for (const auto& b : s.blocks) t += int_R_b(b);
  return t;
}

namespace {

void require_doubly_bounded(const BlockSum& s) {
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    if (!is_doubly_bounded(s.blocks[i].gamma)) {
      throw Error(ErrorKind::NotDoublyBounded,
                  "block " + std::to_string(i) + " is not doubly bounded");
    }
  }
}

}  // namespace

RPair int_R_pm(const BlockSum& s) {
  validate_homogeneous(s);
  require_doubly_bounded(s);
  const std::int64_t n = s.ambient_vf_dim;
  BigInt c = int_R_g(s);
  RPair out;
  out.plus = LaurentPoly::monomial(c, n);
  out.minus = LaurentPoly::monomial(c * neg_one_pow(static_cast<long long>(n)), n);
  return out;
}

LevelRestriction delta_m(const BlockSum& s, std::int64_t m) {
  if (m <= 0) throw Error(ErrorKind::InvalidLevel, "level m must be positive");
  require_doubly_bounded(s);
  LevelRestriction r;
  r.m = m;
  r.source = s;
  const BigInt bm = m;
  for (const auto& b : s.blocks) {
    std::vector<LevelSlice> slices;
    const Rat& w = b.res.weight;
    for (const SigmaPiece& p : sigma_range(b.gamma)) {
      if (p.fiber_chi_g == 0) continue;
      if (p.is_point) {
        Rat t = w + p.lo;
        if ((t * Rat(bm)).is_integer()) slices.push_back({t, p.fiber_chi_g});
        continue;
      }
      // j/m strictly inside (w + lo, w + hi).
      BigInt first = ((w + p.lo) * Rat(bm)).floor() + 1;
      BigInt last = ((w + p.hi) * Rat(bm)).ceil() - 1;
      for (BigInt j = first; j <= last; ++j) slices.push_back({Rat(j, bm), p.fiber_chi_g});
    }
    r.slices.push_back(std::move(slices));
  }
  return r;
}

LaurentPoly h_m(const LevelRestriction& r) {
  LaurentPoly total;
  for (std::size_t i = 0; i < r.source.blocks.size(); ++i) {
    const Block& b = r.source.blocks[i];
    const auto l = static_cast<std::int64_t>(b.gamma.ambient);
    // χ(U) v^k ⊗ (-1)^l v^l Σ_β χ(slice) v^{m(w+β)}
    LaurentPoly inner;
    for (const LevelSlice& sl : r.slices[i]) {
      Rat e = sl.total_weight * Rat(BigInt(r.m));
      inner.add_term(static_cast<std::int64_t>(e.num()), sl.fiber_chi_g);
    }
    BigInt pre = b.res.euler * neg_one_pow(static_cast<long long>(l));
    total += LaurentPoly::monomial(pre, b.res.grade + l) * inner;
  }
  return total;
}

BigInt evaluate_ledger(const LaurentPoly& ledger, Assignment a, std::int64_t n) {
  BigInt v = ledger.evaluate(-1);
  if (a == Assignment::Minus && n % 2 != 0) v = -v;
  return v;
}

EmValue e_m(const BlockSum& s, std::int64_t m) {
  if (m <= 0) throw Error(ErrorKind::InvalidLevel, "level m must be positive");
  validate_homogeneous(s);
  EmValue out;
  out.ledger = h_m(delta_m(s, m));
  out.plus = LaurentPoly(evaluate_ledger(out.ledger, Assignment::Plus, s.ambient_vf_dim));
  out.minus = LaurentPoly(evaluate_ledger(out.ledger, Assignment::Minus, s.ambient_vf_dim));
  return out;
}

}  // namespace tzeta
