#include "tzeta/gamma.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tzeta/error.hpp"

namespace tzeta {

namespace {

// a·x = b  or  a·x < b over n variables.
struct Row {
  std::vector<Rat> a;
  Rat b;
  auto operator<=>(const Row& o) const {
    if (auto c = std::lexicographical_compare_three_way(a.begin(), a.end(), o.a.begin(),
                                                         o.a.end());
        c != 0)
      return c;
    return b <=> o.b;
  }
  bool operator==(const Row& o) const = default;
};

struct System {
  std::size_t n = 0;
  std::vector<Row> eqs;
  std::vector<Row> lts;
};

bool all_zero(const std::vector<Rat>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& r) { return r.is_zero(); });
}

// Scale a strict row by a positive factor so its first nonzero coefficient
// has magnitude 1; scale an equality so that coefficient is exactly 1.
Row normalize_lt(Row r) {
  for (const Rat& c : r.a) {
    if (!c.is_zero()) {
      Rat s = c.sign() > 0 ? c : -c;
      for (Rat& x : r.a) x /= s;
      r.b /= s;
      break;
    }
  }
  return r;
}

Row normalize_eq(Row r) {
  for (const Rat& c : r.a) {
    if (!c.is_zero()) {
      Rat s = c;
      for (Rat& x : r.a) x /= s;
      r.b /= s;
      break;
    }
  }
  return r;
}

// Removes constant rows; returns false when one of them is violated.
bool tidy(System& s) {
  std::set<Row> eqs;
  for (Row& r : s.eqs) {
    if (all_zero(r.a)) {
      if (!r.b.is_zero()) return false;
      continue;
    }
    eqs.insert(normalize_eq(std::move(r)));
  }
  std::set<Row> lts;
  for (Row& r : s.lts) {
    if (all_zero(r.a)) {
      if (!(Rat(0) < r.b)) return false;
      continue;
    }
    lts.insert(normalize_lt(std::move(r)));
  }
  s.eqs.assign(eqs.begin(), eqs.end());
  // Among rows with identical left side only the tightest bound matters.
  s.lts.clear();
  for (auto it = lts.begin(); it != lts.end(); ++it) {
    if (!s.lts.empty() && s.lts.back().a == it->a) continue;  // sorted by b ascending
    s.lts.push_back(*it);
  }
  return true;
}

System to_system(const GammaCell& c) {
  System s;
  s.n = c.ambient;
  for (const auto& e : c.equalities) s.eqs.push_back({e.coeffs, e.rhs});
  for (const auto& ie : c.strict) {
    if (ie.dir == Direction::Less) {
      s.lts.push_back({ie.coeffs, ie.rhs});
    } else {
      std::vector<Rat> neg;
      neg.reserve(ie.coeffs.size());
      for (const Rat& x : ie.coeffs) neg.push_back(-x);
      s.lts.push_back({std::move(neg), -ie.rhs});
    }
  }
  return s;
}

// Eliminates variable n-1; nullopt when the system became visibly empty.
std::optional<FiberType> eliminate_last(System& s) {
  const std::size_t last = s.n - 1;
  auto drop_last = [&](std::vector<Rat> a) {
    a.pop_back();
    return a;
  };

  auto eq_it = std::find_if(s.eqs.begin(), s.eqs.end(),
                            [&](const Row& r) { return !r.a[last].is_zero(); });
  if (eq_it != s.eqs.end()) {
    // x = (b - Σ a_i x_i) / a_last
    Row pivot = *eq_it;
    s.eqs.erase(eq_it);
    Rat p = pivot.a[last];
    auto substitute = [&](Row& r) {
      Rat c = r.a[last];
      if (c.is_zero()) {
        r.a.pop_back();
        return;
      }
      Rat f = c / p;
      for (std::size_t i = 0; i < last; ++i) r.a[i] -= f * pivot.a[i];
      r.b -= f * pivot.b;
      r.a.pop_back();
    };
    for (Row& r : s.eqs) substitute(r);
    for (Row& r : s.lts) substitute(r);
    s.n -= 1;
    if (!tidy(s)) return std::nullopt;
    return FiberType::Point;
  }

  std::vector<Row> lower, upper, rest;
  for (Row& r : s.lts) {
    int sg = r.a[last].sign();
    if (sg == 0) {
      r.a.pop_back();
      rest.push_back(std::move(r));
    } else {
      // Normalise to x < u(y) (upper) or x > l(y) (lower) with u, l as a·y + b.
      Rat c = r.a[last];
      Row bound;
      for (std::size_t i = 0; i < last; ++i) bound.a.push_back(-r.a[i] / c);
      bound.b = r.b / c;
      (sg > 0 ? upper : lower).push_back(std::move(bound));
    }
  }
  for (Row& r : s.eqs) r.a = drop_last(std::move(r.a));
  for (const Row& l : lower) {
    for (const Row& u : upper) {
      // l(y) < u(y)  <=>  (l.a - u.a)·y < u.b - l.b
      Row r;
      for (std::size_t i = 0; i < last; ++i) r.a.push_back(l.a[i] - u.a[i]);
      r.b = u.b - l.b;
      rest.push_back(std::move(r));
    }
  }
  s.lts = std::move(rest);
  s.n -= 1;
  if (!tidy(s)) return std::nullopt;
  if (!lower.empty() && !upper.empty()) return FiberType::Bounded;
  if (!lower.empty() || !upper.empty()) return FiberType::HalfLine;
  return FiberType::Line;
}

std::optional<std::vector<FiberType>> profile(System s) {
  if (!tidy(s)) return std::nullopt;
  std::vector<FiberType> out;
  while (s.n > 0) {
    auto t = eliminate_last(s);
    if (!t) return std::nullopt;
    out.push_back(*t);
  }
  if (!s.eqs.empty() || !s.lts.empty()) return std::nullopt;  // tidy leaves only violated rows out
  return out;
}

}  // namespace

Sign GammaCell::sign_product() const {
  Sign p = Sign::Plus;
  for (Sign s : signs) p = p * s;
  return p;
}

GammaSet GammaSet::unit() {
  GammaSet s;
  s.ambient = 0;
  s.cells.push_back(GammaCell{});
  return s;
}

std::optional<std::vector<FiberType>> cylindrical_profile(const GammaCell& cell) {
  return profile(to_system(cell));
}

bool cell_is_empty(const GammaCell& cell) { return !cylindrical_profile(cell).has_value(); }

void validate(const GammaSet& s, bool check_disjoint) {
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const GammaCell& c = s.cells[i];
    auto where = " (cell " + std::to_string(i) + ")";
    if (c.ambient != s.ambient) {
      throw Error(ErrorKind::SchemaViolation, "cell ambient differs from set ambient" + where);
    }
    if (c.signs.size() != c.ambient) {
      throw Error(ErrorKind::SchemaViolation, "sign vector length != ambient" + where);
    }
    for (const auto& e : c.equalities)
      if (e.coeffs.size() != c.ambient)
        throw Error(ErrorKind::SchemaViolation, "equality length != ambient" + where);
    for (const auto& e : c.strict)
      if (e.coeffs.size() != c.ambient)
        throw Error(ErrorKind::SchemaViolation, "inequality length != ambient" + where);
    if (cell_is_empty(c)) throw Error(ErrorKind::InvalidCell, "empty polyhedron" + where);
  }
  if (!check_disjoint) return;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < s.cells.size(); ++j) {
      const GammaCell& a = s.cells[i];
      const GammaCell& b = s.cells[j];
      if (a.signs != b.signs) continue;
      GammaCell both = a;
      both.equalities.insert(both.equalities.end(), b.equalities.begin(), b.equalities.end());
      both.strict.insert(both.strict.end(), b.strict.begin(), b.strict.end());
      if (!cell_is_empty(both)) {
        throw Error(ErrorKind::NonDisjointCells,
                    "cells " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
}

namespace {

std::vector<FiberType> require_profile(const GammaCell& c) {
  auto p = cylindrical_profile(c);
  if (!p) throw Error(ErrorKind::InvalidCell, "empty polyhedron");
  return *p;
}

}  // namespace

BigInt chi_g(const GammaCell& c) {
  int r = 1;
  for (FiberType t : require_profile(c))
    if (t != FiberType::Point) r = -r;
  return r;
}

BigInt chi_b(const GammaCell& c) {
  int r = 1;
  for (FiberType t : require_profile(c)) {
    switch (t) {
      case FiberType::Point: break;
      case FiberType::Bounded: r = -r; break;
      case FiberType::HalfLine: return 0;
      case FiberType::Line: break;
    }
  }
  return r;
}

BigInt chi_g(const GammaSet& s) {
  BigInt t = 0;
  for (const auto& c : s.cells) t += chi_g(c);
  return t;
}

BigInt chi_b(const GammaSet& s) {
  BigInt t = 0;
  for (const auto& c : s.cells) t += chi_b(c);
  return t;
}

std::optional<std::int64_t> gamma_dim(const GammaSet& s) {
  std::optional<std::int64_t> best;
  for (const auto& c : s.cells) {
    auto p = require_profile(c);
    auto d = static_cast<std::int64_t>(
        std::count_if(p.begin(), p.end(), [](FiberType t) { return t != FiberType::Point; }));
    if (!best || d > *best) best = d;
  }
  return best;
}

RvRingElem gamma_class(const GammaSet& s) {
  const RvRingElem x = RvRingElem::X();
  const RvRingElem xy = RvRingElem::XY();
  RvRingElem total;
  for (const auto& c : s.cells) {
    RvRingElem cls(1);
    for (FiberType t : require_profile(c)) {
      switch (t) {
        case FiberType::Point: cls *= x; break;
        case FiberType::Bounded: cls *= -x; break;
        case FiberType::HalfLine: cls *= xy; break;
        case FiberType::Line: cls *= RvRingElem(2) * xy + x; break;
      }
    }
    total += cls;
  }
  return total;
}

std::optional<FunctionalRange> functional_range(const GammaCell& cell,
                                                const std::vector<Rat>& functional) {
  // Variable 0 is z = functional·q; the original coordinates follow and are
  // eliminated from the last one down.
  System s = to_system(cell);
  auto shift = [](Row& r) { r.a.insert(r.a.begin(), Rat(0)); };
  for (Row& r : s.eqs) shift(r);
  for (Row& r : s.lts) shift(r);
  Row link;
  link.a.push_back(Rat(-1));
  for (const Rat& w : functional) link.a.push_back(w);
  link.b = 0;
  s.eqs.push_back(std::move(link));
  s.n += 1;
  if (!tidy(s)) return std::nullopt;
  while (s.n > 1) {
    if (!eliminate_last(s)) return std::nullopt;
  }
  FunctionalRange out;
  if (!s.eqs.empty()) {
    Rat v = s.eqs.front().b / s.eqs.front().a[0];
    for (const Row& r : s.eqs)
      if (r.b != r.a[0] * v) return std::nullopt;
    for (const Row& r : s.lts)
      if (!(r.a[0] * v < r.b)) return std::nullopt;
    out.is_point = true;
    out.lo = v;
    return out;
  }
  for (const Row& r : s.lts) {
    Rat bound = r.b / r.a[0];
    if (r.a[0].sign() > 0) {
      if (!out.hi || bound < *out.hi) out.hi = bound;
    } else {
      if (!out.lo || bound > *out.lo) out.lo = bound;
    }
  }
  if (out.lo && out.hi && !(*out.lo < *out.hi)) return std::nullopt;
  return out;
}

bool is_doubly_bounded(const GammaSet& s) {
  for (const auto& c : s.cells) {
    for (std::size_t i = 0; i < c.ambient; ++i) {
      std::vector<Rat> e(c.ambient, Rat(0));
      e[i] = 1;
      auto r = functional_range(c, e);
      if (!r) throw Error(ErrorKind::InvalidCell, "empty polyhedron");
      if (!r->bounded()) return false;
    }
  }
  return true;
}

GammaSet weight_slice(const GammaSet& s, const Rat& beta) {
  GammaSet out{s.ambient, {}};
  for (const auto& c : s.cells) {
    GammaCell sl = c;
    sl.equalities.push_back({std::vector<Rat>(c.ambient, Rat(1)), beta});
    if (!cell_is_empty(sl)) out.cells.push_back(std::move(sl));
  }
  return out;
}

std::vector<SigmaPiece> sigma_range(const GammaSet& s) {
  if (!is_doubly_bounded(s)) {
    throw Error(ErrorKind::NotDoublyBounded, "sigma_range needs a doubly bounded set");
  }
  std::vector<FunctionalRange> ranges;
  std::set<Rat> marks;
  for (const auto& c : s.cells) {
    auto r = functional_range(c, std::vector<Rat>(c.ambient, Rat(1)));
    if (!r) throw Error(ErrorKind::InvalidCell, "empty polyhedron");
    marks.insert(*r->lo);
    if (!r->is_point) marks.insert(*r->hi);
    ranges.push_back(*r);
  }
  std::vector<Rat> pts(marks.begin(), marks.end());

  auto fill = [&](SigmaPiece& piece, const Rat& beta, bool at_point) {
    bool covered = false;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      const auto& r = ranges[i];
      bool hit = r.is_point ? (at_point && *r.lo == beta) : (*r.lo < beta && beta < *r.hi);
      if (!hit) continue;
      covered = true;
      GammaCell sl = s.cells[i];
      sl.equalities.push_back({std::vector<Rat>(sl.ambient, Rat(1)), beta});
      BigInt g = chi_g(sl);
      piece.fiber_chi_g += g;
      piece.fiber_chi_b += chi_b(sl);
      (s.cells[i].sign_product() == Sign::Plus ? piece.fiber_chi_g_plus
                                               : piece.fiber_chi_g_minus) += g;
    }
    return covered;
  };

  std::vector<SigmaPiece> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    SigmaPiece bp;
    bp.is_point = true;
    bp.lo = bp.hi = pts[i];
    if (fill(bp, pts[i], true)) out.push_back(bp);
    if (i + 1 < pts.size()) {
      SigmaPiece iv;
      iv.lo = pts[i];
      iv.hi = pts[i + 1];
      // The fibre type is constant on the open piece; the midpoint represents it.
      if (fill(iv, (pts[i] + pts[i + 1]) / Rat(2), false)) out.push_back(iv);
    }
  }
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

BigInt determinant(IntMatrix m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<Rat>> inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c].is_zero()) ++p;
    std::swap(a[p], a[c]);
    Rat piv = a[c][c];
    for (Rat& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rat f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::vector<Rat> times_inverse(const std::vector<Rat>& row,
                               const std::vector<std::vector<Rat>>& inv) {
  // Constraint a·q on the source becomes (a M^{-1})·q' on the image.
  std::vector<Rat> out(row.size(), Rat(0));
  for (std::size_t j = 0; j < row.size(); ++j)
    for (std::size_t i = 0; i < row.size(); ++i) out[j] += row[i] * inv[i][j];
  return out;
}

}  // namespace

bool UnimodularImage::preserves_weight() const {
  return std::all_of(weight_change.begin(), weight_change.end(),
                     [](const BigInt& c) { return c == 0; });
}

UnimodularImage transform_unimodular(const GammaSet& s, const IntMatrix& m) {
  const std::size_t n = s.ambient;
  if (m.size() != n) throw Error(ErrorKind::NotUnimodular, "matrix size != ambient");
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::NotUnimodular, "matrix is not square");
  BigInt det = determinant(m);
  if (det != 1 && det != -1) {
    throw Error(ErrorKind::NotUnimodular, "determinant " + det.str() + " is not ±1");
  }
  auto inv = inverse(m);
  UnimodularImage out;
  out.image.ambient = n;
  for (const auto& c : s.cells) {
    GammaCell img;
    img.ambient = n;
    for (std::size_t i = 0; i < n; ++i) {
      // γ'_i = Π_j γ_j^{M_ij}: the sign is the product of signs at odd exponents.
      Sign sg = Sign::Plus;
      for (std::size_t j = 0; j < n; ++j)
        if (boost::multiprecision::bit_test(m[i][j] < 0 ? BigInt(-m[i][j]) : m[i][j], 0))
          sg = sg * c.signs[j];
      img.signs.push_back(sg);
    }
    for (const auto& e : c.equalities) img.equalities.push_back({times_inverse(e.coeffs, inv), e.rhs});
    for (const auto& e : c.strict) img.strict.push_back({times_inverse(e.coeffs, inv), e.rhs, e.dir});
    out.image.cells.push_back(std::move(img));
  }
  out.weight_change.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    BigInt col = 0;
    for (std::size_t i = 0; i < n; ++i) col += m[i][j];
    out.weight_change[j] = col - 1;
  }
  return out;
}

GammaSet product(const GammaSet& a, const GammaSet& b) {
  GammaSet out{a.ambient + b.ambient, {}};
  auto pad = [](const std::vector<Rat>& v, std::size_t before, std::size_t after) {
    std::vector<Rat> r(before, Rat(0));
    r.insert(r.end(), v.begin(), v.end());
    r.resize(r.size() + after, Rat(0));
    return r;
  };
  for (const auto& ca : a.cells) {
    for (const auto& cb : b.cells) {
      GammaCell c;
      c.ambient = out.ambient;
      c.signs = ca.signs;
      c.signs.insert(c.signs.end(), cb.signs.begin(), cb.signs.end());
      for (const auto& e : ca.equalities) c.equalities.push_back({pad(e.coeffs, 0, b.ambient), e.rhs});
      for (const auto& e : cb.equalities) c.equalities.push_back({pad(e.coeffs, a.ambient, 0), e.rhs});
      for (const auto& e : ca.strict) c.strict.push_back({pad(e.coeffs, 0, b.ambient), e.rhs, e.dir});
      for (const auto& e : cb.strict) c.strict.push_back({pad(e.coeffs, a.ambient, 0), e.rhs, e.dir});
      out.cells.push_back(std::move(c));
    }
  }
  return out;
}

GammaSet disjoint_union(const GammaSet& a, const GammaSet& b) {
  if (a.ambient != b.ambient) throw Error(ErrorKind::GradeMismatch, "ambient mismatch in union");
  GammaSet out = a;
  out.cells.insert(out.cells.end(), b.cells.begin(), b.cells.end());
  return out;
}

std::vector<GammaCell> split_into_open_faces(std::size_t ambient, std::vector<Sign> signs,
                                             const std::vector<LinearEquality>& equalities,
                                             const std::vector<WeakInequality>& weak,
                                             const std::vector<StrictInequality>& strict) {
  if (signs.empty()) signs.assign(ambient, Sign::Plus);
  if (weak.size() > 20) throw Error(ErrorKind::DeskScaleExceeded, "too many weak constraints");
  std::vector<GammaCell> out;
  const std::size_t combos = std::size_t{1} << weak.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    GammaCell c{ambient, signs, equalities, strict};
    for (std::size_t i = 0; i < weak.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        c.equalities.push_back({weak[i].coeffs, weak[i].rhs});
      } else {
        c.strict.push_back({weak[i].coeffs, weak[i].rhs, weak[i].dir});
      }
    }
    if (!cell_is_empty(c)) out.push_back(std::move(c));
  }
  return out;
}

GammaCell permute_coordinates(const GammaCell& c, const std::vector<std::size_t>& perm) {
  // New coordinate i is old coordinate perm[i]: a·q_old = Σ_i a[perm[i]] q_new[i].
  auto remap = [&](const std::vector<Rat>& a) {
    std::vector<Rat> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[perm[i]];
    return r;
  };
  GammaCell out;
  out.ambient = c.ambient;
  for (std::size_t i = 0; i < c.ambient; ++i) out.signs.push_back(c.signs[perm[i]]);
  for (const auto& e : c.equalities) out.equalities.push_back({remap(e.coeffs), e.rhs});
  for (const auto& e : c.strict) out.strict.push_back({remap(e.coeffs), e.rhs, e.dir});
  return out;
}

GammaCell point_cell(const std::vector<Rat>& q, std::vector<Sign> signs) {
  GammaCell c;
  c.ambient = q.size();
  c.signs = signs.empty() ? std::vector<Sign>(q.size(), Sign::Plus) : std::move(signs);
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::vector<Rat> e(q.size(), Rat(0));
    e[i] = 1;
    c.equalities.push_back({std::move(e), q[i]});
  }
  return c;
}

GammaCell box_cell(const std::vector<std::pair<Rat, Rat>>& bounds, std::vector<Sign> signs) {
  GammaCell c;
  c.ambient = bounds.size();
  c.signs = signs.empty() ? std::vector<Sign>(bounds.size(), Sign::Plus) : std::move(signs);
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    std::vector<Rat> e(bounds.size(), Rat(0));
    e[i] = 1;
    c.strict.push_back({e, bounds[i].first, Direction::Greater});
    c.strict.push_back({e, bounds[i].second, Direction::Less});
  }
  return c;
}

}  // namespace tzeta
