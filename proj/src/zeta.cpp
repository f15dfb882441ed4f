#include "tzeta/zeta.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "tzeta/error.hpp"

namespace tzeta {

namespace {

std::int64_t to_i64(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<std::int64_t>::max()) ||
      x < BigInt(std::numeric_limits<std::int64_t>::min())) {
    throw Error(ErrorKind::DeskScaleExceeded, "exponent exceeds 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

std::int64_t mod2(std::int64_t a) { return ((a % 2) + 2) % 2; }

bool evaluated(ZetaRing r) { return r != ZetaRing::Ledger; }

LaurentPoly reduce(const LaurentPoly& c, ZetaRing r) {
  return evaluated(r) ? LaurentPoly(c.evaluate(-1)) : c;
}

// Factor list with multiplicities expanded.
std::vector<DenFactor> copies(const GeoTerm& t) {
  std::vector<DenFactor> out;
  for (const auto& [f, k] : t.factors)
    for (int i = 0; i < k; ++i) out.push_back(f);
  return out;
}

}  // namespace

int GeoTerm::factor_count() const {
  int n = 0;
  for (const auto& [f, k] : factors) n += k;
  return n;
}

std::int64_t GeoTerm::total_b() const {
  std::int64_t n = 0;
  for (const auto& [f, k] : factors) n += f.b * k;
  return n;
}

std::int64_t GeoTerm::total_a() const {
  std::int64_t n = 0;
  for (const auto& [f, k] : factors) n += f.a * k;
  return n;
}

void RationalZeta::add_poly(std::int64_t m, const LaurentPoly& c) {
  if (m < 0) throw Error(ErrorKind::Unsupported, "negative Y exponent");
  poly_[m] += c;
  if (poly_[m].is_zero()) poly_.erase(m);
}

void RationalZeta::add_term(GeoTerm t) {
  for (const auto& [f, k] : t.factors) {
    if (f.b < 1) throw Error(ErrorKind::Unsupported, "denominator factor needs b >= 1");
  }
  if (t.p < 0) throw Error(ErrorKind::Unsupported, "negative Y exponent");
  terms_.push_back(std::move(t));
}

RationalZeta& RationalZeta::operator+=(const RationalZeta& o) {
  if (o.ring_ != ring_) throw Error(ErrorKind::RingMismatch, "adding series over different rings");
  for (const auto& [m, c] : o.poly_) add_poly(m, c);
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

RationalZeta RationalZeta::scaled(const BigInt& c, std::int64_t s) const {
  RationalZeta out(ring_);
  for (const auto& [m, x] : poly_) out.add_poly(m, x * LaurentPoly::monomial(c, s));
  for (GeoTerm t : terms_) {
    t.c *= c;
    t.s += s;
    out.terms_.push_back(std::move(t));
  }
  out.normalize();
  return out;
}

void RationalZeta::normalize() {
  std::vector<GeoTerm> work;
  for (GeoTerm t : terms_) {
    if (evaluated(ring_)) {
      if (mod2(t.s) == 1) t.c = -t.c;
      t.s = 0;
      std::map<DenFactor, int> f;
      for (const auto& [d, k] : t.factors) f[DenFactor{mod2(d.a), d.b}] += k;
      t.factors = std::move(f);
    }
    std::erase_if(t.factors, [](const auto& kv) { return kv.second == 0; });
    if (t.c == 0) continue;
    if (t.factors.empty()) {
      add_poly(t.p, LaurentPoly::monomial(t.c, t.s));
      continue;
    }
    work.push_back(std::move(t));
  }
  auto key = [](const GeoTerm& t) { return std::tie(t.factors, t.p, t.s); };
  std::sort(work.begin(), work.end(),
            [&](const GeoTerm& x, const GeoTerm& y) { return key(x) < key(y); });
  terms_.clear();
  for (auto& t : work) {
    if (!terms_.empty() && key(terms_.back()) == key(t)) {
      terms_.back().c += t.c;
      if (terms_.back().c == 0) terms_.pop_back();
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::map<std::int64_t, LaurentPoly> p;
  for (auto& [m, c] : poly_) {
    LaurentPoly r = reduce(c, ring_);
    if (!r.is_zero()) p[m] = std::move(r);
  }
  poly_ = std::move(p);
}

RationalZeta zeta_from_res_block(const LaurentPoly& prefactor, std::int64_t q, std::int64_t p) {
  if (p < 1) throw Error(ErrorKind::InvalidPeriod, "period must be >= 1");
  RationalZeta z;
  for (const auto& [e, c] : prefactor.terms()) {
    GeoTerm t;
    t.c = c;
    t.s = e + q;
    t.p = p;
    t.factors[DenFactor{q, p}] = 1;
    z.add_term(std::move(t));
  }
  z.normalize();
  return z;
}

namespace {

// Σ_{m>=1} Σ_{L m < j < H m} v^j Y^m as a sum over the fundamental
// parallelepiped of the open cone spanned by (q1, p1) and (q2, p2).
void add_open_cone(RationalZeta& z, const BigInt& d, const Rat& lo, const Rat& hi) {
  const BigInt q1 = lo.den(), p1 = lo.num(), q2 = hi.den(), p2 = hi.num();
  const BigInt det = q1 * p2 - p1 * q2;
  const DenFactor f1{to_i64(p1), to_i64(q1)};
  const DenFactor f2{to_i64(p2), to_i64(q2)};
  for (BigInt m = 1; m <= q1 + q2; ++m) {
    BigInt first = (lo * Rat(m)).floor() + 1;
    BigInt last = (hi * Rat(m)).ceil() - 1;
    for (BigInt j = first; j <= last; ++j) {
      // λ1 = (m p2 - j q2)/det, λ2 = (q1 j - p1 m)/det, both in (0, 1].
      BigInt n1 = m * p2 - j * q2;
      BigInt n2 = q1 * j - p1 * m;
      if (n1 > det || n2 > det) continue;
      GeoTerm t;
      t.c = d;
      t.s = to_i64(j);
      t.p = to_i64(m);
      t.factors[f1] += 1;
      t.factors[f2] += 1;
      z.add_term(std::move(t));
    }
  }
}

}  // namespace

RationalZeta zeta_from_gamma_block(const std::vector<SigmaPiece>& pieces, const Rat& w0) {
  RationalZeta z;
  for (const SigmaPiece& piece : pieces) {
    const BigInt& d = piece.fiber_chi_g;
    if (d == 0) continue;
    if (piece.is_point) {
      Rat t = w0 + piece.lo;
      GeoTerm g;
      g.c = d;
      g.s = to_i64(t.num());
      g.p = to_i64(t.den());
      g.factors[DenFactor{g.s, g.p}] = 1;
      z.add_term(std::move(g));
    } else {
      add_open_cone(z, d, w0 + piece.lo, w0 + piece.hi);
    }
  }
  z.normalize();
  return z;
}

namespace {

void expand_term(const GeoTerm& t, const std::vector<DenFactor>& fs, std::size_t i,
                 std::int64_t remaining, std::int64_t vexp, LaurentPoly& acc) {
  if (i == fs.size()) {
    if (remaining == 0) acc.add_term(vexp, t.c);
    return;
  }
  for (std::int64_t k = 0; k * fs[i].b <= remaining; ++k) {
    expand_term(t, fs, i + 1, remaining - k * fs[i].b, vexp + k * fs[i].a, acc);
  }
}

LaurentPoly term_coefficient(const GeoTerm& t, std::int64_t m) {
  LaurentPoly acc;
  if (m < t.p) return acc;
  expand_term(t, copies(t), 0, m - t.p, t.s, acc);
  return acc;
}

}  // namespace

LaurentPoly coefficient(const RationalZeta& z, std::int64_t m) {
  LaurentPoly acc;
  if (auto it = z.poly().find(m); it != z.poly().end()) acc += it->second;
  for (const auto& t : z.terms()) acc += term_coefficient(t, m);
  return reduce(acc, z.ring());
}

}  // namespace tzeta

namespace tzeta {

namespace {

bool single_factor(const GeoTerm& t) { return t.factor_count() == 1; }

// Both terms have one factor: the supports are arithmetic progressions and
// their intersection is a single progression with period lcm(b1, b2).
void hadamard_geo_geo(const GeoTerm& x, const GeoTerm& y, RationalZeta& out) {
  const DenFactor fx = x.factors.begin()->first;
  const DenFactor fy = y.factors.begin()->first;
  const std::int64_t l = std::lcm(fx.b, fy.b);
  const std::int64_t start = std::max(x.p, y.p);
  for (std::int64_t m = start; m < start + l; ++m) {
    if ((m - x.p) % fx.b != 0 || (m - y.p) % fy.b != 0) continue;
    GeoTerm t;
    t.c = x.c * y.c;
    t.s = x.s + fx.a * ((m - x.p) / fx.b) + y.s + fy.a * ((m - y.p) / fy.b);
    t.p = m;
    t.factors[DenFactor{fx.a * (l / fx.b) + fy.a * (l / fy.b), l}] = 1;
    out.add_term(std::move(t));
    return;
  }
}

// x arbitrary, g with one factor. Writing k_i = ρ_i + b' t_i for the
// expansion indices of x selects the residues compatible with the support of
// g; terms that would sit below g's first exponent are cancelled by a
// polynomial correction.
void hadamard_multi_geo(const GeoTerm& x, const GeoTerm& g, RationalZeta& out) {
  const DenFactor fg = g.factors.begin()->first;
  const std::int64_t bp = fg.b;
  const std::vector<DenFactor> fs = copies(x);
  const std::size_t r = fs.size();
  std::map<DenFactor, int> new_factors;
  std::vector<DenFactor> scaled;
  for (const DenFactor& f : fs) {
    DenFactor n{bp * f.a + fg.a * f.b, bp * f.b};
    new_factors[n] += 1;
    scaled.push_back(n);
  }
  std::vector<std::int64_t> rho(r, 0);
  while (true) {
    std::int64_t p0 = x.p, a0 = x.s;
    for (std::size_t i = 0; i < r; ++i) {
      p0 += fs[i].b * rho[i];
      a0 += fs[i].a * rho[i];
    }
    if (((p0 - g.p) % bp + bp) % bp == 0) {
      const std::int64_t steps = (p0 - g.p) / bp;  // exact, may be negative
      GeoTerm t;
      t.c = x.c * g.c;
      t.s = a0 + g.s + fg.a * steps;
      t.p = p0;
      t.factors = new_factors;
      // Expansion points Y^{p0 + Σ b' b_i t_i} below g.p are not in the support.
      if (p0 < g.p) {
        std::vector<std::int64_t> tt(r, 0);
        std::function<void(std::size_t, std::int64_t, std::int64_t)> walk =
            [&](std::size_t i, std::int64_t ydeg, std::int64_t vdeg) {
              if (ydeg >= g.p) return;
              if (i == r) {
                out.add_poly(ydeg, LaurentPoly::monomial(-t.c, vdeg));
                return;
              }
              for (std::int64_t k = 0; ydeg + k * scaled[i].b < g.p; ++k)
                walk(i + 1, ydeg + k * scaled[i].b, vdeg + k * scaled[i].a);
            };
        walk(0, t.p, t.s);
      }
      out.add_term(std::move(t));
    }
    std::size_t i = 0;
    while (i < r && ++rho[i] == bp) rho[i++] = 0;
    if (i == r) break;
  }
}

void hadamard_terms(const GeoTerm& x, const GeoTerm& y, RationalZeta& out) {
  if (single_factor(x) && single_factor(y)) {
    hadamard_geo_geo(x, y, out);
  } else if (single_factor(y)) {
    hadamard_multi_geo(x, y, out);
  } else if (single_factor(x)) {
    hadamard_multi_geo(y, x, out);
  } else {
    throw Error(ErrorKind::Unsupported,
                "Hadamard product of two multi-factor terms has no closed form here");
  }
}

}  // namespace

RationalZeta hadamard(const RationalZeta& a, const RationalZeta& b) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::RingMismatch, "Hadamard over different rings");
  RationalZeta x = a, y = b;
  x.normalize();
  y.normalize();
  RationalZeta out(a.ring());
  for (const auto& [m, c] : x.poly()) out.add_poly(m, c * coefficient(y, m));
  for (const auto& [m, c] : y.poly()) {
    LaurentPoly rest = coefficient(x, m);
    if (auto it = x.poly().find(m); it != x.poly().end()) rest -= it->second;
    out.add_poly(m, c * rest);
  }
  for (const auto& s : x.terms())
    for (const auto& t : y.terms()) hadamard_terms(s, t, out);
  out.normalize();
  return out;
}

namespace {

// Polynomials in Y with Laurent coefficients in v, low degree first.
using YPoly = std::vector<LaurentPoly>;

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly mul(const YPoly& x, const YPoly& y, ZetaRing r) {
  if (x.empty() || y.empty()) return {};
  YPoly out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  for (auto& c : out) c = reduce(c, r);
  trim(out);
  return out;
}

void add_into(YPoly& acc, const YPoly& x) {
  if (acc.size() < x.size()) acc.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += x[i];
}

YPoly factor_poly(const DenFactor& f, ZetaRing r) {
  YPoly p(f.b + 1);
  p[0] = 1;
  p[f.b] = reduce(LaurentPoly::monomial(-1, f.a), r);
  return p;
}

}  // namespace

LaurentPoly limit_at_infinity(const RationalZeta& z) {
  // Common denominator D = Π f^{max multiplicity}; N = P·D + Σ c v^s Y^p D/den.
  std::map<DenFactor, int> common;
  for (const auto& t : z.terms())
    for (const auto& [f, k] : t.factors) common[f] = std::max(common[f], k);
  const ZetaRing r = z.ring();
  auto product_of = [&](const std::map<DenFactor, int>& fs) {
    YPoly p{LaurentPoly(1)};
    for (const auto& [f, k] : fs)
      for (int i = 0; i < k; ++i) p = mul(p, factor_poly(f, r), r);
    return p;
  };
  const YPoly den = product_of(common);
  YPoly num;
  for (const auto& [m, c] : z.poly()) {
    YPoly mono(m + 1);
    mono[m] = c;
    add_into(num, mul(mono, den, r));
  }
  for (const auto& t : z.terms()) {
    std::map<DenFactor, int> rest = common;
    for (const auto& [f, k] : t.factors) rest[f] -= k;
    YPoly mono(t.p + 1);
    mono[t.p] = reduce(LaurentPoly::monomial(t.c, t.s), r);
    add_into(num, mul(mono, product_of(rest), r));
  }
  for (auto& c : num) c = reduce(c, r);
  trim(num);
  if (num.size() > den.size()) throw Error(ErrorKind::NoLimit, "numerator degree exceeds denominator");
  if (num.size() < den.size()) return LaurentPoly();
  // Leading coefficient of D is ±v^{Σa}, a unit.
  std::int64_t sa = 0;
  int count = 0;
  for (const auto& [f, k] : common) {
    sa += f.a * k;
    count += k;
  }
  LaurentPoly inv = LaurentPoly::monomial(count % 2 == 0 ? 1 : -1, -sa);
  return reduce(num.back() * inv, r);
}

RationalZeta evaluate(const RationalZeta& z, Assignment a, std::int64_t n) {
  if (z.ring() != ZetaRing::Ledger) throw Error(ErrorKind::RingMismatch, "series is already evaluated");
  const bool flip = a == Assignment::Minus && n % 2 != 0;
  RationalZeta out(a == Assignment::Plus ? ZetaRing::Plus : ZetaRing::Minus);
  for (const auto& [m, c] : z.poly()) out.add_poly(m, flip ? -c : c);
  for (GeoTerm t : z.terms()) {
    if (flip) t.c = -t.c;
    out.add_term(std::move(t));
  }
  out.normalize();
  return out;
}

RationalZeta zeta_of_blocks(const BlockSum& s) {
  validate_homogeneous(s);
  RationalZeta total;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    const Block& b = s.blocks[i];
    if (!is_doubly_bounded(b.gamma)) {
      throw Error(ErrorKind::NotDoublyBounded, "block " + std::to_string(i) + " is not doubly bounded");
    }
    const auto l = static_cast<std::int64_t>(b.gamma.ambient);
    auto pieces = sigma_range(b.gamma);
    RationalZeta z;
    if (b.res.weight.is_integer()) {
      z = hadamard(zeta_from_res_block(LaurentPoly(1), to_i64(b.res.weight.num()), 1),
                   zeta_from_gamma_block(pieces, Rat(0)));
    } else {
      z = zeta_from_gamma_block(pieces, b.res.weight);
    }
    total += z.scaled(b.res.euler * neg_one_pow(static_cast<long long>(l)), b.res.grade + l);
  }
  total.normalize();
  return total;
}

namespace {

std::string power(std::string_view var, std::int64_t e) {
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

// c v^s Y^p with the sign of c reported separately.
std::string monomial_text(const BigInt& abs_c, std::int64_t s, std::int64_t p) {
  std::vector<std::string> parts;
  if (abs_c != 1 || (s == 0 && p == 0)) parts.push_back(abs_c.str());
  if (s != 0) parts.push_back(power("v", s));
  if (p != 0) parts.push_back(power("Y", p));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

std::string factor_text(const DenFactor& f, bool eval) {
  if (eval) return std::string("(1 ") + (f.a % 2 == 0 ? "- " : "+ ") + power("Y", f.b) + ")";
  if (f.a == 0) return "(1 - " + power("Y", f.b) + ")";
  return "(1 - " + power("v", f.a) + "*" + power("Y", f.b) + ")";
}

}  // namespace

std::string render(const RationalZeta& input) {
  RationalZeta z = input;
  z.normalize();
  const bool eval = evaluated(z.ring());
  std::vector<std::pair<bool, std::string>> pieces;  // (negative, text)
  for (const auto& [m, c] : z.poly()) {
    if (c.terms().size() == 1) {
      const auto& [e, k] = *c.terms().begin();
      pieces.emplace_back(k < 0, monomial_text(k < 0 ? BigInt(-k) : k, e, m));
    } else {
      pieces.emplace_back(false, "(" + c.str("v") + ")" + (m ? "*" + power("Y", m) : ""));
    }
  }
  for (const auto& t : z.terms()) {
    std::string den;
    for (const auto& [f, k] : t.factors) {
      if (!den.empty()) den += "*";
      den += factor_text(f, eval);
      if (k > 1) den += "^" + std::to_string(k);
    }
    bool neg = t.c < 0;
    pieces.emplace_back(neg, monomial_text(neg ? BigInt(-t.c) : t.c, t.s, t.p) + "/" +
                                 (t.factors.size() > 1 ? "(" + den + ")" : den));
  }
  std::string out = "Z(Y) = ";
  if (pieces.empty()) return out + "0";
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [neg, text] = pieces[i];
    if (i == 0) {
      out += (neg ? "-" : "") + text;
    } else {
      out += (neg ? " - " : " + ") + text;
    }
  }
  return out;
}

}  // namespace tzeta
