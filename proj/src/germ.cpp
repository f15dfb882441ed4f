#include "tzeta/germ.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "tzeta/error.hpp"

namespace tzeta {

std::string MonomialGerm::str() const {
  std::string out = coefficient_sign == Sign::Minus ? "-" : "";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) out += "*";
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exponents[i] != 1) out += "^" + std::to_string(exponents[i]);
  }
  return out;
}

namespace {

std::optional<std::size_t> indexed_name(const std::string& s) {
  if (s.size() < 2 || s[0] != 'x') return std::nullopt;
  if (!std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); }))
    return std::nullopt;
  if (s[1] == '0') return std::nullopt;
  return std::stoul(s.substr(1));
}

}  // namespace

MonomialGerm parse_germ(std::string_view raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw Error(ErrorKind::Parse, "empty germ");

  MonomialGerm g;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    if (text[0] == '-') g.coefficient_sign = Sign::Minus;
    ++pos;
  }
  std::vector<std::pair<std::string, std::int64_t>> factors;
  bool any = false;
  while (true) {
    if (pos >= text.size()) throw Error(ErrorKind::Parse, "germ ends after an operator");
    std::size_t start = pos;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      BigInt c = parse_bigint(text.substr(start, pos - start));
      if (c == 0) throw Error(ErrorKind::NotAGerm, "zero coefficient");
      if (c != 1) throw Error(ErrorKind::UnsupportedGerm, "only coefficients ±1 are supported");
    } else if (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_') {
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      std::int64_t e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t es = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (es == pos) throw Error(ErrorKind::Parse, "missing exponent after '^'");
        if (pos - es > 6) throw Error(ErrorKind::DeskScaleExceeded, "exponent too large");
        e = std::stoll(text.substr(es, pos - es));
      }
      factors.emplace_back(std::move(name), e);
      any = true;
    } else {
      throw Error(ErrorKind::Parse, std::string("unexpected character '") + text[pos] + "'");
    }
    if (pos == text.size()) break;
    if (text[pos] != '*') throw Error(ErrorKind::Parse, std::string("expected '*' at '") + text[pos] + "'");
    ++pos;
  }
  if (!any) throw Error(ErrorKind::NotAGerm, "constant function");

  bool all_indexed = std::all_of(factors.begin(), factors.end(),
                                 [](const auto& f) { return indexed_name(f.first).has_value(); });
  if (all_indexed) {
    std::size_t n = 0;
    for (const auto& f : factors) n = std::max(n, *indexed_name(f.first));
    if (n > 64) throw Error(ErrorKind::DeskScaleExceeded, "too many variables");
    g.exponents.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) g.names.push_back("x" + std::to_string(i + 1));
    for (const auto& f : factors) g.exponents[*indexed_name(f.first) - 1] += f.second;
  } else {
    std::map<std::string, std::size_t> index;
    for (const auto& f : factors) {
      auto [it, fresh] = index.emplace(f.first, g.names.size());
      if (fresh) {
        g.names.push_back(f.first);
        g.exponents.push_back(0);
      }
      g.exponents[it->second] += f.second;
    }
  }
  validate_germ(g);
  return g;
}

void validate_germ(const MonomialGerm& g) {
  bool any_positive = std::any_of(g.exponents.begin(), g.exponents.end(),
                                  [](std::int64_t a) { return a > 0; });
  if (!any_positive) throw Error(ErrorKind::NotAGerm, "all exponents are zero");
  for (std::size_t i = 0; i < g.exponents.size(); ++i) {
    if (g.exponents[i] < 0) throw Error(ErrorKind::NotAGerm, "negative exponent");
    if (g.exponents[i] == 0) {
      throw Error(ErrorKind::UnsupportedGerm,
                  "variable " + std::to_string(i + 1) +
                      " does not occur; its valuation would be unbounded");
    }
  }
}

namespace {

bool admissible(const MonomialGerm& g, const std::vector<Sign>& eps, FiberSide side) {
  Sign s = g.coefficient_sign;
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (g.exponents[i] % 2 != 0) s = s * eps[i];
  return s == (side == FiberSide::Plus ? Sign::Plus : Sign::Minus);
}

std::vector<std::vector<Sign>> sign_patterns(const MonomialGerm& g, FiberSide side) {
  const std::size_t n = g.nvars();
  std::vector<std::vector<Sign>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Sign> eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = (mask >> i) & 1 ? Sign::Minus : Sign::Plus;
    if (admissible(g, eps, side)) out.push_back(std::move(eps));
  }
  return out;
}

// {α : α_i > 0, a·α = 1}
GammaCell fibre_polytope(const MonomialGerm& g, std::vector<Sign> eps) {
  const std::size_t n = g.nvars();
  GammaCell c;
  c.ambient = n;
  c.signs = std::move(eps);
  std::vector<Rat> a;
  for (auto e : g.exponents) a.emplace_back(e);
  c.equalities.push_back({a, Rat(1)});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = 1;
    c.strict.push_back({std::move(e), Rat(0), Direction::Greater});
  }
  return c;
}

}  // namespace

BlockSum compile_monomial(const MonomialGerm& g, FiberSide side) {
  validate_germ(g);
  if (g.nvars() > 16) throw Error(ErrorKind::DeskScaleExceeded, "too many variables");
  BlockSum out;
  out.ambient_vf_dim = static_cast<std::int64_t>(g.nvars());
  for (auto& eps : sign_patterns(g, side)) {
    Block b;
    // Residue fibre {r > 0 : Π r_i^{a_i} = 1} has χ = (-1)^{n-1}; relative to
    // the full fibre (-1)^n this is the groupified unit -1.
    b.res = VolResBlock{0, 0, -1, Sign::Plus, Rat(0)};
    b.gamma.ambient = g.nvars();
    b.gamma.cells.push_back(fibre_polytope(g, std::move(eps)));
    out.blocks.push_back(std::move(b));
  }
  return out;
}

EmValue brute_force_em(const MonomialGerm& g, FiberSide side, std::int64_t m) {
  validate_germ(g);
  if (m < 1) throw Error(ErrorKind::InvalidLevel, "level m must be positive");
  const std::size_t n = g.nvars();
  if (n > 4 || m > 60) throw Error(ErrorKind::DeskScaleExceeded, "oracle limited to n <= 4, m <= 60");

  // Σα over the simplex is extremal at its vertices e_i / a_i.
  Rat lo(BigInt(1), BigInt(g.exponents[0])), hi = lo;
  for (auto a : g.exponents) {
    Rat v(BigInt(1), BigInt(a));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const BigInt bm = m;
  BigInt jlo = (lo * Rat(bm)).ceil();
  BigInt jhi = (hi * Rat(bm)).floor();

  LaurentPoly ledger;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Sign> eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = (mask >> i) & 1 ? Sign::Minus : Sign::Plus;
    Sign s = g.coefficient_sign;
    for (std::size_t i = 0; i < n; ++i)
      if (g.exponents[i] % 2 != 0) s = s * eps[i];
    if (s != (side == FiberSide::Plus ? Sign::Plus : Sign::Minus)) continue;
    for (BigInt j = jlo; j <= jhi; ++j) {
      Rat beta(j, bm);
      GammaCell slice = fibre_polytope(g, eps);
      slice.equalities.push_back({std::vector<Rat>(n, Rat(1)), beta});
      if (cell_is_empty(slice)) continue;
      GammaSet one{n, {slice}};
      // residue fibre (-1)^{n-1}, normalised by the full fibre (-1)^n, and the
      // (-1)^n v^n from the Γ-part conventions
      BigInt w = -chi_g(one) * neg_one_pow(static_cast<long long>(n));
      ledger += LaurentPoly::monomial(w, static_cast<std::int64_t>(n) +
                                             static_cast<std::int64_t>(j));
    }
  }
  EmValue out;
  out.ledger = ledger;
  BigInt at = ledger.evaluate(-1);
  out.plus = LaurentPoly(at);
  out.minus = LaurentPoly(n % 2 == 0 ? at : BigInt(-at));
  return out;
}

GermZeta zeta_of_presentation(const BlockSum& s) {
  GermZeta z;
  z.ledger = zeta_of_blocks(s);
  z.plus = evaluate(z.ledger, Assignment::Plus, s.ambient_vf_dim);
  z.minus = evaluate(z.ledger, Assignment::Minus, s.ambient_vf_dim);
  return z;
}

GermZeta zeta_of_germ(const MonomialGerm& g, FiberSide side) {
  return zeta_of_presentation(compile_monomial(g, side));
}

std::vector<MonomialGerm> corpus() {
  std::vector<MonomialGerm> out;
  for (const char* s : {"x", "x^2", "x^3", "x*y", "x^2*y^3", "x*y*z", "x^2*y^2"})
    out.push_back(parse_germ(s));
  return out;
}

}  // namespace tzeta
