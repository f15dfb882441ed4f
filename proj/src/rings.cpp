#include "tzeta/rings.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "tzeta/error.hpp"

namespace tzeta {

ResStarElem::ResStarElem(std::int64_t d, BigInt e) : dim(d), euler(std::move(e)) {
  if (dim < 0 || (dim == 0 && euler < 0)) {
    throw Error(ErrorKind::SchemaViolation, "RES_* element outside ({0}xN) ∪ (N+xZ)");
  }
}

ResStarElem operator+(const ResStarElem& x, const ResStarElem& y) {
  return ResStarElem(std::max(x.dim, y.dim), x.euler + y.euler);
}

ResStarElem operator*(const ResStarElem& x, const ResStarElem& y) {
  ResStarElem r;
  r.dim = x.dim + y.dim;
  r.euler = x.euler * y.euler;
  return r;
}

ResGradedElem::ResGradedElem(std::int64_t k, std::int64_t i, BigInt a)
    : grade(k), dim(i), euler(std::move(a)) {
  if (k < 0 || i < 0 || i > k || (k == 0 && euler < 0)) {
    throw Error(ErrorKind::SchemaViolation, "RES[k] element violates 0 <= i <= k or k = 0 => a >= 0");
  }
}

ResGradedElem operator+(const ResGradedElem& x, const ResGradedElem& y) {
  if (x.grade != y.grade) {
    throw Error(ErrorKind::GradeMismatch, "cannot add RES classes of grades " +
                                              std::to_string(x.grade) + " and " +
                                              std::to_string(y.grade));
  }
  return ResGradedElem(x.grade, std::max(x.dim, y.dim), x.euler + y.euler);
}

ResGradedElem operator*(const ResGradedElem& x, const ResGradedElem& y) {
  ResGradedElem r;
  r.grade = x.grade + y.grade;
  r.dim = x.dim + y.dim;
  r.euler = x.euler * y.euler;
  return r;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(BigInt c) {
  if (c != 0) terms_.emplace(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(BigInt c, std::int64_t exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

BigInt LaurentPoly::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  *this = std::move(r);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BigInt LaurentPoly::evaluate(const BigInt& at) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0) {
      if (at != 1 && at != -1) {
        throw Error(ErrorKind::Unsupported, "negative exponent at non-unit evaluation point");
      }
      total += c * ((at == -1 && (-e) % 2 == 1) ? -1 : 1);
    } else {
      total += c * boost::multiprecision::pow(at, static_cast<unsigned>(e));
    }
  }
  return total;
}

LaurentPoly LaurentPoly::scale_exponents(std::int64_t s) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * s, c);
  return r;
}

namespace {

void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& mono) {
  BigInt mag = c < 0 ? BigInt(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    os << mag;
  } else if (mag == 1) {
    os << mono;
  } else {
    os << mag << "*" << mono;
  }
}

}  // namespace

std::string LaurentPoly::str(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    if (it->first == 1) {
      mono = std::string(var);
    } else if (it->first != 0) {
      mono = std::string(var) + "^" + std::to_string(it->first);
    }
    append_term(os, first, it->second, mono);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- RvRingElem

RvRingElem::RvRingElem(BigInt c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, std::move(c));
}

RvRingElem RvRingElem::X(std::int64_t power) {
  RvRingElem r;
  r.add_term(power, 0, 1);
  return r;
}

RvRingElem RvRingElem::XY(std::int64_t a) {
  RvRingElem r;
  r.add_term(a, 1, 1);
  return r;
}

BigInt RvRingElem::coeff(std::int64_t a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool RvRingElem::is_homogeneous(std::int64_t degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.first == degree; });
}

void RvRingElem::add_term(std::int64_t a, int b, const BigInt& c) {
  if (c == 0) return;
  BigInt coeff = c;
  while (b >= 2) {  // Y^2 = -Y
    coeff = -coeff;
    --b;
  }
  if (a < 0) throw Error(ErrorKind::Parse, "negative X exponent in Z[X, Y^(2)]");
  if (b == 1 && a == 0) {
    throw Error(ErrorKind::Parse, "monomial Y without X is outside Z ⊕ X Z[X, Y]");
  }
  auto [it, inserted] = terms_.try_emplace(Monomial{a, b}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RvRingElem& RvRingElem::operator+=(const RvRingElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, c);
  return *this;
}

RvRingElem& RvRingElem::operator-=(const RvRingElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, -c);
  return *this;
}

RvRingElem& RvRingElem::operator*=(const RvRingElem& o) {
  RvRingElem r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.add_term(m1.first + m2.first, m1.second + m2.second, c1 * c2);
  *this = std::move(r);
  return *this;
}

RvRingElem RvRingElem::operator-() const {
  RvRingElem r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

RvRingElem RvRingElem::scale_x(const BigInt& c) const {
  RvRingElem r;
  for (const auto& [m, k] : terms_)
    r.add_term(m.first, m.second, k * boost::multiprecision::pow(c, static_cast<unsigned>(m.first)));
  return r;
}

std::string RvRingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [a, b] = it->first;
    std::string mono;
    if (a == 1) mono = "X";
    if (a > 1) mono = "X^" + std::to_string(a);
    if (b == 1) mono += mono.empty() ? "Y" : "*Y";
    append_term(os, first, it->second, mono);
    first = false;
  }
  return os.str();
}

namespace {

class RvParser {
 public:
  explicit RvParser(std::string_view s) : s_(s) {}

  RvRingElem parse() {
    skip();
    RvRingElem total;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      RvRingElem t = term();
      total += sign < 0 ? -t : t;
      first = false;
      skip();
    }
    if (first) fail("empty expression");
    return total;
  }

 private:
  RvRingElem term() {
    BigInt coeff = 1;
    std::int64_t a = 0;
    int b = 0;
    bool any = false;
    while (true) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= integer();
      } else if (c == 'X' || c == 'Y') {
        ++pos_;
        std::int64_t e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = static_cast<std::int64_t>(integer());
        }
        if (c == 'X') {
          a += e;
        } else {
          b += static_cast<int>(e);
        }
      } else {
        fail("expected factor");
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    RvRingElem r;
    if (b == 0) {
      r = RvRingElem::X(a) * RvRingElem(coeff);
    } else {
      if (a == 0) fail("Y must appear together with X");
      // Y^b = (-1)^(b-1) Y
      r = RvRingElem::XY(a) * RvRingElem(coeff * ((b - 1) % 2 == 0 ? 1 : -1));
    }
    return r;
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return parse_bigint(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RvRingElem RvRingElem::parse(std::string_view text) { return RvParser(text).parse(); }

// ---------------------------------------------------------------- Z^(2)

Z2Elem operator+(const Z2Elem& x, const Z2Elem& y) { return {x.c0 + y.c0, x.c1 + y.c1}; }
Z2Elem operator-(const Z2Elem& x, const Z2Elem& y) { return {x.c0 - y.c0, x.c1 - y.c1}; }
Z2Elem operator*(const Z2Elem& x, const Z2Elem& y) {
  return {x.c0 * y.c0, x.c0 * y.c1 + x.c1 * y.c0 - x.c1 * y.c1};
}

std::string Z2Elem::str() const {
  std::ostringstream os;
  os << c0 << (c1 < 0 ? " - " : " + ") << (c1 < 0 ? BigInt(-c1) : c1) << "*Y";
  return os.str();
}

LaurentPoly euler_spec_g(const RvRingElem& x) {
  LaurentPoly r;
  for (const auto& [m, c] : x.terms()) r.add_term(m.first, m.second == 1 ? BigInt(-c) : c);
  return r;
}

LaurentPoly euler_spec_b(const RvRingElem& x) {
  LaurentPoly r;
  for (const auto& [m, c] : x.terms())
    if (m.second == 0) r.add_term(m.first, c);
  return r;
}

Z2Elem z2_project(const RvRingElem& x) {
  const Z2Elem image_x{-1, -2};
  const Z2Elem y{0, 1};
  Z2Elem total;
  for (const auto& [m, c] : x.terms()) {
    Z2Elem mono{1, 0};
    // image_x^2 = 1, so only the parity of the exponent matters.
    if (m.first % 2 == 1) mono = image_x;
    if (m.second == 1) mono = mono * y;
    total = total + Z2Elem{c, 0} * mono;
  }
  return total;
}

}  // namespace tzeta
