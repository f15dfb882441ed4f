#include "tzeta/rat.hpp"

#include <cctype>
#include <ostream>

#include "tzeta/error.hpp"

namespace tzeta {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GradeMismatch: return "GradeMismatch";
    case ErrorKind::InvalidCell: return "InvalidCell";
    case ErrorKind::NotDoublyBounded: return "NotDoublyBounded";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::InvalidLevel: return "InvalidLevel";
    case ErrorKind::InvalidPeriod: return "InvalidPeriod";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NoLimit: return "NoLimit";
    case ErrorKind::NotAGerm: return "NotAGerm";
    case ErrorKind::UnsupportedGerm: return "UnsupportedGerm";
    case ErrorKind::DeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::NonDisjointCells: return "NonDisjointCells";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw Error(ErrorKind::Parse, "zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigInt Rat::floor() const { return floor_div(num_, den_); }

BigInt Rat::ceil() const { return -floor_div(-num_, den_); }

Rat& Rat::operator+=(const Rat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw Error(ErrorKind::Parse, "division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  BigInt l = a.num_ * b.den_;
  BigInt r = b.num_ * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rat::str_pq() const { return num_.str() + "/" + den_.str(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t start = i;
  BigInt v = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    v = v * 10 + (text[i] - '0');
    ++i;
  }
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start || i != text.size()) {
    throw Error(ErrorKind::Parse, "malformed integer '" + std::string(text) + "'");
  }
  return neg ? BigInt(-v) : v;
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  BigInt n = parse_bigint(text.substr(0, slash));
  BigInt d = parse_bigint(text.substr(slash + 1));
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = boost::multiprecision::gcd(a, b);
  BigInt r = a / g * b;
  return r < 0 ? BigInt(-r) : r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

int neg_one_pow(const BigInt& e) {
  return boost::multiprecision::bit_test(e < 0 ? BigInt(-e) : e, 0) ? -1 : 1;
}

}  // namespace tzeta
