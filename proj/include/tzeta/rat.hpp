#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tzeta {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always reduced with a positive denominator.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rat(BigInt n, BigInt d);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  BigInt floor() const;
  BigInt ceil() const;

  Rat operator-() const { return Rat(-num_, den_, Reduced{}); }
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// "p/q", or "p" when q = 1.
  std::string str() const;
  /// Always "p/q", the form used in presentation files.
  std::string str_pq() const;
  /// Accepts "p", "p/q", optional leading sign; throws Error(Parse).
  static Rat parse(std::string_view text);

 private:
  struct Reduced {};
  Rat(BigInt n, BigInt d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

BigInt parse_bigint(std::string_view text);
BigInt lcm(const BigInt& a, const BigInt& b);
/// Floor division for possibly negative numerators, positive divisor.
BigInt floor_div(const BigInt& a, const BigInt& b);
/// Mathematical modulo in [0, b).
BigInt mod_floor(const BigInt& a, const BigInt& b);
/// (-1)^e for any integer e.
int neg_one_pow(const BigInt& e);
// Trivial helper for machine-sized exponents.
inline int neg_one_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace tzeta
