#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sndtw {

// Exact rational arithmetic on 64-bit words. DP minima and LP feasibility
// compare sums of input costs, so ties must be decided exactly; doubles are
// not acceptable there. Overflow throws instead of wrapping.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator+(const Rat& o) const {
    __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    return make_checked(n, d);
  }
  Rat operator-(const Rat& o) const {
    __int128 n = (__int128)num_ * o.den_ - (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    return make_checked(n, d);
  }
  Rat operator*(const Rat& o) const {
    return make_checked((__int128)num_ * o.num_, (__int128)den_ * o.den_);
  }
  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    __int128 n = (__int128)num_ * o.den_;
    __int128 d = (__int128)den_ * o.num_;
    if (d < 0) { n = -n; d = -d; }
    return make_checked(n, d);
  }
  Rat operator-() const { return Rat(-num_, den_); }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  double to_double() const { return (double)num_ / (double)den_; }

  // "7", "-3/2" or "2.5"; used by the instance parser.
  static Rat parse(const std::string& tok);
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  size_t hash() const {
    return std::hash<long long>()(num_) * 1000003u ^ std::hash<long long>()(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }
  static Rat make_checked(__int128 n, __int128 d) {
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rat r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }

  long long num_;
  long long den_;  // > 0
};

// Rat with an explicit +infinity sentinel; addition saturates. Used for DP
// cell values where "invalid" must be distinct from any representable cost.
class Cost {
 public:
  Cost() : inf_(false), v_() {}
  Cost(const Rat& v) : inf_(false), v_(v) {}
  static Cost infinity() { Cost c; c.inf_ = true; return c; }
  static Cost zero() { return Cost(Rat(0)); }

  bool is_infinite() const { return inf_; }
  const Rat& value() const {
    if (inf_) throw std::domain_error("value() on infinite cost");
    return v_;
  }

  Cost operator+(const Cost& o) const {
    if (inf_ || o.inf_) return infinity();
    return Cost(v_ + o.v_);
  }
  Cost& operator+=(const Cost& o) { *this = *this + o; return *this; }

  bool operator<(const Cost& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator==(const Cost& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return v_ == o.v_;
  }
  bool operator!=(const Cost& o) const { return !(*this == o); }
  bool operator<=(const Cost& o) const { return *this < o || *this == o; }

  std::string str() const { return inf_ ? "inf" : v_.str(); }

 private:
  bool inf_;
  Rat v_;
};

}  // namespace sndtw
