#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace thetalift {

// Exact rational arithmetic on 64-bit numerator/denominator with overflow
// checks. Desk scale (q <= 7, exponents bounded by ~30) stays far below the
// 63-bit limit; any overflow throws instead of wrapping.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool isZero() const { return num_ == 0; }
  bool isOne() const { return num_ == 1 && den_ == 1; }

  static long long checkedMul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rat overflow");
    return r;
  }
  static long long checkedAdd(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rat overflow");
    return r;
  }

  Rat operator+(const Rat& o) const {
    long long g = std::gcd(den_, o.den_);
    long long l = checkedMul(den_ / g, o.den_);
    long long n = checkedAdd(checkedMul(num_, o.den_ / g), checkedMul(o.num_, den_ / g));
    return Rat(n, l);
  }
  Rat operator-() const { return Rat(-num_, den_); }
  Rat operator-(const Rat& o) const { return *this + (-o); }
  Rat operator*(const Rat& o) const {
    long long g1 = std::gcd(std::abs(num_), o.den_);
    long long g2 = std::gcd(den_, std::abs(o.num_));
    return Rat(checkedMul(num_ / g1, o.num_ / g2), checkedMul(den_ / g2, o.den_ / g1));
  }
  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
    return *this * Rat(o.den_, o.num_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const {
    return checkedMul(num_, o.den_) < checkedMul(o.num_, den_);
  }

  double toDouble() const { return double(num_) / double(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rat pow(const Rat& base, int e) {
    Rat r(1);
    Rat b = e >= 0 ? base : Rat(1) / base;
    int n = e >= 0 ? e : -e;
    for (int i = 0; i < n; ++i) r *= b;
    return r;
  }

private:
  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(std::abs(num_), den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }
  long long num_, den_;
};

// Gaussian rational a + b*i. The imaginary unit shows up when the formal
// symbols gamma, tau resolve to complex fourth roots of unity.
struct QQi {
  Rat re, im;
  QQi() = default;
  QQi(Rat r) : re(r), im(0) {}
  QQi(long long r) : re(r), im(0) {}
  QQi(Rat r, Rat i) : re(r), im(i) {}

  bool isZero() const { return re.isZero() && im.isZero(); }
  QQi operator+(const QQi& o) const { return {re + o.re, im + o.im}; }
  QQi operator-(const QQi& o) const { return {re - o.re, im - o.im}; }
  QQi operator-() const { return {-re, -im}; }
  QQi operator*(const QQi& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  QQi& operator+=(const QQi& o) { return *this = *this + o; }
  QQi& operator*=(const QQi& o) { return *this = *this * o; }
  bool operator==(const QQi& o) const { return re == o.re && im == o.im; }
  bool operator!=(const QQi& o) const { return !(*this == o); }

  std::string str() const {
    if (im.isZero()) return re.str();
    if (re.isZero()) return im.str() + "*i";
    return re.str() + (im < Rat(0) ? "" : "+") + im.str() + "*i";
  }
};

} // namespace thetalift
