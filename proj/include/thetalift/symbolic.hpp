#pragma once

#include <complex>
#include <map>
#include <string>
#include <tuple>

#include "thetalift/rational.hpp"

namespace thetalift {

// Monomial exponents for the Laurent coefficient ring: q carried on a
// half-integer lattice (qHalf counts powers of q^{1/2}), u = q^{-s}, and two
// formal unimodular symbols
//   gamma : the Weil index of the SL(2)-Fourier generator, gamma^2 = chi(-1)
//   tau   : the normalized quadratic Gauss sum, tau^2 = chi(-1) q
// Both exponents are therefore reduced to {0,1}.
struct SymMono {
  int qHalf = 0;
  int uPow = 0;
  int gamma = 0;
  int tau = 0;
  bool operator<(const SymMono& o) const {
    return std::tie(qHalf, uPow, gamma, tau) < std::tie(o.qHalf, o.uPow, o.gamma, o.tau);
  }
  bool operator==(const SymMono& o) const {
    return std::tie(qHalf, uPow, gamma, tau) == std::tie(o.qHalf, o.uPow, o.gamma, o.tau);
  }
};

class SymbolicScalar {
public:
  SymbolicScalar() : chiMinusOne_(0) {}
  explicit SymbolicScalar(QQi c, int chiMinusOne = 0) : chiMinusOne_(chiMinusOne) {
    if (!c.isZero()) terms_[SymMono{}] = c;
  }
  static SymbolicScalar zero() { return SymbolicScalar(); }
  static SymbolicScalar one() { return SymbolicScalar(QQi(1)); }
  static SymbolicScalar rational(const Rat& r) { return SymbolicScalar(QQi(r)); }
  static SymbolicScalar integer(long long n) { return SymbolicScalar(QQi(Rat(n))); }

  static SymbolicScalar monomial(QQi c, SymMono m, int chiMinusOne) {
    SymbolicScalar s;
    s.chiMinusOne_ = chiMinusOne;
    s.addTerm(m, c);
    return s;
  }
  static SymbolicScalar qPow(int n) { return qHalfPow(2 * n); }
  static SymbolicScalar qHalfPow(int halves) {
    SymbolicScalar s;
    s.terms_[SymMono{halves, 0, 0, 0}] = QQi(1);
    return s;
  }
  static SymbolicScalar uPow(int n) {
    SymbolicScalar s;
    s.terms_[SymMono{0, n, 0, 0}] = QQi(1);
    return s;
  }
  static SymbolicScalar gammaSym(int chiMinusOne) {
    SymbolicScalar s;
    s.chiMinusOne_ = chiMinusOne;
    s.terms_[SymMono{0, 0, 1, 0}] = QQi(1);
    return s;
  }
  static SymbolicScalar tauSym(int chiMinusOne) {
    SymbolicScalar s;
    s.chiMinusOne_ = chiMinusOne;
    s.terms_[SymMono{0, 0, 0, 1}] = QQi(1);
    return s;
  }

  bool isZero() const { return terms_.empty(); }
  bool isRational() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    return terms_.begin()->first == SymMono{};
  }
  // Rational value when the scalar is a pure q-Laurent number at a known q;
  // throws if gamma/tau/u present.
  Rat evalRationalAtQ(long long q) const;
  QQi rationalPart() const {
    if (terms_.empty()) return QQi(Rat(0));
    if (!isRational()) throw std::domain_error("SymbolicScalar: not rational");
    return terms_.begin()->second;
  }

  bool hasGammaOrTau() const {
    for (auto& [m, c] : terms_)
      if (m.gamma != 0 || m.tau != 0) return true;
    return false;
  }

  SymbolicScalar operator+(const SymbolicScalar& o) const;
  SymbolicScalar operator-(const SymbolicScalar& o) const;
  SymbolicScalar operator-() const;
  SymbolicScalar operator*(const SymbolicScalar& o) const;
  SymbolicScalar& operator+=(const SymbolicScalar& o) { return *this = *this + o; }
  SymbolicScalar& operator*=(const SymbolicScalar& o) { return *this = *this * o; }
  bool operator==(const SymbolicScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymbolicScalar& o) const { return !(*this == o); }

  // Multiply by an integer sign (+1/-1), common enough to deserve a helper.
  SymbolicScalar timesSign(int s) const {
    return s >= 0 ? *this : -(*this);
  }

  // this == gamma^k * other for some k in {0,1,2,3}; returns k or -1.
  // chiMinusOneHint supplies chi(-1) when neither scalar carries it.
  int gammaResidueAgainst(const SymbolicScalar& other, int chiMinusOneHint = 0) const;

  // Divide by a single monomial scalar; throws unless `o` has exactly one term.
  SymbolicScalar divideByMonomial(const SymbolicScalar& o) const;

  std::complex<double> evalNumeric(long long q, std::complex<double> gamma,
                                   std::complex<double> tau,
                                   std::complex<double> u = 1.0) const;

  const std::map<SymMono, QQi>& terms() const { return terms_; }
  int chiSign() const { return chiMinusOne_; }

  std::string str() const;

private:
  void addTerm(SymMono m, QQi c);
  void mergeSign(const SymbolicScalar& o);
  // 0 = unknown (no gamma/tau yet), else +1/-1 = value of chi(-1)
  int chiMinusOne_;
  std::map<SymMono, QQi> terms_;
};

// A Bessel value: exact coefficient times the formal zeta symbol Z(s, W).
struct BesselValue {
  SymbolicScalar coeff;
  bool timesZ = true;
  std::string str() const {
    return coeff.str() + (timesZ ? " * Z(s,W)" : "");
  }
};

} // namespace thetalift
