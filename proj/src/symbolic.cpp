#include "thetalift/symbolic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace thetalift {

void SymbolicScalar::addTerm(SymMono m, QQi c) {
  if (c.isZero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

void SymbolicScalar::mergeSign(const SymbolicScalar& o) {
  if (chiMinusOne_ == 0) chiMinusOne_ = o.chiMinusOne_;
  else if (o.chiMinusOne_ != 0 && o.chiMinusOne_ != chiMinusOne_)
    throw std::logic_error("SymbolicScalar: mixing rings with different chi(-1)");
}

SymbolicScalar SymbolicScalar::operator+(const SymbolicScalar& o) const {
  SymbolicScalar r = *this;
  r.mergeSign(o);
  for (auto& [m, c] : o.terms_) r.addTerm(m, c);
  return r;
}

SymbolicScalar SymbolicScalar::operator-() const {
  SymbolicScalar r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SymbolicScalar SymbolicScalar::operator-(const SymbolicScalar& o) const {
  return *this + (-o);
}

SymbolicScalar SymbolicScalar::operator*(const SymbolicScalar& o) const {
  SymbolicScalar r;
  r.chiMinusOne_ = chiMinusOne_;
  r.mergeSign(o);
  for (auto& [m1, c1] : terms_) {
    for (auto& [m2, c2] : o.terms_) {
      SymMono m;
      m.qHalf = m1.qHalf + m2.qHalf;
      m.uPow = m1.uPow + m2.uPow;
      m.gamma = m1.gamma + m2.gamma;
      m.tau = m1.tau + m2.tau;
      QQi c = c1 * c2;
      if (m.gamma >= 2) {
        if (r.chiMinusOne_ == 0)
          throw std::logic_error("SymbolicScalar: gamma^2 reduction needs chi(-1)");
        m.gamma -= 2;
        if (r.chiMinusOne_ < 0) c = -c;
      }
      if (m.tau >= 2) {
        if (r.chiMinusOne_ == 0)
          throw std::logic_error("SymbolicScalar: tau^2 reduction needs chi(-1)");
        m.tau -= 2;
        m.qHalf += 2;
        if (r.chiMinusOne_ < 0) c = -c;
      }
      r.addTerm(m, c);
    }
  }
  return r;
}

Rat SymbolicScalar::evalRationalAtQ(long long q) const {
  Rat total(0);
  for (auto& [m, c] : terms_) {
    if (m.gamma != 0 || m.tau != 0 || m.uPow != 0)
      throw std::domain_error("evalRationalAtQ: symbolic content present");
    if (m.qHalf % 2 != 0)
      throw std::domain_error("evalRationalAtQ: fractional q exponent");
    if (!c.im.isZero())
      throw std::domain_error("evalRationalAtQ: imaginary part present");
    total += c.re * Rat::pow(Rat(q), m.qHalf / 2);
  }
  return total;
}

int SymbolicScalar::gammaResidueAgainst(const SymbolicScalar& other,
                                        int chiMinusOneHint) const {
  // gamma exponents live in {0,1} with gamma^2 = chi(-1), so candidate
  // residues are gamma^0, gamma^1 and their negatives (= gamma^2, gamma^3).
  if (isZero() && other.isZero()) return 0;
  if (isZero() != other.isZero()) return -1;
  int sign = chiMinusOne_ != 0 ? chiMinusOne_ : other.chiMinusOne_;
  if (sign == 0) sign = chiMinusOneHint;
  SymbolicScalar g = gammaSym(sign == 0 ? +1 : sign);
  SymbolicScalar cand = other;
  for (int k = 0; k < 4; ++k) {
    if (*this == cand) return k;
    cand = cand * g;
  }
  return -1;
}

SymbolicScalar SymbolicScalar::divideByMonomial(const SymbolicScalar& o) const {
  if (o.terms_.size() != 1)
    throw std::domain_error("divideByMonomial: divisor not a monomial");
  auto [m, c] = *o.terms_.begin();
  // Invert the monomial: gamma^-1 = chi(-1) gamma, tau^-1 = chi(-1)/q * tau.
  int sign = chiMinusOne_ != 0 ? chiMinusOne_ : o.chiMinusOne_;
  SymMono mi;
  mi.qHalf = -m.qHalf;
  mi.uPow = -m.uPow;
  QQi ci(Rat(1));
  if (m.gamma) {
    mi.gamma = 1;
    if (sign < 0) ci = -ci;
  }
  if (m.tau) {
    mi.tau = 1;
    mi.qHalf -= 2;
    if (sign < 0) ci = -ci;
  }
  // divide ci by c (c is Gaussian rational)
  Rat n2 = c.re * c.re + c.im * c.im;
  QQi cinv(c.re / n2, (-c.im) / n2);
  SymbolicScalar inv = monomial(ci * cinv, mi, sign == 0 ? +1 : sign);
  return *this * inv;
}

std::complex<double> SymbolicScalar::evalNumeric(long long q, std::complex<double> gamma,
                                                 std::complex<double> tau,
                                                 std::complex<double> u) const {
  std::complex<double> total = 0.0;
  double sq = std::sqrt(double(q));
  for (auto& [m, c] : terms_) {
    std::complex<double> v(c.re.toDouble(), c.im.toDouble());
    v *= std::pow(sq, m.qHalf);
    v *= std::pow(u, m.uPow);
    for (int i = 0; i < m.gamma; ++i) v *= gamma;
    for (int i = 0; i < m.tau; ++i) v *= tau;
    total += v;
  }
  return total;
}

std::string SymbolicScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    if (m.qHalf != 0) {
      if (m.qHalf % 2 == 0) out << "*q^" << m.qHalf / 2;
      else out << "*q^(" << m.qHalf << "/2)";
    }
    if (m.uPow != 0) out << "*u^" << m.uPow;
    if (m.gamma != 0) out << "*gamma";
    if (m.tau != 0) out << "*tau";
  }
  return out.str();
}

} // namespace thetalift
