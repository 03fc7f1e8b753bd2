#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "thetalift/rational.hpp"

namespace thetalift {

enum class ExtensionKind { Split, Inert, Ramified };

// Thrown when a result's valuation cannot be certified at the tracked
// precision. Carries the certified lower bound on the valuation (the sum is
// known to lie in p^certifiedLB). Callers either use the bound or raise the
// working precision and retry.
struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(int lb = INT32_MIN)
      : std::runtime_error("p-adic precision exhausted"), certifiedLB(lb) {}
  int certifiedLB;
};

// Legendre symbol of a mod p, for odd prime p. a must not be divisible by p.
int legendreSymbol(long long a, long long p);

// Configuration of the base local field L and its quadratic extension E.
//
// Desk scale: residue field Z/p with p an odd prime, so q = p. delta defines
// E = L(sqrt(delta)); for inert extensions it is the smallest quadratic
// non-residue, for ramified extensions a uniformizer scaled so the attached
// quadratic character has the requested value at the uniformizer.
struct FieldParams {
  long long p = 3;
  ExtensionKind kind = ExtensionKind::Split;
  // chi(pi) for the quadratic character attached to E/L in the ramified
  // case. The extension L(sqrt(pi)) forces chi(pi) = chi(-1); the other
  // ramified extension L(sqrt(c*pi)) gives the opposite sign. deltaUnit is
  // the unit c (1 or a non-residue) chosen accordingly.
  int chiPiSign = +1;
  long long deltaUnit = 1;
  int workingPrec = 12;

  static FieldParams split(long long p, int prec = 12);
  static FieldParams inert(long long p, int prec = 12);
  // chiPi = 0 picks the consistent sign chi(pi) = chi(-1) = (-1)^((p-1)/2).
  static FieldParams ramified(long long p, int chiPi = 0, int prec = 12);

  long long q() const { return p; }
  bool isField() const { return kind != ExtensionKind::Split; }
  // Residue size of E.
  long long qE() const { return kind == ExtensionKind::Inert ? p * p : p; }
  // Valuation of delta in L: 0 for inert, 1 for ramified.
  int deltaValL() const { return kind == ExtensionKind::Ramified ? 1 : 0; }
  // Exponent of the different of E/L as a power of the prime of E.
  int differentExp() const { return kind == ExtensionKind::Ramified ? 1 : 0; }
  // ramification index of E/L (1 split/inert, 2 ramified)
  int e() const { return kind == ExtensionKind::Ramified ? 2 : 1; }
  int chiMinusOne() const;
  long long powp(int k) const {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = Rat::checkedMul(r, p);
    return r;
  }
};

// An element of L, stored as pi^val * unit with the unit residue tracked to
// `prec` base-p digits. Zero is exact and distinguished. Arithmetic never
// claims more digits than its inputs justify.
class PadicElement {
public:
  PadicElement() : zero_(true), val_(0), unit_(0), prec_(0), p_(0) {}

  static PadicElement zero(const FieldParams& F) {
    PadicElement x;
    x.p_ = F.p;
    x.prec_ = F.workingPrec;
    x.exact_ = Rat(0);
    return x;
  }
  static PadicElement fromUnit(const FieldParams& F, int val, long long unitResidue,
                               int prec);
  static PadicElement fromInteger(const FieldParams& F, long long n);
  static PadicElement fromRational(const FieldParams& F, const Rat& r);
  // pi^k
  static PadicElement uniformizerPow(const FieldParams& F, int k) {
    Rat r = k >= 0 ? Rat::pow(Rat(F.p), k) : Rat(1, Rat::pow(Rat(F.p), -k).num());
    return fromRational(F, r);
  }

  bool isZero() const { return zero_; }
  int val() const {
    if (zero_) throw std::domain_error("valuation of zero");
    return val_;
  }
  // The unit part reduced mod p^digits (digits <= prec).
  long long unitMod(int digits) const;
  int prec() const { return prec_; }
  long long prime() const { return p_; }

  PadicElement operator+(const PadicElement& o) const;
  PadicElement operator-() const;
  PadicElement operator-(const PadicElement& o) const { return *this + (-o); }
  PadicElement operator*(const PadicElement& o) const;
  PadicElement inv() const;
  PadicElement operator/(const PadicElement& o) const { return *this * o.inv(); }

  // Multiply by pi^k.
  PadicElement shift(int k) const;

  // Equality as far as both precisions can see; throws if undecidable.
  bool equalUpToPrec(const PadicElement& o) const;

  bool hasExactBacking() const { return exact_.has_value(); }

  // True if val >= m (membership in p^m); requires certainty.
  bool inIdeal(int m) const { return zero_ || val_ >= m; }
  bool inShell(int m) const { return !zero_ && val_ == m; }

  std::string str() const;

private:
  friend class ExtElement;
  bool zero_;
  int val_;
  long long unit_; // mod p^prec_, in [0, p^prec_), unit_ % p != 0 unless prec 0
  int prec_;
  long long p_;
  // Exact rational value when the element was built from integer data and
  // every operation stayed within 64-bit range. Lets sums cancel to an exact
  // zero instead of exhausting precision. Dropped silently on overflow.
  std::optional<Rat> exact_;

  static long long powll(long long p, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = Rat::checkedMul(r, p);
    return r;
  }
  static PadicElement fromExact(long long p, int prec, const Rat& r);
};

// Element of E in coordinates a + b*sqrt(delta) (inert/ramified) or the pair
// (a, b) of L x L (split).
class ExtElement {
public:
  ExtElement() = default;
  ExtElement(const FieldParams& F, PadicElement a, PadicElement b)
      : F_(F), a_(std::move(a)), b_(std::move(b)) {}

  static ExtElement fromL(const FieldParams& F, const PadicElement& a) {
    return ExtElement(F, a, PadicElement::zero(F));
  }
  static ExtElement zero(const FieldParams& F) {
    return ExtElement(F, PadicElement::zero(F), PadicElement::zero(F));
  }
  static ExtElement one(const FieldParams& F) {
    return ExtElement(F, PadicElement::fromInteger(F, 1), PadicElement::zero(F));
  }
  // sqrt(delta) itself (non-split only).
  static ExtElement sqrtDelta(const FieldParams& F) {
    return ExtElement(F, PadicElement::zero(F), PadicElement::fromInteger(F, 1));
  }

  const PadicElement& a() const { return a_; }
  const PadicElement& b() const { return b_; }
  const FieldParams& field() const { return F_; }

  bool isZero() const { return a_.isZero() && b_.isZero(); }

  // Valuation in E. Split elements use min over coordinates (only meaningful
  // for integrality tests).
  int valE() const;
  bool inIdealE(int m) const;
  bool inShellE(int m) const { return !isZero() && valE() == m; }
  bool isUnitE() const { return inShellE(0); }

  ExtElement conj() const;
  PadicElement norm() const;
  PadicElement trace() const;

  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-() const;
  ExtElement operator-(const ExtElement& o) const { return *this + (-o); }
  ExtElement operator*(const ExtElement& o) const;
  ExtElement inv() const;
  ExtElement scaleL(const PadicElement& t) const {
    return ExtElement(F_, a_ * t, b_ * t);
  }

  std::string str() const;

private:
  FieldParams F_;
  PadicElement a_, b_;
};

// delta as an element of L (uniformizer-scaled unit for ramified, a
// non-residue unit for inert). Split has no delta; throws.
PadicElement deltaElement(const FieldParams& F);

// Quadratic character chi_{E/L} on L^x. +1/-1. Split: identically 1.
int chiQuad(const FieldParams& F, const PadicElement& x);

// p-adic fractional part {x} in [0,1) as a rational with p-power denominator;
// psi(x) = exp(2 pi i {x}) has conductor o_L.
Rat psiAngle(const PadicElement& x);

// Solve N(z) = t for z in E^x (inert or ramified; throws if no solution).
ExtElement solveNormEquation(const FieldParams& F, const PadicElement& t);

// Square root of a unit residue class by Hensel lifting (odd p). Empty if a
// is a non-residue.
std::optional<PadicElement> unitSquareRoot(const FieldParams& F, const PadicElement& a);

} // namespace thetalift
