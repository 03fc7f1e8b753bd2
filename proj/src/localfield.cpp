#include "thetalift/localfield.hpp"

#include <cstdlib>

namespace thetalift {

namespace {

long long powmod(long long a, long long e, long long m) {
  __int128 r = 1, b = a % m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return (long long)r;
}

long long invmod(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, a1 = a % m;
  if (a1 < 0) a1 += m;
  long long b = a1;
  long long q, t;
  long long r0 = m, r1 = b, s0 = 0, s1 = 1;
  while (r1 != 0) {
    q = r0 / r1;
    t = r0 - q * r1; r0 = r1; r1 = t;
    t = s0 - q * s1; s0 = s1; s1 = t;
  }
  if (r0 != 1) throw std::domain_error("invmod: not invertible");
  (void)g; (void)x; (void)x1;
  long long r = s0 % m;
  if (r < 0) r += m;
  return r;
}

} // namespace

int legendreSymbol(long long a, long long p) {
  long long r = a % p;
  if (r < 0) r += p;
  if (r == 0) throw std::domain_error("legendreSymbol: argument divisible by p");
  long long s = powmod(r, (p - 1) / 2, p);
  return s == 1 ? +1 : -1;
}

FieldParams FieldParams::split(long long p, int prec) {
  FieldParams F;
  F.p = p; F.kind = ExtensionKind::Split; F.workingPrec = prec;
  return F;
}

FieldParams FieldParams::inert(long long p, int prec) {
  FieldParams F;
  F.p = p; F.kind = ExtensionKind::Inert; F.workingPrec = prec;
  for (long long c = 2; c < p; ++c)
    if (legendreSymbol(c, p) == -1) { F.deltaUnit = c; break; }
  return F;
}

FieldParams FieldParams::ramified(long long p, int chiPi, int prec) {
  FieldParams F;
  F.p = p; F.kind = ExtensionKind::Ramified; F.workingPrec = prec;
  int consistent = legendreSymbol(-1 + p, p); // chi(-1)
  F.chiPiSign = (chiPi == 0) ? consistent : chiPi;
  // delta = deltaUnit * pi with chi(delta) = chiPiSign * legendre(deltaUnit).
  // The extension L(sqrt(delta)) has character value chi(pi) = legendre(-deltaUnit):
  // chi(-delta) = 1 forces chi(pi) = chi(-deltaUnit).
  if (F.chiPiSign == consistent) {
    F.deltaUnit = 1;
  } else {
    for (long long c = 2; c < p; ++c)
      if (legendreSymbol(c, p) == -1) { F.deltaUnit = c; break; }
  }
  return F;
}

int FieldParams::chiMinusOne() const {
  switch (kind) {
    case ExtensionKind::Split: return +1;
    case ExtensionKind::Inert: return +1; // (-1)^{v(-1)} = 1
    case ExtensionKind::Ramified: return legendreSymbol(p - 1, p);
  }
  return +1;
}

PadicElement PadicElement::fromUnit(const FieldParams& F, int val, long long unitResidue,
                                    int prec) {
  if (prec <= 0 || prec > 20) throw std::domain_error("PadicElement: bad precision");
  PadicElement x;
  x.zero_ = false;
  x.p_ = F.p;
  x.val_ = val;
  x.prec_ = prec;
  long long m = powll(F.p, prec);
  long long u = unitResidue % m;
  if (u < 0) u += m;
  if (u % F.p == 0) throw std::domain_error("PadicElement: unit part not a unit");
  x.unit_ = u;
  return x;
}

PadicElement PadicElement::fromInteger(const FieldParams& F, long long n) {
  return fromRational(F, Rat(n));
}

PadicElement PadicElement::fromExact(long long p, int prec, const Rat& r) {
  if (r.isZero()) {
    PadicElement z;
    z.p_ = p;
    z.prec_ = prec;
    z.exact_ = Rat(0);
    return z;
  }
  long long n = r.num(), d = r.den();
  int v = 0;
  while (n % p == 0) { n /= p; ++v; }
  while (d % p == 0) { d /= p; --v; }
  long long m = powll(p, prec);
  long long nn = n % m; if (nn < 0) nn += m;
  long long u = (long long)((__int128)nn * invmod(d, m) % m);
  PadicElement x;
  x.zero_ = false;
  x.p_ = p;
  x.val_ = v;
  x.prec_ = prec;
  x.unit_ = u;
  x.exact_ = r;
  return x;
}

PadicElement PadicElement::fromRational(const FieldParams& F, const Rat& r) {
  return fromExact(F.p, F.workingPrec, r);
}

long long PadicElement::unitMod(int digits) const {
  if (zero_) throw std::domain_error("unit part of zero");
  if (digits > prec_) throw PrecisionExhausted();
  return unit_ % powll(p_, digits);
}

PadicElement PadicElement::operator+(const PadicElement& o) const {
  if (zero_) return o;
  if (o.zero_) return *this;
  if (p_ != o.p_) throw std::domain_error("mixed primes");
  if (exact_ && o.exact_) {
    try {
      return fromExact(p_, std::min(prec_, o.prec_), *exact_ + *o.exact_);
    } catch (const std::overflow_error&) {
      // fall through to tracked-precision arithmetic
    }
  }
  // Align at the smaller valuation.
  const PadicElement& lo = (val_ <= o.val_) ? *this : o;
  const PadicElement& hi = (val_ <= o.val_) ? o : *this;
  int shift = hi.val_ - lo.val_;
  // Digits both operands certify at the alignment point.
  int digits = std::min(lo.prec_, shift + hi.prec_);
  if (digits <= 0) throw PrecisionExhausted(lo.val_ + digits);
  if (shift > digits) {
    // hi is invisible at this precision; sum == lo to all certified digits.
    PadicElement r = lo;
    r.prec_ = digits;
    r.unit_ = lo.unit_ % powll(p_, digits);
    return r;
  }
  long long m = powll(p_, digits);
  long long a = lo.unit_ % m;
  long long b = (long long)((__int128)(hi.unit_ % m) * (powll(p_, shift) % m) % m);
  long long s = (a + b) % m;
  if (s == 0) throw PrecisionExhausted(lo.val_ + digits); // valuation uncertifiable
  // Extract p-powers gained by cancellation.
  int cancel = 0;
  while (s % p_ == 0) { s /= p_; ++cancel; }
  int newPrec = digits - cancel;
  if (newPrec <= 0) throw PrecisionExhausted(lo.val_ + digits);
  PadicElement r;
  r.zero_ = false;
  r.p_ = p_;
  r.val_ = lo.val_ + cancel;
  r.prec_ = newPrec;
  r.unit_ = s % powll(p_, newPrec);
  return r;
}

PadicElement PadicElement::operator-() const {
  if (zero_) return *this;
  PadicElement r = *this;
  long long m = powll(p_, prec_);
  r.unit_ = (m - unit_) % m;
  if (exact_) r.exact_ = -*exact_;
  return r;
}

PadicElement PadicElement::operator*(const PadicElement& o) const {
  if (zero_ || o.zero_) {
    PadicElement z = zero_ ? *this : o;
    return z;
  }
  if (p_ != o.p_) throw std::domain_error("mixed primes");
  if (exact_ && o.exact_) {
    try {
      return fromExact(p_, std::min(prec_, o.prec_), *exact_ * *o.exact_);
    } catch (const std::overflow_error&) {
    }
  }
  int prec = std::min(prec_, o.prec_);
  long long m = powll(p_, prec);
  PadicElement r;
  r.zero_ = false;
  r.p_ = p_;
  r.val_ = val_ + o.val_;
  r.prec_ = prec;
  r.unit_ = (long long)((__int128)(unit_ % m) * (o.unit_ % m) % m);
  return r;
}

PadicElement PadicElement::inv() const {
  if (zero_) throw std::domain_error("inversion of zero");
  if (exact_) {
    try {
      return fromExact(p_, prec_, Rat(1) / *exact_);
    } catch (const std::overflow_error&) {
    }
  }
  PadicElement r = *this;
  r.exact_.reset();
  r.val_ = -val_;
  r.unit_ = invmod(unit_, powll(p_, prec_));
  return r;
}

PadicElement PadicElement::shift(int k) const {
  if (zero_) return *this;
  PadicElement r = *this;
  r.val_ += k;
  if (exact_) {
    try {
      Rat pk = Rat::pow(Rat(p_), k);
      r.exact_ = *exact_ * pk;
    } catch (const std::overflow_error&) {
      r.exact_.reset();
    }
  }
  return r;
}

bool PadicElement::equalUpToPrec(const PadicElement& o) const {
  if (exact_ && o.exact_) return *exact_ == *o.exact_;
  if (zero_ && o.zero_) return true;
  if (zero_ != o.zero_) {
    // A nonzero element is distinguishable from zero at any precision.
    return false;
  }
  if (val_ != o.val_) return false;
  int digits = std::min(prec_, o.prec_);
  long long m = powll(p_, digits);
  return unit_ % m == o.unit_ % m;
}

std::string PadicElement::str() const {
  if (zero_) return "0";
  std::string s = std::to_string(unit_);
  if (val_ != 0) s += "*pi^" + std::to_string(val_);
  s += " (O(pi^" + std::to_string(val_ + prec_) + "))";
  return s;
}


int ExtElement::valE() const {
  if (isZero()) throw std::domain_error("valuation of zero");
  switch (F_.kind) {
    case ExtensionKind::Split: {
      int v = INT32_MAX;
      if (!a_.isZero()) v = std::min(v, a_.val());
      if (!b_.isZero()) v = std::min(v, b_.val());
      return v;
    }
    case ExtensionKind::Inert: {
      int v = INT32_MAX;
      if (!a_.isZero()) v = std::min(v, a_.val());
      if (!b_.isZero()) v = std::min(v, b_.val());
      return v;
    }
    case ExtensionKind::Ramified: {
      int v = INT32_MAX;
      if (!a_.isZero()) v = std::min(v, 2 * a_.val());
      if (!b_.isZero()) v = std::min(v, 2 * b_.val() + 1);
      return v;
    }
  }
  return 0;
}

bool ExtElement::inIdealE(int m) const {
  if (isZero()) return true;
  switch (F_.kind) {
    case ExtensionKind::Split:
      return a_.inIdeal(m) && b_.inIdeal(m);
    case ExtensionKind::Inert:
      return a_.inIdeal(m) && b_.inIdeal(m);
    case ExtensionKind::Ramified: {
      // ceil(m/2) and ceil((m-1)/2)
      int ka = (m >= 0) ? (m + 1) / 2 : m / 2;
      int kb = (m - 1 >= 0) ? m / 2 : (m - 1) / 2;
      return a_.inIdeal(ka) && b_.inIdeal(kb);
    }
  }
  return false;
}

ExtElement ExtElement::conj() const {
  if (F_.kind == ExtensionKind::Split) return ExtElement(F_, b_, a_);
  return ExtElement(F_, a_, -b_);
}

PadicElement ExtElement::norm() const {
  if (F_.kind == ExtensionKind::Split) return a_ * b_;
  if (b_.isZero()) return a_ * a_;
  if (a_.isZero()) return -(deltaElement(F_) * b_ * b_);
  return a_ * a_ - deltaElement(F_) * b_ * b_;
}

PadicElement ExtElement::trace() const {
  if (F_.kind == ExtensionKind::Split) return a_ + b_;
  return a_ + a_;
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
  return ExtElement(F_, a_ + o.a_, b_ + o.b_);
}

ExtElement ExtElement::operator-() const { return ExtElement(F_, -a_, -b_); }

ExtElement ExtElement::operator*(const ExtElement& o) const {
  if (F_.kind == ExtensionKind::Split)
    return ExtElement(F_, a_ * o.a_, b_ * o.b_);
  // (a1 + b1 s)(a2 + b2 s) = a1a2 + delta b1b2 + (a1b2 + b1a2) s
  PadicElement d = deltaElement(F_);
  return ExtElement(F_, a_ * o.a_ + d * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

ExtElement ExtElement::inv() const {
  if (F_.kind == ExtensionKind::Split)
    return ExtElement(F_, a_.inv(), b_.inv());
  PadicElement n = norm();
  ExtElement c = conj();
  PadicElement ni = n.inv();
  return ExtElement(F_, c.a_ * ni, c.b_ * ni);
}

std::string ExtElement::str() const {
  if (F_.kind == ExtensionKind::Split) return "(" + a_.str() + ", " + b_.str() + ")";
  return a_.str() + " + (" + b_.str() + ")*sqrt(d)";
}

PadicElement deltaElement(const FieldParams& F) {
  switch (F.kind) {
    case ExtensionKind::Split:
      throw std::domain_error("deltaElement: split case has no delta");
    case ExtensionKind::Inert:
      return PadicElement::fromRational(F, Rat(F.deltaUnit));
    case ExtensionKind::Ramified:
      return PadicElement::fromRational(F, Rat(F.deltaUnit * F.p));
  }
  throw std::logic_error("unreachable");
}

int chiQuad(const FieldParams& F, const PadicElement& x) {
  if (x.isZero()) throw std::domain_error("chiQuad of zero");
  switch (F.kind) {
    case ExtensionKind::Split:
      return +1;
    case ExtensionKind::Inert:
      return (x.val() % 2 == 0) ? +1 : -1;
    case ExtensionKind::Ramified: {
      int s = legendreSymbol(x.unitMod(1), F.p);
      if (x.val() % 2 != 0) s *= F.chiPiSign;
      return s;
    }
  }
  return +1;
}

Rat psiAngle(const PadicElement& x) {
  if (x.isZero()) return Rat(0);
  if (x.val() >= 0) return Rat(0);
  int k = -x.val();
  if (x.prec() < k) throw PrecisionExhausted();
  long long m = 1;
  for (int i = 0; i < k; ++i) m = Rat::checkedMul(m, x.prime());
  return Rat(x.unitMod(k), m);
}

std::optional<PadicElement> unitSquareRoot(const FieldParams& F, const PadicElement& a) {
  if (a.isZero() || a.val() != 0) throw std::domain_error("unitSquareRoot: need a unit");
  long long a1 = a.unitMod(1);
  if (legendreSymbol(a1, F.p) == -1) return std::nullopt;
  // Find the root mod p, then Hensel-lift digit by digit.
  long long r = 0;
  for (long long t = 1; t < F.p; ++t)
    if (t * t % F.p == a1) { r = t; break; }
  int prec = a.prec();
  long long m = 1;
  for (int i = 0; i < prec; ++i) m = Rat::checkedMul(m, F.p);
  long long x = r;
  long long mod = F.p;
  while (mod < m) {
    mod = (mod > m / mod) ? m : mod * mod;
    if (mod > m) mod = m;
    // Newton step x <- x - (x^2 - a)/(2x) mod `mod`
    long long am = a.unitMod(prec) % mod;
    __int128 x2 = (__int128)x * x % mod;
    long long diff = (long long)((x2 - am) % mod);
    if (diff < 0) diff += mod;
    long long inv2x = 0;
    {
      long long t = (2 * x) % mod;
      long long r0 = mod, r1 = t, s0 = 0, s1 = 1;
      while (r1 != 0) {
        long long qq = r0 / r1, tt;
        tt = r0 - qq * r1; r0 = r1; r1 = tt;
        tt = s0 - qq * s1; s0 = s1; s1 = tt;
      }
      inv2x = s0 % mod; if (inv2x < 0) inv2x += mod;
    }
    x = (long long)((x - (__int128)diff * inv2x) % mod);
    if (x < 0) x += mod;
  }
  return PadicElement::fromUnit(F, 0, x % m, prec);
}

ExtElement solveNormEquation(const FieldParams& F, const PadicElement& t) {
  if (t.isZero()) throw std::domain_error("solveNormEquation: zero");
  switch (F.kind) {
    case ExtensionKind::Split: {
      // N(a, b) = a*b = t: take (t, 1).
      return ExtElement(F, t, PadicElement::fromInteger(F, 1));
    }
    case ExtensionKind::Inert: {
      // Norm is surjective; valuation of a norm is even.
      if (t.val() % 2 != 0) throw std::domain_error("norm equation: odd valuation (inert)");
      int k = t.val() / 2;
      PadicElement u = t.shift(-t.val());
      // Find (x, y) with x^2 - delta y^2 = u. Try y0 in [0, p) until
      // u + delta y0^2 is a square, then lift x.
      for (long long y0 = 0; y0 < F.p; ++y0) {
        PadicElement y = (y0 == 0) ? PadicElement::zero(F)
                                   : PadicElement::fromInteger(F, y0);
        PadicElement rhs = (y0 == 0) ? u : u + deltaElement(F) * y * y;
        if (rhs.isZero() || rhs.val() != 0) continue;
        auto x = unitSquareRoot(F, rhs);
        if (x) {
          ExtElement z(F, *x, y);
          return ExtElement(F, z.a().shift(k), z.b().shift(k));
        }
      }
      throw std::logic_error("norm equation: no solution found (inert)");
    }
    case ExtensionKind::Ramified: {
      // N(E^x) = (-delta)^Z * squares of units. v(N(z)) = v_E(z).
      int v = t.val();
      PadicElement d = deltaElement(F);
      PadicElement mdPow = PadicElement::fromInteger(F, 1);
      for (int i = 0; i < std::abs(v); ++i) mdPow = mdPow * (-d);
      PadicElement rest = v >= 0 ? t / mdPow : t * mdPow;
      if (v < 0) {
        // rest = t * (-d)^{-v}: recompute properly
        rest = t;
        for (int i = 0; i < -v; ++i) rest = rest * (-d);
      }
      if (rest.val() != 0) throw std::logic_error("norm equation: valuation bookkeeping");
      auto x = unitSquareRoot(F, rest);
      if (!x) throw std::domain_error("norm equation: non-norm (ramified)");
      // z = x * sqrt(delta)^v  has N(z) = x^2 * (-delta)^v = t.
      ExtElement z = ExtElement::fromL(F, *x);
      ExtElement s = ExtElement::sqrtDelta(F);
      ExtElement si = s.inv();
      for (int i = 0; i < std::abs(v); ++i) z = z * (v >= 0 ? s : si);
      return z;
    }
  }
  throw std::logic_error("unreachable");
}

} // namespace thetalift
