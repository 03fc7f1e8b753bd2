#include "thetalift/quadspace.hpp"

namespace thetalift {

namespace {

Mat2E toMatE(const XPoint& x) {
  const FieldParams& F = x.F;
  Mat2E m;
  m.m[0] = ExtElement(F, x.c[0], x.c[1]);
  m.m[1] = ExtElement(F, PadicElement::zero(F), x.c[2]);
  m.m[2] = ExtElement(F, PadicElement::zero(F), x.c[3]);
  m.m[3] = ExtElement(F, x.c[0], -x.c[1]);
  return m;
}

XPoint fromMatE(const FieldParams& F, const Mat2E& m) {
  // Closure: entries must have the X shape.
  const ExtElement& a = m.m[0];
  const ExtElement& d = m.m[3];
  if (!d.a().equalUpToPrec(a.a()) || !d.b().equalUpToPrec(-a.b()))
    throw std::logic_error("rhoApply: image left the space X (diagonal)");
  if (!m.m[1].a().isZero() || !m.m[2].a().isZero())
    throw std::logic_error("rhoApply: image left the space X (off-diagonal)");
  return XPoint::make(F, a.a(), a.b(), m.m[1].b(), m.m[2].b());
}

Mat2L mulL(const Mat2L& A, const Mat2L& B) {
  Mat2L r;
  r.e[0] = A.e[0] * B.e[0] + A.e[1] * B.e[2];
  r.e[1] = A.e[0] * B.e[1] + A.e[1] * B.e[3];
  r.e[2] = A.e[2] * B.e[0] + A.e[3] * B.e[2];
  r.e[3] = A.e[2] * B.e[1] + A.e[3] * B.e[3];
  return r;
}

Mat2L starL(const Mat2L& A) {
  Mat2L r;
  r.e[0] = A.e[3];
  r.e[1] = -A.e[1];
  r.e[2] = -A.e[2];
  r.e[3] = A.e[0];
  return r;
}

Mat2L invL(const Mat2L& A) {
  PadicElement di = A.det().inv();
  Mat2L r = starL(A);
  for (auto& x : r.e) x = x * di;
  return r;
}

} // namespace

std::string XPoint::str() const {
  return "(" + c[0].str() + ", " + c[1].str() + ", " + c[2].str() + ", " + c[3].str() + ")";
}

PadicElement pairing(const XPoint& x, const XPoint& y) {
  const FieldParams& F = x.F;
  PadicElement two = PadicElement::fromInteger(F, 2);
  if (F.kind == ExtensionKind::Split) {
    // 2<x,y> = x4 y1 - x3 y2 - x2 y3 + x1 y4
    PadicElement s = x.c[3] * y.c[0] - x.c[2] * y.c[1] - x.c[1] * y.c[2] + x.c[0] * y.c[3];
    return s / two;
  }
  PadicElement d = deltaElement(F);
  // 2<x,y> = 2(c1x c1y - d c2x c2y) - d (c3x c4y + c4x c3y)
  PadicElement s = two * (x.c[0] * y.c[0] - d * x.c[1] * y.c[1]) -
                   d * (x.c[2] * y.c[3] + x.c[3] * y.c[2]);
  return s / two;
}

PadicElement qForm(const XPoint& x) {
  const FieldParams& F = x.F;
  if (F.kind == ExtensionKind::Split) return x.c[0] * x.c[3] - x.c[1] * x.c[2];
  PadicElement d = deltaElement(F);
  return x.c[0] * x.c[0] - d * x.c[1] * x.c[1] - d * x.c[2] * x.c[3];
}

std::pair<XPoint, XPoint> basePoints(const FieldParams& F) {
  auto z = PadicElement::zero(F);
  auto one = PadicElement::fromInteger(F, 1);
  auto minusTwo = PadicElement::fromInteger(F, -2);
  if (F.kind == ExtensionKind::Split) {
    XPoint x1 = XPoint::make(F, z, one, z, z);
    XPoint x2 = XPoint::make(F, z, z, minusTwo, z);
    return {x1, x2};
  }
  // x1 = [[0, sqrt(d)],[0,0]]  -> b = 1
  // x2 = [[0,0],[-2 sqrt(d)/d, 0]] -> c = -2/d
  XPoint x1 = XPoint::make(F, z, z, one, z);
  XPoint x2 = XPoint::make(F, z, z, z, minusTwo / deltaElement(F));
  return {x1, x2};
}

GsoElement GsoElement::splitPair(const FieldParams& F, Mat2L a, Mat2L b) {
  GsoElement h;
  h.F = F;
  h.g1 = std::move(a);
  h.g2 = std::move(b);
  return h;
}

GsoElement GsoElement::nonsplit(const FieldParams& F, PadicElement t, Mat2E g) {
  GsoElement h;
  h.F = F;
  h.t = std::move(t);
  h.g = std::move(g);
  return h;
}

GsoElement GsoElement::identity(const FieldParams& F) {
  auto one = PadicElement::fromInteger(F, 1);
  auto z = PadicElement::zero(F);
  if (F.kind == ExtensionKind::Split) {
    Mat2L id;
    id.e = {one, z, z, one};
    return splitPair(F, id, id);
  }
  Mat2E id;
  id.m[0] = ExtElement::one(F);
  id.m[1] = ExtElement::zero(F);
  id.m[2] = ExtElement::zero(F);
  id.m[3] = ExtElement::one(F);
  return nonsplit(F, one, id);
}

PadicElement GsoElement::lambda() const {
  if (F.kind == ExtensionKind::Split) return g1.det() * g2.det();
  PadicElement ti = t.inv();
  return ti * ti * g.det().norm();
}

GsoElement GsoElement::compose(const GsoElement& o) const {
  if (F.kind == ExtensionKind::Split)
    return splitPair(F, mulL(g1, o.g1), mulL(g2, o.g2));
  return nonsplit(F, t * o.t, g.mul(o.g));
}

GsoElement GsoElement::inverse() const {
  if (F.kind == ExtensionKind::Split) return splitPair(F, invL(g1), invL(g2));
  return nonsplit(F, t.inv(), g.inv());
}

XPoint rhoApply(const GsoElement& h, const XPoint& x) {
  const FieldParams& F = x.F;
  if (F.kind == ExtensionKind::Split) {
    // g1 * x * g2^*
    Mat2L xm;
    xm.e = x.c;
    Mat2L r = mulL(mulL(h.g1, xm), starL(h.g2));
    return XPoint::make(F, r.e[0], r.e[1], r.e[2], r.e[3]);
  }
  // t^{-1} g x conj(g)^*
  Mat2E xm = toMatE(x);
  Mat2E r = h.g.mul(xm).mul(h.g.galois().star());
  PadicElement ti = h.t.inv();
  for (auto& z : r.m) z = z.scaleL(ti);
  return fromMatE(F, r);
}

bool certifySimilitude(const GsoElement& h) {
  const FieldParams& F = h.F;
  PadicElement lam = h.lambda();
  auto z = PadicElement::zero(F);
  auto one = PadicElement::fromInteger(F, 1);
  std::array<XPoint, 4> basis = {
      XPoint::make(F, one, z, z, z), XPoint::make(F, z, one, z, z),
      XPoint::make(F, z, z, one, z), XPoint::make(F, z, z, z, one)};
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      XPoint hi = rhoApply(h, basis[i]);
      XPoint hj = rhoApply(h, basis[j]);
      PadicElement lhs = pairing(hi, hj);
      PadicElement rhs = lam * pairing(basis[i], basis[j]);
      if (lhs.isZero() != rhs.isZero()) return false;
      if (!lhs.isZero() && !lhs.equalUpToPrec(rhs)) return false;
    }
  }
  return true;
}

bool fixesBasePoints(const GsoElement& h) {
  auto [x1, x2] = basePoints(h.F);
  for (const XPoint* x : {&x1, &x2}) {
    XPoint y = rhoApply(h, *x);
    for (int i = 0; i < 4; ++i) {
      if (y.c[i].isZero() != x->c[i].isZero()) return false;
      if (!y.c[i].isZero() && !y.c[i].equalUpToPrec(x->c[i])) return false;
    }
  }
  return true;
}

bool inStabilizer(const GsoElement& h) {
  const FieldParams& F = h.F;
  bool closed;
  if (F.kind == ExtensionKind::Split) {
    // rho(diag(a,1), diag(a^-1,1)) up to the kernel (z, z^-1): both matrices
    // diagonal, and g2 = diag(1/(g1_11), 1/(g1_22)) after scaling.
    bool diag = h.g1.e[1].isZero() && h.g1.e[2].isZero() && h.g2.e[1].isZero() &&
                h.g2.e[2].isZero();
    if (!diag) {
      closed = false;
    } else {
      // need g1 = z diag(a,1), g2 = z^-1 diag(a^-1,1):
      // so g1_11 g2_11 = 1 and g1_22 g2_22 = 1.
      PadicElement p11 = h.g1.e[0] * h.g2.e[0];
      PadicElement p22 = h.g1.e[3] * h.g2.e[3];
      closed = !p11.isZero() && p11.val() == 0 && p11.unitMod(p11.prec()) == 1 &&
               !p22.isZero() && p22.val() == 0 && p22.unitMod(p22.prec()) == 1;
    }
  } else {
    // rho(N(z), z diag(1,u)) with N(u) = 1: g diagonal, t = N(g_11),
    // N(g_22 / g_11) = 1.
    bool diag = h.g.m[1].isZero() && h.g.m[2].isZero();
    if (!diag || h.g.m[0].isZero() || h.g.m[3].isZero()) {
      closed = false;
    } else {
      PadicElement n11 = h.g.m[0].norm();
      PadicElement ratioNorm = (h.g.m[3] * h.g.m[0].inv()).norm();
      bool tMatches = n11.equalUpToPrec(h.t);
      bool normOne = !ratioNorm.isZero() && ratioNorm.val() == 0 &&
                     ratioNorm.unitMod(ratioNorm.prec()) == 1;
      closed = tMatches && normOne;
    }
  }
  bool direct = fixesBasePoints(h);
  if (closed != direct)
    throw std::logic_error("inStabilizer: closed form and fixed-point test disagree");
  return closed;
}

} // namespace thetalift
