#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "thetalift/localfield.hpp"

namespace thetalift {

// 2x2 matrices over L and over E. Entries row-major.
struct Mat2L {
  std::array<PadicElement, 4> e;
  static Mat2L make(const FieldParams& F, PadicElement a, PadicElement b,
                    PadicElement c, PadicElement d) {
    (void)F;
    Mat2L m;
    m.e = {std::move(a), std::move(b), std::move(c), std::move(d)};
    return m;
  }
  static Mat2L diag(const FieldParams& F, const PadicElement& a, const PadicElement& d) {
    auto z = PadicElement::zero(F);
    return make(F, a, z, z, d);
  }
  PadicElement det() const { return e[0] * e[3] - e[1] * e[2]; }
};

struct Mat2E {
  std::array<ExtElement, 4> m;
  ExtElement det() const { return m[0] * m[3] - m[1] * m[2]; }
  Mat2E mul(const Mat2E& o) const {
    Mat2E r;
    r.m[0] = m[0] * o.m[0] + m[1] * o.m[2];
    r.m[1] = m[0] * o.m[1] + m[1] * o.m[3];
    r.m[2] = m[2] * o.m[0] + m[3] * o.m[2];
    r.m[3] = m[2] * o.m[1] + m[3] * o.m[3];
    return r;
  }
  // main involution (adjugate)
  Mat2E star() const {
    Mat2E r;
    r.m[0] = m[3];
    r.m[1] = -m[1];
    r.m[2] = -m[2];
    r.m[3] = m[0];
    return r;
  }
  Mat2E galois() const {
    Mat2E r;
    for (int i = 0; i < 4; ++i) r.m[i] = m[i].conj();
    return r;
  }
  Mat2E inv() const {
    ExtElement d = det();
    ExtElement di = d.inv();
    Mat2E r = star();
    for (int i = 0; i < 4; ++i) r.m[i] = r.m[i] * di;
    return r;
  }
};

// A point of the 4-dimensional quadratic space X in canonical coordinates.
//
// split:     the matrix [[c1, c2], [c3, c4]] in M(2, L)
// non-split: the matrix [[c1 + c2 sqrt(d), c3 sqrt(d)], [c4 sqrt(d), c1 - c2 sqrt(d)]]
struct XPoint {
  FieldParams F;
  std::array<PadicElement, 4> c;

  static XPoint make(const FieldParams& F, PadicElement c1, PadicElement c2,
                     PadicElement c3, PadicElement c4) {
    return XPoint{F, {std::move(c1), std::move(c2), std::move(c3), std::move(c4)}};
  }
  static XPoint zero(const FieldParams& F) {
    auto z = PadicElement::zero(F);
    return make(F, z, z, z, z);
  }
  XPoint negate() const {
    return make(F, -c[0], -c[1], -c[2], -c[3]);
  }
  // E-coordinate a = c1 + c2 sqrt(d) (non-split only).
  ExtElement aCoord() const { return ExtElement(F, c[0], c[1]); }
  std::string str() const;
};

// The symmetric pairing <x,y> = (1/2) Tr(x y*). In canonical coordinates:
//   split:     2<x,y> = x4 y1 - x3 y2 - x2 y3 + x1 y4
//   non-split: 2<x,y> = Tr(ax conj(ay)) - delta (bx cy + cx by)
PadicElement pairing(const XPoint& x, const XPoint& y);
// <x,x> = det(x) in both models.
PadicElement qForm(const XPoint& x);

// The base points x1, x2: split ([[0,1],[0,0]], [[0,0],[-2,0]]);
// non-split ([[0,sqrt(d)],[0,0]], [[0,0],[-2 sqrt(d)/d, 0]]).
std::pair<XPoint, XPoint> basePoints(const FieldParams& F);

// Element of GSO(X) via the exact sequences:
//   split:     rho(g1, g2) x = g1 x g2*,          lambda = det g1 det g2
//   non-split: rho(t, g)  x = t^-1 g x conj(g)*,  lambda = t^-2 N(det g)
struct GsoElement {
  FieldParams F;
  // split data
  Mat2L g1, g2;
  // non-split data
  PadicElement t;
  Mat2E g;

  static GsoElement splitPair(const FieldParams& F, Mat2L a, Mat2L b);
  static GsoElement nonsplit(const FieldParams& F, PadicElement t, Mat2E g);
  static GsoElement identity(const FieldParams& F);

  PadicElement lambda() const;
  GsoElement compose(const GsoElement& o) const; // this after o:  h = this * o
  GsoElement inverse() const;
};

XPoint rhoApply(const GsoElement& h, const XPoint& x);

// Exact check <hx, hy> = lambda <x,y> on the canonical basis.
bool certifySimilitude(const GsoElement& h);

// h in SO(X) and h fixes both base points. Closed form per the stabilizer
// lemma, cross-checked against the direct fixed-point test.
bool inStabilizer(const GsoElement& h);
bool fixesBasePoints(const GsoElement& h);

} // namespace thetalift
