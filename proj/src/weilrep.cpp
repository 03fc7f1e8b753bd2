#include "thetalift/weilrep.hpp"

namespace thetalift {

namespace {

int chiPiPow(const FieldParams& F, int k) {
  if (k % 2 == 0) return +1;
  if (F.kind == ExtensionKind::Inert) return -1;
  if (F.kind == ExtensionKind::Ramified) return F.chiPiSign;
  return +1;
}

int chiOfScalar(const FieldParams& F, const PadicElement& a) { return chiQuad(F, a); }

} // namespace

std::vector<DualTerm> gaussDual(const FieldParams& F, const CoordSet& s, bool twisted,
                                bool eSlot, int sVal, int sChi) {
  std::vector<DualTerm> out;
  const int chiM1 = F.chiMinusOne();
  if (eSlot) {
    if (twisted) throw OracleOnly("gaussDual: twisted E-coordinate");
    if (s.kind != SetKind::Ideal) throw OracleOnly("gaussDual: E-coordinate needs an ideal");
    // self-dual E measure: vol(P^m) = q_E^{-m - d/2}; dual set P^{-m-d}
    int m = s.level, d = F.differentExp();
    SymbolicScalar c = SymbolicScalar::qHalfPow(-(2 * m + d) * (F.kind == ExtensionKind::Inert ? 2 : 1));
    // qHalf counts powers of q^{1/2}; q_E = q^2 for inert, q for ramified.
    out.push_back({CoordSet::ideal(-m - d - sVal), false, c});
    return out;
  }
  switch (s.kind) {
    case SetKind::Ideal: {
      if (twisted) throw OracleOnly("gaussDual: twisted ideal");
      SymbolicScalar c = SymbolicScalar::qPow(-s.level);
      out.push_back({CoordSet::ideal(-s.level - sVal), false, c});
      return out;
    }
    case SetKind::Shell: {
      int m = s.level;
      if (!twisted) {
        SymbolicScalar c1 = SymbolicScalar::qPow(-m) - SymbolicScalar::qPow(-m - 1);
        out.push_back({CoordSet::ideal(-m - sVal), false, c1});
        SymbolicScalar c2 = -SymbolicScalar::qPow(-m - 1);
        out.push_back({CoordSet::shell(-m - 1 - sVal), false, c2});
        return out;
      }
      // int_{pi^m o^x} chi(y) psi(s x y) dy
      //   = tau chi(pi) q^{-m-1} chi(s) chi(x) 1_{shell(-m-1-v(s))}(x)
      SymbolicScalar c = SymbolicScalar::tauSym(chiM1) * SymbolicScalar::qPow(-m - 1);
      int sign = chiPiPow(F, 1) * sChi;
      out.push_back({CoordSet::shell(-m - 1 - sVal), true, c.timesSign(sign)});
      return out;
    }
    case SetKind::All:
    case SetKind::ZeroOnly:
      throw OracleOnly("gaussDual: unbounded or degenerate coordinate set");
  }
  return out;
}

SymbolicScalar gaussIntegralValue(const FieldParams& F, const CoordSet& s, bool twisted,
                                  const PadicElement& c) {
  const int chiM1 = F.chiMinusOne();
  int vc = c.isZero() ? INT32_MAX / 2 : c.val();
  switch (s.kind) {
    case SetKind::Ideal: {
      if (twisted) throw OracleOnly("gaussIntegralValue: twisted ideal");
      if (vc >= -s.level) return SymbolicScalar::qPow(-s.level);
      return SymbolicScalar::zero();
    }
    case SetKind::Shell: {
      int m = s.level;
      if (!twisted) {
        if (vc > -m - 1) return SymbolicScalar::qPow(-m) - SymbolicScalar::qPow(-m - 1);
        if (vc == -m - 1) return -SymbolicScalar::qPow(-m - 1);
        return SymbolicScalar::zero();
      }
      if (vc != -m - 1) return SymbolicScalar::zero();
      int sign = chiPiPow(F, 1) * chiQuad(F, c);
      return (SymbolicScalar::tauSym(chiM1) * SymbolicScalar::qPow(-m - 1)).timesSign(sign);
    }
    case SetKind::All:
    case SetKind::ZeroOnly:
      throw OracleOnly("gaussIntegralValue: unbounded set");
  }
  return SymbolicScalar::zero();
}

namespace {

// Slot descriptors for the Fourier pairing on X.
struct SlotCoupling {
  int outSlot;  // index into XSupport storage (0 = E-coordinate, 2 = b, 3 = c; split 0..3)
  int inSlot;
  bool eSlot;
  int sVal;  // valuation of the coupling scalar
  int sChi;  // chi of the coupling scalar (ramified/inert sign)
};

std::vector<SlotCoupling> couplings(const FieldParams& F) {
  if (F.kind == ExtensionKind::Split) {
    // 2<x,y> = y1 x4 - y2 x3 - y3 x2 + y4 x1 : out <- in with scalar +-1
    return {{0, 3, false, 0, 1},
            {1, 2, false, 0, chiQuad(F, PadicElement::fromInteger(F, 1))},
            {2, 1, false, 0, 1},
            {3, 0, false, 0, 1}};
    // (chi is trivial in the split case; signs of -1 do not matter through chi)
  }
  // 2<x,y> = Tr(ax conj(ay)) - delta(bx cy + cx by)
  PadicElement md = -deltaElement(F);
  int mdChi = chiQuad(F, md);
  int r = F.deltaValL();
  return {{0, 0, true, 0, 1}, {2, 3, false, r, mdChi}, {3, 2, false, r, mdChi}};
}

SymbolicScalar haarConstant(const FieldParams& F) {
  // q_E^{-nu_L(delta)} on top of coordinate measure with self-dual E-slot.
  if (F.kind == ExtensionKind::Ramified) return SymbolicScalar::qPow(-1);
  return SymbolicScalar::one();
}

struct SideTerm {
  XSupport s;
  SymbolicScalar coeff;
};

// Fourier transform of one XSupport (no constraints), shared by fourier1 and
// the one-sided seesaw actions.
std::vector<SideTerm> fourierSupport(const FieldParams& F, const XSupport& in) {
  std::vector<SideTerm> acc;
  XSupport base;
  if (F.kind == ExtensionKind::Split)
    base = XSupport::splitBox(CoordSet::all(), CoordSet::all(), CoordSet::all(),
                              CoordSet::all());
  else
    base = XSupport::nonsplitBox(CoordSet::all(), CoordSet::all(), CoordSet::all());
  acc.push_back({base, haarConstant(F)});
  for (const auto& cp : couplings(F)) {
    const CoordSet& inSet = cp.eSlot ? in.eSet : in.lSet[cp.inSlot];
    bool twisted = !cp.eSlot && in.twist[cp.inSlot];
    auto duals = gaussDual(F, inSet, twisted, cp.eSlot, cp.sVal, cp.sChi);
    std::vector<SideTerm> next;
    for (const auto& a : acc) {
      for (const auto& d : duals) {
        SideTerm t = a;
        if (cp.eSlot) t.s.eSet = d.set;
        else {
          t.s.lSet[cp.outSlot] = d.set;
          t.s.twist[cp.outSlot] = d.twisted;
        }
        t.coeff = t.coeff * d.coeff;
        next.push_back(std::move(t));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

} // namespace

SchwartzFunction fourier1(const SchwartzFunction& f) {
  if (f.onPairSpace()) throw std::logic_error("fourier1: X-functions only");
  const FieldParams& F = f.field();
  SchwartzFunction out(F, false);
  for (const auto& t : f.terms()) {
    for (auto& st : fourierSupport(F, t.x)) {
      BoxTerm nt;
      nt.coeff = t.coeff * st.coeff;
      nt.x = st.s;
      out.addTerm(std::move(nt));
    }
  }
  return out.canonicalized();
}

std::optional<GsoMonomial> monomialOf(const GsoElement& h) {
  const FieldParams& F = h.F;
  GsoMonomial m;
  m.F = F;
  m.lambda = h.lambda();
  if (F.kind == ExtensionKind::Split) {
    if (!h.g1.e[1].isZero() || !h.g1.e[2].isZero() || !h.g2.e[1].isZero() ||
        !h.g2.e[2].isZero())
      return std::nullopt;
    // x -> diag(a1,a2) x diag(b2, b1): entries scale
    const PadicElement &a1 = h.g1.e[0], &a2 = h.g1.e[3];
    const PadicElement &b1 = h.g2.e[0], &b2 = h.g2.e[3];
    m.s = {a1 * b2, a1 * b1, a2 * b2, a2 * b1};
    return m;
  }
  if (!h.g.m[1].isZero() || !h.g.m[2].isZero()) return std::nullopt;
  const ExtElement &z1 = h.g.m[0], &z2 = h.g.m[3];
  PadicElement ti = h.t.inv();
  m.wE = (z1 * z2.conj()).scaleL(ti);
  m.s[2] = z1.norm() * ti;
  m.s[3] = z2.norm() * ti;
  return m;
}

namespace {

XSupport transportSupport(const FieldParams& F, const XSupport& in, const GsoMonomial& mono,
                          bool inverse, SymbolicScalar& coeff) {
  // g(x) = f(sigma x) with sigma the (possibly inverted) monomial scalings.
  XSupport out = in;
  auto applyL = [&](int slot) {
    const PadicElement& sc = mono.s[slot];
    int v = inverse ? -sc.val() : sc.val();
    out.lSet[slot] = CoordSet{in.lSet[slot].kind,
                              in.lSet[slot].kind == SetKind::Ideal ||
                                      in.lSet[slot].kind == SetKind::Shell
                                  ? in.lSet[slot].level - v
                                  : in.lSet[slot].level};
    if (in.twist[slot]) coeff = coeff.timesSign(chiOfScalar(F, sc));
  };
  if (F.kind == ExtensionKind::Split) {
    for (int i = 0; i < 4; ++i) applyL(i);
  } else {
    int ve = inverse ? -mono.wE.valE() : mono.wE.valE();
    if (in.eSet.kind == SetKind::Ideal || in.eSet.kind == SetKind::Shell)
      out.eSet = CoordSet{in.eSet.kind, in.eSet.level - ve};
    applyL(2);
    applyL(3);
  }
  return out;
}

SchwartzFunction pullbackMonomial(const SchwartzFunction& f, const GsoMonomial& mono) {
  // (f o h^{-1})(x) = f(h^{-1} x): argument scaling by the inverse monomial.
  const FieldParams& F = f.field();
  GsoMonomial inv = mono;
  if (F.kind == ExtensionKind::Split) {
    for (int i = 0; i < 4; ++i) inv.s[i] = mono.s[i].inv();
  } else {
    inv.wE = mono.wE.inv();
    inv.s[2] = mono.s[2].inv();
    inv.s[3] = mono.s[3].inv();
  }
  int lamVal = mono.lambda.val();
  SchwartzFunction out(F, f.onPairSpace());
  for (const auto& t : f.terms()) {
    BoxTerm nt = t;
    SymbolicScalar c = t.coeff;
    nt.x = transportSupport(F, t.x, inv, false, c);
    if (f.onPairSpace()) nt.y = transportSupport(F, t.y, inv, false, c);
    for (auto& fc : nt.constraints) fc.level += lamVal;
    nt.coeff = c;
    out.addTerm(std::move(nt));
  }
  return out.canonicalized();
}

} // namespace

SchwartzFunction gsoPullback(const GsoElement& h, const SchwartzFunction& f) {
  auto mono = monomialOf(h);
  if (!mono) throw OracleOnly("gsoPullback: non-monomial GSO element");
  return pullbackMonomial(f, *mono);
}

SchwartzFunction sideScale(const SchwartzFunction& f, bool ySide, const PadicElement& a) {
  if (!f.onPairSpace()) throw std::logic_error("sideScale: pair space expected");
  const FieldParams& F = f.field();
  if (a.isZero()) throw std::domain_error("sideScale: zero scalar");
  SchwartzFunction out(F, true);
  for (const auto& t : f.terms()) {
    BoxTerm nt = t;
    XSupport& sp = ySide ? nt.y : nt.x;
    SymbolicScalar c = t.coeff;
    int v = a.val();
    auto sc = [&](CoordSet& s, int shift) {
      if (s.kind == SetKind::Ideal || s.kind == SetKind::Shell) s.level -= shift;
    };
    if (F.kind == ExtensionKind::Split) {
      for (int i = 0; i < 4; ++i) {
        sc(sp.lSet[i], v);
        if (sp.twist[i]) c = c.timesSign(chiOfScalar(F, a));
      }
    } else {
      sc(sp.eSet, F.e() * v);
      for (int i = 2; i < 4; ++i) {
        sc(sp.lSet[i], v);
        if (sp.twist[i]) c = c.timesSign(chiOfScalar(F, a));
      }
    }
    // constraints: <a x, a x> = a^2 <x,x>, <a x, y> = a <x, y>
    for (auto& fc : nt.constraints) {
      if (fc.form == (ySide ? QuadForm::YY : QuadForm::XX)) fc.level -= 2 * v;
      if (fc.form == QuadForm::XY) fc.level -= v;
    }
    nt.coeff = c;
    out.addTerm(std::move(nt));
  }
  return out.canonicalized();
}

SchwartzFunction sideFourier(const SchwartzFunction& f, bool ySide) {
  if (!f.onPairSpace()) throw std::logic_error("sideFourier: pair space expected");
  const FieldParams& F = f.field();
  SchwartzFunction out(F, true);
  for (const auto& t : f.terms()) {
    for (const auto& fc : t.constraints) {
      bool touches = (fc.form == QuadForm::XY) ||
                     (fc.form == (ySide ? QuadForm::YY : QuadForm::XX));
      if (touches)
        throw OracleOnly("sideFourier: constraint entangles the transformed side");
    }
    const XSupport& side = ySide ? t.y : t.x;
    for (auto& st : fourierSupport(F, side)) {
      BoxTerm nt = t;
      nt.coeff = t.coeff * st.coeff;
      (ySide ? nt.y : nt.x) = st.s;
      out.addTerm(std::move(nt));
    }
  }
  return out.canonicalized();
}

SchwartzFunction sideNegate(const SchwartzFunction& f, bool ySide) {
  const FieldParams& F = f.field();
  SchwartzFunction out(F, f.onPairSpace());
  int cm = F.chiMinusOne();
  for (const auto& t : f.terms()) {
    BoxTerm nt = t;
    const XSupport& sp = ySide ? t.y : t.x;
    int sign = 1;
    for (int i = 0; i < 4; ++i)
      if (sp.twist[i]) sign *= cm;
    nt.coeff = t.coeff.timesSign(sign);
    out.addTerm(std::move(nt));
  }
  return out.canonicalized();
}

int formLowerBound(const FieldParams& F, const BoxTerm& t, QuadForm form) {
  int r = F.deltaValL();
  auto minL = [&](const XSupport& s, int i) { return s.lSet[i].minVal(); };
  auto minE = [&](const XSupport& s) { return s.eSet.minVal(); };
  int bound;
  if (F.kind == ExtensionKind::Split) {
    const XSupport& a = form == QuadForm::YY ? t.y : t.x;
    const XSupport& b = form == QuadForm::XX ? t.x : t.y;
    bound = std::min(minL(a, 0) + minL(b, 3), minL(a, 1) + minL(b, 2));
    if (form == QuadForm::XY)
      bound = std::min({minL(t.x, 0) + minL(t.y, 3), minL(t.x, 3) + minL(t.y, 0),
                        minL(t.x, 1) + minL(t.y, 2), minL(t.x, 2) + minL(t.y, 1)});
  } else {
    if (form == QuadForm::XY) {
      // <x,y> = (1/2) Tr(ax conj(ay)) - (delta/2)(bx cy + cx by)
      // Tr(P^k) lies in p^ceil(k/2) (ramified) resp. p^k (inert).
      int eP = minE(t.x) + minE(t.y);
      int trV = eP;
      if (F.kind == ExtensionKind::Ramified)
        trV = (eP >= 0) ? (eP + 1) / 2 : -((-eP) / 2);
      bound = std::min({trV, r + minL(t.x, 2) + minL(t.y, 3), r + minL(t.x, 3) + minL(t.y, 2)});
    } else {
      const XSupport& s = form == QuadForm::XX ? t.x : t.y;
      // <x,x> = N(a) - delta b c ; v_L(N(a)) = nu_E(a) (ramified), 2 nu_E(a) (inert)
      int na = F.kind == ExtensionKind::Ramified ? minE(s) : 2 * minE(s);
      bound = std::min(na, r + minL(s, 2) + minL(s, 3));
    }
  }
  for (const auto& fc : t.constraints)
    if (fc.form == form) bound = std::max(bound, fc.level);
  return bound;
}

namespace {

int threshold(const CoordSet& s) {
  switch (s.kind) {
    case SetKind::Ideal: return s.level;
    case SetKind::Shell: return s.level + 1;
    default: throw OracleOnly("blockDiag: unbounded coordinate set");
  }
}

SchwartzFunction applyBlockDiagGeneral(const SchwartzFunction& f, const Mat2L& A) {
  const FieldParams& F = f.field();
  const PadicElement &a1 = A.e[0], &a2 = A.e[1], &a3 = A.e[2], &a4 = A.e[3];
  PadicElement det = A.det();
  if (a1.isZero() || a4.isZero()) throw OracleOnly("blockDiag: antidiagonal block");
  bool hasMix = !a2.isZero() || !a3.isZero();
  if (!hasMix) {
    // exact path: (x,y) -> (a1 x, a4 y)
    SchwartzFunction out = sideScale(sideScale(f, false, a1), true, a4);
    SymbolicScalar mult = SymbolicScalar::qPow(-2 * det.val());
    return out.scaled(mult.timesSign(chiOfScalar(F, det))).canonicalized();
  }
  if (a1.val() != 0 || a4.val() != 0)
    throw OracleOnly("blockDiag: mixed block needs unit diagonal entries");
  int v2 = a2.isZero() ? INT32_MAX / 4 : a2.val();
  int v3 = a3.isZero() ? INT32_MAX / 4 : a3.val();
  SchwartzFunction out(F, true);
  for (const auto& t : f.terms()) {
    if (!t.constraints.empty())
      throw OracleOnly("blockDiag: general block with form constraints");
    SymbolicScalar c = t.coeff.timesSign(chiOfScalar(F, det));
    c = c * SymbolicScalar::qPow(-2 * det.val());
    // per-slot domination: a3 * yBox strictly inside xBox's stability zone,
    // a2 * xBox inside yBox's. Combined with the same bounds for A^{-1}
    // (which has the same entry valuations) this certifies that the argument
    // map permutes the support and fixes twisted shells' leading digits.
    auto slotCheck = [&](const CoordSet& bx, const CoordSet& by, bool eSlot) {
      int e = eSlot ? F.e() : 1;
      if (v3 * e + by.minVal() < threshold(bx))
        throw OracleOnly("blockDiag: lower-left entry disturbs the x box");
      if (v2 * e + bx.minVal() < threshold(by))
        throw OracleOnly("blockDiag: upper-right entry disturbs the y box");
    };
    if (F.kind == ExtensionKind::Split) {
      for (int i = 0; i < 4; ++i) slotCheck(t.x.lSet[i], t.y.lSet[i], false);
    } else {
      slotCheck(t.x.eSet, t.y.eSet, true);
      slotCheck(t.x.lSet[2], t.y.lSet[2], false);
      slotCheck(t.x.lSet[3], t.y.lSet[3], false);
    }
    // twists pick up the dominating diagonal scalar
    for (int i = 0; i < 4; ++i) {
      if (t.x.twist[i]) c = c.timesSign(chiOfScalar(F, a1));
      if (t.y.twist[i]) c = c.timesSign(chiOfScalar(F, a4));
    }
    BoxTerm nt = t;
    nt.coeff = c;
    out.addTerm(std::move(nt));
  }
  return out.canonicalized();
}

SchwartzFunction applyUpperSym(const SchwartzFunction& f, const GenUpperSym& g) {
  const FieldParams& F = f.field();
  auto need = [&](const BoxTerm& t, const PadicElement& b, QuadForm form, const char* which) {
    if (b.isZero()) return;
    int lb = formLowerBound(F, t, form);
    int extra = form == QuadForm::XY ? 1 : 0; // psi(2 b2 <x,y>): |2| = 1, odd p
    (void)extra;
    if (b.val() + lb < 0)
      throw OracleOnly(std::string("upperSym: psi multiplier not certifiable on ") + which);
  };
  for (const auto& t : f.terms()) {
    need(t, g.b1, QuadForm::XX, "<x,x>");
    need(t, g.b2, QuadForm::XY, "<x,y>");
    need(t, g.b3, QuadForm::YY, "<y,y>");
  }
  return f;
}

} // namespace

SchwartzFunction averageUpperXX(const SchwartzFunction& f, int N) {
  const FieldParams& F = f.field();
  SchwartzFunction out(F, true);
  for (const auto& t : f.terms()) {
    if (formLowerBound(F, t, QuadForm::XX) < N - 1)
      throw OracleOnly("averageUpperXX: <x,x> bound below N-1");
    BoxTerm nt = t;
    nt.coeff = t.coeff * SymbolicScalar::integer(F.q());
    nt.constraints.push_back({QuadForm::XX, N});
    out.addTerm(std::move(nt));
  }
  return out.canonicalized();
}

SchwartzFunction averageUpperYY(const SchwartzFunction& f) {
  const FieldParams& F = f.field();
  SchwartzFunction out(F, true);
  for (const auto& t : f.terms()) {
    if (formLowerBound(F, t, QuadForm::YY) < -1)
      throw OracleOnly("averageUpperYY: <y,y> bound below -1");
    BoxTerm nt = t;
    nt.coeff = t.coeff * SymbolicScalar::integer(F.q());
    nt.constraints.push_back({QuadForm::YY, 0});
    out.addTerm(std::move(nt));
  }
  return out.canonicalized();
}

SchwartzFunction weilApply(const Gsp4Gen& g, const SchwartzFunction& f) {
  const FieldParams& F = f.field();
  const int chiM1 = F.chiMinusOne();
  SymbolicScalar gamma = SymbolicScalar::gammaSym(chiM1);
  if (std::holds_alternative<GenGsoOnly>(g)) {
    const auto& h = std::get<GenGsoOnly>(g).h;
    PadicElement lam = h.lambda();
    if (lam.isZero() || lam.val() != 0 || lam.unitMod(lam.prec()) != 1)
      throw std::logic_error("weilApply(GsoOnly): similitude must be 1");
    return gsoPullback(h, f);
  }
  if (std::holds_alternative<GenBlockDiag>(g)) {
    return applyBlockDiagGeneral(f, std::get<GenBlockDiag>(g).A);
  }
  if (std::holds_alternative<GenUpperSym>(g)) {
    return applyUpperSym(f, std::get<GenUpperSym>(g));
  }
  if (std::holds_alternative<GenWeylJ>(g)) {
    // J = seesaw(w, w): gamma^2 * (F1 (x) F1)
    SchwartzFunction r = sideFourier(sideFourier(f, false), true);
    return r.scaled(gamma * gamma).canonicalized();
  }
  if (std::holds_alternative<GenS2>(g)) {
    return sideFourier(f, true).scaled(gamma).canonicalized();
  }
  if (std::holds_alternative<GenTN>(g)) {
    int N = std::get<GenTN>(g).N;
    // omega_1 of [[0, pi^-N],[-pi^N, 0]] = omega_1(diag(pi^-N, pi^N)) o omega_1(w)
    SchwartzFunction r = sideFourier(f, false).scaled(gamma);
    PadicElement a = PadicElement::uniformizerPow(F, -N);
    r = sideScale(r, false, a);
    SymbolicScalar mult = SymbolicScalar::qPow(2 * N).timesSign(chiPiPow(F, N));
    return r.scaled(mult).canonicalized();
  }
  if (std::holds_alternative<GenSimilitude>(g)) {
    const auto& s = std::get<GenSimilitude>(g);
    PadicElement lamH = s.h.lambda();
    if (!lamH.equalUpToPrec(s.lam))
      throw std::logic_error("weilApply(Similitude): companion similitude mismatch");
    SchwartzFunction r = gsoPullback(s.h, f);
    return r.scaled(SymbolicScalar::qPow(2 * s.lam.val())).canonicalized();
    // |lambda|^{-2} = q^{2 v(lambda)}
  }
  throw std::logic_error("weilApply: unhandled generator");
}

} // namespace thetalift
