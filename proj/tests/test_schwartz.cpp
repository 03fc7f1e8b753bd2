#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "thetalift/schwartz.hpp"

using namespace thetalift;

namespace {

PadicElement rnd(const FieldParams& F, std::mt19937& rng, int loVal = -2, int hiVal = 3) {
  if (rng() % 7 == 0) return PadicElement::zero(F);
  int v = loVal + int(rng() % (hiVal - loVal));
  long long u = 1 + rng() % (F.p - 1) + F.p * (rng() % (F.p * F.p));
  if (u % F.p == 0) u += 1;
  Rat r = v >= 0 ? Rat(u) * Rat::pow(Rat(F.p), v) : Rat(u, Rat::pow(Rat(F.p), -v).num());
  return PadicElement::fromRational(F, r);
}

XPoint rndPoint(const FieldParams& F, std::mt19937& rng) {
  return XPoint::make(F, rnd(F, rng), rnd(F, rng), rnd(F, rng), rnd(F, rng));
}

} // namespace

TEST_CASE("lattice indicator evaluates to 1 at the identity matrix") {
  for (auto F : {FieldParams::split(3), FieldParams::inert(5), FieldParams::ramified(7)}) {
    auto f = latticeIndicator(F);
    auto one = PadicElement::fromInteger(F, 1);
    auto z = PadicElement::zero(F);
    // identity matrix: split (1,0,0,1); nonsplit a=1, b=c=0
    XPoint pt = F.kind == ExtensionKind::Split ? XPoint::make(F, one, z, z, one)
                                               : XPoint::make(F, one, z, z, z);
    CHECK(f.evaluate(pt) == SymbolicScalar::one());
    // far outside
    XPoint far = XPoint::make(F, PadicElement::fromUnit(F, -3, 1, 8), z, z, z);
    CHECK(f.evaluate(far).isZero());
  }
}

TEST_CASE("split phi_1 support box") {
  auto F = FieldParams::split(5);
  // phi_1 for (n1, n2) = (1, 0): box [p^0, o; p^1, p^1]
  auto phi1 = indicatorX(F, XSupport::splitBox(CoordSet::ideal(0), CoordSet::ideal(0),
                                               CoordSet::ideal(1), CoordSet::ideal(1)));
  auto z = PadicElement::zero(F);
  XPoint inside = XPoint::make(F, z, z, PadicElement::fromUnit(F, 1, 1, 8), z);
  CHECK(phi1.evaluate(inside) == SymbolicScalar::one());
  XPoint outside = XPoint::make(F, PadicElement::fromUnit(F, -1, 1, 8), z, z, z);
  CHECK(phi1.evaluate(outside).isZero());
}

TEST_CASE("canonicalization merges and cancels") {
  auto F = FieldParams::inert(3);
  auto f = latticeIndicator(F);
  auto g = f + f.scaled(SymbolicScalar::integer(-1));
  CHECK(g.canonicalized().empty());
  auto h = (f + f).canonicalized();
  REQUIRE(h.terms().size() == 1);
  CHECK(h.terms()[0].coeff == SymbolicScalar::integer(2));
}

TEST_CASE("schwartzEqual: canonical and atom-level equality") {
  auto F = FieldParams::ramified(3);
  auto f = latticeIndicator(F);
  CHECK(schwartzEqual(f, f).equal);
  // split a set: 1_{I(0)} = 1_{S(0)} + 1_{I(1)} on the c coordinate
  auto lhs = indicatorX(F, XSupport::nonsplitBox(CoordSet::ideal(0), CoordSet::ideal(0),
                                                 CoordSet::ideal(0)));
  auto r1 = indicatorX(F, XSupport::nonsplitBox(CoordSet::ideal(0), CoordSet::ideal(0),
                                                CoordSet::shell(0)));
  auto r2 = indicatorX(F, XSupport::nonsplitBox(CoordSet::ideal(0), CoordSet::ideal(0),
                                                CoordSet::ideal(1)));
  auto res = schwartzEqual(lhs, r1 + r2);
  CHECK(res.equal);
  CHECK(res.method == EqualityMethod::AtomDecomposition);
  // and a genuinely different function
  auto res2 = schwartzEqual(lhs, r1);
  CHECK(!res2.equal);
}

TEST_CASE("schwartzEqual detects twisted differences") {
  auto F = FieldParams::ramified(5);
  auto plain = indicatorX(F, XSupport::nonsplitBox(CoordSet::ideal(0), CoordSet::ideal(0),
                                                   CoordSet::shell(0)));
  auto twisted = indicatorX(F, XSupport::nonsplitBox(CoordSet::ideal(0), CoordSet::ideal(0),
                                                     CoordSet::shell(0), false, true));
  CHECK(!schwartzEqual(plain, twisted).equal);
  CHECK(schwartzEqual(twisted, twisted).equal);
}

TEST_CASE("E-ideal split into E-shells (inert)") {
  auto F = FieldParams::inert(3);
  auto lhs = indicatorX(F, XSupport::nonsplitBox(CoordSet::ideal(0), CoordSet::ideal(0),
                                                 CoordSet::ideal(0)));
  auto s0 = indicatorX(F, XSupport::nonsplitBox(CoordSet::shell(0), CoordSet::ideal(0),
                                                CoordSet::ideal(0)));
  auto s1 = indicatorX(F, XSupport::nonsplitBox(CoordSet::ideal(1), CoordSet::ideal(0),
                                                CoordSet::ideal(0)));
  auto res = schwartzEqual(lhs, s0 + s1);
  CHECK(res.equal);
}

TEST_CASE("local constancy: congruent points evaluate equal") {
  for (auto F : {FieldParams::split(3), FieldParams::ramified(3)}) {
    SchwartzFunction f(F, false);
    if (F.kind == ExtensionKind::Split) {
      f = indicatorX(F, XSupport::splitBox(CoordSet::ideal(1), CoordSet::shell(0),
                                           CoordSet::ideal(-1), CoordSet::ideal(2)));
    } else {
      f = indicatorX(F, XSupport::nonsplitBox(CoordSet::ideal(1), CoordSet::shell(-1),
                                              CoordSet::ideal(0), true, false));
    }
    std::mt19937 rng(97);
    int depth = 4;
    for (int i = 0; i < 300; ++i) {
      XPoint a = rndPoint(F, rng);
      // perturb by something in p^depth
      XPoint b = a;
      int slot = rng() % 4;
      auto eps = PadicElement::fromUnit(F, depth + (rng() % 2), 1 + rng() % (F.p - 1), 8);
      try {
        b.c[slot] = a.c[slot] + eps;
        CHECK(f.evaluate(a) == f.evaluate(b));
      } catch (const PrecisionExhausted&) { continue; }
    }
  }
}

TEST_CASE("tensor respects evaluation multiplicatively") {
  auto F = FieldParams::inert(5);
  auto f1 = indicatorX(F, XSupport::nonsplitBox(CoordSet::ideal(1), CoordSet::ideal(0),
                                                CoordSet::ideal(2)));
  auto f2 = latticeIndicator(F);
  auto T = SchwartzFunction::tensor(f1, f2);
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    XPoint x = rndPoint(F, rng), y = rndPoint(F, rng);
    CHECK(T.evaluate(x, y) == f1.evaluate(x) * f2.evaluate(y));
  }
}

TEST_CASE("scale argument moves boxes") {
  auto F = FieldParams::split(3);
  auto f = latticeIndicator(F); // box o^4
  auto g = f.scaleArgument(PadicElement::uniformizerPow(F, 1)); // g(x) = f(pi x): box p^-1
  for (int i = 0; i < 4; ++i) CHECK(g.terms()[0].x.lSet[i] == CoordSet::ideal(-1));
  // add(f, scale(-1, f)) = 0
  auto zero = (f + f.scaled(SymbolicScalar::integer(-1))).canonicalized();
  CHECK(zero.empty());
}

TEST_CASE("form constraints gate evaluation") {
  auto F = FieldParams::ramified(3);
  auto f = latticeIndicator(F);
  auto T = SchwartzFunction::tensor(f, f);
  SchwartzFunction g(F, true);
  for (auto t : T.terms()) {
    t.constraints.push_back({QuadForm::XX, 2});
    g.addTerm(t);
  }
  auto z = PadicElement::zero(F);
  auto one = PadicElement::fromInteger(F, 1);
  // x with <x,x> = det = N(a) = 1 not in p^2
  XPoint x = XPoint::make(F, one, z, z, z);
  XPoint y = XPoint::make(F, z, z, one, z); // q(y) = 0
  CHECK(g.evaluate(x, y).isZero());
  CHECK(g.evaluate(y, y) == SymbolicScalar::one());
  CHECK(!T.evaluate(x, y).isZero());
}
