#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "thetalift/localfield.hpp"

using namespace thetalift;

TEST_CASE("valuations add under multiplication, inverse has unit u^-1") {
  auto F = FieldParams::split(5);
  auto a = PadicElement::fromUnit(F, 2, 3, 8);   // pi^2 * 3
  auto b = PadicElement::fromUnit(F, -1, 2, 8);  // pi^-1 * 2
  auto c = a * b;
  CHECK(c.val() == 1);
  CHECK(c.unitMod(1) == 1); // 3*2 = 6 = 1 mod 5

  auto ai = a.inv();
  CHECK(ai.val() == -2);
  auto prod = a * ai;
  CHECK(prod.val() == 0);
  CHECK(prod.unitMod(8) == 1);
}

TEST_CASE("additive inverse: exact backing cancels to true zero") {
  auto F = FieldParams::split(3);
  auto x = PadicElement::fromInteger(F, 7);
  CHECK((x + (-x)).isZero());
  // without exact backing the same cancellation exhausts precision
  auto y = PadicElement::fromUnit(F, 0, 7, 8);
  CHECK_THROWS_AS(y + (-y), PrecisionExhausted);
}

TEST_CASE("ultrametric inequality with equality off-diagonal") {
  auto F = FieldParams::split(3, 10);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    long long n1 = (long long)(rng() % 2000) - 1000;
    long long n2 = (long long)(rng() % 2000) - 1000;
    if (n1 == 0 || n2 == 0 || n1 + n2 == 0) continue;
    auto x = PadicElement::fromInteger(F, n1);
    auto y = PadicElement::fromInteger(F, n2);
    auto s = x + y;
    CHECK(s.val() >= std::min(x.val(), y.val()));
    if (x.val() != y.val()) CHECK(s.val() == std::min(x.val(), y.val()));
    CHECK((x * y).val() == x.val() + y.val());
  }
}

TEST_CASE("ext norm, trace, conjugation") {
  for (auto F : {FieldParams::inert(5), FieldParams::ramified(5)}) {
    auto a = PadicElement::fromInteger(F, 7);
    auto b = PadicElement::fromInteger(F, 10);
    ExtElement x(F, a, b);
    CHECK(x.conj().conj().a().equalUpToPrec(x.a()));
    CHECK(x.conj().conj().b().equalUpToPrec(x.b()));
    // norm(a + 0 sqrt(d)) = a^2
    auto n0 = ExtElement::fromL(F, a).norm();
    CHECK(n0.equalUpToPrec(a * a));
    // norm(0 + 1 sqrt(d)) = -delta
    auto n1 = ExtElement::sqrtDelta(F).norm();
    CHECK(n1.equalUpToPrec(-deltaElement(F)));
    // trace = 2a
    CHECK(x.trace().equalUpToPrec(a + a));
    // norm multiplicativity on a couple of elements
    ExtElement y(F, PadicElement::fromInteger(F, 4), PadicElement::fromInteger(F, 9));
    CHECK((x * y).norm().equalUpToPrec(x.norm() * y.norm()));
  }
}

TEST_CASE("split ext coordinates") {
  auto F = FieldParams::split(3);
  ExtElement x(F, PadicElement::fromInteger(F, 4), PadicElement::fromInteger(F, 5));
  CHECK(x.norm().equalUpToPrec(PadicElement::fromInteger(F, 20)));
  CHECK(x.trace().equalUpToPrec(PadicElement::fromInteger(F, 9)));
  auto c = x.conj();
  CHECK(c.a().equalUpToPrec(PadicElement::fromInteger(F, 5)));
}

TEST_CASE("inert: valuation of norms is even; ramified: v_L(N) = v_E") {
  auto F = FieldParams::inert(3);
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    int va = int(rng() % 5) - 2, vb = int(rng() % 5) - 2;
    long long ua = 1 + rng() % 2, ub = 1 + rng() % 2;
    ExtElement x(F, PadicElement::fromUnit(F, va, ua, 8),
                 PadicElement::fromUnit(F, vb, ub, 8));
    auto n = x.norm();
    CHECK(n.val() % 2 == 0);
    CHECK(n.val() == 2 * x.valE());
  }
  auto R = FieldParams::ramified(3);
  for (int i = 0; i < 300; ++i) {
    int va = int(rng() % 5) - 2, vb = int(rng() % 5) - 2;
    ExtElement x(R, PadicElement::fromUnit(R, va, 1 + rng() % 2, 8),
                 PadicElement::fromUnit(R, vb, 1 + rng() % 2, 8));
    CHECK(x.norm().val() == x.valE());
  }
}

TEST_CASE("chi_quad is multiplicative and trivial on norms") {
  for (auto F : {FieldParams::inert(5), FieldParams::ramified(5),
                 FieldParams::inert(3), FieldParams::ramified(3),
                 FieldParams::ramified(7)}) {
    std::mt19937 rng(23);
    for (int i = 0; i < 500; ++i) {
      int va = int(rng() % 5) - 2, vb = int(rng() % 5) - 2;
      long long ua = 1 + rng() % (F.p - 1), ub = 1 + rng() % (F.p - 1);
      auto x = PadicElement::fromUnit(F, va, ua, 8);
      auto y = PadicElement::fromUnit(F, vb, ub, 8);
      CHECK(chiQuad(F, x * y) == chiQuad(F, x) * chiQuad(F, y));
      // chi(u^2) = 1
      CHECK(chiQuad(F, x * x) == 1);
    }
    // chi trivial on ext norms
    for (int i = 0; i < 500; ++i) {
      int va = int(rng() % 5) - 2, vb = int(rng() % 5) - 2;
      long long ua = 1 + rng() % (F.p - 1), ub = 1 + rng() % (F.p - 1);
      ExtElement z(F, PadicElement::fromUnit(F, va, ua, 8),
                   PadicElement::fromUnit(F, vb, ub, 8));
      CHECK(chiQuad(F, z.norm()) == 1);
    }
  }
}

TEST_CASE("psi angle: conductor o_L, additivity, shell sum = -1") {
  auto F = FieldParams::split(5);
  CHECK(psiAngle(PadicElement::fromInteger(F, 12)) == Rat(0));
  auto x = PadicElement::fromUnit(F, -1, 1, 8);
  CHECK(psiAngle(x) == Rat(1, 5));
  // additivity mod 1
  auto y = PadicElement::fromUnit(F, -2, 7, 8);
  Rat s = psiAngle(x) + psiAngle(y);
  Rat direct = psiAngle(x + y);
  long long diffn = (s - direct).num();
  long long diffd = (s - direct).den();
  CHECK(diffd == 1); // integer difference
  (void)diffn;
  // sum over units u mod 5 of psi(u/pi) = -1 (as exact cosine sum it is -1;
  // check combinatorially: angles hit each nonzero fifth exactly once)
  int counts[5] = {0, 0, 0, 0, 0};
  for (long long u = 1; u < 5; ++u) {
    auto e = PadicElement::fromUnit(F, -1, u, 8);
    Rat a = psiAngle(e);
    CHECK(a.den() == 5);
    counts[a.num() % 5]++;
  }
  for (int k = 1; k < 5; ++k) CHECK(counts[k] == 1);
}

TEST_CASE("ramified psi_E trace character conductor") {
  auto F = FieldParams::ramified(5);
  // psi(Tr(pi_E^{-1} x)) = psi(2 c2) for x = c1 + c2 sqrt(delta), delta = pi:
  // pi_E^{-1} x = c1/sqrt(d) + c2, Tr = 2 c2 + c1 Tr(1/sqrt(d)) = 2 c2.
  // Trivial on o_E, nontrivial on P^{-1}.
  auto sdInv = ExtElement::sqrtDelta(F).inv();
  for (long long c2 : {0LL, 1LL, 3LL}) {
    ExtElement x(F, PadicElement::fromInteger(F, 2),
                 c2 ? PadicElement::fromInteger(F, c2) : PadicElement::zero(F));
    auto arg = (sdInv * x).trace();
    CHECK(psiAngle(arg) == Rat(0));
  }
  // an element of P^{-1} \ o_E: c2 of valuation -1
  ExtElement bad(F, PadicElement::zero(F), PadicElement::fromUnit(F, -1, 1, 8));
  CHECK(bad.valE() == -1);
  CHECK(psiAngle((sdInv * bad).trace()) != Rat(0));
}

TEST_CASE("norm equation solver") {
  for (auto F : {FieldParams::inert(3), FieldParams::inert(5), FieldParams::inert(7)}) {
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
      long long u = 1 + rng() % (F.p - 1);
      int v = 2 * (int(rng() % 3) - 1);
      auto t = PadicElement::fromUnit(F, v, u, 10);
      auto z = solveNormEquation(F, t);
      CHECK(z.norm().equalUpToPrec(t));
    }
  }
  auto R = FieldParams::ramified(5);
  // squares of units are norms
  auto t = PadicElement::fromUnit(R, 0, 4, 10);
  CHECK(solveNormEquation(R, t).norm().equalUpToPrec(t));
  // -delta is a norm
  auto md = -deltaElement(R);
  CHECK(solveNormEquation(R, md).norm().equalUpToPrec(md));
}

TEST_CASE("unit square roots lift correctly") {
  auto F = FieldParams::split(7, 10);
  for (long long a = 1; a < 7; ++a) {
    auto x = PadicElement::fromUnit(F, 0, a, 10);
    auto r = unitSquareRoot(F, x);
    if (legendreSymbol(a, 7) == 1) {
      REQUIRE(r.has_value());
      CHECK((*r * *r).equalUpToPrec(x));
    } else {
      CHECK(!r.has_value());
    }
  }
}
