#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "thetalift/symbolic.hpp"

using namespace thetalift;

TEST_CASE("ring relations gamma^2 = chi(-1), tau^2 = chi(-1) q") {
  for (int sign : {+1, -1}) {
    auto g = SymbolicScalar::gammaSym(sign);
    auto t = SymbolicScalar::tauSym(sign);
    auto g2 = g * g;
    CHECK(g2 == SymbolicScalar::integer(sign));
    auto t2 = t * t;
    CHECK(t2 == SymbolicScalar::qPow(1).timesSign(sign));
    CHECK(g2 * g2 == SymbolicScalar::one());
  }
}

TEST_CASE("half-integer q lattice") {
  auto r = SymbolicScalar::qHalfPow(1) * SymbolicScalar::qHalfPow(3);
  CHECK(r == SymbolicScalar::qPow(2));
  CHECK(SymbolicScalar::qPow(2).evalRationalAtQ(5) == Rat(25));
  auto s = SymbolicScalar::qPow(-1) - SymbolicScalar::qPow(-2);
  CHECK(s.evalRationalAtQ(3) == Rat(1, 3) - Rat(1, 9));
}

TEST_CASE("gamma residue extraction") {
  auto f = SymbolicScalar::qPow(2);
  auto g = SymbolicScalar::gammaSym(-1) * f;
  CHECK(g.gammaResidueAgainst(f) == 1);
  CHECK(f.gammaResidueAgainst(f) == 0);
  auto minusF = -f;
  // -1 = gamma^2 when chi(-1) = -1
  CHECK(minusF.gammaResidueAgainst(f, -1) == 2);
  auto h = SymbolicScalar::uPow(1);
  CHECK(h.gammaResidueAgainst(f) == -1);
}

TEST_CASE("numeric evaluation matches symbols") {
  auto s = SymbolicScalar::tauSym(+1) * SymbolicScalar::qPow(-1);
  auto v = s.evalNumeric(5, 1.0, std::sqrt(5.0));
  CHECK(std::abs(v - std::complex<double>(std::sqrt(5.0) / 5.0, 0)) < 1e-12);
}

TEST_CASE("monomial division") {
  auto num = SymbolicScalar::gammaSym(-1) * SymbolicScalar::qPow(3);
  auto den = SymbolicScalar::gammaSym(-1);
  auto r = num.divideByMonomial(den);
  CHECK(r == SymbolicScalar::qPow(3));
}
