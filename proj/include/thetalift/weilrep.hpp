#pragma once

#include <variant>

#include "thetalift/schwartz.hpp"

namespace thetalift {

// A generator action landed outside the supported classes (non-separable
// term, uncertifiable psi multiplier, ...). The numeric oracle is the
// fallback route.
struct OracleOnly : std::runtime_error {
  explicit OracleOnly(const std::string& what) : std::runtime_error(what) {}
};

// One-dimensional Gauss integral of a coordinate set against psi(c y):
//   int_{S} chi(y)^twisted psi(c y) dy
// expressed as a function of the dual variable x where c = s x. Returns box
// terms on the dual coordinate. eSlot switches to the E-coordinate with its
// self-dual measure and the inverse different shift.
struct DualTerm {
  CoordSet set;
  bool twisted;
  SymbolicScalar coeff;
};
std::vector<DualTerm> gaussDual(const FieldParams& F, const CoordSet& s, bool twisted,
                                bool eSlot, int sVal, int sChi);

// Value form of the Gauss integral (Lemma-style case split), for direct
// comparison against oracle sums: int_{S} chi^tw(y) psi(c y) dy.
SymbolicScalar gaussIntegralValue(const FieldParams& F, const CoordSet& s, bool twisted,
                                  const PadicElement& c);

// The Fourier transform F_1 on X with the self-dual Haar measure
// (coordinate measure times q_E^{-nu(delta)}, E-coordinate self-dual).
SchwartzFunction fourier1(const SchwartzFunction& f);

// Monomial GSO elements (diagonal rho data): the only ones the symbolic layer
// transports functions along. Everything else acts on points via rhoApply.
struct GsoMonomial {
  FieldParams F;
  // per-slot argument scalings of the INVERSE action (g(x) = f(sigma x))
  ExtElement wE;                       // nonsplit a-coordinate
  std::array<PadicElement, 4> s;       // split entries / nonsplit b,c in [2],[3]
  PadicElement lambda;                 // similitude of the original element
};
std::optional<GsoMonomial> monomialOf(const GsoElement& h);

// Supported GSp(4) generator classes for weilApply.
struct GenGsoOnly { GsoElement h; };                     // omega(1, h)
struct GenBlockDiag { Mat2L A; };                        // [[A,0],[0,tA^-1]]
struct GenUpperSym { PadicElement b1, b2, b3; };         // [[1,B],[0,1]]
struct GenWeylJ {};                                      // J
struct GenS2 {};                                         // s_2
struct GenTN { int N; };                                 // t_N
struct GenSimilitude { PadicElement lam; GsoElement h; } ;// diag(1,1,l,l)-type
using Gsp4Gen = std::variant<GenGsoOnly, GenBlockDiag, GenUpperSym, GenWeylJ, GenS2,
                             GenTN, GenSimilitude>;

// omega(g, h) f for the supported classes. Exact; throws OracleOnly when a
// precondition cannot be certified on some term.
SchwartzFunction weilApply(const Gsp4Gen& g, const SchwartzFunction& f);

// Pullback f(h^-1 x, h^-1 y) for monomial h (used by weilrep1/weilrep5).
SchwartzFunction gsoPullback(const GsoElement& h, const SchwartzFunction& f);

// f(x, y) -> f(ax, dy) building block (diagonal A-block without multipliers).
SchwartzFunction sideScale(const SchwartzFunction& f, bool ySide, const PadicElement& a);
// Partial Fourier transform in one tensor slot; multiplies gamma in by hand.
SchwartzFunction sideFourier(const SchwartzFunction& f, bool ySide);
SchwartzFunction sideNegate(const SchwartzFunction& f, bool ySide);

// Lower bound for the valuation of a quadratic form on a term's support
// (box data plus constraints).
int formLowerBound(const FieldParams& F, const BoxTerm& t, QuadForm form);

// Coset family averages from the ramified construction:
//   sum_{u in o/p} omega(upper(pi^-N u, 0, 0)) f = q * f_{p^N}(<x,x>) f
//   sum_{v in o/p} omega(upper(0, 0, v)) f      = q * f_{o}(<y,y>) f
// Preconditions: <x,x>-bound >= N-1 resp. <y,y>-bound >= -1.
SchwartzFunction averageUpperXX(const SchwartzFunction& f, int N);
SchwartzFunction averageUpperYY(const SchwartzFunction& f);

} // namespace thetalift
