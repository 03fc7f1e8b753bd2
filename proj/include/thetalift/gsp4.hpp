#pragma once

#include <optional>
#include <vector>

#include "thetalift/quadspace.hpp"

namespace thetalift {

// Exact 4x4 matrix over L with symplectic structure relative to
// J = [[0, I], [-I, 0]]. The similitude is computed and certified on
// construction paths that demand it.
struct Gsp4Matrix {
  FieldParams F;
  std::array<PadicElement, 16> e;

  const PadicElement& at(int i, int j) const { return e[4 * i + j]; }
  PadicElement& at(int i, int j) { return e[4 * i + j]; }

  static Gsp4Matrix zero(const FieldParams& F);
  static Gsp4Matrix identity(const FieldParams& F);
  static Gsp4Matrix fromRows(const FieldParams& F, std::array<Rat, 16> entries);

  Gsp4Matrix mul(const Gsp4Matrix& o) const;
  Gsp4Matrix transpose() const;
  // lambda(g) with the full relation tg J g = lambda J certified; nullopt if
  // the matrix is not symplectic-similitude.
  std::optional<PadicElement> similitude() const;
  // g^{-1} = lambda^{-1} J^{-1} tg J
  Gsp4Matrix inverse() const;

  bool equalUpToPrec(const Gsp4Matrix& o) const;
  std::string str() const;
};

// Generator constructors (paramodular generator families).
Gsp4Matrix genBlockDiag(const FieldParams& F, const Mat2L& A, const PadicElement& lam);
Gsp4Matrix genUpperSym(const FieldParams& F, const PadicElement& b1, const PadicElement& b2,
                       const PadicElement& b3);
Gsp4Matrix genLowerSym(const FieldParams& F, const PadicElement& c1, const PadicElement& c2,
                       const PadicElement& c3);
Gsp4Matrix genS2(const FieldParams& F);
Gsp4Matrix genTN(const FieldParams& F, int N);
Gsp4Matrix genWeylJ(const FieldParams& F);

// Membership tests (exact valuation patterns plus unit similitude).
bool inParamodular(const Gsp4Matrix& g, int N);
bool inKlingen(const Gsp4Matrix& g, int N);

enum class Verdict { Yes, No, Undecided };

// Membership in T cap K(p^N) where T is generated by the three families
//   [[A,0],[0,tA^-1]] (A in Gamma_0(p^N)),  [[I,B],[0,I]], [[I,0],[C,I]]
// with B in [p^{-N+1}, o; o, p], C in [p^N, p^{N-1}; p^{N-1}, o], via an
// explicit UDL / LDU factorization at working precision.
Verdict inT(const Gsp4Matrix& g, int N);

struct IwahoriFactors {
  Gsp4Matrix upper, levi, lower; // product with similitude tail reproduces input
  PadicElement u;                // Levi GL(1) part
  std::array<PadicElement, 4> s; // Levi SL(2) block [[s1,s2],[s3,s4]]
  PadicElement lambda;           // similitude of the input
};

// Iwahori factorization of a Klingen element (throws PrecisionExhausted if a
// pivot cannot be certified; raise precision and retry).
IwahoriFactors iwahoriFactor(const Gsp4Matrix& k, int N);

struct CosetList {
  std::string kind;
  int N;
  std::vector<Gsp4Matrix> reps;
};

enum class CosetKind { K_mod_Kl, Kl_mod_KlT, K_mod_KT };

CosetList cosets(const FieldParams& F, CosetKind kind, int N);

// Locate the coset of g in the given list; -1 if none matches.
int identifyCoset(const CosetList& list, CosetKind kind, const Gsp4Matrix& g, int N);

// A finite, spread-out instance sweep of the paramodular generator families
// at residue depth `depth` (parameters over valuation grades with leading
// digits mod p^depthUnits). Only lambda = 1 instances.
struct GeneratorInstance {
  std::string family; // "blockDiag", "upperSym", "s2", "tN"
  Gsp4Matrix g;
  Mat2L A;                      // blockDiag payload
  PadicElement b1, b2, b3;      // upperSym payload
};
std::vector<GeneratorInstance> generatorInstances(const FieldParams& F, int N, int depth);

} // namespace thetalift
