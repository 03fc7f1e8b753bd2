#pragma once

#include <optional>
#include <vector>

#include "thetalift/quadspace.hpp"
#include "thetalift/symbolic.hpp"

namespace thetalift {

enum class SetKind { All, ZeroOnly, Ideal, Shell };

// A coordinate box: All, {0}, the fractional ideal pi^m o (Ideal), or the
// shell pi^m o^x (Shell). On the E-coordinate levels are P-adic (nu_E).
struct CoordSet {
  SetKind kind = SetKind::All;
  int level = 0;
  static CoordSet all() { return {SetKind::All, 0}; }
  static CoordSet zeroOnly() { return {SetKind::ZeroOnly, 0}; }
  static CoordSet ideal(int m) { return {SetKind::Ideal, m}; }
  static CoordSet shell(int m) { return {SetKind::Shell, m}; }
  bool operator==(const CoordSet& o) const { return kind == o.kind && level == o.level; }
  bool operator<(const CoordSet& o) const {
    if (kind != o.kind) return kind < o.kind;
    return level < o.level;
  }
  // Least valuation of a nonzero member (INT32_MAX for ZeroOnly).
  int minVal() const {
    switch (kind) {
      case SetKind::All: return INT32_MIN / 4;
      case SetKind::ZeroOnly: return INT32_MAX / 4;
      default: return level;
    }
  }
  bool containsVal(int v) const { // membership by valuation for nonzero elements
    switch (kind) {
      case SetKind::All: return true;
      case SetKind::ZeroOnly: return false;
      case SetKind::Ideal: return v >= level;
      case SetKind::Shell: return v == level;
    }
    return false;
  }
  bool containsZero() const {
    return kind == SetKind::All || kind == SetKind::ZeroOnly || kind == SetKind::Ideal;
  }
};

bool memberL(const CoordSet& s, const PadicElement& x);
bool memberE(const CoordSet& s, const ExtElement& x);

// Support data on one copy of X.
//   split:     four L-coordinate sets on the matrix entries.
//   non-split: an E-set on the a-coordinate plus L-sets on the b and c
//              coordinates; optional chi twists on b and c.
struct XSupport {
  CoordSet eSet;                 // non-split a-coordinate
  std::array<CoordSet, 4> lSet;  // split: entries; non-split: [2]=b, [3]=c
  std::array<bool, 4> twist = {false, false, false, false};

  static XSupport splitBox(CoordSet s1, CoordSet s2, CoordSet s3, CoordSet s4) {
    XSupport s;
    s.lSet = {s1, s2, s3, s4};
    return s;
  }
  static XSupport nonsplitBox(CoordSet a, CoordSet b, CoordSet c, bool twistB = false,
                              bool twistC = false) {
    XSupport s;
    s.eSet = a;
    s.lSet = {CoordSet::all(), CoordSet::all(), b, c};
    s.twist[2] = twistB;
    s.twist[3] = twistC;
    return s;
  }
  bool operator==(const XSupport& o) const {
    return eSet == o.eSet && lSet == o.lSet && twist == o.twist;
  }
  bool operator<(const XSupport& o) const;
};

enum class QuadForm { XX, XY, YY };

// Membership condition f_{p^m}(form) on a pair (x, y).
struct FormConstraint {
  QuadForm form;
  int level;
  bool operator==(const FormConstraint& o) const {
    return form == o.form && level == o.level;
  }
  bool operator<(const FormConstraint& o) const {
    if (form != o.form) return form < o.form;
    return level < o.level;
  }
};

struct BoxTerm {
  SymbolicScalar coeff;
  XSupport x;
  XSupport y;                            // pair-space terms only
  std::vector<FormConstraint> constraints; // pair-space terms only
};

// Finite linear combination of box terms: the exact model of the locally
// constant compactly supported functions in play.
class SchwartzFunction {
public:
  SchwartzFunction() = default;
  SchwartzFunction(FieldParams F, bool pairSpace) : F_(F), pair_(pairSpace) {}

  static SchwartzFunction onX(const FieldParams& F) { return SchwartzFunction(F, false); }
  static SchwartzFunction onXX(const FieldParams& F) { return SchwartzFunction(F, true); }

  const FieldParams& field() const { return F_; }
  bool onPairSpace() const { return pair_; }
  const std::vector<BoxTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void addTerm(BoxTerm t);
  void validate() const; // twist => shell, constraints only on pair space

  SymbolicScalar evaluate(const XPoint& pt) const;
  SymbolicScalar evaluate(const XPoint& px, const XPoint& py) const;

  SchwartzFunction operator+(const SchwartzFunction& o) const;
  SchwartzFunction scaled(const SymbolicScalar& c) const;
  // f(x) -> f(a x) with a in L^x (applies to X-functions).
  SchwartzFunction scaleArgument(const PadicElement& a) const;
  // T(f1 (x) f2)(x, y) = f1(x) f2(y)
  static SchwartzFunction tensor(const SchwartzFunction& f1, const SchwartzFunction& f2);

  // Merge identical boxes, drop zero coefficients, sort deterministically.
  SchwartzFunction canonicalized() const;

  std::string str() const;

private:
  FieldParams F_;
  bool pair_ = false;
  std::vector<BoxTerm> terms_;
};

enum class EqualityMethod { Canonical, AtomDecomposition, ExhaustiveScan, Sampled };

struct EqualityResult {
  bool equal;
  EqualityMethod method;
  std::string detail;
};

// Extensional equality. Canonical-form identity first, then an exact
// shell-atom decomposition; atoms whose constraints cannot be resolved by
// valuation bounds are compared by residue enumeration with the given point
// budget (exceeding it yields a sampled verdict, never a silent pass).
EqualityResult schwartzEqual(const SchwartzFunction& f, const SchwartzFunction& g,
                             long long pointBudget = 2'000'000);

// Characteristic function helpers.
SchwartzFunction indicatorX(const FieldParams& F, const XSupport& s);

// Lattice characteristic function of M(2, o) (split) or M(2, o_E) cap X.
SchwartzFunction latticeIndicator(const FieldParams& F);

} // namespace thetalift
