#include "thetalift/schwartz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace thetalift {

bool memberL(const CoordSet& s, const PadicElement& x) {
  switch (s.kind) {
    case SetKind::All: return true;
    case SetKind::ZeroOnly: return x.isZero();
    case SetKind::Ideal: return x.inIdeal(s.level);
    case SetKind::Shell: return x.inShell(s.level);
  }
  return false;
}

bool memberE(const CoordSet& s, const ExtElement& x) {
  switch (s.kind) {
    case SetKind::All: return true;
    case SetKind::ZeroOnly: return x.isZero();
    case SetKind::Ideal: return x.inIdealE(s.level);
    case SetKind::Shell: return x.inShellE(s.level);
  }
  return false;
}

bool XSupport::operator<(const XSupport& o) const {
  if (!(eSet == o.eSet)) return eSet < o.eSet;
  for (int i = 0; i < 4; ++i)
    if (!(lSet[i] == o.lSet[i])) return lSet[i] < o.lSet[i];
  for (int i = 0; i < 4; ++i)
    if (twist[i] != o.twist[i]) return twist[i] < o.twist[i];
  return false;
}

void SchwartzFunction::addTerm(BoxTerm t) {
  std::sort(t.constraints.begin(), t.constraints.end());
  terms_.push_back(std::move(t));
}

void SchwartzFunction::validate() const {
  for (const auto& t : terms_) {
    for (const XSupport* s : {&t.x, &t.y}) {
      for (int i = 0; i < 4; ++i)
        if (s->twist[i] && s->lSet[i].kind != SetKind::Shell)
          throw std::logic_error("SchwartzFunction: twisted coordinate must be a shell");
      if (s == &t.y && !pair_) break;
    }
    if (!pair_ && !t.constraints.empty())
      throw std::logic_error("SchwartzFunction: constraints need the pair space");
  }
}

namespace {

// Value of the twist-and-box factor of one XSupport at a point, or nullopt if
// the point is outside the box. The returned sign collects chi at twisted
// coordinates.
std::optional<int> supportFactor(const FieldParams& F, const XSupport& s, const XPoint& p) {
  int sign = 1;
  if (F.kind == ExtensionKind::Split) {
    for (int i = 0; i < 4; ++i) {
      if (!memberL(s.lSet[i], p.c[i])) return std::nullopt;
      if (s.twist[i]) sign *= chiQuad(F, p.c[i]);
    }
    return sign;
  }
  if (!memberE(s.eSet, p.aCoord())) return std::nullopt;
  for (int i = 2; i < 4; ++i) {
    if (!memberL(s.lSet[i], p.c[i])) return std::nullopt;
    if (s.twist[i]) sign *= chiQuad(F, p.c[i]);
  }
  return sign;
}

// Tri-state ideal membership of a quadratic form value, robust to exact
// cancellation (uses the certified bound carried by PrecisionExhausted).
bool formInIdeal(const PadicElement& (*)(const XPoint&), int) = delete;

bool valueInIdeal(const std::function<PadicElement()>& compute, int m) {
  try {
    PadicElement v = compute();
    return v.inIdeal(m);
  } catch (const PrecisionExhausted& e) {
    if (e.certifiedLB >= m) return true;
    throw;
  }
}

} // namespace

SymbolicScalar SchwartzFunction::evaluate(const XPoint& pt) const {
  if (pair_) throw std::logic_error("evaluate: pair-space function needs two points");
  SymbolicScalar total = SymbolicScalar::zero();
  for (const auto& t : terms_) {
    auto f = supportFactor(F_, t.x, pt);
    if (!f) continue;
    total += t.coeff.timesSign(*f);
  }
  return total;
}

SymbolicScalar SchwartzFunction::evaluate(const XPoint& px, const XPoint& py) const {
  if (!pair_) throw std::logic_error("evaluate: single-space function given two points");
  SymbolicScalar total = SymbolicScalar::zero();
  for (const auto& t : terms_) {
    auto fx = supportFactor(F_, t.x, px);
    if (!fx) continue;
    auto fy = supportFactor(F_, t.y, py);
    if (!fy) continue;
    bool ok = true;
    for (const auto& c : t.constraints) {
      auto compute = [&]() {
        switch (c.form) {
          case QuadForm::XX: return qForm(px);
          case QuadForm::YY: return qForm(py);
          case QuadForm::XY: return pairing(px, py);
        }
        throw std::logic_error("bad form");
      };
      if (!valueInIdeal(compute, c.level)) { ok = false; break; }
    }
    if (!ok) continue;
    total += t.coeff.timesSign(*fx * *fy);
  }
  return total;
}

SchwartzFunction SchwartzFunction::operator+(const SchwartzFunction& o) const {
  if (pair_ != o.pair_) throw std::logic_error("SchwartzFunction: space mismatch");
  SchwartzFunction r = *this;
  for (const auto& t : o.terms_) r.terms_.push_back(t);
  return r;
}

SchwartzFunction SchwartzFunction::scaled(const SymbolicScalar& c) const {
  SchwartzFunction r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

namespace {

CoordSet scaleSet(const CoordSet& s, int valShift) {
  switch (s.kind) {
    case SetKind::All:
    case SetKind::ZeroOnly:
      return s;
    case SetKind::Ideal: return CoordSet::ideal(s.level - valShift);
    case SetKind::Shell: return CoordSet::shell(s.level - valShift);
  }
  return s;
}

} // namespace

SchwartzFunction SchwartzFunction::scaleArgument(const PadicElement& a) const {
  if (pair_) throw std::logic_error("scaleArgument: X-functions only");
  if (a.isZero()) throw std::domain_error("scaleArgument: zero scalar");
  int v = a.val();
  SchwartzFunction r(F_, false);
  for (auto t : terms_) {
    // g(x) = f(a x): supp(g) = a^{-1} supp(f), twists pick up chi(a).
    if (F_.kind == ExtensionKind::Split) {
      for (int i = 0; i < 4; ++i) {
        t.x.lSet[i] = scaleSet(t.x.lSet[i], v);
        if (t.x.twist[i]) t.coeff = t.coeff.timesSign(chiQuad(F_, a));
      }
    } else {
      t.x.eSet = scaleSet(t.x.eSet, F_.e() * v);
      for (int i = 2; i < 4; ++i) {
        t.x.lSet[i] = scaleSet(t.x.lSet[i], v);
        if (t.x.twist[i]) t.coeff = t.coeff.timesSign(chiQuad(F_, a));
      }
    }
    r.terms_.push_back(std::move(t));
  }
  return r;
}

SchwartzFunction SchwartzFunction::tensor(const SchwartzFunction& f1,
                                          const SchwartzFunction& f2) {
  if (f1.pair_ || f2.pair_) throw std::logic_error("tensor: factors must live on X");
  SchwartzFunction r(f1.F_, true);
  for (const auto& t1 : f1.terms_) {
    for (const auto& t2 : f2.terms_) {
      BoxTerm t;
      t.coeff = t1.coeff * t2.coeff;
      t.x = t1.x;
      t.y = t2.x;
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

SchwartzFunction SchwartzFunction::canonicalized() const {
  using Key = std::tuple<XSupport, XSupport, std::vector<FormConstraint>>;
  std::map<Key, SymbolicScalar> merged;
  for (const auto& t : terms_) {
    auto cs = t.constraints;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    Key k{t.x, t.y, cs};
    auto it = merged.find(k);
    if (it == merged.end()) merged[k] = t.coeff;
    else it->second += t.coeff;
  }
  SchwartzFunction r(F_, pair_);
  for (auto& [k, c] : merged) {
    if (c.isZero()) continue;
    BoxTerm t;
    t.coeff = c;
    t.x = std::get<0>(k);
    t.y = std::get<1>(k);
    t.constraints = std::get<2>(k);
    r.terms_.push_back(std::move(t));
  }
  return r;
}

std::string SchwartzFunction::str() const {
  std::ostringstream out;
  auto setStr = [](const CoordSet& s) {
    switch (s.kind) {
      case SetKind::All: return std::string("All");
      case SetKind::ZeroOnly: return std::string("{0}");
      case SetKind::Ideal: return "I(" + std::to_string(s.level) + ")";
      case SetKind::Shell: return "S(" + std::to_string(s.level) + ")";
    }
    return std::string("?");
  };
  auto suppStr = [&](const XSupport& s) {
    std::string r = "[";
    if (F_.kind == ExtensionKind::Split) {
      for (int i = 0; i < 4; ++i) {
        r += setStr(s.lSet[i]);
        if (s.twist[i]) r += "~chi";
        if (i < 3) r += ",";
      }
    } else {
      r += "a:" + setStr(s.eSet) + ",b:" + setStr(s.lSet[2]);
      if (s.twist[2]) r += "~chi";
      r += ",c:" + setStr(s.lSet[3]);
      if (s.twist[3]) r += "~chi";
    }
    return r + "]";
  };
  for (const auto& t : terms_) {
    out << "(" << t.coeff.str() << ") * " << suppStr(t.x);
    if (pair_) out << " (x) " << suppStr(t.y);
    for (const auto& c : t.constraints) {
      const char* f = c.form == QuadForm::XX ? "<x,x>" : c.form == QuadForm::YY ? "<y,y>" : "<x,y>";
      out << " * f_I(" << c.level << ")(" << f << ")";
    }
    out << "\n";
  }
  return out.str();
}

SchwartzFunction indicatorX(const FieldParams& F, const XSupport& s) {
  SchwartzFunction f(F, false);
  BoxTerm t;
  t.coeff = SymbolicScalar::one();
  t.x = s;
  f.addTerm(std::move(t));
  return f;
}

SchwartzFunction latticeIndicator(const FieldParams& F) {
  if (F.kind == ExtensionKind::Split)
    return indicatorX(F, XSupport::splitBox(CoordSet::ideal(0), CoordSet::ideal(0),
                                            CoordSet::ideal(0), CoordSet::ideal(0)));
  // M(2, o_E) cap X: a integral, entries b sqrt(d), c sqrt(d) integral.
  // Inert (sqrt(d) a unit): b, c in o_L. Ramified (v_E(sqrt d) = 1): also o_L.
  return indicatorX(F, XSupport::nonsplitBox(CoordSet::ideal(0), CoordSet::ideal(0),
                                             CoordSet::ideal(0)));
}

// ---------------------------------------------------------------------------
// Extensional equality via shell-atom decomposition.

namespace {

struct CoordState {
  bool tail; // valuation >= windowHi (includes 0)
  int v;     // shell valuation when !tail, else the window bound
};

struct AtomContext {
  const FieldParams* F;
  int nCoords; // 8 for pair space, 4 otherwise
  std::vector<std::pair<int, int>> windows; // per coordinate [lo, hi)
};

// Coordinate indices: x-side 0..3, y-side 4..7 (c1, c2, b(c3), c(c4)).

int coordCount(bool pairSpace) { return pairSpace ? 8 : 4; }

// valuation of a monomial coefficient * prod of coordinates; nullopt = ideal
// lower bound only (a tail coordinate involved)
struct MonoVal {
  bool exact;
  int v;
};

MonoVal monoVal(int coeffVal, std::initializer_list<const CoordState*> coords) {
  int v = coeffVal;
  bool exact = true;
  for (auto* s : coords) {
    v += s->v;
    if (s->tail) exact = false;
  }
  return {exact, v};
}

// min-valuation info of a quadratic form on an atom
struct FormVal {
  bool exact; // true: ord is exactly v; false: ord >= v (bound)
  int v;
};

FormVal formValOnAtom(const FieldParams& F, QuadForm form,
                      const std::array<CoordState, 8>& st) {
  int r = F.deltaValL();
  std::vector<MonoVal> monos;
  auto S = [&](int i) { return &st[i]; };
  if (F.kind == ExtensionKind::Split) {
    switch (form) {
      case QuadForm::XX:
        monos = {monoVal(0, {S(0), S(3)}), monoVal(0, {S(1), S(2)})};
        break;
      case QuadForm::YY:
        monos = {monoVal(0, {S(4), S(7)}), monoVal(0, {S(5), S(6)})};
        break;
      case QuadForm::XY:
        monos = {monoVal(0, {S(0), S(7)}), monoVal(0, {S(3), S(4)}),
                 monoVal(0, {S(1), S(6)}), monoVal(0, {S(2), S(5)})};
        break;
    }
  } else {
    switch (form) {
      case QuadForm::XX:
        monos = {monoVal(0, {S(0), S(0)}), monoVal(r, {S(1), S(1)}),
                 monoVal(r, {S(2), S(3)})};
        break;
      case QuadForm::YY:
        monos = {monoVal(0, {S(4), S(4)}), monoVal(r, {S(5), S(5)}),
                 monoVal(r, {S(6), S(7)})};
        break;
      case QuadForm::XY:
        monos = {monoVal(0, {S(0), S(4)}), monoVal(r, {S(1), S(5)}),
                 monoVal(r, {S(2), S(7)}), monoVal(r, {S(3), S(6)})};
        break;
    }
  }
  int minAll = INT32_MAX / 2;
  for (auto& m : monos) minAll = std::min(minAll, m.v);
  int exactAtMin = 0;
  bool boundAtMin = false;
  for (auto& m : monos) {
    if (m.v == minAll) {
      if (m.exact) ++exactAtMin;
      else boundAtMin = true;
    }
  }
  if (exactAtMin == 1 && !boundAtMin) return {true, minAll};
  if (exactAtMin == 0) return {false, minAll}; // all bounded or none at min
  return {false, minAll};                      // ties: only a bound
}

// membership status of a term's support data on an atom
enum class OnAtom { Everywhere, Nowhere, Partial };

OnAtom setOnState(const CoordSet& s, const CoordState& st, int windowHi) {
  if (s.kind == SetKind::All) return OnAtom::Everywhere;
  if (s.kind == SetKind::ZeroOnly)
    throw std::logic_error("schwartzEqual: ZeroOnly coordinate sets are unsupported");
  if (st.tail) {
    // valuation >= windowHi or zero
    if (s.kind == SetKind::Ideal)
      return s.level <= windowHi ? OnAtom::Everywhere : OnAtom::Partial;
    // shell: zero not in shell, and any shell level >= hi is split by tail;
    // windows are sized so shell levels < hi.
    if (s.level < windowHi) return OnAtom::Nowhere;
    return OnAtom::Partial;
  }
  return s.containsVal(st.v) ? OnAtom::Everywhere : OnAtom::Nowhere;
}

// E-set status from the two coordinate states (c1 idx, c2 idx).
OnAtom eSetOnState(const FieldParams& F, const CoordSet& s, const CoordState& s1,
                   const CoordState& s2, int hi1, int hi2) {
  if (s.kind == SetKind::All) return OnAtom::Everywhere;
  if (s.kind == SetKind::ZeroOnly)
    throw std::logic_error("schwartzEqual: ZeroOnly coordinate sets are unsupported");
  // nu_E as a bound or exact value
  bool exact = !s1.tail && !s2.tail;
  int v;
  if (F.kind == ExtensionKind::Inert) {
    // nu_E(c1 + c2 sqrt(d)) = min(v(c1), v(c2)) exactly (unramified basis)
    v = std::min(s1.v, s2.v);
    if (s1.tail && s2.tail) exact = false;
    else if (s1.tail) exact = s1.v > s2.v;
    else if (s2.tail) exact = s2.v > s1.v;
    else exact = true;
  } else {
    int a = 2 * s1.v, b = 2 * s2.v + 1;
    v = std::min(a, b);
    if (s1.tail && s2.tail) exact = false;
    else if (s1.tail) exact = a > b;  // c1 only bounded: exact iff c2 part dominates
    else if (s2.tail) exact = b > a;
    else exact = true; // distinct parities: min always uniquely attained
  }
  (void)hi1; (void)hi2;
  if (s.kind == SetKind::Ideal) {
    if (v >= s.level) return OnAtom::Everywhere;
    if (exact) return OnAtom::Nowhere;
    // v is a bound below the level: the true valuation may or may not reach
    return OnAtom::Partial;
  }
  // Shell
  if (exact) return v == s.level ? OnAtom::Everywhere : OnAtom::Nowhere;
  if (v > s.level) return OnAtom::Nowhere; // true valuation >= v > level
  return OnAtom::Partial;
}

struct AtomValue {
  // key: twist bitmask over coordinates; value accumulated per residual
  // constraint signature
  std::map<std::pair<uint32_t, std::vector<FormConstraint>>, SymbolicScalar> parts;
  bool anyResidualConstraint = false;
};

} // namespace

EqualityResult schwartzEqual(const SchwartzFunction& f, const SchwartzFunction& g,
                             long long pointBudget) {
  if (f.onPairSpace() != g.onPairSpace())
    return {false, EqualityMethod::Canonical, "space mismatch"};
  const FieldParams& F = f.field();
  SchwartzFunction diff = (f + g.scaled(SymbolicScalar::integer(-1))).canonicalized();
  if (diff.empty()) return {true, EqualityMethod::Canonical, ""};

  bool pairSpace = f.onPairSpace();
  int n = coordCount(pairSpace);

  // Window per coordinate.
  std::vector<int> lo(n, 0), hi(n, 1);
  auto widen = [&](int idx, const CoordSet& s, bool eCoordPair) {
    if (s.kind == SetKind::All) {
      lo[idx] = std::min(lo[idx], -3);
      return;
    }
    if (s.kind == SetKind::ZeroOnly) return;
    int lv = s.level;
    if (eCoordPair) {
      // translate an E-level to L-coordinate bounds
      int a = (lv >= 0) ? (lv + 1) / 2 : lv / 2; // ceil(lv/2)
      lv = a - 1;                                // conservative
    }
    lo[idx] = std::min(lo[idx], lv - 1);
    hi[idx] = std::max(hi[idx], lv + 2);
  };
  for (const auto& t : diff.terms()) {
    const XSupport* sides[2] = {&t.x, &t.y};
    for (int sd = 0; sd < (pairSpace ? 2 : 1); ++sd) {
      int base = 4 * sd;
      if (F.kind == ExtensionKind::Split) {
        for (int i = 0; i < 4; ++i) widen(base + i, sides[sd]->lSet[i], false);
      } else {
        widen(base + 0, sides[sd]->eSet, true);
        widen(base + 1, sides[sd]->eSet, true);
        widen(base + 2, sides[sd]->lSet[2], false);
        widen(base + 3, sides[sd]->lSet[3], false);
      }
    }
    for (const auto& c : t.constraints) {
      (void)c; // constraint windows are covered by the box windows plus margin
    }
  }
  for (int i = 0; i < n; ++i) hi[i] += 2; // guard digits for constraints

  // Enumerate atoms: per coordinate a shell valuation in [lo, hi) or tail.
  std::vector<int> sizes(n);
  long long atomCount = 1;
  for (int i = 0; i < n; ++i) {
    sizes[i] = hi[i] - lo[i] + 1; // + tail
    atomCount *= sizes[i];
    if (atomCount > 80'000'000LL)
      return {false, EqualityMethod::Sampled, "atom space too large"};
  }

  auto termStatus = [&](const BoxTerm& t, const std::array<CoordState, 8>& st,
                        uint32_t& twistMask, int& chiSign,
                        std::vector<FormConstraint>& residual) -> OnAtom {
    twistMask = 0;
    chiSign = 1;
    residual.clear();
    const XSupport* sides[2] = {&t.x, &t.y};
    for (int sd = 0; sd < (pairSpace ? 2 : 1); ++sd) {
      int base = 4 * sd;
      if (F.kind == ExtensionKind::Split) {
        for (int i = 0; i < 4; ++i) {
          OnAtom r = setOnState(sides[sd]->lSet[i], st[base + i], hi[base + i]);
          if (r != OnAtom::Everywhere) return r;
        }
      } else {
        OnAtom r = eSetOnState(F, sides[sd]->eSet, st[base + 0], st[base + 1],
                               hi[base + 0], hi[base + 1]);
        if (r != OnAtom::Everywhere) return r;
        for (int i = 2; i < 4; ++i) {
          r = setOnState(sides[sd]->lSet[i], st[base + i], hi[base + i]);
          if (r != OnAtom::Everywhere) return r;
        }
      }
      for (int i = 0; i < 4; ++i) {
        if (sides[sd]->twist[i]) {
          // twisted coordinates are shells; value chi(pi^v u) = chi(pi)^v chi(u)
          twistMask |= 1u << (base + i);
          if (st[base + i].v % 2 != 0) {
            // chi(pi)-power: split impossible, inert gives (-1), ramified chiPiSign
            chiSign *= (F.kind == ExtensionKind::Inert) ? -1 : F.chiPiSign;
          }
          if (F.kind == ExtensionKind::Inert) {
            // chi is unramified: chi(u) = 1 for units; no residue dependence
            twistMask &= ~(1u << (base + i));
          }
        }
      }
    }
    for (const auto& c : t.constraints) {
      FormVal fv = formValOnAtom(F, c.form, st);
      if (fv.v >= c.level) continue; // satisfied on the whole atom
      if (fv.exact) return OnAtom::Nowhere;
      residual.push_back(c);
    }
    return OnAtom::Everywhere;
  };

  // Points needed for the sampled/exhaustive fallback on one atom.
  auto enumerateAtom = [&](const std::array<CoordState, 8>& st, long long& budget,
                           bool& exhausted) -> bool {
    // Enumerate unit residues at modest depth for shell coordinates, a zero
    // and a deep-shell representative for tails.
    int depth = 2;
    std::vector<std::vector<PadicElement>> reps(n);
    for (int i = 0; i < n; ++i) {
      if (st[i].tail) {
        reps[i].push_back(PadicElement::zero(F));
        reps[i].push_back(PadicElement::fromUnit(F, hi[i] + 1, 1, F.workingPrec));
      } else {
        long long md = 1;
        for (int d = 0; d < depth; ++d) md *= F.p;
        for (long long u = 1; u < md; ++u)
          if (u % F.p != 0)
            reps[i].push_back(PadicElement::fromUnit(F, st[i].v, u, F.workingPrec));
      }
    }
    std::vector<size_t> idx(n, 0);
    while (true) {
      if (--budget < 0) { exhausted = false; return true; }
      std::array<PadicElement, 8> coords;
      for (int i = 0; i < n; ++i) coords[i] = reps[i][idx[i]];
      XPoint px = XPoint::make(F, coords[0], coords[1], coords[2], coords[3]);
      SymbolicScalar v;
      if (pairSpace) {
        XPoint py = XPoint::make(F, coords[4], coords[5], coords[6], coords[7]);
        v = diff.evaluate(px, py);
      } else {
        v = diff.evaluate(px);
      }
      if (!v.isZero()) { exhausted = true; return false; }
      int k = n - 1;
      while (k >= 0 && ++idx[k] == reps[k].size()) idx[k--] = 0;
      if (k < 0) break;
    }
    exhausted = true;
    return true;
  };

  long long budget = pointBudget;
  bool sawSampled = false;
  std::vector<int> cursor(n, 0);
  while (true) {
    std::array<CoordState, 8> st{};
    for (int i = 0; i < n; ++i) {
      if (cursor[i] == sizes[i] - 1) st[i] = {true, hi[i]};
      else st[i] = {false, lo[i] + cursor[i]};
    }
    // accumulate values per (twist mask, residual constraints)
    std::map<std::pair<uint32_t, std::vector<FormConstraint>>, SymbolicScalar> parts;
    bool partial = false;
    for (const auto& t : diff.terms()) {
      uint32_t mask;
      int sign;
      std::vector<FormConstraint> residual;
      OnAtom r = termStatus(t, st, mask, sign, residual);
      if (r == OnAtom::Nowhere) continue;
      if (r == OnAtom::Partial) { partial = true; break; }
      auto key = std::make_pair(mask, residual);
      auto it = parts.find(key);
      SymbolicScalar add = t.coeff.timesSign(sign);
      if (it == parts.end()) parts[key] = add;
      else it->second += add;
    }
    bool needEnum = partial;
    if (!needEnum) {
      for (auto& [k, v] : parts) {
        if (v.isZero()) continue;
        if (k.second.empty()) {
          // clean nonzero coefficient against an independent character set
          return {false, EqualityMethod::AtomDecomposition, "nonzero atom"};
        }
        needEnum = true;
      }
    }
    if (needEnum) {
      bool exhausted;
      if (!enumerateAtom(st, budget, exhausted))
        return {false, EqualityMethod::ExhaustiveScan, "nonzero point found"};
      if (!exhausted) sawSampled = true;
    }
    int k = n - 1;
    while (k >= 0 && ++cursor[k] == sizes[k]) cursor[k--] = 0;
    if (k < 0) break;
  }
  if (sawSampled) return {true, EqualityMethod::Sampled, "budget exceeded"};
  return {true, EqualityMethod::AtomDecomposition, ""};
}

} // namespace thetalift
