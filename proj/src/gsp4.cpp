#include "thetalift/gsp4.hpp"

#include <sstream>

namespace thetalift {

Gsp4Matrix Gsp4Matrix::zero(const FieldParams& F) {
  Gsp4Matrix m;
  m.F = F;
  for (auto& x : m.e) x = PadicElement::zero(F);
  return m;
}

Gsp4Matrix Gsp4Matrix::identity(const FieldParams& F) {
  Gsp4Matrix m = zero(F);
  for (int i = 0; i < 4; ++i) m.at(i, i) = PadicElement::fromInteger(F, 1);
  return m;
}

Gsp4Matrix Gsp4Matrix::fromRows(const FieldParams& F, std::array<Rat, 16> entries) {
  Gsp4Matrix m = zero(F);
  for (int i = 0; i < 16; ++i) m.e[i] = PadicElement::fromRational(F, entries[i]);
  return m;
}

Gsp4Matrix Gsp4Matrix::mul(const Gsp4Matrix& o) const {
  Gsp4Matrix r = zero(F);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      PadicElement acc = PadicElement::zero(F);
      for (int k = 0; k < 4; ++k) acc = acc + at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

Gsp4Matrix Gsp4Matrix::transpose() const {
  Gsp4Matrix r = zero(F);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
  return r;
}

namespace {

Gsp4Matrix symplecticJ(const FieldParams& F) {
  Gsp4Matrix j = Gsp4Matrix::zero(F);
  auto one = PadicElement::fromInteger(F, 1);
  j.at(0, 2) = one;
  j.at(1, 3) = one;
  j.at(2, 0) = -one;
  j.at(3, 1) = -one;
  return j;
}

} // namespace

std::optional<PadicElement> Gsp4Matrix::similitude() const {
  Gsp4Matrix m = transpose().mul(symplecticJ(F)).mul(*this);
  PadicElement lam = m.at(0, 2);
  if (lam.isZero()) return std::nullopt;
  // expect [[0, lam I],[-lam I, 0]]
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bool lamSlot = (i == 0 && j == 2) || (i == 1 && j == 3);
      bool negSlot = (i == 2 && j == 0) || (i == 3 && j == 1);
      if (lamSlot) {
        if (m.at(i, j).isZero() || !m.at(i, j).equalUpToPrec(lam)) return std::nullopt;
      } else if (negSlot) {
        if (m.at(i, j).isZero() || !m.at(i, j).equalUpToPrec(-lam)) return std::nullopt;
      } else {
        if (!m.at(i, j).isZero()) return std::nullopt;
      }
    }
  return lam;
}

Gsp4Matrix Gsp4Matrix::inverse() const {
  auto lam = similitude();
  if (!lam) throw std::domain_error("Gsp4Matrix::inverse: not in GSp(4)");
  // g^{-1} = lambda^{-1} J^{-1} tg J, with J^{-1} = -J
  Gsp4Matrix j = symplecticJ(F);
  Gsp4Matrix mj = j;
  for (auto& x : mj.e) x = -x;
  Gsp4Matrix r = mj.mul(transpose()).mul(j);
  PadicElement li = lam->inv();
  for (auto& x : r.e) x = x * li;
  return r;
}

bool Gsp4Matrix::equalUpToPrec(const Gsp4Matrix& o) const {
  for (int i = 0; i < 16; ++i) {
    if (e[i].isZero() != o.e[i].isZero()) return false;
    if (!e[i].isZero() && !e[i].equalUpToPrec(o.e[i])) return false;
  }
  return true;
}

std::string Gsp4Matrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < 4; ++i) {
    out << "[";
    for (int j = 0; j < 4; ++j) out << at(i, j).str() << (j < 3 ? ", " : "");
    out << "]\n";
  }
  return out.str();
}

Gsp4Matrix genBlockDiag(const FieldParams& F, const Mat2L& A, const PadicElement& lam) {
  // [[A, 0], [0, lam tA^{-1}]]
  Gsp4Matrix g = Gsp4Matrix::zero(F);
  g.at(0, 0) = A.e[0];
  g.at(0, 1) = A.e[1];
  g.at(1, 0) = A.e[2];
  g.at(1, 1) = A.e[3];
  PadicElement di = A.det().inv();
  g.at(2, 2) = A.e[3] * di * lam;
  g.at(2, 3) = -A.e[2] * di * lam;
  g.at(3, 2) = -A.e[1] * di * lam;
  g.at(3, 3) = A.e[0] * di * lam;
  return g;
}

Gsp4Matrix genUpperSym(const FieldParams& F, const PadicElement& b1, const PadicElement& b2,
                       const PadicElement& b3) {
  Gsp4Matrix g = Gsp4Matrix::identity(F);
  g.at(0, 2) = b1;
  g.at(0, 3) = b2;
  g.at(1, 2) = b2;
  g.at(1, 3) = b3;
  return g;
}

Gsp4Matrix genLowerSym(const FieldParams& F, const PadicElement& c1, const PadicElement& c2,
                       const PadicElement& c3) {
  Gsp4Matrix g = Gsp4Matrix::identity(F);
  g.at(2, 0) = c1;
  g.at(2, 1) = c2;
  g.at(3, 0) = c2;
  g.at(3, 1) = c3;
  return g;
}

Gsp4Matrix genS2(const FieldParams& F) {
  Gsp4Matrix g = Gsp4Matrix::zero(F);
  auto one = PadicElement::fromInteger(F, 1);
  g.at(0, 0) = one;
  g.at(1, 3) = one;
  g.at(2, 2) = one;
  g.at(3, 1) = -one;
  return g;
}

Gsp4Matrix genTN(const FieldParams& F, int N) {
  Gsp4Matrix g = Gsp4Matrix::zero(F);
  auto one = PadicElement::fromInteger(F, 1);
  g.at(0, 2) = PadicElement::uniformizerPow(F, -N);
  g.at(1, 1) = one;
  g.at(2, 0) = -PadicElement::uniformizerPow(F, N);
  g.at(3, 3) = one;
  return g;
}

Gsp4Matrix genWeylJ(const FieldParams& F) {
  Gsp4Matrix g = Gsp4Matrix::zero(F);
  auto one = PadicElement::fromInteger(F, 1);
  g.at(0, 2) = one;
  g.at(1, 3) = one;
  g.at(2, 0) = -one;
  g.at(3, 1) = -one;
  return g;
}

namespace {

bool entryAtLeast(const PadicElement& x, int minVal) {
  return x.isZero() || x.val() >= minVal;
}

bool patternCheck(const Gsp4Matrix& g, const std::array<int, 16>& minVals) {
  for (int i = 0; i < 16; ++i)
    if (!entryAtLeast(g.e[i], minVals[i])) return false;
  return true;
}

} // namespace

bool inParamodular(const Gsp4Matrix& g, int N) {
  auto lam = g.similitude();
  if (!lam || lam->val() != 0) return false;
  std::array<int, 16> pat = {0, 0, -N, 0,
                             N, 0, 0,  0,
                             N, N, 0,  N,
                             N, 0, 0,  0};
  return patternCheck(g, pat);
}

bool inKlingen(const Gsp4Matrix& g, int N) {
  auto lam = g.similitude();
  if (!lam || lam->val() != 0) return false;
  std::array<int, 16> pat = {0, 0, 0, 0,
                             N, 0, 0, 0,
                             N, N, 0, N,
                             N, 0, 0, 0};
  return patternCheck(g, pat);
}

namespace {

Mat2L blockOf(const Gsp4Matrix& g, int bi, int bj) {
  Mat2L m;
  m.e = {g.at(2 * bi, 2 * bj), g.at(2 * bi, 2 * bj + 1), g.at(2 * bi + 1, 2 * bj),
         g.at(2 * bi + 1, 2 * bj + 1)};
  return m;
}

Mat2L mul2(const Mat2L& A, const Mat2L& B) {
  Mat2L r;
  r.e[0] = A.e[0] * B.e[0] + A.e[1] * B.e[2];
  r.e[1] = A.e[0] * B.e[1] + A.e[1] * B.e[3];
  r.e[2] = A.e[2] * B.e[0] + A.e[3] * B.e[2];
  r.e[3] = A.e[2] * B.e[1] + A.e[3] * B.e[3];
  return r;
}

Mat2L inv2(const Mat2L& A) {
  PadicElement di = A.det().inv();
  Mat2L r;
  r.e = {A.e[3] * di, -A.e[1] * di, -A.e[2] * di, A.e[0] * di};
  return r;
}

Mat2L transpose2(const Mat2L& A) {
  Mat2L r;
  r.e = {A.e[0], A.e[2], A.e[1], A.e[3]};
  return r;
}

bool inGamma0(const Mat2L& A, int N) {
  if (!entryAtLeast(A.e[0], 0) || !entryAtLeast(A.e[1], 0) || !entryAtLeast(A.e[3], 0))
    return false;
  if (!entryAtLeast(A.e[2], N)) return false;
  PadicElement d = A.det();
  return !d.isZero() && d.val() == 0;
}

bool symDomain(const Mat2L& B, int v11, int v12, int v22) {
  return entryAtLeast(B.e[0], v11) && entryAtLeast(B.e[1], v12) &&
         entryAtLeast(B.e[3], v22);
}

bool symmetricUpToPrec(const Mat2L& B) {
  if (B.e[1].isZero() != B.e[2].isZero()) return false;
  if (!B.e[1].isZero() && !B.e[1].equalUpToPrec(B.e[2])) return false;
  return true;
}

bool blocksEqual(const Mat2L& a, const Mat2L& b) {
  for (int i = 0; i < 4; ++i) {
    if (a.e[i].isZero() != b.e[i].isZero()) return false;
    if (!a.e[i].isZero() && !a.e[i].equalUpToPrec(b.e[i])) return false;
  }
  return true;
}

} // namespace

Verdict inT(const Gsp4Matrix& g, int N) {
  auto lam = g.similitude();
  if (!lam) return Verdict::No;
  if (lam->val() != 0 || lam->unitMod(lam->prec()) != 1) return Verdict::No;
  Mat2L P = blockOf(g, 0, 0), Q = blockOf(g, 0, 1), R = blockOf(g, 1, 0),
        S = blockOf(g, 1, 1);
  // UDL: g = [[I,B],[0,I]] [[A,0],[0,tA^{-1}]] [[I,0],[C,I]]
  //        = [[A + B R, B tA^{-1}],[tA^{-1} C, tA^{-1}]]  with  R = tA^{-1} C
  auto tryUDL = [&]() -> Verdict {
    if (S.det().isZero()) return Verdict::Undecided;
    Mat2L Si = inv2(S);
    Mat2L A = transpose2(Si); // tA^{-1} = S
    Mat2L B = mul2(Q, Si);
    Mat2L C = mul2(Si, R);
    Mat2L BR = mul2(B, R);
    Mat2L lhs;
    for (int i = 0; i < 4; ++i) lhs.e[i] = A.e[i] + BR.e[i];
    if (!blocksEqual(lhs, P)) return Verdict::No;
    if (!symmetricUpToPrec(B) || !symmetricUpToPrec(C)) return Verdict::No;
    bool ok = inGamma0(A, N) && symDomain(B, -N + 1, 0, 1) && symDomain(C, N, N - 1, 0);
    return ok ? Verdict::Yes : Verdict::No;
  };
  // LDU: g = [[I,0],[C,I]] [[A,0],[0,tA^{-1}]] [[I,B],[0,I]]
  //        = [[A, A B],[C A, C A B + tA^{-1}]]
  auto tryLDU = [&]() -> Verdict {
    if (P.det().isZero()) return Verdict::Undecided;
    Mat2L Pi = inv2(P);
    Mat2L A = P;
    Mat2L B = mul2(Pi, Q);
    Mat2L C = mul2(R, Pi);
    Mat2L CAB = mul2(mul2(C, A), B);
    Mat2L tAi = transpose2(inv2(A));
    Mat2L lhs;
    for (int i = 0; i < 4; ++i) lhs.e[i] = CAB.e[i] + tAi.e[i];
    if (!blocksEqual(lhs, S)) return Verdict::No;
    if (!symmetricUpToPrec(B) || !symmetricUpToPrec(C)) return Verdict::No;
    bool ok = inGamma0(A, N) && symDomain(B, -N + 1, 0, 1) && symDomain(C, N, N - 1, 0);
    return ok ? Verdict::Yes : Verdict::No;
  };
  try {
    Verdict v = tryUDL();
    if (v != Verdict::Undecided) return v;
    return tryLDU();
  } catch (const PrecisionExhausted&) {
    return Verdict::Undecided;
  }
}

IwahoriFactors iwahoriFactor(const Gsp4Matrix& k, int N) {
  const FieldParams& F = k.F;
  auto lamOpt = k.similitude();
  if (!lamOpt) throw std::domain_error("iwahoriFactor: not in GSp(4)");
  PadicElement lam = *lamOpt;
  if (!inKlingen(k, N)) throw std::domain_error("iwahoriFactor: not in Kl(p^N)");
  // peel the similitude off on the right: k = k0 * diag(1,1,lam,lam)
  Gsp4Matrix k0 = k;
  PadicElement li = lam.inv();
  for (int i = 0; i < 4; ++i) {
    k0.at(i, 2) = k0.at(i, 2) * li;
    k0.at(i, 3) = k0.at(i, 3) * li;
  }
  PadicElement u = k0.at(2, 2).inv();
  PadicElement piNi = PadicElement::uniformizerPow(F, -N);
  PadicElement cP = u * k0.at(2, 0) * piNi;
  PadicElement bP = u * k0.at(2, 1) * piNi;
  PadicElement aP = -(u * k0.at(2, 3)) * piNi;
  PadicElement a = -(u * k0.at(3, 2));
  PadicElement b = u * k0.at(1, 2);
  PadicElement c = u * k0.at(0, 2);
  PadicElement s3 = k0.at(3, 1) + a * k0.at(2, 1);
  PadicElement s4 = k0.at(3, 3) + a * k0.at(2, 3);
  PadicElement s1 = k0.at(1, 1) - b * k0.at(2, 1);
  PadicElement s2 = k0.at(1, 3) - b * k0.at(2, 3);

  IwahoriFactors out{Gsp4Matrix::zero(F), Gsp4Matrix::zero(F), Gsp4Matrix::zero(F),
                     u.inv(), {s1, s2, s3, s4}, lam};
  Gsp4Matrix& U = out.upper;
  U = Gsp4Matrix::identity(F);
  U.at(0, 1) = a;
  U.at(0, 2) = c;
  U.at(0, 3) = b;
  U.at(1, 2) = b;
  U.at(3, 2) = -a;
  Gsp4Matrix& M = out.levi;
  M = Gsp4Matrix::zero(F);
  M.at(0, 0) = u.inv();
  M.at(1, 1) = s1;
  M.at(1, 3) = s2;
  M.at(2, 2) = u;
  M.at(3, 1) = s3;
  M.at(3, 3) = s4;
  PadicElement piN = PadicElement::uniformizerPow(F, N);
  Gsp4Matrix& Lo = out.lower;
  Lo = Gsp4Matrix::identity(F);
  Lo.at(1, 0) = piN * aP;
  Lo.at(2, 0) = piN * cP;
  Lo.at(2, 1) = piN * bP;
  Lo.at(2, 3) = -(piN * aP);
  Lo.at(3, 0) = piN * bP;
  Gsp4Matrix prod = U.mul(M).mul(Lo);
  if (!prod.equalUpToPrec(k0))
    throw std::logic_error("iwahoriFactor: reconstruction failed");
  auto inO = [&](const PadicElement& x) { return x.isZero() || x.val() >= 0; };
  if (!(inO(a) && inO(b) && inO(c) && inO(aP) && inO(bP) && inO(cP)))
    throw std::logic_error("iwahoriFactor: factor out of domain");
  if (u.val() != 0) throw std::logic_error("iwahoriFactor: GL(1) part not a unit");
  PadicElement dets = s1 * s4 - s2 * s3;
  if (dets.isZero() || dets.val() != 0)
    throw std::logic_error("iwahoriFactor: Levi SL(2) block not in GL(2, o)");
  return out;
}

CosetList cosets(const FieldParams& F, CosetKind kind, int N) {
  CosetList out;
  out.N = N;
  auto z = PadicElement::zero(F);
  switch (kind) {
    case CosetKind::K_mod_Kl: {
      out.kind = "K_mod_Kl";
      if (N < 1) throw std::domain_error("cosets: K_mod_Kl needs N >= 1");
      long long qN = F.powp(N);
      for (long long uu = 0; uu < qN; ++uu) {
        PadicElement b1 =
            uu == 0 ? z : PadicElement::fromRational(F, Rat(uu, Rat::pow(Rat(F.p), N).num()));
        out.reps.push_back(genUpperSym(F, b1, z, z));
      }
      long long qN1 = F.powp(N - 1);
      Gsp4Matrix tN = genTN(F, N);
      for (long long uu = 0; uu < qN1; ++uu) {
        PadicElement b1 = uu == 0 ? z
                                  : PadicElement::fromRational(
                                        F, Rat(uu, Rat::pow(Rat(F.p), N - 1).num()));
        out.reps.push_back(tN.mul(genUpperSym(F, b1, z, z)));
      }
      return out;
    }
    case CosetKind::Kl_mod_KlT: {
      out.kind = "Kl_mod_KlT";
      out.reps.push_back(genS2(F));
      for (long long v = 0; v < F.p; ++v) {
        PadicElement b3 = v == 0 ? z : PadicElement::fromInteger(F, v);
        out.reps.push_back(genUpperSym(F, z, z, b3));
      }
      return out;
    }
    case CosetKind::K_mod_KT: {
      out.kind = "K_mod_KT";
      Gsp4Matrix tN = genTN(F, N);
      Gsp4Matrix s2 = genS2(F);
      Rat piN = Rat(1, Rat::pow(Rat(F.p), N).num());
      for (long long uu = 0; uu < F.p; ++uu) {
        PadicElement b1 = uu == 0 ? z : PadicElement::fromRational(F, Rat(uu) * piN);
        for (long long v = 0; v < F.p; ++v) {
          PadicElement b3 = v == 0 ? z : PadicElement::fromInteger(F, v);
          out.reps.push_back(genUpperSym(F, b1, z, b3));
        }
      }
      for (long long uu = 0; uu < F.p; ++uu) {
        PadicElement b1 = uu == 0 ? z : PadicElement::fromRational(F, Rat(uu) * piN);
        out.reps.push_back(s2.mul(genUpperSym(F, b1, z, z)));
      }
      for (long long v = 0; v < F.p; ++v) {
        PadicElement b3 = v == 0 ? z : PadicElement::fromInteger(F, v);
        out.reps.push_back(tN.mul(genUpperSym(F, z, z, b3)));
      }
      out.reps.push_back(tN.mul(s2));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

int identifyCoset(const CosetList& list, CosetKind kind, const Gsp4Matrix& g, int N) {
  for (size_t i = 0; i < list.reps.size(); ++i) {
    Gsp4Matrix d = list.reps[i].inverse().mul(g);
    switch (kind) {
      case CosetKind::K_mod_Kl:
        if (inKlingen(d, N)) return int(i);
        break;
      case CosetKind::Kl_mod_KlT:
      case CosetKind::K_mod_KT:
        if (inT(d, N) == Verdict::Yes) return int(i);
        break;
    }
  }
  return -1;
}

std::vector<GeneratorInstance> generatorInstances(const FieldParams& F, int N, int depth) {
  std::vector<GeneratorInstance> out;
  auto z = PadicElement::zero(F);
  auto one = PadicElement::fromInteger(F, 1);
  long long qd = F.powp(std::min(depth, 3));
  std::vector<Rat> unitReps, intReps;
  for (long long u = 1; u < qd; ++u)
    if (u % F.p != 0) unitReps.push_back(Rat(u));
  intReps.push_back(Rat(0));
  for (long long u = 1; u < qd; ++u) intReps.push_back(Rat(u));

  auto blockInstance = [&](const Mat2L& A) {
    GeneratorInstance gi{"blockDiag", genBlockDiag(F, A, one), A, z, z, z};
    out.push_back(std::move(gi));
  };
  for (const Rat& u : unitReps) {
    auto ue = PadicElement::fromRational(F, u);
    blockInstance(Mat2L::diag(F, ue, one));
    blockInstance(Mat2L::diag(F, one, ue));
  }
  for (const Rat& b : intReps) {
    if (b.isZero()) continue;
    blockInstance(Mat2L::make(F, one, PadicElement::fromRational(F, b), z, one));
    Rat cN = b * Rat::pow(Rat(F.p), N);
    blockInstance(Mat2L::make(F, one, z, PadicElement::fromRational(F, cN), one));
  }
  for (const Rat& b : {Rat(1), Rat(2)}) {
    for (const Rat& c : {Rat(1), Rat(2)}) {
      Rat cv = c * Rat::pow(Rat(F.p), N);
      auto bb = PadicElement::fromRational(F, b);
      auto cc = PadicElement::fromRational(F, cv);
      blockInstance(Mat2L::make(F, one, bb, cc, one + bb * cc));
    }
  }
  std::vector<Rat> b1Reps;
  b1Reps.push_back(Rat(0));
  for (int v = -N; v <= 1; ++v) {
    for (long long u = 1; u < F.p; ++u) {
      Rat r = v >= 0 ? Rat(u) * Rat::pow(Rat(F.p), v) : Rat(u, Rat::pow(Rat(F.p), -v).num());
      b1Reps.push_back(r);
    }
  }
  std::vector<Rat> bReps = {Rat(0), Rat(1), Rat(2), Rat(F.p)};
  for (const Rat& b1 : b1Reps)
    for (const Rat& b2 : bReps)
      for (const Rat& b3 : bReps) {
        if (b1.isZero() && b2.isZero() && b3.isZero()) continue;
        auto e1 = PadicElement::fromRational(F, b1);
        auto e2 = PadicElement::fromRational(F, b2);
        auto e3 = PadicElement::fromRational(F, b3);
        GeneratorInstance gi{"upperSym", genUpperSym(F, e1, e2, e3), Mat2L{}, e1, e2, e3};
        out.push_back(std::move(gi));
      }
  out.push_back({"s2", genS2(F), Mat2L{}, z, z, z});
  out.push_back({"tN", genTN(F, N), Mat2L{}, z, z, z});
  return out;
}

} // namespace thetalift
