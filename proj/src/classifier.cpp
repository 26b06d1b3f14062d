#include "nilpair/classifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nilpair/invariants.hpp"

namespace nilpair::classifier {

namespace {

std::string pad_suffix(int pad) {
  if (pad < 0) return "+A(*)";
  if (pad == 0) return "";
  return "+A(" + std::to_string(pad) + ")";
}

// smallest filiform algebra with dim L^2 = q - 2: [e1, ek] = e(k+1)
LieAlgebra filiform(int q) {
  if (q < 3) throw std::invalid_argument("filiform: need dim >= 3");
  StructureConstants sc(q);
  for (int k = 1; k + 1 < q; ++k) sc.add_coefficient(0, k, k + 1, Rational(1));
  return LieAlgebra(std::move(sc));
}

}  // namespace

std::string KShape::note() const {
  switch (kind) {
    case Kind::Trivial:
      return "0";
    case Kind::Abelian:
      if (m) return "A(" + std::to_string(*m) + ")";
      return "A(m), m >= " + std::to_string(m_min);
    case Kind::HeisenbergFamily:
      if (m && *m == 3) return "H(1)";
      if (m) return "H(r)+A(" + std::to_string(*m) + "-2r-1), 1 <= r <= " + std::to_string((*m - 1) / 2);
      return "H(r)+A(m-2r-1), r >= 1";
    case Kind::DerivedDim: {
      std::string out = "any nilpotent K with dim K^2 = " + std::to_string(c);
      if (m)
        out += ", dim K = " + std::to_string(*m);
      else
        out += ", dim K >= " + std::to_string(m_min);
      return out;
    }
  }
  return "?";
}

std::string PairEquation::display() const {
  std::string lhs;
  if (d == 1) {
    lhs = n ? std::to_string(*n - 1) + " c" : "(n-1) c";
  } else {
    lhs = (d == 2 ? "m" : std::to_string(d - 1) + " m");
    int coef = *n - d;
    lhs += " + " + (coef == 1 ? std::string("c") : std::to_string(coef) + " c");
  }
  return lhs + " = " + std::to_string(rhs) + "   (c = dim K^2)";
}

PairEquation pair_equation(const catalog::Family& family, int sigma) {
  if (family.s > sigma)
    throw std::invalid_argument("pair_equation: family has s(N) > sigma");
  PairEquation eq;
  eq.family = &family;
  eq.s_n = family.s;
  eq.d = family.d;
  eq.n = family.n;
  eq.rhs = sigma - family.s;
  return eq;
}

bool feasible(int m, int c, bool allow_trivial) {
  if (m < 0 || c < 0) return false;
  if (m == 0) return allow_trivial && c == 0;
  if (c == 0) return true;
  return m >= c + 2;
}

KShape resolve_K(std::optional<int> m, int c) {
  KShape k;
  k.c = c;
  k.m = m;
  if (c == 0) {
    if (m && *m == 0) {
      k.kind = KShape::Kind::Trivial;
      k.m_min = 0;
    } else {
      k.kind = KShape::Kind::Abelian;
      k.m_min = 1;
    }
  } else if (c == 1) {
    k.kind = KShape::Kind::HeisenbergFamily;
    k.m_min = 3;
  } else {
    k.kind = KShape::Kind::DerivedDim;
    k.m_min = c + 2;
  }
  if (m && !feasible(*m, c, true))
    throw std::invalid_argument("resolve_K: infeasible (m, c)");
  return k;
}

std::string PairSolution::n_display() const {
  if (pad < 0) {
    if (base == "H(1)") return "H(1)+A(n-3)";
    if (base == "H(r)") return "H(r)+A(n-2r-1)";
  }
  return base + pad_suffix(std::max(pad, 0));
}

std::string PairSolution::l_display() const {
  switch (K.kind) {
    case KShape::Kind::Trivial:
      return n_display();
    case KShape::Kind::Abelian:
      if (pad >= 0 && K.m) return base + pad_suffix(pad + *K.m);
      if (base == "H(1)" && pad < 0) return "H(1)+A(n+m-3)";
      if (base == "H(r)" && pad < 0) return "H(r)+A(n+m-2r-1)";
      return n_display() + "+A(m)";
    case KShape::Kind::HeisenbergFamily:
      if (K.m && *K.m == 3) return n_display() + "+H(1)";
      return n_display() + "+H(r)+A(m-2r-1)";
    case KShape::Kind::DerivedDim:
      return n_display() + "+K";
  }
  return n_display();
}

std::vector<PairSolution> enumerate_solutions(const PairEquation& eq, bool allow_trivial) {
  std::vector<PairSolution> out;
  const catalog::Family& f = *eq.family;

  auto push = [&](std::string base, int pad, std::optional<int> n, KShape k) {
    PairSolution sol;
    sol.family = &f;
    sol.base = std::move(base);
    sol.pad = pad;
    sol.n = n;
    sol.K = std::move(k);
    sol.source_s_n = eq.s_n;
    out.push_back(std::move(sol));
  };

  if (f.shape == catalog::Family::Shape::FixedSum) {
    const int n = *eq.n;
    const int d = eq.d;
    if (d < 2) throw std::logic_error("enumerate_solutions: fixed family with dim N^2 < 2");
    if (eq.rhs == 0) {
      if (allow_trivial) push(f.base, f.pad, n, resolve_K(0, 0));
      return out;
    }
    for (int c = 0; static_cast<long>(n - d) * c <= eq.rhs; ++c) {
      long rem = eq.rhs - static_cast<long>(n - d) * c;
      if (rem % (d - 1) != 0) continue;
      int m = static_cast<int>(rem / (d - 1));
      if (!feasible(m, c)) continue;
      push(f.base, f.pad, n, resolve_K(m, c));
    }
    return out;
  }

  // free-n families, d = 1: the equation degenerates to (n-1) c = rhs
  const bool h1 = f.shape == catalog::Family::Shape::H1Padded;
  if (eq.rhs == 0) {
    KShape k = resolve_K(std::nullopt, 0);
    k.m_min = allow_trivial ? 0 : 1;
    push(h1 ? "H(1)" : "H(r)", -1, std::nullopt, k);
    return out;
  }
  for (long a = 1; a <= eq.rhs; ++a) {
    if (eq.rhs % a != 0) continue;
    int n = static_cast<int>(a) + 1;
    int c = static_cast<int>(eq.rhs / a);
    if (n < f.n_min) continue;
    if (h1) {
      push("H(1)", n - 3, n, resolve_K(std::nullopt, c));
    } else {
      for (int r = 2; 2 * r + 1 <= n; ++r)
        push("H(" + std::to_string(r) + ")", n - 2 * r - 1, n, resolve_K(std::nullopt, c));
    }
  }
  return out;
}

bool solution_covers(const PairSolution& sol, const std::string& base, int pad, int m, int c) {
  if (sol.pad >= 0 && sol.pad != pad) return false;
  if (sol.base != base) {
    // the free-(r, n) Heisenberg solution covers every concrete H(r), r >= 2
    bool generic_hr = sol.base == "H(r)" && sol.pad < 0 && base.size() >= 4 &&
                      base.rfind("H(", 0) == 0 && base != "H(1)";
    if (!generic_hr) return false;
  }
  KShape expect = resolve_K(m == 0 ? std::optional<int>(0) : std::optional<int>(m), c);
  if (sol.K.kind != expect.kind || sol.K.c != c) {
    // a free abelian complement admitting m = 0 includes the K = 0 endpoint
    return expect.kind == KShape::Kind::Trivial && sol.K.kind == KShape::Kind::Abelian &&
           !sol.K.m && sol.K.m_min == 0;
  }
  if (sol.K.m) return *sol.K.m == m;
  return m >= sol.K.m_min;
}

namespace {

struct Atom {
  std::string base;
  int pad = 0;  // -1 free
  int kind = 0; // KShape::Kind as int
  int c = 0;
  int m = -2;   // -1 free
  int m_min = 0;

  auto key() const { return std::tie(base, pad, kind, c, m, m_min); }
  bool operator<(const Atom& o) const { return key() < o.key(); }
  bool operator==(const Atom& o) const { return key() == o.key(); }
};

Atom to_atom(const PairSolution& sol) {
  Atom a;
  a.base = sol.base;
  a.pad = sol.pad;
  a.kind = static_cast<int>(sol.K.kind);
  a.c = sol.K.c;
  a.m = sol.K.m ? *sol.K.m : -1;
  a.m_min = sol.K.m_min;
  return a;
}

std::string atom_n_display(const Atom& a) {
  if (a.pad < 0) {
    if (a.base == "H(1)") return "H(1)+A(n-3)";
    if (a.base == "H(r)") return "H(r)+A(n-2r-1)";
  }
  return a.base + pad_suffix(std::max(a.pad, 0));
}

std::string atom_k_display(const Atom& a) {
  KShape k;
  k.kind = static_cast<KShape::Kind>(a.kind);
  k.c = a.c;
  if (a.m >= 0) k.m = a.m;
  k.m_min = a.m_min;
  return k.note();
}

// ---- encoded reference lists -------------------------------------------
//
// One Atom per concrete pair entry, exactly as the reference tables print
// them (including their K = 0 endpoints and the j = 8 misprint; those carry
// errata annotations below).

Atom ab(const char* base, int pad, int m) { return {base, pad, 1, 0, m, 1}; }
Atom ab_free(const char* base, int pad, int m_min) { return {base, pad, 1, 0, -1, m_min}; }
Atom triv(const char* base, int pad) { return {base, pad, 0, 0, 0, 0}; }
Atom hfam_free(const char* base, int pad) { return {base, pad, 2, 1, -1, 3}; }
Atom hfam_m(const char* base, int pad, int m) { return {base, pad, 2, 1, m, 3}; }
Atom dd(const char* base, int pad, int c) { return {base, pad, 3, c, -1, c + 2}; }

const std::map<int, std::vector<Atom>>& statements() {
  static const std::map<int, std::vector<Atom>> data = [] {
    std::map<int, std::vector<Atom>> s;

    s[0] = {ab_free("H(1)", -1, 0)};

    s[1] = {triv("L_{5,8}", 0)};

    s[2] = {hfam_free("H(1)", 0), ab_free("H(r)", -1, 0), ab("L_{5,8}", 0, 1),
            triv("L_{5,8}", 1), triv("L_{4,3}", 0)};

    s[3] = {hfam_free("H(1)", 1),
            ab("L_{5,8}", 0, 2), ab("L_{5,8}", 1, 1), triv("L_{5,8}", 2),
            ab("L_{4,3}", 0, 1), triv("L_{4,3}", 1)};

    s[4] = {hfam_free("H(1)", 2),
            ab("L_{5,8}", 0, 3), ab("L_{5,8}", 1, 2), ab("L_{5,8}", 2, 1), triv("L_{5,8}", 3),
            ab("L_{4,3}", 0, 2), ab("L_{4,3}", 1, 1), triv("L_{4,3}", 2),
            ab("L_{5,5}", 0, 1), triv("L_{5,5}", 1),
            ab("L_{6,22}", 0, 1), triv("L_{6,22}", 1)};

    s[5] = {hfam_free("H(1)", 3),
            ab("L_{5,8}", 0, 4), ab("L_{5,8}", 1, 3), ab("L_{5,8}", 2, 2), ab("L_{5,8}", 3, 1),
            triv("L_{5,8}", 4),
            ab("L_{4,3}", 0, 3), ab("L_{4,3}", 1, 2), ab("L_{4,3}", 2, 1), triv("L_{4,3}", 3),
            ab("L_{5,5}", 0, 2), ab("L_{5,5}", 1, 1), triv("L_{5,5}", 2),
            ab("L_{6,22}", 0, 2), ab("L_{6,22}", 1, 1), triv("L_{6,22}", 2),
            ab("L_{6,26}", 0, 1), triv("L_{6,26}", 1)};

    s[6] = {hfam_free("H(1)", 4), dd("H(1)", 1, 2), dd("H(1)", 0, 3),
            hfam_free("H(2)", 0),
            ab("L_{5,8}", 0, 5), ab("L_{5,8}", 1, 4), ab("L_{5,8}", 2, 3), ab("L_{5,8}", 3, 2),
            ab("L_{5,8}", 4, 1),
            ab("L_{4,3}", 0, 4), ab("L_{4,3}", 1, 3), ab("L_{4,3}", 2, 2), ab("L_{4,3}", 3, 1),
            ab("L_{5,5}", 0, 3), ab("L_{5,5}", 1, 2), ab("L_{5,5}", 2, 1),
            ab("L_{6,22}", 0, 3), ab("L_{6,22}", 1, 2), ab("L_{6,22}", 2, 1),
            ab("L_{5,6}", 0, 1), ab("L_{5,7}", 0, 1), ab("L_{5,8}", 0, 1),
            ab("37A", 0, 1), ab("L_{6,10}", 0, 1)};

    s[7] = {hfam_free("H(1)", 5), hfam_free("H(2)", 1),
            ab("L_{5,8}", 0, 6), ab("L_{5,8}", 1, 5), ab("L_{5,8}", 2, 4), ab("L_{5,8}", 3, 3),
            ab("L_{5,8}", 4, 2), ab("L_{5,8}", 5, 1),
            hfam_m("L_{4,3}", 0, 3),
            ab("L_{4,3}", 0, 5), ab("L_{4,3}", 1, 4), ab("L_{4,3}", 2, 3), ab("L_{4,3}", 3, 2),
            ab("L_{4,3}", 4, 1),
            ab("L_{6,22}", 0, 4), ab("L_{6,22}", 1, 3), ab("L_{6,22}", 2, 2), ab("L_{6,22}", 3, 1),
            ab("L_{5,5}", 0, 4), ab("L_{5,5}", 1, 3), ab("L_{5,5}", 2, 2), ab("L_{5,5}", 3, 1),
            ab("L_{6,26}", 0, 2), ab("L_{6,26}", 1, 1),
            ab("L_{6,10}", 0, 2), ab("L_{6,10}", 1, 1),
            ab("L_{6,23}", 0, 1), ab("L_{6,25}", 0, 1), ab("L_{6,27}", 0, 1),
            ab("37B", 0, 1), ab("37D", 0, 1), ab("27A", 0, 1), ab("157", 0, 1)};

    return s;
  }();
  return data;
}

struct Erratum {
  int sigma;
  DiffEntry::Kind kind;  // Missing = listed but not derivable, Extra = derivable but unlisted
  Atom atom;
  const char* text;
};

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> data = [] {
    const char* endpoint =
        "reference list range includes its K = 0 endpoint, contradicting the stated "
        "non-zero-K hypothesis (the sigma = 6, 7 analyses drop L = N cases)";
    std::vector<Erratum> e = {
        {6, DiffEntry::Kind::Missing, ab("L_{5,8}", 0, 1),
         "reference list prints (L_{5,j}, L_{5,j}+A(1)) for j = 6,7,8, but the pair relation "
         "gives s(N,L) = 2 for j = 8; the derivation handles j = 9"},
        {6, DiffEntry::Kind::Extra, ab("L_{5,9}", 0, 1),
         "the j = 9 pair the derivation produces; the reference list prints j = 8 instead"},
        {7, DiffEntry::Kind::Extra, hfam_m("L_{5,8}", 0, 3),
         "reference list omits (L_{5,8}, L_{5,8}+H(1)); its derivation yields K = H(1) from "
         "m = 6 - 3 dimK^2 at dimK^2 = 1"},
        {4, DiffEntry::Kind::Extra, dd("H(1)", 0, 2),
         "reference list omits the n = 3 branch of (n-1) dimK^2 = 4: (H(1), H(1)+K) for any "
         "nilpotent K with dim K^2 = 2"},
        {3, DiffEntry::Kind::Missing, triv("L_{5,8}", 2), endpoint},
        {3, DiffEntry::Kind::Missing, triv("L_{4,3}", 1), endpoint},
        {4, DiffEntry::Kind::Missing, triv("L_{5,8}", 3), endpoint},
        {4, DiffEntry::Kind::Missing, triv("L_{4,3}", 2), endpoint},
        {4, DiffEntry::Kind::Missing, triv("L_{5,5}", 1), endpoint},
        {4, DiffEntry::Kind::Missing, triv("L_{6,22}", 1), endpoint},
        {5, DiffEntry::Kind::Missing, triv("L_{5,8}", 4), endpoint},
        {5, DiffEntry::Kind::Missing, triv("L_{4,3}", 3), endpoint},
        {5, DiffEntry::Kind::Missing, triv("L_{5,5}", 2), endpoint},
        {5, DiffEntry::Kind::Missing, triv("L_{6,22}", 2), endpoint},
        {5, DiffEntry::Kind::Missing, triv("L_{6,26}", 1), endpoint},
    };
    return e;
  }();
  return data;
}

const char* sigma6_note =
    "reference list line (L_{5,5}+A(1), L_{5,5}+A(3)) carries a dangling index "
    "'for all 0 <= i <= 2'; encoded as (L_{5,5}+A(i), L_{5,5}+A(3)), i = 0..2";

const Erratum* find_erratum(int sigma, DiffEntry::Kind kind, const Atom& atom) {
  for (const Erratum& e : errata())
    if (e.sigma == sigma && e.kind == kind && e.atom == atom) return &e;
  return nullptr;
}

LieAlgebra instantiate_N(const PairSolution& sol) {
  const catalog::Family& f = *sol.family;
  if (f.shape == catalog::Family::Shape::FixedSum) return f.instantiate();
  if (sol.pad < 0) return f.instantiate();  // free n: smallest member
  if (f.shape == catalog::Family::Shape::H1Padded) return f.instantiate(*sol.n);
  int r = std::stoi(sol.base.substr(2, sol.base.size() - 3));
  return f.instantiate(*sol.n, Rational(1), r);
}

LieAlgebra instantiate_K(const KShape& k, int m) {
  switch (k.kind) {
    case KShape::Kind::Trivial:
      return abelian(0);
    case KShape::Kind::Abelian:
      return abelian(m);
    case KShape::Kind::HeisenbergFamily:
      return m == 3 ? heisenberg(1) : direct_sum(heisenberg(1), abelian(m - 3));
    case KShape::Kind::DerivedDim:
      return m == k.c + 2 ? filiform(k.c + 2)
                          : direct_sum(filiform(k.c + 2), abelian(m - k.c - 2));
  }
  throw std::logic_error("instantiate_K: bad kind");
}

void instance_check(const PairSolution& sol, int sigma) {
  LieAlgebra n_alg = instantiate_N(sol);
  std::vector<int> sizes;
  if (sol.K.m) {
    sizes.push_back(*sol.K.m);
  } else {
    sizes.push_back(std::max(sol.K.m_min, sol.K.kind == KShape::Kind::Abelian ? 1 : sol.K.m_min));
    sizes.push_back(sizes.back() + (sol.K.kind == KShape::Kind::HeisenbergFamily ? 2 : 1));
  }
  for (int m : sizes) {
    if (m == 0 && sol.K.kind != KShape::Kind::Trivial) continue;
    SplitPair p = make_split_pair(n_alg, instantiate_K(sol.K, m));
    if (pair_s(p) != sigma)
      throw std::logic_error("classify: solution fails its instance check: " +
                             sol.n_display() + " with K = " + sol.K.note());
    if (!s_lower_bound_check(p))
      throw std::logic_error("classify: solution violates the s lower bound: " +
                             sol.n_display());
  }
}

}  // namespace

ClassificationReport classify(int sigma, const ClassifyOptions& options) {
  if (sigma < 0 || sigma > 7) throw std::out_of_range("classify: need 0 <= sigma <= 7");
  ClassificationReport report;
  report.sigma = sigma;
  report.allow_trivial = options.allow_trivial_k.value_or(sigma <= 2);

  for (int v = 0; v <= sigma; ++v)
    for (const catalog::Family* f : catalog::families_with_s(v)) {
      PairEquation eq = pair_equation(*f, sigma);
      for (PairSolution& sol : enumerate_solutions(eq, report.allow_trivial)) {
        if (options.instance_check) instance_check(sol, sigma);
        report.solutions.push_back(std::move(sol));
      }
    }

  std::sort(report.solutions.begin(), report.solutions.end(),
            [](const PairSolution& a, const PairSolution& b) {
              auto ka = std::tuple(a.source_s_n, a.n_display(), a.K.m ? *a.K.m : -1, a.K.c);
              auto kb = std::tuple(b.source_s_n, b.n_display(), b.K.m ? *b.K.m : -1, b.K.c);
              return ka < kb;
            });
  return report;
}

VerifyReport verify_theorems(int sigma) {
  VerifyReport out;
  out.sigma = sigma;

  ClassificationReport report = classify(sigma);
  std::vector<Atom> got;
  for (const PairSolution& sol : report.solutions) got.push_back(to_atom(sol));
  std::sort(got.begin(), got.end());

  std::vector<Atom> want = statements().at(sigma);
  std::sort(want.begin(), want.end());

  auto emit = [&](DiffEntry::Kind kind, const Atom& a) {
    DiffEntry entry;
    entry.kind = kind;
    entry.n_display = atom_n_display(a);
    entry.k_display = atom_k_display(a);
    if (kind == DiffEntry::Kind::Matched) {
      ++out.matched;
    } else if (const Erratum* e = find_erratum(sigma, kind, a)) {
      entry.erratum = e->text;
      ++out.annotated;
    } else {
      ++out.unexplained;
    }
    out.entries.push_back(std::move(entry));
  };

  size_t i = 0, j = 0;
  while (i < got.size() || j < want.size()) {
    if (j == want.size() || (i < got.size() && got[i] < want[j])) {
      emit(DiffEntry::Kind::Extra, got[i]);
      ++i;
    } else if (i == got.size() || want[j] < got[i]) {
      emit(DiffEntry::Kind::Missing, want[j]);
      ++j;
    } else {
      emit(DiffEntry::Kind::Matched, got[i]);
      ++i;
      ++j;
    }
  }
  if (sigma == 6) out.notes.push_back(sigma6_note);
  return out;
}

std::vector<VerifyReport> verify_all() {
  std::vector<VerifyReport> out;
  for (int sigma = 0; sigma <= 7; ++sigma) out.push_back(verify_theorems(sigma));
  return out;
}

}  // namespace nilpair::classifier
