#ifndef NILPAIR_CLASSIFIER_HPP
#define NILPAIR_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilpair/catalog.hpp"

namespace nilpair::classifier {

/// Shape of the complement K in a solution. `m` empty means m is a free
/// parameter bounded below by m_min.
struct KShape {
  enum class Kind { Trivial, Abelian, HeisenbergFamily, DerivedDim };
  Kind kind = Kind::Trivial;
  int c = 0;
  std::optional<int> m;
  int m_min = 0;

  std::string note() const;
};

/// The relation (d-1) m + (n-d) dimK^2 = sigma - s(N), instantiated for one
/// candidate family.
struct PairEquation {
  const catalog::Family* family = nullptr;
  int s_n = 0;
  int d = 0;
  std::optional<int> n;  // empty for the free-n families
  long rhs = 0;          // sigma - s(N); nonnegative

  std::string display() const;
};

PairEquation pair_equation(const catalog::Family& family, int sigma);

/// A dimension pair (m, c) describes a real complement iff K is zero
/// (m = 0, allowed only when `allow_trivial`), abelian (c = 0, m >= 1), or a
/// nilpotent algebra with dim K^2 = c >= 1, which exists iff m >= c + 2.
bool feasible(int m, int c, bool allow_trivial = false);

/// K candidates for given (m, c): c = 0 -> A(m); c = 1 -> H(r)+A(m-2r-1);
/// c >= 2 -> any nilpotent K with dim K^2 = c. m empty = free.
KShape resolve_K(std::optional<int> m, int c);

struct PairSolution {
  const catalog::Family* family = nullptr;
  std::string base;      // concrete N base ("H(1)", "H(2)", "L_{5,8}", ...)
  int pad = -1;          // abelian padding of N; -1 = free
  std::optional<int> n;  // dim N when determined
  KShape K;
  int source_s_n = 0;

  std::string n_display() const;
  std::string l_display() const;
};

std::vector<PairSolution> enumerate_solutions(const PairEquation& eq, bool allow_trivial);

/// Whether a solution covers the concrete pair with N = `base` + A(`pad`)
/// and a complement of dimension m with dim K^2 = c.
bool solution_covers(const PairSolution& sol, const std::string& base, int pad, int m, int c);

struct ClassifyOptions {
  /// Defaults to true for sigma <= 2 and false otherwise (whether K = 0
  /// pairs are admitted).
  std::optional<bool> allow_trivial_k;
  /// Verify each solution on a smallest concrete (N, K) instance.
  bool instance_check = true;
};

struct ClassificationReport {
  int sigma = 0;
  bool allow_trivial = false;
  std::vector<PairSolution> solutions;
};

ClassificationReport classify(int sigma, const ClassifyOptions& options = {});

/// Cross-check of a report against the encoded reference list for sigma.
struct DiffEntry {
  enum class Kind { Matched, Missing, Extra };
  Kind kind = Kind::Matched;
  std::string n_display;
  std::string k_display;
  std::string erratum;  // nonempty = annotated reference-list defect
};

struct VerifyReport {
  int sigma = 0;
  std::vector<DiffEntry> entries;
  std::vector<std::string> notes;  // reference-list defects with no set difference
  int matched = 0;
  int annotated = 0;
  int unexplained = 0;
  bool clean() const { return unexplained == 0; }
};

VerifyReport verify_theorems(int sigma);
std::vector<VerifyReport> verify_all();

}  // namespace nilpair::classifier

#endif
