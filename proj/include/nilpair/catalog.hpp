#ifndef NILPAIR_CATALOG_HPP
#define NILPAIR_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilpair/lie_algebra.hpp"

namespace nilpair::catalog {

using Params = std::map<std::string, Rational>;

/// Builds a named algebra. Accepts fixed catalog names ("L_{5,8}", "27A",
/// "S_2", also the "L5_8" spelling), parametric names ("A" with k, "H" with
/// r, or inline "A(4)", "H(2)"), parametrized families ("L_{6,22}" with eps,
/// or inline "L_{6,22}(-1)"), '+'-joined direct sums and '.'-joined central
/// products ("L_{6,10}.H(1)", glued along one-dimensional centers).
/// Throws std::invalid_argument for unknown names or bad parameters.
LieAlgebra lookup(const std::string& name, const Params& params = {});

/// Canonical spelling of a (possibly composite) catalog name.
std::string canonical_name(const std::string& name);

/// Fixed entries suitable for a stats listing (Table rows, aliases,
/// small Heisenbergs, the named sums and the central product).
std::vector<std::string> listing_names();

/// Default sample values for the family parameter eps.
const std::vector<Rational>& eps_samples();

/// One classification candidate family N with its reference s-value and the
/// derived-subalgebra dimension d the pair equation uses.
struct Family {
  enum class Shape {
    FixedSum,   // fixed base algebra plus a fixed abelian pad
    H1Padded,   // H(1) + A(n-3), n >= 3 free
    HrPadded,   // H(r) + A(n-2r-1), r >= 2, n >= 5 free
  };
  Shape shape = Shape::FixedSum;
  std::string base;     // catalog name of the base ("L_{5,8}", "H(1)+H(2)", ...)
  int pad = 0;          // fixed abelian padding
  bool has_eps = false;
  int s = 0;            // reference s(N)
  int d = 0;            // dim N^2 (asserted against computation in self_check)
  std::optional<int> n; // total dim for FixedSum
  int n_min = 3;        // for the free-n shapes
  std::string display;  // reference notation ("L_{6,6}", "H(r)+A(n-2r-1)", ...)

  bool free_n() const { return shape != Shape::FixedSum; }

  /// Concrete member. FixedSum ignores `total_dim`; for the padded shapes it
  /// selects n (H1Padded) or must satisfy total_dim = 2r+1+pad via `r`.
  LieAlgebra instantiate(std::optional<int> total_dim = std::nullopt,
                         const Rational& eps = Rational(1), int r = 0) const;
};

const std::vector<Family>& families();
std::vector<const Family*> families_with_s(int v);

struct SelfCheckEntry {
  std::string family;
  std::string instance;
  long expected_s = 0;
  long computed_s = 0;
  int expected_d = 0;
  int computed_d = 0;
  bool valid = false;      // Jacobi + nilpotency
  bool ok = false;
};

struct SelfCheckReport {
  std::vector<SelfCheckEntry> entries;
  bool all_ok = true;
};

/// Recomputes s for every family instance up to the dimension cap (eps
/// sampled over eps_samples()) and compares with the reference values.
SelfCheckReport self_check(int max_dim = 12);

/// Concrete family members used by the completeness oracle and when a
/// classifier solution is instance-checked.
struct Instance {
  const Family* family = nullptr;
  std::string base;    // concrete base name ("H(1)", "H(2)", "L_{5,8}", ...)
  int pad = 0;
  int n = 0;
  std::string display;
  LieAlgebra algebra;
};

std::vector<Instance> classification_instances(int max_dim);

/// Closed-form multiplier dimension for the covered family shapes
/// (abelian, Heisenberg plus abelian, fixed base plus abelian);
/// nullopt when no closed form applies.
std::optional<long> multiplier_dim_closed_form(const std::string& descriptor);

}  // namespace nilpair::catalog

#endif
