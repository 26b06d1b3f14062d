#include <doctest.h>

#include <stdexcept>

#include "nilpair/classifier.hpp"
#include "nilpair/json_io.hpp"

using namespace nilpair;
using namespace nilpair::classifier;

namespace {

const catalog::Family& family_named(const std::string& display) {
  for (const catalog::Family& f : catalog::families())
    if (f.display == display) return f;
  throw std::runtime_error("no family " + display);
}

}  // namespace

TEST_CASE("pair equation per family") {
  PairEquation a = pair_equation(family_named("L_{4,3}"), 6);
  CHECK(a.d == 2);
  CHECK(a.rhs == 4);  // m + 2c = 4
  CHECK(a.display() == "m + 2 c = 4   (c = dim K^2)");

  PairEquation b = pair_equation(family_named("L_{5,8}+A(1)"), 7);
  CHECK(b.rhs == 5);  // m + 4c = 5
  CHECK(*b.n - b.d == 4);

  PairEquation c = pair_equation(family_named("H(1)+A(n-3)"), 7);
  CHECK(c.d == 1);
  CHECK(c.rhs == 7);  // (n-1)c = 7
  CHECK_FALSE(c.n.has_value());

  CHECK_THROWS_AS(pair_equation(family_named("27B"), 6), std::invalid_argument);
}

TEST_CASE("feasibility rule") {
  CHECK_FALSE(feasible(2, 1));  // no 2-dim algebra with one-dim derived subalgebra
  CHECK(feasible(3, 1));        // H(1)
  CHECK_FALSE(feasible(0, 0));
  CHECK(feasible(0, 0, true));  // K = 0 admitted on request
  CHECK(feasible(1, 0));
  CHECK(feasible(4, 2));
  CHECK_FALSE(feasible(3, 2));
  CHECK_FALSE(feasible(-1, 0));
  CHECK_FALSE(feasible(0, 1, true));
}

TEST_CASE("resolve_K") {
  CHECK(resolve_K(4, 0).kind == KShape::Kind::Abelian);
  CHECK(resolve_K(4, 0).note() == "A(4)");
  CHECK(resolve_K(0, 0).kind == KShape::Kind::Trivial);
  CHECK(resolve_K(3, 1).note() == "H(1)");
  CHECK(resolve_K(std::nullopt, 1).note() == "H(r)+A(m-2r-1), r >= 1");
  KShape dd = resolve_K(std::nullopt, 3);
  CHECK(dd.kind == KShape::Kind::DerivedDim);
  CHECK(dd.m_min == 5);
  CHECK_THROWS_AS(resolve_K(2, 1), std::invalid_argument);
}

TEST_CASE("enumerate solutions") {
  SUBCASE("H(1)+A(n-3) at sigma = 6 gives n = 3, 4, 7") {
    PairEquation eq = pair_equation(family_named("H(1)+A(n-3)"), 6);
    auto sols = enumerate_solutions(eq, false);
    REQUIRE(sols.size() == 3);
    std::vector<std::pair<int, int>> got;
    for (const PairSolution& s : sols) got.push_back({*s.n, s.K.c});
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::pair<int, int>>{{3, 3}, {4, 2}, {7, 1}});
  }

  SUBCASE("H(r)+A(n-2r-1) at sigma = 7 forces n = 6, c = 1") {
    PairEquation eq = pair_equation(family_named("H(r)+A(n-2r-1)"), 7);
    auto sols = enumerate_solutions(eq, false);
    REQUIRE(sols.size() == 1);
    CHECK(*sols[0].n == 6);
    CHECK(sols[0].base == "H(2)");
    CHECK(sols[0].pad == 1);
    CHECK(sols[0].K.c == 1);
    CHECK(sols[0].K.kind == KShape::Kind::HeisenbergFamily);
  }

  SUBCASE("L_{6,26} at sigma = 6 is infeasible") {
    PairEquation eq = pair_equation(family_named("L_{6,26}"), 6);
    CHECK(enumerate_solutions(eq, false).empty());
    CHECK(enumerate_solutions(eq, true).empty());
  }

  SUBCASE("L_{5,8} at sigma = 7: K = A(6) and K = H(1)") {
    PairEquation eq = pair_equation(family_named("L_{5,8}"), 7);
    auto sols = enumerate_solutions(eq, false);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].K.note() == "A(6)");
    CHECK(sols[1].K.note() == "H(1)");
  }

  SUBCASE("rhs = 0 yields only the trivial pair, and only on request") {
    PairEquation eq = pair_equation(family_named("27B"), 7);
    CHECK(enumerate_solutions(eq, false).empty());
    auto sols = enumerate_solutions(eq, true);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].K.kind == KShape::Kind::Trivial);
  }
}

TEST_CASE("solution coverage predicate") {
  PairEquation eq = pair_equation(family_named("H(r)+A(n-2r-1)"), 2);
  auto sols = enumerate_solutions(eq, true);  // free n, free r, abelian K
  REQUIRE(sols.size() == 1);
  CHECK(solution_covers(sols[0], "H(2)", 0, 4, 0));
  CHECK(solution_covers(sols[0], "H(3)", 2, 0, 0));
  CHECK_FALSE(solution_covers(sols[0], "H(1)", 2, 1, 0));   // r >= 2 only
  CHECK_FALSE(solution_covers(sols[0], "H(2)", 0, 4, 1));   // K not abelian
  CHECK_FALSE(solution_covers(sols[0], "L_{5,8}", 0, 4, 0));
}

TEST_CASE("classify") {
  SUBCASE("sigma = 0 reproduces the single Heisenberg family") {
    ClassificationReport r = classify(0);
    CHECK(r.allow_trivial);  // default on for sigma <= 2
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0].n_display() == "H(1)+A(n-3)");
    CHECK(r.solutions[0].K.kind == KShape::Kind::Abelian);
    CHECK(r.solutions[0].K.m_min == 0);
  }

  SUBCASE("sigma = 1 is the trivial L_{5,8} pair") {
    ClassificationReport r = classify(1);
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0].n_display() == "L_{5,8}");
    CHECK(r.solutions[0].K.kind == KShape::Kind::Trivial);
  }

  SUBCASE("sigma = 5 includes (L_{6,26}, L_{6,26}+A(1))") {
    ClassificationReport r = classify(5);
    bool found = false;
    for (const PairSolution& s : r.solutions)
      if (s.n_display() == "L_{6,26}" && s.K.note() == "A(1)") found = true;
    CHECK(found);
  }

  SUBCASE("sigma = 7 contains the derived-but-unlisted (L_{5,8}, L_{5,8}+H(1))") {
    ClassificationReport r = classify(7);
    bool found = false;
    for (const PairSolution& s : r.solutions)
      if (s.n_display() == "L_{5,8}" && s.K.note() == "H(1)") found = true;
    CHECK(found);
  }

  SUBCASE("trivial-K override") {
    ClassifyOptions opt;
    opt.allow_trivial_k = false;
    CHECK(classify(1, opt).solutions.empty());
  }

  CHECK_THROWS_AS(classify(8), std::out_of_range);
  CHECK_THROWS_AS(classify(-1), std::out_of_range);
}

TEST_CASE("classification reports are deterministic") {
  std::string a = classification_to_json(classify(6)).dump();
  std::string b = classification_to_json(classify(6)).dump();
  CHECK(a == b);
  ClassificationReport r = classify(6);
  for (size_t i = 1; i < r.solutions.size(); ++i)
    CHECK(r.solutions[i - 1].source_s_n <= r.solutions[i].source_s_n);
}

TEST_CASE("verification against the reference lists") {
  SUBCASE("sigma = 3 diff consists of the two K = 0 endpoints") {
    VerifyReport vr = verify_theorems(3);
    CHECK(vr.clean());
    CHECK(vr.annotated == 2);
    CHECK(vr.matched == 4);
  }

  SUBCASE("sigma = 6 carries exactly the j = 8 / j = 9 errata") {
    VerifyReport vr = verify_theorems(6);
    CHECK(vr.clean());
    CHECK(vr.annotated == 2);
    int missing = 0, extra = 0;
    for (const DiffEntry& e : vr.entries) {
      if (e.kind == DiffEntry::Kind::Missing) {
        ++missing;
        CHECK(e.n_display == "L_{5,8}");
      }
      if (e.kind == DiffEntry::Kind::Extra) {
        ++extra;
        CHECK(e.n_display == "L_{5,9}");
      }
    }
    CHECK(missing == 1);
    CHECK(extra == 1);
    CHECK(vr.notes.size() == 1);
  }

  SUBCASE("sigma = 7 carries exactly the omitted (L_{5,8}, L_{5,8}+H(1))") {
    VerifyReport vr = verify_theorems(7);
    CHECK(vr.clean());
    CHECK(vr.annotated == 1);
    for (const DiffEntry& e : vr.entries)
      if (e.kind != DiffEntry::Kind::Matched) {
        CHECK(e.n_display == "L_{5,8}");
        CHECK(e.k_display == "H(1)");
        CHECK(e.kind == DiffEntry::Kind::Extra);
      }
  }

  SUBCASE("every sigma is clean after errata annotation") {
    for (const VerifyReport& vr : verify_all()) {
      CHECK_MESSAGE(vr.clean(), "sigma = " << vr.sigma);
      CHECK(vr.matched > 0);
    }
  }
}
