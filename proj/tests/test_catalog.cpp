#include <doctest.h>

#include <set>
#include <stdexcept>

#include "nilpair/catalog.hpp"
#include "nilpair/invariants.hpp"

using namespace nilpair;
using catalog::Family;

namespace {

Rational coeff(const LieAlgebra& alg, int i, int j, int k) {
  SparseVec v = alg.sc().bracket_of_basis(i - 1, j - 1);
  auto it = v.find(k - 1);
  return it == v.end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("lookup returns the tabulated brackets") {
  SUBCASE("L_{6,22} at eps = 1") {
    LieAlgebra alg = catalog::lookup("L_{6,22}", {{"eps", Rational(1)}});
    CHECK(alg.dim() == 6);
    CHECK(coeff(alg, 1, 2, 5) == Rational(1));
    CHECK(coeff(alg, 3, 4, 5) == Rational(1));
    CHECK(coeff(alg, 1, 3, 6) == Rational(1));
    CHECK(coeff(alg, 2, 4, 6) == Rational(1));
  }

  SUBCASE("eps flows into the bracket") {
    LieAlgebra alg = catalog::lookup("L_{6,19}(-1/2)");
    CHECK(coeff(alg, 3, 5, 6) == Rational::parse("-1/2"));
    CHECK(catalog::lookup("L_{6,19}").sc() ==
          catalog::lookup("L_{6,19}", {{"eps", Rational(1)}}).sc());  // eps defaults to 1
  }

  SUBCASE("A and H take parameters") {
    CHECK(catalog::lookup("A", {{"k", Rational(4)}}).dim() == 4);
    CHECK(catalog::lookup("A(0)").dim() == 0);
    CHECK(catalog::lookup("H(2)").dim() == 5);
    CHECK_THROWS_AS(catalog::lookup("A"), std::invalid_argument);
    CHECK_THROWS_AS(catalog::lookup("H", {{"r", Rational(0)}}), std::invalid_argument);
  }

  SUBCASE("S_2") {
    LieAlgebra alg = catalog::lookup("S_2");
    CHECK(alg.dim() == 8);
    CHECK(coeff(alg, 1, 2, 4) == Rational(1));
    CHECK(coeff(alg, 1, 3, 5) == Rational(1));
    CHECK(coeff(alg, 6, 7, 5) == Rational(1));
    CHECK(coeff(alg, 7, 8, 5) == Rational(1));
  }

  SUBCASE("spellings") {
    CHECK(catalog::lookup("L5_8").sc() == catalog::lookup("L_{5,8}").sc());
    CHECK(catalog::lookup("l5,8").sc() == catalog::lookup("L_{5,8}").sc());
    CHECK(catalog::lookup("s2").sc() == catalog::lookup("S_2").sc());
    CHECK(catalog::canonical_name("L5_8") == "L_{5,8}");
  }

  SUBCASE("aliases L_{6,i} = L_{5,i} + A(1)") {
    for (int i = 5; i <= 9; ++i) {
      std::string six = "L_{6," + std::to_string(i) + "}";
      std::string five = "L_{5," + std::to_string(i) + "}+A(1)";
      CHECK(catalog::lookup(six).sc() == catalog::lookup(five).sc());
    }
  }

  SUBCASE("unknown names and bad params") {
    CHECK_THROWS_AS(catalog::lookup("L_{9,99}"), std::invalid_argument);
    CHECK_THROWS_AS(catalog::lookup("Q"), std::invalid_argument);
    CHECK_THROWS_AS(catalog::lookup(""), std::invalid_argument);
    CHECK_THROWS_AS(catalog::lookup("L_{5,8}(2)"), std::invalid_argument);  // takes no parameter
    CHECK_THROWS_AS(catalog::lookup("A(-1)"), std::invalid_argument);
  }

  SUBCASE("composite names") {
    CHECK(catalog::lookup("H(1)+H(2)").dim() == 8);
    CHECK(catalog::lookup("L_{6,10}.H(1)").dim() == 8);
    CHECK(catalog::lookup("L_{4,3}+A(2)+H(1)").dim() == 9);
  }
}

TEST_CASE("families carry the reference classification data") {
  CHECK(catalog::families_with_s(1).size() == 1);
  CHECK(catalog::families_with_s(1)[0]->display == "L_{5,8}");
  CHECK(catalog::families_with_s(0).size() == 1);
  CHECK(catalog::families_with_s(2).size() == 3);
  CHECK(catalog::families_with_s(3).size() == 5);
  CHECK(catalog::families_with_s(4).size() == 8);
  CHECK(catalog::families_with_s(5).size() == 11);
  CHECK(catalog::families_with_s(6).size() == 16);
  CHECK(catalog::families_with_s(7).size() == 24);
  CHECK_THROWS_AS(catalog::families_with_s(8), std::out_of_range);
  CHECK_THROWS_AS(catalog::families_with_s(-1), std::out_of_range);

  SUBCASE("the s = 3 list, member by member") {
    std::vector<std::string> displays;
    for (const Family* f : catalog::families_with_s(3)) displays.push_back(f->display);
    std::sort(displays.begin(), displays.end());
    CHECK(displays == std::vector<std::string>{"L_{4,3}+A(1)", "L_{5,5}", "L_{5,8}+A(2)",
                                               "L_{6,22}(eps)", "L_{6,26}"});
  }

  SUBCASE("the s = 7 list includes the named specials") {
    std::vector<std::string> displays;
    for (const Family* f : catalog::families_with_s(7)) displays.push_back(f->display);
    for (const char* need : {"27B", "S_1", "S_2", "S_3", "L_{6,10}.H(1)", "H(1)+H(2)", "257A",
                             "257C", "257F", "L_{6,21}(eps)"})
      CHECK_MESSAGE(std::find(displays.begin(), displays.end(), need) != displays.end(), need);
  }

  SUBCASE("hard-coded n and d agree with instances") {
    for (const Family& f : catalog::families()) {
      LieAlgebra inst = f.instantiate();
      if (f.shape == Family::Shape::FixedSum) CHECK(inst.dim() == *f.n);
      CHECK_MESSAGE(inst.derived_subalgebra().rank() == f.d, f.display);
    }
  }
}

TEST_CASE("self check recomputes every reference s-value") {
  catalog::SelfCheckReport report = catalog::self_check(12);
  CHECK(report.all_ok);
  CHECK(report.entries.size() > 100);
  for (const catalog::SelfCheckEntry& e : report.entries)
    CHECK_MESSAGE(e.ok, e.instance << ": s = " << e.computed_s << " vs " << e.expected_s);

  SUBCASE("spot values") {
    CHECK(s_invariant(catalog::lookup("L_{6,26}")) == 3);
    CHECK(s_invariant(catalog::lookup("157")) == 6);
    CHECK(s_invariant(catalog::lookup("H(2)+A(3)")) == 2);
  }
}

TEST_CASE("abelian padding shifts s by dim N^2 - 1") {
  for (const char* name : {"H(1)", "H(3)", "L_{4,3}", "L_{5,9}", "37A", "L_{6,26}", "257F"}) {
    LieAlgebra x = catalog::lookup(name);
    long shift = s_invariant(direct_sum(x, abelian(1))) - s_invariant(x);
    CHECK_MESSAGE(shift == x.derived_subalgebra().rank() - 1, name);
  }
}

TEST_CASE("listing names are unique and resolvable") {
  std::vector<std::string> names = catalog::listing_names();
  std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == names.size());
  for (const std::string& name : names) CHECK_NOTHROW(catalog::lookup(name));
}

TEST_CASE("classification instances stay inside the dimension cap") {
  auto instances = catalog::classification_instances(9);
  CHECK(instances.size() > 30);
  for (const catalog::Instance& inst : instances) {
    CHECK(inst.n <= 9);
    CHECK(inst.algebra.dim() == inst.n);
    CHECK(inst.algebra.is_nilpotent());
    CHECK(inst.family != nullptr);
  }
}
