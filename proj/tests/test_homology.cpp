#include <doctest.h>

#include <random>

#include "nilpair/catalog.hpp"
#include "nilpair/homology.hpp"
#include "nilpair/exterior.hpp"

using namespace nilpair;

TEST_CASE("exterior basis indexing is a lexicographic bijection") {
  for (int n : {2, 3, 5, 8, 12}) {
    ExteriorBasis ext(n);
    long idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        CHECK(ext.index2(i, j) == idx);
        auto [pi, pj] = ext.pair_at(idx);
        CHECK(pi == i);
        CHECK(pj == j);
        ++idx;
      }
    CHECK(idx == ext.size2());

    idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          CHECK(ext.index3(i, j, k) == idx);
          auto [ti, tj, tk] = ext.triple_at(idx);
          CHECK(ti == i);
          CHECK(tj == j);
          CHECK(tk == k);
          ++idx;
        }
    CHECK(idx == ext.size3());
  }

  ExteriorBasis ext(4);
  CHECK(ext.wedge2(2, 1) == std::pair<long, int>{ext.index2(1, 2), -1});
  CHECK(ext.wedge2(1, 1).second == 0);
}

TEST_CASE("rank of rational matrices") {
  RationalMatrix zero(4, 7);
  CHECK(zero.rank() == 0);

  RationalMatrix id(4, 4);
  for (int i = 0; i < 4; ++i) id.set(i, i, Rational(1));
  CHECK(id.rank() == 4);

  // 3x3 of rank 2 with fractions
  RationalMatrix m(3, 3);
  m.set(0, 0, Rational::parse("1/2"));
  m.set(0, 1, Rational(1));
  m.set(1, 0, Rational(1));
  m.set(1, 1, Rational(2));
  m.set(2, 2, Rational::parse("-7/3"));
  CHECK(m.rank() == 2);

  SUBCASE("wide vandermonde") {
    RationalMatrix v(3, 6);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 6; ++c) {
        long val = 1;
        for (int p = 0; p < r; ++p) val *= (c + 1);
        v.set(r, c, Rational(val));
      }
    CHECK(v.rank() == 3);
  }

  SUBCASE("entries beyond the int64 fast path fall back exactly") {
    BigInt huge("4611686018427387901");  // just below 2^62, prime-ish
    RationalMatrix big(2, 2);
    big.set(0, 0, Rational(huge, BigInt(1)));
    big.set(0, 1, Rational(1));
    big.set(1, 0, Rational(1));
    big.set(1, 1, Rational(huge, BigInt(1)));
    CHECK(big.rank() == 2);

    RationalMatrix sing(2, 2);
    Rational h(huge, BigInt(1));
    sing.set(0, 0, h);
    sing.set(0, 1, h * h);
    sing.set(1, 0, Rational(1));
    sing.set(1, 1, h);
    CHECK(sing.rank() == 1);

    // row2 = h^2 * row1, with h too large for the fast path
    RationalMatrix frac(2, 2);
    frac.set(0, 0, Rational(BigInt(1), huge));
    frac.set(0, 1, Rational(BigInt(1), huge * huge));
    frac.set(1, 0, Rational(huge, BigInt(1)));
    frac.set(1, 1, Rational(1));
    CHECK(frac.rank() == 1);
  }
}

TEST_CASE("d2 boundary") {
  LieAlgebra h1 = heisenberg(1);
  RationalMatrix d2 = d2_matrix(h1);
  CHECK(d2.rows() == 3);
  CHECK(d2.cols() == 3);
  CHECK(d2.rank() == 1);

  CHECK(d2_matrix(abelian(5)).is_zero());
  CHECK(d2_matrix(catalog::lookup("L_{4,3}")).rank() == 2);
  CHECK(d2_matrix(catalog::lookup("L_{6,26}")).rank() == 3);
}

TEST_CASE("d3 boundary") {
  CHECK(d3_matrix(heisenberg(1)).rank() == 0);
  CHECK(d3_matrix(abelian(6)).is_zero());
  // the two independent images e2^e5 - e3^e4 and e4^e5
  CHECK(d3_matrix(catalog::lookup("L_{5,8}")).rank() == 2);
  CHECK(d3_matrix(catalog::lookup("L_{6,26}")).rank() == 4);

  SUBCASE("signs on the (e1,e2,e3) column of L_{5,8}") {
    // [e1,e2]^e3 - [e1,e3]^e2 + [e2,e3]^e1 = e4^e3 - e5^e2 = -e3^e4 + e2^e5
    LieAlgebra l58 = catalog::lookup("L_{5,8}");
    RationalMatrix d3 = d3_matrix(l58);
    ExteriorBasis ext(5);
    long col = ext.index3(0, 1, 2);
    CHECK(d3.get(ext.index2(2, 3), col) == Rational(-1));
    CHECK(d3.get(ext.index2(1, 4), col) == Rational(1));
    CHECK(d3.get(ext.index2(3, 4), col) == Rational(0));
  }

  SUBCASE("shapes") {
    LieAlgebra l = catalog::lookup("37A");
    RationalMatrix d3 = d3_matrix(l);
    CHECK(d3.rows() == 21);
    CHECK(d3.cols() == 35);
  }
}

TEST_CASE("chain property: d2 o d3 = 0 on every catalog algebra") {
  for (const std::string& name : catalog::listing_names()) {
    LieAlgebra alg = catalog::lookup(name);
    CHECK_MESSAGE(multiply(d2_matrix(alg), d3_matrix(alg)).is_zero(), name);
  }
}

TEST_CASE("multiplier dimensions") {
  CHECK(multiplier_dim(heisenberg(1)) == 2);
  CHECK(multiplier_dim(heisenberg(3)) == 14);
  for (int n = 0; n <= 8; ++n) CHECK(multiplier_dim(abelian(n)) == n * (n - 1) / 2);
  CHECK(multiplier_dim(catalog::lookup("L_{5,8}")) == 6);
  CHECK(multiplier_dim(catalog::lookup("L_{4,3}")) == 2);
  CHECK(multiplier_dim(catalog::lookup("L_{6,26}")) == 8);
  CHECK(multiplier_dim(catalog::lookup("37A")) == 12);

  SUBCASE("bounds") {
    for (const std::string& name : catalog::listing_names()) {
      LieAlgebra alg = catalog::lookup(name);
      long m = multiplier_dim(alg);
      CHECK(m >= 0);
      CHECK(m <= static_cast<long>(alg.dim()) * (alg.dim() - 1) / 2);
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(multiplier_closed_abelian(0) == 0);
  CHECK(multiplier_closed_abelian(6) == 15);
  CHECK(multiplier_closed_heisenberg(1, 0) == 2);
  CHECK(multiplier_closed_heisenberg(2, 3) == 20);  // H(2)+A(3), total dim 8
  CHECK(multiplier_closed_heisenberg(1, 5) == 22);  // H(1)+A(5), total dim 8
  CHECK(multiplier_closed_sum_with_abelian(2, 4, 2, 2) == 7);  // L_{4,3}+A(2)

  CHECK(catalog::multiplier_dim_closed_form("A(6)") == 15);
  CHECK(catalog::multiplier_dim_closed_form("A(2)+A(4)") == 15);
  CHECK(catalog::multiplier_dim_closed_form("H(2)+A(3)") == 20);
  CHECK(catalog::multiplier_dim_closed_form("L_{4,3}+A(2)") == 7);
  CHECK_FALSE(catalog::multiplier_dim_closed_form("L_{5,8}").has_value());
  CHECK_FALSE(catalog::multiplier_dim_closed_form("H(1)+H(2)").has_value());
  CHECK_FALSE(catalog::multiplier_dim_closed_form("L_{6,10}.H(1)").has_value());

  SUBCASE("closed forms agree with homology wherever they apply") {
    for (int r = 1; r <= 3; ++r)
      for (int j = 0; 2 * r + 1 + j <= 10; ++j) {
        LieAlgebra alg = j ? direct_sum(heisenberg(r), abelian(j)) : heisenberg(r);
        CHECK(multiplier_dim(alg) == multiplier_closed_heisenberg(r, j));
      }
    for (const char* base : {"L_{4,3}", "L_{5,5}", "L_{6,13}", "27A"})
      for (int k = 1; k <= 3; ++k) {
        LieAlgebra x = catalog::lookup(base);
        CHECK(multiplier_dim(direct_sum(x, abelian(k))) ==
              *catalog::multiplier_dim_closed_form(std::string(base) + "+A(" + std::to_string(k) +
                                                   ")"));
      }
  }
}

TEST_CASE("direct-sum law on random catalog pairs") {
  std::vector<std::string> names = catalog::listing_names();
  std::mt19937 rng(1789);
  std::uniform_int_distribution<size_t> pick(0, names.size() - 1);
  int done = 0;
  while (done < 12) {
    LieAlgebra a = catalog::lookup(names[pick(rng)]);
    LieAlgebra b = catalog::lookup(names[pick(rng)]);
    if (a.dim() + b.dim() > 11) continue;
    long lhs = multiplier_dim(direct_sum(a, b));
    long rhs = multiplier_dim(a) + multiplier_dim(b) +
               static_cast<long>(a.dim() - a.derived_subalgebra().rank()) *
                   (b.dim() - b.derived_subalgebra().rank());
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("multiplier dimension is invariant under basis permutation") {
  std::mt19937 rng(4242);
  for (const char* name : {"L_{5,9}", "L_{6,22}", "37D", "257F", "L_{6,10}.H(1)"}) {
    LieAlgebra alg = catalog::lookup(name);
    long expected = multiplier_dim(alg);
    std::vector<int> perm(alg.dim());
    for (int i = 0; i < alg.dim(); ++i) perm[i] = i;
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(multiplier_dim(alg.relabel(perm)) == expected);
    }
  }
}
