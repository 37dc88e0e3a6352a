#include "doctest.h"
#include "yangdex/exact.hpp"
#include "yangdex/gf2.hpp"

using namespace yangdex;

namespace {

IntMatrix make(int r, int c, std::vector<long> entries) {
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = entries[static_cast<size_t>(i) * c + j];
  return m;
}

}  // namespace

TEST_CASE("smith normal form on small frozen matrices") {
  SUBCASE("diagonal input stays put") {
    auto snf = smith_normal_form(make(2, 2, {2, 0, 0, 6}));
    CHECK(snf.diagonal == std::vector<Int>{2, 6});
    CHECK(snf.rank == 2);
  }
  SUBCASE("rank one") {
    auto snf = smith_normal_form(make(2, 2, {2, 4, 4, 8}));
    CHECK(snf.diagonal == std::vector<Int>{2, 0});
    CHECK(snf.rank == 1);
  }
  SUBCASE("unimodular row ops expose determinant") {
    auto snf = smith_normal_form(make(2, 2, {1, 2, 3, 4}));
    CHECK(snf.diagonal == std::vector<Int>{1, 2});
  }
  SUBCASE("divisibility chain is enforced") {
    auto snf = smith_normal_form(make(2, 2, {2, 0, 0, 3}));
    CHECK(snf.diagonal == std::vector<Int>{1, 6});
  }
  SUBCASE("non-square") {
    auto snf = smith_normal_form(make(2, 3, {1, 0, 0, 0, 0, 0}));
    CHECK(snf.diagonal == std::vector<Int>{1, 0});
    CHECK(snf.rank == 1);
  }
}

TEST_CASE("smith normal form transforms satisfy U A V = D") {
  IntMatrix a = make(3, 4, {6, 4, 2, 0, 4, 8, 6, 2, 2, 6, 10, 4});
  auto snf = smith_normal_form(a, true);
  REQUIRE(snf.u);
  REQUIRE(snf.v);
  REQUIRE(snf.u_inv);
  REQUIRE(snf.v_inv);

  IntMatrix d = snf.u->multiplied(a).multiplied(*snf.v);
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j) {
      Int want = (i == j && i < static_cast<int>(snf.diagonal.size())) ? snf.diagonal[i] : Int(0);
      CHECK(d.at(i, j) == want);
    }
  CHECK(snf.u->multiplied(*snf.u_inv).a == IntMatrix::identity(3).a);
  CHECK(snf.v->multiplied(*snf.v_inv).a == IntMatrix::identity(4).a);
  for (size_t i = 1; i < snf.diagonal.size(); ++i) {
    if (snf.diagonal[i] == 0) continue;
    CHECK(snf.diagonal[i] % snf.diagonal[i - 1] == 0);
  }
}

TEST_CASE("two primary elementary detection") {
  CHECK(two_primary_elementary({}));
  CHECK(two_primary_elementary({Int(2)}));
  CHECK(two_primary_elementary({Int(6)}));
  CHECK(two_primary_elementary({Int(1), Int(2), Int(2)}));
  CHECK(two_primary_elementary({Int(0)}));
  CHECK_FALSE(two_primary_elementary({Int(4)}));
  CHECK_FALSE(two_primary_elementary({Int(2), Int(12)}));
  CHECK_FALSE(two_primary_elementary({Int(8), Int(0)}));
}

TEST_CASE("integer solve") {
  IntMatrix a = make(2, 2, {2, 0, 0, 3});
  auto x = solve_integer(a, {Int(4), Int(9)});
  REQUIRE(x);
  CHECK(*x == std::vector<Int>{2, 3});
  CHECK_FALSE(solve_integer(a, {Int(3), Int(3)}));

  IntMatrix b = make(2, 3, {1, 1, 0, 0, 2, 2});
  auto y = solve_integer(b, {Int(5), Int(4)});
  REQUIRE(y);
  CHECK(b.apply(*y) == std::vector<Int>{5, 4});

  CHECK_FALSE(solve_integer(make(1, 1, {2}), {Int(1)}));
  CHECK(integer_rank(make(2, 2, {2, 4, 4, 8})) == 1);
}

TEST_CASE("rational solve") {
  RatMatrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  auto sol = rational_solve(a, {Rat(5), Rat(6)});
  REQUIRE(sol);
  CHECK(sol->unique);
  CHECK(sol->solution[0] == Rat(-4));
  CHECK(sol->solution[1] == Rat(9, 2));

  RatMatrix bad(2, 1);
  bad.at(0, 0) = 1;
  bad.at(1, 0) = 1;
  CHECK_FALSE(rational_solve(bad, {Rat(0), Rat(1)}));

  RatMatrix wide(1, 2);
  wide.at(0, 0) = 1;
  wide.at(0, 1) = 1;
  auto under = rational_solve(wide, {Rat(3)});
  REQUIRE(under);
  CHECK_FALSE(under->unique);
  CHECK(under->solution[0] + under->solution[1] == Rat(3));
}

TEST_CASE("gf2 matrix basics") {
  GF2Matrix a = GF2Matrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3);
  CHECK(a.rank() == 2);
  auto ns = a.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == std::vector<uint8_t>{1, 1, 1});

  auto x = a.solve({1, 1, 0});
  REQUIRE(x);
  CHECK(a.apply(*x) == std::vector<uint8_t>{1, 1, 0});
  CHECK_FALSE(a.solve({1, 0, 0}));

  GF2Matrix t = a.transposed();
  CHECK(t.rows() == 3);
  CHECK(t.get(2, 1) == a.get(1, 2));
  CHECK(gf2_rank(t) == 2);
}

TEST_CASE("gf2 elimination over many columns crosses word boundaries") {
  const int n = 130;
  GF2Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a.set(i, i, true);
    a.set(i, (i + 1) % n, true);
  }
  /* Circulant I + S over GF(2): singular exactly when n is even. */
  CHECK(a.rank() == n - 1);
  auto ns = a.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == std::vector<uint8_t>(n, 1));
}
