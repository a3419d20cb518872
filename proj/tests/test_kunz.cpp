#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "kunzcount/kunz.hpp"
#include "kunzcount/serialize.hpp"
#include "oracles.hpp"

using kunzcount::Int;
using kunzcount::KunzCoordinates;
using kunzcount::NumericalSemigroup;

namespace {

using Rows = std::vector<std::vector<Int>>;

std::set<std::vector<Int>> point_set(const std::vector<KunzCoordinates>& pts) {
  std::set<std::vector<Int>> out;
  for (const auto& p : pts) out.insert(p.k);
  return out;
}

}  // namespace

TEST_CASE("canonical inequality systems for small multiplicities") {
  CHECK(kunzcount::kunz_polytope(2).rows == Rows{{1, -1}});
  CHECK(kunzcount::kunz_polytope(3).rows ==
        Rows{{1, 0, -1}, {0, 1, -1}, {2, -1, 0}, {-1, 2, 1}});
  CHECK(kunzcount::kunz_polytope(4).rows ==
        Rows{{1, 0, 0, -1},
             {0, 1, 0, -1},
             {0, 0, 1, -1},
             {2, -1, 0, 0},
             {1, 1, -1, 0},
             {-1, 1, 1, 1},
             {0, -1, 2, 1}});
  CHECK_THROWS_AS(kunzcount::kunz_polytope(1), std::invalid_argument);
}

TEST_CASE("canonical row count is (m-1) + m(m-1)/2 - floor(m/2)") {
  for (Int m = 2; m <= 12; ++m) {
    const auto p = kunzcount::kunz_polytope(m);
    CHECK(static_cast<Int>(p.rows.size()) == (m - 1) + m * (m - 1) / 2 - m / 2);
    // Rows are pairwise distinct in the canonical system.
    auto rows = p.rows;
    std::sort(rows.begin(), rows.end());
    CHECK(std::adjacent_find(rows.begin(), rows.end()) == rows.end());
  }
}

TEST_CASE("verbatim system repeats the symmetric pair rows") {
  const auto p = kunzcount::kunz_polytope_verbatim(4);
  CHECK(p.rows == Rows{{1, 0, 0, -1},
                       {0, 1, 0, -1},
                       {0, 0, 1, -1},
                       {2, -1, 0, 0},
                       {1, 1, -1, 0},
                       {1, 1, -1, 0},
                       {-1, 1, 1, 1},
                       {-1, 1, 1, 1},
                       {0, -1, 2, 1}});
  CHECK(kunzcount::gap_style(p) ==
        "[ [ 1, 0, 0, -1 ], [ 0, 1, 0, -1 ], [ 0, 0, 1, -1 ], [ 2, -1, 0, 0 ], "
        "[ 1, 1, -1, 0 ], [ 1, 1, -1, 0 ], [ -1, 1, 1, 1 ], [ -1, 1, 1, 1 ], "
        "[ 0, -1, 2, 1 ] ]");
  // No i < j pair survives the i + j == m filter for m = 2 and m = 3.
  CHECK(kunzcount::kunz_polytope_verbatim(2).rows == kunzcount::kunz_polytope(2).rows);
  CHECK(kunzcount::kunz_polytope_verbatim(3).rows == kunzcount::kunz_polytope(3).rows);
}

TEST_CASE("reduced systems fix the position of the maximum coordinate") {
  const auto c1 = kunzcount::reduced_system(4, 1);
  CHECK(c1.rows == Rows{{1, 0, 0, -1},
                        {0, 1, 0, -1},
                        {0, 0, 1, -1},
                        {-1, 1, 1, 1},
                        {0, -1, 2, 1},
                        {1, -1, 0, -1},
                        {1, 0, -1, -1}});
  const auto c2 = kunzcount::reduced_system(4, 2);
  CHECK(c2.rows == Rows{{1, 0, 0, -1},
                        {0, 1, 0, -1},
                        {0, 0, 1, -1},
                        {2, -1, 0, 0},
                        {0, -1, 2, 1},
                        {-1, 1, 0, 0},
                        {0, 1, -1, -1}});
  const auto c3 = kunzcount::reduced_system(4, 3);
  CHECK(c3.rows == Rows{{1, 0, 0, -1},
                        {0, 1, 0, -1},
                        {0, 0, 1, -1},
                        {2, -1, 0, 0},
                        {1, 1, -1, 0},
                        {-1, 0, 1, 0},
                        {0, -1, 1, 0}});
  CHECK_THROWS_AS(kunzcount::reduced_system(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(kunzcount::reduced_system(4, 4), std::invalid_argument);
}

TEST_CASE("coordinates round-trip through the semigroup") {
  const auto s457 = NumericalSemigroup::from_generators({4, 5, 7});
  const auto kc = kunzcount::kunz_coordinates(s457);
  CHECK(kc == KunzCoordinates{4, {1, 2, 1}});
  CHECK(kc.genus() == 4);
  CHECK(kunzcount::kunz_frobenius(kc) == 6);
  CHECK(kunzcount::semigroup_from_kunz(kc) == s457);

  const auto s4679 = NumericalSemigroup::from_generators({4, 6, 7, 9});
  CHECK(kunzcount::kunz_coordinates(s4679) == KunzCoordinates{4, {2, 1, 1}});

  // The restricted root <m, ..., 2m-1> has all-ones coordinates.
  const auto s5 = NumericalSemigroup::from_generators({5, 6, 7, 8, 9});
  CHECK(kunzcount::kunz_coordinates(s5) == KunzCoordinates{5, {1, 1, 1, 1}});

  CHECK_THROWS_AS(kunzcount::kunz_coordinates(NumericalSemigroup::naturals()),
                  std::invalid_argument);
}

TEST_CASE("invalid Kunz vectors report the first violated row") {
  CHECK_THROWS_AS(kunzcount::semigroup_from_kunz({4, {1, 1}}), std::invalid_argument);
  try {
    kunzcount::semigroup_from_kunz({4, {1, 1, 0}});
    FAIL("expected NotKunzVectorError");
  } catch (const kunzcount::NotKunzVectorError& e) {
    CHECK(e.violated_row() == std::vector<Int>{0, 0, 1, -1});
  }
  try {
    kunzcount::semigroup_from_kunz({4, {1, 3, 1}});
    FAIL("expected NotKunzVectorError");
  } catch (const kunzcount::NotKunzVectorError& e) {
    CHECK(e.violated_row() == std::vector<Int>{2, -1, 0, 0});
  }
}

TEST_CASE("satisfies and first_violation agree") {
  const auto p = kunzcount::kunz_polytope(4);
  const std::vector<Int> good{1, 2, 1};
  const std::vector<Int> bad{1, 3, 1};
  CHECK(kunzcount::satisfies(p, good));
  CHECK_FALSE(kunzcount::first_violation(p, good).has_value());
  CHECK_FALSE(kunzcount::satisfies(p, bad));
  CHECK(kunzcount::first_violation(p, bad) == std::vector<Int>{2, -1, 0, 0});
  CHECK_THROWS_AS(kunzcount::satisfies(p, std::vector<Int>{1, 1}), std::invalid_argument);
}

TEST_CASE("lattice points at small genus are the known Kunz vectors") {
  const auto pts = kunzcount::enumerate_kunz(4, 4);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == KunzCoordinates{4, {1, 1, 2}});
  CHECK(pts[1] == KunzCoordinates{4, {1, 2, 1}});
  CHECK(pts[2] == KunzCoordinates{4, {2, 1, 1}});

  CHECK(kunzcount::enumerate_kunz(2, 5) == std::vector<KunzCoordinates>{{2, {5}}});
  CHECK(kunzcount::enumerate_kunz(4, 2).empty());
  CHECK(kunzcount::enumerate_kunz(6, 0).empty());
  CHECK(kunzcount::count_kunz(4, 204) == 3570);
  CHECK_THROWS_AS(kunzcount::enumerate_kunz(4, -1), std::invalid_argument);
}

TEST_CASE("enumerated points are exactly the valid Kunz vectors") {
  for (Int m = 2; m <= 6; ++m) {
    const auto polytope = kunzcount::kunz_polytope(m);
    for (Int g = 0; g <= 18; ++g) {
      const auto pts = kunzcount::enumerate_kunz(m, g);
      CHECK(static_cast<Int>(pts.size()) == kunzcount::count_kunz(m, g));
      CHECK(std::is_sorted(pts.begin(), pts.end()));
      CHECK(point_set(pts).size() == pts.size());
      for (const auto& p : pts) {
        CAPTURE(p.k);
        CHECK(kunzcount::satisfies(polytope, p.k));
        CHECK(p.genus() == g);
        const auto s = kunzcount::semigroup_from_kunz(p);
        CHECK(s.multiplicity() == m);
        CHECK(s.genus() == g);
        CHECK(s.frobenius() == kunzcount::kunz_frobenius(p));
        CHECK(kunzcount::kunz_coordinates(s) == p);
      }
    }
  }
}

TEST_CASE("lattice point counts match the exhaustive gap-set oracle") {
  const auto brute = oracle::gapset_search(10);
  for (Int m = 2; m <= 6; ++m) {
    for (Int g = 0; g <= 10; ++g) {
      CAPTURE(m);
      CAPTURE(g);
      CHECK(kunzcount::count_kunz(m, g) ==
            brute.per_genus_mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(m)]);
    }
  }
}

TEST_CASE("thread count never changes the result") {
  for (int threads : {2, 3, 8}) {
    CHECK(kunzcount::enumerate_kunz(4, 30, threads) == kunzcount::enumerate_kunz(4, 30, 1));
    CHECK(kunzcount::enumerate_kunz(5, 18, threads) == kunzcount::enumerate_kunz(5, 18, 1));
    CHECK(kunzcount::count_kunz(4, 120, threads) == kunzcount::count_kunz(4, 120, 1));
    CHECK(kunzcount::count_kunz(2, 9, threads) == 1);
  }
}

TEST_CASE("case enumeration splits the multiplicity-4 points by the maximum") {
  CHECK(kunzcount::enumerate_kunz_case(4, 3) ==
        std::vector<KunzCoordinates>{{4, {1, 1, 2}}});
  CHECK(kunzcount::enumerate_kunz_case(4, 1) ==
        std::vector<KunzCoordinates>{{4, {2, 1, 1}}});
  CHECK(kunzcount::count_kunz_case(9, 1) == 5);
  CHECK_THROWS_AS(kunzcount::enumerate_kunz_case(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(kunzcount::enumerate_kunz_case(4, 4), std::invalid_argument);

  for (Int g = 0; g <= 40; ++g) {
    const auto all = point_set(kunzcount::enumerate_kunz(4, g));
    std::set<std::vector<Int>> merged;
    std::size_t total = 0;
    for (Int i_star = 1; i_star <= 3; ++i_star) {
      const auto part = kunzcount::enumerate_kunz_case(g, i_star);
      total += part.size();
      for (const auto& p : part) {
        // The selected coordinate is the maximum, ties only to its left.
        const Int kmax = *std::max_element(p.k.begin(), p.k.end());
        CHECK(p.k[static_cast<std::size_t>(i_star - 1)] == kmax);
        for (Int i = i_star + 1; i <= 3; ++i) {
          CHECK(p.k[static_cast<std::size_t>(i - 1)] < kmax);
        }
        merged.insert(p.k);
      }
    }
    CAPTURE(g);
    CHECK(total == all.size());  // pairwise disjoint union
    CHECK(merged == all);
  }
}

TEST_CASE("the Frobenius residue mod 4 equals the case index") {
  for (Int g = 3; g <= 40; ++g) {
    for (Int i_star = 1; i_star <= 3; ++i_star) {
      for (const auto& p : kunzcount::enumerate_kunz_case(g, i_star)) {
        CHECK(kunzcount::kunz_frobenius(p) % 4 == i_star);
      }
    }
  }
}

TEST_CASE("for_each_lattice_point visits in lexicographic order") {
  const auto polytope = kunzcount::kunz_polytope(5);
  std::vector<std::vector<Int>> seen;
  kunzcount::for_each_lattice_point(polytope, 9, [&](std::span<const Int> k) {
    seen.emplace_back(k.begin(), k.end());
  });
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(static_cast<Int>(seen.size()) == kunzcount::count_kunz(5, 9));
}

TEST_CASE("serialization of rows and points") {
  const auto p3 = kunzcount::kunz_polytope(3);
  CHECK(kunzcount::rows_to_json(p3.rows) == "[[1,0,-1],[0,1,-1],[2,-1,0],[-1,2,1]]");
  CHECK(kunzcount::rows_to_csv(p3.rows) == "1,0,-1\n0,1,-1\n2,-1,0\n-1,2,1\n");
  CHECK(kunzcount::gap_style(p3) ==
        "[ [ 1, 0, -1 ], [ 0, 1, -1 ], [ 2, -1, 0 ], [ -1, 2, 1 ] ]");
  const auto rows = kunzcount::kunz_points_as_rows(kunzcount::enumerate_kunz(4, 4));
  CHECK(kunzcount::rows_to_json(rows) == "[[1,1,2],[1,2,1],[2,1,1]]");
  CHECK(kunzcount::rows_to_json({}) == "[]");
  CHECK(kunzcount::rows_to_csv({}).empty());
}
