#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "kunzcount/counting.hpp"
#include "kunzcount/serialize.hpp"
#include "oracles.hpp"

using kunzcount::Int;

TEST_CASE("multiplicity 2: one semigroup per positive genus") {
  CHECK(kunzcount::count_mult2(0) == 0);
  for (Int g = 1; g <= 50; ++g) {
    CHECK(kunzcount::count_mult2(g) == 1);
    CHECK(kunzcount::count_kunz(2, g) == 1);
  }
  CHECK_THROWS_AS(kunzcount::count_mult2(-1), std::invalid_argument);
}

TEST_CASE("multiplicity 3 closed form") {
  const std::vector<Int> expected{0, 0, 1, 2, 2, 2, 3, 3, 3, 4, 4};
  for (Int g = 0; g <= 10; ++g) CHECK(kunzcount::count_mult3_closed(g) == expected[g]);
  CHECK(kunzcount::count_mult3_closed(204) == 69);
  for (Int g = 0; g <= 120; ++g) {
    CHECK(kunzcount::count_mult3_closed(g) == kunzcount::count_kunz(3, g));
  }
}

TEST_CASE("multiplicity 4 closed form matches the small table and enumeration") {
  const std::vector<Int> table{0, 0, 0, 1, 3, 4, 6, 7, 9, 11, 13};
  for (Int g = 0; g <= 10; ++g) {
    CHECK(kunzcount::count_mult4_closed(g) == table[g]);
    CHECK(kunzcount::count_kunz(4, g) == table[g]);
  }
  CHECK(kunzcount::count_mult4_closed(204) == 3570);
  for (Int g = 0; g <= 120; ++g) {
    CHECK(kunzcount::count_mult4_closed(g) == kunzcount::count_kunz(4, g));
  }
}

TEST_CASE("multiplicity 4 residue formulas") {
  // Anchors for the three Frobenius classes.
  CHECK(kunzcount::count_mult4_residue(9, 1) == 5);
  CHECK(kunzcount::count_mult4_residue(4, 2) == 1);
  CHECK(kunzcount::count_mult4_residue(6, 3) == 3);
  CHECK(kunzcount::count_mult4_residue(3, 3) == 1);
  CHECK(kunzcount::count_mult4_residue(3, 1) == 0);
  CHECK(kunzcount::count_mult4_residue(3, 2) == 0);
  CHECK(kunzcount::count_mult4_residue(0, 1) == 0);
  CHECK_THROWS_AS(kunzcount::count_mult4_residue(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(kunzcount::count_mult4_residue(5, 4), std::invalid_argument);

  for (Int g = 0; g <= 120; ++g) {
    Int total = 0;
    for (Int r = 1; r <= 3; ++r) {
      const Int byFormula = kunzcount::count_mult4_residue(g, r);
      CAPTURE(g);
      CAPTURE(r);
      CHECK(byFormula == kunzcount::count_kunz_case(g, r));
      total += byFormula;
    }
    CHECK(total == kunzcount::count_mult4_closed(g));
  }
}

TEST_CASE("restricted partitions count multiplicity 4 semigroups") {
  const std::vector<Int> expected{0, 1, 3, 4, 6, 7, 9, 11, 13};  // n = 8..16
  for (Int n = 8; n <= 16; ++n) {
    CHECK(kunzcount::partition_count_enumerated(n) == expected[n - 8]);
  }
  CHECK(kunzcount::partition_count_enumerated(0) == 0);
  CHECK(kunzcount::partition_count_closed(15) == 11);
  CHECK_THROWS_AS(kunzcount::partition_count_enumerated(-1), std::invalid_argument);

  for (Int n = 0; n <= 150; ++n) {
    CAPTURE(n);
    CHECK(kunzcount::partition_count_closed(n) == kunzcount::partition_count_enumerated(n));
    CHECK(kunzcount::partition_count_enumerated(n) == oracle::partition_triples(n));
  }
  for (Int g = 0; g <= 120; ++g) {
    CHECK(kunzcount::partition_count_enumerated(g + 6) == kunzcount::count_mult4_closed(g));
  }
}

TEST_CASE("multiplicity 5 counts by enumeration") {
  const std::vector<Int> expected{0, 0, 0, 0, 1, 4, 7, 10, 13, 16, 22};
  for (Int g = 0; g <= 10; ++g) CHECK(kunzcount::count_mult5_enumerated(g) == expected[g]);
}

TEST_CASE("count_enumerated wraps the lattice count in a report") {
  const auto report = kunzcount::count_enumerated(4, 204, 2);
  CHECK(report == kunzcount::CountReport{4, 204, kunzcount::CountMethod::enumeration, 3570});
  CHECK(kunzcount::to_json(report) ==
        R"({"m":4,"g":204,"method":"enumeration","value":3570})");
  CHECK_THROWS_AS(kunzcount::count_enumerated(1, 3), std::invalid_argument);
}

TEST_CASE("method names serialize stably") {
  CHECK(kunzcount::to_string(kunzcount::CountMethod::closed_form) == "closed_form");
  CHECK(kunzcount::to_string(kunzcount::CountMethod::enumeration) == "enumeration");
  CHECK(kunzcount::to_string(kunzcount::CountMethod::partition) == "partition");
  CHECK(kunzcount::to_string(kunzcount::CountMethod::residue_sum) == "residue_sum");
}

TEST_CASE("closed forms refuse arguments outside the exact range") {
  CHECK_THROWS_AS(kunzcount::count_mult4_closed(-1), std::invalid_argument);
  CHECK_THROWS_AS(kunzcount::count_mult4_closed(Int{1} << 40), std::overflow_error);
  CHECK_THROWS_AS(kunzcount::partition_count_closed(Int{1} << 40), std::overflow_error);
}

TEST_CASE("window monotonicity verifier") {
  const auto ok = kunzcount::verify_nondecreasing(kunzcount::count_mult4_closed, 0, 300, 60);
  CHECK(ok.ok);
  CHECK_FALSE(ok.first_violation.has_value());
  CHECK_FALSE(ok.violation_window().has_value());
  CHECK(ok.period == 60);
  CHECK(kunzcount::to_json(ok) ==
        R"({"period":60,"start":0,"end":300,"ok":true,"first_violation":null,"violation_window":null})");

  CHECK(kunzcount::verify_nondecreasing(kunzcount::count_mult3_closed, 2, 300, 3).ok);
  CHECK(kunzcount::verify_nondecreasing(kunzcount::count_mult2, 0, 50, 1).ok);

  const auto bad = kunzcount::verify_nondecreasing([](Int g) { return 100 - g; }, 70, 80, 60);
  CHECK_FALSE(bad.ok);
  CHECK(bad.first_violation == 70);
  CHECK(bad.violation_window() == 1);
  CHECK(kunzcount::to_json(bad) ==
        R"({"period":60,"start":70,"end":80,"ok":false,"first_violation":70,"violation_window":1})");

  // A single point is vacuously monotone.
  CHECK(kunzcount::verify_nondecreasing(kunzcount::count_mult2, 5, 5, 1).ok);
  CHECK_THROWS_AS(kunzcount::verify_nondecreasing(kunzcount::count_mult2, 5, 4, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(kunzcount::verify_nondecreasing(kunzcount::count_mult2, 0, 5, 0),
                  std::invalid_argument);
}
