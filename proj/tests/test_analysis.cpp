#include <catch2/catch_amalgamated.hpp>

#include <kirillov/analysis.hpp>

using namespace kirillov;

TEST_CASE("positivity holds for every mode through S_3", "[analysis]") {
  for (int n : {1, 2, 3})
    for (auto mode : {PositivityMode::symbolic, PositivityMode::gamma_zero,
                      PositivityMode::gamma_eq_minus_alpha_minus_beta,
                      PositivityMode::dz}) {
      auto scan = scan_positivity(n, mode);
      INFO("n = " << n << ", mode = " << static_cast<int>(mode));
      CHECK(scan.negatives == 0);
      CHECK(scan.rows.size() == static_cast<size_t>(Permutation::all(n).size()));
      for (const auto& row : scan.rows) CHECK(row.nonneg);
    }
}

TEST_CASE("exactly two negative witnesses appear in S_4", "[analysis]") {
  auto neg = negative_witnesses(4);
  REQUIRE(neg.size() == 2);
  CHECK(neg[0].w == parse_permutation("(1,3,2,4)", 4));
  CHECK(neg[1].w == parse_permutation("(1,4,2,3)", 4));
  CHECK(neg[0].w.oneline() == std::vector<int>{3, 4, 2, 1});
  CHECK(neg[1].w.oneline() == std::vector<int>{4, 3, 1, 2});
  for (const auto& row : neg) {
    REQUIRE(row.witness.has_value());
    CHECK(row.witness->second < 0);
  }
}

TEST_CASE("sign-flipped gamma = -alpha-beta scan stays positive in S_4",
          "[analysis]") {
  auto scan = scan_positivity(4, PositivityMode::gamma_eq_minus_alpha_minus_beta);
  CHECK(scan.negatives == 0);
}

TEST_CASE("remaining specializations stay positive in S_4", "[analysis]") {
  CHECK(scan_positivity(4, PositivityMode::gamma_zero).negatives == 0);
  CHECK(scan_positivity(4, PositivityMode::dz).negatives == 0);
}

TEST_CASE("key positivity fails inside the staircase", "[analysis]") {
  auto rep = key_positivity_counterexample();
  CHECK(rep.zeta.parts == std::vector<int>{1, 2, 2, 1});
  CHECK(rep.contained_in_staircase);
  CHECK(rep.has_negative);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->second < 0);
}

TEST_CASE("key positivity holds for small controls", "[analysis]") {
  // weakly decreasing shapes reduce to a bare monomial, and several genuinely
  // twisted shapes also stay positive
  for (auto zeta :
       {Composition({2, 1}), Composition({2, 2, 1}), Composition({0, 1}),
        Composition({1, 2}), Composition({0, 0, 2}), Composition({0, 1, 2}),
        Composition({0, 2, 1})}) {
    auto rep = key_polynomial(zeta, ReducedParams::symbolic()).nonneg_report();
    INFO("first part = " << zeta.parts[0]);
    CHECK(rep.all_nonneg);
  }
  // negatives do appear in three variables already
  CHECK_FALSE(key_polynomial(Composition({1, 2, 2}), ReducedParams::symbolic())
                  .nonneg_report()
                  .all_nonneg);
}

TEST_CASE("specializations match independent recursions", "[analysis]") {
  for (int n : {1, 2, 3}) {
    auto rep = specialization_crosschecks(n);
    INFO("n = " << n);
    CHECK(rep.ok());
    CHECK(rep.checked == 3l * static_cast<long>(Permutation::all(n).size()));
  }
}

TEST_CASE("specializations match independent recursions in S_4",
          "[.slow][analysis]") {
  auto rep = specialization_crosschecks(4);
  CHECK(rep.ok());
  CHECK(rep.checked == 72);
}

TEST_CASE("mode parsing and bounds", "[analysis]") {
  CHECK(parse_positivity_mode("symbolic") == PositivityMode::symbolic);
  CHECK(parse_positivity_mode("gamma0") == PositivityMode::gamma_zero);
  CHECK(parse_positivity_mode("neg") ==
        PositivityMode::gamma_eq_minus_alpha_minus_beta);
  CHECK(parse_positivity_mode("dz") == PositivityMode::dz);
  CHECK_THROWS_AS(parse_positivity_mode("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(scan_positivity(0, PositivityMode::dz), std::invalid_argument);
  CHECK_THROWS_AS(specialization_crosschecks(9), std::invalid_argument);
}
