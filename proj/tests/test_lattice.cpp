#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kirillov/lattice.hpp"

using namespace kirillov;

namespace {

ColorSet cs(std::initializer_list<int> colors) {
  ColorSet s = 0;
  for (int c : colors) s = cs_add(s, c);
  return s;
}

}  // namespace

TEST_CASE("h_poly small values") {
  int n = 1;
  Polynomial al = Polynomial::alpha(n), be = Polynomial::beta(n);
  CHECK(h_poly(0, n) == Polynomial::one(n));
  CHECK(h_poly(1, n) == al + be);
  CHECK(h_poly(3, n) == al.pow(3) + al.pow(2) * be + al * be.pow(2) + be.pow(3));
  CHECK_THROWS_AS(h_poly(-1, n), std::invalid_argument);
}

TEST_CASE("dagger small cases and dual-form agreement") {
  int n = 2, i = 1;
  Polynomial al = Polynomial::alpha(n), be = Polynomial::beta(n),
             ga = Polynomial::gamma(n), x = Polynomial::x(n, i);
  CHECK(dagger(0, n, i) == Polynomial::one(n));
  CHECK(dagger(1, n, i) == ga + (al + ga) * (be + ga) * x);
  CHECK(dagger(2, n, i) ==
        -(((al + ga) * (be + ga) * x + ga) * (al + be)) - al * be);
  // second printed form: (-1)^k (beta^k - (beta+gamma) h_{k-1} (1+(alpha+gamma)x))
  for (int k = 0; k <= 12; ++k) {
    Polynomial form2 = be.pow(k);
    if (k >= 1)
      form2 -= (be + ga) * h_poly(k - 1, n) * (Polynomial::one(n) + (al + ga) * x);
    if (k % 2 == 1) form2 = -form2;
    CHECK(dagger(k, n, i) == form2);
  }
}

TEST_CASE("ddagger small cases and dual-form agreement") {
  int n = 2;
  Polynomial al = Polynomial::alpha(n), be = Polynomial::beta(n),
             ga = Polynomial::gamma(n);
  CHECK(ddagger(1, 0, n) == Polynomial::one(n));
  CHECK(ddagger(2, 0, n) == ga);
  CHECK(ddagger(2, 1, n) == -be * ga);
  CHECK(ddagger(3, 0, n) == -(al * be + ga * (al + be)));
  CHECK_THROWS_AS(ddagger(0, 0, n), std::invalid_argument);
  CHECK_THROWS_AS(ddagger(2, 2, n), std::invalid_argument);
  // second printed form: (-1)^{k-1} (-beta)^m (beta^{k-1} - (beta+gamma) h_{k-2})
  for (int k = 1; k <= 12; ++k)
    for (int m = 0; m <= k - 1; ++m) {
      Polynomial form2 = be.pow(k - 1);
      if (k >= 2) form2 -= (be + ga) * h_poly(k - 2, n);
      form2 = (-be).pow(m) * form2;
      if (k % 2 == 0) form2 = -form2;
      CHECK(ddagger(k, m, n) == form2);
    }
}

TEST_CASE("vertex weights: table spot checks") {
  int n = 3, i = 1;
  Polynomial al = Polynomial::alpha(n), be = Polynomial::beta(n),
             ga = Polynomial::gamma(n), x = Polynomial::x(n, i);
  Polynomial one = Polynomial::one(n);

  auto r = vertex_weight(kPlus, 0, kPlus, n, i);
  REQUIRE(r);
  CHECK(r->first == 0);
  CHECK(r->second == one);

  r = vertex_weight(1, 0, 1, n, i);  // color through an empty column
  REQUIRE(r);
  CHECK(r->second == x);

  r = vertex_weight(2, cs({2, 3}), 2, n, i);  // c in Sigma, one color above
  REQUIRE(r);
  CHECK(r->first == cs({2, 3}));
  CHECK(r->second == (one + (al + be + ga) * x) * al * be);

  r = vertex_weight(kPlus, cs({3}), 1, n, i);  // turn down, pattern 3
  REQUIRE(r);
  CHECK(r->first == cs({1, 3}));
  CHECK(r->second == -al * (one + (al + ga) * x) * (one + (be + ga) * x));

  r = vertex_weight(2, cs({2}), kPlus, n, i);  // exit, pattern 4
  REQUIRE(r);
  CHECK(r->first == 0);
  CHECK(r->second == one);

  r = vertex_weight(1, cs({1}), 3, n, i);  // exchange west < east, pattern 5
  REQUIRE(r);
  CHECK(r->first == cs({3}));
  CHECK(r->second == one + (al + ga) * x);

  r = vertex_weight(3, cs({3}), 1, n, i);  // exchange west > east, pattern 6
  REQUIRE(r);
  CHECK(r->first == cs({1}));
  CHECK(r->second == one + (be + ga) * x);

  // inadmissible configurations
  CHECK_FALSE(vertex_weight(2, cs({1}), kPlus, n, i).has_value());
  CHECK_FALSE(vertex_weight(kPlus, cs({1}), 1, n, i).has_value());  // c in Sigma
  CHECK_FALSE(vertex_weight(1, cs({2}), kPlus, n, i).has_value());
  CHECK_FALSE(vertex_weight(1, cs({2}), 3, n, i).has_value());
}

TEST_CASE("west_options covers the admissible branch counts") {
  int n = 3, i = 2;
  CHECK(west_options(0, kPlus, n, i).size() == 1);
  CHECK(west_options(cs({2}), kPlus, n, i).size() == 2);
  CHECK(west_options(cs({1, 2}), kPlus, n, i).size() == 3);
  CHECK(west_options(cs({2}), 1, n, i).size() == 3);  // pass, turn, exchange
  CHECK(west_options(cs({2}), 2, n, i).size() == 1);  // only pass-through
  // every emitted option matches vertex_weight and conserves colors
  for (ColorSet north = 0; north < 8; ++north)
    for (HLabel east = 0; east <= 3; ++east)
      for (const auto& [west, south, w] : west_options(north, east, n, i)) {
        auto r = vertex_weight(west, north, east, n, i);
        REQUIRE(r);
        CHECK(r->first == south);
        CHECK(r->second == w);
        ColorSet in = north, out = south;
        if (east != kPlus) in = cs_add(in, east);
        if (west != kPlus) out = cs_add(out, west);
        CHECK(in == out);
      }
}

TEST_CASE("boundary construction") {
  auto b = boundary_from(Permutation::identity(3), Permutation::longest_element(3),
                         Partition::staircase(3), 2, 3);
  CHECK(b.left == std::vector<HLabel>{3, 2, 1});
  CHECK(b.top[2] == cs({1}));
  CHECK(b.top[1] == cs({2}));
  CHECK(b.top[0] == cs({3}));

  auto b2 = boundary_from(parse_permutation("s1 s2", 3), Permutation::simple(2, 3),
                          Partition({3, 1, 1}), 6, 3);
  CHECK(b2.left == std::vector<HLabel>{1, 3, 2});
  CHECK(b2.top[3] == cs({3}));
  CHECK(b2.top[1] == cs({1, 2}));
  for (int j : {0, 2, 4, 5, 6}) CHECK(b2.top[j] == 0);

  auto b3 = boundary_from(Permutation::identity(1), Permutation::identity(1),
                          Partition({0}), 4, 1);
  CHECK(b3.left == std::vector<HLabel>{1});
  CHECK(b3.top[0] == cs({1}));

  CHECK_THROWS_AS(boundary_from(Permutation::identity(2), Permutation::identity(2),
                                Partition({3, 0}), 2, 2),
                  std::invalid_argument);
}

TEST_CASE("state counts match the worked examples") {
  // unique state for w1 = id
  CHECK(count_states(boundary_from(Permutation::identity(3),
                                   Permutation::longest_element(3),
                                   Partition({3, 2, 0}), 3, 3)) == 1);
  // two states for the w = s2, lambda = (1,1,0) system
  CHECK(count_states(system_for_kn(Permutation::simple(2, 3),
                                   Partition({1, 1, 0}))) == 2);
  // three states for the mu = (3,1,1) example
  CHECK(count_states(boundary_from(parse_permutation("s1 s2", 3),
                                   Permutation::simple(2, 3), Partition({3, 1, 1}),
                                   6, 3)) == 3);
}

TEST_CASE("partition function reproduces the worked example") {
  int n = 3;
  Polynomial al = Polynomial::alpha(n), be = Polynomial::beta(n),
             ga = Polynomial::gamma(n);
  Polynomial x13 = Polynomial::x(n, 1).pow(3);
  Polynomial expect = x13 + (al + ga) * x13 * Polynomial::x(n, 2) +
                      ga * x13 * Polynomial::x(n, 3) +
                      (al + ga) * (be + ga) * x13 * Polynomial::x(n, 2) *
                          Polynomial::x(n, 3);
  CHECK(partition_function(system_for_kn(Permutation::simple(2, 3),
                                         Partition({1, 1, 0}))) == expect);

  // single-row degenerate case: one path crossing two empty columns
  CHECK(partition_function(boundary_from(Permutation::identity(1),
                                         Permutation::identity(1), Partition({0}),
                                         2, 1)) == Polynomial::x(1, 1).pow(2));
}

TEST_CASE("seed closed form") {
  // distinct parts: pure monomial
  CHECK(seed_closed_form(Partition({3, 2, 0}), 3, 3) ==
        Polynomial::x(3, 1).pow(3) * Polynomial::x(3, 2));
  // a doubled part contributes the k=2 exit weight gamma
  CHECK(seed_closed_form(Partition({1, 1}), 1, 2) == Polynomial::gamma(2));
  CHECK(seed_closed_form(Partition({2, 2, 2}), 2, 3) ==
        Polynomial::gamma(3) * ddagger(3, 0, 3));
  CHECK(seed_closed_form(Partition({0}), 2, 1) == Polynomial::x(1, 1).pow(2));
  CHECK_THROWS_AS(seed_closed_form(Partition({2, 0}), 1, 2), std::invalid_argument);
}

TEST_CASE("seed identity: Z(id boundary) equals the closed form") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> nd(1, 4), pd(0, 3), extra(0, 3);
  for (int trial = 0; trial < 12; ++trial) {
    int n = nd(rng);
    std::vector<int> mu(n);
    for (auto& m : mu) m = pd(rng);
    std::sort(mu.rbegin(), mu.rend());
    Partition m(mu);
    int N = mu[0] + extra(rng);
    auto b = boundary_from(Permutation::identity(n), Permutation::longest_element(n),
                           m, N, n);
    CHECK(count_states(b) == 1);
    CHECK(partition_function(b) == seed_closed_form(m, N, n));
  }
}

TEST_CASE("recursion: Z with w1 = s_i w equals T_i of Z with w1 = w") {
  GeneralParams p = ReducedParams::symbolic().general(3);
  Permutation w0 = Permutation::longest_element(3);
  Partition mu({2, 1, 1});
  int N = 3;
  for (const auto& w : Permutation::all(3)) {
    Polynomial z = partition_function(boundary_from(w, w0, mu, N, 3));
    for (int i = 1; i < 3; ++i) {
      Permutation sw = Permutation::simple(i, 3) * w;
      if (sw.length() <= w.length()) continue;
      Polynomial zs = partition_function(boundary_from(sw, w0, mu, N, 3));
      CHECK(zs == apply_T_general(p, i, z));
    }
  }
}

TEST_CASE("main identity at desk scale: Z = KN for S3") {
  for (const auto& w : Permutation::all(3))
    for (const auto& lam : {Partition::zero(3), Partition({1, 0, 0}),
                            Partition({1, 1, 0}), Partition({2, 1, 0})})
      CHECK(partition_function(system_for_kn(w, lam)) ==
            kirillov_poly(w, lam, ReducedParams::symbolic()));
}

TEST_CASE("gamma = 0 structure: single colors and non-negative weights") {
  // every state of an S3 system, specialized at gamma = 0: states with a
  // multi-color vertical edge have weight divisible by gamma
  std::map<int, Polynomial> g0;
  g0.emplace(VarContext::gamma_idx, Polynomial::zero(3));
  for (const auto& w : Permutation::all(3)) {
    auto b = system_for_kn(w, Partition::zero(3));
    enumerate_states(b, [&](const LatticeState& st) {
      bool multi = false;
      for (const auto& row : st.vert)
        for (ColorSet s : row) multi = multi || cs_size(s) > 1;
      Polynomial spec = st.weight.substitute(g0);
      if (multi) {
        CHECK(spec.is_zero());  // gamma divides the weight
      } else {
        CHECK(spec.nonneg_report().all_nonneg);
      }
    });
  }
}
