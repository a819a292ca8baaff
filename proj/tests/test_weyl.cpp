#include <catch2/catch_amalgamated.hpp>

#include "kirillov/weyl.hpp"

using namespace kirillov;

TEST_CASE("permutation basics") {
  Permutation w({2, 3, 1});
  CHECK(w(1) == 2);
  CHECK(w.inverse() * w == Permutation::identity(3));
  CHECK(w * w.inverse() == Permutation::identity(3));
  CHECK(w.length() == 2);
  CHECK(Permutation::longest_element(4).length() == 6);
  CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("reduced words are reduced and multiply back") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : Permutation::all(n)) {
      auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(product_of_word(word, n) == w);
    }
  }
  // lexicographically least reduced word of w0 in S3
  CHECK(Permutation::longest_element(3).reduced_word() ==
        std::vector<int>{1, 2, 1});
}

TEST_CASE("cycle notation") {
  CHECK(cycles_to_oneline({{1, 3, 2, 4}}, 4) == Permutation({3, 4, 2, 1}));
  CHECK(cycles_to_oneline({{1, 4, 2, 3}}, 4) == Permutation({4, 3, 1, 2}));
  CHECK(cycles_to_oneline({{1, 2}, {3, 4}}, 4) == Permutation({2, 1, 4, 3}));
  CHECK_THROWS_AS(cycles_to_oneline({{1, 2}, {2, 3}}, 3), std::invalid_argument);
}

TEST_CASE("parse_permutation accepts one-line, cycles, and words") {
  CHECK(parse_permutation("231") == Permutation({2, 3, 1}));
  CHECK(parse_permutation("(1,3,2,4)", 4) == Permutation({3, 4, 2, 1}));
  CHECK(parse_permutation("s1 s2", 3) == Permutation({2, 3, 1}));
  CHECK(parse_permutation("s2", 3) == Permutation::simple(2, 3));
  CHECK_THROWS_AS(parse_permutation("xyz"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("231", 4), std::invalid_argument);
}

TEST_CASE("partitions and compositions") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition::staircase(3) == Partition({2, 1, 0}));
  CHECK(Partition({2, 1}).padded(4) == Partition({2, 1, 0, 0}));
  CHECK_THROWS_AS(Composition({1, -2}), std::invalid_argument);
  CHECK(Composition({3, 1, 1}).is_partition());
  CHECK_FALSE(Composition({1, 2}).is_partition());
}

TEST_CASE("sort_composition yields the minimal sorting permutation") {
  auto [sorted, v] = sort_composition(Composition({0, 1}));
  CHECK(sorted == Partition({1, 0}));
  CHECK(v == Permutation({2, 1}));

  auto [s2, v2] = sort_composition(Composition({1, 2, 2, 1}));
  CHECK(s2 == Partition({2, 2, 1, 1}));
  // (v . zeta)_i = zeta_{v(i)} recovers the sorted parts
  std::vector<int> zeta{1, 2, 2, 1};
  for (int i = 1; i <= v2.size(); ++i) CHECK(s2[i - 1] == zeta[v2(i) - 1]);
  // stability: equal parts keep their order, giving the minimal coset rep
  CHECK(v2 == Permutation({2, 3, 1, 4}));
  // brute force: no shorter permutation sorts zeta
  for (const auto& u : Permutation::all(4)) {
    bool sorts = true;
    for (int i = 1; i <= 4; ++i) sorts = sorts && s2[i - 1] == zeta[u(i) - 1];
    if (sorts) CHECK(u.length() >= v2.length());
  }

  auto [s3, v3] = sort_composition(Composition({2, 1, 0}));
  CHECK(v3.is_identity());
}
