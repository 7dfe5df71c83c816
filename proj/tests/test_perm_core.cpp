#include <doctest.h>

#include "oracles.hpp"
#include "schubert/errors.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

namespace {
Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }
} // namespace

TEST_CASE("parse_permutation accepts one-line notation") {
  CHECK(parse_permutation("1,4,3,2") == P({1, 4, 3, 2}));
  CHECK(parse_permutation(" 1, 4 ,3,2 ") == P({1, 4, 3, 2}));
  CHECK(parse_permutation("1").is_identity());
  CHECK(parse_permutation("1,2,3") == Permutation::identity());
}

TEST_CASE("parse_permutation rejects non-bijections") {
  CHECK_THROWS_AS(parse_permutation("2,2,1"), MalformedPermutation);
  CHECK_THROWS_AS(parse_permutation("1,4"), MalformedPermutation);
  CHECK_THROWS_AS(parse_permutation("0,1"), MalformedPermutation);
  CHECK_THROWS_AS(parse_permutation("-1,1"), MalformedPermutation);
  CHECK_THROWS_AS(parse_permutation(""), MalformedPermutation);
  CHECK_THROWS_AS(parse_permutation("1,,2"), MalformedPermutation);
  CHECK_THROWS_AS(parse_permutation("1,x"), MalformedPermutation);
}

TEST_CASE("canonical form strips trailing fixed points") {
  CHECK(P({2, 1, 3, 4}) == P({2, 1}));
  CHECK(P({2, 1, 3, 4}).size() == 2);
  CHECK(P({2, 1}).to_string() == "2,1");
  CHECK(P({1, 2, 3}).to_string() == "1");
  CHECK(P({2, 1})(7) == 7);
  CHECK(P({2, 1}).padded(4) == std::vector<int>{2, 1, 3, 4});
}

TEST_CASE("length counts inversions") {
  CHECK(length(Permutation::identity()) == 0);
  CHECK(length(P({1, 4, 3, 2})) == 3);
  CHECK(length(Permutation::longest(4)) == 6);
  CHECK(Permutation::longest(4) == P({4, 3, 2, 1}));
}

TEST_CASE("apply_transposition swaps positions and extends") {
  CHECK(apply_transposition(P({1, 4, 3, 2}), 1, 4) == P({2, 4, 3, 1}));
  CHECK(apply_transposition(Permutation::identity(), 1, 2) == P({2, 1}));
  CHECK(apply_transposition(P({1, 4, 3, 2}), 3, 5) == P({1, 4, 5, 2, 3}));
  CHECK(apply_transposition(P({2, 1}), 1, 2).is_identity());
  CHECK_THROWS_AS(apply_transposition(P({2, 1}), 2, 2), InvalidPositions);
  CHECK_THROWS_AS(apply_transposition(P({2, 1}), 3, 1), InvalidPositions);
  CHECK_THROWS_AS(apply_transposition(P({2, 1}), 0, 1), InvalidPositions);
}

TEST_CASE("lehmer_code examples") {
  CHECK(lehmer_code(Permutation::identity()) == std::vector<int>{0});
  CHECK(lehmer_code(P({2, 3, 4, 1, 5})) == std::vector<int>{1, 1, 1, 0});
  CHECK(lehmer_code(P({1, 2, 5, 3, 4})) == std::vector<int>{0, 0, 2, 0, 0});
}

TEST_CASE("code_to_permutation examples") {
  CHECK(code_to_permutation(std::vector<int>{0, 0, 0}).is_identity());
  CHECK(code_to_permutation(std::vector<int>{}).is_identity());
  CHECK(code_to_permutation(std::vector<int>{1, 1, 1, 0, 0}) == P({2, 3, 4, 1, 5}));
  CHECK(code_to_permutation(std::vector<int>{2, 0}) == P({3, 1, 2}));
  CHECK(code_to_permutation(std::vector<int>{0, 3}) == P({1, 5, 2, 3, 4}));
  CHECK_THROWS_AS(code_to_permutation(std::vector<int>{1, -1}), NotACode);
}

TEST_CASE("code_to_permutation agrees with exhaustive search") {
  for (const auto &code : std::vector<std::vector<int>>{{3}, {0, 2, 1}, {2, 0, 2}, {1, 2, 0, 1}})
    CHECK(code_to_permutation(code) == Permutation(oracle::word_with_code(code)));
}

TEST_CASE("is_grassmannian") {
  CHECK(is_grassmannian(P({1, 2, 5, 3, 4}), 3));
  CHECK(is_grassmannian(Permutation::identity(), 1));
  CHECK(is_grassmannian(Permutation::identity(), 4));
  CHECK_FALSE(is_grassmannian(P({1, 4, 3, 2}), 2));
  CHECK(is_grassmannian(P({2, 1}), 1));
  CHECK_FALSE(is_grassmannian(P({2, 1}), 2));
}

TEST_CASE("grassmannian_to_partition") {
  CHECK(grassmannian_to_partition(P({1, 2, 5, 3, 4}), 3) == Partition({2}));
  CHECK(grassmannian_to_partition(P({2, 3, 4, 1, 5}), 3) == Partition({1, 1, 1}));
  CHECK(grassmannian_to_partition(P({1, 2, 3, 5, 7, 4, 6}), 5) == Partition({2, 1}));
  CHECK(grassmannian_to_partition(P({1, 2, 3, 4, 8, 10, 5, 6, 7, 9}), 6) == Partition({4, 3}));
  CHECK_THROWS_AS(grassmannian_to_partition(P({1, 4, 3, 2}), 2), NotGrassmannian);
}

TEST_CASE("partition_to_grassmannian") {
  CHECK(partition_to_grassmannian(Partition({2, 1}), 5) == P({1, 2, 3, 5, 7, 4, 6}));
  CHECK(partition_to_grassmannian(Partition(), 3).is_identity());
  CHECK(partition_to_grassmannian(Partition({2}), 3) == P({1, 2, 5, 3, 4}));
  CHECK_THROWS_AS(partition_to_grassmannian(Partition({1, 1, 1}), 2), TooManyParts);
}

TEST_CASE("partitions validate and render") {
  CHECK(parse_partition("4,3") == Partition({4, 3}));
  CHECK(parse_partition("2,0") == Partition({2}));
  CHECK(parse_partition("0,0").rows() == 0);
  CHECK(Partition({4, 3}).weight() == 7);
  CHECK(Partition({4, 3})[5] == 0);
  CHECK_THROWS_AS(parse_partition("1,2"), MalformedPartition);
  CHECK_THROWS_AS(parse_partition("2,-1"), MalformedPartition);
  CHECK_THROWS_AS(parse_partition("a"), MalformedPartition);
}

TEST_CASE("property: code and length agree with brute force on S_1..S_6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto &word : oracle::all_words(n)) {
      const Permutation w(word);
      auto code = lehmer_code(w);
      auto brute = oracle::code_by_count(word);
      brute.resize(code.size());
      CHECK(code == brute);
      CHECK(length(w) == oracle::inversions(word));
      int sum = 0;
      for (int c : code)
        sum += c;
      CHECK(sum == length(w));
      CHECK(code_to_permutation(code) == w);
    }
}

TEST_CASE("property: transpositions change length, Pieri criterion iff +1") {
  for (int n = 1; n <= 6; ++n)
    for (const auto &word : oracle::all_words(n)) {
      const Permutation w(word);
      const int len = length(w);
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n + 1; ++b) {
          const auto v = apply_transposition(w, a, b);
          REQUIRE(length(v) != len);
          bool criterion = w(a) < w(b);
          for (int i = a + 1; i < b; ++i)
            criterion = criterion && !(w(a) < w(i) && w(i) < w(b));
          CHECK(criterion == (length(v) == len + 1));
        }
    }
}

TEST_CASE("property: Grassmannian round trip on S_1..S_6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto &word : oracle::all_words(n)) {
      const Permutation w(word);
      for (int k = 1; k <= n; ++k) {
        if (!is_grassmannian(w, k))
          continue;
        const auto lambda = grassmannian_to_partition(w, k);
        CHECK(partition_to_grassmannian(lambda, k) == w);
      }
    }
}

} // namespace schubert
