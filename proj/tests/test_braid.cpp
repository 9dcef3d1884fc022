#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "ge/braid.hpp"
#include "ge/errors.hpp"
#include "ge/rng.hpp"

using namespace ge;

TEST_CASE("parse_word reads signed indices with optional exponents") {
  CHECK(parse_word("1 2 -1", 3).letters() == std::vector<int>{1, 2, -1});
  CHECK(parse_word("", 3).letters() == std::vector<int>{});
  CHECK(parse_word("1 2^2 -1", 3).letters() == std::vector<int>{1, 2, 2, -1});
  CHECK(parse_word("-2^3", 3).letters() == std::vector<int>{-2, -2, -2});
  CHECK(parse_word("+1", 2).letters() == std::vector<int>{1});
}

TEST_CASE("parse_word rejects out-of-range and malformed tokens") {
  CHECK_THROWS_AS(parse_word("3", 3), RangeError);
  CHECK_THROWS_AS(parse_word("1 4 1", 4), RangeError);
  CHECK_THROWS_AS(parse_word("x", 3), ParseError);
  CHECK_THROWS_AS(parse_word("0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1^0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1^", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1^2^2", 3), ParseError);
  CHECK_THROWS_AS(parse_word("2x", 3), ParseError);

  try {
    parse_word("1 2 9", 3);
    FAIL("expected a range error");
  } catch (const RangeError &e) {
    CHECK(std::string(e.what()).find("token 3") != std::string::npos);
  }
}

TEST_CASE("writhe sums crossing signs") {
  CHECK(writhe(parse_word("-2 -1 -2 -1", 3)) == -4);
  CHECK(writhe(BraidWord(3)) == 0);
  CHECK(writhe(parse_word("1 1 1", 2)) == 3);
}

TEST_CASE("permutation of the fixed four-letter word is a 3-cycle") {
  // Right-to-left composition sends 1->2, 2->3, 3->1 here; the reverse
  // reading order yields the inverse cycle.
  const Permutation pi = permutation(parse_word("-2 -1 -2 -1", 3));
  CHECK(pi.images() == std::vector<int>{2, 3, 1});
  CHECK(pi.is_even());
}

TEST_CASE("permutation basics") {
  CHECK(permutation(parse_word("1", 3)).images() == std::vector<int>{2, 1, 3});
  CHECK(permutation(BraidWord(4)).is_identity());
  CHECK(permutation(parse_word("1 2 1", 3)).images() == std::vector<int>{3, 2, 1});
}

TEST_CASE("permutation and writhe are homomorphisms with matching parity") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(trial % 5);
    const BraidWord u = random_word(n, 1 + trial % 17, derive_seed(7, trial));
    const BraidWord v = random_word(n, 1 + trial % 11, derive_seed(8, trial));
    CHECK(permutation(u * v) == permutation(u) * permutation(v));
    CHECK(writhe(u * v) == writhe(u) + writhe(v));
    CHECK(permutation(u).parity() == ((writhe(u) % 2) + 2) % 2);
  }
}

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  CHECK(free_reduce(parse_word("1 -1", 3)).empty());
  CHECK(free_reduce(parse_word("1 2 -2 -1", 3)).empty());
  CHECK(free_reduce(parse_word("1 2 1", 3)).letters() == std::vector<int>{1, 2, 1});
  CHECK(free_reduce(parse_word("1 -2 2 2", 3)).letters() == std::vector<int>{1, 2});

  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const BraidWord w = random_word(4, 24, derive_seed(11, trial));
    const BraidWord r = free_reduce(w);
    CHECK(writhe(r) == writhe(w));
    CHECK(permutation(r) == permutation(w));
  }
}

TEST_CASE("format_word roundtrips through parse_word") {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(trial % 4);
    const BraidWord w = random_word(n, trial % 19, derive_seed(13, trial));
    CHECK(parse_word(format_word(w), n) == w);
  }
}

TEST_CASE("random_word honors the alphabet and is seed-deterministic") {
  CHECK(random_word(3, 0, 5).empty());

  const BraidWord w2 = random_word(2, 5, 99);
  CHECK(w2.length() == 5);
  for (int letter : w2.letters()) CHECK((letter == 1 || letter == -1));

  CHECK(random_word(4, 40, 31) == random_word(4, 40, 31));
  CHECK(random_word(4, 40, 31) != random_word(4, 40, 32));
}

TEST_CASE("random_word letter frequencies stay within 3 sigma of uniform") {
  const std::size_t samples = 10'000;
  const BraidWord w = random_word(3, samples, 2024);
  std::map<int, std::size_t> counts;
  for (int letter : w.letters()) ++counts[letter];
  const double expected = static_cast<double>(samples) / 4.0;
  const double sigma = std::sqrt(static_cast<double>(samples) * 0.25 * 0.75);
  for (int letter : {1, -1, 2, -2}) {
    const double deviation = static_cast<double>(counts[letter]) - expected;
    CHECK(std::abs(deviation) <= 3.0 * sigma);
  }
}

TEST_CASE("braid word validation") {
  CHECK_THROWS_AS(BraidWord(1), ValidationError);
  CHECK_THROWS_AS(BraidWord(3, {0}), ValidationError);
  CHECK_THROWS_AS(BraidWord(3, {3}), RangeError);
  CHECK_THROWS_AS(random_word(1, 3, 0), ValidationError);
}
