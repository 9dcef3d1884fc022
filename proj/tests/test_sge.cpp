#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ge/ge_action.hpp"
#include "ge/rng.hpp"
#include "ge/sge.hpp"

using namespace ge;

namespace {

IntMatrix unit_pair(int n, int i, int j) {
  return IntMatrix::unit(n, i, j) + IntMatrix::unit(n, j, i);
}

BraidWord random_pure_product(int n, int factors, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BraidWord w(n);
  for (int f = 0; f < factors; ++f) {
    const int i = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
    const int j = i + 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
    BraidWord gen = pure_generator(i, j, n);
    if (uniform_below(rng, 2) == 1) gen = gen.inverse();
    w = w * gen;
  }
  return w;
}

} // namespace

TEST_CASE("sge generator images and fixed words") {
  const SgeElement gen = sge_image(parse_word("1", 3));
  CHECK(gen.m() == IntMatrix::unit(3, 1, 2));
  CHECK(gen.pi().images() == std::vector<int>{2, 1, 3});

  // sigma_1 sigma_2 sigma_1: permutation is the transposition (1,3).
  const SgeElement three = sge_image(parse_word("1 2 1", 3));
  CHECK(three.m() ==
        IntMatrix::unit(3, 1, 2) + IntMatrix::unit(3, 1, 3) + IntMatrix::unit(3, 2, 3));
  CHECK(three.pi().images() == std::vector<int>{3, 2, 1});
  CHECK(three == sge_image(parse_word("2 1 2", 3)));

  const SgeElement a13 = sge_image(parse_word("2 1 1 -2", 3));
  CHECK(a13.m() == unit_pair(3, 1, 3));
  CHECK(a13.pi().is_identity());
}

TEST_CASE("braid relations hold exactly for n up to 6") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      CHECK(sge_image(BraidWord(n, {i, i + 1, i})) == sge_image(BraidWord(n, {i + 1, i, i + 1})));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        CHECK(sge_image(BraidWord(n, {i, j})) == sge_image(BraidWord(n, {j, i})));
  }
}

TEST_CASE("group law sanity") {
  for (std::uint64_t trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(trial % 5);
    const SgeElement a = sge_image(random_word(n, 10, derive_seed(201, trial)));
    const SgeElement b = sge_image(random_word(n, 10, derive_seed(202, trial)));
    const SgeElement c = sge_image(random_word(n, 10, derive_seed(203, trial)));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == SgeElement::identity(n));
    CHECK(a.inverse() * a == SgeElement::identity(n));
  }
}

TEST_CASE("sge_image is a homomorphism refining ge_image") {
  for (std::uint64_t trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(trial % 4);
    const BraidWord u = random_word(n, trial % 15, derive_seed(211, trial));
    const BraidWord v = random_word(n, trial % 9, derive_seed(212, trial));
    CHECK(sge_image(u * v) == sge_image(u) * sge_image(v));
    CHECK(sge_image(u).pi() == permutation(u));
  }
}

TEST_CASE("pure generators") {
  CHECK(pure_generator(1, 2, 3).letters() == std::vector<int>{1, 1});
  CHECK(pure_generator(1, 3, 3).letters() == std::vector<int>{2, 1, 1, -2});
  CHECK(pure_generator(2, 3, 3).letters() == std::vector<int>{2, 2});
  CHECK(pure_generator(2, 5, 6).letters() == std::vector<int>{4, 3, 2, 2, -3, -4});
  CHECK_THROWS_AS(pure_generator(0, 2, 3), RangeError);
  CHECK_THROWS_AS(pure_generator(2, 2, 3), RangeError);
  CHECK_THROWS_AS(pure_generator(1, 4, 3), RangeError);

  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const BraidWord w = pure_generator(i, j, n);
        CHECK(permutation(w).is_identity());
        CHECK(sge_image(w).m() == unit_pair(n, i, j));
        CHECK(ge_image(w).ell() ==
              [&] {
                std::vector<Int> e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i) - 1] = 1;
                e[static_cast<std::size_t>(j) - 1] = 1;
                return e;
              }());
      }
}

TEST_CASE("pure products have symmetric matrices whose row sums recover GE") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(trial % 3);
    const BraidWord w = random_pure_product(n, 5, derive_seed(221, trial));
    const SgeElement img = sge_image(w);
    CHECK(img.pi().is_identity());
    CHECK(img.m().is_symmetric());
    CHECK(img.m().row_sums() == ge_image(w).ell());
  }
}

TEST_CASE("cocycle F") {
  CHECK(cocycle_F(parse_word("1", 3)) ==
        IntMatrix::unit(3, 1, 2) - IntMatrix::unit(3, 2, 1));
  CHECK(cocycle_F(parse_word("1 1", 3)).is_zero());
  CHECK(cocycle_F(parse_word("1 -1", 3)).is_zero());

  // F(uv) = F(u) + pi_u . F(v)
  for (std::uint64_t trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(trial % 4);
    const BraidWord u = random_word(n, trial % 12, derive_seed(231, trial));
    const BraidWord v = random_word(n, trial % 10, derive_seed(232, trial));
    CHECK(cocycle_F(u * v) == cocycle_F(u) + cocycle_F(v).permuted(permutation(u)));
  }
}

TEST_CASE("Fbar fixed values and well-definedness") {
  CHECK(cocycle_Fbar(Permutation::identity(4)).is_zero());
  CHECK(cocycle_Fbar(Permutation::transposition(3, 1, 2)) ==
        IntMatrix::unit(3, 1, 2) - IntMatrix::unit(3, 2, 1));

  // 3-cycle 1->2, 2->3, 3->1 via the decomposition (1,2)(2,3).
  const IntMatrix expected = IntMatrix::unit(3, 1, 2) - IntMatrix::unit(3, 2, 1) +
                             IntMatrix::unit(3, 1, 3) - IntMatrix::unit(3, 3, 1);
  CHECK(cocycle_Fbar(Permutation({2, 3, 1})) == expected);

  // F factors through the permutation.
  for (std::uint64_t trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(trial % 5);
    const BraidWord w = random_word(n, trial % 17, derive_seed(241, trial));
    CHECK(cocycle_F(w) == cocycle_Fbar(permutation(w)));
  }
}

TEST_CASE("Fbar upper triangle is the inversion table of the inverse") {
  // Exhaustive over S_4, then a spot check against S_5: entry (i,j), i<j,
  // equals 1 exactly when pi^{-1} inverts the pair.
  for (const Permutation &pi : all_permutations(4)) {
    const IntMatrix fbar = cocycle_Fbar(pi);
    const Permutation inv = pi.inverse();
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        CHECK(fbar.at(i, j) == ((inv.apply(i) > inv.apply(j)) ? 1 : 0));
  }
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    std::mt19937_64 rng(derive_seed(251, trial));
    const Permutation pi = permutation_from_rank(5, uniform_below(rng, 120));
    const IntMatrix fbar = cocycle_Fbar(pi);
    const Permutation inv = pi.inverse();
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        CHECK(fbar.at(i, j) == ((inv.apply(i) > inv.apply(j)) ? 1 : 0));
  }
}

TEST_CASE("Fbar upper entries lie in {0,1} for n up to 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation &pi : all_permutations(n)) {
      const IntMatrix fbar = cocycle_Fbar(pi);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const Int v = fbar.at(i, j);
          CHECK((v == 0 || v == 1));
        }
    }
  }
}

TEST_CASE("membership criterion fixed examples") {
  CHECK(sge_membership(unit_pair(3, 1, 2), Permutation::identity(3)));
  CHECK_FALSE(sge_membership(IntMatrix::unit(3, 1, 2), Permutation::identity(3)));
  CHECK(sge_membership(IntMatrix::unit(3, 1, 2), Permutation::transposition(3, 1, 2)));
  CHECK_THROWS_AS(
      sge_membership(IntMatrix::unit(3, 1, 1), Permutation::identity(3)), ValidationError);

  // Every actual image is membership-positive.
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(trial % 4);
    const SgeElement img = sge_image(random_word(n, 12, derive_seed(261, trial)));
    CHECK(sge_membership(img.m(), img.pi()));
  }
}

TEST_CASE("no square root of the identity above a transposition") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const BraidWord w = random_word(3, 11, derive_seed(271, trial));
    const SgeElement img = sge_image(w);
    if (img.pi() != Permutation::transposition(3, 1, 2)) continue;
    CHECK(img.m().at(1, 2) - img.m().at(2, 1) == 1);
    CHECK_FALSE(sge_image(w * w).is_identity());
  }
}

TEST_CASE("the ten-letter word separating SGE from GE") {
  const BraidWord w = parse_word("2 2 -3 2 1 1 -2 -3 -1 -1", 4);
  CHECK(ge_image(w).is_identity());
  const SgeElement img = sge_image(w);
  CHECK_FALSE(img.is_identity());
  CHECK(img.pi().is_identity());

  IntMatrix expected(4);
  expected.at(1, 2) = -1;
  expected.at(2, 1) = -1;
  expected.at(1, 4) = 1;
  expected.at(4, 1) = 1;
  expected.at(2, 3) = 1;
  expected.at(3, 2) = 1;
  expected.at(3, 4) = -1;
  expected.at(4, 3) = -1;
  CHECK(img.m() == expected);
}

TEST_CASE("kernel words for SGE") {
  CHECK(sge_image(parse_word("1 -2 1 -2 1 -2", 3)).is_identity());
  CHECK_FALSE(sge_image(parse_word("-1 -3 2 2 -3 -1 2 2", 4)).is_identity());
}
