#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ge/analogue.hpp"
#include "ge/ge_action.hpp"
#include "ge/rng.hpp"

using namespace ge;

namespace {

PermRep i2_4_rep() {
  // a fixes points 1,3 and swaps 2,4; b swaps (1,2) and (3,4).
  PermRep rep;
  rep.points = {"1", "2", "3", "4"};
  rep.images = {{0, 3, 2, 1}, {1, 0, 3, 2}};
  return rep;
}

PermRep i2_6_rep() {
  // a = (2 6)(3 5), b = (1 2)(3 6)(4 5) on the hexagon.
  PermRep rep;
  rep.points = {"1", "2", "3", "4", "5", "6"};
  rep.images = {{0, 5, 4, 3, 2, 1}, {1, 0, 5, 4, 3, 2}};
  return rep;
}

bool satisfies_constraints(const ConstraintSystem &cs, const IntRow &candidate) {
  for (const ConstraintRow &row : cs.rows) {
    Int acc = 0;
    for (std::size_t j = 0; j < candidate.size(); ++j)
      acc += row.coefficients[j] * candidate[j];
    if (acc != 0) return false;
  }
  return true;
}

} // namespace

TEST_CASE("B3 chain: three equations reduce to a rank-4 lattice") {
  const Presentation pres = braid_presentation(3);
  const PermRep rep = natural_rep(3);
  const ConstraintSystem cs = generate_constraints(pres, rep);
  CHECK(cs.rows.size() == 3); // one length-3 relation, three points
  CHECK(cs.unknown_count() == 6);
  for (const ConstraintRow &row : cs.rows)
    for (Int c : row.coefficients) CHECK((c >= -3 && c <= 3));

  const AnalogueResult result = analogue_space(pres, rep);
  CHECK(result.dimension == 4);
  for (bool ok : result.verified) CHECK(ok);

  // The named spanning assignments all lie in the lattice: classical GE,
  // symmetric GE, row GE and the two zero-ish assignments.
  const std::vector<IntRow> members = {
      {0, 1, 0, 0, 0, 1},   // classical
      {1, 1, 0, 0, 1, 1},   // symmetric
      {0, 0, 1, 1, 0, 0},   // row
      {1, -1, 0, 0, 0, 0},  // zero-ish 1
      {0, 0, 0, 0, 1, -1},  // zero-ish 2
  };
  for (const IntRow &member : members) CHECK(satisfies_constraints(cs, member));
}

TEST_CASE("higher-rank braid presentations keep the classical assignment") {
  for (int n : {4, 5}) {
    const Presentation pres = braid_presentation(n);
    const PermRep rep = natural_rep(n);
    const ConstraintSystem cs = generate_constraints(pres, rep);
    IntRow classical(static_cast<std::size_t>(cs.unknown_count()), 0);
    for (int k = 1; k <= n - 1; ++k)
      classical[static_cast<std::size_t>((k - 1) * n + k)] = 1; // generator k -> e_{k+1}
    CHECK(satisfies_constraints(cs, classical));

    IntRow symmetric(static_cast<std::size_t>(cs.unknown_count()), 0);
    for (int k = 1; k <= n - 1; ++k) {
      symmetric[static_cast<std::size_t>((k - 1) * n + k - 1)] = 1;
      symmetric[static_cast<std::size_t>((k - 1) * n + k)] = 1;
    }
    CHECK(satisfies_constraints(cs, symmetric));
  }
}

TEST_CASE("I2(4): six-dimensional lattice with the expected linear shape") {
  Presentation pres;
  dihedral_presentation(4, pres);
  const PermRep rep = i2_4_rep();
  const ConstraintSystem cs = generate_constraints(pres, rep);
  CHECK(cs.rows.size() == 4);
  CHECK(cs.unknown_count() == 8);

  const AnalogueResult result = analogue_space(pres, rep);
  CHECK(result.dimension == 6);
  for (bool ok : result.verified) CHECK(ok);

  // Two independent constraints; in this point labeling they read
  // a: x1 = x3 and b: x1 + x2 = x3 + x4.
  for (const IntRow &vec : result.basis) {
    CHECK(vec[0] == vec[2]);
    CHECK(vec[4] + vec[5] == vec[6] + vec[7]);
  }
}

TEST_CASE("I2(6): nine-dimensional lattice with the expected linear shape") {
  Presentation pres;
  dihedral_presentation(6, pres);
  const PermRep rep = i2_6_rep();
  const AnalogueResult result = analogue_space(pres, rep);
  CHECK(result.dimension == 9);
  for (bool ok : result.verified) CHECK(ok);

  // a: x4 = x1 and x5 - x2 = x6 - x3;  b: (x4 - x1) + (x5 - x2) = 0.
  for (const IntRow &vec : result.basis) {
    CHECK(vec[3] == vec[0]);
    CHECK(vec[4] - vec[1] == vec[5] - vec[2]);
    CHECK((vec[9] - vec[6]) + (vec[10] - vec[7]) == 0);
  }
}

TEST_CASE("no relations means the full lattice") {
  Presentation pres;
  pres.generators = {"a", "b"};
  PermRep rep;
  rep.points = {"p", "q"};
  rep.images = {{1, 0}, {0, 1}};
  const AnalogueResult result = analogue_space(pres, rep);
  CHECK(result.dimension == 4);
  // Hermite-canonical form of the full lattice is the identity.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(result.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
            (i == j ? 1 : 0));
}

TEST_CASE("relation-violating representations are rejected by name") {
  Presentation pres;
  dihedral_presentation(3, pres);
  PermRep rep;
  rep.points = {"1", "2", "3"};
  rep.images = {{1, 0, 2}, {1, 0, 2}}; // a == b, so aba=bab holds; use m=4 to break it
  pres.exponents[{0, 1}] = 4;
  CHECK_NOTHROW(generate_constraints(pres, rep)); // equal images satisfy any relation

  PermRep bad;
  bad.points = {"1", "2", "3"};
  bad.images = {{1, 0, 2}, {0, 2, 1}};
  Presentation commuting;
  commuting.generators = {"a", "b"};
  commuting.exponents[{0, 1}] = 2;
  try {
    generate_constraints(commuting, bad);
    FAIL("expected a validation error");
  } catch (const ValidationError &e) {
    const std::string message = e.what();
    CHECK(message.find("length-2") != std::string::npos);
    CHECK(message.find("'a'") != std::string::npos);
    CHECK(message.find("'b'") != std::string::npos);
  }
}

TEST_CASE("vectors outside the lattice break some relation when instantiated") {
  const Presentation pres = braid_presentation(3);
  const PermRep rep = natural_rep(3);
  const ConstraintSystem cs = generate_constraints(pres, rep);

  int outside_seen = 0;
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    std::mt19937_64 rng(derive_seed(401, trial));
    IntRow candidate(static_cast<std::size_t>(cs.unknown_count()));
    for (Int &v : candidate) v = static_cast<Int>(uniform_below(rng, 7)) - 3;
    if (satisfies_constraints(cs, candidate)) continue;
    ++outside_seen;

    // Direct group-law evaluation must also reject it.
    auto element_for = [&](int g) {
      std::vector<Int> ell(candidate.begin() + g * 3, candidate.begin() + (g + 1) * 3);
      std::vector<int> images;
      for (int idx : rep.images[static_cast<std::size_t>(g)]) images.push_back(idx + 1);
      return GeElement(Permutation(images), ell);
    };
    const GeElement lhs = element_for(0) * element_for(1) * element_for(0);
    const GeElement rhs = element_for(1) * element_for(0) * element_for(1);
    CHECK(lhs != rhs);
  }
  CHECK(outside_seen > 20);
}

TEST_CASE("constraint rows count relations times points") {
  Presentation pres;
  dihedral_presentation(5, pres);
  PermRep rep;
  rep.points = {"1", "2", "3", "4", "5"};
  // a and b are two reflections of the pentagon whose product has order 5.
  rep.images = {{0, 4, 3, 2, 1}, {1, 0, 4, 3, 2}};
  const ConstraintSystem cs = generate_constraints(pres, rep);
  CHECK(cs.rows.size() == 5);
  for (const ConstraintRow &row : cs.rows) {
    CHECK(row.exponent == 5);
    for (Int c : row.coefficients) CHECK((c >= -5 && c <= 5));
  }
}
