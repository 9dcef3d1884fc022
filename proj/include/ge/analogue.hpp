#ifndef GE_ANALOGUE_HPP
#define GE_ANALOGUE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ge/lattice.hpp"

namespace ge {

// Coxeter-style presentation: named generators, at most one braid relation
// (alternating words of length m_ab) between any two. Pairs without an entry
// have no relation.
struct Presentation {
  std::vector<std::string> generators;
  std::map<std::pair<int, int>, int> exponents; // key (i,j) with i<j, value m >= 2

  int generator_index(const std::string &name) const;
};

// Permutation representation on an arbitrary finite labeled point set.
struct PermRep {
  std::vector<std::string> points;
  std::vector<std::vector<int>> images; // [generator][point index] -> point index
};

// One linear constraint per (braid relation, point): the accumulated
// linking-vector sums of the two alternating words must agree.
struct ConstraintRow {
  int gen_a = 0;
  int gen_b = 0;
  int exponent = 0;
  int point = 0;
  IntRow coefficients; // unknown l_{g,p} at index g * point_count + p
};

struct ConstraintSystem {
  std::vector<std::string> generators;
  std::vector<std::string> points;
  std::vector<ConstraintRow> rows;

  int unknown_count() const {
    return static_cast<int>(generators.size() * points.size());
  }
};

// Builds the constraint system; throws ValidationError naming the offending
// relation if the representation does not satisfy the presentation.
ConstraintSystem generate_constraints(const Presentation &pres, const PermRep &rep);

// Integer basis of the solution lattice, in Hermite-reduced canonical form.
std::vector<IntRow> solve_lattice(const ConstraintSystem &cs);

struct AnalogueResult {
  int dimension = 0;
  std::vector<IntRow> basis;
  std::vector<bool> verified; // per basis vector: direct relation evaluation
};

// generate + solve, then re-verifies each basis vector by instantiating the
// linking vectors and multiplying out both sides of every relation in
// Z^P x| Sym(P); this check is independent of the constraint matrix.
AnalogueResult analogue_space(const Presentation &pres, const PermRep &rep);

// Built-in inputs used across tests and documentation.
Presentation braid_presentation(int strands);            // type A_{n-1} chain
PermRep natural_rep(int strands);                        // sigma_k -> (k, k+1)
void dihedral_presentation(int m, Presentation &pres);   // two generators, one m-relation

} // namespace ge

#endif
