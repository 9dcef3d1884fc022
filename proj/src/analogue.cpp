#include "ge/analogue.hpp"

#include <algorithm>

#include "ge/ge_action.hpp"
#include "ge/permutation.hpp"

namespace ge {

namespace {

std::vector<int> alternating_word(int a, int b, int m) {
  std::vector<int> word;
  for (int t = 0; t < m; ++t) word.push_back(t % 2 == 0 ? a : b);
  return word;
}

Permutation rep_permutation(const PermRep &rep, int gen) {
  std::vector<int> images;
  images.reserve(rep.points.size());
  for (int idx : rep.images[static_cast<std::size_t>(gen)]) images.push_back(idx + 1);
  return Permutation(std::move(images));
}

// Word product as a permutation of point indices, rightmost letter first.
Permutation word_permutation(const PermRep &rep, const std::vector<int> &word) {
  Permutation acc = Permutation::identity(static_cast<int>(rep.points.size()));
  for (int g : word) acc = acc * rep_permutation(rep, g);
  return acc;
}

// Accumulation of one alternating word at one starting point: the letter
// applied at position q contributes the unknown l_{g,q}, then moves the
// point; letters apply right to left.
void accumulate(const PermRep &rep, const std::vector<int> &word, int start, Int sign,
                IntRow &row) {
  const int point_count = static_cast<int>(rep.points.size());
  int pos = start;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int g = *it;
    row[static_cast<std::size_t>(g * point_count + pos)] =
        checked_add(row[static_cast<std::size_t>(g * point_count + pos)], sign);
    pos = rep.images[static_cast<std::size_t>(g)][static_cast<std::size_t>(pos)];
  }
}

} // namespace

int Presentation::generator_index(const std::string &name) const {
  const auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end())
    throw ValidationError("unknown generator '" + name + "' in presentation");
  return static_cast<int>(it - generators.begin());
}

ConstraintSystem generate_constraints(const Presentation &pres, const PermRep &rep) {
  const int gen_count = static_cast<int>(pres.generators.size());
  const int point_count = static_cast<int>(rep.points.size());
  if (static_cast<int>(rep.images.size()) != gen_count)
    throw ValidationError("representation does not cover every generator");
  for (int g = 0; g < gen_count; ++g) rep_permutation(rep, g); // bijection check

  ConstraintSystem cs;
  cs.generators = pres.generators;
  cs.points = rep.points;

  for (const auto &[pair, m] : pres.exponents) {
    const auto [a, b] = pair;
    if (m < 2) throw ValidationError("Coxeter exponent must be at least 2");
    const std::vector<int> left = alternating_word(a, b, m);
    const std::vector<int> right = alternating_word(b, a, m);
    if (word_permutation(rep, left) != word_permutation(rep, right))
      throw ValidationError("representation violates the length-" + std::to_string(m) +
                            " relation between '" + pres.generators[static_cast<std::size_t>(a)] +
                            "' and '" + pres.generators[static_cast<std::size_t>(b)] + "'");
    for (int p = 0; p < point_count; ++p) {
      ConstraintRow row;
      row.gen_a = a;
      row.gen_b = b;
      row.exponent = m;
      row.point = p;
      row.coefficients.assign(static_cast<std::size_t>(cs.unknown_count()), 0);
      accumulate(rep, left, p, 1, row.coefficients);
      accumulate(rep, right, p, -1, row.coefficients);
      cs.rows.push_back(std::move(row));
    }
  }
  return cs;
}

std::vector<IntRow> solve_lattice(const ConstraintSystem &cs) {
  std::vector<IntRow> matrix;
  matrix.reserve(cs.rows.size());
  for (const ConstraintRow &row : cs.rows) matrix.push_back(row.coefficients);
  std::vector<IntRow> basis = integer_kernel_basis(matrix, cs.unknown_count());
  if (!kernel_basis_is_exact(matrix, basis))
    throw Error("internal_error", "kernel basis failed the exact re-multiplication check");
  return basis;
}

AnalogueResult analogue_space(const Presentation &pres, const PermRep &rep) {
  const ConstraintSystem cs = generate_constraints(pres, rep);
  AnalogueResult result;
  result.basis = solve_lattice(cs);
  result.dimension = static_cast<int>(result.basis.size());

  const int point_count = static_cast<int>(rep.points.size());
  for (const IntRow &vec : result.basis) {
    auto element_for = [&](int g) {
      std::vector<Int> ell(vec.begin() + g * point_count,
                           vec.begin() + (g + 1) * point_count);
      return GeElement(rep_permutation(rep, g), std::move(ell));
    };
    auto eval_word = [&](const std::vector<int> &word) {
      GeElement acc = GeElement::identity(point_count);
      for (int g : word) acc = acc * element_for(g);
      return acc;
    };
    bool ok = true;
    for (const auto &[pair, m] : pres.exponents) {
      const auto [a, b] = pair;
      if (eval_word(alternating_word(a, b, m)) != eval_word(alternating_word(b, a, m))) {
        ok = false;
        break;
      }
    }
    result.verified.push_back(ok);
  }
  return result;
}

Presentation braid_presentation(int strands) {
  if (strands < 2) throw ValidationError("braid presentation needs at least 2 strands");
  Presentation pres;
  for (int k = 1; k <= strands - 1; ++k) pres.generators.push_back("s" + std::to_string(k));
  for (int i = 0; i < strands - 1; ++i)
    for (int j = i + 1; j < strands - 1; ++j)
      pres.exponents[{i, j}] = (j == i + 1) ? 3 : 2;
  return pres;
}

PermRep natural_rep(int strands) {
  PermRep rep;
  for (int p = 1; p <= strands; ++p) rep.points.push_back(std::to_string(p));
  for (int k = 1; k <= strands - 1; ++k) {
    std::vector<int> image(static_cast<std::size_t>(strands));
    for (int p = 0; p < strands; ++p) image[static_cast<std::size_t>(p)] = p;
    std::swap(image[static_cast<std::size_t>(k) - 1], image[static_cast<std::size_t>(k)]);
    rep.images.push_back(std::move(image));
  }
  return rep;
}

void dihedral_presentation(int m, Presentation &pres) {
  pres.generators = {"a", "b"};
  pres.exponents.clear();
  pres.exponents[{0, 1}] = m;
}

} // namespace ge
