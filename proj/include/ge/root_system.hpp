#ifndef GE_ROOT_SYSTEM_HPP
#define GE_ROOT_SYSTEM_HPP

#include <string>
#include <vector>

#include "ge/errors.hpp"

namespace ge {

// Finite root system presented as abstract integer labels with exact
// per-generator reflection tables. Labels 0..P-1 are the positive roots,
// P+i is the negative of label i; no floating point anywhere. Crystallographic
// types (A, B, D, G2) are generated from the Cartan matrix in simple-root
// coordinates; I2(m) works on angle indices k*pi/m modulo 2m.
class RootSystem {
public:
  static RootSystem make(const std::string &type_tag); // "A3", "B2", "D4", "G2", "I2(5)"
  static RootSystem make_a(int n);
  static RootSystem make_b(int n);
  static RootSystem make_d(int n);
  static RootSystem make_g2();
  static RootSystem make_i2(int m);

  const std::string &name() const { return name_; }
  int rank() const { return static_cast<int>(simple_.size()); } // generator count
  int root_count() const { return static_cast<int>(negation_.size()); }
  int positive_count() const { return root_count() / 2; }

  int simple_root(int s) const; // label of Delta_s, s in [0, rank)
  int negate(int alpha) const { return negation_[check_label(alpha)]; }
  bool is_positive(int alpha) const { return check_label(alpha) < positive_count(); }

  // Reflection by the s-th simple root, as a table lookup.
  int reflect(int s, int alpha) const;
  const std::vector<int> &reflection_table(int s) const;

  // Human-readable coordinates of a root label (simple-root basis for the
  // crystallographic types, angle index for I2).
  const std::string &legend(int alpha) const { return legend_[check_label(alpha)]; }

private:
  RootSystem() = default;
  int check_label(int alpha) const {
    if (alpha < 0 || alpha >= root_count()) throw RangeError("root label out of range");
    return alpha;
  }
  static RootSystem from_cartan(const std::string &name,
                                const std::vector<std::vector<int>> &cartan);

  std::string name_;
  std::vector<int> simple_;
  std::vector<int> negation_;
  std::vector<std::vector<int>> reflection_; // [s][alpha]
  std::vector<std::string> legend_;
};

// Coxeter group element represented by its (faithful) action on root labels.
class CoxeterElement {
public:
  explicit CoxeterElement(std::vector<int> root_map);

  static CoxeterElement identity(const RootSystem &rs);
  static CoxeterElement simple(const RootSystem &rs, int s);

  int size() const { return static_cast<int>(map_.size()); }
  int apply(int alpha) const { return map_[static_cast<std::size_t>(alpha)]; }
  const std::vector<int> &map() const { return map_; }

  bool is_identity() const;
  CoxeterElement operator*(const CoxeterElement &rhs) const; // apply rhs first
  CoxeterElement inverse() const;

  bool operator==(const CoxeterElement &rhs) const { return map_ == rhs.map_; }
  bool operator!=(const CoxeterElement &rhs) const { return !(*this == rhs); }

private:
  std::vector<int> map_;
};

// Order of the product s_a s_b, i.e. the Coxeter exponent m_ab.
int coxeter_exponent(const RootSystem &rs, int a, int b);

// Every element of the Coxeter group, by closure under the simple reflections.
std::vector<CoxeterElement> coxeter_group_elements(const RootSystem &rs);

// Greedy descent decomposition of c into simple reflections; the returned
// word multiplies left-to-right (rightmost applied first) to c.
std::vector<int> coxeter_word(const RootSystem &rs, const CoxeterElement &c);

} // namespace ge

#endif
