#include "ge/artin.hpp"

namespace ge {

ArtinElement::ArtinElement(std::vector<Int> v, CoxeterElement c)
    : v_(std::move(v)), c_(std::move(c)) {
  if (static_cast<int>(v_.size()) != c_.size())
    throw ValidationError("vector length differs from root count");
}

ArtinElement ArtinElement::identity(const RootSystem &rs) {
  return ArtinElement(std::vector<Int>(static_cast<std::size_t>(rs.root_count()), 0),
                      CoxeterElement::identity(rs));
}

ArtinElement ArtinElement::generator(const RootSystem &rs, int letter) {
  const int s = (letter > 0 ? letter : -letter) - 1;
  if (letter == 0 || s >= rs.rank()) throw RangeError("Artin generator index out of range");
  std::vector<Int> v(static_cast<std::size_t>(rs.root_count()), 0);
  if (letter > 0)
    v[static_cast<std::size_t>(rs.simple_root(s))] = 1;
  else
    v[static_cast<std::size_t>(rs.negate(rs.simple_root(s)))] = -1;
  return ArtinElement(std::move(v), CoxeterElement::simple(rs, s));
}

ArtinElement ArtinElement::operator*(const ArtinElement &rhs) const {
  if (c_.size() != rhs.c_.size()) throw ValidationError("mixed root systems in product");
  std::vector<Int> v = v_;
  for (std::size_t alpha = 0; alpha < v.size(); ++alpha) {
    auto &slot = v[static_cast<std::size_t>(c_.apply(static_cast<int>(alpha)))];
    slot = checked_add(slot, rhs.v_[alpha]);
  }
  return ArtinElement(std::move(v), c_ * rhs.c_);
}

ArtinElement ArtinElement::inverse() const {
  CoxeterElement cinv = c_.inverse();
  std::vector<Int> v(v_.size());
  for (std::size_t alpha = 0; alpha < v.size(); ++alpha)
    v[static_cast<std::size_t>(cinv.apply(static_cast<int>(alpha)))] = -v_[alpha];
  return ArtinElement(std::move(v), std::move(cinv));
}

bool ArtinElement::is_identity() const {
  if (!c_.is_identity()) return false;
  for (Int x : v_)
    if (x != 0) return false;
  return true;
}

ArtinElement artin_sge_image(const std::vector<int> &letters, const RootSystem &rs) {
  ArtinElement acc = ArtinElement::identity(rs);
  for (int letter : letters) acc = acc * ArtinElement::generator(rs, letter);
  return acc;
}

std::vector<Int> artin_cocycle_Fbar(const CoxeterElement &c, const RootSystem &rs) {
  std::vector<Int> result(static_cast<std::size_t>(rs.root_count()), 0);
  CoxeterElement prefix = CoxeterElement::identity(rs);
  for (int s : coxeter_word(rs, c)) {
    const int plus = prefix.apply(rs.simple_root(s));
    const int minus = prefix.apply(rs.negate(rs.simple_root(s)));
    result[static_cast<std::size_t>(plus)] = checked_add(result[static_cast<std::size_t>(plus)], 1);
    result[static_cast<std::size_t>(minus)] =
        checked_sub(result[static_cast<std::size_t>(minus)], 1);
    prefix = prefix * CoxeterElement::simple(rs, s);
  }
  return result;
}

bool artin_membership(const std::vector<Int> &v, const CoxeterElement &c, const RootSystem &rs) {
  if (static_cast<int>(v.size()) != rs.root_count() || c.size() != rs.root_count())
    throw ValidationError("vector or element does not match the root system");
  const std::vector<Int> fbar = artin_cocycle_Fbar(c, rs);
  for (int alpha = 0; alpha < rs.root_count(); ++alpha) {
    const Int diff = checked_sub(v[static_cast<std::size_t>(alpha)],
                                 v[static_cast<std::size_t>(rs.negate(alpha))]);
    if (diff != fbar[static_cast<std::size_t>(alpha)]) return false;
  }
  return true;
}

bool RelationReport::all_pass() const {
  for (const auto &check : checks)
    if (!check.pass) return false;
  return true;
}

bool RelationReport::all_proven_pass() const {
  for (const auto &check : checks)
    if (!check.beyond_proof && !check.pass) return false;
  return true;
}

RelationReport verify_braid_relations(const RootSystem &rs) {
  RelationReport report;
  report.type = rs.name();
  for (int a = 0; a < rs.rank(); ++a) {
    for (int b = a + 1; b < rs.rank(); ++b) {
      RelationCheck check;
      check.a = a;
      check.b = b;
      check.exponent = coxeter_exponent(rs, a, b);
      check.beyond_proof = check.exponent != 2 && check.exponent != 3 &&
                           check.exponent != 4 && check.exponent != 6;
      std::vector<int> left, right;
      for (int t = 0; t < check.exponent; ++t) {
        left.push_back((t % 2 == 0 ? a : b) + 1);
        right.push_back((t % 2 == 0 ? b : a) + 1);
      }
      check.pass = artin_sge_image(left, rs) == artin_sge_image(right, rs);
      report.checks.push_back(check);
    }
  }
  return report;
}

} // namespace ge
