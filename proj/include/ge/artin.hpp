#ifndef GE_ARTIN_HPP
#define GE_ARTIN_HPP

#include <string>
#include <vector>

#include "ge/errors.hpp"
#include "ge/root_system.hpp"

namespace ge {

// Element (v, c) of Z^Phi x| C with
//   (v1, c1) * (v2, c2) = (v1 + c1 . v2, c1 c2),   (c . v)[c(alpha)] = v[alpha].
class ArtinElement {
public:
  ArtinElement(std::vector<Int> v, CoxeterElement c);

  static ArtinElement identity(const RootSystem &rs);
  // Generator a maps to (e_{Delta_a}, C(a)); a^{-1} to (-e_{-Delta_a}, C(a)).
  static ArtinElement generator(const RootSystem &rs, int letter);

  const std::vector<Int> &v() const { return v_; }
  const CoxeterElement &c() const { return c_; }

  ArtinElement operator*(const ArtinElement &rhs) const;
  ArtinElement inverse() const;
  bool is_identity() const;

  bool operator==(const ArtinElement &rhs) const { return v_ == rhs.v_ && c_ == rhs.c_; }
  bool operator!=(const ArtinElement &rhs) const { return !(*this == rhs); }

private:
  std::vector<Int> v_;
  CoxeterElement c_;
};

// Image of an Artin word (letters +-(s+1) for generator index s, one-indexed
// like braid letters) under the root-indexed homomorphism.
ArtinElement artin_sge_image(const std::vector<int> &letters, const RootSystem &rs);

// Generalized 1-cocycle Fbar: C -> Z^Phi with Fbar(s) = e_{Delta_s} - e_{-Delta_s}
// and Fbar(t c) = Fbar(t) + t . Fbar(c); antisymmetric under alpha -> -alpha.
std::vector<Int> artin_cocycle_Fbar(const CoxeterElement &c, const RootSystem &rs);

// Image characterization: (v, c) in the image iff v - vbar == Fbar(c), where
// vbar[alpha] = v[-alpha]. Trusted only with the BFS cross-validation in the
// test suite.
bool artin_membership(const std::vector<Int> &v, const CoxeterElement &c, const RootSystem &rs);

struct RelationCheck {
  int a = 0;               // generator pair, 0-indexed
  int b = 0;
  int exponent = 0;        // Coxeter exponent m_ab
  bool pass = false;       // alternating words of length m agree
  bool beyond_proof = false; // exponent outside {2,3,4,6}: empirical extension
};

struct RelationReport {
  std::string type;
  std::vector<RelationCheck> checks;
  bool all_pass() const;
  bool all_proven_pass() const; // pairs with exponent in {2,3,4,6}
};

// Checks every generator pair's braid relation on the SGE side. Failures are
// report entries, not exceptions.
RelationReport verify_braid_relations(const RootSystem &rs);

} // namespace ge

#endif
