#include "ge/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ge {

namespace {

using Coords = std::vector<int>;

// s_j in simple-root coordinates: only coordinate j moves,
// v_j -> v_j - sum_i v_i C[i][j], with C[i][j] = <alpha_i, alpha_j^v>.
Coords reflect_coords(const std::vector<std::vector<int>> &cartan, const Coords &v, int j) {
  Coords out = v;
  long pairing = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    pairing += static_cast<long>(v[i]) * cartan[i][static_cast<std::size_t>(j)];
  out[static_cast<std::size_t>(j)] -= static_cast<int>(pairing);
  return out;
}

std::string coords_string(const Coords &v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += ']';
  return s;
}

bool all_nonneg(const Coords &v) {
  for (int c : v)
    if (c < 0) return false;
  return true;
}

} // namespace

RootSystem RootSystem::from_cartan(const std::string &name,
                                   const std::vector<std::vector<int>> &cartan) {
  const int rank = static_cast<int>(cartan.size());

  // Closure of the simple roots under all simple reflections.
  std::map<Coords, int> seen;
  std::vector<Coords> queue;
  for (int s = 0; s < rank; ++s) {
    Coords e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(s)] = 1;
    if (seen.emplace(e, 0).second) queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Coords v = queue[head];
    for (int j = 0; j < rank; ++j) {
      Coords w = reflect_coords(cartan, v, j);
      if (seen.emplace(w, 0).second) queue.push_back(w);
    }
  }

  // Positive roots first, sorted by height then coordinates; each root must
  // be all-nonnegative or all-nonpositive.
  std::vector<Coords> positive;
  for (const auto &kv : seen) {
    if (all_nonneg(kv.first))
      positive.push_back(kv.first);
    else {
      Coords neg = kv.first;
      for (int &c : neg) c = -c;
      if (!all_nonneg(neg))
        throw ValidationError("root closure produced a mixed-sign vector for " + name);
    }
  }
  std::sort(positive.begin(), positive.end(), [](const Coords &a, const Coords &b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  const int pcount = static_cast<int>(positive.size());
  std::map<Coords, int> label_of;
  std::vector<Coords> vectors;
  for (int i = 0; i < pcount; ++i) {
    label_of[positive[static_cast<std::size_t>(i)]] = i;
    vectors.push_back(positive[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < pcount; ++i) {
    Coords neg = positive[static_cast<std::size_t>(i)];
    for (int &c : neg) c = -c;
    label_of[neg] = pcount + i;
    vectors.push_back(neg);
  }

  RootSystem rs;
  rs.name_ = name;
  rs.negation_.resize(vectors.size());
  for (int i = 0; i < pcount; ++i) {
    rs.negation_[static_cast<std::size_t>(i)] = pcount + i;
    rs.negation_[static_cast<std::size_t>(pcount + i)] = i;
  }
  for (int s = 0; s < rank; ++s) {
    Coords e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(s)] = 1;
    rs.simple_.push_back(label_of.at(e));
  }
  rs.reflection_.assign(static_cast<std::size_t>(rank), {});
  for (int s = 0; s < rank; ++s) {
    auto &table = rs.reflection_[static_cast<std::size_t>(s)];
    table.resize(vectors.size());
    for (std::size_t a = 0; a < vectors.size(); ++a)
      table[a] = label_of.at(reflect_coords(cartan, vectors[a], s));
  }
  for (const Coords &v : vectors) rs.legend_.push_back(coords_string(v));
  return rs;
}

RootSystem RootSystem::make_a(int n) {
  if (n < 1) throw ValidationError("type A needs rank >= 1");
  std::vector<std::vector<int>> cartan(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    if (i + 1 < n) {
      cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1] = -1;
      cartan[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] = -1;
    }
  }
  return from_cartan("A" + std::to_string(n), cartan);
}

RootSystem RootSystem::make_b(int n) {
  if (n < 2) throw ValidationError("type B needs rank >= 2");
  std::vector<std::vector<int>> cartan(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    if (i + 2 < n) {
      cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1] = -1;
      cartan[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] = -1;
    }
  }
  // Last bond is double: alpha_{n-1} long, alpha_n short.
  cartan[static_cast<std::size_t>(n) - 2][static_cast<std::size_t>(n) - 1] = -2;
  cartan[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 2] = -1;
  return from_cartan("B" + std::to_string(n), cartan);
}

RootSystem RootSystem::make_d(int n) {
  if (n < 3) throw ValidationError("type D needs rank >= 3");
  std::vector<std::vector<int>> cartan(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  for (int i = 0; i + 1 < n - 1; ++i) {
    cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1] = -1;
    cartan[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] = -1;
  }
  // Fork: the last node attaches to node n-2 (0-indexed n-3).
  cartan[static_cast<std::size_t>(n) - 3][static_cast<std::size_t>(n) - 1] = -1;
  cartan[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 3] = -1;
  return from_cartan("D" + std::to_string(n), cartan);
}

RootSystem RootSystem::make_g2() {
  // alpha_1 short, alpha_2 long.
  return from_cartan("G2", {{2, -1}, {-3, 2}});
}

RootSystem RootSystem::make_i2(int m) {
  if (m < 2) throw ValidationError("I2(m) needs m >= 2");
  RootSystem rs;
  rs.name_ = "I2(" + std::to_string(m) + ")";
  const int total = 2 * m;
  rs.negation_.resize(static_cast<std::size_t>(total));
  for (int k = 0; k < total; ++k)
    rs.negation_[static_cast<std::size_t>(k)] = (k + m) % total;
  rs.simple_ = {0, m - 1};
  rs.reflection_.assign(2, std::vector<int>(static_cast<std::size_t>(total)));
  for (int s = 0; s < 2; ++s) {
    const int j = rs.simple_[static_cast<std::size_t>(s)];
    for (int k = 0; k < total; ++k)
      rs.reflection_[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] =
          ((2 * j + m - k) % total + total) % total;
  }
  for (int k = 0; k < total; ++k)
    rs.legend_.push_back("angle " + std::to_string(k) + "/" + std::to_string(m) + " pi");
  return rs;
}

RootSystem RootSystem::make(const std::string &type_tag) {
  if (type_tag.size() >= 2 && (type_tag[0] == 'A' || type_tag[0] == 'B' || type_tag[0] == 'D')) {
    const int n = std::stoi(type_tag.substr(1));
    if (type_tag[0] == 'A') return make_a(n);
    if (type_tag[0] == 'B') return make_b(n);
    return make_d(n);
  }
  if (type_tag == "G2") return make_g2();
  if (type_tag.rfind("I2(", 0) == 0 && type_tag.back() == ')')
    return make_i2(std::stoi(type_tag.substr(3, type_tag.size() - 4)));
  throw ValidationError("unsupported root system type '" + type_tag +
                        "' (expected An, Bn, Dn, G2 or I2(m))");
}

int RootSystem::simple_root(int s) const {
  if (s < 0 || s >= rank()) throw RangeError("simple root index out of range");
  return simple_[static_cast<std::size_t>(s)];
}

int RootSystem::reflect(int s, int alpha) const {
  return reflection_table(s)[static_cast<std::size_t>(check_label(alpha))];
}

const std::vector<int> &RootSystem::reflection_table(int s) const {
  if (s < 0 || s >= rank()) throw RangeError("simple root index out of range");
  return reflection_[static_cast<std::size_t>(s)];
}

CoxeterElement::CoxeterElement(std::vector<int> root_map) : map_(std::move(root_map)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || seen[static_cast<std::size_t>(v)])
      throw ValidationError("root map is not a permutation of the labels");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

CoxeterElement CoxeterElement::identity(const RootSystem &rs) {
  std::vector<int> map(static_cast<std::size_t>(rs.root_count()));
  std::iota(map.begin(), map.end(), 0);
  return CoxeterElement(std::move(map));
}

CoxeterElement CoxeterElement::simple(const RootSystem &rs, int s) {
  return CoxeterElement(rs.reflection_table(s));
}

bool CoxeterElement::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<int>(i)) return false;
  return true;
}

CoxeterElement CoxeterElement::operator*(const CoxeterElement &rhs) const {
  if (size() != rhs.size()) throw ValidationError("mixed root systems in composition");
  std::vector<int> out(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i)
    out[i] = map_[static_cast<std::size_t>(rhs.map_[i])];
  return CoxeterElement(std::move(out));
}

CoxeterElement CoxeterElement::inverse() const {
  std::vector<int> out(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i)
    out[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  return CoxeterElement(std::move(out));
}

int coxeter_exponent(const RootSystem &rs, int a, int b) {
  const CoxeterElement product = CoxeterElement::simple(rs, a) * CoxeterElement::simple(rs, b);
  CoxeterElement power = product;
  int order = 1;
  while (!power.is_identity()) {
    power = power * product;
    ++order;
    if (order > 4 * rs.root_count())
      throw ValidationError("runaway order computation; root system tables inconsistent");
  }
  return order;
}

std::vector<CoxeterElement> coxeter_group_elements(const RootSystem &rs) {
  std::vector<CoxeterElement> elements{CoxeterElement::identity(rs)};
  std::map<std::vector<int>, bool> seen{{elements.front().map(), true}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    const CoxeterElement current = elements[head];
    for (int s = 0; s < rs.rank(); ++s) {
      CoxeterElement next = current * CoxeterElement::simple(rs, s);
      if (seen.emplace(next.map(), true).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::vector<int> coxeter_word(const RootSystem &rs, const CoxeterElement &c) {
  // If c is not the identity it sends some simple root negative, and
  // composing with that reflection shortens c; collect letters from the right.
  std::vector<int> reversed;
  CoxeterElement current = c;
  const int bound = rs.positive_count() + 1;
  while (!current.is_identity()) {
    int descent = -1;
    for (int s = 0; s < rs.rank(); ++s) {
      if (!rs.is_positive(current.apply(rs.simple_root(s)))) {
        descent = s;
        break;
      }
    }
    if (descent < 0 || static_cast<int>(reversed.size()) > bound)
      throw ValidationError("element admits no descent; root system tables inconsistent");
    current = current * CoxeterElement::simple(rs, descent);
    reversed.push_back(descent);
  }
  return std::vector<int>(reversed.rbegin(), reversed.rend());
}

} // namespace ge
