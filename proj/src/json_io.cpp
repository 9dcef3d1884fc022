#include "ge/json_io.hpp"

#include <algorithm>

namespace ge {

namespace {

std::string label_string(const Json &value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

} // namespace

Json word_to_json(const BraidWord &w) {
  Json j;
  j["n"] = w.strands();
  j["letters"] = w.letters();
  return j;
}

Json ge_to_json(const GeElement &e) {
  Json j;
  j["pi"] = e.pi().images();
  j["ell"] = e.ell();
  return j;
}

Json sge_to_json(const SgeElement &e) {
  Json j;
  j["pi"] = e.pi().images();
  j["m"] = matrix_to_json(e.m());
  return j;
}

Json matrix_to_json(const IntMatrix &m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.n(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.n(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json root_vector_to_json(const std::vector<Int> &v) {
  Json j = Json::object();
  for (std::size_t alpha = 0; alpha < v.size(); ++alpha)
    if (v[alpha] != 0) j[std::to_string(alpha)] = v[alpha];
  return j;
}

Json artin_to_json(const ArtinElement &e) {
  Json j;
  j["v"] = root_vector_to_json(e.v());
  j["c"] = e.c().map();
  return j;
}

Json root_system_to_json(const RootSystem &rs) {
  Json j;
  j["type"] = rs.name();
  j["rank"] = rs.rank();
  j["roots"] = rs.root_count();
  Json simple = Json::array();
  for (int s = 0; s < rs.rank(); ++s) simple.push_back(rs.simple_root(s));
  j["simple"] = std::move(simple);
  j["positive"] = rs.positive_count();
  Json legend = Json::array();
  for (int alpha = 0; alpha < rs.root_count(); ++alpha) legend.push_back(rs.legend(alpha));
  j["legend"] = std::move(legend);
  return j;
}

Json relation_report_to_json(const RelationReport &report) {
  Json j;
  j["type"] = report.type;
  Json pairs = Json::array();
  for (const RelationCheck &check : report.checks) {
    Json item;
    item["a"] = check.a + 1;
    item["b"] = check.b + 1;
    item["m"] = check.exponent;
    item["pass"] = check.pass;
    item["beyond_proof"] = check.beyond_proof;
    pairs.push_back(std::move(item));
  }
  j["pairs"] = std::move(pairs);
  j["all_pass"] = report.all_pass();
  return j;
}

Json analogue_result_to_json(const AnalogueResult &result, const ConstraintSystem &cs) {
  Json j;
  j["dimension"] = result.dimension;
  Json basis = Json::array();
  const int point_count = static_cast<int>(cs.points.size());
  for (const IntRow &vec : result.basis) {
    Json entry = Json::object();
    for (std::size_t g = 0; g < cs.generators.size(); ++g) {
      Json per_point = Json::array();
      for (int p = 0; p < point_count; ++p)
        per_point.push_back(vec[g * static_cast<std::size_t>(point_count) +
                                static_cast<std::size_t>(p)]);
      entry[cs.generators[g]] = std::move(per_point);
    }
    basis.push_back(std::move(entry));
  }
  j["basis"] = std::move(basis);
  j["verified"] = result.verified;
  return j;
}

void parse_presentation_json(const Json &doc, Presentation &pres, PermRep &rep) {
  if (!doc.is_object()) throw ParseError("presentation document must be a JSON object");
  for (const char *key : {"generators", "exponents", "points", "rep"})
    if (!doc.contains(key))
      throw ParseError(std::string("presentation document lacks '") + key + "'");

  pres.generators.clear();
  pres.exponents.clear();
  for (const Json &g : doc.at("generators")) pres.generators.push_back(label_string(g));

  for (const Json &entry : doc.at("exponents")) {
    if (!entry.is_array() || entry.size() != 3)
      throw ParseError("each exponent entry must be [generator, generator, m]");
    int a = pres.generator_index(label_string(entry[0]));
    int b = pres.generator_index(label_string(entry[1]));
    if (a == b) throw ParseError("exponent entry repeats a generator");
    if (a > b) std::swap(a, b);
    pres.exponents[{a, b}] = entry[2].get<int>();
  }

  rep.points.clear();
  rep.images.clear();
  for (const Json &p : doc.at("points")) rep.points.push_back(label_string(p));
  auto point_index = [&rep](const std::string &label) {
    const auto it = std::find(rep.points.begin(), rep.points.end(), label);
    if (it == rep.points.end()) throw ParseError("unknown point label '" + label + "'");
    return static_cast<int>(it - rep.points.begin());
  };

  const Json &images = doc.at("rep");
  for (const std::string &gen : pres.generators) {
    if (!images.contains(gen))
      throw ParseError("representation lacks an image for generator '" + gen + "'");
    const Json &list = images.at(gen);
    if (!list.is_array() || list.size() != rep.points.size())
      throw ParseError("image list for '" + gen + "' must cover every point");
    std::vector<int> image;
    for (const Json &target : list) image.push_back(point_index(label_string(target)));
    rep.images.push_back(std::move(image));
  }
}

} // namespace ge
