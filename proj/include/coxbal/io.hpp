#pragma once
// JSON encodings (schema 1) for rationals, root systems, posets, convex sets
// and Coxeter diagrams. Rationals are {"num": "p", "den": "q"} strings.

#include "coxbal/convex.hpp"
#include "coxbal/coxeter_matrix.hpp"
#include "coxbal/poset.hpp"
#include "coxbal/rootsys.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace coxbal {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const Rational& q) {
  return Json{{"num", std::to_string(q.numerator())}, {"den", std::to_string(q.denominator())}};
}

inline Rational rational_from_json(const Json& j) {
  try {
    const auto num = std::stoll(j.at("num").get<std::string>());
    const auto den = std::stoll(j.at("den").get<std::string>());
    if (den == 0) throw Error("zero denominator");
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw Error(std::string("malformed rational in JSON: ") + e.what());
  }
}

inline Json to_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline QVec qvec_from_json(const Json& j) {
  QVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline Json root_system_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (int k = 0; k < rs.num_positive(); ++k) roots.push_back(to_json(rs.root(k)));
  Json cow = Json::array();
  for (int i = 1; i <= rs.rank(); ++i) cow.push_back(to_json(rs.coweight(i)));
  Json j{{"schema", kSchemaVersion},
         {"type", rs.name()},
         {"family", std::string(1, family_letter(rs.family()))},
         {"rank", rs.rank()},
         {"ambient_dim", rs.ambient_dim()},
         {"positive_roots", roots},
         {"simple_indices", rs.simple_indices()},
         {"coweights", cow},
         {"highest_root_index", rs.highest_root()}};
  if (auto s = rs.highest_short_root()) j["highest_short_root_index"] = *s;
  else j["highest_short_root_index"] = nullptr;
  return j;
}

/// Rebuilds the root system named in a dump and checks the coordinates agree.
inline RootSystemPtr root_system_from_json(const Json& j) {
  auto rs = build_root_system(j.at("family").get<std::string>(), j.at("rank").get<int>());
  const auto& roots = j.at("positive_roots");
  if (static_cast<int>(roots.size()) != rs->num_positive()) throw Error("root count mismatch in JSON");
  for (int k = 0; k < rs->num_positive(); ++k)
    if (qvec_from_json(roots[k]) != rs->root(k)) throw Error("root coordinates differ from the built system");
  return rs;
}

inline Json poset_json(const LabeledPoset& P) {
  Json covers = Json::array();
  for (auto [a, b] : P.cover_pairs()) covers.push_back({a, b});
  Json j{{"schema", kSchemaVersion}, {"elements", P.size()}, {"covers", covers}};
  if (P.labeled()) j["labels"] = P.labels();
  return j;
}

inline LabeledPoset poset_from_json(const Json& j) {
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  std::vector<int> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<int>>();
  return LabeledPoset::from_covers(j.at("elements").get<int>(), covers, labels);
}

template <class Group>
Json convex_json(const ConvexSet<Group>& C) {
  const auto& G = C.group();
  Json D = Json::array(), A = Json::array(), wit = Json::array(), el = Json::array();
  for (const auto& r : C.D()) D.push_back(G.root_name(r));
  for (const auto& r : C.A()) A.push_back(G.root_name(r));
  const auto b = C.balance();
  for (const auto& r : b.witnesses) wit.push_back(G.root_name(r));
  for (const auto& w : C.elements()) el.push_back(to_string(G.reduced_word(w)));
  return Json{{"D", D}, {"A", A}, {"size", C.size()}, {"balance", to_json(b.value)}, {"witnesses", wit},
              {"elements", el}};
}

/// Diagram input: an array of {"i", "j", "m"} edges (m an integer >= 3 or
/// "inf"), or {"rank": r, "edges": [...]}. Unlisted pairs commute.
inline CoxeterMatrix diagram_from_json(const Json& j) {
  const Json& edges = j.is_array() ? j : j.at("edges");
  int rank = j.is_object() && j.contains("rank") ? j.at("rank").get<int>() : 0;
  if (!j.is_object() || !j.contains("rank"))
    for (const auto& e : edges) rank = std::max({rank, e.at("i").get<int>(), e.at("j").get<int>()});
  if (rank < 1) throw Error("diagram has no generators");
  CoxeterMatrix m(rank);
  for (const auto& e : edges) {
    const auto& mv = e.at("m");
    int label = 0;
    if (mv.is_string()) {
      if (mv.get<std::string>() != "inf") throw Error("edge label must be an integer >= 3 or \"inf\"");
      label = CoxeterMatrix::kInfinity;
    } else {
      label = mv.get<int>();
      if (label < 3) throw Error("edge label must be an integer >= 3 or \"inf\", got " + std::to_string(label));
    }
    m.set_label(e.at("i").get<int>(), e.at("j").get<int>(), label);
  }
  return m;
}

inline Json diagram_json(const CoxeterMatrix& m) {
  Json edges = Json::array();
  for (int i = 1; i <= m.rank(); ++i)
    for (int j = i + 1; j <= m.rank(); ++j) {
      const int l = m.label(i, j);
      if (l == 2) continue;
      Json e{{"i", i}, {"j", j}};
      if (l == CoxeterMatrix::kInfinity) e["m"] = "inf";
      else e["m"] = l;
      edges.push_back(e);
    }
  return Json{{"rank", m.rank()}, {"edges", edges}};
}

}  // namespace coxbal
