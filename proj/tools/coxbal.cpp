// coxbal: command-line front end for root systems, convex sets of Coxeter
// group elements, heaps, generalized semiorders, alcove data and the
// verification campaigns.

#include "coxbal/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace coxbal;

namespace {

struct Options {
  std::string family;
  int rank = 0;
  std::string diagram;
  std::string out;
  std::string format = "table";
  int jobs = 1;
  std::size_t cap = kDefaultElementCap;

  // balance / alcove
  std::string interval, hull, words, allowed, forbidden;
  bool dot = false;

  // heap
  std::string word;

  // semiorder
  bool count_ideals = false, e8 = false, scan = false;
  std::string unit_interval;

  // roots
  bool graph = false;

  // verify
  std::string campaign;
  bool timing = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ';')) out.push_back(cur);
  if (out.empty()) out.push_back("");
  return out;
}

RootSystemPtr require_type(const Options& o) {
  if (o.family.empty() || o.rank == 0) throw Error("--type and --rank are required");
  return build_root_system(o.family, o.rank);
}

void emit(const Options& o, Json j) {
  if (o.out.empty()) return;
  if (!j.contains("schema")) {
    Json w{{"schema", kSchemaVersion}};
    w.update(j);
    j = std::move(w);
  }
  std::ofstream f(o.out);
  if (!f) throw Error("cannot write '" + o.out + "'");
  f << j.dump(2) << "\n";
}

std::string word_text(const Word& w) { return w.empty() ? "id" : to_string(w); }

int cmd_roots(const Options& o) {
  const auto rs = require_type(o);
  if (o.format == "json") {
    std::cout << root_system_json(*rs).dump(2) << "\n";
  } else if (o.format == "dot") {
    std::cout << root_poset_dot(*rs, o.graph);
  } else {
    std::cout << rs->name() << ": rank " << rs->rank() << ", " << rs->num_positive() << " positive roots, ht "
              << rs->height(rs->highest_root()) << "\n";
    for (int k = 0; k < rs->num_positive(); ++k) {
      std::string coeff;
      for (int c : rs->coefficients(k)) coeff += std::to_string(c);
      std::cout << std::setw(4) << k << "  ht " << std::setw(2) << rs->height(k) << "  [" << coeff << "]  "
                << root_label(*rs, k) << "\n";
    }
    std::cout << "ideals in root poset: " << ideal_count(root_poset(*rs)) << "\n";
  }
  emit(o, root_system_json(*rs));
  return 0;
}

int cmd_group(const Options& o) {
  const auto rs = require_type(o);
  const auto all = all_elements(rs, o.cap);
  std::map<int, std::size_t> by_length;
  for (const auto& w : all) ++by_length[w.length()];
  const auto w0 = longest_element(rs);
  std::cout << rs->name() << ": |W| = " << all.size() << ", longest element length " << w0.length() << "\n";
  std::cout << "w0 = " << word_text(w0.reduced_word()) << "\n";
  Json lens = Json::object();
  for (auto [l, c] : by_length) {
    std::cout << "  length " << std::setw(3) << l << ": " << c << "\n";
    lens[std::to_string(l)] = c;
  }
  emit(o, Json{{"type", rs->name()}, {"order", all.size()}, {"longest", to_string(w0.reduced_word())},
               {"by_length", lens}});
  return 0;
}

template <class Group>
std::vector<typename Group::Element> elements_of(const Group& G, const std::string& list) {
  std::vector<typename Group::Element> out;
  for (const auto& s : split_list(list)) {
    const auto w = parse_word(s);
    if (!G.is_reduced(w)) throw Error("word '" + s + "' is not reduced");
    out.push_back(G.from_word(w));
  }
  return out;
}

template <class Group>
std::vector<typename Group::Root> roots_of(const Group& G, const std::string& list) {
  std::vector<typename Group::Root> out;
  if (list.empty()) return out;
  for (const auto& s : split_list(list)) out.push_back(G.root_of_reflection_word(parse_word(s)));
  return out;
}

template <class Group>
ConvexSet<Group> select_set(const Group& G, const Options& o) {
  const int given = !o.interval.empty() + !o.hull.empty() + !o.words.empty() + !o.allowed.empty();
  if (given != 1) throw Error("give exactly one of --interval, --hull, --words, --allowed");
  if (!o.interval.empty()) {
    const auto w = parse_word(o.interval);
    if (!G.is_reduced(w)) throw Error("word '" + o.interval + "' is not reduced");
    return interval_left(G, G.from_word(w));
  }
  if (!o.hull.empty()) return convex_hull(G, elements_of(G, o.hull));
  if (!o.allowed.empty()) return convex_set(G, roots_of(G, o.forbidden), roots_of(G, o.allowed));
  auto elems = elements_of(G, o.words);
  auto C = convex_hull(G, elems);
  for (const auto& w : C.elements())
    if (std::find(elems.begin(), elems.end(), w) == elems.end())
      throw Error("the listed elements do not form a convex set (hull has " + std::to_string(C.size()) +
                  " elements)");
  return C;
}

template <class Group>
int report_balance(const Group& G, const Options& o) {
  const auto C = select_set(G, o);
  if (o.dot) {
    std::cout << convex_dot(C);
    emit(o, convex_json(C));
    return 0;
  }
  const auto b = C.balance();
  std::cout << "|C| = " << C.size() << "\n";
  std::cout << "b = " << to_string(b.value) << "\n";
  std::cout << "witnesses:";
  for (const auto& r : b.witnesses) std::cout << " " << G.root_name(r);
  std::cout << "\n";
  for (const auto& r : C.A()) std::cout << "  delta(" << G.root_name(r) << ") = " << to_string(C.delta(r)) << "\n";
  emit(o, convex_json(C));
  return 0;
}

int cmd_balance(const Options& o) {
  if (!o.diagram.empty()) {
    std::ifstream f(o.diagram);
    if (!f) throw Error("cannot read diagram file '" + o.diagram + "'");
    return report_balance(CoxGroup(diagram_from_json(Json::parse(f))), o);
  }
  return report_balance(WeylGroup(require_type(o)), o);
}

int cmd_heap(const Options& o) {
  CoxeterMatrix m(1);
  if (!o.diagram.empty()) {
    std::ifstream f(o.diagram);
    if (!f) throw Error("cannot read diagram file '" + o.diagram + "'");
    m = diagram_from_json(Json::parse(f));
  } else {
    m = require_type(o)->coxeter_matrix();
  }
  const auto w = parse_word(o.word);
  require_reduced(m, w);
  const bool fc = is_fully_commutative(m, w);
  const auto H = heap_from_word(m, w);
  if (o.format == "dot") {
    std::cout << to_dot(H, "heap");
    emit(o, poset_json(H));
    return 0;
  }
  std::cout << "word " << word_text(w) << (fc ? " (fully commutative)" : " (not fully commutative)") << "\n";
  const auto d = di_all(H);
  for (int x = 0; x < H.size(); ++x)
    std::cout << "  " << x << "  s" << H.label(x) << "  di = " << to_string(d[x]) << "\n";
  const auto b = H.size() ? bi(H) : Rational(0);
  std::cout << "bi = " << to_string(b) << "\n";
  Json dj = Json::array();
  for (const auto& q : d) dj.push_back(to_json(q));
  auto j = poset_json(H);
  j["word"] = to_string(w);
  j["fully_commutative"] = fc;
  j["di"] = dj;
  j["bi"] = to_json(b);
  emit(o, j);
  return 0;
}

int cmd_semiorder(const Options& o) {
  if (!o.unit_interval.empty()) {
    std::vector<Rational> f;
    std::istringstream is(o.unit_interval);
    for (std::string t; is >> t;) f.push_back(parse_rational(t));
    const auto gs = from_unit_interval(f);
    const auto rep = check_delta_half_report(gs);
    const auto b = gs.set.balance();
    std::cout << gs.rs->name() << " semiorder, |A| = " << gs.ideal.members.size() << ", linear extensions "
              << gs.set.size() << "\n";
    std::cout << "b = " << to_string(b.value) << "\n";
    std::cout << "max delta = " << to_string(rep.max_delta) << (rep.ok ? " (<= 1/2)" : " (FAILS <= 1/2)") << "\n";
    auto j = convex_json(gs.set);
    j["type"] = gs.rs->name();
    j["delta_half_ok"] = rep.ok;
    emit(o, j);
    return rep.ok && (gs.set.is_singleton() || b.value >= Rational(1, 3)) ? 0 : 1;
  }
  const auto rs = require_type(o);
  if (rs->family() == Family::E && !o.e8) throw Error("type E scans are opt-in; pass --e8");
  if (o.count_ideals) {
    const auto n = ideal_count(root_poset(*rs));
    std::cout << n << "\n";
    emit(o, Json{{"type", rs->name()}, {"ideals", n}});
    return 0;
  }
  if (o.scan) {
    const bool groups = rs->num_positive() <= 2 * kConvexScanMaxRoots;
    const auto s = scan_semiorders(rs, groups);
    std::cout << s.type << ": " << s.ideals_scanned << " ideals, simple-root witness "
              << (s.lemma46_ok ? "ok" : "FAILED") << "\n";
    if (groups) {
      std::cout << "delta <= 1/2 " << (s.delta_half_ok ? "ok" : "FAILED") << ", b >= 1/3 "
                << (s.balance_ok ? "ok" : "FAILED");
      if (s.min_balance) std::cout << ", min b = " << to_string(*s.min_balance);
      std::cout << "\n";
    }
    Json j{{"type", s.type}, {"ideals", s.ideals_scanned}, {"lemma46_ok", s.lemma46_ok}};
    if (groups) {
      j["delta_half_ok"] = s.delta_half_ok;
      j["balance_ok"] = s.balance_ok;
      j["min_balance"] = s.min_balance ? to_json(*s.min_balance) : Json(nullptr);
    }
    emit(o, j);
    return s.lemma46_ok && s.delta_half_ok && s.balance_ok ? 0 : 1;
  }
  if (o.allowed.empty()) throw Error("give --count-ideals, --scan, --unit-interval or --allowed");
  std::vector<int> members;
  const WeylGroup G(rs);
  for (const auto& s : split_list(o.allowed)) members.push_back(G.root_of_reflection_word(parse_word(s)));
  const auto gs = build_semiorder(rs, members);
  const auto rep = check_delta_half_report(gs);
  std::cout << "|W^A| = " << gs.set.size() << ", b = " << to_string(gs.set.balance().value) << ", max delta = "
            << to_string(rep.max_delta) << "\n";
  auto j = convex_json(gs.set);
  j["delta_half_ok"] = rep.ok;
  emit(o, j);
  return rep.ok ? 0 : 1;
}

int cmd_alcove(const Options& o) {
  const auto rs = require_type(o);
  const auto p = table1_params(*rs);
  const auto a = alcove_data(*rs);
  std::cout << p.type << ": m0 = " << p.m0 << ", m1 = " << p.m1 << ", ht = " << p.ht << ", m = " << to_string(p.m)
            << ", m m1 = " << to_string(p.mm1) << "\n";
  std::cout << "alcove centroid " << to_string(a.centroid) << "\n";
  Json verts = Json::array();
  for (const auto& v : a.vertices) verts.push_back(to_json(v));
  Json j{{"type", p.type},   {"m0", p.m0},  {"m1", p.m1},       {"ht", p.ht},
         {"m", to_json(p.m)}, {"mm1", to_json(p.mm1)}, {"vertices", verts}, {"centroid", to_json(a.centroid)}};
  int rc = 0;
  if (!o.interval.empty() || !o.hull.empty() || !o.words.empty() || !o.allowed.empty()) {
    const WeylGroup G(rs);
    const auto C = select_set(G, o);
    std::cout << "|C| = " << C.size() << ", b = " << to_string(C.balance().value) << "\n";
    std::cout << "centroid o_C = " << to_string(centroid(C)) << "\n";
    j["set"] = convex_json(C);
    j["set_centroid"] = to_json(centroid(C));
    if (!C.is_singleton()) {
      const auto g = geometry_report(C);
      auto name = [&](const std::optional<int>& k) { return k ? root_label(*rs, *k) : std::string("none"); };
      std::cout << "height-lemma root " << name(g.lemma51) << ", centroid-lemma root " << name(g.lemma54) << "\n";
      std::cout << "b >= 1/(2e^{m m1}): " << (g.bound55_ok ? "yes" : "NO") << "\n";
      if (g.bound56_ok) std::cout << "b >= 1/(2e): " << (*g.bound56_ok ? "yes" : "NO") << "\n";
      j["lemma51"] = name(g.lemma51);
      j["lemma54"] = name(g.lemma54);
      j["bound_mm1_ok"] = g.bound55_ok;
      if (g.bound56_ok) j["bound_1_ok"] = *g.bound56_ok;
      if (!g.lemma51 || !g.lemma54 || !g.bound55_ok || (g.bound56_ok && !*g.bound56_ok)) rc = 1;
    }
  }
  emit(o, j);
  return rc;
}

int cmd_verify(const Options& o) {
  try {
    const auto rep = run_campaign(o.campaign, o.e8, o.jobs);
    for (const auto& r : rep.records)
      if (!r.pass) std::cout << "FAIL " << r.key << ": " << r.value << " (expected " << r.expected << ")\n";
    for (const auto& f : rep.findings) std::cout << "note " << f << "\n";
    std::cout << rep.campaign << ": " << rep.passed() << "/" << rep.records.size() << " checks passed\n";
    emit(o, rep.to_json(o.timing));
    return rep.ok() ? 0 : 1;
  } catch (const TheoremViolation& v) {
    std::cerr << "violation: " << v.what() << "\n" << v.payload().dump(2) << "\n";
    emit(o, Json{{"campaign", o.campaign}, {"violation", v.what()}, {"payload", v.payload()}});
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balance constants of convex sets in Coxeter groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool typed) {
    if (typed) {
      c->add_option("--type", o.family, "root system family A-G");
      c->add_option("--rank", o.rank, "rank")->check(CLI::PositiveNumber);
    }
    c->add_option("--out", o.out, "write JSON here");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    c->add_option("--cap", o.cap, "element cap")->check(CLI::PositiveNumber);
  };
  auto set_opts = [&](CLI::App* c) {
    c->add_option("--interval", o.interval, "reduced word w; the set is [id, w]");
    c->add_option("--hull", o.hull, "words separated by ';'; the set is their convex hull");
    c->add_option("--words", o.words, "words separated by ';' that already form a convex set");
    c->add_option("--allowed", o.allowed, "reflection words separated by ';' giving A");
    c->add_option("--required", o.forbidden, "reflection words separated by ';' giving D");
  };

  auto roots = app.add_subcommand("roots", "positive roots, root poset");
  common(roots, true);
  roots->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot", "table"}));
  roots->add_flag("--graph", o.graph, "DOT of the labeled root graph instead of the poset");

  auto group = app.add_subcommand("group", "enumerate the Weyl group");
  common(group, true);

  auto balance = app.add_subcommand("balance", "delta and balance constant of a convex set");
  common(balance, true);
  set_opts(balance);
  balance->add_option("--diagram", o.diagram, "Coxeter diagram JSON file");
  balance->add_flag("--dot", o.dot, "print the weak order on the set as DOT");

  auto heap = app.add_subcommand("heap", "heap of a reduced word");
  common(heap, true);
  heap->add_option("--word", o.word, "reduced word")->required();
  heap->add_option("--diagram", o.diagram, "Coxeter diagram JSON file");
  heap->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot", "table"}));

  auto semi = app.add_subcommand("semiorder", "generalized semiorders");
  common(semi, true);
  semi->add_flag("--count-ideals", o.count_ideals, "count root poset ideals");
  semi->add_flag("--e8", o.e8, "allow type E");
  semi->add_flag("--scan", o.scan, "check every ideal");
  semi->add_option("--unit-interval", o.unit_interval, "sorted left endpoints of unit intervals");
  semi->add_option("--allowed", o.allowed, "reflection words separated by ';' forming an ideal");

  auto alcove = app.add_subcommand("alcove", "per-type constants, centroids and bound witnesses");
  common(alcove, true);
  set_opts(alcove);

  auto verify = app.add_subcommand("verify", "run a verification campaign");
  common(verify, false);
  verify->add_option("campaign", o.campaign, "campaign name")
      ->required()
      ->check(CLI::IsMember(campaign_names()));
  verify->add_flag("--e8", o.e8, "include exceptional types and the E8 search in 'all' and 'lemma46'");
  verify->add_flag("--timing", o.timing, "include the duration in the JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*roots) return cmd_roots(o);
    if (*group) return cmd_group(o);
    if (*balance) return cmd_balance(o);
    if (*heap) return cmd_heap(o);
    if (*semi) return cmd_semiorder(o);
    if (*alcove) return cmd_alcove(o);
    if (*verify) return cmd_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
