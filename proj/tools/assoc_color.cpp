#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "treecolor/assoc.hpp"
#include "treecolor/enumeration.hpp"
#include "treecolor/error.hpp"
#include "treecolor/fixtures.hpp"
#include "treecolor/maps.hpp"
#include "treecolor/paths.hpp"
#include "treecolor/verify.hpp"

using namespace tc;
using nlohmann::json;

namespace {

enum class Format { Text, Json, Dot, Csv };
Format g_format = Format::Text;
int g_jobs = 1;

// Trees are given as "((..).)", as JSON, or as a list of internal addresses
// ("e 0 01" or "e,0,01").
BinaryTree read_tree(const std::string& s) {
  if (s.find_first_of("({[.") != std::string::npos) return BinaryTree::parse(s);
  std::string spaced = s;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<Address> v;
  for (std::string tok; in >> tok;) v.push_back(Address::parse(tok));
  return BinaryTree::make(std::move(v));
}

TreePair read_pair(const std::vector<std::string>& args) {
  if (args.size() == 1) return TreePair::parse(args[0]);
  if (args.size() == 2) return TreePair::make(read_tree(args[0]), read_tree(args[1]));
  throw CLI::ValidationError("pair", "give one \"(D, R)\" argument or two trees");
}

json tree_json(const BinaryTree& t) { return json::parse(t.json()); }

json vectors_json(const std::vector<ColorVector>& vs) {
  json a = json::array();
  for (const auto& c : vs) a.push_back(vector_str(c));
  return a;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string intervals_str(const std::vector<ShadowInterval>& ivs) {
  std::string out;
  for (const auto& iv : ivs) out += (out.empty() ? "" : " ") + iv.str();
  return out;
}

// ---------------------------------------------------------------------------

void cmd_trees_list(int n) {
  auto ts = all_trees(n);
  if (g_format == Format::Json) {
    json a = json::array();
    for (const auto& t : ts) a.push_back(t.str());
    emit({{"carets", n}, {"count", ts.size()}, {"trees", a}});
    return;
  }
  for (const auto& t : ts) std::cout << t.str() << "\n";
}

void cmd_trees_show(const std::string& text) {
  BinaryTree t = read_tree(text);
  std::vector<std::string> internal, leaves;
  for (const auto& a : t.internal()) internal.push_back(a.str());
  for (const auto& a : t.leaves()) leaves.push_back(a.str());
  auto sh = shadow_intervals(t);
  if (g_format == Format::Json) {
    json shadows = json::array();
    for (const auto& iv : sh) shadows.push_back({iv.lo, iv.hi});
    std::vector<std::string> rots;
    for (const auto& s : rotations_at(t)) rots.push_back(s.str());
    emit({{"tree", t.str()},
          {"internal", internal},
          {"leaves", leaves},
          {"shadows", shadows},
          {"rotations", rots},
          {"vine", is_vine(t)}});
    return;
  }
  std::cout << "tree      " << t.str() << "\n";
  std::cout << "carets    " << t.carets() << "\n";
  std::cout << "internal ";
  for (const auto& a : internal) std::cout << " " << a;
  std::cout << "\nleaves   ";
  for (const auto& a : leaves) std::cout << " " << a;
  std::cout << "\nshadows   " << intervals_str(sh) << "\n";
  std::cout << "rotations";
  for (const auto& s : rotations_at(t)) std::cout << " " << s.str();
  std::cout << "\n";
}

// ---------------------------------------------------------------------------

void cmd_color_check(const std::string& tree, const std::string& vec) {
  BinaryTree t = read_tree(tree);
  ColorVector c = parse_vector(vec);
  bool ok = is_valid(t, c);
  if (g_format == Format::Json) {
    json j{{"tree", t.str()}, {"vector", vec}, {"valid", ok}};
    if (ok) j["signed"] = SignedTree{t, signs_from_vector(t, c)}.str();
    emit(j);
    return;
  }
  std::cout << (ok ? "valid" : "invalid") << "\n";
  if (ok) std::cout << SignedTree{t, signs_from_vector(t, c)}.str() << "\n";
}

void cmd_color_classify(const std::string& vec) {
  ColorVector c = parse_vector(vec);
  VectorClass k = classify_vector(c);
  auto w = k == VectorClass::Unacceptable ? std::nullopt : acceptable_witness(c);
  if (g_format == Format::Json) {
    json j{{"vector", vec}, {"class", vector_class_name(k)}};
    if (w) j["witness"] = w->str();
    emit(j);
    return;
  }
  std::cout << vector_class_name(k) << "\n";
  if (w) std::cout << "witness " << w->str() << "\n";
}

void cmd_color_tree(const std::string& tree) {
  BinaryTree t = read_tree(tree);
  auto cs = normalized_colorings(t);
  if (g_format == Format::Json) {
    emit({{"tree", t.str()}, {"count", cs.size()}, {"vectors", vectors_json(cs)}});
    return;
  }
  for (const auto& c : cs) std::cout << vector_str(c) << "\n";
}

void cmd_color_pair(const std::vector<std::string>& args) {
  TreePair p = read_pair(args);
  auto cs = colorings_of_pair(p);
  if (g_format == Format::Json) {
    emit({{"pair", p.str()}, {"count", cs.size()}, {"vectors", vectors_json(cs)}});
  } else if (g_format == Format::Csv) {
    std::cout << "pair,count,vectors\n\"" << p.str() << "\"," << cs.size() << ",";
    for (size_t i = 0; i < cs.size(); ++i) std::cout << (i ? " " : "") << vector_str(cs[i]);
    std::cout << "\n";
  } else {
    for (const auto& c : cs) std::cout << vector_str(c) << "\n";
    if (cs.empty()) std::cout << "no common coloring\n";
  }
}

// ---------------------------------------------------------------------------

void cmd_path_find(const std::vector<std::string>& args) {
  TreePair p = read_pair(args);
  auto w = find_sign_consistent_path(p.d, p.r);
  if (g_format == Format::Json) {
    json j{{"pair", p.str()}, {"found", w.has_value()}};
    if (w) {
      j["word"] = word_str(*w);
      j["colorings"] = vectors_json(compatible_colorings(*w, p.d));
    }
    emit(j);
    return;
  }
  if (!w) {
    std::cout << "no sign consistent path found\n";
    return;
  }
  std::cout << (w->empty() ? "(empty)" : word_str(*w)) << "\n";
}

void cmd_path_eval(const std::string& tree, const std::string& word) {
  BinaryTree t = read_tree(tree);
  Word w = parse_word(word);
  auto trees = path_evaluate(t, w);
  if (g_format == Format::Json) {
    json a = json::array();
    for (const auto& x : trees) a.push_back(x.str());
    emit({{"word", word_str(w)}, {"trees", a}, {"balanced", is_balanced(sign_structure(w)).balanced}});
    return;
  }
  for (const auto& x : trees) std::cout << x.str() << "\n";
}

void cmd_path_move(const std::string& kind, const std::string& word, size_t at) {
  Word w = parse_word(word);
  Word out = kind == "pentagon" ? pentagon_move(w, at) : square_move(w, at);
  if (g_format == Format::Json) {
    emit({{"word", word_str(w)}, {"move", kind}, {"at", at}, {"result", word_str(out)}});
    return;
  }
  std::cout << word_str(out) << "\n";
}

// ---------------------------------------------------------------------------

void cmd_sigma(const std::string& word) {
  Word w = parse_word(word);
  SignStructure ss = sign_structure(w);
  Balance b = is_balanced(ss);
  if (g_format == Format::Dot) {
    std::cout << ss.dot();
    return;
  }
  if (g_format == Format::Json) {
    json edges = json::array();
    for (const auto& e : ss.edges) edges.push_back({{"a", e.a.str()}, {"b", e.b.str()}, {"sign", e.sign > 0 ? "+" : "-"}});
    emit({{"word", word_str(w)},
          {"edges", edges},
          {"support", ss.support.str()},
          {"balanced", b.balanced},
          {"components", b.components}});
    return;
  }
  std::cout << ss.str();
  std::cout << (b.balanced ? "balanced" : "unbalanced") << " (" << b.components << " component"
            << (b.components == 1 ? "" : "s") << ")\n";
}

// ---------------------------------------------------------------------------

void cmd_graph(const std::string& vec, bool zero) {
  ColorVector c = parse_vector(vec);
  ColorGraph g = color_graph(c);
  bool connected = is_connected(g);
  auto zs = zero_intervals(c);
  if (g_format == Format::Dot) {
    std::cout << g.dot();
    return;
  }
  std::string diam = connected && !g.vertices.empty() ? std::to_string(graph_diameter(g)) : "";
  if (g_format == Format::Csv) {
    std::cout << "vector,vertices,edges,diameter,zero_intervals\n"
              << vec << "," << g.vertices.size() << "," << g.edges.size() << "," << diam << "," << zs.size() << "\n";
    return;
  }
  if (g_format == Format::Json) {
    json verts = json::array(), edges = json::array(), z = json::array();
    for (const auto& t : g.vertices) verts.push_back(t.str());
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    for (const auto& iv : zs) z.push_back({iv.lo, iv.hi});
    json j{{"vector", vec}, {"class", vector_class_name(classify_vector(c))}, {"vertices", verts}, {"edges", edges},
           {"connected", connected}, {"zero_intervals", z}};
    if (!diam.empty()) j["diameter"] = std::stoi(diam);
    emit(j);
    return;
  }
  std::cout << "class     " << vector_class_name(classify_vector(c)) << "\n";
  std::cout << "vertices  " << g.vertices.size() << "\n";
  std::cout << "edges     " << g.edges.size() << "\n";
  std::cout << "connected " << (connected ? "yes" : "no") << "\n";
  if (!diam.empty()) std::cout << "diameter  " << diam << "\n";
  std::cout << "zero set  " << zs.size() << " intervals";
  if (zero) std::cout << ": " << intervals_str(zs);
  std::cout << "\n";
}

// ---------------------------------------------------------------------------

void cmd_map_factor(const std::vector<std::string>& args) {
  TreePair p = read_pair(args);
  auto fs = prime_factorization(p);
  if (g_format == Format::Json) {
    json a = json::array();
    for (const auto& f : fs) a.push_back({{"pair", f.str()}, {"colorings", colorings_of_pair(f).size()}});
    emit({{"pair", p.str()}, {"prime", fs.size() == 1}, {"factors", a}, {"colorings", colorings_of_pair(p).size()}});
    return;
  }
  for (const auto& f : fs) std::cout << f.str() << "  " << colorings_of_pair(f).size() << " colorings\n";
}

void cmd_map_prime(const std::vector<std::string>& args) {
  TreePair p = read_pair(args);
  bool prime = is_prime(p);
  if (g_format == Format::Json) {
    json common = json::array();
    for (const auto& iv : common_intervals(p)) common.push_back({iv.lo, iv.hi});
    emit({{"pair", p.str()}, {"prime", prime}, {"common_intervals", common}});
    return;
  }
  std::cout << (prime ? "prime" : "not prime") << "\n";
  if (!prime) std::cout << "common " << intervals_str(common_intervals(p)) << "\n";
}

void cmd_map_dual(const std::vector<std::string>& args) {
  TreePair p = read_pair(args);
  Triangulation t = pair_to_dual(p);
  if (g_format == Format::Json) {
    emit(json::parse(t.graph().json()));
    return;
  }
  for (auto [a, b] : t.edges) std::cout << a << " " << b << "\n";
}

void cmd_chromatic(const std::string& family, int n) {
  Family f = parse_family(family);
  Triangulation t = family_graph(f, n);
  uint64_t count = count_vertex_colorings(t.graph(), 4);
  int64_t formula = closed_form(f, n);
  if (g_format == Format::Json) {
    emit({{"family", family_name(f)},
          {"n", n},
          {"colorings", count},
          {"modulo_s4", count / 24},
          {"formula", formula},
          {"graph", json::parse(t.graph().json())}});
    return;
  }
  std::cout << family_name(f) << "_" << n << ": " << count << " colorings, " << count / 24 << " up to relabelling, formula "
            << formula << "\n";
}

void cmd_v_check(const std::string& fixture, const std::string& vec) {
  VTriple t = fixture_triple(fixture);
  auto cs = v_triple_colorings(t);
  Graph g = triple_to_map(t).graph();
  bool contains = false;
  if (!vec.empty()) {
    ColorVector c = parse_vector(vec);
    contains = is_valid(t.d, c) && std::find(cs.begin(), cs.end(), normalize_for(t.d, c)) != cs.end();
  }
  if (g_format == Format::Json) {
    json j{{"fixture", fixture}, {"colorings", vectors_json(cs)}, {"girth", girth(g)},
           {"edge_3_colorings", count_edge_3_colorings(g)}, {"graph", json::parse(g.json())}};
    if (!vec.empty()) j["contains"] = contains;
    emit(j);
    return;
  }
  std::cout << fixture << ": " << cs.size() << " colorings, cubic graph on " << g.n << " vertices, girth " << girth(g)
            << "\n";
  for (const auto& c : cs) std::cout << vector_str(c) << "\n";
  if (!vec.empty()) std::cout << vec << (contains ? " accepted" : " rejected") << "\n";
}

void cmd_v_census(int leaves) {
  TripleCensus c = v_triple_census(leaves);
  if (g_format == Format::Json) {
    emit({{"leaves", leaves}, {"triples", c.total}, {"uncolorable", c.uncolorable}});
    return;
  }
  std::cout << c.uncolorable << " of " << c.total << " triples with " << leaves << " leaves have no coloring\n";
}

// ---------------------------------------------------------------------------

void cmd_counts(const std::string& kind, int n, bool brute) {
  int64_t v;
  if (kind == "acceptable")
    v = brute ? count_acceptable_brute(n) : count_acceptable(n);
  else if (kind == "rigid")
    v = brute ? count_rigid_brute(n) : count_rigid(n);
  else
    v = brute ? count_flexible_brute(n) : count_flexible(n);
  if (g_format == Format::Json) {
    emit({{"kind", kind}, {"n", n}, {"count", v}, {"method", brute ? "brute" : "recurrence"}});
  } else if (g_format == Format::Csv) {
    std::cout << "kind,n,count\n" << kind << "," << n << "," << v << "\n";
  } else {
    std::cout << v << "\n";
  }
}

void cmd_mi_search(int n, const std::string& out_path) {
  CountReport rep = max_coloring_search(n, g_jobs, std::max(n, mi_search_bound()));
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + out_path);
    out << rep.csv();
  }
  if (g_format == Format::Csv) {
    std::cout << rep.csv();
    return;
  }
  if (g_format == Format::Json) {
    json ranks = json::array();
    for (size_t i = 0; i < rep.ranks.size(); ++i) {
      const auto& r = rep.ranks[i];
      ranks.push_back({{"rank", i + 1}, {"count", r.count}, {"pairs", r.pairs}, {"witness", r.witness.str()},
                       {"conjectured", i < 4 ? conjectured_m(static_cast<int>(i) + 1, n) : 0}});
    }
    emit({{"n", n}, {"ranks", ranks}});
    return;
  }
  for (size_t i = 0; i < rep.ranks.size() && i < 4; ++i) {
    const auto& r = rep.ranks[i];
    int64_t want = conjectured_m(static_cast<int>(i) + 1, n);
    std::cout << "m_" << i + 1 << "(" << n << ") = " << r.count;
    if (want) std::cout << " (formula " << want << ")";
    std::cout << "  " << r.pairs << " pairs, e.g. " << r.witness.str() << "\n";
  }
}

int cmd_verify(const std::string& suite, int size) {
  std::vector<std::string> names;
  if (suite == "all")
    for (const auto& s : suites()) names.push_back(s.name);
  else
    names.push_back(suite);
  int failed = 0;
  json results = json::array();
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, {size, g_jobs});
    failed += !r.pass;
    if (g_format == Format::Json)
      results.push_back({{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  if (g_format == Format::Json) emit(results);
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colorings of binary tree pairs, associahedron paths and planar maps"};
  app.require_subcommand(1);
  app.fallthrough();
  // Flag callbacks fire while parsing, before any subcommand callback runs.
  app.add_flag_callback("--json", [] { g_format = Format::Json; }, "JSON output");
  app.add_flag_callback("--dot", [] { g_format = Format::Dot; }, "Graphviz output where a graph is produced");
  app.add_flag_callback("--csv", [] { g_format = Format::Csv; }, "CSV output where a table is produced");
  app.add_option("--jobs", g_jobs, "worker threads for sweeps (0 = all cores)");

  int result = 0;
  std::string s1, s2, kind = "acceptable", suite = "all", out_path;
  std::vector<std::string> pair_args;
  int n = 0, size = -1;
  size_t at = 0;
  bool flag = false;

  auto* trees = app.add_subcommand("trees", "enumerate or inspect trees");
  trees->require_subcommand(1);
  auto* trees_list = trees->add_subcommand("list", "all trees with N carets");
  trees_list->add_option("--n", n, "carets")->required();
  trees_list->callback([&] { cmd_trees_list(n); });
  auto* trees_show = trees->add_subcommand("show", "structure of one tree");
  trees_show->add_option("tree", s1)->required();
  trees_show->callback([&] { cmd_trees_show(s1); });

  auto* color = app.add_subcommand("color", "validity, classification and colorings");
  color->require_subcommand(1);
  auto* color_check = color->add_subcommand("check", "is a vector valid for a tree");
  color_check->add_option("tree", s1)->required();
  color_check->add_option("vector", s2)->required();
  color_check->callback([&] { cmd_color_check(s1, s2); });
  auto* color_classify = color->add_subcommand("classify", "rigid / flexible / unacceptable");
  color_classify->add_option("vector", s1)->required();
  color_classify->callback([&] { cmd_color_classify(s1); });
  auto* color_tree = color->add_subcommand("tree", "normalized colorings of a tree");
  color_tree->add_option("tree", s1)->required();
  color_tree->callback([&] { cmd_color_tree(s1); });
  auto* color_pair = color->add_subcommand("pair", "common colorings of a tree pair");
  color_pair->add_option("pair", pair_args, "\"(D, R)\" or two trees")->required();
  color_pair->callback([&] { cmd_color_pair(pair_args); });

  auto* path = app.add_subcommand("path", "signed rotation paths");
  path->require_subcommand(1);
  auto* path_find = path->add_subcommand("find", "sign consistent path between two trees");
  path_find->add_option("pair", pair_args)->required();
  path_find->callback([&] { cmd_path_find(pair_args); });
  auto* path_eval = path->add_subcommand("eval", "trees visited by a word");
  path_eval->add_option("tree", s1)->required();
  path_eval->add_option("word", s2)->required();
  path_eval->callback([&] { cmd_path_eval(s1, s2); });
  for (const char* mv : {"square", "pentagon"}) {
    auto* sub = path->add_subcommand(mv, std::string(mv) + " move at a position");
    sub->add_option("word", s1)->required();
    sub->add_option("at", at)->required();
    std::string name = mv;
    sub->callback([&, name] { cmd_path_move(name, s1, at); });
  }

  for (const char* name : {"sigma", "sign-structure"}) {
    auto* sigma = app.add_subcommand(name, "sign structure of a word and its balance");
    sigma->add_option("word", s1)->required();
    sigma->callback([&] { cmd_sigma(s1); });
  }

  for (const char* name : {"graph", "color-graph"}) {
    auto* graph = app.add_subcommand(name, "color graph of a vector");
    graph->add_option("vector", s1)->required();
    graph->add_flag("--zero", flag, "list the zero set intervals");
    graph->callback([&] { cmd_graph(s1, flag); });
  }

  auto* map = app.add_subcommand("map", "planar maps, primality and chromatic counts");
  map->require_subcommand(1);
  // factor, chromatic and v-check are also reachable at top level.
  for (CLI::App* parent : {map, &app}) {
    auto* factor = parent->add_subcommand("factor", "prime factorization of a pair");
    factor->add_option("pair", pair_args)->required();
    factor->callback([&] { cmd_map_factor(pair_args); });
    auto* chromatic = parent->add_subcommand("chromatic", "4-colorings of a named family member");
    chromatic->add_option("--family", s1, "W, Theta, Xi, Y or Nabla")->required();
    chromatic->add_option("--n", n, "vertices")->required();
    chromatic->callback([&] { cmd_chromatic(s1, n); });
    auto* vcheck = parent->add_subcommand("v-check", "colorings of a V-triple fixture");
    vcheck->add_option("fixture", s1, "noColorV, torusK7 or petersenRP2")->required();
    vcheck->add_option("vector", s2, "optional vector to test");
    vcheck->callback([&] { cmd_v_check(s1, s2); });
  }
  auto* prime = map->add_subcommand("prime", "primality test");
  prime->add_option("pair", pair_args)->required();
  prime->callback([&] { cmd_map_prime(pair_args); });
  auto* dual = map->add_subcommand("dual", "triangulation dual to a pair");
  dual->add_option("pair", pair_args)->required();
  dual->callback([&] { cmd_map_dual(pair_args); });
  auto* vcensus = map->add_subcommand("v-census", "uncolorable triples over all trees and bijections");
  vcensus->add_option("--leaves", n)->required();
  vcensus->callback([&] { cmd_v_census(n); });

  auto* counts = app.add_subcommand("counts", "vector counts modulo color permutations");
  counts->add_option("--kind", kind)->check(CLI::IsMember({"acceptable", "rigid", "flexible"}));
  counts->add_option("--n", n)->required();
  counts->add_flag("--brute", flag, "enumerate instead of using the recurrence");
  counts->callback([&] { cmd_counts(kind, n, flag); });

  auto* mi = app.add_subcommand("mi-search", "largest coloring counts over prime pairs");
  mi->add_option("--n", n, "triangulation vertices (carets + 2)")->required();
  mi->add_option("--out", out_path, "write the CSV report here");
  mi->callback([&] { cmd_mi_search(n, out_path); });

  auto* verify = app.add_subcommand("verify", "run exhaustive check suites");
  std::vector<std::string> suite_names{"all"};
  for (const auto& s : suites()) suite_names.push_back(s.name);
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names));
  verify->add_option("--size,--max-len,--max-n", size, "override the suite's size bound");
  verify->callback([&] { result = cmd_verify(suite, size); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return result;
}
