#include <doctest.h>

#include <set>

#include "treecolor/assoc.hpp"
#include "treecolor/error.hpp"
#include "treecolor/paths.hpp"

using namespace tc;

namespace {

BinaryTree T(std::initializer_list<const char*> a) { return BinaryTree::from_addresses(a); }
ColorVector V(const char* s) { return parse_vector(s); }

ColorVector ones_two_ones(int m, int n) {
  ColorVector c(m, 1);
  c.push_back(2);
  c.insert(c.end(), n, 1);
  return c;
}

std::vector<ColorVector> all_vectors(int n) {
  std::vector<ColorVector> out;
  ColorVector c(n, 1);
  for (;;) {
    out.push_back(c);
    int i = n - 1;
    while (i >= 0 && c[i] == 3) c[i--] = 1;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST_CASE("tree table") {
  const TreeTable& tab = tree_table(3);
  CHECK(tab.trees.size() == 14);
  for (size_t i = 0; i < tab.trees.size(); ++i) {
    CHECK(tab.index_of(tab.trees[i]) == static_cast<int>(i));
    CHECK(tab.nbrs[i].size() == 3);  // A_d is simple
  }
  CHECK(tab.index_of(T({"e"})) == -1);
}

TEST_CASE("color graph of 21211") {
  ColorGraph g = color_graph(V("21211"));
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 3);
  CHECK(is_connected(g));
  auto adj = g.adjacency();
  int ends = 0;
  for (const auto& row : adj) ends += row.size() == 1;
  CHECK(ends == 2);
  CHECK(g.index_of(T({"e", "1", "10", "100"})) >= 0);
  CHECK(g.index_of(T({"e", "0", "1", "10"})) >= 0);
  CHECK(graph_diameter(g) == 3);
  CHECK(g.dot().find("--") != std::string::npos);
}

TEST_CASE("color graph edges agree with signed rotations") {
  for (int len = 3; len <= 7; ++len)
    for (const auto& c : all_vectors(len)) {
      ColorGraph g = color_graph(c);
      const TreeTable& tab = tree_table(len - 2);
      std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
      for (size_t i = 0; i < tab.trees.size(); ++i) {
        const auto& t = tab.trees[i];
        bool valid = is_valid(t, c);
        CHECK((g.index_of(t) >= 0) == valid);
        if (!valid) continue;
        SignedTree st{t, signs_from_vector(t, c)};
        for (const auto& s : rotations_at(t)) {
          BinaryTree r = rotate(t, s);
          int a = g.index_of(t), b = g.index_of(r);
          bool edge = b >= 0 && edges.count({std::min(a, b), std::max(a, b)});
          CHECK(edge == is_signed_rotation_valid(st, s));
        }
      }
    }
}

TEST_CASE("color graph bounds") {
  CHECK(color_graph(V("111")).vertices.empty());
  CHECK_THROWS_AS(color_graph(V("11111111111112")), Error);
  CHECK_THROWS_AS(color_graph(V("1011")), Error);
  try {
    color_graph(V("1111111112"), 7);
    FAIL("expected DimensionTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionTooLarge);
  }
}

TEST_CASE("ten edge paths of 11322133") {
  ColorGraph g = color_graph(V("11322133"));
  int s = g.index_of(SignedTree::parse("e- 1+ 11+ 110+ 111+ 1100- 1110-").tree);
  int t = g.index_of(SignedTree::parse("e- 0+ 00+ 000+ 001+ 0001- 0011-").tree);
  REQUIRE(s >= 0);
  REQUIRE(t >= 0);
  auto paths = theta_paths(g, s, t);
  REQUIRE(paths.has_value());
  CHECK(paths->size() == 3);
  for (const auto& p : *paths) CHECK(p.size() == 11);
  CHECK(disjoint_path_count(g, s, t) == 3);
  CHECK(g.vertices.size() == 29);
}

TEST_CASE("disjoint path count") {
  ColorGraph g = color_graph(V("21211"));
  auto adj = g.adjacency();
  std::vector<int> ends;
  for (size_t v = 0; v < adj.size(); ++v)
    if (adj[v].size() == 1) ends.push_back(static_cast<int>(v));
  CHECK(disjoint_path_count(g, ends[0], ends[1]) == 1);
  CHECK(theta_paths(g, ends[0], ends[1])->size() == 1);
}

TEST_CASE("zero sets") {
  for (int n = 2; n <= 12; ++n) {
    ColorVector c(n, 1);
    c.push_back(2);
    CHECK(zero_intervals(c).size() == static_cast<size_t>(n * n / 4));
  }
  for (int k = 1; k <= 6; ++k) CHECK(zero_intervals(ones_two_ones(k, k)).size() == static_cast<size_t>(4 * k * k / 8));
  ZeroSet z = zero_set(V("121"));
  CHECK(z.intervals.empty());
  CHECK(z.vertices.empty());
  CHECK(color_graph(V("121")).vertices.size() == 2);
  for (int len = 3; len <= 7; ++len)
    for (const auto& c : all_vectors(len)) {
      ZeroSet zs = zero_set(c);
      ColorGraph g = color_graph(c);
      CHECK(zs.vertices.size() + g.vertices.size() == catalan(len - 1));
      for (const auto& t : zs.vertices) {
        auto sh = shadow_intervals(t);
        bool meets = std::any_of(sh.begin(), sh.end(), [&](const ShadowInterval& iv) {
          return std::find(zs.intervals.begin(), zs.intervals.end(), iv) != zs.intervals.end();
        });
        CHECK(meets);
      }
      std::set<ShadowInterval> zi(zs.intervals.begin(), zs.intervals.end());
      for (const auto& iv : zs.intervals) {
        CHECK(!zi.count({iv.lo, iv.hi + 1}));
        for (const auto& jv : zs.intervals)
          if (jv.lo == iv.hi + 1) CHECK(zi.count({iv.lo, jv.hi}));
      }
    }
}

TEST_CASE("color graphs are connected or edgeless") {
  for (int len = 3; len <= 7; ++len)
    for (const auto& c : all_vectors(len)) {
      ColorGraph g = color_graph(c);
      CHECK(is_connected_or_edgeless(g));
      auto k = classify_vector(c);
      if (k == VectorClass::PositiveRigid || k == VectorClass::NegativeRigid) {
        CHECK(g.edges.empty());
        CHECK(!g.vertices.empty());
      }
      if (k == VectorClass::Flexible) CHECK(is_connected(g));
    }
}

TEST_CASE("long paths") {
  CHECK(graph_diameter(color_graph(ones_two_ones(2, 2))) == 4);
  CHECK(graph_diameter(color_graph(ones_two_ones(3, 3))) == 9);
  CHECK(graph_diameter(color_graph(V("12"))) == 0);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) CHECK(graph_diameter(color_graph(ones_two_ones(m, n))) == m * n);
  ColorGraph split{V("212"), 1, {T({"e", "0"}), T({"e", "1"})}, {}};
  CHECK_THROWS_AS(graph_diameter(split), Error);
}

TEST_CASE("vine words") {
  BinaryTree vine = T({"e", "0", "00", "001", "0011", "00110"});
  CHECK(vine_word(vine, V("1112111")) == "rrllrl");
  CHECK(vine_word(vine, V("1121111")) == "rrllrr");
  // 1^4 2 colours only the right vine, whose leaves all hang to the left.
  CHECK(color_graph(V("11112")).vertices == std::vector<BinaryTree>{right_vine(4)});
  CHECK(vine_word(right_vine(4), V("11112")) == "llll");
  CHECK_THROWS_AS(vine_word(vine, V("1113111")), Error);
  CHECK_THROWS_AS(vine_word(T({"e", "0", "1"}), V("1121")), Error);
  // Every vertex of the 1^m 2 1^n graph is a vine whose word has m letters l,
  // and edges swap one adjacent rl/lr.
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      if (m + n < 1) continue;
      ColorVector c = ones_two_ones(m, n);
      ColorGraph g = color_graph(c);
      std::vector<std::string> words;
      for (const auto& t : g.vertices) {
        words.push_back(vine_word(t, c));
        CHECK(std::count(words.back().begin(), words.back().end(), 'l') == m);
      }
      CHECK(std::set<std::string>(words.begin(), words.end()).size() == words.size());
      for (auto [a, b] : g.edges) {
        int diff = 0;
        for (size_t i = 0; i < words[a].size(); ++i) diff += words[a][i] != words[b][i];
        CHECK(diff == 2);
      }
    }
}

TEST_CASE("separation fixture") {
  Separation sep = face_union_separates(4, {{1, 5}, {2, 4}, {3, 6}, {4, 6}});
  CHECK(sep.separates);
  CHECK(sep.complement.size() == 6);
  CHECK(sep.components == 2);
  CHECK(std::count(sep.component.begin(), sep.component.end(), 0) == 3);
  for (int lo = 1; lo <= 6; ++lo)
    for (int hi = lo + 1; hi <= 6; ++hi) CHECK(!face_union_separates(4, {{lo, hi}}).separates);
  for (int len = 4; len <= 7; ++len)
    for (const auto& c : all_vectors(len))
      if (classify_vector(c) == VectorClass::Flexible)
        CHECK(!face_union_separates(len - 2, zero_intervals(c)).separates);
}

TEST_CASE("positive neighborhoods") {
  std::set<BinaryTree> covered;
  for (const auto& t : all_trees(3)) {
    Neighborhood nb = positive_neighborhood(t);
    CHECK(nb.graph.vertices.size() == 3);
    CHECK(nb.graph.edges.size() == 2);
    CHECK(nb.graph.adjacency()[nb.graph.index_of(t)].size() == 2);
    covered.insert(nb.graph.vertices.begin(), nb.graph.vertices.end());
  }
  CHECK(covered.size() == 5);
  Neighborhood one = positive_neighborhood(T({"e", "0"}));
  CHECK(one.graph.vertices.size() == 2);
  CHECK(one.graph.edges.size() == 1);
  CHECK_THROWS_AS(positive_neighborhood(BinaryTree()), Error);

  // The two A_3 trees of the 21211 example share one normalized coloring, and
  // no vertex of its graph has all signs equal.
  BinaryTree d = T({"e", "1", "10", "100"}), r = T({"e", "0", "1", "10"});
  auto cs = colorings_of_pair({d, r});
  REQUIRE(cs.size() == 1);
  ColorGraph g = color_graph(cs[0]);
  CHECK(g.vertices.size() == 4);
  for (const auto& t : g.vertices) {
    auto s = signs_from_vector(t, cs[0]);
    CHECK(std::set<int8_t>(s.begin(), s.end()).size() == 2);
  }
}
