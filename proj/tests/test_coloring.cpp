#include <doctest.h>

#include <random>
#include <set>

#include "treecolor/coloring.hpp"
#include "treecolor/error.hpp"

using namespace tc;

namespace {

BinaryTree T(std::initializer_list<const char*> a) { return BinaryTree::from_addresses(a); }
Address A(const char* s) { return Address::parse(s); }
ColorVector V(const char* s) { return parse_vector(s); }

// All {1,2,3}-vectors of length n.
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

BinaryTree complete_tree(int depth) {
  std::vector<Address> v{Address::root()};
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i].len + 1 < depth) {
      v.push_back(v[i].child(0));
      v.push_back(v[i].child(1));
    }
  return BinaryTree::make(v);
}

}  // namespace

TEST_CASE("edge coloring from a vector") {
  auto e = edge_coloring_from_vector(T({"e", "0"}), V("121"));
  CHECK(e.at(A("0")) == 3);
  CHECK(e.at(A("e")) == 2);
  CHECK(edge_coloring_from_vector(T({"e"}), V("11")).at(A("e")) == 0);
  for (const auto& [v, x] : edge_coloring_from_vector(T({"e", "0", "1"}), V("0000"))) CHECK(x == 0);
  CHECK_THROWS_AS(edge_coloring_from_vector(T({"e"}), V("1")), Error);
}

TEST_CASE("root color is the vector sum and every caret sums to zero") {
  std::mt19937 rng(11);
  for (int n = 0; n <= 6; ++n)
    for (const auto& t : all_trees(n))
      for (int k = 0; k < 50; ++k) {
        ColorVector c(t.leaf_count());
        for (auto& x : c) x = static_cast<Color>(rng() % 4);
        auto e = edge_coloring_from_vector(t, c);
        CHECK(e.at(A("e")) == vector_sum(c));
        for (const auto& v : t.internal()) CHECK((e.at(v) ^ e.at(v.child(0)) ^ e.at(v.child(1))) == 0);
      }
}

TEST_CASE("validity") {
  CHECK(is_valid(T({"e", "0"}), V("121")));
  CHECK(!is_valid(T({"e", "0"}), V("112")));
  int everywhere = 0;
  for (const auto& c : all_vectors(4)) {
    bool all = true;
    for (const auto& t : all_trees(3)) all = all && is_valid(t, c);
    everywhere += all;
  }
  CHECK(everywhere == 0);
}

TEST_CASE("signs") {
  CHECK(sign_of(1, 2, 3) == 1);
  CHECK(sign_of(2, 3, 1) == 1);
  CHECK(sign_of(3, 1, 2) == 1);
  CHECK(sign_of(1, 3, 2) == -1);
  CHECK(sign_of(1, 1, 0) == 0);
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : all_trees(n))
      for (const auto& c : normalized_colorings(t)) {
        auto s = signs_from_vector(t, c);
        auto flipped = signs_from_vector(t, permute_colors(c, {1, 3, 2}));
        auto cycled = signs_from_vector(t, permute_colors(c, {2, 3, 1}));
        for (size_t i = 0; i < s.size(); ++i) {
          CHECK(flipped[i] == -s[i]);
          CHECK(cycled[i] == s[i]);
        }
      }
  EdgeColoring bad{{A("e"), 1}, {A("0"), 1}, {A("1"), 0}};
  CHECK_THROWS_AS(sign_assignment_from_coloring(T({"e"}), bad), Error);
}

TEST_CASE("coloring from signs") {
  // Oracle: the unique leaf vector with root 1 whose signs are all positive.
  BinaryTree t = T({"e", "0"});
  std::vector<ColorVector> hits;
  for (const auto& c : all_vectors(3))
    if (vector_sum(c) == 1 && is_valid(t, c) && signs_from_vector(t, c) == SignAssignment{1, 1}) hits.push_back(c);
  REQUIRE(hits.size() == 1);
  CHECK(vector_from_sign(t, {1, 1}, 1) == hits[0]);
  CHECK(hits[0] == V("313"));
  CHECK_THROWS_AS(coloring_from_sign(t, {1, 1}, 0), Error);
  for (int n = 0; n <= 6; ++n)
    for (const auto& tr : all_trees(n))
      for (uint32_t m = 0; m < (1u << n); ++m) {
        SignAssignment s(n);
        for (int i = 0; i < n; ++i) s[i] = (m >> i) & 1 ? -1 : 1;
        std::set<ColorVector> cls;
        for (Color root = 1; root <= 3; ++root) {
          auto e = coloring_from_sign(tr, s, root);
          CHECK(sign_assignment_from_coloring(tr, e) == s);
          cls.insert(vector_from_sign(tr, s, root));
        }
        CHECK(cls.size() == 3);
      }
}

TEST_CASE("acceptability") {
  CHECK(!is_acceptable(V("11")));
  CHECK(!is_acceptable(V("111")));
  auto w = acceptable_witness(V("1321"));
  REQUIRE(w.has_value());
  CHECK(is_valid(*w, V("1321")));
  CHECK_THROWS_AS(is_acceptable(V("102")), Error);
  CHECK_THROWS_AS(is_acceptable(V("1")), Error);
  for (int len = 2; len <= 7; ++len) {
    auto trees = all_trees(len - 1);
    for (const auto& c : all_vectors(len)) {
      bool brute = std::any_of(trees.begin(), trees.end(), [&](const BinaryTree& t) { return is_valid(t, c); });
      REQUIRE(is_acceptable(c) == brute);
      if (brute) CHECK(is_valid(*acceptable_witness(c), c));
    }
  }
}

TEST_CASE("classify_vector") {
  CHECK(classify_vector(V("22133")) == VectorClass::PositiveRigid);
  CHECK(classify_vector(V("21211")) == VectorClass::Flexible);
  CHECK(classify_vector(V("1111")) == VectorClass::Unacceptable);
  CHECK(classify_vector(V("12")) == VectorClass::PositiveRigid);
  CHECK_THROWS_AS(classify_vector(V("120")), Error);
  // Rigid means adjacent vertices always carry opposite signs; positive rigid
  // means the top vertex is positive.  Cyclic recoloring keeps every sign.
  for (int len = 2; len <= 7; ++len) {
    auto trees = all_trees(len - 1);
    for (const auto& c : all_vectors(len)) {
      auto k = classify_vector(c);
      std::set<int> seen;
      for (const auto& t : trees) {
        if (!is_valid(t, c)) continue;
        auto s = signs_from_vector(t, c);
        bool alternating = true;
        for (size_t i = 1; i < s.size(); ++i)
          if (s[i] == s[t.internal_index(t.internal()[i].parent())]) alternating = false;
        int cls = !alternating ? 2 : (s[0] > 0 ? 0 : 1);
        seen.insert(cls);
      }
      if (seen.empty()) {
        CHECK(k == VectorClass::Unacceptable);
        continue;
      }
      REQUIRE(seen.size() == 1);
      CHECK(static_cast<int>(k) == *seen.begin());
    }
  }
}

TEST_CASE("normalized colorings") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : all_trees(n)) {
      auto cs = normalized_colorings(t);
      CHECK(cs.size() == (size_t{1} << (n - 1)));
      CHECK(colorings_of_pair({t, t}).size() == (size_t{1} << (n - 1)));
      for (const auto& c : cs) CHECK(normalize_for(t, c) == c);
    }
  auto e = colorings_of_pair({T({"e", "0"}), T({"e", "1"})});
  REQUIRE(e.size() == 1);
  CHECK(e[0][0] == e[0][2]);
  CHECK(e[0][1] == 1);
  // Colorings are symmetric under inversion.
  for (const auto& d : all_trees(4))
    for (const auto& r : all_trees(4)) {
      auto a = colorings_of_pair({d, r});
      auto b = colorings_of_pair({r, d});
      CHECK(a.size() == b.size());
      std::set<ColorVector> bn;
      for (const auto& c : b) bn.insert(normalize_for(d, c));
      CHECK(std::set<ColorVector>(a.begin(), a.end()) == bn);
    }
}

TEST_CASE("prime positive pairs have exactly one coloring") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& d : all_trees(n)) {
      TreePair p{d, right_vine(n)};
      if (is_prime_positive(p)) CHECK(colorings_of_pair(p).size() == 1);
    }
}

TEST_CASE("patterns") {
  CHECK(pattern_eval(pattern_rigid, A("e")) == 1);
  CHECK(pattern_eval(pattern_rigid, A("01")) == 1);
  CHECK(pattern_eval(pattern_rigid, A("011")) == -1);
  CHECK(vector_str(pattern_coloring(pattern_rigid, T({"e", "0", "1"}))) == "1321");
  std::string expect;
  for (int j = 0; j < 21; ++j) expect += "132";
  CHECK(vector_str(pattern_coloring(pattern_rigid, complete_tree(6))) == expect + "1");
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : all_trees(n)) {
      auto d = t.leaf_depths();
      if (!std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; })) continue;
      auto c = vector_str(pattern_coloring(pattern_rigid, t));
      std::string want;
      while (want.size() + 1 < c.size()) want += "132";
      CHECK(c == want + "1");
    }
  CHECK(pattern_coloring(pattern_positive, T({"e", "0"})) != pattern_coloring(pattern_positive, T({"e", "1"})));
}

TEST_CASE("pattern compatibility") {
  TreePair par{T({"e", "0", "00", "001"}), T({"e", "1", "11", "110"})};
  CHECK(is_pattern_compatible(par, pattern_rigid));
  CHECK(vector_str(pattern_coloring(pattern_rigid, par.d)) == "22133");
  CHECK(!is_pattern_compatible({T({"e", "0"}), T({"e", "1"})}, pattern_rigid));
  TreePair sym{T({"e", "0", "1", "10", "101", "1011"}), T({"e", "0", "1", "01", "010", "0100"})};
  CHECK(is_pattern_compatible(sym, pattern_positive));
  for (int n = 1; n <= 5; ++n)
    for (const auto& d : all_trees(n))
      for (const auto& r : all_trees(n)) CHECK(is_pattern_compatible({d, r}, pattern_rigid) == parity_condition({d, r}));
}

TEST_CASE("products of compatible pairs stay compatible") {
  std::vector<TreePair> f4;
  for (int n = 1; n <= 4; ++n)
    for (const auto& d : all_trees(n))
      for (const auto& r : all_trees(n)) {
        TreePair p = reduce({d, r});
        if (p.carets() == static_cast<size_t>(n) && is_pattern_compatible(p, pattern_rigid)) f4.push_back(p);
      }
  REQUIRE(!f4.empty());
  for (const auto& a : f4)
    for (const auto& b : f4) CHECK(is_pattern_compatible(reduce(multiply(a, b)), pattern_rigid));
}
