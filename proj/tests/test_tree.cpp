#include <doctest.h>

#include <set>

#include "treecolor/error.hpp"
#include "treecolor/tree.hpp"

using namespace tc;

namespace {

BinaryTree T(std::initializer_list<const char*> a) { return BinaryTree::from_addresses(a); }
Address A(const char* s) { return Address::parse(s); }

std::vector<std::string> strs(const std::vector<Address>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.str());
  return out;
}

}  // namespace

TEST_CASE("address basics") {
  Address a = A("0110");
  CHECK(a.str() == "0110");
  CHECK(A("e").empty());
  CHECK(a.prefix(2).str() == "01");
  CHECK(a.suffix(1).str() == "110");
  CHECK(A("01").is_prefix_of(a));
  CHECK(A("e").is_proper_prefix_of(a));
  CHECK(A("1").incomparable(a));
  CHECK(infix_less(A("00"), A("0")));
  CHECK(infix_less(A("0"), A("01")));
  CHECK(infix_less(A("01"), A("e")));
  CHECK_THROWS_AS(A("012"), Error);
}

TEST_CASE("prefix relation is a trichotomy") {
  std::vector<Address> all{Address::root()};
  for (size_t i = 0; i < all.size() && all.size() < 31; ++i) {
    all.push_back(all[i].child(0));
    all.push_back(all[i].child(1));
  }
  for (const auto& u : all)
    for (const auto& v : all) {
      int n = (u == v) + u.is_proper_prefix_of(v) + v.is_proper_prefix_of(u) + u.incomparable(v);
      CHECK(n == 1);
    }
}

TEST_CASE("make_tree") {
  CHECK(BinaryTree::make({}).leaf_count() == 1);
  CHECK(strs(T({"e", "0"}).leaves()) == std::vector<std::string>{"00", "01", "1"});
  try {
    T({"0"});
    FAIL("expected NotPrefixClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrefixClosed);
  }
}

TEST_CASE("leaves") {
  CHECK(strs(T({"e", "1"}).leaves()) == std::vector<std::string>{"0", "10", "11"});
  CHECK(strs(BinaryTree().leaves()) == std::vector<std::string>{"e"});
}

TEST_CASE("text round trip") {
  for (const auto& t : all_trees(5)) {
    CHECK(BinaryTree::parse(t.str()) == t);
    CHECK(BinaryTree::parse(t.json()) == t);
  }
  CHECK(BinaryTree::parse(".").is_trivial());
  CHECK(BinaryTree::parse("((..).)") == T({"e", "0"}));
  CHECK(BinaryTree::parse(R"({"internal": ["e", "1"]})") == T({"e", "1"}));
  CHECK_THROWS_AS(BinaryTree::parse("((..)"), Error);
}

TEST_CASE("all_trees counts and order") {
  CHECK(all_trees(0).size() == 1);
  CHECK(all_trees(3).size() == 5);
  CHECK(all_trees(10).size() == 16796);
  for (int n = 0; n <= 9; ++n) {
    auto ts = all_trees(n);
    CHECK(ts.size() == catalan(n));
    for (size_t i = 1; i < ts.size(); ++i) CHECK(ts[i - 1].str() < ts[i].str());
  }
}

TEST_CASE("subtree_at and join") {
  CHECK(subtree_at(T({"e", "0", "1"}), A("0")) == T({"e"}));
  CHECK(subtree_at(T({"e", "0", "00"}), A("0")) == T({"e", "0"}));
  CHECK(subtree_at(T({"e", "1"}), A("0")).is_trivial());
  CHECK_THROWS_AS(subtree_at(T({"e"}), A("00")), Error);
  CHECK(join(BinaryTree(), BinaryTree()) == T({"e"}));
  CHECK(join(T({"e"}), BinaryTree()) == T({"e", "0"}));
  CHECK(join(BinaryTree(), T({"e"})) == T({"e", "1"}));
  for (const auto& t : all_trees(6)) {
    CHECK(join(subtree_at(t, A("0")), subtree_at(t, A("1"))) == t);
    // Leaves under any vertex form the shadow interval.
    auto ls = t.leaves();
    for (const auto& v : t.internal()) {
      auto sub = subtree_at(t, v).leaves();
      auto iv = shadow_of(t, v);
      REQUIRE(static_cast<int>(sub.size()) == iv.length());
      for (int k = 0; k < iv.length(); ++k) CHECK(v.concat(sub[k]) == ls[iv.lo - 1 + k]);
    }
  }
}

TEST_CASE("tree_set_ops") {
  auto r = tree_set_ops(T({"e", "0"}), T({"e", "1"}));
  CHECK(r.unite == T({"e", "0", "1"}));
  CHECK(r.intersect == T({"e"}));
  REQUIRE(r.difference.size() == 1);
  CHECK(r.difference.at(A("0")) == T({"e"}));
  CHECK(tree_set_ops(T({"e", "0"}), T({"e", "0"})).difference.empty());
  auto s = tree_set_ops(T({"e"}), BinaryTree());
  CHECK(s.intersect.is_trivial());
  REQUIRE(s.difference.size() == 1);
  CHECK(s.difference.at(A("e")) == T({"e"}));
}

TEST_CASE("shadow patterns") {
  using SI = ShadowInterval;
  CHECK(shadow_pattern(T({"e", "0"})) == std::vector<SI>{{1, 2}});
  // Oracle: leaf span of every non-top vertex, read off leaves() by prefix.
  auto span_oracle = [](const BinaryTree& t) {
    std::vector<SI> out;
    auto ls = t.leaves();
    for (const auto& v : t.internal()) {
      if (v.empty()) continue;
      int lo = 0, hi = 0;
      for (size_t i = 0; i < ls.size(); ++i)
        if (v.is_prefix_of(ls[i])) {
          if (!lo) lo = static_cast<int>(i) + 1;
          hi = static_cast<int>(i) + 1;
        }
      out.push_back({lo, hi});
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(shadow_pattern(T({"e", "0", "00"})) == std::vector<SI>{{1, 2}, {1, 3}});
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : all_trees(n)) CHECK(shadow_pattern(t) == span_oracle(t));
  // First tree of the six drawn beside the A_4 separating faces.
  CHECK(shadow_pattern(T({"e", "1", "10", "100", "101"})) == std::vector<SI>{{2, 3}, {2, 5}, {2, 6}, {4, 5}});
  CHECK_THROWS_AS(shadow_pattern(BinaryTree()), Error);
}

TEST_CASE("tree_from_shadow_pattern") {
  CHECK(tree_from_shadow_pattern({{1, 2}}, 3) == T({"e", "0"}));
  CHECK(tree_from_shadow_pattern({{1, 2}, {1, 3}}, 4) == T({"e", "0", "00"}));
  for (int n = 0; n <= 8; ++n)
    for (const auto& t : all_trees(n))
      CHECK(tree_from_shadow_pattern(n ? shadow_pattern(t) : std::vector<ShadowInterval>{}, n + 1) == t);
  try {
    tree_from_shadow_pattern({{1, 2}, {2, 3}}, 4);
    FAIL("expected NotLaminar");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLaminar);
  }
  try {
    tree_from_shadow_pattern({{1, 2}}, 5);
    FAIL("expected WrongCardinality");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongCardinality);
  }
}

TEST_CASE("rotation") {
  CHECK(rotate(T({"e", "0"}), {A("e"), false}) == T({"e", "1"}));
  CHECK(rotate(T({"e", "1"}), {A("e"), true}) == T({"e", "0"}));
  try {
    rotate(T({"e", "1"}), {A("e"), false});
    FAIL("expected PivotMissing");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PivotMissing);
  }
  CHECK_THROWS_AS(rotate(BinaryTree(), {A("e"), false}), Error);
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : all_trees(n))
      for (const auto& s : rotations_at(t)) {
        BinaryTree r = rotate(t, s);
        CHECK(rotate(r, s.inverted()) == t);
        // Exactly one shadow interval changes.
        auto a = shadow_pattern(t), b = shadow_pattern(r);
        std::vector<ShadowInterval> only;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only));
        CHECK(only.size() == 1);
      }
}

TEST_CASE("rotation on addresses is a bijection inverted by the opposite symbol") {
  std::vector<Address> all{Address::root()};
  for (size_t i = 0; all.size() < 127; ++i) {
    all.push_back(all[i].child(0));
    all.push_back(all[i].child(1));
  }
  for (const char* u : {"e", "0", "1", "01"})
    for (bool inv : {false, true}) {
      RotationSymbol s{A(u), inv};
      for (const auto& v : all) CHECK(rotate_address(rotate_address(v, s), s.inverted()) == v);
    }
}

TEST_CASE("dihedral action") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : all_trees(n)) {
      CHECK(dihedral_apply(t, 0, false) == t);
      int m = n + 2;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          CHECK(dihedral_apply(dihedral_apply(t, a, false), b, false) == dihedral_apply(t, (a + b) % m, false));
      CHECK(dihedral_apply(dihedral_apply(t, 0, true), 0, true) == t);
      CHECK((2 * m) % dihedral_orbit(t).size() == 0);
    }
  CHECK(dihedral_orbit(BinaryTree::parse("(.((..)(..)))")).size() == 2);
  CHECK(dihedral_orbit(right_vine(4)).size() == 6);
}

TEST_CASE("projection") {
  BinaryTree t = T({"e", "0", "00", "01", "010", "011", "1", "10", "11", "110"});
  CHECK(to_general(t).str() == t.str());
  CHECK(projection(t, {}).str() == t.str());
  std::vector<SubtreeSpec> subs{
      {A("0"), T({"e", "0"})},
      {A("01"), T({"e", "1"})},
      {A("1"), T({"e", "0", "1"})},
  };
  CHECK(projection(t, subs).str() == "((..((..)..))(..(..).))");
  CHECK(projection(T({"e", "0"}), {{A("e"), T({"e", "0"})}}).str() == "(...)");
  try {
    projection(t, {{A("0"), T({"e", "0"})}, {A("0"), T({"e", "1"})}});
    FAIL("expected NotEdgeDisjoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEdgeDisjoint);
  }
  try {
    projection(t, {{A("0"), T({"e"})}});
    FAIL("expected SubtreeTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SubtreeTooSmall);
  }
  CHECK(GeneralTree::parse("((..((..)..))(..(..).))").str() == "((..((..)..))(..(..).))");
}

TEST_CASE("vines") {
  CHECK(right_vine(3) == T({"e", "1", "11"}));
  CHECK(!is_vine(T({"e", "0", "1"})));
  CHECK(is_vine(T({"e", "0", "01"})));
  CHECK(vine_through(A("01")) == T({"e", "0", "01"}));
  CHECK(is_vine(left_vine(4)));
}
