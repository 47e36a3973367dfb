#include <doctest.h>

#include <fstream>
#include <random>

#include "treecolor/error.hpp"
#include "treecolor/paths.hpp"

using namespace tc;

namespace {

BinaryTree T(std::initializer_list<const char*> a) { return BinaryTree::from_addresses(a); }
Address A(const char* s) { return Address::parse(s); }
RotationSymbol S(const char* s) { return RotationSymbol::parse(s); }
ColorVector V(const char* s) { return parse_vector(s); }

const char* kTenRotations[] = {
    "e- 1+ 11+ 110+ 111+ 1100- 1110-",    "e- 1+ 11- 110- 1100+ 1101- 11000-",
    "e- 1+ 11- 110+ 1100+ 11000+ 110000-", "e- 1+ 11- 110+ 1100- 11000- 11001-",
    "e- 1+ 11- 110+ 1100+ 11001+ 110011-", "e- 1+ 11- 110- 1101- 11010+ 110101-",
    "e- 1+ 11+ 111+ 1110- 11100+ 111001-", "e- 1- 10- 11+ 110- 1100+ 11001-",
    "e+ 0+ 1+ 01- 10- 100+ 1001-",         "e- 0- 00+ 01- 001- 010+ 0101-",
    "e- 0+ 00+ 000+ 001+ 0001- 0011-",
};

const char* kNineRotations[] = {
    "e- 1- 10+ 100- 1000+ 10001-",  "e+ 0+ 01+ 010- 0100+ 01001-", "e+ 0- 00- 001- 0010+ 00101-",
    "e+ 0- 00+ 000+ 0001+ 00011-",  "e+ 0- 00+ 000- 0000- 0001-",  "e+ 0- 00+ 000+ 0000+ 00000-",
    "e+ 0- 00- 000+ 001- 0000-",    "e+ 0+ 00+ 01+ 000- 010-",     "e+ 0- 00- 01- 011+ 0110-",
    "e+ 0+ 01+ 011- 0111+ 01110-",
};

template <size_t N>
std::vector<SignedTree> parse_sequence(const char* const (&lines)[N]) {
  std::vector<SignedTree> out;
  for (const char* l : lines) out.push_back(SignedTree::parse(l));
  return out;
}

// The unique rotation taking a to b.
RotationSymbol step_between(const BinaryTree& a, const BinaryTree& b) {
  for (const auto& s : rotations_at(a))
    if (rotate(a, s) == b) return s;
  throw Error(ErrorKind::NoMatch, "trees not adjacent");
}

Word replay_word(const std::vector<SignedTree>& seq) {
  Word w;
  for (size_t i = 1; i < seq.size(); ++i) w.push_back(step_between(seq[i - 1].tree, seq[i].tree));
  return w;
}

std::vector<Address> addresses_upto(int len) {
  std::vector<Address> out{Address::root()};
  for (size_t i = 0; i < out.size(); ++i)
    if (out[i].len < len) {
      out.push_back(out[i].child(0));
      out.push_back(out[i].child(1));
    }
  return out;
}

// Brute force over all sign assignments of d: does one make every step of w valid?
bool brute_sign_consistent(const BinaryTree& d, const Word& w) {
  size_t k = d.carets();
  for (uint64_t m = 0; m < (uint64_t{1} << k); ++m) {
    SignedTree st{d, SignAssignment(k)};
    for (size_t i = 0; i < k; ++i) st.signs[i] = (m >> i) & 1 ? -1 : 1;
    bool ok = true;
    for (const auto& s : w) {
      if (!is_signed_rotation_valid(st, s)) {
        ok = false;
        break;
      }
      st = apply_signed_rotation(st, s);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("signed tree text") {
  SignedTree st = SignedTree::parse("e+ 0- 01+");
  CHECK(st.tree == T({"e", "0", "01"}));
  CHECK(st.sign(A("0")) == -1);
  CHECK(SignedTree::parse(st.str()) == st);
  CHECK_THROWS_AS(SignedTree::parse("e+ 0"), Error);
  CHECK_THROWS_AS(SignedTree::parse("e+ 00+"), Error);
}

TEST_CASE("signed rotations") {
  CHECK(is_signed_rotation_valid(SignedTree::parse("e+ 0+"), S("e")));
  CHECK(!is_signed_rotation_valid(SignedTree::parse("e+ 0-"), S("e")));
  CHECK(apply_signed_rotation(SignedTree::parse("e+ 0+"), S("e")) == SignedTree::parse("e- 1-"));
  CHECK_THROWS_AS(is_signed_rotation_valid(SignedTree::parse("e+ 0+"), S("1")), Error);
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : all_trees(n))
      for (const auto& c : normalized_colorings(t)) {
        SignedTree st{t, signs_from_vector(t, c)};
        for (const auto& s : rotations_at(t)) {
          BinaryTree r = rotate(t, s);
          CHECK(is_signed_rotation_valid(st, s) == is_valid(r, c));
          SignedTree moved = apply_signed_rotation(st, s);
          CHECK(apply_signed_rotation(moved, s.inverted()) == st);
          if (is_valid(r, c)) CHECK(moved.signs == signs_from_vector(r, c));
        }
      }
}

TEST_CASE("ten rotation sequence replays") {
  auto seq = parse_sequence(kTenRotations);
  Word w = replay_word(seq);
  REQUIRE(w.size() == 10);
  SignedTree st = seq[0];
  for (size_t i = 0; i < w.size(); ++i) {
    CHECK(is_signed_rotation_valid(st, w[i]));
    st = apply_signed_rotation(st, w[i]);
    CHECK(st == seq[i + 1]);
  }
  for (const auto& x : seq) CHECK(is_valid(x.tree, V("11322133")));
  CHECK(is_balanced(sign_structure(w)).balanced);
}

TEST_CASE("nine rotation sequence has connected sign structure") {
  auto seq = parse_sequence(kNineRotations);
  Word w = replay_word(seq);
  REQUIRE(w.size() == 9);
  SignedTree st = seq[0];
  for (size_t i = 0; i < w.size(); ++i) {
    CHECK(is_signed_rotation_valid(st, w[i]));
    st = apply_signed_rotation(st, w[i]);
    CHECK(st == seq[i + 1]);
  }
  for (const auto& x : seq) CHECK(is_valid(x.tree, V("1332111")));
  SignStructure ss = sign_structure(w);
  Balance b = is_balanced(ss);
  CHECK(b.balanced);
  CHECK(components_over(ss, seq[0].tree) == 1);
  TreePair p = reduce({seq.front().tree, seq.back().tree});
  CHECK(p.carets() == seq[0].tree.carets());
  CHECK(compatible_colorings(w, seq[0].tree).size() == 1);
  for (bool ok : subpath_check(w)) CHECK(ok);
}

TEST_CASE("sign structures of the named words") {
  SignStructure a = sign_structure(parse_word("0 e 1"));
  REQUIRE(a.edges.size() == 3);
  CHECK(a.edges[0].a == A("0"));
  CHECK(a.edges[0].b == A("00"));
  CHECK(a.edges[0].sign == 1);
  CHECK(a.edges[1].a == A("e"));
  CHECK(a.edges[1].b == A("00"));
  CHECK(a.edges[1].sign == -1);
  CHECK(a.edges[2].a == A("e"));
  CHECK(a.edges[2].b == A("0"));
  CHECK(a.edges[2].sign == 1);
  CHECK(a.support == T({"e", "0", "00"}));
  CHECK(!is_balanced(a).balanced);

  Balance b = is_balanced(sign_structure(parse_word("0 e")));
  CHECK(b.balanced);
  CHECK(b.components == 1);
  CHECK(!is_balanced(sign_structure(parse_word("e e ~1"))).balanced);
  SignStructure par = sign_structure(parse_word("e e 1 ~11"));
  CHECK(is_balanced(par).balanced);
  CHECK(is_balanced(sign_structure(parse_word("e 1 1 1 ~e"))).balanced == false);
  CHECK(is_balanced(sign_structure(parse_word("~0 e ~0 e ~0 e"))).balanced);
  CHECK(sign_structure({}).edges.empty());
  CHECK(a.dot().find("sign=\"-\"") != std::string::npos);
}

TEST_CASE("compatible colorings") {
  auto cs = compatible_colorings(parse_word("e"), T({"e", "0"}));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0][1] == 1);
  CHECK(cs[0][0] == cs[0][2]);
  CHECK(compatible_colorings(parse_word("0 e 1"), T({"e", "0", "00"})).empty());
  CHECK_THROWS_AS(compatible_colorings(parse_word("1"), T({"e", "0"})), Error);
}

TEST_CASE("balance iff brute-force sign consistency, and the 2^(p-1) count") {
  // Walks of up to four symbols from every tree with at most four carets.
  std::mt19937 rng(3);
  for (int n = 1; n <= 4; ++n)
    for (const auto& d : all_trees(n)) {
      std::function<void(const BinaryTree&, Word&)> walk = [&](const BinaryTree& cur, Word& w) {
        if (!w.empty()) {
          SignStructure ss = sign_structure(w);
          bool bal = is_balanced(ss).balanced;
          CHECK(bal == brute_sign_consistent(d, w));
          auto cs = compatible_colorings(w, d);
          CHECK(cs == compatible_colorings_brute(w, d));
          if (bal) CHECK(cs.size() == (size_t{1} << (components_over(ss, d) - 1)));
          for (const auto& e : ss.edges) CHECK((d.is_internal(e.a) && d.is_internal(e.b)));
        }
        if (w.size() == 4) return;
        for (const auto& s : rotations_at(cur)) {
          w.push_back(s);
          walk(rotate(cur, s), w);
          w.pop_back();
        }
      };
      Word w;
      walk(d, w);
    }
}

TEST_CASE("sign-consistent path search") {
  auto w = find_sign_consistent_path(T({"e", "0"}), T({"e", "1"}));
  REQUIRE(w.has_value());
  CHECK(word_str(*w) == "e");
  CHECK(find_sign_consistent_path(T({"e", "0"}), T({"e", "0"}))->empty());
  for (int n = 1; n <= 4; ++n) {
    auto ts = all_trees(n);
    for (const auto& d : ts)
      for (const auto& r : ts) {
        auto p = find_sign_consistent_path(d, r);
        REQUIRE(p.has_value());
        CHECK(path_end(d, *p) == r);
        CHECK(is_balanced(sign_structure(*p)).balanced);
      }
  }
  // The ParalleExmpl pair has a flexible coloring too.
  CHECK(find_sign_consistent_path(T({"e", "0", "00", "001"}), T({"e", "1", "11", "110"})).has_value());
  auto rigid = color_graph_path(V("22133"), T({"e", "0", "00", "001"}), T({"e", "1", "11", "110"}));
  CHECK(!rigid.has_value());
}

TEST_CASE("pentagon moves") {
  CHECK(word_str(pentagon_move(parse_word("0 e 1"), 0)) == "e e");
  CHECK(word_str(pentagon_move(parse_word("e e"), 0)) == "0 e 1");
  CHECK(word_str(pentagon_move(parse_word("~1 ~e ~0"), 0)) == "~e ~e");
  CHECK(word_str(pentagon_move(parse_word("0 01 01"), 1)) == "0 010 01 011");
  CHECK_THROWS_AS(pentagon_move(parse_word("e 1"), 0), Error);
  for (const auto& u : addresses_upto(3))
    for (bool inv : {false, true}) {
      Word w{{u, inv}, {u, inv}};
      CHECK(word_to_pair(pentagon_move(w, 0)) == word_to_pair(w));
    }
}

TEST_CASE("square moves") {
  Word w = parse_word("0 e 1 111 ~1");
  Word v = square_move(w, 2);
  CHECK(word_str(v) == "0 e 11");
  CHECK(word_to_pair(v) == word_to_pair(w));
  CHECK(!is_balanced(sign_structure(w)).balanced);
  CHECK(is_balanced(sign_structure(v)).balanced);
  CHECK_THROWS_AS(square_move(parse_word("e 1"), 0), Error);
  CHECK_THROWS_AS(square_move(parse_word("e"), 0), Error);

  // Random edge paths: every applicable move keeps the element, and balanced stays balanced.
  std::mt19937 rng(5);
  int applied = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    BinaryTree cur = T({"e", "0", "1", "00", "01", "10", "11"});
    Word w0;
    for (int k = 0; k < 6; ++k) {
      auto rs = rotations_at(cur);
      w0.push_back(rs[rng() % rs.size()]);
      cur = rotate(cur, w0.back());
    }
    bool bal = is_balanced(sign_structure(w0)).balanced;
    for (size_t i = 0; i < w0.size(); ++i)
      for (auto shape : {SquareShape::TwoTwo, SquareShape::ThreeOne}) {
        Word w1;
        try {
          w1 = square_move(w0, i, shape);
        } catch (const Error&) {
          continue;
        }
        ++applied;
        CHECK(word_to_pair(w1) == word_to_pair(w0));
        if (bal) CHECK(is_balanced(sign_structure(w1)).balanced);
      }
  }
  CHECK(applied > 1000);
}

TEST_CASE("subwords of balanced words are balanced") {
  auto v = subpath_check(parse_word("0 e"));
  CHECK(v == std::vector<bool>{true, true});
  CHECK(subpath_check(parse_word("0 e 1")) == std::vector<bool>{true, true, false});
  std::mt19937 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    BinaryTree cur = T({"e", "0", "1", "00", "01"});
    Word w;
    for (int k = 0; k < 6; ++k) {
      auto rs = rotations_at(cur);
      w.push_back(rs[rng() % rs.size()]);
      cur = rotate(cur, w.back());
    }
    if (is_balanced(sign_structure(w)).balanced) CHECK(all_subwords_balanced(w));
  }
}
