#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treecolor/coloring.hpp"
#include "treecolor/thompson.hpp"

namespace tc {

struct SignedTree {
  BinaryTree tree;
  SignAssignment signs;  // aligned with tree.internal()

  // Tokens "e+ 0- 01+": every internal vertex with its sign.
  static SignedTree parse(std::string_view text);
  std::string str() const;
  int8_t sign(const Address& v) const;
  friend bool operator==(const SignedTree&, const SignedTree&) = default;
};

bool is_signed_rotation_valid(const SignedTree& st, const RotationSymbol& s);
// Defined whether or not the rotation is valid: pivot signs are negated.
SignedTree apply_signed_rotation(const SignedTree& st, const RotationSymbol& s);

struct SignedEdge {
  Address a;
  Address b;
  int8_t sign;
};

struct SignStructure {
  std::vector<SignedEdge> edges;  // in word order
  BinaryTree support;

  std::string str() const;
  std::string dot() const;
};

SignStructure sign_structure(const Word& w);

struct Balance {
  bool balanced = false;
  int components = 0;  // over the internal vertices of the support
};
Balance is_balanced(const SignStructure& ss);

// Balance of a signed multigraph on vertices 0..n-1; edges are (a, b, sign).
struct IndexedSignedEdge {
  int a;
  int b;
  int8_t sign;
};
bool is_balanced(int n, const std::vector<IndexedSignedEdge>& edges);
// Components of the structure's graph over the internal vertices of t.
int components_over(const SignStructure& ss, const BinaryTree& t);

// Normalized vectors for which w is a valid signed path from d, derived from
// the sign structure.  Empty if unbalanced.
std::vector<ColorVector> compatible_colorings(const Word& w, const BinaryTree& d);
// Reference: tests every normalized coloring of d along the path.
std::vector<ColorVector> compatible_colorings_brute(const Word& w, const BinaryTree& d);

std::optional<Word> find_sign_consistent_path(const BinaryTree& d, const BinaryTree& r);
// Breadth-first path from d to r inside the color graph of c.
std::optional<Word> color_graph_path(const ColorVector& c, const BinaryTree& d, const BinaryTree& r);

enum class SquareShape { Auto, TwoTwo, ThreeOne };
Word square_move(const Word& w, size_t i, SquareShape shape = SquareShape::Auto);
Word pentagon_move(const Word& w, size_t i);

// Balance of each prefix w[0..k], k = 0..|w|-1.
std::vector<bool> subpath_check(const Word& w);
bool all_subwords_balanced(const Word& w);

}  // namespace tc
