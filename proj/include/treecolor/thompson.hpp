#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treecolor/tree.hpp"

namespace tc {

// An element of F as a pair of trees with equal leaf counts.
struct TreePair {
  BinaryTree d;
  BinaryTree r;

  static TreePair make(BinaryTree d, BinaryTree r);  // throws LengthMismatch
  static TreePair identity() { return {}; }
  // "(D, R)" or {"d": ..., "r": ...}.
  static TreePair parse(std::string_view text);
  size_t carets() const { return d.carets(); }
  std::string str() const { return "(" + d.str() + ", " + r.str() + ")"; }
  std::string json() const;
  friend bool operator==(const TreePair&, const TreePair&) = default;
  friend bool operator<(const TreePair& a, const TreePair& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.r < b.r;
  }
};

using Word = std::vector<RotationSymbol>;

Word parse_word(std::string_view text);
std::string word_str(const Word& w);
Word invert_word(const Word& w);

TreePair reduce(const TreePair& p);
// Unreduced product over the common middle tree B ∪ C.
TreePair multiply(const TreePair& a, const TreePair& b);
TreePair invert(const TreePair& p);
// Rewrites p with middle tree `target`, which must contain p.r.
TreePair expand_to(const TreePair& p, const BinaryTree& target);

Address apply_element(const TreePair& p, const Address& v);

TreePair rotation_as_pair(const RotationSymbol& s);
TreePair word_to_pair(const Word& w);
// Visited trees; throws PivotMissing carrying the index of the failing symbol.
std::vector<BinaryTree> path_evaluate(const BinaryTree& t, const Word& w);
BinaryTree path_end(const BinaryTree& t, const Word& w);

enum class Increase { NonIncreasing, MinimallyIncreasing, Increasing };
const char* increase_name(Increase k);
Increase classify_multiplication(const TreePair& p, const RotationSymbol& s);

bool is_right_vine(const BinaryTree& t);
bool is_positive(const TreePair& p);
bool is_prime_positive(const TreePair& p);

bool parity_condition(const TreePair& p);

TreePair deferment(const TreePair& p, const BinaryTree& host, const Address& leaf);

// Symbols s_1..s_k with the product of rotation_as_pair(e) and the s_i equal to
// the target, each multiplication minimally increasing.  None unless the target
// is prime positive.
std::optional<Word> minimally_increasing_chain(const TreePair& target);

TreePair pair_dihedral(const TreePair& p, int k, bool reflect);

}  // namespace tc
