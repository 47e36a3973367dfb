#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treecolor/address.hpp"

namespace tc {

// A finite rooted binary tree, realized as the set of its caret centers in the
// infinite binary tree.  The empty set is the one-leaf tree.
class BinaryTree {
 public:
  BinaryTree() = default;

  // Throws NotPrefixClosed unless the set is closed under proper prefixes.
  static BinaryTree make(std::vector<Address> internal);
  static BinaryTree trivial() { return {}; }
  // Accepts the parenthesized form or a JSON object {"internal": [...]}.
  static BinaryTree parse(std::string_view text);
  static BinaryTree from_addresses(std::initializer_list<const char*> addrs);

  const std::vector<Address>& internal() const { return internal_; }
  size_t carets() const { return internal_.size(); }
  size_t leaf_count() const { return internal_.size() + 1; }
  bool is_trivial() const { return internal_.empty(); }

  bool is_internal(const Address& v) const;
  bool is_leaf(const Address& v) const;
  bool is_vertex(const Address& v) const { return is_internal(v) || is_leaf(v); }
  // Position of v in internal(), or -1.
  int internal_index(const Address& v) const;

  // Leaves in left-right order.
  std::vector<Address> leaves() const;
  // Internal vertices in infix order.
  std::vector<Address> internal_infix() const;
  // Internal vertices whose children are both leaves.
  std::vector<Address> exposed_carets() const;
  std::vector<int> leaf_depths() const;

  std::string str() const;
  std::string json() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  friend bool operator<(const BinaryTree& a, const BinaryTree& b) { return a.internal_ < b.internal_; }

 private:
  explicit BinaryTree(std::vector<Address> sorted) : internal_(std::move(sorted)) {}
  std::vector<Address> internal_;  // sorted breadth-first
};

// 1-based leaf positions covered by an internal vertex.
struct ShadowInterval {
  int lo = 0;
  int hi = 0;
  int length() const { return hi - lo + 1; }
  bool contains(const ShadowInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool disjoint(const ShadowInterval& o) const { return hi < o.lo || o.hi < lo; }
  std::string str() const;
  friend auto operator<=>(const ShadowInterval&, const ShadowInterval&) = default;
};

// Rooted ordered tree with internal vertices of any out-degree >= 2.
struct GeneralTree {
  std::vector<GeneralTree> children;
  bool is_leaf() const { return children.empty(); }
  std::string str() const;
  friend bool operator==(const GeneralTree&, const GeneralTree&) = default;
  static GeneralTree parse(std::string_view text);
};

// A rotation symbol: the rotation at u, or its inverse.
struct RotationSymbol {
  Address u;
  bool inverse = false;

  RotationSymbol inverted() const { return {u, !inverse}; }
  // The two vertices that must be internal for the rotation to apply.
  std::pair<Address, Address> pivots() const { return {u, u.child(inverse ? 1 : 0)}; }
  // Pivot vertices after the rotation has been applied.
  std::pair<Address, Address> pivots_after() const { return {u, u.child(inverse ? 0 : 1)}; }
  std::string str() const { return (inverse ? "~" : "") + u.str(); }
  static RotationSymbol parse(std::string_view tok);
  friend bool operator==(const RotationSymbol&, const RotationSymbol&) = default;
  friend bool operator<(const RotationSymbol& a, const RotationSymbol& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.inverse < b.inverse;
  }
};

// Action of a rotation on the vertices of the infinite tree.
Address rotate_address(const Address& v, const RotationSymbol& s);

BinaryTree join(const BinaryTree& left, const BinaryTree& right);
// Tree with internal set {w : vw internal}.  Throws NotAVertex.
BinaryTree subtree_at(const BinaryTree& t, const Address& v);
// Attaches s at leaf v of t.  Throws NotALeaf.
BinaryTree graft(const BinaryTree& t, const Address& v, const BinaryTree& s);
// Attaches s at v without requiring v to be a leaf (caret sets are unioned).
BinaryTree attach_union(const BinaryTree& t, const Address& v, const BinaryTree& s);

std::vector<BinaryTree> all_trees(int carets);

struct TreeSetOps {
  BinaryTree unite;
  BinaryTree intersect;
  // Leaf v of A∩B that is internal in A  ->  component of A−B hanging there.
  std::map<Address, BinaryTree> difference;
};
TreeSetOps tree_set_ops(const BinaryTree& a, const BinaryTree& b);
bool is_subtree(const BinaryTree& small, const BinaryTree& big);

ShadowInterval shadow_of(const BinaryTree& t, const Address& v);
// Interval of every internal vertex, aligned with t.internal().
std::vector<ShadowInterval> shadow_intervals(const BinaryTree& t);
// One interval per internal vertex other than the top one, sorted.
std::vector<ShadowInterval> shadow_pattern(const BinaryTree& t);
BinaryTree tree_from_shadow_pattern(const std::vector<ShadowInterval>& p, int leaves);

// Throws PivotMissing.
BinaryTree rotate(const BinaryTree& t, const RotationSymbol& s);
bool can_rotate(const BinaryTree& t, const RotationSymbol& s);
// All symbols applicable at t, in canonical order.
std::vector<RotationSymbol> rotations_at(const BinaryTree& t);

// Root shift by k positions of the dual polygon, optionally after reflection.
BinaryTree dihedral_apply(const BinaryTree& t, int k, bool reflect);
std::vector<BinaryTree> dihedral_orbit(const BinaryTree& t);

struct SubtreeSpec {
  Address root;
  BinaryTree shape;  // re-addressed so that the root caret is at e
};
GeneralTree to_general(const BinaryTree& t);
GeneralTree projection(const BinaryTree& t, const std::vector<SubtreeSpec>& subs);

BinaryTree right_vine(int carets);
BinaryTree left_vine(int carets);
// The vine whose internal vertices are the prefixes of v, v included.
BinaryTree vine_through(const Address& v);
bool is_vine(const BinaryTree& t);

// Catalan number, exact for n <= 35.
unsigned long long catalan(int n);

}  // namespace tc
