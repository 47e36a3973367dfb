#include "treecolor/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <json.hpp>
#include <set>
#include <unordered_map>

#include "treecolor/error.hpp"

namespace tc {

namespace {

const Address kZero{0, 1};
const Address kOne{1, 1};

void skip_ws(std::string_view s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

void parse_paren(std::string_view s, size_t& i, const Address& at, std::vector<Address>& out) {
  skip_ws(s, i);
  if (i >= s.size()) throw Error(ErrorKind::Parse, "unexpected end of tree text");
  if (s[i] == '.') {
    ++i;
    return;
  }
  if (s[i] != '(') throw Error(ErrorKind::Parse, "unexpected '" + std::string(1, s[i]) + "' in tree text");
  ++i;
  out.push_back(at);
  parse_paren(s, i, at.child(0), out);
  parse_paren(s, i, at.child(1), out);
  skip_ws(s, i);
  if (i >= s.size() || s[i] != ')') throw Error(ErrorKind::Parse, "expected ')' in tree text");
  ++i;
}

}  // namespace

BinaryTree BinaryTree::make(std::vector<Address> internal) {
  std::sort(internal.begin(), internal.end());
  internal.erase(std::unique(internal.begin(), internal.end()), internal.end());
  for (const auto& a : internal) {
    if (a.empty()) continue;
    if (!std::binary_search(internal.begin(), internal.end(), a.parent()))
      throw Error(ErrorKind::NotPrefixClosed, "missing parent of " + a.str());
  }
  return BinaryTree(std::move(internal));
}

BinaryTree BinaryTree::from_addresses(std::initializer_list<const char*> addrs) {
  std::vector<Address> v;
  for (const char* a : addrs) v.push_back(Address::parse(a));
  return make(std::move(v));
}

BinaryTree BinaryTree::parse(std::string_view text) {
  size_t i = 0;
  skip_ws(text, i);
  if (i < text.size() && (text[i] == '{' || text[i] == '[')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
    const nlohmann::json& arr = j.is_object() ? j.value("internal", nlohmann::json::array()) : j;
    if (!arr.is_array()) throw Error(ErrorKind::Parse, "\"internal\" must be an array");
    std::vector<Address> v;
    for (const auto& x : arr) {
      if (!x.is_string()) throw Error(ErrorKind::Parse, "addresses must be strings");
      v.push_back(Address::parse(x.get<std::string>()));
    }
    return make(std::move(v));
  }
  std::vector<Address> v;
  parse_paren(text, i, Address::root(), v);
  skip_ws(text, i);
  if (i != text.size()) throw Error(ErrorKind::Parse, "trailing characters in tree text");
  return make(std::move(v));
}

bool BinaryTree::is_internal(const Address& v) const {
  return std::binary_search(internal_.begin(), internal_.end(), v);
}

bool BinaryTree::is_leaf(const Address& v) const {
  if (is_internal(v)) return false;
  if (v.empty()) return internal_.empty();
  return is_internal(v.parent());
}

int BinaryTree::internal_index(const Address& v) const {
  auto it = std::lower_bound(internal_.begin(), internal_.end(), v);
  if (it == internal_.end() || *it != v) return -1;
  return static_cast<int>(it - internal_.begin());
}

std::vector<Address> BinaryTree::leaves() const {
  std::vector<Address> out;
  out.reserve(leaf_count());
  std::function<void(const Address&)> walk = [&](const Address& v) {
    if (!is_internal(v)) {
      out.push_back(v);
      return;
    }
    walk(v.child(0));
    walk(v.child(1));
  };
  walk(Address::root());
  return out;
}

std::vector<Address> BinaryTree::internal_infix() const {
  std::vector<Address> out = internal_;
  std::sort(out.begin(), out.end(), infix_less);
  return out;
}

std::vector<Address> BinaryTree::exposed_carets() const {
  std::vector<Address> out;
  for (const auto& v : internal_)
    if (!is_internal(v.child(0)) && !is_internal(v.child(1))) out.push_back(v);
  return out;
}

std::vector<int> BinaryTree::leaf_depths() const {
  std::vector<int> out;
  for (const auto& l : leaves()) out.push_back(l.len);
  return out;
}

std::string BinaryTree::str() const {
  std::string out;
  std::function<void(const Address&)> walk = [&](const Address& v) {
    if (!is_internal(v)) {
      out += '.';
      return;
    }
    out += '(';
    walk(v.child(0));
    walk(v.child(1));
    out += ')';
  };
  walk(Address::root());
  return out;
}

std::string BinaryTree::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : internal_) arr.push_back(a.str());
  return nlohmann::json{{"internal", arr}}.dump();
}

std::string ShadowInterval::str() const { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

std::string GeneralTree::str() const {
  if (children.empty()) return ".";
  std::string out = "(";
  for (const auto& c : children) out += c.str();
  return out + ")";
}

GeneralTree GeneralTree::parse(std::string_view text) {
  size_t i = 0;
  std::function<GeneralTree()> rec = [&]() -> GeneralTree {
    skip_ws(text, i);
    if (i >= text.size()) throw Error(ErrorKind::Parse, "unexpected end of tree text");
    if (text[i] == '.') {
      ++i;
      return {};
    }
    if (text[i] != '(') throw Error(ErrorKind::Parse, "bad general tree text");
    ++i;
    GeneralTree g;
    for (;;) {
      skip_ws(text, i);
      if (i >= text.size()) throw Error(ErrorKind::Parse, "unbalanced general tree text");
      if (text[i] == ')') break;
      g.children.push_back(rec());
    }
    ++i;
    if (g.children.size() < 2) throw Error(ErrorKind::Parse, "internal vertex with fewer than two children");
    return g;
  };
  GeneralTree g = rec();
  skip_ws(text, i);
  if (i != text.size()) throw Error(ErrorKind::Parse, "trailing characters in tree text");
  return g;
}

RotationSymbol RotationSymbol::parse(std::string_view tok) {
  RotationSymbol s;
  if (!tok.empty() && tok[0] == '~') {
    s.inverse = true;
    tok.remove_prefix(1);
  }
  s.u = Address::parse(tok);
  return s;
}

Address rotate_address(const Address& v, const RotationSymbol& s) {
  const Address& u = s.u;
  if (!u.is_prefix_of(v)) return v;
  Address w = v.suffix(u.len);
  if (!s.inverse) {
    if (w.empty()) return u.child(1);
    if (w.bit(0) == 1) return u.child(1).concat(w);  // u1w -> u11w
    if (w.len == 1) return u;                        // u0 -> u
    Address rest = w.suffix(2);
    if (w.bit(1) == 0) return u.child(0).concat(rest);       // u00w -> u0w
    return u.child(1).child(0).concat(rest);                 // u01w -> u10w
  }
  if (w.empty()) return u.child(0);
  if (w.bit(0) == 0) return u.child(0).concat(w);  // u0w -> u00w
  if (w.len == 1) return u;                        // u1 -> u
  Address rest = w.suffix(2);
  if (w.bit(1) == 0) return u.child(0).child(1).concat(rest);  // u10w -> u01w
  return u.child(1).concat(rest);                              // u11w -> u1w
}

BinaryTree join(const BinaryTree& left, const BinaryTree& right) {
  std::vector<Address> v{Address::root()};
  for (const auto& a : left.internal()) v.push_back(kZero.concat(a));
  for (const auto& a : right.internal()) v.push_back(kOne.concat(a));
  return BinaryTree::make(std::move(v));
}

BinaryTree subtree_at(const BinaryTree& t, const Address& v) {
  if (!t.is_vertex(v)) throw Error(ErrorKind::NotAVertex, v.str() + " is not a vertex of " + t.str());
  std::vector<Address> out;
  for (const auto& a : t.internal())
    if (v.is_prefix_of(a)) out.push_back(a.suffix(v.len));
  return BinaryTree::make(std::move(out));
}

BinaryTree attach_union(const BinaryTree& t, const Address& v, const BinaryTree& s) {
  std::vector<Address> out = t.internal();
  for (const auto& a : s.internal()) out.push_back(v.concat(a));
  return BinaryTree::make(std::move(out));
}

BinaryTree graft(const BinaryTree& t, const Address& v, const BinaryTree& s) {
  if (!t.is_leaf(v)) throw Error(ErrorKind::NotALeaf, v.str() + " is not a leaf of " + t.str());
  return attach_union(t, v, s);
}

std::vector<BinaryTree> all_trees(int carets) {
  if (carets < 0) return {};
  std::vector<std::vector<BinaryTree>> by(carets + 1);
  by[0] = {BinaryTree::trivial()};
  for (int n = 1; n <= carets; ++n)
    for (int i = 0; i < n; ++i)
      for (const auto& l : by[i])
        for (const auto& r : by[n - 1 - i]) by[n].push_back(join(l, r));
  std::vector<std::pair<std::string, BinaryTree>> keyed;
  keyed.reserve(by[carets].size());
  for (auto& t : by[carets]) keyed.emplace_back(t.str(), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BinaryTree> out;
  out.reserve(keyed.size());
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

TreeSetOps tree_set_ops(const BinaryTree& a, const BinaryTree& b) {
  std::vector<Address> u, x;
  std::set_union(a.internal().begin(), a.internal().end(), b.internal().begin(), b.internal().end(),
                 std::back_inserter(u));
  std::set_intersection(a.internal().begin(), a.internal().end(), b.internal().begin(), b.internal().end(),
                        std::back_inserter(x));
  TreeSetOps out{BinaryTree::make(std::move(u)), BinaryTree::make(std::move(x)), {}};
  for (const auto& l : out.intersect.leaves())
    if (a.is_internal(l)) out.difference.emplace(l, subtree_at(a, l));
  return out;
}

bool is_subtree(const BinaryTree& small, const BinaryTree& big) {
  return std::includes(big.internal().begin(), big.internal().end(), small.internal().begin(),
                       small.internal().end());
}

std::vector<ShadowInterval> shadow_intervals(const BinaryTree& t) {
  std::vector<ShadowInterval> out(t.carets());
  int next = 1;
  std::function<ShadowInterval(const Address&)> walk = [&](const Address& v) -> ShadowInterval {
    int idx = t.internal_index(v);
    if (idx < 0) {
      int k = next++;
      return {k, k};
    }
    ShadowInterval l = walk(v.child(0));
    ShadowInterval r = walk(v.child(1));
    out[idx] = {l.lo, r.hi};
    return out[idx];
  };
  walk(Address::root());
  return out;
}

ShadowInterval shadow_of(const BinaryTree& t, const Address& v) {
  if (!t.is_vertex(v)) throw Error(ErrorKind::NotAVertex, v.str() + " is not a vertex of " + t.str());
  auto ls = t.leaves();
  ShadowInterval s{0, 0};
  for (size_t i = 0; i < ls.size(); ++i) {
    if (!v.is_prefix_of(ls[i])) continue;
    if (s.lo == 0) s.lo = static_cast<int>(i) + 1;
    s.hi = static_cast<int>(i) + 1;
  }
  return s;
}

std::vector<ShadowInterval> shadow_pattern(const BinaryTree& t) {
  if (t.is_trivial()) throw Error(ErrorKind::TooSmall, "shadow pattern needs at least two leaves");
  auto all = shadow_intervals(t);
  std::vector<ShadowInterval> out(all.begin() + 1, all.end());  // internal()[0] is e
  std::sort(out.begin(), out.end());
  return out;
}

BinaryTree tree_from_shadow_pattern(const std::vector<ShadowInterval>& p, int leaves) {
  if (leaves < 1 || p.size() + 2 != static_cast<size_t>(leaves)) {
    if (!(leaves == 1 && p.empty()))
      throw Error(ErrorKind::WrongCardinality,
                  "expected " + std::to_string(leaves - 2) + " intervals, got " + std::to_string(p.size()));
  }
  if (leaves == 1) return BinaryTree::trivial();
  std::vector<ShadowInterval> s = p;
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i) {
    const auto& a = s[i];
    if (a.lo < 1 || a.hi > leaves || a.lo >= a.hi || (a.lo == 1 && a.hi == leaves))
      throw Error(ErrorKind::NotLaminar, "interval " + a.str() + " is not a proper interval");
    for (size_t j = 0; j < i; ++j) {
      const auto& b = s[j];
      if (a == b || !(a.contains(b) || b.contains(a) || a.disjoint(b)))
        throw Error(ErrorKind::NotLaminar, a.str() + " crosses " + b.str());
    }
  }
  std::set<ShadowInterval> fam(s.begin(), s.end());
  fam.insert({1, leaves});
  std::vector<Address> out;
  std::function<void(const Address&, ShadowInterval)> build = [&](const Address& v, ShadowInterval iv) {
    if (iv.lo == iv.hi) return;
    out.push_back(v);
    // Left child: the largest member starting at lo that is strictly inside iv.
    int m = iv.lo;
    for (const auto& c : fam)
      if (c.lo == iv.lo && c.hi < iv.hi) m = std::max(m, c.hi);
    ShadowInterval left{iv.lo, m}, right{m + 1, iv.hi};
    if (right.lo != right.hi && !fam.count(right))
      throw Error(ErrorKind::NotLaminar, "intervals do not form a binary tree");
    build(v.child(0), left);
    build(v.child(1), right);
  };
  build(Address::root(), {1, leaves});
  return BinaryTree::make(std::move(out));
}

bool can_rotate(const BinaryTree& t, const RotationSymbol& s) {
  auto [x, y] = s.pivots();
  return t.is_internal(x) && t.is_internal(y);
}

BinaryTree rotate(const BinaryTree& t, const RotationSymbol& s) {
  if (!can_rotate(t, s)) throw Error(ErrorKind::PivotMissing, "rotation " + s.str() + " at " + t.str());
  std::vector<Address> out;
  out.reserve(t.carets());
  for (const auto& a : t.internal()) out.push_back(rotate_address(a, s));
  return BinaryTree::make(std::move(out));
}

std::vector<RotationSymbol> rotations_at(const BinaryTree& t) {
  std::vector<RotationSymbol> out;
  for (const auto& u : t.internal()) {
    if (t.is_internal(u.child(0))) out.push_back({u, false});
    if (t.is_internal(u.child(1))) out.push_back({u, true});
  }
  return out;
}

BinaryTree dihedral_apply(const BinaryTree& t, int k, bool reflect) {
  int n = static_cast<int>(t.leaf_count());
  if (n <= 2) return t;
  int m = n + 1;  // polygon vertices 0..n; the root is side (n, 0)
  k = ((k % m) + m) % m;
  std::vector<ShadowInterval> out;
  for (const auto& iv : shadow_pattern(t)) {
    int a = iv.lo - 1, b = iv.hi;
    if (reflect) {
      a = n - a;
      b = n - b;
    }
    a = (a + k) % m;
    b = (b + k) % m;
    if (a > b) std::swap(a, b);
    out.push_back({a + 1, b});
  }
  return tree_from_shadow_pattern(out, n);
}

std::vector<BinaryTree> dihedral_orbit(const BinaryTree& t) {
  std::set<BinaryTree> seen;
  int m = static_cast<int>(t.leaf_count()) + 1;
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < m; ++k) seen.insert(dihedral_apply(t, k, r == 1));
  return {seen.begin(), seen.end()};
}

GeneralTree to_general(const BinaryTree& t) { return projection(t, {}); }

GeneralTree projection(const BinaryTree& t, const std::vector<SubtreeSpec>& subs) {
  std::unordered_map<Address, int> group;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].shape.carets() < 2)
      throw Error(ErrorKind::SubtreeTooSmall, "projected subtrees need at least three leaves");
    for (const auto& a : subs[i].shape.internal()) {
      Address v = subs[i].root.concat(a);
      if (!t.is_internal(v)) throw Error(ErrorKind::NotAVertex, v.str() + " is not a caret of " + t.str());
      if (!group.emplace(v, static_cast<int>(i)).second)
        throw Error(ErrorKind::NotEdgeDisjoint, "subtrees share the caret at " + v.str());
    }
  }
  auto gid = [&](const Address& v) {
    auto it = group.find(v);
    return it == group.end() ? -1 : it->second;
  };
  std::function<GeneralTree(const Address&)> gen;
  std::function<void(const Address&, std::vector<GeneralTree>&)> expand = [&](const Address& v,
                                                                              std::vector<GeneralTree>& kids) {
    for (int b = 0; b < 2; ++b) {
      Address c = v.child(b);
      int g = gid(v);
      if (g >= 0 && t.is_internal(c) && gid(c) == g)
        expand(c, kids);
      else
        kids.push_back(gen(c));
    }
  };
  gen = [&](const Address& v) -> GeneralTree {
    GeneralTree g;
    if (t.is_internal(v)) expand(v, g.children);
    return g;
  };
  return gen(Address::root());
}

BinaryTree right_vine(int carets) {
  std::vector<Address> v;
  Address a;
  for (int i = 0; i < carets; ++i) {
    v.push_back(a);
    a = a.child(1);
  }
  return BinaryTree::make(std::move(v));
}

BinaryTree left_vine(int carets) {
  std::vector<Address> v;
  Address a;
  for (int i = 0; i < carets; ++i) {
    v.push_back(a);
    a = a.child(0);
  }
  return BinaryTree::make(std::move(v));
}

BinaryTree vine_through(const Address& v) {
  std::vector<Address> out;
  for (int k = 0; k <= v.len; ++k) out.push_back(v.prefix(k));
  return BinaryTree::make(std::move(out));
}

bool is_vine(const BinaryTree& t) { return t.exposed_carets().size() == 1; }

unsigned long long catalan(int n) {
  unsigned __int128 c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return static_cast<unsigned long long>(c);
}

}  // namespace tc
