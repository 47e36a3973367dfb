#include "treecolor/paths.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "treecolor/error.hpp"

namespace tc {

SignedTree SignedTree::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<std::pair<Address, int8_t>> items;
  while (in >> tok) {
    if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
      throw Error(ErrorKind::Parse, "signed vertex token '" + tok + "'");
    items.emplace_back(Address::parse(tok.substr(0, tok.size() - 1)), tok.back() == '+' ? 1 : -1);
  }
  std::vector<Address> addrs;
  for (const auto& [a, s] : items) addrs.push_back(a);
  SignedTree st{BinaryTree::make(addrs), {}};
  st.signs.assign(st.tree.carets(), 0);
  for (const auto& [a, s] : items) st.signs[st.tree.internal_index(a)] = s;
  return st;
}

std::string SignedTree::str() const {
  std::string out;
  for (size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ' ';
    out += tree.internal()[i].str() + (signs[i] > 0 ? '+' : '-');
  }
  return out;
}

int8_t SignedTree::sign(const Address& v) const {
  int i = tree.internal_index(v);
  if (i < 0) throw Error(ErrorKind::NotAVertex, v.str() + " is not internal");
  return signs[i];
}

bool is_signed_rotation_valid(const SignedTree& st, const RotationSymbol& s) {
  if (!can_rotate(st.tree, s)) throw Error(ErrorKind::PivotMissing, "rotation " + s.str() + " at " + st.tree.str());
  auto [x, y] = s.pivots();
  return st.sign(x) == st.sign(y);
}

SignedTree apply_signed_rotation(const SignedTree& st, const RotationSymbol& s) {
  SignedTree out{rotate(st.tree, s), {}};
  out.signs.assign(out.tree.carets(), 0);
  auto [x, y] = s.pivots();
  for (size_t i = 0; i < st.tree.carets(); ++i) {
    const Address& v = st.tree.internal()[i];
    int8_t g = st.signs[i];
    if (v == x || v == y) g = static_cast<int8_t>(-g);
    out.signs[out.tree.internal_index(rotate_address(v, s))] = g;
  }
  return out;
}

std::string SignStructure::str() const {
  std::string out;
  for (const auto& e : edges) out += e.a.str() + " " + e.b.str() + " " + (e.sign > 0 ? "+" : "-") + "\n";
  return out;
}

std::string SignStructure::dot() const {
  std::string out = "graph sigma {\n";
  for (const auto& v : support.internal()) out += "  \"" + v.str() + "\";\n";
  for (const auto& e : edges)
    out += "  \"" + e.a.str() + "\" -- \"" + e.b.str() + "\" [sign=\"" + (e.sign > 0 ? "+" : "-") +
           "\", color=\"" + (e.sign > 0 ? "blue" : "red") + "\"];\n";
  return out + "}\n";
}

SignStructure sign_structure(const Word& w) {
  SignStructure ss;
  std::map<Address, int> degree;
  std::vector<Address> endpoints;
  for (size_t i = 0; i < w.size(); ++i) {
    auto [x, y] = w[i].pivots();
    for (size_t j = i; j-- > 0;) {
      x = rotate_address(x, w[j].inverted());
      y = rotate_address(y, w[j].inverted());
    }
    int8_t sign = (degree[x] + degree[y]) % 2 == 0 ? 1 : -1;
    ++degree[x];
    ++degree[y];
    ss.edges.push_back({x, y, sign});
    endpoints.push_back(x);
    endpoints.push_back(y);
  }
  std::set<Address> closure;
  for (const auto& v : endpoints)
    for (int k = 0; k <= v.len; ++k) closure.insert(v.prefix(k));
  ss.support = BinaryTree::make({closure.begin(), closure.end()});
  return ss;
}

namespace {

// Union-find carrying the parity of each vertex relative to its root.
struct ParityDsu {
  std::vector<int> parent, parity;
  explicit ParityDsu(size_t n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
  std::pair<int, int> find(int v) {
    int p = 0;
    int r = v;
    while (parent[r] != r) {
      p ^= parity[r];
      r = parent[r];
    }
    // Path compression with parity fix-up.
    int acc = p;
    while (parent[v] != v) {
      int next = parent[v];
      int pv = parity[v];
      parent[v] = r;
      parity[v] = acc;
      acc ^= pv;
      v = next;
    }
    return {r, p};
  }
  // Returns false on a parity conflict.
  bool unite(int a, int b, int odd) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == odd;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ odd;
    return true;
  }
};

}  // namespace

int components_over(const SignStructure& ss, const BinaryTree& t) {
  ParityDsu dsu(t.carets());
  for (const auto& e : ss.edges) {
    int a = t.internal_index(e.a), b = t.internal_index(e.b);
    if (a < 0 || b < 0) throw Error(ErrorKind::NotAVertex, "sign structure vertex outside the tree");
    dsu.unite(a, b, 0);  // only connectivity matters here
  }
  std::set<int> roots;
  for (size_t i = 0; i < t.carets(); ++i) roots.insert(dsu.find(static_cast<int>(i)).first);
  return static_cast<int>(roots.size());
}

Balance is_balanced(const SignStructure& ss) {
  const BinaryTree& t = ss.support;
  ParityDsu dsu(t.carets());
  Balance b{true, 0};
  for (const auto& e : ss.edges)
    if (!dsu.unite(t.internal_index(e.a), t.internal_index(e.b), e.sign > 0 ? 0 : 1)) b.balanced = false;
  std::set<int> roots;
  for (size_t i = 0; i < t.carets(); ++i) roots.insert(dsu.find(static_cast<int>(i)).first);
  b.components = static_cast<int>(roots.size());
  return b;
}

bool is_balanced(int n, const std::vector<IndexedSignedEdge>& edges) {
  ParityDsu dsu(n);
  for (const auto& e : edges)
    if (!dsu.unite(e.a, e.b, e.sign > 0 ? 0 : 1)) return false;
  return true;
}

std::vector<ColorVector> compatible_colorings(const Word& w, const BinaryTree& d) {
  path_end(d, w);  // throws PivotMissing if the path leaves the associahedron
  SignStructure ss = sign_structure(w);
  size_t k = d.carets();
  if (k == 0) return {ColorVector{1}};
  ParityDsu dsu(k);
  for (const auto& e : ss.edges)
    if (!dsu.unite(d.internal_index(e.a), d.internal_index(e.b), e.sign > 0 ? 0 : 1)) return {};
  // One free sign per component; the component of e is pinned positive.
  std::vector<int> roots;
  for (size_t i = 0; i < k; ++i) {
    int r = dsu.find(static_cast<int>(i)).first;
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  int top = dsu.find(0).first;
  std::vector<int> free_roots;
  for (int r : roots)
    if (r != top) free_roots.push_back(r);
  std::vector<ColorVector> out;
  for (uint64_t m = 0; m < (uint64_t{1} << free_roots.size()); ++m) {
    std::map<int, int8_t> root_sign{{top, 1}};
    for (size_t j = 0; j < free_roots.size(); ++j) root_sign[free_roots[j]] = (m >> j) & 1 ? -1 : 1;
    auto [rt, p0] = dsu.find(0);
    // Make e positive: flip its component's root sign if e is odd relative to the root.
    if (p0) root_sign[top] = -1;
    SignAssignment s(k);
    for (size_t i = 0; i < k; ++i) {
      auto [r, p] = dsu.find(static_cast<int>(i));
      s[i] = static_cast<int8_t>(p ? -root_sign[r] : root_sign[r]);
    }
    out.push_back(vector_from_sign(d, s, 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColorVector> compatible_colorings_brute(const Word& w, const BinaryTree& d) {
  auto path = path_evaluate(d, w);
  std::vector<ColorVector> out;
  for (auto& c : normalized_colorings(d)) {
    bool ok = true;
    for (const auto& t : path) ok = ok && is_valid(t, c);
    if (ok) out.push_back(std::move(c));
  }
  return out;
}

std::optional<Word> color_graph_path(const ColorVector& c, const BinaryTree& d, const BinaryTree& r) {
  if (!is_valid(d, c) || !is_valid(r, c)) return std::nullopt;
  std::map<BinaryTree, std::pair<BinaryTree, RotationSymbol>> prev;
  std::deque<BinaryTree> queue{d};
  prev.emplace(d, std::make_pair(d, RotationSymbol{}));
  while (!queue.empty()) {
    BinaryTree cur = queue.front();
    queue.pop_front();
    if (cur == r) {
      Word w;
      for (BinaryTree at = r; at != d;) {
        const auto& [from, s] = prev.at(at);
        w.push_back(s);
        at = from;
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (const auto& s : rotations_at(cur)) {
      BinaryTree nxt = rotate(cur, s);
      if (prev.count(nxt) || !is_valid(nxt, c)) continue;
      prev.emplace(nxt, std::make_pair(cur, s));
      queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

std::optional<Word> find_sign_consistent_path(const BinaryTree& d, const BinaryTree& r) {
  if (d.leaf_count() != r.leaf_count()) throw Error(ErrorKind::LengthMismatch, "trees differ in size");
  if (d == r) return Word{};
  for (const auto& c : colorings_of_pair({d, r})) {
    if (classify_vector(c) != VectorClass::Flexible) continue;
    if (auto w = color_graph_path(c, d, r)) return w;
  }
  return std::nullopt;
}

namespace {

// Roots of the three subtrees that a rotation moves as blocks, before and after.
std::array<Address, 3> blocks_before(const RotationSymbol& s) {
  const Address& u = s.u;
  if (!s.inverse) return {u.child(0).child(0), u.child(0).child(1), u.child(1)};
  return {u.child(0), u.child(1).child(0), u.child(1).child(1)};
}

std::array<Address, 3> blocks_after(const RotationSymbol& s) { return blocks_before(s.inverted()); }

bool inside_blocks(const Address& v, const std::array<Address, 3>& blocks) {
  return std::any_of(blocks.begin(), blocks.end(), [&](const Address& b) { return b.is_prefix_of(v); });
}

std::optional<RotationSymbol> conjugate_through(const RotationSymbol& t, const RotationSymbol& s) {
  // Symbol t' with s t s^-1 = t', when t sits beside s or inside a block after s.
  if (t.u.incomparable(s.u) || inside_blocks(t.u, blocks_after(s)))
    return RotationSymbol{rotate_address(t.u, s.inverted()), t.inverse};
  return std::nullopt;
}

}  // namespace

Word square_move(const Word& w, size_t i, SquareShape shape) {
  if (shape != SquareShape::TwoTwo && i + 2 < w.size() && w[i + 2] == w[i].inverted()) {
    if (auto t = conjugate_through(w[i + 1], w[i])) {
      Word out(w.begin(), w.begin() + i);
      out.push_back(*t);
      out.insert(out.end(), w.begin() + i + 3, w.end());
      return out;
    }
  }
  if (shape != SquareShape::ThreeOne && i + 1 < w.size()) {
    const RotationSymbol& s = w[i];
    const RotationSymbol& t = w[i + 1];
    Word out(w.begin(), w.begin() + i);
    if (auto t2 = conjugate_through(t, s)) {
      out.push_back(*t2);
      out.push_back(s);
    } else if (inside_blocks(s.u, blocks_before(t))) {
      // s t = t s' with s' = t^-1 s t.
      out.push_back(t);
      out.push_back({rotate_address(s.u, t), s.inverse});
    } else {
      throw Error(ErrorKind::NoMatch, "no square at position " + std::to_string(i));
    }
    out.insert(out.end(), w.begin() + i + 2, w.end());
    return out;
  }
  throw Error(ErrorKind::NoMatch, "no square at position " + std::to_string(i));
}

Word pentagon_move(const Word& w, size_t i) {
  auto emit = [&](size_t drop, std::initializer_list<RotationSymbol> repl) {
    Word out(w.begin(), w.begin() + i);
    out.insert(out.end(), repl);
    out.insert(out.end(), w.begin() + i + drop, w.end());
    return out;
  };
  if (i + 2 < w.size()) {
    const Address& u = w[i + 1].u;
    bool inv = w[i + 1].inverse;
    if (!inv && w[i] == RotationSymbol{u.child(0), false} && w[i + 2] == RotationSymbol{u.child(1), false})
      return emit(3, {w[i + 1], w[i + 1]});
    if (inv && w[i] == RotationSymbol{u.child(1), true} && w[i + 2] == RotationSymbol{u.child(0), true})
      return emit(3, {w[i + 1], w[i + 1]});
  }
  if (i + 1 < w.size() && w[i] == w[i + 1]) {
    const RotationSymbol& s = w[i];
    if (!s.inverse) return emit(2, {{s.u.child(0), false}, s, {s.u.child(1), false}});
    return emit(2, {{s.u.child(1), true}, s, {s.u.child(0), true}});
  }
  throw Error(ErrorKind::NoMatch, "no pentagon at position " + std::to_string(i));
}

std::vector<bool> subpath_check(const Word& w) {
  std::vector<bool> out;
  for (size_t k = 1; k <= w.size(); ++k)
    out.push_back(is_balanced(sign_structure(Word(w.begin(), w.begin() + k))).balanced);
  return out;
}

bool all_subwords_balanced(const Word& w) {
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b <= w.size(); ++b)
      if (!is_balanced(sign_structure(Word(w.begin() + a, w.begin() + b))).balanced) return false;
  return true;
}

}  // namespace tc
