#include "treecolor/maps.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/isomorphism.hpp>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "treecolor/assoc.hpp"
#include "treecolor/error.hpp"
#include "treecolor/paths.hpp"

namespace tc {

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::set<int>> s(n);
  for (auto [a, b] : edges)
    if (a != b) {
      s[a].insert(b);
      s[b].insert(a);
    }
  std::vector<std::vector<int>> out;
  for (auto& x : s) out.emplace_back(x.begin(), x.end());
  return out;
}

bool Graph::has_loops() const {
  return std::any_of(edges.begin(), edges.end(), [](auto e) { return e.first == e.second; });
}

bool Graph::has_parallel_edges() const {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges)
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return true;
  return false;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n, 0);
  for (auto [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

std::string Graph::json() const {
  std::string out = "{\"n\":" + std::to_string(n) + ",\"adjacency\":[";
  auto adj = adjacency();
  for (int v = 0; v < n; ++v) {
    out += v ? ",[" : "[";
    for (size_t i = 0; i < adj[v].size(); ++i) out += (i ? "," : "") + std::to_string(adj[v][i]);
    out += "]";
  }
  return out + "]}";
}

int girth(const Graph& g) {
  if (g.has_loops()) return 1;
  if (g.has_parallel_edges()) return 2;
  auto adj = g.adjacency();
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> dist(g.n, -1), par(g.n, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          par[w] = v;
          q.push_back(w);
        } else if (par[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  if (a.n != b.n) return false;
  auto build = [](const Graph& g) {
    G out(g.n);
    auto adj = g.adjacency();
    for (int v = 0; v < g.n; ++v)
      for (int w : adj[v])
        if (v < w) boost::add_edge(v, w, out);
    return out;
  };
  G ga = build(a), gb = build(b);
  if (boost::num_edges(ga) != boost::num_edges(gb)) return false;
  return boost::isomorphism(ga, gb);
}

Graph cycle_graph(int n) {
  Graph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

Graph petersen_graph() {
  Graph g{10, {}};
  for (int i = 0; i < 5; ++i) {
    g.edges.emplace_back(i, (i + 1) % 5);
    g.edges.emplace_back(i, i + 5);
    g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Sphere maps

namespace {

int next_dart(int d) { return 3 * (d / 3) + (d % 3 + 1) % 3; }

}  // namespace

std::vector<std::vector<int>> SphereMap::faces() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(mate.size(), false);
  for (size_t d0 = 0; d0 < mate.size(); ++d0) {
    if (seen[d0]) continue;
    std::vector<int> face;
    for (int d = static_cast<int>(d0); !seen[d]; d = next_dart(mate[d])) {
      seen[d] = true;
      face.push_back(d);
    }
    out.push_back(std::move(face));
  }
  return out;
}

int SphereMap::euler_characteristic() const {
  int e = static_cast<int>(mate.size()) / 2;
  return vertices - e + static_cast<int>(faces().size());
}

Graph SphereMap::graph() const {
  Graph g{vertices, {}};
  for (size_t d = 0; d < mate.size(); ++d)
    if (static_cast<int>(d) < mate[d]) g.edges.emplace_back(d / 3, mate[d] / 3);
  return g;
}

Graph SphereMap::dual() const {
  auto fs = faces();
  std::vector<int> face_of(mate.size());
  for (size_t f = 0; f < fs.size(); ++f)
    for (int d : fs[f]) face_of[d] = static_cast<int>(f);
  Graph g{static_cast<int>(fs.size()), {}};
  for (size_t d = 0; d < mate.size(); ++d)
    if (static_cast<int>(d) < mate[d]) g.edges.emplace_back(face_of[d], face_of[mate[d]]);
  return g;
}

SphereMap triple_to_map(const VTriple& t) {
  size_t k = t.d.carets();
  if (k == 0 || t.r.carets() != k) throw Error(ErrorKind::TooSmall, "triple needs two trees with the same caret count");
  if (t.perm.size() != k + 1) throw Error(ErrorKind::LengthMismatch, "permutation length differs from leaf count");
  std::vector<int> check(t.perm);
  std::sort(check.begin(), check.end());
  for (size_t i = 0; i < check.size(); ++i)
    if (check[i] != static_cast<int>(i) + 1) throw Error(ErrorKind::Parse, "perm is not a bijection on leaves");

  SphereMap m;
  m.vertices = static_cast<int>(2 * k);
  m.mate.assign(6 * k, -1);
  // Slot 0 is the parent side. D turns (parent, left, right); R is seen from
  // the other hemisphere and turns (parent, right, left).
  auto dart = [&](bool in_r, const BinaryTree& tr, const Address& v, int which) {
    int base = static_cast<int>(in_r ? k : 0) + tr.internal_index(v);
    int slot = which == 0 ? 0 : (in_r ? 3 - which : which);
    return 3 * base + slot;
  };
  auto link = [&](int a, int b) {
    m.mate[a] = b;
    m.mate[b] = a;
  };
  // Leaf darts for each tree, in left-right order.
  auto leaf_darts = [&](bool in_r, const BinaryTree& tr) {
    std::vector<int> out;
    for (const auto& l : tr.leaves()) out.push_back(dart(in_r, tr, l.parent(), 1 + l.bit(l.len - 1)));
    return out;
  };
  for (bool in_r : {false, true}) {
    const BinaryTree& tr = in_r ? t.r : t.d;
    for (const auto& v : tr.internal())
      for (int b = 0; b < 2; ++b)
        if (tr.is_internal(v.child(b))) link(dart(in_r, tr, v, 1 + b), dart(in_r, tr, v.child(b), 0));
  }
  link(dart(false, t.d, Address::root(), 0), dart(true, t.r, Address::root(), 0));
  auto dl = leaf_darts(false, t.d), rl = leaf_darts(true, t.r);
  for (size_t i = 0; i < rl.size(); ++i) link(dl[t.perm[i] - 1], rl[i]);
  return m;
}

SphereMap pair_to_map(const TreePair& p) {
  std::vector<int> id(p.d.leaf_count());
  std::iota(id.begin(), id.end(), 1);
  return triple_to_map({p.d, id, p.r});
}

Triangulation pair_to_dual(const TreePair& p) {
  int leaves = static_cast<int>(p.d.leaf_count());
  if (leaves < 2 || p.r.leaf_count() != p.d.leaf_count())
    throw Error(ErrorKind::TooSmall, "dual needs two trees with at least two leaves");
  Triangulation t{leaves + 1, {}, {}};
  for (int k = 1; k <= leaves; ++k) t.edges.emplace_back(k - 1, k);
  t.edges.emplace_back(0, leaves);
  for (const BinaryTree* tr : {&p.d, &p.r}) {
    auto sh = shadow_intervals(*tr);
    const auto& in = tr->internal();
    for (size_t i = 0; i < in.size(); ++i) {
      if (!in[i].empty()) t.edges.emplace_back(sh[i].lo - 1, sh[i].hi);
      int mid = shadow_of(*tr, in[i].child(0)).hi;
      t.faces.push_back({sh[i].lo - 1, mid, sh[i].hi});
    }
  }
  return t;
}

std::vector<ShadowInterval> common_intervals(const TreePair& p) {
  auto a = shadow_intervals(p.d), b = shadow_intervals(p.r);
  std::set<ShadowInterval> sb(b.begin(), b.end());
  std::vector<ShadowInterval> out;
  int leaves = static_cast<int>(p.d.leaf_count());
  for (const auto& iv : a)
    if (iv.length() < leaves && sb.count(iv)) out.push_back(iv);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(const TreePair& p) { return common_intervals(p).empty(); }

bool is_prime_by_map(const TreePair& p) {
  if (p.d.carets() == 0) return true;
  Graph g = pair_to_map(p).dual();
  return !g.has_loops() && !g.has_parallel_edges();
}

namespace {

// v becomes a leaf.
BinaryTree prune_at(const BinaryTree& t, const Address& v) {
  std::vector<Address> keep;
  for (const auto& a : t.internal())
    if (!v.is_prefix_of(a)) keep.push_back(a);
  return BinaryTree::make(keep);
}

Address vertex_with_shadow(const BinaryTree& t, const ShadowInterval& iv) {
  auto sh = shadow_intervals(t);
  for (size_t i = 0; i < sh.size(); ++i)
    if (sh[i] == iv) return t.internal()[i];
  throw Error(ErrorKind::NoMatch, "no vertex with shadow " + iv.str());
}

}  // namespace

std::vector<TreePair> prime_factorization(const TreePair& p) {
  auto common = common_intervals(p);
  if (common.empty()) return {p};
  // Innermost: contains no other common interval. Leftmost among those.
  ShadowInterval inner = common[0];
  bool found = false;
  std::sort(common.begin(), common.end(), [](const auto& a, const auto& b) { return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi; });
  for (const auto& iv : common) {
    bool innermost = std::none_of(common.begin(), common.end(),
                                  [&](const ShadowInterval& o) { return o != iv && iv.contains(o); });
    if (innermost) {
      inner = iv;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::NoMatch, "no innermost common interval");
  Address v = vertex_with_shadow(p.d, inner), w = vertex_with_shadow(p.r, inner);
  std::vector<TreePair> out{{subtree_at(p.d, v), subtree_at(p.r, w)}};
  auto rest = prime_factorization({prune_at(p.d, v), prune_at(p.r, w)});
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// ---------------------------------------------------------------------------
// Families

const char* family_name(Family f) {
  switch (f) {
    case Family::W: return "W";
    case Family::Theta: return "Theta";
    case Family::Xi: return "Xi";
    case Family::Y: return "Y";
    case Family::Nabla: return "Nabla";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::W, Family::Theta, Family::Xi, Family::Y, Family::Nabla}) {
    std::string name = family_name(f);
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    if (s == name || s == lower) return f;
  }
  throw Error(ErrorKind::Parse, "unknown family '" + s + "'");
}

int family_min_n(Family f) {
  switch (f) {
    case Family::W: return 4;
    case Family::Theta: return 6;
    case Family::Xi: return 7;
    case Family::Y: return 5;
    case Family::Nabla: return 7;
  }
  return 0;
}

namespace {

void check_min(Family f, int n) {
  if (n < family_min_n(f))
    throw Error(ErrorKind::TooSmall, std::string(family_name(f)) + " needs n >= " + std::to_string(family_min_n(f)));
}

// Edge list of a triangulation from its faces. Every edge borders two faces,
// so a vertex pair seen 2m times is m parallel edges.
void edges_from_faces(Triangulation& t) {
  std::map<std::pair<int, int>, int> seen;
  for (const auto& f : t.faces)
    for (int i = 0; i < 3; ++i) {
      int a = f[i], b = f[(i + 1) % 3];
      ++seen[{std::min(a, b), std::max(a, b)}];
    }
  t.edges.clear();
  for (auto [e, k] : seen)
    for (int i = 0; i < (k + 1) / 2; ++i) t.edges.push_back(e);
}

void drop_faces(Triangulation& t, std::vector<std::array<int, 3>> gone) {
  auto key = [](std::array<int, 3> f) {
    std::sort(f.begin(), f.end());
    return f;
  };
  for (auto& f : gone) {
    auto it = std::find_if(t.faces.begin(), t.faces.end(), [&](const auto& g) { return key(g) == key(f); });
    if (it == t.faces.end()) throw Error(ErrorKind::NoMatch, "face not present");
    t.faces.erase(it);
  }
}

// Suspension points 0 and 1; cycle 2..n-1.
constexpr int kA = 0, kB = 1, kC = 2, kD = 3, kE = 4;

}  // namespace

Triangulation biwheel(int n) {
  check_min(Family::W, n);
  Triangulation t{n, {}, {}};
  int m = n - 2;
  for (int i = 0; i < m; ++i) {
    int c = 2 + i, d = 2 + (i + 1) % m;
    t.faces.push_back({kA, c, d});
    t.faces.push_back({kB, d, c});
  }
  edges_from_faces(t);
  return t;
}

Triangulation theta(int n) {
  check_min(Family::Theta, n);
  Triangulation t = biwheel(n - 1);
  int d2 = t.n++;
  drop_faces(t, {{kA, kC, kD}, {kA, kD, kE}, {kB, kC, kD}, {kB, kD, kE}});
  int d1 = kD;
  for (auto f : std::vector<std::array<int, 3>>{
           {kA, kC, d1}, {kA, d1, kE}, {kC, d2, d1}, {kE, d1, d2}, {kB, d2, kC}, {kB, kE, d2}})
    t.faces.push_back(f);
  edges_from_faces(t);
  return t;
}

Triangulation xi(int n) {
  check_min(Family::Xi, n);
  Triangulation t = biwheel(n - 2);
  int d2 = t.n++, d3 = t.n++;
  drop_faces(t, {{kA, kC, kD}, {kA, kD, kE}, {kB, kC, kD}, {kB, kD, kE}});
  int d1 = kD;
  for (auto f : std::vector<std::array<int, 3>>{{kA, kC, d1},
                                                {kA, d1, kE},
                                                {kC, d2, d1},
                                                {kE, d1, d2},
                                                {kC, d3, d2},
                                                {kE, d2, d3},
                                                {kB, d3, kC},
                                                {kB, kE, d3}})
    t.faces.push_back(f);
  edges_from_faces(t);
  return t;
}

Triangulation y_graph(int n) {
  check_min(Family::Y, n);
  Triangulation t = biwheel(n - 1);
  int p = t.n++;
  drop_faces(t, {{kA, kC, kD}});
  for (auto f : std::vector<std::array<int, 3>>{{kA, kC, p}, {kC, kD, p}, {kD, kA, p}}) t.faces.push_back(f);
  edges_from_faces(t);
  return t;
}

Triangulation nabla(int n) {
  check_min(Family::Nabla, n);
  Triangulation t = biwheel(n - 3);
  int p = t.n++, q = t.n++, r = t.n++;
  drop_faces(t, {{kA, kC, kD}});
  const int A = kA, B = kC, C = kD;
  for (auto f : std::vector<std::array<int, 3>>{
           {A, B, p}, {B, C, q}, {C, A, r}, {A, p, r}, {B, q, p}, {C, r, q}, {p, q, r}})
    t.faces.push_back(f);
  edges_from_faces(t);
  return t;
}

Triangulation family_graph(Family f, int n) {
  switch (f) {
    case Family::W: return biwheel(n);
    case Family::Theta: return theta(n);
    case Family::Xi: return xi(n);
    case Family::Y: return y_graph(n);
    case Family::Nabla: return nabla(n);
  }
  throw Error(ErrorKind::Parse, "unknown family");
}

int64_t closed_form(Family f, int n) {
  if (n < family_min_n(f) || n > 60)
    throw Error(ErrorKind::OutOfRange, std::string(family_name(f)) + " closed form out of range");
  auto pow2 = [](int e) { return int64_t{1} << e; };
  int64_t s = n % 2 == 0 ? 1 : -1;  // (-1)^n
  switch (f) {
    case Family::W: return (pow2(n - 3) + s) / 3 + (1 + s) / 2;
    case Family::Theta: return (pow2(n - 5) + s) / 3 + (4 - 4 * s) / 2;
    case Family::Xi: return (pow2(n - 4) - s) / 3 + (5 + 9 * s) / 2;
    case Family::Y: return closed_form(Family::W, n - 1);
    case Family::Nabla: return (pow2(n - 4) - s) / 3 + (4 - 6 * s) / 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Counting

uint64_t count_vertex_colorings(const Graph& g, int k) {
  if (g.n > 16) throw Error(ErrorKind::TooLarge, "exact vertex coloring count limited to 16 vertices");
  if (g.has_loops()) return 0;
  if (g.n == 0) return 1;
  auto adj = g.adjacency();
  // Order: repeatedly take the vertex with the most already-ordered neighbours.
  std::vector<int> order;
  std::vector<bool> placed(g.n, false);
  std::vector<int> links(g.n, 0);
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (!placed[v] && (best < 0 || links[v] > links[best] ||
                         (links[v] == links[best] && adj[v].size() > adj[best].size())))
        best = v;
    placed[best] = true;
    order.push_back(best);
    for (int w : adj[best]) ++links[w];
  }
  std::vector<int> color(g.n, -1);
  std::function<uint64_t(int)> go = [&](int i) -> uint64_t {
    if (i == g.n) return 1;
    int v = order[i];
    uint64_t total = 0;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w : adj[v]) ok = ok && color[w] != c;
      if (!ok) continue;
      color[v] = c;
      total += go(i + 1);
      color[v] = -1;
    }
    return total;
  };
  return go(0);
}

uint64_t count_edge_3_colorings(const Graph& g) {
  if (g.has_loops()) return 0;
  size_t m = g.edges.size();
  std::vector<std::vector<int>> incident(g.n);
  for (size_t e = 0; e < m; ++e) {
    incident[g.edges[e].first].push_back(static_cast<int>(e));
    incident[g.edges[e].second].push_back(static_cast<int>(e));
  }
  // Edge order by breadth-first search from vertex 0.
  std::vector<int> order;
  std::vector<bool> seen_e(m, false), seen_v(g.n, false);
  for (int s = 0; s < g.n; ++s) {
    if (seen_v[s]) continue;
    std::deque<int> q{s};
    seen_v[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int e : incident[v]) {
        if (!seen_e[e]) {
          seen_e[e] = true;
          order.push_back(e);
        }
        int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
        if (!seen_v[w]) {
          seen_v[w] = true;
          q.push_back(w);
        }
      }
    }
  }
  std::vector<int> color(m, -1);
  std::function<uint64_t(size_t)> go = [&](size_t i) -> uint64_t {
    if (i == m) return 1;
    int e = order[i];
    uint64_t total = 0;
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (int end : {g.edges[e].first, g.edges[e].second})
        for (int f : incident[end]) ok = ok && (f == e || color[f] != c);
      if (!ok) continue;
      color[e] = c;
      total += go(i + 1);
      color[e] = -1;
    }
    return total;
  };
  return go(0);
}

std::vector<ColorVector> v_triple_colorings(const VTriple& t) {
  if (t.d.leaf_count() != t.r.leaf_count() || t.perm.size() != t.d.leaf_count())
    throw Error(ErrorKind::LengthMismatch, "triple sizes differ");
  std::vector<ColorVector> out;
  for (const auto& c : normalized_colorings(t.d)) {
    ColorVector cr(c.size());
    for (size_t i = 0; i < cr.size(); ++i) cr[i] = c[t.perm[i] - 1];
    if (is_valid(t.r, cr)) out.push_back(c);
  }
  return out;
}

TripleCensus v_triple_census(int leaves) {
  if (leaves < 2 || leaves > 7) throw Error(ErrorKind::OutOfRange, "census needs 2..7 leaves");
  const TreeTable& tab = tree_table(leaves - 2);
  std::vector<std::vector<ColorVector>> colorings;
  for (const auto& t : tab.trees) colorings.push_back(normalized_colorings(t));
  std::vector<int> perm(leaves);
  std::iota(perm.begin(), perm.end(), 0);
  TripleCensus out{leaves, 0, 0};
  ColorVector cr(leaves);
  do {
    for (size_t d = 0; d < tab.trees.size(); ++d)
      for (size_t r = 0; r < tab.trees.size(); ++r) {
        ++out.total;
        bool found = false;
        for (const auto& c : colorings[d]) {
          for (int i = 0; i < leaves; ++i) cr[i] = c[perm[i]];
          if (row_valid(tab, static_cast<int>(r), cr)) {
            found = true;
            break;
          }
        }
        out.uncolorable += !found;
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool edge_numbering_balance(const Graph& g, const std::vector<int>& order) {
  std::vector<int> deg(g.n, 0);
  std::vector<IndexedSignedEdge> signed_edges;
  for (int e : order) {
    auto [a, b] = g.edges.at(e);
    signed_edges.push_back({a, b, static_cast<int8_t>(deg[a] % 2 == deg[b] % 2 ? 1 : -1)});
    ++deg[a];
    ++deg[b];
  }
  return is_balanced(g.n, signed_edges);
}

NumberingCensus edge_numbering_census(const Graph& g) {
  if (g.edges.size() > 8) throw Error(ErrorKind::TooLarge, "numbering census limited to 8 edges");
  std::vector<int> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  NumberingCensus out;
  do {
    ++out.total;
    out.balanced += edge_numbering_balance(g, order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace tc
