#include "treecolor/assoc.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>

#include "treecolor/error.hpp"

namespace tc {

int color_max_d() {
  if (const char* env = std::getenv("ASSOC_COLOR_MAX_D")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return 9;
}

int TreeTable::index_of(const BinaryTree& t) const {
  auto it = std::lower_bound(trees.begin(), trees.end(), t);
  return it != trees.end() && *it == t ? static_cast<int>(it - trees.begin()) : -1;
}

const TreeTable& tree_table(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TreeTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[d];
  if (slot) return *slot;
  auto tab = std::make_unique<TreeTable>();
  tab->d = d;
  tab->trees = all_trees(d + 1);
  std::sort(tab->trees.begin(), tab->trees.end());
  for (const auto& t : tab->trees) {
    tab->shadows.push_back(shadow_intervals(t));
    std::vector<std::pair<RotationSymbol, int>> row;
    for (const auto& s : rotations_at(t)) row.emplace_back(s, -1);
    tab->nbrs.push_back(std::move(row));
  }
  for (size_t i = 0; i < tab->trees.size(); ++i)
    for (auto& [s, j] : tab->nbrs[i]) j = tab->index_of(rotate(tab->trees[i], s));
  slot = std::move(tab);
  return *slot;
}

namespace {

std::vector<Color> prefix_xor(const ColorVector& c) {
  std::vector<Color> p(c.size() + 1, 0);
  for (size_t i = 0; i < c.size(); ++i) p[i + 1] = p[i] ^ c[i];
  return p;
}

bool row_valid_prefix(const TreeTable& tab, int row, const std::vector<Color>& p) {
  for (const auto& iv : tab.shadows[row])
    if ((p[iv.hi] ^ p[iv.lo - 1]) == 0) return false;
  return true;
}

void check_entries(const ColorVector& c) {
  for (Color x : c)
    if (x < 1 || x > 3) throw Error(ErrorKind::ZeroEntry, "vector entries must lie in {1,2,3}");
  if (c.size() < 2) throw Error(ErrorKind::TooShort, "vector needs at least two entries");
}

int dimension_of(const ColorVector& c, int max_d) {
  check_entries(c);
  int d = static_cast<int>(c.size()) - 2;
  if (d > max_d)
    throw Error(ErrorKind::DimensionTooLarge,
                "dimension " + std::to_string(d) + " exceeds bound " + std::to_string(max_d));
  return d;
}

}  // namespace

bool row_valid(const TreeTable& tab, int row, const ColorVector& c) { return row_valid_prefix(tab, row, prefix_xor(c)); }

int ColorGraph::index_of(const BinaryTree& t) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), t);
  return it != vertices.end() && *it == t ? static_cast<int>(it - vertices.begin()) : -1;
}

std::vector<std::vector<int>> ColorGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::string ColorGraph::dot() const {
  std::string out = "graph color_" + vector_str(vector) + " {\n";
  for (const auto& v : vertices) out += "  \"" + v.str() + "\";\n";
  for (auto [a, b] : edges) out += "  \"" + vertices[a].str() + "\" -- \"" + vertices[b].str() + "\";\n";
  return out + "}\n";
}

ColorGraph color_graph(const ColorVector& c, int max_d) {
  int d = dimension_of(c, max_d);
  ColorGraph g{c, d, {}, {}};
  if (d < 0) return g;
  const TreeTable& tab = tree_table(d);
  auto p = prefix_xor(c);
  std::vector<int> slot(tab.trees.size(), -1);
  for (size_t i = 0; i < tab.trees.size(); ++i)
    if (row_valid_prefix(tab, static_cast<int>(i), p)) {
      slot[i] = static_cast<int>(g.vertices.size());
      g.vertices.push_back(tab.trees[i]);
    }
  for (size_t i = 0; i < tab.trees.size(); ++i) {
    if (slot[i] < 0) continue;
    for (const auto& [s, j] : tab.nbrs[i])
      if (slot[j] > slot[i]) g.edges.emplace_back(slot[i], slot[j]);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<ShadowInterval> zero_intervals(const ColorVector& c) {
  check_entries(c);
  auto p = prefix_xor(c);
  std::vector<ShadowInterval> out;
  int n = static_cast<int>(c.size());
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi)
      if ((p[hi] ^ p[lo - 1]) == 0) out.push_back({lo, hi});
  return out;
}

ZeroSet zero_set(const ColorVector& c, int max_d) {
  int d = dimension_of(c, max_d);
  ZeroSet z{zero_intervals(c), {}};
  const TreeTable& tab = tree_table(d);
  auto p = prefix_xor(c);
  for (size_t i = 0; i < tab.trees.size(); ++i)
    if (!row_valid_prefix(tab, static_cast<int>(i), p)) z.vertices.push_back(tab.trees[i]);
  return z;
}

std::vector<int> bfs_distances(const ColorGraph& g, int from) {
  auto adj = g.adjacency();
  std::vector<int> dist(g.vertices.size(), -1);
  std::deque<int> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

bool is_connected(const ColorGraph& g) {
  if (g.vertices.empty()) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int x) { return x < 0; });
}

bool is_connected_or_edgeless(const ColorGraph& g) { return g.edges.empty() || is_connected(g); }

int graph_diameter(const ColorGraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "color graph is disconnected");
  int best = 0;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    auto dist = bfs_distances(g, static_cast<int>(v));
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::optional<std::vector<std::vector<int>>> theta_paths(const ColorGraph& g, int s, int t) {
  auto adj = g.adjacency();
  for (size_t v = 0; v < adj.size(); ++v)
    if (static_cast<int>(v) != s && static_cast<int>(v) != t && adj[v].size() != 2) return std::nullopt;
  std::vector<std::vector<int>> paths;
  std::vector<bool> used(adj.size(), false);
  used[s] = true;
  for (int first : adj[s]) {
    std::vector<int> path{s};
    int prev = s, cur = first;
    while (cur != t) {
      if (used[cur]) return std::nullopt;
      used[cur] = true;
      path.push_back(cur);
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    path.push_back(t);
    paths.push_back(std::move(path));
  }
  used[t] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) return std::nullopt;
  return paths;
}

int disjoint_path_count(const ColorGraph& g, int s, int t) {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, long,
                      boost::property<boost::edge_residual_capacity_t, long,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  // Vertex v splits into v_in = 2v and v_out = 2v+1 with unit capacity.
  size_t n = g.vertices.size();
  Graph fg(2 * n);
  auto cap = boost::get(boost::edge_capacity, fg);
  auto rev = boost::get(boost::edge_reverse, fg);
  auto arc = [&](size_t a, size_t b, long c) {
    auto e = boost::add_edge(a, b, fg).first;
    auto r = boost::add_edge(b, a, fg).first;
    cap[e] = c;
    cap[r] = 0;
    rev[e] = r;
    rev[r] = e;
  };
  const long big = static_cast<long>(n) + 1;
  for (size_t v = 0; v < n; ++v)
    arc(2 * v, 2 * v + 1, static_cast<int>(v) == s || static_cast<int>(v) == t ? big : 1);
  for (auto [a, b] : g.edges) {
    // A direct s-t edge is one path on its own.
    arc(2 * a + 1, 2 * b, 1);
    arc(2 * b + 1, 2 * a, 1);
  }
  return static_cast<int>(boost::edmonds_karp_max_flow(fg, 2 * s, 2 * t + 1));
}

std::string vine_word(const BinaryTree& t, const ColorVector& c) {
  auto bad = [](const std::string& why) { return Error(ErrorKind::NotAVineColoring, why); };
  if (c.size() != t.leaf_count()) throw bad("vector length does not match the tree");
  int twos = 0;
  for (Color x : c) {
    if (x == 2) ++twos;
    else if (x != 1) throw bad("vector is not of the form 1^m 2 1^n");
  }
  if (twos != 1) throw bad("vector is not of the form 1^m 2 1^n");
  if (!is_vine(t) || !is_valid(t, c)) throw bad("tree is not a vine valid for the vector");
  auto leaves = t.leaves();
  std::sort(leaves.begin(), leaves.end(), infix_less);
  Address two = leaves[std::find(c.begin(), c.end(), 2) - c.begin()];
  std::string out;
  for (Address v = Address::root(); t.is_internal(v);) {
    Address l = v.child(0), r = v.child(1);
    if (t.is_internal(l) && !t.is_internal(r)) {
      out += 'r';
      v = l;
    } else if (t.is_internal(r)) {
      out += 'l';
      v = r;
    } else {
      // Bottom caret: label the side of the leaf that is not coloured 2.
      out += l == two ? 'r' : 'l';
      break;
    }
  }
  return out;
}

Separation face_union_separates(int d, const std::vector<ShadowInterval>& intervals) {
  const TreeTable& tab = tree_table(d);
  Separation sep;
  std::vector<int> slot(tab.trees.size(), -1);
  for (size_t i = 0; i < tab.trees.size(); ++i) {
    bool hit = false;
    for (const auto& iv : tab.shadows[i])
      hit = hit || std::find(intervals.begin(), intervals.end(), iv) != intervals.end();
    if (hit) continue;
    slot[i] = static_cast<int>(sep.complement.size());
    sep.complement.push_back(tab.trees[i]);
  }
  sep.component.assign(sep.complement.size(), -1);
  std::vector<int> rows;
  for (size_t i = 0; i < tab.trees.size(); ++i)
    if (slot[i] >= 0) rows.push_back(static_cast<int>(i));
  for (int start : rows) {
    if (sep.component[slot[start]] >= 0) continue;
    int id = sep.components++;
    std::deque<int> q{start};
    sep.component[slot[start]] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& [s, w] : tab.nbrs[v])
        if (slot[w] >= 0 && sep.component[slot[w]] < 0) {
          sep.component[slot[w]] = id;
          q.push_back(w);
        }
    }
  }
  sep.separates = sep.components > 1;
  return sep;
}

Neighborhood positive_neighborhood(const BinaryTree& t) {
  if (t.is_trivial()) throw Error(ErrorKind::TooSmall, "positive neighborhood needs a caret");
  ColorVector c = normalize_for(t, vector_from_sign(t, SignAssignment(t.carets(), 1), 1));
  return {c, color_graph(c, std::max(color_max_d(), static_cast<int>(t.carets()) - 1))};
}

}  // namespace tc
