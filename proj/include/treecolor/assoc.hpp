#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treecolor/coloring.hpp"
#include "treecolor/tree.hpp"

namespace tc {

// Bound on the associahedron dimension for graph construction. Reads
// ASSOC_COLOR_MAX_D, default 9.
int color_max_d();

// Vertices of A_d (trees with d+2 leaves) with their shadow intervals and
// rotation neighbours, built once per dimension and shared.
struct TreeTable {
  int d = 0;
  std::vector<BinaryTree> trees;                                  // all_trees order
  std::vector<std::vector<ShadowInterval>> shadows;               // aligned with internal()
  std::vector<std::vector<std::pair<RotationSymbol, int>>> nbrs;  // rotations_at order
  int index_of(const BinaryTree& t) const;
};
const TreeTable& tree_table(int d);

// Fast validity test against a table row; c must have d+2 entries.
bool row_valid(const TreeTable& tab, int row, const ColorVector& c);

struct ColorGraph {
  ColorVector vector;
  int d = 0;
  std::vector<BinaryTree> vertices;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted

  int index_of(const BinaryTree& t) const;  // -1 if absent
  std::vector<std::vector<int>> adjacency() const;
  std::string dot() const;
};

ColorGraph color_graph(const ColorVector& c, int max_d = color_max_d());

struct ZeroSet {
  std::vector<ShadowInterval> intervals;  // zero-sum intervals of length >= 2
  std::vector<BinaryTree> vertices;       // trees whose pattern meets an interval
};
ZeroSet zero_set(const ColorVector& c, int max_d = color_max_d());
// Only the interval family; no dimension bound.
std::vector<ShadowInterval> zero_intervals(const ColorVector& c);

bool is_connected(const ColorGraph& g);
bool is_connected_or_edgeless(const ColorGraph& g);
int graph_diameter(const ColorGraph& g);
// BFS distances from one vertex; -1 where unreachable.
std::vector<int> bfs_distances(const ColorGraph& g, int from);

// If g is exactly a bundle of s-t paths disjoint apart from their ends, the
// paths as vertex index lists.
std::optional<std::vector<std::vector<int>>> theta_paths(const ColorGraph& g, int s, int t);
// Maximum number of internally vertex-disjoint s-t paths (max flow).
int disjoint_path_count(const ColorGraph& g, int s, int t);

// Top-to-bottom caret labels over {l,r} for a vine coloured by 1^m 2 1^n.
std::string vine_word(const BinaryTree& t, const ColorVector& c);

struct Separation {
  bool separates = false;
  std::vector<BinaryTree> complement;  // trees avoiding every interval
  std::vector<int> component;          // component id per complement tree
  int components = 0;
};
Separation face_union_separates(int d, const std::vector<ShadowInterval>& intervals);

struct Neighborhood {
  ColorVector vector;
  ColorGraph graph;
};
Neighborhood positive_neighborhood(const BinaryTree& t);

}  // namespace tc
