#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "treecolor/coloring.hpp"
#include "treecolor/thompson.hpp"

namespace tc {

// Undirected multigraph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;  // simple neighbour sets
  bool has_loops() const;
  bool has_parallel_edges() const;
  std::vector<int> degrees() const;  // with multiplicity
  std::string json() const;
};

int girth(const Graph& g);  // 0 if acyclic; 1 for loops, 2 for parallel edges
bool is_isomorphic(const Graph& a, const Graph& b);  // simple graphs
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

// Cubic graph with a rotation system. Dart 3v+k is the k-th dart at vertex v in
// cyclic order; mate[d] is the other half of its edge.
struct SphereMap {
  int vertices = 0;
  std::vector<int> mate;

  std::vector<std::vector<int>> faces() const;  // dart orbits
  int euler_characteristic() const;
  Graph graph() const;
  Graph dual() const;  // faces adjacent across each edge; may have loops/parallels
};

struct VTriple {
  BinaryTree d;
  std::vector<int> perm;  // perm[i] = 1-based leaf of D glued to the i-th leaf of R
  BinaryTree r;
};

// Gluing of D (vertices 0..k-1, internal() order) and R (k..2k-1) along leaves
// and roots.
SphereMap pair_to_map(const TreePair& p);
SphereMap triple_to_map(const VTriple& t);

struct Triangulation {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // multigraph
  std::vector<std::array<int, 3>> faces;

  Graph graph() const { return {n, edges}; }
};

// Polygon vertices 0..L: leaf k is side (k-1,k), root is side (0,L); each
// internal vertex contributes its chord and triangle.
Triangulation pair_to_dual(const TreePair& p);

bool is_prime(const TreePair& p);
// Oracle: faces of the glued map share at most one edge.
bool is_prime_by_map(const TreePair& p);
std::vector<ShadowInterval> common_intervals(const TreePair& p);  // proper, common
std::vector<TreePair> prime_factorization(const TreePair& p);

enum class Family { W, Theta, Xi, Y, Nabla };
const char* family_name(Family f);
Family parse_family(const std::string& s);
int family_min_n(Family f);
Triangulation biwheel(int n);
Triangulation theta(int n);
Triangulation xi(int n);
Triangulation y_graph(int n);
Triangulation nabla(int n);
Triangulation family_graph(Family f, int n);
// The count of proper vertex 4-colorings divided by 24.
int64_t closed_form(Family f, int n);

// Proper vertex k-colorings; loops give 0, parallel edges are ignored.
uint64_t count_vertex_colorings(const Graph& g, int k);
// Proper edge 3-colorings of a cubic multigraph (loops give 0).
uint64_t count_edge_3_colorings(const Graph& g);

std::vector<ColorVector> v_triple_colorings(const VTriple& t);

// Every (D, perm, R) with the given leaf count: how many have no coloring.
struct TripleCensus {
  int leaves = 0;
  uint64_t total = 0;
  uint64_t uncolorable = 0;
};
TripleCensus v_triple_census(int leaves);  // leaves <= 7

// Σ-style signing of a graph's edges in the given order, then balance.
bool edge_numbering_balance(const Graph& g, const std::vector<int>& order);
struct NumberingCensus {
  uint64_t balanced = 0;
  uint64_t total = 0;
};
NumberingCensus edge_numbering_census(const Graph& g);  // all orders, <= 8 edges

}  // namespace tc
