#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treecolor/thompson.hpp"
#include "treecolor/tree.hpp"

namespace tc {

// Z2 x Z2 coded 0..3; addition is xor.
using Color = uint8_t;
using ColorVector = std::vector<Color>;

inline Color color_next(Color a) { return static_cast<Color>(a % 3 + 1); }
inline Color color_prev(Color a) { return static_cast<Color>((a + 1) % 3 + 1); }

ColorVector parse_vector(std::string_view digits);
std::string vector_str(const ColorVector& c);
Color vector_sum(const ColorVector& c);

// Color of the edge above every vertex of the tree, leaves included.
using EdgeColoring = std::map<Address, Color>;

// +1 / -1 per internal vertex, aligned with tree.internal().
using SignAssignment = std::vector<int8_t>;

EdgeColoring edge_coloring_from_vector(const BinaryTree& t, const ColorVector& c);
// Edge colors of the internal vertices only, aligned with t.internal().
std::vector<Color> internal_edge_colors(const BinaryTree& t, const ColorVector& c);
bool is_valid(const BinaryTree& t, const ColorVector& c);

int8_t sign_of(Color up, Color left, Color right);
SignAssignment sign_assignment_from_coloring(const BinaryTree& t, const EdgeColoring& e);
SignAssignment signs_from_vector(const BinaryTree& t, const ColorVector& c);
EdgeColoring coloring_from_sign(const BinaryTree& t, const SignAssignment& s, Color root);
ColorVector vector_from_sign(const BinaryTree& t, const SignAssignment& s, Color root);

// Applies a permutation of {1,2,3} given as the images of 1, 2, 3.
ColorVector permute_colors(const ColorVector& c, const std::array<Color, 3>& images);
// Root color 1 and a positive sign at e of t.  Requires c valid for t.
ColorVector normalize_for(const BinaryTree& t, const ColorVector& c);

bool is_acceptable(const ColorVector& c);
std::optional<BinaryTree> acceptable_witness(const ColorVector& c);

enum class VectorClass { PositiveRigid, NegativeRigid, Flexible, Unacceptable };
const char* vector_class_name(VectorClass k);
VectorClass classify_vector(const ColorVector& c);

// All 2^(carets-1) normalized colorings of t, in vector order.
std::vector<ColorVector> normalized_colorings(const BinaryTree& t);
std::vector<ColorVector> colorings_of_pair(const TreePair& p);

using Pattern = std::function<int8_t(const Address&)>;
int8_t pattern_rigid(const Address& v);
int8_t pattern_positive(const Address& v);
inline int8_t pattern_eval(const Pattern& p, const Address& v) { return p(v); }
ColorVector pattern_coloring(const Pattern& p, const BinaryTree& t);
bool is_pattern_compatible(const TreePair& p, const Pattern& pat);

}  // namespace tc
