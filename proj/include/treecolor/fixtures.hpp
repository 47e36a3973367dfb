#pragma once

#include <string>
#include <vector>

#include "treecolor/coloring.hpp"
#include "treecolor/maps.hpp"
#include "treecolor/paths.hpp"

namespace tc {

// A path of signed rotations transcribed tree by tree, with the vector that
// colours every tree on it.
struct SignedSequence {
  std::string name;
  ColorVector vector;
  std::vector<SignedTree> trees;
};

// "ten-rotations": 11322133, both ends prime, three disjoint paths.
// "nine-rotations": 1332111, non-prime ends but connected sign structure.
SignedSequence signed_sequence(const std::string& name);
std::vector<std::string> signed_sequence_names();

// The unique rotation taking a to b; NoMatch if not adjacent.
RotationSymbol step_between(const BinaryTree& a, const BinaryTree& b);
Word replay_word(const std::vector<SignedTree>& seq);

// "noColorV" (6 leaves, no coloring), "torusK7" (8 leaves, Heawood graph),
// "petersenRP2" (the noColorV gluing, read as the Petersen map).
VTriple fixture_triple(const std::string& name);
std::vector<std::string> fixture_triple_names();

}  // namespace tc
