#include "treecolor/fixtures.hpp"

#include "treecolor/error.hpp"

namespace tc {

namespace {

// The eighth tree of the ten-rotation path is drawn as e 1 11 110 111 1110
// 11101, which is not a rotation away from its neighbours; the adjacent tree
// with the drawn signs is used instead.
const char* kTen[] = {
    "e- 1+ 11+ 110+ 111+ 1100- 1110-",     "e- 1+ 11- 110- 1100+ 1101- 11000-",
    "e- 1+ 11- 110+ 1100+ 11000+ 110000-", "e- 1+ 11- 110+ 1100- 11000- 11001-",
    "e- 1+ 11- 110+ 1100+ 11001+ 110011-", "e- 1+ 11- 110- 1101- 11010+ 110101-",
    "e- 1+ 11+ 111+ 1110- 11100+ 111001-", "e- 1- 10- 11+ 110- 1100+ 11001-",
    "e+ 0+ 1+ 01- 10- 100+ 1001-",         "e- 0- 00+ 01- 001- 010+ 0101-",
    "e- 0+ 00+ 000+ 001+ 0001- 0011-",
};

const char* kNine[] = {
    "e- 1- 10+ 100- 1000+ 10001-", "e+ 0+ 01+ 010- 0100+ 01001-", "e+ 0- 00- 001- 0010+ 00101-",
    "e+ 0- 00+ 000+ 0001+ 00011-", "e+ 0- 00+ 000- 0000- 0001-",  "e+ 0- 00+ 000+ 0000+ 00000-",
    "e+ 0- 00- 000+ 001- 0000-",   "e+ 0+ 00+ 01+ 000- 010-",     "e+ 0- 00- 01- 011+ 0110-",
    "e+ 0+ 01+ 011- 0111+ 01110-",
};

template <size_t N>
SignedSequence make(const char* name, const char* vector, const char* const (&lines)[N]) {
  SignedSequence s{name, parse_vector(vector), {}};
  for (const char* l : lines) s.trees.push_back(SignedTree::parse(l));
  return s;
}

}  // namespace

SignedSequence signed_sequence(const std::string& name) {
  if (name == "ten-rotations") return make("ten-rotations", "11322133", kTen);
  if (name == "nine-rotations") return make("nine-rotations", "1332111", kNine);
  throw Error(ErrorKind::NoMatch, "unknown sequence '" + name + "'");
}

std::vector<std::string> signed_sequence_names() { return {"ten-rotations", "nine-rotations"}; }

RotationSymbol step_between(const BinaryTree& a, const BinaryTree& b) {
  for (const auto& s : rotations_at(a))
    if (rotate(a, s) == b) return s;
  throw Error(ErrorKind::NoMatch, "trees " + a.str() + " and " + b.str() + " are not adjacent");
}

Word replay_word(const std::vector<SignedTree>& seq) {
  Word w;
  for (size_t i = 1; i < seq.size(); ++i) w.push_back(step_between(seq[i - 1].tree, seq[i].tree));
  return w;
}

VTriple fixture_triple(const std::string& name) {
  if (name == "noColorV" || name == "petersenRP2")
    return {BinaryTree::from_addresses({"e", "0", "00", "1", "11"}), {1, 4, 3, 6, 2, 5},
            BinaryTree::from_addresses({"e", "0", "00", "01", "1"})};
  if (name == "torusK7") {
    BinaryTree full = BinaryTree::from_addresses({"e", "0", "1", "00", "01", "10", "11"});
    return {full, {3, 5, 2, 7, 1, 6, 4, 8}, full};
  }
  throw Error(ErrorKind::NoMatch, "unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_triple_names() { return {"noColorV", "torusK7", "petersenRP2"}; }

}  // namespace tc
