#include "treecolor/coloring.hpp"

#include <algorithm>
#include <array>

#include "treecolor/error.hpp"

namespace tc {

ColorVector parse_vector(std::string_view digits) {
  ColorVector c;
  for (char ch : digits) {
    if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') continue;
    if (ch < '0' || ch > '3') throw Error(ErrorKind::Parse, "color digits are 0..3");
    c.push_back(static_cast<Color>(ch - '0'));
  }
  return c;
}

std::string vector_str(const ColorVector& c) {
  std::string s;
  for (Color x : c) s += static_cast<char>('0' + x);
  return s;
}

Color vector_sum(const ColorVector& c) {
  Color s = 0;
  for (Color x : c) s ^= x;
  return s;
}

namespace {

void check_length(const BinaryTree& t, const ColorVector& c) {
  if (c.size() != t.leaf_count())
    throw Error(ErrorKind::LengthMismatch, "vector of length " + std::to_string(c.size()) + " for a tree with " +
                                               std::to_string(t.leaf_count()) + " leaves");
}

}  // namespace

std::vector<Color> internal_edge_colors(const BinaryTree& t, const ColorVector& c) {
  check_length(t, c);
  std::vector<Color> prefix(c.size() + 1, 0);
  for (size_t i = 0; i < c.size(); ++i) prefix[i + 1] = prefix[i] ^ c[i];
  auto iv = shadow_intervals(t);
  std::vector<Color> out(iv.size());
  for (size_t i = 0; i < iv.size(); ++i) out[i] = prefix[iv[i].hi] ^ prefix[iv[i].lo - 1];
  return out;
}

EdgeColoring edge_coloring_from_vector(const BinaryTree& t, const ColorVector& c) {
  auto in = internal_edge_colors(t, c);
  EdgeColoring e;
  for (size_t i = 0; i < in.size(); ++i) e[t.internal()[i]] = in[i];
  auto ls = t.leaves();
  for (size_t i = 0; i < ls.size(); ++i) e[ls[i]] = c[i];
  return e;
}

bool is_valid(const BinaryTree& t, const ColorVector& c) {
  check_length(t, c);
  for (Color x : c)
    if (x == 0) return false;
  for (Color x : internal_edge_colors(t, c))
    if (x == 0) return false;
  return true;
}

int8_t sign_of(Color up, Color left, Color right) {
  if (up == 0 || left == 0 || right == 0 || up == left || up == right || left == right) return 0;
  return left == color_next(up) ? 1 : -1;
}

SignAssignment sign_assignment_from_coloring(const BinaryTree& t, const EdgeColoring& e) {
  SignAssignment s;
  for (const auto& v : t.internal()) {
    auto get = [&](const Address& a) {
      auto it = e.find(a);
      if (it == e.end()) throw Error(ErrorKind::ImproperColoring, "no color at " + a.str());
      return it->second;
    };
    int8_t g = sign_of(get(v), get(v.child(0)), get(v.child(1)));
    if (g == 0) throw Error(ErrorKind::ImproperColoring, "improper coloring at " + v.str());
    s.push_back(g);
  }
  return s;
}

SignAssignment signs_from_vector(const BinaryTree& t, const ColorVector& c) {
  return sign_assignment_from_coloring(t, edge_coloring_from_vector(t, c));
}

EdgeColoring coloring_from_sign(const BinaryTree& t, const SignAssignment& s, Color root) {
  if (root == 0 || root > 3) throw Error(ErrorKind::ZeroRoot, "root color must be nonzero");
  if (s.size() != t.carets()) throw Error(ErrorKind::LengthMismatch, "sign assignment size");
  EdgeColoring e;
  e[Address::root()] = root;
  // internal() is breadth-first, so parents are colored before children.
  for (size_t i = 0; i < t.internal().size(); ++i) {
    const Address& v = t.internal()[i];
    Color a = e[v];
    Color n1 = s[i] > 0 ? color_next(a) : color_prev(a);
    Color n2 = s[i] > 0 ? color_next(n1) : color_prev(n1);
    e[v.child(0)] = n1;
    e[v.child(1)] = n2;
  }
  return e;
}

ColorVector vector_from_sign(const BinaryTree& t, const SignAssignment& s, Color root) {
  auto e = coloring_from_sign(t, s, root);
  ColorVector c;
  for (const auto& l : t.leaves()) c.push_back(e[l]);
  return c;
}

ColorVector permute_colors(const ColorVector& c, const std::array<Color, 3>& images) {
  ColorVector out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = c[i] == 0 ? 0 : images[c[i] - 1];
  return out;
}

ColorVector normalize_for(const BinaryTree& t, const ColorVector& c) {
  Color s = vector_sum(c);
  if (s == 0) throw Error(ErrorKind::ZeroRoot, "vector sums to zero");
  std::array<Color, 3> img{};
  if (t.is_trivial()) {
    img[s - 1] = 1;
    Color o = color_next(s);
    img[o - 1] = 2;
    img[color_next(o) - 1] = 3;
    return permute_colors(c, img);
  }
  auto e = internal_edge_colors(t, c);
  Color left = t.is_internal(Address{0, 1}) ? e[t.internal_index(Address{0, 1})] : c[0];
  if (left == 0 || left == s) throw Error(ErrorKind::ImproperColoring, "vector is not valid at the root caret");
  img[s - 1] = 1;
  img[left - 1] = 2;
  img[(s ^ left) - 1] = 3;
  return permute_colors(c, img);
}

bool is_acceptable(const ColorVector& c) {
  for (Color x : c)
    if (x == 0) throw Error(ErrorKind::ZeroEntry, "vector has a zero entry");
  if (c.size() < 2) throw Error(ErrorKind::TooShort, "acceptability needs length at least 2");
  if (vector_sum(c) == 0) return false;
  return std::any_of(c.begin(), c.end(), [&](Color x) { return x != c[0]; });
}

namespace {

BinaryTree witness(const ColorVector& v) {
  size_t n = v.size();
  if (n == 1) return BinaryTree::trivial();
  Color x = v[0];
  bool head_run = std::all_of(v.begin(), v.end() - 1, [&](Color a) { return a == x; });
  if (head_run) return right_vine(static_cast<int>(n - 1));
  bool tail_run = std::all_of(v.begin() + 1, v.end(), [&](Color a) { return a == v[1]; });
  if (tail_run) return left_vine(static_cast<int>(n - 1));
  Color s = vector_sum(v);
  if (s != x) return join(BinaryTree::trivial(), witness(ColorVector(v.begin() + 1, v.end())));
  if (v.back() != x) return join(witness(ColorVector(v.begin(), v.end() - 1)), BinaryTree::trivial());
  // v = x^i y s' x with y the first entry differing from x.
  size_t i = 1;
  while (v[i] == x) ++i;
  return join(witness(ColorVector(v.begin(), v.begin() + i + 1)), witness(ColorVector(v.begin() + i + 1, v.end())));
}

}  // namespace

std::optional<BinaryTree> acceptable_witness(const ColorVector& c) {
  if (!is_acceptable(c)) return std::nullopt;
  return witness(c);
}

const char* vector_class_name(VectorClass k) {
  switch (k) {
    case VectorClass::PositiveRigid: return "PositiveRigid";
    case VectorClass::NegativeRigid: return "NegativeRigid";
    case VectorClass::Flexible: return "Flexible";
    case VectorClass::Unacceptable: return "Unacceptable";
  }
  return "?";
}

namespace {

// Sum 1, non-constant, and no proper prefix summing to 3.
bool rigid_form(const ColorVector& c) {
  if (vector_sum(c) != 1) return false;
  Color run = 0;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    run ^= c[i];
    if (run == 3) return false;
  }
  return std::any_of(c.begin(), c.end(), [&](Color x) { return x != c[0]; });
}

}  // namespace

VectorClass classify_vector(const ColorVector& c) {
  for (Color x : c)
    if (x == 0) throw Error(ErrorKind::ZeroEntry, "vector has a zero entry");
  if (c.size() < 2 || !is_acceptable(c)) return VectorClass::Unacceptable;
  Color s = vector_sum(c);
  // Even permutation sending s to 1: the cyclic shift.
  std::array<Color, 3> even{}, odd{};
  int shift = 0;
  for (Color k = s; k != 1; k = color_next(k)) ++shift;
  for (Color a = 1; a <= 3; ++a) {
    Color img = a;
    for (int j = 0; j < shift; ++j) img = color_next(img);
    even[a - 1] = img;
  }
  // Odd permutation sending s to 1: fix s's image, swap the other two.
  for (Color a = 1; a <= 3; ++a) odd[a - 1] = a == s ? 1 : (even[a - 1] == 2 ? 3 : 2);
  if (rigid_form(permute_colors(c, even))) return VectorClass::PositiveRigid;
  if (rigid_form(permute_colors(c, odd))) return VectorClass::NegativeRigid;
  return VectorClass::Flexible;
}

std::vector<ColorVector> normalized_colorings(const BinaryTree& t) {
  if (t.is_trivial()) return {ColorVector{1}};
  size_t k = t.carets();
  std::vector<ColorVector> out;
  out.reserve(size_t{1} << (k - 1));
  SignAssignment s(k, 1);
  for (uint64_t m = 0; m < (uint64_t{1} << (k - 1)); ++m) {
    for (size_t i = 1; i < k; ++i) s[i] = (m >> (i - 1)) & 1 ? -1 : 1;
    out.push_back(vector_from_sign(t, s, 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColorVector> colorings_of_pair(const TreePair& p) {
  if (p.d.leaf_count() != p.r.leaf_count()) throw Error(ErrorKind::LengthMismatch, "pair trees differ in size");
  std::vector<ColorVector> out;
  for (auto& c : normalized_colorings(p.d))
    if (is_valid(p.r, c)) out.push_back(std::move(c));
  return out;
}

int8_t pattern_rigid(const Address& v) { return v.len % 2 == 0 ? 1 : -1; }
int8_t pattern_positive(const Address&) { return 1; }

ColorVector pattern_coloring(const Pattern& p, const BinaryTree& t) {
  SignAssignment s;
  for (const auto& v : t.internal()) s.push_back(p(v));
  return vector_from_sign(t, s, 1);
}

bool is_pattern_compatible(const TreePair& p, const Pattern& pat) {
  return pattern_coloring(pat, p.d) == pattern_coloring(pat, p.r);
}

}  // namespace tc
