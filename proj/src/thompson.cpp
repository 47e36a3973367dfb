#include "treecolor/thompson.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "treecolor/error.hpp"

namespace tc {

TreePair TreePair::make(BinaryTree d, BinaryTree r) {
  if (d.leaf_count() != r.leaf_count())
    throw Error(ErrorKind::LengthMismatch, "trees " + d.str() + " and " + r.str() + " differ in size");
  return {std::move(d), std::move(r)};
}

TreePair TreePair::parse(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
    if (!j.contains("d") || !j.contains("r")) throw Error(ErrorKind::Parse, "pair needs \"d\" and \"r\"");
    auto side = [](const nlohmann::json& x) {
      return x.is_string() ? BinaryTree::parse(x.get<std::string>()) : BinaryTree::parse(x.dump());
    };
    return make(side(j["d"]), side(j["r"]));
  }
  // "(D, R)": strip the outer parentheses and split at the comma.
  size_t comma = text.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorKind::Parse, "pair text needs a comma");
  size_t open = text.find('(');
  size_t close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || open > comma || close < comma)
    throw Error(ErrorKind::Parse, "pair text must look like (D, R)");
  return make(BinaryTree::parse(text.substr(open + 1, comma - open - 1)),
              BinaryTree::parse(text.substr(comma + 1, close - comma - 1)));
}

std::string TreePair::json() const {
  return nlohmann::json{{"d", nlohmann::json::parse(d.json())}, {"r", nlohmann::json::parse(r.json())}}.dump();
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) w.push_back(RotationSymbol::parse(tok));
  return w;
}

std::string word_str(const Word& w) {
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += s.str();
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

namespace {

// Index i such that leaves i and i+1 form an exposed caret, per leaf position.
std::vector<int> exposed_positions(const BinaryTree& t) {
  std::vector<int> out;
  auto ls = t.leaves();
  for (size_t i = 0; i + 1 < ls.size(); ++i) {
    const auto& a = ls[i];
    const auto& b = ls[i + 1];
    if (a.len > 0 && a.len == b.len && a.bit(a.len - 1) == 0 && b.bit(b.len - 1) == 1 && a.parent() == b.parent())
      out.push_back(static_cast<int>(i));
  }
  return out;
}

BinaryTree remove_caret_at(const BinaryTree& t, int i) {
  Address v = t.leaves()[i].parent();
  std::vector<Address> in = t.internal();
  in.erase(std::find(in.begin(), in.end(), v));
  return BinaryTree::make(std::move(in));
}

}  // namespace

TreePair reduce(const TreePair& p) {
  TreePair cur = p;
  for (;;) {
    auto a = exposed_positions(cur.d);
    auto b = exposed_positions(cur.r);
    int hit = -1;
    for (int i : a)
      if (std::binary_search(b.begin(), b.end(), i)) {
        hit = i;
        break;
      }
    if (hit < 0) return cur;
    cur = {remove_caret_at(cur.d, hit), remove_caret_at(cur.r, hit)};
  }
}

TreePair expand_to(const TreePair& p, const BinaryTree& target) {
  auto rl = p.r.leaves();
  auto dl = p.d.leaves();
  BinaryTree d = p.d;
  for (size_t i = 0; i < rl.size(); ++i) {
    if (!target.is_internal(rl[i])) continue;
    d = attach_union(d, dl[i], subtree_at(target, rl[i]));
  }
  return {d, target};
}

TreePair multiply(const TreePair& a, const TreePair& b) {
  BinaryTree mid = tree_set_ops(a.r, b.d).unite;
  TreePair x = expand_to(a, mid);
  TreePair y = invert(expand_to(invert(b), mid));
  return {x.d, y.r};
}

TreePair invert(const TreePair& p) { return {p.r, p.d}; }

Address apply_element(const TreePair& p, const Address& v) {
  int idx = p.d.internal_index(v);
  if (idx >= 0) {
    auto di = p.d.internal_infix();
    auto ri = p.r.internal_infix();
    auto pos = std::find(di.begin(), di.end(), v) - di.begin();
    return ri[pos];
  }
  auto dl = p.d.leaves();
  auto rl = p.r.leaves();
  for (size_t i = 0; i < dl.size(); ++i)
    if (dl[i].is_prefix_of(v)) return rl[i].concat(v.suffix(dl[i].len));
  return v;  // unreachable: every address is internal or below a leaf
}

TreePair rotation_as_pair(const RotationSymbol& s) {
  TreePair p{vine_through(s.u.child(0)), vine_through(s.u.child(1))};
  return s.inverse ? invert(p) : p;
}

TreePair word_to_pair(const Word& w) {
  TreePair acc;
  for (const auto& s : w) acc = reduce(multiply(acc, rotation_as_pair(s)));
  return acc;
}

std::vector<BinaryTree> path_evaluate(const BinaryTree& t, const Word& w) {
  std::vector<BinaryTree> out{t};
  for (size_t i = 0; i < w.size(); ++i) {
    if (!can_rotate(out.back(), w[i]))
      throw Error(ErrorKind::PivotMissing,
                  "symbol " + std::to_string(i) + " (" + w[i].str() + ") at " + out.back().str(),
                  static_cast<long>(i));
    out.push_back(rotate(out.back(), w[i]));
  }
  return out;
}

BinaryTree path_end(const BinaryTree& t, const Word& w) {
  BinaryTree cur = t;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!can_rotate(cur, w[i]))
      throw Error(ErrorKind::PivotMissing, "symbol " + std::to_string(i) + " (" + w[i].str() + ")",
                  static_cast<long>(i));
    cur = rotate(cur, w[i]);
  }
  return cur;
}

const char* increase_name(Increase k) {
  switch (k) {
    case Increase::NonIncreasing: return "NonIncreasing";
    case Increase::MinimallyIncreasing: return "MinimallyIncreasing";
    case Increase::Increasing: return "Increasing";
  }
  return "?";
}

Increase classify_multiplication(const TreePair& p, const RotationSymbol& s) {
  BinaryTree v = rotation_as_pair(s).d;
  size_t missing = 0;
  for (const auto& a : v.internal())
    if (!p.r.is_internal(a)) ++missing;
  if (missing == 0) return Increase::NonIncreasing;
  return missing == 1 ? Increase::MinimallyIncreasing : Increase::Increasing;
}

bool is_right_vine(const BinaryTree& t) { return t == right_vine(static_cast<int>(t.carets())); }

bool is_positive(const TreePair& p) { return is_right_vine(p.r); }

bool is_prime_positive(const TreePair& p) {
  if (p.d.is_trivial() || !is_positive(p)) return false;
  return !p.d.is_internal(Address{1, 1});
}

bool parity_condition(const TreePair& p) {
  auto a = p.d.leaf_depths();
  auto b = p.r.leaf_depths();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if ((a[i] - b[i]) % 2 != 0) return false;
  return true;
}

TreePair deferment(const TreePair& p, const BinaryTree& host, const Address& leaf) {
  if (!host.is_leaf(leaf)) throw Error(ErrorKind::NotALeaf, leaf.str() + " is not a leaf of " + host.str());
  return {attach_union(host, leaf, p.d), attach_union(host, leaf, p.r)};
}

std::optional<Word> minimally_increasing_chain(const TreePair& target) {
  TreePair goal = reduce(target);
  if (!is_prime_positive(goal)) return std::nullopt;
  TreePair start = rotation_as_pair({Address::root(), false});
  Word syms;
  // Each step multiplies by a rotation at 1^j, adding one caret to D at leaf j+1.
  std::function<bool(const TreePair&)> dfs = [&](const TreePair& cur) -> bool {
    if (cur.d.carets() == goal.d.carets()) return cur == goal;
    int k = static_cast<int>(cur.r.carets());
    Address u;
    for (int j = 0; j < k; ++j, u = u.child(1)) {
      RotationSymbol s{u, false};
      if (classify_multiplication(cur, s) != Increase::MinimallyIncreasing) continue;
      TreePair next = multiply(cur, rotation_as_pair(s));
      if (!is_subtree(next.d, goal.d)) continue;
      syms.push_back(s);
      if (dfs(next)) return true;
      syms.pop_back();
    }
    return false;
  };
  if (!dfs(start)) return std::nullopt;
  return syms;
}

TreePair pair_dihedral(const TreePair& p, int k, bool reflect) {
  return {dihedral_apply(p.d, k, reflect), dihedral_apply(p.r, k, reflect)};
}

}  // namespace tc
