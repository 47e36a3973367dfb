#include "treecolor/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "treecolor/assoc.hpp"
#include "treecolor/enumeration.hpp"
#include "treecolor/error.hpp"
#include "treecolor/fixtures.hpp"
#include "treecolor/maps.hpp"
#include "treecolor/paths.hpp"

namespace tc {

namespace {

// Collects failures; the first few are kept for the report.
struct Tally {
  uint64_t checks = 0;
  uint64_t failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (++failures <= 3) notes.push_back(what());
  }
  SuiteResult result(const std::string& name, const std::string& summary) const {
    std::string detail = summary + " (" + std::to_string(checks) + " checks";
    if (failures) detail += ", " + std::to_string(failures) + " failed";
    detail += ")";
    for (const auto& n : notes) detail += "; " + n;
    return {name, failures == 0, detail};
  }
};

std::vector<ColorVector> all_vectors(int n) {
  std::vector<ColorVector> out;
  ColorVector c(n, 1);
  for (;;) {
    out.push_back(c);
    int i = n - 1;
    while (i >= 0 && c[i] == 3) c[i--] = 1;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

bool valid_by_prefix(const TreeTable& tab, size_t row, const std::vector<Color>& p) {
  for (const auto& iv : tab.shadows[row])
    if ((p[iv.hi] ^ p[iv.lo - 1]) == 0) return false;
  return true;
}

std::vector<Color> prefix_xor(const ColorVector& c) {
  std::vector<Color> p(c.size() + 1, 0);
  for (size_t i = 0; i < c.size(); ++i) p[i + 1] = p[i] ^ c[i];
  return p;
}

int size_or(const SuiteOptions& opt, int fallback) { return opt.size >= 0 ? opt.size : fallback; }

// ---------------------------------------------------------------------------

SuiteResult catalan_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 12);
  Tally t;
  for (int n = 0; n <= max; ++n) {
    size_t got = all_trees(n).size();
    t.check(got == catalan(n), [&] { return "n=" + std::to_string(n) + " gives " + std::to_string(got); });
  }
  return t.result("catalan", "tree counts are Catalan numbers for n <= " + std::to_string(max));
}

SuiteResult pair_count_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 7);
  Tally t;
  for (int n = 1; n <= max; ++n)
    for (const auto& tree : all_trees(n)) {
      size_t got = colorings_of_pair({tree, tree}).size();
      t.check(got == (size_t{1} << (n - 1)), [&] { return tree.str() + " has " + std::to_string(got); });
    }
  return t.result("pair-count", "(T,T) has 2^(n-1) colorings for n <= " + std::to_string(max));
}

SuiteResult acceptability_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 9);
  Tally t;
  for (int len = 2; len <= max; ++len) {
    const TreeTable& tab = tree_table(len - 2);
    for (const auto& c : all_vectors(len)) {
      auto p = prefix_xor(c);
      bool brute = false;
      for (size_t r = 0; r < tab.trees.size() && !brute; ++r) brute = valid_by_prefix(tab, r, p);
      bool acc = is_acceptable(c);
      t.check(acc == brute, [&] { return vector_str(c) + " characterization " + std::to_string(acc); });
      if (acc) {
        auto w = acceptable_witness(c);
        t.check(w && is_valid(*w, c), [&] { return vector_str(c) + " witness invalid"; });
      }
    }
  }
  return t.result("acceptability", "characterization matches tree search for lengths <= " + std::to_string(max));
}

SuiteResult trichotomy_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 8);
  Tally t;
  for (int len = 2; len <= max; ++len) {
    const TreeTable& tab = tree_table(len - 2);
    for (const auto& c : all_vectors(len)) {
      VectorClass k = classify_vector(c);
      if (k == VectorClass::Unacceptable) continue;
      auto p = prefix_xor(c);
      std::set<int> seen;
      for (size_t r = 0; r < tab.trees.size(); ++r) {
        if (!valid_by_prefix(tab, r, p)) continue;
        const BinaryTree& tree = tab.trees[r];
        auto s = signs_from_vector(tree, c);
        bool alternating = true;
        for (size_t i = 1; i < s.size(); ++i)
          if (s[i] == s[tree.internal_index(tree.internal()[i].parent())]) alternating = false;
        seen.insert(!alternating ? 2 : (s[0] > 0 ? 0 : 1));
      }
      t.check(seen.size() == 1 && *seen.begin() == static_cast<int>(k),
              [&] { return vector_str(c) + " class is not uniform"; });
      ColorGraph g = color_graph(c, len);
      t.check(is_connected_or_edgeless(g), [&] { return vector_str(c) + " graph is disconnected with edges"; });
    }
  }
  return t.result("trichotomy", "uniform class and connected-or-edgeless graph for lengths <= " + std::to_string(max));
}

// Every walk of up to max_len rotations on addresses of length <= 3 from
// every tree with at most five carets, and from the complete depth-three
// tree. Survivors are the sign assignments of the start tree still valid.
struct SweepStats {
  uint64_t words = 0;
  uint64_t prime_words = 0;
  Tally balance;
  Tally primes;
};

const SweepStats& balance_sweep(int max_len) {
  static std::mutex mu;
  static std::map<int, SweepStats> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(max_len); it != cache.end()) return it->second;
  SweepStats st;
  std::vector<BinaryTree> starts;
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : all_trees(n)) starts.push_back(t);
  starts.push_back(BinaryTree::from_addresses({"e", "0", "1", "00", "01", "10", "11"}));

  for (const auto& d : starts) {
    size_t k = d.carets();
    struct Survivor {
      SignedTree st;
      bool root_positive;
    };
    std::vector<Survivor> all;
    for (uint64_t m = 0; m < (uint64_t{1} << k); ++m) {
      SignedTree s{d, SignAssignment(k)};
      for (size_t i = 0; i < k; ++i) s.signs[i] = (m >> i) & 1 ? -1 : 1;
      all.push_back({s, s.signs[0] > 0});
    }
    Word w;
    std::function<void(const BinaryTree&, const std::vector<Survivor>&)> walk = [&](const BinaryTree& cur,
                                                                                     const std::vector<Survivor>& alive) {
      if (!w.empty()) {
        ++st.words;
        SignStructure ss = sign_structure(w);
        Balance b = is_balanced(ss);
        st.balance.check(b.balanced == !alive.empty(),
                         [&] { return "word '" + word_str(w) + "' from " + d.str() + " balance mismatch"; });
        if (b.balanced) {
          size_t plus = 0;
          for (const auto& s : alive) plus += s.root_positive;
          size_t expect = size_t{1} << (components_over(ss, d) - 1);
          st.balance.check(plus == expect && compatible_colorings(w, d).size() == plus,
                           [&] { return "word '" + word_str(w) + "' from " + d.str() + " count mismatch"; });
        }
        // (T, Tw) for the support tree T of the sign structure.
        BinaryTree tw = ss.support;
        bool applies = true;
        for (const auto& s : w) {
          if (!can_rotate(tw, s)) {
            applies = false;
            break;
          }
          tw = rotate(tw, s);
        }
        if (applies && ss.support.carets() > 0 && is_prime({ss.support, tw})) {
          ++st.prime_words;
          st.primes.check(b.components == 1,
                          [&] { return "word '" + word_str(w) + "' has prime ends but disconnected sign structure"; });
        }
      }
      if (static_cast<int>(w.size()) == max_len) return;
      for (const auto& s : rotations_at(cur)) {
        if (s.u.len > 3) continue;
        std::vector<Survivor> next;
        for (const auto& a : alive)
          if (is_signed_rotation_valid(a.st, s)) next.push_back({apply_signed_rotation(a.st, s), a.root_positive});
        w.push_back(s);
        walk(rotate(cur, s), next);
        w.pop_back();
      }
    };
    walk(d, all);
  }
  return cache.emplace(max_len, std::move(st)).first->second;
}

SuiteResult balance_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 6);
  const SweepStats& st = balance_sweep(max);
  return st.balance.result("balance", "balance iff a sign assignment survives, and 2^(p-1) colorings, over " +
                                          std::to_string(st.words) + " walks of <= " + std::to_string(max) +
                                          " rotations");
}

bool balanced(const Word& w) { return is_balanced(sign_structure(w)).balanced; }

SuiteResult named_paths_suite(const SuiteOptions& opt) {
  int addr = size_or(opt, 3);
  Tally t;
  auto expect = [&](const char* word, bool want) {
    t.check(balanced(parse_word(word)) == want,
            [&] { return std::string("'") + word + "' should be " + (want ? "balanced" : "unbalanced"); });
  };
  expect("0 e 1", false);
  expect("0 e", true);
  expect("e e ~1", false);
  expect("e e 1 ~11", true);
  expect("e 1 1 1 ~e", false);
  expect("~0 e ~0 e ~0 e", true);
  TreePair g = word_to_pair(parse_word("e 1 1 1 ~e"));
  t.check(word_to_pair(parse_word("~0 e ~0 e ~0 e")) == g, [] { return std::string("the two words differ as elements"); });

  // Meet in the middle: every word of length <= 5 is u v with |u| <= 3 and
  // |v| <= 2, where v is looked up by its element.
  std::vector<RotationSymbol> symbols;
  std::vector<Address> addrs{Address::root()};
  for (size_t i = 0; i < addrs.size(); ++i)
    if (addrs[i].len < addr) {
      addrs.push_back(addrs[i].child(0));
      addrs.push_back(addrs[i].child(1));
    }
  for (const auto& a : addrs) {
    symbols.push_back({a, false});
    symbols.push_back({a, true});
  }
  std::vector<std::vector<Word>> by_len(4);
  by_len[0].push_back({});
  for (int len = 1; len <= 3; ++len)
    for (const auto& w : by_len[len - 1])
      for (const auto& s : symbols) {
        Word x = w;
        x.push_back(s);
        by_len[len].push_back(std::move(x));
      }
  std::map<TreePair, std::vector<const Word*>> short_words;
  for (int len = 0; len <= 2; ++len)
    for (const auto& w : by_len[len]) short_words[word_to_pair(w)].push_back(&w);

  uint64_t equivalent = 0, balanced_equivalent = 0;
  auto consider = [&](const Word& w) {
    ++equivalent;
    if (balanced(w)) {
      ++balanced_equivalent;
      t.check(false, [&] { return "balanced equivalent '" + word_str(w) + "'"; });
    }
  };
  for (int len = 0; len <= 2; ++len)
    for (const auto& w : by_len[len])
      if (word_to_pair(w) == g) consider(w);
  for (const auto& u : by_len[3]) {
    TreePair rest = reduce(multiply(invert(word_to_pair(u)), g));
    auto it = short_words.find(rest);
    if (it == short_words.end()) continue;
    for (const Word* v : it->second) {
      Word w = u;
      w.insert(w.end(), v->begin(), v->end());
      consider(w);
    }
  }
  t.check(equivalent > 0, [] { return std::string("the word itself was not found"); });
  return t.result("named-paths", "named words; " + std::to_string(equivalent) +
                                     " words of <= 5 symbols on addresses of length <= " + std::to_string(addr) +
                                     " represent the same element, " + std::to_string(balanced_equivalent) +
                                     " balanced");
}

SuiteResult prime_connected_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 6);
  const SweepStats& st = balance_sweep(max);
  Tally t = st.primes;
  SignedSequence nine = signed_sequence("nine-rotations");
  Word w = replay_word(nine.trees);
  SignedTree cur = nine.trees.front();
  for (size_t i = 0; i < w.size(); ++i) {
    t.check(is_signed_rotation_valid(cur, w[i]), [&] { return "step " + std::to_string(i) + " invalid"; });
    cur = apply_signed_rotation(cur, w[i]);
    t.check(cur == nine.trees[i + 1], [&] { return "step " + std::to_string(i) + " lands elsewhere"; });
  }
  SignStructure ss = sign_structure(w);
  t.check(is_balanced(ss).balanced, [] { return std::string("nine-rotation word unbalanced"); });
  t.check(components_over(ss, nine.trees.front().tree) == 1,
          [] { return std::string("nine-rotation sign structure disconnected"); });
  TreePair ends = reduce({nine.trees.front().tree, nine.trees.back().tree});
  t.check(!is_prime(ends), [] { return std::string("nine-rotation ends are prime"); });
  return t.result("prime-connected", std::to_string(st.prime_words) +
                                         " walks with prime (T, Tw) over the support tree T all have connected "
                                         "sign structure; "
                                         "non-prime nine-rotation path has connected sign structure");
}

SuiteResult recurrences_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 9);
  Tally t;
  for (int n = 1; n <= max; ++n) {
    t.check(count_acceptable(n) == count_acceptable_brute(n), [&] { return "c(" + std::to_string(n) + ")"; });
    t.check(count_rigid(n) == count_rigid_brute(n), [&] { return "r(" + std::to_string(n) + ")"; });
    t.check(count_flexible(n) == count_flexible_brute(n), [&] { return "f(" + std::to_string(n) + ")"; });
  }
  int64_t sum = 0;
  for (int n = 0; n <= 12; ++n) {
    sum += jacobsthal(n);
    t.check(jacobsthal(n) == jacobsthal_closed(n), [&] { return "J(" + std::to_string(n) + ")"; });
    if (n >= 1) t.check(count_rigid(n) == sum, [&] { return "r(" + std::to_string(n) + ") partial sum"; });
  }
  return t.result("recurrences", "c, r, f match brute force for n <= " + std::to_string(max) +
                                     " and r is the Jacobsthal partial sum for n <= 12");
}

SuiteResult chromatic_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 12);
  Tally t;
  for (Family f : {Family::W, Family::Theta, Family::Xi, Family::Y, Family::Nabla})
    for (int n = std::max(6, family_min_n(f)); n <= max; ++n) {
      uint64_t count = count_vertex_colorings(family_graph(f, n).graph(), 4);
      t.check(count % 24 == 0 && static_cast<int64_t>(count / 24) == closed_form(f, n), [&] {
        return std::string(family_name(f)) + "_" + std::to_string(n) + " counts " + std::to_string(count) + "/24";
      });
    }
  return t.result("chromatic", "closed forms match 4-coloring counts for n <= " + std::to_string(max));
}

SuiteResult mi_search_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 8);
  Tally t;
  std::ostringstream seen;
  for (int n = 5; n <= max; ++n) {
    CountReport rep = max_coloring_search(n, opt.jobs, std::max(max, mi_search_bound()));
    seen << " n=" << n << ":";
    for (int i = 1; i <= 4; ++i) seen << (i > 1 ? "," : "") << rep.m(i);
    for (int i = 1; i <= 4; ++i) {
      int64_t want = conjectured_m(i, n);
      if (want == 0) continue;
      t.check(rep.m(i) == want, [&] {
        return "m_" + std::to_string(i) + "(" + std::to_string(n) + ") = " + std::to_string(rep.m(i)) +
               ", formula " + std::to_string(want);
      });
    }
    t.check(is_isomorphic(pair_to_dual(rep.ranks.front().witness).graph(), biwheel(n).graph()),
            [&] { return "m_1(" + std::to_string(n) + ") witness is not the biwheel"; });
  }
  return t.result("mi-search", "m_1..m_4 against the conjectured formulas;" + seen.str());
}

SuiteResult long_paths_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 4);
  Tally t;
  for (int m = 1; m <= max; ++m)
    for (int n = 1; n <= max; ++n) {
      ColorVector c(m, 1);
      c.push_back(2);
      c.insert(c.end(), n, 1);
      int got = graph_diameter(color_graph(c, static_cast<int>(c.size())));
      t.check(got == m * n, [&] { return vector_str(c) + " diameter " + std::to_string(got); });
    }
  return t.result("long-paths", "diameter of the 1^m 2 1^n graph is mn for m, n <= " + std::to_string(max));
}

SuiteResult separation_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 7);
  Tally t;
  Separation sep = face_union_separates(4, {{1, 5}, {2, 4}, {3, 6}, {4, 6}});
  t.check(sep.separates && sep.complement.size() == 6 && sep.components == 2 &&
              std::count(sep.component.begin(), sep.component.end(), 0) == 3,
          [] { return std::string("fixture does not split 3/3"); });
  uint64_t flexible = 0;
  for (int d = 2; d <= max; ++d)
    for (const auto& c : orbit_representatives(d + 2)) {
      if (classify_vector(c) != VectorClass::Flexible) continue;
      ++flexible;
      t.check(!face_union_separates(d, zero_intervals(c)).separates,
              [&] { return vector_str(c) + " zero set separates"; });
    }
  return t.result("separation", "fixture splits 3/3; none of " + std::to_string(flexible) +
                                    " flexible zero sets separates for d <= " + std::to_string(max));
}

SuiteResult surfaces_suite(const SuiteOptions&) {
  Tally t;
  VTriple torus = fixture_triple("torusK7");
  auto cs = v_triple_colorings(torus);
  ColorVector c = normalize_for(torus.d, parse_vector("13122313"));
  t.check(std::find(cs.begin(), cs.end(), c) != cs.end(), [] { return std::string("torusK7 rejects 13122313"); });
  t.check(v_triple_colorings(fixture_triple("noColorV")).empty(), [] { return std::string("noColorV is colorable"); });
  Graph pet = triple_to_map(fixture_triple("petersenRP2")).graph();
  t.check(is_isomorphic(pet, petersen_graph()), [] { return std::string("petersenRP2 is not the Petersen graph"); });
  t.check(count_edge_3_colorings(pet) == 0, [] { return std::string("Petersen graph has an edge 3-coloring"); });
  TripleCensus census = v_triple_census(6);
  return t.result("surfaces", "fixtures behave; six-leaf triples: " + std::to_string(census.uncolorable) + " of " +
                                  std::to_string(census.total) +
                                  " uncolorable (3,584 / 13,800 not reproduced: no convention gives that universe)");
}

SuiteResult zero_extremes_suite(const SuiteOptions& opt) {
  int max = size_or(opt, 9);
  Tally t;
  for (int n = 1; n <= 12; ++n) {
    ColorVector c(n, 1);
    c.push_back(2);
    t.check(zero_intervals(c).size() == static_cast<size_t>(n * n / 4), [&] { return vector_str(c); });
    if (n % 2 == 0) {
      ColorVector s(n / 2, 1);
      s.push_back(2);
      s.insert(s.end(), n / 2, 1);
      t.check(zero_intervals(s).size() == static_cast<size_t>(n * n / 8), [&] { return vector_str(s); });
    }
  }
  std::ostringstream mins;
  for (int n = 1; n <= max; ++n) {
    ZeroExtremes z = zero_set_extremes(n);
    t.check(z.max == static_cast<size_t>(n * n / 4), [&] { return "max at n=" + std::to_string(n); });
    mins << (n > 1 ? "," : "") << z.min;
  }
  return t.result("zero-extremes", "1^n 2 and 1^k 2 1^k sizes for n <= 12, exhaustive max for n <= " +
                                       std::to_string(max) + "; minima " + mins.str());
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<SuiteInfo, SuiteFn>>& registry() {
  static const std::vector<std::pair<SuiteInfo, SuiteFn>> r = {
      {{"catalan", "tree counts are Catalan numbers", 12}, catalan_suite},
      {{"pair-count", "(T,T) has 2^(n-1) normalized colorings", 7}, pair_count_suite},
      {{"acceptability", "acceptability characterization vs tree search", 9}, acceptability_suite},
      {{"trichotomy", "uniform classes, connected-or-edgeless color graphs", 8}, trichotomy_suite},
      {{"balance", "balance iff sign consistency, 2^(p-1) colorings", 6}, balance_suite},
      {{"named-paths", "named words and shortest balanced equivalent", 3}, named_paths_suite},
      {{"prime-connected", "prime ends give connected sign structures", 6}, prime_connected_suite},
      {{"recurrences", "vector counts and Jacobsthal sums", 9}, recurrences_suite},
      {{"chromatic", "family closed forms vs 4-coloring counts", 12}, chromatic_suite},
      {{"mi-search", "m_1..m_4 conjecture", 8}, mi_search_suite},
      {{"long-paths", "diameter of 1^m 2 1^n graphs", 4}, long_paths_suite},
      {{"separation", "separating intervals and flexible zero sets", 7}, separation_suite},
      {{"surfaces", "torus, V-triple and projective plane fixtures", 0}, surfaces_suite},
      {{"zero-extremes", "zero set sizes and extremes", 9}, zero_extremes_suite},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> out = [] {
    std::vector<SuiteInfo> v;
    for (const auto& [info, fn] : registry()) v.push_back(info);
    return v;
  }();
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& [info, fn] : registry())
    if (info.name == name) return fn(opt);
  throw Error(ErrorKind::NoMatch, "unknown suite '" + name + "'");
}

}  // namespace tc
