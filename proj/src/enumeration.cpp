#include "treecolor/enumeration.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

#include "treecolor/assoc.hpp"
#include "treecolor/error.hpp"

namespace tc {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "recurrence overflows 64 bits");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "recurrence overflows 64 bits");
  return r;
}

void require_nonnegative(int n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "index must be non-negative");
}

}  // namespace

std::vector<int64_t> recurrence_terms(const RecurrenceSpec& s, int count) {
  std::vector<int64_t> t;
  for (int n = 0; n < count; ++n) {
    if (n == 0)
      t.push_back(s.a);
    else if (n == 1)
      t.push_back(s.b);
    else
      t.push_back(checked_add(checked_add(checked_mul(s.p, t[n - 1]), checked_mul(s.q, t[n - 2])), s.k));
  }
  return t;
}

int64_t recurrence(const RecurrenceSpec& s, int n) {
  require_nonnegative(n);
  return recurrence_terms(s, n + 1).back();
}

int64_t jacobsthal(int n) { return recurrence({1, 2, 0, 0, 1}, n); }

int64_t jacobsthal_closed(int n) {
  require_nonnegative(n);
  if (n > 62) throw Error(ErrorKind::Overflow, "Jacobsthal closed form overflows 64 bits");
  return ((int64_t{1} << n) - (n % 2 == 0 ? 1 : -1)) / 3;
}

int64_t count_acceptable(int n) {
  require_nonnegative(n);
  return recurrence({2, 3, 1, 0, 1}, n);
}

int64_t count_rigid(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "rigid count starts at n = 1");
  // r(1)=1, r(2)=2 extends back to r(0)=0.
  return recurrence({1, 2, 1, 0, 1}, n);
}

int64_t count_flexible(int n) { return count_acceptable(n) - count_rigid(n); }

std::vector<ColorVector> orbit_representatives(int length) {
  std::vector<ColorVector> out;
  if (length <= 0) return out;
  ColorVector c(length, 1);
  // Entries after the first non-1 entry are free; before it they are 1.
  std::function<void(int, bool)> go = [&](int i, bool seen2) {
    if (i == length) {
      out.push_back(c);
      return;
    }
    for (Color x = 1; x <= 3; ++x) {
      if (!seen2 && x == 3) continue;
      c[i] = x;
      go(i + 1, seen2 || x == 2);
    }
  };
  c[0] = 1;
  go(1, false);
  return out;
}

namespace {

int64_t count_class(int n, bool (*keep)(VectorClass)) {
  require_nonnegative(n);
  if (n > 16) throw Error(ErrorKind::BoundExceeded, "brute-force counts limited to n <= 16");
  int64_t total = 0;
  for (const auto& c : orbit_representatives(n + 1))
    if (c.size() >= 2 && keep(classify_vector(c))) ++total;
  return total;
}

bool is_rigid_class(VectorClass k) { return k == VectorClass::PositiveRigid || k == VectorClass::NegativeRigid; }

}  // namespace

int64_t count_acceptable_brute(int n) {
  return count_class(n, [](VectorClass k) { return k != VectorClass::Unacceptable; });
}

int64_t count_rigid_brute(int n) { return count_class(n, is_rigid_class); }

int64_t count_flexible_brute(int n) {
  return count_class(n, [](VectorClass k) { return k == VectorClass::Flexible; });
}

// ---------------------------------------------------------------------------

int mi_search_bound() {
  if (const char* env = std::getenv("MAX_COLOR_SEARCH_N")) {
    try {
      return std::clamp(std::stoi(env), 2, 12);
    } catch (const std::exception&) {
    }
  }
  return 8;
}

int64_t CountReport::m(int i) const {
  return i >= 1 && i <= static_cast<int>(ranks.size()) ? ranks[i - 1].count : 0;
}

std::string CountReport::csv() const {
  std::string out = "n,rank,count,witness_d,witness_r,pairs\n";
  for (size_t i = 0; i < ranks.size(); ++i) {
    const auto& r = ranks[i];
    out += std::to_string(n) + "," + std::to_string(i + 1) + "," + std::to_string(r.count) + ",\"" +
           r.witness.d.str() + "\",\"" + r.witness.r.str() + "\"," + std::to_string(r.pairs) + "\n";
  }
  return out;
}

CountReport max_coloring_search(int n, int jobs, int bound) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "search needs n >= 3 (one caret)");
  if (n > bound || n > 12)
    throw Error(ErrorKind::BoundExceeded, "n = " + std::to_string(n) + " exceeds the search bound " + std::to_string(bound));
  const int leaves = n - 1;
  const TreeTable& tab = tree_table(leaves - 2);
  const size_t rows = tab.trees.size();

  // Proper shadow intervals of each tree as a bitmask; a pair is prime iff
  // the masks are disjoint.
  using Mask = std::bitset<13 * 13>;
  std::vector<Mask> mask(rows);
  for (size_t i = 0; i < rows; ++i)
    for (const auto& iv : tab.shadows[i])
      if (iv.length() < leaves) mask[i].set(iv.lo * 13 + iv.hi);

  // Valid rows per orbit representative.
  std::vector<std::vector<int>> valid;
  for (const auto& c : orbit_representatives(leaves)) {
    std::vector<Color> p(leaves + 1, 0);
    for (int i = 0; i < leaves; ++i) p[i + 1] = p[i] ^ c[i];
    std::vector<int> rowsv;
    for (size_t r = 0; r < rows; ++r) {
      bool ok = true;
      for (const auto& iv : tab.shadows[r])
        if ((p[iv.hi] ^ p[iv.lo - 1]) == 0) {
          ok = false;
          break;
        }
      if (ok) rowsv.push_back(static_cast<int>(r));
    }
    if (!rowsv.empty()) valid.push_back(std::move(rowsv));
  }

  // counter[d * rows + r]; each worker owns a band of D rows.
  std::vector<uint16_t> counter(rows * rows, 0);
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(rows));
  auto work = [&](size_t lo, size_t hi) {
    for (const auto& vs : valid) {
      auto first = std::lower_bound(vs.begin(), vs.end(), static_cast<int>(lo));
      for (auto it = first; it != vs.end() && *it < static_cast<int>(hi); ++it) {
        uint16_t* row = &counter[static_cast<size_t>(*it) * rows];
        for (int r : vs) ++row[r];
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(work, rows * j / jobs, rows * (j + 1) / jobs);
  for (auto& t : pool) t.join();

  std::map<int64_t, CountRank, std::greater<>> by_count;
  for (size_t d = 0; d < rows; ++d)
    for (size_t r = 0; r < rows; ++r) {
      uint16_t k = counter[d * rows + r];
      if (k == 0 || (mask[d] & mask[r]).any()) continue;
      auto [it, fresh] = by_count.try_emplace(k);
      if (fresh) it->second = {k, {tab.trees[d], tab.trees[r]}, 0};
      ++it->second.pairs;
    }
  CountReport out;
  out.n = n;
  for (auto& [k, rank] : by_count) out.ranks.push_back(rank);
  return out;
}

int64_t conjectured_m(int i, int n) {
  bool even = n % 2 == 0;
  switch (i) {
    case 1: return n >= 5 ? jacobsthal(n - 3) + (even ? 1 : 0) : 0;
    case 2: return n >= 7 ? jacobsthal(n - 4) + (even ? 7 : 5) : 0;
    case 3: return n >= 7 ? conjectured_m(1, n - 1) : 0;  // J(n-4) + (0,1)
    case 4: return n >= 7 ? jacobsthal(n - 4) - (even ? 1 : 2) : 0;
  }
  return 0;
}

ZeroExtremes zero_set_extremes(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "zero set extremes need n >= 1");
  if (n > 14) throw Error(ErrorKind::BoundExceeded, "zero set extremes limited to n <= 14");
  ZeroExtremes out;
  out.n = n;
  bool first = true;
  for (const auto& c : orbit_representatives(n + 1)) {
    if (!is_acceptable(c)) continue;
    size_t z = zero_intervals(c).size();
    if (first || z > out.max) {
      out.max = z;
      out.max_witness = c;
    }
    if (first || z < out.min) {
      out.min = z;
      out.min_witness = c;
    }
    first = false;
  }
  return out;
}

}  // namespace tc
