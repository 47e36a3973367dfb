#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treecolor/coloring.hpp"
#include "treecolor/thompson.hpp"

namespace tc {

// t(0)=a, t(1)=b, t(n+1) = p t(n) + q t(n-1) + k. Throws Overflow.
struct RecurrenceSpec {
  int64_t p = 0, q = 0, k = 0, a = 0, b = 0;
};
int64_t recurrence(const RecurrenceSpec& s, int n);
std::vector<int64_t> recurrence_terms(const RecurrenceSpec& s, int count);
int64_t jacobsthal(int n);
int64_t jacobsthal_closed(int n);  // (2^n - (-1)^n) / 3

// Counts of {1,2,3}-vectors of length n+1 modulo permuting the colors.
int64_t count_acceptable(int n);
int64_t count_rigid(int n);
int64_t count_flexible(int n);
int64_t count_acceptable_brute(int n);
int64_t count_rigid_brute(int n);
int64_t count_flexible_brute(int n);

// One vector per S3 orbit: first entry 1, first entry different from it is 2.
std::vector<ColorVector> orbit_representatives(int length);

// Largest size handled by max_coloring_search; MAX_COLOR_SEARCH_N overrides,
// never above 12.
int mi_search_bound();

struct CountRank {
  int64_t count = 0;
  TreePair witness;    // first pair in table order
  int64_t pairs = 0;   // prime pairs attaining the count
};
struct CountReport {
  int n = 0;  // vertices of the triangulation, carets + 2
  std::vector<CountRank> ranks;  // decreasing counts
  int64_t m(int i) const;  // 1-based; 0 when absent
  std::string csv() const;
};
// Colorings modulo S3 of every prime pair with n-2 carets. jobs <= 0 means
// hardware concurrency. Throws BoundExceeded above bound.
CountReport max_coloring_search(int n, int jobs = 1, int bound = mi_search_bound());
// The conjectured m_1..m_4; 0 where the formula is not claimed.
int64_t conjectured_m(int i, int n);

struct ZeroExtremes {
  int n = 0;
  size_t max = 0, min = 0;
  ColorVector max_witness, min_witness;
};
// Over acceptable vectors of length n+1. Throws BoundExceeded for n > 14.
ZeroExtremes zero_set_extremes(int n);

}  // namespace tc
