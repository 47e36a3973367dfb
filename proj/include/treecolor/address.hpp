#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace tc {

// A vertex of the infinite binary tree, named by its path from the child of
// the root.  The empty word is written "e".
struct Address {
  static constexpr int kMaxLen = 62;

  uint64_t bits = 0;  // low `len` bits, first step most significant
  uint8_t len = 0;

  static Address root() { return {}; }
  static Address parse(std::string_view s);

  Address child(int b) const;
  Address parent() const;
  Address prefix(int k) const;
  // Drops the first k steps.
  Address suffix(int k) const;
  Address concat(const Address& tail) const;

  int bit(int i) const { return static_cast<int>((bits >> (len - 1 - i)) & 1u); }
  bool empty() const { return len == 0; }

  // Non-strict prefix test: a.is_prefix_of(a) holds.
  bool is_prefix_of(const Address& o) const;
  bool is_proper_prefix_of(const Address& o) const { return len < o.len && is_prefix_of(o); }
  bool incomparable(const Address& o) const { return !is_prefix_of(o) && !o.is_prefix_of(*this); }

  // Key whose numeric order is the infix (left-right) order of vertices.
  uint64_t infix_key() const { return ((bits << 1) | 1u) << (kMaxLen - len); }

  std::string str() const;

  friend bool operator==(const Address&, const Address&) = default;
  // Breadth-first order: shorter first, then lexicographic.
  friend std::strong_ordering operator<=>(const Address& a, const Address& b) {
    if (auto c = a.len <=> b.len; c != 0) return c;
    return a.bits <=> b.bits;
  }
};

inline bool infix_less(const Address& a, const Address& b) { return a.infix_key() < b.infix_key(); }

}  // namespace tc

template <>
struct std::hash<tc::Address> {
  size_t operator()(const tc::Address& a) const noexcept {
    return std::hash<uint64_t>()(a.bits * 131u + a.len);
  }
};
