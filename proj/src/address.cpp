#include "treecolor/address.hpp"

#include "treecolor/error.hpp"

namespace tc {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotPrefixClosed: return "NotPrefixClosed";
    case ErrorKind::NotAVertex: return "NotAVertex";
    case ErrorKind::NotALeaf: return "NotALeaf";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NotLaminar: return "NotLaminar";
    case ErrorKind::WrongCardinality: return "WrongCardinality";
    case ErrorKind::PivotMissing: return "PivotMissing";
    case ErrorKind::NotEdgeDisjoint: return "NotEdgeDisjoint";
    case ErrorKind::SubtreeTooSmall: return "SubtreeTooSmall";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ImproperColoring: return "ImproperColoring";
    case ErrorKind::ZeroRoot: return "ZeroRoot";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotAVineColoring: return "NotAVineColoring";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Address Address::parse(std::string_view s) {
  if (s == "e" || s == "ε") return {};
  if (s.size() > static_cast<size_t>(kMaxLen)) throw Error(ErrorKind::Parse, "address too long");
  Address a;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw Error(ErrorKind::Parse, "bad address '" + std::string(s) + "'");
    a = a.child(ch - '0');
  }
  if (s.empty()) throw Error(ErrorKind::Parse, "empty address (use e)");
  return a;
}

Address Address::child(int b) const {
  if (len >= kMaxLen) throw Error(ErrorKind::Overflow, "address depth limit");
  return {(bits << 1) | static_cast<uint64_t>(b & 1), static_cast<uint8_t>(len + 1)};
}

Address Address::parent() const { return {bits >> 1, static_cast<uint8_t>(len - 1)}; }

Address Address::prefix(int k) const {
  return {bits >> (len - k), static_cast<uint8_t>(k)};
}

Address Address::suffix(int k) const {
  int rest = len - k;
  uint64_t mask = rest == 0 ? 0 : (~uint64_t{0} >> (64 - rest));
  return {bits & mask, static_cast<uint8_t>(rest)};
}

Address Address::concat(const Address& tail) const {
  if (len + tail.len > kMaxLen) throw Error(ErrorKind::Overflow, "address depth limit");
  return {(bits << tail.len) | tail.bits, static_cast<uint8_t>(len + tail.len)};
}

bool Address::is_prefix_of(const Address& o) const {
  if (len > o.len) return false;
  return (o.bits >> (o.len - len)) == bits;
}

std::string Address::str() const {
  if (len == 0) return "e";
  std::string s(len, '0');
  for (int i = 0; i < len; ++i) s[i] = static_cast<char>('0' + bit(i));
  return s;
}

}  // namespace tc
