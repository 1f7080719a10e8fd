#pragma once

#include <optional>
#include <string>

#include "tlwb/rational.hpp"

namespace tlwb {

// Interval over time differences with non-negative integer endpoints; the
// right endpoint may be infinite (and is then necessarily open). Construction
// rejects empty intervals: lo < hi, or lo == hi with both ends closed.
struct Interval {
  long long lo = 0;
  std::optional<long long> hi;  // nullopt means unbounded
  bool lo_open = false;
  bool hi_open = true;

  // Factories validate; use these instead of aggregate construction.
  static Interval make(long long lo, bool lo_open, std::optional<long long> hi,
                       bool hi_open);
  static Interval closed(long long lo, long long hi);          // [lo,hi]
  static Interval open(long long lo, long long hi);            // (lo,hi)
  static Interval closed_open(long long lo, long long hi);     // [lo,hi)
  static Interval open_closed(long long lo, long long hi);     // (lo,hi]
  static Interval singleton(long long c);                      // [c,c]
  static Interval unbounded(long long lo, bool lo_open);       // <lo,inf)

  bool contains(const Rational& d) const;
  bool is_singular() const { return hi && lo == *hi; }
  bool is_bounded() const { return hi.has_value(); }
  // Largest endpoint constant; the infinite end contributes nothing.
  long long max_constant() const { return hi ? *hi : lo; }

  bool operator==(const Interval& o) const;

  // Text form as parsed and printed: "[0,2)", "(1,inf)", "[3,3]".
  std::string str() const;
  static Interval parse(const std::string& text);
};

}  // namespace tlwb
