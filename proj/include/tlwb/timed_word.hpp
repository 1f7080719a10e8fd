#pragma once

#include <string>
#include <vector>

#include "tlwb/rational.hpp"

namespace tlwb {

struct Event {
  std::string letter;
  Rational time;
};

// Finite non-empty timed word with weakly monotonic, non-negative
// timestamps. Positions are 1-based throughout the library, matching the
// convention that a formula's language is its truth at position 1.
class TimedWord {
 public:
  // Validates letters, non-negativity and monotonicity; throws DomainError.
  static TimedWord from_events(std::vector<Event> events);

  std::size_t size() const { return events_.size(); }
  const Event& at(std::size_t pos) const;  // 1-based, throws DomainError
  const std::string& letter(std::size_t pos) const { return at(pos).letter; }
  const Rational& time(std::size_t pos) const { return at(pos).time; }

  // Weak monotonicity always holds; this reports whether timestamps are in
  // fact strictly increasing.
  bool strictly_monotonic() const { return strict_; }

  // True when the first event happens at time 0. TPTL and TTL language
  // membership is only defined over such words.
  bool anchored_zero() const { return anchored_; }

  std::vector<std::string> untime() const;
  // Letters concatenated, convenient when all letters are single characters.
  std::string untime_joined() const;

 private:
  std::vector<Event> events_;
  bool strict_ = true;
  bool anchored_ = false;
};

// True for identifiers of the shape [a-z][a-z0-9_]*, the common alphabet of
// word letters and formula atoms.
bool valid_letter(const std::string& s);

// Text format: one "<letter> <time>" pair per line; '#' starts a comment;
// blank lines are skipped. Times are decimals ("1.5") or fractions ("3/2").
TimedWord parse_word(const std::string& text);

// Inverse of parse_word; times always serialize as "p/q".
std::string serialize_word(const TimedWord& w);

}  // namespace tlwb
