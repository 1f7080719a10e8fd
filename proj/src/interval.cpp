#include "tlwb/interval.hpp"

#include <cctype>

#include "tlwb/errors.hpp"

namespace tlwb {

Interval Interval::make(long long lo, bool lo_open, std::optional<long long> hi,
                        bool hi_open) {
  if (lo < 0 || (hi && *hi < 0))
    throw DomainError("interval endpoints must be non-negative");
  if (!hi && !hi_open)
    throw DomainError("an unbounded interval must be open on the right");
  if (hi) {
    bool nonempty = lo < *hi || (lo == *hi && !lo_open && !hi_open);
    if (!nonempty) throw DomainError("empty interval " +
                                     Interval{lo, hi, lo_open, hi_open}.str());
  }
  return Interval{lo, hi, lo_open, hi_open};
}

Interval Interval::closed(long long lo, long long hi) {
  return make(lo, false, hi, false);
}
Interval Interval::open(long long lo, long long hi) {
  return make(lo, true, hi, true);
}
Interval Interval::closed_open(long long lo, long long hi) {
  return make(lo, false, hi, true);
}
Interval Interval::open_closed(long long lo, long long hi) {
  return make(lo, true, hi, false);
}
Interval Interval::singleton(long long c) { return make(c, false, c, false); }
Interval Interval::unbounded(long long lo, bool lo_open) {
  return make(lo, lo_open, std::nullopt, true);
}

bool Interval::contains(const Rational& d) const {
  Rational lo_r(lo);
  if (lo_open ? !(d > lo_r) : !(d >= lo_r)) return false;
  if (!hi) return true;
  Rational hi_r(*hi);
  return hi_open ? d < hi_r : d <= hi_r;
}

bool Interval::operator==(const Interval& o) const {
  return lo == o.lo && hi == o.hi && lo_open == o.lo_open && hi_open == o.hi_open;
}

std::string Interval::str() const {
  std::string out;
  out += lo_open ? '(' : '[';
  out += std::to_string(lo);
  out += ',';
  out += hi ? std::to_string(*hi) : std::string("inf");
  out += hi_open ? ')' : ']';
  return out;
}

Interval Interval::parse(const std::string& text) {
  auto fail = [&]() -> ParseError {
    return ParseError("bad interval '" + text + "'");
  };
  if (text.size() < 5) throw fail();
  bool lo_open;
  if (text.front() == '[') lo_open = false;
  else if (text.front() == '(') lo_open = true;
  else throw fail();
  bool hi_open;
  if (text.back() == ']') hi_open = false;
  else if (text.back() == ')') hi_open = true;
  else throw fail();
  auto comma = text.find(',');
  if (comma == std::string::npos) throw fail();
  std::string lo_s = text.substr(1, comma - 1);
  std::string hi_s = text.substr(comma + 1, text.size() - comma - 2);
  auto parse_nat = [&](const std::string& s) -> long long {
    if (s.empty()) throw fail();
    long long v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
      v = v * 10 + (c - '0');
      if (v > 1000000000) throw fail();  // keeps constants sane
    }
    return v;
  };
  std::optional<long long> hi;
  if (hi_s != "inf") hi = parse_nat(hi_s);
  long long lo = parse_nat(lo_s);
  try {
    return make(lo, lo_open, hi, hi_open);
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

}  // namespace tlwb
