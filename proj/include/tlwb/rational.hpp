#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace tlwb {

// Exact rational number, always in lowest terms with a positive denominator.
// Arithmetic never rounds; GMP supplies arbitrary-precision integers so
// denominators produced by the witness-word generators cannot overflow.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(long long num, long long den);

  // Accepts integers ("7", "-3"), fractions ("7/2", "-1/4") and decimal
  // notation ("2.5", "0.125"). Throws ParseError on anything else.
  static Rational parse(const std::string& text);

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws DomainError on /0
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  bool is_integer() const;
  bool is_negative() const { return v_ < 0; }

  // Largest integer <= value / smallest integer >= value. Throws
  // DomainError when the result does not fit a long long (never at the
  // word sizes this project handles).
  long long floor_ll() const;
  long long ceil_ll() const;

  // Canonical form "p/q", e.g. "0/1", "-3/2". This is the word-file
  // serialization format.
  std::string str() const;

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tlwb
