#include "tlwb/rational.hpp"

#include <cctype>
#include <ostream>

#include "tlwb/errors.hpp"

namespace tlwb {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long num, long long den)
    : v_(static_cast<long>(num), static_cast<long>(den == 0 ? 1 : den)) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  mpq_class mag;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("bad rational literal '" + text + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    mag = mpq_class(n) / mpq_class(d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || !all_digits(fp))
      throw ParseError("bad rational literal '" + text + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    mpz_class n = mpz_class(ip, 10) * scale + mpz_class(fp.empty() ? "0" : fp, 10);
    mag = mpq_class(n) / mpq_class(scale);
  } else {
    if (!all_digits(s)) throw ParseError("bad rational literal '" + text + "'");
    mag = mpq_class(mpz_class(s, 10));
  }
  mag.canonicalize();
  if (negative) mag = -mag;
  return Rational(std::move(mag));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational Rational::operator+(const Rational& o) const {
  return Rational(mpq_class(v_ + o.v_));
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(mpq_class(v_ - o.v_));
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(mpq_class(v_ * o.v_));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.v_ == 0) throw DomainError("rational division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

bool Rational::is_integer() const { return v_.get_den() == 1; }

long long Rational::floor_ll() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw DomainError("rational floor out of range");
  return q.get_si();
}

long long Rational::ceil_ll() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw DomainError("rational ceiling out of range");
  return q.get_si();
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace tlwb
