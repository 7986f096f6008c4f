#include "mhopf/rational.hpp"

#include <ostream>

#include "mhopf/error.hpp"

namespace mhopf {

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (sgn(q_.get_den()) == 0) throw InputError("rational with zero denominator");
  q_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t digits = 0;
  bool slash_seen = false;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '-') {
      const bool at_start = pos == 0;
      const bool after_slash = pos > 0 && text[pos - 1] == '/';
      if (!at_start && !after_slash) return std::nullopt;
    } else if (ch == '/') {
      if (slash_seen || digits == 0 || pos + 1 == text.size()) return std::nullopt;
      slash_seen = true;
    } else if (ch >= '0' && ch <= '9') {
      ++digits;
    } else {
      return std::nullopt;
    }
  }
  if (digits == 0) return std::nullopt;
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) return std::nullopt;
  if (sgn(q.get_den()) == 0) return std::nullopt;
  q.canonicalize();
  Rational r;
  r.q_ = std::move(q);
  return r;
}

Rational Rational::parse_or_throw(std::string_view text) {
  auto r = parse(text);
  if (!r) throw InputError("invalid rational literal: '" + std::string(text) + "'");
  return *r;
}

std::string Rational::str() const { return q_.get_str(); }

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mhopf
