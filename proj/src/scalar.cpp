#include "deloop/scalar.hpp"

#include "deloop/errors.hpp"

#include <cctype>

namespace deloop {

namespace {

// Digits with no leading zero ("0" itself allowed only when zero_ok).
bool canonical_digits(std::string_view s, bool zero_ok) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  if (s[0] == '0') return zero_ok && s.size() == 1;
  return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw UsageError("scalar with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  auto fail = [&](const char* why) {
    return ParseError("invalid scalar \"" + std::string(text) + "\": " + why);
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  if (!canonical_digits(num, true)) throw fail("numerator is not a canonical decimal integer");
  if (negative && num == "0") throw fail("negative zero");
  if (slash == std::string_view::npos) {
    return Scalar(mpq_class(mpz_class(std::string(text))));
  }
  std::string_view den = body.substr(slash + 1);
  if (!canonical_digits(den, false)) throw fail("denominator must be a positive canonical integer");
  if (den == "1") throw fail("denominator 1 must be omitted");
  if (num == "0") throw fail("zero must be written as 0");
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw fail("fraction is not reduced");
  if (negative) n = -n;
  Scalar out;
  out.value_ = mpq_class(n, d);
  return out;
}

std::string Scalar::str() const { return value_.get_str(10); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw UsageError("inverse of zero");
  return Scalar(1) / *this;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar& Scalar::operator+=(const Scalar& other) {
  value_ += other.value_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& other) {
  value_ -= other.value_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& other) {
  value_ *= other.value_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw UsageError("division by zero");
  value_ /= other.value_;
  return *this;
}

Scalar operator-(const Scalar& a) {
  Scalar out;
  out.value_ = -a.value_;
  return out;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace deloop
