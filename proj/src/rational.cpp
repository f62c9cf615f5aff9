#include "cyclicsign/rational.hpp"

#include "cyclicsign/errors.hpp"

#include <algorithm>
#include <cctype>

namespace cyclicsign {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw ParseError("not a rational literal: '" + std::string(text) + "'");
}

// Base-10 digit string to Integer. GMP would read a leading zero as an
// octal prefix, so leading zeros are dropped first.
Integer decimal_integer(std::string_view digits) {
  digits.remove_prefix(std::min(digits.find_first_not_of('0'), digits.size()));
  return digits.empty() ? Integer(0) : Integer(std::string(digits));
}

Integer pow10(unsigned long e) {
  Integer r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= 10;
  return r;
}

// Unsigned decimal with optional fraction and exponent, e.g. "12.50e-3".
Rational parse_unsigned_decimal(std::string_view s, std::string_view original) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_literal(original);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_literal(original);
    if (!int_part.empty() && !all_digits(int_part)) bad_literal(original);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_literal(original);
  } else if (!all_digits(int_part)) {
    bad_literal(original);
  }

  const Integer numerator = decimal_integer(std::string(int_part) + std::string(frac_part));
  exponent -= static_cast<long>(frac_part.size());
  if (exponent >= 0) {
    return Rational(numerator * pow10(static_cast<unsigned long>(exponent)));
  }
  return Rational(numerator, pow10(static_cast<unsigned long>(-exponent)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_literal(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_literal(text);

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    const Integer d = decimal_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rational(decimal_integer(num), d);
  } else {
    value = parse_unsigned_decimal(s, text);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int sign(const Rational& q) { return q.sign(); }

VectorQ to_vector(const std::vector<Rational>& values) {
  VectorQ v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = values[i];
  }
  return v;
}

std::vector<std::string> to_strings(const VectorQ& v) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

bool is_zero(const VectorQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

bool all_positive(const VectorQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) <= 0) return false;
  }
  return true;
}

bool all_negative(const VectorQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) >= 0) return false;
  }
  return true;
}

bool all_nonnegative(const VectorQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) < 0) return false;
  }
  return true;
}

bool all_nonpositive(const VectorQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) > 0) return false;
  }
  return true;
}

}  // namespace cyclicsign
