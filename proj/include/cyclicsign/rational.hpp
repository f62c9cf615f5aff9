#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace cyclicsign {

// Expression templates are disabled so the scalar behaves like a plain value
// type inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;
using MatrixZ = MatrixX<Integer>;

// Parses "p", "p/q", decimals such as "-0.125" and exponent forms such as
// "1e-3" into an exact, reduced rational. Surrounding whitespace is ignored.
// Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical form: "p/q" with q > 1, or "p" when the value is an integer.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// -1, 0 or +1.
int sign(const Rational& q);

VectorQ to_vector(const std::vector<Rational>& values);
std::vector<std::string> to_strings(const VectorQ& v);

inline VectorQ ones(Eigen::Index n) { return VectorQ::Constant(n, Rational(1)); }

bool is_zero(const VectorQ& v);
bool all_positive(const VectorQ& v);
bool all_negative(const VectorQ& v);
bool all_nonnegative(const VectorQ& v);
bool all_nonpositive(const VectorQ& v);

}  // namespace cyclicsign
