#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace dendro {

/// Exact rational scalar. All arithmetic in this library is over Q; there is
/// no floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parses "p/q" or "p". Always canonicalizes (lowest terms, positive
/// denominator); throws std::invalid_argument on a zero denominator or
/// malformed input.
Rational parse_rational(const std::string& text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace dendro
