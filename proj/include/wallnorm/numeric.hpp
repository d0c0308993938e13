#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace wallnorm {

// Expression templates are disabled so the types compose cleanly with Eigen.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
/// Small machine-integer matrix (cocycle weights, boundary matrices).
using IndexMatrix = Matrix<std::int64_t>;

/// Integer coordinates of a class in H_1 or H^1 relative to the active basis.
using Coords = std::vector<std::int64_t>;

/// Converts an arbitrary-precision integer to int64, throwing if it does not fit.
std::int64_t to_int64(const Integer& value);

std::int64_t dot(const Coords& a, const Coords& b);

/// "(1,-1)" style rendering used in reports.
std::string format_tuple(const Coords& c);
/// "1 -1" style rendering used in point listings.
std::string format_spaced(const Coords& c);

}  // namespace wallnorm
