#pragma once

#include <cstdint>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace dilat {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Transition matrix T: entry (i, j) is the number of directed edges i -> j.
using AdjacencyMatrix = Matrix<std::int64_t>;

}  // namespace dilat
