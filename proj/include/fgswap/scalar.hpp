// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scalar.hpp
 * @brief Scalar types, dense aliases and precision conversion.
 *
 * Every numerical routine is templated on a real type `Real`; the matching
 * complex type is `Complex<Real>`. Two instantiations are built: `double`
 * and `xreal`, a 60-digit binary float used when post-selection
 * probabilities fall far below double epsilon.
 */

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <type_traits>
#include <vector>

namespace fgswap {

namespace bmp = boost::multiprecision;

using xreal = bmp::number<bmp::cpp_bin_float<60>, bmp::et_off>;
using xcomplex = bmp::number<bmp::complex_adaptor<bmp::cpp_bin_float<60>>, bmp::et_off>;

template <typename Real> struct ComplexOf { using type = std::complex<Real>; };
template <> struct ComplexOf<xreal> { using type = xcomplex; };

template <typename Real> using Complex = typename ComplexOf<Real>::type;

template <typename Real> using RMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real> using CMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real> using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <typename Real> using CVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

/// N x L orbital matrix; row q holds the amplitudes of b_q^dag on the L sites.
template <typename Real> using OrbitalMatrix = CMatrix<Real>;

using Index = Eigen::Index;

/// Ordered list of 0-based site or mode indices.
using Sites = std::vector<int>;

template <typename T> [[nodiscard]] double to_double(const T& x) {
  if constexpr (std::is_arithmetic_v<T>) {
    return static_cast<double>(x);
  } else {
    return x.template convert_to<double>();
  }
}

template <typename Real> [[nodiscard]] Complex<Real> make_complex(const Real& re, const Real& im) {
  return Complex<Real>(re, im);
}

template <typename To, typename From> [[nodiscard]] RMatrix<To> convert(const RMatrix<From>& m) {
  RMatrix<To> out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      if constexpr (std::is_same_v<To, double>)
        out(i, j) = to_double(m(i, j));
      else
        out(i, j) = To(m(i, j));
    }
  return out;
}

template <typename To, typename From> [[nodiscard]] CMatrix<To> convert(const CMatrix<From>& m) {
  CMatrix<To> out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      using std::imag;
      using std::real;
      const From re = real(m(i, j));
      const From im = imag(m(i, j));
      if constexpr (std::is_same_v<To, double>)
        out(i, j) = std::complex<double>(to_double(re), to_double(im));
      else
        out(i, j) = make_complex<To>(To(re), To(im));
    }
  return out;
}

/// Threshold on the smallest singular value of (1 + G1 G2) below which
/// composition is treated as singular.
template <typename Real> [[nodiscard]] Real singular_threshold() {
  if constexpr (std::is_same_v<Real, double>)
    return 1e-10;
  else
    return Real(1e-40);
}

} // namespace fgswap

namespace Eigen {

template <> struct NumTraits<fgswap::xreal> : GenericNumTraits<fgswap::xreal> {
  using Real = fgswap::xreal;
  using NonInteger = fgswap::xreal;
  using Literal = fgswap::xreal;
  using Nested = fgswap::xreal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 30,
    MulCost = 40
  };
  static Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
  static Real dummy_precision() { return 1000 * epsilon(); }
  static Real highest() { return (std::numeric_limits<Real>::max)(); }
  static Real lowest() { return (std::numeric_limits<Real>::lowest)(); }
  static Real infinity() { return std::numeric_limits<Real>::infinity(); }
  static Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
  static int digits10() { return std::numeric_limits<Real>::digits10; }
  static int digits() { return std::numeric_limits<Real>::digits; }
};

template <> struct NumTraits<fgswap::xcomplex> : GenericNumTraits<fgswap::xcomplex> {
  using Real = fgswap::xreal;
  using NonInteger = fgswap::xcomplex;
  using Literal = fgswap::xcomplex;
  using Nested = fgswap::xcomplex;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 40,
    AddCost = 60,
    MulCost = 160
  };
  static Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
  static Real dummy_precision() { return 1000 * epsilon(); }
  static Real highest() { return (std::numeric_limits<Real>::max)(); }
  static Real lowest() { return (std::numeric_limits<Real>::lowest)(); }
  static Real infinity() { return std::numeric_limits<Real>::infinity(); }
  static Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
  static int digits10() { return std::numeric_limits<Real>::digits10; }
  static int digits() { return std::numeric_limits<Real>::digits; }
};

template <typename BinaryOp> struct ScalarBinaryOpTraits<fgswap::xreal, fgswap::xcomplex, BinaryOp> {
  using ReturnType = fgswap::xcomplex;
};
template <typename BinaryOp> struct ScalarBinaryOpTraits<fgswap::xcomplex, fgswap::xreal, BinaryOp> {
  using ReturnType = fgswap::xcomplex;
};

} // namespace Eigen
