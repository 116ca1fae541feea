#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <type_traits>

#include "daugavet/rational.hpp"

namespace dgv {

// The library is generic over the ambient scalar field:
//   double: binary-float64 mode, comparisons carry a tolerance
//   Rational: exact-rational mode, comparisons are exact
//   std::complex<double>: complex kernels, float mode only (the total
//     variation of a complex measure is a sum of square roots and has no
//     exact rational form)

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    using magnitude_type = double;
    static constexpr bool is_exact = false;
    static double magnitude(double v) { return std::fabs(v); }
    static double default_tol() { return 1e-9; }
    static double from_int(long long v) { return static_cast<double>(v); }
    static double to_double(double v) { return v; }
};

template <>
struct scalar_traits<Rational> {
    using magnitude_type = Rational;
    static constexpr bool is_exact = true;
    static Rational magnitude(const Rational& v) { return v.abs(); }
    static Rational default_tol() { return Rational(0); }
    static Rational from_int(long long v) { return Rational(v); }
    static double to_double(const Rational& v) { return v.to_double(); }
};

template <>
struct scalar_traits<std::complex<double>> {
    using magnitude_type = double;
    static constexpr bool is_exact = false;
    static double magnitude(const std::complex<double>& v) { return std::abs(v); }
    static double default_tol() { return 1e-9; }
    static std::complex<double> from_int(long long v) { return {static_cast<double>(v), 0.0}; }
};

template <class S>
using magnitude_t = typename scalar_traits<S>::magnitude_type;

template <class S>
concept RealScalar = std::same_as<S, double> || std::same_as<S, Rational>;

template <class S>
concept Scalar = RealScalar<S> || std::same_as<S, std::complex<double>>;

/// The one comparison routine behind every set-membership test (norm
/// attainment, sign conditions, zero columns). Exact mode uses tol = 0.
template <RealScalar M>
struct Comparator {
    M tol = scalar_traits<M>::default_tol();

    [[nodiscard]] bool geq(const M& a, const M& b) const { return a >= b - tol; }
    [[nodiscard]] bool leq(const M& a, const M& b) const { return a <= b + tol; }
    [[nodiscard]] bool is_zero(const M& a) const { return scalar_traits<M>::magnitude(a) <= tol; }
    [[nodiscard]] bool eq(const M& a, const M& b) const { return is_zero(a - b); }
};

}  // namespace dgv
