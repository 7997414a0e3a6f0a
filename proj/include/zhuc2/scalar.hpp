#pragma once

// Exact scalar types shared by every module. Results are never computed in
// floating point; doubles appear only as pruning hints that get re-verified.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zhuc2 {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

// Lattice coordinates stay small (they come out of bounded enumeration), so
// they live in machine integers; every product that could grow is checked.
using Coord = std::int64_t;
using CoordVector = Vector<Coord>;

/// A configured size cap was hit; results are never silently truncated.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer numerator(const Rational& r) { return bmp::numerator(r); }
inline Integer denominator(const Rational& r) { return bmp::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

/// floor(r) for an exact rational.
inline Integer floor_rational(const Rational& r) {
  Integer q, rem;
  bmp::divide_qr(numerator(r), denominator(r), q, rem);
  if (rem < 0) q -= 1;
  return q;
}

inline Integer ceil_rational(const Rational& r) { return -floor_rational(-r); }

/// Narrow a big integer to int64, failing loudly on overflow.
inline std::int64_t to_int64(const Integer& v) {
  if (v > Integer(INT64_MAX) || v < Integer(INT64_MIN))
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace zhuc2
