#pragma once

// Truncated q-series whose coefficients are integer Laurent polynomials in z,
// with an integer t-degree carried alongside each term.

#include "zhuc2/scalar.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zhuc2 {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Integer c) { if (c != 0) coeffs_[0] = std::move(c); }  // NOLINT: constants convert

  static LaurentPoly monomial(int exponent, Integer c = 1);

  const std::map<int, Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int exponent) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Value at z = 1.
  Integer at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  /// Invariant under z -> 1/z.
  bool is_palindromic() const;

  std::string str() const;

 private:
  void add_term(int e, const Integer& c);
  std::map<int, Integer> coeffs_;
};

class TruncationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TruncatedSeries {
 public:
  struct Key {
    int q = 0;
    int t = 0;
    auto operator<=>(const Key&) const = default;
  };

  explicit TruncatedSeries(int truncation);

  static TruncatedSeries one(int truncation);
  static TruncatedSeries term(int truncation, int q, int t, LaurentPoly coeff);

  int truncation() const { return truncation_; }
  const std::map<Key, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(int q, int t) const;

  /// Adds coeff * q^q t^t; terms beyond the truncation are dropped.
  void add(int q, int t, const LaurentPoly& coeff);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  bool operator==(const TruncatedSeries&) const = default;

  /// Keeps the terms whose (q power, t degree) satisfy the predicate.
  TruncatedSeries extract(const std::function<bool(int q, int t)>& keep) const;

  /// Integer q-series obtained at z = 1, t = 1: entry i is the q^i coefficient.
  std::vector<Integer> at_unit() const;

 private:
  int truncation_;
  std::map<Key, LaurentPoly> terms_;
};

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// prod_{j=1}^{n} (1 - q^j) to order q^Q.
TruncatedSeries pochhammer(int n, int truncation);

/// 1 / prod_{j=1}^{n} (1 - q^j) to order q^Q.
TruncatedSeries inv_pochhammer(int n, int truncation);

}  // namespace zhuc2
