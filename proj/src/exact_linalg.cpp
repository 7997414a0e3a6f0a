#include "zhuc2/exact_linalg.hpp"

#include <utility>

namespace zhuc2 {

namespace {

Integer gcd_abs(const Integer& a, const Integer& b) { return bmp::gcd(a, b); }

void swap_rows(IntMatrix& a, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  for (Eigen::Index c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace

Integer determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      swap_rows(a, p, k);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Eigen::Index bareiss_rank(IntMatrix a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    swap_rows(a, p, r);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

RatVector solve(const IntMatrix& a, const IntVector& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  RatMatrix m(n, n + 1);
  m.leftCols(n) = a.cast<Rational>();
  m.col(n) = b.cast<Rational>();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("solve: singular matrix");
    if (p != k) m.row(p).swap(m.row(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (Eigen::Index j = k; j <= n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  RatVector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = m(i, n) / m(i, i);
  return x;
}

IntMatrix row_hermite_form(IntMatrix a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index r = 0;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best < 0 || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best < 0) break;
      swap_rows(a, best, r);
      bool done = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        const Integer q = a(i, c) / a(r, c);
        a.row(i) -= q * a.row(r);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.row(r) = -a.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q, rem;
      bmp::divide_qr(a(i, c), a(r, c), q, rem);
      if (rem < 0) q -= 1;
      if (q != 0) a.row(i) -= q * a.row(r);
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return a.topRows(r);
}

DecompositionResult decompose_symmetric(const IntMatrix& gram) {
  const Eigen::Index n = gram.rows();
  RatMatrix work = gram.cast<Rational>();
  DecompositionResult out;
  out.decomposition.diag = RatVector::Zero(n);
  out.decomposition.upper = RatMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Rational pivot = work(i, i);
    if (pivot <= 0) {
      out.failed_pivot = i;
      return out;
    }
    out.decomposition.diag(i) = pivot;
    for (Eigen::Index j = i + 1; j < n; ++j) out.decomposition.upper(i, j) = work(i, j) / pivot;
    for (Eigen::Index j = i + 1; j < n; ++j)
      for (Eigen::Index k = i + 1; k < n; ++k)
        work(j, k) -= work(i, j) * work(i, k) / pivot;
  }
  return out;
}

bool EchelonBasis::insert(Row row) {
  if (row.size() != width_) throw std::invalid_argument("EchelonBasis: row width mismatch");
  if (pivot_row_.empty()) pivot_row_.assign(width_, -1);
  if (full()) return false;
  std::size_t lead = width_;
  for (std::size_t c = 0; c < width_; ++c) {
    if (row[c] == 0) continue;
    const std::ptrdiff_t b = pivot_row_[c];
    if (b < 0) {
      lead = c;
      break;
    }
    const Row& basis = rows_[static_cast<std::size_t>(b)];
    const Integer g = gcd_abs(row[c], basis[c]);
    const Integer fr = basis[c] / g;
    const Integer fb = row[c] / g;
    for (std::size_t j = c; j < width_; ++j) {
      if (basis[j] == 0) {
        if (row[j] != 0) row[j] *= fr;
      } else {
        row[j] = row[j] * fr - basis[j] * fb;
      }
    }
  }
  if (lead == width_) return false;
  Integer content = 0;
  for (std::size_t j = lead; j < width_; ++j)
    if (row[j] != 0) content = gcd_abs(content, row[j]);
  if (row[lead] < 0) content = -content;
  if (content != 1)
    for (std::size_t j = lead; j < width_; ++j) row[j] /= content;
  pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

}  // namespace zhuc2
