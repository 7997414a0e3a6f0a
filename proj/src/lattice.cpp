#include "zhuc2/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace zhuc2 {

bool lex_less(const CoordVector& a, const CoordVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

Lattice::Lattice() : gram_(0, 0), gram64_(0, 0) {
  decomposition_.diag = RatVector(0);
  decomposition_.upper = RatMatrix(0, 0);
}

Coord Lattice::norm(const CoordVector& v) const { return v.dot(gram64_ * v); }

Coord Lattice::pairing(const CoordVector& a, const CoordVector& b) const {
  return a.dot(gram64_ * b);
}

LatticeVector Lattice::vector(CoordVector coords) const {
  const Coord n = norm(coords);
  return {std::move(coords), n};
}

Lattice Lattice::renamed(std::string name) const {
  Lattice copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Lattice make_lattice(const IntMatrix& gram, std::string name) {
  using Kind = LatticeError::Kind;
  if (gram.rows() != gram.cols())
    throw LatticeError(Kind::NotSquare, "Gram matrix is not square");
  const Eigen::Index n = gram.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (gram(i, j) != gram(j, i))
        throw LatticeError(Kind::NotSymmetric, "Gram matrix not symmetric at (" + std::to_string(i) +
                                                   ", " + std::to_string(j) + ")");
  for (Eigen::Index i = 0; i < n; ++i)
    if (bmp::abs(gram(i, i)) % 2 != 0)
      throw LatticeError(Kind::NotEven, "odd diagonal entry at index " + std::to_string(i));
  auto dec = decompose_symmetric(gram);
  if (dec.failed_pivot >= 0)
    throw LatticeError(Kind::NotPositiveDefinite,
                       "leading principal minor of size " + std::to_string(dec.failed_pivot + 1) +
                           " is not positive");

  Lattice out;
  out.name_ = std::move(name);
  out.gram_ = gram;
  out.gram64_ = Matrix<Coord>(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out.gram64_(i, j) = to_int64(gram(i, j));
  out.decomposition_ = std::move(dec.decomposition);
  out.det_ = determinant(gram);
  return out;
}

namespace {

/// Depth-first enumeration of x with sum_i d_i (x_i + c_i(x))^2 <= bound,
/// where c_i depends on the shift and the coordinates above i.
class ShiftedEnumerator {
 public:
  ShiftedEnumerator(const SymmetricDecomposition& dec, const RatVector& shift, const Rational& bound,
                    std::size_t max_points)
      : dec_(dec), shift_(shift), bound_(bound), max_points_(max_points), n_(dec.diag.size()), x_(CoordVector::Zero(n_)),
        y_(RatVector::Zero(n_)) {}

  std::vector<ShiftedVector> run() {
    if (n_ == 0) {
      if (bound_ >= 0) out_.push_back({CoordVector(0), Rational(0)});
      return std::move(out_);
    }
    if (bound_ >= 0) descend(n_ - 1, bound_);
    std::sort(out_.begin(), out_.end(),
              [](const ShiftedVector& a, const ShiftedVector& b) { return lex_less(a.coords, b.coords); });
    return std::move(out_);
  }

 private:
  void descend(Eigen::Index i, const Rational& remaining) {
    Rational c = shift_(i);
    for (Eigen::Index j = i + 1; j < n_; ++j)
      if (dec_.upper(i, j) != 0) c += dec_.upper(i, j) * y_(j);
    const Rational limit = remaining / dec_.diag(i);
    auto valid = [&](Coord x) {
      const Rational t = Rational(x) + c;
      return t * t <= limit;
    };

    // The admissible set is an integer interval around -c; floats only seed
    // the scan, the exact test decides.
    const double ctr = -static_cast<double>(c);
    const double width = std::sqrt(std::max(0.0, static_cast<double>(limit)));
    const Coord fl = to_int64(floor_rational(-c));
    Coord lo = std::min(static_cast<Coord>(std::ceil(ctr - width)), fl);
    Coord hi = std::max(static_cast<Coord>(std::floor(ctr + width)), fl + 1);
    while (valid(lo - 1)) --lo;
    while (valid(hi + 1)) ++hi;

    for (Coord x = lo; x <= hi; ++x) {
      const Rational t = Rational(x) + c;
      const Rational used = dec_.diag(i) * t * t;
      if (used > remaining) continue;
      x_(i) = x;
      y_(i) = Rational(x) + shift_(i);
      const Rational rest = remaining - used;
      if (i == 0) {
        if (out_.size() >= max_points_)
          throw ResourceLimit("enumeration exceeded " + std::to_string(max_points_) + " vectors");
        out_.push_back({x_, bound_ - rest});
      } else {
        descend(i - 1, rest);
      }
    }
    x_(i) = 0;
    y_(i) = shift_(i);
  }

  const SymmetricDecomposition& dec_;
  const RatVector& shift_;
  Rational bound_;
  std::size_t max_points_;
  Eigen::Index n_;
  CoordVector x_;
  RatVector y_;
  std::vector<ShiftedVector> out_;
};

}  // namespace

std::vector<ShiftedVector> enumerate_shifted(const Lattice& lattice, const RatVector& shift,
                                             const Rational& bound, std::size_t max_points) {
  if (shift.size() != lattice.rank()) throw std::invalid_argument("enumerate_shifted: shift has wrong size");
  return ShiftedEnumerator(lattice.decomposition(), shift, bound, max_points).run();
}

std::vector<LatticeVector> enumerate_vectors(const Lattice& lattice, const Integer& bound, std::size_t max_points) {
  const RatVector zero = RatVector::Zero(lattice.rank());
  auto shifted = enumerate_shifted(lattice, zero, Rational(bound), max_points);
  std::vector<LatticeVector> out;
  out.reserve(shifted.size());
  for (auto& v : shifted) {
    out.push_back({std::move(v.coords), to_int64(numerator(v.norm))});
  }
  return out;
}

LatticeSummary summary(const Lattice& lattice) {
  if (lattice.rank() == 0) throw LatticeError(LatticeError::Kind::RankZero, "summary of a rank-0 lattice");
  Integer bound = lattice.gram()(0, 0);
  for (Eigen::Index i = 1; i < lattice.rank(); ++i) bound = std::min(bound, lattice.gram()(i, i));
  LatticeSummary s;
  s.det = lattice.determinant();
  s.mu = to_int64(bound);
  for (const auto& v : enumerate_vectors(lattice, bound)) {
    if (v.norm == 0) continue;
    if (v.norm < s.mu) {
      s.mu = v.norm;
      s.count = 0;
    }
    if (v.norm == s.mu) s.count += 1;
  }
  return s;
}

DiscriminantCoset coset_minimum(const Lattice& lattice, const RatVector& shift) {
  const auto& dec = lattice.decomposition();
  const Eigen::Index n = lattice.rank();

  // Sequential rounding gives one coset point and hence a finite search bound.
  CoordVector x = CoordVector::Zero(n);
  RatVector y = shift;
  Rational bound = 0;
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Rational c = shift(i);
    for (Eigen::Index j = i + 1; j < n; ++j) c += dec.upper(i, j) * y(j);
    x(i) = to_int64(floor_rational(-c + Rational(1, 2)));
    y(i) = Rational(x(i)) + shift(i);
    const Rational t = Rational(x(i)) + c;
    bound += dec.diag(i) * t * t;
  }

  DiscriminantCoset out;
  bool first = true;
  for (const auto& v : enumerate_shifted(lattice, shift, bound)) {
    if (first || v.norm < out.min_norm) {
      out.min_norm = v.norm;
      out.min_count = 0;
      out.representative = v.coords.cast<Rational>() + shift;
      first = false;
    }
    if (v.norm == out.min_norm) out.min_count += 1;
  }
  return out;
}

std::vector<DiscriminantCoset> discriminant_cosets(const Lattice& lattice) {
  const Eigen::Index n = lattice.rank();
  if (n == 0) return {DiscriminantCoset{RatVector(0), Rational(0), Integer(1)}};

  // L*/L is Z^n / gram Z^n in dual coordinates; the triangular normal form
  // gives a box of representatives.
  const IntMatrix hnf = row_hermite_form(lattice.gram());
  std::vector<Coord> radix(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) radix[static_cast<std::size_t>(i)] = to_int64(hnf(i, i));

  std::vector<DiscriminantCoset> out;
  IntVector digits = IntVector::Zero(n);
  for (;;) {
    const RatVector t = solve(lattice.gram(), digits);
    out.push_back(coset_minimum(lattice, t));
    Eigen::Index i = n - 1;
    while (i >= 0) {
      digits(i) += 1;
      if (digits(i) < radix[static_cast<std::size_t>(i)]) break;
      digits(i) = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  const Eigen::Index n = a.rank() + b.rank();
  IntMatrix g = IntMatrix::Zero(n, n);
  g.topLeftCorner(a.rank(), a.rank()) = a.gram();
  g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
  return make_lattice(g, name);
}

Rational covering_radius_bound(const Lattice& lattice) {
  if (lattice.rank() == 0)
    throw LatticeError(LatticeError::Kind::RankZero, "covering radius of a rank-0 lattice");
  return lattice.decomposition().diag.sum() / 4;
}

Lattice lattice_from_generators(const IntMatrix& generators, const IntMatrix& form, const Integer& scale,
                                std::string name) {
  const IntMatrix basis = row_hermite_form(generators);
  const IntMatrix scaled = basis * form * basis.transpose();
  const Integer s2 = scale * scale;
  IntMatrix gram(scaled.rows(), scaled.cols());
  for (Eigen::Index i = 0; i < scaled.rows(); ++i)
    for (Eigen::Index j = 0; j < scaled.cols(); ++j) {
      if (scaled(i, j) % s2 != 0) throw std::domain_error("generated lattice is not integral");
      gram(i, j) = scaled(i, j) / s2;
    }
  return make_lattice(gram, std::move(name));
}

}  // namespace zhuc2
