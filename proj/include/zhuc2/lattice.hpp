#pragma once

// Even positive-definite integral lattices given by a Gram matrix in a fixed
// basis, with exact enumeration and discriminant-group data.

#include "zhuc2/exact_linalg.hpp"
#include "zhuc2/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zhuc2 {

class LatticeError : public std::runtime_error {
 public:
  enum class Kind { NotSquare, NotSymmetric, NotEven, NotPositiveDefinite, RankZero };

  LatticeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A lattice vector in coordinates of the lattice basis, with its norm.
struct LatticeVector {
  CoordVector coords;
  Coord norm = 0;
};

bool lex_less(const CoordVector& a, const CoordVector& b);

class Lattice {
 public:
  /// The rank-0 lattice; only meaningful as the identity of direct_sum.
  Lattice();

  const std::string& name() const { return name_; }
  Eigen::Index rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const Matrix<Coord>& gram64() const { return gram64_; }
  const SymmetricDecomposition& decomposition() const { return decomposition_; }
  const Integer& determinant() const { return det_; }

  Coord norm(const CoordVector& v) const;
  Coord pairing(const CoordVector& a, const CoordVector& b) const;
  LatticeVector vector(CoordVector coords) const;

  Lattice renamed(std::string name) const;

  friend Lattice make_lattice(const IntMatrix& gram, std::string name);

 private:
  std::string name_;
  IntMatrix gram_;
  Matrix<Coord> gram64_;
  SymmetricDecomposition decomposition_;
  Integer det_ = 1;
};

/// Validates symmetry, evenness and positive-definiteness.
Lattice make_lattice(const IntMatrix& gram, std::string name = {});

inline constexpr std::size_t kUnlimited = static_cast<std::size_t>(-1);

/// All vectors of norm <= bound, lexicographic by coordinates. Throws
/// ResourceLimit once more than `max_points` vectors are found.
std::vector<LatticeVector> enumerate_vectors(const Lattice& lattice, const Integer& bound,
                                             std::size_t max_points = kUnlimited);

/// A point of the coset shift + L: integer coordinates plus the shift.
struct ShiftedVector {
  CoordVector coords;  // integer part x; the point is x + shift
  Rational norm;
};

/// All x in Z^n with norm(x + shift) <= bound, lexicographic by x.
std::vector<ShiftedVector> enumerate_shifted(const Lattice& lattice, const RatVector& shift,
                                             const Rational& bound, std::size_t max_points = kUnlimited);

struct LatticeSummary {
  Coord mu = 0;       // minimum nonzero norm
  Integer count = 0;  // number of vectors of norm mu
  Integer det = 1;
};

LatticeSummary summary(const Lattice& lattice);

/// One class of L*/L. `representative` is a minimal-norm element of the
/// coset in lattice-basis coordinates.
struct DiscriminantCoset {
  RatVector representative;
  Rational min_norm;
  Integer min_count = 0;
};

std::vector<DiscriminantCoset> discriminant_cosets(const Lattice& lattice);

/// Minimal norm and count of minimal vectors in shift + L.
DiscriminantCoset coset_minimum(const Lattice& lattice, const RatVector& shift);

Lattice direct_sum(const Lattice& a, const Lattice& b);

/// Upper bound on the squared covering radius: (1/4) sum_i |b_i*|^2.
Rational covering_radius_bound(const Lattice& lattice);

/// Lattice spanned by integer generator rows, with pairing
/// (u, v) = u^T form v / scale^2. Fails unless the result is an integral lattice.
Lattice lattice_from_generators(const IntMatrix& generators, const IntMatrix& form,
                                const Integer& scale, std::string name = {});

}  // namespace zhuc2
