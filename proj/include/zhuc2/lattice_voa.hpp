#pragma once

// Zhu's algebra and the C2-algebra of a lattice VOA V_L.
//
// A_[2](V_L) has a basis of monomials x_{i_1}...x_{i_m} e^alpha, alpha in
// the set S_L of small vectors, where x_i stands for beta_i(-1). For fixed
// alpha the monomials live in the polynomial ring Q[x_1..x_n] modulo the
// ideal generated by (gamma . x)^{d_gamma(alpha)} for all nonzero gamma in L,
//   d_gamma(alpha) = max{0, 1 + gamma.gamma - |gamma.alpha|},
// where gamma . x = sum_i gamma_i x_i in lattice coordinates.

#include "zhuc2/lattice.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zhuc2 {

class NotSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QuotientCaps {
  int max_degree = 40;
  std::size_t max_monomials = 250000;
  std::size_t max_enumeration = 2000000;  // lattice vectors per enumeration
  unsigned threads = 0;  // 0: hardware concurrency
};

/// A power of a linear form, (form . x)^exponent.
struct PowerGenerator {
  CoordVector form;
  int exponent = 0;
};

/// Monomial bases per degree in a fixed number of variables, with the
/// multiplication-by-variable maps between consecutive degrees. Safe to
/// share between threads.
class MonomialCache {
 public:
  struct Degree {
    std::size_t size = 0;
    // up[j][i]: index in this degree of x_j times monomial i of the previous degree.
    std::vector<std::vector<std::uint32_t>> up;
  };

  explicit MonomialCache(int variables) : variables_(variables) {}
  int variables() const { return variables_; }

  /// Builds degrees lazily; throws ResourceLimit past `max_monomials`.
  const Degree& degree(int m, std::size_t max_monomials);

 private:
  int variables_;
  std::mutex mutex_;
  std::vector<std::unique_ptr<Degree>> degrees_;
  std::vector<std::vector<std::uint8_t>> last_monomials_;
};

struct QuotientDims {
  std::vector<std::int64_t> dims;  // dims[m] for m = 0..top
  bool complete = true;            // false if cut at max_degree with truncation allowed
};

using GeneratorSource = std::function<std::vector<PowerGenerator>(int degree)>;

/// Graded dimensions of Q[x_1..x_n] / (generators), computed one degree at a
/// time by exact rank. `generators_of_degree(m)` must return every generator
/// of degree exactly m. Stops at the first vanishing degree. Past
/// `max_degree` it throws ResourceLimit, or returns an incomplete result if
/// `allow_truncation` is set.
QuotientDims power_ideal_quotient(int variables, const GeneratorSource& generators_of_degree,
                                  const QuotientCaps& caps, bool allow_truncation = false,
                                  MonomialCache* cache = nullptr);

struct SmallVectorSet {
  std::vector<LatticeVector> vectors;  // lexicographic
  Integer verified_bound = 0;          // candidates had norm <= this
};

SmallVectorSet small_vectors(const Lattice& lattice, std::size_t max_enumeration = kUnlimited);

/// gamma.gamma >= |gamma.alpha| for every gamma with gamma.gamma < alpha.alpha.
bool is_small(const Lattice& lattice, const CoordVector& alpha);

/// Exponent d_gamma(alpha).
Coord power_exponent(const Lattice& lattice, const CoordVector& gamma, const CoordVector& alpha);

/// Nonzero lattice vectors up to a norm bound, one per +- pair, ordered by
/// norm; grows on demand. Safe to share between threads.
class GammaPool {
 public:
  struct Entry {
    LatticeVector gamma;
    CoordVector paired;  // gram * gamma
  };
  using Snapshot = std::shared_ptr<const std::vector<Entry>>;

  explicit GammaPool(const Lattice& lattice, std::size_t max_enumeration = kUnlimited)
      : lattice_(lattice), max_enumeration_(max_enumeration) {}

  /// All entries of norm <= bound (the snapshot may contain more).
  Snapshot ensure(Coord bound);

 private:
  const Lattice& lattice_;
  std::size_t max_enumeration_;
  std::mutex mutex_;
  Coord bound_ = -1;
  Snapshot entries_;
};

struct GradedDimension {
  std::vector<std::int64_t> dims;  // index: oscillator degree m
  Coord alpha_norm = 0;            // L_0 grade of degree m is m + alpha_norm / 2
  Coord generator_bound = 0;       // generators with gamma.gamma <= this were used

  std::int64_t total() const;
};

/// Largest even t with 1 + t - sqrt(t * alpha_norm) <= degree: every
/// generator of degree <= `degree` has gamma.gamma <= this.
Coord generator_norm_bound(int degree, Coord alpha_norm);

GradedDimension graded_quotient_dims(const Lattice& lattice, const LatticeVector& alpha,
                                     const QuotientCaps& caps = {}, GammaPool* pool = nullptr,
                                     MonomialCache* cache = nullptr);

struct AlphaContribution {
  LatticeVector alpha;
  GradedDimension graded;
};

struct C2Result {
  Integer total = 0;
  std::vector<AlphaContribution> per_alpha;  // in small-vector order
};

C2Result c2_dim_lattice(const Lattice& lattice, const QuotientCaps& caps = {});

/// Sum over L*/L of the squared minimal-vector counts.
Integer zhu_dim_lattice(const Lattice& lattice);

/// sum_{m=0}^{mu+1} C(n+m-1, m) + (n - 1/2) M.
Integer c2_lower_bound(const Lattice& lattice);

enum class Effort { Full, BoundOnly };
enum class Verdict { NonAnomalous, Anomalous, Unknown };

std::string to_string(Verdict v);

struct VerdictRecord {
  std::string lattice;
  Verdict verdict = Verdict::Unknown;
  Integer zhu_dim = 0;
  std::optional<Integer> c2_dim;
  Integer c2_lower_bound = 0;
  std::optional<std::size_t> small_vector_count;
  std::vector<AlphaContribution> per_alpha;
  std::string diagnostics;
};

VerdictRecord anomaly_verdict(const Lattice& lattice, Effort effort, const QuotientCaps& caps = {});

}  // namespace zhuc2
