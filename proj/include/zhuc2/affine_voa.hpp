#pragma once

// Affine VOAs V_{g,k}: Zhu dimension from level-k weights, the sl(N)
// grade-by-grade C2 conjecture, and the refined sl(2) character with its
// grade-equals-degree part.

#include "zhuc2/lie.hpp"
#include "zhuc2/qseries.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace zhuc2::affine {

/// sum over level-k weights of (dim L(lambda))^2.
Integer affine_zhu_dim(const lie::RootSystem& system, int k);

struct WeightTerm {
  lie::DominantWeight weight;
  Integer dim;  // dim L(weight)
};

/// Grade m of A_[2](V_{sl(N),k}) as a formal difference of L(mu) (x) L(mu)^*.
struct GradedModuleList {
  int grade = 0;
  std::vector<WeightTerm> plus;
  std::vector<WeightTerm> minus;
  Integer dim = 0;  // sum plus dim^2 - sum minus dim^2
};

GradedModuleList slN_c2_grade(int n, int k, int m);

struct SlNC2Total {
  int n = 0;
  int k = 0;
  std::vector<GradedModuleList> per_grade;  // m = 0..n*k
  Integer total = 0;
  Integer zhu_dim = 0;
  bool matches_zhu = false;
};

/// Thrown when the conjectured grade decomposition is inconsistent; carries
/// the full record.
class ConjectureViolation : public std::runtime_error {
 public:
  ConjectureViolation(const std::string& what, SlNC2Total evidence)
      : std::runtime_error(what), evidence_(std::move(evidence)) {}
  const SlNC2Total& evidence() const { return evidence_; }

 private:
  SlNC2Total evidence_;
};

/// Sums grades 0..N k, checks the grades just above vanish, every grade is
/// non-negative, and the total equals the Zhu dimension.
SlNC2Total slN_c2_total(int n, int k);

/// k x k matrices A_ij = min(i, j), B_ij = max(i + j - k, 0), 1-based.
struct Sl2CharacterSpec {
  int k = 0;
  Eigen::MatrixXi a;
  Eigen::MatrixXi b;

  explicit Sl2CharacterSpec(int level);
};

/// Quasi-particle sum for the character of V_{sl(2),k} in q, z and the
/// degree variable t, expanded exactly to q^truncation.
TruncatedSeries sl2_refined_character(int k, int truncation);

/// chi_{L(a)}(z) = z^a + z^{a-2} + ... + z^{-a}.
LaurentPoly sl2_character(int a);

/// sum_{a=0}^{min(m, 2k-m)} (-1)^{m+a} chi_{L(a)}(z)^2; zero for m > 2k.
LaurentPoly sl2_c2_closed_form(int k, int m);

/// Grade-equals-degree part of the refined character, grade by grade
/// (index m = 0..truncation).
std::vector<LaurentPoly> sl2_c2_from_character(int k, int truncation);

}  // namespace zhuc2::affine
