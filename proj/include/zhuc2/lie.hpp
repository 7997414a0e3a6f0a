#pragma once

// Simple Lie algebras of types A-G: root data generated from the Cartan
// matrix, Weyl's dimension formula, and level-k dominant weights.
//
// Node numbering follows Bourbaki (the same as LiE):
//   B_r, C_r   alpha_r is the odd one out (short for B, long for C)
//   D_r        alpha_{r-1}, alpha_r are the two spinor nodes, both on alpha_{r-2}
//   E_r        chain 1-3-4-5-..-r with alpha_2 attached to alpha_4
//   F_4        alpha_1, alpha_2 long; alpha_3, alpha_4 short
//   G_2        alpha_1 short, alpha_2 long
// Indices in code are 0-based (node i is index i-1).

#include "zhuc2/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zhuc2::lie {

using Root = Eigen::VectorXi;  // coordinates in the simple-root basis

class RootSystem {
 public:
  /// Throws std::invalid_argument for an unknown type or rank.
  RootSystem(char family, int rank);

  /// Parses "A1", "E8", "G2", ...
  static RootSystem parse(std::string_view spec);

  char family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// Symmetric form on simple roots, long roots of norm 2.
  const RatMatrix& form() const { return form_; }
  /// cartan(i, j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  const Eigen::MatrixXi& cartan() const { return cartan_; }

  /// Positive roots ordered by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_.back(); }
  /// Dual Coxeter labels: theta^vee = sum_i comarks[i] alpha_i^vee.
  const std::vector<int>& comarks() const { return comarks_; }

  Rational root_norm(const Root& r) const;

 private:
  char family_;
  int rank_;
  RatMatrix form_;
  Eigen::MatrixXi cartan_;
  std::vector<Root> positive_;
  std::vector<int> comarks_;
};

/// Dynkin labels of a dominant integral weight.
struct DominantWeight {
  std::vector<long> labels;

  bool operator==(const DominantWeight&) const = default;
};

/// Dimension of the irreducible module with highest weight w.
Integer weyl_dim(const RootSystem& system, const DominantWeight& w);

/// Dominant weights with sum_i comarks[i] * labels[i] <= k, in
/// lexicographic order of labels.
std::vector<DominantWeight> level_weights(const RootSystem& system, int k);

}  // namespace zhuc2::lie
