#pragma once

#include "zhuc2/scalar.hpp"

#include <stdexcept>

namespace zhuc2::minimal {

class MinimalModelError : public std::invalid_argument {
 public:
  enum class Kind { NotCoprime, OutOfRange };
  MinimalModelError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct MinimalDims {
  Integer zhu_dim;
  Integer c2_dim;
};

/// Virasoro minimal model (p, q): (p-1)(q-1)/2 modules with one-dimensional
/// lowest spaces, and A_[2] spanned by L_{-2}^i |0>, 0 <= i < (p-1)(q-1)/2.
MinimalDims minimal_dims(long p, long q);

}  // namespace zhuc2::minimal
