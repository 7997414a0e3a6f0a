#include "zhuc2/minimal_models.hpp"

#include <numeric>
#include <string>

namespace zhuc2::minimal {

MinimalDims minimal_dims(long p, long q) {
  if (p < 2 || q < 2)
    throw MinimalModelError(MinimalModelError::Kind::OutOfRange, "p and q must be at least 2");
  if (std::gcd(p, q) != 1)
    throw MinimalModelError(MinimalModelError::Kind::NotCoprime,
                            "p = " + std::to_string(p) + " and q = " + std::to_string(q) + " are not coprime");
  const Integer d = Integer(p - 1) * (q - 1) / 2;
  return {d, d};
}

}  // namespace zhuc2::minimal
