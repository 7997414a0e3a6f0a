#include "doctest.h"

#include "zhuc2/minimal_models.hpp"

#include <numeric>

using namespace zhuc2;
using namespace zhuc2::minimal;

TEST_CASE("minimal model examples") {
  CHECK(minimal_dims(2, 3).zhu_dim == 1);
  CHECK(minimal_dims(2, 5).zhu_dim == 2);
  CHECK(minimal_dims(3, 4).zhu_dim == 3);
  CHECK(minimal_dims(3, 4).c2_dim == 3);
  CHECK(minimal_dims(5, 6).c2_dim == 10);
}

TEST_CASE("minimal model errors") {
  try {
    minimal_dims(4, 6);
    FAIL("expected NotCoprime");
  } catch (const MinimalModelError& e) {
    CHECK(e.kind() == MinimalModelError::Kind::NotCoprime);
  }
  for (auto [p, q] : {std::pair{1L, 3L}, {0L, 5L}, {-2L, 3L}}) {
    try {
      minimal_dims(p, q);
      FAIL("expected OutOfRange");
    } catch (const MinimalModelError& e) {
      CHECK(e.kind() == MinimalModelError::Kind::OutOfRange);
    }
  }
  CHECK_THROWS_AS(minimal_dims(3, 3), MinimalModelError);
}

TEST_CASE("minimal models are symmetric and non-anomalous") {
  for (long p = 2; p <= 12; ++p)
    for (long q = 2; q <= 12; ++q) {
      if (p == q || std::gcd(p, q) != 1) continue;
      const auto a = minimal_dims(p, q);
      const auto b = minimal_dims(q, p);
      CHECK(a.zhu_dim == b.zhu_dim);
      CHECK(a.c2_dim == a.zhu_dim);
      CHECK(a.zhu_dim == (p - 1) * (q - 1) / 2);
    }
}
