#include "doctest.h"

#include "zhuc2/catalog.hpp"
#include "zhuc2/lattice.hpp"
#include "zhuc2/lie.hpp"

#include <algorithm>

using namespace zhuc2;
using lie::DominantWeight;
using lie::RootSystem;

namespace {

Integer dim(const char* type, std::vector<long> labels) {
  return lie::weyl_dim(RootSystem::parse(type), DominantWeight{std::move(labels)});
}

const char* const kTypes[] = {"A1", "A2", "A3", "A5", "B2", "B3", "B4", "C3", "C4", "D4",
                              "D5", "D6", "E6", "E7", "E8", "F4", "G2"};

DominantWeight adjoint(const RootSystem& r) {
  const lie::Root theta = r.highest_root();
  DominantWeight w;
  for (int i = 0; i < r.rank(); ++i) {
    long s = 0;
    for (int j = 0; j < r.rank(); ++j) s += r.cartan()(i, j) * theta(j);
    w.labels.push_back(s);
  }
  return w;
}

}  // namespace

TEST_CASE("Weyl dimension examples") {
  for (long a = 0; a <= 6; ++a) CHECK(dim("A1", {a}) == a + 1);
  CHECK(dim("A2", {1, 1}) == 8);
  CHECK(dim("A2", {1, 0}) == 3);
  CHECK(dim("A2", {2, 0}) == 6);
  CHECK(dim("B2", {1, 0}) == 5);
  CHECK(dim("B2", {0, 1}) == 4);
  CHECK(dim("C2", {1, 0}) == 4);
  CHECK(dim("C2", {0, 1}) == 5);
  CHECK(dim("G2", {1, 0}) == 7);
  CHECK(dim("G2", {0, 1}) == 14);
  CHECK(dim("F4", {0, 0, 0, 1}) == 26);
  CHECK(dim("F4", {1, 0, 0, 0}) == 52);
  CHECK(dim("D4", {1, 0, 0, 0}) == 8);
  CHECK(dim("D4", {0, 0, 1, 0}) == 8);
  CHECK(dim("D4", {0, 0, 0, 1}) == 8);
  CHECK(dim("E6", {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(dim("E7", {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(dim("E7", {1, 0, 0, 0, 0, 0, 0}) == 133);
  CHECK(dim("E8", {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK(dim("E8", {1, 0, 0, 0, 0, 0, 0, 0}) == 3875);
  CHECK_THROWS_AS(dim("A2", {-1, 0}), std::invalid_argument);
}

TEST_CASE("root data of every type") {
  struct Expect {
    const char* type;
    std::size_t positive;
    int dual_coxeter;
  };
  for (const auto& e : {Expect{"A1", 1, 2}, Expect{"A4", 10, 5}, Expect{"B3", 9, 5}, Expect{"C3", 9, 4},
                        Expect{"D5", 20, 8}, Expect{"E6", 36, 12}, Expect{"E7", 63, 18}, Expect{"E8", 120, 30},
                        Expect{"F4", 24, 9}, Expect{"G2", 6, 4}}) {
    const auto r = RootSystem::parse(e.type);
    CHECK(r.positive_roots().size() == e.positive);
    int h = 1;
    for (int c : r.comarks()) h += c;
    CHECK(h == e.dual_coxeter);
    CHECK(r.root_norm(r.highest_root()) == 2);
  }
  CHECK_THROWS_AS(RootSystem::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::parse("X2"), std::invalid_argument);
}

TEST_CASE("the adjoint module has dimension rank + number of roots") {
  for (const char* type : kTypes) {
    const auto r = RootSystem::parse(type);
    CHECK(lie::weyl_dim(r, adjoint(r)) == r.rank() + 2 * static_cast<long>(r.positive_roots().size()));
  }
}

TEST_CASE("Weyl dimension respects diagram symmetries") {
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long c = 0; c <= 2; ++c) {
        CHECK(dim("A3", {a, b, c}) == dim("A3", {c, b, a}));
        CHECK(dim("E6", {a, b, c, 0, 1, 0}) == dim("E6", {0, b, 1, 0, c, a}));
        CHECK(dim("D4", {a, b, c, 1}) == dim("D4", {c, b, a, 1}));
      }
}

TEST_CASE("level weights") {
  CHECK(lie::level_weights(RootSystem('A', 1), 1).size() == 2);
  CHECK(lie::level_weights(RootSystem('A', 2), 1).size() == 3);
  CHECK(lie::level_weights(RootSystem('E', 8), 1).size() == 1);
  CHECK(lie::level_weights(RootSystem('E', 8), 2).size() == 3);
  for (int k = 1; k <= 6; ++k) CHECK(lie::level_weights(RootSystem('A', 1), k).size() == static_cast<std::size_t>(k + 1));
  for (int n = 2; n <= 7; ++n) CHECK(lie::level_weights(RootSystem('A', n - 1), 1).size() == static_cast<std::size_t>(n));
  const auto w = lie::level_weights(RootSystem('A', 2), 2);
  CHECK(w.size() == 6);
  CHECK(std::is_sorted(w.begin(), w.end(), [](const DominantWeight& x, const DominantWeight& y) {
    return x.labels < y.labels;
  }));
}

TEST_CASE("simply laced roots are the norm-2 vectors of the root lattice") {
  for (const char* type : {"A3", "D5", "E6", "E8"}) {
    const auto r = RootSystem::parse(type);
    const Lattice l = root_lattice(r.family(), r.rank());
    std::vector<CoordVector> roots;
    for (const auto& p : r.positive_roots()) {
      const CoordVector v = p.cast<Coord>();
      roots.push_back(v);
      roots.push_back(-v);
    }
    std::sort(roots.begin(), roots.end(), lex_less);
    std::vector<CoordVector> shell;
    for (const auto& v : enumerate_vectors(l, 2))
      if (v.norm == 2) shell.push_back(v.coords);
    REQUIRE(shell.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(shell[i] == roots[i]);
  }
}
