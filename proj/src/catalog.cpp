#include "zhuc2/catalog.hpp"

#include "zhuc2/lie.hpp"

#include <charconv>
#include <string>

namespace zhuc2 {

namespace {

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

Lattice root_lattice(char family, int rank) {
  if (family != 'A' && family != 'D' && family != 'E')
    throw std::invalid_argument("root lattices are built for simply-laced types only");
  const lie::RootSystem system(family, rank);
  IntMatrix gram(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) gram(i, j) = numerator(system.form()(i, j));
  return make_lattice(gram, system.name());
}

Lattice rank_one_lattice(Coord norm) {
  IntMatrix gram(1, 1);
  gram(0, 0) = norm;
  return make_lattice(gram, "rank1_" + std::to_string(norm));
}

Lattice spinor_glued_dn_a1(int n) {
  // Ambient coordinates doubled: Z^n (form 1) plus one A_1 axis (form 2).
  const int dim = n + 1;
  IntMatrix gens = IntMatrix::Zero(n + 2, dim);
  for (int i = 0; i + 1 < n; ++i) {
    gens(i, i) = 2;
    gens(i, i + 1) = -2;
  }
  gens(n - 1, n - 2) = 2;
  gens(n - 1, n - 1) = 2;
  gens(n, n) = 2;  // the A_1 root
  for (int i = 0; i < dim; ++i) gens(n + 1, i) = 1;
  IntMatrix form = IntMatrix::Identity(dim, dim);
  form(n, n) = 2;
  return lattice_from_generators(gens, form, 2,
                                 "D" + std::to_string(n) + "A1_11");
}

std::optional<Lattice> named_lattice(std::string_view name) {
  if (name == "D14A1_11") return spinor_glued_dn_a1(14);
  if (name.starts_with("rank1_")) {
    auto v = parse_int(name.substr(6));
    if (!v || *v <= 0 || *v % 2 != 0) return std::nullopt;
    return rank_one_lattice(*v);
  }
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D' || name[0] == 'E')) {
    auto r = parse_int(name.substr(1));
    if (!r) return std::nullopt;
    const char f = name[0];
    if ((f == 'A' && *r >= 1) || (f == 'D' && *r >= 4) || (f == 'E' && *r >= 6 && *r <= 8))
      return root_lattice(f, *r);
  }
  return std::nullopt;
}

}  // namespace zhuc2
