#pragma once

// Named lattices: root lattices, rank-one lattices, and the glued D14A1[11].

#include "zhuc2/lattice.hpp"

#include <optional>
#include <string_view>

namespace zhuc2 {

/// Root lattice of a simply-laced type (A_n, D_n, E_6..E_8), Bourbaki order.
Lattice root_lattice(char family, int rank);

/// The rank-one lattice <norm>, norm even and positive.
Lattice rank_one_lattice(Coord norm);

/// D_n + A_1 with the glue vector (spinor class of D_n, nonzero class of A_1).
/// Even for n = 2 mod 4 (spinor norm n/4 plus 1/2 is an even integer).
Lattice spinor_glued_dn_a1(int n);

/// Resolves "A3", "D4", "E8", "D14A1_11", "rank1_6"; nullopt if unknown.
std::optional<Lattice> named_lattice(std::string_view name);

}  // namespace zhuc2
