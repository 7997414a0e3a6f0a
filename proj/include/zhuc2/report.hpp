#pragma once

// JSON forms of lattices and result records.

#include "zhuc2/affine_voa.hpp"
#include "zhuc2/lattice.hpp"
#include "zhuc2/lattice_voa.hpp"
#include "zhuc2/minimal_models.hpp"

#include "json.hpp"

#include <filesystem>

namespace zhuc2 {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const CoordVector& v);

/// {"name": string, "gram": [[int, ...], ...]}
Lattice lattice_from_json(const Json& j);
Json lattice_to_json(const Lattice& lattice);
Lattice load_lattice_file(const std::filesystem::path& path);

Json summary_json(const Lattice& lattice);
Json verdict_json(const VerdictRecord& record);
Json affine_json(const lie::RootSystem& system, int level, const Integer& zhu_dim,
                 const affine::SlNC2Total* conjecture);
Json sl2_character_json(int k, int truncation);
Json minimal_json(long p, long q, const minimal::MinimalDims& dims);

}  // namespace zhuc2
