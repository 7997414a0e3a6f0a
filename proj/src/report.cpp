#include "zhuc2/report.hpp"

#include <fstream>

namespace zhuc2 {

Json to_json(const Integer& v) {
  if (v <= Integer(INT64_MAX) && v >= Integer(INT64_MIN)) return v.convert_to<std::int64_t>();
  return v.str();
}

Json to_json(const Rational& v) {
  if (is_integral(v)) return to_json(numerator(v));
  return v.str();
}

Json to_json(const CoordVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Lattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram")) throw FormatError("lattice JSON needs a \"gram\" field");
  const auto& rows = j.at("gram");
  if (!rows.is_array()) throw FormatError("\"gram\" must be an array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw FormatError("row " + std::to_string(i) + " of \"gram\" has the wrong length");
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (!e.is_number_integer()) throw FormatError("\"gram\" entries must be integers");
      gram(i, c) = e.get<std::int64_t>();
    }
  }
  std::string name = j.value("name", std::string{});
  return make_lattice(gram, std::move(name));
}

Json lattice_to_json(const Lattice& lattice) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < lattice.rank(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < lattice.rank(); ++c) row.push_back(to_json(lattice.gram()(i, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"name", lattice.name()}, {"gram", std::move(rows)}};
}

Lattice load_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  Lattice l = lattice_from_json(j);
  if (l.name().empty()) l = l.renamed(path.stem().string());
  return l;
}

Json summary_json(const Lattice& lattice) {
  const auto s = summary(lattice);
  Json cosets = Json::array();
  for (const auto& c : discriminant_cosets(lattice)) {
    Json rep = Json::array();
    for (Eigen::Index i = 0; i < c.representative.size(); ++i) rep.push_back(to_json(c.representative(i)));
    cosets.push_back(Json{{"representative", rep}, {"min_norm", to_json(c.min_norm)}, {"count", to_json(c.min_count)}});
  }
  return Json{{"lattice", lattice.name()},
              {"rank", lattice.rank()},
              {"det", to_json(s.det)},
              {"mu", s.mu},
              {"M", to_json(s.count)},
              {"covering_radius_bound", to_json(covering_radius_bound(lattice))},
              {"cosets", cosets}};
}

Json verdict_json(const VerdictRecord& r) {
  Json per_alpha = Json::array();
  for (const auto& a : r.per_alpha)
    per_alpha.push_back(Json{{"alpha", to_json(a.alpha.coords)}, {"dims", a.graded.dims}});
  Json out{{"lattice", r.lattice},
           {"zhu_dim", to_json(r.zhu_dim)},
           {"c2_dim", r.c2_dim ? to_json(*r.c2_dim) : Json(nullptr)},
           {"c2_lower_bound", to_json(r.c2_lower_bound)},
           {"small_vector_count", r.small_vector_count ? Json(*r.small_vector_count) : Json(nullptr)},
           {"per_alpha", std::move(per_alpha)},
           {"verdict", to_string(r.verdict)}};
  if (!r.diagnostics.empty()) out["diagnostics"] = r.diagnostics;
  return out;
}

Json affine_json(const lie::RootSystem& system, int level, const Integer& zhu_dim,
                 const affine::SlNC2Total* conjecture) {
  Json out{{"algebra", system.name()}, {"level", level}, {"zhu_dim", to_json(zhu_dim)}};
  if (conjecture) {
    Json grades = Json::array();
    for (const auto& g : conjecture->per_grade) grades.push_back(to_json(g.dim));
    out["c2_conjecture"] =
        Json{{"per_grade", grades}, {"total", to_json(conjecture->total)}, {"matches_zhu", conjecture->matches_zhu}};
  }
  return out;
}

Json sl2_character_json(int k, int truncation) {
  const auto series = affine::sl2_refined_character(k, truncation);
  const auto c2 = affine::sl2_c2_from_character(k, truncation);
  Json grades = Json::array();
  for (std::size_t m = 0; m < c2.size(); ++m)
    grades.push_back(Json{{"grade", m},
                          {"character", c2[m].str()},
                          {"dim", to_json(c2[m].at_one())},
                          {"closed_form_dim", to_json(affine::sl2_c2_closed_form(k, static_cast<int>(m)).at_one())}});
  Json unit = Json::array();
  for (const auto& c : series.at_unit()) unit.push_back(to_json(c));
  return Json{{"algebra", "A1"}, {"level", k}, {"truncation", truncation}, {"character_at_unit", unit},
              {"c2_per_grade", grades}};
}

Json minimal_json(long p, long q, const minimal::MinimalDims& dims) {
  return Json{{"p", p},
              {"q", q},
              {"zhu_dim", to_json(dims.zhu_dim)},
              {"c2_dim", to_json(dims.c2_dim)},
              {"verdict", dims.c2_dim > dims.zhu_dim ? "Anomalous" : "NonAnomalous"}};
}

}  // namespace zhuc2
