// zhuc2: dimensions of Zhu's algebra and the C2-algebra for lattice,
// affine and Virasoro minimal-model VOAs. All reports are JSON.

#include "zhuc2/affine_voa.hpp"
#include "zhuc2/catalog.hpp"
#include "zhuc2/lattice_voa.hpp"
#include "zhuc2/minimal_models.hpp"
#include "zhuc2/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace zhuc2;

namespace {

enum ExitCode { kOk = 0, kParse = 2, kResource = 3, kValidation = 4 };

class UnknownLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string effort = "full";
  int max_degree = QuotientCaps{}.max_degree;
  std::size_t max_monomials = QuotientCaps{}.max_monomials;
  std::size_t max_enumeration = QuotientCaps{}.max_enumeration;
  unsigned threads = 0;
  std::string out;
  bool pretty = false;

  QuotientCaps caps() const { return {max_degree, max_monomials, max_enumeration, threads}; }
  Effort effort_level() const { return effort == "bound_only" ? Effort::BoundOnly : Effort::Full; }
};

Lattice resolve_lattice(const std::string& arg) {
  const fs::path path(arg);
  if (path.extension() == ".json" || fs::is_regular_file(path)) return load_lattice_file(path);
  if (auto named = named_lattice(arg)) return *named;
  throw UnknownLattice("unknown lattice: " + arg);
}

std::string cell(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string verdict_table(const Json& records) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "lattice" << std::right << std::setw(10) << "zhu" << std::setw(10) << "c2"
     << std::setw(10) << "bound" << std::setw(8) << "|S_L|" << "  verdict\n";
  for (const auto& r : records)
    os << std::left << std::setw(14) << cell(r["lattice"]) << std::right << std::setw(10) << cell(r["zhu_dim"])
       << std::setw(10) << cell(r["c2_dim"]) << std::setw(10) << cell(r["c2_lower_bound"]) << std::setw(8)
       << cell(r["small_vector_count"]) << "  " << cell(r["verdict"]) << "\n";
  return os.str();
}

void emit(const Json& report, const RunConfig& cfg, bool verdicts = false) {
  std::string text;
  if (cfg.pretty) {
    if (verdicts) text = verdict_table(report.is_array() ? report : Json::array({report}));
    else text = report.dump(2) + "\n";
  } else {
    text = report.dump() + "\n";
  }
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

int fail(const std::string& kind, const std::string& message, int code, const Json& evidence = nullptr) {
  Json err{{"error", kind}, {"message", message}};
  if (!evidence.is_null()) err["evidence"] = evidence;
  std::cout << err.dump() << "\n";
  return code;
}

Json zhu_report(const Lattice& l) {
  Json counts = Json::array();
  for (const auto& c : discriminant_cosets(l)) counts.push_back(to_json(c.min_count));
  return Json{{"lattice", l.name()}, {"zhu_dim", to_json(zhu_dim_lattice(l))}, {"coset_min_counts", counts}};
}

Json c2_report(const Lattice& l, const QuotientCaps& caps) {
  const auto c2 = c2_dim_lattice(l, caps);
  Json per_alpha = Json::array();
  for (const auto& a : c2.per_alpha)
    per_alpha.push_back(Json{{"alpha", to_json(a.alpha.coords)}, {"dims", a.graded.dims}});
  return Json{{"lattice", l.name()},
              {"c2_dim", to_json(c2.total)},
              {"small_vector_count", c2.per_alpha.size()},
              {"per_alpha", per_alpha}};
}

Json bound_report(const Lattice& l) {
  const auto s = summary(l);
  return Json{{"lattice", l.name()},
              {"rank", l.rank()},
              {"mu", s.mu},
              {"M", to_json(s.count)},
              {"c2_lower_bound", to_json(c2_lower_bound(l))}};
}

Json catalog_report(const fs::path& dir, const RunConfig& cfg) {
  if (!fs::is_directory(dir)) throw FormatError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Lattice> lattices;
  for (const auto& f : files) lattices.push_back(load_lattice_file(f));  // validate everything first
  Json out = Json::array();
  for (const auto& l : lattices) out.push_back(verdict_json(anomaly_verdict(l, cfg.effort_level(), cfg.caps())));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zhu's algebra and C2-algebra dimensions for lattice, affine and minimal-model VOAs"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("ZHUC2_THREADS")) cfg.threads = static_cast<unsigned>(std::atoi(env));

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
    cmd->add_flag("--pretty", cfg.pretty, "Human-readable output");
  };
  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--effort", cfg.effort, "full or bound_only")
        ->check(CLI::IsMember({"full", "bound_only"}));
    cmd->add_option("--max-degree", cfg.max_degree, "Largest oscillator degree examined")->check(CLI::PositiveNumber);
    cmd->add_option("--max-monomials", cfg.max_monomials, "Largest monomial basis per degree")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-enumeration", cfg.max_enumeration, "Largest lattice-vector enumeration")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", cfg.threads, "Worker threads (default: $ZHUC2_THREADS or all cores)");
  };

  // lattice
  auto* lattice = app.add_subcommand("lattice", "Lattice VOA computations");
  lattice->require_subcommand(1);
  std::string lattice_arg;
  std::string lattice_action;
  for (const char* action : {"info", "zhu", "c2", "bound", "classify", "export"}) {
    auto* sub = lattice->add_subcommand(action);
    sub->add_option("lattice", lattice_arg, "Catalog name (A3, E8, D14A1_11, rank1_4, ...) or JSON file")
        ->required();
    add_common(sub);
    add_caps(sub);
    sub->callback([&lattice_action, action] { lattice_action = action; });
  }

  // affine
  auto* affine_cmd = app.add_subcommand("affine", "Affine Lie algebra VOAs");
  affine_cmd->require_subcommand(1);
  std::string algebra;
  int level = 1;
  int sl_n = 2;
  int order = -1;
  auto* affine_zhu = affine_cmd->add_subcommand("zhu", "Zhu dimension of V_{g,k}");
  affine_zhu->add_option("algebra", algebra, "A1, B2, E8, G2, ...")->required();
  affine_zhu->add_option("level", level)->required()->check(CLI::PositiveNumber);
  add_common(affine_zhu);
  auto* affine_conj = affine_cmd->add_subcommand("c2-conj", "Grade-by-grade C2 conjecture for sl(N) at level k");
  affine_conj->add_option("N", sl_n)->required()->check(CLI::Range(2, 64));
  affine_conj->add_option("level", level)->required()->check(CLI::PositiveNumber);
  add_common(affine_conj);
  auto* affine_char = affine_cmd->add_subcommand("sl2-char", "Refined sl(2) character and its C2 part");
  affine_char->add_option("level", level)->required()->check(CLI::PositiveNumber);
  affine_char->add_option("--order", order, "Truncation order in q (default 2k)");
  add_common(affine_char);

  // minimal
  auto* minimal_cmd = app.add_subcommand("minimal", "Virasoro minimal model (p, q)");
  long p = 0;
  long q = 0;
  minimal_cmd->add_option("p", p)->required();
  minimal_cmd->add_option("q", q)->required();
  add_common(minimal_cmd);

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Batch runs over lattice files");
  catalog->require_subcommand(1);
  auto* catalog_run = catalog->add_subcommand("run", "Classify every *.json lattice in a directory");
  std::string catalog_dir;
  catalog_run->add_option("dir", catalog_dir)->required();
  add_common(catalog_run);
  add_caps(catalog_run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("ParseError", e.what(), kParse);
  }

  try {
    if (lattice->parsed()) {
      const Lattice l = resolve_lattice(lattice_arg);
      if (lattice_action == "info") emit(summary_json(l), cfg);
      else if (lattice_action == "zhu") emit(zhu_report(l), cfg);
      else if (lattice_action == "c2") emit(c2_report(l, cfg.caps()), cfg);
      else if (lattice_action == "bound") emit(bound_report(l), cfg);
      else if (lattice_action == "export") emit(lattice_to_json(l), cfg);
      else emit(verdict_json(anomaly_verdict(l, cfg.effort_level(), cfg.caps())), cfg, true);
    } else if (affine_zhu->parsed()) {
      const auto system = lie::RootSystem::parse(algebra);
      emit(affine_json(system, level, affine::affine_zhu_dim(system, level), nullptr), cfg);
    } else if (affine_conj->parsed()) {
      const auto total = affine::slN_c2_total(sl_n, level);
      emit(affine_json(lie::RootSystem('A', sl_n - 1), level, total.zhu_dim, &total), cfg);
    } else if (affine_char->parsed()) {
      emit(sl2_character_json(level, order < 0 ? 2 * level : order), cfg);
    } else if (minimal_cmd->parsed()) {
      emit(minimal_json(p, q, minimal::minimal_dims(p, q)), cfg);
    } else if (catalog_run->parsed()) {
      emit(catalog_report(catalog_dir, cfg), cfg, true);
    }
  } catch (const UnknownLattice& e) {
    return fail("UnknownLattice", e.what(), kValidation);
  } catch (const FormatError& e) {
    return fail("ParseError", e.what(), kParse);
  } catch (const ResourceLimit& e) {
    return fail("ResourceLimit", e.what(), kResource);
  } catch (const affine::ConjectureViolation& e) {
    const auto& ev = e.evidence();
    return fail("ConjectureViolation", e.what(), kValidation,
                affine_json(lie::RootSystem('A', ev.n - 1), ev.k, ev.zhu_dim, &ev));
  } catch (const LatticeError& e) {
    return fail("ValidationError", e.what(), kValidation);
  } catch (const minimal::MinimalModelError& e) {
    return fail(e.kind() == minimal::MinimalModelError::Kind::NotCoprime ? "NotCoprime" : "OutOfRange", e.what(),
                kValidation);
  } catch (const NotSmall& e) {
    return fail("NotSmall", e.what(), kValidation);
  } catch (const std::invalid_argument& e) {
    return fail("ValidationError", e.what(), kValidation);
  }
  return kOk;
}
