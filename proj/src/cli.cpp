#include "canondeg/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "canondeg/degrees.hpp"
#include "canondeg/error.hpp"
#include "canondeg/herzog.hpp"
#include "canondeg/numerical_semigroup.hpp"
#include "canondeg/report_io.hpp"
#include "canondeg/search.hpp"

namespace canondeg {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

void line(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(20) << key << value << '\n';
}

NumericalSemigroup semigroup_from_text(const std::string& text) {
  return NumericalSemigroup::from_generators(parse_generators(text));
}

int cmd_analyze(const std::string& gens, bool as_json, std::ostream& out) {
  const NumericalSemigroup h = semigroup_from_text(gens);
  const DegreeReport r = classify(h);
  if (as_json) {
    out << nlohmann::json(r).dump() << '\n';
    return kExitOk;
  }
  const SemigroupProfile p = h.profile();
  line(out, "semigroup", h.to_string());
  line(out, "multiplicity", std::to_string(r.multiplicity));
  line(out, "frobenius", std::to_string(r.frobenius));
  line(out, "genus", std::to_string(r.genus));
  line(out, "n(H)", std::to_string(r.n_of));
  line(out, "type", std::to_string(r.type));
  line(out, "pseudo-Frobenius", join(p.pseudo_frobenius));
  line(out, "cdeg", std::to_string(r.cdeg));
  line(out, "bideg", std::to_string(r.bideg));
  line(out, "canonical index", std::to_string(r.rho) + (r.rho_by_convention ? " (Gorenstein convention)" : ""));
  line(out, "power steps", join(r.power_steps));
  line(out, "e1(K)", std::to_string(r.e1));
  line(out, "s0", std::to_string(r.s0));
  line(out, "agl level", std::to_string(r.agl_level));
  line(out, "Gorenstein", yes_no(r.type == 1));
  line(out, "almost Gorenstein", yes_no(r.agl_level <= 1));
  line(out, "Goto", yes_no(r.is_goto));
  line(out, "nearly Gorenstein", yes_no(r.is_nearly_gorenstein));
  line(out, "far-flung", yes_no(r.is_far_flung));
  line(out, "comparison",
       std::string(r.comparison_holds ? "holds" : "FAILS") + " (bideg " + std::to_string(r.bideg) +
           (r.comparison_holds ? " <= " : " > ") + "cdeg " + std::to_string(r.cdeg) + ")");
  const AugmentedPrediction aug = augmented_predictions(r);
  if (aug.cdeg) {
    std::string s = "cdeg " + std::to_string(*aug.cdeg) + ", type " + std::to_string(*aug.type);
    if (aug.bideg) s += ", bideg " + std::to_string(*aug.bideg);
    line(out, "augmented R x m", s);
  }
  return kExitOk;
}

int cmd_herzog(const std::string& gens, bool as_json, std::ostream& out) {
  const std::vector<int> g = parse_generators(gens);
  if (g.size() != 3)
    throw SemigroupError(ErrorKind::NotThreeGenerated, "herzog needs exactly three generators, got " + std::to_string(g.size()));
  const HerzogMatrix m = herzog_matrix(g[0], g[1], g[2]);
  const NumericalSemigroup h = NumericalSemigroup::from_generators(g);
  const int cdeg_formula = cdeg_closed_form(m);
  const int bideg_formula = bideg_closed_form(m);
  const Comparison ideal = comparison(h);
  const AglPattern agl = agl_from_matrix(m);
  const ThreeAglProbe probe = three_agl_patterns(m);

  if (as_json) {
    nlohmann::json j = m;
    j["cdeg"] = cdeg_formula;
    j["bideg"] = bideg_formula;
    j["cdeg_ideal"] = ideal.cdeg;
    j["bideg_ideal"] = ideal.bideg;
    j["agl"] = agl.is_agl;
    j["two_agl"] = agl.is_2agl;
    j["cube_top_pattern"] = probe.cube_top;
    j["square_top_unit_pattern"] = probe.square_top_unit;
    out << j.dump() << '\n';
    return kExitOk;
  }
  line(out, "semigroup", h.to_string());
  out << "herzog matrix (X=t^" << m.order[0] << ", Y=t^" << m.order[1] << ", Z=t^" << m.order[2] << ")\n"
      << "  ( X^" << m.a1 << "  Y^" << m.b1 << "  Z^" << m.c1 << " )\n"
      << "  ( Y^" << m.b2 << "  Z^" << m.c2 << "  X^" << m.a2 << " )\n";
  line(out, "rows", join({m.a1, m.b1, m.c1}, ",") + " / " + join({m.b2, m.c2, m.a2}, ","));
  line(out, "cdeg", std::to_string(cdeg_formula) + " (ideal computation " + std::to_string(ideal.cdeg) + ")");
  line(out, "bideg", std::to_string(bideg_formula) + " (ideal computation " + std::to_string(ideal.bideg) + ")");
  line(out, "AGL", yes_no(agl.is_agl));
  line(out, "2-AGL", yes_no(agl.is_2agl));
  line(out, "(X^3,Y,Z) pattern", yes_no(probe.cube_top));
  line(out, "(X^2,Y,Z;..,X) pat.", yes_no(probe.square_top_unit));
  return kExitOk;
}

int cmd_mm(const std::string& gens, bool as_json, std::ostream& out) {
  const NumericalSemigroup h = semigroup_from_text(gens);
  const MmAnalysis a = mm_analysis(h);
  if (as_json) {
    nlohmann::json j{{"generators", h.generators()},
                     {"overring", a.overring.generators()},
                     {"cdeg", a.cdeg},
                     {"bideg", a.bideg},
                     {"predicted_cdeg", a.predicted_cdeg},
                     {"matches", a.matches}};
    out << j.dump() << '\n';
    return kExitOk;
  }
  const SemigroupProfile p = h.profile();
  line(out, "semigroup", h.to_string());
  line(out, "(m:m)", a.overring.to_string());
  line(out, "cdeg(A)", std::to_string(a.cdeg));
  line(out, "bideg(A)", std::to_string(a.bideg));
  line(out, "predicted cdeg(A)",
       std::to_string(canonical_degree(h)) + " + " + std::to_string(p.multiplicity) + " - 2*" + std::to_string(p.type) +
           " = " + std::to_string(a.predicted_cdeg));
  line(out, "matches", yes_no(a.matches));
  return kExitOk;
}

struct SearchArgs {
  int max_genus = 0;
  std::optional<int> type_min;
  std::optional<int> type_max;
  std::string predicate = "violations-only";
  std::string out_path;
  std::string format = "tsv";
  int threads = 0;
  bool serial = false;
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  SearchSpec spec;
  spec.max_genus = args.max_genus;
  spec.type_min = args.type_min;
  spec.type_max = args.type_max;
  spec.predicate = parse_predicate(args.predicate);
  spec.threads = args.threads;

  std::ofstream file;
  if (!args.out_path.empty()) {
    file.open(args.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write to " << args.out_path << '\n';
      return kExitUsage;
    }
  }
  std::ostream& rows = args.out_path.empty() ? out : file;
  std::ostream& summary = args.out_path.empty() ? err : out;

  const SearchResult result = args.serial ? search_serial(spec) : search_parallel(spec);
  for (const auto& r : result.rows) {
    if (args.format == "jsonl")
      rows << nlohmann::json(r).dump() << '\n';
    else
      rows << tsv_row(r) << '\n';
  }
  rows.flush();
  if (!rows) {
    err << "error: failed writing rows\n";
    return kExitUsage;
  }
  summary << "visited " << result.visited << " emitted " << result.rows.size() << " violations " << result.violations
          << (result.violations > 0 ? "  [comparison bideg <= cdeg FAILS]" : "") << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical and bi-canonical degrees of numerical semigroup rings"};
  app.require_subcommand(1);

  std::string gens;
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "All invariants and the classification of one semigroup");
  analyze->add_option("generators", gens, "comma-separated generators, e.g. 5,7,9")->required();
  analyze->add_flag("--json", as_json, "print the report as one JSON object");

  auto* herzog = app.add_subcommand("herzog", "Herzog matrix and closed-form degrees of <a,b,c>");
  herzog->add_option("generators", gens, "three comma-separated generators a,b,c")->required();
  herzog->add_flag("--json", as_json, "print as JSON");

  auto* mm = app.add_subcommand("mm", "Invariants of the overring (m:m)");
  mm->add_option("generators", gens, "comma-separated generators")->required();
  mm->add_flag("--json", as_json, "print as JSON");

  SearchArgs sa;
  auto* search = app.add_subcommand(
      "search",
      "Walk every semigroup of genus <= N and emit rows matching a predicate.\n"
      "TSV columns: generators, type, multiplicity, frobenius, genus, cdeg, bideg, rho, e1, s0,\n"
      "agl_level, goto, nearly_gor, far_flung, comparison_holds (tab separated, flags 0/1, no header).\n"
      "Rows are ordered by genus, then generator list.");
  search->add_option("--max-genus", sa.max_genus, "largest genus to visit")->required()->check(CLI::NonNegativeNumber);
  search->add_option("--type-min", sa.type_min, "only semigroups of type >= this");
  search->add_option("--type-max", sa.type_max, "only semigroups of type <= this");
  search->add_option("--predicate", sa.predicate, "violations-only | all | goto | far-flung | n-agl:N")
      ->capture_default_str();
  search->add_option("--out", sa.out_path, "write rows here instead of stdout");
  search->add_option("--format", sa.format, "tsv | jsonl")->check(CLI::IsMember({"tsv", "jsonl"}))->capture_default_str();
  search->add_option("--threads", sa.threads, "worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  search->add_flag("--serial", sa.serial, "use the single-threaded reference walk");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(gens, as_json, out);
    if (*herzog) return cmd_herzog(gens, as_json, out);
    if (*mm) return cmd_mm(gens, as_json, out);
    if (*search) return cmd_search(sa, out, err);
  } catch (const SemigroupError& e) {
    if (e.kind() == ErrorKind::GorensteinCase) {
      err << "symmetric (Gorenstein): no Herzog matrix\n";
      return kExitGorenstein;
    }
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InternalMismatch ? kExitInternal : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace canondeg
