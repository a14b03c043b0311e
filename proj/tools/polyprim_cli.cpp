#include "polyprim/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <stdexcept>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace polyprim;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<FamilyKind> parse_families(const std::string& text) {
  if (text == "all")
    return {FamilyKind::Suzuki, FamilyKind::SmallRee, FamilyKind::LargeRee};
  std::vector<FamilyKind> out;
  for (const std::string& token : split_commas(text)) {
    if (token == "sz") out.push_back(FamilyKind::Suzuki);
    else if (token == "ree-small") out.push_back(FamilyKind::SmallRee);
    else if (token == "ree-large") out.push_back(FamilyKind::LargeRee);
    else throw std::invalid_argument("unknown family: " + token);
  }
  if (out.empty()) throw std::invalid_argument("no families given");
  return out;
}

std::vector<PolygonKind> parse_kinds(const std::string& text) {
  if (text == "both") return {PolygonKind::Hexagon, PolygonKind::Octagon};
  std::vector<PolygonKind> out;
  for (const std::string& token : split_commas(text)) {
    if (token == "hexagon") out.push_back(PolygonKind::Hexagon);
    else if (token == "octagon") out.push_back(PolygonKind::Octagon);
    else throw std::invalid_argument("unknown kind: " + token);
  }
  if (out.empty()) throw std::invalid_argument("no kinds given");
  return out;
}

std::pair<unsigned long, unsigned long> parse_m_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      unsigned long m = std::stoul(text);
      return {m, m};
    }
    unsigned long lo = std::stoul(text.substr(0, pos));
    unsigned long hi = std::stoul(text.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("expected --m A or A..B, got: " + text);
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << text;
  if (!file.good())
    throw std::runtime_error("write failed for output file: " + out_path);
}

int run_sweep_command(const std::string& families, const std::string& m_range,
                      const std::string& kinds, const std::string& format,
                      unsigned long factor_effort,
                      const std::string& out_path) {
  SweepConfig config;
  config.families = parse_families(families);
  config.kinds = parse_kinds(kinds);
  std::tie(config.m_min, config.m_max) = parse_m_range(m_range);
  config.effort = FactorEffort{factor_effort, 20 * factor_effort};
  std::optional<OutputFormat> fmt = parse_format(format);
  if (!fmt)
    throw std::invalid_argument("expected --format json, md or csv, got: " +
                                format);
  std::vector<CaseReport> reports = run_sweep(config);
  emit(render_report(reports, *fmt), out_path);
  return exit_code_for(summarize(reports));
}

int run_case_command(const std::string& family_text, unsigned long m,
                     const std::string& label, const std::string& kind_text,
                     unsigned long factor_effort, bool trace) {
  std::vector<FamilyKind> families = parse_families(family_text);
  std::vector<PolygonKind> kinds = parse_kinds(kind_text);
  if (families.size() != 1)
    throw std::invalid_argument("exactly one --family required");
  if (kinds.size() != 1)
    throw std::invalid_argument("exactly one --kind required");

  CatalogueCase c = find_case(families[0], m, label);
  CaseReport report;
  report.family = c.family;
  report.m = c.m;
  report.q = field_size(c.family, c.m);
  report.label = c.label;
  report.case_index = c.index;
  report.kind = kinds[0];
  report.point_count = case_point_count(c);
  report.verdict =
      evaluate_case(c, kinds[0], FactorEffort{factor_effort, 20 * factor_effort});
  report.crosscheck = crosscheck_status(c, kinds[0]);

  if (trace) {
    emit(render_report({report}, OutputFormat::Json), "");
  } else {
    std::cout << report.label << " (" << family_display(report.family)
              << ", m=" << report.m << ", q=" << report.q.get_str() << ", "
              << kind_name(report.kind) << ")\n";
    std::cout << "stabiliser: " << c.structure << "\n";
    std::cout << "point count: " << report.point_count.get_str() << "\n";
    std::cout << "verdict: " << outcome_name(report.verdict.outcome) << " ["
              << report.verdict.test << "]\n";
    for (const auto& reason : report.verdict.reasons)
      std::cout << "  " << reason << "\n";
    for (const auto& w : report.verdict.witnesses)
      std::cout << "  witness (s,t) = (" << w.s.get_str() << ","
                << w.t.get_str() << ")\n";
    std::cout << "crosscheck: " << report.crosscheck << "\n";
  }
  SweepSummary summary = summarize({report});
  return exit_code_for(summary);
}

int run_verify_command(const std::string& suite, unsigned long limit) {
  VerifyResult result;
  if (suite == "lemma") {
    result = verify_lemma(Natural(limit ? limit : 1000000ul));
  } else if (suite == "solver") {
    result = verify_solver(limit ? limit : 20000ul);
  } else if (suite == "subdegree") {
    result = verify_subdegree(limit ? limit : 2000ul);
  } else if (suite == "refined") {
    result = verify_refined(limit ? limit : 2000ul);
  } else {
    throw std::invalid_argument(
        "expected --suite lemma, solver, subdegree or refined, got: " + suite);
  }
  std::cout << "suite " << result.suite << ": "
            << (result.passed ? "pass" : "FAIL") << " (" << result.summary
            << ")\n";
  for (const auto& failure : result.failures)
    std::cout << "  " << failure << "\n";
  return result.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exhaustive case analysis for point-primitive generalised hexagons and "
      "octagons with a stabiliser from the twisted families over small "
      "fields"};
  app.require_subcommand(1);

  std::string sw_families = "all", sw_m = "3..13", sw_kinds = "both";
  std::string sw_format = "json", sw_out;
  unsigned long sw_effort = 100000;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "evaluate every catalogue case over a range of exponents");
  sweep->add_option("--family", sw_families,
                    "comma list of sz,ree-small,ree-large, or all");
  sweep->add_option("--m", sw_m, "odd exponent range A..B, or a single A");
  sweep->add_option("--kind", sw_kinds,
                    "comma list of hexagon,octagon, or both");
  sweep->add_option("--format", sw_format, "json, md or csv");
  sweep->add_option("--factor-effort", sw_effort,
                    "trial-division bound (rho budget scales with it)");
  sweep->add_option("--out", sw_out, "write the report here instead of stdout");

  std::string c_family, c_label, c_kind;
  unsigned long c_m = 0, c_effort = 100000;
  bool c_trace = false;
  CLI::App* case_cmd =
      app.add_subcommand("case", "evaluate one catalogue case");
  case_cmd->add_option("--family", c_family, "sz, ree-small or ree-large")
      ->required();
  case_cmd->add_option("--m", c_m, "odd exponent, >= 3")->required();
  case_cmd->add_option("--case", c_label, "catalogue label, e.g. Sz:(ii)")
      ->required();
  case_cmd->add_option("--kind", c_kind, "hexagon or octagon")->required();
  case_cmd->add_option("--factor-effort", c_effort, "trial-division bound");
  case_cmd->add_flag("--trace", c_trace,
                     "emit the full evidence record as json");

  std::string v_suite;
  unsigned long v_limit = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", v_suite, "lemma, solver, subdegree or refined")
      ->required();
  verify->add_option("--limit", v_limit,
                     "cap / limit / bound / sample count for the suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sweep->parsed())
      return run_sweep_command(sw_families, sw_m, sw_kinds, sw_format,
                               sw_effort, sw_out);
    if (case_cmd->parsed())
      return run_case_command(c_family, c_m, c_label, c_kind, c_effort,
                              c_trace);
    return run_verify_command(v_suite, v_limit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
