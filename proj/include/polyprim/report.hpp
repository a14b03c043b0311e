#pragma once

// Sweep orchestration, rendering (json / markdown / csv), crosschecking of
// published index displays, and the verification suites behind the CLI's
// `verify` subcommand. Rendering is byte-deterministic: big integers are
// decimal strings, keys are ordered, no floats, no timestamps.

#include "polyprim/eliminator.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyprim {

enum class OutputFormat { Json, Markdown, Csv };
std::optional<OutputFormat> parse_format(std::string_view token);

struct SweepConfig {
  std::vector<FamilyKind> families;  // nonempty
  unsigned long m_min = 3;           // odd, >= 3
  unsigned long m_max = 3;           // odd, >= m_min
  std::vector<PolygonKind> kinds;    // nonempty
  FactorEffort effort;
};

struct CaseReport {
  FamilyKind family = FamilyKind::Suzuki;
  unsigned long m = 0;
  Natural q;
  std::string label;
  unsigned long case_index = 0;
  PolygonKind kind = PolygonKind::Hexagon;
  Natural point_count;
  Verdict verdict;
  std::string crosscheck;  // "match" | "mismatch" | "n/a"
  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

// Evaluates every (family, m, case, kind) in the config, in canonical order:
// family enum order, m ascending, catalogue index, hexagon before octagon.
// Throws on invalid config (empty selections, bad m range).
std::vector<CaseReport> run_sweep(const SweepConfig& config);

struct SweepSummary {
  unsigned long classical = 0;
  unsigned long eliminated = 0;
  unsigned long survives = 0;
  unsigned long inconclusive = 0;
  unsigned long total = 0;
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};
SweepSummary summarize(const std::vector<CaseReport>& reports);

// 0 when every verdict is definitive, 2 when any Inconclusive is present.
int exit_code_for(const SweepSummary& summary);

std::string render_report(const std::vector<CaseReport>& reports,
                          OutputFormat format);

// Inverse of the Json rendering; round-trips every field.
std::vector<CaseReport> parse_report_json(const std::string& text);

struct CrosscheckRow {
  std::string label;
  PolygonKind kind = PolygonKind::Hexagon;
  std::optional<Natural> displayed;
  Natural exact;
  std::string status;  // "match" | "mismatch" | "n/a"
  friend bool operator==(const CrosscheckRow&, const CrosscheckRow&) = default;
};

// Published index displays vs exact quotients, one row per (case, kind).
std::vector<CrosscheckRow> index_crosscheck(FamilyKind family,
                                            unsigned long m);
std::string crosscheck_status(const CatalogueCase& c, PolygonKind kind);

struct VerifyResult {
  std::string suite;
  bool passed = false;
  unsigned long checks = 0;
  std::vector<std::string> failures;  // first few, human readable
  std::string summary;
};

// lemma: every admissible count <= cap respects every bound clause.
VerifyResult verify_lemma(const Natural& cap);
// solver: solve_orders == brute_solve_orders for all 1 <= n <= limit, both kinds.
VerifyResult verify_solver(unsigned long limit);
// subdegree: exhaustive assignment search vs brute (s,t) scan, negative and
// positive controls.
VerifyResult verify_subdegree(unsigned long bound);
// refined: deterministic pseudorandom counts meeting the preconditions;
// whenever the refined test fires, brute search must find no octagon order
// realising the count.
VerifyResult verify_refined(unsigned long samples);

}  // namespace polyprim
