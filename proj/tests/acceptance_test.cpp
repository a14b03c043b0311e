// Acceptance runner: exercises the eight headline guarantees end to end,
// one line of output per criterion. Criteria 1, 7 and 8 drive the installed
// CLI binary (path in POLYPRIM_CLI); the rest call the library directly.

#include "polyprim/oracle.hpp"
#include "polyprim/report.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace polyprim;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

struct CliRun {
  int exit_code = -1;
  std::string output;
  double elapsed = 0.0;
};

CliRun run_cli(const std::string& args) {
  CliRun run;
  const char* cli = std::getenv("POLYPRIM_CLI");
  if (!cli) return run;
  std::string out_path = "/tmp/polyprim_accept_out.txt";
  std::string command = std::string("\"") + cli + "\" " + args + " > " +
                        out_path + " 2>&1";
  auto start = std::chrono::steady_clock::now();
  int status = std::system(command.c_str());
  run.elapsed = seconds_since(start);
  run.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  run.output = slurp(out_path);
  std::remove(out_path.c_str());
  return run;
}

const CaseReport* find_report(const std::vector<CaseReport>& reports,
                              unsigned long m, const std::string& label,
                              PolygonKind kind) {
  for (const auto& r : reports)
    if (r.m == m && r.label == label && r.kind == kind) return &r;
  return nullptr;
}

SweepConfig family_sweep(FamilyKind family, unsigned long m_lo,
                         unsigned long m_hi) {
  SweepConfig config;
  config.families = {family};
  config.m_min = m_lo;
  config.m_max = m_hi;
  config.kinds = {PolygonKind::Hexagon, PolygonKind::Octagon};
  return config;
}

bool g_all_passed = true;

void report_line(int index, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << what
            << "\n";
  if (!ok) g_all_passed = false;
}

void criterion_1() {
  CliRun run = run_cli("verify --suite lemma --limit 100000000");
  bool ok = run.exit_code == 0 &&
            run.output.find("pass") != std::string::npos &&
            run.output.find("0 violations") != std::string::npos &&
            run.elapsed < 60.0;
  std::ostringstream what;
  what << "divisibility bounds hold for every admissible order with count "
          "<= 10^8 (cli exit "
       << run.exit_code << ", " << run.elapsed << "s)";
  report_line(1, ok, what.str());
}

void criterion_2() {
  auto start = std::chrono::steady_clock::now();
  VerifyResult result = verify_solver(1000000);
  double elapsed = seconds_since(start);
  bool ok = result.passed && result.checks == 2000000 && elapsed < 300.0;
  std::ostringstream what;
  what << "divisor solver agrees with the brute order scan for every n <= "
          "10^6, both kinds ("
       << elapsed << "s)";
  report_line(2, ok, what.str());
}

void criterion_3() {
  std::vector<CaseReport> reports =
      run_sweep(family_sweep(FamilyKind::Suzuki, 3, 7));
  bool ok = reports.size() == 24;
  for (const auto& r : reports) ok &= r.verdict.outcome == Outcome::Eliminated;
  const CaseReport* dihedral =
      find_report(reports, 3, "Sz:(ii)", PolygonKind::Hexagon);
  ok &= dihedral != nullptr;
  if (dihedral) {
    ok &= dihedral->point_count == 2080;
    ok &= dihedral->verdict.test == kTestValuation;
    ok &= dihedral->verdict.evidence.valuations == ValuationProfile{5, 0};
    ok &= dihedral->verdict.evidence.threshold.has_value() &&
          *dihedral->verdict.evidence.threshold == 32768;
  }
  report_line(3, ok,
              "every Suzuki case for m in {3,5,7} is eliminated; the m=3 "
              "dihedral case shows count 2080, valuations (5,0), threshold "
              "32768, decided by the valuation test");
}

void criterion_4() {
  std::vector<CaseReport> reports =
      run_sweep(family_sweep(FamilyKind::SmallRee, 3, 7));
  bool ok = reports.size() == 36;
  for (const auto& r : reports) ok &= r.verdict.outcome == Outcome::Eliminated;

  const CaseReport* psl = find_report(reports, 3, "2G2:(ii)",
                                      PolygonKind::Hexagon);
  ok &= psl && psl->verdict.test == kTestValuation &&
        psl->point_count == 512487;

  const CaseReport* sub_hex =
      find_report(reports, 3, "2G2:(v) q0=3", PolygonKind::Hexagon);
  ok &= sub_hex && sub_hex->verdict.test == kTestParameterExistence &&
        sub_hex->point_count == 6662331 && sub_hex->verdict.witnesses.empty();
  if (sub_hex) {
    ok &= sub_hex->verdict.evidence.solver.has_value() &&
          sub_hex->verdict.evidence.solver->decided &&
          sub_hex->verdict.evidence.solver->solutions.empty();
    ok &= brute_solve_orders(PolygonKind::Hexagon, sub_hex->point_count)
              .empty();
  }

  const CaseReport* sub_oct =
      find_report(reports, 3, "2G2:(v) q0=3", PolygonKind::Octagon);
  ok &= sub_oct && sub_oct->verdict.test == kTestRefinedOctagon;
  if (sub_oct && sub_oct->verdict.evidence.refined) {
    const RefinedTranscript& t = *sub_oct->verdict.evidence.refined;
    ok &= t.fired && t.b == 6;
    bool equality_closed = false;
    for (const auto& sc : t.subcases)
      if (sc.name == "c=d/2")
        equality_closed = sc.closed &&
                          sc.detail.find("1 mod 3") != std::string::npos;
    ok &= equality_closed;
  } else {
    ok = false;
  }

  const CaseReport* c3 =
      find_report(reports, 3, "2G2:(iii)", PolygonKind::Octagon);
  ok &= c3 && c3->verdict.test == kTestParameterExistence &&
        c3->point_count == Natural("59960979") && c3->crosscheck == "mismatch";
  if (c3)
    ok &= brute_solve_orders(PolygonKind::Octagon, c3->point_count).empty();

  report_line(4, ok,
              "every small Ree case for m in {3,5,7} is eliminated "
              "definitively; m=3 pins: centraliser hexagon count 512487 by "
              "valuation, subfield hexagon 6662331 by empty parameter "
              "search, subfield octagon by the refined 3-adic split with "
              "b=6 and the equality branch closed by quotient 1 mod 3, "
              "involution-centraliser octagon 59960979 by empty parameter "
              "search with its published index flagged as a mismatch");
}

void criterion_5() {
  std::vector<CaseReport> reports =
      run_sweep(family_sweep(FamilyKind::LargeRee, 3, 7));
  bool ok = reports.size() == 72;
  for (unsigned long m : {3ul, 5ul, 7ul}) {
    for (const char* label : {"2F4:P1", "2F4:P2"}) {
      const CaseReport* oct = find_report(reports, m, label,
                                          PolygonKind::Octagon);
      ok &= oct && oct->verdict.outcome == Outcome::Classical &&
            oct->verdict.test == kTestRankPigeonhole;
      const CaseReport* hex = find_report(reports, m, label,
                                          PolygonKind::Hexagon);
      ok &= hex && hex->verdict.outcome == Outcome::Eliminated &&
            hex->verdict.test == kTestSubdegreePartition;
    }
  }
  for (const auto& r : reports) {
    if (r.case_index < 2) continue;  // parabolic rows handled above
    ok &= r.verdict.outcome == Outcome::Eliminated &&
          r.verdict.test == kTestValuation;
  }
  const CaseReport* unitary =
      find_report(reports, 3, "2F4:(iii)", PolygonKind::Hexagon);
  ok &= unitary && unitary->verdict.evidence.valuations.has_value() &&
        unitary->verdict.evidence.valuations->a == 26;

  for (const char* label : {"2F4:P1", "2F4:P2"}) {
    CatalogueCase c = find_case(FamilyKind::LargeRee, 3, label);
    ok &= brute_subdegree_check(parabolic_subdegrees(c), 3000).empty();
  }

  report_line(5, ok,
              "large Ree parabolic octagon actions are the classical ones, "
              "parabolic hexagon actions fail all 36 suborbit assignments "
              "(brute-confirmed at m=3), and every non-parabolic case for m "
              "in {3,5,7} is eliminated by valuation, with a=26 for the m=3 "
              "unitary case");
}

void criterion_6() {
  Natural direct = point_count(PolygonKind::Octagon, {8, 64});
  CatalogueCase p1 = find_case(FamilyKind::LargeRee, 3, "2F4:P1");
  Natural index = case_point_count(p1);
  Natural total = 1;
  for (const Natural& d : parabolic_subdegrees(p1)) total += d;
  bool ok = direct == Natural("1210323465") && index == direct &&
            total == direct;
  report_line(6, ok,
              "the (8,64) octagon count, the m=3 parabolic index and 1 + the "
              "suborbit sum all equal 1210323465");
}

void criterion_7() {
  std::string out_path = "/tmp/polyprim_accept_sweep.json";
  CliRun run = run_cli(
      "sweep --family all --m 3..13 --kind both --format json --out " +
      out_path);
  bool ok = (run.exit_code == 0 || run.exit_code == 2) && run.elapsed < 600.0;
  std::size_t inconclusive = 0;
  if (ok) {
    std::vector<CaseReport> reports = parse_report_json(slurp(out_path));
    ok &= reports.size() == 266;
    for (const auto& r : reports) {
      if (r.verdict.outcome != Outcome::Inconclusive) continue;
      ++inconclusive;
      ok &= r.m > 7;
      ok &= r.verdict.reasons.size() == 1 &&
            r.verdict.reasons[0].find("incomplete factorization") !=
                std::string::npos;
    }
  }
  std::remove(out_path.c_str());
  std::ostringstream what;
  what << "full sweep over all families, m 3..13, both kinds (cli exit "
       << run.exit_code << ", " << run.elapsed << "s, " << inconclusive
       << " inconclusive, none below m=9, all citing factorization limits)";
  report_line(7, ok, what.str());
}

void criterion_8() {
  std::string path_a = "/tmp/polyprim_accept_a.json";
  std::string path_b = "/tmp/polyprim_accept_b.json";
  CliRun first = run_cli(
      "sweep --family all --m 3..13 --kind both --format json --out " +
      path_a);
  CliRun second = run_cli(
      "sweep --family all --m 3..13 --kind both --format json --out " +
      path_b);
  std::string a = slurp(path_a);
  std::string b = slurp(path_b);
  bool ok = first.exit_code == second.exit_code && !a.empty() && a == b;

  SweepConfig config;
  config.families = {FamilyKind::Suzuki, FamilyKind::SmallRee,
                     FamilyKind::LargeRee};
  config.m_min = 3;
  config.m_max = 13;
  config.kinds = {PolygonKind::Hexagon, PolygonKind::Octagon};
  ok &= render_report(run_sweep(config), OutputFormat::Json) ==
        render_report(run_sweep(config), OutputFormat::Json);

  std::remove(path_a.c_str());
  std::remove(path_b.c_str());
  report_line(8, ok, "two identical sweeps produce byte-identical json");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::cout << (g_all_passed ? "acceptance: all 8 criteria passed"
                             : "acceptance: FAILURES above")
            << "\n";
  return g_all_passed ? 0 : 1;
}
