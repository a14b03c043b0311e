#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyprim/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace polyprim;

namespace {

py::int_ to_py(const Natural& n) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

Natural from_py(const py::object& o) {
  return Natural(py::str(o).cast<std::string>());
}

PolygonKind kind_arg(const std::string& kind) {
  if (kind == "hexagon") return PolygonKind::Hexagon;
  if (kind == "octagon") return PolygonKind::Octagon;
  throw py::value_error("kind must be 'hexagon' or 'octagon'");
}

FamilyKind family_arg(const std::string& family) {
  if (family == "sz") return FamilyKind::Suzuki;
  if (family == "ree-small") return FamilyKind::SmallRee;
  if (family == "ree-large") return FamilyKind::LargeRee;
  throw py::value_error("family must be 'sz', 'ree-small' or 'ree-large'");
}

py::list orders_out(const std::vector<PolygonOrder>& orders) {
  py::list out;
  for (const auto& o : orders) out.append(py::make_tuple(to_py(o.s), to_py(o.t)));
  return out;
}

py::dict case_out(const CatalogueCase& c) {
  py::dict d;
  d["family"] = family_token(c.family);
  d["m"] = c.m;
  d["index"] = c.index;
  d["label"] = c.label;
  d["structure"] = c.structure;
  d["two_transitive"] = c.two_transitive;
  d["parabolic"] = c.parabolic ? py::object(py::int_(*c.parabolic))
                               : py::object(py::none());
  if (c.subfield)
    d["subfield"] = py::make_tuple(c.subfield->ell, c.subfield->r);
  else
    d["subfield"] = py::none();
  d["stabiliser_order"] = to_py(c.stabiliser_order);
  d["point_count"] = to_py(case_point_count(c));
  return d;
}

py::dict verdict_out(const Verdict& v) {
  py::dict d;
  d["outcome"] = outcome_name(v.outcome);
  d["test"] = v.test;
  d["witnesses"] = orders_out(v.witnesses);
  d["reasons"] = v.reasons;
  py::dict ev;
  ev["point_count"] = to_py(v.evidence.point_count);
  ev["tests_attempted"] = v.evidence.tests_attempted;
  ev["notes"] = v.evidence.notes;
  if (v.evidence.valuations)
    ev["valuations"] =
        py::make_tuple(v.evidence.valuations->a, v.evidence.valuations->b);
  if (v.evidence.threshold) ev["threshold"] = to_py(*v.evidence.threshold);
  if (v.evidence.threshold_clause)
    ev["threshold_clause"] = *v.evidence.threshold_clause;
  if (v.evidence.refined) {
    py::dict r;
    r["applicable"] = v.evidence.refined->applicable;
    r["fired"] = v.evidence.refined->fired;
    r["abstain_reason"] = v.evidence.refined->abstain_reason;
    r["b"] = v.evidence.refined->b;
    r["quotient"] = to_py(v.evidence.refined->quotient);
    py::list subcases;
    for (const auto& sc : v.evidence.refined->subcases) {
      py::dict s;
      s["name"] = sc.name;
      s["vacuous"] = sc.vacuous;
      s["closed"] = sc.closed;
      s["detail"] = sc.detail;
      subcases.append(s);
    }
    r["subcases"] = subcases;
    ev["refined"] = r;
  }
  if (v.evidence.subdegree) {
    py::dict s;
    py::list subs;
    for (const auto& x : v.evidence.subdegree->subdegrees)
      subs.append(to_py(x));
    s["subdegrees"] = subs;
    s["witnesses"] = orders_out(v.evidence.subdegree->witnesses);
    s["assignments"] = v.evidence.subdegree->records.size();
    ev["subdegree"] = s;
  }
  if (v.evidence.solver) {
    py::dict s;
    s["decided"] = v.evidence.solver->decided;
    s["divisors_examined"] = v.evidence.solver->divisors_examined;
    s["solutions"] = orders_out(v.evidence.solver->solutions);
    s["note"] = v.evidence.solver->note;
    ev["solver"] = s;
  }
  d["evidence"] = ev;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact engine deciding which point-primitive stabiliser cases admit a "
      "thick generalised hexagon or octagon";

  m.def(
      "point_count",
      [](const std::string& kind, const py::object& s, const py::object& t) {
        return to_py(point_count(kind_arg(kind),
                                 PolygonOrder{from_py(s), from_py(t)}));
      },
      py::arg("kind"), py::arg("s"), py::arg("t"),
      "points of a generalised polygon of order (s, t)");

  m.def(
      "order_admissible",
      [](const std::string& kind, const py::object& s, const py::object& t) {
        return order_admissible(kind_arg(kind),
                                PolygonOrder{from_py(s), from_py(t)});
      },
      py::arg("kind"), py::arg("s"), py::arg("t"),
      "thickness plus the square condition on st (hexagon) or 2st (octagon)");

  m.def(
      "distance_class_sizes",
      [](const std::string& kind, const py::object& s, const py::object& t) {
        py::list out;
        for (const auto& c : distance_class_sizes(
                 kind_arg(kind), PolygonOrder{from_py(s), from_py(t)}))
          out.append(to_py(c));
        return out;
      },
      py::arg("kind"), py::arg("s"), py::arg("t"),
      "sizes of the point classes at each distance from a fixed point");

  m.def(
      "solve_orders",
      [](const std::string& kind, const py::object& n,
         unsigned long trial_limit, unsigned long rho_iterations) {
        Natural nn = from_py(n);
        FactorEffort effort{trial_limit, rho_iterations};
        Factorization f = factorize(nn, effort);
        OrderSolutions sol = solve_orders(kind_arg(kind), nn, f);
        py::dict d;
        d["decided"] = sol.decided;
        d["orders"] = orders_out(sol.orders);
        d["divisors_examined"] = sol.divisors_examined;
        return d;
      },
      py::arg("kind"), py::arg("n"), py::arg("trial_limit") = 100000,
      py::arg("rho_iterations") = 2000000,
      "every admissible (s, t) whose point count equals n, via divisors");

  m.def(
      "valuation_test",
      [](const std::string& kind, const py::object& n) -> py::object {
        auto ev = valuation_test(kind_arg(kind), from_py(n));
        if (!ev) return py::none();
        py::dict d;
        d["a"] = ev->profile.a;
        d["b"] = ev->profile.b;
        d["threshold"] = to_py(ev->threshold);
        d["clause"] = ev->clause;
        return d;
      },
      py::arg("kind"), py::arg("n"),
      "divisibility bound; a dict when n is eliminated, None otherwise");

  m.def(
      "refined_octagon_test",
      [](const py::object& n) {
        RefinedTranscript t = refined_octagon_test(from_py(n));
        py::dict d;
        d["applicable"] = t.applicable;
        d["fired"] = t.fired;
        d["abstain_reason"] = t.abstain_reason;
        d["b"] = t.b;
        d["quotient"] = to_py(t.quotient);
        py::list subcases;
        for (const auto& sc : t.subcases) {
          py::dict s;
          s["name"] = sc.name;
          s["vacuous"] = sc.vacuous;
          s["closed"] = sc.closed;
          s["detail"] = sc.detail;
          subcases.append(s);
        }
        d["subcases"] = subcases;
        return d;
      },
      py::arg("n"), "octagon sharpening for counts of the form 3^b * k");

  m.def(
      "enumerate_cases",
      [](const std::string& family, unsigned long m) {
        py::list out;
        for (const auto& c : enumerate_cases(family_arg(family), m))
          out.append(case_out(c));
        return out;
      },
      py::arg("family"), py::arg("m"),
      "candidate point-stabiliser classes, in catalogue order");

  m.def(
      "evaluate_case",
      [](const std::string& family, unsigned long m, const std::string& label,
         const std::string& kind, unsigned long trial_limit,
         unsigned long rho_iterations) {
        CatalogueCase c = find_case(family_arg(family), m, label);
        Verdict v = evaluate_case(c, kind_arg(kind),
                                  FactorEffort{trial_limit, rho_iterations});
        py::dict d = verdict_out(v);
        d["crosscheck"] = crosscheck_status(c, kind_arg(kind));
        return d;
      },
      py::arg("family"), py::arg("m"), py::arg("case"), py::arg("kind"),
      py::arg("trial_limit") = 100000, py::arg("rho_iterations") = 2000000,
      "run the decision pipeline for one catalogue case");

  m.def(
      "sweep_json",
      [](const std::vector<std::string>& families, unsigned long m_min,
         unsigned long m_max, const std::vector<std::string>& kinds,
         unsigned long trial_limit, unsigned long rho_iterations) {
        SweepConfig config;
        for (const auto& f : families)
          config.families.push_back(family_arg(f));
        for (const auto& k : kinds) config.kinds.push_back(kind_arg(k));
        config.m_min = m_min;
        config.m_max = m_max;
        config.effort = FactorEffort{trial_limit, rho_iterations};
        return render_report(run_sweep(config), OutputFormat::Json);
      },
      py::arg("families") = std::vector<std::string>{"sz", "ree-small",
                                                     "ree-large"},
      py::arg("m_min") = 3, py::arg("m_max") = 13,
      py::arg("kinds") = std::vector<std::string>{"hexagon", "octagon"},
      py::arg("trial_limit") = 100000, py::arg("rho_iterations") = 2000000,
      "full sweep rendered as the canonical json document");

  m.def(
      "index_crosscheck",
      [](const std::string& family, unsigned long m) {
        py::list out;
        for (const auto& row : index_crosscheck(family_arg(family), m)) {
          py::dict d;
          d["case"] = row.label;
          d["kind"] = kind_name(row.kind);
          d["displayed"] = row.displayed ? py::object(to_py(*row.displayed))
                                         : py::object(py::none());
          d["exact"] = to_py(row.exact);
          d["status"] = row.status;
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("m"),
      "published index values against exact quotients");

  m.def(
      "verify",
      [](const std::string& suite, unsigned long limit) {
        VerifyResult r;
        if (suite == "lemma") r = verify_lemma(Natural(limit));
        else if (suite == "solver") r = verify_solver(limit);
        else if (suite == "subdegree") r = verify_subdegree(limit);
        else if (suite == "refined") r = verify_refined(limit);
        else
          throw py::value_error(
              "suite must be 'lemma', 'solver', 'subdegree' or 'refined'");
        py::dict d;
        d["suite"] = r.suite;
        d["passed"] = r.passed;
        d["checks"] = r.checks;
        d["failures"] = r.failures;
        d["summary"] = r.summary;
        return d;
      },
      py::arg("suite"), py::arg("limit"),
      "run one verification suite and report pass/fail");
}
