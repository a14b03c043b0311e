import json
import os
import subprocess

import polyprim


def test_point_counts():
    assert polyprim.point_count("hexagon", 2, 2) == 63
    assert polyprim.point_count("octagon", 2, 4) == 1755
    # exact big-integer round trip through the bindings
    assert polyprim.point_count("octagon", 8, 64) == 1210323465
    assert polyprim.point_count("hexagon", 3**13, 3**26) == \
        (3**13 + 1) * (3**78 + 3**39 + 1)


def test_admissibility_and_classes():
    assert polyprim.order_admissible("hexagon", 2, 2)
    assert not polyprim.order_admissible("hexagon", 2, 3)
    assert polyprim.order_admissible("octagon", 2, 4)
    assert not polyprim.order_admissible("octagon", 2, 2)
    assert polyprim.distance_class_sizes("hexagon", 2, 2) == [6, 24, 32]


def test_solver():
    out = polyprim.solve_orders("hexagon", 63)
    assert out["decided"]
    assert out["orders"] == [(2, 2)]
    assert polyprim.solve_orders("octagon", 59960979)["orders"] == []


def test_valuation():
    fired = polyprim.valuation_test("hexagon", 2080)
    assert fired is not None
    assert fired["a"] == 5 and fired["b"] == 0
    assert fired["threshold"] == 32768
    assert polyprim.valuation_test("hexagon", 63) is None


def test_catalogue_and_pipeline():
    cases = polyprim.enumerate_cases("sz", 3)
    assert [c["label"] for c in cases] == \
        ["Sz:(i)", "Sz:(ii)", "Sz:(iii)+", "Sz:(iii)-"]
    assert cases[1]["point_count"] == 2080

    verdict = polyprim.evaluate_case("sz", 3, "Sz:(ii)", "hexagon")
    assert verdict["outcome"] == "eliminated"
    assert verdict["test"] == "valuation"

    verdict = polyprim.evaluate_case("ree-large", 3, "2F4:P1", "octagon")
    assert verdict["outcome"] == "classical"


def test_sweep_roundtrip():
    doc = polyprim.sweep(families=["sz"], m_min=3, m_max=3)
    assert doc["summary"]["total"] == 8
    assert doc["summary"]["eliminated"] == 8
    assert all(c["verdict"]["outcome"] == "eliminated" for c in doc["cases"])


def test_crosscheck():
    rows = polyprim.index_crosscheck("ree-small", 3)
    flagged = {(r["case"], r["kind"]): r["status"] for r in rows}
    assert flagged[("2G2:(iii)", "octagon")] == "mismatch"
    assert flagged[("2G2:(iii)", "hexagon")] == "match"


def test_verify_suite():
    result = polyprim.verify("lemma", 100000)
    assert result["passed"]
    assert result["failures"] == []


def test_cli_agrees_with_bindings():
    cli = os.environ.get("POLYPRIM_CLI")
    if not cli:
        import pytest
        pytest.skip("POLYPRIM_CLI not set")
    proc = subprocess.run(
        [cli, "sweep", "--family", "sz", "--m", "3", "--format", "json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == json.loads(
        polyprim.sweep_json(["sz"], 3, 3, ["hexagon", "octagon"]))
