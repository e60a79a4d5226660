import pytest

from indicated_coloring.harness import SUITES, run_suite
from indicated_coloring.solver import Limits


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("no-such-suite")


def test_all_suites_registered():
    assert set(SUITES) == {
        "col-bound", "col-gap", "reduction", "union", "f-family",
        "bipartite-expansion", "complement-duality", "closure", "lift",
        "monotonicity-audit",
    }


def test_col_bound_small_pair():
    report = run_suite("col-bound", corpus={"pairs": [["P2", "P2"]]})
    assert report.ok and report.summary["total"] == 2
    assert all(c.status == "pass" for c in report.cases)


def test_reduction_defaults_green():
    report = run_suite("reduction")
    assert report.ok and report.summary["skip-limit"] == 0


def test_union_defaults_green():
    report = run_suite("union")
    assert report.ok and report.summary["total"] == 10


def test_case_order_is_canonical():
    report = run_suite("col-gap")
    keys = [c.key for c in report.cases]
    assert keys == sorted(keys)


def test_reports_byte_stable_given_seed():
    a = run_suite("complement-duality", seed=5)
    b = run_suite("complement-duality", seed=5)
    assert a.to_json(include_timing=False) == b.to_json(include_timing=False)
    c = run_suite("complement-duality", seed=6)
    assert c.to_json(include_timing=False) != a.to_json(include_timing=False)


def test_resource_limit_becomes_skip_not_fail():
    tight = Limits(max_states=2, max_millis=60_000, max_vertices=12)
    report = run_suite("monotonicity-audit",
                       corpus={"graphs": ["C5[K2]"]}, limits=tight)
    assert report.summary["fail"] == 0
    assert report.summary["skip-limit"] == 1


def test_csv_columns():
    report = run_suite("col-gap")
    lines = report.to_csv().splitlines()
    assert lines[0] == "suite,case,expected,observed,status,millis"
    assert len(lines) == 1 + report.summary["total"]
    assert all(line.startswith("col-gap,") for line in lines[1:])


def test_f_family_explicit_graphs():
    report = run_suite("f-family", corpus={"graphs": ["P4", "C5", "paw"]})
    assert report.ok and report.summary["total"] == 3


def test_monotonicity_audit_reports_interval_sets():
    report = run_suite("monotonicity-audit", corpus={"graphs": ["C5", "P4", "K4"]})
    assert report.ok
    assert report.summary["flagged"] == 0


def test_lift_defaults_green():
    report = run_suite("lift")
    assert report.ok
