import json
import math

import pytest

import daugavet


NEG_IDENTITY = {"scalar": "exact", "matrix": [["-1", "0"], ["0", "-1"]]}
NEG_DENSITY = {"scalar": "exact", "spec": {"type": "density", "expr": "-1"}}


def test_version():
    assert daugavet.version() == daugavet.__version__ == "0.1.0"


def test_report_exact_neg_identity():
    rep = daugavet.report(NEG_IDENTITY)
    assert rep["scalar"] == "exact"
    assert rep["defect"] == "2"
    assert rep["op_norm"] == "1"
    assert rep["holds"] is False


def test_report_spec_needs_level():
    with pytest.raises(daugavet.InputError):
        daugavet.report(NEG_DENSITY)
    rep = daugavet.report(NEG_DENSITY, level=8)
    assert rep["defect"] == "1/4"


def test_float_norms_match_brute_force():
    matrix = [[0.25, -0.5], [0.1, 0.3]]
    assert daugavet.sup_norm(matrix) == pytest.approx(0.75)
    assert daugavet.brute_norm(matrix) == pytest.approx(0.75)
    assert daugavet.defect([[1.0]]) == 0.0


def test_expression_eval_and_print():
    assert daugavet.eval_expression("cos(pi*(s+t))", 0.5, 0.5) == pytest.approx(
        math.cos(math.pi)
    )
    assert daugavet.print_expression("s * (1 - t)") == "s*(1-t)"
    with pytest.raises(daugavet.InputError):
        daugavet.eval_expression("frobnicate(s)", 0.0)


def test_discretize_round_trips_through_report():
    kernel = daugavet.discretize(NEG_DENSITY["spec"], 4, exact=True)
    assert kernel["matrix"][0][0] == "-1/4"
    rep = daugavet.report(kernel)
    assert rep["defect"] == "1/2"


def test_refinement_csv_shape():
    csv = daugavet.refinement_csv(json.dumps(NEG_DENSITY), [4, 8], False)
    lines = csv.strip().split("\n")
    assert lines[0] == "level,opnorm,defect,defect_bound,max_abs_diag"
    assert lines[1] == "4,1,0.5,0.5,0.25"
    assert len(lines) == 3


def test_sweep_hits_one_plus_norm():
    max_norm, expected, re, im = daugavet.sweep(json.dumps(NEG_IDENTITY))
    assert max_norm == expected == 2.0
    assert (re, im) == (-1.0, 0.0)


def test_escalate_mock_outcomes():
    out = daugavet.escalate("const-neg-quarter", 0.1, 1.0)
    assert out["kind"] == "bound_violated"
    assert out["certified_mass"] == 1.25
    assert len(out["points"]) == 6
    assert out["verified"] is True

    stalled = daugavet.escalate("diag-neg-quarter", 0.1, 1.0)
    assert stalled["kind"] == "stalled"
    assert stalled["stall_reason"] == "empty-refinement-set"


def test_search_theorem_predicates_are_quiet():
    res = daugavet.search("rational-signed", 2, 50, seed=3, predicate="prop1-identity")
    assert res["count"] == 0
    assert res["theorem"] is True

    res = daugavet.search("signed", 2, 20, seed=3, predicate="defect-zero")
    assert res["count"] > 0
    first = res["findings"][0]["kernel"]
    rep = daugavet.report(first)
    assert rep["holds"] is False


def test_exhaustive_scan_counts():
    scan = daugavet.exhaustive_scan([-1, 0, 1], 2)
    assert scan["total"] == 81
    assert scan["defect_zero"] == scan["double_star"] == 54
    assert scan["prop1_violations"] == 0


def test_splitmix_reference_vector():
    assert daugavet.splitmix_stream(1234567, 2) == [
        6457827717110365317,
        3203168211198807973,
    ]


def test_zero_atom_points():
    kernel = {"scalar": "exact", "matrix": [["0", "1"], ["0", "-1"]]}
    assert daugavet.zero_atom_points(json.dumps(kernel)) == [0]
