"""End-to-end smoke tests for the Python bindings.

The deep property coverage lives in the C++ suites; these tests pin the
binding surface: argument handling, string round-trips, exception mapping.
"""

from fractions import Fraction

import pytest

import cfkit

ALL_NAMES = [
    "ToolkitError",
    "ConfigError",
    "ExprParseError",
    "DomainError",
    "eval_fraction",
    "convergent_table",
    "run_verify",
    "iterate_recurrence",
    "closed_form_term",
    "phi_total",
    "phi_brute",
    "phi_layers",
    "hyp0f1_sum",
    "q_pochhammer",
    "rr_sum",
    "app3_sum",
    "parse_expression",
    "expression_vars",
    "evaluate_expression",
]


def test_module_exports_the_full_surface():
    for name in ALL_NAMES:
        assert hasattr(cfkit, name), name
    assert set(cfkit.__all__) == set(ALL_NAMES)


def test_backward_evaluation_reaches_the_golden_ratio():
    rec = cfkit.eval_fraction(method="backward", depth=40, realization="float", a="1", b="1")
    assert rec["method"] == "backward"
    assert rec["depth"] == 40
    assert rec["value"].startswith("0.6180339887498948")
    assert float(rec["residual"]) < 1e-12


def test_exact_convergents_carry_a_zero_residual():
    rec = cfkit.eval_fraction(
        method="convergent",
        depth=4,
        realization="rational",
        preset="constant",
        params={"a": "1", "b": "1"},
    )
    assert rec["value"] == "5/8"
    assert rec["residual"] == "0"


def test_lentz_reports_convergence_metadata():
    rec = cfkit.eval_fraction(
        method="lentz",
        depth=200,
        realization="float",
        preset="constant",
        params={"a": "1", "b": "1"},
        eps=1e-25,
    )
    assert rec["converged"] is True
    assert 0 < rec["depth"] < 200
    assert rec["value"].startswith("0.618033988749894")


def test_series_realization_prints_the_formal_expansion():
    rec = cfkit.eval_fraction(
        method="backward", depth=12, realization="series", series_degree=6, a="z", b="1"
    )
    assert rec["value"] == "z - z^2 + 2*z^3 - 5*z^4 + 14*z^5 - 42*z^6 + O(z^7)"
    assert rec["residual"] == "0 + O(z^7)"


def test_convergent_table_pairs_the_two_representations():
    rows = cfkit.convergent_table(
        depth=4, realization="rational", preset="constant", params={"a": "1", "b": "1"}
    )
    assert [r["n"] for r in rows] == [0, 1, 2, 3, 4]
    assert rows[-1]["convergent"] == "5/8"
    assert rows[-1]["series_ratio"] == "5/8"
    assert all(r["abs_diff"] == "0" for r in rows)


def test_verify_suites_pass_deterministically():
    first = cfkit.run_verify(suite="closed-form", seed=7, trials=25)
    second = cfkit.run_verify(suite="closed-form", seed=7, trials=25)
    assert first == second
    assert first["status"] == "pass"
    assert first["suites"][0]["suite"] == "closed-form"
    assert first["suites"][0]["failures"] == []


def test_recurrence_iteration_matches_the_closed_form():
    a = ["1"] * 6
    b = ["1"] * 6
    xs = cfkit.iterate_recurrence(a=a, b=b, x0="0", x1="1", n=5)
    assert xs[-1] == "5"
    direct = cfkit.closed_form_term(a=a, b=b, x0="0", x1="1", n=5)
    assert direct == "5"


def test_phi_layers_sum_to_the_total():
    g = ["1/2", "1/3", "1/4"]
    total = cfkit.phi_total(g=g, q=1, n=5)
    brute = cfkit.phi_brute(g=g, q=1, n=5)
    assert total == brute
    layers = cfkit.phi_layers(g=g, q=1, n=5, dmax=2)
    assert layers["total"] == total
    layered = sum(Fraction(t) for t in layers["by_depth"])
    assert layered == Fraction(total)


def test_q_series_helpers_match_their_anchors():
    assert cfkit.q_pochhammer(q="1/2", k=3) == "21/64"
    hyp = cfkit.hyp0f1_sum(c="1", z="1/2")
    assert hyp["value"].startswith("1.56608292975635")
    assert hyp["cap_hit"] is False
    g_sum = cfkit.rr_sum(kind="G", q="1/5", z="1")
    h_sum = cfkit.rr_sum(kind="H", q="1/5", z="1")
    assert g_sum["value"].startswith("1.252084005384960")
    ratio = float(h_sum["value"]) / float(g_sum["value"])
    fraction = cfkit.eval_fraction(
        method="backward", depth=60, realization="float", preset="app2",
        params={"q": "1/5", "z": "1"},
    )
    assert abs(ratio - float(fraction["value"])) < 1e-10


def test_staircase_sums_feed_both_fraction_forms():
    num = cfkit.app3_sum(kind="numerator", q="2", z="1")
    den = cfkit.app3_sum(kind="denominator", q="2", z="1")
    ratio = float(num["value"]) / float(den["value"])
    paper = cfkit.eval_fraction(
        method="backward", depth=60, realization="float", preset="app3-paper",
        params={"q": "2", "z": "1", "c": "0"},
    )
    canonical = cfkit.eval_fraction(
        method="backward", depth=60, realization="float", preset="app3-canonical",
        params={"q": "2", "z": "1"},
    )
    assert abs(ratio - float(paper["value"])) < 1e-10
    assert abs(float(paper["value"]) - float(canonical["value"])) < 1e-12


def test_expression_helpers_round_trip():
    assert cfkit.expression_vars(text="q^m * z") == ["m", "q", "z"]
    value = cfkit.evaluate_expression(
        text="q^m * z", bindings={"q": "1/2", "m": "3", "z": "16"}
    )
    assert value == "2"
    rendered = cfkit.parse_expression(text="m+ 1")
    assert cfkit.evaluate_expression(text=rendered, bindings={"m": "2"}) == "3"


def test_exceptions_map_to_python_hierarchies():
    with pytest.raises(cfkit.ExprParseError):
        cfkit.parse_expression(text="(1+")
    with pytest.raises(cfkit.ConfigError):
        cfkit.eval_fraction(method="sideways")
    with pytest.raises(cfkit.DomainError):
        cfkit.eval_fraction(a="1", b="0", realization="rational", method="backward", depth=5)
    assert issubclass(cfkit.ConfigError, ValueError)
    assert issubclass(cfkit.ExprParseError, ValueError)
    assert issubclass(cfkit.DomainError, ArithmeticError)
    assert issubclass(cfkit.ToolkitError, RuntimeError)
