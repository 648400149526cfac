"""Truncation models, remainder envelopes, and the sign certificates."""

import json
import math
from fractions import Fraction

import pytest

from e8magic.certify import (
    NEAR_INFINITY,
    NEAR_ZERO,
    build_model,
    certify_sign,
    numeric_value,
    remainder_envelope,
)
from e8magic.certify import _env_prefactor, _env_sum  # envelope internals
from e8magic.modforms import FormId, eval_form
from e8magic.rigor import Interval

# ---------------------------------------------------------------------------
# model golden values: (p, pi_pow, decay) -> rational coefficient, where a
# term is coeff / pi^pi_pow * x^p * e^{-pi decay x}.  Near-zero models are
# stored scaled by t^2 in the variable u = 1/t.

A_INF_1 = {(0, 2, -2): -72, (1, 1, 0): 8640, (0, 2, 0): -23328}
B_INF_1 = {(1, 1, 0): 8640, (0, 2, 0): -12960}
A_ZERO_2 = {(0, 2, 1): -368640}
B_ZERO_2 = {(0, 2, 1): 368640}

A_INF_6 = {
    (0, 2, -2): -72,
    (0, 2, 0): -23328,
    (0, 2, 1): 184320,
    (0, 2, 2): -5194368,
    (0, 2, 3): 22560768,
    (0, 2, 4): -250583040,
    (0, 2, 5): 869916672,
    (1, 1, 0): 8640,
    (1, 1, 2): 2436480,
    (1, 1, 4): 113011200,
    (2, 0, 2): -518400,
    (2, 0, 4): -31104000,
}
B_INF_6 = {
    (0, 2, 0): -12960,
    (0, 2, 1): -184320,
    (0, 2, 2): -116640,
    (0, 2, 3): -22560768,
    (0, 2, 4): 56540160,
    (0, 2, 5): -869916672,
    (1, 1, 0): 8640,
    (1, 1, 2): 2436480,
    (1, 1, 4): 113011200,
    (2, 0, 2): -518400,
    (2, 0, 4): -31104000,
}
A_ZERO_6 = {
    (0, 2, 1): -368640,
    (0, 0, 2): -518400,
    (0, 2, 3): -45121536,
    (0, 0, 4): -31104000,
    (0, 2, 5): -1739833344,
}
B_ZERO_6 = {
    (0, 2, 1): 368640,
    (0, 0, 2): -518400,
    (0, 2, 3): 45121536,
    (0, 0, 4): -31104000,
    (0, 2, 5): 1739833344,
}


@pytest.mark.parametrize(
    "target,n,regime,expected",
    [
        ("A", 1, NEAR_INFINITY, A_INF_1),
        ("B", 1, NEAR_INFINITY, B_INF_1),
        ("A", 2, NEAR_ZERO, A_ZERO_2),
        ("B", 2, NEAR_ZERO, B_ZERO_2),
        ("A", 6, NEAR_INFINITY, A_INF_6),
        ("B", 6, NEAR_INFINITY, B_INF_6),
        ("A", 6, NEAR_ZERO, A_ZERO_6),
        ("B", 6, NEAR_ZERO, B_ZERO_6),
    ],
)
def test_model_goldens(target, n, regime, expected):
    model = build_model(target, n, regime)
    got = {k: v for k, v in model.term_map().items()}
    assert got == {k: Fraction(v) for k, v in expected.items()}


# ---------------------------------------------------------------------------
# remainder envelopes

def test_envelope_monotone_in_cutoff():
    t = Interval.point(1.5)
    values = [remainder_envelope(m, NEAR_INFINITY, t).hi for m in range(1, 9)]
    assert all(a > b for a, b in zip(values, values[1:]))
    u_t = Interval.point(0.8)
    values = [remainder_envelope(m, NEAR_ZERO, u_t).hi for m in range(1, 9)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_envelope_prefactor_relation_at_t1():
    """At t = 1 both regimes share the tail sum; the envelopes differ by the
    ratio of prefactors (t^2 + 12t/pi + 36/pi^2) vs (t^2 + 36/pi^2)."""
    one = Interval.point(1.0)
    env_inf = remainder_envelope(6, NEAR_INFINITY, one)
    env_zero = remainder_envelope(6, NEAR_ZERO, one)
    ratio = (1 + 12 / math.pi + 36 / math.pi**2) / (1 + 36 / math.pi**2)
    assert env_inf.lo / env_zero.hi <= ratio <= env_inf.hi / env_zero.lo


def test_envelope_domain_checks():
    with pytest.raises(ValueError):
        remainder_envelope(6, NEAR_INFINITY, Interval(0.5, 0.9))
    with pytest.raises(ValueError):
        remainder_envelope(6, NEAR_ZERO, Interval(1.0, 1.5))
    with pytest.raises(ValueError):
        remainder_envelope(0, NEAR_INFINITY, Interval.point(2.0))


# ---------------------------------------------------------------------------
# cross-regime consistency

def _full_enclosure(target, t):
    """Two independent enclosures of target(t): one per chart."""
    t_iv = Interval.point(t)
    u_iv = 1 / t_iv
    inf_model = build_model(target, 6, NEAR_INFINITY).enclose(t_iv)
    inf_env = (_env_prefactor("t", t_iv) * _env_sum(6, t_iv)).hi
    inf_box = Interval(inf_model.lo - inf_env, inf_model.hi + inf_env)
    zero_model = build_model(target, 6, NEAR_ZERO).enclose(u_iv)
    zero_env = (_env_prefactor("u", u_iv) * _env_sum(6, u_iv)).hi
    zero_box = t_iv.powi(2) * Interval(zero_model.lo - zero_env, zero_model.hi + zero_env)
    return inf_box, zero_box


@pytest.mark.parametrize("target", ["A", "B"])
@pytest.mark.parametrize("t", [0.9, 0.95, 1.0, 1.05, 1.1])
def test_cross_regime_overlap(target, t):
    inf_box, zero_box = _full_enclosure(target, t)
    assert inf_box.intersect(zero_box) is not None, (inf_box, zero_box)


@pytest.mark.parametrize("t", [0.9, 1.0, 1.3, 2.0, 3.0])
def test_sum_rule(t):
    """B(t) - A(t) = (72/pi^2) psi_I(it), within the combined envelopes.

    (A and B differ only in the sign of the single psi_I term.)
    """
    t_iv = Interval.point(t)
    a = build_model("A", 6, NEAR_INFINITY).enclose(t_iv)
    b = build_model("B", 6, NEAR_INFINITY).enclose(t_iv)
    env = 2 * (_env_prefactor("t", t_iv) * _env_sum(6, t_iv)).hi
    psi = eval_form(FormId.PSI_I, complex(0.0, t))
    rhs = 72 / math.pi**2 * psi.value.real
    rhs_err = 72 / math.pi**2 * psi.tail_bound
    diff = b - a
    assert diff.lo - env - rhs_err - 1e-9 <= rhs <= diff.hi + env + rhs_err + 1e-9


# ---------------------------------------------------------------------------
# certificates

@pytest.fixture(scope="module")
def cert_a():
    return certify_sign("A")


@pytest.fixture(scope="module")
def cert_b():
    return certify_sign("B")


@pytest.mark.parametrize("name", ["cert_a", "cert_b"])
def test_certified(name, request):
    cert = request.getfixturevalue(name)
    assert cert.status == "certified"
    assert cert.certified
    assert cert.min_margin > 0
    assert all(tail.certified and tail.epsilon_hi < 1 for tail in cert.tails)


@pytest.mark.parametrize("name", ["cert_a", "cert_b"])
def test_margins_dominate_rounding(name, request):
    """Every leaf margin exceeds 10x the accumulated interval width there."""
    cert = request.getfixturevalue(name)
    for seg in cert.segments:
        assert seg.margin > 10 * seg.rounding_width, seg


def test_control_run_fails_near_one():
    cert = certify_sign("A", n=1, m=1)
    assert cert.status.startswith("failed")
    chart, lo, hi = cert.failure_location
    assert abs(0.5 * (lo + hi) - 1.0) < 0.2, cert.failure_location


def test_certificates_deterministic():
    doc1 = json.dumps(certify_sign("A").to_doc(), sort_keys=True)
    doc2 = json.dumps(certify_sign("A").to_doc(), sort_keys=True)
    assert doc1 == doc2


@pytest.mark.parametrize("name,target", [("cert_a", "A"), ("cert_b", "B")])
def test_certificate_schema(name, target, request):
    doc = request.getfixturevalue(name).to_doc()
    assert doc["target"] == ("A_negative" if target == "A" else "B_positive")
    assert doc["parameters"]["n"] == 6 and doc["parameters"]["m"] == 6
    assert doc["parameters"]["T_star"] == 4.0
    assert doc["status"] == "certified"
    assert set(doc["tail"]) == {"t", "u"}
    for chart in ("t", "u"):
        tail = doc["tail"][chart]
        assert tail["certified"] and tail["epsilon_bound"] < 1
    assert doc["hypotheses"]
    for seg in doc["segments"]:
        assert seg["margin"] > 0


def test_segments_cover_charts(cert_a):
    for chart in ("t", "u"):
        segs = sorted((s.lo, s.hi) for s in cert_a.segments if s.chart == chart)
        assert segs[0][0] == 1.0 and segs[-1][1] == 4.0
        for (lo1, hi1), (lo2, hi2) in zip(segs, segs[1:]):
            assert hi1 == lo2  # contiguous, no gaps


def test_invalid_parameters_rejected():
    with pytest.raises(ValueError):
        certify_sign("C")
    with pytest.raises(ValueError):
        certify_sign("A", n=6, m=5)
    with pytest.raises(ValueError):
        certify_sign("A", t_star=1.5)


# ---------------------------------------------------------------------------
# model vs plain numerics

@pytest.mark.parametrize("target", ["A", "B"])
@pytest.mark.parametrize("t", [1.0, 1.5, 2.5])
def test_models_match_numeric_value(target, t):
    value, err = numeric_value(target, t)
    t_iv = Interval.point(t)
    model = build_model(target, 6, NEAR_INFINITY).enclose(t_iv)
    env = (_env_prefactor("t", t_iv) * _env_sum(6, t_iv)).hi
    # numeric_value works in plain doubles; allow its roundoff on top of the
    # reported truncation error
    tol = err + 1e-12 * (1 + abs(value))
    assert model.lo - env - tol <= value <= model.hi + env + tol
