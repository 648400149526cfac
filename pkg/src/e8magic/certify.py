"""Certified sign inequalities for the Laplace densities A(t) and B(t).

The radial function g is nonpositive beyond the packing radius and has a
nonnegative Fourier transform because two explicit functions of one variable,

    A(t) = -t^2 phi_0(i/t) - (36/pi^2) psi_I(it)   (must be < 0 on (0, inf)),
    B(t) = -t^2 phi_0(i/t) + (36/pi^2) psi_I(it)   (must be > 0 on (0, inf)),

keep a fixed sign.  Both are approximated by finite exponential-polynomial
models with exact rational-times-pi-power coefficients read off the q-series
catalog, and the discarded tails are dominated by an explicit remainder
envelope built from the coefficient-growth hypotheses.  ``certify_sign``
verifies model sign and envelope domination in interval arithmetic on an
adaptive segmentation of the two charts (u = 1/t in (0, 1], t in [1, inf)),
closing each unbounded end with a dominant-term ratio argument.  The result
is a machine-checkable :class:`Certificate`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .modforms import FormId, build_form, eval_form
from .qseries import EIGHTH
from .rigor import (
    INV_PI,
    INV_PI_SQ,
    PI,
    TWO_SQRT2_PI,
    Interval,
    enclose_fraction,
    ia_exp_poly,
    sqrt_interval,
)

__all__ = [
    "ModelTerm",
    "ExpPolyModel",
    "Certificate",
    "build_model",
    "remainder_envelope",
    "certify_sign",
    "numeric_value",
    "HYPOTHESES",
]

NEAR_ZERO = "near_zero"
NEAR_INFINITY = "near_infinity"

HYPOTHESES = (
    "|c_psiI(n)| <= e^(4 pi sqrt(n)) for half-integer n > 0",
    "|c_psiS(n)| <= 2 e^(4 pi sqrt(n)) for half-integer n > 0",
    "|c_phi0(n)| <= 2 e^(4 pi sqrt(n)) for integer n > 0",
    "|c_phi-2(n)| <= e^(4 pi sqrt(n)) for integer n > 0",
    "|c_phi-4(n)| <= e^(4 pi sqrt(n)) for integer n > 0",
)

_PI_POW_INV = {0: Interval(1.0, 1.0), 1: INV_PI, 2: INV_PI_SQ}


@dataclass(frozen=True)
class ModelTerm:
    """One exponential-polynomial term  (coeff / pi^pi_pow) * x^p * e^(-pi*decay*x)."""

    coeff: Fraction
    pi_pow: int
    p: int
    decay: Fraction  # negative decay means growth (the e^{2 pi t} term)

    def magnitude_interval(self) -> Interval:
        return enclose_fraction(abs(self.coeff)) * _PI_POW_INV[self.pi_pow]

    def coeff_interval(self) -> Interval:
        return enclose_fraction(self.coeff) * _PI_POW_INV[self.pi_pow]

    def enclose(self, x: Interval) -> Interval:
        sigma = PI * enclose_fraction(self.decay)
        return ia_exp_poly(self.coeff_interval(), self.p, sigma, x)


@dataclass(frozen=True)
class ExpPolyModel:
    """Finite model of A or B in one chart.

    In the near-infinity regime the terms sum to the truncation of the target
    itself, as a function of t.  In the near-zero regime they sum to the
    truncation divided by t^2, as a function of u = 1/t (so the sign of the
    model is the sign of the truncated target).
    """

    target: str
    regime: str
    cutoff: int
    terms: tuple[ModelTerm, ...]

    def enclose(self, x: Interval) -> Interval:
        total = Interval(0.0, 0.0)
        for term in self.terms:
            total = total + term.enclose(x)
        return total

    def term_map(self) -> dict[tuple[int, int, Fraction], Fraction]:
        """(p, pi_pow, decay) -> rational coefficient, for golden-value tests."""
        return {(t.p, t.pi_pow, t.decay): t.coeff for t in self.terms}


def _series_coefficients(form: FormId, max_index: Fraction, order: int):
    series = build_form(form, max(int(max_index) + 4, order))
    out = {}
    for e, c in series.coeffs.items():
        idx = Fraction(e, EIGHTH)
        if idx <= max_index:
            out[idx] = c
    return out


def build_model(target: str, n: int, regime: str, order: int = 16) -> ExpPolyModel:
    """Exact truncation model with cutoff n (error O(t^2 e^{-pi n t}) in its chart).

    Coefficients combine the catalog Fourier coefficients at indices k with
    2k < n, with explicit powers of pi in the denominators.
    """
    if target not in ("A", "B"):
        raise ValueError("target must be 'A' or 'B'")
    if regime not in (NEAR_ZERO, NEAR_INFINITY):
        raise ValueError(f"unknown regime {regime!r}")
    if n < 1:
        raise ValueError("cutoff must be >= 1")
    psi_sign = -1 if target == "A" else 1
    kmax = Fraction(n - 1, 2)  # largest series index entering the model
    merged: dict[tuple[int, int, Fraction], Fraction] = {}

    def add(p: int, pi_pow: int, decay: Fraction, c: Fraction) -> None:
        if c == 0:
            return
        key = (p, pi_pow, decay)
        merged[key] = merged.get(key, Fraction(0)) + c
        if merged[key] == 0:
            del merged[key]

    if regime == NEAR_INFINITY:
        phi0 = _series_coefficients(FormId.PHI_0, kmax, order)
        phi2 = _series_coefficients(FormId.PHI_M2, kmax, order)
        phi4 = _series_coefficients(FormId.PHI_M4, kmax, order)
        psii = _series_coefficients(FormId.PSI_I, kmax, order)
        for k, c in phi0.items():
            add(2, 0, 2 * k, -c)
        for k, c in phi2.items():
            add(1, 1, 2 * k, 12 * c)
        for k, c in phi4.items():
            add(0, 2, 2 * k, -36 * c)
        for k, c in psii.items():
            add(0, 2, 2 * k, psi_sign * 36 * c)
    else:
        phi0 = _series_coefficients(FormId.PHI_0, kmax, order)
        psis = _series_coefficients(FormId.PSI_S, kmax, order)
        for k, c in phi0.items():
            add(0, 0, 2 * k, -c)
        for k, c in psis.items():
            add(0, 2, 2 * k, -psi_sign * 36 * c)

    terms = tuple(
        ModelTerm(coeff=c, pi_pow=key[1], p=key[0], decay=key[2])
        for key, c in sorted(merged.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))
    )
    return ExpPolyModel(target=target, regime=regime, cutoff=n, terms=terms)


# ---------------------------------------------------------------------------
# remainder envelopes

def _env_sum(m: int, x: Interval) -> Interval:
    """Upper enclosure of  sum_{n>=m} 2 e^{2 sqrt2 pi sqrt(n)} e^{-pi n x}.

    Terms up to the geometric threshold are evaluated individually; beyond it
    e^{2 sqrt2 pi sqrt(n)} <= e^{c pi n} (c < x.lo) turns the rest into a
    geometric series.
    """
    c = Fraction(1, 2)
    if x.lo < 0.55:
        raise ValueError("remainder envelope needs the chart variable >= 0.55")
    n_geo = max(m, math.ceil((Fraction(8) / (c * c))))  # smallest n with 2*sqrt2 <= c*sqrt(n)
    c_iv = enclose_fraction(c)
    # containment sanity: 8 <= c^2 * n_geo, exact rational check
    if Fraction(8) > c * c * n_geo:
        raise AssertionError("geometric threshold miscomputed")
    total = Interval(0.0, 0.0)
    for k in range(m, n_geo):
        k_iv = Interval.from_rational(k)
        total = total + 2 * (TWO_SQRT2_PI * sqrt_interval(k_iv) - PI * k_iv * x).exp()
    ratio = (-PI * (x - c_iv)).exp()
    if ratio.hi >= 1.0:
        raise ValueError("geometric tail ratio >= 1 on this segment")
    head = 2 * (-PI * (x - c_iv) * Interval.from_rational(n_geo)).exp()
    return total + head / (1 - ratio)


def _env_prefactor(chart: str, x: Interval) -> Interval:
    if chart == "t":
        return x.powi(2) + 12 * INV_PI * x + 36 * INV_PI_SQ
    # u-chart envelope is compared against the model scaled by t^2, i.e.
    # (t^2 + 36/pi^2) / t^2 = 1 + (36/pi^2) u^2
    return Interval(1.0, 1.0) + 36 * INV_PI_SQ * x.powi(2)


def remainder_envelope(m: int, regime: str, t: Interval) -> Interval:
    """Rigorous upper enclosure of the remainder envelope as a function of t."""
    if m < 1:
        raise ValueError("cutoff must be >= 1")
    if regime == NEAR_INFINITY:
        if t.lo < 1.0:
            raise ValueError("near-infinity envelope needs t >= 1")
        pref = t.powi(2) + 12 * INV_PI * t + 36 * INV_PI_SQ
        return pref * _env_sum(m, t)
    if regime == NEAR_ZERO:
        if t.hi > 1.0 or t.lo <= 0.0:
            raise ValueError("near-zero envelope needs 0 < t <= 1")
        u = Interval(1.0, 1.0) / t
        pref = t.powi(2) + 36 * INV_PI_SQ
        return pref * _env_sum(m, u)
    raise ValueError(f"unknown regime {regime!r}")


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class Segment:
    chart: str
    lo: float
    hi: float
    model_lo: float
    model_hi: float
    env_hi: float
    margin: float
    rounding_width: float


@dataclass(frozen=True)
class TailRecord:
    chart: str
    x_star: float
    dominant: str
    epsilon_hi: float
    certified: bool


@dataclass(frozen=True)
class Certificate:
    target: str
    n: int
    m: int
    t_star: float
    u_star: float
    max_depth: int
    hypotheses: tuple[str, ...]
    segments: tuple[Segment, ...]
    tails: tuple[TailRecord, ...]
    status: str
    failure_location: tuple[str, float, float] | None = None

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    @property
    def min_margin(self) -> float:
        return min((s.margin for s in self.segments), default=math.inf)

    def to_doc(self) -> dict:
        return {
            "target": f"{self.target}_negative" if self.target == "A" else f"{self.target}_positive",
            "parameters": {
                "n": self.n,
                "m": self.m,
                "T_star": self.t_star,
                "U_star": self.u_star,
                "max_depth": self.max_depth,
            },
            "hypotheses": list(self.hypotheses),
            "segments": [
                {
                    "lo": s.lo,
                    "hi": s.hi,
                    "chart": s.chart,
                    "model_lo": s.model_lo,
                    "model_hi": s.model_hi,
                    "env_hi": s.env_hi,
                    "margin": s.margin,
                }
                for s in self.segments
            ],
            "tail": {
                t.chart: {
                    "x_star": t.x_star,
                    "dominant": t.dominant,
                    "epsilon_bound": t.epsilon_hi,
                    "certified": t.certified,
                }
                for t in self.tails
            },
            "status": self.status
            if self.certified
            else f"failed({self.failure_location[0]}-chart "
            f"[{self.failure_location[1]}, {self.failure_location[2]}])",
        }


def _leaf_check(model: ExpPolyModel, m: int, chart: str, x: Interval, sign: int):
    """Returns (ok, model_iv, env_hi, margin)."""
    model_iv = model.enclose(x)
    env = _env_prefactor(chart, x) * _env_sum(m, x)
    env_hi = env.hi
    if sign < 0:
        ok = model_iv.hi < 0 and env_hi < -model_iv.hi
        margin = -model_iv.hi - env_hi
    else:
        ok = model_iv.lo > 0 and env_hi < model_iv.lo
        margin = model_iv.lo - env_hi
    return ok, model_iv, env_hi, margin


def _bisect_chart(model: ExpPolyModel, m: int, chart: str, x_star: float, max_depth: int, sign: int):
    segments: list[Segment] = []
    stack = [(1.0, x_star, 0)]
    while stack:
        lo, hi, depth = stack.pop()
        x = Interval(lo, hi)
        ok, model_iv, env_hi, margin = _leaf_check(model, m, chart, x, sign)
        if ok:
            mid_pt = Interval.point(0.5 * (lo + hi))
            pm = model.enclose(mid_pt)
            pe = _env_prefactor(chart, mid_pt) * _env_sum(m, mid_pt)
            segments.append(
                Segment(
                    chart=chart,
                    lo=lo,
                    hi=hi,
                    model_lo=model_iv.lo,
                    model_hi=model_iv.hi,
                    env_hi=env_hi,
                    margin=margin,
                    rounding_width=pm.width + pe.width,
                )
            )
            continue
        if depth >= max_depth:
            return segments, (chart, lo, hi)
        mid = 0.5 * (lo + hi)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    segments.sort(key=lambda s: s.lo)
    return segments, None


def _tail_check(model: ExpPolyModel, m: int, chart: str, x_star: float, sign: int) -> TailRecord:
    """Dominant-term argument on [x_star, inf).

    Writes model + envelope <= dominant * (1 - eps(x)) with eps a sum of
    ratio terms C x^k e^{-beta x}; each ratio is checked monotone decreasing
    beyond x_star and eps(x_star) is evaluated in interval arithmetic.
    """
    terms = sorted(model.terms, key=lambda t: (t.decay, -t.p))
    dom = terms[0]
    same_key = [t for t in terms if t.decay == dom.decay and t.p == dom.p]
    if len(same_key) != 1:
        raise ValueError("dominant model term is not unique")
    if (dom.coeff > 0) != (sign > 0):
        return TailRecord(chart, x_star, _term_name(dom), math.inf, False)

    x = Interval.point(x_star)
    dom_mag = dom.magnitude_interval()
    competitors: list[tuple[Interval, int, Fraction]] = []  # (|C|, p, decay)
    for t in terms[1:]:
        competitors.append((t.magnitude_interval(), t.p, t.decay))
    # envelope = prefactor-poly * (explicit terms + geometric tail)
    if chart == "t":
        pref_parts = [(Interval(1.0, 1.0), 2), (12 * INV_PI, 1), (36 * INV_PI_SQ, 0)]
    else:
        pref_parts = [(Interval(1.0, 1.0), 0), (36 * INV_PI_SQ, 2)]
    c = Fraction(19, 20)  # x_star >= 2 > 0.95 always holds here
    n_geo = max(m, math.ceil(Fraction(8) / (c * c)))
    exp_parts: list[tuple[Interval, Fraction]] = []  # (|C|, decay)
    for k in range(m, n_geo):
        amp = 2 * (TWO_SQRT2_PI * sqrt_interval(Interval.from_rational(k))).exp()
        exp_parts.append((amp, Fraction(k)))
    ratio_star = (-PI * (x - enclose_fraction(c))).exp()
    if ratio_star.hi >= 1.0:
        raise ValueError("x_star too small for the geometric tail")
    geo_amp = 2 * (PI * enclose_fraction(c) * Interval.from_rational(n_geo)).exp() / (1 - ratio_star)
    exp_parts.append((geo_amp, Fraction(n_geo)))
    for pc, pp in pref_parts:
        for ec, decay in exp_parts:
            competitors.append((pc * ec, pp, decay))

    eps = Interval(0.0, 0.0)
    pi_lo = PI.lo
    for mag, p, decay in competitors:
        k = p - dom.p
        beta = decay - dom.decay  # in units of pi
        if beta < 0 or (beta == 0 and k > 0):
            return TailRecord(chart, x_star, _term_name(dom), math.inf, False)
        if beta > 0 and k > 0 and x_star < k / (pi_lo * float(beta)):
            return TailRecord(chart, x_star, _term_name(dom), math.inf, False)
        ratio = mag / dom_mag
        if k > 0:
            ratio = ratio * x.powi(k)
        elif k < 0:
            ratio = ratio / x.powi(-k)
        if beta != 0:
            ratio = ratio * (-PI * enclose_fraction(beta) * x).exp()
        eps = eps + ratio
    return TailRecord(chart, x_star, _term_name(dom), eps.hi, eps.hi < 1.0)


def _term_name(t: ModelTerm) -> str:
    pi_part = {0: "", 1: "/pi", 2: "/pi^2"}[t.pi_pow]
    x_part = {0: "", 1: "*x", 2: "*x^2"}[t.p]
    if t.decay == 0:
        return f"{t.coeff}{pi_part}{x_part}"
    sign = "-" if t.decay > 0 else "+"
    return f"{t.coeff}{pi_part}{x_part}*exp({sign}{abs(t.decay)}*pi*x)"


def certify_sign(
    target: str,
    n: int = 6,
    m: int = 6,
    t_star: float = 4.0,
    max_depth: int = 60,
    u_star: float | None = None,
) -> Certificate:
    """Certify A < 0 (target 'A') or B > 0 (target 'B') on all of (0, inf)."""
    if target not in ("A", "B"):
        raise ValueError("target must be 'A' or 'B'")
    if n != m:
        raise ValueError("model and envelope cutoffs must agree")
    if t_star < 2:
        raise ValueError("t_star must be >= 2")
    if u_star is None:
        u_star = t_star
    sign = -1 if target == "A" else 1
    segments: list[Segment] = []
    tails: list[TailRecord] = []
    failure = None
    for chart, x_star in (("t", t_star), ("u", u_star)):
        regime = NEAR_INFINITY if chart == "t" else NEAR_ZERO
        model = build_model(target, n, regime)
        segs, fail = _bisect_chart(model, m, chart, x_star, max_depth, sign)
        segments.extend(segs)
        if fail is not None:
            failure = fail
            break
        tail = _tail_check(model, m, chart, x_star, sign)
        tails.append(tail)
        if not tail.certified:
            failure = (chart, x_star, math.inf)
            break
    status = "certified" if failure is None else "failed"
    return Certificate(
        target=target,
        n=n,
        m=m,
        t_star=t_star,
        u_star=u_star,
        max_depth=max_depth,
        hypotheses=HYPOTHESES,
        segments=tuple(segments),
        tails=tuple(tails),
        status=status,
        failure_location=failure,
    )


# ---------------------------------------------------------------------------
# plain numerical evaluation (for plots and consistency tests)

def numeric_value(target: str, t: float, order: int = 64) -> tuple[float, float]:
    """Float value of A(t) or B(t) with an error estimate.

    Uses the near-zero representation for t <= 1 and the near-infinity one
    for t >= 1, so every series argument has imaginary part >= 1.
    """
    if target not in ("A", "B"):
        raise ValueError("target must be 'A' or 'B'")
    if t <= 0:
        raise ValueError("t must be positive")
    psi_sign = -1 if target == "A" else 1
    if t <= 1.0:
        w = 1j / t
        phi0 = eval_form(FormId.PHI_0, w, order)
        psis = eval_form(FormId.PSI_S, w, order)
        value = -(t**2) * phi0.value - psi_sign * (36 / math.pi**2) * t**2 * psis.value
        err = t**2 * (phi0.tail_bound + 36 / math.pi**2 * psis.tail_bound)
    else:
        w = 1j * t
        phi0 = eval_form(FormId.PHI_0, w, order)
        phi2 = eval_form(FormId.PHI_M2, w, order)
        phi4 = eval_form(FormId.PHI_M4, w, order)
        psii = eval_form(FormId.PSI_I, w, order)
        value = (
            -(t**2) * phi0.value
            + (12 / math.pi) * t * phi2.value
            - (36 / math.pi**2) * phi4.value
            + psi_sign * (36 / math.pi**2) * psii.value
        )
        err = (
            t**2 * phi0.tail_bound
            + 12 / math.pi * t * phi2.tail_bound
            + 36 / math.pi**2 * (phi4.tail_bound + psii.tail_bound)
        )
    err += abs(value.imag)
    return value.real, err
