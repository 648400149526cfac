"""Numerical evaluation of the radial eigenfunctions a, b and the magic function g.

The +1 eigenfunction a and the -1 eigenfunction b of the 8-dimensional Fourier
transform are evaluated through their single-integral representations

    a(r) = 4i sin(pi r^2/2)^2 ( 36/(pi^3(r^2-2)) - 8640/(pi^3 r^4)
            + 18144/(pi^3 r^2)
            + int_0^oo (t^2 phi_0(i/t) - (36/pi^2)e^{2pi t}
                        + (8640/pi)t - 18144/pi^2) e^{-pi r^2 t} dt ),
    b(r) = 4i sin(pi r^2/2)^2 ( 144/(pi r^2) + 1/(pi(r^2-2))
            + int_0^oo (psi_I(it) - 144 - e^{2pi t}) e^{-pi r^2 t} dt ),

with the Laplace integrals split at t = 1: the far range integrates the
q-expansions termwise in closed form, the near range substitutes u = 1/t and
uses adaptive Gauss-Legendre panels.  The removable singularities at r = 0 and
r^2 = 2 are handled by series branches, and derivatives are obtained by
differentiating the representations analytically.  Two independent oracles are
provided: ``contour_eval`` integrates the defining contours directly, and
``hankel_fourier_oracle`` checks the Fourier eigenfunction relations through a
numerical Hankel transform of order 3.

Values of a and b are purely imaginary; all functions here return the real
number with the global i factored out (g and ghat are genuinely real).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import jv

from .modforms import FormId, build_form, eval_form
from .qseries import EIGHTH

__all__ = [
    "RadialValue",
    "MagicFunctionSpec",
    "MAGIC",
    "eval_a",
    "eval_b",
    "eval_g",
    "eval_g_deriv",
    "contour_eval",
    "hankel_fourier_oracle",
]

_PI = math.pi
_SERIES_ORDER = 200  # eighths: q-powers up to 25
_QUAD_TOL = 1e-12
_SING_BAND = 1e-3


@dataclass(frozen=True)
class RadialValue:
    """Function value with the global i factored out, plus an error estimate.

    ``residual`` carries the spurious real part discarded by quadrature-based
    oracles (exactly zero for the Laplace-integral evaluators).
    """

    value: float
    err: float
    residual: float = 0.0

    def agrees_with(self, other: "RadialValue | float", slack: float = 0.0) -> bool:
        ov = other.value if isinstance(other, RadialValue) else float(other)
        oe = other.err if isinstance(other, RadialValue) else 0.0
        return abs(self.value - ov) <= self.err + oe + slack


@dataclass(frozen=True)
class MagicFunctionSpec:
    """The linear combination defining g and its Fourier transform.

    g = coefficient_a * a + coefficient_b * b; ghat flips the sign of the b
    component because a has Fourier eigenvalue +1 and b has eigenvalue -1.
    """

    coefficient_a: complex = 1j * _PI / 8640
    coefficient_b: complex = 1j / (240 * _PI)
    sign_for_ghat: int = -1


MAGIC = MagicFunctionSpec()


# ---------------------------------------------------------------------------
# series data

@lru_cache(maxsize=None)
def _coeff_arrays(form: FormId) -> tuple[np.ndarray, np.ndarray]:
    """(indices n, float coefficients c(n)) with n > 0, from the catalog."""
    series = build_form(form, _SERIES_ORDER)
    ks, cs = [], []
    for e, c in sorted(series.coeffs.items()):
        if e > 0:
            ks.append(e / EIGHTH)
            cs.append(float(c))
    return np.array(ks), np.array(cs)


def _series_sum(form: FormId, u: np.ndarray) -> np.ndarray:
    """sum_{n>0} c(n) e^{-2 pi n u} for u >= 1 (positive-index part only)."""
    ks, cs = _coeff_arrays(form)
    return np.exp(-2 * _PI * np.outer(u, ks)) @ cs


def _series_tail_err(u_min: float) -> float:
    """Crude bound on the dropped terms n > 25 of any catalog series at u >= u_min."""
    n0 = _SERIES_ORDER / EIGHTH
    # |c(n)| <= 2 e^{4 pi sqrt n}; ratio between consecutive terms < e^{-pi} for n > 25
    first = 2 * math.exp(4 * _PI * math.sqrt(n0) - 2 * _PI * n0 * u_min)
    return first / (1 - math.exp(-_PI))


# ---------------------------------------------------------------------------
# far range [1, oo): termwise closed forms  int_1^oo t^p e^{-beta t} dt

def _exp_int(p: int, beta: np.ndarray) -> np.ndarray:
    """int_1^oo t^p e^{-beta t} dt = e^{-beta} sum_{i<=p} (p!/(p-i)!) beta^{-(i+1)}."""
    inv = 1.0 / beta
    acc = inv.copy()
    fact = 1.0
    term = inv
    for i in range(1, p + 1):
        fact *= p - i + 1
        term = term * inv
        acc = acc + fact * term
    return np.exp(-beta) * acc


def _a_far(y: np.ndarray, deriv: bool) -> np.ndarray:
    """int_1^oo (t^2 phi_0(i/t) - asymptote) e^{-pi y t} dt, optionally d/dy.

    On t >= 1 the transformation law turns the integrand into
    sum_k (c_phi0(k) t^2 - (12/pi) c_phi-2(k) t + (36/pi^2) c_phi-4(k)) e^{-2 pi k t},
    the asymptote cancelling the k <= 0 contributions exactly.
    """
    d = 1 if deriv else 0
    k0, c0 = _coeff_arrays(FormId.PHI_0)
    k2, c2 = _coeff_arrays(FormId.PHI_M2)
    k4, c4 = _coeff_arrays(FormId.PHI_M4)
    total = np.zeros_like(y, dtype=float)
    beta = _PI * (2 * k0[None, :] + y[:, None])
    total += _exp_int(2 + d, beta) @ c0
    beta = _PI * (2 * k2[None, :] + y[:, None])
    total -= (12 / _PI) * (_exp_int(1 + d, beta) @ c2)
    beta = _PI * (2 * k4[None, :] + y[:, None])
    total += (36 / _PI**2) * (_exp_int(0 + d, beta) @ c4)
    return total * (-_PI) ** d


def _b_far(y: np.ndarray, deriv: bool) -> np.ndarray:
    """int_1^oo (psi_I(it) - 144 - e^{2 pi t}) e^{-pi y t} dt, optionally d/dy."""
    d = 1 if deriv else 0
    ks, cs = _coeff_arrays(FormId.PSI_I)
    beta = _PI * (2 * ks[None, :] + y[:, None])
    return ((-_PI) ** d) * (_exp_int(d, beta) @ cs)


# ---------------------------------------------------------------------------
# near range (0, 1]: substitute u = 1/t and integrate over u in [1, oo)

def _gauss_nodes(n: int = 40) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def _adaptive_panels(f, lo: float, hi: float, tol: float) -> list[tuple[float, float]]:
    """Bisect [lo, hi] until each panel's degree-40 estimate is stable to tol."""
    x0, w0 = _gauss_nodes()

    def gl(a: float, b: float) -> float:
        half = 0.5 * (b - a)
        return half * float(np.dot(w0, f(a + half * (x0 + 1.0))))

    panels: list[tuple[float, float]] = []
    stack = [(lo, hi, gl(lo, hi), 0)]
    while stack:
        a, b, coarse, depth = stack.pop()
        m = 0.5 * (a + b)
        fine = gl(a, m) + gl(m, b)
        if abs(fine - coarse) < tol or depth >= 30:
            panels.append((a, m))
            panels.append((m, b))
            continue
        stack.append((a, m, gl(a, m), depth + 1))
        stack.append((m, b, gl(m, b), depth + 1))
    return sorted(panels)


@lru_cache(maxsize=None)
def _near_quadrature(which: str) -> tuple[np.ndarray, np.ndarray]:
    """Nodes u_j and y-independent weights w_j * f(u_j) / u_j^2 for the series
    part of the near-range integral of a ('a') or b ('b'), built once by
    adaptive bisection at y = 0 where the integrand is largest."""
    if which == "a":
        def base(u: np.ndarray) -> np.ndarray:
            # t^2 phi_0(i/t) at t = 1/u
            return _series_sum(FormId.PHI_0, u) / u**2
    else:
        def base(u: np.ndarray) -> np.ndarray:
            # psi_I(it) series part at t = 1/u, via psi_I(i/u) = -psi_S(iu)/u^2
            return -_series_sum(FormId.PSI_S, u) / u**2

    u_max = 14.0  # series integrand decays like e^{-2 pi u}: below 1e-33 past here
    panels = _adaptive_panels(lambda u: base(u) / u**2, 1.0, u_max, _QUAD_TOL)
    x0, w0 = _gauss_nodes()
    nodes, weights = [], []
    for a_, b_ in panels:
        half = 0.5 * (b_ - a_)
        nodes.append(a_ + half * (x0 + 1.0))
        weights.append(half * w0)
    u = np.concatenate(nodes)
    w = np.concatenate(weights) * base(u) / u**2
    return u, w


def _unit_moment(p: int, beta: np.ndarray) -> np.ndarray:
    """int_0^1 t^p e^{-beta t} dt, stable for beta of either sign and near zero."""
    beta = np.asarray(beta, dtype=float)
    safe = np.where(np.abs(beta) < 0.5, 1.0, beta)
    eb = np.exp(-safe)
    if p == 0:
        closed = -np.expm1(-safe) / safe
    elif p == 1:
        closed = (1.0 - eb * (1.0 + safe)) / safe**2
    elif p == 2:
        closed = (2.0 - eb * (safe**2 + 2 * safe + 2)) / safe**3
    elif p == 3:
        closed = (6.0 - eb * (safe**3 + 3 * safe**2 + 6 * safe + 6)) / safe**4
    else:
        raise ValueError("moment degree must be <= 3")
    # Taylor branch: sum_k (-beta)^k / (k! (k + p + 1))
    taylor = np.zeros_like(beta)
    term = np.ones_like(beta)
    for k in range(0, 26):
        taylor = taylor + term / (k + p + 1)
        term = term * (-beta) / (k + 1)
    return np.where(np.abs(beta) < 0.5, taylor, closed)


# (coefficient, power p, exponential shift m): terms c * t^p * e^{-pi m t} whose
# integral against e^{-pi y t} over [0, 1] is done in closed form
_ELEM_TERMS = {
    "a": ((-36 / _PI**2, 0, -2.0), (8640 / _PI, 1, 0.0), (-18144 / _PI**2, 0, 0.0)),
    "b": ((-144.0, 0, 0.0), (-1.0, 0, -2.0)),
}


def _near_integral(which: str, y: np.ndarray, deriv: bool) -> np.ndarray:
    """int_0^1 (integrand)(t) e^{-pi y t} dt, optionally d/dy, as a function of y.

    The q-series part is integrated by quadrature in the u = 1/t chart; the
    subtracted elementary terms (which do not decay in u) use closed forms.
    """
    u, w = _near_quadrature(which)
    kernel = np.exp(-_PI * np.outer(y, 1.0 / u))
    if deriv:
        kernel = kernel * (-_PI / u)[None, :]
    total = kernel @ w
    d = 1 if deriv else 0
    for c, p, m in _ELEM_TERMS[which]:
        total = total + c * ((-_PI) ** d) * _unit_moment(p + d, _PI * (y + m))
    return total


# ---------------------------------------------------------------------------
# singular prefactors: stable ratios of sin(pi y/2)^2

def _sin2_coeffs(k_max: int = 8) -> list[float]:
    """Taylor coefficients of sin^2(pi x / 2) = sum_k s_k x^{2k}."""
    return [
        (-1) ** (k + 1) * 2 ** (2 * k - 1) * (_PI / 2) ** (2 * k) / math.factorial(2 * k)
        for k in range(1, k_max + 1)
    ]


_S2_COEFFS = _sin2_coeffs()


def _reduce(y: np.ndarray) -> np.ndarray:
    """y modulo 2, reduced to [-1, 1]: sin^2(pi y/2) = sin^2(pi x/2) at x = _reduce(y)."""
    return y - 2.0 * np.round(0.5 * y)


def _sin2(y: np.ndarray) -> np.ndarray:
    return np.sin(0.5 * _PI * _reduce(y)) ** 2


def _sin2_prime(y: np.ndarray) -> np.ndarray:
    """d/dy sin^2(pi y/2) = (pi/2) sin(pi y), reduced for accuracy near shells."""
    return 0.5 * _PI * np.sin(_PI * _reduce(y))


def _ratio(y: np.ndarray, center: float, power: int, deriv: bool) -> np.ndarray:
    """Stable sin^2(pi y/2) / (y - center)^power (center in {0, 2}), or its d/dy.

    Away from the singularity the direct quotient is used; inside the band the
    power series of sin^2(pi x/2) in x = y - center takes over (the reduction
    makes x the distance to the nearest even integer, which equals y - center
    exactly when y is near center).
    """
    x = y - center
    near = np.abs(x) < _SING_BAND
    out = np.empty_like(y, dtype=float)
    far = ~near
    if far.any():
        if deriv:
            out[far] = _sin2_prime(y[far]) / x[far] ** power - power * _sin2(y[far]) / x[far] ** (
                power + 1
            )
        else:
            out[far] = _sin2(y[far]) / x[far] ** power
    if near.any():
        xs = x[near]
        acc = np.zeros_like(xs)
        for k, s_k in enumerate(_S2_COEFFS, start=1):
            e = 2 * k - power
            if deriv:
                acc += s_k * e * xs ** (e - 1) if e != 0 else 0.0
            else:
                acc += s_k * xs**e
        out[near] = acc
    return out


# ---------------------------------------------------------------------------
# core vectorized evaluators (y = r^2)

def _a_im_core(y: np.ndarray, deriv: bool = False) -> np.ndarray:
    """Im a / 4 as a function of y = r^2 (or its d/dy)."""
    integral = _near_integral("a", y, False) + _a_far(y, False)
    pref = (
        (36 / _PI**3) * _ratio(y, 2.0, 1, deriv)
        - (8640 / _PI**3) * _ratio(y, 0.0, 2, deriv)
        + (18144 / _PI**3) * _ratio(y, 0.0, 1, deriv)
    )
    if not deriv:
        return pref + _sin2(y) * integral
    d_integral = _near_integral("a", y, True) + _a_far(y, True)
    return pref + _sin2_prime(y) * integral + _sin2(y) * d_integral


def _b_im_core(y: np.ndarray, deriv: bool = False) -> np.ndarray:
    """Im b / 4 as a function of y = r^2 (or its d/dy)."""
    integral = _near_integral("b", y, False) + _b_far(y, False)
    pref = (144 / _PI) * _ratio(y, 0.0, 1, deriv) + (1 / _PI) * _ratio(y, 2.0, 1, deriv)
    if not deriv:
        return pref + _sin2(y) * integral
    d_integral = _near_integral("b", y, True) + _b_far(y, True)
    return pref + _sin2_prime(y) * integral + _sin2(y) * d_integral


def _eval_err(y: float, value: float) -> float:
    """Error estimate: quadrature tolerance, series tails, and roundoff."""
    return 4.0 * (_QUAD_TOL + _series_tail_err(1.0)) + 1e-13 * (1.0 + abs(value))


def eval_a(r: float) -> RadialValue:
    """Im a(r) from the single-integral representation (a(r) = i * value)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    y = np.array([float(r) ** 2])
    value = 4.0 * float(_a_im_core(y)[0])
    return RadialValue(value=value, err=_eval_err(y[0], value))


def eval_b(r: float) -> RadialValue:
    """Im b(r) from the single-integral representation (b(r) = i * value)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    y = np.array([float(r) ** 2])
    value = 4.0 * float(_b_im_core(y)[0])
    return RadialValue(value=value, err=_eval_err(y[0], value))


def _g_from_parts(a_im: np.ndarray, b_im: np.ndarray, which: str) -> np.ndarray:
    ca = (MAGIC.coefficient_a * 1j).real  # i * (i pi/8640) = -pi/8640
    cb = (MAGIC.coefficient_b * 1j).real
    if which == "ghat":
        cb *= MAGIC.sign_for_ghat
    return ca * a_im + cb * b_im


def eval_g(r: float, which: str = "g") -> RadialValue:
    """The magic function g(r) (or ghat), a real number."""
    if which not in ("g", "ghat"):
        raise ValueError("which must be 'g' or 'ghat'")
    if r < 0:
        raise ValueError("r must be nonnegative")
    y = np.array([float(r) ** 2])
    value = float(np.asarray(_g_from_parts(4.0 * _a_im_core(y), 4.0 * _b_im_core(y), which)).reshape(-1)[0])
    return RadialValue(value=value, err=_eval_err(y[0], value))


def eval_g_deriv(r: float, which: str = "g") -> RadialValue:
    """d/dr of g or ghat, by analytic differentiation (d/dr = 2r d/dy)."""
    if which not in ("g", "ghat"):
        raise ValueError("which must be 'g' or 'ghat'")
    if r <= 0:
        raise ValueError("r must be positive")
    y = np.array([float(r) ** 2])
    dy = _g_from_parts(4.0 * _a_im_core(y, deriv=True), 4.0 * _b_im_core(y, deriv=True), which)
    value = 2.0 * float(r) * float(np.asarray(dy).reshape(-1)[0])
    return RadialValue(value=value, err=(1 + 2 * r) * _eval_err(y[0], value))


# ---------------------------------------------------------------------------
# oracle 1: the defining contour integrals

def _complex_gl(f, tol: float = 1e-13) -> tuple[complex, float]:
    """Adaptive Gauss-Legendre of a complex integrand over s in [0, 1]."""
    x0, w0 = _gauss_nodes()

    def gl(a: float, b: float) -> complex:
        half = 0.5 * (b - a)
        s = a + half * (x0 + 1.0)
        return half * complex(np.dot(w0, f(s)))

    total = 0.0 + 0.0j
    err = 0.0
    stack = [(0.0, 1.0, gl(0.0, 1.0), 0)]
    while stack:
        a, b, coarse, depth = stack.pop()
        m = 0.5 * (a + b)
        left, right = gl(a, m), gl(m, b)
        delta = abs(left + right - coarse)
        if delta < tol or depth >= 24:
            if depth >= 24 and delta >= tol:
                raise ArithmeticError(
                    f"contour quadrature failed to converge on segment [{a}, {b}]"
                )
            total += left + right
            err += delta
            continue
        stack.append((a, m, left, depth + 1))
        stack.append((m, b, right, depth + 1))
    return total, err


def _form_at(form: FormId, z: complex) -> complex:
    return eval_form(form, z, order=_SERIES_ORDER).value


def _ray_integral(form: FormId, y: float, include_nonpositive: bool) -> complex:
    """int_i^{i oo} f(z) e^{pi i y z} dz summed termwise in closed form."""
    ks, cs = _coeff_arrays(form)
    total = complex(np.sum(cs * _exp_int(0, _PI * (2 * ks + y))))
    if include_nonpositive:
        series = build_form(form, _SERIES_ORDER)
        for e, c in series.coeffs.items():
            if e <= 0:
                k = e / EIGHTH
                beta = _PI * (2 * k + y)
                if beta <= 0:
                    raise ValueError("ray integral diverges for this r")
                total += float(c) * math.exp(-beta) / beta
    return 1j * total


def contour_eval(r: float, which: str = "a") -> RadialValue:
    """Independent oracle: quadrature of the defining four-segment contours.

    The three finite segments (-1 -> i, 1 -> i, 0 -> i) are parameterized as
    straight lines; the series are always evaluated at arguments with large
    imaginary part by routing through the S-transformation laws.
    """
    if which not in ("a", "b"):
        raise ValueError("which must be 'a' or 'b'")
    if r < 0:
        raise ValueError("r must be nonnegative")
    y = float(r) ** 2
    eps = 0.0

    def kernel(z: np.ndarray) -> np.ndarray:
        return np.exp(1j * _PI * y * z)

    if which == "a":
        def seg_left(s: np.ndarray) -> np.ndarray:
            z = -1.0 + s * (1.0 + 1j)
            w = z + 1.0
            vals = np.array([_form_at(FormId.PHI_0, -1.0 / wj) for wj in w])
            return vals * w**2 * kernel(z) * (1.0 + 1j)

        def seg_right(s: np.ndarray) -> np.ndarray:
            z = 1.0 + s * (-1.0 + 1j)
            w = z - 1.0
            vals = np.array([_form_at(FormId.PHI_0, -1.0 / wj) for wj in w])
            return vals * w**2 * kernel(z) * (-1.0 + 1j)

        def seg_mid(s: np.ndarray) -> np.ndarray:
            z = 1j * s
            vals = np.array([_form_at(FormId.PHI_0, 1j / sj) for sj in s])
            return vals * z**2 * kernel(z) * 1j

        i1, e1 = _complex_gl(seg_left)
        i2, e2 = _complex_gl(seg_right)
        i3, e3 = _complex_gl(lambda s: seg_mid(np.maximum(s, 1e-12)))
        i4 = 2.0 * _ray_integral(FormId.PHI_0, y, include_nonpositive=False)
        total = i1 + i2 - 2.0 * i3 + i4
        eps = e1 + e2 + 2 * e3
    else:
        def seg_left(s: np.ndarray) -> np.ndarray:
            # psi_T(z) = psi_I(z+1) = (z+1)^2 psi_S(-1/(z+1))
            z = -1.0 + s * (1.0 + 1j)
            w = z + 1.0
            vals = np.array([_form_at(FormId.PSI_S, -1.0 / wj) for wj in w])
            return vals * w**2 * kernel(z) * (1.0 + 1j)

        def seg_right(s: np.ndarray) -> np.ndarray:
            # psi_T has period 2, so psi_T(z) = psi_I(z-1) = (z-1)^2 psi_S(-1/(z-1))
            z = 1.0 + s * (-1.0 + 1j)
            w = z - 1.0
            vals = np.array([_form_at(FormId.PSI_S, -1.0 / wj) for wj in w])
            return vals * w**2 * kernel(z) * (-1.0 + 1j)

        def seg_mid(s: np.ndarray) -> np.ndarray:
            # psi_I(is) = -s^2 psi_S(i/s)
            z = 1j * s
            vals = np.array([_form_at(FormId.PSI_S, 1j / sj) for sj in s])
            return -(s**2) * vals * kernel(z) * 1j

        i1, e1 = _complex_gl(seg_left)
        i2, e2 = _complex_gl(seg_right)
        i3, e3 = _complex_gl(lambda s: seg_mid(np.maximum(s, 1e-12)))
        i4 = -2.0 * _ray_integral(FormId.PSI_S, y, include_nonpositive=False)
        total = i1 + i2 - 2.0 * i3 + i4
        # Orientation normalization: deforming this contour onto the imaginary
        # axis gives -4i sin^2(pi r^2/2) Int psi_I(it) e^{-pi r^2 t} dt, which is
        # the negative of the single-integral representation behind eval_b (the
        # one fixed by b'(sqrt 2) = 2 sqrt(2) pi i and ghat >= 0).  Flip the
        # sign so the oracle measures the same function.
        total = -total
        eps = e1 + e2 + 2 * e3
    err = eps + _series_tail_err(0.5) + 1e-12 * (1.0 + abs(total))
    return RadialValue(value=total.imag, err=err, residual=total.real)


# ---------------------------------------------------------------------------
# oracle 2: numerical Hankel transform (8-dimensional radial Fourier transform)

_HANKEL_R_MAX = 12.0
_HANKEL_STEP = 1e-3


@lru_cache(maxsize=None)
def _hankel_table(which: str) -> tuple[np.ndarray, np.ndarray]:
    grid = np.arange(0.0, _HANKEL_R_MAX + 0.5 * _HANKEL_STEP, _HANKEL_STEP)
    y = grid**2
    if which == "a":
        vals = 4.0 * _a_im_core(y)
    elif which == "b":
        vals = 4.0 * _b_im_core(y)
    elif which in ("g", "ghat"):
        vals = _g_from_parts(4.0 * _a_im_core(y), 4.0 * _b_im_core(y), which)
    else:
        raise ValueError("which must be one of 'a', 'b', 'g', 'ghat'")
    return grid, vals


def hankel_fourier_oracle(which: str, s: float) -> RadialValue:
    """Numerically Fourier-transform the tabulated radial function.

    For a radial function f on R^8, fhat(s) = 2 pi s^{-3} int_0^oo f(r)
    J_3(2 pi r s) r^4 dr.  Non-rigorous diagnostic: Simpson's rule on the
    cached tabulation, with the truncation beyond r = 12 negligible because
    all four functions decay faster than e^{-2 pi r}.
    """
    if s <= 0:
        raise ValueError("s must be positive")
    grid, vals = _hankel_table(which)
    integrand = vals * jv(3, 2 * _PI * grid * s) * grid**4
    n = len(grid) - 1
    if n % 2 != 0:
        raise AssertionError("Simpson's rule needs an even number of intervals")
    weights = np.ones(n + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    integral = _HANKEL_STEP / 3.0 * float(np.dot(weights, integrand))
    value = 2 * _PI * s ** (-3) * integral
    # Simpson error ~ h^4 |f''''|; the integrand oscillates at scale 1/(2 pi s)
    err = 1e-8 * (1.0 + abs(value)) + 1e-9 * max(1.0, s) ** 4
    return RadialValue(value=value, err=err)
