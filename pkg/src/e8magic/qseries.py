"""Truncated q-expansions with exact rational coefficients.

Series live on the exponent grid (1/8)*Z, fine enough for the theta constant
with half-integer square exponents; everything else (theta fourth powers,
Eisenstein series, the weakly holomorphic forms) embeds in it.  Exponents are
stored as integer counts of 1/8 units.  Coefficients are `fractions.Fraction`
and every operation is exact: the only approximation anywhere is the explicit
truncation order, which each operation propagates conservatively.

Numerical evaluation at a point of the upper half-plane returns the value of
the stored terms together with a rigorous bound on the discarded tail,
derived from a caller-supplied coefficient growth bound |c(n)| <= C*e^{a*sqrt(n)}.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping

from .rigor import PI, Interval, sqrt_interval

__all__ = ["QSeries", "EvalResult", "DEFAULT_ORDER_STEPS", "EIGHTH"]

# grid units per integer exponent step
EIGHTH = 8
# default truncation: 64 integer q-steps past the lead
DEFAULT_ORDER_STEPS = 64


class TruncationError(ValueError):
    """Raised when an operation would need more series terms than stored."""


@dataclass(frozen=True)
class EvalResult:
    """Value of the stored terms plus a rigorous tail bound."""

    value: complex
    tail_bound: float

    def agrees_with(self, other: "EvalResult", slack: float = 0.0) -> bool:
        return abs(self.value - other.value) <= self.tail_bound + other.tail_bound + slack


@dataclass(frozen=True)
class QSeries:
    """Sparse truncated series  sum_{lead <= e < order} c(e) q^(e/8).

    ``lead`` may be negative (simple poles at the cusp are first-class).
    ``order`` is the exclusive truncation bound; coefficients at exponents
    >= order are unknown, not zero.  ``stride`` records the grid the support
    actually lives on (in 1/8 units); it always divides every populated
    exponent minus ``lead``.
    """

    lead: int
    order: int
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)
    stride: int = EIGHTH

    def __post_init__(self) -> None:
        clean = {}
        for e, c in self.coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            if not (self.lead <= e < self.order):
                raise ValueError(f"exponent {e} outside [{self.lead}, {self.order})")
            clean[int(e)] = c
        stride = 0
        for e in clean:
            stride = gcd(stride, e - self.lead)
        if stride == 0:
            stride = self.stride
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "stride", stride)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(order: int = DEFAULT_ORDER_STEPS * EIGHTH) -> "QSeries":
        return QSeries(0, order, {})

    @staticmethod
    def one(order: int = DEFAULT_ORDER_STEPS * EIGHTH) -> "QSeries":
        return QSeries(0, order, {0: Fraction(1)})

    @staticmethod
    def monomial(e: int, c=1, order: int | None = None) -> "QSeries":
        if order is None:
            order = e + DEFAULT_ORDER_STEPS * EIGHTH
        return QSeries(e, order, {e: Fraction(c)})

    # -- basic queries ----------------------------------------------------

    def coeff(self, e: int) -> Fraction:
        """Coefficient of q^(e/8); raises past the truncation order."""
        if e >= self.order:
            raise TruncationError(f"exponent {e} is beyond truncation order {self.order}")
        return self.coeffs.get(e, Fraction(0))

    def coeff_q(self, n) -> Fraction:
        """Coefficient of q^n for rational n (n in units of 1, not eighths)."""
        e = Fraction(n) * EIGHTH
        if e.denominator != 1:
            raise ValueError(f"exponent {n} is not on the 1/8 grid")
        return self.coeff(int(e))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.lead, self.order, tuple(sorted(self.coeffs.items()))))

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> "QSeries":
        return QSeries(self.lead, self.order, {e: -c for e, c in self.coeffs.items()})

    def __add__(self, other) -> "QSeries":
        other = self._coerce(other)
        lead = min(self.lead, other.lead)
        order = min(self.order, other.order)
        out: dict[int, Fraction] = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        out = {e: c for e, c in out.items() if e < order}
        return QSeries(lead, order, out)

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return QSeries(
                self.lead, self.order, {e: c * other for e, c in self.coeffs.items()}
            )
        other = self._coerce(other)
        order = min(self.order + other.lead, other.order + self.lead)
        lead = self.lead + other.lead
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e < order:
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
        return QSeries(lead, order, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QSeries":
        if n < 0:
            raise ValueError("negative powers: use divide")
        result = QSeries.one(10**9)
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        den = self._coerce(other)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero series")
        dlead = min(den.coeffs)
        d0 = den.coeffs[dlead]
        rel = min(self.order - self.lead, den.order - dlead)
        if rel <= 0:
            raise TruncationError(
                "insufficient truncation overlap for division; "
                f"need order > lead, have relative order {rel}"
            )
        lead = self.lead - dlead
        order = lead + rel
        stride = gcd(self.stride, den.stride)
        out: dict[int, Fraction] = {}
        # long division on the common grid
        for e in range(lead, order, stride):
            num_c = self.coeffs.get(e + dlead, Fraction(0))
            acc = num_c
            for e2, c2 in out.items():
                dc = den.coeffs.get(e + dlead - e2, None)
                if dc is not None:
                    acc -= c2 * dc
            if acc != 0:
                out[e] = acc / d0
        return QSeries(lead, order, out, stride=stride)

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return QSeries(0, 10**9, {0: Fraction(other)})
        raise TypeError(f"cannot combine QSeries with {type(other).__name__}")

    # -- the operators the catalog needs ------------------------------------

    def D(self) -> "QSeries":
        """q d/dq: the coefficient of q^n is multiplied by n."""
        return QSeries(
            self.lead,
            self.order,
            {e: c * Fraction(e, EIGHTH) for e, c in self.coeffs.items()},
        )

    def translate(self, shift: int) -> "QSeries":
        """Substitute z -> z + shift (shift = +1 or -1).

        The coefficient of q^n picks up e^(2*pi*i*n*shift); on the half-integer
        grid this is a sign.  Finer support would need roots of unity, which
        are out of scope, so it is rejected.
        """
        if shift not in (1, -1):
            raise ValueError("shift must be +1 or -1")
        out = {}
        for e, c in self.coeffs.items():
            if e % 4 != 0:
                raise ValueError(
                    f"translate needs support on the (1/2)Z grid, found exponent {e}/8"
                )
            out[e] = c if e % 8 == 0 else -c
        return QSeries(self.lead, self.order, out)

    # -- numerical evaluation ------------------------------------------------

    def eval_at(
        self,
        z: complex,
        bound_constant: float,
        bound_exponent: float,
        max_explicit_terms: int = 100_000,
    ) -> EvalResult:
        """Evaluate sum c(n) e^{2*pi*i*n*z} over the stored terms.

        The caller asserts |c(n)| <= bound_constant * e^{bound_exponent*sqrt(n)}
        for every n >= order on the support grid; the returned ``tail_bound``
        then rigorously majorizes the magnitude of everything discarded.
        The majorant splits the tail at the index past which e^{a sqrt(n)}
        is beaten by e^{pi*y*n}: finitely many leading tail terms are bounded
        individually in interval arithmetic, the rest by a geometric series
        with ratio exp(-pi*y*stride/8).
        """
        y = z.imag
        if y <= 0:
            raise ValueError("evaluation point must satisfy Im z > 0")
        if bound_constant < 0 or bound_exponent < 0:
            raise ValueError("growth-bound parameters must be nonnegative")
        value = 0j
        for e, c in self.coeffs.items():
            value += complex(c) * cmath.exp(2j * math.pi * (e / 8.0) * z)

        # tail starts at the first grid point >= order
        step = Fraction(self.stride, EIGHTH)
        n0 = Fraction(self.order, EIGHTH)
        k0 = math.ceil((n0 - Fraction(self.lead, EIGHTH)) / step)
        n0 = Fraction(self.lead, EIGHTH) + k0 * step

        # geometric regime begins once a*sqrt(n) <= pi*y*n  <=>  n >= (a/(pi y))^2
        n_star = Fraction(max(float(n0), (bound_exponent / (math.pi * y)) ** 2 + 1))
        n_explicit = math.ceil((n_star - n0) / step)
        if n_explicit > max_explicit_terms:
            hint = math.ceil(float(n_star)) * EIGHTH
            raise TruncationError(
                "tail majorant needs too many explicit terms at this point; "
                f"rebuild the series to order >= {hint} grid units (q^{hint // 8})"
            )
        c_iv = Interval.point(bound_constant)
        a_iv = Interval.point(bound_exponent)
        y_iv = Interval.point(y)
        two_pi_y = 2 * PI * y_iv
        tail = Interval.point(0.0)
        n = n0
        for _ in range(n_explicit):
            n_iv = Interval.from_rational(n)
            term = c_iv * (a_iv * sqrt_interval(n_iv) - two_pi_y * n_iv).exp()
            tail = tail + term
            n += step
        # geometric remainder from n onward: each term <= C e^{-pi y n},
        # ratio exp(-pi*y*step)
        n_iv = Interval.from_rational(n)
        step_iv = Interval.from_rational(step)
        ratio = (-PI * y_iv * step_iv).exp()
        if ratio.hi >= 1.0:
            raise TruncationError("geometric tail ratio >= 1; Im z too small")
        first = c_iv * (-PI * y_iv * n_iv).exp()
        tail = tail + first / (1 - ratio)
        return EvalResult(value=value, tail_bound=tail.hi)

    # -- persistence -----------------------------------------------------------

    def to_doc(self, name: str = "", weight: int | None = None) -> dict:
        doc = {
            "name": name,
            "weight": weight,
            "stride": self.stride,
            "lead": self.lead,
            "order": self.order,
            "coefficients": [
                [e, f"{c.numerator}/{c.denominator}"]
                for e, c in sorted(self.coeffs.items())
            ],
        }
        return doc

    @staticmethod
    def from_doc(doc: dict) -> "QSeries":
        coeffs = {}
        for e, s in doc["coefficients"]:
            num, den = s.split("/")
            coeffs[int(e)] = Fraction(int(num), int(den))
        return QSeries(doc["lead"], doc["order"], coeffs, stride=doc["stride"])

    def dumps(self, name: str = "", weight: int | None = None) -> str:
        return json.dumps(self.to_doc(name, weight), indent=None, sort_keys=True)

    @staticmethod
    def loads(text: str) -> "QSeries":
        return QSeries.from_doc(json.loads(text))

    def __repr__(self) -> str:
        terms = sorted(self.coeffs.items())[:6]
        body = " + ".join(f"{c}*q^({e}/8)" for e, c in terms)
        more = " + ..." if len(self.coeffs) > 6 else ""
        return f"QSeries({body}{more}; order={self.order}/8)"
