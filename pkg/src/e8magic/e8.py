"""The E8 lattice: shell enumeration, Poisson summation, and the density bound.

Lambda_8 = { x in Z^8 union (Z+1/2)^8 : sum x_i even } is handled in
half-unit coordinates (stored integers equal to twice the coordinates), so
both cosets become parity classes of an integer search.  Shell counts feed a
Poisson-summation self-check with Gaussians and the final Cohn-Elkies
arithmetic: the magic function gives f(0)/fhat(0) = 2^4, hence the packing
density bound 2^4 * Vol B_8(0, 1/2) = pi^4/384.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .radial import eval_g

__all__ = [
    "LatticePoint",
    "ShellTable",
    "PoissonReport",
    "DensityBoundReport",
    "enumerate_shells",
    "shell_vectors",
    "poisson_check",
    "magic_poisson_check",
    "density_bound",
]


@dataclass(frozen=True)
class LatticePoint:
    """A point of Lambda_8 in half-unit coordinates (coordinate = stored/2)."""

    coords: tuple[int, int, int, int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.coords) != 8:
            raise ValueError("a lattice point has eight coordinates")
        parities = {c & 1 for c in self.coords}
        if len(parities) != 1:
            raise ValueError("coordinates must be all integers or all half-integers")
        if sum(self.coords) % 4 != 0:
            raise ValueError("coordinate sum must be an even integer")

    @property
    def norm2(self) -> int:
        """Squared Euclidean norm (always an even integer)."""
        q, rem = divmod(sum(c * c for c in self.coords), 4)
        assert rem == 0
        return q

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(tuple(-c for c in self.coords))


def is_lattice_point(coords: tuple[int, ...]) -> bool:
    """Membership test in half-unit coordinates, straight off the congruences."""
    if len(coords) != 8:
        return False
    if len({c & 1 for c in coords}) != 1:
        return False
    return sum(coords) % 4 == 0


@dataclass(frozen=True)
class ShellTable:
    """Vector counts N(2n) for the shells of Lambda_8 up to max_norm."""

    max_norm: int
    entries: dict[int, int] = field(default_factory=dict)

    def count(self, norm2: int) -> int:
        if norm2 > self.max_norm:
            raise KeyError(f"shell {norm2} beyond enumerated range {self.max_norm}")
        return self.entries.get(norm2, 0)


@lru_cache(maxsize=None)
def _suffix_counts(index: int, budget: int, parity_sum: int, odd: bool) -> dict[int, int]:
    """Map exact stored-norm -> count over coordinates index..7.

    Recursive coordinate search with partial-norm pruning: coordinate values
    are stored half-units of one parity, |c| <= sqrt(budget).
    """
    if index == 8:
        return {0: 1} if parity_sum % 4 == 0 else {}
    out: dict[int, int] = {}
    start = 1 if odd else 0
    c = start
    while c * c <= budget:
        for value in ((c,) if c == 0 else (c, -c)):
            sub = _suffix_counts(index + 1, budget - c * c, (parity_sum + value) % 4, odd)
            for norm, cnt in sub.items():
                key = norm + c * c
                out[key] = out.get(key, 0) + cnt
        c += 2
    return out


def enumerate_shells(max_norm: int) -> ShellTable:
    """Exact N(2n) for all even 2n <= max_norm, over both cosets."""
    if max_norm < 2 or max_norm % 2 != 0:
        raise ValueError("max_norm must be an even integer >= 2")
    budget = 4 * max_norm  # stored squares are 4x the true norm
    entries: dict[int, int] = {}
    for odd in (False, True):
        for stored_norm, cnt in _suffix_counts(0, budget, 0, odd).items():
            norm2, rem = divmod(stored_norm, 4)
            assert rem == 0
            if norm2 <= max_norm:
                entries[norm2] = entries.get(norm2, 0) + cnt
    return ShellTable(max_norm=max_norm, entries=dict(sorted(entries.items())))


def shell_vectors(norm2: int) -> list[LatticePoint]:
    """All lattice vectors of a given squared norm (intended for small shells)."""
    if norm2 < 0 or norm2 % 2 != 0:
        raise ValueError("squared norms in Lambda_8 are even and nonnegative")
    target = 4 * norm2
    results: list[LatticePoint] = []

    def rec(prefix: list[int], budget: int, odd: bool) -> None:
        if len(prefix) == 8:
            if budget == 0 and sum(prefix) % 4 == 0:
                results.append(LatticePoint(tuple(prefix)))
            return
        start = 1 if odd else 0
        c = start
        while c * c <= budget:
            for value in ((c,) if c == 0 else (c, -c)):
                prefix.append(value)
                rec(prefix, budget - c * c, odd)
                prefix.pop()
            c += 2

    for odd in (False, True):
        rec([], target, odd)
    return results


# ---------------------------------------------------------------------------
# Poisson summation

@dataclass(frozen=True)
class PoissonReport:
    alpha: float
    max_norm: int
    lhs: float
    rhs: float
    discrepancy: float
    tail_bound: float
    scaled_lhs: float
    scaled_rhs: float
    scaled_discrepancy: float

    @property
    def passed(self) -> bool:
        return self.discrepancy <= self.tail_bound and self.scaled_discrepancy <= self.tail_bound


def _shell_sum(table: ShellTable, decay: float) -> float:
    """sum_n N(2n) e^{-decay * n} including the origin."""
    return sum(cnt * math.exp(-decay * (norm2 // 2)) for norm2, cnt in table.entries.items())


def _gaussian_tail(decay: float, n_max: int) -> float:
    """Bound on sum_{n > n_max} N(2n) e^{-decay n}, using N(2n) <= 289 n^3."""
    x = math.exp(-decay)
    first = 289.0 * (n_max + 1) ** 3 * x ** (n_max + 1)
    ratio = (1.0 + 1.0 / (n_max + 1)) ** 3 * x
    if ratio >= 1.0:
        raise ValueError("increase max_norm: Gaussian tail does not contract")
    return first / (1.0 - ratio)


def poisson_check(alpha: float, max_norm: int = 40) -> PoissonReport:
    """Verify Poisson summation over Lambda_8 with f(x) = e^{-pi alpha |x|^2}.

    Self-dual identity: sum_L f = alpha^{-4} sum_L e^{-pi |x|^2 / alpha};
    scaled identity: sum over (1/sqrt2) Lambda_8 of f equals 2^4 times the sum
    over sqrt2 Lambda_8 of fhat.  Reported tails bound the truncation of both
    sides at max_norm.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    table = enumerate_shells(max_norm)
    n_max = max_norm // 2
    lhs = _shell_sum(table, 2 * math.pi * alpha)
    rhs = alpha**-4 * _shell_sum(table, 2 * math.pi / alpha)
    tail = (
        _gaussian_tail(2 * math.pi * alpha, n_max)
        + alpha**-4 * _gaussian_tail(2 * math.pi / alpha, n_max)
    )
    scaled_lhs = _shell_sum(table, math.pi * alpha)
    scaled_rhs = 16.0 * alpha**-4 * _shell_sum(table, 4 * math.pi / alpha)
    tail += (
        _gaussian_tail(math.pi * alpha, n_max)
        + 16.0 * alpha**-4 * _gaussian_tail(4 * math.pi / alpha, n_max)
    )
    return PoissonReport(
        alpha=alpha,
        max_norm=max_norm,
        lhs=lhs,
        rhs=rhs,
        discrepancy=abs(lhs - rhs),
        tail_bound=tail,
        scaled_lhs=scaled_lhs,
        scaled_rhs=scaled_rhs,
        scaled_discrepancy=abs(scaled_lhs - scaled_rhs),
    )


def magic_poisson_check(max_norm: int = 16) -> tuple[float, float, float]:
    """Both sides of the scaled Poisson identity with f(x) = g(sqrt2 x).

    The left side sums g over Lambda_8 (all nonzero shells are zeros of g) and
    the right side sums ghat; both should equal 1 within the accumulated
    evaluation errors.  Returns (lhs, rhs, err_sum).
    """
    table = enumerate_shells(max_norm)
    lhs = rhs = err = 0.0
    for norm2, cnt in table.entries.items():
        r = math.sqrt(norm2)
        gv = eval_g(r, "g")
        hv = eval_g(r, "ghat")
        lhs += cnt * gv.value
        rhs += cnt * hv.value
        err += cnt * (gv.err + hv.err)
    return lhs, rhs, err


# ---------------------------------------------------------------------------
# the density bound

@dataclass(frozen=True)
class DensityBoundReport:
    ratio: float  # f(0) / fhat(0)
    ratio_err: float
    ball_volume: float  # Vol B_8(0, 1/2) = pi^4 / 6144
    bound: float  # ratio * ball_volume
    reference: float  # pi^4 / 384
    err: float

    @property
    def matches_reference(self) -> bool:
        return abs(self.bound - self.reference) <= self.err


def density_bound() -> DensityBoundReport:
    """The Cohn-Elkies bound made tight by the magic function.

    With f(x) = g(sqrt2 x) the scaling law gives fhat(y) = 2^{-4} ghat(y/sqrt2),
    so f(0)/fhat(0) = 2^4 g(0)/ghat(0); times Vol B_8(0, 1/2) = pi^4/6144 this
    is pi^4/384.
    """
    g0 = eval_g(0.0, "g")
    h0 = eval_g(0.0, "ghat")
    ratio = 16.0 * g0.value / h0.value
    ratio_err = 16.0 * (g0.err + h0.err) * (1.0 + abs(g0.value)) / abs(h0.value)
    ball = math.pi**4 / 6144.0
    return DensityBoundReport(
        ratio=ratio,
        ratio_err=ratio_err,
        ball_volume=ball,
        bound=ratio * ball,
        reference=math.pi**4 / 384.0,
        err=ratio_err * ball + 1e-15,
    )
