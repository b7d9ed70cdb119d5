"""Submultiplicative weights, weighted norms, and the norm sandwich.

Built-in weight families: the polynomial weight (1+|n|)^s, and the
one-sided weight equal to (1+n)^s for n >= 0 and exp(|n|^beta) for n < 0
(the growth regime where the circle sets of this package admit synthesis).
Also provides the point regularizers u_n used to strip a single hull point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import ArgumentError, PrecisionError, RangeError
from .series import FourierSeries

_EXP_LIMIT = 700.0  # exp overflow threshold for float64


class Weight:
    """A weight sequence omega(n) >= 1, omega(0) = 1, submultiplicative."""

    def value(self, n: int) -> float:
        return float(self.values(np.array([n]))[0])

    def values(self, ns: np.ndarray) -> np.ndarray:
        raise NotImplementedError


@dataclass(frozen=True)
class PolynomialWeight(Weight):
    """omega(n) = (1+|n|)^s."""

    s: float

    def __post_init__(self):
        if self.s < 0:
            raise ArgumentError(f"polynomial weight needs s >= 0, got {self.s}")

    def values(self, ns: np.ndarray) -> np.ndarray:
        return (1.0 + np.abs(np.asarray(ns, dtype=float))) ** self.s


@dataclass(frozen=True)
class OneSidedWeight(Weight):
    """omega(n) = (1+n)^s for n >= 0 and exp(|n|^beta) for n < 0."""

    s: float
    beta: float

    def __post_init__(self):
        if self.s < 0:
            raise ArgumentError(f"one-sided weight needs s >= 0, got {self.s}")
        if not (0.0 < self.beta < 1.0):
            raise ArgumentError(f"beta must lie in (0, 1), got {self.beta}")

    def values(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns, dtype=float)
        expo = np.where(ns < 0, np.abs(ns) ** self.beta, 0.0)
        if np.any(expo > _EXP_LIMIT):
            worst = int(np.min(ns))
            raise RangeError(
                f"exp(|n|^beta) overflows float64 at n={worst} (beta={self.beta})"
            )
        return np.where(ns < 0, np.exp(expo), (1.0 + np.maximum(ns, 0.0)) ** self.s)


class TableWeight(Weight):
    """Explicit finite weight table, mainly for axiom experiments."""

    def __init__(self, values: dict):
        table = {int(n): float(v) for n, v in values.items()}
        for n, v in table.items():
            if v < 1.0:
                raise ArgumentError(f"weight value omega({n})={v} < 1")
        self.table = table
        self.span = max((abs(n) for n in table), default=0)

    def values(self, ns: np.ndarray) -> np.ndarray:
        out = np.empty(len(np.atleast_1d(ns)), dtype=float)
        for i, n in enumerate(np.atleast_1d(ns)):
            try:
                out[i] = self.table[int(n)]
            except KeyError:
                raise ArgumentError(f"table weight has no value at n={int(n)}")
        return out


@dataclass(frozen=True)
class AxiomReport:
    submultiplicative: bool
    regular: bool
    counterexample: Optional[tuple]


@dataclass(frozen=True)
class SandwichReport:
    lhs: float
    mid: float
    rhs: float
    holds: bool


def weighted_norm(f: FourierSeries, w: Weight) -> float:
    """The weighted coefficient norm sum |c_n| omega(n)."""
    return float(np.sum(np.abs(f.array()) * w.values(f.indices)))


def weight_axioms(w: Weight, check_range: int) -> AxiomReport:
    """Check submultiplicativity exhaustively on |n|, |m| <= range.

    Regularity (summability of log omega(n) / (1+n^2)) is decided
    analytically for the built-in families; for tables it is estimated
    from the growth of log omega on the top half of the table.
    """
    check_range = int(check_range)
    if check_range < 1:
        raise ArgumentError("range must be >= 1")
    if isinstance(w, TableWeight):
        # Pairs are checked only where n, m and n+m all stay inside the table.
        check_range = min(check_range, w.span)
        if check_range < 1:
            raise ArgumentError("table too small for a submultiplicativity check")
    ns = np.arange(-check_range, check_range + 1)
    vals = w.values(ns)

    sub = True
    witness = None
    grid = vals[:, None] * vals[None, :]
    sums = ns[:, None] + ns[None, :]
    inside = np.abs(sums) <= check_range
    lhs = vals[np.clip(sums + check_range, 0, 2 * check_range)]
    bad = inside & (lhs > grid * (1.0 + 1e-12))
    if np.any(bad):
        i, j = np.argwhere(bad)[0]
        sub = False
        witness = (int(ns[i]), int(ns[j]))

    if isinstance(w, PolynomialWeight):
        regular = True
    elif isinstance(w, OneSidedWeight):
        regular = True  # exponent beta < 1 by construction
    else:
        # Tail estimate: fit the growth alpha of log omega(n) ~ n^alpha on the
        # top half of the table; summable against 1/(1+n^2) needs alpha < 2.
        top = ns[(ns >= max(2, check_range // 2))]
        logs = np.log(np.maximum(w.values(top), 1.0))
        with np.errstate(divide="ignore"):
            mask = logs > 0
        if np.count_nonzero(mask) < 2:
            regular = True
        else:
            slope = np.polyfit(np.log(top[mask]), np.log(logs[mask]), 1)[0]
            regular = bool(slope < 2.0)
    return AxiomReport(submultiplicative=sub, regular=regular, counterexample=witness)


def norme_sandwich(f: FourierSeries, s: float) -> SandwichReport:
    """Two-sided control of ||f||_s by the floor(s)-th derivative.

    With p = floor(s) >= 1,
      ||f^(p)||_{s-p} <= ||f||_s
                      <= (2^p + (2 pi)^p/(p+1)!) ||f^(p)||_{s-p}
                         + sum_{j<p} (2 pi)^j/(j+1)! |f^(j)(1)|.
    Boundary derivatives are coefficient sums (exact for polynomials).
    """
    s = float(s)
    p = math.floor(s)
    if p < 1:
        raise ArgumentError(f"sandwich needs floor(s) >= 1, got s={s}")
    ns = np.abs(f.indices).astype(float)
    absc = np.abs(f.array())
    lhs = float(np.sum(ns**p * (1.0 + ns) ** (s - p) * absc))
    mid = float(np.sum((1.0 + ns) ** s * absc))
    rhs = (2.0**p + math.tau**p / math.factorial(p + 1)) * lhs
    for j in range(p):
        rhs += math.tau**j / math.factorial(j + 1) * abs(f.value_at_one(j))
    holds = lhs <= mid * (1.0 + 1e-12) + 1e-300 and mid <= rhs * (1.0 + 1e-12) + 1e-300
    return SandwichReport(lhs=lhs, mid=mid, rhs=rhs, holds=holds)


def _regularizer_truncation(n: int, p: int) -> int:
    r = 1.0 / (1.0 + 1.0 / n)
    M = 64
    while True:
        # binomial(M+p, p) * r^M bounds the dropped tail coefficient size
        log_tail = sum(math.log(M + k) - math.log(k) for k in range(1, p + 1)) + M * math.log(r)
        if log_tail < math.log(1e-12) - (p + 1) * math.log(2.0):
            return M
        M *= 2
        if M > 1 << 26:
            raise PrecisionError("regularizer truncation does not stabilize")


def point_regularizer(
    zeta, s: float, n: int, M: Optional[int] = None
) -> FourierSeries:
    """The ratio ((z - zeta) / (z - zeta (1+1/n)))^(floor(s)+1) as a Taylor series.

    The function is analytic in |z| < 1 + 1/n and vanishes at zeta; its
    coefficient tail decays like (1+1/n)^-k, so the truncation must make
    that tail smaller than 1e-12 (auto-sized when M is omitted).
    """
    n = int(n)
    if n < 1:
        raise ArgumentError("n must be a positive integer")
    p = math.floor(float(s))
    if p < 0:
        raise ArgumentError(f"s must be >= 0, got {s}")
    theta = zeta.radians if hasattr(zeta, "radians") else float(zeta)
    zc = np.exp(1j * theta)
    c = zc * (1.0 + 1.0 / n)

    auto_M = _regularizer_truncation(n, p)
    if M is None:
        M = auto_M
    elif M < auto_M:
        raise PrecisionError(
            f"truncation M={M} leaves a geometric tail above 1e-12 (need >= {auto_M})"
        )

    # ((z-zeta)/(z-c))^(p+1) = (-1/c)^(p+1) (z-zeta)^(p+1) sum C(k+p,p)(z/c)^k
    ks = np.arange(M + 1)
    binom = np.ones(M + 1)
    for k in range(1, M + 1):
        binom[k] = binom[k - 1] * (k + p) / k
    geom = binom * c ** (-ks.astype(float))
    numer = np.array([1.0 + 0.0j])
    for _ in range(p + 1):
        numer = np.convolve(numer, np.array([-zc, 1.0 + 0.0j]))
    coeffs = np.convolve(geom, numer)[: M + 1] * (-1.0 / c) ** (p + 1)
    return FourierSeries.one_sided(coeffs)
