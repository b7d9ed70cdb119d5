"""Perfect symmetric (Cantor-type) subsets of the unit circle.

A set with ratio xi in (0, 1/2) consists of the points
exp(2*pi*i*(1-xi) * sum eps_n xi^(n-1)) over binary digit sequences.
This module builds the level covers (2^n closed arcs of generation n),
the complementary gap structure, distance enclosures, the power-growth
exponent b(xi), and the discretized Cantor-Lebesgue measure.

Angles are kept as exact rationals (fractions of a full turn) whenever
xi = 1/q with integer q, so endpoint membership and nesting tests do not
drift; they fall back to floats for irrational ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .errors import ArgumentError, ResourceError

TAU = math.tau

#: 2**MAX_LEVEL arcs is the hard size budget for covers and measures.
MAX_LEVEL = 20

TurnValue = Union[Fraction, float]


@dataclass(frozen=True)
class Angle:
    """A point on the circle stored as a fraction of a full turn in [0, 1).

    `turns` is a Fraction for rational-ratio sets and a float otherwise;
    `radians` is the canonical value in [0, 2*pi).
    """

    turns: TurnValue

    def __post_init__(self):
        t = self.turns % 1
        object.__setattr__(self, "turns", t)

    @classmethod
    def from_radians(cls, value: float) -> "Angle":
        return cls(value / TAU)

    @property
    def radians(self) -> float:
        return float(self.turns) * TAU


@dataclass(frozen=True)
class Arc:
    """A closed arc [start, start + length], never stored wrapped past 2*pi."""

    start_turns: TurnValue
    length_turns: TurnValue

    @property
    def start(self) -> Angle:
        return Angle(self.start_turns)

    @property
    def length(self) -> float:
        return float(self.length_turns) * TAU

    @property
    def end_turns(self) -> TurnValue:
        return self.start_turns + self.length_turns

    def contains_turns(self, x: TurnValue) -> bool:
        return self.start_turns <= x <= self.end_turns


class PerfectSymmetricSet:
    """The perfect symmetric set with dissection ratio xi in (0, 1/2).

    When xi is given as a Fraction 1/q (or via `from_q`), all arc
    endpoints are represented exactly.
    """

    def __init__(self, xi: Union[float, Fraction]):
        if isinstance(xi, Fraction):
            exact: Optional[Fraction] = xi
            xi_f = float(xi)
        else:
            exact = None
            xi_f = float(xi)
        if not (0.0 < xi_f < 0.5):
            raise ArgumentError(f"xi must lie in (0, 1/2), got {xi_f}")
        self.xi = xi_f
        self.xi_exact = exact
        self.q: Optional[int] = None
        if exact is not None and exact.numerator == 1:
            q = exact.denominator
            if q < 3:
                raise ArgumentError(f"q must be >= 3, got {q}")
            self.q = q

    @classmethod
    def from_q(cls, q: int) -> "PerfectSymmetricSet":
        if q != int(q) or q < 3:
            raise ArgumentError(f"q must be an integer >= 3, got {q}")
        return cls(Fraction(1, int(q)))

    @property
    def xi_value(self) -> TurnValue:
        """xi as Fraction when exact, float otherwise."""
        return self.xi_exact if self.xi_exact is not None else self.xi

    def __repr__(self):
        if self.q is not None:
            return f"PerfectSymmetricSet(1/{self.q})"
        return f"PerfectSymmetricSet({self.xi})"


@dataclass(frozen=True)
class CantorLevel:
    """The level-n cover: 2^n disjoint closed arcs, nested in level n-1."""

    level: int
    arcs: tuple

    def endpoint_turns(self) -> list:
        """All 2^(n+1) arc endpoints (with duplicates removed), sorted."""
        pts = []
        for a in self.arcs:
            pts.append(a.start_turns)
            pts.append(a.end_turns % 1)
        return sorted(set(pts))

    def endpoint_radians(self) -> np.ndarray:
        return np.array([float(t) for t in self.endpoint_turns()]) * TAU


@dataclass(frozen=True)
class DiscreteMeasure:
    """Atomic surrogate for the Cantor-Lebesgue measure, total mass 2*pi."""

    angles: np.ndarray
    masses: np.ndarray
    total_mass: float
    level: Optional[int] = None

    @property
    def atoms(self) -> list:
        return [(Angle.from_radians(a), m) for a, m in zip(self.angles, self.masses)]


@dataclass(frozen=True)
class Gap:
    """A contiguous arc of the complement, tagged with its creation stage."""

    start_turns: TurnValue
    length_turns: TurnValue
    stage: int

    @property
    def length(self) -> float:
        return float(self.length_turns) * TAU


@dataclass(frozen=True)
class GapSeriesReport:
    converges: bool
    threshold: float
    closed_form_sum: Optional[float]


@dataclass(frozen=True)
class IntegralReport:
    converges: bool
    threshold: float
    partial_sums: Optional[tuple]


@dataclass(frozen=True)
class DistanceEnclosure:
    lower: float
    upper: float


def _check_level(n: int, minimum: int = 0) -> int:
    n = int(n)
    if n < minimum:
        raise ArgumentError(f"level must be >= {minimum}, got {n}")
    if n > MAX_LEVEL:
        raise ResourceError(f"level {n} exceeds the budget of {MAX_LEVEL} (2^n arcs)")
    return n


def level_cover(s: PerfectSymmetricSet, n: int) -> CantorLevel:
    """All 2^n arcs of generation n, sorted by start angle.

    The arc indexed by digits (eps_1, ..., eps_n) starts at the turn
    (1-xi) * sum eps_k xi^(k-1) and has length xi^n turns; both endpoints
    belong to the set.
    """
    n = _check_level(n)
    xi = s.xi_value
    one = Fraction(1) if s.xi_exact is not None else 1.0
    starts: list = [xi * 0]
    step = one - xi
    for _ in range(n):
        starts = [t + eps * step for t in starts for eps in (0, 1)]
        step = step * xi
    length = xi**n if n > 0 else one
    arcs = tuple(Arc(t, length) for t in sorted(starts))
    return CantorLevel(level=n, arcs=arcs)


def critical_exponent(s: PerfectSymmetricSet) -> float:
    """The power-growth exponent b(xi) = (log(1/xi) - log 2) / (2 log(1/xi) - log 2).

    Strictly decreasing in xi, with values in [0, 1/2) on (0, 1/2].
    """
    lg = math.log(1.0 / s.xi)
    return (lg - math.log(2.0)) / (2.0 * lg - math.log(2.0))


def gap_analysis(s: PerfectSymmetricSet, gamma: float) -> GapSeriesReport:
    """Convergence of the gap-length series sum |L|^gamma.

    Stage k contributes 2^(k-1) gaps of length 2*pi*xi^(k-1)*(1-2*xi), so
    the series is geometric with ratio 2*xi^gamma and converges exactly
    when gamma > log2 / log(1/xi).
    """
    gamma = float(gamma)
    threshold = math.log(2.0) / math.log(1.0 / s.xi)
    converges = gamma > threshold
    total = None
    if converges:
        ratio = 2.0 * s.xi**gamma
        lead = (TAU * (1.0 - 2.0 * s.xi)) ** gamma / (2.0 * s.xi**gamma)
        total = lead * ratio / (1.0 - ratio)
    return GapSeriesReport(converges=converges, threshold=threshold, closed_form_sum=total)


def integral_criterion(s: PerfectSymmetricSet, delta: float, probe_levels: int = 14) -> IntegralReport:
    """Convergence of the boundary integral of d(., E)^(-delta).

    Converges exactly when delta < 1 - log2/log(1/xi). The partial sums
    are the exact integrals over the gaps created up to each stage (the
    distance from a gap point to the set is the distance to the nearer
    gap endpoint, so each gap of length L contributes
    2*(L/2)^(1-delta)/(1-delta) when delta < 1).
    """
    delta = float(delta)
    threshold = 1.0 - math.log(2.0) / math.log(1.0 / s.xi)
    converges = delta < threshold
    partial: Optional[tuple] = None
    if delta < 1.0:
        sums = []
        acc = 0.0
        for k in range(1, probe_levels + 1):
            ell = TAU * s.xi ** (k - 1) * (1.0 - 2.0 * s.xi)
            acc += 2 ** (k - 1) * 2.0 * (ell / 2.0) ** (1.0 - delta) / (1.0 - delta)
            sums.append(acc)
        partial = tuple(sums)
    return IntegralReport(converges=converges, threshold=threshold, partial_sums=partial)


def _cover_float_arrays(s: PerfectSymmetricSet, n: int):
    cover = level_cover(s, n)
    starts = np.array([float(a.start_turns) for a in cover.arcs])
    ends = np.array([float(a.end_turns) for a in cover.arcs])
    return starts, ends


def distance_profile(
    s: PerfectSymmetricSet, t: np.ndarray, n: int, chordal: bool = False
) -> tuple:
    """Vectorized distance enclosure; see `distance_to_set`."""
    n = _check_level(n, minimum=1)
    starts, ends = _cover_float_arrays(s, n)
    x = np.mod(np.asarray(t, dtype=float) / TAU, 1.0)

    # The cover tiles [0, 1] with arcs and gaps; ends[-1] == 1 always,
    # so every x lands either inside arc (i-1) or in the gap before arc i.
    idx = np.searchsorted(starts, x, side="right")
    prev = np.clip(idx - 1, 0, len(starts) - 1)
    inside = (idx > 0) & (x <= ends[prev])

    lower = np.where(
        inside,
        0.0,
        np.minimum(
            np.where(idx > 0, x - ends[prev], np.inf),
            np.where(idx < len(starts), starts[np.clip(idx, 0, len(starts) - 1)] - x, np.inf),
        ),
    )
    # Inside an arc the nearest set points known exactly are its endpoints.
    upper = np.where(
        inside,
        np.minimum(x - starts[prev], ends[prev] - x),
        lower,
    )
    lower = lower * TAU
    upper = upper * TAU
    if chordal:
        lower = 2.0 * np.sin(np.minimum(lower, math.pi) / 2.0)
        upper = 2.0 * np.sin(np.minimum(upper, math.pi) / 2.0)
    return lower, upper


def distance_to_set(
    s: PerfectSymmetricSet, t: float, n: int, chordal: bool = False
) -> DistanceEnclosure:
    """Enclosure of the arc-length distance from angle t to the set.

    The lower bound is the distance to the level-n cover (which contains
    the set); the upper bound is the distance to the cover's endpoints
    (which lie in the set). The width is at most one arc length 2*pi*xi^n.
    With `chordal=True` both bounds are mapped to chord length 2*sin(d/2).
    """
    lo, up = distance_profile(s, np.array([float(t)]), n, chordal=chordal)
    return DistanceEnclosure(lower=float(lo[0]), upper=float(up[0]))


def cantor_measure(s: PerfectSymmetricSet, m: int, placement: str = "left") -> DiscreteMeasure:
    """Level-m discretization of the Cantor-Lebesgue measure, total mass 2*pi.

    One atom of mass 2*pi*2^-m per level-m arc, placed at the arc's left
    endpoint (or midpoint with placement="midpoint"). Both placements
    converge weakly to the continuous measure as m grows.
    """
    m = _check_level(m)
    if placement not in ("left", "midpoint"):
        raise ArgumentError(f"placement must be 'left' or 'midpoint', got {placement!r}")
    cover = level_cover(s, m)
    if placement == "left":
        turns = [a.start_turns for a in cover.arcs]
    else:
        turns = [a.start_turns + a.length_turns / 2 for a in cover.arcs]
    angles = np.array([float(t) for t in turns]) * TAU
    masses = np.full(len(angles), TAU / 2**m)
    return DiscreteMeasure(angles=angles, masses=masses, total_mass=TAU, level=m)


def complementary_gaps(s: PerfectSymmetricSet, n: int) -> list:
    """The gaps of the level-n cover, sorted, tagged with creation stage k.

    Stage-k gaps have length 2*pi*xi^(k-1)*(1-2*xi) turns-equivalent;
    exactly 2^(k-1) of them exist for each 1 <= k <= n.
    """
    n = _check_level(n, minimum=1)
    cover = level_cover(s, n)
    xi = s.xi_value
    gaps = []
    for a, b in zip(cover.arcs, cover.arcs[1:]):
        start = a.end_turns
        length = b.start_turns - start
        gaps.append((start, length))
    out = []
    for start, length in gaps:
        stage = _identify_stage(s, length, n)
        out.append(Gap(start_turns=start, length_turns=length, stage=stage))
    return out


def _identify_stage(s: PerfectSymmetricSet, length_turns: TurnValue, n: int) -> int:
    xi = s.xi_value
    if s.xi_exact is not None:
        expected = 1 - 2 * xi
        for k in range(1, n + 1):
            if length_turns == expected:
                return k
            expected = expected * xi
        raise ArgumentError(f"gap length {length_turns} matches no stage <= {n}")
    ratio = float(length_turns) / (1.0 - 2.0 * s.xi)
    k = 1 + round(math.log(ratio) / math.log(s.xi))
    expected = s.xi ** (k - 1) * (1.0 - 2.0 * s.xi)
    if not (1 <= k <= n) or abs(float(length_turns) - expected) > 1e-9 * expected:
        raise ArgumentError(f"gap length {length_turns} matches no stage <= {n}")
    return int(k)


def gap_census(s: PerfectSymmetricSet, n: int) -> list:
    """Aggregate the level-n gaps by stage: [(stage, count, length_radians)]."""
    gaps = complementary_gaps(s, n)
    census = {}
    for g in gaps:
        key = g.stage
        if key in census:
            count, length = census[key]
            census[key] = (count + 1, length)
        else:
            census[key] = (1, g.length)
    return [(k, c, ln) for k, (c, ln) in sorted(census.items())]
