"""Truncated two-sided Fourier series: the carrier for functions on the circle.

Coefficients are stored densely on [-M, M]; absent indices are zero.
Products expand the truncation (coefficient convolution) and then prune
magnitudes below 1e-15 of the peak, which keeps truncation growth bounded
without touching any tolerance used elsewhere (all are >= 1e-12).
"""

from __future__ import annotations

import math
from typing import Iterable, Union

import numpy as np

from .errors import ArgumentError

PRUNE_REL = 1e-15

_EVAL_CHUNK = 1 << 22  # complex entries per evaluation block


class FourierSeries:
    """A trigonometric polynomial sum c_n e^{int}, |n| <= M."""

    __slots__ = ("_c", "_M")

    def __init__(self, coeffs: np.ndarray, M: int = None):
        c = np.asarray(coeffs, dtype=np.complex128)
        if c.ndim != 1 or c.size % 2 != 1:
            raise ArgumentError("coefficient array must be 1-d with odd length 2M+1")
        if M is None:
            M = (c.size - 1) // 2
        if c.size != 2 * M + 1:
            raise ArgumentError(f"array length {c.size} does not match M={M}")
        self._c = c.copy()
        self._M = int(M)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "FourierSeries":
        return cls(np.zeros(1, dtype=np.complex128), 0)

    @classmethod
    def basis(cls, n: int, coeff: complex = 1.0) -> "FourierSeries":
        """The single term coeff * e^{int}."""
        M = abs(int(n))
        c = np.zeros(2 * M + 1, dtype=np.complex128)
        c[n + M] = coeff
        return cls(c, M)

    @classmethod
    def from_pairs(cls, pairs: Iterable, M: int = None) -> "FourierSeries":
        items = [(int(n), complex(v)) for n, v in (pairs.items() if isinstance(pairs, dict) else pairs)]
        if M is None:
            M = max((abs(n) for n, _ in items), default=0)
        c = np.zeros(2 * M + 1, dtype=np.complex128)
        for n, v in items:
            if abs(n) > M:
                raise ArgumentError(f"index {n} outside truncation {M}")
            c[n + M] += v
        return cls(c, M)

    @classmethod
    def one_sided(cls, coeffs: np.ndarray) -> "FourierSeries":
        """Series with Taylor coefficients c_0..c_M and no negative part."""
        c = np.asarray(coeffs, dtype=np.complex128)
        M = c.size - 1
        full = np.zeros(2 * M + 1, dtype=np.complex128)
        full[M:] = c
        return cls(full, M)

    # -- basic access -------------------------------------------------

    @property
    def M(self) -> int:
        return self._M

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self._M, self._M + 1)

    def array(self) -> np.ndarray:
        """Copy of the dense coefficient array, index n at position n+M."""
        return self._c.copy()

    def coeff(self, n: int) -> complex:
        if abs(n) > self._M:
            return 0.0 + 0.0j
        return complex(self._c[n + self._M])

    def __repr__(self):
        nz = int(np.count_nonzero(self._c))
        return f"FourierSeries(M={self._M}, nonzero={nz})"

    # -- algebra ------------------------------------------------------

    def _aligned(self, other: "FourierSeries"):
        M = max(self._M, other._M)
        a = np.zeros(2 * M + 1, dtype=np.complex128)
        b = np.zeros(2 * M + 1, dtype=np.complex128)
        a[M - self._M : M + self._M + 1] = self._c
        b[M - other._M : M + other._M + 1] = other._c
        return a, b, M

    def __add__(self, other: "FourierSeries") -> "FourierSeries":
        a, b, M = self._aligned(other)
        return FourierSeries(a + b, M)

    def __sub__(self, other: "FourierSeries") -> "FourierSeries":
        a, b, M = self._aligned(other)
        return FourierSeries(a - b, M)

    def __mul__(self, other: Union["FourierSeries", complex, float]) -> "FourierSeries":
        if isinstance(other, FourierSeries):
            prod = np.convolve(self._c, other._c)
            return FourierSeries(prod, self._M + other._M).prune()
        return FourierSeries(self._c * complex(other), self._M)

    __rmul__ = __mul__

    def __neg__(self) -> "FourierSeries":
        return FourierSeries(-self._c, self._M)

    def prune(self, rel: float = PRUNE_REL) -> "FourierSeries":
        """Zero out coefficients below rel * max and shrink the window."""
        peak = np.max(np.abs(self._c)) if self._c.size else 0.0
        if peak == 0.0:
            return FourierSeries.zero()
        c = np.where(np.abs(self._c) < rel * peak, 0.0, self._c)
        nz = np.nonzero(c)[0]
        if nz.size == 0:
            return FourierSeries.zero()
        reach = max(abs(int(nz[0]) - self._M), abs(int(nz[-1]) - self._M))
        out = np.zeros(2 * reach + 1, dtype=np.complex128)
        out[:] = c[self._M - reach : self._M + reach + 1]
        return FourierSeries(out, reach)

    # -- analysis -----------------------------------------------------

    def derivative(self, j: int = 1) -> "FourierSeries":
        """j-th derivative in the angle variable: c_n -> (i n)^j c_n."""
        j = int(j)
        if j < 0:
            raise ArgumentError("derivative order must be nonnegative")
        ns = self.indices.astype(np.complex128)
        return FourierSeries(self._c * (1j * ns) ** j, self._M)

    def evaluate(self, t) -> np.ndarray:
        """Pointwise values sum c_n e^{int} at angles t (scalar or array)."""
        ts = np.atleast_1d(np.asarray(t, dtype=float))
        ns = self.indices
        out = np.empty(ts.size, dtype=np.complex128)
        rows = max(1, _EVAL_CHUNK // (2 * self._M + 1))
        for i in range(0, ts.size, rows):
            block = ts[i : i + rows]
            out[i : i + rows] = np.exp(1j * np.outer(block, ns)) @ self._c
        if np.isscalar(t) or np.asarray(t).ndim == 0:
            return complex(out[0])
        return out

    def value_at_one(self, j: int = 0) -> complex:
        """The j-th angular derivative evaluated at z = 1 (angle 0)."""
        ns = self.indices.astype(np.complex128)
        return complex(np.sum(self._c * (1j * ns) ** j))

    def wiener_norm(self) -> float:
        """Unweighted coefficient-sum norm (the s = 0 algebra norm)."""
        return float(np.sum(np.abs(self._c)))

    # -- serialization ------------------------------------------------

    def to_json_obj(self) -> dict:
        coeffs = []
        for n in range(-self._M, self._M + 1):
            v = self._c[n + self._M]
            if v != 0:
                coeffs.append([n, float(v.real), float(v.imag)])
        return {"M": self._M, "coeffs": coeffs}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "FourierSeries":
        try:
            M = int(obj["M"])
            pairs = [(int(n), complex(re, im)) for n, re, im in obj.get("coeffs", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise ArgumentError(f"malformed series object: {exc}") from exc
        return cls.from_pairs(pairs, M=M)
