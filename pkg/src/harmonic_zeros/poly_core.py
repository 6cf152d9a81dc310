"""Polynomial types, evaluation and origin-centred regions.

Coefficient sequences are stored in ascending order: index ``j`` holds the
coefficient of ``z**j``.  A harmonic polynomial ``f = h + conj(g)`` is kept as
the pair of its analytic parts.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Union

import numpy as np

from .errors import InvalidPolynomial, InvalidTrinomial

DEFAULT_BOUNDARY_TOL = 1e-9


def _strip(coeffs: Iterable[complex]) -> tuple[complex, ...]:
    values = [complex(a) for a in coeffs]
    if not values:
        raise InvalidPolynomial("empty coefficient list")
    for a in values:
        if not (math.isfinite(a.real) and math.isfinite(a.imag)):
            raise InvalidPolynomial(f"non-finite coefficient {a!r}")
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class AnalyticPoly:
    """Complex polynomial ``a_0 + a_1 z + ... + a_n z**n``.

    Trailing zero coefficients are dropped, so the stored leading coefficient
    is nonzero except for the zero polynomial ``(0,)``, which is allowed so
    that ``g = 0`` can be expressed.
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def from_descending(cls, coeffs: Iterable[complex]) -> "AnalyticPoly":
        return cls(tuple(coeffs)[::-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> complex:
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0j,)

    def __call__(self, z):
        acc = self.coeffs[-1] * np.ones_like(z, dtype=complex) if np.ndim(z) else complex(self.coeffs[-1])
        for a in reversed(self.coeffs[:-1]):
            acc = acc * z + a
        return acc

    def value_and_derivative(self, z):
        """Horner recurrence returning ``(p(z), p'(z))`` in one pass."""
        p = self.coeffs[-1] * np.ones_like(z, dtype=complex) if np.ndim(z) else complex(self.coeffs[-1])
        dp = 0 * p
        for a in reversed(self.coeffs[:-1]):
            dp = dp * z + p
            p = p * z + a
        return p, dp

    def derivative(self) -> "AnalyticPoly":
        if self.degree == 0:
            return AnalyticPoly((0j,))
        return AnalyticPoly(tuple(j * a for j, a in enumerate(self.coeffs) if j > 0))

    def abs_sum(self) -> float:
        return float(sum(abs(a) for a in self.coeffs))


@dataclass(frozen=True)
class HarmonicPoly:
    """Harmonic polynomial ``f(z) = h(z) + conj(g(z))``.

    By default ``deg h > deg g`` and ``deg h >= 1`` are enforced; the inclusion
    bounds depend on it.  ``general=True`` admits any pair (for instance the
    anti-analytic ``conj(z)``), which the solver and winding counter accept.
    """

    h: AnalyticPoly
    g: AnalyticPoly
    general: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.h, AnalyticPoly):
            object.__setattr__(self, "h", AnalyticPoly(tuple(self.h)))
        if not isinstance(self.g, AnalyticPoly):
            object.__setattr__(self, "g", AnalyticPoly(tuple(self.g)))
        if self.general:
            if self.h.is_zero and self.g.is_zero:
                raise InvalidPolynomial("h and g are both zero")
            return
        if self.h.degree < 1:
            raise InvalidPolynomial("deg h must be at least 1")
        if not self.g.is_zero and self.g.degree >= self.h.degree:
            raise InvalidPolynomial(
                f"deg g = {self.g.degree} must be smaller than deg h = {self.h.degree}"
            )

    @property
    def n(self) -> int:
        return self.h.degree

    @property
    def m(self) -> int:
        return self.g.degree

    @property
    def is_dominant(self) -> bool:
        """True when ``deg h > deg g`` and ``deg h >= 1``."""
        return self.h.degree >= 1 and (self.g.is_zero or self.g.degree < self.h.degree)

    @property
    def max_degree(self) -> int:
        return max(self.h.degree, self.g.degree)

    def scale(self) -> float:
        """``1 + sum |coefficients|``, the yardstick for residual tolerances."""
        return 1.0 + self.h.abs_sum() + self.g.abs_sum()

    def swapped(self) -> "HarmonicPoly":
        """``g + conj(h)``, the conjugate of ``f``; it has the same zeros."""
        return HarmonicPoly(self.g, self.h, general=True)

    def __call__(self, z):
        return evaluate_harmonic(self, z)


@dataclass(frozen=True)
class HarmonicTrinomial:
    """``p_c(z) = z**n + c * conj(z)**k - 1`` with ``gcd(n, k) = 1``."""

    n: int
    k: int
    c: complex

    def __post_init__(self):
        n, k = self.n, self.k
        if int(n) != n or int(k) != k:
            raise InvalidTrinomial("n and k must be integers")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "c", complex(self.c))
        if self.n < 3:
            raise InvalidTrinomial(f"n = {self.n} must be at least 3")
        if not 1 <= self.k <= self.n - 1:
            raise InvalidTrinomial(f"k = {self.k} must satisfy 1 <= k <= n - 1")
        if math.gcd(self.n, self.k) != 1:
            raise InvalidTrinomial(f"gcd({self.n}, {self.k}) != 1")
        if self.c == 0 or not math.isfinite(abs(self.c)):
            raise InvalidTrinomial("c must be finite and nonzero")

    @property
    def is_real(self) -> bool:
        return self.c.imag == 0.0

    def to_harmonic(self) -> HarmonicPoly:
        h = [0j] * (self.n + 1)
        h[0], h[self.n] = -1.0, 1.0
        g = [0j] * (self.k + 1)
        # conj(g) must equal c * conj(z)**k
        g[self.k] = self.c.conjugate()
        return HarmonicPoly(AnalyticPoly(tuple(h)), AnalyticPoly(tuple(g)))

    def __call__(self, z):
        return z**self.n + self.c * np.conj(z) ** self.k - 1


def evaluate_harmonic(p: HarmonicPoly, z):
    """Value of ``h(z) + conj(g(z))``; works on scalars and arrays."""
    return p.h(z) + np.conj(p.g(z))


def wirtinger_derivatives(p: HarmonicPoly, z):
    """Return ``(f_z, f_zbar) = (h'(z), conj(g'(z)))``.

    The Jacobian determinant of ``f`` viewed as a map of the plane is
    ``|f_z|**2 - |f_zbar|**2``.
    """
    _, dh = p.h.value_and_derivative(z)
    _, dg = p.g.value_and_derivative(z)
    return dh, np.conj(dg)


def jacobian_det(p: HarmonicPoly, z):
    fz, fzbar = wirtinger_derivatives(p, z)
    return np.abs(fz) ** 2 - np.abs(fzbar) ** 2


# -- regions -----------------------------------------------------------------


@dataclass(frozen=True)
class Disk:
    radius: float
    closed: bool = True

    def __post_init__(self):
        if not self.radius >= 0:
            raise ValueError(f"disk radius {self.radius} must be nonnegative")


@dataclass(frozen=True)
class Annulus:
    inner: float
    outer: float
    inner_closed: bool = True
    outer_closed: bool = True

    def __post_init__(self):
        if not 0 <= self.inner <= self.outer:
            raise ValueError(f"annulus needs 0 <= inner <= outer, got {self.inner}, {self.outer}")


@dataclass(frozen=True)
class UnionRegion:
    members: tuple["Region", ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))


Region = Union[Disk, Annulus, UnionRegion]


def region_contains(r: Region, z: complex, tol: float = DEFAULT_BOUNDARY_TOL) -> bool:
    """Radial membership test with every boundary pushed outward by ``tol``.

    Open and closed boundaries are treated alike once ``tol > 0``; with
    ``tol == 0`` an open boundary excludes points lying exactly on it.
    """
    rho = abs(z)
    if isinstance(r, UnionRegion):
        return any(region_contains(m, z, tol) for m in r.members)
    if isinstance(r, Disk):
        return _below(rho, r.radius, r.closed, tol)
    if isinstance(r, Annulus):
        return _below(rho, r.outer, r.outer_closed, tol) and _above(rho, r.inner, r.inner_closed, tol)
    raise TypeError(f"not a region: {r!r}")


def _below(rho, bound, closed, tol):
    if tol > 0:
        return rho <= bound + tol
    return rho <= bound if closed else rho < bound


def _above(rho, bound, closed, tol):
    if tol > 0:
        return rho >= bound - tol
    return rho >= bound if closed else rho > bound


def outer_radius(r: Region) -> float:
    if isinstance(r, Disk):
        return r.radius
    if isinstance(r, Annulus):
        return r.outer
    return max(outer_radius(m) for m in r.members)


def clip_to_disk(r: Region, radius: float, closed: bool = True) -> Region:
    """Intersection of ``r`` with the origin-centred disk of the given radius."""
    if isinstance(r, UnionRegion):
        return UnionRegion(tuple(clip_to_disk(m, radius, closed) for m in r.members))
    if isinstance(r, Disk):
        if r.radius < radius:
            return r
        if r.radius > radius:
            return Disk(radius, closed)
        return Disk(radius, r.closed and closed)
    if r.outer < radius:
        return r
    if r.inner > radius:
        # empty intersection; keep a degenerate ring at the disk edge
        return Annulus(radius, radius, closed, closed)
    outer_closed = closed if r.outer > radius else (r.outer_closed and closed)
    return Annulus(r.inner, min(r.outer, radius), r.inner_closed, outer_closed)


# -- zero bookkeeping --------------------------------------------------------


class Orientation(str, enum.Enum):
    SENSE_PRESERVING = "sense-preserving"
    SENSE_REVERSING = "sense-reversing"
    SINGULAR = "singular"


def classify_orientation(det: float, threshold: float) -> Orientation:
    if det > threshold:
        return Orientation.SENSE_PRESERVING
    if det < -threshold:
        return Orientation.SENSE_REVERSING
    return Orientation.SINGULAR


@dataclass(frozen=True)
class RootRecord:
    z: complex
    residual: float
    orientation: Orientation
    jacobian_det: float
