"""Descartes sign counting and bracketed solves for single positive roots."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional

import numpy as np

from .errors import InvalidPolynomial, NoConvergence

BRACKET_TOL = 1e-12
RESIDUAL_RTOL = 1e-9
MAX_ITER = 200


@dataclass(frozen=True)
class RealPoly:
    """Real polynomial, dense ascending coefficients.

    Build from the sparse ``{exponent: coefficient}`` form with
    :meth:`from_terms`.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self):
        values = [float(a) for a in self.coeffs]
        if not any(values):
            raise InvalidPolynomial("polynomial has no nonzero coefficient")
        while values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def from_terms(cls, terms: Mapping[int, float]) -> "RealPoly":
        if any(e < 0 for e in terms):
            raise InvalidPolynomial("exponents must be nonnegative")
        dense = [0.0] * (max(terms) + 1)
        for e, a in terms.items():
            dense[e] += a
        return cls(tuple(dense))

    @classmethod
    def from_descending(cls, coeffs: Iterable[float]) -> "RealPoly":
        return cls(tuple(coeffs)[::-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def reflected(self) -> "RealPoly":
        """Coefficients of ``p(-x)``."""
        return RealPoly(tuple(a * (-1) ** j for j, a in enumerate(self.coeffs)))

    def __call__(self, x):
        acc = self.coeffs[-1]
        for a in reversed(self.coeffs[:-1]):
            acc = acc * x + a
        return acc

    def derivative(self, x):
        acc = 0.0
        p = self.coeffs[-1]
        for a in reversed(self.coeffs[:-1]):
            acc = acc * x + p
            p = p * x + a
        return acc


def sign_variations(coeffs: Iterable[float]) -> int:
    """Count sign changes between consecutive nonzero entries."""
    count = 0
    prev = 0
    for a in coeffs:
        if a == 0:
            continue
        s = 1 if a > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def descartes_positive_bound(p: RealPoly) -> int:
    """Upper bound on the number of positive roots (counted with multiplicity).

    The true count equals this value or is smaller by an even number.
    """
    return sign_variations(p.coeffs)


def descartes_negative_bound(p: RealPoly) -> int:
    return sign_variations(p.reflected().coeffs)


@dataclass(frozen=True)
class RootBracket:
    lo: float
    hi: float
    f_lo_sign: int
    f_hi_sign: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.f_lo_sign not in (-1, 1) or self.f_hi_sign != -self.f_lo_sign:
            raise ValueError("bracket endpoints must carry opposite nonzero signs")

    @classmethod
    def around(cls, f: Callable[[float], float], lo: float, hi: float) -> "RootBracket":
        """Evaluate ``f`` at both ends; raise ValueError without a sign change."""
        flo, fhi = f(lo), f(hi)
        return cls(lo, hi, int(np.sign(flo)), int(np.sign(fhi)))


def solve_bracketed(
    f: Callable[[float], float],
    bracket: RootBracket,
    tol: float = BRACKET_TOL,
    max_iter: int = MAX_ITER,
    df: Optional[Callable[[float], float]] = None,
) -> float:
    """Root of ``f`` inside ``bracket``, to a bracket width of ``tol``.

    Bisection, with Newton steps from the latest point when ``df`` is given.
    A Newton step is taken only if it lands strictly inside the bracket and
    is at most half the previous step; otherwise the bracket is bisected.
    Once a step drops below ``tol / 2`` the two points ``tol / 2`` either side
    of the Newton iterate are evaluated, which closes the bracket when the
    root lies between them.
    """
    lo, hi = float(bracket.lo), float(bracket.hi)
    slo = bracket.f_lo_sign
    x = 0.5 * (lo + hi)
    dx_old = hi - lo
    for _ in range(max_iter):
        fx = f(x)
        if fx == 0:
            return x
        lo, hi, slo = _shrink(lo, hi, slo, x, fx)
        if hi - lo <= tol:
            return _best_end(f, lo, hi)
        cand = None
        if df is not None:
            d = df(x)
            if d != 0 and math.isfinite(d):
                step = fx / d
                if abs(step) < 0.5 * tol:
                    # the root is within rounding of x - step
                    for probe in (x - step - 0.5 * tol, x - step + 0.5 * tol):
                        if lo < probe < hi:
                            fp = f(probe)
                            if fp == 0:
                                return probe
                            lo, hi, slo = _shrink(lo, hi, slo, probe, fp)
                    if hi - lo <= tol:
                        return _best_end(f, lo, hi)
                if lo < x - step < hi and abs(step) <= 0.5 * dx_old:
                    cand = x - step
        if cand is None:
            x = 0.5 * (lo + hi)
            dx_old = hi - lo
        else:
            x = cand
            dx_old = abs(step)
    raise NoConvergence(f"bracket still [{lo!r}, {hi!r}] after {max_iter} iterations")


def _shrink(lo, hi, slo, x, fx):
    if (fx > 0) == (slo > 0):
        return x, hi, slo
    return lo, x, slo


def _best_end(f, lo, hi):
    if lo == hi:
        return lo
    mid = 0.5 * (lo + hi)
    return min((lo, hi, mid), key=lambda t: abs(f(t)))


def dehmer_polynomial(M: float, n: int) -> RealPoly:
    """``x**(n+1) - (1 + M) x**n + M``."""
    coeffs = [0.0] * (n + 2)
    coeffs[0], coeffs[n], coeffs[n + 1] = M, -(1.0 + M), 1.0
    return RealPoly(tuple(coeffs))


def dehmer_radius(M: float, n: int, tol: float = BRACKET_TOL) -> float:
    """Positive root other than 1 of ``x**(n+1) - (1 + M) x**n + M = 0``.

    Dividing out ``x - 1`` leaves ``q(x) = x**n - M (1 + x + ... + x**(n-1))``,
    which has one sign change and hence exactly one positive root; that root
    is the one returned.  ``q(1) = 1 - n M`` decides which side of 1 it lies
    on, and at ``M = 1/n`` the two roots coincide and 1 is returned.
    """
    if not M > 0:
        raise ValueError(f"M = {M} must be positive")
    if int(n) != n or n < 1:
        raise ValueError(f"n = {n} must be a positive integer")
    n = int(n)
    q1 = 1.0 - n * M
    if abs(q1) <= 4 * np.finfo(float).eps:
        return 1.0

    def q(x):
        # x**n - M * (x**n - 1) / (x - 1) without the removable singularity
        s = 0.0
        for _ in range(n):
            s = s * x + 1.0
        return x**n - M * s

    def dq(x):
        s = 0.0
        for j in range(1, n):
            s += j * x ** (j - 1)
        return n * x ** (n - 1) - M * s

    if q1 < 0:
        lo, hi = 1.0, 2.0 + M
    else:
        lo, hi = 0.0, 1.0
    return solve_bracketed(q, RootBracket.around(q, lo, hi), tol, MAX_ITER, dq)


def unique_positive_root(p: RealPoly, hi: float, tol: float = BRACKET_TOL) -> float:
    """The positive root of ``p`` when its coefficients change sign once.

    ``p(0) < 0 < p(hi)`` must hold after powers of ``x`` dividing ``p`` are
    removed, i.e. the lowest nonzero coefficient is negative and the leading
    one positive.
    """
    coeffs = list(p.coeffs)
    while coeffs[0] == 0:
        coeffs.pop(0)
    q = RealPoly(tuple(coeffs))
    if q.degree == 0:
        raise InvalidPolynomial("no positive root: polynomial is a monomial")
    return solve_bracketed(q, RootBracket.around(q, 0.0, hi), tol, MAX_ITER, q.derivative)
