"""Numerical zeros of harmonic polynomials and winding numbers of their image curves.

Zeros are found by seeding a uniform grid over the square around the
inclusion disk and running damped Newton on ``f`` viewed as a map of the
real plane.  The real Jacobian of ``f = h + conj(g)`` at ``z`` is

    [[Re(fz + fzb), Im(fzb - fz)],
     [Im(fz + fzb), Re(fz - fzb)]]

with ``fz = h'(z)`` and ``fzb = conj(g'(z))``; its determinant is
``|fz|**2 - |fzb|**2``.  Solving it by Cramer's rule gives the complex step
``dz = (conj(f) fzb - f conj(fz)) / det``, which is what the code uses.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from numba import njit, prange

from .bounds import search_disk
from .errors import (
    CapacityExceeded,
    CountMismatch,
    NonIntegerWinding,
    SingularZeroPresent,
    SolverError,
    ZeroOnContour,
)
from .poly_core import (
    HarmonicPoly,
    Orientation,
    RootRecord,
    classify_orientation,
    evaluate_harmonic,
)

SINGULAR_JACOBIAN = 1e-14
DAMPING_FLOOR = 2.0**-20
POLISH_STEPS = 3
STAGNATION_WINDOW = 10
CONTOUR_MIN_RTOL = 1e-6
WINDING_INTEGER_TOL = 1e-6
MAX_CONTOUR_SAMPLES = 1 << 22


@dataclass(frozen=True)
class SolverConfig:
    grid_density: float = 40.0
    newton_tol: float = 1e-10
    max_newton_iters: int = 60
    dedup_radius: float = 1e-6
    search_radius_factor: float = 1.1
    singular_threshold: float = 1e-8

    def __post_init__(self):
        for name in ("grid_density", "newton_tol", "max_newton_iters", "dedup_radius", "singular_threshold"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not self.search_radius_factor >= 1:
            raise ValueError("search_radius_factor must be at least 1")


class FailureReason(str, enum.Enum):
    DIVERGED = "diverged"
    STALLED = "stalled"
    SINGULAR_JACOBIAN = "singular-jacobian"


class NewtonFailure(SolverError):
    def __init__(self, reason: FailureReason, z: complex):
        super().__init__(f"Newton {reason.value} at {z!r}")
        self.reason = reason
        self.z = z


@dataclass(frozen=True)
class WindingResult:
    winding: int
    min_modulus_on_contour: float
    samples_used: int


@dataclass(frozen=True)
class ConsistencyReport:
    winding: WindingResult
    radius: float
    sense_preserving: int
    sense_reversing: int

    @property
    def signed_count(self) -> int:
        return self.sense_preserving - self.sense_reversing


def search_radius(p: HarmonicPoly, cfg: SolverConfig) -> float:
    return cfg.search_radius_factor * search_disk(p).intermediate["R"]


# status codes for the batch iteration
_RUNNING, _CONVERGED, _DIVERGED, _STALLED, _SINGULAR = range(5)
_REASONS = {
    _DIVERGED: FailureReason.DIVERGED,
    _STALLED: FailureReason.STALLED,
    _SINGULAR: FailureReason.SINGULAR_JACOBIAN,
}


@njit(cache=True)
def _horner(c, z):
    p = c[c.size - 1]
    dp = 0j
    for i in range(c.size - 2, -1, -1):
        dp = dp * z + p
        p = p * z + c[i]
    return p, dp


@njit(cache=True)
def _value(hc, gc, z):
    hv = hc[hc.size - 1]
    for i in range(hc.size - 2, -1, -1):
        hv = hv * z + hc[i]
    gv = gc[gc.size - 1]
    for i in range(gc.size - 2, -1, -1):
        gv = gv * z + gc[i]
    return hv + np.conj(gv)


@njit(cache=True)
def _full(hc, gc, z):
    """``f(z)``, ``h'(z)`` and ``g'(z)`` from one Horner pass each."""
    hv, dh = _horner(hc, z)
    gv, dg = _horner(gc, z)
    return hv + np.conj(gv), dh, dg


@njit(cache=True)
def _abs2(w):
    return w.real * w.real + w.imag * w.imag


@njit(cache=True)
def _step(f, dh, dg):
    fzb = np.conj(dg)
    det = _abs2(dh) - _abs2(fzb)
    if det == 0.0:
        return 0j, det, False
    step = (np.conj(f) * fzb - f * np.conj(dh)) / det
    return step, det, np.isfinite(step.real) and np.isfinite(step.imag)


@njit(cache=True)
def _refine_one(hc, gc, z, target, max_iters, limit, polish):
    # residuals are compared squared throughout
    target2, limit2 = target * target, limit * limit
    f, dh, dg = _full(hc, gc, z)
    r2 = _abs2(f)
    status = _RUNNING
    ref2 = r2
    for it in range(max_iters):
        if r2 <= target2:
            status = _CONVERGED
            break
        if it % STAGNATION_WINDOW == 0:
            if it and r2 > 0.25 * ref2:
                status = _STALLED
                break
            ref2 = r2
        step, det, ok = _step(f, dh, dg)
        if not ok:
            status = _SINGULAR
            break
        # the full step usually succeeds, so evaluate derivatives with it;
        # damped trials get the value alone
        zt = z + step
        ft, dht, dgt = _full(hc, gc, zt)
        phi = _abs2(ft)
        if phi < r2:
            z, f, dh, dg, r2 = zt, ft, dht, dgt, phi
        else:
            t = 0.5
            accepted = False
            while t >= DAMPING_FLOOR:
                zt = z + t * step
                if _abs2(_value(hc, gc, zt)) < r2:
                    accepted = True
                    break
                t *= 0.5
            if not accepted:
                # no descent down to the floor: a nonzero local minimum of |f|
                status = _SINGULAR if abs(det) < SINGULAR_JACOBIAN else _STALLED
                break
            f, dh, dg = _full(hc, gc, zt)
            z, r2 = zt, _abs2(f)
        if _abs2(z) > limit2:
            status = _DIVERGED
            break
    if status == _RUNNING:
        status = _CONVERGED if r2 <= target2 else _STALLED
    if status == _CONVERGED:
        for _ in range(polish):
            step, det, ok = _step(f, dh, dg)
            if not ok:
                break
            zt = z + step
            ft, dht, dgt = _full(hc, gc, zt)
            if not _abs2(ft) < r2:
                break
            z, f, dh, dg, r2 = zt, ft, dht, dgt, _abs2(ft)
    return z, np.sqrt(r2), status


@njit(cache=True, parallel=True)
def _newton_kernel(hc, gc, seeds, target, max_iters, limit, polish):
    n = seeds.size
    zs = np.empty(n, dtype=np.complex128)
    rs = np.empty(n)
    st = np.empty(n, dtype=np.int64)
    for i in prange(n):
        zs[i], rs[i], st[i] = _refine_one(hc, gc, seeds[i], target, max_iters, limit, polish)
    return zs, rs, st


def _newton_batch(p: HarmonicPoly, seeds: np.ndarray, cfg: SolverConfig, limit: float, polish: int = POLISH_STEPS):
    """Damped Newton from every seed; returns iterates, residuals, status codes.

    Each step is halved until the residual drops, down to a floor of 2**-20.
    Converged points get up to ``polish`` undamped steps, kept only while the
    residual keeps falling.
    """
    hc = np.asarray(p.h.coeffs, dtype=np.complex128)
    gc = np.asarray(p.g.coeffs, dtype=np.complex128)
    seeds = np.ascontiguousarray(seeds, dtype=np.complex128)
    target = cfg.newton_tol * p.scale()
    return _newton_kernel(hc, gc, seeds, target, int(cfg.max_newton_iters), float(limit), int(polish))


def _record(p: HarmonicPoly, z: complex, residual: float, cfg: SolverConfig) -> RootRecord:
    _, dh = p.h.value_and_derivative(z)
    _, dg = p.g.value_and_derivative(z)
    det = float(abs(dh) ** 2 - abs(dg) ** 2)
    return RootRecord(complex(z), float(residual), classify_orientation(det, cfg.singular_threshold), det)


def newton_refine(p: HarmonicPoly, seed: complex, cfg: SolverConfig = SolverConfig()) -> RootRecord:
    """Refine ``seed`` to a zero of ``p``; raises :class:`NewtonFailure` otherwise."""
    limit = 10.0 * search_radius(p, cfg)
    z, res, status = _newton_batch(p, np.array([seed], dtype=complex), cfg, limit)
    if status[0] != _CONVERGED:
        raise NewtonFailure(_REASONS[int(status[0])], complex(z[0]))
    return _record(p, z[0], res[0], cfg)


def seed_grid(radius: float, density: float) -> np.ndarray:
    """Uniform grid covering the square ``[-radius, radius]**2``."""
    count = max(2, int(math.ceil(2.0 * radius * density)) + 1)
    xs = np.linspace(-radius, radius, count)
    X, Y = np.meshgrid(xs, xs)
    return (X + 1j * Y).ravel()


def _dedup(z: np.ndarray, res: np.ndarray, radius: float) -> list[int]:
    """Greedy representatives: repeatedly keep the lowest-residual point left
    (ties broken by real then imaginary part) and drop everything near it."""
    keep = []
    alive = np.ones(z.size, dtype=bool)
    while alive.any():
        idx = np.flatnonzero(alive)
        r = res[idx]
        ties = idx[r == r.min()]
        i = int(ties[np.lexsort((z[ties].imag, z[ties].real))[0]]) if ties.size > 1 else int(ties[0])
        keep.append(i)
        alive &= np.abs(z - z[i]) > radius * max(1.0, abs(z[i]))
    return keep


def find_all_zeros(p: HarmonicPoly, cfg: SolverConfig = SolverConfig()) -> list[RootRecord]:
    """All zeros found from a grid of Newton seeds, sorted by (re, im).

    The count is capped at ``N**2`` with ``N = max(deg h, deg g)``; more
    distinct zeros than that means ``dedup_radius`` is too small.
    """
    rad = search_radius(p, cfg)
    seeds = seed_grid(rad, cfg.grid_density)
    z, res, status = _newton_batch(p, seeds, cfg, 10.0 * rad, polish=0)
    ok = status == _CONVERGED
    z, res = z[ok], res[ok]
    keep = _dedup(z, res, cfg.dedup_radius)
    # polish only the representatives; restarting from a converged point
    # goes straight to the polishing steps
    z, res, _ = _newton_batch(p, z[keep], cfg, 10.0 * rad)
    roots = [_record(p, zi, ri, cfg) for zi, ri in zip(z, res)]
    roots.sort(key=lambda r: (r.z.real, r.z.imag))
    cap = p.max_degree**2
    if len(roots) > cap:
        raise CapacityExceeded(f"{len(roots)} distinct zeros exceed the bound {cap}")
    return roots


def winding_number(p: HarmonicPoly, radius: float, cfg: SolverConfig = SolverConfig()) -> WindingResult:
    """Winding number of ``f(|z| = radius)`` around the origin.

    The argument change is accumulated over samples of the positively
    oriented circle; any interval whose argument increment reaches pi/2 is
    bisected until none does.
    """
    if not radius > 0:
        raise ValueError("radius must be positive")
    floor = CONTOUR_MIN_RTOL * p.scale()
    n0 = max(256, 32 * (p.max_degree + 1))
    theta = np.linspace(0.0, 2.0 * np.pi, n0 + 1)
    vals = evaluate_harmonic(p, radius * np.exp(1j * theta))
    while True:
        mod = np.abs(vals)
        if mod.min() <= floor:
            raise ZeroOnContour(f"|f| = {mod.min():.3g} on |z| = {radius}")
        inc = np.angle(vals[1:] / vals[:-1])
        bad = np.flatnonzero(np.abs(inc) >= np.pi / 2)
        if bad.size == 0:
            break
        if theta.size + bad.size > MAX_CONTOUR_SAMPLES:
            raise NonIntegerWinding(f"contour |z| = {radius} needs more than {MAX_CONTOUR_SAMPLES} samples")
        mid = 0.5 * (theta[bad] + theta[bad + 1])
        theta = np.insert(theta, bad + 1, mid)
        vals = np.insert(vals, bad + 1, evaluate_harmonic(p, radius * np.exp(1j * mid)))
    total = inc.sum() / (2.0 * np.pi)
    w = round(total)
    if abs(total - w) > WINDING_INTEGER_TOL:
        raise NonIntegerWinding(f"winding {total!r} is not an integer")
    return WindingResult(int(w), float(mod.min()), int(theta.size))


def orientation_counts(roots: list[RootRecord]) -> tuple[int, int, int]:
    sp = sum(r.orientation is Orientation.SENSE_PRESERVING for r in roots)
    sr = sum(r.orientation is Orientation.SENSE_REVERSING for r in roots)
    return sp, sr, len(roots) - sp - sr


def signed_count_consistency(
    p: HarmonicPoly,
    cfg: SolverConfig = SolverConfig(),
    roots: list[RootRecord] | None = None,
    strict: bool = True,
) -> ConsistencyReport:
    """Compare the winding number on the search circle with the signed zero count.

    ``roots`` may be passed in to reuse an earlier :func:`find_all_zeros`
    result.  With ``strict`` a disagreement raises :class:`CountMismatch`.
    """
    if roots is None:
        roots = find_all_zeros(p, cfg)
    sp, sr, sing = orientation_counts(roots)
    if sing:
        raise SingularZeroPresent(f"{sing} zero(s) with vanishing Jacobian")
    radius = search_radius(p, cfg)
    w = winding_number(p, radius, cfg)
    report = ConsistencyReport(w, radius, sp, sr)
    if strict and w.winding != report.signed_count:
        raise CountMismatch(w.winding, report.signed_count)
    return report
