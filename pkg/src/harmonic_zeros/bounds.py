"""Zero-inclusion regions for analytic polynomials, harmonic polynomials and
harmonic trinomials ``z**n + c conj(z)**k - 1``.

Every region is centred at the origin.  Radii are closed forms wherever one
exists; the remaining ones (Marden, Dehmer, Kennedy's first ring, the alpha
ring) come from :func:`real_roots.solve_bracketed`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import CaseMismatch, DegreeZero, InvalidTrinomial, LowerBoundUndefined
from .poly_core import (
    AnalyticPoly,
    Annulus,
    Disk,
    HarmonicPoly,
    HarmonicTrinomial,
    Region,
    UnionRegion,
    clip_to_disk,
)
from .real_roots import RealPoly, dehmer_radius, unique_positive_root


class Method(str, enum.Enum):
    CAUCHY = "Cauchy"
    MARDEN = "Marden"
    DEHMER_ANALYTIC = "DehmerAnalytic"
    ROUCHE = "Rouche"
    HARMONIC_DISK = "HarmonicDisk"
    TRINOMIAL_DISK = "TrinomialDisk"
    KENNEDY_RING = "KennedyRing"
    KENNEDY_RING_ALT = "KennedyRingAlt"
    ALPHA_RING = "AlphaRing"
    BETA_ANNULUS = "BetaAnnulus"
    TRINOMIAL_INCLUSION = "TrinomialInclusion"


class Case(str, enum.Enum):
    A = "A"  # real c in (0, 1)
    B = "B"  # real c >= 1
    C = "C"  # complex c, |c| >= 1


ANNULUS_UNSUPPORTED = "annulus-unsupported"
LOWER_BOUND_UNDEFINED = "lower-bound-undefined"


@dataclass(frozen=True)
class BoundReport:
    method: Method
    region: Region
    intermediate: dict[str, float] = field(default_factory=dict)
    flags: tuple[str, ...] = ()


# -- analytic polynomials ----------------------------------------------------


def _max_ratio(coeffs) -> float:
    lead = abs(coeffs[-1])
    return max((abs(a) / lead for a in coeffs[:-1]), default=0.0)


def cauchy_interval(p: RealPoly) -> tuple[float, float]:
    """Closed interval ``[-(M + 1), M + 1]`` holding every real zero."""
    if p.degree < 1:
        raise DegreeZero("Cauchy bound needs degree >= 1")
    M = _max_ratio(p.coeffs)
    return (-(M + 1.0), M + 1.0)


def marden_radius(p: AnalyticPoly) -> float:
    """Positive root of ``|a_0| + ... + |a_{n-1}| x**(n-1) - |a_n| x**n``.

    Returns 0.0 for a monomial ``a_n z**n``, whose only zero is the origin.
    """
    if p.degree < 1:
        raise DegreeZero("Marden bound needs degree >= 1")
    moduli = [abs(a) for a in p.coeffs]
    if not any(moduli[:-1]):
        return 0.0
    # sign flipped so the single sign change runs - to +
    q = RealPoly(tuple(-m for m in moduli[:-1]) + (moduli[-1],))
    return unique_positive_root(q, _max_ratio(p.coeffs) + 1.0)


def dehmer_disk(p: AnalyticPoly) -> BoundReport:
    """Closed disk of radius ``max(1, r)``, ``r`` the Dehmer root for ``M = max |a_j / a_n|``."""
    if p.degree < 1:
        raise DegreeZero("Dehmer bound needs degree >= 1")
    M = _max_ratio(p.coeffs)
    return _dehmer_report(Method.DEHMER_ANALYTIC, M, p.degree)


def rouche_radius(p: AnalyticPoly, require_monic: bool = True) -> float:
    """``sqrt(1 + sum_{j<n} |b_j|**2)`` for the monic normalisation of ``p``.

    Zeros lie strictly inside this radius, except for ``z**n`` where the
    radius is 1 and the single zero is the origin.  With
    ``require_monic=False`` a non-monic ``p`` is rejected instead of being
    normalised.
    """
    if p.degree < 1:
        raise DegreeZero("Rouche bound needs degree >= 1")
    lead = p.leading
    if lead != 1:
        if not require_monic:
            raise ValueError("polynomial is not monic")
    return math.sqrt(1.0 + sum(abs(a / lead) ** 2 for a in p.coeffs[:-1]))


def _dehmer_report(method: Method, M: float, n: int) -> BoundReport:
    if M == 0:
        r = 1.0
    else:
        r = dehmer_radius(M, n)
    R = max(1.0, r)
    return BoundReport(method, Disk(R, closed=True), {"M": M, "r": r, "R": R})


# -- harmonic polynomials ----------------------------------------------------


def harmonic_disk(p: HarmonicPoly) -> BoundReport:
    """Closed disk ``|z| <= max(1, r)`` containing every zero of ``h + conj(g)``.

    ``M = max_{j<n} (|a_j| + |b_j|) / |a_n|`` and ``r`` is the Dehmer root for
    that ``M``.
    """
    if not p.is_dominant:
        raise ValueError("harmonic disk needs deg h > deg g and deg h >= 1")
    n = p.n
    a, b = p.h.coeffs, p.g.coeffs
    lead = abs(a[n])
    M = 0.0
    for j in range(n):
        bj = abs(b[j]) if j < len(b) else 0.0
        M = max(M, (abs(a[j]) + bj) / lead)
    return _dehmer_report(Method.HARMONIC_DISK, M, n)


def search_disk(p: HarmonicPoly) -> BoundReport:
    """Inclusion disk for any harmonic polynomial with ``deg h != deg g``.

    When ``deg g > deg h`` the disk of ``conj(f) = g + conj(h)`` is used; the
    two functions share their zeros.
    """
    if p.is_dominant:
        return harmonic_disk(p)
    q = p.swapped()
    if q.is_dominant:
        return harmonic_disk(HarmonicPoly(q.h, q.g))
    raise ValueError("no inclusion disk when deg h == deg g")


def trinomial_disk(t: HarmonicTrinomial) -> BoundReport:
    M = max(1.0, abs(t.c))
    return _dehmer_report(Method.TRINOMIAL_DISK, M, t.n)


# -- trinomial rings ---------------------------------------------------------


def _check_trinomial_params(n: int, k: int, a: complex, b: complex) -> None:
    if a == 0 or b == 0:
        raise InvalidTrinomial("a * b must be nonzero")
    if n < 3 or not 1 <= k <= n - 1 or math.gcd(n, k) != 1:
        raise InvalidTrinomial(f"need n >= 3, 1 <= k <= n - 1, gcd(n, k) = 1; got n={n}, k={k}")


def _trinomial_poly(n: int, k: int, ak: float, a0: float) -> RealPoly:
    coeffs = [0.0] * (n + 1)
    coeffs[0], coeffs[k], coeffs[n] = a0, ak, 1.0
    return RealPoly(tuple(coeffs))


def kennedy_ring(n: int, k: int, a: complex, b: complex) -> Region:
    """Closed ring ``x1 <= |z| <= x2`` for the zeros of ``z**n + a z**k + b``.

    ``x1`` and ``x2`` are the positive roots of ``x**n + |a| x**k - |b|`` and
    ``x**n - |a| x**k - |b|``.
    """
    _check_trinomial_params(n, k, a, b)
    A, B = abs(a), abs(b)
    x1 = unique_positive_root(_trinomial_poly(n, k, A, -B), B ** (1.0 / n))
    x2 = unique_positive_root(_trinomial_poly(n, k, -A, -B), 1.0 + max(A, B))
    return Annulus(x1, x2, True, True)


def kennedy_ring_alt(n: int, k: int, a: complex, b: complex, strict: bool = True) -> Region:
    """Open ring ``y1 < |z| < y2`` with ``y**(n-k) = |b|**((n-k)/n) -/+ |a|``.

    If ``|b|**((n-k)/n) <= |a|`` there is no inner radius: ``strict`` raises
    :class:`LowerBoundUndefined`, otherwise the open disk of radius ``y2`` is
    returned wrapped in a :class:`UnionRegion`.
    """
    _check_trinomial_params(n, k, a, b)
    d = n - k
    A = abs(a)
    base = abs(b) ** (d / n)
    y2 = (base + A) ** (1.0 / d)
    if base <= A:
        if strict:
            raise LowerBoundUndefined(f"|b|^((n-k)/n) = {base} <= |a| = {A}")
        return UnionRegion((Disk(y2, closed=False),))
    y1 = (base - A) ** (1.0 / d)
    return Annulus(y1, y2, False, False)


def _require_real_in_unit_interval(t: HarmonicTrinomial) -> float:
    if not t.is_real or not 0 < t.c.real < 1:
        raise CaseMismatch(f"c = {t.c} is not a real number in (0, 1)")
    return t.c.real


def alpha_ring(t: HarmonicTrinomial) -> BoundReport:
    """Closed ring between the positive roots of ``x**n + c x**k - 1`` and
    ``x**n - c x**k - 1`` (real ``0 < c < 1``).  The trinomial then has
    exactly ``n`` distinct zeros, recorded as ``expected_zero_count``."""
    c = _require_real_in_unit_interval(t)
    ring = kennedy_ring(t.n, t.k, c, -1.0)
    return BoundReport(
        Method.ALPHA_RING,
        ring,
        {"alpha1": ring.inner, "alpha2": ring.outer, "expected_zero_count": float(t.n)},
    )


def select_case(t: HarmonicTrinomial) -> Case | None:
    """Case of the annular theorem that applies to ``c``; None when none does."""
    if t.is_real and 0 < t.c.real < 1:
        return Case.A
    if t.is_real and t.c.real >= 1:
        return Case.B
    if abs(t.c) >= 1:
        return Case.C
    return None


def beta_annulus(t: HarmonicTrinomial, case: Case | str) -> Region:
    """Closed-form annulus for the given case.

    Case A is an open annulus containing every zero.  Cases B and C only
    constrain zeros with ``|z| >= 1``, so the open unit disk is part of the
    region.
    """
    case = Case(case)
    d = t.n - t.k
    if case is Case.A:
        c = _require_real_in_unit_interval(t)
        return Annulus((1.0 - c) ** (1.0 / d), (1.0 + c) ** (1.0 / d), False, False)
    if case is Case.B:
        if not t.is_real or t.c.real < 1:
            raise CaseMismatch(f"c = {t.c} is not a real number >= 1")
        mod = t.c.real
    else:
        mod = abs(t.c)
        if mod < 1:
            raise CaseMismatch(f"|c| = {mod} < 1")
    ring = Annulus((mod - 1.0) ** (1.0 / d), (1.0 + mod) ** (1.0 / d), True, True)
    return UnionRegion((Disk(1.0, closed=False), ring))


def _annulus_member(region: Region) -> Annulus | None:
    if isinstance(region, Annulus):
        return region
    if isinstance(region, UnionRegion):
        for m in region.members:
            if isinstance(m, Annulus):
                return m
    return None


def trinomial_inclusion_region(t: HarmonicTrinomial) -> BoundReport:
    """Tightest region available for ``t``: the case annulus cut down to the
    trinomial disk, or the disk alone (flagged) for complex ``|c| < 1``."""
    disk = trinomial_disk(t)
    R = disk.intermediate["R"]
    inter = {"M": disk.intermediate["M"], "r": disk.intermediate["r"], "R": R}
    case = select_case(t)
    if case is None:
        return BoundReport(Method.TRINOMIAL_INCLUSION, disk.region, inter, (ANNULUS_UNSUPPORTED,))
    ring = beta_annulus(t, case)
    ann = _annulus_member(ring)
    inter.update(beta1=ann.inner, beta2=ann.outer)
    if case is Case.A:
        alpha = alpha_ring(t).intermediate
        inter.update(alpha1=alpha["alpha1"], alpha2=alpha["alpha2"],
                     expected_zero_count=alpha["expected_zero_count"])
    region = clip_to_disk(ring, R, closed=True)
    return BoundReport(Method.TRINOMIAL_INCLUSION, region, inter, (f"case-{case.value}",))


def trinomial_reports(t: HarmonicTrinomial) -> list[BoundReport]:
    """Every bound that applies to ``t``, tightest (composite) one last."""
    reports = [trinomial_disk(t)]
    reports.append(BoundReport(Method.KENNEDY_RING, kennedy_ring(t.n, t.k, t.c, -1.0)))
    alt = kennedy_ring_alt(t.n, t.k, t.c, -1.0, strict=False)
    flags = (LOWER_BOUND_UNDEFINED,) if isinstance(alt, UnionRegion) else ()
    reports.append(BoundReport(Method.KENNEDY_RING_ALT, alt, flags=flags))
    case = select_case(t)
    if case is Case.A:
        reports.append(alpha_ring(t))
    if case is not None:
        reports.append(BoundReport(Method.BETA_ANNULUS, beta_annulus(t, case), flags=(f"case-{case.value}",)))
    reports.append(trinomial_inclusion_region(t))
    return reports


def analytic_reports(p: AnalyticPoly) -> list[BoundReport]:
    """Bounds for an analytic polynomial; Cauchy only for real coefficients."""
    reports = []
    if all(a.imag == 0 for a in p.coeffs):
        lo, hi = cauchy_interval(RealPoly(tuple(a.real for a in p.coeffs)))
        reports.append(BoundReport(Method.CAUCHY, Disk(hi), {"M": hi - 1.0, "lo": lo, "hi": hi}))
    r = marden_radius(p)
    reports.append(BoundReport(Method.MARDEN, Disk(r), {"r": r}))
    reports.append(dehmer_disk(p))
    R = rouche_radius(p)
    reports.append(BoundReport(Method.ROUCHE, Disk(R, closed=False), {"R": R}))
    return reports
