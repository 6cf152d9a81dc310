"""Verification reports, sweep rows, and their JSON/CSV encodings.

Floats are written with ``repr``, the shortest decimal string that reads
back to the identical double, so a decoded report is bit-for-bit equal to
the one that was written.
"""

from __future__ import annotations

import csv
import io
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .bounds import (
    BoundReport,
    Case,
    Method,
    harmonic_disk,
    search_disk,
    select_case,
    trinomial_disk,
    trinomial_inclusion_region,
)
from .errors import SolverError
from .poly_core import (
    Annulus,
    Disk,
    HarmonicPoly,
    HarmonicTrinomial,
    Orientation,
    Region,
    RootRecord,
    UnionRegion,
    region_contains,
)
from .solver import (
    SolverConfig,
    find_all_zeros,
    orientation_counts,
    signed_count_consistency,
    winding_number,
)

CONTAINMENT_TOL = 1e-6


# -- dict encodings ----------------------------------------------------------


def region_to_dict(r: Region) -> dict[str, Any]:
    if isinstance(r, Disk):
        return {"kind": "disk", "inner": 0.0, "outer": r.radius, "inner_closed": True, "outer_closed": r.closed}
    if isinstance(r, Annulus):
        return {
            "kind": "annulus",
            "inner": r.inner,
            "outer": r.outer,
            "inner_closed": r.inner_closed,
            "outer_closed": r.outer_closed,
        }
    members = [region_to_dict(m) for m in r.members]
    return {
        "kind": "union",
        "inner": min(m["inner"] for m in members),
        "outer": max(m["outer"] for m in members),
        "inner_closed": True,
        "outer_closed": True,
        "members": members,
    }


def region_from_dict(d: dict[str, Any]) -> Region:
    kind = d["kind"]
    if kind == "disk":
        return Disk(d["outer"], d["outer_closed"])
    if kind == "annulus":
        return Annulus(d["inner"], d["outer"], d["inner_closed"], d["outer_closed"])
    if kind == "union":
        return UnionRegion(tuple(region_from_dict(m) for m in d["members"]))
    raise ValueError(f"unknown region kind {kind!r}")


def bound_to_dict(b: BoundReport) -> dict[str, Any]:
    return {
        "method": b.method.value,
        "region": region_to_dict(b.region),
        "intermediate": dict(b.intermediate),
        "flags": list(b.flags),
    }


def bound_from_dict(d: dict[str, Any]) -> BoundReport:
    return BoundReport(Method(d["method"]), region_from_dict(d["region"]), dict(d["intermediate"]), tuple(d["flags"]))


def root_to_dict(r: RootRecord) -> dict[str, Any]:
    return {
        "re": r.z.real,
        "im": r.z.imag,
        "residual": r.residual,
        "orientation": r.orientation.value,
        "jacobian_det": r.jacobian_det,
    }


def root_from_dict(d: dict[str, Any]) -> RootRecord:
    return RootRecord(complex(d["re"], d["im"]), d["residual"], Orientation(d["orientation"]), d["jacobian_det"])


def _complex_pair(c: complex) -> list[float]:
    return [c.real, c.imag]


def instance_to_dict(inst: HarmonicTrinomial | HarmonicPoly) -> dict[str, Any]:
    if isinstance(inst, HarmonicTrinomial):
        return {"kind": "trinomial", "n": inst.n, "k": inst.k, "c": _complex_pair(inst.c)}
    return {
        "kind": "harmonic",
        "h": [_complex_pair(a) for a in inst.h.coeffs],
        "g": [_complex_pair(b) for b in inst.g.coeffs],
        "order": "ascending",
    }


# -- verification ------------------------------------------------------------


@dataclass
class VerificationReport:
    instance: dict[str, Any]
    regions: list[BoundReport]
    zeros: list[RootRecord]
    containment: list[list[bool]]
    winding_checks: list[dict[str, Any]]
    count_check: dict[str, Any] | None = None
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        contained = all(all(row) for row in self.containment)
        wound = all(w["matched"] for w in self.winding_checks)
        return "pass" if contained and wound else "fail"

    def to_dict(self) -> dict[str, Any]:
        checks: dict[str, Any] = {"containment": self.containment, "winding": self.winding_checks}
        if self.count_check is not None:
            checks["count"] = self.count_check
        return {
            "instance": self.instance,
            "regions": [bound_to_dict(b) for b in self.regions],
            "zeros": [root_to_dict(z) for z in self.zeros],
            "checks": checks,
            "verdict": self.verdict,
            "timings": self.timings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "VerificationReport":
        checks = d["checks"]
        return cls(
            d["instance"],
            [bound_from_dict(b) for b in d["regions"]],
            [root_from_dict(z) for z in d["zeros"]],
            checks["containment"],
            checks["winding"],
            checks.get("count"),
            d.get("timings", {}),
        )


@contextmanager
def _timed(timings: dict[str, float], stage: str):
    t0 = time.perf_counter()
    yield
    timings[stage] = 1000.0 * (time.perf_counter() - t0)


def verify(inst: HarmonicTrinomial | HarmonicPoly, cfg: SolverConfig = SolverConfig()) -> VerificationReport:
    """Bounds, zeros, containment matrix and winding comparisons for one instance.

    Solver failures (singular zeros, zeros on a contour) propagate as
    :class:`SolverError`.
    """
    timings: dict[str, float] = {}
    with _timed(timings, "bounds"):
        if isinstance(inst, HarmonicTrinomial):
            p = inst.to_harmonic()
            regions = [trinomial_disk(inst), trinomial_inclusion_region(inst)]
        else:
            p = inst
            regions = [harmonic_disk(p)] if p.is_dominant else [search_disk(p)]
    with _timed(timings, "solve"):
        zeros = find_all_zeros(p, cfg)
    with _timed(timings, "containment"):
        containment = [[region_contains(b.region, r.z, CONTAINMENT_TOL) for b in regions] for r in zeros]
    with _timed(timings, "winding"):
        consistency = signed_count_consistency(p, cfg, roots=zeros, strict=False)
        checks = [
            {
                "name": "signed-count",
                "radius": consistency.radius,
                "winding": consistency.winding.winding,
                "expected": consistency.signed_count,
                "sense_preserving": consistency.sense_preserving,
                "sense_reversing": consistency.sense_reversing,
                "min_modulus": consistency.winding.min_modulus_on_contour,
                "samples": consistency.winding.samples_used,
                "matched": consistency.winding.winding == consistency.signed_count,
            }
        ]
        far = 2.0 * search_disk(p).intermediate["R"]
        w = winding_number(p, far, cfg)
        expected = p.h.degree if p.is_dominant else -p.g.degree
        checks.append(
            {
                "name": "dominance",
                "radius": far,
                "winding": w.winding,
                "expected": expected,
                "min_modulus": w.min_modulus_on_contour,
                "samples": w.samples_used,
                "matched": w.winding == expected,
            }
        )
    count_check = None
    if isinstance(inst, HarmonicTrinomial):
        count_check = trinomial_count_check(inst, zeros)
    return VerificationReport(instance_to_dict(inst), regions, zeros, containment, checks, count_check, timings)


def trinomial_count_check(t: HarmonicTrinomial, zeros: Sequence[RootRecord]) -> dict[str, Any]:
    """Zero count against the ``[n, n + 2k]`` envelope, and ``== n`` for real ``0 < c < 1``."""
    count = len(zeros)
    lo, hi = t.n, t.n + 2 * t.k
    exact = t.n if select_case(t) is Case.A else None
    ok = lo <= count <= hi and (exact is None or count == exact)
    return {"count": count, "envelope": [lo, hi], "expected_exact": exact, "within": ok}


# -- sweep -------------------------------------------------------------------

SWEEP_COLUMNS = (
    "c",
    "zero_count",
    "signed_count",
    "winding",
    "annulus_inner",
    "annulus_outer",
    "disk_radius",
    "all_contained",
    "status",
)


def sweep_row(n: int, k: int, c: float, cfg: SolverConfig = SolverConfig()) -> dict[str, Any]:
    """One sweep row; solver failures land in ``status`` instead of raising."""
    t = HarmonicTrinomial(n, k, c)
    incl = trinomial_inclusion_region(t)
    row: dict[str, Any] = dict.fromkeys(SWEEP_COLUMNS, "")
    row["c"] = float(c)
    row["disk_radius"] = incl.intermediate["R"]
    if "beta1" in incl.intermediate:
        row["annulus_inner"] = incl.intermediate["beta1"]
        row["annulus_outer"] = incl.intermediate["beta2"]
    p = t.to_harmonic()
    try:
        zeros = find_all_zeros(p, cfg)
        sp, sr, _ = orientation_counts(zeros)
        row["zero_count"] = len(zeros)
        row["signed_count"] = sp - sr
        cons = signed_count_consistency(p, cfg, roots=zeros, strict=False)
    except SolverError as exc:
        row["status"] = type(exc).__name__
        return row
    row["winding"] = cons.winding.winding
    row["all_contained"] = all(region_contains(incl.region, z.z, CONTAINMENT_TOL) for z in zeros)
    ok = (
        n <= len(zeros) <= n + 2 * k
        and row["signed_count"] == n
        and row["winding"] == row["signed_count"]
        and row["all_contained"]
    )
    row["status"] = "ok" if ok else "violation"
    return row


def sweep(n: int, k: int, c_start: float, c_end: float, steps: int, cfg: SolverConfig = SolverConfig()):
    if not 0 < c_start < c_end:
        raise ValueError("need 0 < c_start < c_end")
    if steps < 2:
        raise ValueError("need at least 2 steps")
    HarmonicTrinomial(n, k, c_start)  # validates (n, k) before any solving
    return [sweep_row(n, k, float(c), cfg) for c in np.linspace(c_start, c_end, steps)]


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def rows_to_csv(rows: Sequence[dict[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        writer.writerow([_cell(row[col]) for col in SWEEP_COLUMNS])
    return buf.getvalue()
