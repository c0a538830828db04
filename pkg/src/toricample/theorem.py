"""Projective-space recognition, theorem checks and the surface census."""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from typing import Sequence

from . import lattice
from .catalog import hirzebruch, p2, surface_from_rays
from .errors import DivisorNotAmpleError, FanError
from .fan import Fan, is_complete
from .lattice import Vector
from .polytope import (all_two_faces_triangular, anticanonical, find_ample_divisor,
                       is_divisor_ample, is_simplex, polytope_from_divisor)
from .splitting import PositivityClass, Verdict, classify_tangent

SurfaceCode = tuple[int, ...]


def is_projective_space_fan(fan: Fan) -> bool:
    n = fan.dim
    if len(fan.rays) != n + 1:
        return False
    if not lattice.is_zero([sum(c) for c in zip(*fan.rays)]):
        return False
    subsets = list(combinations(range(n + 1), n))
    if any(abs(lattice.determinant([fan.rays[i] for i in s])) != 1 for s in subsets):
        return False
    return sorted(fan.max_cones) == sorted(subsets)


@dataclass(frozen=True)
class PolytopeChecks:
    divisor: tuple[int, ...]
    triangular: bool
    simplex: bool


@dataclass(frozen=True)
class TheoremReport:
    classification: PositivityClass
    is_pn: bool
    polytope_checks: PolytopeChecks | None
    passed: bool
    note: str = ""

    def to_dict(self) -> dict:
        pc = self.polytope_checks
        return {
            "classification": self.classification.to_dict(),
            "is_pn": self.is_pn,
            "polytope_checks": None if pc is None else {
                "divisor": list(pc.divisor), "triangular": pc.triangular, "simplex": pc.simplex,
            },
            "verdict": "pass" if self.passed else "fail",
            "note": self.note,
        }


def verify_theorem(fan: Fan, divisor: Sequence[int] | None = None) -> TheoremReport:
    """Check "T_X ample implies X is P^n" on one fan.

    The implication is vacuous unless the classification is Ample; in that
    case the fan must be the P^n fan and the polytope of the divisor must
    have only triangular 2-faces and n + 1 vertices.
    """
    cls = classify_tangent(fan)
    is_pn = is_projective_space_fan(fan)
    if cls.verdict is not Verdict.AMPLE:
        return TheoremReport(cls, is_pn, None, True, "vacuous: tangent bundle not ample")
    if divisor is None:
        c = anticanonical(fan)
        if not is_divisor_ample(fan, c)[0]:
            try:
                c = find_ample_divisor(fan)
            except DivisorNotAmpleError as e:
                return TheoremReport(cls, is_pn, None, False, f"polytope checks skipped: {e}")
    else:
        c = tuple(divisor)
    P = polytope_from_divisor(fan, c)
    tri, _ = all_two_faces_triangular(P)
    checks = PolytopeChecks(tuple(c), tri, is_simplex(P))
    return TheoremReport(cls, is_pn, checks, is_pn and tri and checks.simplex)


def _half(v: Vector) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ccw_cmp(u: Vector, v: Vector) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def ccw_rays(rays: Sequence[Vector]) -> list[Vector]:
    return sorted(rays, key=cmp_to_key(_ccw_cmp))


def cyclic_code(rays: Sequence[Vector]) -> tuple[int, ...]:
    """Self-intersections d_i, from v_{i-1} + v_{i+1} = -d_i v_i, for rays in cyclic order."""
    m = len(rays)
    out = []
    for i in range(m):
        w = lattice.add(rays[i - 1], rays[(i + 1) % m])
        d = lattice.multiple_of(w, rays[i]) if not lattice.is_zero(w) else 0
        if d is None:
            raise FanError(f"not smooth: neighbours of ray {i} do not sum to a multiple of it")
        out.append(-d)
    return tuple(out)


def canonicalize(code: Sequence[int]) -> SurfaceCode:
    code = tuple(code)
    rev = code[::-1]
    m = len(code)
    return min(min(c[i:] + c[:i] for i in range(m)) for c in (code, rev))


def canonical_surface_code(fan: Fan) -> SurfaceCode:
    if fan.dim != 2:
        raise FanError("surface codes are only defined in dimension 2")
    if not is_complete(fan):
        raise FanError("fan not complete")
    return canonicalize(cyclic_code(ccw_rays(fan.rays)))


def enumerate_smooth_surfaces(max_rays: int, max_abs_d: int) -> list[Fan]:
    """Smooth complete surfaces reachable from P^2 and F_a by corner blowups.

    Every surface visited (not only the output) stays within the bounds on
    ray count and on |d_i|; results are deduplicated by canonical code and
    sorted by it.
    """
    if max_rays < 3 or max_abs_d < 1:
        raise ValueError("need max_rays >= 3 and max_abs_d >= 1")
    seeds = [list(p2().rays)]
    if max_rays >= 4:
        seeds += [list(hirzebruch(a).rays) for a in range(max_abs_d + 1)]
    found: dict[SurfaceCode, list[Vector]] = {}
    frontier = []
    for rays in seeds:
        code = canonicalize(cyclic_code(rays))
        if code not in found and max(map(abs, code)) <= max_abs_d:
            found[code] = rays
            frontier.append(rays)
    while frontier:
        nxt = []
        for rays in frontier:
            if len(rays) >= max_rays:
                continue
            for i in range(len(rays)):
                new = rays[: i + 1] + [lattice.add(rays[i], rays[(i + 1) % len(rays)])] + rays[i + 1:]
                code = canonicalize(cyclic_code(new))
                if code in found or max(map(abs, code)) > max_abs_d:
                    continue
                found[code] = new
                nxt.append(new)
        frontier = nxt
    return [surface_from_rays(found[code], name=str(list(code))) for code in sorted(found)]


@dataclass(frozen=True)
class CensusRow:
    code: SurfaceCode
    classification: PositivityClass
    fan: Fan


@dataclass(frozen=True)
class Census:
    rows: tuple[CensusRow, ...]

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(r.classification.verdict for r in self.rows)
        return {v.value: counts.get(v, 0) for v in Verdict}

    def to_dict(self) -> dict:
        return {
            "rows": [{"code": list(r.code), "rays": len(r.fan.rays),
                      "verdict": r.classification.verdict.value} for r in self.rows],
            "summary": self.summary,
        }


def census(max_rays: int, max_abs_d: int, workers: int = 1) -> Census:
    fans = enumerate_smooth_surfaces(max_rays, max_abs_d)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            classes = list(pool.map(classify_tangent, fans))
    else:
        classes = [classify_tangent(f) for f in fans]
    return Census(tuple(CensusRow(canonical_surface_code(f), c, f) for f, c in zip(fans, classes)))
