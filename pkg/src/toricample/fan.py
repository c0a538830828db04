"""Smooth fans given by rays and maximal cones, and their walls."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from . import lattice
from .errors import FanError, LatticeError
from .lattice import Vector

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Wall:
    """A codimension-one cone tau together with the two maximal cones meeting along it."""

    shared_rays: tuple[int, ...]
    side_a: int
    side_b: int
    opposite_a: int
    opposite_b: int

    def swapped(self) -> Wall:
        return Wall(self.shared_rays, self.side_b, self.side_a, self.opposite_b, self.opposite_a)

    def to_dict(self) -> dict:
        return {
            "shared_rays": list(self.shared_rays),
            "side_a": self.side_a,
            "side_b": self.side_b,
            "opposite_a": self.opposite_a,
            "opposite_b": self.opposite_b,
        }


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple[Vector, ...]
    max_cones: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def cone_rays(self, index: int) -> list[Vector]:
        return [self.rays[i] for i in self.max_cones[index]]

    @cached_property
    def facet_index(self) -> dict[tuple[int, ...], list[int]]:
        """Map each (n-1)-subset of a maximal cone to the cones containing it."""
        out: dict[tuple[int, ...], list[int]] = {}
        for c, cone in enumerate(self.max_cones):
            for facet in combinations(cone, self.dim - 1):
                out.setdefault(facet, []).append(c)
        return out

    @cached_property
    def walls(self) -> tuple[Wall, ...]:
        return tuple(enumerate_walls(self))

    def wall_for(self, shared_rays: Iterable[int]) -> Wall:
        key = tuple(sorted(shared_rays))
        for w in self.walls:
            if w.shared_rays == key:
                return w
        raise FanError(f"no wall with shared rays {list(key)}")

    def to_dict(self) -> dict:
        d = {
            "dim": self.dim,
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }
        if self.name is not None:
            d["name"] = self.name
        return d


def build_fan(dim: int, rays: Sequence[Sequence[int]], max_cones: Sequence[Sequence[int]],
              name: str | None = None, *, check_smooth: bool = True) -> Fan:
    """Validate raw data and return a :class:`Fan`.

    Non-primitive rays are divided by their content (with a warning). Ray
    order is kept; the ray indices inside each cone are sorted. With
    ``check_smooth=False`` the unimodularity test is skipped so that
    :func:`is_smooth` can be asked about singular input.
    """
    if dim < 1:
        raise FanError("invalid rays: dimension must be at least 1")
    prim_rays: list[Vector] = []
    for k, r in enumerate(rays):
        if len(r) != dim:
            raise FanError(f"invalid rays: ray {k} has length {len(r)}, expected {dim}")
        try:
            p, mult = lattice.primitive(r)
        except LatticeError:
            raise FanError(f"invalid rays: ray {k} is zero") from None
        if mult != 1:
            log.warning("ray %d = %s is not primitive; using %s", k, list(r), list(p))
        prim_rays.append(p)
    if len(set(prim_rays)) != len(prim_rays):
        raise FanError("invalid rays: duplicate ray directions")

    cones: list[tuple[int, ...]] = []
    for c, cone in enumerate(max_cones):
        idx = tuple(sorted(int(i) for i in cone))
        if len(idx) != dim or len(set(idx)) != dim:
            raise FanError(f"not smooth: cone {c} must have exactly {dim} distinct rays")
        if any(i < 0 or i >= len(prim_rays) for i in idx):
            raise FanError(f"invalid rays: cone {c} refers to a missing ray")
        cones.append(idx)
    if not cones:
        raise FanError("not a fan: no maximal cones")
    if len(set(cones)) != len(cones):
        raise FanError("not a fan: duplicate maximal cones")
    used = {i for cone in cones for i in cone}
    unused = [k for k in range(len(prim_rays)) if k not in used]
    if unused:
        raise FanError(f"invalid rays: ray {unused[0]} lies in no maximal cone")

    fan = Fan(dim, tuple(prim_rays), tuple(cones), name)
    for c in range(len(cones)):
        d = lattice.determinant(fan.cone_rays(c))
        if d == 0:
            raise FanError(f"not smooth: cone {c} is not full-dimensional")
        if check_smooth and abs(d) != 1:
            raise FanError(f"not smooth: cone {c} has determinant {d}")
    for a, b in combinations(range(len(cones)), 2):
        if not _meet_in_common_face(fan, a, b):
            raise FanError(f"not a fan: cones {a} and {b} overlap")
    return fan


def _meet_in_common_face(fan: Fan, a: int, b: int) -> bool:
    """True iff cone a and cone b intersect exactly in cone(shared rays).

    In the coordinates of cone a (an orthant after scaling), a point of cone
    b is ``W @ lam`` with ``lam >= 0``.  The intersection is larger than the
    shared face iff some ``lam >= 0`` that is non-zero on the non-shared
    generators of b lands in the orthant.  Shared generators of b are unit
    vectors there and can only help the shared coordinates, so both drop out.
    """
    ca, cb = fan.max_cones[a], fan.max_cones[b]
    shared = set(ca) & set(cb)
    rest_b = [r for r in cb if r not in shared]
    if not rest_b:
        return True
    w = lattice.adjugate_scaled(fan.cone_rays(a), [fan.rays[r] for r in rest_b])
    rows_a = [i for i, r in enumerate(ca) if r not in shared]
    k = len(rest_b)
    cons = [tuple(w[j][i] for j in range(k)) + (0,) for i in rows_a]
    cons += [tuple(int(i == j) for j in range(k)) + (0,) for i in range(k)]
    cons.append((1,) * k + (1,))
    return not _feasible(cons, k)


def _normalize(con: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for x in con:
        g = gcd(g, x)
    return con if g in (0, 1) else tuple(x // g for x in con)


def _feasible(cons: list[tuple[int, ...]], nvars: int) -> bool:
    """Fourier-Motzkin test for ``{x : c[:-1] . x >= c[-1] for c in cons}`` over Q."""
    cur = {_normalize(c) for c in cons}
    for v in range(nvars):
        pos = [c for c in cur if c[v] > 0]
        negs = [c for c in cur if c[v] < 0]
        nxt = {c for c in cur if c[v] == 0}
        for p in pos:
            for q in negs:
                fp, fq = -q[v], p[v]
                nxt.add(_normalize(tuple(fp * x + fq * y for x, y in zip(p, q))))
        cur = nxt
    return all(c[-1] <= 0 for c in cur)


def is_smooth(fan: Fan) -> tuple[bool, int | None]:
    """Return ``(True, None)`` or ``(False, index of the first singular cone)``."""
    for c in range(len(fan.max_cones)):
        if abs(lattice.determinant(fan.cone_rays(c))) != 1:
            return False, c
    return True, None


def is_complete(fan: Fan) -> bool:
    """True iff every facet of every maximal cone lies in exactly two maximal cones.

    For a pure full-dimensional fan a boundary point of the support would
    lie on a facet that belongs to only one cone, so this is equivalent to
    the support being all of R^n.  Complete smooth fans need not be
    projective once n >= 3.
    """
    return bool(fan.max_cones) and all(len(cs) == 2 for cs in fan.facet_index.values())


def enumerate_walls(fan: Fan) -> list[Wall]:
    walls = []
    for facet in sorted(fan.facet_index):
        cs = fan.facet_index[facet]
        if len(cs) != 2:
            raise FanError(f"fan not complete: facet {list(facet)} lies in {len(cs)} maximal cone(s)")
        a, b = sorted(cs)
        (oa,) = set(fan.max_cones[a]) - set(facet)
        (ob,) = set(fan.max_cones[b]) - set(facet)
        walls.append(Wall(facet, a, b, oa, ob))
    return walls


def transform(fan: Fan, matrix_cols: Sequence[Sequence[int]], name: str | None = None) -> Fan:
    """Image of ``fan`` under a lattice automorphism of N."""
    if abs(lattice.determinant(matrix_cols)) != 1:
        raise LatticeError("cone is not unimodular")
    rays = [lattice.apply(matrix_cols, r) for r in fan.rays]
    return build_fan(fan.dim, rays, fan.max_cones, name or fan.name)


def require_complete(fan: Fan) -> None:
    if not is_complete(fan):
        raise FanError("fan not complete")
