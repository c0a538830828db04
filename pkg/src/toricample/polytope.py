"""Lattice polytopes P(X, D) of ample invariant divisors.

Polytopes are only ever built from a fan and an ample divisor, so every
face comes from the cone-face dictionary: vertices are maximal cones,
edges are walls, 2-faces are codimension-two cones.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence

import numpy as np

from . import lattice
from .errors import ConsistencyError, DivisorNotAmpleError, FanError
from .fan import Fan, Wall, build_fan, require_complete
from .lattice import Vector
from .splitting import splitting_type, wall_relation

BUDGET_PER_RAY = 64


@dataclass(frozen=True)
class TwoFace:
    """A 2-face as a cycle of vertices (maximal cones) joined by edges (walls)."""

    cone: tuple[int, ...]
    vertices: tuple[int, ...]
    walls: tuple[Wall, ...]

    def neighbors(self, vertex: int) -> tuple[int, int]:
        k = self.vertices.index(vertex)
        m = len(self.vertices)
        return self.vertices[k - 1], self.vertices[(k + 1) % m]


@dataclass(frozen=True)
class AngleSign:
    face: tuple[int, ...]
    wall: Wall
    sign: int
    a: int


@dataclass(frozen=True)
class LatticePolytope:
    fan: Fan
    divisor: tuple[int, ...]
    vertices: dict[int, Vector]
    edges: dict[Wall, tuple[int, int]]
    two_faces: dict[tuple[int, ...], TwoFace]

    @property
    def dim(self) -> int:
        return self.fan.dim

    def vertex_list(self) -> list[Vector]:
        return [self.vertices[c] for c in range(len(self.fan.max_cones))]

    def faces_of_wall(self, wall: Wall) -> list[TwoFace]:
        if self.dim < 2:
            return []
        return [self.two_faces[rho] for rho in combinations(wall.shared_rays, self.dim - 2)]

    def to_dict(self) -> dict:
        return {
            "divisor": list(self.divisor),
            "vertices": [{"cone": c, "point": list(p)} for c, p in sorted(self.vertices.items())],
            "edges": [{"wall": w.to_dict(), "vertices": list(e)} for w, e in self.edges.items()],
            "two_faces": [
                {"cone": list(f.cone), "vertices": list(f.vertices)} for f in self.two_faces.values()
            ],
        }


def anticanonical(fan: Fan) -> tuple[int, ...]:
    return (1,) * len(fan.rays)


def vertex(fan: Fan, cone_index: int, c: Sequence[int]) -> Vector:
    """The point p with <p, v_i> = -c_i for the rays of the cone."""
    return lattice.solve_unimodular(
        lattice.columns_to_rows(fan.cone_rays(cone_index)),
        [-c[i] for i in fan.max_cones[cone_index]],
    )


def is_divisor_ample(fan: Fan, c: Sequence[int]) -> tuple[bool, tuple[int, int] | None]:
    """Per-vertex strict test; the witness is the first failing (cone, ray)."""
    if len(c) != len(fan.rays):
        raise FanError(f"divisor has {len(c)} coefficients for {len(fan.rays)} rays")
    require_complete(fan)
    for k, cone in enumerate(fan.max_cones):
        p = vertex(fan, k, c)
        for r, v in enumerate(fan.rays):
            if r not in cone and lattice.pair(p, v) <= -c[r]:
                return False, (k, r)
    return True, None


def curve_degrees(fan: Fan, c: Sequence[int]) -> list[int]:
    """Intersection numbers D . C_tau over the walls, read off the wall relations."""
    out = []
    for w in fan.walls:
        rel = wall_relation(fan, w)
        out.append(c[w.opposite_a] + c[w.opposite_b] + sum(b * c[i] for b, i in zip(rel.b, w.shared_rays)))
    return out


def find_ample_divisor(fan: Fan) -> tuple[int, ...]:
    """Search for an ample divisor, starting from -K.

    First the greedy pass: bump the coefficient of the violated ray, within
    a budget of 64 steps per ray.  That pass can drift forever on surfaces
    with several negative curves, so on exhaustion an LP over the curve
    degrees (each D . C_tau >= 1) proposes a rational point, which is
    cleared of denominators and re-checked exactly.
    """
    c = list(anticanonical(fan))
    for _ in range(BUDGET_PER_RAY * len(fan.rays) + 1):
        ok, witness = is_divisor_ample(fan, c)
        if ok:
            return tuple(c)
        c[witness[1]] += 1
    lp = _ample_by_lp(fan)
    if lp is not None:
        return lp
    raise DivisorNotAmpleError("no ample divisor found (fan may be non-projective)")


def _ample_by_lp(fan: Fan) -> tuple[int, ...] | None:
    from scipy.optimize import linprog

    m = len(fan.rays)
    rows = []
    for w in fan.walls:
        row = [0] * m
        row[w.opposite_a] += 1
        row[w.opposite_b] += 1
        for b, i in zip(wall_relation(fan, w).b, w.shared_rays):
            row[i] += b
        rows.append(row)
    # D . C >= 1 on every wall, coefficients kept in a box to stay bounded
    res = linprog(np.ones(m), A_ub=-np.array(rows, dtype=float), b_ub=-np.ones(len(rows)),
                  bounds=[(0, 10 * BUDGET_PER_RAY * m)] * m, method="highs")
    if res.status != 0:
        return None
    for limit in (1, 10, 100, 1000):
        fr = [Fraction(x).limit_denominator(limit) for x in res.x]
        den = lcm(*(f.denominator for f in fr))
        c = tuple(int(f * den) for f in fr)
        if is_divisor_ample(fan, c)[0]:
            return c
    return None


def _face_cycle(fan: Fan, rho: tuple[int, ...]) -> TwoFace:
    """Walk the maximal cones around a codimension-two cone."""
    rho_set = set(rho)
    containing = [k for k, cone in enumerate(fan.max_cones) if rho_set <= set(cone)]
    start = containing[0]
    first_other = max(set(fan.max_cones[start]) - rho_set)
    verts, walls = [start], []
    cur, cross = start, first_other
    while True:
        facet = tuple(sorted(set(fan.max_cones[cur]) - {cross}))
        w = fan.wall_for(facet)
        nxt = w.side_b if w.side_a == cur else w.side_a
        walls.append(w)
        if nxt == start:
            break
        verts.append(nxt)
        # leave the next cone through its other facet containing rho
        (cross,) = set(facet) - rho_set
        cur = nxt
        if len(verts) > len(containing):
            raise ConsistencyError(f"face cycle around {list(rho)} does not close")
    if sorted(verts) != containing:
        raise ConsistencyError(f"face cycle around {list(rho)} misses cones")
    return TwoFace(rho, tuple(verts), tuple(walls))


def polytope_from_divisor(fan: Fan, c: Sequence[int]) -> LatticePolytope:
    c = tuple(int(x) for x in c)
    ok, witness = is_divisor_ample(fan, c)
    if not ok:
        raise DivisorNotAmpleError(
            f"divisor not ample: vertex of cone {witness[0]} violates ray {witness[1]}", witness
        )
    verts = {k: vertex(fan, k, c) for k in range(len(fan.max_cones))}
    edges = {w: (w.side_a, w.side_b) for w in fan.walls}
    faces: dict[tuple[int, ...], TwoFace] = {}
    if fan.dim >= 2:
        for cone in fan.max_cones:
            for rho in combinations(cone, fan.dim - 2):
                if rho not in faces:
                    faces[rho] = _face_cycle(fan, rho)
    faces = dict(sorted(faces.items()))
    return LatticePolytope(fan, c, verts, edges, faces)


def edge_directions(P: LatticePolytope, cone_index: int) -> list[Vector]:
    """Primitive directions of the edges leaving the vertex of a maximal cone."""
    p = P.vertices[cone_index]
    out = []
    for w, (a, b) in P.edges.items():
        if cone_index in (a, b):
            other = b if a == cone_index else a
            out.append(lattice.primitive(lattice.sub(P.vertices[other], p))[0])
    return out


def angle_sum_sign(P: LatticePolytope, wall: Wall, face: TwoFace) -> AngleSign:
    """Compare the two angles of ``face`` at the ends of the edge of ``wall`` with pi.

    If w is the edge direction from p_sigma to p_sigma', and s, s' are the
    directions of the other face edges at those ends, then s - s' = a w and
    the angle sum is below, at or above pi as a is positive, zero or
    negative (trapezoid comparison; no angles are computed).
    """
    if wall not in face.walls:
        raise ConsistencyError("wall is not an edge of the face")
    sa, sb = wall.side_a, wall.side_b
    pa, pb = P.vertices[sa], P.vertices[sb]
    w = lattice.primitive(lattice.sub(pb, pa))[0]
    na = next(v for v in face.neighbors(sa) if v != sb)
    nb = next(v for v in face.neighbors(sb) if v != sa)
    s = lattice.primitive(lattice.sub(P.vertices[na], pa))[0]
    s_prime = lattice.primitive(lattice.sub(P.vertices[nb], pb))[0]
    a = lattice.multiple_of(lattice.sub(s, s_prime), w)
    if a is None:
        raise ConsistencyError("face is not planar/2-dimensional")
    return AngleSign(face.cone, wall, (a > 0) - (a < 0), a)


def all_angle_signs(P: LatticePolytope) -> list[AngleSign]:
    return [angle_sum_sign(P, w, f) for w in P.fan.walls for f in P.faces_of_wall(w)]


def splitting_summand_for_face(fan: Fan, wall: Wall, face: TwoFace) -> int:
    """The a_j whose character u_j vanishes on the face's codimension-two cone."""
    (j,) = [k for k, r in enumerate(wall.shared_rays) if r not in face.cone]
    return splitting_type(fan, wall).summands[j].a


def all_two_faces_triangular(P: LatticePolytope) -> tuple[bool, tuple[int, ...] | None]:
    for rho, f in P.two_faces.items():
        if len(f.vertices) != 3:
            return False, rho
    return True, None


def is_simplex(P: LatticePolytope) -> bool:
    return len(set(P.vertices.values())) == P.dim + 1


def normal_fan(P: LatticePolytope) -> Fan:
    """Recover the fan from the vertex set and the facet normals.

    Each ray must support a facet: its minimum over the vertices is -c_k and
    the minimizing vertices span an affine hyperplane.  The maximal cones
    are read back from vertex-facet incidence.
    """
    fan, c, n = P.fan, P.divisor, P.dim
    pts = P.vertex_list()
    incident: list[set[int]] = [set() for _ in pts]
    for k, v in enumerate(fan.rays):
        vals = [lattice.pair(p, v) for p in pts]
        lo = min(vals)
        if lo != -c[k]:
            raise ConsistencyError(f"ray {k}: minimum {lo} over vertices, expected {-c[k]}")
        on = [i for i, x in enumerate(vals) if x == lo]
        if _affine_rank([pts[i] for i in on]) != n - 1:
            raise ConsistencyError(f"ray {k} does not support a facet")
        expected = [i for i, cone in enumerate(fan.max_cones) if k in cone]
        if on != expected:
            raise ConsistencyError(f"ray {k}: facet vertices {on}, expected {expected}")
        for i in on:
            incident[i].add(k)
    cones = [sorted(s) for s in incident]
    rebuilt = build_fan(n, fan.rays, cones, fan.name)
    if rebuilt != fan:
        raise ConsistencyError("normal fan differs from the source fan")
    return rebuilt


def _affine_rank(points: list[Vector]) -> int:
    if not points:
        return -1
    base = points[0]
    rows = [list(lattice.sub(p, base)) for p in points[1:]]
    rank = 0
    ncols = len(base)
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f, g = rows[r][col], rows[rank][col]
                rows[r] = [g * x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank
