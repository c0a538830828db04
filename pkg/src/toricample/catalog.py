"""Constructors for the standard fans used throughout the tests and scripts."""
from __future__ import annotations

from itertools import combinations, product as iproduct

from . import lattice
from .fan import Fan, build_fan


def projective_space(n: int) -> Fan:
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = list(combinations(range(n + 1), n))
    return build_fan(n, rays, cones, f"P{n}")


def hirzebruch(a: int) -> Fan:
    """F_a with rays (1,0), (0,1), (-1,a), (0,-1) in counterclockwise order."""
    rays = [(1, 0), (0, 1), (-1, a), (0, -1)]
    return build_fan(2, rays, [(0, 1), (1, 2), (2, 3), (3, 0)], f"F{a}")


def p2() -> Fan:
    return build_fan(2, [(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 0)], "P2")


def p1xp1() -> Fan:
    return build_fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [(0, 1), (1, 2), (2, 3), (3, 0)], "P1xP1")


def f1() -> Fan:
    """The fan of F_1 drawn with rays (1,0), (0,1), (-1,-1), (-1,0)."""
    return build_fan(2, [(1, 0), (0, 1), (-1, -1), (-1, 0)], [(0, 1), (1, 3), (3, 2), (2, 0)], "F1")


def product(f: Fan, g: Fan, name: str | None = None) -> Fan:
    rays = [r + (0,) * g.dim for r in f.rays] + [(0,) * f.dim + r for r in g.rays]
    off = len(f.rays)
    cones = [a + tuple(off + j for j in b) for a, b in iproduct(f.max_cones, g.max_cones)]
    return build_fan(f.dim + g.dim, rays, cones, name or f"{f.name}x{g.name}")


def star_blowup(fan: Fan, cone_index: int, name: str | None = None) -> Fan:
    """Blow up the torus-fixed point of a maximal cone (star subdivision at the sum of its rays)."""
    cone = fan.max_cones[cone_index]
    new_ray = tuple(sum(c) for c in zip(*fan.cone_rays(cone_index)))
    rays = list(fan.rays) + [new_ray]
    new = len(fan.rays)
    cones = [c for i, c in enumerate(fan.max_cones) if i != cone_index]
    for facet in combinations(cone, fan.dim - 1):
        cones.append(facet + (new,))
    return build_fan(fan.dim, rays, cones, name or f"Bl({fan.name})")


def surface_from_rays(rays, name: str | None = None) -> Fan:
    """Complete surface fan whose rays are given in counterclockwise order."""
    m = len(rays)
    return build_fan(2, rays, [(i, (i + 1) % m) for i in range(m)], name)


def golden_fans() -> dict[str, Fan]:
    return {"P2": p2(), "P1xP1": p1xp1(), "F1": f1()}


def threefolds() -> dict[str, Fan]:
    p3 = projective_space(3)
    return {
        "P3": p3,
        "P1xP2": product(projective_space(1), p2(), "P1xP2"),
        "P1xP1xP1": product(product(projective_space(1), projective_space(1)), projective_space(1), "P1xP1xP1"),
        "BlP3": star_blowup(p3, 0, "BlP3"),
    }


def random_unimodular(rng, n: int, steps: int = 12, bound: int = 3) -> list[tuple[int, ...]]:
    """Random element of GL(n, Z) as a list of columns, built from elementary moves."""
    cols = [list(c) for c in lattice.identity(n)]
    for _ in range(steps):
        if n == 1:
            break
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-bound, bound)
        cols[i] = [x + k * y for x, y in zip(cols[i], cols[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    cols = [cols[p] for p in perm]
    signs = [rng.choice((-1, 1)) for _ in range(n)]
    return [tuple(s * x for x in c) for s, c in zip(signs, cols)]
