"""Splitting types of the tangent bundle on torus-invariant curves.

For a wall tau between maximal cones sigma (side a) and sigma' (side b),
the generators of both sides are listed as the shared rays v_1..v_{n-1}
followed by the opposite ray (v_n, resp. v'_n).  With that alignment the
dual bases u, u' match positionally: u_i - u'_i vanishes on tau, and the
difference is a_i times u_n.  T_X restricted to the curve is then
O(a_1) + ... + O(a_n) with a_n = 2.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from . import lattice
from .errors import ConsistencyError
from .fan import Fan, Wall, require_complete
from .lattice import Vector


@dataclass(frozen=True)
class AssociatedCharacters:
    cone: int
    characters: tuple[Vector, ...]


@dataclass(frozen=True)
class WallRelation:
    wall: Wall
    b: tuple[int, ...]


@dataclass(frozen=True)
class Summand:
    u: Vector
    u_prime: Vector
    a: int


@dataclass(frozen=True)
class SplittingType:
    wall: Wall
    summands: tuple[Summand, ...]
    distinguished: Vector

    @property
    def multiset(self) -> list[int]:
        return sorted(s.a for s in self.summands)

    def to_dict(self) -> dict:
        return {
            "wall": self.wall.to_dict(),
            "multiset": self.multiset,
            "distinguished_character": list(self.distinguished),
            "summands": [{"u": list(s.u), "u_prime": list(s.u_prime), "a": s.a} for s in self.summands],
        }


class Verdict(str, enum.Enum):
    AMPLE = "Ample"
    NEF_NOT_AMPLE = "NefNotAmple"
    NOT_NEF = "NotNef"


@dataclass(frozen=True)
class PositivityClass:
    verdict: Verdict
    witness_walls: tuple[Wall, ...] = ()

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "witness_walls": [w.to_dict() for w in self.witness_walls]}


def associated_characters(fan: Fan, cone_index: int) -> AssociatedCharacters:
    """Characters of the local frame of T_X on the chart of a maximal cone."""
    return AssociatedCharacters(cone_index, tuple(lattice.dual_basis(fan.cone_rays(cone_index))))


def aligned_generators(fan: Fan, wall: Wall) -> tuple[list[Vector], list[Vector]]:
    shared = [fan.rays[i] for i in wall.shared_rays]
    return shared + [fan.rays[wall.opposite_a]], shared + [fan.rays[wall.opposite_b]]


def wall_relation(fan: Fan, wall: Wall) -> WallRelation:
    gens_a, _ = aligned_generators(fan, wall)
    x = lattice.solve_unimodular(gens_a, fan.rays[wall.opposite_b])
    if x[-1] != -1:
        raise ConsistencyError(f"wall not smooth: coefficient of v_n is {x[-1]}")
    b = tuple(-c for c in x[:-1])
    total = lattice.add(fan.rays[wall.opposite_a], fan.rays[wall.opposite_b])
    for coeff, i in zip(b, wall.shared_rays):
        total = lattice.add(total, lattice.scale(coeff, fan.rays[i]))
    if not lattice.is_zero(total):
        raise ConsistencyError("wall relation does not sum to zero")
    return WallRelation(wall, b)


def splitting_type(fan: Fan, wall: Wall) -> SplittingType:
    gens_a, gens_b = aligned_generators(fan, wall)
    u = lattice.dual_basis(gens_a)
    u_prime = lattice.dual_basis(gens_b)
    u_n = u[-1]
    shared = gens_a[:-1]
    summands = []
    for ui, upi in zip(u, u_prime):
        d = lattice.sub(ui, upi)
        if any(lattice.pair(d, v) for v in shared):
            raise ConsistencyError("character difference is not orthogonal to the wall")
        a = lattice.multiple_of(d, u_n)
        if a is None:
            raise ConsistencyError("character difference is not a multiple of u_n")
        summands.append(Summand(ui, upi, a))
    if summands[-1].a != 2 or u_prime[-1] != lattice.neg(u_n):
        raise ConsistencyError("distinguished summand is not O(2)")
    rel = wall_relation(fan, wall)
    if tuple(s.a for s in summands[:-1]) != rel.b:
        raise ConsistencyError(f"splitting {[s.a for s in summands]} disagrees with wall relation {list(rel.b)}")
    return SplittingType(wall, tuple(summands), u_n)


def all_splittings(fan: Fan) -> list[SplittingType]:
    require_complete(fan)
    return [splitting_type(fan, w) for w in fan.walls]


def classify_tangent(fan: Fan) -> PositivityClass:
    """Ample / nef positivity of T_X via its restrictions to all invariant curves."""
    first_zero = first_negative = None
    for st in all_splittings(fan):
        lo = min(s.a for s in st.summands)
        if lo < 0 and first_negative is None:
            first_negative = st.wall
        elif lo == 0 and first_zero is None:
            first_zero = st.wall
    if first_negative is not None:
        return PositivityClass(Verdict.NOT_NEF, (first_negative,))
    if first_zero is not None:
        return PositivityClass(Verdict.NEF_NOT_AMPLE, (first_zero,))
    return PositivityClass(Verdict.AMPLE)


def splitting_counter(fan: Fan) -> Counter:
    """Multiset of splitting types over all walls (each as a sorted tuple)."""
    return Counter(tuple(st.multiset) for st in all_splittings(fan))
