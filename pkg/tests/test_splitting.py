import pytest
from hypothesis import given

from toricample import catalog, lattice
from toricample.fan import transform
from toricample.splitting import (Verdict, all_splittings, associated_characters, classify_tangent,
                                  splitting_counter, splitting_type, wall_relation)
from strategies import unimodular


def substitution_holds(fan, wall, b):
    total = lattice.add(fan.rays[wall.opposite_a], fan.rays[wall.opposite_b])
    for coeff, i in zip(b, wall.shared_rays):
        total = lattice.add(total, lattice.scale(coeff, fan.rays[i]))
    return lattice.is_zero(total)


def test_associated_characters(p2, f1):
    assert associated_characters(p2, 1).characters == ((-1, 1), (-1, 0))
    std = catalog.projective_space(3)
    assert associated_characters(std, 0).characters == tuple(lattice.identity(3))
    # F1 cone {(-1,0),(-1,-1)} is cone 2 with generators in order (-1,-1), (-1,0)
    assert set(associated_characters(f1, 2).characters) == {(-1, 1), (0, -1)}


@pytest.mark.parametrize("name, ray, b", [("P2", 2, 1), ("P1xP1", 2, 0), ("F1", 3, -1)])
def test_wall_relation(name, ray, b):
    fan = catalog.golden_fans()[name]
    wall = fan.wall_for([ray])
    rel = wall_relation(fan, wall)
    assert rel.b == (b,)
    assert substitution_holds(fan, wall, rel.b)


# dual cones of the two sides as printed for the three surfaces
PAPER_DUAL_CONES = {
    "P2": (2, {(-1, 0), (-1, 1)}, {(0, -1), (1, -1)}, [1, 2]),
    "P1xP1": (2, {(-1, 0), (0, 1)}, {(-1, 0), (0, -1)}, [0, 2]),
    "F1": (3, {(-1, 0), (0, 1)}, {(-1, 1), (0, -1)}, [-1, 2]),
}


@pytest.mark.parametrize("name", PAPER_DUAL_CONES)
def test_golden_splittings(name):
    fan = catalog.golden_fans()[name]
    ray, dual_a, dual_b, multiset = PAPER_DUAL_CONES[name]
    st = splitting_type(fan, fan.wall_for([ray]))
    assert {s.u for s in st.summands} == dual_a
    assert {s.u_prime for s in st.summands} == dual_b
    assert st.multiset == multiset


def test_classification(p2, p1xp1, f1):
    assert classify_tangent(p2).verdict is Verdict.AMPLE
    nef = classify_tangent(p1xp1)
    assert nef.verdict is Verdict.NEF_NOT_AMPLE
    assert min(splitting_type(p1xp1, nef.witness_walls[0]).multiset) == 0
    bad = classify_tangent(f1)
    assert bad.verdict is Verdict.NOT_NEF
    assert bad.witness_walls == (f1.wall_for([3]),)


FANS = [catalog.p2(), catalog.p1xp1(), catalog.f1(), catalog.hirzebruch(2), catalog.hirzebruch(5),
        *catalog.threefolds().values(), catalog.star_blowup(catalog.p2(), 0)]


@pytest.mark.parametrize("fan", FANS, ids=lambda f: f.name)
def test_summand_invariants(fan):
    for st in all_splittings(fan):
        shared = [fan.rays[i] for i in st.wall.shared_rays]
        assert sum(s.a == 2 and s.u_prime == lattice.neg(s.u) == lattice.neg(st.distinguished)
                   for s in st.summands) >= 1
        for s in st.summands:
            d = lattice.sub(s.u, s.u_prime)
            assert d == lattice.scale(s.a, st.distinguished)
            assert all(lattice.pair(d, v) == 0 for v in shared)
        rel = wall_relation(fan, st.wall)
        assert st.multiset == sorted(list(rel.b) + [2])
        assert sum(st.multiset) == 2 + sum(rel.b)


@pytest.mark.parametrize("fan", FANS, ids=lambda f: f.name)
def test_lemma_matching_is_forced(fan):
    from toricample.splitting import aligned_generators
    for w in fan.walls:
        ga, gb = aligned_generators(fan, w)
        u, up = lattice.dual_basis(ga), lattice.dual_basis(gb)
        for i in range(fan.dim):
            for j in range(fan.dim):
                perp = all(lattice.pair(lattice.sub(u[i], up[j]), v) == 0 for v in ga[:-1])
                assert perp == (i == j)


@pytest.mark.parametrize("fan", FANS, ids=lambda f: f.name)
def test_side_symmetry(fan):
    for w in fan.walls:
        st, sw = splitting_type(fan, w), splitting_type(fan, w.swapped())
        assert st.multiset == sw.multiset
        assert sw.distinguished == lattice.neg(st.distinguished)


@pytest.mark.parametrize("n", range(1, 6))
def test_projective_space(n):
    fan = catalog.projective_space(n)
    assert splitting_counter(fan) == {tuple([1] * (n - 1) + [2]): len(fan.walls)}
    assert classify_tangent(fan).verdict is Verdict.AMPLE


@given(unimodular(2))
def test_automorphism_invariance_surfaces(m):
    for fan in (catalog.p2(), catalog.p1xp1(), catalog.f1()):
        assert splitting_counter(transform(fan, m)) == splitting_counter(fan)


@given(unimodular(3))
def test_automorphism_invariance_threefolds(m):
    fan = catalog.threefolds()["BlP3"]
    g = transform(fan, m)
    assert [splitting_type(g, w).multiset for w in g.walls] == [splitting_type(fan, w).multiset for w in fan.walls]
