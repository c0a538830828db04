import random

import pytest
from hypothesis import given, strategies as st

from toricample import catalog
from toricample.errors import FanError
from toricample.fan import build_fan, is_complete, is_smooth, transform
from toricample.polytope import all_two_faces_triangular, find_ample_divisor, is_simplex, polytope_from_divisor
from toricample.splitting import Verdict
from toricample.theorem import (canonical_surface_code, census, enumerate_smooth_surfaces,
                                is_projective_space_fan, verify_theorem)
from strategies import unimodular


def test_is_projective_space_fan(p2, f1):
    assert is_projective_space_fan(p2)
    assert not is_projective_space_fan(f1)
    for n in range(1, 5):
        assert is_projective_space_fan(catalog.projective_space(n))
    with pytest.raises(FanError, match="not smooth"):
        build_fan(2, [(1, 0), (0, 1), (-1, -2)], [(0, 1), (1, 2), (2, 0)])


def test_verify_theorem_examples(p3, f1, p1xp1):
    r = verify_theorem(p3)
    assert r.classification.verdict is Verdict.AMPLE
    assert r.is_pn and r.polytope_checks.triangular and r.polytope_checks.simplex and r.passed
    r = verify_theorem(f1)
    assert r.classification.verdict is Verdict.NOT_NEF and r.passed and r.polytope_checks is None
    r = verify_theorem(p1xp1)
    assert r.classification.verdict is Verdict.NEF_NOT_AMPLE and r.passed


def test_verify_with_explicit_divisor(p2):
    r = verify_theorem(p2, (2, 0, 1))
    assert r.passed and r.polytope_checks.divisor == (2, 0, 1)


def test_surface_codes(p2, p1xp1, f1):
    # v_{i-1} + v_{i+1} = -d_i v_i: on P2, (1,0) + (-1,-1) = -1 * (0,1), so d = 1
    assert canonical_surface_code(p2) == (1, 1, 1)
    assert canonical_surface_code(p1xp1) == (0, 0, 0, 0)
    # F1 in ccw order (1,0),(0,1),(-1,0),(-1,-1) gives (1, 0, -1, 0)
    assert canonical_surface_code(f1) == (-1, 0, 1, 0)
    assert canonical_surface_code(catalog.hirzebruch(3)) == (-3, 0, 3, 0)
    with pytest.raises(FanError):
        canonical_surface_code(catalog.projective_space(3))


@given(unimodular(2), st.randoms())
def test_code_invariance(m, rnd):
    for fan in enumerate_smooth_surfaces(6, 2):
        code = canonical_surface_code(fan)
        assert canonical_surface_code(transform(fan, m)) == code
        perm = list(range(len(fan.rays)))
        rnd.shuffle(perm)
        inv = {old: new for new, old in enumerate(perm)}
        relabeled = build_fan(2, [fan.rays[i] for i in perm],
                              [[inv[i] for i in c] for c in fan.max_cones])
        assert canonical_surface_code(relabeled) == code


def test_enumeration_examples():
    codes = lambda fans: [canonical_surface_code(f) for f in fans]
    assert codes(enumerate_smooth_surfaces(3, 3)) == [(1, 1, 1)]
    assert codes(enumerate_smooth_surfaces(4, 1)) == [(-1, 0, 1, 0), (0, 0, 0, 0), (1, 1, 1)]
    # by hand: P2, F0..F3, and three 5-ray surfaces (Bl2 P2, Bl F2, Bl F3 = Bl F2 at the other corner)
    assert codes(enumerate_smooth_surfaces(5, 3)) == [
        (-3, -1, -1, 2, 0), (-3, 0, 3, 0), (-2, -1, -1, 1, 0), (-2, 0, 2, 0),
        (-1, -1, -1, 0, 0), (-1, 0, 1, 0), (0, 0, 0, 0), (1, 1, 1),
    ]


def test_enumeration_closure_and_monotonicity():
    prev = set()
    for rays, bound in [(4, 1), (5, 2), (6, 2), (6, 3), (7, 3)]:
        fans = enumerate_smooth_surfaces(rays, bound)
        codes = [canonical_surface_code(f) for f in fans]
        assert codes == sorted(set(codes))
        for f in fans:
            assert is_smooth(f)[0] and is_complete(f)
            assert len(f.rays) <= rays and max(map(abs, canonical_surface_code(f))) <= bound
        assert prev <= set(codes)
        prev = set(codes)


def test_census_small():
    c = census(3, 1)
    assert [(r.code, r.classification.verdict) for r in c.rows] == [((1, 1, 1), Verdict.AMPLE)]


def test_census_7_3():
    c = census(7, 3)
    assert len(c.rows) == 28
    assert c.summary == {"Ample": 1, "NefNotAmple": 1, "NotNef": 26}
    nef = {r.code for r in c.rows if r.classification.verdict is not Verdict.NOT_NEF}
    assert nef == {(1, 1, 1), (0, 0, 0, 0)}


def test_census_parallel_matches_serial():
    a, b = census(6, 2), census(6, 2, workers=2)
    assert [(r.code, r.classification) for r in a.rows] == [(r.code, r.classification) for r in b.rows]


def test_simplex_iff_triangular_on_census():
    for fan in enumerate_smooth_surfaces(7, 3):
        P = polytope_from_divisor(fan, find_ample_divisor(fan))
        assert all_two_faces_triangular(P)[0] == is_simplex(P)
