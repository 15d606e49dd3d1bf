import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import V
from tropluk.errors import NormalizationError
from tropluk.linalg import TropVector
from tropluk.scalar import BOTTOM
from tropluk.tconvex import (
    hull_membership,
    hull_membership_mask,
    minimal_generators,
    trop_convex_combine,
)

P = V("1", "0.8", "0.7")
Q = V("0.6", "0.5", "0.4")
grid = st.integers(0, 20).map(lambda k: Fraction(k, 20))


def test_combine_examples():
    assert trop_convex_combine([P, Q], ["-0.2", "0"]) == V("0.8", "0.6", "0.5")
    assert trop_convex_combine([P, Q], [0, BOTTOM]) == P
    assert trop_convex_combine([P, Q], [0, 0]) == P
    with pytest.raises(NormalizationError):
        trop_convex_combine([P, Q], ["-0.1", "-0.2"])


def test_membership_examples():
    verdict = hull_membership(V("0.8", "0.6", "0.5"), [P, Q])
    assert verdict.member
    assert verdict.coeffs == (Fraction(-1, 5), 0)
    verdict = hull_membership(V("1", "1", "1"), [P, Q])
    assert not verdict.member
    assert verdict.witness == 1
    for v in (P, Q):
        assert hull_membership(v, [P, Q]).member


def test_scaled_copy_is_not_a_member():
    verdict = hull_membership(V("0", "-0.2", "-0.3"), [P])
    assert not verdict.member and verdict.witness is None


def test_minimal_generators_examples():
    mid = V("0.8", "0.6", "0.5")
    assert minimal_generators([P, Q, mid]) == [P, Q]
    assert minimal_generators([P, P, Q]) == [P, Q]
    u, v3, w1 = V("0.5", "0.4", "0"), V("0.6", "0.5", "0.4"), V("0.7", "0.5", "0")
    assert minimal_generators([u, v3, w1]) == [u, v3, w1]


@st.composite
def point_sets(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(1, 4))
    pts = [TropVector([draw(grid) for _ in range(n)]) for _ in range(m)]
    return n, pts


@settings(max_examples=80, deadline=None)
@given(point_sets(), st.data())
def test_round_trip(ps, data):
    n, pts = ps
    coeffs = [data.draw(st.integers(-20, 0).map(lambda k: Fraction(k, 20))) for _ in pts]
    coeffs[data.draw(st.integers(0, len(pts) - 1))] = Fraction(0)
    x = trop_convex_combine(pts, coeffs)
    verdict = hull_membership(x, pts)
    assert verdict.member
    assert trop_convex_combine(pts, verdict.coeffs) == x


@settings(max_examples=80, deadline=None)
@given(point_sets())
def test_minimal_generators_span(ps):
    _, pts = ps
    kept = minimal_generators(pts)
    for p in pts:
        assert hull_membership(p, kept).member
    for i, p in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        assert not others or not hull_membership(p, others).member


def test_membership_against_grid_search():
    # coarse check: any combination found on the coefficient grid is confirmed
    pts = [V("0.9", "0.2", "0.5"), V("0.3", "0.8", "0.4"), V("0.5", "0.5", "1")]
    steps = [Fraction(-k, 20) for k in range(21)]
    found = set()
    for coeffs in itertools.product(steps, repeat=3):
        if max(coeffs) == 0:
            found.add(trop_convex_combine(pts, coeffs))
    for x in found:
        assert hull_membership(x, pts).member
    for x in itertools.product([Fraction(k, 10) for k in range(11)], repeat=3):
        x = TropVector(x)
        if hull_membership(x, pts).member and all(v >= 0 for v in x):
            # members lying on the coefficient grid must have been found
            c = hull_membership(x, pts).coeffs
            if all(k in steps for k in c):
                assert x in found


@settings(max_examples=40, deadline=None)
@given(point_sets(), st.data())
def test_batch_mask_matches_single(ps, data):
    n, pts = ps
    xs = [[data.draw(grid) for _ in range(n)] for _ in range(12)]
    mask = hull_membership_mask(xs, pts)
    assert mask.dtype == np.bool_
    assert list(mask) == [hull_membership(TropVector(x), pts).member for x in xs]


def test_batch_mask_large_values():
    pts = [V(str(10**20), "0"), V("0", str(10**20))]
    xs = [[10**20, 10**20], [10**20, 0], [1, 2]]
    assert list(hull_membership_mask(xs, pts)) == [True, True, False]
