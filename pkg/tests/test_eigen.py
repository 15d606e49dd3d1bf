from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import ASYM2, NETWORK5, CYCLE4, WALK3, SYM2, M, V
from tropluk.eigen import (
    background_greatest,
    full_eigenspace,
    is_luk_eigenvector,
    kl_generators,
    pure_generators,
    schur_complement,
)
from tropluk.errors import NoEigenvectorsError, PreconditionError
from tropluk.linalg import TropVector, shift
from tropluk.partitions import POSITIVE_CYCLE, POSITIVE_WALK, Partition, is_lambda_secure
from tropluk.scalar import ONE
from tropluk.spectral import kleene_star
from tropluk.tconvex import hull_membership

LAM = Fraction(3, 5)


def test_eigenvector_check_examples():
    A = M(WALK3)
    assert is_luk_eigenvector(A, LAM, V("1", "0.8", "0.7"))
    assert is_luk_eigenvector(A, LAM, TropVector.zeros(3))
    assert not is_luk_eigenvector(M(SYM2), "0.1", V("0.6", "0.5"))


def test_background_examples():
    assert background_greatest(M(WALK3), LAM) == V("0.4", "0.3", "0.3")
    assert background_greatest(M(SYM2), "0.1") == V("0.5", "0.5")
    assert background_greatest(M(WALK3), 1) == TropVector.zeros(3)


def test_pure_examples():
    gens = pure_generators(M(WALK3), LAM)
    assert gens.u == V("0.6", "0.5", "0.4")
    assert gens.w_list == ((0, V("1", "0.8", "0.7")),)
    with pytest.raises(NoEigenvectorsError) as err:
        pure_generators(M(SYM2), "0.1")
    assert err.value.condition == POSITIVE_CYCLE


def test_pure_at_lambda_one():
    A = M(CYCLE4)
    gens = pure_generators(A, 1)
    star = kleene_star(shift(A, 1))
    assert gens.u == TropVector.zeros(4)
    for k, w in gens.w_list:
        assert w == TropVector([max(Fraction(0), 1 + c) for c in star.col(k)])
        assert is_luk_eigenvector(A, 1, w)


def test_schur_examples():
    A = M(WALK3)
    assert schur_complement(A, LAM, Partition.from_L(3, [2])) == M([["-0.5"]])
    empty_K = Partition.from_L(3, [0, 1, 2])
    assert schur_complement(A, LAM, empty_K) == shift(A, ONE)
    assert schur_complement(A, LAM, Partition.from_L(3, [])).shape == (0, 0)


def test_kl_examples():
    A = M(WALK3)
    g = kl_generators(A, LAM, Partition.from_L(3, [2]))
    assert g.u == V("0.5", "0.4", "0")
    assert g.v_list == ((2, V("0.6", "0.5", "0.4")),)
    assert g.w_list == ((0, V("0.7", "0.5", "0")),)
    g = kl_generators(A, LAM, Partition.from_L(3, [1, 2]))
    assert g.u == V("0.4", "0", "0")
    assert g.v_list == ((1, V("0.5", "0.4", "0")), (2, V("0.4", "0", "0.3")))
    assert g.w_list == ((0, V("0.6", "0", "0")),)
    with pytest.raises(NoEigenvectorsError) as err:
        kl_generators(M(NETWORK5), "0.4", Partition.from_L(5, [3, 4]))
    assert err.value.condition == POSITIVE_WALK
    with pytest.raises(PreconditionError):
        kl_generators(A, LAM, Partition.from_L(3, []))


def test_full_eigenspace_examples():
    rep = full_eigenspace(M(WALK3), LAM)
    assert [p.L for p in rep.partitions] == [(), (2,), (1, 2), (0, 1, 2)]
    assert rep.greatest == V("1", "0.8", "0.7")
    rep0 = full_eigenspace(M(WALK3), 0)
    assert len(rep0.entries) == 1 and rep0.entries[0].kind == "background"
    assert rep0.entries[0].box == V("0.4", "0.3", "0.3")
    rep = full_eigenspace(M(ASYM2), "0.35")
    assert [e.kind for e in rep.entries] == ["background"]
    assert rep.entries[0].box == V("0.3", "0.6")


def test_full_eigenspace_at_one():
    rep = full_eigenspace(M(CYCLE4), 1)
    assert [e.kind for e in rep.entries] == ["background", "pure"]
    assert rep.entries[0].box == TropVector.zeros(4)


def test_sym2_large_lambda_has_only_box_eigenvectors():
    # every eigenvector lies in the box x <= 1 - lambda; the pure part is its corner
    A = M(SYM2)
    lam = Fraction(4, 5)
    mask_pts, mask = oracles.grid_eigen_mask(A.rows, lam)
    for x, ok in zip(mask_pts, mask):
        assert ok == all(v <= 4 for v in x)
    gens = pure_generators(A, lam)
    assert gens.vectors() == [V("0.2", "0.2")]


def _pattern_ok(x, part, lam):
    return all(x[k] >= 1 - lam for k in part.K) and all(x[l] <= 1 - lam for l in part.L)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_generators_are_eigenvectors(data):
    n = data.draw(st.integers(1, 4))
    A = M([[Fraction(data.draw(st.integers(0, 20)), 20) for _ in range(n)] for _ in range(n)])
    lam = Fraction(data.draw(st.integers(1, 19)), 20)
    rep = full_eigenspace(A, lam)
    for e in rep.entries:
        for v in e.vectors():
            assert oracles.is_eigenvector(A.rows, lam, list(v))
            assert _pattern_ok(v, e.partition, lam)
            assert v.leq(rep.greatest)


def test_pure_existence_matches_lambda_security():
    rng = oracles.seeded(21)
    for _ in range(40):
        n = rng.randint(1, 4)
        A = M(oracles.grid_matrix(rng, n))
        lam = Fraction(rng.randint(1, 20), 20)
        try:
            pure_generators(A, lam)
            exists = True
        except NoEigenvectorsError:
            exists = False
        assert exists == is_lambda_secure(A, lam).secure


def test_greatest_dominates_grid_eigenvectors():
    rng = oracles.seeded(4)
    for _ in range(20):
        A = oracles.grid_matrix(rng, 2)
        lam = Fraction(rng.randint(1, 19), 20)
        rep = full_eigenspace(M(A), lam)
        pts, mask = oracles.grid_eigen_mask(A, lam)
        top = [v * 20 for v in rep.greatest]
        for x in pts[mask]:
            assert all(a <= b for a, b in zip(x, top))


def test_grid_equivalence_small():
    rng = oracles.seeded(8)
    for _ in range(15):
        n = rng.randint(1, 2)
        A = oracles.grid_matrix(rng, n)
        lam = Fraction(rng.randint(1, 19), 20)
        rep = full_eigenspace(M(A), lam)
        pts, mask = oracles.grid_eigen_mask(A, lam)
        for x, ok in zip(pts, mask):
            x = TropVector([Fraction(int(v), 20) for v in x])
            covered = False
            for e in rep.entries:
                if e.kind == "background":
                    covered |= x.leq(e.box)
                else:
                    covered |= hull_membership(x, e.vectors()).member
            assert covered == bool(ok)
