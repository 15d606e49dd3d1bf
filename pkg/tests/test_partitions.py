from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import NETWORK5, WALK3, SYM2, M
from tropluk.eigen import eigenspace_for
from tropluk.errors import NoEigenvectorsError, PreconditionError
from tropluk.linalg import shift
from tropluk.partitions import (
    POSITIVE_CYCLE,
    POSITIVE_WALK,
    Partition,
    enumerate_secure_partitions,
    is_lambda_secure,
    is_secure_partition,
    least_secure_partition,
    secure_nodes,
)
from tropluk.spectral import walk_weight

LAM = Fraction(3, 5)
NET_LAM = Fraction(2, 5)


def test_partition_validation():
    p = Partition(3, (2, 0), (1,))
    assert p.K == (0, 2) and str(p) == "(K={1,3}, L={2})"
    with pytest.raises(PreconditionError):
        Partition(3, (0, 1), (1, 2))


def test_lambda_security_examples():
    assert is_lambda_secure(M(WALK3), LAM).secure
    v = is_lambda_secure(M(SYM2), "0.1")
    assert not v.secure
    assert v.witness == (0, 0)
    assert v.failed_condition == POSITIVE_CYCLE
    B = shift(M(SYM2), "0.1")
    assert walk_weight(B, v.witness) == Fraction(2, 5)
    assert -Fraction(1, 10) + v.weight > 0
    assert is_lambda_secure(M([["0.3"]]), "0.3").secure


def test_lambda_security_reduces_to_cycle_mean():
    # closing a walk heavier than lambda with one edge (weight >= -lambda)
    # leaves a positive cycle, so only the cycle condition can fail here
    rng = oracles.seeded(2)
    for _ in range(60):
        n = rng.randint(1, 4)
        A = M(oracles.grid_matrix(rng, n))
        lam = Fraction(rng.randint(1, 20), 20)
        v = is_lambda_secure(A, lam)
        assert v.secure == (oracles.max_cycle_mean(A.rows) <= lam)
        assert v.failed_condition in (None, POSITIVE_CYCLE)


def test_network_examples():
    A = M(NETWORK5)
    assert is_secure_partition(A, NET_LAM, Partition.from_L(5, [0, 4])).secure
    v = is_secure_partition(A, NET_LAM, Partition.from_L(5, [3, 4]))
    assert not v.secure
    assert v.witness == (3, 1, 0)
    assert v.weight == Fraction(1, 10)
    assert v.failed_condition == POSITIVE_WALK
    assert is_secure_partition(A, NET_LAM, Partition.from_L(5, range(5))).secure


def test_secure_nodes_examples():
    A = M(WALK3)
    assert secure_nodes(A, LAM, [0, 1, 2]) == (2,)
    assert secure_nodes(A, LAM, [0, 1]) == (1,)
    assert secure_nodes(A, LAM, [0]) == (0,)


def test_least_partition_examples():
    assert least_secure_partition(M(WALK3), LAM) == Partition.from_L(3, [])
    # (0.2, 0.2) is a pure eigenvector, so the whole node set is secure here
    assert least_secure_partition(M(SYM2), "0.8") == Partition.from_L(2, [])


def test_enumeration_examples():
    parts = enumerate_secure_partitions(M(WALK3), LAM)
    assert [p.L for p in parts] == [(), (2,), (1, 2), (0, 1, 2)]
    parts = enumerate_secure_partitions(M(SYM2), "0.1")
    assert () not in [p.L for p in parts] and (0, 1) in [p.L for p in parts]
    parts = enumerate_secure_partitions(M(NETWORK5), NET_LAM)
    Ls = [p.L for p in parts]
    assert (0, 4) in Ls and (3, 4) not in Ls


def _positive_witness(A, lam, part, verdict):
    B = shift(A, lam)
    w = walk_weight(B, verdict.witness)
    assert w == verdict.weight
    if part.L:
        assert verdict.witness[0] in part.L
        assert all(k in part.K for k in verdict.witness[1:])
        assert w > 0
    else:
        assert -lam + w > 0


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_security_matches_walk_enumeration(data):
    n = data.draw(st.integers(1, 4))
    rows = [[Fraction(data.draw(st.integers(0, 20)), 20) for _ in range(n)] for _ in range(n)]
    lam = Fraction(data.draw(st.integers(1, 19)), 20)
    A = M(rows)
    L = data.draw(st.sets(st.integers(0, n - 1)))
    part = Partition.from_L(n, L)
    verdict = is_secure_partition(A, lam, part)
    assert verdict.secure == oracles.partition_secure(rows, lam, L)
    if not verdict.secure:
        _positive_witness(A, lam, part, verdict)


def test_enumeration_matches_brute_force_and_generators():
    rng = oracles.seeded(17)
    for _ in range(25):
        n = rng.randint(1, 4)
        rows = oracles.grid_matrix(rng, n)
        lam = Fraction(rng.randint(1, 19), 20)
        A = M(rows)
        parts = enumerate_secure_partitions(A, lam)
        assert [p.L for p in parts] == oracles.all_secure_L(rows, lam)
        least = least_secure_partition(A, lam)
        assert all(set(least.L) <= set(p.L) for p in parts)
        for size in range(2**n):
            L = [i for i in range(n) if size >> i & 1]
            part = Partition.from_L(n, L)
            try:
                eigenspace_for(A, lam, part)
                exists = True
            except NoEigenvectorsError:
                exists = False
            assert exists == (part in parts)
