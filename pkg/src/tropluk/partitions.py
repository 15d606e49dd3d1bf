"""Security of partitions of the weighted digraph of ``A - lambda``.

A partition ``(K, L)`` is secure when every walk that starts in ``L`` and
then stays in ``K`` has nonpositive weight.  The extreme cases follow the
usual conventions: ``(empty, [n])`` is always secure and ``([n], empty)`` is
secure iff the whole graph is lambda-secure (every walk, offset by
``-lambda``, is nonpositive).

Insecure verdicts come with a concrete witness walk whose weight can be
re-checked with :func:`tropluk.spectral.walk_weight`.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import PreconditionError
from .linalg import check_unit_matrix, mat_mul, shift
from .scalar import BOTTOM, TOP, ZERO, format_scalar, to_scalar
from .spectral import (
    _floyd_warshall,
    best_walk,
    critical_structure,
    kleene_star,
    longest_walk_closure,
    max_cycle_mean,
    walk_weight,
)

POSITIVE_CYCLE = "positive-cycle-in-K"
POSITIVE_WALK = "positive-walk-from-L"
WALK_EXCEEDS_LAMBDA = "walk-exceeds-lambda"


@dataclass(frozen=True)
class Partition:
    """Disjoint index sets ``K`` and ``L`` covering ``0..n-1``."""

    n: int
    K: tuple
    L: tuple

    def __post_init__(self):
        K, L = tuple(sorted(self.K)), tuple(sorted(self.L))
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "L", L)
        if set(K) & set(L) or sorted(K + L) != list(range(self.n)):
            raise PreconditionError(f"K={K}, L={L} is not a partition of 0..{self.n - 1}")

    @classmethod
    def from_L(cls, n, L):
        L = set(L)
        return cls(n, tuple(i for i in range(n) if i not in L), tuple(L))

    @classmethod
    def from_K(cls, n, K):
        K = set(K)
        return cls(n, tuple(K), tuple(i for i in range(n) if i not in K))

    @property
    def is_proper(self):
        return bool(self.K) and bool(self.L)

    def sort_key(self):
        return (len(self.L), self.L)

    def __str__(self):
        def fmt(s):
            return "{" + ",".join(str(i + 1) for i in s) + "}"

        return f"(K={fmt(self.K)}, L={fmt(self.L)})"


@dataclass(frozen=True)
class SecurityVerdict:
    """Outcome of a security test.

    ``weight`` is the witness walk's weight in the graph of ``A - lambda``.
    For the lambda-security test the walk violates ``-lambda + w <= 0``;
    otherwise ``weight > 0``.
    """

    secure: bool
    witness: tuple = None
    weight: object = None
    failed_condition: str = None


SECURE = SecurityVerdict(True)


def _check_lambda(lam, low_open=True, high_open=True):
    lam = to_scalar(lam)
    ok = (lam > 0 if low_open else lam >= 0) and (lam < 1 if high_open else lam <= 1)
    if not ok:
        raise PreconditionError(f"lambda = {format_scalar(lam)} is out of range for this test")
    return lam


def _positive_cycle(block):
    """Positions of a cycle of maximum mean; block must have rho > 0."""
    profile = critical_structure(block)
    out = {}
    for u, v in profile.critical_edges:
        out.setdefault(u, v)
    node = profile.representatives[0]
    order = []
    while node not in order:
        order.append(node)
        node = out[node]
    return order[order.index(node):]


def _loops_needed(offset, cycle_weight):
    """Least m >= 1 with offset + m * cycle_weight > 0."""
    return max(1, floor(-offset / cycle_weight) + 1)


def is_lambda_secure(A, lam):
    """lambda-security of the graph of ``A - lambda``."""
    check_unit_matrix(A)
    lam = _check_lambda(lam, high_open=False)
    B = shift(A, lam)
    n = B.nrows
    if max_cycle_mean(B) > 0:
        cycle = _positive_cycle(B)
        w = walk_weight(B, cycle + cycle[:1])
        m = _loops_needed(-lam, w)
        walk = tuple(cycle * m + cycle[:1])
        return SecurityVerdict(False, walk, walk_weight(B, walk), POSITIVE_CYCLE)
    star = kleene_star(B)
    best, where = ZERO, None
    for i in range(n):
        for j in range(n):
            if i != j and star[i, j] > best:
                best, where = star[i, j], (i, j)
    if best <= lam:
        return SECURE
    walk = tuple(best_walk(B, *where))
    return SecurityVerdict(False, walk, walk_weight(B, walk), WALK_EXCEEDS_LAMBDA)


def is_secure_partition(A, lam, part):
    check_unit_matrix(A)
    if part.n != A.nrows:
        raise PreconditionError(f"partition of {part.n} nodes for a {A.nrows}-node graph")
    if not part.K:
        return SECURE
    if not part.L:
        return is_lambda_secure(A, lam)
    lam = _check_lambda(lam)
    B = shift(A, lam)
    K, L = part.K, part.L
    BKK = B.submatrix(K, K)
    if max_cycle_mean(BKK) > 0:
        cycle = [K[p] for p in _positive_cycle(BKK)]
        w = walk_weight(B, cycle + cycle[:1])
        ell = L[0]
        m = _loops_needed(B[ell, cycle[0]], w)
        walk = tuple([ell] + cycle * m + cycle[:1])
        return SecurityVerdict(False, walk, walk_weight(B, walk), POSITIVE_CYCLE)
    D, succ = _floyd_warshall(BKK)
    star = kleene_star(BKK)
    best, where = ZERO, None
    for ell in L:
        for p0, k0 in enumerate(K):
            first = B[ell, k0]
            for p in range(len(K)):
                s = first + star[p0, p]
                if s > best:
                    best, where = s, (ell, p0, p)
    if where is None:
        return SECURE
    ell, p0, p = where
    tail = [p0] if p0 == p else best_walk(BKK, p0, p, succ)
    walk = tuple([ell] + [K[q] for q in tail])
    return SecurityVerdict(False, walk, walk_weight(B, walk), POSITIVE_WALK)


def secure_nodes(A, lam, K):
    """Nodes of ``K`` from which no walk inside ``K`` has positive weight."""
    K = tuple(sorted(K))
    if not K:
        raise PreconditionError("secure_nodes needs a nonempty K")
    check_unit_matrix(A)
    closure = longest_walk_closure(shift(A, to_scalar(lam)).submatrix(K, K))
    return tuple(
        k for p, k in enumerate(K) if all(v != TOP and v <= 0 for v in closure.rows[p])
    )


def least_secure_partition(A, lam):
    """The secure partition whose ``L`` is contained in every secure ``L``.

    Greedy descent from ``(empty, [n])``: move the smallest node of ``L``
    whose removal keeps the partition secure, until no move is possible.
    """
    lam = _check_lambda(lam)
    n = A.nrows
    L = list(range(n))
    moved = True
    while moved:
        moved = False
        for ell in L:
            candidate = Partition.from_L(n, [i for i in L if i != ell])
            if is_secure_partition(A, lam, candidate).secure:
                L.remove(ell)
                moved = True
                break
    return Partition.from_L(n, L)


def enumerate_secure_partitions(A, lam):
    """All secure partitions, ordered by ``|L|`` then lexicographically.

    Depth-first search from the least secure partition; from ``(K, L)`` the
    secure successors are exactly ``(K - k, L + k)`` for the nodes ``k``
    that are secure in the ``K`` block.
    """
    lam = _check_lambda(lam)
    n = A.nrows
    start = least_secure_partition(A, lam)
    seen = {start}
    stack = [start]
    while stack:
        part = stack.pop()
        if not part.K:
            continue
        for k in secure_nodes(A, lam, part.K):
            nxt = Partition.from_L(n, part.L + (k,))
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return sorted(seen, key=Partition.sort_key)


__all__ = [
    "POSITIVE_CYCLE",
    "POSITIVE_WALK",
    "WALK_EXCEEDS_LAMBDA",
    "Partition",
    "SecurityVerdict",
    "enumerate_secure_partitions",
    "is_lambda_secure",
    "is_secure_partition",
    "least_secure_partition",
    "secure_nodes",
]
