"""The max-Lukasiewicz eigenproblem ``A (x)_L x = lambda (x)_L x``.

Eigenvectors are sorted by which side of ``1 - lambda`` each coordinate
falls on.  For a partition ``(K, L)`` the ``(K, L)``-eigenvectors satisfy
``x_K >= 1 - lambda`` and ``x_L <= 1 - lambda``; they form a tropical
polytope with explicitly computable generators:

* background (``K`` empty): the box ``0 <= x <= background_greatest``;
* pure (``L`` empty): hull of ``u`` and one ``w`` per critical class;
* proper ``(K, L)``: hull of ``u``, one ``v`` per ``l in L`` and one ``w``
  per critical class of the ``K`` block.
"""

from dataclasses import dataclass, field

from .errors import NoEigenvectorsError, PreconditionError
from .linalg import (
    TropVector,
    cg_inverse,
    check_unit_matrix,
    check_unit_vector,
    luk_mat_vec,
    luk_scalar_vec,
    mat_add,
    mat_mul,
    mat_vec,
    mat_vec_dual,
    shift,
    vec_add,
)
from .partitions import (
    POSITIVE_CYCLE,
    POSITIVE_WALK,
    WALK_EXCEEDS_LAMBDA,
    Partition,
    enumerate_secure_partitions,
    least_secure_partition,
)
from .scalar import BOTTOM, ONE, ZERO, format_scalar, to_scalar
from .spectral import critical_structure, kleene_star, max_cycle_mean


def _lambda(lam):
    lam = to_scalar(lam)
    if lam == BOTTOM or not 0 <= lam <= 1:
        raise PreconditionError(f"lambda = {format_scalar(lam)} is outside [0, 1]")
    return lam


def is_luk_eigenvector(A, lam, x):
    """Exact test of ``A (x)_L x == lam (x)_L x``."""
    check_unit_matrix(A)
    check_unit_vector(x)
    return luk_mat_vec(A, x) == luk_scalar_vec(_lambda(lam), x)


def background_greatest(A, lam):
    """Greatest eigenvector with all coordinates ``<= 1 - lam``.

    Every ``0 <= x <= background_greatest(A, lam)`` is an eigenvector.
    """
    check_unit_matrix(A)
    lam = _lambda(lam)
    n = A.nrows
    return TropVector(
        [min([1 - lam] + [1 - A[i, j] for i in range(n)]) for j in range(A.ncols)]
    )


@dataclass(frozen=True)
class KLGenerators:
    """Generators of the ``(K, L)``-eigenspace (its tropical convex hull).

    ``v_list`` and ``w_list`` hold ``(index, vector)`` pairs.
    """

    partition: Partition
    lam: object
    u: TropVector
    v_list: tuple = ()
    w_list: tuple = ()

    def vectors(self):
        return [self.u] + [v for _, v in self.v_list] + [w for _, w in self.w_list]

    def greatest(self):
        out = self.u
        for v in self.vectors():
            out = vec_add(out, v)
        return out


def _full(n, parts):
    """Assemble a length-``n`` vector from labelled sub-vectors."""
    entries = [None] * n
    for sub in parts:
        for label, value in zip(sub.labels, sub.entries):
            entries[label] = value
    return TropVector(entries)


def pure_generators(A, lam):
    """Generators of the pure eigenvectors (all coordinates ``>= 1 - lam``).

    Raises NoEigenvectorsError when ``rho(A) > lam`` or some walk of
    ``A - lam`` is heavier than ``lam``.
    """
    check_unit_matrix(A)
    lam = _lambda(lam)
    if lam == 0:
        raise PreconditionError("pure eigenvectors need lambda > 0")
    n = A.nrows
    profile = critical_structure(A)
    if profile.rho > lam:
        raise NoEigenvectorsError(POSITIVE_CYCLE, "rho(A) exceeds lambda")
    star = kleene_star(shift(A, lam))
    u = mat_vec(star, TropVector.constant(n, 1 - lam))
    if u.max() > 1:
        raise NoEigenvectorsError(WALK_EXCEEDS_LAMBDA, "a walk of A - lambda is heavier than lambda")
    ws = []
    if profile.rho == lam:
        bound = mat_vec_dual(cg_inverse(star), TropVector.ones(n))
        for k in profile.representatives:
            col = star.col(k)
            ws.append((k, vec_add(u, TropVector([c + bound[k] for c in col]))))
    return KLGenerators(Partition(n, tuple(range(n)), ()), lam, u, (), tuple(ws))


def schur_complement(A, lam, part):
    """``A1_LL + A1_LK (A_lam,KK)* A_lam,KL`` with ``A1 = A - 1``, ``A_lam = A - lam``.

    Rows and columns keep the labels of ``L``.
    """
    lam = to_scalar(lam)
    K, L = part.K, part.L
    A1 = shift(A, ONE)
    base = A1.submatrix(L, L)
    if not K:
        return base
    B = shift(A, lam)
    star = kleene_star(B.submatrix(K, K))
    through = mat_mul(mat_mul(A1.submatrix(L, K), star), B.submatrix(K, L))
    return mat_add(base, through)


def kl_generators(A, lam, part):
    """Generators of the ``(K, L)``-eigenvectors for a proper partition.

    Raises NoEigenvectorsError when the partition is insecure.
    """
    check_unit_matrix(A)
    lam = _lambda(lam)
    if not 0 < lam < 1:
        raise PreconditionError("(K, L)-eigenvectors need 0 < lambda < 1")
    if not part.is_proper:
        raise PreconditionError("K and L must both be nonempty; use pure_generators or the background box")
    K, L = part.K, part.L
    B = shift(A, lam)
    BKK = B.submatrix(K, K)
    rho_kk = max_cycle_mean(BKK)
    if rho_kk > 0:
        raise NoEigenvectorsError(POSITIVE_CYCLE, "rho(A_KK) exceeds lambda")
    star = kleene_star(BKK)
    if mat_vec(mat_mul(B.submatrix(L, K), star), TropVector.zeros(len(K))).max() > 0:
        raise NoEigenvectorsError(POSITIVE_WALK, "a walk from L into K has positive weight")

    A1 = shift(A, ONE)
    BKL = B.submatrix(K, L)
    floor_K = TropVector.constant(len(K), 1 - lam, K)
    zeros_L = TropVector.zeros(len(L), L)
    schur = schur_complement(A, lam, part)
    x_bound = mat_vec_dual(cg_inverse(schur), zeros_L)
    x_bound = TropVector([min(b, 1 - lam) for b in x_bound], L)
    into_K = mat_mul(A1.submatrix(L, K), star)
    z_bound = mat_vec_dual(cg_inverse(into_K), zeros_L)

    def x_K(x_L, z=None):
        rhs = vec_add(mat_vec(BKL, x_L), floor_K)
        if z is not None:
            rhs = vec_add(rhs, z)
        return TropVector(mat_vec(star, rhs).entries, K)

    n = A.nrows
    u = _full(n, [x_K(zeros_L), zeros_L])
    vs = []
    for p, ell in enumerate(L):
        x_L = zeros_L.with_entry(p, x_bound[p])
        vs.append((ell, _full(n, [x_K(x_L), x_L])))
    ws = []
    if rho_kk == 0:
        for p in critical_structure(BKK).representatives:
            z = TropVector([z_bound[p] if q == p else BOTTOM for q in range(len(K))], K)
            ws.append((K[p], _full(n, [x_K(zeros_L, z), zeros_L])))
    return KLGenerators(part, lam, u, tuple(vs), tuple(ws))


@dataclass(frozen=True)
class EigEntry:
    """One secure partition and its eigenvectors.

    ``kind`` is ``"background"`` (``box`` set: all ``0 <= x <= box``),
    ``"pure"`` or ``"kl"`` (``generators`` set).
    """

    partition: Partition
    kind: str
    generators: KLGenerators = None
    box: TropVector = None

    def vectors(self):
        if self.generators is not None:
            return self.generators.vectors()
        return [self.box]

    def greatest(self):
        return self.box if self.generators is None else self.generators.greatest()


@dataclass(frozen=True)
class EigReport:
    lam: object
    entries: tuple
    least: Partition
    greatest: TropVector = field(default=None)

    def entry(self, part):
        for e in self.entries:
            if e.partition == part:
                return e
        raise KeyError(str(part))

    @property
    def partitions(self):
        return [e.partition for e in self.entries]


def eigenspace_for(A, lam, part):
    """The eigenspace piece of one partition (raises if it is insecure)."""
    lam = _lambda(lam)
    n = A.nrows
    if not part.K:
        return EigEntry(part, "background", box=background_greatest(A, lam))
    if not part.L:
        return EigEntry(part, "pure", generators=pure_generators(A, lam))
    return EigEntry(part, "kl", generators=kl_generators(A, lam, part))


def full_eigenspace(A, lam):
    """Every secure partition with its generators, plus the greatest eigenvector."""
    check_unit_matrix(A)
    lam = _lambda(lam)
    n = A.nrows
    background = Partition.from_L(n, range(n))
    if lam == 0:
        entry = eigenspace_for(A, lam, background)
        return EigReport(lam, (entry,), background, entry.box)
    if lam == 1:
        entries = (
            eigenspace_for(A, lam, background),
            eigenspace_for(A, lam, Partition.from_K(n, range(n))),
        )
        least = entries[1].partition
    else:
        entries = tuple(eigenspace_for(A, lam, p) for p in enumerate_secure_partitions(A, lam))
        least = least_secure_partition(A, lam)
    report = EigReport(lam, entries, least)
    return EigReport(lam, entries, least, report.entry(least).greatest())


__all__ = [
    "EigEntry",
    "EigReport",
    "KLGenerators",
    "Partition",
    "background_greatest",
    "eigenspace_for",
    "full_eigenspace",
    "is_luk_eigenvector",
    "kl_generators",
    "pure_generators",
    "schur_complement",
]
