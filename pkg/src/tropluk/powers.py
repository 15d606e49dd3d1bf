"""Max-Lukasiewicz matrix powers and orbits and their ultimate periodicity.

Every step is the max-plus step ``y = (A - 1) x + 0``.  Since all cycle
means of ``A - 1`` are nonpositive, the sequences are ultimately periodic:
they collapse to zero when ``rho(A) < 1`` and otherwise cycle with a period
tied to the cyclicity of the critical graph.
"""

from dataclasses import dataclass

from .errors import DomainError, PreconditionError
from .linalg import (
    TropMatrix,
    TropVector,
    check_unit_matrix,
    check_unit_vector,
    luk_mat_mul,
    mat_mul,
    mat_vec,
    shift,
)
from .scalar import ONE, ZERO
from .spectral import _periodic_sequence, _power, critical_structure, csr_factors, default_max_transient

ZERO_REGIME = "ZERO"
PERIODIC = "PERIODIC"


def matrix_of_ones(A):
    """0/1 matrix marking the entries of ``A`` equal to 1."""
    check_unit_matrix(A)
    return TropMatrix._raw(
        [[ONE if v == 1 else ZERO for v in r] for r in A.rows], A.row_labels, A.col_labels
    )


def _clip(M):
    return TropMatrix._raw([[max(v, ZERO) for v in r] for r in M.rows], M.row_labels, M.col_labels)


def _step_matrix(A1):
    return lambda P: _clip(mat_mul(A1, P))


def _step_vector(A1):
    return lambda v: TropVector._raw([max(e, ZERO) for e in mat_vec(A1, v).entries], v.labels)


def luk_power(A, t):
    """``A^{(x)_L t}`` for ``t >= 1`` by repeated Lukasiewicz products."""
    check_unit_matrix(A)
    if t < 1:
        raise DomainError(f"power exponent must be positive, got {t}")
    P = A
    for _ in range(t - 1):
        P = luk_mat_mul(A, P)
    return P


def luk_orbit(A, x, t):
    """``A^{(x)_L t} (x)_L x``; ``t = 0`` gives ``x``."""
    return luk_trajectory(A, x, t)[-1]


def luk_trajectory(A, x, t):
    """The orbit points for ``0..t``."""
    check_unit_matrix(A)
    x = x if isinstance(x, TropVector) else TropVector(x)
    check_unit_vector(x)
    if t < 0:
        raise DomainError(f"orbit length must be nonnegative, got {t}")
    step = _step_vector(shift(A, ONE))
    out = [x]
    for _ in range(t):
        out.append(step(out[-1]))
    return out


@dataclass(frozen=True)
class PeriodReport:
    """Transient and least period of a Lukasiewicz power or orbit sequence.

    Powers are indexed from ``t = 1`` and orbits from ``t = 0``.  ``samples``
    lists the states of one period starting at ``transient``.
    """

    transient: int
    period: int
    regime: str
    cyclicity: int
    rho: object
    samples: tuple


def _cap(A, profile, max_transient):
    if max_transient is not None:
        return max_transient
    return default_max_transient(A.nrows, profile.cyclicity)


def power_period(A, max_transient=None):
    check_unit_matrix(A)
    profile = critical_structure(A)
    cap = _cap(A, profile, max_transient)
    A1 = shift(A, ONE)
    states, start, period = _periodic_sequence(A, _step_matrix(A1), cap, "Lukasiewicz powers")
    samples = tuple(states[start:start + period])
    transient = start + 1
    if profile.rho < 1:
        if period != 1 or samples[0] != TropMatrix.zeros(A.nrows):
            raise RuntimeError("powers of a matrix with rho < 1 must collapse to zero")
        return PeriodReport(transient, 1, ZERO_REGIME, profile.cyclicity, profile.rho, samples)
    if period != profile.cyclicity:
        raise RuntimeError(f"ultimate period {period} differs from the cyclicity {profile.cyclicity}")
    _check_csr_powers(A, A1, transient, samples)
    return PeriodReport(transient, period, PERIODIC, profile.cyclicity, profile.rho, samples)


def _check_csr_powers(A, A1, transient, samples):
    """Periodic powers must equal ``C S^(t-1) R A + 0``."""
    triple = csr_factors(A1)
    S_pow = _power(triple.S, transient - 1)
    for P in samples:
        form = _clip(mat_mul(mat_mul(mat_mul(triple.C, S_pow), triple.R), A))
        if P != form:
            raise RuntimeError("periodic powers disagree with their CSR form")
        S_pow = mat_mul(S_pow, triple.S)


def orbit_period(A, x, max_transient=None):
    check_unit_matrix(A)
    x = x if isinstance(x, TropVector) else TropVector(x)
    check_unit_vector(x)
    profile = critical_structure(A)
    cap = _cap(A, profile, max_transient)
    states, start, period = _periodic_sequence(
        x, _step_vector(shift(A, ONE)), cap, "Lukasiewicz orbit"
    )
    samples = tuple(states[start:start + period])
    if profile.rho < 1:
        if period != 1 or samples[0] != TropVector.zeros(len(x)):
            raise RuntimeError("orbits of a matrix with rho < 1 must collapse to zero")
        return PeriodReport(start, 1, ZERO_REGIME, profile.cyclicity, profile.rho, samples)
    if profile.cyclicity % period:
        raise RuntimeError(f"orbit period {period} does not divide the cyclicity {profile.cyclicity}")
    return PeriodReport(start, period, PERIODIC, profile.cyclicity, profile.rho, samples)


def attraction_membership(A, x):
    """Whether ``R x + 0 = S R x + 0`` for the CSR factors of ``A - 1``.

    Requires ``rho(A) = 1``; below that every orbit collapses to zero.
    """
    check_unit_matrix(A)
    x = x if isinstance(x, TropVector) else TropVector(x)
    check_unit_vector(x)
    profile = critical_structure(A)
    if profile.rho < 1:
        raise PreconditionError("attraction sets are only defined here for rho(A) = 1")
    triple = csr_factors(shift(A, ONE))
    Rx = TropVector._raw([max(v, ZERO) for v in mat_vec(triple.R, x).entries], triple.critical_indices)
    SRx = TropVector._raw(
        [max(v, ZERO) for v in mat_vec(triple.S, mat_vec(triple.R, x)).entries],
        triple.critical_indices,
    )
    return Rx == SRx


__all__ = [
    "PERIODIC",
    "ZERO_REGIME",
    "PeriodReport",
    "attraction_membership",
    "luk_orbit",
    "luk_power",
    "luk_trajectory",
    "matrix_of_ones",
    "orbit_period",
    "power_period",
]
