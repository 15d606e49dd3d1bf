"""Max-plus spectral theory: cycle means, critical graphs, Kleene stars, CSR.

Every function here works on exact rationals; criticality is decided by
exact zero tests.
"""

import os
from dataclasses import dataclass
from math import gcd

from .errors import (
    DimensionError,
    NoSolutionError,
    PositiveCycleError,
    TransientCapExceeded,
)
from .linalg import (
    TropMatrix,
    TropVector,
    cg_inverse,
    mat_mul,
    mat_vec,
    mat_vec_dual,
    shift,
    vec_add,
)
from .scalar import BOTTOM, TOP, ZERO


def _require_square(A):
    if not A.is_square:
        raise DimensionError(f"expected a square matrix, got {A.shape}")


def max_cycle_mean(A):
    """Maximum cycle mean by Karp's algorithm.

    Walks may start anywhere (a virtual source feeds every node with weight
    0), which keeps the formula valid for graphs that are not strongly
    connected.  Returns BOTTOM for an acyclic graph.
    """
    _require_square(A)
    n = A.nrows
    if n == 0:
        return BOTTOM
    rows = A.rows
    D = [[ZERO] * n]
    for _ in range(n):
        prev = D[-1]
        cur = []
        for v in range(n):
            best = BOTTOM
            for u in range(n):
                a = rows[u][v]
                if prev[u] == BOTTOM or a == BOTTOM:
                    continue
                s = prev[u] + a
                if s > best:
                    best = s
            cur.append(best)
        D.append(cur)
    rho = BOTTOM
    for v in range(n):
        dn = D[n][v]
        if dn == BOTTOM:
            continue
        worst = min((dn - D[k][v]) / (n - k) for k in range(n) if D[k][v] != BOTTOM)
        if worst > rho:
            rho = worst
    return rho


def _floyd_warshall(A):
    """Best nonempty walk weights with successor pointers.

    Values are exact only where no positive cycle interferes; callers that
    need guarantees use :func:`longest_walk_closure`.
    """
    n = A.nrows
    D = [list(r) for r in A.rows]
    succ = [[j if D[i][j] != BOTTOM else None for j in range(n)] for i in range(n)]
    for k in range(n):
        Dk = D[k]
        for i in range(n):
            dik = D[i][k]
            if dik == BOTTOM:
                continue
            Di = D[i]
            si = succ[i]
            for j in range(n):
                dkj = Dk[j]
                if dkj == BOTTOM:
                    continue
                s = dik + dkj
                if s > Di[j]:
                    Di[j] = s
                    si[j] = si[k]
    return D, succ


def _closure_from_fw(D):
    n = len(D)
    positive = [m for m in range(n) if D[m][m] != BOTTOM and D[m][m] > 0]
    if not positive:
        return [row[:] for row in D]

    def reaches(i, j):
        return i == j or D[i][j] != BOTTOM

    out = [row[:] for row in D]
    for i in range(n):
        for j in range(n):
            if any(reaches(i, m) and reaches(m, j) for m in positive):
                out[i][j] = TOP
    return out


def longest_walk_closure(A):
    """Supremum of the weights of nonempty walks between every pair of nodes.

    Entry ``(i, j)`` is TOP when some walk from ``i`` to ``j`` can pick up a
    positive cycle, BOTTOM when ``j`` is unreachable from ``i``.
    """
    _require_square(A)
    D, _ = _floyd_warshall(A)
    return TropMatrix._raw(_closure_from_fw(D), A.row_labels, A.col_labels)


def best_walk(A, i, j, succ=None):
    """Node sequence of a maximum-weight nonempty walk from ``i`` to ``j``.

    Only meaningful when the graph has no positive cycles.
    """
    if succ is None:
        _, succ = _floyd_warshall(A)
    if succ[i][j] is None:
        raise ValueError(f"node {j} is unreachable from {i}")
    walk = [i]
    cur = i
    for _ in range(A.nrows + 1):
        cur = succ[cur][j]
        walk.append(cur)
        if cur == j:
            return walk
    raise RuntimeError("successor pointers do not lead to the target")


def walk_weight(A, walk):
    """Additive weight of a node sequence (0 for a single node)."""
    total = ZERO
    for u, v in zip(walk, walk[1:]):
        a = A[u, v]
        if a == BOTTOM:
            return BOTTOM
        total += a
    return total


def kleene_star(A):
    """``A* = I + A + A^2 + ...``; raises PositiveCycleError if it diverges."""
    closure = longest_walk_closure(A)
    if closure.has_top():
        raise PositiveCycleError("Kleene star diverges: the graph has a positive cycle")
    n = A.nrows
    return TropMatrix._raw(
        [
            [max(ZERO, closure.rows[i][j]) if i == j else closure.rows[i][j] for j in range(n)]
            for i in range(n)
        ],
        A.row_labels,
        A.col_labels,
    )


@dataclass(frozen=True)
class SpectralProfile:
    rho: object
    critical_nodes: tuple
    critical_edges: tuple
    components: tuple
    representatives: tuple
    cyclicity: int


def _component_cyclicity(component, edges):
    members = set(component)
    adj = {v: [] for v in component}
    for u, v in edges:
        if u in members and v in members:
            adj[u].append(v)
    level = {component[0]: 0}
    queue = [component[0]]
    for u in queue:
        for v in adj[u]:
            if v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    g = 0
    for u in component:
        for v in adj[u]:
            g = gcd(g, abs(level[u] + 1 - level[v]))
    return g


def _strong_components(nodes, edges):
    adj = {v: set() for v in nodes}
    for u, v in edges:
        adj[u].add(v)

    def reach(s):
        seen = {s}
        stack = [s]
        while stack:
            for v in adj[stack.pop()]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    reach_sets = {v: reach(v) for v in nodes}
    components, assigned = [], set()
    for v in nodes:
        if v in assigned:
            continue
        comp = tuple(sorted(u for u in reach_sets[v] if v in reach_sets[u]))
        assigned.update(comp)
        components.append(comp)
    return tuple(components)


def critical_structure(A):
    """Maximum cycle mean, critical graph, its components and cyclicity.

    Edge ``(i, j)`` is critical iff ``b_ij + (B*)_ji = 0`` for
    ``B = A - rho``.  Each component is represented by its smallest node.
    """
    _require_square(A)
    rho = max_cycle_mean(A)
    if rho == BOTTOM:
        return SpectralProfile(BOTTOM, (), (), (), (), 1)
    B = shift(A, rho)
    star = kleene_star(B)
    n = A.nrows
    edges = tuple(
        (i, j)
        for i in range(n)
        for j in range(n)
        if B[i, j] != BOTTOM and B[i, j] + star[j, i] == 0
    )
    nodes = tuple(sorted({i for i, _ in edges}))
    components = _strong_components(nodes, edges)
    cyclicity = 1
    for comp in components:
        g = _component_cyclicity(comp, edges)
        cyclicity = cyclicity * g // gcd(cyclicity, g)
    return SpectralProfile(
        rho=rho,
        critical_nodes=nodes,
        critical_edges=edges,
        components=components,
        representatives=tuple(c[0] for c in components),
        cyclicity=cyclicity,
    )


def representatives_at(A, lam, profile=None):
    """Representative critical nodes when ``lam`` is the cycle mean, else ()."""
    profile = profile or critical_structure(A)
    return profile.representatives if profile.rho == lam else ()


def eigencone(A):
    """Generators of the max-plus eigencone: star columns at representatives."""
    profile = critical_structure(A)
    star = kleene_star(shift(A, profile.rho))
    return [star.col(k) for k in profile.representatives]


@dataclass(frozen=True)
class BellmanSolution:
    """Solutions of ``x = A x + b``: all vectors ``A* (b + z)`` with ``z``
    supported on ``representatives`` (empty when ``rho(A) < 0``)."""

    principal: TropVector
    star: TropMatrix
    b: TropVector
    representatives: tuple

    @property
    def unique(self):
        return not self.representatives

    def solution(self, z):
        """The solution ``A* (b + z)``; ``z`` maps representatives to values."""
        n = len(self.b)
        entries = [BOTTOM] * n
        for k, value in dict(z).items():
            if k not in self.representatives:
                raise ValueError(f"node {k} is not a critical representative")
            entries[k] = value
        return mat_vec(self.star, vec_add(self.b, TropVector(entries)))

    def greatest_below(self, upper):
        """Greatest solution ``x <= upper``, or None if none exists."""
        if not self.principal.leq(upper):
            return None
        bound = mat_vec_dual(cg_inverse(self.star), upper)
        return self.solution({k: bound[k] for k in self.representatives})


def bellman_solve(A, b):
    _require_square(A)
    profile = critical_structure(A)
    if profile.rho != BOTTOM and profile.rho > 0:
        raise NoSolutionError("x = A x + b has no finite solution when rho(A) > 0")
    star = kleene_star(A)
    reps = profile.representatives if profile.rho == 0 else ()
    return BellmanSolution(mat_vec(star, b), star, b, reps)


@dataclass(frozen=True)
class CsrTriple:
    """Ultimate powers ``A^t = rho^t C S^t R`` for ``t >= transient``.

    ``S`` is the critical block (rows and columns on ``critical_indices``),
    so that ``C`` (n x c), ``S`` (c x c) and ``R`` (c x n) compose.
    """

    rho: object
    C: TropMatrix
    S: TropMatrix
    R: TropMatrix
    critical_indices: tuple
    cyclicity: int
    transient: int = None

    def term(self, t, S_power=None):
        """``rho^t C S^t R``."""
        St = S_power if S_power is not None else _power(self.S, t)
        M = mat_mul(mat_mul(self.C, St), self.R)
        return TropMatrix._raw(
            [[v if v == BOTTOM else v + t * self.rho for v in r] for r in M.rows],
            M.row_labels,
            M.col_labels,
        )


def _power(M, t):
    out = TropMatrix.identity(M.nrows, M.row_labels)
    for _ in range(t):
        out = mat_mul(out, M)
    return out


def csr_factors(A, profile=None):
    """C, S, R of the CSR expansion, without the transient."""
    _require_square(A)
    profile = profile or critical_structure(A)
    rho = profile.rho
    if rho == BOTTOM:
        raise DimensionError("CSR needs a matrix with at least one cycle")
    B = shift(A, rho)
    M = kleene_star(_power(B, profile.cyclicity))
    crit = profile.critical_nodes
    edges = set(profile.critical_edges)
    n = A.nrows
    S = TropMatrix._raw(
        [[B[i, j] if (i, j) in edges else BOTTOM for j in crit] for i in crit], crit, crit
    )
    return CsrTriple(
        rho=rho,
        C=M.submatrix(range(n), crit),
        S=S,
        R=M.submatrix(crit, range(n)),
        critical_indices=crit,
        cyclicity=profile.cyclicity,
    )


def default_max_transient(n, cyclicity):
    """``10 n^2 + 10 cyclicity``, unless ``TROPLUK_MAX_TRANSIENT`` is set."""
    override = os.environ.get("TROPLUK_MAX_TRANSIENT")
    if override:
        return int(override)
    return 10 * n * n + 10 * cyclicity


def _periodic_sequence(first, step, cap, what):
    """Iterate until a state repeats; returns (states, start, period)."""
    states = [first]
    seen = {first: 0}
    while True:
        nxt = step(states[-1])
        t = len(states)
        if nxt in seen:
            return states, seen[nxt], t - seen[nxt]
        if t > cap:
            raise TransientCapExceeded(cap, what)
        seen[nxt] = t
        states.append(nxt)


def csr_decompose(A, max_transient=None):
    """CSR factors plus the least ``t`` from which ``A^t = rho^t C S^t R``.

    The powers of ``A - rho`` and of ``S`` are iterated until each repeats a
    state.  Past both transients the truth of the identity is periodic with
    the lcm of the two periods, so checking one such window decides it for
    every later ``t``.
    """
    triple = csr_factors(A)
    n = A.nrows
    gamma = triple.cyclicity
    cap = default_max_transient(n, gamma) if max_transient is None else max_transient
    B = shift(A, triple.rho)
    powers, tb, pb = _periodic_sequence(
        TropMatrix.identity(n, A.row_labels), lambda P: mat_mul(P, B), cap + gamma, "max-plus powers"
    )
    s_powers, ts, ps = _periodic_sequence(
        TropMatrix.identity(len(triple.critical_indices), triple.critical_indices),
        lambda P: mat_mul(P, triple.S),
        cap + gamma,
        "critical powers",
    )
    horizon = max(tb, ts) + pb * ps // gcd(pb, ps)

    def normalized_power(t):
        if t < len(powers):
            return powers[t]
        return powers[tb + (t - tb) % pb]

    def s_power(t):
        if t < len(s_powers):
            return s_powers[t]
        return s_powers[ts + (t - ts) % ps]

    zero_rho = CsrTriple(ZERO, triple.C, triple.S, triple.R, triple.critical_indices, gamma)
    holds = [normalized_power(t) == zero_rho.term(t, s_power(t)) for t in range(horizon + 1)]
    if not all(holds[max(tb, ts):]):
        raise RuntimeError("CSR identity fails in the periodic regime")
    transient = horizon
    while transient > 0 and holds[transient - 1]:
        transient -= 1
    if transient > cap:
        raise TransientCapExceeded(cap, "CSR identity")
    return CsrTriple(
        triple.rho, triple.C, triple.S, triple.R, triple.critical_indices, gamma, transient
    )


__all__ = [
    "BellmanSolution",
    "CsrTriple",
    "SpectralProfile",
    "bellman_solve",
    "best_walk",
    "critical_structure",
    "csr_decompose",
    "csr_factors",
    "default_max_transient",
    "eigencone",
    "kleene_star",
    "longest_walk_closure",
    "max_cycle_mean",
    "representatives_at",
    "walk_weight",
]
