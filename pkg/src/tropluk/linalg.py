"""Dense max-plus, min-plus and max-Lukasiewicz matrix calculus.

Matrices and vectors are immutable.  They carry *labels*: the original node
indices of their rows/columns (resp. coordinates).  Submatrix extraction keeps
the labels of the parent, so a block ``A[K, K]`` still knows which nodes it
talks about.  Labels are bookkeeping only; equality compares entries.

All indices are 0-based.
"""

from .errors import DimensionError, DivergentValue, DomainError
from .scalar import (
    BOTTOM,
    ONE,
    TOP,
    ZERO,
    format_scalar,
    neg,
    otimes_dual,
    to_scalar,
    to_unit,
)


def _check_labels(labels, size, what):
    if labels is None:
        return tuple(range(size))
    labels = tuple(labels)
    if len(labels) != size:
        raise DimensionError(f"{len(labels)} {what} labels for size {size}")
    return labels


class TropVector:
    __slots__ = ("entries", "labels")

    def __init__(self, entries, labels=None):
        self.entries = tuple(to_scalar(v) for v in entries)
        self.labels = _check_labels(labels, len(self.entries), "vector")

    @classmethod
    def _raw(cls, entries, labels):
        v = object.__new__(cls)
        v.entries = tuple(entries)
        v.labels = labels
        return v

    @classmethod
    def constant(cls, n, value, labels=None):
        return cls([value] * n, labels)

    @classmethod
    def zeros(cls, n, labels=None):
        """The finite zero vector (all entries 0), not the max-plus zero."""
        return cls.constant(n, ZERO, labels)

    @classmethod
    def ones(cls, n, labels=None):
        return cls.constant(n, ONE, labels)

    @classmethod
    def bottom(cls, n, labels=None):
        return cls.constant(n, BOTTOM, labels)

    @classmethod
    def unit(cls, n, index, value=ZERO):
        """Vector with ``value`` at ``index`` and BOTTOM elsewhere."""
        return cls([value if i == index else BOTTOM for i in range(n)])

    @property
    def dim(self):
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if isinstance(other, TropVector):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "TropVector([" + ", ".join(format_scalar(v) for v in self.entries) + "])"

    def leq(self, other):
        """Entrywise ``self <= other``."""
        _same_dim(self, other)
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def max(self):
        return max(self.entries, default=BOTTOM)

    def min(self):
        return min(self.entries, default=TOP)

    def restrict(self, positions):
        positions = tuple(positions)
        return TropVector._raw(
            (self.entries[p] for p in positions), tuple(self.labels[p] for p in positions)
        )

    def with_entry(self, i, value):
        entries = list(self.entries)
        entries[i] = to_scalar(value)
        return TropVector._raw(entries, self.labels)

    def is_finite(self):
        return all(v != BOTTOM and v != TOP for v in self.entries)

    def to_strings(self):
        return [format_scalar(v) for v in self.entries]


class TropMatrix:
    __slots__ = ("rows", "row_labels", "col_labels", "ncols")

    def __init__(self, entries, row_labels=None, col_labels=None, ncols=None):
        rows = tuple(tuple(to_scalar(v) for v in row) for row in entries)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged matrix rows")
        self.rows = rows
        self.ncols = ncols
        self.row_labels = _check_labels(row_labels, len(rows), "row")
        self.col_labels = _check_labels(col_labels, ncols, "column")

    @classmethod
    def _raw(cls, rows, row_labels, col_labels):
        m = object.__new__(cls)
        m.rows = tuple(tuple(r) for r in rows)
        m.row_labels = tuple(row_labels)
        m.col_labels = tuple(col_labels)
        m.ncols = len(m.col_labels)
        return m

    @classmethod
    def constant(cls, nrows, ncols, value, row_labels=None, col_labels=None):
        value = to_scalar(value)
        return cls._raw(
            [[value] * ncols for _ in range(nrows)],
            _check_labels(row_labels, nrows, "row"),
            _check_labels(col_labels, ncols, "column"),
        )

    @classmethod
    def zeros(cls, nrows, ncols=None):
        """The finite all-zero matrix (the Lukasiewicz offset term)."""
        return cls.constant(nrows, nrows if ncols is None else ncols, ZERO)

    @classmethod
    def identity(cls, n, labels=None):
        """Tropical identity: 0 on the diagonal, BOTTOM elsewhere."""
        labels = _check_labels(labels, n, "row")
        return cls._raw(
            [[ZERO if i == j else BOTTOM for j in range(n)] for i in range(n)], labels, labels
        )

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (len(self.rows), self.ncols)

    @property
    def is_square(self):
        return len(self.rows) == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return TropVector._raw(self.rows[i], self.col_labels)

    def col(self, j):
        return TropVector._raw((r[j] for r in self.rows), self.row_labels)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def __eq__(self, other):
        if isinstance(other, TropMatrix):
            return self.shape == other.shape and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(format_scalar(v) for v in r) for r in self.rows)
        return f"TropMatrix([{body}])"

    def __matmul__(self, other):
        if isinstance(other, TropMatrix):
            return mat_mul(self, other)
        if isinstance(other, TropVector):
            return mat_vec(self, other)
        return NotImplemented

    def submatrix(self, rows, cols):
        """Block on the given row/column positions, keeping parent labels."""
        rows, cols = tuple(rows), tuple(cols)
        return TropMatrix._raw(
            [[self.rows[i][j] for j in cols] for i in rows],
            [self.row_labels[i] for i in rows],
            [self.col_labels[j] for j in cols],
        )

    def transpose(self):
        return TropMatrix._raw(
            [[r[j] for r in self.rows] for j in range(self.ncols)], self.col_labels, self.row_labels
        )

    @property
    def T(self):
        return self.transpose()

    def entries(self):
        for r in self.rows:
            yield from r

    def is_finite(self):
        return all(v != BOTTOM and v != TOP for v in self.entries())

    def has_top(self):
        return any(v == TOP for v in self.entries())

    def to_strings(self):
        return [[format_scalar(v) for v in r] for r in self.rows]


def _same_dim(x, y):
    if len(x) != len(y):
        raise DimensionError(f"vector dimensions {len(x)} and {len(y)} differ")


def _no_top(*operands):
    for m in operands:
        if any(v == TOP for v in (m.entries() if isinstance(m, TropMatrix) else m.entries)):
            raise DivergentValue("TOP entry in a max-plus operand")


def _maxplus_dot(row, col):
    best = BOTTOM
    for a, b in zip(row, col):
        if a == BOTTOM or b == BOTTOM:
            continue
        s = a + b
        if s > best:
            best = s
    return best


def mat_mul(A, B):
    """Max-plus product: ``(A B)_ik = max_j a_ij + b_jk``."""
    if A.ncols != B.nrows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    _no_top(A, B)
    cols = [tuple(r[k] for r in B.rows) for k in range(B.ncols)]
    return TropMatrix._raw(
        [[_maxplus_dot(row, c) for c in cols] for row in A.rows], A.row_labels, B.col_labels
    )


def mat_vec(A, x):
    if A.ncols != len(x):
        raise DimensionError(f"cannot multiply {A.shape} by a vector of length {len(x)}")
    _no_top(A, x)
    return TropVector._raw([_maxplus_dot(row, x.entries) for row in A.rows], A.row_labels)


def _minplus_dot(row, col):
    best = TOP
    for a, b in zip(row, col):
        s = otimes_dual(a, b)
        if s < best:
            best = s
    return best


def mat_mul_dual(A, B):
    """Min-plus product ``(A B)'_ik = min_j a_ij + b_jk`` with TOP absorbing."""
    if A.ncols != B.nrows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    cols = [tuple(r[k] for r in B.rows) for k in range(B.ncols)]
    return TropMatrix._raw(
        [[_minplus_dot(row, c) for c in cols] for row in A.rows], A.row_labels, B.col_labels
    )


def mat_vec_dual(A, x):
    if A.ncols != len(x):
        raise DimensionError(f"cannot multiply {A.shape} by a vector of length {len(x)}")
    return TropVector._raw([_minplus_dot(row, x.entries) for row in A.rows], A.row_labels)


def mat_add(A, B):
    """Entrywise max."""
    if A.shape != B.shape:
        raise DimensionError(f"shapes {A.shape} and {B.shape} differ")
    _no_top(A, B)
    return TropMatrix._raw(
        [[max(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)],
        A.row_labels,
        A.col_labels,
    )


def vec_add(x, y):
    _same_dim(x, y)
    _no_top(x, y)
    return TropVector._raw([max(a, b) for a, b in zip(x.entries, y.entries)], x.labels)


def vec_min(x, y):
    _same_dim(x, y)
    return TropVector._raw([min(a, b) for a, b in zip(x.entries, y.entries)], x.labels)


def scale(alpha, x):
    """``alpha (x) x``: add ``alpha`` to every finite entry."""
    alpha = to_scalar(alpha)
    if alpha == TOP:
        raise DivergentValue("cannot scale by TOP")
    if alpha == BOTTOM:
        return TropVector.bottom(len(x), x.labels)
    _no_top(x)
    return TropVector._raw([v if v == BOTTOM else v + alpha for v in x.entries], x.labels)


def shift(A, alpha):
    """``A^(alpha)``: the matrix with entries ``a_ij - alpha``."""
    alpha = to_scalar(alpha)
    if alpha == BOTTOM or alpha == TOP:
        raise DomainError("shift amount must be finite")
    return TropMatrix._raw(
        [[v if v == BOTTOM or v == TOP else v - alpha for v in r] for r in A.rows],
        A.row_labels,
        A.col_labels,
    )


def cg_inverse(A):
    """Cuninghame-Green inverse: ``(A^#)_ij = -a_ji`` (BOTTOM <-> TOP)."""
    return TropMatrix._raw(
        [[neg(r[i]) for r in A.rows] for i in range(A.ncols)], A.col_labels, A.row_labels
    )


def mat_power(A, t):
    """Max-plus power ``A^t`` (``A^0`` is the identity)."""
    if not A.is_square:
        raise DimensionError("matrix powers need a square matrix")
    result = TropMatrix.identity(A.nrows, A.row_labels)
    for _ in range(t):
        result = mat_mul(result, A)
    return result


def residual_greatest_solution(A, b):
    """Greatest ``x`` with ``A x <= b``, i.e. ``A^# (x)' b``.

    A row of ``A`` without finite entries leaves the matching coordinate
    unbounded, which shows up as TOP.
    """
    if A.nrows != len(b):
        raise DimensionError(f"{A.shape} system with right-hand side of length {len(b)}")
    x = mat_vec_dual(cg_inverse(A), b)
    return TropVector._raw(x.entries, A.col_labels)


def check_unit_matrix(A):
    for v in A.entries():
        if v == BOTTOM or v == TOP or v < 0 or v > 1:
            raise DomainError(f"entry {format_scalar(v)} is outside [0, 1]")


def check_unit_vector(x):
    for v in x.entries:
        if v == BOTTOM or v == TOP or v < 0 or v > 1:
            raise DomainError(f"entry {format_scalar(v)} is outside [0, 1]")


def _luk_dot(row, col):
    best = ZERO
    for a, b in zip(row, col):
        s = a + b - 1
        if s > best:
            best = s
    return best


def luk_mat_mul(A, B):
    """Max-Lukasiewicz product ``max_j max(0, a_ij + b_jk - 1)``."""
    if A.ncols != B.nrows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    check_unit_matrix(A)
    check_unit_matrix(B)
    cols = [tuple(r[k] for r in B.rows) for k in range(B.ncols)]
    return TropMatrix._raw(
        [[_luk_dot(row, c) for c in cols] for row in A.rows], A.row_labels, B.col_labels
    )


def luk_mat_vec(A, x):
    """Max-Lukasiewicz matrix-vector product, evaluated directly."""
    if A.ncols != len(x):
        raise DimensionError(f"cannot multiply {A.shape} by a vector of length {len(x)}")
    check_unit_matrix(A)
    check_unit_vector(x)
    return TropVector._raw([_luk_dot(row, x.entries) for row in A.rows], A.row_labels)


def luk_scalar_vec(lam, x):
    """``lam (x)_L x`` coordinatewise."""
    lam = to_unit(lam)
    check_unit_vector(x)
    return TropVector._raw([max(ZERO, lam + v - 1) for v in x.entries], x.labels)
