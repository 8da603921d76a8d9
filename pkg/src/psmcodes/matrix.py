"""Dense matrices over a :class:`~psmcodes.field.FieldSpec`.

Row-vector convention throughout: a message ``m`` is encoded as ``m @ G``,
and :func:`solve` finds ``x`` with ``x @ A = target``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, FormatError
from .field import FieldSpec


class MatrixF:
    """A dense ``rows x cols`` matrix with entries in ``field``.

    Entries are stored as an int64 numpy array in the field's integer
    encoding.  Treat instances as immutable; every operation returns a new
    matrix.
    """

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, entries):
        data = np.array(entries, dtype=np.int64)
        if data.ndim == 1:
            data = data.reshape(1, -1) if data.size else data.reshape(0, 0)
        if data.ndim != 2:
            raise DimensionError(f"matrix entries must be 2-D, got shape {data.shape}")
        if data.size and (data.min() < 0 or data.max() >= field.q):
            raise DimensionError(f"entries outside GF({field.q})")
        data.setflags(write=False)
        self.field = field
        self.data = data

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def row(self, i: int) -> np.ndarray:
        return self.data[i].copy()

    def column(self, j: int) -> np.ndarray:
        return self.data[:, j].copy()

    def submatrix(self, rows=None, cols=None) -> MatrixF:
        d = self.data
        if rows is not None:
            d = d[list(rows)]
        if cols is not None:
            d = d[:, list(cols)]
        return MatrixF(self.field, d)

    @property
    def T(self) -> MatrixF:
        return MatrixF(self.field, self.data.T)

    def __matmul__(self, other: MatrixF) -> MatrixF:
        return matmul(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, MatrixF)
            and self.field == other.field
            and self.shape == other.shape
            and np.array_equal(self.data, other.data)
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"MatrixF(GF({self.field.q}), {self.rows}x{self.cols})\n{self.data}"

    def is_binary(self) -> bool:
        return bool(np.all(self.data < 2))

    def rank(self) -> int:
        return rref(self)[1]

    def to_text(self) -> str:
        lines = [self.field.to_line(), f"{self.rows} {self.cols}"]
        lines += [" ".join(str(int(v)) for v in row) for row in self.data]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> MatrixF:
        lines = _content_lines(text.splitlines())
        matrix, rest = _parse_matrix(lines)
        if rest:
            raise FormatError(f"trailing content after matrix: {rest[0]!r}")
        return matrix


def _content_lines(lines: Iterable[str]) -> list[str]:
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _parse_matrix(lines: Sequence[str], field: FieldSpec | None = None):
    """Parse one matrix block from ``lines``; return it and the unread lines.

    If ``field`` is given the block has no field line of its own.
    """
    lines = list(lines)
    try:
        if field is None:
            field = FieldSpec.from_line(lines.pop(0))
        rows, cols = (int(x) for x in lines.pop(0).split())
        body = [[int(x) for x in lines.pop(0).split()] for _ in range(rows)]
    except (IndexError, ValueError) as exc:
        raise FormatError(f"malformed matrix block: {exc}") from None
    if any(len(r) != cols for r in body):
        raise FormatError(f"expected {cols} entries per row")
    try:
        return MatrixF(field, np.array(body, dtype=np.int64).reshape(rows, cols)), lines
    except DimensionError as exc:
        raise FormatError(str(exc)) from None


def load_matrix(path) -> MatrixF:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    return MatrixF.from_text(text)


def save_matrix(matrix: MatrixF, path) -> None:
    try:
        Path(path).write_text(matrix.to_text())
    except OSError as exc:
        raise FormatError(f"cannot write {path}: {exc}") from None


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def identity(field: FieldSpec, n: int) -> MatrixF:
    return MatrixF(field, np.eye(n, dtype=np.int64))


def zeros(field: FieldSpec, rows: int, cols: int) -> MatrixF:
    return MatrixF(field, np.zeros((rows, cols), dtype=np.int64))


def hstack(blocks: Sequence[MatrixF]) -> MatrixF:
    return MatrixF(blocks[0].field, np.hstack([b.data for b in blocks]))


def vstack(blocks: Sequence[MatrixF]) -> MatrixF:
    return MatrixF(blocks[0].field, np.vstack([b.data for b in blocks]))


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------

def vec_mat_mul(v, M: MatrixF) -> np.ndarray:
    """Row vector times matrix."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (M.rows,):
        raise DimensionError(f"vector of length {v.shape} cannot multiply a {M.rows}x{M.cols} matrix")
    F = M.field
    if M.rows == 0:
        return np.zeros(M.cols, dtype=np.int64)
    return F.sum(F.mul(v[:, None], M.data), axis=0)


def matmul(A: MatrixF, B: MatrixF) -> MatrixF:
    if A.field != B.field:
        raise DimensionError("matrices over different fields")
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    F = A.field
    if A.cols == 0:
        return zeros(F, A.rows, B.cols)
    prod = F.mul(A.data[:, :, None], B.data[None, :, :])
    return MatrixF(F, F.sum(prod, axis=1))


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------

def _rref_array(F: FieldSpec, A: np.ndarray, ncols: int | None = None):
    """Reduce ``A`` in place; pivot search limited to the first ``ncols`` columns."""
    rows, cols = A.shape
    ncols = cols if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = F.mul(F.inv(A[r, c]), A[r])
        factors = A[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            A[hit] = F.sub(A[hit], F.mul(factors[hit, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A, pivots


def rref(M: MatrixF) -> tuple[MatrixF, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    A, pivots = _rref_array(M.field, M.data.copy())
    return MatrixF(M.field, A), len(pivots), pivots


def rank(M: MatrixF) -> int:
    return rref(M)[1]


def solve(A: MatrixF, target) -> np.ndarray | None:
    """Some ``x`` with ``x @ A == target``, or ``None`` if the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    target = np.asarray(target, dtype=np.int64)
    if target.shape != (A.cols,):
        raise DimensionError(f"target length {target.shape} does not match {A.cols} columns")
    F = A.field
    aug = np.hstack([A.data.T, target[:, None]])
    red, pivots = _rref_array(F, aug, ncols=A.rows)
    rk = len(pivots)
    if np.any(red[rk:, -1] != 0):
        return None
    x = np.zeros(A.rows, dtype=np.int64)
    x[pivots] = red[:rk, -1]
    return x


def null_space(M: MatrixF) -> MatrixF:
    """Basis (as rows) of ``{h : M @ h^T = 0}``."""
    F = M.field
    red, rk, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), M.cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        basis[i, pivots] = F.neg(red.data[:rk, f])
    return MatrixF(F, basis)


def columns_independent(M: MatrixF, subset: Iterable[int]) -> bool:
    subset = list(subset)
    if any(not 0 <= j < M.cols for j in subset):
        raise DimensionError(f"column index out of range for {M.cols} columns")
    if not subset:
        return True
    return rank(M.submatrix(cols=subset)) == len(subset)


def row_space_contains(M: MatrixF, v) -> bool:
    return solve(M, v) is not None
