"""Cardinality bounds for masking codes and a constructive GV-type bound.

All arithmetic is exact on Python integers; only :attr:`BoundResult.k_info`
is a float.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .code import LinearCode
from .errors import ValidationError
from .field import FieldSpec, gf
from .matrix import MatrixF, rank

NON_OVERLAPPING = "non_overlapping"
OVERLAPPING = "overlapping"
MODELS = (NON_OVERLAPPING, OVERLAPPING)


@dataclass(frozen=True)
class BoundQuery:
    """Parameters of one sphere-packing evaluation.

    ``levels`` is either one stuck level per stuck cell or a single int that
    applies to all ``u`` cells.
    """

    n: int
    q: int
    u: int
    t: int
    levels: int | tuple[int, ...] = 1
    model: str = NON_OVERLAPPING

    def __post_init__(self):
        if isinstance(self.levels, (int, np.integer)):
            object.__setattr__(self, "levels", (int(self.levels),) * self.u)
        else:
            object.__setattr__(self, "levels", tuple(int(s) for s in self.levels))
        if self.model not in MODELS:
            raise ValidationError(f"unknown error model {self.model!r}")
        if not (0 <= self.u <= self.n and 0 <= self.t <= self.n and self.q >= 2):
            raise ValidationError(f"need 0 <= u, t <= n and q >= 2: {self}")
        if len(self.levels) != self.u:
            raise ValidationError("one level per stuck cell is required")
        if any(not 1 <= s <= self.q - 1 for s in self.levels):
            raise ValidationError(f"stuck levels must lie in [1, q-1]: {self.levels}")
        if self.model == OVERLAPPING and any(s >= self.q - 1 for s in self.levels):
            raise ValidationError(
                "the overlapping bound assumes every stuck level is below q-1")

    @property
    def uniform_level(self) -> int | None:
        return self.levels[0] if self.levels and len(set(self.levels)) == 1 else None


@dataclass(frozen=True)
class BoundResult:
    query: BoundQuery
    sphere_size: int
    rhs: int
    max_cardinality: int
    k_info: float


def _k_info(count: int, q: int) -> float:
    if count <= 0:
        return float("-inf")
    return float(f"{math.log(count) / math.log(q):.12g}")


def _result(query: BoundQuery, sphere: int, rhs: int) -> BoundResult:
    m = rhs // sphere
    return BoundResult(query, sphere, rhs, m, _k_info(m, query.q))


def masking_only_bound(n: int, q: int, levels: Sequence[int]) -> int:
    """Number of words that respect the given partially stuck levels."""
    out = q ** (n - len(levels))
    for s in levels:
        out *= q - s
    return out


def hamming_bound(n: int, q: int, t: int) -> int:
    """Classical sphere-packing bound ``floor(q^n / V_q(n, t))``."""
    return q**n // sum(math.comb(n, j) * (q - 1) ** j for j in range(t + 1))


def sphere_non_overlapping(n: int, q: int, u: int, t: int) -> int:
    return sum(math.comb(n - u, j) * (q - 1) ** j for j in range(t + 1))


def elementary_symmetric(values: Sequence[int], k: int) -> int:
    """Sum over all k-subsets of the product of their values."""
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * v
    return e[k]


def sphere_overlapping(n: int, q: int, levels: Sequence[int], t: int) -> int:
    """Words reachable by at most ``t`` errors that keep every stuck level.

    ``j1`` errors hit free cells, ``j - j1`` hit stuck cells.  A stuck cell at
    level ``s`` has ``q - 1 - s`` admissible nonzero displacements.  With
    non-uniform levels the sum runs over every choice of affected stuck
    cells.
    """
    u = len(levels)
    uniform = levels[0] if levels and len(set(levels)) == 1 else None
    total = 0
    for j in range(t + 1):
        for j1 in range(j + 1):
            free = math.comb(n - u, j1) * (q - 1) ** j1
            if uniform is not None or u == 0:
                stuck = math.comb(u, j - j1) * (q - 1 - (uniform or 0)) ** (j - j1)
            else:
                stuck = elementary_symmetric([q - 1 - s for s in levels], j - j1)
            total += free * stuck
    return total


def sp_non_overlapping(query: BoundQuery) -> BoundResult:
    """Sphere-packing bound when errors avoid the stuck cells."""
    if query.model != NON_OVERLAPPING:
        raise ValidationError("query is not for the non-overlapping model")
    sphere = sphere_non_overlapping(query.n, query.q, query.u, query.t)
    return _result(query, sphere, masking_only_bound(query.n, query.q, query.levels))


def sp_overlapping(query: BoundQuery) -> BoundResult:
    """Sphere-packing bound when errors may also hit stuck cells."""
    if query.model != OVERLAPPING:
        raise ValidationError("query is not for the overlapping model")
    sphere = sphere_overlapping(query.n, query.q, query.levels, query.t)
    return _result(query, sphere, masking_only_bound(query.n, query.q, query.levels))


def sphere_packing(query: BoundQuery) -> BoundResult:
    return sp_non_overlapping(query) if query.model == NON_OVERLAPPING else sp_overlapping(query)


# ---------------------------------------------------------------------------
# GV-type bound for codes containing the all-one word
# ---------------------------------------------------------------------------

def gv_lhs(n: int, d: int, q: int) -> int:
    return sum(math.comb(n - 1, i) * (q - 1) ** i for i in range(d - 1))


def gv_check(n: int, k: int, d: int, q: int) -> bool:
    """``sum_{i=0}^{d-2} C(n-1, i) (q-1)^i < q^(n-k)``, exactly.

    For ``d = 1`` the sum is empty.
    """
    return gv_lhs(n, d, q) < q ** (n - k)


def gv_max_d(n_f: int, k_f: int, q: int) -> int:
    """Largest ``d`` for which the bound guarantees an ``[n_f, k_f, >=d]`` code.

    The designed parameters are taken at their least favourable values,
    ``n = n_f - 1`` and ``k = k_f + d - 2``.  Returns 1 if no ``d >= 2`` works.
    """
    best = 1
    d = 2
    n = n_f - 1
    while d <= n and k_f + d - 2 <= n:
        if not gv_check(n, k_f + d - 2, d, q):
            break
        best = d
        d += 1
    return best


@dataclass
class GvConstruction:
    """Output of :func:`gv_construct`.

    ``dropped`` lists (in original numbering) the columns removed because
    the parity column depended on them; ``scaled`` the ones multiplied by a
    nonzero scalar; ``parity_kept`` whether the zero-sum parity column was
    appended unchanged.
    """

    H: MatrixF
    n: int
    k: int
    d: int
    n_prime: int
    k_prime: int
    parity_kept: bool
    dependency: tuple[tuple[int, int], ...]
    dropped: tuple[int, ...]
    scaled: tuple[int, ...]

    @property
    def code(self) -> LinearCode:
        return LinearCode(parity_check=self.H)


def _encode_col(col, q: int) -> int:
    v = 0
    for x in col:
        v = v * q + int(x)
    return v


def _decode_col(v: int, q: int, rows: int) -> np.ndarray:
    out = np.zeros(rows, dtype=np.int64)
    for i in range(rows - 1, -1, -1):
        v, out[i] = divmod(v, q)
    return out


class _SpanSets:
    """Columns reachable as combinations of at most ``depth`` chosen columns.

    ``layers[j]`` maps the integer encoding of each combination of exactly
    ``j`` columns (nonzero coefficients) to one witness ``((index, coeff), ...)``.
    """

    def __init__(self, field: FieldSpec, rows: int, depth: int):
        self.field = field
        self.rows = rows
        self.depth = depth
        # depth < 0 (d = 1) forbids nothing, not even the zero column
        self.layers: list[dict[int, tuple]] = [] if depth < 0 else [{0: ()}] + [dict() for _ in range(depth)]
        self.columns: list[np.ndarray] = []

    def reachable(self, v: int) -> tuple | None:
        for layer in self.layers:
            if v in layer:
                return layer[v]
        return None

    def add(self, col: np.ndarray) -> None:
        F, q = self.field, self.field.q
        idx = len(self.columns)
        self.columns.append(col)
        multiples = [(a, F.mul(a, col)) for a in range(1, q)]
        for j in range(self.depth, 0, -1):
            prev = self.layers[j - 1]
            layer = self.layers[j]
            for key, witness in prev.items():
                base = _decode_col(key, q, self.rows)
                for a, mcol in multiples:
                    v = _encode_col(F.add(base, mcol), q)
                    if v not in layer:
                        layer[v] = witness + ((idx, a),)


def gv_construct(n: int, k: int, d: int, q: int) -> GvConstruction:
    """Greedy parity-check matrix of a code with distance >= d containing 1.

    Starting from the ``(n-k)``-identity, columns are appended greedily
    (lexicographically smallest first) so that none is a combination of at
    most ``d - 2`` earlier ones, until there are ``n``.  A last column makes
    every row sum to zero.  If that column is a combination
    ``sum_j a_j h_{i_j}`` of at most ``d - 2`` columns, it is not appended;
    instead each ``h_{i_j}`` becomes ``(1 + a_j) h_{i_j}``, which drops it
    when ``a_j = -1``.  Row sums stay zero and every surviving column is a
    nonzero multiple of an original one.
    """
    if not (1 <= k <= n and 1 <= d <= n):
        raise ValidationError(f"need 1 <= k <= n and 1 <= d <= n, got n={n}, k={k}, d={d}")
    if not gv_check(n, k, d, q):
        raise ValidationError(f"the GV-type inequality fails for n={n}, k={k}, d={d}, q={q}")
    F = gf(q)
    rows = n - k
    spans = _SpanSets(F, rows, d - 2)
    for i in range(rows):
        e = np.zeros(rows, dtype=np.int64)
        e[i] = 1
        spans.add(e)
    # reachable sets only grow, so rejected candidates stay rejected; the last
    # accepted one may repeat when d <= 2
    v = 0
    while len(spans.columns) < n:
        while v < q**rows and spans.reachable(v) is not None:
            v += 1
        if v == q**rows:  # pragma: no cover - excluded by the counting argument
            raise AssertionError("greedy search ran out of columns")
        spans.add(_decode_col(v, q, rows))

    cols = np.array(spans.columns, dtype=np.int64).T.reshape(rows, n)
    parity = F.neg(F.sum(cols, axis=1)) if n else np.zeros(rows, dtype=np.int64)
    witness = spans.reachable(_encode_col(parity, q))
    if witness is None:
        H = np.hstack([cols, parity[:, None]])
        return GvConstruction(MatrixF(F, H), n, k, d, n + 1, n + 1 - rows, True, (), (), ())

    kept, dropped, scaled = [], [], []
    new_cols = cols.copy()
    coeff = dict(witness)
    for i in range(n):
        if i in coeff:
            factor = int(F.add(1, coeff[i]))
            if factor == 0:
                dropped.append(i)
                continue
            new_cols[:, i] = F.mul(factor, cols[:, i])
            scaled.append(i)
        kept.append(i)
    H = new_cols[:, kept]
    n_prime = len(kept)
    return GvConstruction(MatrixF(F, H), n, k, d, n_prime, n_prime - rows, False,
                          tuple(witness), tuple(dropped), tuple(scaled))


@dataclass(frozen=True)
class GvReport:
    rows_sum_zero: bool
    columns_independent: bool
    n_bracket: bool
    k_bracket: bool
    rank: int
    actual_k: int

    @property
    def ok(self) -> bool:
        return self.rows_sum_zero and self.columns_independent and self.n_bracket and self.k_bracket


def verify_gv(H: MatrixF, n: int, k: int, d: int) -> GvReport:
    """Check a parity-check matrix against the GV construction's guarantees.

    Independent of :func:`gv_construct`: row sums by field arithmetic, column
    independence by the rank of every ``(d-1)``-column submatrix.
    """
    F = H.field
    rows_zero = not np.any(F.sum(H.data, axis=1)) if H.cols else True
    indep = all(
        rank(H.submatrix(cols=s)) == len(s)
        for s in itertools.combinations(range(H.cols), max(d - 1, 0))
    ) if d > 1 else True
    n_prime = H.cols
    k_prime = n_prime - (n - k)
    rk = rank(H)
    return GvReport(
        rows_sum_zero=rows_zero,
        columns_independent=indep,
        n_bracket=n - d + 2 <= n_prime <= n + 1,
        k_bracket=k - d + 2 <= k_prime <= k + 1 and n_prime - rk >= k_prime,
        rank=rk,
        actual_k=n_prime - rk,
    )


@dataclass
class GvPsmc:
    exists: bool
    construction: GvConstruction
    t: int
    scheme: object


def psmc_from_gv(n: int, k: int, d: int, q: int, u: int) -> GvPsmc:
    """Build a ``(u, (d-1)//2)``-PSMC from the GV construction (``u < q``)."""
    from .psmc import AllOnePsmc

    if u >= q:
        raise ValidationError(f"all-one masking needs u < q, got u={u}, q={q}")
    construction = gv_construct(n, k, d, q)
    code = construction.code
    t = (d - 1) // 2
    return GvPsmc(True, construction, t, AllOnePsmc(code, u, t))
