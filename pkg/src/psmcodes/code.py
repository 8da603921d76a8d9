"""Linear block codes: encoding, exhaustive minimum distance, syndrome decoding."""

from __future__ import annotations

import itertools
import math
import threading

import numpy as np

from .errors import BudgetExceeded, DecodeFailure, DimensionError, ValidationError
from .field import FieldSpec
from .matrix import MatrixF, null_space, rank, rref, save_matrix, solve, vec_mat_mul

DEFAULT_BUDGET = 1 << 24

# elements per chunk in the vectorised codeword sweep
_CHUNK = 1 << 22


def _row_basis(M: MatrixF) -> MatrixF:
    red, rk, _ = rref(M)
    return red.submatrix(rows=range(rk))


def span(field: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """Every linear combination of ``rows``, one per row of the result.

    The combination with coefficient vector ``c`` (first row most
    significant, base ``q``) sits at index ``sum c_i q^(k-1-i)``, so index 0
    is the zero word.
    """
    rows = np.asarray(rows, dtype=np.int64)
    n = rows.shape[1]
    scalars = np.arange(field.q)[:, None]
    words = np.zeros((1, n), dtype=np.int64)
    for g in rows:
        multiples = field.mul(scalars, g[None, :])
        words = field.add(words[:, None, :], multiples[None, :, :]).reshape(-1, n)
    return words


def weight(v) -> int:
    return int(np.count_nonzero(v))


def error_patterns(n: int, q: int, t: int):
    """Yield ``(positions, values)`` for every nonzero error of weight <= t."""
    for w in range(1, t + 1):
        for pos in itertools.combinations(range(n), w):
            for vals in itertools.product(range(1, q), repeat=w):
                yield pos, vals


def sphere_count(n: int, q: int, t: int) -> int:
    return sum(math.comb(n, j) * (q - 1) ** j for j in range(t + 1))


class LinearCode:
    """An ``[n, k]_q`` linear code.

    Give a generator matrix, a parity-check matrix, or both.  Rank-deficient
    inputs are reduced to a row basis, and the missing matrix is computed as
    a null space.

    Parameters
    ----------
    generator, parity_check : MatrixF, optional
    budget : int
        Upper limit on enumerated codewords or error patterns for the
        exhaustive routines.
    """

    def __init__(self, generator: MatrixF | None = None, parity_check: MatrixF | None = None,
                 *, budget: int = DEFAULT_BUDGET):
        if generator is None and parity_check is None:
            raise ValidationError("a code needs a generator or a parity-check matrix")
        if generator is not None:
            generator = _row_basis(generator) if rank(generator) < generator.rows else generator
        if parity_check is not None:
            parity_check = _row_basis(parity_check) if rank(parity_check) < parity_check.rows else parity_check
        if generator is None:
            generator = null_space(parity_check)
        if parity_check is None:
            parity_check = null_space(generator)
        if generator.cols != parity_check.cols or generator.field != parity_check.field:
            raise DimensionError("generator and parity-check matrices disagree in shape or field")
        if generator.rows + parity_check.rows != generator.cols:
            raise ValidationError("generator and parity-check ranks do not add up to the length")
        if generator.rows and parity_check.rows and np.any((generator @ parity_check.T).data):
            raise ValidationError("generator rows violate the parity checks")

        self.field = generator.field
        self.generator = generator
        self.parity_check = parity_check
        self.budget = budget
        self._min_distance: int | None = None
        self._decoders: dict[int, SyndromeDecoder] = {}
        self._lock = threading.Lock()

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    def __repr__(self):
        d = "" if self._min_distance is None else f", {self._min_distance}"
        return f"LinearCode([{self.n}, {self.k}{d}]_{self.field.q})"

    # -- basic services ------------------------------------------------------

    def encode(self, message) -> np.ndarray:
        return vec_mat_mul(message, self.generator)

    def syndrome(self, word) -> np.ndarray:
        word = np.asarray(word, dtype=np.int64)
        if word.shape != (self.n,):
            raise DimensionError(f"word length {word.shape} != {self.n}")
        return vec_mat_mul(word, self.parity_check.T)

    def contains(self, word) -> bool:
        return not np.any(self.syndrome(word))

    def contains_all_one(self) -> bool:
        return self.contains(np.ones(self.n, dtype=np.int64))

    def message_of(self, codeword) -> np.ndarray:
        """Invert :meth:`encode` for a codeword."""
        m = solve(self.generator, codeword)
        if m is None:
            raise ValidationError("word is not a codeword")
        return m

    def dual(self) -> LinearCode:
        return LinearCode(self.parity_check, self.generator, budget=self.budget)

    def same_code(self, other: LinearCode) -> bool:
        return rref(self.generator)[0] == rref(other.generator)[0]

    # -- distance ------------------------------------------------------------

    def codewords(self) -> np.ndarray:
        """All ``q^k`` codewords (budget permitting)."""
        self._check_budget(self.field.q ** self.k, "codeword enumeration")
        return span(self.field, self.generator.data)

    def _check_budget(self, cost: int, what: str) -> None:
        if cost > self.budget:
            raise BudgetExceeded(
                f"{what} needs {cost} evaluations, budget is {self.budget}; "
                "certify the distance with column independence instead")

    def min_distance(self) -> int:
        """Minimum weight over all nonzero codewords, by exhaustive sweep.

        The sweep splits the generator rows in two halves and adds every word
        of one span to the whole other span in vectorised chunks.
        """
        if self._min_distance is not None:
            return self._min_distance
        if self.k == 0:
            raise ValidationError("the zero code has no nonzero codewords")
        F, q = self.field, self.field.q
        self._check_budget(q ** self.k, "minimum-distance sweep")
        half = self.k // 2
        top = span(F, self.generator.data[:half])
        bottom = span(F, self.generator.data[half:])
        step = max(1, _CHUNK // (bottom.size or 1))
        best = self.n
        for start in range(0, len(top), step):
            block = F.add(top[start:start + step, None, :], bottom[None, :, :])
            w = np.count_nonzero(block, axis=2)
            if start == 0:
                w[0, 0] = self.n + 1
            best = min(best, int(w.min()))
        self._min_distance = best
        return best

    def distance_at_least(self, d: int) -> bool:
        """Whether every nonzero codeword has weight >= ``d``.

        Uses whichever is cheaper: checking all ``d-1`` column subsets of the
        parity-check matrix, or the exhaustive codeword sweep.
        """
        if d <= 1:
            return True
        if self._min_distance is not None:
            return self._min_distance >= d
        if self.k == 0:
            return True
        subsets = sum(math.comb(self.n, s) for s in range(1, d))
        if subsets <= self.field.q ** self.k:
            return min_distance_by_columns(self.parity_check, limit=d - 1) is None
        return self.min_distance() >= d

    # -- decoding ------------------------------------------------------------

    def decoder(self, t: int) -> SyndromeDecoder:
        with self._lock:
            if t not in self._decoders:
                self._decoders[t] = SyndromeDecoder(self, t)
            return self._decoders[t]

    def syndrome_decode(self, word, t: int) -> np.ndarray:
        return self.decoder(t).decode(word)

    # -- files ---------------------------------------------------------------

    def save(self, generator_path, parity_check_path) -> None:
        save_matrix(self.generator, generator_path)
        save_matrix(self.parity_check, parity_check_path)


def min_distance_by_columns(H: MatrixF, limit: int | None = None) -> int | None:
    """Size of the smallest linearly dependent set of columns of ``H``.

    This equals the minimum distance of the code with parity-check matrix
    ``H``.  Only sets of size up to ``limit`` are searched; ``None`` means
    no dependent set was found within that range.
    """
    n = H.cols
    top = min(n, H.rank() + 1) if limit is None else min(n, limit)
    for s in range(1, top + 1):
        for cols in itertools.combinations(range(n), s):
            if rank(H.submatrix(cols=cols)) < s:
                return s
    return None


class SyndromeDecoder:
    """Bounded-distance decoder from a syndrome -> error-pattern table.

    Building the table fails if two patterns of weight <= t share a syndrome,
    which certifies ``d >= 2t + 1`` as a side effect.
    """

    def __init__(self, code: LinearCode, t: int):
        if t < 0:
            raise ValidationError("decoding radius must be non-negative")
        F, n = code.field, code.n
        count = sphere_count(n, F.q, t)
        code._check_budget(count, "syndrome table")
        self.code = code
        self.t = t
        H = code.parity_check.data
        self._weights = F.q ** np.arange(H.shape[0], dtype=np.int64)
        table = {0: None}
        for pos, vals in error_patterns(n, F.q, t):
            cols = F.mul(np.array(vals)[None, :], H[:, list(pos)])
            s = self._key(F.sum(cols, axis=1))
            if s in table:
                raise ValidationError(
                    f"two error patterns of weight <= {t} share a syndrome: "
                    f"the code cannot correct {t} errors")
            table[s] = (pos, vals)
        self._table = table

    def _key(self, syndrome) -> int:
        return int(np.dot(syndrome, self._weights))

    def __len__(self):
        return len(self._table)

    def decode(self, word) -> np.ndarray:
        """The unique codeword within distance ``t`` of ``word``.

        Raises
        ------
        DecodeFailure
            If the syndrome matches no error pattern of weight <= t.
        """
        word = np.asarray(word, dtype=np.int64)
        s = self._key(self.code.syndrome(word))
        try:
            hit = self._table[s]
        except KeyError:
            raise DecodeFailure(f"no codeword within distance {self.t}") from None
        if hit is None:
            return word.copy()
        pos, vals = hit
        out = word.copy()
        out[list(pos)] = self.code.field.sub(out[list(pos)], np.array(vals))
        return out
