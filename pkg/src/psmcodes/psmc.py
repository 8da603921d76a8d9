"""Masking codes for partially stuck-at-1 cells with error correction.

Two schemes live here:

:class:`PsmcScheme`
    Codes over GF(2^m) whose generator stacks a binary systematic block
    ``[I | R | 0]``, an information block ``[0 | I | P | 0]`` and the all-one
    row.  Encoding first shifts by ``(z + 1) * 1`` with ``z`` in the set F so
    that few stuck coordinates hold 0 or 1, then clears the remaining zeros
    with a binary combination of the rows of ``[I | R]``.

:class:`AllOnePsmc`
    For fewer than ``q`` stuck cells any code containing the all-one word
    works: add ``gamma * 1`` for a ``gamma`` that avoids every stuck zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import NamedTuple, Sequence

import numpy as np

from .code import LinearCode, min_distance_by_columns
from .errors import DimensionError, FormatError, ValidationError
from .field import FieldSpec, gf
from .matrix import MatrixF, _content_lines, _parse_matrix, hstack, identity, rank, solve, vec_mat_mul, vstack, zeros

GF2 = gf(2)


@dataclass(frozen=True)
class StuckProfile:
    """Positions of partially stuck cells and the level each is stuck at."""

    n: int
    positions: tuple[int, ...]
    levels: tuple[int, ...] = dc_field(default=None)

    def __post_init__(self):
        positions = tuple(int(p) for p in self.positions)
        levels = (1,) * len(positions) if self.levels is None else tuple(int(s) for s in self.levels)
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "levels", levels)
        if len(levels) != len(positions):
            raise ValidationError("one stuck level is needed per position")
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise ValidationError(f"stuck positions must be strictly increasing: {positions}")
        if positions and not (0 <= positions[0] and positions[-1] < self.n):
            raise ValidationError(f"stuck positions must lie in [0, {self.n})")
        if any(s < 1 for s in levels):
            raise ValidationError("stuck levels must be at least 1")

    @classmethod
    def at(cls, n: int, positions: Sequence[int], level: int = 1) -> StuckProfile:
        positions = sorted(positions)
        return cls(n, tuple(positions), (level,) * len(positions))

    @property
    def u(self) -> int:
        return len(self.positions)

    def index(self) -> list[int]:
        return list(self.positions)

    def satisfied_by(self, word) -> bool:
        word = np.asarray(word)
        return bool(np.all(word[self.index()] >= np.array(self.levels, dtype=np.int64)))


def _as_profile(phi, n: int) -> StuckProfile:
    if isinstance(phi, StuckProfile):
        if phi.n != n:
            raise ValidationError(f"stuck profile is for {phi.n} cells, codewords have {n}")
        return phi
    return StuckProfile.at(n, phi)


def _require_level_one(profile: StuckProfile) -> None:
    if any(s != 1 for s in profile.levels):
        raise ValidationError("only partially stuck-at-1 cells are supported")


# ---------------------------------------------------------------------------
# The two masking steps
# ---------------------------------------------------------------------------

def base_subfield_count(field: FieldSpec, word, positions) -> int:
    """How many of ``word[positions]`` lie in the prime subfield."""
    return int(np.count_nonzero(field.is_base_subfield(np.asarray(word)[list(positions)])))


def select_coset_shift(field: FieldSpec, w_base, positions) -> int:
    """Pick ``z`` in F minimising the {0,1}-entries of ``(w_base + z + 1)[positions]``.

    Candidates are tried in ascending order and the first minimiser wins.
    The pairs ``{c, c+1}`` for ``c`` in F partition the field, so some ``z``
    leaves at most ``floor(len(positions) / |F|)`` such entries.
    """
    sub = np.asarray(w_base, dtype=np.int64)[list(positions)]
    best_z, best = 0, None
    for z in field.f_set():
        shifted = field.add(sub, field.add(int(z), 1))
        count = int(np.count_nonzero(field.is_base_subfield(shifted)))
        if best is None or count < best:
            best_z, best = int(z), count
    return best_z


def solve_masking_vector(field: FieldSpec, w, positions, H0: MatrixF, u0: int | None = None) -> np.ndarray:
    """Binary ``z_vec`` such that ``w + [z_vec @ H0 | 0]`` is nonzero on ``positions``.

    Where ``w`` is 0 the added binary word must be 1, where ``w`` is 1 it must
    be 0, and elsewhere it is unconstrained.  Position ``n`` (the appended
    coordinate) is covered by the zero column.
    """
    w = np.asarray(w, dtype=np.int64)
    n = H0.cols
    constrained = [i for i in positions if w[i] < 2]
    if u0 is not None and len(constrained) > u0:
        raise ValidationError(
            f"{len(constrained)} stuck entries in {{0, 1}} exceed the masking capability u0={u0}")
    cols = [i for i in constrained if i < n]
    if any(i >= n and w[i] == 0 for i in constrained):
        raise ValidationError("the appended coordinate is zero and cannot be masked")
    if not cols:
        return np.zeros(H0.rows, dtype=np.int64)
    target = (w[cols] == 0).astype(np.int64)
    z_vec = solve(H0.submatrix(cols=cols), target)
    if z_vec is None:
        raise ValidationError(f"masking system for positions {cols} has no binary solution")
    return z_vec


# ---------------------------------------------------------------------------
# Scheme validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


class EncodeTrace(NamedTuple):
    codeword: np.ndarray
    w: np.ndarray
    z: int
    z_vec: np.ndarray


def _as_matrix(field: FieldSpec, M) -> MatrixF:
    if isinstance(M, MatrixF):
        if M.field != field:
            M = MatrixF(field, M.data)
        return M
    return MatrixF(field, np.asarray(M, dtype=np.int64))


def scheme_checks(field: FieldSpec, n, u, t, l, k1, r, H0, P, *, exact: bool = False):
    """Run every precondition of the construction in order.

    Returns ``(checks, info)``.  ``info`` holds what could be computed:
    ``u0``, ``d0``, the assembled ``G`` and its ``code``; with ``exact`` also
    the exhaustive minimum distance ``d``.  Checks after the first failure
    that depend on it are skipped.
    """
    checks: list[Check] = []
    info: dict = {}

    def add(name, ok, detail=""):
        checks.append(Check(name, bool(ok), detail))
        return ok

    if not add("field", field.p == 2 and field.degree > 1,
               f"GF({field.q}) must be GF(2^m) with m > 1"):
        return checks, info
    ints = dict(n=n, u=u, t=t, l=l, k1=k1, r=r)
    if not add("positive", all(isinstance(v, (int, np.integer)) and v > 0 for v in ints.values()),
               f"parameters must be positive integers: {ints}"):
        return checks, info
    dims_ok = k1 == n - l - r and u <= n and t <= n
    add("dimensions", dims_ok, f"need k1 = n - l - r and u, t <= n (n={n}, l={l}, k1={k1}, r={r})")
    try:
        H0m = MatrixF(GF2, np.asarray(H0.data if isinstance(H0, MatrixF) else H0, dtype=np.int64))
    except DimensionError:
        add("H0 binary", False, "H0 has entries outside {0, 1}")
        return checks, info
    shape_ok = H0m.shape == (l, n)
    add("H0 shape", shape_ok, f"H0 is {H0m.shape}, expected {(l, n)}")
    add("H0 systematic", shape_ok and np.array_equal(H0m.data[:, :l], np.eye(l, dtype=np.int64)),
        "H0 must start with an identity block")
    Pm = _as_matrix(field, P)
    add("P shape", Pm.shape == (k1, r), f"P is {Pm.shape}, expected {(k1, r)}")
    if not all(c.passed for c in checks):
        return checks, info

    u0 = (2 * u) // field.q
    info["u0"] = u0
    dependent = min_distance_by_columns(H0m, limit=u0) if u0 > 0 else None
    info["d0"] = min_distance_by_columns(H0m)
    add("H0 column independence", dependent is None,
        f"every {u0} columns of H0 must be independent (d0={info['d0']}, need >= {u0 + 1})")

    G = assemble_generator(field, H0m, Pm)
    info["G"] = G
    add("G rank", rank(G) == l + k1 + 1, f"rank must be {l + k1 + 1}")
    if not checks[-1].passed:
        return checks, info
    C = LinearCode(G)
    info["code"] = C
    if exact:
        info["d"] = C.min_distance()
    add("distance", C.distance_at_least(2 * t + 1), f"need d >= {2 * t + 1}"
        + (f" (d={info['d']})" if "d" in info else ""))
    return checks, info


def assemble_generator(field: FieldSpec, H0: MatrixF, P: MatrixF) -> MatrixF:
    l, n = H0.shape
    k1 = P.rows
    H0f = MatrixF(field, H0.data)
    top = hstack([H0f, zeros(field, l, 1)])
    middle = hstack([zeros(field, k1, l), identity(field, k1), P, zeros(field, k1, 1)])
    ones = MatrixF(field, np.ones((1, n + 1), dtype=np.int64))
    return vstack([top, middle, ones])


def build_scheme(field: FieldSpec, n: int, u: int, t: int, l: int, k1: int, r: int, H0, P) -> PsmcScheme:
    """Validate the parameters and matrices and return a ready scheme.

    Raises
    ------
    ValidationError
        Naming the first failed precondition.
    """
    checks, info = scheme_checks(field, n, u, t, l, k1, r, H0, P)
    for c in checks:
        if not c.passed:
            raise ValidationError(f"{c.name}: {c.detail}")
    return PsmcScheme(field, n, u, t, l, k1, r, MatrixF(GF2, np.asarray(
        H0.data if isinstance(H0, MatrixF) else H0)), _as_matrix(field, P), info)


class PsmcScheme:
    """A validated ``(u, t)``-PSMC of length ``n + 1`` over GF(2^m).

    Build with :func:`build_scheme`.  Messages are pairs ``(m, m_prime)``
    with ``m`` in GF(2^m)^k1 and ``m_prime`` in F^l.
    """

    def __init__(self, field, n, u, t, l, k1, r, H0: MatrixF, P: MatrixF, info: dict):
        self.field = field
        self.n, self.u, self.t, self.l, self.k1, self.r = n, u, t, l, k1, r
        self.H0 = H0
        self.P = P
        self.u0 = info["u0"]
        self.d0 = info["d0"]
        self.G = info["G"]
        self.code: LinearCode = info["code"]
        self._H0_pad = MatrixF(field, np.hstack([H0.data, np.zeros((l, 1), dtype=np.int64)]))
        self._G1_pad = self.G.submatrix(rows=range(l, l + k1))
        self._H0_bin = H0
        # building the table up front keeps decode() a pure lookup
        self.decoder = self.code.decoder(t)

    def __repr__(self):
        return (f"PsmcScheme(GF({self.field.q}), n={self.n}, u={self.u}, t={self.t}, "
                f"l={self.l}, k1={self.k1}, r={self.r}, u0={self.u0})")

    @property
    def length(self) -> int:
        return self.n + 1

    @property
    def cardinality(self) -> int:
        return 2 ** (self.field.degree * (self.k1 + self.l) - self.l)

    # -- encoding ------------------------------------------------------------

    def _check_message(self, m, m_prime):
        m = np.asarray(m, dtype=np.int64)
        m_prime = np.asarray(m_prime, dtype=np.int64)
        if m.shape != (self.k1,) or m_prime.shape != (self.l,):
            raise DimensionError(f"messages must have lengths {self.k1} and {self.l}")
        if np.any((m < 0) | (m >= self.field.q)) or np.any((m_prime < 0) | (m_prime >= self.field.q)):
            raise ValidationError("message entries outside the field")
        if np.any(m_prime & 1):
            raise ValidationError("m_prime entries must have zero constant coefficient")
        return m, m_prime

    def encode_trace(self, m, m_prime, phi) -> EncodeTrace:
        """Encode and also return the intermediate ``w``, ``z`` and ``z_vec``."""
        F = self.field
        m, m_prime = self._check_message(m, m_prime)
        profile = _as_profile(phi, self.length)
        _require_level_one(profile)
        if profile.u > self.u:
            raise ValidationError(f"{profile.u} stuck cells exceed the design value u={self.u}")
        positions = profile.index()
        w_base = F.add(vec_mat_mul(m_prime, self._H0_pad), vec_mat_mul(m, self._G1_pad))
        z = select_coset_shift(F, w_base, positions)
        w = F.add(w_base, F.add(z, 1))
        z_vec = solve_masking_vector(F, w, positions, self._H0_bin, self.u0)
        mask = np.append(vec_mat_mul(z_vec, self._H0_bin), 0)
        return EncodeTrace(F.add(w, mask), w, z, z_vec)

    def encode(self, m, m_prime, phi) -> np.ndarray:
        return self.encode_trace(m, m_prime, phi).codeword

    # -- decoding ------------------------------------------------------------

    def decode(self, y) -> tuple[np.ndarray, np.ndarray]:
        """Recover ``(m, m_prime)`` from a word with at most ``t`` errors.

        Raises :class:`~psmcodes.errors.DecodeFailure` beyond the radius.
        """
        F = self.field
        v = self.decoder.decode(y)
        v1 = F.sub(v, v[self.n])
        m2 = v1[:self.l]
        m_prime = F.phi_project(m2)
        v2 = F.sub(v1, vec_mat_mul(m2, self._H0_pad))
        return v2[self.l:self.l + self.k1], m_prime

    # -- uniform interface for the channel harness ----------------------------

    def random_message(self, rng: np.random.Generator):
        q = self.field.q
        return (rng.integers(0, q, self.k1), 2 * rng.integers(0, q // 2, self.l))

    def encode_message(self, message, phi) -> np.ndarray:
        return self.encode(*message, phi)

    def decode_message(self, y):
        return self.decode(y)

    # -- text format ---------------------------------------------------------

    def to_text(self) -> str:
        params = f"{self.n} {self.u} {self.t} {self.l} {self.k1} {self.r}"
        return f"{self.field.to_line()}\n{params}\n{self.H0.to_text()}{self.P.to_text()}"

    def save(self, path) -> None:
        try:
            Path(path).write_text(self.to_text())
        except OSError as exc:
            raise FormatError(f"cannot write {path}: {exc}") from None


def parse_scheme_text(text: str):
    """Parse a scheme file into the arguments of :func:`build_scheme`."""
    lines = _content_lines(text.splitlines())
    try:
        field = FieldSpec.from_line(lines[0])
        n, u, t, l, k1, r = (int(x) for x in lines[1].split())
    except (IndexError, ValueError) as exc:
        raise FormatError(f"malformed scheme header: {exc}") from None
    H0, rest = _parse_matrix(lines[2:])
    P, rest = _parse_matrix(rest)
    if rest:
        raise FormatError(f"trailing content in scheme file: {rest[0]!r}")
    return dict(field=field, n=n, u=u, t=t, l=l, k1=k1, r=r, H0=H0, P=MatrixF(field, P.data))


def load_scheme(path) -> PsmcScheme:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    return build_scheme(**parse_scheme_text(text))


# ---------------------------------------------------------------------------
# Masking with the all-one codeword (u < q)
# ---------------------------------------------------------------------------

class AllOnePsmc:
    """``(u, t)``-PSMC from any code that contains the all-one word, ``u < q``.

    Codewords are ``m @ G_sub + gamma * 1`` where ``G_sub`` spans a
    complement of the all-one line inside the code.  At most ``u`` values of
    ``gamma`` put a zero on a stuck cell, so one of the ``q`` candidates is
    always free; the smallest is used.

    Parameters
    ----------
    code : LinearCode
    u : int
        Number of stuck cells to tolerate; must be below ``q``.
    t : int, optional
        Decoding radius; defaults to ``(d - 1) // 2`` from the exhaustive
        minimum distance.
    """

    def __init__(self, code: LinearCode, u: int, t: int | None = None):
        q = code.field.q
        if u >= q:
            raise ValidationError(f"all-one masking needs u < q, got u={u}, q={q}")
        if not code.contains_all_one():
            raise ValidationError("the code does not contain the all-one word")
        if t is None:
            t = (code.min_distance() - 1) // 2 if code.k > 1 else 0
        self.code = code
        self.field = code.field
        self.u = u
        self.t = t
        ones = np.ones(code.n, dtype=np.int64)
        rows = [ones]
        for g in code.generator.data:
            if rank(MatrixF(self.field, np.vstack(rows + [g]))) > len(rows):
                rows.append(g)
        self.G_sub = MatrixF(self.field, np.array(rows[1:], dtype=np.int64).reshape(-1, code.n))
        self._basis = MatrixF(self.field, np.vstack(rows[1:] + [ones]))
        self.decoder = code.decoder(t)

    def __repr__(self):
        return f"AllOnePsmc({self.code!r}, u={self.u}, t={self.t})"

    @property
    def length(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.G_sub.rows

    @property
    def cardinality(self) -> int:
        return self.field.q ** self.k

    def select_shift(self, base, positions) -> int:
        F = self.field
        forbidden = {int(v) for v in F.neg(np.asarray(base)[list(positions)])}
        return next(g for g in range(F.q) if g not in forbidden)

    def encode(self, m, phi) -> np.ndarray:
        profile = _as_profile(phi, self.length)
        _require_level_one(profile)
        if profile.u > self.u:
            raise ValidationError(f"{profile.u} stuck cells exceed the design value u={self.u}")
        m = np.asarray(m, dtype=np.int64)
        if m.shape != (self.k,):
            raise DimensionError(f"message length must be {self.k}")
        base = vec_mat_mul(m, self.G_sub) if self.k else np.zeros(self.length, dtype=np.int64)
        gamma = self.select_shift(base, profile.index())
        return self.field.add(base, gamma)

    def decode(self, y) -> np.ndarray:
        v = self.decoder.decode(y)
        x = solve(self._basis, v)
        return x[:self.k]

    def random_message(self, rng: np.random.Generator):
        return (rng.integers(0, self.field.q, self.k),)

    def encode_message(self, message, phi) -> np.ndarray:
        return self.encode(message[0], phi)

    def decode_message(self, y):
        return (self.decode(y),)


def encode_all_one_psmc(code: LinearCode, m, phi, u: int | None = None) -> np.ndarray:
    u = len(_as_profile(phi, code.n).positions) if u is None else u
    return AllOnePsmc(code, u, t=0).encode(m, phi)


def decode_all_one_psmc(code: LinearCode, y, t: int) -> np.ndarray:
    return AllOnePsmc(code, 0, t).decode(y)


def example1_scheme() -> PsmcScheme:
    from . import example1 as ex
    return build_scheme(ex.FIELD, ex.N, ex.U, ex.T, ex.L, ex.K1, ex.R, ex.H0, ex.P)
