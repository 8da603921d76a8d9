"""Finite fields GF(p^m) in polynomial-basis integer encoding.

An element is an integer ``v`` in ``[0, q)`` whose base-``p`` digits, least
significant first, are the coefficients ``a_0, a_1, ..., a_{m-1}`` of
``a = sum_i a_i x^i`` reduced modulo the field's defining polynomial.  The
constant coefficient ``a_0`` is therefore always the lowest digit, so the
prime subfield is ``{0, ..., p-1}`` and, for ``p = 2``, the elements with
``a_0 = 0`` are exactly the even integers.

Two layers are provided:

* :class:`FieldSpec` owns lookup tables and vectorised numpy arithmetic on
  integer arrays.  Everything in :mod:`psmcodes.matrix` and above uses it.
* :class:`FieldElement` is a small scalar wrapper with operator overloading
  for interactive use and for the element-level functions
  (:func:`add`, :func:`mul`, :func:`phi_project`, ...).
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import FieldError

MAX_ORDER = 1 << 16
_FULL_TABLE_ORDER = 256


# ---------------------------------------------------------------------------
# Polynomials over GF(p), coefficient lists least significant first
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    i = 2
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        out.append(n)
    return out


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by ``b`` over GF(p)."""
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _monic_polys(p: int, degree: int) -> Iterable[list[int]]:
    for low in itertools.product(range(p), repeat=degree):
        yield list(reversed(low)) + [1]


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg/2."""
    coeffs = _trim(list(coeffs))
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if coeffs[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(coeffs, f, p):
                return False
    return True


def _digits(v: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        v, r = divmod(v, p)
        out.append(r)
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


def _raw_mul(a: int, b: int, p: int, modulus: Sequence[int]) -> int:
    m = len(modulus) - 1
    da, db = _digits(a, p, m), _digits(b, p, m)
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _undigits((_poly_mod(prod, modulus, p) + [0] * m)[:m], p)


def _raw_pow(a: int, e: int, p: int, modulus: Sequence[int]) -> int:
    result, base = 1, a
    while e:
        if e & 1:
            result = _raw_mul(result, base, p, modulus)
        base = _raw_mul(base, base, p, modulus)
        e >>= 1
    return result


def _is_generator(g: int, p: int, modulus: Sequence[int]) -> bool:
    q = p ** (len(modulus) - 1)
    if g == 0:
        return False
    if q == 2:
        return g == 1
    return all(_raw_pow(g, (q - 1) // f, p, modulus) != 1 for f in _prime_factors(q - 1))


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, degree: int) -> tuple[int, ...]:
    """Smallest primitive monic polynomial of the given degree.

    "Smallest" means lowest integer encoding ``sum c_i p^i``, so the choice is
    reproducible.  For GF(4) this is ``x^2 + x + 1``.
    """
    if degree == 1:
        return (0, 1)
    for f in _monic_polys(p, degree):
        if is_irreducible(f, p) and _is_generator(p, p, f):
            return tuple(f)
    raise FieldError(f"no primitive polynomial found for p={p}, degree={degree}")  # pragma: no cover


# ---------------------------------------------------------------------------
# FieldSpec
# ---------------------------------------------------------------------------

class FieldSpec:
    """The field GF(p^m) with a fixed polynomial basis.

    Parameters
    ----------
    p : int
        Characteristic, a prime.
    degree : int
        Extension degree ``m`` (``lambda`` in the masking construction).
    modulus : sequence of int, optional
        Monic irreducible defining polynomial, coefficients least significant
        first.  Defaults to :func:`default_modulus`.

    Use :func:`gf` to get cached instances.
    """

    def __init__(self, p: int, degree: int = 1, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise FieldError(f"characteristic must be prime, got {p}")
        if degree < 1:
            raise FieldError(f"extension degree must be positive, got {degree}")
        if p**degree > MAX_ORDER:
            raise FieldError(f"field order {p}^{degree} exceeds 2^16")
        if modulus is None:
            modulus = default_modulus(p, degree)
        modulus = tuple(int(c) % p for c in modulus)
        if len(_trim(list(modulus))) != degree + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus {modulus} is not monic of degree {degree}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.degree = degree
        self.modulus = modulus
        self.q = p**degree
        self._build_tables()

    def _build_tables(self) -> None:
        p, m, q = self.p, self.degree, self.q
        values = np.arange(q)
        self.digits = np.stack([(values // p**i) % p for i in range(m)], axis=1)
        self._weights = p ** np.arange(m)

        if m == 1:
            g = next(x for x in range(1, q) if _is_generator(x, p, (0, 1)))
            step = lambda v: v * g % p  # noqa: E731
        else:
            g = p if _is_generator(p, p, self.modulus) else next(
                x for x in range(2, q) if _is_generator(x, p, self.modulus))
            step = lambda v: _raw_mul(v, g, p, self.modulus)  # noqa: E731
        self.generator = g

        exp = np.zeros(2 * q, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = step(v)
        exp[q - 1:2 * q - 2] = exp[:q - 1]
        self._exp, self._log = exp, log

        if q <= _FULL_TABLE_ORDER:
            a, b = np.meshgrid(values, values, indexing="ij")
            self._mul_table = self._mul_logs(a, b)
            self._add_table = self._add_digits(a, b)
        else:
            self._mul_table = None
            self._add_table = None
        self._neg = self._from_digits((-self.digits) % p)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
        self._inv = inv

    # -- equality / repr ---------------------------------------------------

    def _key(self):
        return (self.p, self.degree, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec(p={self.p}, degree={self.degree}, modulus={self.modulus})"

    # -- vectorised arithmetic on integer arrays ---------------------------

    def _from_digits(self, d):
        return (np.asarray(d) * self._weights).sum(axis=-1)

    def _add_digits(self, a, b):
        return self._from_digits((self.digits[a] + self.digits[b]) % self.p)

    def _mul_logs(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.degree == 1:
            return (np.asarray(a) + b) % self.p
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._add_digits(a, b)

    def neg(self, a):
        if self.p == 2:
            return np.asarray(a)
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return self._mul_logs(a, b)

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._inv[a]

    def power(self, a, e: int):
        a = np.asarray(a)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            a, e = self.inv(a), -e
        out = self._exp[(self._log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def sum(self, a, axis=0):
        """Field sum of an integer array along ``axis``."""
        a = np.asarray(a)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.degree == 1:
            return a.sum(axis=axis) % self.p
        d = self.digits[a].sum(axis=axis) % self.p
        return self._from_digits(d)

    # -- structure used by the masking construction ------------------------

    def is_base_subfield(self, a):
        """True where every coefficient above ``x^0`` vanishes."""
        return np.asarray(a) < self.p

    def phi_project(self, a):
        """Zero the constant coefficient ``a_0``."""
        if self.p != 2:
            raise FieldError("phi projection is defined for characteristic 2 only")
        return np.asarray(a) & ~1

    def f_set(self) -> np.ndarray:
        """Elements with ``a_0 = 0``, ascending."""
        if self.p != 2:
            raise FieldError("the set F is defined for characteristic 2 only")
        return np.arange(0, self.q, 2)

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    # -- text format -------------------------------------------------------

    def to_line(self) -> str:
        """``field <p> <degree> <modulus>``, the modulus as its integer encoding."""
        return f"field {self.p} {self.degree} {_undigits(self.modulus, self.p)}"

    @classmethod
    def from_line(cls, line: str) -> FieldSpec:
        parts = line.split()
        if len(parts) != 4 or parts[0] != "field" or not all(x.isdigit() for x in parts[1:]):
            raise FieldError(f"malformed field line: {line!r}")
        p, degree, code = (int(x) for x in parts[1:])
        return gf_spec(p, degree, tuple(_digits(code, p, degree + 1)))


@functools.lru_cache(maxsize=None)
def gf_spec(p: int, degree: int = 1, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    return FieldSpec(p, degree, modulus)


def gf(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Cached field of order ``q``, which must be a prime power."""
    fs = _prime_factors(q) if q > 1 else []
    if len(fs) != 1:
        raise FieldError(f"field order must be a prime power, got {q}")
    p = fs[0]
    degree = 0
    n = q
    while n > 1:
        n //= p
        degree += 1
    return gf_spec(p, degree, None if modulus is None else tuple(modulus))


# ---------------------------------------------------------------------------
# Scalar elements
# ---------------------------------------------------------------------------

class FieldElement:
    """A single element of a :class:`FieldSpec`."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        value = int(value)
        if not 0 <= value < spec.q:
            raise FieldError(f"{value} is not an element of GF({spec.q})")
        self.spec = spec
        self.value = value

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            return FieldElement(self.spec, other)
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise FieldError("operands belong to different fields")
        return other

    def _wrap(self, v) -> FieldElement:
        return FieldElement(self.spec, int(v))

    def __add__(self, other):
        return self._wrap(self.spec.add(self.value, self._check(other).value))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.spec.sub(self.value, self._check(other).value))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __mul__(self, other):
        return self._wrap(self.spec.mul(self.value, self._check(other).value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __pow__(self, e: int):
        return self._wrap(self.spec.power(self.value, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.spec.inv(self.value))

    def coefficients(self) -> list[int]:
        return [int(d) for d in self.spec.digits[self.value]]

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        return isinstance(other, FieldElement) and self.spec == other.spec and self.value == other.value

    def __hash__(self):
        return hash((self.spec, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.spec.q})({self.value})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def is_base_subfield(a: FieldElement) -> bool:
    return bool(a.spec.is_base_subfield(a.value))


def phi_project(a: FieldElement) -> FieldElement:
    """Map ``sum_i a_i x^i`` to ``sum_{i>=1} a_i x^i`` (drop ``a_0``)."""
    return FieldElement(a.spec, int(a.spec.phi_project(a.value)))


def enumerate_F(spec: FieldSpec) -> list[FieldElement]:
    return [FieldElement(spec, int(v)) for v in spec.f_set()]
