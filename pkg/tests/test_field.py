from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from psmcodes import field as fm
from psmcodes.errors import FieldError
from psmcodes.field import FieldSpec, gf

SPECS = [gf(2), gf(3), gf(4), gf(5), gf(8), gf(9), gf(16), gf(27), gf(256)]


def test_gf4_addition():
    F = gf(4)
    assert F.add(1, 1) == 0
    assert F.add(2, 1) == 3
    assert gf(3).add(2, 2) == 1


def test_gf4_multiplication_and_inverse():
    F = gf(4)
    assert F.modulus == (1, 1, 1)  # x^2 + x + 1
    assert F.mul(2, 2) == 3
    assert F.inv(2) == 3
    for a in range(4):
        assert F.mul(a, 1) == a
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_element_wrapper():
    F = gf(4)
    a = F(2)
    assert a * a == F(3)
    assert a.inverse() == F(3)
    assert a + F(1) == F(3)
    assert a ** 3 == F(1)
    assert a.coefficients() == [0, 1]
    assert fm.mul(a, a) == F(3)
    with pytest.raises(ValueError):
        F(2) + gf(8)(2)


def test_base_subfield_predicate():
    F = gf(4)
    assert F.is_base_subfield(0) and F.is_base_subfield(1)
    assert not F.is_base_subfield(2)
    assert not gf(8).is_base_subfield(5)


def test_phi_projection():
    assert gf(4).phi_project(3) == 2
    assert gf(4).phi_project(1) == 0
    assert gf(8).phi_project(7) == 6
    with pytest.raises(FieldError):
        gf(9).phi_project(3)


def test_enumerate_F():
    assert [int(a) for a in fm.enumerate_F(gf(4))] == [0, 2]
    assert [int(a) for a in fm.enumerate_F(gf(2))] == [0]
    assert [int(a) for a in fm.enumerate_F(gf(8))] == [0, 2, 4, 6]
    with pytest.raises(FieldError):
        fm.enumerate_F(gf(3))


@pytest.mark.parametrize("q", [4, 8, 16, 32])
def test_F_structure(q):
    F = gf(q)
    Fset = F.f_set()
    assert len(Fset) == q // 2
    # closed under addition
    assert set(F.add(Fset[:, None], Fset[None, :]).ravel()) == set(Fset)
    # the pairs {c, c+1} partition the field, one member of each has a_0 = 0
    pairs = [{int(c), int(F.add(c, 1))} for c in Fset]
    assert set().union(*pairs) == set(range(q))
    assert sum(len(p) for p in pairs) == q
    for p in pairs:
        assert sum(1 for a in p if a % 2 == 0) == 1


def test_phi_recovers_F_part():
    F = gf(16)
    for alpha in (0, 1):
        for beta in F.f_set():
            assert F.phi_project(F.add(alpha, beta)) == beta


@pytest.mark.parametrize("F", [F for F in SPECS if F.q <= 27], ids=lambda F: f"GF{F.q}")
def test_field_axioms_exhaustive_small(F):
    a = np.arange(F.q)
    A, B = np.meshgrid(a, a, indexing="ij")
    assert np.array_equal(F.add(A, B), F.add(B, A))
    assert np.array_equal(F.mul(A, B), F.mul(B, A))
    assert np.all(F.add(A, F.neg(A)) == 0)
    nz = a[1:]
    assert np.all(F.mul(nz, F.inv(nz)) == 1)
    # multiplicative group is cyclic of order q-1
    powers = {int(F.power(F.generator, e)) for e in range(F.q - 1)}
    assert powers == set(range(1, F.q))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SPECS), st.data())
def test_field_axioms_random(F, data):
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.power(a, F.q - 1) == 1


def test_gf2_addition_is_xor():
    F = gf(256)
    a = np.arange(256)
    assert np.array_equal(F.add(a[:, None], a[None, :]), a[:, None] ^ a[None, :])


def test_larger_fields_build():
    for q in (2**16, 3**10):
        F = gf(q)
        assert F.mul(F.generator, F.inv(F.generator)) == 1


def test_rejects_bad_parameters():
    with pytest.raises(FieldError):
        gf(6)
    with pytest.raises(FieldError):
        FieldSpec(2, 2, (1, 0, 1))  # x^2 + 1 = (x+1)^2
    with pytest.raises(FieldError):
        FieldSpec(4, 1)


def test_explicit_modulus_and_line_roundtrip():
    F = FieldSpec(2, 3, (1, 0, 1, 1))  # x^3 + x^2 + 1
    assert FieldSpec.from_line(F.to_line()) == F
    assert F.mul(2, 4) == 5  # x * x^2 = x^2 + 1
    assert gf(4).to_line() == "field 2 2 7"
