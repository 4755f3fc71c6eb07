import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coset_atlas import gf
from coset_atlas.errors import (
    DivisionByZero, InconsistentSystem, MixedFields, NonPrimeCharacteristic, ReducibleModulus, UnsupportedOrder,
)

SMALL_QS = (5, 7, 8, 9, 11, 13, 16)


def test_prime_field_elements():
    F = gf.build_field(5)
    assert F.order == 5
    assert [int(a) for a in gf.all_elements(F)] == [0, 1, 2, 3, 4]


def test_gf8_modulus_accepted_and_reducible_rejected():
    F = gf.build_field(2, 3, [1, 1, 0, 1])
    assert F.order == 8
    with pytest.raises(ReducibleModulus):
        gf.build_field(2, 3, [1, 0, 0, 1])


def test_bad_characteristic_and_order():
    with pytest.raises(UnsupportedOrder):
        gf.build_field(2, 2)
    with pytest.raises(NonPrimeCharacteristic):
        gf.build_field(4, 2)
    with pytest.raises(UnsupportedOrder):
        gf.field_of_order(12)
    with pytest.raises(UnsupportedOrder):
        gf.field_of_order(256)


def test_small_examples():
    F5 = gf.build_field(5)
    assert F5.mul(3, 4) == 2
    assert F5.inv(2) == 3
    F8 = gf.build_field(2, 3, [1, 1, 0, 1])
    x, x2 = F8.from_coeffs((0, 1, 0)), F8.from_coeffs((0, 0, 1))
    assert F8.mul(x, x2) == F8.from_coeffs((1, 1, 0))


def test_field_element_operators():
    F = gf.build_field(7)
    a, b = F(3), F(5)
    assert int(a + b) == 1
    assert int(a - b) == 5
    assert int(a * b) == 1
    assert int(a / b) == int(a * gf.inv(b))
    assert int(a ** 6) == 1
    assert int(-a) == 4
    assert gf.pow_(a, 2) == gf.mul(a, a)
    with pytest.raises(DivisionByZero):
        gf.inv(F(0))
    with pytest.raises(MixedFields):
        gf.add(a, gf.build_field(5)(1))


def test_all_elements_sizes():
    F9 = gf.field_of_order(9)
    els = gf.all_elements(F9)
    assert len(els) == 9 and int(els[0]) == 0
    F8 = gf.field_of_order(8)
    assert len({int(e) for e in gf.all_elements(F8)}) == 8


@pytest.mark.parametrize("q", SMALL_QS)
def test_field_axioms_exhaustive(q):
    F = gf.field_of_order(q)
    A, M = F.add_table, F.mul_table
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    assert np.array_equal(A[A[a, b], c], A[a, A[b, c]])
    assert np.array_equal(M[M[a, b], c], M[a, M[b, c]])
    assert np.array_equal(M[a, A[b, c]], A[M[a, b], M[a, c]])
    for x in range(1, q):
        assert F.mul(x, F.inv(x)) == 1
        assert F.pow(x, q - 1) == 1
    assert all(F.add(x, F.neg(x)) == 0 for x in range(q))


@pytest.mark.parametrize("q", sorted(gf.DEFAULT_MODULI))
def test_default_moduli_irreducible(q):
    F = gf.field_of_order(q)
    assert F.order == q
    assert gf.is_irreducible(F.modulus, F.characteristic)


def test_parse_field_spec_and_table():
    F = gf.parse_field_spec("2^3:1,1,0,1")
    assert F == gf.field_of_order(8)
    assert gf.parse_field_spec(F.spec_string()) == F
    table = gf.parse_field_table("# comment\n2^3:1,0,1,1\n\n3^2:2,2,1  # nine\n")
    assert sorted(table) == [8, 9]
    assert gf.field_of_order(8, table).modulus == (1, 0, 1, 1)
    with pytest.raises(ValueError):
        gf.parse_field_spec("two^3")


def test_solve_identity_and_null_spaces():
    F = gf.build_field(5)
    x, nullity = gf.solve_linear(F, np.eye(4, dtype=np.int64), np.array([1, 2, 3, 4]))
    assert list(x) == [1, 2, 3, 4] and nullity == 0
    assert gf.null_space(F, np.zeros((1, 3), dtype=np.int64)).shape[0] == 3
    with pytest.raises(InconsistentSystem):
        gf.solve_linear(F, np.array([[1, 0], [1, 0]]), np.array([1, 2]))


def test_parity_check_null_space_dimension():
    from coset_atlas.code import build_code
    F = gf.field_of_order(5)
    code = build_code(F)
    assert gf.rank(F, code.H) == 4
    assert gf.null_space(F, code.H).shape == (2, 6)


@settings(max_examples=60, deadline=None)
@given(q=st.sampled_from((5, 7, 8, 9)), rows=st.integers(1, 5), cols=st.integers(1, 6), data=st.data())
def test_null_space_property(q, rows, cols, data):
    F = gf.field_of_order(q)
    A = np.array(data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols),
                                     min_size=rows, max_size=rows)), dtype=np.int64)
    N = gf.null_space(F, A)
    assert N.shape[0] == cols - gf.rank(F, A)
    if N.size:
        assert not F.matmul(A, N.T).any()
    b = F.matmul(A, np.arange(cols)[:, None] % q)[:, 0]
    x, nullity = gf.solve_linear(F, A, b)
    assert nullity == N.shape[0]
    assert np.array_equal(F.matmul(A, x[:, None])[:, 0], b)
