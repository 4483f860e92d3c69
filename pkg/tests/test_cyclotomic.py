import pytest
from hypothesis import given, strategies as st

from fuglede.cyclotomic import CyclotomicInt, cyclotomic_polynomial

# Ascending coefficients, cross-checked against the standard table.
KNOWN_PHI = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    12: (1, 0, -1, 0, 1),
}


@pytest.mark.parametrize("m,phi", sorted(KNOWN_PHI.items()))
def test_cyclotomic_polynomial_table(m, phi):
    assert cyclotomic_polynomial(m) == phi


def test_phi_degrees_sum_to_m():
    for m in (6, 12, 30, 48, 60):
        total = sum(len(cyclotomic_polynomial(d)) - 1 for d in range(1, m + 1) if m % d == 0)
        assert total == m


def test_full_sum_of_cube_roots_is_zero():
    assert CyclotomicInt(3, (1, 1, 1)).is_zero()


def test_order_two():
    assert CyclotomicInt(2, (5, 5)).is_zero()
    assert not CyclotomicInt(2, (5, 4)).is_zero()


def test_cube_roots_embedded_in_order_six():
    c = CyclotomicInt(6, (1, 0, 1, 0, 1, 0))
    assert c.is_zero()
    assert abs(c.to_complex()) < 1e-12


def test_singleton_root_is_not_zero():
    for m in (2, 3, 6, 12):
        for k in range(m):
            assert not CyclotomicInt.from_root(m, k).is_zero()


def test_arithmetic_roundtrip():
    a = CyclotomicInt.from_root(6, 1)
    b = CyclotomicInt.from_root(6, 5)
    assert (a * b).coeffs[0] == 1  # omega * omega^5 = 1
    assert (a - a).is_zero()
    assert (a + (-a)).is_zero()
    assert a.conjugate() == b


@given(
    m=st.sampled_from([2, 3, 4, 5, 6, 8, 9, 12]),
    data=st.data(),
)
def test_is_zero_agrees_with_floating_point(m, data):
    coeffs = data.draw(
        st.lists(st.integers(-20, 20), min_size=m, max_size=m).map(tuple)
    )
    c = CyclotomicInt(m, coeffs)
    value = c.to_complex()
    if c.is_zero():
        assert abs(value) < 1e-9
    else:
        assert abs(value) > 1e-9


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        CyclotomicInt.from_root(3, 1) + CyclotomicInt.from_root(6, 1)


def test_order_limit():
    with pytest.raises(ValueError):
        CyclotomicInt.zero(65)
