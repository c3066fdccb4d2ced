import pytest
from hypothesis import given, settings, strategies as st

from partition_forge import classic
from partition_forge.core import ColorSystem, EnergyMatrix, SizeTransform, UsageError
from partition_forge.families import Budget, members
from partition_forge.series import (
    ProductFactor,
    TruncatedSeries,
    gf_from_partitions,
    partition_weight,
    pochhammer_expand,
)

from helpers import mixed_energy


def q_only(order):
    return TruncatedSeries.one(order, 0)


def mono(coeff, d, order):
    return TruncatedSeries.monomial(coeff, d, (), order, 0)


def test_basic_ring_ops():
    one_plus_q = mono(1, 0, 3) + mono(1, 1, 3)
    one_minus_q = mono(1, 0, 3) + mono(-1, 1, 3)
    prod = one_plus_q * one_minus_q
    assert prod == mono(1, 0, 3) + mono(-1, 2, 3)
    assert prod.coeff(2) == -1
    assert prod.coeff(1) == 0


def test_constant_term_of_positive_offset_products():
    factors = (
        ProductFactor(1, (), 1, 1),
        ProductFactor(-1, (), 3, 2),
        ProductFactor(1, (), 2, 2, reciprocal=True),
    )
    assert pochhammer_expand(factors, 8, 0).coeff(0) == 1


def test_distinct_parts_product():
    # (-q; q)_inf counts partitions into distinct parts
    series = pochhammer_expand((ProductFactor(1, (), 1, 1),), 5, 0)
    assert series.q_coefficients() == [classic.count_distinct(n) for n in range(6)]


def test_distinct_odd_product():
    series = pochhammer_expand((ProductFactor(1, (), 1, 2),), 9, 0)
    assert series.q_coefficients() == [1, 1, 0, 1, 1, 1, 1, 1, 2, 2]
    assert series.q_coefficients() == [classic.count_distinct_odd(n) for n in range(10)]


def test_euler_product_equality():
    lhs = pochhammer_expand((ProductFactor(1, (), 1, 1),), 12, 0)
    rhs = pochhammer_expand(
        (ProductFactor(-1, (), 2, 2), ProductFactor(-1, (), 1, 1, reciprocal=True)),
        12,
        0,
    )
    third = pochhammer_expand((ProductFactor(-1, (), 1, 2, reciprocal=True),), 12, 0)
    assert lhs == rhs == third


def test_three_regular_product_coefficient():
    series = pochhammer_expand(
        (ProductFactor(-1, (), 3, 3), ProductFactor(-1, (), 1, 1, reciprocal=True)),
        16,
        0,
    )
    assert series.coeff(16) == classic.count_m_regular(16, 3)


@pytest.mark.parametrize("m", (2, 3, 4))
def test_glaisher_product_three_ways(m):
    series = pochhammer_expand(
        (ProductFactor(-1, (), m, m), ProductFactor(-1, (), 1, 1, reciprocal=True)),
        20,
        0,
    )
    for n in range(21):
        expected = series.coeff(n)
        assert classic.count_m_regular(n, m) == expected
        assert classic.count_occurrences_below(n, m) == expected
        assert classic.count_m_flat(n, m) == expected


def test_gf_from_partitions_empty():
    assert gf_from_partitions((), lambda p: (0, ()), 5, 0) == TruncatedSeries.zero(5, 0)


def test_gf_counts_single_part_flats():
    colors, energy = mixed_energy()
    weight, nvars = partition_weight(colors, energy)
    flats = members("F1", energy, colors, Budget(2, 3))
    series = gf_from_partitions(flats, weight, 2, nvars)
    singles = [
        pi for pi in flats
        if len(pi) == 2 and pi[0].size == 1
    ]
    assert sum(v for (d, _), v in series.coeffs.items() if d == 1) == len(singles)


def test_strict_single_color_gf_matches_product():
    # one non-ground color: (-x q; q)_inf lists partitions into distinct
    # parts with the color exponent marking the number of parts
    colors = ColorSystem(("x", "g"), 1)
    energy = EnergyMatrix(((1, 1), (0, 0)))
    weight, nvars = partition_weight(colors, energy)
    flats = members("R1", energy, colors, Budget(12, 13))
    lhs = gf_from_partitions(flats, weight, 12, nvars)
    rhs = pochhammer_expand((ProductFactor(1, (1,), 1, 1),), 12, 1)
    for d in range(13):
        for e in range(5):
            assert lhs.coeff(d, (e,)) == rhs.coeff(d, (e,))


def test_negative_transformed_degree_rejected():
    colors = ColorSystem(("x", "g"), 1)
    energy = EnergyMatrix(((1, 1), (0, 0)))
    bad = SizeTransform(1, (-5, 0))
    weight, nvars = partition_weight(colors, energy, transform=bad)
    flats = members("R1", energy, colors, Budget(4, 3))
    with pytest.raises(UsageError):
        gf_from_partitions(flats, weight, 4, nvars)


def test_reciprocal_needs_positive_offset():
    with pytest.raises(UsageError):
        pochhammer_expand((ProductFactor(1, (), 0, 2, reciprocal=True),), 4, 0)
    with pytest.raises(UsageError):
        pochhammer_expand((ProductFactor(1, (), 1, 0),), 4, 0)


def test_dimension_mismatch_rejected():
    with pytest.raises(UsageError):
        TruncatedSeries.one(4, 1) * TruncatedSeries.one(4, 2)
    with pytest.raises(UsageError):
        TruncatedSeries.one(4, 1) + TruncatedSeries.one(5, 1)


def test_text_and_json_forms():
    s = TruncatedSeries(4, 2, {(0, (0, 0)): 1, (2, (1, 0)): -3, (1, (0, 2)): 2})
    assert s.text(["a", "b"]) == "1 + 2*q^1*b^2 + -3*q^2*a^1"
    dump = s.to_json(["a", "b"])
    assert dump["terms"][1] == {"coeff": 2, "q": 1, "exps": [0, 2]}


small_series = st.builds(
    lambda entries: TruncatedSeries(6, 1, {
        (d, (e,)): c for (d, e, c) in entries
    }),
    st.lists(
        st.tuples(st.integers(0, 6), st.integers(-2, 3), st.integers(-4, 4)),
        max_size=6,
    ),
)


@given(small_series, small_series, small_series)
@settings(max_examples=120, deadline=None)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_series)
@settings(max_examples=60, deadline=None)
def test_ring_identities(a):
    one = TruncatedSeries.one(6, 1)
    zero = TruncatedSeries.zero(6, 1)
    assert a * one == a
    assert a + zero == a
    assert a + (-a) == zero
