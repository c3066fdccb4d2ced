import pytest

from partition_forge.core import UsageError, ground_delta, validate_energy
from partition_forge.characters import (
    build_config,
    character_lhs,
    character_rhs,
    glaisher_analogue_setup,
    keith_xiong_setup,
    siladic_setup,
    verify_character,
    verify_named_identity,
)
from partition_forge.series import ProductFactor, TruncatedSeries, pochhammer_expand


def test_a_type_config():
    config = build_config("A2n2", 2)
    colors, energy = config.colors, config.energy
    assert colors.names == ("c1", "c2", "cb2", "cb1", "c0")
    assert colors.label(colors.ground) == "c0"
    report = validate_energy(energy, colors)
    assert report["minimal"] and report["ground_ok"] and report["delta_g"] == 0
    # strict chain: at equal size cb1 > cb2 > c2 > c1, nothing repeats
    for c in colors.non_ground:
        assert energy.e(c, c) == 1
    assert energy.e(colors.index("cb1"), colors.index("c1")) == 0
    assert energy.e(colors.index("c1"), colors.index("cb1")) == 1
    # transformed energy doubles the chain and charges the ground row/column
    ep = config.energy_prime
    assert ep.e(colors.index("c1"), colors.index("c1")) == 2
    assert ep.e(colors.index("c1"), colors.ground) == 1
    assert ep.e(colors.ground, colors.index("c1")) == 1


def test_d_type_repeatable_color():
    config = build_config("Dn12-L0", 2)
    c0b = config.colors.index("c0b")
    assert config.energy.e(c0b, c0b) == 0
    assert ground_delta(config.energy, config.colors) == 0


def test_d_lambda_n_ground_and_shifts():
    config = build_config("Dn12-Ln", 2)
    colors = config.colors
    assert colors.label(colors.ground) == "c0b"
    assert config.energy.e(colors.index("c0"), colors.index("c0")) == 0
    shifts = dict(zip(colors.names, config.transform.shifts))
    assert shifts == {"cb2": -2, "cb1": -2, "c0": -1, "c1": 0, "c2": 0, "c0b": 0}


def test_b_type_alternating_pair():
    config = build_config("Bn1-Ln", 3)
    colors, energy = config.colors, config.energy
    c1, cb1 = colors.index("c1"), colors.index("cb1")
    assert energy.e(c1, cb1) == 0 and energy.e(cb1, c1) == 0
    assert energy.e(c1, c1) == 1 and energy.e(cb1, cb1) == 1
    # the transformed matrix picks up the single negative entry
    assert config.energy_prime.e(cb1, c1) == -1


def test_rank_bounds():
    with pytest.raises(UsageError):
        build_config("A2n2", 1)
    with pytest.raises(UsageError):
        build_config("Bn1-Ln", 2)
    with pytest.raises(UsageError):
        build_config("Xn", 2)


def test_lhs_constant_term():
    for family, rank in (("A2n2", 2), ("Dn12-L0", 2), ("Dn12-Ln", 2), ("Bn1-Ln", 3)):
        config = build_config(family, rank)
        lhs = character_lhs(config, 2)
        assert lhs.coeff(0, (0,) * len(config.colors.non_ground)) == 1
        assert character_rhs(config, 2).coeff(0, (0,) * len(config.colors.non_ground)) == 1


def test_a_type_first_coefficient():
    config = build_config("A2n2", 2)
    lhs = character_lhs(config, 1)
    nvars = len(config.colors.non_ground)
    for i in range(nvars):
        unit = tuple(1 if j == i else 0 for j in range(nvars))
        assert lhs.coeff(1, unit) == 1
    assert sum(v for (d, _), v in lhs.coeffs.items() if d == 1) == 4
    assert lhs == character_rhs(config, 1)


def test_d_lambda0_repeatable_term():
    config = build_config("Dn12-L0", 2)
    lhs = character_lhs(config, 1)
    colors = config.colors
    var = {c: i for i, c in enumerate(colors.non_ground)}
    unit = tuple(
        1 if i == var[colors.index("c0b")] else 0 for i in range(len(var))
    )
    assert lhs.coeff(1, unit) == 1


def test_b_alternating_block_factor():
    # the alternating pair at a fixed size is generated by
    # (1 + c1 q^k)(1 + cb1 q^k) / (1 - c1 cb1 q^(2k))
    order = 8
    for k in (1, 2, 3):
        closed = pochhammer_expand(
            (
                ProductFactor(1, (1, 0), k, order + 1),
                ProductFactor(1, (0, 1), k, order + 1),
                ProductFactor(1, (1, 1), 2 * k, order + 1, reciprocal=True),
            ),
            order,
            2,
        )
        direct = TruncatedSeries.zero(order, 2)
        for first in (0, 1):
            length = 1
            while True:
                ones = (length + 1) // 2
                others = length // 2
                exps = (ones, others) if first == 0 else (others, ones)
                if k * length > order:
                    break
                direct += TruncatedSeries.monomial(1, k * length, exps, order, 2)
                length += 1
        direct += TruncatedSeries.one(order, 2)
        assert closed == direct, k


@pytest.mark.parametrize(
    "family,rank", (("A2n2", 2), ("Dn12-L0", 2), ("Dn12-Ln", 2), ("Bn1-Ln", 3))
)
def test_character_identity_small_order(family, rank):
    report = verify_character(family, rank, 5)
    assert report["paths_agree"]
    assert report["lhs_equals_rhs"]


def test_character_rank_three_d_type():
    report = verify_character("Dn12-L0", 3, 4)
    assert report["pass"]


def test_identity_setups():
    colors, energy, transform = keith_xiong_setup(3)
    assert ground_delta(energy, colors) == 1
    assert transform.scale == 3 and transform.shifts == (0, 1, 2)
    colors, energy, transform = glaisher_analogue_setup(3)
    assert energy.e(1, 1) == 1 and energy.e(0, 0) == 0
    colors, energy, transform = siladic_setup()
    assert transform.scale == 4 and transform.shifts == (-3, -1, 0)
    with pytest.raises(UsageError):
        keith_xiong_setup(1)


def test_named_identities_small():
    assert verify_named_identity("euler", 12)["pass"]
    assert verify_named_identity("glaisher", 12, m=2)["pass"]
    assert verify_named_identity("keith_xiong", 10, m=2)["pass"]
    report = verify_named_identity("glaisher_analogue", 16, m=3)
    assert report["pass"]
    row16 = report["rows"][16]
    assert row16["regular_distinct"] == 10 and row16["flat_second_kind"] == 10
    report = verify_named_identity("siladic_companion", 9)
    assert report["pass"]
    assert [row["A"] for row in report["rows"]] == [1, 1, 0, 1, 1, 1, 1, 1, 2, 2]


def test_identity_argument_errors():
    with pytest.raises(UsageError):
        verify_named_identity("glaisher", 6)
    with pytest.raises(UsageError):
        verify_named_identity("no-such-identity", 6)


@pytest.mark.parametrize("family", ("A2n2", "Dn12-L0", "Dn12-Ln"))
def test_character_identity_rank_three(family):
    report = verify_character(family, 3, 4)
    assert report["pass"], family
