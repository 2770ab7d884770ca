import random

import pytest

from holobranch.chars import decompose_full, shift_char, sym_power_characters
from holobranch.hermitian import setting
from holobranch.parabolic import (aq_ktype_multiplicity, aq_ktypes,
                                  infinitesimal_character, lowest_ktype,
                                  range_check)
from holobranch.roots import vadd, vec, vscale
from holobranch.verify import ambient_factor


def fs_of(name):
    return ambient_factor(setting(name))


def test_u_cap_p_counts():
    fs = fs_of("sp(3,R)")
    pd = fs.parabolic(3)
    assert len(pd.u_cap_p) == 6
    assert pd.u_is_abelian


def test_levi_compact_system():
    fs = fs_of("su(3,2)")
    pd = fs.parabolic(3)
    assert sorted(pd.levi_compact_system.component_type()) == [
        ("A", 1), ("A", 2)]


def test_two_rho_shift_is_lowest_ktype():
    fs = fs_of("so*(8)")
    pd = fs.parabolic(3)
    lam = vscale(-2, fs.fund_weight(3))
    assert lowest_ktype(pd, lam) == vadd(lam, pd.two_rho_u_cap_p)


def test_range_check_values():
    fs = fs_of("sp(2,R)")
    pd = fs.parabolic(2)
    assert range_check(pd, vec([0, 0])) == "good"
    assert range_check(pd, vscale(-1, fs.fund_weight(2))) == "weakly_fair"
    assert range_check(pd, vscale(-40, fs.fund_weight(2))) == "outside"


def test_infinitesimal_character_shifts_by_rho():
    fs = fs_of("sp(2,R)")
    pd = fs.parabolic(2)
    lam = vscale(-2, fs.fund_weight(2))
    assert infinitesimal_character(pd, lam) == vadd(lam, fs.rs.rho)


def _naive_expansion(pd, lam, depth):
    """Unfolded accumulation; only valid when no Weyl folding occurs."""
    shift = vadd(vec(lam), pd.two_rho_u_cap_p)
    sym = sym_power_characters([(w, 1) for w in pd.u_cap_p], depth,
                               dim=pd.factor.rs.dim)
    out = {}
    for j, ch in enumerate(sym):
        for nu, m in decompose_full(pd.levi_compact_system,
                                    shift_char(ch, shift)):
            out[(j, nu)] = out.get((j, nu), 0) + m
    return out


SEED_CASES = [
    ("sp(2,R)", 2), ("sp(3,R)", 3), ("su(2,2)", 2), ("su(3,2)", 3),
    ("so*(8)", 3), ("so(2,6)", 1), ("so(2,7)", 1),
]


def test_shortcut_agrees_with_full_expansion():
    rng = random.Random(7)
    checked = 0
    while checked < 50:
        name, node = SEED_CASES[rng.randrange(len(SEED_CASES))]
        fs = fs_of(name)
        pd = fs.parabolic(node)
        lam = vscale(-rng.randrange(0, 4), fs.fund_weight(node))
        try:
            acc, shortcut = aq_ktypes(pd, lam, 3)
        except ValueError:
            continue
        if not shortcut:
            continue
        assert acc == _naive_expansion(pd, lam, 3)
        checked += 1


def test_negative_aggregate_rejected():
    fs = fs_of("su(2,2)")
    pd = fs.parabolic(1)
    with pytest.raises(ValueError, match="outside the valid range"):
        aq_ktypes(pd, vscale(-4, fs.fund_weight(1)), 4)


def test_multiplicity_of_lowest_ktype():
    fs = fs_of("su(2,2)")
    pd = fs.parabolic(2)
    lam = vscale(-2, fs.fund_weight(2))
    low = lowest_ktype(pd, lam)
    assert aq_ktype_multiplicity(pd, lam, low, 2) >= 1
