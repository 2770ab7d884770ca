import pytest
from hypothesis import given, settings, strategies as st

from holobranch.chars import (add_char, decompose_full, dominant_character,
                              full_character, load_disk_cache,
                              save_disk_cache, sym_power_characters,
                              tensor_char, weyl_dim)
from holobranch.roots import standard, vec

types = st.sampled_from(
    [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4)])


@given(types, st.data())
@settings(max_examples=60, deadline=None)
def test_freudenthal_mass_equals_weyl_dim(tr, data):
    rs = standard(*tr)
    cs = data.draw(st.lists(st.integers(0, 3), min_size=rs.rank,
                            max_size=rs.rank))
    lam = rs.weight_from_pairings(cs)
    # full_character raises internally when orbit mass misses weyl_dim
    ch = full_character(rs, lam)
    assert sum(ch.values()) == weyl_dim(rs, lam)


@given(types, st.data())
@settings(max_examples=40, deadline=None)
def test_decompose_inverts_character(tr, data):
    rs = standard(*tr)
    cs = data.draw(st.lists(st.integers(0, 2), min_size=rs.rank,
                            max_size=rs.rank))
    lam = rs.weight_from_pairings(cs)
    assert decompose_full(rs, full_character(rs, lam)) == [(lam, 1)]


@given(types, st.data())
@settings(max_examples=20, deadline=None)
def test_tensor_decomposes_with_correct_dimension(tr, data):
    rs = standard(*tr)
    a = rs.weight_from_pairings(
        data.draw(st.lists(st.integers(0, 1), min_size=rs.rank,
                           max_size=rs.rank)))
    b = rs.weight_from_pairings(
        data.draw(st.lists(st.integers(0, 1), min_size=rs.rank,
                           max_size=rs.rank)))
    prod = tensor_char(full_character(rs, a), full_character(rs, b))
    terms = decompose_full(rs, prod)
    assert sum(c * weyl_dim(rs, w) for w, c in terms) == \
        weyl_dim(rs, a) * weyl_dim(rs, b)


def test_known_dimensions():
    assert weyl_dim(standard("A", 2), standard("A", 2).rho) == 8
    e6 = standard("E6", 6)
    assert weyl_dim(e6, e6.fundamental_weight(0)) == 27
    e7 = standard("E7", 7)
    assert weyl_dim(e7, e7.fundamental_weight(6)) == 56


def test_dominant_character_adjoint_a2():
    rs = standard("A", 2)
    ch = dominant_character(rs, rs.rho)
    # adjoint: highest root once, zero weight rank times
    assert ch[rs.rho] == 1
    assert ch[vec([0, 0])] == 2


def test_sym_power_counts_monomials():
    from math import comb
    weights = [(vec([1, 0]), 1), (vec([0, 1]), 1), (vec([1, 1]), 1)]
    table = sym_power_characters(weights, 5)
    for d in range(6):
        assert sum(table[d].values()) == comb(d + 2, 2)


def test_sym_power_empty_needs_dim():
    with pytest.raises(ValueError):
        sym_power_characters([], 2)
    assert sym_power_characters([], 2, dim=3)[0] == {(0, 0, 0): 1}


def test_add_char_cancels():
    a = {vec([1]): 1}
    assert add_char(a, a, -1) == {}


def test_disk_cache_roundtrip(tmp_path):
    rs = standard("B", 2)
    dominant_character(rs, rs.rho)
    n = save_disk_cache(tmp_path)
    assert n > 0
    assert load_disk_cache(tmp_path) == n
    assert load_disk_cache(tmp_path / "missing") == 0
