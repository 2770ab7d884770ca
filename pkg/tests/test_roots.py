import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from holobranch.roots import (set_weyl_cap, standard, vec,
                              with_abelian_coords)

COUNTS = {
    ("A", 3): 6, ("B", 3): 9, ("C", 3): 9, ("D", 4): 12,
    ("E6", 6): 36, ("E7", 7): 63,
}

ORDERS = {
    ("A", 3): 24, ("B", 3): 48, ("C", 3): 48, ("D", 4): 192,
}


@pytest.mark.parametrize("family,rank", sorted(COUNTS))
def test_positive_root_counts(family, rank):
    rs = standard(family, rank)
    assert len(rs.positive_roots) == COUNTS[(family, rank)]


@pytest.mark.parametrize("family,rank", sorted(ORDERS))
def test_weyl_order(family, rank):
    rs = standard(family, rank)
    assert rs.weyl_order() == ORDERS[(family, rank)]


@pytest.mark.parametrize("family,rank", sorted(COUNTS))
def test_rho_pairings(family, rank):
    rs = standard(family, rank)
    assert all(rs.pairing(rs.rho, i) == 1 for i in range(rs.rank))


small_types = st.sampled_from(
    [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4)])


@given(small_types, st.data())
@settings(max_examples=60, deadline=None)
def test_to_dominant_folds_into_orbit(tr, data):
    rs = standard(*tr)
    cs = data.draw(st.lists(st.integers(-3, 3), min_size=rs.rank,
                            max_size=rs.rank))
    v = rs.weight_from_pairings(cs)
    dom, sign, singular = rs.to_dominant(v)
    assert rs.is_dominant(dom)
    assert sign in (1, -1)
    assert rs.same_weyl_orbit(v, dom)
    # folding is idempotent
    dom2, sign2, _ = rs.to_dominant(dom)
    assert dom2 == dom and sign2 == 1


@given(small_types, st.data())
@settings(max_examples=40, deadline=None)
def test_orbit_size_divides_group_order(tr, data):
    rs = standard(*tr)
    cs = data.draw(st.lists(st.integers(0, 2), min_size=rs.rank,
                            max_size=rs.rank))
    v = rs.weight_from_pairings(cs)
    assert rs.weyl_order() % len(rs.weyl_orbit(v)) == 0


def test_weight_from_pairings_roundtrip():
    rs = standard("B", 3)
    v = rs.weight_from_pairings([1, 0, 2])
    assert rs.pairings(v) == vec([1, 0, 2])


def test_weyl_cap_enforced():
    rs = standard("D", 4)
    set_weyl_cap(3)
    try:
        with pytest.raises(ValueError, match="cap"):
            rs.weyl_orbit(rs.rho)
    finally:
        set_weyl_cap(None)


def test_abelian_coords_ride_along():
    rs = with_abelian_coords(standard("A", 2), 1)
    v = vec([1, 1, Fraction(5, 3)])
    dom, _, _ = rs.to_dominant(rs.reflect(v, 0))
    assert dom == v


def test_component_type():
    rs = standard("D", 4)
    assert rs.component_type() == [("D", 4)]
