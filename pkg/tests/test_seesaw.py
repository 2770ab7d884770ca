from fractions import Fraction

import pytest

from holobranch.roots import vadd, vzero
from holobranch.seesaw import (SeesawConfig, SeesawError, ambient_coords,
                               base_character, derive_branching, h2_character,
                               occurrence_obstruction, seesaw_multiplicity,
                               theta_lift)


def test_config_validation():
    with pytest.raises(SeesawError):
        SeesawConfig("u", 2, 2, 2, 1)  # p must stay below m
    with pytest.raises(SeesawError):
        SeesawConfig("sostar", 3, 3)  # m must stay below n
    with pytest.raises(SeesawError):
        SeesawConfig("nope", 1, 2)


def test_u_multiplicity_one_on_matching_characters():
    cfg = SeesawConfig("u", 2, 2, 1, 1)
    pi = base_character(cfg)
    for k in range(-3, 4):
        rho = h2_character(cfg, k)
        assert occurrence_obstruction(cfg, rho) is None
        assert seesaw_multiplicity(cfg, pi, rho) == 1


def test_u_multiplicity_zero_off_family():
    cfg = SeesawConfig("u", 2, 2, 1, 1)
    pi = base_character(cfg)
    rho = h2_character(cfg, 0)
    shifted = type(rho)(tuple(p + 1 for p in rho.powers))
    assert seesaw_multiplicity(cfg, pi, shifted) == 0


def test_u_compact_block_obstruction():
    # q = n forces the second block compact; deep negative k must stop
    cfg = SeesawConfig("u", 2, 2, 1, 2)
    ks = [k for k, _ in derive_branching(cfg, 6)]
    assert min(ks) >= -1


def test_sostar_one_sided_when_small():
    cfg = SeesawConfig("sostar", 1, 3)  # m = 1: only descending half
    ks = [k for k, _ in derive_branching(cfg, 5)]
    assert all(k <= 0 for k in ks)
    cfg = SeesawConfig("sostar", 2, 3)  # n - m = 1: only ascending half
    ks = [k for k, _ in derive_branching(cfg, 5)]
    assert all(k >= 0 for k in ks)


def test_theta_lift_vector_shapes():
    cfg = SeesawConfig("u", 3, 2, 1, 1)
    facs = theta_lift(cfg, h2_character(cfg, 1))
    assert facs is not None
    assert all(len(w) == cfg.m + cfg.n for w in facs)


def test_base_character_half_integral():
    cfg = SeesawConfig("u", 3, 2, 1, 1)
    assert base_character(cfg).powers == (Fraction(1, 2),)


def test_u_lift_matches_catalog_bottom(cat):
    cfg = SeesawConfig("u", 2, 2, 1, 1)
    pr = cat.instantiate("su-su-su-u1", m=2, n=2, p=1, q=1)
    total = vzero(pr.ambient.rs.dim)
    for w in theta_lift(cfg, h2_character(cfg, 0)):
        total = vadd(total, ambient_coords(cfg, w))
    dom, _, _ = pr.k_sigma.to_dominant(total)
    bottoms = {pr.label(pr.term_lowest_vector(t, t.k_start_ascending()
                                              if not t.singleton else None))
               for t in pr.L_terms}
    assert pr.label(dom) in bottoms


def test_sostar_lift_reaches_minimal_ktype(cat):
    cfg = SeesawConfig("sostar", 2, 4)
    pr = cat.instantiate("sostar-su-u1", n=4, m=2)
    total = vzero(pr.ambient.rs.dim)
    for w in theta_lift(cfg, h2_character(cfg, 0)):
        total = vadd(total, ambient_coords(cfg, w))
    dom, _, _ = pr.k_sigma.to_dominant(total)
    assert pr.grade(dom) == 0
