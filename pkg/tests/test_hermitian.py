import pytest

from holobranch.chars import weyl_dim
from holobranch.hermitian import setting

P_PLUS_DIMS = {
    "su(2,2)": 4, "su(3,2)": 6, "so(2,6)": 6, "so(2,7)": 7,
    "so*(8)": 6, "sp(3,R)": 6, "e6": 16, "e7": 27,
}


@pytest.mark.parametrize("name,dim", sorted(P_PLUS_DIMS.items()))
def test_p_plus_dimension(name, dim):
    amb = setting(name)
    assert len(amb.p_plus) == dim


@pytest.mark.parametrize("name", sorted(P_PLUS_DIMS))
def test_grading_is_abelian(name):
    amb = setting(name)
    # every noncompact positive root sits in grade one
    assert all(amb.zgrade(r) == 1 for r in amb.p_plus)


def test_parser_rejects_garbage():
    for bad in ["su(2)", "sl(2,R)", "e8", "so(3,4)"]:
        with pytest.raises(ValueError):
            setting(bad)


def test_parser_is_strict_about_spacing():
    with pytest.raises(ValueError):
        setting("sp(2, R)")


def test_ktype_string_grades_and_dims():
    amb = setting("su(2,2)")
    rows = amb.ktype_string(3)
    assert [k for k, _ in rows] == [0, 1, 2, 3]
    dims = [weyl_dim(amb.k_system, hw) for _, hw in rows]
    # su(2) x su(2) strings: S^k(C^2 x C^2)
    assert dims == [1, 4, 9, 16]


def test_ktype_string_step_is_highest_root():
    amb = setting("so*(8)")
    rows = amb.ktype_string(2)
    beta = amb.rs.highest_root
    from holobranch.roots import vadd
    assert rows[1][1] == vadd(rows[0][1], beta)
    assert rows[2][1] == vadd(rows[1][1], beta)


def test_real_rank_one_rejected():
    with pytest.raises(ValueError, match="real rank"):
        setting("sp(1,R)").ktype_string(2)
