import json

from holobranch.hermitian import setting
from holobranch.roots import vscale
from holobranch.verify import (ambient_factor, demonstrate_reducible_aq,
                               fock_dimension_identity, harmonic_dim,
                               lhs_graded, rhs_graded, verify_nonhol_identification,
                               verify_nonhol_irreducibility, verify_pair)


def test_verify_pair_passes_and_serializes(cat):
    pr = cat.instantiate("su-sp", n=2)
    rep = verify_pair(pr, 3)
    assert rep.passed
    payload = rep.to_json()
    assert payload["schema_version"] == 1
    assert len(payload["grades"]) == 4
    assert all(g["matched"] and not g["mismatches"] for g in payload["grades"])
    # exact round trip through the wire format
    assert json.loads(json.dumps(payload)) == payload


def test_grade_dimensions_agree(cat):
    from holobranch.chars import weyl_dim

    pr = cat.instantiate("sp-sp-sp", n=3, m=1)
    lhs = lhs_graded(pr, 2)
    rhs = rhs_graded(pr, 2)
    for g in range(3):
        assert lhs[g] == rhs[g]
        assert sum(lhs[g].values()) >= 1


def test_mismatch_is_reported_not_hidden(cat):
    from holobranch.verify import _grade_entry

    entry = _grade_entry(0, {((1, 0),): 1}, {((1, 0),): 2})
    assert not entry["matched"]
    assert entry["mismatches"][0]["lhs_mult"] == 1
    assert entry["mismatches"][0]["rhs_mult"] == 2


def test_seesaw_crosscheck_recorded(cat):
    rep = verify_pair(cat.instantiate("su-su-su-u1", m=2, n=2, p=1, q=1), 2)
    assert rep.methods["seesaw_checked"] is True
    rep = verify_pair(cat.instantiate("su-sp", n=2), 2)
    assert rep.methods["seesaw_checked"] is None


def test_nonhol_irreducibility(cat):
    rep = verify_nonhol_irreducibility(cat.instantiate("nonhol-sp-spc", n=1), 4)
    assert rep.passed


def test_nonhol_identification(cat):
    rep = verify_nonhol_identification(cat.instantiate("nonhol-su-sp",
                                                       m=1, n=1), 4)
    assert rep.passed


def test_reducible_counts():
    fs = ambient_factor(setting("sp(2,R)"))
    assert demonstrate_reducible_aq(fs, 1, vscale(-2, fs.fund_weight(1))) == 2
    fs = ambient_factor(setting("so*(12)"))
    assert demonstrate_reducible_aq(fs, 5, vscale(-4, fs.fund_weight(5))) == 1


def test_harmonic_dim_small_cases():
    # spherical harmonics on R^3: 1, 3, 5, 7, ...
    assert [harmonic_dim(3, k) for k in range(4)] == [1, 3, 5, 7]
    assert harmonic_dim(2, 3) == 2


def test_fock_dimension_identity_exact():
    for N in (3, 5):
        for M in range(1, N - 1):
            for n in range(6):
                lhs, rhs = fock_dimension_identity(N, M, n)
                assert lhs == rhs
