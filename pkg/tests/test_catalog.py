import json

import pytest

from holobranch.catalog import (CatalogError, _DATA_PATH, eval_coeffs,
                                load_catalog)


def test_record_counts(cat):
    assert len(cat.families) == 18
    assert len(cat.nonholomorphic) == 5


def test_checksum_rejects_tampering(tmp_path):
    data = json.loads(_DATA_PATH.read_text())
    data["families"][0]["subalgebra"] = "tampered"
    p = tmp_path / "pairs.json"
    p.write_text(json.dumps(data))
    with pytest.raises(CatalogError, match="checksum"):
        load_catalog(p)


def test_version_rejected(tmp_path):
    data = json.loads(_DATA_PATH.read_text())
    data["version"] = 99
    p = tmp_path / "pairs.json"
    p.write_text(json.dumps(data))
    with pytest.raises(CatalogError, match="version"):
        load_catalog(p)


def test_unknown_family(cat):
    with pytest.raises(CatalogError):
        cat.find("no-such-family")


def test_param_constraints_enforced(cat):
    with pytest.raises(CatalogError):
        cat.instantiate("su-sp", n=0)
    with pytest.raises(CatalogError):
        cat.instantiate("sp-sp-sp", n=2, m=2)
    with pytest.raises(CatalogError):
        cat.instantiate("su-su-su-u1", m=2, n=2, p=2)


def test_eval_coeffs_accumulates_and_drops_zeros():
    assert eval_coeffs([["1", "k"], ["m + 1", "k"], ["m", "-k"]],
                       {"m": 1}, k=2) == {2: 2}
    assert eval_coeffs([["1", "0"]], {}, k=0) == {}


def test_bottom_of_first_series_has_grade_zero(cat):
    for fam, params in [("su-sp", {"n": 2}), ("sp-sp-sp", {"n": 3, "m": 1}),
                        ("e7-sostar12-su2", {})]:
        pr = cat.instantiate(fam, **params)
        grades = []
        for t in pr.L_terms:
            for k, g in pr.term_instances(t, 4):
                grades.append(g)
        assert min(grades) == 0


def test_labels_partition_by_factor(cat):
    pr = cat.instantiate("su-sp", n=2)
    lab = pr.label(pr.term_lowest_vector(pr.L_terms[0],
                                         pr.L_terms[0].k_start_ascending()))
    assert len(lab) == len(pr.factors)


def test_grade_of_lowest_ktype_is_zero(cat):
    pr = cat.instantiate("so-even-u", n=3)
    t = pr.L_terms[0]
    k0 = t.k_start_ascending()
    if k0 is None:
        k0 = 0 if not t.singleton else None
    assert pr.grade(pr.term_lowest_vector(t, k0)) == 0


def test_nonhol_identifications_present(cat):
    kinds = {r.id: (r.raw.get("identification") or {}).get("kind")
             for r in cat.nonholomorphic}
    assert kinds["nonhol-su-sp"] == "aq"
    assert kinds["nonhol-so-odd"] == "rank_defect"
    assert kinds["nonhol-sp-spc"] == "metaplectic_even"
