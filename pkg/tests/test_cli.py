import json

import pytest

from holobranch.cli import (ACCEPTANCE_MATRIX, default_max_grade, main,
                            resolve_selector)


def run(capsys, *argv):
    rc = main(list(argv))
    return rc, capsys.readouterr().out


def test_list_row_counts(capsys):
    rc, out = run(capsys, "list")
    rows = [l for l in out.splitlines() if l.strip()]
    assert rc == 0
    assert len(rows) == 22  # 18 holomorphic + 4 restricted-rank rows


def test_list_ambient_filter(capsys):
    rc, out = run(capsys, "list", "--ambient", "e7")
    assert rc == 0
    assert len([l for l in out.splitlines() if l.strip()]) == 4


def test_list_json(capsys):
    rc, out = run(capsys, "--format", "json", "list")
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert len(payload["rows"]) == 22


def test_selector_by_family_id(cat):
    assert resolve_selector(cat, "su-sp:n=2") == ("su-sp", {"n": 2})
    assert resolve_selector(cat, "e7-su62") == ("e7-su62", {})


def test_selector_by_names(cat):
    assert resolve_selector(cat, "su(2,2):sp(2,R)") == ("su-sp", {"n": 2})
    fam, params = resolve_selector(cat, "sp(2,R):su(1,1)+u(1)")
    assert fam == "sp-su-u1" and params == {"n": 2, "m": 1}


def test_selector_unknown(cat):
    from holobranch.catalog import CatalogError

    with pytest.raises(CatalogError):
        resolve_selector(cat, "su(2,2):nothing")


def test_verify_pair_exit_zero(capsys):
    rc, out = run(capsys, "verify", "--pair", "su-sp:n=2", "--max-grade", "2")
    assert rc == 0
    assert "pass" in out


def test_verify_json_schema(capsys):
    rc, out = run(capsys, "--format", "json", "verify", "--pair",
                  "su-sp:n=2", "--max-grade", "1")
    payload = json.loads(out)
    assert rc == 0 and payload["passed"]
    rep = payload["reports"][0]
    assert rep["schema_version"] == 1
    assert {"grade", "matched", "lhs", "rhs", "mismatches"} <= \
        set(rep["grades"][0])


def test_verify_nothing_selected(capsys):
    rc, _ = run(capsys, "verify")
    assert rc == 2


def test_bad_selector_exit_two(capsys):
    rc, out = run(capsys, "verify", "--pair", "xx(9):yy(9)")
    assert rc == 2 and "error:" in out


def test_ktypes_human_and_latex(capsys):
    rc, out = run(capsys, "ktypes", "--g", "sp(2,R)", "--max-grade", "2")
    assert rc == 0 and "k=2" in out
    rc, out = run(capsys, "--format", "latex", "ktypes", "--g", "sp(2,R)",
                  "--max-grade", "1")
    assert rc == 0 and "\\beta" in out


def test_blattner_table(capsys):
    rc, out = run(capsys, "blattner", "--pair", "e6-sostar10-u1",
                  "--term", "0", "--k", "0", "--depth", "2")
    assert rc == 0 and "deg 0" in out


def test_seesaw_table(capsys):
    rc, out = run(capsys, "seesaw", "--config", "umn-u1", "--params",
                  "2,2,1,1", "--count", "2")
    assert rc == 0 and "k=0" in out and "k=-1" in out


def test_env_override_format(capsys, monkeypatch):
    monkeypatch.setenv("HOLOBRANCH_FORMAT", "json")
    rc, out = run(capsys, "list")
    assert json.loads(out)["schema_version"] == 1


def test_threads_do_not_change_verdict(capsys):
    _, out1 = run(capsys, "--format", "json", "--threads", "1", "verify",
                  "--pair", "su-sp:n=2", "--pair", "su-sostar:n=2",
                  "--max-grade", "1")
    _, out2 = run(capsys, "--format", "json", "--threads", "4", "verify",
                  "--pair", "su-sp:n=2", "--pair", "su-sostar:n=2",
                  "--max-grade", "1")
    a, b = json.loads(out1), json.loads(out2)
    for rep in a["reports"] + b["reports"]:
        rep["timings"] = None
    assert a == b


def test_cache_dir_written(capsys, tmp_path):
    rc, _ = run(capsys, "--cache-dir", str(tmp_path), "verify", "--pair",
                "su-sp:n=2", "--max-grade", "1")
    assert rc == 0
    assert any(tmp_path.iterdir())


def test_acceptance_matrix_is_well_formed(cat):
    ids = {r.id for r in cat.families + cat.nonholomorphic}
    for family, params in ACCEPTANCE_MATRIX:
        assert family in ids
        cat.find(family).check_params(params)
        assert default_max_grade(cat, family, params) >= 2
