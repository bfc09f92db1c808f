import json

import pytest

from nilsym.cli import REPORT_DIR_ENV, main


def test_check_label(capsys):
    assert main(["check", "L4_04"]) == 0
    out = capsys.readouterr().out
    assert "PASS  L4_04" in out and "dim Der = 4" in out


def test_check_family_expands_samples(capsys):
    assert main(["check", "L4_12", "--samples", "2", "--quiet"]) == 0
    assert capsys.readouterr().out == ""


def test_check_file_reports_violation(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("dim 2\ne1*e2 = e1\n")
    assert main(["check", str(f)]) == 1
    assert "(e1,e2,e2)" in capsys.readouterr().out


def test_unknown_label_is_usage_error(capsys):
    assert main(["check", "L9_99"]) == 2
    assert "error" in capsys.readouterr().err


def test_cohomology_json(tmp_path, capsys):
    out = tmp_path / "h2.json"
    assert main(["cohomology", "L3_01", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    rec = data["cohomology"][0]
    assert (rec["dim_H2N"], rec["dim_H2L"]) == (5, 6)


def test_extend(capsys):
    assert main(["extend", "L3_01", "--cocycle", "D23"]) == 0
    assert capsys.readouterr().out == "dim 4\ne1*e1 = e2\ne2*e3 = e4\n"


def test_extend_split_and_invalid(capsys):
    assert main(["extend", "L3_01", "--cocycle", "D23", "--cocycle", "2*D23"]) == 0
    assert "split extension" in capsys.readouterr().err
    assert main(["extend", "L3_01", "--cocycle", "D32"]) == 1
    assert "not a cocycle" in capsys.readouterr().err
    assert main(["extend", "L3_01"]) == 2


def test_extend_with_params(capsys):
    assert main(["extend", "L3_06", "--params", "lam=2", "--cocycle", "(2-lam)*D13+lam*D22+lam*D31"]) == 0
    out = capsys.readouterr().out
    assert "e2*e2 = 2*e4" in out


def test_invariants_pair(capsys):
    assert main(["invariants", "L4_03", "L4_04"]) == 0
    out = capsys.readouterr().out
    assert "non_isomorphic" in out and "dim_der" in out


def test_degenerate(tmp_path, capsys):
    w = tmp_path / "w.txt"
    w.write_text("t, 0, 0, 0\n0, t^2, 0, 0\n0, 0, 1, 0\n0, 0, 0, t^2\n")
    assert main(["degenerate", "L4_03", str(w), "L4_04"]) == 0
    assert capsys.readouterr().out.startswith("PASS")
    w.write_text("t, 0, 0, 0\n0, t^2, 0, 0\n0, 0, 1, 0\n0, 0, 0, t^3\n")
    assert main(["degenerate", "L4_03", str(w), "L4_04"]) == 1
    assert "c[2][3][4]" in capsys.readouterr().out
    assert main(["degenerate", "L4_03", str(tmp_path / "missing"), "L4_04"]) == 2


def test_degenerate_parametrized(tmp_path, capsys):
    w = tmp_path / "w.txt"
    w.write_text("1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1\nparam lam = 2 + t\nparam alpha = 3*t\n")
    assert main(["degenerate", "L4_23", str(w), "L4_23", "--target-params", "lam=2,alpha=0"]) == 0


def test_suite_writes_report_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(REPORT_DIR_ENV, str(tmp_path))
    assert main(["suite", "h2-table", "--quiet"]) == 0
    data = json.loads((tmp_path / "h2-table.json").read_text())
    assert data["passed"] is True


def test_relative_json_uses_report_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(REPORT_DIR_ENV, str(tmp_path))
    assert main(["catalog", "list", "--quiet", "--json", "cat.json"]) == 0
    assert len(json.loads((tmp_path / "cat.json").read_text())["catalog"]) == 33


def test_catalog_show(capsys):
    assert main(["catalog", "show", "L4_17", "--params", "alpha=2"]) == 0
    assert "e3*e1 = -e4" in capsys.readouterr().out
    assert main(["catalog", "show", "L4_17"]) == 2


def test_bad_params(capsys):
    assert main(["check", "L4_12", "--params", "lam"]) == 2
    assert main(["check", "L4_12", "--params", "lam=0"]) == 2


def test_argparse_rejects_unknown_verb():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
