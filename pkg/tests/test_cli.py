import json

import pytest

from planecurves import cli
from planecurves.poly import poly_from_json, variable


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_triangle_like_curve(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "maclane_lines")
    assert code == 0
    f = poly_from_json(json.loads(out))
    assert f.degree == 8


def test_generate_family_with_parameter(capsys):
    code, out, _ = run(capsys, "generate", "conic_family", "3")
    assert code == 0
    assert poly_from_json(json.loads(out)).degree == 6


def test_generate_point_set(capsys):
    code, out, _ = run(capsys, "generate", "Z18")
    assert code == 0
    data = json.loads(out)
    assert len(data["points"]) == 18


def test_generate_to_file(capsys, tmp_path):
    target = tmp_path / "curve.json"
    code, out, _ = run(capsys, "generate", "fermat_deleted", "3", "-o", str(target))
    assert code == 0
    assert poly_from_json(json.loads(target.read_text())).degree == 8


def test_generate_unknown_name(capsys):
    code, _, err = run(capsys, "generate", "not_a_curve")
    assert code == 2
    assert "unknown" in err


def test_generate_missing_parameter(capsys):
    code, _, err = run(capsys, "generate", "fermat")
    assert code == 2


def test_analyze_roundtrip(capsys, tmp_path):
    target = tmp_path / "c.json"
    run(capsys, "generate", "fermat_deleted", "3", "-o", str(target))
    code, out, _ = run(capsys, "analyze", str(target), "--resolution")
    assert code == 0
    report = json.loads(out)
    assert report["classification"]["class"] == "nearly_free"
    assert report["classification"]["exponents"] == [4, 4, 4]
    assert report["defect"]["tau"] == 36
    assert report["mdr"] == 4
    assert report["resolution"] == "0 -> S(-12) -> S(-11)^3 -> S(-7)^3 -> S"


def test_analyze_stdin(capsys, monkeypatch, tmp_path):
    import io

    from planecurves.poly import poly_to_json

    f = variable(0) * variable(1) * variable(2)
    monkeypatch.setattr(
        "sys.stdin", io.StringIO(json.dumps(poly_to_json(f)))
    )
    code, out, _ = run(capsys, "analyze", "-")
    assert code == 0
    assert json.loads(out)["classification"]["class"] == "free"


def test_analyze_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/path.json")
    assert code == 2


def test_analyze_garbage_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"nope\": 1}")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2


def test_analyze_non_reduced(capsys, tmp_path):
    from planecurves.poly import poly_to_json

    f = variable(0) * variable(0) * variable(1)
    target = tmp_path / "sq.json"
    target.write_text(json.dumps(poly_to_json(f)))
    code, _, err = run(capsys, "analyze", str(target))
    assert code == 3
    assert "not reduced" in err


def test_unexpected_single_check(capsys, tmp_path):
    target = tmp_path / "z.json"
    run(capsys, "generate", "Z18", "-o", str(target))
    code, out, _ = run(capsys, "unexpected", str(target), "--d", "8", "--m", "7")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"]["admits"] is True
    assert report["verdict"]["actual"] == 1


def test_unexpected_emit_curve(capsys, tmp_path):
    target = tmp_path / "z.json"
    run(capsys, "generate", "Z18", "-o", str(target))
    code, out, _ = run(
        capsys,
        "unexpected",
        str(target),
        "--d",
        "8",
        "--m",
        "7",
        "--emit-curve",
    )
    assert code == 0
    report = json.loads(out)
    curve = poly_from_json(report["curve"])
    assert curve.degree == 8


def test_unexpected_requires_parameters(capsys, tmp_path):
    target = tmp_path / "z.json"
    run(capsys, "generate", "Z18", "-o", str(target))
    code, _, err = run(capsys, "unexpected", str(target))
    assert code == 2


def test_unexpected_scan_z17(capsys, tmp_path):
    target = tmp_path / "z.json"
    run(capsys, "generate", "Z17", "-o", str(target))
    code, out, _ = run(capsys, "unexpected", str(target), "--scan")
    assert code == 0
    report = json.loads(out)
    assert report["criterion"]["admits"] is True
    assert report["confirmed_degrees"] == [8]


def test_console_entry_point_exists():
    import importlib.metadata as md

    eps = md.entry_points()
    scripts = (
        eps.select(group="console_scripts")
        if hasattr(eps, "select")
        else eps.get("console_scripts", [])
    )
    assert any(e.name == "planecurves" for e in scripts)
