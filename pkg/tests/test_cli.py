"""Command-line interface: subcommands, formats, exit codes."""

import json

import pytest

from drgcert.cli import main
from drgcert.families import build
from drgcert.io import to_graph6, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_family_text(capsys):
    code, out = run(capsys, "family", "--family", "complete:4")
    assert code == 0
    assert "4 6" in out
    assert "0 1" in out


def test_family_json(capsys):
    code, out = run(capsys, "family", "--family", "named:petersen", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 10
    assert data["family"] == "named:petersen"
    assert len(data["edges"]) == 15
    assert data["graph6"] == to_graph6(build("named:petersen"))


def test_analyze_family(capsys):
    code, out = run(capsys, "analyze", "--family", "paley:17", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 17
    assert data["degree"] == 8
    assert data["array"] == "{8,4;1,4}"
    assert data["aut_order"] == 136
    assert data["distance_transitive"] is True


def test_analyze_text_fields(capsys):
    code, out = run(capsys, "analyze", "--family", "named:petersen")
    assert code == 0
    assert "order: 10" in out
    assert "girth: 5" in out
    assert "array: {3,2;1,1}" in out


def test_analyze_file_input(tmp_path, capsys):
    g = build("cycle:6")
    path = tmp_path / "c6.g6"
    write_graph(g, str(path), "graph6")
    code, out = run(capsys, "analyze", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["girth"] == 6

    path2 = tmp_path / "c6.edges"
    write_graph(g, str(path2), "edges")
    code, out = run(capsys, "analyze", str(path2), "--in", "edges", "--format", "json")
    assert code == 0
    assert json.loads(out)["order"] == 6


def test_certify_text(capsys):
    code, out = run(capsys, "certify", "--family", "named:heawood")
    assert code == 0
    assert "verdict: NO_QSYM" in out
    assert out.count("\n    ") == 3  # three rule applications


def test_certify_json_roundtrip(capsys):
    from drgcert.certify import Certificate

    code, out = run(capsys, "certify", "--family", "named:icosahedron", "--format", "json")
    assert code == 0
    cert = Certificate.from_json(out)
    assert cert.verdict == "NO_QSYM"


def test_certify_to_file(tmp_path, capsys):
    out_path = tmp_path / "cert.json"
    code, _ = run(capsys, "certify", "--family", "paley:13", "--format", "json",
                  "--out", str(out_path))
    assert code == 0
    data = json.loads(out_path.read_text())
    assert data["verdict"] == "NO_QSYM"


def test_certify_mode_and_budget_flags(capsys):
    code, out = run(capsys, "certify", "--family", "paley:13", "--mode", "all-pairs",
                    "--format", "json")
    assert code == 0
    assert json.loads(out)["mode"] == "all-pairs"
    code, out = run(capsys, "certify", "--family", "paley:13", "--budget", "10",
                    "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "INCONCLUSIVE"
    assert any("budget" in note for note in data["notes"])


def test_certify_orbit_on_wrong_graph_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["certify", "--family", "named:shrikhande", "--mode", "orbit"])
    assert err.value.code == 2


def test_audit_cycle(tmp_path, capsys):
    cert_path = tmp_path / "cert.json"
    code, _ = run(capsys, "certify", "--family", "named:desargues", "--format", "json",
                  "--out", str(cert_path))
    assert code == 0
    code, out = run(capsys, "audit", str(cert_path), "--family", "named:desargues")
    assert code == 0
    assert "audit ok" in out
    # embedded graph fallback
    code, out = run(capsys, "audit", str(cert_path))
    assert code == 0
    # against the wrong graph
    code, out = run(capsys, "audit", str(cert_path), "--family", "named:dodecahedron")
    assert code == 1
    assert "FAILED" in out


def test_audit_tampered_exits_one(tmp_path, capsys):
    cert_path = tmp_path / "cert.json"
    run(capsys, "certify", "--family", "named:heawood", "--format", "json",
        "--out", str(cert_path))
    data = json.loads(cert_path.read_text())
    data["applications"][0]["params"]["girth"] = 5
    cert_path.write_text(json.dumps(data))
    code, out = run(capsys, "audit", str(cert_path), "--format", "json")
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_tables_which_1(capsys):
    code, out = run(capsys, "tables", "--which", "1")
    assert code == 0
    assert out.count("\n  ") >= 12
    assert "all rows reproduced" in out


def test_tables_json(capsys):
    code, out = run(capsys, "tables", "--which", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert len(data["small"]) == 19


def test_usage_errors_exit_two(capsys):
    for argv in (
        ["analyze"],  # no graph at all
        ["certify", "--family", "mystery:9"],
        ["family", "--family", "cycle:2"],
        ["analyze", "--family", "paley:13", "some_path"],
        ["frobnicate"],
    ):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 2, argv


def test_missing_file_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["analyze", "/nonexistent/file.g6"])
    assert err.value.code == 2


def test_budget_exit_code(capsys):
    code = main(["analyze", "--family", "named:foster", "--budget", "5"])
    err = capsys.readouterr().err
    assert code == 3
    assert "budget" in err
