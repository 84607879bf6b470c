import json

import pytest

from vertexq.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_vertex_single_box(capsys):
    code, out = run_cli(capsys, "vertex", "--mu", "[[1],[],[]]")
    assert code == 0
    data = json.loads(out)
    # q^{1/2}/(1-q): lattice exponent 2 at L=2, all-ones coefficients
    assert data["C"]["min_exp"] == 2
    assert data["C"]["coeffs"][0] == "1"
    assert data["theorem1"] == "pass"


def test_vertex_empty_triple(capsys):
    code, out = run_cli(capsys, "vertex", "--mu", "[[],[],[]]")
    assert code == 0
    data = json.loads(out)
    assert data["C"]["min_exp"] == 0
    assert data["C"]["coeffs"] == ["1"]


def test_vertex_parse_error(capsys):
    code = main(["vertex", "--mu", "[[1],[]"])
    assert code == 3


def test_vertex_invalid_partition(capsys):
    code = main(["vertex", "--mu", "[[1,2],[],[]]"])
    assert code == 3


def test_verify_pass_and_mutant_fail(capsys):
    code, out = run_cli(capsys, "verify", "theorem1", "--weight", "2")
    assert code == 0
    assert json.loads(out)["status"] == "pass"
    code, _ = run_cli(capsys, "verify", "theorem1", "--weight", "3", "--mutate", "drop-sign")
    assert code == 1


def test_verify_unknown_mutation(capsys):
    code = main(["verify", "theorem1", "--mutate", "no-such-thing"])
    assert code == 3


def test_series_W_weight0(capsys):
    code, out = run_cli(capsys, "series", "W", "--tau", "1", "--weight", "0")
    assert code == 0
    data = json.loads(out)
    assert len(data["series"]["terms"]) == 1
    assert data["series"]["terms"][0]["coeff"]["coeffs"] == ["1"]


def test_series_expG_json(capsys):
    code, out = run_cli(capsys, "series", "expG", "--tau", "1", "--weight", "1")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "expG"
    assert any(t["exps"] != [{}, {}, {}] for t in data["series"]["terms"])


def test_series_tau_json(capsys):
    code, out = run_cli(capsys, "series", "tau", "--N", "2", "--degree", "3")
    assert code == 0
    data = json.loads(out)
    assert data["N"] == 2


def test_deterministic_output(capsys):
    _, out1 = run_cli(capsys, "verify", "theorem1", "--weight", "2")
    _, out2 = run_cli(capsys, "verify", "theorem1", "--weight", "2")
    assert out1 == out2


def test_csv_format(capsys):
    code, out = run_cli(capsys, "verify", "theorem1", "--weight", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "check,status,pairs"


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out = run_cli(capsys, "verify", "cyclic", "--weight", "1", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["status"] == "pass"


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"min_width": 10, "window": 48}))
    code, out = run_cli(
        capsys, "verify", "theorem1", "--weight", "1", "--config", str(cfg), "--min-width", "24"
    )
    assert code == 0
    data = json.loads(out)
    assert data["config"]["min_width"] == 24  # flag wins
    assert data["config"]["window"] == 48  # file applies


def test_oracles_cli(capsys):
    code, out = run_cli(capsys, "oracles", "--scope", "character")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass"
