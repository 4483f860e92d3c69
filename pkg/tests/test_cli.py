import json

import pytest

from fuglede.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_counterexample_z3_5(capsys):
    code, out = run(capsys, "counterexample", "z3-5")
    assert code == 0
    assert "PASS" in out and "6 does not divide 243" in out


@pytest.mark.parametrize("variant", ["z2-12", "z3-6", "z2-11"])
def test_counterexample_variants(capsys, variant):
    code, out = run(capsys, "--json", "counterexample", variant)
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert all(c["pass"] for c in payload["checks"])


def test_counterexample_lattice(capsys):
    code, out = run(capsys, "--json", "counterexample", "lattice", "--m", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["points"] == 192 and payload["pairs"] == 18336


def test_counterexample_continuum_small(capsys):
    code, out = run(
        capsys,
        "--json",
        "counterexample",
        "continuum",
        "--m",
        "1",
        "--k-radius",
        "1",
        "--pair-budget",
        "5000",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["measure"] == 6 and payload["sampled"]


def test_scan_z8(capsys):
    code, out = run(capsys, "--json", "scan", "8")
    assert code == 0
    lines = out.strip().splitlines()
    summary = json.loads(lines[-1])
    assert summary["spectral_non_tiles"] == []
    assert summary["tiles_non_spectral"] == []


def test_scan_z4_size3(capsys):
    code, out = run(capsys, "--json", "scan", "4", "--size", "3")
    assert code == 0
    lines = out.strip().splitlines()
    record = json.loads(lines[0])
    assert record["spectral"] is False and record["tiles"] is False


def test_verify_matrix(capsys):
    code, out = run(capsys, "verify", "--matrix", "h12")
    assert code == 0
    code, _ = run(capsys, "verify", "--matrix", "h6")
    assert code == 0


def test_verify_bad_tiling(capsys):
    code, out = run(
        capsys,
        "--json",
        "verify",
        "--group",
        "4",
        "--set",
        "{0,1}",
        "--complement",
        "{0,1}",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["valid"] is False and payload["witness"] == [1]


def test_verify_good_tiling(capsys):
    code, _ = run(
        capsys, "verify", "--group", "4", "--set", "{0,1}", "--complement", "{0,2}"
    )
    assert code == 0


def test_verify_spectrum_files(capsys, tmp_path):
    from fuglede.groups import element_set_to_json
    from fuglede.hadamard import descend, paper_h6, spectrum_from_butson

    g6, T6, L6 = spectrum_from_butson(paper_h6())
    _, T5, L5 = descend(g6, T6, L6)
    s = tmp_path / "set.json"
    l = tmp_path / "spec.json"
    s.write_text(json.dumps(element_set_to_json(T5)))
    l.write_text(json.dumps(element_set_to_json(L5)))
    code, _ = run(
        capsys,
        "verify",
        "--group",
        "3^5",
        "--set",
        str(s),
        "--spectrum",
        str(l),
    )
    assert code == 0


def test_export(capsys, tmp_path):
    out_file = tmp_path / "geom.json"
    code, _ = run(capsys, "export", "--m", "1", "--out", str(out_file))
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["measure"] == 6


def test_density_small(capsys):
    code, out = run(capsys, "--json", "density", "--m", "4", "--l", "6", "--stride", "3")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_json_determinism(capsys):
    _, out1 = run(capsys, "--json", "counterexample", "z3-5")
    _, out2 = run(capsys, "--json", "counterexample", "z3-5")
    assert out1 == out2


def test_error_path_json(capsys):
    code, out = run(capsys, "--json", "verify", "--matrix", "/nonexistent.json")
    assert code == 2
    assert "error" in json.loads(out)


def test_corrupted_matrix_fails(capsys, tmp_path):
    from fuglede.hadamard import paper_h12

    h = paper_h12().to_json()
    h["logs"][0][0] ^= 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(h))
    code, out = run(capsys, "verify", "--matrix", str(path))
    assert code == 1
    assert "not orthogonal" in out
