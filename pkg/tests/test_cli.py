from __future__ import annotations

import json

import pytest

from quasicross import from_json, to_json, make_cyclic_splitting
from quasicross.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def z17_json(tmp_path):
    path = tmp_path / "z17.json"
    path.write_text(to_json(make_cyclic_splitting(17, 3, 2, [1, 13])), encoding="utf-8")
    return str(path)


def test_construct_cyclic(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "cyclic", "--p", "5", "--ell", "2", "--kplus", "3", "--kminus", "1"
    )
    assert code == 0
    sp = from_json(out)
    assert sp.splitter_values() == (1, 5, 6, 11, 16, 21)


def test_construct_two_one(capsys):
    code, out, _ = run_cli(capsys, "construct", "two-one", "--ell", "2")
    assert code == 0
    assert from_json(out).splitter_values() == (1, 3, 4, 5, 7)


def test_construct_field(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "field", "--p", "5", "--ell", "2", "--kplus", "3", "--kminus", "1"
    )
    assert code == 0
    assert from_json(out).splitters == ((0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4))


def test_construct_balance(capsys):
    code, out, err = run_cli(capsys, "construct", "balance", "--beta", "1/2", "--index", "1")
    assert code == 0
    assert "p=7" in err
    assert from_json(out).group.orders == (7,)


def test_construct_rejects_composite_p(capsys):
    code, _, err = run_cli(
        capsys, "construct", "cyclic", "--p", "4", "--ell", "1", "--kplus", "2", "--kminus", "1"
    )
    assert code == 2
    assert "prime" in err


def test_verify_packing_report(capsys, z17_json):
    code, out, _ = run_cli(capsys, "verify", z17_json)
    assert code == 0
    assert "packing, density 11/17, period (17, 17)" in out


def test_verify_tiling_report(capsys, tmp_path):
    path = tmp_path / "c1.json"
    path.write_text(
        json.dumps(
            {"orders": [25], "k_plus": 3, "k_minus": 1,
             "splitters": [[1], [5], [6], [11], [16], [21]]}
        ),
        encoding="utf-8",
    )
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 0
    assert "tiling, density 1, period (25, 5, 25, 25, 25, 25)" in out


def test_verify_collision_exit_1(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps({"orders": [17], "k_plus": 3, "k_minus": 2, "splitters": [[1], [2]]}),
        encoding="utf-8",
    )
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert "collision" in out


def test_verify_json_format(capsys, z17_json):
    code, out, _ = run_cli(capsys, "verify", z17_json, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "packing"
    assert payload["density"] == "11/17"
    assert payload["det"] == 17


def test_lattice_json_output(capsys, z17_json):
    code, out, _ = run_cli(capsys, "lattice", z17_json)
    assert code == 0
    assert json.loads(out) == {"basis": [[17, 0], [4, 1]]}


def test_bounds_ruled_out(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--kplus", "3", "--kminus", "2", "--n", "2")
    assert code == 0
    assert "ruled out: dimension (14/5 vs n = 2)" in out


def test_bounds_group_rules(capsys):
    code, out, _ = run_cli(
        capsys, "bounds", "--kplus", "2", "--kminus", "1", "--q", "10", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ruled_out"]
    assert any(r["name"] == "two-power-order" and r["ruled_out"] for r in payload["rules"])


def test_bounds_requires_n_or_q(capsys):
    code, _, err = run_cli(capsys, "bounds", "--kplus", "3", "--kminus", "2")
    assert code == 2


def test_search_cli(capsys):
    code, out, _ = run_cli(capsys, "search", "--kplus", "2", "--kminus", "1", "--q", "16")
    assert code == 0
    assert out.splitlines()[0] == "1 canonical tiling(s)"
    assert out.splitlines()[1] == "1 3 4 5 7"


def test_search_cli_json(capsys):
    code, out, _ = run_cli(
        capsys, "search", "--kplus", "2", "--kminus", "1", "--q", "7", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == []


def test_survey_cli(capsys, tmp_path):
    csv_path = tmp_path / "survey.csv"
    code, _, err = run_cli(
        capsys, "survey", "--kmax", "2", "--qmax", "30", "--csv", str(csv_path)
    )
    assert code == 0
    lines = csv_path.read_text(encoding="utf-8").strip().splitlines()
    assert lines[0] == "k_plus,k_minus,q,n,tilings_found,canonical_splitter_json"
    assert any(line.startswith("2,1,16,5,1") for line in lines)
    assert "instances" in err


def test_encode_cli(capsys, z17_json):
    code, out, _ = run_cli(
        capsys, "encode", "--code", z17_json, "--levels", "17", "--info", "2", "--t", "0"
    )
    assert code == 0
    assert out.strip() == "8 2"


def test_decode_cli_corrected(capsys, z17_json):
    code, out, _ = run_cli(
        capsys, "decode", "--code", z17_json, "--levels", "17", "--word", "8", "4"
    )
    assert code == 0
    assert out.strip() == "codeword 8 2, corrected (i=2, m=+2)"


def test_decode_cli_clean(capsys, z17_json):
    code, out, _ = run_cli(
        capsys, "decode", "--code", z17_json, "--levels", "17", "--word", "8", "2"
    )
    assert code == 0
    assert out.strip() == "codeword 8 2, no error"


def test_decode_cli_uncorrectable(capsys, z17_json):
    code, out, _ = run_cli(
        capsys, "decode", "--code", z17_json, "--levels", "17", "--word", "6", "0"
    )
    assert code == 1
    assert out.strip() == "uncorrectable"


def test_plot_cli(capsys, tmp_path, z17_json):
    out_path = tmp_path / "packing.svg"
    code, _, _ = run_cli(
        capsys, "plot", "--splitting", z17_json, "--window", "8", "--out", str(out_path)
    )
    assert code == 0
    svg = out_path.read_text(encoding="utf-8")
    assert svg.startswith('<?xml version="1.0"')
    assert "</svg>" in svg


def test_plot_cli_lattice_input(capsys, tmp_path):
    lat_path = tmp_path / "lat.json"
    lat_path.write_text('{"basis": [[4, 1], [3, 5]]}', encoding="utf-8")
    code, out, _ = run_cli(
        capsys, "plot", "--lattice", str(lat_path), "--kplus", "3", "--kminus", "2",
        "--window", "6"
    )
    assert code == 0
    assert "<svg" in out


def test_cli_deterministic_output(capsys, z17_json):
    _, out1, _ = run_cli(capsys, "plot", "--splitting", z17_json, "--window", "8")
    _, out2, _ = run_cli(capsys, "plot", "--splitting", z17_json, "--window", "8")
    assert out1 == out2
    _, sv1, _ = run_cli(capsys, "survey", "--kmax", "2", "--qmax", "20")
    _, sv2, _ = run_cli(capsys, "survey", "--kmax", "2", "--qmax", "20")
    assert sv1 == sv2


def test_json_round_trip_through_cli(capsys):
    _, out, _ = run_cli(capsys, "construct", "mixed", "--p", "5", "--ell", "1",
                        "--kplus", "3", "--kminus", "1", "--k", "2")
    sp = from_json(out)
    assert sp.group.orders == (5, 5)
    assert sp.n == 6


def test_missing_file_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify", "/nonexistent/path.json")
    assert code == 2
    assert "error" in err
