import json
import math

import pytest

from nodalspec.cli import RunConfig, UsageError, run
from nodalspec.families import cycle, petersen
from nodalspec.formats import encode_graph6, write_graph


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report(capsys, *argv):
    code, out, _ = call(capsys, *argv)
    return code, json.loads(out)


def test_spider_radius(capsys):
    code, out, _ = call(capsys, "spider-radius", "--ell", "3")
    assert code == 0
    assert float(out) == pytest.approx(math.sqrt((5 + math.sqrt(13)) / 2), abs=1e-12)
    code, rep = report(capsys, "spider-radius", "--ell", "2", "--json")
    assert rep["results"][0]["details"]["radius"] == pytest.approx(2.0)


def test_lines_build_csv(capsys, tmp_path):
    code, out, _ = call(capsys, "lines", "build", "--alpha", "0.2", "--dim", "9", "--seed-family", "cycle:3")
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 12 and all(len(r.split(",")) == 9 for r in rows)
    path = tmp_path / "lines.csv"
    path.write_text(out)
    code, rep = report(capsys, "lines", "verify", "--alpha", "0.2", "--in", str(path))
    assert code == 0 and rep["results"][0]["ok"]
    code, rep = report(capsys, "lines", "verify", "--alpha", "0.3", "--in", str(path))
    assert code == 1 and not rep["results"][0]["ok"]


def test_lines_build_json_and_seed_mismatch(capsys, tmp_path):
    code, out, _ = call(capsys, "lines", "build", "--alpha", "0.2", "--dim", "9", "--seed-family", "cycle:3",
                        "--lines-format", "json")
    path = tmp_path / "lines.json"
    path.write_text(out)
    code, rep = report(capsys, "lines", "verify", "--in", str(path))
    assert code == 0 and rep["results"][0]["details"]["lines"] == 12
    code, _, err = call(capsys, "lines", "build", "--alpha", "0.3333333333333333", "--dim", "15",
                        "--seed-family", "cycle:3")
    assert code == 2 and "seed" in err


def test_audit_exhaustive_reports_each_check(capsys):
    code, rep = report(capsys, "audit", "--exhaustive-n", "6")
    names = [r["name"] for r in rep["results"]]
    assert names == ["multiplicity_bound", "nodal_certificates", "nodal_count_bound"]
    mult, certs, count = rep["results"]
    assert mult["ok"] and mult["details"]["graphs"] == 143 and mult["details"]["violations"] == 0
    assert certs["ok"]
    # the single nodal-count violation is K_2, reported with its edge list
    assert not count["ok"] and count["details"]["failures"][0]["edges"] == [[0, 1]]
    assert code == 1


def test_audit_parallel_matches_serial(capsys):
    _, a = report(capsys, "audit", "--random", "12", "--max-n", "15", "--seed", "3")
    _, b = report(capsys, "audit", "--random", "12", "--max-n", "15", "--seed", "3", "--jobs", "2")
    assert a["results"] == b["results"]


def test_determinism_byte_identical(capsys):
    argv = ["audit", "--random", "5", "--max-n", "12", "--seed", "9"]
    _, first, _ = call(capsys, *argv)
    _, second, _ = call(capsys, *argv)
    assert first == second


def test_graph_input_formats(capsys, tmp_path):
    g6 = tmp_path / "p.g6"
    g6.write_bytes(encode_graph6(petersen()) + b"\n")
    code, rep = report(capsys, "spectrum", "--in", str(g6), "--format", "g6")
    assert code == 0
    groups = rep["results"][0]["details"]["groups"]
    assert [g["multiplicity"] for g in groups] == [1, 5, 4]
    assert rep["graph"]["n"] == 10
    edges = tmp_path / "c.txt"
    edges.write_bytes(write_graph(cycle(5)))
    code, rep = report(capsys, "nodal", "--in", str(edges))
    assert code == 0 and rep["results"][0]["details"]["multiplicity"] == 2


def test_family_output_and_out_file(capsys, tmp_path):
    code, out, _ = call(capsys, "family", "theta:2,2,3")
    assert code == 0 and out.splitlines()[0] == "6 7"
    dest = tmp_path / "r.json"
    code, out, _ = call(capsys, "grid-check", "--p-max", "5", "--q-max", "5", "--l-max", "5", "--out", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["results"][0]["ok"]


def test_decompose_and_bound(capsys):
    code, rep = report(capsys, "decompose", "--family", "theta:3,3,5", "--lam", "2.0")
    assert code == 0 and rep["results"][0]["details"]["verdict"] == "Case1"
    code, _, err = call(capsys, "decompose", "--family", "barbell:3,3,12", "--lam", "2.0")
    assert code == 2 and "lambda_2" in err
    code, out, _ = call(capsys, "bound", "--lam", "2.0", "--delta", "3")
    assert code == 0 and out.strip() == "56862"
    code, out, _ = call(capsys, "n-lambda", "--lam", "2.1")
    assert out.strip() == "4"


def test_kappa_and_monotonicity(capsys):
    code, rep = report(capsys, "kappa", "--lam", "2.0", "--n-max", "4")
    assert code == 0 and rep["results"][0]["details"]["verdict"] == "Found(3)"
    code, rep = report(capsys, "monotonicity", "--family", "dumbbell:3,3")
    assert code == 0 and rep["results"][0]["ok"]


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["spider-radius"],
    ["spider-radius", "--ell", "0"],
    ["spectrum"],
    ["n-lambda", "--lam", "3"],
    ["audit"],
    ["spider-radius", "--ell", "2", "--jobs", "0"],
])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 5\n")
    code, _, err = call(capsys, "spectrum", "--in", str(bad))
    assert code == 2 and "byte 6" in err


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(tol=0)
    assert RunConfig().tol == 1e-8
