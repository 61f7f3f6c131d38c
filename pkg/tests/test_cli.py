"""End-to-end command-line behavior: exit codes and JSON shape."""

import json

import pytest

from genfermat.cli import main
from genfermat.geometry import arrangement_to_json, random_omega_sample


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fixed_points_command(capsys):
    code, out, _ = run(
        capsys, "fixed-points", "--d", "2", "--p", "3", "--n", "3",
        "--element", "1,1,2,0",
    )
    assert code == 0
    data = json.loads(out)
    assert data["schemaVersion"] == 1
    assert data["results"]["strata"][0]["indices"] == [1, 2]


def test_enumerate_and_classify(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--d", "2", "--p", "2", "--n", "6", "--m", "3",
    )
    assert code == 0
    assert json.loads(out)["count"] == 30
    code, out, _ = run(
        capsys, "classify", "--d", "2", "--p", "2", "--n", "6", "--m", "3",
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 30
    assert len(data["orbits"]) == 1
    assert data["orbits"][0]["orbitSize"] == 30


def test_cohomology_command(capsys):
    code, out, _ = run(
        capsys, "cohomology", "--d", "2", "--p", "4", "--n", "3", "--r", "4",
    )
    assert code == 0
    data = json.loads(out)
    assert data["results"]["surfaceClass"] == "K3"
    assert data["results"]["r1"] == 0
    assert data["results"]["h0"]["r"] == 4


def test_hyperbolicity_command(capsys):
    code, out, _ = run(capsys, "hyperbolicity", "--d", "2", "--p", "2", "--n", "4")
    assert code == 0
    assert json.loads(out)["results"]["case"] == 2


def test_arrangement_command(capsys, tmp_path):
    code, out, _ = run(capsys, "arrangement", "--d", "2", "--n", "5", "--seed", "9")
    assert code == 0
    data = json.loads(out)
    assert data["results"]["generalPosition"] is True
    path = tmp_path / "arr.json"
    path.write_text(json.dumps(data["results"]["arrangement"]))
    code, out, _ = run(capsys, "arrangement", "--d", "2", "--n", "5",
                       "--lambda", str(path))
    assert code == 0
    assert json.loads(out)["results"]["generalPosition"] is True


def test_fiber_command(capsys, tmp_path):
    arr = random_omega_sample(11, 4, 2)
    path = tmp_path / "arr.json"
    path.write_text(json.dumps(arrangement_to_json(arr)))
    code, out, err = run(
        capsys, "fiber", "--d", "2", "--p", "2", "--n", "4",
        "--lambda", str(path), "--point", "1,0.31,-0.57",
    )
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert len(lines) == 16
    assert json.loads(err.strip().splitlines()[-1])["count"] == 16


def test_invariants_command(capsys):
    code, out, _ = run(
        capsys, "invariants", "--d", "2", "--p", "2", "--n", "6",
        "--gens", "1,1,0,1,0,0,0;1,0,1,0,1,0,0;0,1,1,0,0,1,0",
    )
    assert code == 0
    data = json.loads(out)
    assert len(data["results"]["generators"]) == 13


def test_parameter_error_exit_code(capsys):
    code, _, err = run(
        capsys, "fixed-points", "--d", "2", "--p", "3", "--n", "3",
        "--element", "0,0,0,0",
    )
    assert code == 2
    assert "error" in err


def test_resource_limit_exit_code(capsys):
    code, _, err = run(
        capsys, "enumerate", "--d", "2", "--p", "2", "--n", "6", "--m", "3",
        "--cap-subspaces", "10",
    )
    assert code == 3
    assert "resource limit" in err


def test_reproduce_filter(capsys):
    code, out, err = run(capsys, "reproduce-paper", "--filter", "rank_bound")
    assert code == 0
    data = json.loads(out)
    assert data["results"]["allPassed"] is True
    assert len(data["results"]["checks"]) == 1
    assert "[PASS] rank_bound" in err
