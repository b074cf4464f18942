import json
import subprocess
import sys

import pytest

from simplexcodes.cli import main
from simplexcodes.codes import SimplexCode, raw_fixture


@pytest.fixture
def n7(tmp_path):
    path = tmp_path / "n7.json"
    assert main(["construct", "family", "--g", "2", "--m", "1", "--delta", "2", "--eps", "-1", "--output", str(path)]) == 0
    return path


@pytest.fixture
def n3_l1(tmp_path):
    path = tmp_path / "n3code.json"
    path.write_text(json.dumps({"q": 3, "N": 3, "points": [[3, 0, 0], [0, 3, 0], [0, 0, 3], [1, 1, 1]]}))
    return path


def test_family_file(n7):
    code = SimplexCode.loads(n7.read_text())
    assert (code.N, code.distance) == (7, 3)
    assert code.same_amplitudes(raw_fixture("n7"))
    assert code.stages[0]["stage"] == "family"


def test_verify_pass_and_fail(n7, tmp_path, capsys):
    assert main(["verify", str(n7), "--checks", "kl", "--t", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    assert main(["verify", str(n7), "--checks", "kl", "--t", "3"]) == 1
    captured = capsys.readouterr()
    assert "witness" in captured.err
    assert not json.loads(captured.out)["passed"]


def test_verify_oracles(n7, capsys):
    assert main(["verify", str(n7), "--checks", "kl,oracle-ad,fidelity"]) == 0
    report = json.loads(capsys.readouterr().out)
    fit = report["results"]["fidelity"]
    assert abs(fit["coefficient"] - 35) / 35 < 0.01 and "tolerance" in report["results"]["oracle-ad"]


def test_tverberg_scaled(tmp_path):
    out = tmp_path / "pin6.json"
    assert main(["construct", "tverberg", "--K", "2", "--t", "2", "--scaled", "--output", str(out)]) == 0
    code = SimplexCode.loads(out.read_text())
    assert code.same_amplitudes(raw_fixture("pi-n6")) and code.distance == 3
    assert any(s["stage"] == "tverberg" and len(s["witness_sha256"]) == 64 for s in code.stages)


def test_tverberg_from_l1(n3_l1, tmp_path, capsys):
    out = tmp_path / "wb.json"
    assert main(["construct", "tverberg", "--l1", str(n3_l1), "--K", "2", "--t", "1", "--space", "fock", "--output", str(out)]) == 0
    assert SimplexCode.loads(out.read_text()).same_amplitudes(raw_fixture("wasilewski-banaczek"))
    assert main(["verify", str(out), "--checks", "fidelity", "--t", "1"]) == 0
    fit = json.loads(capsys.readouterr().out)["results"]["fidelity"]
    assert abs(fit["coefficient"] - 3) / 3 < 0.01


def test_construction_failure_exit(n3_l1):
    assert main(["construct", "tverberg", "--l1", str(n3_l1), "--K", "3", "--t", "1"]) == 3


def test_usage_errors(tmp_path, capsys):
    assert main(["construct", "tverberg", "--l1", str(tmp_path / "missing.json"), "--K", "2", "--t", "1"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2


def test_map_warns(n3_l1, tmp_path, capsys):
    wb = tmp_path / "wb.json"
    main(["construct", "tverberg", "--l1", str(n3_l1), "--K", "2", "--t", "1", "--space", "fock", "--output", str(wb)])
    spin = tmp_path / "spin.json"
    assert main(["map", str(wb), "--to", "spin", "--output", str(spin)]) == 0
    capsys.readouterr()
    assert main(["map", str(spin), "--to", "pi"]) == 0
    captured = capsys.readouterr()
    assert "warning" in captured.err
    assert json.loads(captured.out)["distance"] is None


def test_covariance_gates(tmp_path, capsys):
    path = tmp_path / "bd8.json"
    path.write_text(raw_fixture("bd8-n11").dumps())
    assert main(["verify", str(path), "--checks", "covariance", "--t", "2", "--gate", "x", "--gate", "t"]) == 0
    assert main(["verify", str(path), "--checks", "covariance", "--t", "2"]) == 2


def test_examples(capsys):
    assert main(["examples", "n7"]) == 0
    out = capsys.readouterr().out
    assert "sqrt(3/10)" in out and "sqrt(7/10)" in out and "pass" in out
    assert main(["examples", "sigma360"]) == 0
    assert "skipped" in capsys.readouterr().out


def test_simplex(capsys):
    assert main(["simplex", "--q", "3", "--N", "3"]) == 0
    assert len(json.loads(capsys.readouterr().out)["points"]) == 10


def test_byte_identical_and_round_trip(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        main(["construct", "tverberg", "--K", "2", "--t", "2", "--scaled", "--output", str(p)])
    assert a.read_bytes() == b.read_bytes()
    assert SimplexCode.loads(a.read_text()).dumps() == a.read_text()
    assert not list(tmp_path.glob(".tmp-*"))


def test_module_entry_point(n7):
    proc = subprocess.run(
        [sys.executable, "-m", "simplexcodes", "verify", str(n7), "--checks", "kl", "--t", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
