"""Command-line behavior: exit codes, file round-trips, fault reporting."""

import json
import subprocess
import sys

import pgpack.packing
from pgpack import cli


def run(argv):
    return cli.main(argv)


def test_build_then_verify_ok(tmp_path, capsys):
    out = tmp_path / "p13.json"
    assert run(["build", "-k", "1", "-n", "3", "-o", str(out)]) == 0
    built = capsys.readouterr().out
    assert "7 spreads of 5 lines" in built
    assert run(["verify", "-i", str(out)]) == 0
    verified = capsys.readouterr().out
    assert "t=1" in verified
    assert "ok" in verified


def test_build_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["build", "-k", "1", "-n", "5", "-o", str(a)]) == 0
    assert run(["build", "-k", "1", "-n", "5", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_file_roundtrip_identical(tmp_path):
    out = tmp_path / "p13.json"
    assert run(["build", "-k", "1", "-n", "3", "-o", str(out)]) == 0
    ctx, p = cli.read_packing(str(out))
    assert cli.serialize_packing(ctx, p) == out.read_bytes()


def test_build_rejects_bad_parameters(tmp_path, capsys):
    out = str(tmp_path / "x.json")
    assert run(["build", "-k", "2", "-n", "3", "-o", out]) == 2
    assert run(["build", "-k", "1", "-n", "2", "-o", out]) == 2
    assert run(["build", "-k", "1", "-n", "1", "-o", out]) == 2
    capsys.readouterr()


def test_build_unwritable_path(tmp_path):
    assert run(["build", "-k", "1", "-n", "3",
                "-o", str(tmp_path / "no" / "dir" / "x.json")]) == 4


def test_build_csv(tmp_path):
    out = tmp_path / "p13.csv"
    assert run(["build", "-k", "1", "-n", "3", "-o", str(out),
                "--format", "csv"]) == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "alpha,line_index,x1,x01,x2,x02,x3,x03"
    assert len(rows) == 1 + 7 * 5
    assert rows[1] == "1,0,0,1,1,0,1,1"
    # csv is an export format, not a verifiable input
    assert run(["verify", "-i", str(out)]) == 2


def test_verify_detects_deleted_line(tmp_path, capsys):
    out = tmp_path / "p13.json"
    assert run(["build", "-k", "1", "-n", "3", "-o", str(out)]) == 0
    obj = json.loads(out.read_text())
    del obj["spreads"][2]["lines"][1]
    out.write_text(json.dumps(obj))
    capsys.readouterr()
    assert run(["verify", "-i", str(out)]) == 3
    report = capsys.readouterr().out
    assert "point-coverage" in report
    assert "line-multiplicity" in report


def test_verify_detects_header_mismatch(tmp_path, capsys):
    out = tmp_path / "p13.json"
    assert run(["build", "-k", "1", "-n", "3", "-o", str(out)]) == 0
    obj = json.loads(out.read_text())
    obj["header"]["modulus"] = 13
    out.write_text(json.dumps(obj))
    capsys.readouterr()
    assert run(["verify", "-i", str(out)]) == 2


def test_verify_detects_structural_damage(tmp_path, capsys):
    out = tmp_path / "p13.json"
    assert run(["build", "-k", "1", "-n", "3", "-o", str(out)]) == 0
    good = out.read_text()

    obj = json.loads(good)
    obj["spreads"][0]["lines"][0][2] = [7, 1]  # triple is no longer a line
    out.write_text(json.dumps(obj))
    assert run(["verify", "-i", str(out)]) == 2

    obj = json.loads(good)
    obj["spreads"][0]["lines"][0][0] = [3, 2]  # x0 outside the subfield
    out.write_text(json.dumps(obj))
    assert run(["verify", "-i", str(out)]) == 2

    out.write_text("not json at all")
    assert run(["verify", "-i", str(out)]) == 2
    capsys.readouterr()


def test_verify_missing_file(capsys):
    assert run(["verify", "-i", "/nonexistent/p.json"]) == 4
    capsys.readouterr()


def test_verify_with_wrong_t(tmp_path, capsys):
    out = tmp_path / "p13.json"
    assert run(["build", "-k", "1", "-n", "3", "-o", str(out)]) == 0
    assert run(["verify", "-i", str(out), "--t", "3"]) == 3
    assert run(["verify", "-i", str(out), "--t", "1"]) == 0
    capsys.readouterr()


def test_classify_outputs(capsys):
    assert run(["classify", "-k", "1", "-n", "3", "--line", "1,1;1,0"]) == 0
    assert "alpha set: {1}" in capsys.readouterr().out
    assert run(["classify", "-k", "1", "-n", "3", "--line", "2,0;4,0"]) == 0
    assert "alpha set: {1}" in capsys.readouterr().out
    assert run(["classify", "-k", "1", "-n", "3", "--line", "1,0;2,0"]) == 0
    out = capsys.readouterr().out
    assert "alpha set: {6}" in out
    assert "B_6" in out


def test_classify_rejects_bad_specs(capsys):
    bad = ["1,1", "1,1;2,2;3,3", "1;2", "a,b;c,d", "9,0;1,0", "1,2;2,0",
           "0,0;1,0", "1,0;2,0;", "1,0;1,0"]
    for spec in bad:
        assert run(["classify", "-k", "1", "-n", "3", "--line", spec]) == 2, spec
    capsys.readouterr()


def test_orbit_reports_action(capsys):
    assert run(["orbit", "-k", "1", "-n", "3", "--beta", "2"]) == 0
    out = capsys.readouterr().out
    assert "gamma=beta^(q+1)=3" in out
    assert "B_1 -> B_3" in out
    assert "for all 7 spreads" in out
    assert "size 7" in out
    assert run(["orbit", "-k", "1", "-n", "3", "--beta", "0"]) == 2
    assert run(["orbit", "-k", "1", "-n", "3", "--beta", "8"]) == 2
    capsys.readouterr()


def test_oracle_command_agrees(capsys):
    assert run(["oracle", "-k", "1", "-n", "3"]) == 0
    out = capsys.readouterr().out
    assert "all 35 lines" in out
    assert "all 49 (u, alpha) pairs" in out


def test_oracle_command_catches_injected_fault(monkeypatch, capsys):
    real = pgpack.packing.alpha_set

    def corrupted(ctx, line):
        vals = sorted(real(ctx, line))
        return frozenset(vals[:-1] + [vals[-1] ^ 3])

    monkeypatch.setattr(pgpack.packing, "alpha_set", corrupted)
    assert run(["oracle", "-k", "1", "-n", "3"]) == 3
    assert "disagreement" in capsys.readouterr().out


def test_selftest_passes(capsys):
    assert run(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "selftest: 7 of 7 checks passed" in out
    assert "FAIL" not in out


def test_module_entry_point(tmp_path):
    r = subprocess.run(
        [sys.executable, "-m", "pgpack", "classify", "-k", "1", "-n", "3",
         "--line", "1,1;1,0"],
        capture_output=True, text=True)
    assert r.returncode == 0
    assert "alpha set: {1}" in r.stdout
