import json

import pytest

from modules.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from modules.hecke import h3_eigenforms
from modules.qseries import SCHEMA


def test_theta_text(capsys):
    assert run(["theta", "--d", "5", "--class", "0", "--N", "10", "--format", "text"]) == EXIT_OK
    assert capsys.readouterr().out == "1 + 2*q + 2*q^4 + 2*q^5 + 4*q^6 + 6*q^9\n"


def test_eigenform_text(capsys):
    assert run(["eigenform", "--d", "2", "--N", "9"]) == EXIT_OK
    assert capsys.readouterr().out == "q - 2*q^2 - 2*q^3 + 4*q^4 + 4*q^6 - 8*q^8 - 5*q^9\n"


def test_theta_json(capsys):
    assert run(["theta", "--d", "5", "--class", "1", "--N", "3", "--format", "json"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["schema"] == SCHEMA
    assert record["class"] == 1
    assert record["coeffs"] == [
        {"m": 0, "c": {"num": 1, "den": 1}},
        {"m": 2, "c": {"num": 2, "den": 1}},
        {"m": 3, "c": {"num": 4, "den": 1}},
    ]


def test_wtheta_json_carries_level(capsys):
    assert run(["wtheta", "--d", "23", "--class", "2", "--P", "xy", "--N", "10", "--format", "json"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["harmonic"] == "xy"
    assert record["level"] == 23
    assert all(set(c["c"]) == {"r", "s", "D"} for c in record["coeffs"])


def test_shell_csv(capsys):
    assert run(["shell", "--d", "5", "--m", "9", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "u,v"
    assert len(lines) == 7


def test_design_text(capsys):
    assert run(["design", "--d", "5", "--m", "9"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "size=6" in out
    assert "strength=1" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "theta.txt"
    assert run(["theta", "--d", "2", "--N", "4", "--out", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert target.read_text() == "1 + 2*q + 2*q^2 + 4*q^3 + 2*q^4\n"


def test_scan_summary(capsys):
    assert run(["scan", "--disc-min", "-20", "--N", "30", "--summary", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("disc,a,b,c,trichotomy_tag")


def test_verify_campaign(capsys):
    code = run(["verify", "--campaign", "disjoint", "--N", "100", "--format", "json"])
    assert code == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["kind"] == "verify"
    assert all(r["status"] == "pass" for r in record["reports"])


def test_verify_single_field_text(capsys):
    assert run(["verify", "--d", "2", "--campaign", "non-design", "--N", "200",
                "--nonvanishing-N", "0"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[-1] == "1/1 campaigns passed"


def test_verify_reports_failures(monkeypatch, capsys):
    from modules import cli
    from modules.verify import CampaignReport

    def failing(*args, **kwargs):
        report = CampaignReport("broken", 1)
        report.fail(1, "forced")
        return [report]

    monkeypatch.setattr(cli, "run_all", failing)
    assert run(["verify", "--all", "--N", "1"]) == EXIT_FAILED
    assert "broken" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["theta", "--d", "5", "--bogus"],
    ["nosuchcommand"],
    ["theta"],
    ["theta", "--d", "5", "--N", "0"],
    ["wtheta", "--d", "5", "--P", "cubic"],
    ["verify", "--d", "2", "--campaign", "non-design", "--N", "50", "--nonvanishing-N", "-5"],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["theta", "--d", "4"],
    ["theta", "--d", "5", "--class", "2"],
    ["eigenform", "--d", "23"],
    ["verify"],
])
def test_domain_errors(argv, capsys):
    assert run(argv) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("error:")


def test_h3_text(capsys):
    assert run(["h3", "--N", "20"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    solution = h3_eigenforms(20)
    assert "a-cubic: 512 a^3 - 96 a + 7 = 0" in lines
    assert "b-cubic: 512 b^3 - 2208 b + 1587 = 0" in lines
    assert "linear:  3 b = 64 a^2 + 7 a - 8" in lines
    assert "A roots: " + ", ".join(f"{r:.12g}" for r in solution.a_roots) in lines
    assert sum(line.startswith("pair (A") and "residuals: " in line for line in lines) == 3
    assert any(line.startswith("a(3) from phi") for line in lines)
    eigenforms = [line for line in lines if line.startswith("eigenform ")]
    assert len(eigenforms) == 3
    assert all(line.split(": ", 1)[1].startswith("q - ") or
               line.split(": ", 1)[1].startswith("q + ") for line in eigenforms)


def test_h3_json_carries_residuals(capsys):
    assert run(["h3", "--N", "20", "--format", "json"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert len(record["residuals"]) == 3
    assert all(max(r) < 1e-6 for r in record["residuals"])
    assert record["character_a3"] == pytest.approx([4.249425, 1.543637, -5.793062], abs=1e-5)


def test_tables_command(capsys):
    assert run(["tables", "--format", "csv"]) == EXIT_OK
    assert "403,-403,1/2,11/9," in capsys.readouterr().out
