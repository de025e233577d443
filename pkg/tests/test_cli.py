import json
import subprocess
import sys

import pytest

from fsbcat import limits
from fsbcat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hom_count(capsys):
    assert run(capsys, "hom", "2", "1") == (0, "8\n", "")
    assert run(capsys, "hom", "2", "1", "--count")[1] == "8\n"


def test_hom_orbits(capsys):
    code, out, _ = run(capsys, "hom", "3", "1", "--orbits")
    assert code == 0 and len(out.splitlines()) == 13


def test_hom_list_json(capsys):
    code, out, _ = run(capsys, "hom", "1", "1", "--list", "--format", "json")
    assert code == 0
    assert sorted(r["images"] for r in json.loads(out)) == [[-1], [1]]


def test_kl(capsys):
    assert run(capsys, "kl", "3", "--coeff", "1")[1] == "4\n"
    assert run(capsys, "kl", "2")[1] == "1\n"
    assert run(capsys, "kl", "6", "--coeff", "1")[1] == "328\n"
    code, out, _ = run(capsys, "kl", "5", "--type", "A", "--format", "json")
    assert code == 0 and json.loads(out)["coeffs"] == [1, 5]


def test_flats(capsys):
    code, out, _ = run(capsys, "flats", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "dim,zero_block,blocks" and len(lines) == 7
    code, out, _ = run(capsys, "flats", "2", "--format", "json")
    assert len(json.loads(out)) == 6


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "b-small", "--max-n", "3", "--d", "1")
    assert code == 0 and out.splitlines()[-1] == "suite b-small: pass"
    code, out, _ = run(capsys, "verify", "groebner", "--max-n", "3", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["passed"] and all(c["status"] == "pass" for c in report["checks"])


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_series_dmod(capsys):
    code, out, _ = run(capsys, "series", "dmod", "--i", "1", "--fit")
    lines = out.splitlines()
    assert code == 0
    assert lines[1] == "poles: {1, 3}" and lines[2] == "residue-at-3: 1/2"


def test_series_projective(capsys):
    code, out, _ = run(capsys, "series", "projective", "--d", "0", "--format", "json")
    info = json.loads(out)
    assert code == 0 and info["poles"] == [1] and info["residue"] == "1"
    code, out, _ = run(capsys, "series", "projective", "--d", "1", "--format", "json")
    assert json.loads(out)["residue"] == "1"


def test_series_insufficient_terms(capsys):
    code, _, err = run(capsys, "series", "dmod", "--i", "2", "--terms", "15", "--pole-bound", "5",
                       "--mult-bound", "4")
    assert code == 1 and "need 16 terms" in err


def test_series_reports_divergence(capsys):
    code, out, _ = run(capsys, "series", "dmod", "--i", "2", "--format", "json")
    info = json.loads(out)
    assert code == 0 and info["residue"] == "1/12" and info["j"] == 7


def test_cache_file(tmp_path, capsys):
    path = tmp_path / "kl.json"
    assert run(capsys, "kl", "4", "--cache", str(path))[0] == 0
    data = json.loads(path.read_text())
    assert data["entries"]["B4"] == [1, 24]
    assert run(capsys, "kl", "4", "--coeff", "1", "--cache", str(path))[1] == "24\n"


def test_bad_cache_header(tmp_path, capsys):
    path = tmp_path / "kl.json"
    path.write_text(json.dumps({"header": {"version": 0, "convention_tag": "x"}, "entries": {}}))
    code, _, err = run(capsys, "kl", "3", "--cache", str(path))
    assert code == 1 and "cache version" in err


def test_config_limits(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(limits, "LIMITS", dict(limits.DEFAULTS))
    cfg = tmp_path / "limits.json"
    cfg.write_text(json.dumps({"flats_B": 2}))
    code, _, err = run(capsys, "flats", "3", "--config", str(cfg))
    assert code == 1 and "flats_B" in err
    cfg.write_text(json.dumps({"bogus": 1}))
    assert run(capsys, "flats", "1", "--config", str(cfg))[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fsbcat", "hom", "2", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "8\n"
