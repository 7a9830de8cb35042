import csv
import json

import pytest

from loopfront import cli
from loopfront.config import ConfigError, parse_config
from loopfront.errors import OutsideBigCell

SWALLOWTAIL = "[1, 1, 0, 1, 2, 0, 1, 0, 0, 1, 1, 0]"


def write(tmp_path, body, name="c.toml"):
    p = tmp_path / name
    p.write_text(body)
    return str(p)


def jet_cfg(tmp_path, extra=""):
    return write(tmp_path, f"""
[cauchy]
jet = {SWALLOWTAIL}
[grid]
range = [-0.5, 0.5]
n = 41
[output]
prefix = "swallowtail"
{extra}""")


def test_build_writes_outputs(tmp_path, capsys):
    assert cli.main(["build", "-c", jet_cfg(tmp_path), "-o", str(tmp_path / "o")]) == 0
    assert capsys.readouterr().out.strip() == "Swallowtail"
    rep = json.loads((tmp_path / "o" / "swallowtail.report.json").read_text())
    assert rep["report"]["label"] == "Swallowtail" and rep["singular_curves"] >= 1
    for f in rep["files"]:
        assert (tmp_path / "o" / f).exists()


def test_build_is_deterministic(tmp_path):
    cfg = jet_cfg(tmp_path)
    for d in ("a", "b"):
        cli.main(["build", "-c", cfg, "-o", str(tmp_path / d)])
    names = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert names == sorted(p.name for p in (tmp_path / "b").iterdir())
    for n in names:
        assert (tmp_path / "a" / n).read_bytes() == (tmp_path / "b" / n).read_bytes()


def test_vacuum_label(tmp_path, capsys):
    cfg = write(tmp_path, """
[cauchy]
abc = { a = [0.0], b = [-1.0], c = [0.0] }
[grid]
n = 41
""")
    assert cli.main(["build", "-c", cfg, "-o", str(tmp_path)]) == 0
    assert capsys.readouterr().out.strip() == "Unresolved (identically singular)"


def test_classify_json(capsys):
    assert cli.main(["classify", "--jet", "1,1,0,1,2,0,1,0,0,1,1,0"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["label"] == "Swallowtail"
    assert cli.main(["classify", "--gauss", "--jet", "1,0,1,1,0,0,1,0,0,1,0,1"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["front"]["label"] == "CuspidalLips" and d["gauss_map"]["label"] == "Lips"


def test_classify_strict_short_jet(capsys):
    assert cli.main(["classify", "--strict", "--jet", "1,1,1,1,1,0,1,0,1,1,0,0"]) == 1


@pytest.mark.parametrize("body", [
    "[nonsense]\n",
    "[cauchy]\njet = [1, 2, 3]\n",
    "[cauchy]\njet = [1, 0, 0, 1]\nabc = { a = [0.0], b = [-1.0], c = [0.0] }\n",
    "[cauchy]\njet = [1, 0, 0, 1]\n[numerics]\nM = 12\nsamples = 8\n",
    "[cauchy]\njet = [1, 0, 0, 1]\n[output]\nmesh_format = 'stl'\n",
    "[cauchy]\njet = [1, 0, 0, 1]\n[family]\ntarget = 'a21'\nvalues = [0.0]\n",
    "not = toml = at all",
])
def test_config_errors_exit_2(tmp_path, body):
    assert cli.main(["build", "-c", write(tmp_path, body)]) == 2


def test_missing_file_exit_2(tmp_path):
    assert cli.main(["build", "-c", str(tmp_path / "none.toml")]) == 2


def test_degenerate_exit_3(tmp_path):
    cfg = write(tmp_path, "[cauchy]\nabc = { a = [0.0], b = [-1.0], c = [0.0], A = [0.0] }\n")
    assert cli.main(["build", "-c", cfg, "-o", str(tmp_path)]) == 3


def test_big_cell_exit_4(tmp_path, monkeypatch):
    def boom(cfg):
        raise OutsideBigCell("forced")
    monkeypatch.setattr(cli, "build_surface", boom)
    assert cli.main(["build", "-c", jet_cfg(tmp_path), "-o", str(tmp_path)]) == 4


def test_verify_pass_and_fail(tmp_path, capsys):
    cfg = write(tmp_path, open(jet_cfg(tmp_path)).read().replace("n = 41", "n = 101"), "v.toml")
    assert cli.main(["verify", "-c", cfg, "-o", str(tmp_path)]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["pass"] and d["checks"]["oracle"]["pass"]
    bad = write(tmp_path, """
[cauchy]
abc = { a = [0.0], b = [-1.0], c = [0.0] }
[grid]
n = 21
[numerics]
M = 2
samples = 16
""", "bad.toml")
    assert cli.main(["verify", "-c", bad]) == 5
    d = json.loads(capsys.readouterr().out)
    assert not d["checks"]["truncation_tail"]["pass"]
    assert "skipped" in d["checks"]["oracle"]


def test_family_events(tmp_path):
    cfg = write(tmp_path, """
[cauchy]
abc = { a = [0.0, 0.0, 1.0], b = [-1.0], c = [0.0, -1.0] }
[grid]
range = [-0.5, 0.5]
n = 61
[output]
prefix = "lips"
[family]
name = "r"
target = "a[0]"
values = [0.1, 0.0]
""")
    assert cli.main(["family", "-c", cfg, "-o", str(tmp_path / "f")]) == 0
    rows = list(csv.DictReader(open(tmp_path / "f" / "lips.events.csv")))
    assert [r["r"] for r in rows] == ["0.10000000000000001", "0"]
    assert rows[0]["singular_curves"] == "0" and rows[1]["base_label"] == "CuspidalLips"


def test_with_param_targets():
    cfg = parse_config({"cauchy": {"jet": [1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0]}})
    assert cfg.with_param("b33", 2).jet.b2 == (1, 0, 2)
    with pytest.raises(ConfigError):
        cfg.with_param("a21", 1)
