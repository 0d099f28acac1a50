import csv
import json
import subprocess
import sys

import numpy as np
import pytest

from mosk.cli import main


def test_gallery_listing(capsys):
    assert main(["gallery"]) == 0
    out = capsys.readouterr().out
    for name in ("cubic", "staircase", "clamp-sin-op", "shift"):
        assert name in out


def test_gallery_json(tmp_path):
    out = tmp_path / "gallery.json"
    assert main(["gallery", "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["schema"] == 1
    assert any(e["name"] == "rotator" for e in payload["entries"])


def test_certify_rotator_uniformly_monotone_exit2(tmp_path):
    out = tmp_path / "cert.json"
    code = main(
        [
            "certify",
            "--op",
            "rotator",
            "--class",
            "uniformly-monotone",
            "--t",
            "0.5,1,2",
            "--samples",
            "100000",
            "--seed",
            "42",
            "--out",
            str(out),
        ]
    )
    assert code == 2
    payload = json.loads(out.read_text())
    cert = payload["certificate"]
    assert payload["schema"] == 1
    assert cert["verdict"] == "refuted"
    assert all(abs(row["value"]) <= 1e-12 for row in cert["estimates"])
    assert cert["seed"] == 42 and cert["samples"] == 100000
    assert payload["config"]["class"] == "uniformly-monotone"


def test_certify_consistent_exit0(tmp_path):
    out = tmp_path / "cert.json"
    code = main(
        [
            "certify", "--op", "clamp-sin-map", "--class", "contraction-large-distances",
            "--eps", "1,5", "--samples", "50000", "--seed", "7", "--out", str(out),
        ]
    )
    assert code == 0
    cert = json.loads(out.read_text())["certificate"]
    assert cert["verdict"] == "consistent"


def test_certify_deterministic_outputs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = [
        "certify", "--op", "cubic", "--class", "uniformly-monotone",
        "--t", "0.5,1", "--samples", "20000", "--seed", "5",
    ]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_split_pr_oscillation(tmp_path):
    out = tmp_path / "trace.csv"
    code = main(
        [
            "split", "--algo", "pr", "--opA", "normal-cone-zero", "--opB", "zero",
            "--x0", "1", "--max-iter", "50", "--out", str(out),
        ]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# ")
    rows = list(csv.reader(lines[1:]))
    header, data = rows[0], rows[1:]
    xcol = header.index("x_0")
    vals = [float(r[xcol]) for r in data]
    assert vals[:4] == [1.0, -1.0, 1.0, -1.0]


def test_split_expect_converge_exit2():
    code = main(
        [
            "split", "--algo", "pr", "--opA", "normal-cone-zero", "--opB", "zero",
            "--x0", "1", "--max-iter", "50", "--expect-converge",
        ]
    )
    assert code == 2


def test_split_fb_requires_gamma():
    code = main(
        ["split", "--algo", "fb", "--opA", "identity", "--opB", "cubic", "--x0", "5"]
    )
    assert code == 1


def test_split_fb_bad_gamma_is_usage_error():
    code = main(
        [
            "split", "--algo", "fb", "--opA", "identity", "--opB", "cubic",
            "--x0", "5", "--gamma", "2.5",
        ]
    )
    assert code == 1


def test_split_shift_basis_x0(tmp_path):
    out = tmp_path / "shift.csv"
    code = main(
        [
            "split", "--algo", "pr", "--opA", "normal-cone-zero", "--opB", "shift",
            "--dim", "64", "--x0", "e1", "--max-iter", "100", "--probes", "4",
            "--out", str(out), "--expect-converge",
        ]
    )
    assert code == 0
    header = out.read_text().splitlines()[1].split(",")
    assert "probe_3" in header


def test_witness_staircase_csv(tmp_path):
    out = tmp_path / "w.csv"
    assert main(["witness", "--example", "staircase-ssne", "--n", "20", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    rows = list(csv.reader(lines[1:]))
    header, data = rows[0], rows[1:]
    dcol = header.index("d_n")
    assert len(data) == 20
    for i, row in enumerate(data, start=1):
        assert float(row[dcol]) == 4.0 ** (-i)


def test_witness_cone_csv(tmp_path):
    out = tmp_path / "cone.csv"
    assert main(["witness", "--example", "cone-subdiff-growth", "--n", "5", "--out", str(out)]) == 0
    rows = list(csv.reader(out.read_text().splitlines()[1:]))
    header, data = rows[0], rows[1:]
    assert float(data[0][header.index("ratio")]) == 0.0
    assert float(data[0][header.index("coercivity_probe")]) == 2.0


def test_selfdual_command(tmp_path):
    out = tmp_path / "sd.json"
    code = main(
        [
            "selfdual", "--op", "cubic", "--samples", "50000", "--seed", "11",
            "--box=-1000,1000", "--out", str(out),
        ]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    v = payload["report"]["verdicts"]
    assert v["uniformly-monotone"] == "consistent"
    assert v["inverse-uniformly-monotone"] == "refuted"
    assert v["reflected-resolvent-cld"] == "refuted"
    assert payload["report"]["agrees_with_selfduality"] is True


def test_usage_errors_exit1():
    assert main(["certify", "--op", "cubic"]) == 1  # missing --class
    assert main(["bogus-command"]) == 1
    # unknown gallery identifiers are configuration errors
    assert main(["split", "--algo", "pr", "--opA", "nope", "--opB", "zero", "--x0", "1"]) == 1
    assert main(["certify", "--op", "cubic", "--class", "mystery"]) == 1


def test_certify_sequential_classes(tmp_path):
    out = tmp_path / "ssne.json"
    code = main(
        [
            "certify", "--op", "staircase", "--class", "super-strongly-nonexpansive",
            "--samples", "1000", "--seed", "3", "--out", str(out),
        ]
    )
    assert code == 2  # the witness family refutes SSNE
    cert = json.loads(out.read_text())["certificate"]
    assert cert["verdict"] == "refuted"
    code = main(
        [
            "certify", "--op", "clamp-sin-map", "--class", "strongly-nonexpansive",
            "--samples", "1000", "--seed", "3",
        ]
    )
    assert code == 0


def test_certify_coercive_and_growth(tmp_path):
    assert main(
        ["certify", "--op", "cone-subdiff", "--class", "coercive", "--samples", "100"]
    ) == 0
    assert main(
        ["certify", "--op", "cone-subdiff", "--class", "growth-condition", "--samples", "100"]
    ) == 2
    assert main(
        ["certify", "--op", "identity", "--class", "growth-condition", "--samples", "5000"]
    ) == 0


def test_mosk_seed_env(monkeypatch, tmp_path):
    monkeypatch.setenv("MOSK_SEED", "123")
    from mosk import cli as cli_mod

    parser = cli_mod.build_parser()
    args = parser.parse_args(
        ["certify", "--op", "cubic", "--class", "uniformly-monotone"]
    )
    assert args.seed == 123


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mosk", "gallery"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert "cubic" in proc.stdout
