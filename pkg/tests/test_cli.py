import json
import os
import subprocess
import sys

import pytest

from frobex.cli import main, run_config
from frobex.config import ConfigError, load_config, parse_scalar
from frobex.scalars import CycField

CONFIG_DIR = os.path.join(os.path.dirname(__file__), "..", "configs")


def cfg_path(name):
    return os.path.join(CONFIG_DIR, name)


def test_parse_scalar_forms():
    f = CycField.get(5)
    assert parse_scalar("2", f) == f.from_rational(2)
    assert parse_scalar("-1/2", f) == f.from_rational(-1) / 2
    assert parse_scalar("z", f) == f.zeta
    assert parse_scalar("z^2", f) == f.root_power(2)
    assert parse_scalar("2*z^3", f) == f.root_power(3) * 2
    assert parse_scalar("1 + z", f) == f.one + f.zeta
    assert parse_scalar("1 - z", f) == f.one - f.zeta
    assert parse_scalar(3, f) == f.from_rational(3)
    with pytest.raises(ConfigError):
        parse_scalar(1.5, f)
    for bad in ("2-z", "1/0", "zz", "z^x", "q"):
        with pytest.raises(ConfigError):
            parse_scalar(bad, f)


def test_verify_exit_zero_and_report(tmp_path):
    code = main(
        ["verify", "--config", cfg_path("cherednik_z2.toml"), "--out", str(tmp_path)]
    )
    assert code == 0
    report = json.load(open(tmp_path / "cherednik_z2.json"))
    assert report["schema"] == "frobex-report/1"
    assert report["passed"] is True
    assert report["instance"]["dimension"] == 8
    labels = [sec["label"] for sec in report["characters"]]
    assert labels == ["augmentation", "generic"]
    for sec in report["characters"]:
        assert sec["gram"]["rank"] == 8
        assert sec["gram"]["symmetric"] is True
        assert sec["nakayama"]["is_identity"] is True


def test_report_determinism(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert main(["verify", "--config", cfg_path("affine_a1.toml"), "--out", str(out)]) == 0
    ra = json.load(open(a / "affine_a1.json"))
    rb = json.load(open(b / "affine_a1.json"))
    ra.pop("timing")
    rb.pop("timing")
    assert json.dumps(ra, sort_keys=True) == json.dumps(rb, sort_keys=True)


def test_csv_outputs(tmp_path):
    code = main(
        [
            "gram",
            "--config",
            cfg_path("borel_l3.toml"),
            "--out",
            str(tmp_path),
            "--csv",
        ]
    )
    assert code == 0
    files = os.listdir(tmp_path)
    assert any(f.endswith(".gram.csv") for f in files)
    csv = open(tmp_path / sorted(f for f in files if f.endswith(".gram.csv"))[0]).read()
    assert len(csv.strip().split("\n")) == 9


def test_malformed_config_exit_two(tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text('[instance]\nalgebra = "cherednik"\ngroup = "E8"\n')
    code = main(["verify", "--config", str(bad), "--out", str(tmp_path)])
    assert code == 2
    assert not (tmp_path / "bad.json").exists()


def test_unknown_algebra_exit_two(tmp_path):
    bad = tmp_path / "alg.toml"
    bad.write_text('[instance]\nalgebra = "mystery"\n')
    assert main(["verify", "--config", str(bad), "--out", str(tmp_path)]) == 2


def test_unknown_check_exit_two(tmp_path):
    bad = tmp_path / "chk.toml"
    bad.write_text(
        '[instance]\nalgebra = "affine-hecke-a1"\nv0 = "2"\n[checks]\nrun = ["bogus"]\n'
    )
    assert main(["verify", "--config", str(bad), "--out", str(tmp_path)]) == 2


def test_invalid_explicit_omega_exit_one(tmp_path):
    bad = tmp_path / "omega.toml"
    bad.write_text(
        "\n".join(
            [
                "[instance]",
                'algebra = "graded-hecke"',
                'group = "S3"',
                'omega = "explicit"',
                "[[instance.omega_table]]",
                "element = 3",
                'matrix = [["0", "1"], ["-1", "0"]]',
            ]
        )
    )
    assert main(["verify", "--config", str(bad), "--out", str(tmp_path)]) == 1


def test_valid_explicit_omega_passes(tmp_path, graded_s3):
    alg, _ = graded_s3
    w = alg.omega.support()[0]
    m = alg.omega.forms[w]
    lines = [
        "[instance]",
        'algebra = "graded-hecke"',
        'group = "S3"',
        'omega = "explicit"',
    ]
    for w, m in alg.omega.forms.items():
        lines.append("[[instance.omega_table]]")
        lines.append(f"element = {w}")
        rows = ", ".join(
            "[" + ", ".join(f'"{x}"' for x in row) + "]" for row in m
        )
        lines.append(f"matrix = [{rows}]")
    lines += ["[characters]", 'mode = "list"', "[[characters.values]]", 'p1 = "1"', 'p2 = "0"',
              "[checks]", 'run = ["gram", "nakayama"]']
    good = tmp_path / "omega_good.toml"
    good.write_text("\n".join(lines))
    assert main(["verify", "--config", str(good), "--out", str(tmp_path)]) == 0


def test_subcommands_run(tmp_path):
    for cmd in ("gram", "nakayama", "dual-bases"):
        assert main([cmd, "--config", cfg_path("affine_a1.toml"), "--out", str(tmp_path)]) == 0
    assert (
        main(
            [
                "centre-check",
                "--config",
                cfg_path("graded_hecke_s3_zero.toml"),
                "--out",
                str(tmp_path),
            ]
        )
        == 0
    )
    report = json.load(open(tmp_path / "graded_hecke_s3_zero.json"))
    assert report["centre"]["ok"] is True
    assert report["centre"]["dimensions"] == report["centre"]["expected"]


def test_report_schema_command(capsys):
    assert main(["report-schema"]) == 0
    out = capsys.readouterr().out
    assert "frobex-report/1" in out


def test_augmentation_rejected_for_unit_constrained(tmp_path):
    bad = tmp_path / "aug.toml"
    bad.write_text(
        '[instance]\nalgebra = "uq-sl2"\nell = 3\n[characters]\nmode = "augmentation"\n'
    )
    assert main(["verify", "--config", str(bad), "--out", str(tmp_path)]) == 2


def test_random_characters_seeded(tmp_path):
    cfgtext = "\n".join(
        [
            "[instance]",
            'algebra = "uq-borel-sl2"',
            "ell = 3",
            "[characters]",
            'mode = "random"',
            "count = 2",
            "seed = 11",
            "[checks]",
            'run = ["gram", "nakayama"]',
            "[run]",
            "seed = 11",
        ]
    )
    p = tmp_path / "rand.toml"
    p.write_text(cfgtext)
    assert main(["verify", "--config", str(p), "--out", str(tmp_path)]) == 0
    r1 = json.load(open(tmp_path / "rand.json"))
    assert main(["verify", "--config", str(p), "--out", str(tmp_path)]) == 0
    r2 = json.load(open(tmp_path / "rand.json"))
    assert [s["assignment"] for s in r1["characters"]] == [
        s["assignment"] for s in r2["characters"]
    ]


SMALL_CONFIGS = [
    "affine_a1.toml",
    "borel_l3.toml",
    "cherednik_s2.toml",
    "cherednik_z2.toml",
    "cherednik_z3.toml",
    "graded_hecke_s3_zero.toml",
    "graded_hecke_z3.toml",
    "oq_sl2_l3.toml",
    "uq_sl2_l3.toml",
]


def test_all_small_shipped_configs_pass(tmp_path):
    for name in SMALL_CONFIGS:
        code = main(["verify", "--config", cfg_path(name), "--out", str(tmp_path)])
        assert code == 0, name


def test_full_report_sections(tmp_path):
    assert (
        main(
            [
                "verify",
                "--config",
                cfg_path("graded_hecke_z3.toml"),
                "--out",
                str(tmp_path),
                "--threads",
                "2",
            ]
        )
        == 0
    )
    report = json.load(open(tmp_path / "graded_hecke_z3.json"))
    sec = report["characters"][0]
    assert sec["claims"]["ok"] is True
    assert sec["claims"]["associativity"]["ok"] is True
    assert sec["hypothesis"]["failures"] == 0
    assert sec["hypothesis"]["log"][0]["unit_kind"] == "invertible-central-poly"
    assert report["centre"]["ok"] is True
    assert "timing" in report


def test_console_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "frobex.cli", "report-schema"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "frobex-report/1" in proc.stdout
