"""The command line interface: exit codes, config files, stable output."""

import json

import pytest

from conetilt.cli import (
    EXIT_FAIL,
    EXIT_OK,
    EXIT_REFUSED,
    EXIT_USAGE,
    ConfigError,
    main,
    parse_config,
)

CONFIG = """\
# the threefold instance
space: 3,3

objects:
  F  = ker(1)
  G  = ker(2)
  FG = F + G
  O  = O(0)
  O3 = O(3)

collections:
  main = FG, O, O3
  reversed = O3, O
"""


def test_parse_config_roundtrip():
    cfg = parse_config(CONFIG)
    assert str(cfg.space) == "P(1,1,1,3)"
    assert set(cfg.objects) == {"F", "G", "FG", "O", "O3"}
    assert cfg.collections["main"] == ["FG", "O", "O3"]


def test_parse_config_errors():
    with pytest.raises(ConfigError):
        parse_config("objects:\n  F = ker(1)\n")  # space missing
    with pytest.raises(ConfigError):
        parse_config("space: 3,3\nobjects:\n  F = ker(1)\n  F = ker(2)\n")
    with pytest.raises(ConfigError):
        parse_config("space: 3,3\nobjects:\n  F = nope(1)\n")
    with pytest.raises(ConfigError):
        parse_config("space: 3,3\ncollections:\n  c = missing\n")


def test_cohomology_command(capsys):
    code = main(
        [
            "cohomology",
            "--space",
            "3,3",
            "--sheaf",
            "OZ",
            "--twist-min",
            "1",
            "--twist-max",
            "3",
            "--i",
            "0",
        ]
    )
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert ["3", "6", "10"] == [line.split()[-1] for line in out.strip().splitlines()[2:]]


def test_cohomology_rejects_bad_degree(capsys):
    code = main(
        [
            "cohomology",
            "--space",
            "3,3",
            "--twist-min",
            "0",
            "--twist-max",
            "0",
            "--i",
            "7",
        ]
    )
    assert code == EXIT_USAGE


def test_hom_command_objects(capsys):
    code = main(["hom", "--instance", "P1113", "F", "G"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "deg0: 24" in out


def test_hom_command_vanishing(capsys):
    code = main(["hom", "--instance", "P1113", "O", "F"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "deg0: 0" in out


def test_hom_command_bundle_to_section(capsys):
    code = main(["hom", "--instance", "P1113", "G", "OZ(1)"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "deg0: 24" in out


def test_cohomology_top_degree(capsys):
    code = main(
        [
            "cohomology",
            "--space",
            "3,3",
            "--sheaf",
            "O",
            "--twist-min",
            "-6",
            "--twist-max",
            "-6",
            "--i",
            "3",
        ]
    )
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1].split()[-1] == "1"


def test_hom_command_inline_expression(capsys):
    code = main(["hom", "--space", "3,3", "O(0)", "OZ(2)"])
    out = capsys.readouterr().out
    assert code == EXIT_OK and "deg0: 6" in out


def test_hom_refusal_exit_code(capsys):
    code = main(["hom", "--space", "3,3", "O(1)", "O(0)"])
    err = capsys.readouterr().err
    assert code == EXIT_REFUSED
    assert "engine refusal" in err


def test_verify_sod_builtin_pass(capsys):
    code = main(["verify-sod", "--instance", "P1113", "main"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "PASS" in out and "(45, 1, 1)" in out


def test_verify_sod_config_fail(tmp_path, capsys):
    path = tmp_path / "instance.cfg"
    path.write_text(CONFIG)
    code = main(["verify-sod", "--config", str(path), "reversed"])
    assert code == EXIT_FAIL


def test_verify_sod_needs_source(capsys):
    assert main(["verify-sod", "main"]) == EXIT_USAGE


def test_verify_sod_unknown_collection(capsys):
    code = main(["verify-sod", "--instance", "P1113", "nope"])
    assert code == EXIT_USAGE


def test_paper_report_instances(capsys):
    assert main(["paper-report", "P1113"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("PASS") >= 25 and "FAIL" not in out
    assert main(["paper-report", "P112"]) == EXIT_OK


def test_paper_report_unknown_instance(capsys):
    assert main(["paper-report", "NOPE"]) == EXIT_USAGE


def test_paper_report_row_count(capsys):
    main(["paper-report", "P1113", "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["rows"]) == 22
    assert len(payload["verdicts"]) == 3
    assert payload["pass"] is True


def test_json_output_roundtrips_identically(capsys):
    """Parsing the machine output and re-rendering gives identical bytes."""
    for argv in (
        ["paper-report", "P1113", "--format", "json"],
        ["hom", "--instance", "P1113", "F", "F", "--format", "json"],
        ["verify-sod", "--instance", "P112", "--format", "json"],
        [
            "cohomology",
            "--space",
            "3,3",
            "--twist-min",
            "-3",
            "--twist-max",
            "3",
            "--format",
            "json",
        ],
    ):
        main(argv)
        first = capsys.readouterr().out
        rendered = json.dumps(json.loads(first), indent=2, sort_keys=True) + "\n"
        assert rendered == first
        main(argv)
        second = capsys.readouterr().out
        assert first == second


def test_markdown_format(capsys):
    main(["paper-report", "P112", "--format", "markdown"])
    out = capsys.readouterr().out
    assert "| --- |" in out


def test_config_multiplicity_and_inline_kernel(capsys, tmp_path):
    cfg = "space: 3,3\n\nobjects:\n  D  = 2*ker(1)\n\ncollections:\n  c = D\n"
    path = tmp_path / "m.cfg"
    path.write_text(cfg)
    code = main(["hom", "--config", str(path), "D", "O(0)"])
    out = capsys.readouterr().out
    assert code == EXIT_OK and "deg0: 18" in out
