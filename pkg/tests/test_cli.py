import json

import pytest
from click.testing import CliRunner
from jsonschema import validate

from schurtrails.cli import REPORT_SCHEMA, main
from schurtrails.partitions import Partition, SkewShape
from schurtrails.schur import TerminalSpec, enumerate_families
from schurtrails.trails import build_graph


@pytest.fixture
def runner():
    return CliRunner()


def graph_json():
    greens = list(enumerate_families(TerminalSpec.from_shape(SkewShape(Partition((2, 1))), 2, 0)))
    blues = list(enumerate_families(TerminalSpec.from_shape(SkewShape(Partition((1,))), 2, -1)))
    return json.dumps(build_graph(blues[0], greens[0]).to_json())


# ---------------------------------------------------------------- exit codes

def test_no_command_is_usage_error(runner):
    result = runner.invoke(main, [])
    assert result.exit_code == 2


def test_unknown_flag_is_usage_error(runner):
    result = runner.invoke(main, ["catalan", "--points", "4", "--frobnicate"])
    assert result.exit_code == 2


def test_validation_error_bubbles_as_usage(runner):
    result = runner.invoke(main, ["verify", "general", "--lambda", "3,4", "--vars", "2"])
    assert result.exit_code == 2
    assert "parts must be weakly decreasing" in result.output


def test_non_integer_parts_are_usage_error(runner):
    result = runner.invoke(main, ["verify", "general", "--lambda", "3,x", "--vars", "2"])
    assert result.exit_code == 2


# ---------------------------------------------------------------- verify

def test_verify_general_json_report(runner):
    result = runner.invoke(
        main, ["verify", "general", "--lambda", "5,4,3,2", "--vars", "3", "--format", "json"]
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    validate(payload, REPORT_SCHEMA)
    assert payload["equal"] is True
    assert payload["identity"] == "general"
    assert payload["params"] == {"N": 3, "lambda": [5, 4, 3, 2]}
    assert "elapsed_ms" not in payload


def test_verify_text_verdict(runner):
    result = runner.invoke(main, ["verify", "kirillov", "--lambda", "2,2,2", "--vars", "3"])
    assert result.exit_code == 0
    assert "kirillov" in result.output
    assert "VERIFIED" in result.output


def test_kirillov_window_must_be_constant(runner):
    result = runner.invoke(main, ["verify", "kirillov", "--lambda", "2,1", "--vars", "2"])
    assert result.exit_code == 2


def test_verify_reports_validate_across_identities(runner):
    invocations = [
        ["verify", "dodgson", "--k", "2"],
        ["verify", "pluecker", "--k", "2", "--rlist", "1"],
        ["verify", "pluecker", "--mode", "schur", "--lambda", "4,2", "--sigma", "3,1",
         "--rlist", "1", "--k", "2", "--vars", "3"],
        ["verify", "ciucu", "--set", "1,2,3,4", "--k", "2", "--vars", "3"],
        ["verify", "kleber", "--lambda", "2,1", "--k", "1", "--vars", "3"],
    ]
    for argv in invocations:
        result = runner.invoke(main, argv + ["--format", "json"])
        assert result.exit_code == 0, (argv, result.output)
        payload = json.loads(result.output)
        validate(payload, REPORT_SCHEMA)
        assert payload["equal"] is True


def test_verify_output_is_deterministic(runner):
    argv = ["verify", "kleber", "--lambda", "2,1", "--k", "2", "--format", "json"]
    first = runner.invoke(main, argv)
    second = runner.invoke(main, argv)
    assert first.output == second.output
    assert first.exit_code == second.exit_code == 0


def test_verify_out_writes_file(runner, tmp_path):
    target = tmp_path / "report.json"
    result = runner.invoke(
        main,
        ["verify", "general", "--lambda", "2,1", "--format", "json", "--out", str(target)],
    )
    assert result.exit_code == 0
    assert result.output == ""
    payload = json.loads(target.read_text())
    assert payload["equal"] is True


# ---------------------------------------------------------------- sweep

def test_sweep_streams_reports_in_input_order(runner, monkeypatch):
    monkeypatch.setenv("SCHURTRAILS_THREADS", "3")
    result = runner.invoke(
        main, ["verify", "general", "--sweep", "2,1;4,4;3,2,1", "--vars", "3"]
    )
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    shapes = [json.loads(line)["params"]["lambda"] for line in lines]
    assert shapes == [[2, 1], [4, 4], [3, 2, 1]]
    for line in lines:
        validate(json.loads(line), REPORT_SCHEMA)


def test_sweep_rejects_bad_thread_count(runner, monkeypatch):
    monkeypatch.setenv("SCHURTRAILS_THREADS", "0")
    result = runner.invoke(main, ["verify", "general", "--sweep", "2,1"])
    assert result.exit_code == 2


def test_sweep_needs_entries(runner):
    result = runner.invoke(main, ["verify", "general", "--sweep", " ; "])
    assert result.exit_code == 2


# ---------------------------------------------------------------- audit / orbit

def test_audit_text_summary(runner):
    result = runner.invoke(main, ["audit", "--lambda", "2,1", "--vars", "2"])
    assert result.exit_code == 0
    assert result.output == "lambda 2,1 N 2: 6 objects = 2 A + 4 B\n"


def test_audit_json(runner):
    result = runner.invoke(main, ["audit", "--lambda", "2,1", "--vars", "2", "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "lambda": [2, 1],
        "N": 2,
        "objects": 6,
        "case_a": 2,
        "case_b": 4,
    }


def test_orbit_json(runner):
    result = runner.invoke(
        main,
        ["orbit", "--lambda", "2", "--sigma", "1", "--offset", "-1",
         "--rlist", "1", "--vars", "2", "--format", "json"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["O0_size"] == payload["O1_size"] == 6
    assert payload["initial"] == [[2], [0], [1], [0]]
    assert payload["parity_uniform"] is True
    assert len(payload["S1"]) == 2


def test_orbit_selection_out_of_range(runner):
    result = runner.invoke(
        main, ["orbit", "--lambda", "2", "--sigma", "1", "--offset", "-1", "--rlist", "9"]
    )
    assert result.exit_code == 2
    assert "out of range" in result.output


# ---------------------------------------------------------------- render

def test_render_overlays_requested_trail(runner, tmp_path):
    config = tmp_path / "graph.json"
    config.write_text(graph_json())
    result = runner.invoke(main, ["render", str(config), "--trail", "1,2"])
    assert result.exit_code == 0
    svg = result.output
    assert svg.startswith("<svg ")
    assert svg.rstrip().endswith("</svg>")
    assert "#f0941f" in svg  # the highlighted trail
    assert "stroke-dasharray" in svg  # dotted blue family
    # y axis is flipped: lattice (1,2) sits at canvas (40, 0)
    assert "40,0" in svg
    # green end (1,2) is white/open, green start (-1,1) black/filled
    assert '<circle cx="40" cy="0" r="6" fill="#ffffff" stroke="#111111" stroke-width="2"/>' in svg
    assert '<circle cx="-40" cy="40" r="6" fill="#111111"/>' in svg


def test_render_is_deterministic(runner, tmp_path):
    config = tmp_path / "graph.json"
    config.write_text(graph_json())
    first = runner.invoke(main, ["render", str(config)])
    second = runner.invoke(main, ["render", str(config)])
    assert first.output == second.output


def test_render_empty_graph_draws_grid(runner):
    result = runner.invoke(main, ["render"], input='{"blue": [], "green": []}')
    assert result.exit_code == 0
    assert "polyline" in result.output
    assert "circle" not in result.output


def test_render_rejects_malformed_config(runner):
    result = runner.invoke(main, ["render"], input='{"blue": 3}')
    assert result.exit_code == 2
    assert "malformed graph config" in result.output


# ---------------------------------------------------------------- catalan

def test_catalan_counts(runner):
    for points, expected in ((2, "1"), (4, "2"), (6, "5"), (8, "14")):
        result = runner.invoke(main, ["catalan", "--points", str(points)])
        assert result.exit_code == 0
        assert result.output == expected + "\n"


def test_catalan_odd_input(runner):
    result = runner.invoke(main, ["catalan", "--points", "5"])
    assert result.exit_code == 2


def test_catalan_json(runner):
    result = runner.invoke(main, ["catalan", "--points", "8", "--format", "json"])
    assert json.loads(result.output) == {"matchings": 14, "points": 8}
