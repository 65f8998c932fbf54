import json
import subprocess
import sys
from pathlib import Path
from unittest import mock

# Ensure the project root is on the path so that ``import polyaccess`` resolves
# the CLI module defined at the repository root. ``parents[2]`` points to the
# repository root.
sys.path.insert(0, str(Path(__file__).resolve().parents[2]))

import polyaccess
import runner
from polyaccess import (
    FullCommand,
    ImmerseCommand,
    IndexCommand,
    RankCommand,
    SingularCommand,
)
from polyaccess.conf import settings

from conftest import system_path

PLANAR = str(system_path("planar"))
UNICYCLE = str(system_path("unicycle"))


def test_build_parser_returns_command_instances():
    parser = polyaccess.build_parser()
    args = parser.parse_args(["index", PLANAR])
    assert isinstance(args.command, IndexCommand)
    args = parser.parse_args(["rank", UNICYCLE, "--l", "3"])
    assert isinstance(args.command, RankCommand)
    assert args.l == 3
    args = parser.parse_args(["immerse", UNICYCLE, "--check"])
    assert isinstance(args.command, ImmerseCommand)
    assert args.check
    assert isinstance(parser.parse_args(["singular", PLANAR]).command, SingularCommand)
    assert isinstance(parser.parse_args(["full", PLANAR]).command, FullCommand)


def test_index_planar(capsys):
    assert polyaccess.main(["index", PLANAR]) == 0
    out = capsys.readouterr().out
    assert "r* = 2; S_∞: ⟨x1, x2⟩" in out


def test_singular_planar(capsys):
    assert polyaccess.main(["singular", PLANAR]) == 0
    out = capsys.readouterr().out
    for gen in ("x1^2*x2", "x1*x2^2", "x1^4", "x2^3"):
        assert gen in out


def test_rank_unicycle_is_accessible_everywhere(capsys):
    assert polyaccess.main(["rank", UNICYCLE, "--l", "3"]) == 0
    out = capsys.readouterr().out
    assert "empty intersection with im T; accessible everywhere" in out


def test_immerse_check(capsys):
    assert polyaccess.main(["immerse", UNICYCLE, "--check"]) == 0
    out = capsys.readouterr().out
    assert "immersion: verified" in out
    assert "g1 = (z5, z4, 0, 0, 0)" in out


def test_immerse_needs_immersion_block(capsys):
    assert polyaccess.main(["immerse", PLANAR]) == 2
    assert "no immersion block" in capsys.readouterr().err


def test_structured_output_is_deterministic(capsys):
    polyaccess.main(["index", PLANAR, "--format", "structured"])
    first = capsys.readouterr().out
    polyaccess.main(["index", PLANAR, "--format", "structured"])
    assert capsys.readouterr().out == first
    document = json.loads(first)
    assert document["schema"] == 1
    assert document["command"] == "index"
    report = document["reports"][0]
    assert report["index_kind"] == "exact r*"
    assert report["index_value"] == 2
    assert report["singular_generators"] == ["x1", "x2"]
    assert document["system"]["variables"] == ["x1", "x2"]


def test_parse_error_exit_status(tmp_path, capsys):
    path = tmp_path / "bad.sys"
    path.write_text("vars x1 x2\ninput g1: x2\n", encoding="utf-8")
    assert polyaccess.main(["index", str(path)]) == 2
    assert "line 2, column 13" in capsys.readouterr().err


def test_missing_file_exit_status(tmp_path, capsys):
    assert polyaccess.main(["index", str(tmp_path / "nope.sys")]) == 2


def test_strict_cap_exit_status(capsys):
    assert polyaccess.main(["index", PLANAR, "--max-depth", "1"]) == 0
    assert "status: cap reached" in capsys.readouterr().out
    assert polyaccess.main(["index", PLANAR, "--max-depth", "1", "--strict"]) == 3


def test_flags_override_file_options(tmp_path):
    path = tmp_path / "planar.sys"
    path.write_text(system_path("planar").read_text() + "options:\n  max-depth 3\n  seed 5\n")
    seen = {}

    def fake_run(command, system_file, **options):
        seen.update(depth=settings.MAX_DEPTH, seed=settings.SEED)
        return runner.RunResult(command, {})

    with mock.patch("runner.run", side_effect=fake_run) as mock_run:
        assert polyaccess.main(["index", str(path), "--seed", "9"]) == 0
        mock_run.assert_called_once()
    assert seen == {"depth": 3, "seed": 9}
    assert settings.SEED == 0


def test_runner_full_on_immersed_file(unicycle_file):
    result = runner.run("full", unicycle_file)
    assert [r.command for r in result.reports] == ["index", "singular", "bound", "strong"]
    assert result.reports[0].threshold == 3
    assert result.reports[0].certificates["sampling"]["mismatches"] == []
    assert result.immersion["check"]["ok"]
    assert result.immersion["pullback"]["empty"] is True


def test_module_execution_via_dash_m():
    """Ensure ``python -m polyaccess`` executes without error."""
    result = subprocess.run(
        [sys.executable, "-m", "polyaccess", "--help"],
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        cwd=Path(__file__).resolve().parents[2],
        text=True,
        check=True,
    )
    assert "usage:" in result.stdout.lower()
