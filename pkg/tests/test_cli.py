import json

from click.testing import CliRunner

from slowcolor.cli import main
from slowcolor.solver import CACHE_HEADER


def invoke(*args, **kw):
    return CliRunner().invoke(main, list(args), **kw)


def test_solve_named_values():
    result = invoke("solve", "K3,3")
    assert result.exit_code == 0
    assert "value: 10" in result.output
    result = invoke("solve", "P7")
    assert "value: 10" in result.output
    result = invoke("solve", "n=1;")
    assert "value: 1" in result.output


def test_solve_parse_error_exit_2():
    result = invoke("solve", "P?")
    assert result.exit_code == 2
    assert "cannot parse" in result.output


def test_solve_limit_exit_3():
    result = invoke("solve", "E13")
    assert result.exit_code == 3
    result = invoke("solve", "E13", "--limit", "13")
    assert result.exit_code == 0 and "value: 13" in result.output


def test_solve_flags_and_formats():
    result = invoke("solve", "K2,2", "--bounds", "--transcript")
    assert result.exit_code == 0
    assert "value: 6" in result.output
    assert "chromatic_sum" in result.output  # bound header
    assert "total score 6" in result.output
    result = invoke("solve", "K2,2", "--format", "jsonl")
    line = result.output.strip().splitlines()[0]
    payload = json.loads(line)
    assert payload["schema"].startswith("slowcolor/solve/v")
    assert payload["value"] == 6
    result = invoke("solve", "K2,2", "--format", "csv")
    assert result.exit_code == 0 and "value" in result.output


def test_threads_do_not_change_output():
    base = invoke("solve", "K3,3")
    threaded = invoke("solve", "K3,3", "--threads", "4")
    assert threaded.output == base.output


def test_cache_roundtrip_via_env(tmp_path):
    path = tmp_path / "values.cache"
    result = CliRunner().invoke(main, ["solve", "K3,2"], env={"SLOWCOLOR_CACHE": str(path)})
    assert result.exit_code == 0
    assert path.exists()
    text = path.read_text()
    assert text.splitlines()[0] == CACHE_HEADER
    result = invoke("cache", "info", str(path))
    assert result.exit_code == 0 and "entries" in result.output
    result = invoke("cache", "check", str(path), "--sample", "5")
    assert result.exit_code == 0 and "all consistent" in result.output


def test_cache_info_bad_file(tmp_path):
    path = tmp_path / "bad.cache"
    path.write_text("nonsense\n")
    result = invoke("cache", "info", str(path))
    assert result.exit_code == 2


def test_verify_known_suite():
    result = invoke("verify", "closed-forms", "--n-max", "5")
    assert result.exit_code == 0
    assert "0 failed" in result.output


def test_verify_unknown_suite_exit_2():
    result = invoke("verify", "no-such")
    assert result.exit_code == 2


def test_verify_experiment_with_outputs(tmp_path):
    csv_path = tmp_path / "fit.csv"
    png_path = tmp_path / "fit.png"
    result = invoke(
        "verify", "krr-fit", "--r-max", "12",
        "--out", str(csv_path), "--plot", str(png_path),
    )
    assert result.exit_code == 0
    assert csv_path.exists() and csv_path.read_text().startswith("r,value,fit,diff")
    assert png_path.exists() and png_path.stat().st_size > 0


def test_table_bipartite():
    result = invoke("table", "bipartite", "-r", "10", "-s", "10")
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "r,s,value"
    assert len(lines) == 1 + 121
    assert "3,3,10" in lines
    assert "7,0,7" in lines


def test_table_join_with_files(tmp_path):
    csv_path = tmp_path / "join.csv"
    png_path = tmp_path / "join.png"
    result = invoke("table", "join", "-r", "6", "-s", "4",
                    "--out", str(csv_path), "--plot", str(png_path))
    assert result.exit_code == 0
    assert csv_path.exists() and png_path.exists()
    rows = csv_path.read_text().strip().splitlines()
    assert rows[0] == "r,s,value"
    assert f"5,2,12" in rows


def test_play_as_painter_optimal_lister():
    # On K2 the engine marks both vertices; color one, then the other.
    result = invoke("play", "n=2;0-1", "--role", "painter", input="0\n1\n")
    assert result.exit_code == 0
    assert "total score 3" in result.output
    assert "optimal score for this graph: 3" in result.output


def test_play_rejects_illegal_then_accepts():
    # coloring both endpoints of the K2 edge is rejected, then fixed
    result = invoke("play", "n=2;0-1", "--role", "painter", input="0 1\n0\n1\n")
    assert result.exit_code == 0
    assert "must be independent" in result.output


def test_play_as_lister_mark_all():
    result = invoke("play", "E3", "--role", "lister", "--opponent", "greedy",
                    input="0 1 2\n")
    assert result.exit_code == 0
    assert "total score 3" in result.output


def test_play_eof_aborts_130():
    result = invoke("play", "n=2;0-1", "--role", "painter", input="")
    assert result.exit_code == 130
