import io
import json
import subprocess
import sys

import pytest
from conftest import DATA

from gkt.cli import main


def run(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def plain_fields(text):
    fields = {}
    for line in text.splitlines():
        key, _, val = line.partition(": ")
        fields[key] = val
    return fields


MP = DATA / "matching_pennies.game"
NESTED = DATA / "nested_pennies.game"


def test_solve():
    code, out, _ = run("solve", MP)
    assert code == 0
    assert out == "value: 0\nrow_strategy: 1/2 1/2\ncol_strategy: 1/2 1/2\n"


def test_check_nested():
    code, out, _ = run("check", NESTED, DATA / "nested_pennies.red")
    assert code == 0
    f = plain_fields(out)
    assert f["original_value"] == "1/2"
    assert f["reduced_value"] == "0"
    assert f["value_preserved"] == "no"
    assert f["all_optima_restorable"] == "yes"


def test_check_split_rows_exits_with_verdict_failure():
    code, out, _ = run("check", MP, DATA / "split_rows.red")
    assert code == 1
    assert plain_fields(out)["witness"] == "0 1"


def test_reduce_emits_game_file(tmp_path):
    code, out, _ = run("reduce", NESTED, DATA / "nested_pennies.red")
    assert (code, out) == (0, "2 2\n1 -1\n-1 1\n")
    target = tmp_path / "r.game"
    code, _, _ = run("reduce", NESTED, DATA / "nested_pennies.red", "--out", target)
    assert code == 0 and target.read_text() == "2 2\n1 -1\n-1 1\n"


def test_lift_and_derive():
    assert run("lift", DATA / "nested_pennies.red", "--strategy", "1/2 1/2")[1] == "lifted: 1/3 1/6 1/3 1/6\n"
    code, out, _ = run("derive", NESTED, "--partition", "{1,2}{3,4}")
    assert code == 0
    assert plain_fields(out)["dist"] == "2/3 1/3 | 2/3 1/3"
    assert run("derive", NESTED, "--partition", "{1,2}{3,4}", "--vertex", "2")[0] == 2


def test_verify_commands():
    code, out, _ = run("verify-thm22", MP, "--subset", "{1,2}", "--dist", "1 0")
    assert code == 0
    f = plain_fields(out)
    assert (f["branch"], f["value_preserved"], f["conditional_feasible"]) == ("1", "no", "no")
    code, out, _ = run("verify-thm22", DATA / "dominated.game", "--subset", "{3}", "--dist", "1")
    assert code == 0 and plain_fields(out)["branch"] == "2"
    code, out, _ = run("verify-thm24", MP, DATA / "split_rows.red")
    assert code == 0
    assert plain_fields(out)["hypothesis_met"] == "no"
    assert plain_fields(out)["profile_derivable"] == "yes"


def test_search_and_vertices():
    code, out, _ = run("search", MP)
    assert code == 0 and "rows {1,2} dist 1/2 1/2 reduced 1x2" in out
    code, out, _ = run("vertices", DATA / "nested_pennies.game", "--player", "2")
    assert plain_fields(out)["vertex 1"] == "1/3 1/6 1/3 1/6"


def test_scan_seed_from_environment(monkeypatch):
    monkeypatch.setenv("GKT_SEED", "7")
    code, out, _ = run("scan-2x2", "--trials", "3")
    assert code == 0 and plain_fields(out)["seed"] == "7"
    assert plain_fields(run("scan-2x2", "--trials", "3", "--seed", "8")[1])["seed"] == "8"


@pytest.mark.parametrize(
    "argv",
    [
        ("solve", DATA / "bad.game"),
        ("solve", DATA / "missing.game"),
        ("check", MP, DATA / "nested_pennies.red"),
        ("lift", DATA / "nested_pennies.red", "--strategy", "1/2 1/3"),
        ("verify-thm22", MP, "--subset", "{3}", "--dist", "1"),
        ("vertices", MP, "--guard", "1"),
        ("solve",),
    ],
)
def test_input_errors_exit_2(argv, capsys):
    try:
        code, _, err = run(*argv)
    except SystemExit as exc:  # argparse usage errors
        code, err = exc.code, capsys.readouterr().err
    assert code == 2
    assert err


def test_parse_error_reports_position():
    _, _, err = run("solve", DATA / "bad.game")
    assert "line 3, column 4" in err


def test_guard_error_names_guard():
    _, _, err = run("vertices", MP, "--guard", "1")
    assert "vertex_enumeration_strategies" in err and "limit 1" in err


COMMANDS = [
    ("solve", MP),
    ("vertices", NESTED, "--player", "1"),
    ("reduce", NESTED, DATA / "nested_pennies.red"),
    ("lift", DATA / "nested_pennies.red", "--strategy", "1/2 1/2"),
    ("derive", NESTED, "--partition", "{1,2}{3,4}"),
    ("check", NESTED, DATA / "nested_pennies.red"),
    ("check", MP, DATA / "split_rows.red"),
    ("verify-thm22", MP, "--subset", "{1,2}", "--dist", "1/2 1/2"),
    ("verify-thm24", NESTED, DATA / "nested_pennies.red"),
    ("search", DATA / "dominated.game", "--max-blocks", "2"),
    ("scan-2x2", "--trials", "5", "--seed", "3"),
]


def _flatten(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return " ".join(_flatten(v) for v in value)
    if value is None:
        return "none"
    return str(value)


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: a[0] if isinstance(a, tuple) else None)
def test_json_matches_plain(argv):
    code_p, plain, _ = run(*argv)
    code_j, js, _ = run("--json", *argv)
    assert code_p == code_j
    data = json.loads(js)
    fields = plain_fields(plain)
    for key, val in data.items():
        if key in fields:
            assert fields[key] == _flatten(val), key


def test_approx_is_marked():
    code, out, _ = run("solve", "--approx", NESTED)
    assert out.splitlines()[0] == "value: 1/2  [approx ~0.500000]"
    data = json.loads(run("--json", "--approx", "solve", NESTED)[1])
    assert data["value"] == "1/2" and data["value_approx"] == "~0.500000"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gkt", "solve", str(MP)], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("value: 0\n")


def test_search_results_replay_in_fresh_process(tmp_path):
    from gkt.formats import read_game, render_spec
    from gkt.lab import search_desirable

    g = read_game(DATA / "dominated.game")
    for k, (spec, rep) in enumerate(search_desirable(g)):
        path = tmp_path / f"s{k}.red"
        path.write_text(render_spec(spec))
        proc = subprocess.run(
            [sys.executable, "-m", "gkt", "--json", "check", str(DATA / "dominated.game"), str(path)],
            capture_output=True, text=True,
        )
        data = json.loads(proc.stdout)
        assert data["value_preserved"] is True
        assert data["reduced_value"] == str(rep.reduced_value)
        assert data["all_optima_restorable"] == rep.all_optima_restorable
