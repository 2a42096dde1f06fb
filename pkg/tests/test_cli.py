import json

import pytest

from raag.cli import main
from raag.graph import path_graph


@pytest.fixture()
def graph_file(tmp_path):
    f = tmp_path / "p3.json"
    f.write_text(json.dumps(path_graph(3).to_dict()))
    return str(f)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cliques(graph_file, capsys):
    code, out = run(capsys, "--graph", graph_file, "cliques")
    assert code == 0
    obj = json.loads(out)
    assert obj["counts"] == [1, 3, 2, 0]


def test_nf(graph_file, capsys):
    code, out = run(capsys, "--graph", graph_file, "nf", "b a b^-1 c")
    assert code == 0
    assert json.loads(out)["normal_form"] == "a c"


def test_nf_identity(graph_file, capsys):
    code, out = run(capsys, "--graph", graph_file, "nf", "a b a^-1 b^-1")
    assert code == 0
    assert json.loads(out)["normal_form"] == "1"


def test_mul(graph_file, capsys):
    code, out = run(capsys, "--graph", graph_file, "mul", "a c", "c^-1 a")
    assert code == 0
    assert json.loads(out)["product"] == "a^2"


def test_growth_with_oracle(graph_file, capsys):
    code, out = run(capsys, "--graph", graph_file, "growth",
                    "--upto", "4", "--oracle", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["series"][:4] == ["1", "6", "22", "70"]
    assert obj["oracle"] == obj["series"][: len(obj["oracle"])]


def test_ranks(graph_file, capsys):
    code, out = run(capsys, "--graph", graph_file, "ranks",
                    "--kind", "lcs", "--upto", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["values"] == {"1": 3, "2": 1, "3": 2, "4": 3}


def test_koszul(graph_file, capsys):
    code, out = run(capsys, "--graph", graph_file, "koszul", "--upto", "4")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_verify_all(graph_file, capsys):
    code, out = run(capsys, "--graph", graph_file, "verify-all")
    assert code == 0
    obj = json.loads(out)
    assert all(c["ok"] for c in obj["checks"])


def test_parse_error_exit_code(graph_file, capsys):
    code = main(["--graph", graph_file, "nf", "a^^2"])
    assert code == 2


def test_unknown_generator_exit_code(graph_file, capsys):
    code = main(["--graph", graph_file, "nf", "z"])
    assert code == 2


def test_missing_graph_file(tmp_path, capsys):
    code = main(["--graph", str(tmp_path / "nope.json"), "cliques"])
    assert code == 2


def test_resource_limit_exit_code(graph_file, capsys, monkeypatch):
    monkeypatch.setenv("RAAG_MAX_STATES", "10")
    code = main(["--graph", graph_file, "growth", "--upto", "8",
                 "--oracle", "6"])
    assert code == 3


def test_deterministic_output(graph_file, capsys):
    _, out1 = run(capsys, "--graph", graph_file, "verify-all")
    _, out2 = run(capsys, "--graph", graph_file, "verify-all")
    assert out1 == out2
