import io
import json

import pytest

from conftest import DBASIS_F, GRAPH_F, PAIR_F, PAIR_S
from straight import cli
from straight.cli import main
from straight.straightening import METHODS, Straightening
from straight.tableau import format_filling

DBASIS = ["--shape", "4,3,2", "--content", "2,2,3,2"]
GRAPH = ["--shape", "3,3,2", "--content", "1,2,1,2,2"]


@pytest.fixture
def write(tmp_path):
    def _write(name, filling):
        path = tmp_path / name
        path.write_text(format_filling(filling) + "\n")
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_no_command(capsys):
    code, out, _ = run(capsys)
    assert code == 0
    assert "usage" in out


def test_kostka(capsys):
    assert run(capsys, "kostka", *DBASIS)[:2] == (0, "6\n")
    assert run(capsys, "kostka", "--shape", "1,1", "--content", "2")[:2] == (0, "0\n")


def test_ssyt_json(capsys):
    code, out, _ = run(capsys, "ssyt", *DBASIS, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["kostka"] == 6
    assert doc["tableaux"][4] == [[1, 1, 2, 3], [2, 3, 3], [4, 4]]


def test_ssyt_text(capsys):
    code, out, _ = run(capsys, "ssyt", *DBASIS)
    assert code == 0
    assert out.splitlines()[0] == "S1"
    assert out.count("S") == 6


def test_rcoeff(capsys, write):
    f, s = write("f.txt", PAIR_F), write("s.txt", PAIR_S)
    assert run(capsys, "rcoeff", f, s)[:2] == (0, "1\n")
    assert run(capsys, "rcoeff", s, f)[:2] == (0, "0\n")


def test_matrix(capsys):
    code, out, _ = run(capsys, "matrix", *DBASIS)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[5].split() == ["0", "0", "0", "2", "-1", "1"]


def test_straighten(capsys, write):
    path = write("f.txt", DBASIS_F)
    code, out, _ = run(capsys, "straighten", path)
    assert code == 0
    assert out == "+1·S5 −1·S4\n"


@pytest.mark.parametrize("method", METHODS)
def test_straighten_every_method(capsys, write, method):
    path = write("f.txt", DBASIS_F)
    code, out, _ = run(capsys, "straighten", path, "--method", method, "--verify")
    assert code == 0
    assert out == "+1·S5 −1·S4\n"


def test_straighten_json(capsys, write):
    code, out, _ = run(capsys, "straighten", write("f.txt", DBASIS_F), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["format"] == 1
    assert [(t["index"], t["coeff"]) for t in doc["terms"]] == [(4, -1), (5, 1)]


def test_straighten_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("1 2\n1\n"))
    code, out, _ = run(capsys, "straighten", "-")
    assert code == 0
    assert out == "0\n"


def test_invalid_input(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 x\n")
    code, _, err = run(capsys, "straighten", str(bad))
    assert code == 2
    assert err.startswith("error:")
    assert run(capsys, "straighten", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "kostka", "--shape", "1,2", "--content", "1,2")[0] == 2


def test_oracle_cap(capsys, write):
    path = write("f.txt", DBASIS_F)
    code, _, err = run(capsys, "straighten", path, "--method", "oracle", "--oracle-cap", "10")
    assert code == 3
    assert "cap" in err


def test_disagreement(capsys, write, monkeypatch):
    def wrong(filling, basis, cap):
        return Straightening(filling, basis, (0,) * len(basis), "oracle")

    monkeypatch.setattr(cli, "straighten_oracle", wrong)
    code, _, err = run(capsys, "straighten", write("f.txt", DBASIS_F), "--verify")
    assert code == 4
    assert "closed" in err


def test_graph_text(capsys):
    code, out, _ = run(capsys, "graph", *GRAPH)
    assert code == 0
    assert out.splitlines()[0].startswith("S6 -> S5 ")
    assert len(out.splitlines()) == 7


def test_graph_dot(capsys, write):
    code, out, _ = run(capsys, "graph", *GRAPH, "--dot", "--filling", write("f.txt", GRAPH_F))
    assert code == 0
    assert "digraph" in out
    assert "lightblue" in out


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", *GRAPH, "--json")
    assert code == 0
    assert len(json.loads(out)["edges"]) == 7


def test_dbasis(capsys):
    code, out, _ = run(capsys, "dbasis", *DBASIS)
    assert code == 0
    assert "D(S5) = +1·S5 +1·S4 −1·S2 −1·S1" in out.splitlines()


def test_depth_json(capsys):
    code, out, _ = run(capsys, "depth", *DBASIS, "--json")
    assert code == 0
    assert json.loads(out)["depths"] == [0, 0, 1, 1, 2, 3]


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--shape", "2,2", "--content", "1,1,1,1",
                       "--trials", "3", "--seed", "5", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["trials"] == 3
    assert doc["agreements"] == 3
    assert doc["kostka"] == 2


def test_bench_no_trials(capsys):
    code, out, _ = run(capsys, "bench", *DBASIS, "--trials", "0")
    assert code == 0
    assert "agreement: 0/0" in out


def test_undecodable_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"1 2\n\xff\xfe\n")
    code, _, err = run(capsys, "straighten", str(bad))
    assert code == 2
    assert "UTF-8" in err


def test_undecodable_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"\xff\xfe\n"), encoding="utf-8"))
    code, _, err = run(capsys, "straighten", "-")
    assert code == 2
    assert "stdin" in err


def test_graph_json_with_filling(capsys, write):
    code, out, _ = run(capsys, "graph", *GRAPH, "--json", "--filling", write("f.txt", GRAPH_F))
    assert code == 0
    doc = json.loads(out)
    assert doc["active"] == [1, 2, 3, 5]
    assert len(doc["edges"]) == 7


def test_graph_text_with_filling(capsys, write):
    code, out, _ = run(capsys, "graph", *GRAPH, "--filling", write("f.txt", GRAPH_F))
    assert code == 0
    assert out.splitlines()[-1] == "V_F: S1 S2 S3 S5"


def test_bench_csv(capsys, monkeypatch, tmp_path):
    exported = []
    monkeypatch.setattr(cli, "export_to_csv", exported.append)
    target = tmp_path / "runs.csv"
    code, _, _ = run(capsys, "bench", "--shape", "2,2", "--content", "1,1,1,1",
                     "--trials", "1", "--csv", str(target))
    assert code == 0
    assert exported == [target]
