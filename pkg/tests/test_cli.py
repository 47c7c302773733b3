import io
import json

import pytest

from edgechoose.cli import run
from edgechoose.colors import assignment_to_json, make_uniform_assignment
from edgechoose.graph import encode_graph6, generate_gstar, generate_petersen, parse_graph6


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out.strip()
    return code, (json.loads(out) if out.startswith("{") else out)


def test_gen(capsys):
    assert run(["gen", "flower:5"]) == 0
    assert parse_graph6(capsys.readouterr().out).n == 20
    assert run(["gen", "flower:4"]) == 2


def test_fuzz_petersen(capsys, files):
    path = files("p.g6", encode_graph6(generate_petersen()) + "\n")
    code, rep = run_json(capsys, ["fuzz", "--in", path, "--trials", "100", "--seed", "7"])
    assert code == 0
    assert rep["counts"] == {"trials": 100, "successes": 100, "failures": 0, "contract_gaps": 0}
    code2, rep2 = run_json(capsys, ["fuzz", "--in", path, "--trials", "100", "--seed", "7"])
    rep.pop("wall_time"), rep2.pop("wall_time")
    assert rep == rep2


def test_fuzz_seed_from_env(capsys, files, monkeypatch):
    path = files("p.g6", encode_graph6(generate_petersen()))
    monkeypatch.setenv("CHOOSE_SEED", "13")
    code, rep = run_json(capsys, ["fuzz", "--in", path, "--trials", "3"])
    assert code == 0 and rep["seed"] == 13


def test_oracle_gadget(capsys, files):
    assert run(["gen", "two_k4"]) == 0
    path = files("g.g6", capsys.readouterr().out)
    code, out = run_json(capsys, ["oracle", "--in", path, "--r", "6", "--s", "2"])
    assert code == 1 and out["verdict"] == "no"


def test_decompose_gstar(capsys, files):
    path = files("g.g6", encode_graph6(generate_gstar()))
    code, out = run_json(capsys, ["decompose", "--in", path, "--method", "exhaustive"])
    assert code == 1 and out["verdict"] == "none"


def test_decompose_petersen(capsys, files):
    path = files("p.g6", encode_graph6(generate_petersen()))
    code, out = run_json(capsys, ["decompose", "--in", path])
    assert code == 0 and len(out["med"]["G1"]) == 2


def test_color_then_verify(capsys, files, tmp_path):
    g = generate_petersen()
    gpath = files("p.g6", encode_graph6(g))
    lists = make_uniform_assignment(g, 7, 14, seed=3)
    lpath = files("l.json", json.dumps(assignment_to_json(g, lists)))
    trace = tmp_path / "trace.json"
    code, out = run_json(capsys, ["color", "--in", gpath, "--lists", lpath, "--trace", str(trace)])
    assert code == 0 and out["method"] == "med"
    assert json.loads(trace.read_text())
    cpath = files("c.json", json.dumps(out["coloring"]))
    assert run(["verify", "--in", gpath, "--lists", lpath, "--coloring", cpath]) == 0
    assert capsys.readouterr().out.strip() == "ok"
    bad = dict(out["coloring"], chosen=[[0, 1]] * g.m)
    bpath = files("b.json", json.dumps(bad))
    assert run(["verify", "--in", gpath, "--lists", lpath, "--coloring", bpath]) == 1


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(encode_graph6(generate_gstar())))
    code, rep = run_json(capsys, ["fuzz", "--in", "-", "--trials", "5"])
    assert code == 0 and rep["counts"]["successes"] == 5


def test_usage_errors(capsys, files):
    assert run([]) == 2
    assert run(["nope"]) == 2
    assert run(["fuzz", "--in", "/no/such/file"]) == 2
    assert run(["fuzz", "--in", files("x.g6", "not graph6!")]) == 2
    capsys.readouterr()


def test_unsupported_color(capsys, files):
    gpath = files("p.g6", encode_graph6(generate_petersen()))
    g = generate_petersen()
    lpath = files("l.json", json.dumps(assignment_to_json(g, [frozenset(range(7))] * g.m)))
    code, out = run_json(capsys, ["color", "--in", gpath, "--lists", lpath, "--method", "3ec"])
    assert code == 1 and out["outcome"] == "unsupported"


def test_contract_gap_exit_code(capsys, files, monkeypatch, tmp_path):
    from edgechoose import cli
    from edgechoose.errors import ContractGap

    def broken(*args, **kwargs):
        raise ContractGap("forced", [{"step": "probe"}])

    monkeypatch.setattr(cli, "choose_72", broken)
    path = files("p.g6", encode_graph6(generate_petersen()))
    trace = tmp_path / "gaps.json"
    code, rep = run_json(capsys, ["fuzz", "--in", path, "--trials", "2", "--trace", str(trace)])
    assert code == 3 and rep["counts"]["contract_gaps"] == 2
    assert json.loads(trace.read_text())[0]["trace"] == [{"step": "probe"}]
