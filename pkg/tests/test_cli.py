import io
import json
import re
import shlex
from pathlib import Path

import pytest

from raagcurves.cli import run
from raagcurves.datasets import load_graph
from raagcurves.graphs import Graph, named_graph
from raagcurves.maps import VertexMap

README = Path(__file__).resolve().parents[1] / "README.md"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


def readme_examples():
    blocks = re.findall(r"```console\n(.*?)```", README.read_text(encoding="utf-8"), re.S)
    examples = []
    for block in blocks:
        cmd, expected = None, []
        for line in block.splitlines():
            if line.startswith("$ "):
                if cmd:
                    examples.append((cmd, "\n".join(expected) + "\n"))
                cmd, expected = line[2:], []
            else:
                expected.append(line)
        if cmd:
            examples.append((cmd, "\n".join(expected) + "\n"))
    return examples


EXAMPLES = readme_examples()


def test_readme_has_examples():
    assert len(EXAMPLES) >= 15


@pytest.mark.parametrize("cmd,expected", EXAMPLES, ids=[c for c, _ in EXAMPLES])
def test_readme_example(cmd, expected, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    argv = shlex.split(cmd)
    assert argv[0] == "raagcurves"
    out = io.StringIO()
    status = run(argv[1:], out, out)
    assert out.getvalue() == expected
    assert status == (1 if expected.startswith("error[") else 0)


# -- exit codes and errors -----------------------------------------------------------


def test_spec_examples():
    assert cli("xi-two", "N{1,6}")[:2] == (0, "4\n")
    assert cli("reduce", "--graph", "path:4", "b a b^-1")[:2] == (0, "a\n")
    status, out, _ = cli("enumerate-c4-cases", "--target", "4")
    assert status == 0 and out.startswith("6 cases")


def test_graph_file_argument(tmp_path):
    p = tmp_path / "p4.json"
    p.write_text(json.dumps({"vertices": list("abcd"), "edges": [["a", "b"], ["b", "c"], ["c", "d"]]}))
    assert cli("reduce", "--graph", str(p), "b a b^-1")[:2] == (0, "a\n")


def test_usage_errors_exit_2():
    assert cli()[0] == 2
    assert cli("no-such-command")[0] == 2
    assert cli("reduce", "a")[0] == 2
    status, _, err = cli("find-induced", "path:3", "cycle:4", "--limit", "0")
    assert status == 2 and err.startswith("error[usage]")


def test_domain_errors_exit_1(tmp_path):
    status, _, err = cli("reduce", "--graph", "path:4", "z")
    assert status == 1 and err.startswith("error[input]:")
    status, _, err = cli("check-map", str(tmp_path / "missing.json"))
    assert status == 1 and err.startswith("error[io]:")
    bad = tmp_path / "bad.json"
    bad.write_text("{\n  \"vertices\": [\n")
    status, _, err = cli("reduce", "--graph", str(bad), "a")
    assert status == 1 and re.match(r"error\[graph-file\]: .*bad\.json:3:1", err)
    assert err.count("\n") == 1
    status, _, err = cli("pipeline", "p4", "complete:3", "p4")
    assert status == 1 and err.startswith("error[no-induced-embedding]")
    assert cli("find-induced", "gamma0", "gamma1")[0] == 1


def _write_map(tmp_path, f):
    path = tmp_path / "map.json"
    path.write_text(json.dumps(f.to_dict()))
    return str(path)


def test_map_commands(tmp_path):
    c6 = named_graph("cycle", 6)
    k3 = named_graph("complete", 3)
    f = VertexMap(c6, k3, {v: v % 3 for v in c6.vertices})
    path = _write_map(tmp_path, f)
    status, out, _ = cli("check-map", path, "--format", "json")
    data = json.loads(out)
    assert status == 0
    assert data["graph_morphism"]["holds"] and data["locally_surjective"]["holds"]
    assert not data["full"]["holds"] and data["full"]["counterexample"]["edge"] == [0, 1]
    _, text, _ = cli("check-map", path)
    assert text.splitlines()[1] == 'full                 false  {"edge": [0, 1], "pair": [0, 4]}'
    assert text.splitlines()[3] == "graph_morphism       true   -"
    status, _, err = cli("diagonal-hom", path)
    assert status == 1 and err.startswith("error[not-full]")

    ident = _write_map(tmp_path, VertexMap.identity(named_graph("cycle", 5)))
    status, out, _ = cli("verify-hom", ident, "--samples", "200", "--format", "json")
    assert status == 0 and json.loads(out)["ok"] and json.loads(out)["lipschitz_constant"] == 1
    status, out, _ = cli("diagonal-hom", ident)
    assert status == 0


def test_verify_hom_failure_exits_1(tmp_path):
    g0, g1 = load_graph("gamma0.json"), load_graph("gamma1.json")
    # q -> e f collapses an edge, so diagonal_hom refuses it before sampling
    f = VertexMap(g1, g0, {v: ("q" if v in "ef" else v) for v in g1.vertices})
    status, _, err = cli("verify-hom", _write_map(tmp_path, f), "--samples", "50")
    assert status == 1 and err.startswith("error[condition-star]")


def test_seed_is_reproducible(tmp_path):
    ident = _write_map(tmp_path, VertexMap.identity(named_graph("path", 4)))
    a = cli("verify-hom", ident, "--samples", "100", "--seed", "7", "--format", "json")[1]
    b = cli("verify-hom", ident, "--samples", "100", "--seed", "7", "--format", "json")[1]
    assert a == b and json.loads(a)["seed"] == 7


# -- json / text agreement -------------------------------------------------------------


def test_json_and_text_agree_on_values():
    _, text, _ = cli("xi-two", "N{1,0}", "N{5,0}")
    _, js, _ = cli("xi-two", "N{1,0}", "N{5,0}", "--format", "json")
    rows = json.loads(js)
    assert [f"{r['surface']}  {r['xi_two']}" for r in rows] == text.splitlines()

    _, text, _ = cli("reduce", "--graph", "path:4", "b a b^-1 c")
    _, js, _ = cli("reduce", "--graph", "path:4", "b a b^-1 c", "--format", "json")
    assert json.loads(js)["result"] == text.strip()

    _, text, _ = cli("enumerate-c4-cases")
    _, js, _ = cli("enumerate-c4-cases", "--format", "json")
    cases = json.loads(js)["cases"]
    assert text.startswith(f"{len(cases)} cases")
    for k, case in enumerate(cases, 1):
        assert f"({k}) F0 = " in text and f"alpha = {case['alpha']}" in text

    _, text, _ = cli("curve-graph", "N{3,3}")
    _, js, _ = cli("curve-graph", "N{3,3}", "--format", "json")
    g = json.loads(js)["graph"]
    assert text.splitlines()[0] == "vertices: " + " ".join(g["vertices"])
    assert text.splitlines()[1] == "edges: " + " ".join(f"{u}-{v}" for u, v in g["edges"])

    _, text, _ = cli("find-induced", "path:3", "cycle:4", "--limit", "all")
    _, js, _ = cli("find-induced", "path:3", "cycle:4", "--limit", "all", "--format", "json")
    data = json.loads(js)
    assert [" ".join(f"{k}->{v}" for k, v in e.items()) for e in data["embeddings"]] == text.splitlines()[1:]


def test_json_output_is_stable_keyed():
    _, js, _ = cli("pipeline", "p4", "path:4", "p4", "--format", "json")
    data = json.loads(js)
    assert js == json.dumps(data, indent=2, sort_keys=True) + "\n"
    assert data["report"]["deck_equivariant"] is True


def test_emit_dot(tmp_path):
    dot = tmp_path / "k5.dot"
    status, _, _ = cli("curve-graph", "k5", "--all", "--emit-dot", str(dot))
    assert status == 0
    text = dot.read_text()
    assert text.startswith("graph") and text.count("--") == 10


def test_data_dir_shadowing(tmp_path):
    g1 = load_graph("gamma1.json")
    (tmp_path / "gamma1.json").write_text(Graph(g1.vertices, g1.sorted_edges()[1:]).to_json())
    status, _, _ = cli("curve-graph", "N{1,6}", "--match", "gamma1", "--data-dir", str(tmp_path))
    assert status == 1
    assert cli("curve-graph", "N{1,6}", "--match", "gamma1")[0] == 0
