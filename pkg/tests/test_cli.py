import io
import json
import os
import subprocess
import sys

import pytest

from bettisplit.cli import RunConfig, parse_complex, parse_graph, run
from bettisplit.errors import InputError

EXAMPLE = "# six vertices\nx1 x2\nx2 x3\nx2 x4\nx4 x5\nx4 x6\n"
C5 = "a b\nb c\nc d\nd e\ne a\n"
K4 = "a b\na c\na d\nb c\nb d\nc d\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in {"example.edges": EXAMPLE, "c5.edges": C5, "k4.edges": K4,
                       "two.facets": "1 2 3\n3 4 5\n", "tri.facets": "a b\nb c\nc a\n",
                       "bad.edges": "a b c\n"}.items():
        p = tmp_path / name
        p.write_text(text)
        out[name] = str(p)
    return out


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_betti_example(files):
    code, text = call("betti", "--graph", files["example.edges"])
    assert code == 0
    assert text.splitlines() == ["       0 1 2", "total: 5 6 2", "    2: 5 6 2"]


def test_betti_json(files):
    code, text = call("betti", "--graph", files["example.edges"], "--format", "json")
    data = json.loads(text)
    assert data["schema"] == 1 and (data["reg"], data["pd"]) == (2, 2)
    assert {(e["i"], e["j"]): e["value"] for e in data["betti"]} == {(0, 2): 5, (1, 3): 6, (2, 4): 2}


def test_betti_and_oracle_agree_on_forests(files):
    a = call("betti", "--graph", files["example.edges"], "--format", "json")
    b = call("oracle", "--graph", files["example.edges"], "--format", "json", "--char", "2")
    assert a == b


def test_betti_non_forest(files, capsys):
    code, _ = call("betti", "--graph", files["c5.edges"])
    err = capsys.readouterr().err.strip()
    assert code == 2
    assert err.startswith("bettisplit: precondition: graph is not a forest; cycle")
    assert "oracle" in err and "\n" not in err


def test_simplicial_non_forest(files, capsys):
    assert call("betti", "--complex", files["tri.facets"])[0] == 2


def test_io_and_parse_errors(files, capsys):
    assert call("betti", "--graph", "/nonexistent/x.edges")[0] == 1
    assert "bettisplit: io:" in capsys.readouterr().err
    assert call("betti", "--graph", files["bad.edges"])[0] == 1
    assert "line 1" in capsys.readouterr().err
    assert call("oracle", "--graph", files["c5.edges"], "--char", "4")[0] == 1


def test_n2p_and_froberg(files):
    assert call("n2p", "--graph", files["c5.edges"]) == (0, "p = 2\n")
    assert call("n2p", "--graph", files["k4.edges"]) == (0, "linear resolution\n")
    assert call("froberg", "--graph", files["k4.edges"]) == (0, "linear resolution: yes (complement chordal)\n")
    code, text = call("froberg", "--graph", files["c5.edges"])
    assert text.startswith("linear resolution: no")


def test_reg_pd(files):
    assert call("reg", "--graph", files["example.edges"]) == (0, "reg = 2\n")
    assert call("pd", "--graph", files["example.edges"]) == (0, "pd = 2\n")
    assert call("reg", "--graph", files["c5.edges"]) == (0, "reg = 3\n")
    assert call("pd", "--complex", files["two.facets"]) == (0, "pd = 1\n")


def test_check_split(files):
    code, text = call("check-split", "--graph", files["example.edges"], "--edge", "x2", "x4")
    assert code == 0
    assert "criterion fails" in text and "not verified" in text
    assert "witness: x1*x2*x4, x2*x4*x5" in text
    code, text = call("check-split", "--graph", files["c5.edges"], "--vertex", "a", "--format", "json")
    assert json.loads(text)["verified"] is True
    code, text = call("check-split", "--complex", files["two.facets"], "--facet", "1,2,3")
    assert "verified (exhaustive)" in text


def test_strands_and_matching(files):
    code, text = call("linear-strand", "--graph", files["c5.edges"], "--imax", "2")
    assert text.splitlines() == ["beta_0,2 = 5", "beta_1,3 = 5", "beta_2,4 = 0"]
    assert call("linear-strand", "--graph", files["k4.edges"], "--imax", "0")[1] == "beta_0,2 = 6\n"
    code, text = call("pure-linear-strand", "--complex", files["two.facets"], "--imax", "1")
    assert text.splitlines() == ["beta_0,3 = 2", "beta_1,4 = 0"]
    assert call("induced-matching", "--graph", files["example.edges"]) == (0, "1\n")


def test_wrong_input_kind(files):
    assert call("n2p", "--complex", files["two.facets"])[0] == 1


def test_vertex_cap_is_precondition(files, capsys):
    assert call("oracle", "--graph", files["c5.edges"], "--vertex-cap", "3")[0] == 2
    assert "resource" in capsys.readouterr().err


def test_deterministic_across_thread_counts(files):
    cmd = [sys.executable, "-m", "bettisplit.cli", "oracle", "--graph", files["c5.edges"]]
    outs = set()
    for threads in ("1", "3"):
        env = dict(os.environ, BETTISPLIT_THREADS=threads)
        outs.add(subprocess.run(cmd, env=env, capture_output=True, check=True).stdout)
    assert len(outs) == 1


def test_parsers():
    G = parse_graph("isolated: z\na b # trailing comment\n\nb c\n")
    assert G.vertices == ("z", "a", "b", "c") and G.num_edges == 2
    with pytest.raises(InputError):
        parse_graph("a a\n")
    D = parse_complex("# facets\na b c\nc d\n")
    assert len(D.facets) == 2


def test_run_config_validation():
    with pytest.raises(InputError):
        RunConfig(command="betti", path="x", kind="graph", vertex_cap=0)
    with pytest.raises(InputError):
        RunConfig(command="frobnicate", path="x", kind="graph")
