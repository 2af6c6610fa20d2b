import io
import json
import subprocess
import sys

import pytest

from planarcycles.cli import RunConfig, build_parser, main, run
from planarcycles.constructions import gen_F
from planarcycles.graph import complete_graph, cycle_graph
from planarcycles.graph6 import edge_list_format, graph6_decode, graph6_encode


def invoke(argv, stdin=""):
    args = build_parser().parse_args(argv)
    fields = set(RunConfig.__dataclass_fields__)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in fields})
    out, err = io.StringIO(), io.StringIO()
    code = run(cfg, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_formula():
    code, out, _ = invoke(["formula", "9"])
    assert code == 0
    assert records(out) == [{"n": 9, "h0": 8, "h1": 4, "fi": 8}]
    code, _, err = invoke(["formula", "4"])
    assert code == 2 and "error" in err


def test_gen_then_count():
    code, out, _ = invoke(["gen", "9", "6"])
    assert code == 0 and graph6_decode(out) == gen_F(9, 6)[0]
    code, counted, _ = invoke(["count", "-k", "6"], out)
    rec = records(counted)[0]
    assert rec["line"] == 1 and rec["total"] == 8 and rec["per_vertex"] == [8, 8, 8, 4, 4, 4, 4, 4, 4]


def test_gen_formats_and_sidecar(tmp_path):
    side = tmp_path / "meta.json"
    code, out, _ = invoke(["gen", "12", "6", "--family", "0;;", "--format", "json", "--sidecar", str(side)])
    assert code == 0
    rec = records(out)[0]
    assert rec["m"] == 19
    meta = json.loads(side.read_text())
    assert meta["hubs"] == [0, 1, 2] and [len(c) for c in meta["classes"]] == [3, 3, 3]
    code, out, _ = invoke(["gen", "9", "6", "--prime", "--format", "edge-list"])
    assert out.splitlines()[0] == "9 15"
    code, a, _ = invoke(["gen", "20", "6", "--family", "random", "--seed", "4"])
    code, b, _ = invoke(["gen", "20", "6", "--family", "random", "--seed", "4"])
    assert a == b
    code, _, err = invoke(["gen", "20", "8", "--family", "all"])
    assert code == 2


def test_check_family_and_edge_list_input():
    text = edge_list_format(gen_F(9, 6)[0]) + edge_list_format(cycle_graph(9))
    code, out, _ = invoke(["check-family", "--input-format", "edge-list"], text)
    recs = records(out)
    assert code == 0
    assert [r["member"] for r in recs] == [True, False]
    assert recs[0]["hubs"] == [0, 1, 2]


def test_malformed_input_reports_line():
    stdin = graph6_encode(cycle_graph(6)) + "\n!!bad\n"
    code, out, err = invoke(["count"], stdin)
    assert code == 2
    assert len(records(out)) == 1
    assert err.startswith("line 2:")


def test_missing_file(tmp_path):
    code, _, err = invoke(["count", "-i", str(tmp_path / "nope.g6")])
    assert code == 2 and err


def test_k_out_of_range():
    code, _, err = invoke(["count", "-k", "13"], "EhEG\n")
    assert code == 2


def test_analyze():
    g, _ = gen_F(24, 6)
    code, out, _ = invoke(["analyze", "--probe-threshold", "0", "--tau", "7"], graph6_encode(g) + "\n")
    rec = records(out)[0]
    assert code == 0
    assert rec["induced_6_cycles"] == 343
    assert rec["hub_cycle_probe"]["witnesses"][0]["hubs"] == [0, 1, 2]
    assert rec["empty_k27"]


def test_search_internal_and_stream(tmp_path):
    code, out, _ = invoke(["search", "6"])
    rep = records(out)[0]
    assert code == 0 and rep["empirical_max"] == 1 and rep["equality"] and rep["complete"]
    path = tmp_path / "s.g6"
    path.write_text("\n".join(graph6_encode(g) for g in (gen_F(9, 6)[0], cycle_graph(9), complete_graph(9))) + "\n")
    code, out, _ = invoke(["search", "9", "-i", str(path), "-j", "2"])
    rep = records(out)[0]
    assert rep["empirical_max"] == 8 and rep["nonplanar_rejected"] == 1 and not rep["complete"]


def test_verify():
    stdin = "\n".join(graph6_encode(g) for g in (gen_F(9, 6)[0], cycle_graph(7))) + "\n"
    code, out, err = invoke(["verify"], stdin)
    assert code == 0 and err == ""
    assert [r["violations"] for r in records(out)] == [[], []]
    code, out, err = invoke(["verify"], graph6_encode(complete_graph(5)) + "\n")
    assert code == 2 and "not planar" in err


def test_main_entry_point(capsys):
    assert main(["formula", "10"]) == 0
    assert json.loads(capsys.readouterr().out)["h0"] == 12


def test_module_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "planarcycles", "gen", "6", "6"], capture_output=True, text=True, check=True
    )
    proc2 = subprocess.run(
        [sys.executable, "-m", "planarcycles", "count"], input=proc.stdout, capture_output=True, text=True
    )
    assert proc2.returncode == 0
    assert json.loads(proc2.stdout)["total"] == 1


def test_unknown_flag_exits():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["count", "--bogus"])
