import json
import subprocess
import sys

import pytest

from gsacds.cli import EXIT_CAP, EXIT_CONFIG, EXIT_INFEASIBLE, EXIT_PARSE, EXIT_USAGE, run_cli


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "p4": "4 3\n0 1 1\n1 2 2\n2 3 3\n",
        "star": "5 4\n0 1 1\n0 2 1\n0 3 1\n0 4 1\n",
        "k3": "3 3\n0 1 1\n1 2 1\n0 2 1\n",
        "disc": "4 2\n0 1 1\n2 3 1\n",
    }.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def jl(out):
    return [json.loads(line) for line in out.splitlines()]


def test_solve_star(files):
    status, out = run_cli(["solve", files["star"], "--format", "json-lines", "--max-iters", "200"])
    rec = jl(out)[0]
    assert status == 0 and rec["size"] == 1 and rec["dominators"] == [0]


def test_solve_p4(files):
    status, out = run_cli(["solve", files["p4"], "--format", "json-lines"])
    rec = jl(out)[0]
    assert status == 0 and rec["size"] == 2 and rec["f"] == 0.75 and rec["f_w"] == 6.0


@pytest.mark.parametrize("fmt", ["csv", "json-lines"])
def test_solve_is_byte_identical(files, fmt):
    args = ["solve", files["p4"], "--format", fmt, "--seed", "17", "--max-iters", "300"]
    assert run_cli(args) == run_cli(args)


def test_text_mode_reports_wall_time(files):
    _, out = run_cli(["solve", files["p4"], "--max-iters", "10"])
    assert "wall_time" in out and "dominators" in out
    _, out = run_cli(["solve", files["p4"], "--max-iters", "10", "--format", "json-lines", "--timing"])
    assert "wall_time" in jl(out)[0]


def test_exact(files):
    expected = {"star": ([0], None), "p4": ([1, 2], 0.75), "k3": ([0], None)}
    for name, (doms, f) in expected.items():
        status, out = run_cli(["exact", files[name], "--format", "json-lines"])
        rec = jl(out)[0]
        assert status == 0 and rec["exact"] is True and rec["dominators"] == doms
        if f is not None:
            assert rec["f"] == f


def test_exact_cap(files):
    status, _ = run_cli(["exact", files["p4"], "--cap", "3"])
    assert status == EXIT_CAP


def test_verify(files):
    status, out = run_cli(["verify", files["p4"], "1,2", "--format", "json-lines"])
    rec = jl(out)[0]
    assert status == 0 and rec["feasible"] and rec["f_w"] == 6.0

    status, out = run_cli(["verify", files["p4"], "0,3", "--format", "json-lines"])
    rec = jl(out)[0]
    assert status == EXIT_INFEASIBLE and rec["dominating"] and not rec["connected"]
    assert "disconnected" in rec["reason"]

    status, out = run_cli(["verify", files["p4"], "1", "--format", "json-lines"])
    rec = jl(out)[0]
    assert status == EXIT_INFEASIBLE and not rec["dominating"] and "3" in rec["reason"]


@pytest.mark.parametrize("sol", ["1,x", "1,9", "-1"])
def test_verify_malformed(files, sol):
    status, _ = run_cli(["verify", files["p4"], sol])
    assert status == EXIT_USAGE


def test_solve_output_round_trips_through_verify(files, tmp_path):
    gen = tmp_path / "g.txt"
    assert run_cli(["generate", "--n", "18", "--m", "40", "--seed", "2", "-o", str(gen)])[0] == 0
    for cmd in (["solve", str(gen), "--max-iters", "300"], ["exact", str(gen)]):
        _, out = run_cli([*cmd, "--format", "json-lines"])
        rec = jl(out)[0]
        status, vout = run_cli(["verify", str(gen), ",".join(map(str, rec["dominators"])), "--format", "json-lines"])
        v = jl(vout)[0]
        assert status == 0 and v["f"] == rec["f"] and v["f_w"] == rec["f_w"]


def test_parse_errors(files, tmp_path):
    assert run_cli(["solve", files["disc"]])[0] == EXIT_PARSE
    assert run_cli(["solve", str(tmp_path / "missing.txt")])[0] == EXIT_PARSE


def test_bad_flags(files):
    assert run_cli(["solve", files["p4"], "--gamma", "1.5"])[0] == EXIT_USAGE
    assert run_cli(["solve", files["p4"], "--alpha", "0.9"])[0] == EXIT_USAGE
    assert run_cli(["solve", files["p4"], "--format", "xml"])[0] == EXIT_USAGE
    assert run_cli(["generate", "--n", "20", "--m", "224"])[0] == EXIT_USAGE


def test_generate_is_deterministic(tmp_path):
    args = ["generate", "--n", "30", "--m", "100", "--seed", "9"]
    a, b = run_cli(args), run_cli(args)
    assert a == b and a[0] == 0 and a[1].startswith("# n=30")


def test_trace_file(files, tmp_path):
    trace = tmp_path / "trace.csv"
    run_cli(["solve", files["p4"], "--max-iters", "12", "--trace", str(trace)])
    lines = trace.read_text().splitlines()
    assert lines[0] == "iteration,temperature,current_f,accepted,best_f"
    temps = [float(line.split(",")[1]) for line in lines[1:]]
    assert temps == [100.0] * 3 + [10.0] * 3 + [1.0] * 3 + [100.0] * 3


def test_bench_small_config(tmp_path):
    cfg = tmp_path / "bench.json"
    cfg.write_text(json.dumps({"grid": [[12, 40], [15, 60]], "replicas": 2, "solver": {"max_iterations": 200}}))
    args = ["bench", str(cfg)]
    status, out = run_cli(args)
    assert status == 0
    lines = out.splitlines()
    assert lines[0].startswith("n,m,replica,instance_seed,solver_seed,gsa_size")
    assert len(lines) == 5
    assert run_cli(args) == (status, out)


@pytest.mark.parametrize(
    "text",
    ['{"grid": [[5, 4]], "bogus": 1}', "not json", '{"m_rule": "thirds"}', '{"solver": {"gamma": 2}}',
     '{"grid": [[5, 3]], "m_rule": "as-is", "solver": {"max_iterations": 1}, "generator": {"p_t": 3}}'],
)
def test_bench_config_errors(tmp_path, text):
    cfg = tmp_path / "bad.json"
    cfg.write_text(text)
    assert run_cli(["bench", str(cfg)])[0] == EXIT_CONFIG


def test_env_override(files, monkeypatch):
    monkeypatch.setenv("GSACDS_FORMAT", "json-lines")
    monkeypatch.setenv("GSACDS_MAX_ITERS", "25")
    status, out = run_cli(["solve", files["p4"]])
    assert status == 0 and jl(out)[0]["iterations"] == 25
    status, out = run_cli(["solve", files["p4"], "--max-iters", "30"])
    assert jl(out)[0]["iterations"] == 30


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "gsacds", "verify", files["p4"], "1,2", "--format", "json-lines"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["feasible"] is True
