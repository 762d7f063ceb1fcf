import json
import subprocess
import sys

import pytest

from surfdom import cli
from surfdom.graph import complete_graph, icosahedron, petersen_graph
from surfdom.io import parse_graph, write_graph


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.txt"
    write_graph(complete_graph(5), path)
    return str(path)


def test_gen_family_graph_and_record(capsys, tmp_path):
    rec = tmp_path / "rec.json"
    code, out, _ = run(capsys, "gen-family", "P3", "4", "4", "--record", str(rec), "--validate")
    assert code == 0
    g = parse_graph(out)
    assert (g.n, g.m) == (8, 13)
    data = json.loads(rec.read_text())
    assert data["ok"] and data["record"]["surfaces"] == ["N_6"]


def test_gen_family_graph6(capsys):
    code, out, _ = run(capsys, "gen-family", "P2", "4", "4", "--format", "graph6")
    assert code == 0 and parse_graph(out, "graph6").m == 171


def test_gen_family_bad_parameters(capsys):
    code, _, err = run(capsys, "gen-family", "P1", "4", "6")
    assert code == 2 and "d >= 6" in err


def test_compute(capsys, k5_file):
    code, out, _ = run(capsys, "compute", k5_file, "--kind", "total")
    assert code == 0 and json.loads(out)["value"] == 2
    code, out, _ = run(capsys, "compute", k5_file, "--kind", "restricted-edge-connectivity")
    assert json.loads(out)["value"] == 6


def test_compute_budget_and_not_applicable(capsys, tmp_path):
    p = tmp_path / "p.g6"
    write_graph(petersen_graph(), p, "graph6")
    code, out, _ = run(capsys, "compute", str(p), "--kind", "total", "--budget", "5")
    assert code == 0 and json.loads(out)["status"] == "budget-exceeded"
    q = tmp_path / "iso.txt"
    q.write_text("3\n0 1\n")
    code, out, _ = run(capsys, "compute", str(q), "--kind", "total")
    assert json.loads(out)["status"] == "not-applicable"


def test_bondage(capsys, k5_file):
    code, out, _ = run(capsys, "bondage", k5_file, "--kind", "total-restrained")
    data = json.loads(out)
    assert code == 0 and data["value"] == 4 and len(data["witness"]) == 4
    assert any(b["name"] == "T2.4" and b["value"] == 4 for b in data["upper_bounds"])


def test_verify_report_csv_and_figures(capsys, tmp_path):
    g = tmp_path / "ico.txt"
    write_graph(icosahedron(), g)
    rep, table, fig = tmp_path / "r.json", tmp_path / "r.csv", tmp_path / "slack.png"
    code, _, err = run(capsys, "verify", str(g), "--theorem", "T4", "--theorem", "T2.12",
                       "--out", str(rep), "--csv", str(table), "--figure", str(fig), "--no-timestamp")
    assert code == 0
    data = json.loads(rep.read_text())
    assert "generated_at" not in data and data["summary"]["violations"] == []
    assert "T4.4" in err
    assert table.read_text().startswith("graph_index,")
    assert fig.stat().st_size > 0 and (tmp_path / "slack_status.png").stat().st_size > 0


def test_verify_reads_stdin(tmp_path):
    text = "4\n0 1\n1 2\n2 3\n3 0\n"
    proc = subprocess.run(
        [sys.executable, "-m", "surfdom", "verify", "-", "--theorem", "T2.7", "--quiet"],
        input=text, capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["results"][0]["known"][0]["status"] == "holds"


def test_violation_exit_code(capsys, tmp_path):
    # K7 passes the cheap surface sanity checks for chi = 1 but does not embed
    # in the projective plane, so the supplied chi makes ad <= 6(1 - chi/n) fail
    g = tmp_path / "k7.txt"
    write_graph(complete_graph(7), g)
    code, out, _ = run(capsys, "verify", str(g), "--theorem", "T2.9", "--chi", "1", "--quiet")
    assert code == 1
    v = json.loads(out)["summary"]["violations"][0]
    assert v["theorem"] == "T2.9" and v["graph"]["n"] == 7


def test_impossible_chi_is_not_applicable(capsys, k5_file):
    code, out, _ = run(capsys, "verify", k5_file, "--theorem", "T2.9", "--chi", "2", "--quiet")
    assert code == 0
    assert json.loads(out)["results"][0]["known"][0]["status"] == "not-applicable"


def test_sweep(capsys, tmp_path):
    out = tmp_path / "s.json"
    code, _, err = run(capsys, "sweep", "--count", "5", "--n-min", "5", "--n-max", "7", "--p", "0.5",
                       "--constraint", "connected", "--seed", "1", "--theorem", "T2.1", "--out", str(out),
                       "--no-timestamp")
    assert code == 0 and "graphs=5" in err
    assert json.loads(out.read_text())["summary"]["graphs"] == 5


def test_sweep_needs_density(capsys):
    code, _, err = run(capsys, "sweep", "--count", "2", "--n-min", "4", "--n-max", "5")
    assert code == 2 and "--p" in err


def test_formulas(capsys):
    assert run(capsys, "formulas", "h1", "3")[:2] == (0, "19\n")
    assert run(capsys, "formulas", "chi", "N6")[:2] == (0, "-4\n")
    assert run(capsys, "formulas", "ad-ceiling", "3", "2", "12")[:2] == (0, "5\n")
    code, out, _ = run(capsys, "formulas", "T4.2(v)", "girth=3", "chi=-2", "n=10", "Delta=6", "--json")
    assert json.loads(out)["rhs"] == "82/5"
    code, out, _ = run(capsys, "formulas", "T4.1(i)", "g=0", "gbar=1")
    assert out.strip() == "11"


@pytest.mark.parametrize(
    "argv",
    [
        ["formulas", "h1"],
        ["formulas", "T9.9", "n=1"],
        ["formulas", "T4.3", "bogus=1"],
        ["compute", "/no/such/file", "--kind", "total"],
        ["verify", "/no/such/file"],
        ["nonsense"],
        ["verify", "x", "--theorem", "T7"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_parse_error_reports_line(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1\n1 x\n")
    code, _, err = run(capsys, "compute", str(bad), "--kind", "domination")
    assert code == 2 and "line 3" in err


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_sweep_reports_are_byte_identical(capsys, tmp_path):
    args = ["sweep", "--count", "8", "--n-min", "5", "--n-max", "8", "--p", "0.4",
            "--constraint", "connected", "--seed", "9", "--theorem", "T2.7", "--theorem", "T4.1",
            "--no-timestamp", "--quiet"]
    outs = []
    for name, jobs in (("a.json", "1"), ("b.json", "2")):
        path = tmp_path / name
        run(capsys, *args, "--jobs", jobs, "--out", str(path))
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
