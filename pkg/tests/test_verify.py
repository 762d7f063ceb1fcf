import csv
import io
import json

from surfdom.analysis import SurfaceOptions
from surfdom.corpus import CorpusSpec
from surfdom.graph import complete_graph, icosahedron, petersen_graph
from surfdom.surfaces import THEOREMS
from surfdom.verify import (
    CSV_FIELDS,
    build_report,
    dump_report,
    split_ids,
    summarize,
    sweep,
    to_csv,
    verify_all,
)


def test_split_ids():
    bounds, known = split_ids(["T3.1", "T2.6", "T4.4"])
    assert bounds == ["T3.1(i)", "T3.1(ii)", "T4.4"]
    assert known == ["T2.6(i)", "T2.6(ii)", "T2.6(iii)"]


def test_icosahedron_has_no_violations():
    res = verify_all(icosahedron())
    assert not res.violations
    by_id = {v.theorem_id: v for v in res.verdicts}
    assert by_id["T4.4"].status in ("holds", "equality")
    # delta = 5 selects i = 1
    assert by_id["T4.3"].rhs == 13 and by_id["T4.3"].status in ("holds", "equality")
    assert len(res.verdicts) == len(THEOREMS)


def test_budget_makes_verdicts_indeterminate():
    res = verify_all(icosahedron(), theorems=["T4.4"], known=[], budget=10)
    assert res.verdicts[0].status == "indeterminate"
    assert "b_R" in res.analysis.budget_failures() or res.analysis.errors


def test_report_schema_and_violation_record():
    res = verify_all(complete_graph(5), SurfaceOptions(chi=1), theorems=["T3.3"], known=["T2.4"])
    report = build_report("verify", {"graph": "k5"}, [res], timestamp=False)
    assert set(report) == {"version", "tool", "command", "inputs", "results", "summary"}
    data = json.loads(dump_report(report))
    assert data["summary"]["graphs"] == 1
    assert data["results"][0]["graph"]["graph6"] == "D~{"
    # inject a violation to check it is summarized with the graph attached
    res.verdicts[0].holds, res.verdicts[0].applicable = False, True
    s = summarize([res])
    assert s["bounds"]["violation"] == 1
    v = s["violations"][0]
    assert v["theorem"] == "T3.3" and v["graph"]["n"] == 5


def test_csv_rows():
    res = verify_all(petersen_graph(), theorems=["T4.1"], known=["T2.1"])
    rows = list(csv.DictReader(io.StringIO(to_csv([res]))))
    assert tuple(rows[0]) == CSV_FIELDS
    assert [r["theorem"] for r in rows] == ["T4.1(i)", "T4.1(ii)", "T2.1"]


def test_sweep_parallel_matches_serial():
    spec = CorpusSpec(count=6, n_min=5, n_max=7, p=0.5, constraints=("connected",), seed=11)
    a = sweep(spec, theorems=["T4.1"], known=["T2.1", "T2.7"])
    b = sweep(spec, theorems=["T4.1"], known=["T2.1", "T2.7"], jobs=2)
    strip = lambda rs: [(r.index, [v.to_dict() for v in r.verdicts], [k.to_dict() for k in r.known]) for r in rs]
    assert strip(a) == strip(b)
