import csv
import io
import json
import pathlib
import subprocess
import sys

import pytest

from mpseries import bench
from mpseries.cli import main
from mpseries.errors import UnknownSuite

GOLDEN = pathlib.Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


def run(args):
    out, err = io.StringIO(), io.StringIO()
    code = main(args, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case):
    code, out, err = run(case["args"])
    assert code == case["exit"]
    assert out == (GOLDEN / f"{case['name']}.out").read_text()
    if code:
        assert err.startswith(("error:", "parse error:"))
    else:
        assert err == ""


def test_json_schema():
    code, out, _ = run(["invert", "--vars", "x", "--degree", "3", "--format", "json", "1 - x"])
    data = json.loads(out)
    assert [p["degree"] for p in data["parts"]] == [0, 1, 2, 3]
    assert [p["poly"] for p in data["parts"]] == ["1", "x", "x^2", "x^3"]


def test_usage_errors_exit_2():
    assert run(["invert"])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["invert", "--vars", "x", "--degree", "-1", "1"])[0] == 2
    assert run(["weierstrass", "--vars", "X1", "--main", "X1", "X1"])[0] == 2


def test_leading_not_unit_exit_3():
    assert run(["hensel", "--vars", "X1", "--main", "X2", "X1*X2^2 + 1"])[0] == 3


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mpseries", "invert", "--vars", "x,y", "--degree", "2", "1 - x - y"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 + x + y + x^2 + 2*x*y + y^2 + O(deg 3)\n"


# bench

def bench_rows(suite, n):
    buf = io.StringIO()
    bench.run_suite(suite, n, buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[0] == ["case", "param", "seconds", "peak_terms"]
    body = rows[1:]
    params = [int(r[1]) for r in body]
    assert params == sorted(params)
    for r in body:
        assert float(r[2]) >= 0 and int(r[3]) >= 0
    assert len({(r[0], r[1]) for r in body}) == len(body)
    return body


def test_bench_inverse_row_count():
    rows = bench_rows("inverse", 20)
    assert len(rows) == 60
    assert {r[0] for r in rows} == {"f1", "f2", "f3"}


@pytest.mark.parametrize("suite, n, per_param", [("weierstrass", 3, 8), ("hensel", 3, 2), ("taylor", 3, 2)])
def test_bench_suites(suite, n, per_param):
    assert len(bench_rows(suite, n)) == n * per_param


def test_bench_nary_to_16():
    rows = bench_rows("nary", 16)
    assert len(rows) == 32
    assert {r[0] for r in rows} == {"mary", "binary"}


def test_bench_unknown_suite():
    with pytest.raises(UnknownSuite):
        bench.run_suite("bogus", 5, io.StringIO())
    assert run(["bench", "bogus", "5"])[0] == 2


def test_bench_cli_csv():
    code, out, _ = run(["bench", "hensel", "1"])
    assert code == 0
    assert out.splitlines()[0] == "case,param,seconds,peak_terms"
