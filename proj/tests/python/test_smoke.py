import csv
import io
import json
import math
import os
import subprocess

import pytest

import _hypercat as hc

CLI = os.environ.get("HYPERCAT_CLI")


def test_catalan_values():
    assert [hc.catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_known_counts_across_methods():
    for method in ("closed", "series", "lagrange", "trees", "walks"):
        assert hc.hypergraph_catalan(3, 2, method=method) == 57
        assert hc.hypergraph_catalan(2, 3, method=method) == 20


def test_table_matches_point_queries():
    table = hc.hypergraph_catalan_table(6, 2)
    assert table[0] == 1
    assert table[2] == 6
    assert table[3] == 57
    assert table == [hc.hypergraph_catalan(n, 2) for n in range(7)]


def test_root_degree_slices_sum():
    n, k = 6, 2
    total = sum(hc.root_degree_count(n, j, k) for j in range(1, n + 1))
    assert total == hc.hypergraph_catalan(n, k)


def test_big_values_are_exact_ints():
    c = hc.hypergraph_catalan(120, 3)
    assert isinstance(c, int)
    assert c > 10**200  # factorial-type growth, far beyond float range


def test_star_counts():
    assert hc.star_count(3, 0, 2) == 30
    assert hc.star_count(4, 1, 2) == 360
    with pytest.raises(Exception):
        hc.star_count(3, 1, 2)


def test_log_asymptotics():
    assert math.isclose(
        hc.asymptotic_log(1, 1), math.log(4 / math.sqrt(math.pi)), rel_tol=1e-12
    )
    for k in (3, 5, 7):
        assert abs(hc.gunnells_log(10, k) - hc.asymptotic_log(10, k)) < 1e-10


def test_ratio_report_shape():
    rows = hc.ratio_report(2, [10, 20])
    assert [r["n"] for r in rows] == [10, 20]
    for row in rows:
        assert row["ratio"] == pytest.approx(
            math.exp(row["log_exact"] - row["log_asym"])
        )


def test_functional_equation():
    assert hc.functional_equation_ok(1, 5)
    assert hc.functional_equation_ok(2, 5)


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
class TestCli:
    def run(self, *args):
        return subprocess.run([CLI, *args], capture_output=True, text=True)

    def test_compute(self):
        out = self.run("compute", "-k", "2", "-n", "3", "--method", "walks")
        assert out.returncode == 0
        assert out.stdout.strip() == "57"
        assert self.run("compute", "-k", "1", "-n", "6").stdout.strip() == "132"

    def test_compute_infeasible_walks(self):
        out = self.run("compute", "-k", "3", "-n", "10", "--method", "walks")
        assert out.returncode != 0

    def test_table_csv_and_json(self):
        out = self.run("table", "-k", "2", "-n", "3", "--format", "csv")
        assert out.returncode == 0
        rows = list(csv.DictReader(io.StringIO(out.stdout)))
        assert rows[0]["c"] == "1"
        assert rows[-1] == {"k": "2", "n": "3", "c": "57"}

        out = self.run("table", "-k", "1", "-n", "4", "--format", "json")
        data = json.loads(out.stdout)
        assert [r["c"] for r in data] == ["1", "1", "2", "5", "14"]

    def test_usage_error_exit_code(self):
        assert self.run("table", "-n", "3").returncode == 2
        assert self.run("nonsense").returncode == 2

    def test_ratio(self):
        out = self.run("ratio", "-k", "1", "--ns", "10")
        assert out.returncode == 0
        assert out.stdout.splitlines()[0] == "k,n,ratio,abs_delta"
        assert len(out.stdout.splitlines()) == 2

    def test_star(self):
        assert self.run("star", "-k", "2", "-n", "4", "-m", "1").stdout.strip() == "360"

    def test_verify_quick(self):
        out = self.run("verify", "--level", "quick")
        assert out.returncode == 0
        assert "PASS" in out.stdout
        assert "FAIL" not in out.stdout
