"""End-to-end checks for the Python module and the CLI binary.

The CLI path comes from the HOMCOUNT_CLI environment variable; the CLI tests
are skipped when it is not set (for example in a wheel-only install).
"""

import json
import os
import subprocess
from fractions import Fraction

import pytest

import homcount as hc

CLI = os.environ.get("HOMCOUNT_CLI")

needs_cli = pytest.mark.skipif(not CLI, reason="HOMCOUNT_CLI is not set")


def run_cli(*args, stdin=None):
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, input=stdin, timeout=120
    )


class TestLibrary:
    def test_graph_basics(self):
        g = hc.Graph(4, [(3, 1), (0, 2)])
        assert g.order == 4
        assert g.edge_count == 2
        assert g.edges == [(0, 2), (1, 3)]
        assert g.adjacent(1, 3)
        assert not g.adjacent(0, 1)
        assert g.neighbors(2) == [0]
        assert g == hc.Graph(4, [(1, 3), (2, 0)])

    def test_graph_validation_raises_error_subclass(self):
        with pytest.raises(hc.Error):
            hc.Graph(2, [(0, 0)])
        with pytest.raises(hc.Error):
            hc.Graph(2, [(0, 5)])

    def test_figure_vector(self):
        homs, stats = hc.count_homomorphisms(hc.complete(4), hc.complete(5))
        assert homs == 120
        assert stats.fast_path == "complete_domain"
        assert hc.count_mappings(hc.complete(4), hc.complete(5)) == 625
        assert hc.count_injective(hc.complete(4), hc.complete(5)) == 120
        assert hc.density(hc.complete(4), hc.complete(5)) == Fraction(24, 125)

    def test_counts_cross_to_python_ints_exactly(self):
        assert hc.count_mappings(hc.edgeless(40), hc.complete(10)) == 10**40
        homs, _ = hc.count_homomorphisms(hc.edgeless(40), hc.complete(10))
        assert homs == 10**40

    def test_density_is_a_fraction(self):
        t = hc.density(hc.path(3), hc.complete(3))
        assert isinstance(t, Fraction)
        assert t == Fraction(12, 27)
        assert hc.injective_density(hc.complete(4), hc.complete(5)) == Fraction(24, 125)
        assert hc.density_complete_complete(4, 5) == Fraction(24, 125)

    def test_graph6_round_trip(self):
        assert hc.write_graph6(hc.complete(3)) == "Bw"
        assert hc.parse_graph6("Bw") == hc.complete(3)
        g = hc.Graph(5, [(0, 4), (1, 2), (2, 3)])
        assert hc.parse_graph6(hc.write_graph6(g)) == g
        with pytest.raises(hc.ParseError):
            hc.parse_graph6("B")
        assert issubclass(hc.ParseError, hc.Error)

    def test_edge_list_round_trip(self):
        g = hc.parse_edge_list("3\n0 1\n1 2\n")
        assert g == hc.path(3)
        assert hc.write_edge_list(g) == "3\n0 1\n1 2\n"

    def test_empty_codomain(self):
        with pytest.raises(hc.EmptyCodomainError):
            hc.density(hc.complete(2), hc.edgeless(0))

    def test_budget(self):
        with pytest.raises(hc.BudgetExceededError):
            hc.count_homomorphisms_naive(hc.complete(5), hc.complete(5), budget=10)

    def test_bound_checks(self):
        check = hc.check_complete_domain_bound(4, hc.complete(5))
        assert check.holds
        assert check.relation == "<="
        assert check.lhs == Fraction(24, 125)
        check = hc.check_edgeless_iff_one(hc.path(3), hc.complete(3))
        assert check.holds
        assert check.witness == [0, 0, 0]

    def test_isolated_invariance(self):
        g = hc.path(3)
        assert hc.density(hc.append_isolated(g), hc.complete(3)) == hc.density(
            g, hc.complete(3)
        )
        stripped, removed = hc.strip_isolated(hc.append_isolated(g, 2))
        assert removed == 2
        assert stripped == g

    def test_run_suite(self):
        result = hc.run_suite("thm2.1", n_max=4, samples=20, seed=3)
        assert result.passed
        assert result.checks == 20
        assert result.violations == []
        assert set(hc.all_suite_selectors()) == {
            "thm2.1",
            "lem2.2",
            "lem2.3",
            "thm2.4",
            "thm2.5",
            "cor2.5.1",
            "thm2.6",
        }

    def test_generate_corpus_is_deterministic(self):
        a = hc.generate_corpus(samples=10, seed=4)
        b = hc.generate_corpus(samples=10, seed=4)
        assert a == b
        assert all(1 <= g.order <= 5 for g in a)


@needs_cli
class TestCli:
    def test_count_json_vector(self):
        r = run_cli("count", "K4", "K5", "--json")
        assert r.returncode == 0
        payload = json.loads(r.stdout)
        assert payload["mappings"] == "625"
        assert payload["injective"] == "120"
        assert payload["homomorphisms"] == "120"
        assert payload["density"] == {"num": "24", "den": "125"}
        assert payload["fast_path"] == "complete_domain"

    def test_count_zero_density(self):
        r = run_cli("count", "K4", "P3", "--json")
        assert r.returncode == 0
        payload = json.loads(r.stdout)
        assert payload["homomorphisms"] == "0"
        assert payload["density"] == {"num": "0", "den": "1"}

    def test_count_edgeless_domain_has_density_one(self):
        r = run_cli("count", "E3", "C6", "--json")
        assert r.returncode == 0
        assert json.loads(r.stdout)["density"] == {"num": "1", "den": "1"}

    def test_count_reads_edge_list_on_stdin(self):
        r = run_cli("count", "-", "K3", "--json", stdin="3\n0 1\n1 2\n")
        assert r.returncode == 0
        assert json.loads(r.stdout)["homomorphisms"] == "12"

    def test_naive_flag_matches_engine(self):
        fast = json.loads(run_cli("count", "C5", "C4", "--json").stdout)
        slow = json.loads(run_cli("count", "C5", "C4", "--json", "--naive").stdout)
        assert fast["homomorphisms"] == slow["homomorphisms"]
        assert slow["fast_path"] == "none"

    def test_parse_error_exits_2(self):
        r = run_cli("count", "no_such_file.el", "K3")
        assert r.returncode == 2
        r = run_cli("count", "-", "K3", "--format", "g6", stdin="B")
        assert r.returncode == 2

    def test_empty_codomain_exits_3(self):
        r = run_cli("count", "K3", "E0")
        assert r.returncode == 3

    def test_budget_exits_4(self):
        r = run_cli("count", "K5", "K5", "--naive", "--budget", "10")
        assert r.returncode == 4
        r = run_cli("bench", "K5", "K5", "1", "--budget", "10")
        assert r.returncode == 4

    def test_verify_all_passes(self):
        r = run_cli("verify", "all", "--n-max", "4", "--samples", "25")
        assert r.returncode == 0, r.stdout + r.stderr
        assert "all suites passed" in r.stdout

    def test_verify_inject_bug_fails_with_witness(self):
        r = run_cli("verify", "thm2.6", "--n-max", "4", "--samples", "25", "--inject-bug")
        assert r.returncode == 1
        assert "witness" in r.stdout

    def test_verify_threads_do_not_change_the_outcome(self):
        base = run_cli("verify", "thm2.4", "--samples", "20", "--csv")
        threaded = run_cli("verify", "thm2.4", "--samples", "20", "--csv", "--threads", "4")
        assert base.returncode == threaded.returncode == 0
        assert base.stdout == threaded.stdout

    def test_verify_closed_form_runs_exhaustively(self):
        r = run_cli("verify", "cor2.5.1", "--n-max", "5", "--json")
        assert r.returncode == 0
        (suite,) = json.loads(r.stdout)
        assert suite["selector"] == "cor2.5.1"
        assert suite["checks"] == 25
        assert suite["passed"] is True

    def test_bench_counts_agree(self):
        r = run_cli("bench", "E6", "K3", "2", "--csv")
        assert r.returncode == 0
        lines = r.stdout.strip().splitlines()
        assert lines[0] == "method,rep,count,fast_path,nodes,prunes,elapsed"
        rows = [line.split(",") for line in lines[1:]]
        assert {row[0] for row in rows} == {"naive", "engine"}
        assert {row[2] for row in rows} == {"729"}
        engine_rows = [row for row in rows if row[0] == "engine"]
        assert all(row[3] == "edgeless_domain" for row in engine_rows)

    def test_bench_complete_pair(self):
        r = run_cli("bench", "K4", "K6", "5", "--csv")
        assert r.returncode == 0
        rows = [line.split(",") for line in r.stdout.strip().splitlines()[1:]]
        assert len(rows) == 10  # naive and engine rows for each repetition
        assert {row[2] for row in rows} == {"360"}

    def test_gen_is_deterministic_and_exact(self):
        args = ("gen", "--n-min", "3", "--n-max", "3", "--edge-prob", "1", "--samples", "1",
                "--seed", "1")
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.returncode == 0
        assert first.stdout == second.stdout == "Bw\n"

    def test_gen_probability_zero_yields_edgeless(self):
        r = run_cli("gen", "--n-min", "4", "--n-max", "4", "--edge-prob", "0", "--samples", "1")
        assert r.returncode == 0
        assert r.stdout == hc.write_graph6(hc.edgeless(4)) + "\n"

    def test_gen_corpus_matches_library(self, tmp_path):
        out = tmp_path / "corpus.g6"
        r = run_cli("gen", "--samples", "8", "--seed", "9", "-o", str(out))
        assert r.returncode == 0
        parsed = hc.parse_graph6_lines(out.read_text())
        assert parsed == hc.generate_corpus(samples=8, seed=9)

    def test_usage_error_exits_2(self):
        r = run_cli("count", "K4")  # missing codomain
        assert r.returncode == 2
