"""
Unit tests for the command-line entrypoint, graph I/O and report rendering.
"""
import json
import os
import tempfile
import unittest

from core.errors import ParameterError
from core.families import fruit, theta0
from core.graph import complement
from io_utils.config_loader import build_run_config, parse_args
from io_utils.graph_io import (
    graph_from_dict,
    graph_to_dict,
    graph_to_dot,
    load_graph,
    parse_labels,
    parse_permutation,
)
from io_utils.report_writer import render, write_report
from main import EXIT_CAPABILITY, EXIT_OK, EXIT_USAGE, main


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def run_cli(self, *argv, name="report.json"):
        out = os.path.join(self.tmp.name, name)
        code = main([*argv, "--quiet", "--out", out])
        text = None
        if os.path.exists(out):
            with open(out, encoding="utf-8") as fh:
                text = fh.read()
        return code, text


class TestCommands(CliTestCase):

    def test_components_star_theta0(self):
        """FS(Star_7, theta0) has 6 components, and Wilson's prediction agrees."""
        code, text = self.run_cli("components", "star:7", "theta0")
        self.assertEqual(code, EXIT_OK)
        report = json.loads(text)
        self.assertEqual(report["census"]["count"], 6)
        self.assertEqual(report["star_prediction"]["kind"], "ThetaSix")
        self.assertNotIn("elapsed_sec", report)

    def test_reduce_example(self):
        """13,15,35,13 in FS(Cycle_6, complement of Cycle_6) reduces to a trivial walk."""
        code, text = self.run_cli("reduce", "--y", "co(cycle:6)", "--start", "1,3,5,2,4,6",
                                  "--labels", "13,15,35,13")
        self.assertEqual(code, EXIT_OK)
        report = json.loads(text)
        self.assertEqual(report["classification"], "Trivial")
        self.assertEqual(report["final"]["labels"], ["13", "13"])

    def test_reduce_needs_domination_two(self):
        """K_5 has a dominating vertex, so reduction is a usage error."""
        code, text = self.run_cli("reduce", "--y", "complete:5", "--labels", "12,13,23,12")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIsNone(text)
        code, _ = self.run_cli("fuzz-reduce", "--y", "complete:5", "--count", "3")
        self.assertEqual(code, EXIT_USAGE)

    def test_show(self):
        """show reports structure and renders DOT on request."""
        code, text = self.run_cli("show", "cycle:6")
        self.assertEqual(code, EXIT_OK)
        report = json.loads(text)
        self.assertTrue(report["biconnected"])
        self.assertEqual(report["bipartition"], [[1, 3, 5], [2, 4, 6]])
        code, dot = self.run_cli("show", "cycle:6", "--format", "dot", name="g.dot")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("1 -- 2;", dot)

    def test_cyclespace(self):
        """One component of FS(Path_3, K_3) with dimension 1."""
        code, text = self.run_cli("cyclespace", "path:3", "complete:3")
        self.assertEqual(code, EXIT_OK)
        rows = json.loads(text)["components"]
        self.assertEqual([r["dimension"] for r in rows], [1])

    def test_timing_flag(self):
        """--timing embeds the wall time."""
        code, text = self.run_cli("components", "path:4", "complete:4", "--timing")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("elapsed_sec", json.loads(text))

    def test_byte_identical_runs(self):
        """Two runs with the same arguments write identical bytes."""
        _, first = self.run_cli("fuzz-reduce", "--y", "co(cycle:6)", "--count", "5", "--seed", "9", name="a.json")
        _, second = self.run_cli("fuzz-reduce", "--y", "co(cycle:6)", "--count", "5", "--seed", "9", name="b.json")
        self.assertEqual(first, second)


class TestExitCodes(CliTestCase):

    def test_over_budget(self):
        """11! permutations exceed the default budget."""
        code, text = self.run_cli("components", "path:11", "complete:11")
        self.assertEqual(code, EXIT_CAPABILITY)
        self.assertIsNone(text)

    def test_size_mismatch(self):
        """X and Y of different orders are a usage error."""
        code, _ = self.run_cli("components", "path:4", "complete:5")
        self.assertEqual(code, EXIT_USAGE)

    def test_bad_family(self):
        """Unparseable graph specs are a usage error."""
        code, _ = self.run_cli("show", "bogus:4")
        self.assertEqual(code, EXIT_USAGE)

    def test_argparse_errors(self):
        """Missing arguments exit with status 2."""
        with self.assertRaises(SystemExit) as ctx:
            main(["components", "star:5"])
        self.assertEqual(ctx.exception.code, 2)

    def test_dot_without_rendering(self):
        """verify has no DOT view."""
        code, _ = self.run_cli("verify", "cycle-labels", "--n-max", "4", "--format", "dot")
        self.assertEqual(code, EXIT_USAGE)


class TestRunConfig(unittest.TestCase):

    def test_shared_and_command_options(self):
        """Shared flags land on RunConfig, the rest in options."""
        cfg = build_run_config(parse_args(["verify", "star", "--n-max", "5", "--seed", "4"]))
        self.assertEqual((cfg.command, cfg.seed, cfg.fmt), ("verify", 4, "json"))
        self.assertEqual(cfg.options["theorem"], "star")
        self.assertEqual(cfg.options["n_max"], 5)
        self.assertNotIn("seed", cfg.options)


class TestGraphIO(unittest.TestCase):

    def test_load_family(self):
        """Family specs resolve to graphs and canonical names."""
        g, name = load_graph("co(fruit:7)")
        self.assertEqual(g, complement(fruit(7)))
        self.assertEqual(name, "co(fruit:7)")

    def test_json_file(self):
        """A graph written with graph_to_dict loads back by path."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "theta.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(graph_to_dict(theta0(), "theta0"), fh)
            g, name = load_graph(path)
        self.assertEqual(g, theta0())
        self.assertEqual(name, "theta0")

    def test_bad_json(self):
        """Missing fields are parameter errors."""
        with self.assertRaises(ParameterError):
            graph_from_dict({"n": 3})

    def test_permutation_and_labels(self):
        """One-line permutations and comma-separated labels."""
        self.assertEqual(parse_permutation("2,1,3").to_list(), [2, 1, 3])
        with self.assertRaises(ParameterError):
            parse_permutation("1,1,3")
        with self.assertRaises(ParameterError):
            parse_permutation("2,1,3", 4)
        self.assertEqual([str(x) for x in parse_labels("12, 1-10,23")], ["12", "1-10", "23"])

    def test_dot(self):
        """DOT output names every vertex and edge."""
        dot = graph_to_dot(theta0(), "theta0")
        self.assertTrue(dot.startswith('graph "theta0" {'))
        self.assertEqual(dot.count(" -- "), 8)


class TestReportWriter(unittest.TestCase):

    def test_json_is_sorted(self):
        """Keys are sorted for reproducible output."""
        text = render({"b": 1, "a": {"d": 2, "c": 3}})
        self.assertLess(text.index('"a"'), text.index('"b"'))
        self.assertLess(text.index('"c"'), text.index('"d"'))

    def test_table(self):
        """Nested keys flatten with dots."""
        text = render({"census": {"count": 6}}, "table")
        self.assertIn("census.count", text)

    def test_render_errors(self):
        """dot needs pre-rendered text; unknown formats are rejected."""
        with self.assertRaises(ParameterError):
            render({}, "dot")
        with self.assertRaises(ParameterError):
            render({}, "yaml")

    def test_write_creates_folders(self):
        """Output folders are created on demand."""
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "nested", "r.json")
            self.assertEqual(write_report("{}\n", out), out)
            self.assertTrue(os.path.isfile(out))


if __name__ == '__main__':
    unittest.main()
