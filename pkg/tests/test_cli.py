#!/usr/bin/env python3
"""
Test script for the command-line interface
"""

import io
import json
import os
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

# Add the parent directory to the path so we can import our modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from main import EXIT_GUARD, EXIT_INVALID, EXIT_OK, main
from src.display import parse_notation


def run_cli(*argv):
    """Run main() and capture (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestConstruct(unittest.TestCase):
    """Test the construct command."""

    def test_compressed_notation_format(self):
        code, out, _ = run_cli(
            "construct", "--p", "2", "--a", "3", "--eps", "1e-3", "--method", "opt", "--format", "paper"
        )
        self.assertEqual(code, EXIT_OK)
        listing = out.strip()
        self.assertTrue(listing.endswith("{2,4},{1,2,3},{1,2,4}"))
        self.assertEqual(len(parse_notation(listing)), 24)

    def test_p_one_json(self):
        code, out, _ = run_cli(
            "construct", "--p", "1", "--a", "4", "--eps", "1e-2", "--method", "pw", "--format", "json"
        )
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["size"], 6)
        self.assertEqual(data["d"], 2)
        self.assertIsNone(data["params"]["p_star"])

    def test_large_eps(self):
        code, out, _ = run_cli(
            "construct", "--p", "2", "--a", "2", "--eps", "10", "--method", "opt", "--format", "json"
        )
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["members"], [[]])
        self.assertEqual(data["d"], 0)

    def test_json_is_deterministic(self):
        argv = ("construct", "--p", "inf", "--a", "3", "--eps", "1e-2", "--format", "json")
        self.assertEqual(run_cli(*argv)[1], run_cli(*argv)[1])

    def test_no_list(self):
        code, out, _ = run_cli(
            "construct", "--p", "2", "--a", "3", "--eps", "1e-2", "--format", "json", "--no-list"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIsNone(json.loads(out)["members"])

    def test_normalized_set_is_smaller(self):
        argv = ["construct", "--p", "2", "--a", "2", "--eps", "1e-2", "--format", "json"]
        plain = json.loads(run_cli(*argv)[1])
        normalized = json.loads(run_cli(*argv, "--normalized")[1])
        self.assertTrue(normalized["normalized"])
        self.assertEqual(normalized["eps"], 1e-2)
        self.assertGreater(normalized["effective_eps"], 1e-2)
        plain_members = {tuple(u) for u in plain["members"]}
        self.assertLessEqual({tuple(u) for u in normalized["members"]}, plain_members)

    def test_compare_all(self):
        code, out, _ = run_cli(
            "construct", "--p", "2", "--a", "3", "--eps", "1e-2", "--method", "all", "--format", "json"
        )
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual([r["method"] for r in data["reports"]], ["pw", "qopt", "opt"])
        self.assertTrue(data["opt_within_pw"])
        self.assertTrue(data["sizes_ordered"])

    def test_text_format(self):
        code, out, _ = run_cli("construct", "--p", "2", "--a", "4", "--eps", "1e-2")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("|U| = 4", out)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "out.json")
            code, _, _ = run_cli(
                "construct", "--p", "2", "--a", "4", "--eps", "1e-2", "--format", "paper", "--output", path
            )
            self.assertEqual(code, EXIT_OK)
            with open(path, encoding="utf-8") as f:
                self.assertEqual(json.load(f)["size"], 4)


class TestExitCodes(unittest.TestCase):
    """Test error handling."""

    def test_inadmissible_decay(self):
        code, _, err = run_cli("construct", "--p", "2", "--a", "0.4", "--eps", "0.1")
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn("Invalid parameters", err)

    def test_bad_p(self):
        code, _, _ = run_cli("construct", "--p", "half", "--a", "2", "--eps", "0.1")
        self.assertEqual(code, EXIT_INVALID)

    def test_argparse_rejects_negative_eps(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(["construct", "--p", "2", "--a", "2", "--eps", "-1"])
        self.assertEqual(ctx.exception.code, EXIT_INVALID)

    def test_guard_exit(self):
        code, _, err = run_cli(
            "construct", "--p", "2", "--a", "2", "--eps", "1e-2", "--method", "qopt", "--jmax", "1"
        )
        self.assertEqual(code, EXIT_GUARD)
        self.assertIn("j_max=1", err)

    def test_threshold_guard_exit(self):
        argv = ("construct", "--p", "2", "--a", "2", "--eps", "1e-2", "--method", "pw")
        code, _, err = run_cli(*argv, "--lmax", "1")
        self.assertEqual(code, EXIT_GUARD)
        self.assertIn("l_max=1", err)
        self.assertIn("residual achieved", err)


class TestSweepCommand(unittest.TestCase):
    """Test the sweep command."""

    def test_csv(self):
        code, out, _ = run_cli("sweep", "--p", "2", "--eps", "1e-2", "--format", "csv")
        self.assertEqual(code, EXIT_OK)
        lines = out.strip().split("\n")
        self.assertEqual(lines[0], "c,a,size,d")
        self.assertEqual(len(lines), 10)
        self.assertIn("1,3,7,2", lines)
        self.assertIn("2,2,122,4", lines)

    def test_json_several_eps(self):
        code, out, _ = run_cli(
            "sweep", "--p", "inf", "--eps", "1e-1", "1e-2", "--a", "4,3", "--c", "1", "--format", "json"
        )
        self.assertEqual(code, EXIT_OK)
        tables = json.loads(out)
        self.assertEqual([t["eps"] for t in tables], [0.1, 0.01])
        self.assertEqual([cell["size"] for cell in tables[1]["cells"]], [5, 15])


if __name__ == "__main__":
    unittest.main()
