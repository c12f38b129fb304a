#!/usr/bin/env python3
"""End-to-end checks of hermspec-cli: output, exit codes, determinism and report schema."""

import json
import math
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = None
SCHEMA = None

C3 = "n 3\na 0 1\na 1 2\na 2 0\n"
C4 = "n 4\na 0 1\na 1 2\na 2 3\na 3 0\n"
C5_UNDIRECTED = "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n"


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, input=stdin)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.validator = jsonschema.Draft202012Validator(SCHEMA)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def report(self, *args, expect=0):
        out = run(*args)
        self.assertEqual(out.returncode, expect, out.stderr)
        doc = json.loads(out.stdout)
        self.validator.validate(doc)
        return doc

    def test_spectrum_text(self):
        out = run("spectrum", self.write("c3.el", C3), "--charpoly")
        self.assertEqual(out.returncode, 0, out.stderr)
        self.assertEqual(out.stdout, "1 1 -2\n1 0 -3 2\n")

    def test_spectrum_empty_digraph(self):
        out = run("spectrum", self.write("empty4.el", "n 4\n"))
        self.assertEqual(out.stdout, "0 0 0 0\n")

    def test_spectrum_twelve_significant_digits(self):
        path = self.write("z5.el", "n 5\na 0 1\na 1 2\na 2 3\na 3 4\na 4 0\na 0 2\na 1 3\na 2 4\na 3 0\na 4 1\n")
        values = run("spectrum", path).stdout.split()
        self.assertEqual(values[0], "2.165352128")
        self.assertLessEqual(abs(float(values[-1]) + 3.16535212800), 1e-11)

    def test_spectrum_alpha_and_formats(self):
        path = self.write("c4.el", C4)
        values = [float(x) for x in run("spectrum", path, "--alpha", "i").stdout.split()]
        self.assertEqual(len(values), 4)
        for a, b in zip(values, reversed(values)):
            self.assertLessEqual(abs(a + b), 1e-9)
        csv = run("spectrum", path, "--format", "csv").stdout.splitlines()
        self.assertEqual(csv[0], "kind,index,value")
        self.assertEqual(len(csv), 5)
        doc = self.report("spectrum", path, "--format", "json", "--charpoly")
        self.assertEqual(doc["n"], 4)
        self.assertEqual(len(doc["charpoly"]), 5)

    def test_matrix_json(self):
        out = run("matrix", self.write("c3.el", C3))
        self.assertEqual(out.returncode, 0)
        m = json.loads(out.stdout)
        self.assertEqual(m["n"], 3)
        self.assertAlmostEqual(m["re"][1], 0.5)
        self.assertAlmostEqual(m["im"][1], math.sqrt(3) / 2)

    def test_verify(self):
        doc = self.report("verify", self.write("c3.el", C3))
        self.assertTrue(doc["all_hold"])
        self.assertIsNone(doc["counterexample"])
        self.assertAlmostEqual(doc["checks"]["radius_bound"]["ratio"], 0.5, places=9)
        doc = self.report("verify", self.write("c4.el", C4), "--alpha", "i")
        self.assertTrue(doc["checks"]["bipartite_symmetry"]["applicable"])

    def test_verify_zero_band_override(self):
        doc = self.report("verify", self.write("c3.el", C3), "--zero-tol", "5")
        self.assertEqual(doc["zero_tol"], 5.0)
        self.assertTrue(doc["all_hold"])

    def test_verify_violation_exit_code(self):
        # The star has a double zero eigenvalue. A vanishing zero band lets
        # rounding push it off zero, so eta drops below the independence number.
        star = "n 4\ne 0 1\ne 0 2\ne 0 3\n"
        doc = self.report("verify", self.write("star.el", star), "--zero-tol", "1e-300", expect=4)
        self.assertFalse(doc["all_hold"])
        self.assertFalse(doc["checks"]["independence_bound"]["holds"])
        self.assertEqual(doc["counterexample"], star)

    def test_verify_random_is_deterministic(self):
        a = run("verify", "--random", "8", "--seed", "7")
        b = run("verify", "--random", "8", "--seed", "7")
        self.assertEqual(a.returncode, 0, a.stderr)
        self.assertEqual(a.stdout, b.stdout)
        self.validator.validate(json.loads(a.stdout))
        c = run("verify", "--random", "8", "--seed", "8")
        self.assertNotEqual(a.stdout, c.stdout)

    def test_generate(self):
        self.assertEqual(run("generate", "cycle", "3").stdout, "n 3\na 0 1\na 2 0\na 1 2\n")
        circ = run("generate", "circulant", "5", "1", "2:3")
        self.assertEqual(circ.returncode, 0, circ.stderr)
        self.assertIn("a 0 2 3", circ.stdout)
        a = self.write("c3.el", C3)
        prod = run("generate", "product", a, a)
        self.assertEqual(prod.stdout.splitlines()[0], "n 9")
        out_path = os.path.join(self.tmp.name, "random.el")
        self.assertEqual(run("generate", "random", "6", "--seed", "3", "-o", out_path).returncode, 0)
        with open(out_path) as f:
            text = f.read()
        self.assertEqual(text, run("generate", "random", "6", "--seed", "3").stdout)

    def test_edge_list_round_trip(self):
        # The product with a single vertex reproduces its first factor.
        text = "# comment\nn 4\nl 2 2\ne 0 1\na 1 2 3\na 3 0\ne 3 1 2\n"
        first = run("generate", "product", self.write("g.el", text), self.write("k1.el", "n 1\n")).stdout
        second = run("generate", "product", self.write("g2.el", first), self.write("k1.el", "n 1\n")).stdout
        self.assertEqual(first, second)

    def test_search_charpoly(self):
        doc = self.report("search", "charpoly", "2", "1 0 -1")
        self.assertEqual(doc["match_count"], 3)
        doc = self.report("search", "charpoly", "3", "1 0 -3 2", "--nonbipartite")
        self.assertGreaterEqual(doc["match_count"], 2)
        out_dir = os.path.join(self.tmp.name, "witnesses")
        self.assertEqual(run("search", "charpoly", "3", "1 0 -3 2", "--out", out_dir).returncode, 0)
        files = sorted(os.listdir(out_dir))
        self.assertIn("manifest.json", files)
        self.assertTrue(any(f.startswith("witness_") for f in files))
        timed = self.report("search", "charpoly", "2", "1 0 -1", "--timing")
        self.assertIn("runtime_ms", timed)

    def test_search_charpoly_five_vertices(self):
        doc = self.report("search", "charpoly", "5", "1 0 -7 0 6 0", "--nonbipartite")
        self.assertGreaterEqual(doc["match_count"], 1)
        expected = [math.sqrt(6), 1, 0, -1, -math.sqrt(6)]
        for match in doc["matches"]:
            for got, want in zip(match["spectrum"], expected):
                self.assertLessEqual(abs(got - want), 1e-8)

    def test_search_orientation(self):
        doc = self.report("search", "orientation", self.write("c5.el", C5_UNDIRECTED))
        self.assertEqual(doc["bound"], 2)
        self.assertEqual(doc["independence_number"], 2)
        self.assertEqual(doc["orientations_examined"], 243)
        doc = self.report("search", "orientation", self.write("c5.el", C5_UNDIRECTED), "--alpha-grid", "omega,0.6:0.8",
                          "--oriented-only")
        self.assertEqual(doc["alpha_grid"][0], "omega")
        a, b = (float(x) for x in doc["alpha_grid"][1].split(","))
        self.assertAlmostEqual(a, 0.6, places=15)
        self.assertAlmostEqual(b, 0.8, places=15)
        self.assertEqual(doc["orientations_examined"], 32)

    def test_search_circulant(self):
        doc = self.report("search", "circulant", "5", "--target", "2.165,-3.165", "--target", "4.0418,-6.8195")
        self.assertTrue(all(t["found"] for t in doc["targets"]))

    def test_exit_codes(self):
        self.assertEqual(run("spectrum", "/nonexistent.el").returncode, 2)
        self.assertEqual(run("spectrum", self.write("bad.el", "n 2\na 0 9\n")).returncode, 2)
        self.assertEqual(run("spectrum", self.write("c3.el", C3), "--alpha", "2,2").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("--help").returncode, 0)
        self.assertEqual(run("search", "charpoly", "6", "1 0 0 0 0 0 0").returncode, 5)
        bad = run("search", "charpoly", "3", "1 0")
        self.assertEqual(bad.returncode, 2)
        self.assertTrue(bad.stderr)

    def test_byte_identical_reruns(self):
        path = self.write("c5.el", C5_UNDIRECTED)
        for args in (("verify", path), ("spectrum", path, "--format", "json", "--charpoly"),
                     ("search", "orientation", path), ("search", "charpoly", "3", "1 0 -3 2")):
            self.assertEqual(run(*args).stdout, run(*args).stdout)


if __name__ == "__main__":
    CLI = os.path.abspath(sys.argv[1])
    with open(sys.argv[2]) as f:
        SCHEMA = json.load(f)
    unittest.main(argv=[sys.argv[0], "-v"])
