#!/usr/bin/env python3
"""End-to-end tests for the command line tool. Usage: test_cli.py <path-to-cli>."""

import json
import math
import os
import subprocess
import sys
import tempfile
import unittest

CLI = None

S2 = math.sqrt(2.0)
S6 = math.sqrt(6.0)

TETRA = {
    "type": "monomial",
    "degree": 4,
    "terms": [
        {"p": 4, "q": 0, "r": 0, "re": -3},
        {"p": 0, "q": 4, "r": 0, "re": -3},
        {"p": 0, "q": 0, "r": 4, "re": -8},
        {"p": 2, "q": 2, "r": 0, "re": -6},
        {"p": 0, "q": 2, "r": 2, "re": 24},
        {"p": 2, "q": 0, "r": 2, "re": 24},
        {"p": 2, "q": 1, "r": 1, "re": -60 * S2},
        {"p": 0, "q": 3, "r": 1, "re": 20 * S2},
    ],
}

CROSS = {
    "type": "monomial",
    "degree": 2,
    "terms": [
        {"p": 1, "q": 1, "r": 0, "re": 1},
        {"p": 0, "q": 1, "r": 1, "re": 1},
        {"p": 1, "q": 0, "r": 1, "re": 1},
    ],
}

Z_LINEAR = {
    "type": "monomial",
    "degree": 1,
    "terms": [{"p": 0, "q": 0, "r": 1, "re": 1}],
}

R2 = {
    "type": "monomial",
    "degree": 2,
    "terms": [
        {"p": 2, "q": 0, "r": 0, "re": 1},
        {"p": 0, "q": 2, "r": 0, "re": 1},
        {"p": 0, "q": 0, "r": 2, "re": 1},
    ],
}


def eval_poly(doc, x, y, z):
    acc = 0j
    for t in doc["terms"]:
        c = complex(t.get("re", 0.0), t.get("im", 0.0))
        acc += c * x ** t["p"] * y ** t["q"] * z ** t["r"]
    return acc


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name, doc=None):
        p = os.path.join(self.tmp.name, name)
        if doc is not None:
            with open(p, "w") as fh:
                json.dump(doc, fh)
        return p

    def run_cli(self, *args, expect=0):
        proc = subprocess.run([CLI, *args], capture_output=True, text=True)
        self.assertEqual(
            proc.returncode, expect,
            f"args={args} rc={proc.returncode} stderr={proc.stderr!r}")
        return proc

    def run_json(self, *args):
        return json.loads(self.run_cli(*args).stdout)

    def test_poles_tetrahedron(self):
        out = self.run_json("poles", "-i", self.path("h.json", TETRA))
        self.assertAlmostEqual(abs(out["C"]), 135.0, delta=1e-6)
        self.assertEqual(sum(p["multiplicity"] for p in out["poles"]), 4)
        for p in out["poles"]:
            n = math.sqrt(p["x"] ** 2 + p["y"] ** 2 + p["z"] ** 2)
            self.assertAlmostEqual(n, 1.0, delta=1e-9)
        self.assertLess(out["diagnostics"]["coeff_residual"], 1e-8)
        # one axis of the tetrahedron is (0, 0, 1)
        self.assertTrue(any(
            abs(abs(p["z"]) - 1) < 1e-9 for p in out["poles"]))

    def test_poles_linear(self):
        out = self.run_json("poles", "-i", self.path("h.json", Z_LINEAR))
        self.assertAlmostEqual(out["C"], 1.0, delta=1e-10)
        self.assertEqual(len(out["poles"]), 1)
        self.assertAlmostEqual(out["poles"][0]["z"], 1.0, delta=1e-12)

    def test_upsilon_cross_terms(self):
        out = self.run_json("upsilon", "-i", self.path("h.json", CROSS))
        self.assertEqual(out["degree"], 4)
        for (x, y, z) in [(1.0, 2.0, -1.5), (0.3, -0.7, 1.1)]:
            want = (x * x + y * y + z * z - x * y - y * z - z * x) ** 2
            got = eval_poly(out, x, y, z)
            self.assertAlmostEqual(got.real, want, delta=1e-10)
            self.assertAlmostEqual(got.imag, 0.0, delta=1e-10)

    def test_jw_tables(self):
        text = self.run_cli("jw", "--j", "2", "--format", "text").stdout
        self.assertIn("c_2 = -8/3", text)
        self.assertIn("c_4 = 2/3", text)
        out = self.run_json("jw", "--j", "3/2")
        self.assertEqual(out["c"]["c1"], {"re": "0", "im": "7/3"})
        self.assertEqual(out["c"]["c3"], {"re": "0", "im": "-4/3"})

    def test_restrict(self):
        # a pure r^2 multiple restricts to zero, and the output says so
        out = self.run_json("restrict", "-i", self.path("h.json", R2))
        self.assertIn("note", out)
        self.assertTrue(all(c["re"] == 0 and c["im"] == 0 for c in out["coeffs"]))
        # xy + yz + zx restricts to a known quartic binary form
        out = self.run_json("restrict", "-i", self.path("g.json", CROSS))
        want = [complex(0, -0.5), complex(1, 1), 0j, complex(-1, 1), complex(0, 0.5)]
        self.assertEqual(out["degree"], 4)
        for c, w in zip(out["coeffs"], want):
            self.assertAlmostEqual(complex(c["re"], c["im"]), w, delta=1e-12)

    def test_reconstruct_roundtrip(self):
        out = self.run_json("restrict", "-i", self.path("h.json", CROSS))
        back = self.run_json("reconstruct", "-i", self.path("b.json", out))
        for (x, y, z) in [(0.2, -1.0, 0.4), (1.3, 0.5, -0.8)]:
            want = x * y + y * z + z * x
            got = eval_poly(back, x, y, z)
            self.assertAlmostEqual(got.real, want, delta=1e-10)
            self.assertAlmostEqual(got.imag, 0.0, delta=1e-10)

    def test_transvectant(self):
        doc = {"f": {"coeffs": [{"re": 1}, {}, {}]},
               "g": {"coeffs": [{}, {}, {"re": 1}]}}
        out = self.run_json("transvect", "--r", "2", "-i", self.path("t.json", doc))
        self.assertEqual(out["r"], 2)
        self.assertEqual(out["degree"], 0)
        self.assertAlmostEqual(out["coeffs"][0]["re"], 1.0, delta=1e-12)
        # --r overrides any "r" field in the file
        doc["r"] = 1
        out = self.run_json("transvect", "--r", "2", "-i", self.path("t2.json", doc))
        self.assertEqual(out["r"], 2)

    def test_apolar(self):
        xi4 = {"coeffs": [{"re": 1}, {}, {}, {}, {}]}
        xi2 = {"coeffs": [{"re": 1}, {}, {}]}
        eta2 = {"coeffs": [{}, {}, {"re": 1}]}
        out = self.run_json("apolar", "-i", self.path("a.json", {"f": xi4, "g": xi2}))
        self.assertTrue(out["apolar"])
        out = self.run_json("apolar", "-i", self.path("b.json", {"f": xi4, "g": eta2}))
        self.assertFalse(out["apolar"])

    def test_verify_roundtrip(self):
        src = self.path("h.json", TETRA)
        dec = self.path("dec.json")
        self.run_cli("poles", "-i", src, "-o", dec)
        out = self.run_json("verify", "-i", dec, "--source", src)
        self.assertTrue(out["ok"])
        self.assertLess(out["coeff_residual"], 1e-8)

    def test_determinism(self):
        src = self.path("h.json", TETRA)
        a = self.run_cli("poles", "-i", src, "--seed", "5").stdout
        b = self.run_cli("poles", "-i", src, "--seed", "5").stdout
        self.assertEqual(a, b)

    def test_text_format(self):
        text = self.run_cli("poles", "-i", self.path("h.json", Z_LINEAR),
                            "--format", "text").stdout
        self.assertIn("C = ", text)
        self.assertIn("multiplicity 1", text)

    def test_output_file(self):
        dest = self.path("out.json")
        self.run_cli("poles", "-i", self.path("h.json", Z_LINEAR), "-o", dest)
        with open(dest) as fh:
            out = json.load(fh)
        self.assertAlmostEqual(out["C"], 1.0, delta=1e-10)

    def test_error_codes(self):
        # malformed JSON and missing files are reported as input errors (1)
        bad = self.path("bad.json")
        with open(bad, "w") as fh:
            fh.write("{ not json")
        self.run_cli("poles", "-i", bad, expect=1)
        self.run_cli("poles", "-i", self.path("missing.json"), expect=1)
        # missing required option is a command line error (1)
        self.run_cli("poles", expect=1)
        # mathematical precondition failures are validation errors (2)
        odd = self.path("odd.json", {"coeffs": [{"re": 1}, {}, {}, {"re": 1}]})
        self.run_cli("reconstruct", "-i", odd, expect=2)


if __name__ == "__main__":
    if len(sys.argv) < 2:
        print("usage: test_cli.py <path-to-cli>", file=sys.stderr)
        sys.exit(2)
    CLI = sys.argv.pop(1)
    unittest.main(verbosity=2)
