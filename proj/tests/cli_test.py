#!/usr/bin/env python3
"""End-to-end checks of the stybe binary: exit codes, schemas, determinism.

usage: cli_test.py STYBE SOURCE_DIR
"""
import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

STYBE = None
SCHEMAS = None


def tables():
    z4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    return {
        "flip2.json": {"size": 2, "sigma": [[0, 1], [0, 1]], "tau": [[0, 1], [0, 1]]},
        # radical {0,2,4,6} of Z/8 with a o b = ab + a + b, indexed by k -> 2k
        "radical8.json": {"size": 4, "add": z4,
                          "mul": [[(2 * i * j + i + j) % 4 for j in range(4)] for i in range(4)],
                          "kind": "left_brace"},
        "ring4.json": {"size": 4, "add": z4,
                       "times": [[(2 * i * j) % 4 for j in range(4)] for i in range(4)]},
        "unital2.json": {"size": 2, "add": [[0, 1], [1, 0]], "times": [[0, 0], [0, 1]]},
        # r(x, y) = (x + y, x) on Z/3
        "broken3.json": {"size": 3, "sigma": [[(x + y) % 3 for y in range(3)] for x in range(3)],
                         "tau": [[y for x in range(3)] for y in range(3)]},
        "s3.json": s3_conjugation(),
    }


def s3_conjugation():
    import itertools
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}

    def comp(a, b):  # a after b
        return tuple(a[b[i]] for i in range(3))

    mul = [[idx[comp(a, b)] for b in perms] for a in perms]
    return {"size": 6, "add": mul, "mul": mul, "kind": "skew_brace"}


class Cli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = Path(cls.tmp.name)
        for name, body in tables().items():
            (cls.dir / name).write_text(json.dumps(body))
        report = json.loads((SCHEMAS / "report.schema.json").read_text())
        line = json.loads((SCHEMAS / "stream-line.schema.json").read_text())
        registry = Registry().with_resources([
            (report["$id"], Resource.from_contents(report)),
            (line["$id"], Resource.from_contents(line)),
        ])
        cls.report_schema = jsonschema.Draft202012Validator(report, registry=registry)
        cls.line_schema = jsonschema.Draft202012Validator(line, registry=registry)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def run_stybe(self, *args, env=None):
        args = [a if not a.endswith(".json") or "/" in a else str(self.dir / a) for a in args]
        return subprocess.run([STYBE, *args], capture_output=True, text=True, env=env)

    def report(self, *args, code=0):
        proc = self.run_stybe(*args)
        self.assertEqual(proc.returncode, code, f"{args}: {proc.stderr}")
        lines = proc.stdout.strip().split("\n")
        streamed = len(lines) > 1 and lines[0].startswith("{") and lines[0].endswith("}")
        if streamed:
            rows = [json.loads(l) for l in lines[:-1]]
            rep = json.loads(lines[-1])
        else:
            rows = []
            rep = json.loads(proc.stdout)
        self.report_schema.validate(rep)
        for r in rows:
            self.line_schema.validate(r)
        self.assertEqual(rep["command"], args[0])
        self.assertEqual(rep["pass"], code == 0)
        return rep, rows

    def test_every_subcommand_matches_schema(self):
        cases = [
            (("verify-structure", "--input", "radical8.json"), 0),
            (("from-radical-ring", "--input", "ring4.json"), 0),
            (("from-radical-ring", "--input", "unital2.json"), 1),
            (("enumerate-braces", "--bound", "4", "--canonical"), 0),
            (("make-solution", "--input", "radical8.json"), 0),
            (("verify-braid", "--input", "radical8.json"), 0),
            (("verify-braid", "--input", "broken3.json"), 1),
            (("diagnose", "--input", "radical8.json"), 0),
            (("reconstruct-add", "--input", "radical8.json"), 0),
            (("enumerate-solutions", "--bound", "2"), 0),
            (("verify-reflection", "--input", "flip2.json", "--map", "1,0"), 0),
            (("enumerate-reflections", "--input", "radical8.json"), 0),
            (("linearize", "--input", "flip2.json"), 0),
            (("check-r", "--input", "radical8.json"), 0),
            (("check-r", "--input", "s3.json"), 1),
            (("twist", "--input", "radical8.json"), 0),
            (("check-rtt", "--input", "flip2.json", "--depth", "3"), 0),
            (("dress-k", "--input", "flip2.json"), 0),
            (("check-re", "--input", "flip2.json", "--map", "1,0"), 0),
            (("check-ra", "--input", "flip2.json"), 0),
        ]
        seen = set()
        for args, code in cases:
            with self.subTest(args=args):
                self.report(*args, code=code)
                seen.add(args[0])
        self.assertEqual(len(seen), 17)

    def test_radical_example(self):
        rep, _ = self.report("make-solution", "--input", "radical8.json")
        sol = rep["verdicts"]["solution"]
        self.assertEqual((sol["sigma"][1][1], sol["tau"][1][1]), (3, 3))
        rep, _ = self.report("check-r", "--input", "radical8.json")
        self.assertEqual(rep["verdicts"]["unitarity"]["scalar"], "-l^2+1")

    def test_conjugation_on_s3(self):
        rep, _ = self.report("check-r", "--input", "s3.json", code=1)
        v = rep["verdicts"]
        self.assertEqual(v["constant_braid"]["status"], "pass")
        self.assertEqual(v["unitarity"]["status"], "not_applicable")
        self.assertEqual(v["crossing_unitarity"]["status"], "not_applicable")
        # lambda r + I only braids when r squares to the identity
        self.assertEqual(v["ybe"]["status"], "fail")
        self.assertIsNotNone(v["ybe"]["witness"])

    def test_solution_stream(self):
        rep, rows = self.report("enumerate-solutions", "--bound", "2", "--canonical",
                                "--involutive", "--non-degenerate")
        self.assertEqual(len(rows), 2)
        self.assertEqual(rep["verdicts"]["count"], 2)

    def test_deterministic_output(self):
        def strip(args, jobs):
            proc = self.run_stybe(*args, "--jobs", jobs)
            lines = proc.stdout.strip().split("\n")
            rep = json.loads(lines[-1])
            del rep["timing_ms"]
            return lines[:-1], rep

        for args in (("enumerate-solutions", "--bound", "4", "--canonical", "--non-degenerate"),
                     ("enumerate-braces", "--bound", "6", "--level", "left_brace", "--canonical")):
            with self.subTest(args=args):
                self.assertEqual(strip(args, "1"), strip(args, "3"))

        a = self.run_stybe("check-ra", "--input", "flip2.json").stdout
        b = self.run_stybe("check-ra", "--input", "flip2.json").stdout
        ja, jb = json.loads(a), json.loads(b)
        ja.pop("timing_ms"), jb.pop("timing_ms")
        self.assertEqual(ja, jb)

    def test_output_file(self):
        out = self.dir / "out.json"
        proc = self.run_stybe("diagnose", "--input", "flip2.json", "--output", str(out))
        self.assertEqual(proc.returncode, 0)
        self.assertEqual(proc.stdout, "")
        self.report_schema.validate(json.loads(out.read_text()))

    def test_usage_and_structural_errors(self):
        for args in (("no-such-command",),
                     ("verify-braid", "--input", str(self.dir / "missing.json")),
                     ("verify-braid",),
                     ("enumerate-solutions",),
                     ("verify-reflection", "--input", "flip2.json", "--map", "0,1,2")):
            with self.subTest(args=args):
                proc = self.run_stybe(*args)
                self.assertEqual(proc.returncode, 2)
        bad = self.dir / "bad.json"
        bad.write_text("{not json")
        self.assertEqual(self.run_stybe("diagnose", "--input", str(bad)).returncode, 2)

    def test_unmet_hypothesis_is_refused(self):
        self.assertEqual(self.run_stybe("dress-k", "--input", "s3.json").returncode, 2)
        self.assertEqual(self.run_stybe("twist", "--input", "s3.json").returncode, 2)
        self.assertEqual(self.run_stybe("enumerate-braces", "--bound", "7").returncode, 2)

    def test_version(self):
        proc = self.run_stybe("--version")
        self.assertEqual(proc.returncode, 0)
        rep, _ = self.report("linearize", "--input", "flip2.json")
        self.assertEqual(proc.stdout.strip(), rep["version"])


if __name__ == "__main__":
    STYBE = sys.argv[1]
    SCHEMAS = Path(sys.argv[2]) / "schemas"
    unittest.main(argv=[sys.argv[0], "-v"])
