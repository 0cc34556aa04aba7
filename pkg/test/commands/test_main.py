import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

from tilecount.main import EXIT_FAILURE, EXIT_PASS, EXIT_RESOURCE, EXIT_USAGE, build_parser, main


def run(*argv: str) -> tuple[int, str]:
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(["--no-cache", *argv])
    return code, out.getvalue()


class TestCount(unittest.TestCase):
    def test_formula_counts(self):
        self.assertEqual(run("count", "pp", "--shape", "rect:2,2", "--max", "2"), (EXIT_PASS, "20\n"))
        self.assertEqual(run("count", "spp", "--shape", "sds:1,1", "--max", "1"), (EXIT_PASS, "3\n"))
        self.assertEqual(run("count", "pp", "--shape", "ap:3,1,2", "--max", "1"), (EXIT_PASS, "5\n"))

    def test_other_methods(self):
        self.assertEqual(run("count", "pp", "--shape", "stair:2,2", "--max", "1", "--method", "det")[1], "5\n")
        self.assertEqual(
            run("count", "spp", "--shape", "custom:2,1", "--max", "2", "--method", "pfaffian")[1], "10\n"
        )
        self.assertEqual(run("count", "spp", "--shape", "sstair:2", "--max", "2", "--method", "brute")[1], "10\n")

    def test_q_polynomial(self):
        code, out = run("count", "pp", "--shape", "rect:1,1", "--max", "1", "--method", "det", "--q")
        self.assertEqual(code, EXIT_PASS)
        self.assertEqual(out, "[1, 1]\n")

    def test_tilings(self):
        self.assertEqual(run("count", "tilings", "--region", "flashlight:1,1,1,0"), (EXIT_PASS, "6\n"))
        self.assertEqual(
            run("count", "tilings", "--region", "flashlight:1,1,1,0", "--method", "brute"), (EXIT_PASS, "6\n")
        )
        self.assertEqual(run("count", "tilings", "--region", "qhex:2,2"), (EXIT_PASS, "2\n"))
        self.assertEqual(run("count", "tilings", "--region", "shifted:custom:2,1@2"), (EXIT_PASS, "10\n"))

    def test_usage_errors(self):
        self.assertEqual(run("count", "pp", "--shape", "rect:2,2")[0], EXIT_USAGE)
        self.assertEqual(run("count", "pp", "--shape", "rect:2,2", "--max", "1", "--method", "pfaffian")[0], EXIT_USAGE)
        self.assertEqual(run("count", "tilings", "--region", "hex:1,1,1", "--method", "det")[0], EXIT_USAGE)
        self.assertEqual(run("count", "tilings", "--region", "circle:3")[0], EXIT_USAGE)
        self.assertEqual(run("count", "spp", "--shape", "rect:2,2", "--max", "1", "--method", "brute")[0], EXIT_USAGE)

    def test_negative_bound_for_every_method(self):
        for method in ("formula", "det", "brute"):
            with self.subTest(method=method):
                code, out = run("count", "pp", "--shape", "rect:2,2", "--max", "-1", "--method", method)
                self.assertEqual((code, out), (EXIT_USAGE, ""))
        code, _ = run("count", "spp", "--shape", "sstair:2", "--max", "-1", "--method", "pfaffian")
        self.assertEqual(code, EXIT_USAGE)

    def test_flashlight_status_is_reported(self):
        cases = (("flashlight:1,0,1,0", "3\n", "conjectural"), ("flashlight:1,1,1,0", "6\n", "theorem"))
        for region, count, status in cases:
            out, err = io.StringIO(), io.StringIO()
            with redirect_stdout(out), redirect_stderr(err):
                code = main(["--no-cache", "count", "tilings", "--region", region])
            with self.subTest(region=region):
                self.assertEqual((code, out.getvalue()), (EXIT_PASS, count))
                self.assertIn(f"({status})", err.getvalue())

    def test_resource_budget(self):
        argv = ("--triangle-budget", "10", "count", "tilings", "--region", "flashlight:3,3,3,3", "--method", "brute")
        code, _ = run(*argv)
        self.assertEqual(code, EXIT_RESOURCE)

    def test_parser_rejects_unknown_kind(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                build_parser().parse_args(["count", "boxes", "--shape", "rect:1,1"])


class TestTable(unittest.TestCase):
    def test_csv(self):
        code, out = run("table", "--family", "rect", "--a", "1..2", "--b", "a", "--m", "1")
        self.assertEqual(code, EXIT_PASS)
        self.assertEqual(out.splitlines(), ["a,b,m,count", "1,1,1,2", "2,2,1,6"])

    def test_json_skips_invalid_points(self):
        code, out = run("table", "--family", "stair", "--a", "1..2", "--b", "1", "--m", "1", "--format", "json")
        self.assertEqual(code, EXIT_PASS)
        payload = json.loads(out)
        self.assertEqual(payload["family"], "stair")
        self.assertEqual(payload["rows"], [{"a": 1, "b": 1, "m": 1, "count": 2}])

    def test_missing_range(self):
        self.assertEqual(run("table", "--family", "sds", "--n", "2")[0], EXIT_USAGE)


class TestVerify(unittest.TestCase):
    def test_report_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "report.json")
            code, _ = run(
                "verify", "flashlight", "--xmax", "1", "--ymax", "1", "--zmax", "0", "--tmax", "0", "--out", path
            )
            self.assertEqual(code, EXIT_PASS)
            with open(path, encoding="utf-8") as handle:
                report = json.load(handle)
        self.assertEqual(report["schema"], 1)
        self.assertEqual(report["suite"], "flashlight")
        self.assertEqual(report["summary"]["passed"], 2)

    def test_report_on_stdout(self):
        code, out = run("verify", "quartered", "--nmax", "1")
        self.assertEqual(code, EXIT_PASS)
        self.assertEqual(json.loads(out)["summary"]["failed"], 0)

    def test_failing_suite(self):
        with mock.patch("tilecount.services.suites.count_quartered_hexagon", return_value=0):
            code, out = run("verify", "quartered", "--nmax", "1")
        self.assertEqual(code, EXIT_FAILURE)
        self.assertEqual(json.loads(out)["summary"]["failed"], 1)


class TestRegionCommands(unittest.TestCase):
    def test_dump(self):
        code, out = run("dump", "--region", "hex:1,1,1")
        self.assertEqual(code, EXIT_PASS)
        self.assertEqual(len(out.splitlines()), 6)

    def test_render(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "hex.svg")
            self.assertEqual(run("render", "--region", "hex:1,1,1", "--tiling", "1", "-o", path)[0], EXIT_PASS)
            self.assertTrue(os.path.exists(path))
            self.assertEqual(run("render", "--region", "hex:1,1,1", "--tiling", "2", "-o", path)[0], EXIT_USAGE)
            self.assertEqual(run("render", "--region", "hex:1,1,1", "--tiling", "-1", "-o", path)[0], EXIT_USAGE)

    def test_cache_stats(self):
        with tempfile.TemporaryDirectory() as directory:
            out = io.StringIO()
            with redirect_stdout(out), redirect_stderr(io.StringIO()):
                code = main(["--cache-dir", directory, "cache", "stats"])
            self.assertEqual(code, EXIT_PASS)
            self.assertEqual(json.loads(out.getvalue())["entries"], 0)


if __name__ == "__main__":
    unittest.main()
