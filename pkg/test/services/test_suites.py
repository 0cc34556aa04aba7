import os
import tempfile
import unittest
from fractions import Fraction

from tilecount.models.exceptions import ParameterError, ResourceBudgetExceeded
from tilecount.services.cache import CountCache
from tilecount.services.exactnum import qpoly_from_coeffs
from tilecount.services.suites import SUITES, Grid, SuiteContext, _plain, _run, run_suite


def tiny(**caps) -> SuiteContext:
    return SuiteContext(grid=Grid(**caps))


class TestInstances(unittest.TestCase):
    def test_plain_values(self):
        self.assertEqual(_plain(Fraction(4, 2)), 2)
        self.assertEqual(_plain(Fraction(1, 2)), "1/2")
        self.assertEqual(_plain(qpoly_from_coeffs([1, 2])), [1, 2])
        self.assertEqual(_plain((1, 2)), [1, 2])

    def test_agreement(self):
        self.assertTrue(_run({"n": 1}, {"a": lambda: 3, "b": lambda: 3}).equal)
        self.assertFalse(_run({"n": 1}, {"a": lambda: 3, "b": lambda: 4}).equal)

    def test_checks(self):
        self.assertTrue(_run({}, {"a": lambda: True, "b": lambda: "closed-form"}, checks=True).equal)
        self.assertFalse(_run({}, {"a": lambda: True, "b": lambda: False}, checks=True).equal)

    def test_budget_skips(self):
        def over():
            raise ResourceBudgetExceeded("triangle budget", 1, 2)

        result = _run({"n": 1}, {"a": lambda: 1, "b": over})
        self.assertIsNone(result.equal)
        self.assertIn("TRIANGLE BUDGET", result.note.upper())

    def test_budget_drops_only_that_method(self):
        def over():
            raise ResourceBudgetExceeded("triangle budget", 64, 66)

        result = _run({"x": 3}, {"formula": lambda: True, "brute": over}, checks=True)
        self.assertTrue(result.equal)
        self.assertEqual(result.values, {"formula": True})
        self.assertIn("brute", result.note)
        counts = _run({"n": 1}, {"a": lambda: 2, "b": over, "c": lambda: 3})
        self.assertFalse(counts.equal)
        self.assertIsNone(_run({}, {"a": over}, checks=True).equal)

    def test_grid_caps(self):
        grid = Grid(xmax=3)
        self.assertEqual(grid.cap("xmax", 8), 3)
        self.assertEqual(grid.cap("ymax", 5), 5)


class TestRunSuite(unittest.TestCase):
    def test_unknown_suite(self):
        with self.assertRaises(ParameterError):
            run_suite("unknown", tiny())

    def test_registry(self):
        self.assertEqual(
            set(SUITES),
            {"formulas", "det", "pfaffian", "flashlight", "quartered", "kuo", "recurrences", "identities",
             "qanalogs", "symmetry", "bijections", "y0-experiment"},
        )

    def test_flashlight_suite(self):
        report = run_suite("flashlight", tiny(xmax=1, ymax=1, zmax=1, tmax=1), workers=2)
        self.assertEqual(len(report.instances), 8)
        self.assertTrue(report.passes())
        self.assertEqual(report.summary.passed, 8)
        self.assertEqual(report.grid, {"xmax": 1, "ymax": 1, "zmax": 1, "tmax": 1})

    def test_instances_are_sorted(self):
        report = run_suite("quartered", tiny(nmax=2), workers=3)
        keys = [instance.sort_key() for instance in report.instances]
        self.assertEqual(keys, sorted(keys))
        self.assertTrue(report.passes())

    def test_shape_suites(self):
        for name in ("formulas", "pfaffian", "bijections"):
            with self.subTest(suite=name):
                report = run_suite(name, tiny(nmax=2, mmax=1))
                self.assertTrue(report.passes(strict=True), report.failures())

    def test_shifted_bijection_grid(self):
        report = run_suite("bijections", tiny(mmax=1))
        shifted = [instance.params for instance in report.instances if instance.params["bijection"] == "spp"]
        self.assertEqual(len(shifted), 12)
        self.assertIn(0, {params["x"] for params in shifted})
        self.assertTrue(all(params["y"] >= 1 for params in shifted))
        self.assertTrue(report.passes(strict=True), report.failures())

    def test_kuo_and_recurrence_suites(self):
        for name in ("kuo", "recurrences"):
            with self.subTest(suite=name):
                report = run_suite(name, tiny(xmax=2, ymax=1, zmax=1, tmax=0))
                self.assertEqual(len(report.instances), 1)
                self.assertTrue(report.passes(), report.failures())

    def test_y0_is_experimental(self):
        report = run_suite("y0-experiment", tiny(xmax=1, zmax=1, tmax=1))
        self.assertEqual(report.summary.experimental, len(report.instances))
        self.assertEqual(report.summary.failed, 0)
        self.assertTrue(report.passes())
        for instance in report.instances:
            self.assertEqual(instance.params["y"], 0)

    def test_cache_is_flushed(self):
        with tempfile.TemporaryDirectory() as directory:
            cache = CountCache(directory, spot_check_rate=0.0)
            ctx = SuiteContext(grid=Grid(xmax=1, ymax=1, zmax=1, tmax=0), cache=cache)
            run_suite("flashlight", ctx)
            self.assertEqual(len(cache), 4)
            self.assertTrue(os.path.exists(cache.path))
            self.assertEqual(run_suite("flashlight", ctx).summary.passed, 4)
            self.assertEqual(cache.stats()["hits"], 4)


if __name__ == "__main__":
    unittest.main()
