import unittest
from unittest import mock

from tilecount.models.exceptions import ParameterError
from tilecount.models.flashlight import flashlight
from tilecount.models.region import KuoVertices
from tilecount.services.formulas import count_flashlight_formula
from tilecount.services.lattice.kuo import (
    closed_form_vertices,
    conjecture_y0_check,
    conversion_check,
    conversion_table,
    flashlight_kuo_vertices,
    in_cyclic_order,
    kuo_deletion_counts,
    kuo_verify,
    outer_face_order,
    recurrence_verify,
    separation_check,
)
from tilecount.services.lattice.matching import count_region, dual_graph, graph_from_edges
from tilecount.services.lattice.regions import build_flashlight

SQUARE = KuoVertices(u=(0, 0), v=(0, 1), w=(1, 1), s=(1, 0))


def four_cycle(free=()):
    edges = [((0, 0), (0, 1)), ((0, 1), (1, 1)), ((1, 1), (1, 0)), ((1, 0), (0, 0))]
    return graph_from_edges(edges, free=free, label="square")


class TestCondensation(unittest.TestCase):
    def test_four_cycle(self):
        counts = kuo_deletion_counts(four_cycle(), SQUARE)
        self.assertEqual(counts["g"], 2)
        self.assertEqual(counts["uvws"], 1)
        self.assertEqual((counts["uw"], counts["vs"]), (0, 0))
        self.assertEqual((counts["us"], counts["vw"], counts["uv"], counts["ws"]), (1, 1, 1, 1))
        self.assertTrue(kuo_verify(four_cycle(), SQUARE))

    def test_cyclic_order(self):
        order = ["a", "b", "c", "d", "e"]
        self.assertTrue(in_cyclic_order(order, ["a", "b", "c", "d"]))
        self.assertTrue(in_cyclic_order(order, ["c", "d", "e", "a"]))
        self.assertTrue(in_cyclic_order(order, ["d", "c", "b", "a"]))
        self.assertFalse(in_cyclic_order(order, ["a", "c", "b", "d"]))
        self.assertFalse(in_cyclic_order(order, ["a", "b", "z", "d"]))

    def test_separation_without_free_vertices(self):
        self.assertEqual(separation_check(four_cycle(), SQUARE), (True, True))

    def test_separation_search_finds_disjoint_paths(self):
        # a-x-b is one component; c and d each reach their own free vertex.
        edges = [
            ((0, 0), (0, 1)),
            ((0, 1), (0, 2)),
            ((1, 0), (1, 1)),
            ((1, 1), (1, 2)),
            ((2, 0), (2, 1)),
            ((2, 1), (2, 2)),
        ]
        dual = graph_from_edges(edges, free=[(1, 2), (2, 2)], label="three paths")
        kuo = KuoVertices(u=(0, 0), v=(1, 0), w=(0, 2), s=(2, 0))
        self.assertEqual(separation_check(dual, kuo), (False, True))

    def test_condensation_can_require_separation(self):
        with mock.patch("tilecount.services.lattice.kuo.separation_check", return_value=(False, True)):
            self.assertFalse(kuo_verify(four_cycle(), SQUARE, check_separation=True))
            self.assertTrue(kuo_verify(four_cycle(), SQUARE))

    def test_hand_built_graph_has_no_outer_face(self):
        self.assertEqual(outer_face_order(four_cycle()), [])


class TestFlashlightCondensation(unittest.TestCase):
    def test_closed_form_vertices(self):
        kuo = closed_form_vertices(flashlight(2, 1, 2, 0))
        self.assertEqual(kuo.v, (1, 1))
        self.assertEqual(kuo.w, (4, 4))
        self.assertFalse(kuo.searched)

    def test_flashlight_identity(self):
        p = flashlight(2, 1, 2, 0)
        kuo = flashlight_kuo_vertices(p)
        dual = dual_graph(build_flashlight(p))
        self.assertTrue(in_cyclic_order(outer_face_order(dual), [kuo.u, kuo.v, kuo.w, kuo.s]))
        self.assertTrue(kuo_verify(dual, kuo))
        self.assertEqual(separation_check(dual, kuo), (True, True))
        for name, (deleted, target) in conversion_check(p, kuo).items():
            with self.subTest(deletion=name):
                self.assertEqual(deleted, target)

    def test_vertices_out_of_cyclic_order_are_searched(self):
        p = flashlight(2, 1, 2, 0)
        kuo = closed_form_vertices(p)
        swapped = KuoVertices(u=kuo.u, v=kuo.v, w=kuo.s, s=kuo.w)
        dual = dual_graph(build_flashlight(p))
        self.assertFalse(in_cyclic_order(outer_face_order(dual), [swapped.u, swapped.v, swapped.w, swapped.s]))
        self.assertNotEqual(separation_check(dual, swapped), (True, True))

    def test_conversion_table(self):
        table = dict(conversion_table(flashlight(3, 1, 2, 1)))
        self.assertEqual(len(table), 7)
        self.assertEqual(table[("u", "w")], flashlight(3, 1, 1, 2))
        self.assertEqual(table[("v", "w")], flashlight(1, 1, 2, 2))

    def test_regime(self):
        with self.assertRaises(ParameterError):
            flashlight_kuo_vertices(flashlight(1, 1, 1, 0))
        with self.assertRaises(ParameterError):
            recurrence_verify(flashlight(2, 1, 0, 0))


class TestRecurrence(unittest.TestCase):
    def test_formula_mode(self):
        for x in range(2, 5):
            for z in range(1, 4):
                with self.subTest(x=x, z=z):
                    self.assertTrue(recurrence_verify(flashlight(x, 1, z, 1)))

    def test_brute_mode(self):
        self.assertTrue(recurrence_verify(flashlight(2, 1, 1, 0), "brute"))
        self.assertTrue(recurrence_verify(flashlight(2, 1, 2, 0), "brute"))

    def test_unknown_mode(self):
        with self.assertRaises(ParameterError):
            recurrence_verify(flashlight(2, 1, 1, 0), "guess")

    def test_brute_force_matches_formula(self):
        for p in (flashlight(2, 1, 1, 0), flashlight(2, 1, 1, 1), flashlight(1, 2, 1, 1), flashlight(2, 2, 1, 0)):
            with self.subTest(p=str(p)):
                self.assertEqual(count_region(build_flashlight(p)), count_flashlight_formula(p))


class TestZeroYExperiment(unittest.TestCase):
    def test_report_shape(self):
        result = conjecture_y0_check(1, 1, 0)
        self.assertEqual(set(result), {"lhs", "rhs", "equal"})
        self.assertEqual(result["lhs"], count_region(build_flashlight(flashlight(1, 0, 1, 0))))
        self.assertEqual(result["equal"], result["lhs"] == result["rhs"])


if __name__ == "__main__":
    unittest.main()
