import unittest

from hypothesis import given, strategies as st

from tilecount.models.exceptions import ParameterError
from tilecount.models.region import is_up
from tilecount.services.lattice.geometry import (
    Run,
    contains,
    corners,
    neighbours,
    outer_boundary_order,
    reflect_point,
    reflect_triangle,
    trace,
    triangles_inside,
)

cells = st.tuples(st.integers(-20, 20), st.integers(-20, 20))


class TestCells(unittest.TestCase):
    def test_corners(self):
        self.assertEqual(corners((0, 0)), ((0, 0), (1, 1), (2, 0)))
        self.assertEqual(corners((1, 0)), ((0, 0), (2, 0), (1, -1)))

    @given(cells)
    def test_neighbours_have_opposite_orientation(self, cell):
        for other in neighbours(cell):
            self.assertNotEqual(is_up(cell), is_up(other))
            self.assertIn(cell, neighbours(other))

    @given(cells)
    def test_neighbours_share_an_edge(self, cell):
        for other in neighbours(cell):
            self.assertEqual(len(set(corners(cell)) & set(corners(other))), 2)


class TestTrace(unittest.TestCase):
    def test_single_triangles(self):
        down, _ = trace([Run("E", 1), Run("SW", 1), Run("NW", 1)])
        self.assertEqual(triangles_inside(down), {(1, 0)})
        up, _ = trace([Run("NE", 1), Run("SE", 1), Run("W", 1)])
        self.assertEqual(triangles_inside(up), {(0, 0)})

    def test_free_edges(self):
        _, free = trace([Run("E", 1), Run("SW", 1), Run("NW", 1, free=True)])
        self.assertEqual(free, {frozenset(((1, -1), (0, 0)))})

    def test_open_word(self):
        with self.assertRaises(ParameterError):
            trace([Run("E", 2), Run("SW", 1)])

    def test_unknown_direction(self):
        with self.assertRaises(ParameterError):
            trace([Run("N", 1)])

    def test_contains(self):
        polygon = [(0, 0), (2, 0), (1, -1)]
        self.assertTrue(contains(polygon, (3, -1)))
        self.assertFalse(contains(polygon, (3, 1)))

    def test_empty_polygon(self):
        self.assertEqual(triangles_inside([]), set())


class TestReflection(unittest.TestCase):
    @given(st.integers(-30, 30), st.integers(-30, 30))
    def test_point_reflection_is_an_involution(self, x, y):
        if (x + y) % 2:
            y += 1
        self.assertEqual(reflect_point(reflect_point((x, y))), (x, y))

    @given(cells)
    def test_triangle_reflection_is_an_involution(self, cell):
        self.assertEqual(reflect_triangle(reflect_triangle(cell)), cell)

    @given(cells)
    def test_triangle_reflection_maps_corners(self, cell):
        image = set(corners(reflect_triangle(cell)))
        self.assertEqual(image, {reflect_point(p) for p in corners(cell)})


class TestOuterBoundary(unittest.TestCase):
    def test_hexagon(self):
        polygon, _ = trace([Run("E", 1), Run("SE", 1), Run("SW", 1), Run("W", 1), Run("NW", 1), Run("NE", 1)])
        triangles = triangles_inside(polygon)
        order = outer_boundary_order(triangles)
        self.assertEqual(len(triangles), 6)
        self.assertEqual(set(order), triangles)
        self.assertEqual(len(order), len(set(order)))


if __name__ == "__main__":
    unittest.main()
