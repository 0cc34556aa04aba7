import unittest

from hypothesis import given, settings, strategies as st

from tilecount.models.exceptions import ParameterError, ShapeError
from tilecount.models.plane_partition import PlanePartition
from tilecount.models.shape import Partition, StrictPartition
from tilecount.services.exactnum import qpoly_coeffs
from tilecount.services.ppcore import (
    complement,
    count_pp_brute,
    count_spp_brute,
    count_symmetry_class,
    enumerate_pp,
    enumerate_spp,
    gen_function,
    is_member,
    pp_statistics,
    spp_to_symmetric,
    symmetric_to_spp,
    transpose,
)

small_partitions = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(
    lambda parts: Partition(parts=tuple(sorted(parts, reverse=True)))
)


class TestEnumeration(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(count_pp_brute(Partition(parts=(2, 1)), 1), 5)
        self.assertEqual(count_pp_brute(Partition(parts=(2, 2)), 2), 20)
        self.assertEqual(count_pp_brute(Partition(), 3), 1)
        self.assertEqual(count_spp_brute(StrictPartition(parts=(2, 1)), 1), 4)
        self.assertEqual(count_spp_brute(StrictPartition(parts=(2, 1)), 2), 10)
        self.assertEqual(count_spp_brute(StrictPartition(parts=(2,)), 1), 3)

    def test_enumeration_is_exhaustive_and_distinct(self):
        fillings = [pp.entries for pp in enumerate_pp(Partition(parts=(2, 1)), 1)]
        self.assertEqual(len(fillings), 5)
        self.assertEqual(len(set(fillings)), 5)
        self.assertIn(((1, 0), (1,)), fillings)

    @settings(max_examples=25, deadline=None)
    @given(small_partitions, st.integers(0, 2))
    def test_streaming_agrees_with_transfer(self, shape, m):
        self.assertEqual(sum(1 for _ in enumerate_pp(shape, m)), count_pp_brute(shape, m))

    @settings(max_examples=25, deadline=None)
    @given(small_partitions, st.integers(0, 2))
    def test_every_filling_is_member(self, shape, m):
        for pp in enumerate_pp(shape, m):
            self.assertTrue(is_member(pp.entries, shape, m))

    def test_negative_bound(self):
        with self.assertRaises(ParameterError):
            count_pp_brute(Partition(parts=(1,)), -1)

    def test_is_member(self):
        self.assertFalse(is_member(((0, 1),), Partition(parts=(2,)), 1))
        self.assertTrue(is_member(((1, 0),), Partition(parts=(2,)), 1))


class TestStatistics(unittest.TestCase):
    def test_size_and_half_size(self):
        square = PlanePartition(shape=Partition(parts=(2, 2)), bound=2, entries=((2, 1), (1, 0)))
        self.assertEqual(pp_statistics(square), (4, 3))
        row = PlanePartition(shape=Partition(parts=(2,)), bound=2, entries=((2, 1),))
        self.assertEqual(pp_statistics(row), (3, None))

    def test_gen_function(self):
        poly = gen_function(enumerate_pp(Partition(parts=(1, 1)), 1))
        self.assertEqual(qpoly_coeffs(poly), [1, 1, 1])

    def test_half_size_needs_square(self):
        with self.assertRaises(ShapeError):
            gen_function(enumerate_pp(Partition(parts=(2,)), 1), "half_size")


class TestSymmetry(unittest.TestCase):
    def test_transpose_and_complement(self):
        pp = PlanePartition(shape=Partition(parts=(2, 2)), bound=2, entries=((2, 1), (0, 0)))
        self.assertEqual(transpose(pp).entries, ((2, 0), (1, 0)))
        self.assertEqual(complement(pp).entries, ((2, 2), (1, 0)))
        with self.assertRaises(ShapeError):
            transpose(PlanePartition(shape=Partition(parts=(2,)), bound=1, entries=((1, 0),)))

    def test_symmetry_classes(self):
        self.assertEqual(count_symmetry_class("all", 2, 1), 6)
        self.assertEqual(count_symmetry_class("symmetric", 2, 1), 4)
        self.assertEqual(count_symmetry_class("transpose_complementary", 2, 1), 0)
        self.assertEqual(count_symmetry_class("transpose_complementary", 2, 2), 2)
        with self.assertRaises(ParameterError):
            count_symmetry_class("cyclic", 2, 1)

    def test_shifted_symmetric_round_trip(self):
        for spp in enumerate_spp(StrictPartition(parts=(3, 1)), 2):
            symmetric = spp_to_symmetric(spp)
            self.assertEqual(symmetric.shape.parts, (3, 2, 1))
            self.assertEqual(transpose(symmetric).entries, symmetric.entries)
            self.assertEqual(symmetric_to_spp(symmetric).entries, spp.entries)

    def test_folding_needs_symmetry(self):
        pp = PlanePartition(shape=Partition(parts=(2, 1)), bound=1, entries=((1, 1), (0,)))
        with self.assertRaises(ShapeError):
            symmetric_to_spp(pp)


if __name__ == "__main__":
    unittest.main()
