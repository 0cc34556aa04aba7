import os
import tempfile
import unittest

from tilecount.models.shape import StrictPartition
from tilecount.services.lattice.matching import enumerate_tilings
from tilecount.services.lattice.regions import build_hexagon, build_shifted_region
from tilecount.services.lattice.render import region_dump, render_svg


class TestRenderSvg(unittest.TestCase):
    def setUp(self):
        self.region = build_hexagon(1, 1, 1)
        self.tiling = next(enumerate_tilings(self.region))

    def test_region_only(self):
        text = render_svg(self.region)
        self.assertTrue(text.startswith("<svg"))
        self.assertEqual(text.count("<polygon"), 6)
        self.assertEqual(text.count("<line"), 6)
        self.assertNotIn('id="lozenges"', text)

    def test_with_tiling(self):
        text = render_svg(self.region, self.tiling)
        self.assertEqual(text.count("<polygon"), 6 + 3)
        self.assertIn('id="lozenges"', text)

    def test_deterministic(self):
        self.assertEqual(render_svg(self.region, self.tiling), render_svg(self.region, self.tiling))
        self.assertEqual(render_svg(self.region, rotate=-30), render_svg(self.region, rotate=-30))
        self.assertNotEqual(render_svg(self.region), render_svg(self.region, rotate=90))

    def test_free_boundary_is_dashed(self):
        region = build_shifted_region(StrictPartition(parts=(2, 1)), 1)
        self.assertIn("stroke-dasharray", render_svg(region))
        self.assertNotIn("stroke-dasharray", render_svg(self.region))

    def test_writes_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "hex.svg")
            text = render_svg(self.region, self.tiling, path)
            with open(path, encoding="utf-8") as handle:
                self.assertEqual(handle.read(), text)


class TestRegionDump(unittest.TestCase):
    def test_dump(self):
        lines = region_dump(build_hexagon(1, 1, 1))
        self.assertEqual(len(lines), 6)
        self.assertEqual(lines[0], "1 -1 up 0")
        self.assertEqual(lines[1], "1 0 down 0")

    def test_free_flags(self):
        region = build_shifted_region(StrictPartition(parts=(1,)), 1)
        flags = [line.split()[-1] for line in region_dump(region)]
        self.assertEqual(flags.count("1"), len(region.free))


if __name__ == "__main__":
    unittest.main()
