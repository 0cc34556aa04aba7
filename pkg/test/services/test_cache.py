import os
import tempfile
import unittest

from tilecount.models.exceptions import CacheMismatch
from tilecount.services.cache import CACHE_FILE, CountCache


class TestCountCache(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def cache(self, **options) -> CountCache:
        return CountCache(self.directory.name, **options)

    def test_miss_then_hit(self):
        cache = self.cache(spot_check_rate=0.0)
        calls = []

        def compute():
            calls.append(1)
            return 42

        self.assertEqual(cache.lookup("flashlight:2,1,2,0", compute), 42)
        self.assertEqual(cache.lookup("flashlight:2,1,2,0", compute), 42)
        self.assertEqual(len(calls), 1)
        self.assertEqual(cache.stats()["hits"], 1)
        self.assertEqual(cache.stats()["misses"], 1)

    def test_flush_and_reload(self):
        cache = self.cache()
        cache.put("a", 1)
        cache.put("b", 2)
        cache.flush()
        path = os.path.join(self.directory.name, CACHE_FILE)
        with open(path, encoding="utf-8") as handle:
            self.assertEqual(handle.read(), "a\t1\nb\t2\n")
        reloaded = self.cache()
        self.assertEqual(reloaded.get("b"), 2)
        self.assertEqual(len(reloaded), 2)

    def test_malformed_lines_are_skipped(self):
        with open(os.path.join(self.directory.name, CACHE_FILE), "w", encoding="utf-8") as handle:
            handle.write("good\t5\nbroken line\ntilings:F(2,1,1,0)\t1x\n")
        cache = self.cache()
        self.assertEqual(len(cache), 1)
        self.assertEqual(cache.get("good"), 5)
        self.assertIsNone(cache.get("tilings:F(2,1,1,0)"))

    def test_spot_check_detects_mismatch(self):
        cache = self.cache(spot_check_rate=1.0)
        cache.put("key", 3)
        with self.assertRaises(CacheMismatch):
            cache.lookup("key", lambda: 4)
        self.assertEqual(cache.lookup("key", lambda: 3), 3)
        self.assertEqual(cache.stats()["spot_checks"], 2)

    def test_disabled_cache_always_computes(self):
        cache = self.cache(enabled=False)
        cache.put("key", 1)
        self.assertIsNone(cache.get("key"))
        self.assertEqual(cache.lookup("key", lambda: 9), 9)
        cache.flush()
        self.assertFalse(os.path.exists(os.path.join(self.directory.name, CACHE_FILE)))

    def test_clear(self):
        cache = self.cache()
        cache.put("key", 1)
        cache.flush()
        self.assertEqual(cache.clear(), 1)
        self.assertEqual(len(cache), 0)
        self.assertFalse(os.path.exists(cache.path))


if __name__ == "__main__":
    unittest.main()
