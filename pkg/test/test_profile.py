import unittest

from hypothesis import HealthCheck, given, settings, strategies as st


class TestHypothesisProfile(unittest.TestCase):
    def test_profile_is_loaded(self):
        self.assertIn(HealthCheck.differing_executors, settings.default.suppress_health_check)

    @given(st.integers(0, 3))
    def test_given_runs_under_the_profile(self, n):
        self.assertGreaterEqual(n, 0)


if __name__ == "__main__":
    unittest.main()
