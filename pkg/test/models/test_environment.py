import os
import unittest
from unittest import mock

from tilecount.models.exceptions import EnvironmentVarNotExists
from tilecount.services.environment import get_env, get_int_env


class TestEnvironment(unittest.TestCase):
    def test_get_env_exists(self):
        with mock.patch.dict(os.environ, {"TILECOUNT_TEST_VAR": "test value"}):
            self.assertEqual(get_env("TILECOUNT_TEST_VAR"), "test value")

    def test_get_env_not_exists(self):
        with self.assertRaises(EnvironmentVarNotExists):
            get_env("VAR_NOT_PRESENT_IN_THE_ENVIRONMENT")

    def test_get_env_default(self):
        self.assertEqual(get_env("VAR_NOT_PRESENT_IN_THE_ENVIRONMENT", default="7"), "7")

    def test_get_int_env(self):
        self.assertEqual(get_int_env("VAR_NOT_PRESENT_IN_THE_ENVIRONMENT", 64), 64)
        with mock.patch.dict(os.environ, {"TILECOUNT_TEST_BUDGET": "12"}):
            self.assertEqual(get_int_env("TILECOUNT_TEST_BUDGET", 64), 12)

    def test_missing_variable_message(self):
        self.assertIn("VAR_NOT_PRESENT", str(EnvironmentVarNotExists("VAR_NOT_PRESENT")))


if __name__ == "__main__":
    unittest.main()
