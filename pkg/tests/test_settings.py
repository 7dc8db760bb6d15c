"""
Unit tests for environment-driven settings.
"""

import sys
import os
import unittest
from unittest.mock import patch

# Add parent dir to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from config.settings import Settings
from core.errors import InvalidInput


class TestSettings(unittest.TestCase):

    def test_defaults(self):
        s = Settings(_env_file=None)
        self.assertEqual(s.oracle_cap, 10)
        self.assertEqual(s.output_format, "text")
        self.assertTrue(s.mk2_warm_start)
        print("✓ default settings loaded")

    def test_environment_overrides(self):
        env = {"ORACLE_CAP": "7", "BENCH_SIZES": "[10, 20]", "MK2_WARM_START": "false"}
        with patch.dict(os.environ, env):
            s = Settings(_env_file=None)
        self.assertEqual(s.oracle_cap, 7)
        self.assertEqual(s.bench_sizes, [10, 20])
        self.assertFalse(s.mk2_warm_start)

    def test_effective_cap(self):
        s = Settings(_env_file=None, oracle_cap=6)
        self.assertEqual(s.effective_cap(), 6)
        self.assertEqual(s.effective_cap(3), 3)
        with self.assertRaises(InvalidInput):
            s.effective_cap(0)


if __name__ == '__main__':
    unittest.main()
