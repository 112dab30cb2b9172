"""Tests for lib.config (config.json knobs and QECSA_* overrides)."""

import json
import os
import tempfile
import unittest
from unittest import mock

from lib.config import QecsaConfig, load_config


class TestLoadConfig(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, "config.json")
        env = {k: v for k, v in os.environ.items() if not k.startswith("QECSA_")}
        self.env = mock.patch.dict(os.environ, env, clear=True)
        self.env.start()

    def tearDown(self):
        self.env.stop()
        self.tmp.cleanup()

    def write(self, text):
        with open(self.path, "w", encoding="utf-8") as f:
            f.write(text)

    def test_missing_file_uses_defaults(self):
        with self.assertLogs("lib.config", level="INFO") as cm:
            config = load_config(self.path)
        self.assertEqual(config, QecsaConfig())
        self.assertIn("not found", "\n".join(cm.output))

    def test_file_overrides(self):
        self.write(json.dumps({"noise_seeds": 3, "enum_cap": 1000, "unknown": 1}))
        config = load_config(self.path)
        self.assertEqual(config.noise_seeds, 3)
        self.assertEqual(config.enum_cap, 1000)
        self.assertFalse(hasattr(config, "unknown"))

    def test_invalid_json_warns(self):
        self.write("{not json")
        with self.assertLogs("lib.config", level="WARNING") as cm:
            config = load_config(self.path)
        self.assertEqual(config, QecsaConfig())
        self.assertIn("cannot read config file", "\n".join(cm.output))

    def test_non_object_warns(self):
        self.write("[1, 2]")
        with self.assertLogs("lib.config", level="WARNING"):
            config = load_config(self.path)
        self.assertEqual(config.enum_cap, QecsaConfig().enum_cap)

    def test_env_overrides_file(self):
        self.write(json.dumps({"enum_cap": 1000}))
        with mock.patch.dict(os.environ, {"QECSA_ENUM_CAP": "50", "QECSA_WORKERS": "4"}):
            config = load_config(self.path)
        self.assertEqual(config.enum_cap, 50)
        self.assertEqual(config.workers, 4)

    def test_bad_env_values_ignored(self):
        for raw in ("abc", "0"):
            with self.subTest(raw=raw):
                with mock.patch.dict(os.environ, {"QECSA_ENUM_CAP": raw}):
                    with self.assertLogs("lib.config", level="WARNING") as cm:
                        config = load_config(self.path)
                self.assertEqual(config.enum_cap, QecsaConfig().enum_cap)
                self.assertIn("QECSA_ENUM_CAP", "\n".join(cm.output))


if __name__ == "__main__":
    unittest.main()
"""Category: Config
Purpose: defaults, file overrides, environment overrides and bad input."""
