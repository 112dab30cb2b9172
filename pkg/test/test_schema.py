import json
import os
import tempfile
import unittest

from lib import schema
from lib.schema import SchemaVersion, SchemaVersionError


class TestSchemaVersion(unittest.TestCase):
    def test_parse(self):
        cases = {
            "qecsa-plan/v1": ("qecsa-plan", 1, 0),
            "qecsa-verify-report/v2.3": ("qecsa-verify-report", 2, 3),
        }
        for text, want in cases.items():
            with self.subTest(text=text):
                self.assertEqual(schema.parse_version(text), want)
                self.assertEqual(SchemaVersion.parse(text), want)

    def test_malformed(self):
        for text in ("", "qecsa-plan", "qecsa-plan-v1", "Qecsa/v1", "qecsa-plan/v1 "):
            with self.subTest(text=text), self.assertRaises(SchemaVersionError):
                SchemaVersion.parse(text)

    def test_str_drops_zero_minor(self):
        self.assertEqual(str(SchemaVersion("qecsa-plan", 1)), "qecsa-plan/v1")
        self.assertEqual(str(SchemaVersion("qecsa-plan", 1, 4)), "qecsa-plan/v1.4")

    def test_readable_as(self):
        want = SchemaVersion.parse(schema.TRANSCRIPT)
        self.assertTrue(SchemaVersion("qecsa-transcript", 1, 7).readable_as(want))
        self.assertFalse(SchemaVersion("qecsa-transcript", 2).readable_as(want))
        self.assertFalse(SchemaVersion("qecsa-plan", 1).readable_as(want))


class TestRequireSchemaVersion(unittest.TestCase):
    def test_exact_and_newer_minor(self):
        for raw in (schema.TRANSCRIPT, "qecsa-transcript/v1.2"):
            got = schema.require_schema_version({"schema_version": raw}, schema.TRANSCRIPT)
            self.assertEqual(got.name, "qecsa-transcript")

    def test_other_payload_kind_names_its_producer(self):
        with self.assertRaises(SchemaVersionError) as cm:
            schema.require_schema_version({"schema_version": schema.PLAN}, schema.TRANSCRIPT)
        self.assertIn("qecsa rate", str(cm.exception))

    def test_rejections(self):
        bad = [
            [],
            {},
            {"schema_version": "qecsa-transcript/v2"},
            {"schema_version": "attendance-analysis/v1"},
        ]
        for payload in bad:
            with self.subTest(payload=payload), self.assertRaises(SchemaVersionError):
                schema.require_schema_version(payload, schema.TRANSCRIPT)

    def test_identify(self):
        self.assertEqual(
            schema.identify({"schema_version": schema.MATRICES}),
            SchemaVersion("qecsa-matrices", 1),
        )


class TestLoadAndDump(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, payload):
        path = os.path.join(self.tmp.name, "payload.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f)
        return path

    def test_load_checks_version(self):
        path = self.write(schema.stamp({"seed": 1}, schema.TRANSCRIPT))
        self.assertEqual(schema.load_payload(path, schema.TRANSCRIPT)["seed"], 1)
        with self.assertRaises(SchemaVersionError):
            schema.load_payload(path, schema.VERIFY_REPORT)

    def test_stamp_in_place(self):
        d = {"x": 1}
        self.assertIs(schema.stamp(d, schema.PLAN), d)
        self.assertEqual(d["schema_version"], schema.PLAN)

    def test_dumps_is_key_order_independent(self):
        self.assertEqual(
            schema.dumps({"b": 1, "a": [1, 2]}), schema.dumps({"a": [1, 2], "b": 1})
        )


if __name__ == "__main__":
    unittest.main()
"""Category: Schema
Purpose: schema_version parsing, payload kind and major checks."""
