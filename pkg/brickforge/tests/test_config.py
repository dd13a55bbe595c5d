import json
import os
import tempfile
import unittest

from brickforge.config import settings
from brickforge.config.loader import (
    GenerationProfile,
    load_generation_profile,
    load_generation_profile_from_dict,
    validate_generation_profile,
)
from brickforge.extensions import ALL_VARIANTS, Variant


class GenerationProfileTests(unittest.TestCase):
    def test_shipped_profiles_load(self):
        default = load_generation_profile(str(settings.PROFILES_DIR / "default.json"))
        self.assertEqual(default.profile_id, "default")
        self.assertEqual(default.max_n, 10)
        self.assertEqual(default.variants, ALL_VARIANTS)
        self.assertEqual(default.output_dir, "out")

        oracle = load_generation_profile(str(settings.PROFILES_DIR / "oracle_n6.json"))
        self.assertEqual((oracle.max_n, oracle.jobs), (6, 1))
        self.assertFalse(oracle.include_petersen)

    def test_defaults(self):
        profile = load_generation_profile_from_dict({"profile_id": "p", "max_n": 8})
        self.assertEqual(profile, GenerationProfile(profile_id="p", max_n=8))
        self.assertTrue(profile.minimal_only)
        self.assertIsNone(profile.jobs)

    def test_variant_tags(self):
        profile = load_generation_profile_from_dict(
            {"profile_id": "p", "max_n": 8, "variants": ["qquad", "SL1"]}
        )
        self.assertEqual(profile.variants, frozenset({Variant.QUASIQUADRATIC, Variant.STRICT_LINEAR_1}))

    def test_invalid_profile_lists_every_issue(self):
        with self.assertRaises(ValueError) as ctx:
            load_generation_profile_from_dict({"profile_id": "p", "max_n": 7, "bogus": 1}, "inline")
        message = str(ctx.exception)
        self.assertIn("Invalid generation profile (inline)", message)
        self.assertIn("max_n: Expected an even integer", message)
        self.assertIn("bogus: Unknown key", message)

    def test_validation_paths(self):
        def paths(data):
            return [issue.path for issue in validate_generation_profile(data)]

        self.assertEqual(paths([]), ["$"])
        self.assertEqual(paths({"max_n": 8}), ["profile_id"])
        self.assertEqual(paths({"profile_id": "p", "max_n": True}), ["max_n"])
        self.assertEqual(paths({"profile_id": "p", "max_n": 8, "variants": ["SL1", "FOO"]}), ["variants[1]"])
        self.assertEqual(paths({"profile_id": "p", "max_n": 8, "variants": []}), ["variants"])
        self.assertEqual(paths({"profile_id": "p", "max_n": 8, "jobs": 0}), ["jobs"])
        self.assertEqual(paths({"profile_id": "p", "max_n": 8, "minimal_only": "yes"}), ["minimal_only"])
        self.assertEqual(paths({"profile_id": "p", "max_n": settings.CAP + 2}), ["max_n"])

    def test_load_from_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "profile.json")
            with open(path, "w", encoding="utf-8") as handle:
                json.dump({"profile_id": "tmp", "max_n": 6, "jobs": 2}, handle)
            self.assertEqual(load_generation_profile(path).jobs, 2)

            with open(path, "w", encoding="utf-8") as handle:
                json.dump([1, 2], handle)
            with self.assertRaises(ValueError):
                load_generation_profile(path)


class LoggingConfigTests(unittest.TestCase):
    def test_level_override(self):
        config = settings.logging_config("DEBUG")
        self.assertEqual(config["loggers"]["brickforge"]["level"], "DEBUG")
        self.assertEqual(settings.logging_config()["loggers"]["brickforge"]["level"], settings.LOG_LEVEL)


if __name__ == "__main__":
    unittest.main()
