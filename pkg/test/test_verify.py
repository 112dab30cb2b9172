"""Tests for lib.verify suites, with negative controls that must fail."""

import unittest
from fractions import Fraction

import numpy as np

from lib.config import QecsaConfig
from lib.nsumbox import EnumerationCapExceeded
from lib.protocol import build_gh, plan_scheme
from lib.verify import (
    MAX_WITNESSES,
    VerifyError,
    VerifyReport,
    verify_all,
    verify_correctness,
    verify_duality,
    verify_lemma1,
    verify_mds,
    verify_rate_table,
    verify_t_privacy,
    verify_x_security,
)


def golden():
    return plan_scheme(4, 2, 1, 1, 1)


class TestReport(unittest.TestCase):
    def test_witnesses_are_capped(self):
        r = VerifyReport("x", {}, "exhaustive")
        for i in range(MAX_WITNESSES + 5):
            r.fail({"i": i})
        self.assertFalse(r.passed)
        self.assertEqual(r.failures, MAX_WITNESSES + 5)
        self.assertEqual(len(r.witnesses), MAX_WITNESSES)
        self.assertFalse(r.to_dict()["pass"])


class TestCorrectness(unittest.TestCase):
    def test_golden_exhaustive(self):
        with self.assertLogs("lib.verify", level="INFO") as cm:
            r = verify_correctness(golden(), noise_seeds=2)
        self.assertTrue(r.passed, r.witnesses)
        # per seed and theta: empty set (1 delta) + 4 single erasures x 25 deltas
        self.assertEqual(r.trials, 2 * 2 * (1 + 4 * 25))
        self.assertEqual(r.notes["delta_mode"], "exhaustive")
        self.assertIn("✅ correctness", "\n".join(cm.output))

    def test_odd_regime(self):
        p = plan_scheme(5, 2, 1, 1, 1)
        r = verify_correctness(p, noise_seeds=1, delta_exhaustive_cap=0)
        self.assertTrue(r.passed, r.witnesses)
        self.assertEqual(r.notes["delta_mode"], "sampled")

    def test_named_parameter_sets(self):
        # two R1 plans and the odd R2 plan, 20 noise seeds each
        for nkxte in ((6, 3, 1, 2, 1), (6, 2, 2, 1, 1), (5, 2, 1, 1, 1)):
            with self.subTest(params=nkxte):
                r = verify_correctness(plan_scheme(*nkxte), noise_seeds=20)
                self.assertTrue(r.passed, r.witnesses)
                self.assertEqual(r.notes["noise_seeds"], 20)

    def test_classical_plan(self):
        p = plan_scheme(10, 2, 2, 1, 6)
        r = verify_correctness(p, "sampled", noise_seeds=1, set_samples=10)
        self.assertTrue(r.passed, r.witnesses)
        self.assertEqual(r.notes["erasure_sets"], 10)

    def test_wrong_declared_position_fails(self):
        def elsewhere(erased):
            return (2,) if erased == (1,) else (1,)

        r = verify_correctness(golden(), noise_seeds=1, declared_erasures=elsewhere)
        self.assertFalse(r.passed)
        self.assertIn("declared", r.witnesses[0])

    def test_unsupported_mode(self):
        with self.assertRaises(VerifyError):
            verify_correctness(golden(), "rank_condition")


class TestSecurityPrivacy(unittest.TestCase):
    def test_x_security_exhaustive(self):
        r = verify_x_security(golden())
        self.assertTrue(r.passed, r.witnesses)
        self.assertEqual(r.trials, 8)
        self.assertEqual(r.notes["noise_realizations"], 25)

    def test_x_security_without_noise_leaks(self):
        r = verify_x_security(golden(), noise_terms=0)
        self.assertFalse(r.passed)
        self.assertIn("counts", r.witnesses[0])

    def test_t_privacy_exhaustive(self):
        r = verify_t_privacy(golden())
        self.assertTrue(r.passed, r.witnesses)
        self.assertEqual(r.trials, 8)

    def test_t_privacy_odd_regime(self):
        r = verify_t_privacy(plan_scheme(5, 2, 1, 1, 1))
        self.assertTrue(r.passed, r.witnesses)

    def test_t_privacy_without_noise_leaks(self):
        r = verify_t_privacy(golden(), noise_terms=0)
        self.assertFalse(r.passed)
        self.assertEqual(r.witnesses[0]["thetas"], [1, 2])

    def test_single_message(self):
        p = plan_scheme(4, 1, 1, 1, 1)
        for check in (verify_x_security, verify_t_privacy):
            with self.subTest(suite=check.__name__):
                r = check(p, "exhaustive")
                self.assertTrue(r.passed, r.witnesses)
                self.assertEqual(r.mode, "exhaustive")

    def test_rank_conditions(self):
        p = plan_scheme(10, 2, 3, 2, 1)
        self.assertTrue(verify_x_security(p, "rank_condition").passed)
        self.assertTrue(verify_t_privacy(p, "rank_condition").passed)
        self.assertFalse(verify_x_security(p, "rank_condition", noise_terms=2).passed)

    def test_cap(self):
        with self.assertRaises(EnumerationCapExceeded):
            verify_x_security(golden(), cap=10)

    def test_unsupported_mode(self):
        with self.assertRaises(VerifyError):
            verify_t_privacy(golden(), "sampled")


class TestBoxStructure(unittest.TestCase):
    def test_lemma_golden(self):
        r = verify_lemma1(golden(), [3])
        self.assertTrue(r.passed, r.witnesses)
        self.assertEqual(r.notes["min_swt_left"], 2)
        self.assertEqual(r.notes["max_swt_right"], 1)
        self.assertEqual(r.notes["rank"], 8)

    def test_lemma_sampled(self):
        r = verify_lemma1(golden(), [1], "sampled", samples=300, seed=4)
        self.assertTrue(r.passed, r.witnesses)
        self.assertEqual(r.seed, 4)
        self.assertEqual(r.trials, 300)

    def test_lemma_catches_wide_erasure_column(self):
        p = golden()
        g, h = build_gh(p, [3])
        h = h.copy()
        h[0, 2] = 1  # column now touches transmitters 1 and 3
        r = verify_lemma1(p, [3], gh=(g, h))
        self.assertFalse(r.passed)
        self.assertIn("b", [w["check"] for w in r.witnesses])

    def test_lemma_needs_quantum_plan(self):
        with self.assertRaises(VerifyError):
            verify_lemma1(plan_scheme(10, 2, 2, 1, 6), [1])

    def test_duality(self):
        r = verify_duality(5, [0, 1, 2, 3], [1, 1, 1, 1])
        self.assertTrue(r.passed)
        self.assertEqual(r.notes["sums"], [0, 0, 0, 1])
        self.assertEqual(r.params["v"], [4, 3, 2, 1])

    def test_duality_other_points(self):
        self.assertTrue(verify_duality(13, [2, 5, 7, 9, 11], [1, 2, 3, 4, 5]).passed)

    def test_duality_generated_points(self):
        rng = np.random.default_rng(8)
        for q in (5, 7, 11, 13):
            for _ in range(25):
                n = int(rng.integers(2, q + 1))
                alpha = [int(a) for a in rng.choice(q, size=n, replace=False)]
                u = [int(s) for s in rng.integers(1, q, size=n)]
                with self.subTest(q=q, alpha=alpha, u=u):
                    r = verify_duality(q, alpha, u)
                    self.assertTrue(r.passed, r.witnesses)
                    self.assertTrue(all(s == 0 for s in r.notes["sums"][: n - 1]))

    def test_mds(self):
        r = verify_mds(golden())
        self.assertTrue(r.passed)
        self.assertEqual(r.mode, "exhaustive")
        self.assertEqual(r.trials, 8)


class TestRateTable(unittest.TestCase):
    def test_default_cases(self):
        r = verify_rate_table()
        self.assertTrue(r.passed, r.witnesses)
        self.assertEqual(
            [row["rate"] for row in r.notes["table"]], ["1/2", "4/5", "1/10", "3/5"]
        )

    def test_wrong_expectation_fails(self):
        self.assertFalse(verify_rate_table([(4, 1, 1, 1, Fraction(1, 3))]).passed)

    def test_zero_rate_case_fails(self):
        r = verify_rate_table([(4, 2, 1, 1)])
        self.assertFalse(r.passed)
        self.assertIn("zero/negative rate", r.witnesses[0]["error"])


class TestVerifyAll(unittest.TestCase):
    def test_golden(self):
        reports = verify_all(golden(), QecsaConfig(noise_seeds=1))
        self.assertEqual(
            [r.suite for r in reports],
            ["rate_table", "correctness", "mds", "x_security", "t_privacy", "duality", "lemma1"],
        )
        self.assertTrue(all(r.passed for r in reports), [r.to_dict() for r in reports])

    def test_classical_plan_skips_box_suites(self):
        reports = verify_all(plan_scheme(10, 2, 2, 1, 6), QecsaConfig(noise_seeds=1))
        self.assertNotIn("lemma1", [r.suite for r in reports])
        self.assertTrue(all(r.passed for r in reports))

    def test_requested_mode_reaches_each_suite(self):
        config = QecsaConfig(noise_seeds=1)
        cases = {
            "exhaustive": ("exhaustive", "exhaustive", "exhaustive"),
            "sampled": ("sampled", "rank_condition", "sampled"),
            "rank_condition": ("sampled", "rank_condition", "sampled"),
        }
        for mode, (correctness, security, lemma) in cases.items():
            with self.subTest(mode=mode):
                modes = {r.suite: r.mode for r in verify_all(golden(), config, mode=mode)}
                self.assertEqual(modes["correctness"], correctness)
                self.assertEqual(modes["x_security"], security)
                self.assertEqual(modes["t_privacy"], security)
                self.assertEqual(modes["lemma1"], lemma)

    def test_unknown_mode(self):
        with self.assertRaises(VerifyError):
            verify_all(golden(), QecsaConfig(noise_seeds=1), mode="quick")


if __name__ == "__main__":
    unittest.main()
"""Category: Verification
Purpose: exact suites pass on sound plans and fail on broken ones."""
