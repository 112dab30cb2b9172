"""Tests for lib.protocol: planning, encoding, answers, erasures and decoding."""

import unittest
from fractions import Fraction

import numpy as np

from lib.gf import FieldError
from lib.linalg import to_rows
from lib.nsumbox import build_box
from lib.protocol import (
    MessageStore,
    PlanError,
    ProtocolError,
    Regime,
    build_gh,
    classical_decode,
    classify,
    encode_storage,
    fit_answers,
    inject_erasures,
    make_queries,
    pad_erasure_set,
    plan_scheme,
    prepare_answers,
    quantum_decode,
    rate,
    run_end_to_end,
    server_answer,
    stack_answers,
    y_layout,
)


def golden():
    return plan_scheme(4, 2, 1, 1, 1)


class TestPlanning(unittest.TestCase):
    def test_classify(self):
        self.assertIs(classify(4, 1, 1, 1), Regime.R1)
        self.assertIs(classify(5, 1, 1, 1), Regime.R2_ODD)
        self.assertIs(classify(10, 2, 2, 1), Regime.R2_EVEN)
        self.assertIs(classify(10, 2, 1, 6), Regime.R3)

    def test_rate_cases(self):
        self.assertEqual(rate(4, 1, 1, 1), Fraction(1, 2))
        self.assertEqual(rate(10, 2, 2, 1), Fraction(4, 5))
        self.assertEqual(rate(10, 2, 1, 6), Fraction(1, 10))
        self.assertEqual(rate(5, 1, 1, 1), Fraction(3, 5))

    def test_zero_rate(self):
        with self.assertRaises(PlanError) as cm:
            plan_scheme(4, 2, 2, 1, 1)
        self.assertIn("zero/negative rate", str(cm.exception))

    def test_negative_parameter(self):
        with self.assertRaises(PlanError):
            classify(4, -1, 1, 1)

    def test_golden_plan(self):
        p = golden()
        self.assertIs(p.regime, Regime.R1)
        self.assertEqual(p.field.q, 5)
        self.assertEqual(p.points.alpha, (0, 1, 2, 3))
        self.assertEqual(p.points.f, (4,))
        self.assertEqual(p.mult.v, (4, 3, 2, 1))
        self.assertEqual(p.rate, Fraction(1, 2))
        self.assertEqual(p.gain, 2)
        self.assertEqual([s.stop - s.start for s in y_layout(p)], [1, 1, 0, 0, 1, 1])

    def test_odd_regime_two_instances(self):
        p = plan_scheme(5, 2, 1, 1, 1)
        self.assertIs(p.regime, Regime.R2_ODD)
        self.assertEqual([(i.t_effective, i.l_symbols) for i in p.per_instance], [(2, 1), (1, 2)])
        self.assertEqual(p.field.q, 7)
        self.assertEqual(p.rate, Fraction(3, 5))

    def test_classical_branch_wins(self):
        p = plan_scheme(10, 2, 0, 1, 3)
        self.assertIs(p.regime, Regime.CLASSICAL_ONLY)
        self.assertFalse(p.quantum)
        self.assertEqual(p.rate, Fraction(3, 5))
        self.assertEqual(rate(10, 0, 1, 3), Fraction(3, 5))

    def test_field_too_small(self):
        with self.assertRaises(PlanError) as cm:
            plan_scheme(5, 2, 1, 1, 1, 5)
        self.assertIn("insufficient distinct points", str(cm.exception))

    def test_non_prime_field(self):
        with self.assertRaises(FieldError):
            plan_scheme(4, 2, 1, 1, 1, 6)

    def test_alpha_length(self):
        with self.assertRaises(PlanError):
            plan_scheme(4, 2, 1, 1, 1, 7, alpha=[0, 1, 2])

    def test_to_dict(self):
        d = golden().to_dict()
        self.assertEqual(d["regime"], "R1")
        self.assertEqual(d["rate"], "1/2")
        self.assertEqual(d["per_instance"], [{"t_effective": 1, "l_symbols": 1}] * 2)


class TestEncoding(unittest.TestCase):
    def setUp(self):
        self.p = golden()
        gf = self.p.field.GF
        self.store = MessageStore((gf([[1], [2]]), gf([[3], [4]])))

    def test_storage_without_noise(self):
        zero = [self.p.field.zeros((1, 1, 2))] * 2
        shares = encode_storage(self.store, self.p, noise=zero)
        # server 1: alpha=0, f-alpha=4, 1/4 = 4
        self.assertEqual(to_rows(shares[0].blocks[0]), [[4, 3]])
        self.assertEqual([s.server for s in shares], [1, 2, 3, 4])

    def test_storage_needs_rng(self):
        with self.assertRaises(ProtocolError):
            encode_storage(self.store, self.p)

    def test_store_shape_checked(self):
        bad = MessageStore((self.p.field.zeros((2, 2)), self.p.field.zeros((2, 1))))
        with self.assertRaises(ProtocolError):
            encode_storage(bad, self.p, np.random.default_rng(0))

    def test_query_without_noise_is_unit_vector(self):
        zero = [self.p.field.zeros((1, 1, 2))] * 2
        queries = make_queries(2, self.p, noise=zero)
        self.assertEqual(to_rows(queries[0].blocks[0]), [[0], [1]])

    def test_theta_range(self):
        with self.assertRaises(ProtocolError):
            make_queries(3, self.p, np.random.default_rng(0))

    def test_server_answer_pairs_servers(self):
        rng = np.random.default_rng(0)
        shares = encode_storage(self.store, self.p, rng)
        queries = make_queries(1, self.p, rng)
        with self.assertRaises(ProtocolError):
            server_answer(shares[0], queries[1], [1, 4])
        self.assertEqual(len(server_answer(shares[0], queries[0], [1, 4])), 2)

    def test_answers_fit_the_code(self):
        rng = np.random.default_rng(3)
        store, _, _, answers = prepare_answers(self.p, 2, rng)
        for i in range(2):
            decoded, consistent = fit_answers(answers[i], self.p, i)
            self.assertTrue(consistent)
            self.assertEqual(decoded.w, store.desired(2)[i])
        tampered = answers[0].copy()
        tampered[0] += type(tampered)(1)
        self.assertFalse(fit_answers(tampered, self.p, 0)[1])


class TestErasures(unittest.TestCase):
    def test_pad(self):
        self.assertEqual(pad_erasure_set((), 4, 1), (1,))
        self.assertEqual(pad_erasure_set((3,), 4, 2), (1, 3))
        self.assertEqual(pad_erasure_set((1,), 4, 2), (1, 2))
        with self.assertRaises(ProtocolError):
            pad_erasure_set((1, 2), 4, 1)
        with self.assertRaises(ProtocolError):
            pad_erasure_set((5,), 4, 1)

    def test_build_gh_needs_exactly_e(self):
        with self.assertRaises(ProtocolError):
            build_gh(golden(), [])

    def test_build_gh_classical_plan(self):
        with self.assertRaises(PlanError):
            build_gh(plan_scheme(10, 2, 2, 1, 6), [1])

    def test_golden_gh(self):
        g, h = build_gh(golden(), [3])
        self.assertEqual(to_rows(g)[4:], [[0, 0, 4, 0], [0, 0, 3, 3], [0, 0, 2, 4], [0, 0, 1, 3]])
        self.assertEqual(to_rows(h.T)[2:], [[0, 0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 1, 0]])

    def test_inject(self):
        p = golden()
        a = p.field.zeros(8)
        x = inject_erasures(a, [2], {2: (7, -1)})
        self.assertEqual(x.tolist(), [0, 2, 0, 0, 0, 4, 0, 0])
        with self.assertRaises(ProtocolError):
            inject_erasures(a, [2], {3: (1, 1)})


class TestEndToEnd(unittest.TestCase):
    def test_golden_every_single_erasure(self):
        p = golden()
        for server in range(1, 5):
            for theta in (1, 2):
                t = run_end_to_end(p, theta, server * 10 + theta, [server], {server: (1, 4)})
                self.assertTrue(t.correct, (server, theta))
                self.assertEqual(t.recovered_deltas, {server: (1, 4)})
                self.assertEqual(t.box_output[-2:], [1, 4])
                self.assertEqual(t.achieved_rate, Fraction(1, 2))

    def test_no_erasure_declares_padding(self):
        t = run_end_to_end(golden(), 1, 0)
        self.assertTrue(t.correct)
        self.assertEqual(t.declared_erasures, (1,))
        self.assertEqual(t.recovered_deltas, {1: (0, 0)})

    def test_deterministic(self):
        a = run_end_to_end(golden(), 2, 42, [3], {3: (2, 2)})
        b = run_end_to_end(golden(), 2, 42, [3], {3: (2, 2)})
        self.assertEqual(a.box_output, b.box_output)
        self.assertEqual(a.decoded, b.decoded)

    def test_too_many_erasures(self):
        with self.assertRaises(ProtocolError):
            run_end_to_end(golden(), 1, 0, [1, 2])

    def test_delta_on_responsive_server(self):
        with self.assertRaises(ProtocolError):
            run_end_to_end(golden(), 1, 0, [3], {2: (1, 1)})

    def test_odd_regime(self):
        p = plan_scheme(5, 2, 1, 1, 1)
        for theta in (1, 2):
            t = run_end_to_end(p, theta, 5, [5], {5: (3, 6)})
            self.assertTrue(t.correct)
            self.assertEqual(t.recovered_deltas, {5: (3, 6)})
            self.assertEqual(t.achieved_rate, Fraction(3, 5))

    def test_even_regime_two(self):
        p = plan_scheme(6, 3, 1, 1, 1)
        self.assertIs(p.regime, Regime.R2_EVEN)
        t = run_end_to_end(p, 3, 9, [4], {4: (5, 0)})
        self.assertTrue(t.correct)
        self.assertEqual(t.achieved_rate, p.rate)

    def test_classical_regime_three(self):
        p = plan_scheme(10, 2, 2, 1, 6)
        self.assertEqual(p.field.q, 11)
        t = run_end_to_end(p, 2, 1, [1, 2, 3, 4, 5, 6])
        self.assertTrue(t.correct)
        self.assertIsNone(t.box_output)
        self.assertEqual(t.achieved_rate, Fraction(1, 10))

    def test_classical_only_plan(self):
        p = plan_scheme(10, 2, 0, 1, 3)
        t = run_end_to_end(p, 1, 4, [2, 5, 9])
        self.assertTrue(t.correct)
        self.assertEqual(t.achieved_rate, Fraction(3, 5))

    def test_classical_decode_too_few(self):
        p = plan_scheme(10, 2, 2, 1, 6)
        _, _, _, answers = prepare_answers(p, 1, np.random.default_rng(0))
        with self.assertRaises(ProtocolError):
            classical_decode(answers[0], [1, 2, 3], p)

    def test_declared_erasures_must_cover_erased(self):
        with self.assertRaises(ProtocolError) as cm:
            run_end_to_end(golden(), 1, 0, [3], {3: (1, 2)}, declared_erasures=[1])
        self.assertIn("[3]", str(cm.exception))

    def test_classical_decode_matches_box_per_instance(self):
        for nkxte in ((4, 2, 1, 1, 1), (5, 2, 1, 1, 1), (6, 3, 1, 1, 1)):
            p = plan_scheme(*nkxte)
            for server in range(1, p.n_servers + 1):
                with self.subTest(params=nkxte, erased=server):
                    store, _, _, answers = prepare_answers(p, 1, np.random.default_rng(server))
                    box = build_box(*build_gh(p, (server,)))
                    x = inject_erasures(stack_answers(answers), [server], {server: (2, 3)})
                    decoded = quantum_decode(box, x, p)
                    responsive = [s for s in range(1, p.n_servers + 1) if s != server]
                    for i in (0, 1):
                        got = classical_decode(answers[i], responsive, p, i)
                        self.assertEqual(got.w, decoded.w[i])
                        self.assertEqual(got.w, store.desired(1)[i])


if __name__ == "__main__":
    unittest.main()
"""Category: Protocol
Purpose: rate planning per regime, share/query encoding, box decoding end to end."""
