import random
import unittest
from fractions import Fraction

from brickforge.bricks import degree_stats, is_brick, is_minimal_brick
from brickforge.config import settings
from brickforge.exceptions import (
    FundamentConflict,
    FundamentMismatch,
    GraphParseError,
    PreconditionUnmet,
    SpecInvariantViolated,
)
from brickforge.extensions import Quasiquadratic, Quasiquartic, apply
from brickforge.graphs.core import add_edge, add_vertices, delete_edge
from brickforge.graphs.named import petersen, prism, wheel
from brickforge.sequences import (
    BrickSequence,
    StartGraph,
    build,
    build_quadonquad,
    check_highavdeg,
    check_lotsofquad,
    format_sequence,
    format_sequences,
    ladder_plus_sequence,
    parse_sequence,
    parse_sequences,
    random_quadonquad,
    random_reorder_triple,
    recognise_quasiquadratic,
    reorder,
    stats,
    triple_ladder_sequence,
)
from brickforge.sequences.lemmas import CLAIMS, UPPER_VPRIME, UPPER_X

CONSERVATIVE = Quasiquadratic(u=0, v=4, x=1, y=3)
SWEEP_BASES = (prism(), wheel(6), wheel(8), petersen())


class BuildTests(unittest.TestCase):
    def test_empty_sequences(self):
        self.assertEqual(stats(BrickSequence(StartGraph.K4)).as_dict()["eps0"], 6)
        accounting = stats(BrickSequence(StartGraph.PRISM))
        self.assertEqual((accounting.nu0, accounting.eps0), (6, 9))
        self.assertEqual((accounting.n, accounting.m), (6, 9))

    def test_single_conservative_step(self):
        sequence = build(StartGraph.PRISM, [CONSERVATIVE])
        accounting = stats(sequence)
        self.assertEqual((accounting.nu2, accounting.nu2c), (2, 2))
        self.assertEqual((accounting.eps2, accounting.eps2c), (5, 5))
        self.assertEqual((accounting.n, accounting.m), (8, 14))
        self.assertEqual(accounting.relation_issues(), [])

    def test_ids_persist_along_the_sequence(self):
        sequence = build("PRISM", [CONSERVATIVE, Quasiquadratic(u=2, v=3, x=5, y=0)])
        self.assertEqual(sequence.steps[0].new_vertices, (6, 7))
        self.assertEqual(sequence.steps[1].new_vertices, (8, 9))
        self.assertEqual(len(sequence.graphs), 3)

    def test_bad_spec_names_its_step(self):
        with self.assertRaises(SpecInvariantViolated) as ctx:
            build(StartGraph.PRISM, [Quasiquadratic(u=0, v=3, x=0, y=4)])
        self.assertEqual(ctx.exception.clause, "uâ x")
        self.assertIn("step 1", str(ctx.exception))


class RecipeTests(unittest.TestCase):
    def test_triple_ladder(self):
        for rounds in range(1, 5 if settings.SLOW_TESTS else 3):
            final = triple_ladder_sequence(rounds).final
            self.assertEqual(final.n, 6 + 6 * rounds)
            self.assertTrue(is_minimal_brick(final), msg=f"rounds={rounds}")
            result = degree_stats(final)
            self.assertEqual(Fraction(result.n_deg3, result.n), Fraction(2, 3))
            self.assertEqual(result.avg_degree, Fraction(10, 3))

    def test_triple_ladder_accounting(self):
        first = stats(triple_ladder_sequence(1))
        self.assertEqual(first.nu1, 0)
        self.assertEqual((first.nu2, first.nu2c, first.nu3), (2, 2, 4))
        later = stats(triple_ladder_sequence(2))
        self.assertEqual(later.nu1, 0)
        self.assertLess(later.nu2c, later.nu2)

    def test_ladder_plus(self):
        rounds = 4 if settings.SLOW_TESTS else 1
        final = ladder_plus_sequence(rounds).final
        self.assertTrue(is_brick(final))
        result = degree_stats(final)
        ladder_n = 6 + 6 * rounds
        self.assertEqual(result.n, ladder_n + 2 * (ladder_n // 5))
        self.assertEqual(result.histogram.get(6, 0), ladder_n // 5)
        if rounds == 4:
            self.assertEqual(result.n, 42)
            self.assertEqual(Fraction(result.histogram[6], result.n), Fraction(1, 7))

    def test_density_checks_need_high_average_degree(self):
        sequence = triple_ladder_sequence(1)
        with self.assertRaises(PreconditionUnmet):
            check_highavdeg(sequence, Fraction(1, 9))
        with self.assertRaises(PreconditionUnmet):
            check_lotsofquad(sequence, 0)


class SequenceCodecTests(unittest.TestCase):
    def test_format_triple_ladder(self):
        text = format_sequence(triple_ladder_sequence(1))
        self.assertEqual(text, "start PRISM\nQQUART u=0 v=3 x=1 y=4\nQQUAD u=2 v=4 x=8 y=7\n")
        start, specs = parse_sequence(text)
        self.assertEqual(start, StartGraph.PRISM)
        self.assertEqual(specs, [Quasiquartic(0, 3, 1, 4), Quasiquadratic(2, 4, 8, 7)])

    def test_several_blocks(self):
        text = format_sequences([BrickSequence(StartGraph.K4), triple_ladder_sequence(1)])
        blocks = parse_sequences("# corpus\n" + text)
        self.assertEqual([start for start, _ in blocks], [StartGraph.K4, StartGraph.PRISM])
        self.assertEqual(len(blocks[1][1]), 2)

    def test_parse_errors(self):
        with self.assertRaises(GraphParseError) as ctx:
            parse_sequence("start FOO\n")
        self.assertEqual((ctx.exception.line, ctx.exception.position), (1, 6))
        with self.assertRaises(GraphParseError) as ctx:
            parse_sequence("# header\nQQUAD u=0 v=4 x=1 y=3\n")
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(GraphParseError) as ctx:
            parse_sequences("start K4\n---\nstart PRISM\nQQUAD u=0\n")
        self.assertEqual(ctx.exception.line, 4)


class RecogniseTests(unittest.TestCase):
    def test_recognises_a_conservative_step(self):
        after, _ = apply(prism(), CONSERVATIVE)
        self.assertEqual(recognise_quasiquadratic(prism(), after, (6, 7)), CONSERVATIVE)

    def test_rejects_a_pendant_pair(self):
        after = add_edge(add_vertices(prism(), 2), 6, 7)
        with self.assertRaises(SpecInvariantViolated):
            recognise_quasiquadratic(prism(), after, (6, 7))


class ReorderTests(unittest.TestCase):
    def setUp(self):
        self.b, self.rec_b = apply(prism(), CONSERVATIVE)

    def test_reorder_a_quadratic_step(self):
        _, rec_c = apply(self.b, Quasiquadratic(u=2, v=3, x=5, y=0))
        result = reorder(prism(), self.rec_b, rec_c)
        self.assertEqual(result.new_vertices, (6, 7))
        self.assertEqual(result.bprime.n, 8)
        self.assertTrue(is_brick(result.bprime))
        self.assertTrue(result.second.conservative)
        self.assertEqual((result.second.delta_n, result.second.delta_m), (2, 5))

    def test_second_step_must_avoid_new_vertices(self):
        _, rec_c = apply(self.b, Quasiquadratic(u=6, v=2, x=0, y=5))
        with self.assertRaises(FundamentConflict):
            reorder(prism(), self.rec_b, rec_c)

    def test_first_step_must_be_conservative(self):
        b, rec_b = apply(prism(), Quasiquadratic(u=0, v=3, x=1, y=4))
        _, rec_c = apply(b, Quasiquadratic(u=2, v=3, x=5, y=4))
        with self.assertRaises(PreconditionUnmet):
            reorder(prism(), rec_b, rec_c)

    def test_random_reorders(self):
        rng = random.Random(settings.SEED)
        for base in SWEEP_BASES:
            for _ in range(50 if settings.SLOW_TESTS else 6):
                rec_b, rec_c = random_reorder_triple(base, rng)
                result = reorder(base, rec_b, rec_c)
                self.assertTrue(result.second.is_conservative_quadratic, msg=repr(base))


class QuadOnQuadTests(unittest.TestCase):
    def test_second_step_must_touch_a_new_vertex(self):
        with self.assertRaises(FundamentMismatch):
            build_quadonquad(prism(), CONSERVATIVE, Quasiquadratic(u=2, v=3, x=5, y=0))

    def test_random_instances_are_not_minimal(self):
        rng = random.Random(settings.SEED)
        for base in SWEEP_BASES:
            for _ in range(25 if settings.SLOW_TESTS else 4):
                witness = random_quadonquad(base, rng)
                self.assertEqual(witness.route, CLAIMS)
                self.assertFalse(witness.minimality)
                self.assertTrue(witness.bicritical)
                self.assertTrue(witness.three_connected)
                self.assertTrue(witness.gpp.has_edge(*witness.edge))

    def test_new_vertex_pair_in_second_fundament_deletes_new_edge(self):
        witness = build_quadonquad(prism(), CONSERVATIVE, Quasiquadratic(u=2, v=3, x=6, y=7))
        self.assertEqual(witness.route, UPPER_VPRIME)
        self.assertFalse(witness.conditions["v'∉{s,t}"])
        self.assertEqual(witness.edge, (6, 7))
        self.assertFalse(witness.minimality)
        self.assertTrue(is_brick(delete_edge(witness.gpp, *witness.edge)))

    def test_old_x_in_second_fundament_deletes_x_edge(self):
        witness = build_quadonquad(prism(), CONSERVATIVE, Quasiquadratic(u=6, v=5, x=2, y=1))
        self.assertEqual(witness.route, UPPER_X)
        self.assertFalse(witness.conditions["x∉{s,t}"])
        self.assertEqual(witness.edge, (1, 6))
        self.assertFalse(witness.minimality)
        self.assertTrue(is_brick(delete_edge(witness.gpp, *witness.edge)))


if __name__ == "__main__":
    unittest.main()
