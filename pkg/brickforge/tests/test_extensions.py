import unittest
from dataclasses import replace
from fractions import Fraction

from hypothesis import assume, given, settings as hypothesis_settings
from hypothesis import strategies as st

from brickforge.bricks import is_brick
from brickforge.config import settings
from brickforge.exceptions import (
    BadPartition,
    DegreeTooLow,
    GraphParseError,
    NeighborChoiceInfeasible,
    SpecInvariantViolated,
)
from brickforge.extensions import (
    VARIANT_TABLE,
    BisplitSpec,
    ExtensionRegistry,
    Quasiquadratic,
    Quasiquartic,
    StrictLinear1,
    StrictLinear3,
    Variant,
    apply,
    bisplit,
    check_record_properties,
    enumerate_specs,
    format_spec,
    is_induced_subgraph,
    parse_spec,
    partitions,
    registry,
)
from brickforge.graphs.named import complete_graph, prism, wheel
from brickforge.sequences import triple_ladder_sequence
from brickforge.tests.strategies import generated_bricks, small_bricks


def _prism_plus_quadratic():
    return apply(prism(), Quasiquadratic(u=0, v=3, x=1, y=4))


class QuasiquadraticTests(unittest.TestCase):
    def test_on_a_rung_gives_an_eight_vertex_brick(self):
        g, record = _prism_plus_quadratic()
        self.assertEqual((g.n, g.m), (8, 13))
        self.assertTrue(is_brick(g))
        self.assertFalse(record.conservative)
        self.assertEqual(record.deleted_edges, ((0, 3),))
        self.assertEqual(record.new_vertices, (6, 7))
        self.assertEqual(record.fundament, frozenset({0, 1, 3, 4}))

    def test_conservative_step_keeps_the_graph_induced(self):
        g, record = apply(prism(), Quasiquadratic(u=0, v=4, x=1, y=3))
        self.assertTrue(record.is_conservative_quadratic)
        self.assertEqual((record.delta_n, record.delta_m), (2, 5))
        self.assertTrue(is_induced_subgraph(prism(), g))

    def test_u_equal_x_names_the_clause(self):
        with self.assertRaises(SpecInvariantViolated) as ctx:
            apply(prism(), Quasiquadratic(u=0, v=3, x=0, y=4))
        self.assertEqual(ctx.exception.clause, "u≠x")
        self.assertIn("u≠x", str(ctx.exception))

    def test_identifications_are_reported(self):
        _, record = apply(prism(), Quasiquadratic(u=0, v=4, x=1, y=1))
        self.assertEqual(record.identifications, ("x=y",))
        _, record = apply(prism(), Quasiquartic(u=0, v=4, x=0, y=5))
        self.assertEqual(record.identifications, ("u=x",))

    def test_disputed_quartic_identification_is_rejected(self):
        with self.assertRaises(SpecInvariantViolated) as ctx:
            apply(prism(), Quasiquartic(u=0, v=4, x=1, y=0))
        self.assertEqual(ctx.exception.clause, "u≠y")

    def test_vertex_out_of_range(self):
        with self.assertRaises(SpecInvariantViolated) as ctx:
            apply(prism(), Quasiquadratic(u=0, v=9, x=1, y=4))
        self.assertEqual(ctx.exception.clause, "v∈V(G)")


class BisplitTests(unittest.TestCase):
    def test_bisplit_keeps_the_id_of_v(self):
        g, inner, (v1, v2) = bisplit(wheel(6), BisplitSpec(5, {0, 1}, {2, 3, 4}))
        self.assertEqual((g.n, inner, v1, v2), (8, 7, 5, 6))
        self.assertEqual(g.neighbor_set(5), frozenset({0, 1, 7}))
        self.assertEqual(g.neighbor_set(6), frozenset({2, 3, 4, 7}))
        self.assertEqual(g.degree(inner), 2)

    def test_cubic_vertex_cannot_be_split(self):
        spec = StrictLinear1(BisplitSpec(0, {1, 2}, {3, 4}), u0=5)
        with self.assertRaises(DegreeTooLow):
            apply(prism(), spec)

    def test_partition_must_cover_the_neighbourhood(self):
        with self.assertRaises(BadPartition):
            bisplit(wheel(6), BisplitSpec(5, {0, 1}, {2}))
        with self.assertRaises(BadPartition):
            bisplit(wheel(6), BisplitSpec(5, {0, 1}, {2, 3}))
        with self.assertRaises(BadPartition):
            bisplit(wheel(6), BisplitSpec(5, {0, 1, 2}, {2, 3, 4}))


class StrictLinearTests(unittest.TestCase):
    def test_strict_linear_1_attains_ratio_three(self):
        g, _ = _prism_plus_quadratic()
        spec = StrictLinear1(BisplitSpec(1, {0, 2}, {4, 6}), u0=3)
        extended, record = apply(g, spec)
        self.assertEqual(len(record.fundament), 3 * record.delta_n)
        self.assertEqual(record.fundament, frozenset({0, 1, 2, 3, 4, 6}))
        self.assertEqual(record.spec.choices, (0, 2, 4, 6))
        self.assertEqual(record.new_vertices, (8, 9))
        self.assertTrue(is_brick(extended))

    def test_u0_must_not_be_adjacent(self):
        g, _ = _prism_plus_quadratic()
        with self.assertRaises(SpecInvariantViolated) as ctx:
            apply(g, StrictLinear1(BisplitSpec(1, {0, 2}, {4, 6}), u0=0))
        self.assertEqual(ctx.exception.clause, "u0≁v")

    def test_explicit_choices_must_come_from_their_side(self):
        g, _ = _prism_plus_quadratic()
        spec = StrictLinear1(BisplitSpec(1, {0, 2}, {4, 6}), u0=3, choices=(0, 2, 4, 5))
        with self.assertRaises(NeighborChoiceInfeasible):
            apply(g, spec)

    def test_strict_linear_3_on_the_wheel_hub(self):
        spec = StrictLinear3(BisplitSpec(7, {0, 1, 2}, {3, 4, 5, 6}), p1={0})
        g, record = apply(wheel(8), spec)
        self.assertEqual((g.n, g.m), (12, 19))
        self.assertEqual(record.fundament, frozenset({0, 1, 2, 3, 4, 7}))
        self.assertTrue(is_brick(g))

    def test_every_variant_matches_the_delta_table(self):
        hosts = {
            Variant.STRICT_LINEAR_1: triple_ladder_sequence(1).final,
            Variant.STRICT_LINEAR_2: triple_ladder_sequence(1).final,
            Variant.STRICT_LINEAR_3: wheel(8),
            Variant.BILINEAR: wheel(8),
            Variant.PSEUDOLINEAR: triple_ladder_sequence(1).final,
            Variant.QUASIQUADRATIC: prism(),
            Variant.QUASIQUARTIC: prism(),
        }
        for variant, host in hosts.items():
            spec = next(enumerate_specs(host, [variant]))
            g, record = apply(host, spec)
            info = VARIANT_TABLE[variant]
            self.assertEqual(record.delta_n, info.delta_n, msg=variant)
            self.assertLessEqual(len(record.fundament), info.max_fundament, msg=variant)
            self.assertEqual(check_record_properties(host, g, record), [])
            self.assertTrue(is_brick(g), msg=format_spec(spec))


class PropertyTests(unittest.TestCase):
    def test_fundament_ratios(self):
        self.assertEqual(VARIANT_TABLE[Variant.STRICT_LINEAR_1].fundament_ratio, 3)
        self.assertEqual(VARIANT_TABLE[Variant.STRICT_LINEAR_2].fundament_ratio, Fraction(5, 2))
        self.assertEqual(VARIANT_TABLE[Variant.QUASIQUARTIC].fundament_ratio, 1)
        for info in VARIANT_TABLE.values():
            self.assertLessEqual(info.fundament_ratio, 3)

    def test_tampered_record_is_caught(self):
        g, record = _prism_plus_quadratic()
        issues = check_record_properties(prism(), g, replace(record, delta_m=99))
        self.assertEqual([issue.name for issue in issues], ["delta_m"])
        issues = check_record_properties(prism(), g, replace(record, fundament=frozenset({0, 3})))
        self.assertIn("degree", [issue.name for issue in issues])

    @hypothesis_settings(max_examples=500 if settings.SLOW_TESTS else 60, deadline=None)
    @given(small_bricks(), st.data())
    def test_strict_extensions_of_bricks_are_bricks(self, g, data):
        specs = list(enumerate_specs(g, reduced=True))
        spec = data.draw(st.sampled_from(specs))
        extended, record = apply(g, spec)
        self.assertTrue(is_brick(extended), msg=format_spec(spec))
        self.assertEqual(extended.n % 2, 0)
        self.assertLessEqual(len(record.fundament), 3 * record.delta_n)
        for v in g.vertices():
            if v not in record.fundament:
                self.assertEqual(g.degree(v), extended.degree(v))

    @hypothesis_settings(max_examples=300 if settings.SLOW_TESTS else 40, deadline=None)
    @given(generated_bricks(), st.data())
    def test_any_spec_on_a_generated_brick_gives_a_brick(self, g, data):
        specs = list(enumerate_specs(g))
        assume(specs)
        spec = data.draw(st.sampled_from(specs))
        extended, record = apply(g, spec)
        self.assertTrue(is_brick(extended), msg=f"{format_spec(spec)} on {g!r}")
        self.assertEqual(check_record_properties(g, extended, record), [])


class EnumerationTests(unittest.TestCase):
    def test_k4_admits_only_quasi_extensions(self):
        variants = {spec.variant for spec in enumerate_specs(complete_graph(4))}
        self.assertEqual(variants, {Variant.QUASIQUADRATIC, Variant.QUASIQUARTIC})

    def test_quadratic_counts_on_k4(self):
        quadratic = [Variant.QUASIQUADRATIC]
        self.assertEqual(len(list(enumerate_specs(complete_graph(4), quadratic))), 96)
        self.assertEqual(len(list(enumerate_specs(complete_graph(4), quadratic, reduced=True))), 48)

    def test_partitions(self):
        self.assertEqual(len(list(partitions([1, 2, 3, 4]))), 3)
        self.assertEqual(len(list(partitions([1, 2, 3, 4], symmetric=False))), 6)
        self.assertEqual(len(list(partitions(range(5)))), 10)
        for n1, n2 in partitions(range(6)):
            self.assertGreaterEqual(min(len(n1), len(n2)), 2)
            self.assertIn(0, n1)

    def test_enumeration_is_deterministic(self):
        host = triple_ladder_sequence(1).final
        self.assertEqual(list(enumerate_specs(host)), list(enumerate_specs(host)))


class SpecCodecTests(unittest.TestCase):
    def test_parse_quadratic(self):
        self.assertEqual(parse_spec("QQUAD u=0 v=3 x=1 y=4"), Quasiquadratic(0, 3, 1, 4))
        self.assertEqual(format_spec(Quasiquadratic(0, 3, 1, 4)), "QQUAD u=0 v=3 x=1 y=4")

    def test_choices_survive_formatting(self):
        spec = StrictLinear1(BisplitSpec(1, {2, 0}, {6, 4}), u0=3, choices=(2, 0, 4, 6))
        text = format_spec(spec)
        self.assertEqual(text, "SL1 v=1 n1=0,2 n2=4,6 u0=3 choices=2,0,4,6")
        self.assertEqual(parse_spec(text), spec)

    def test_errors_carry_positions(self):
        with self.assertRaises(GraphParseError) as ctx:
            parse_spec("FOO u=1", line=7)
        self.assertEqual((ctx.exception.line, ctx.exception.position), (7, 0))
        with self.assertRaises(GraphParseError) as ctx:
            parse_spec("QQUAD u=0 v=a x=1 y=4")
        self.assertEqual(ctx.exception.position, 12)
        with self.assertRaises(GraphParseError) as ctx:
            parse_spec("QQUAD u=0 v=3 x=1 y=4 choices=1")
        self.assertEqual(ctx.exception.position, 22)
        with self.assertRaises(GraphParseError) as ctx:
            parse_spec("QQUAD u=0 v=3 x=1")
        self.assertIn("missing y", str(ctx.exception))


class RegistryTests(unittest.TestCase):
    def test_every_variant_is_registered(self):
        self.assertEqual(registry.variants(), tuple(Variant))

    def test_duplicate_registration(self):
        local = ExtensionRegistry()
        local.register(Variant.QUASIQUADRATIC, lambda g, spec: None)
        with self.assertRaises(ValueError):
            local.register(Variant.QUASIQUADRATIC, lambda g, spec: None)
        with self.assertRaises(KeyError):
            local.get(Variant.QUASIQUARTIC)
        with self.assertRaises(ValueError):
            local.register("QQUART", lambda g, spec: None)


if __name__ == "__main__":
    unittest.main()
