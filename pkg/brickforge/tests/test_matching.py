import random
import unittest
from itertools import combinations

import networkx as nx
from hypothesis import given, settings as hypothesis_settings

from brickforge.config import settings
from brickforge.exceptions import SameVertex, TooLarge
from brickforge.graphs import Graph, delete_vertex
from brickforge.graphs.io import to_networkx
from brickforge.graphs.named import complete_bipartite, complete_graph, cycle_graph, petersen, prism
from brickforge.matching import (
    brute_force_pm,
    has_perfect_matching,
    has_pm_avoiding,
    maximum_matching,
    perfect_matching,
)
from brickforge.tests.strategies import graphs


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if rng.random() < p))


class MatchingEngineTests(unittest.TestCase):
    def test_known_graphs(self):
        self.assertTrue(has_perfect_matching(complete_graph(4)))
        self.assertTrue(has_perfect_matching(petersen()))
        self.assertFalse(has_perfect_matching(complete_graph(3)))
        self.assertFalse(has_perfect_matching(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])))

    def test_perfect_matching_is_valid(self):
        matching = perfect_matching(prism())
        self.assertIsNotNone(matching)
        self.assertTrue(matching.is_perfect(prism()))

    def test_excluded_vertices(self):
        # C6 minus two vertices of the same colour class is unbalanced
        self.assertFalse(has_perfect_matching(cycle_graph(6), excluded={0, 2}))
        self.assertTrue(has_perfect_matching(cycle_graph(6), excluded={0, 1}))

    def test_avoiding_an_edge(self):
        # in K4 - {2, 3} the only matching of {0, 1} is the edge 01
        self.assertFalse(has_pm_avoiding(complete_graph(4), (0, 1), (2, 3)))
        self.assertTrue(has_pm_avoiding(complete_graph(4), (0, 1), (1, 2)))
        self.assertTrue(has_pm_avoiding(prism(), (0, 1), (2, 5)))
        with self.assertRaises(SameVertex):
            has_pm_avoiding(prism(), (0, 1), (2, 2))

    def test_maximum_matching_on_petersen_minus_vertex(self):
        g, _ = delete_vertex(petersen(), 0)
        self.assertEqual(len(maximum_matching(g)), 4)
        self.assertEqual(len(maximum_matching(complete_bipartite(2, 5))), 2)

    def test_oracle_refuses_large_graphs(self):
        with self.assertRaises(TooLarge):
            brute_force_pm(complete_graph(18))


class MatchingOracleTests(unittest.TestCase):
    def test_all_labelled_graphs_up_to_six(self):
        for n in range(1, 7):
            pairs = list(combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                g = Graph.from_edges(n, (pair for bit, pair in enumerate(pairs) if mask >> bit & 1))
                self.assertEqual(has_perfect_matching(g), brute_force_pm(g), msg=f"n={n} mask={mask}")

    def test_random_graphs_up_to_twelve(self):
        rng = random.Random(settings.SEED)
        count = 10_000 if settings.SLOW_TESTS else 1_000
        for _ in range(count):
            n = rng.randint(1, 12)
            g = _random_graph(rng, n, rng.choice((0.2, 0.35, 0.5)))
            self.assertEqual(has_perfect_matching(g), brute_force_pm(g), msg=str(sorted(g.edges())))

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(graphs(max_n=9))
    def test_maximum_matching_size_matches_networkx(self, g):
        expected = len(nx.max_weight_matching(to_networkx(g), maxcardinality=True))
        matching = maximum_matching(g)
        self.assertTrue(matching.is_valid(g))
        self.assertEqual(len(matching), expected)


if __name__ == "__main__":
    unittest.main()
