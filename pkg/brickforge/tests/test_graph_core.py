import unittest

import networkx as nx
from hypothesis import given

from brickforge.canonical import is_isomorphic
from brickforge.exceptions import (
    BadParameter,
    DuplicateEdge,
    GraphError,
    LoopEdge,
    MissingEdge,
    MissingVertex,
)
from brickforge.graphs import (
    Graph,
    GraphValidator,
    add_edge,
    delete_edge,
    delete_vertex,
    delete_vertices,
    is_connected,
    named_graph,
    relabel,
)
from brickforge.graphs.io import to_networkx
from brickforge.graphs.named import complete_graph, path_graph, petersen, prism, wheel
from brickforge.graphs.validator import assert_valid
from brickforge.tests.strategies import graphs


class GraphEditTests(unittest.TestCase):
    def test_add_edge_closes_a_path(self):
        triangle = add_edge(path_graph(3), 0, 2)
        self.assertEqual(triangle.m, 3)
        self.assertEqual(triangle.degrees(), [2, 2, 2])

    def test_add_edge_to_empty_graph(self):
        k2 = add_edge(Graph.empty(2), 0, 1)
        self.assertEqual(list(k2.edges()), [(0, 1)])

    def test_add_edge_rejects_duplicates_and_loops(self):
        with self.assertRaises(DuplicateEdge):
            add_edge(complete_graph(4), 0, 1)
        with self.assertRaises(LoopEdge):
            add_edge(Graph.empty(3), 1, 1)
        with self.assertRaises(MissingVertex):
            add_edge(Graph.empty(3), 0, 3)

    def test_delete_edge(self):
        g = delete_edge(complete_graph(4), 0, 1)
        self.assertEqual((g.n, g.m), (4, 5))
        with self.assertRaises(MissingEdge):
            delete_edge(g, 1, 0)

    def test_delete_vertex_of_k4_leaves_a_triangle(self):
        g, remap = delete_vertex(complete_graph(4), 3)
        self.assertEqual((g.n, g.m), (3, 3))
        self.assertEqual(remap, {0: 0, 1: 1, 2: 2})

    def test_delete_vertex_of_prism(self):
        for v in prism().vertices():
            g, _ = delete_vertex(prism(), v)
            self.assertEqual(g.n, 5)
            self.assertEqual(sorted(g.degrees()), [2, 2, 2, 3, 3])

    def test_delete_vertices_compacts_ids(self):
        g, remap = delete_vertices(prism(), [0, 3])
        self.assertEqual(remap, {1: 0, 2: 1, 4: 2, 5: 3})
        self.assertEqual(sorted(g.edges()), [(0, 1), (0, 2), (1, 3), (2, 3)])

    def test_delete_missing_vertex(self):
        with self.assertRaises(MissingVertex):
            delete_vertex(complete_graph(4), 9)

    def test_relabel_preserves_isomorphism_class(self):
        g = relabel(prism(), [5, 3, 1, 0, 2, 4])
        self.assertEqual(g.m, 9)
        self.assertTrue(is_isomorphic(g, prism()))


class NamedGraphTests(unittest.TestCase):
    def test_published_parameters(self):
        self.assertEqual((named_graph("K4").n, named_graph("K4").m), (4, 6))
        self.assertEqual((named_graph("Prism").n, named_graph("Prism").m), (6, 9))
        g = named_graph("Petersen")
        self.assertEqual((g.n, g.m), (10, 15))
        self.assertEqual(set(g.degrees()), {3})

    def test_petersen_has_girth_five(self):
        g = petersen()
        for u in g.vertices():
            for v in g.vertices():
                if u >= v:
                    continue
                common = g.neighbor_set(u) & g.neighbor_set(v)
                # no triangle, and two non-adjacent vertices share exactly one neighbour
                self.assertEqual(len(common), 0 if g.has_edge(u, v) else 1)

    def test_wheel_convention(self):
        self.assertTrue(is_isomorphic(wheel(4), complete_graph(4)))
        w6 = named_graph("Wheel(6)")
        self.assertEqual((w6.n, w6.m), (6, 10))
        self.assertEqual(max(w6.degrees()), 5)
        with self.assertRaises(BadParameter):
            wheel(3)

    def test_ladders_follow_their_recipes(self):
        self.assertEqual(named_graph("TripleLadder", 1).n, 12)
        self.assertEqual(named_graph("TripleLadder").n, 30)
        self.assertEqual(named_graph("LadderPlus(4)").n, 42)
        with self.assertRaises(BadParameter):
            named_graph("TripleLadder", 0)

    def test_unknown_name(self):
        with self.assertRaises(BadParameter):
            named_graph("Dodecahedron")
        with self.assertRaises(BadParameter):
            named_graph("Wheel")


class GraphValidatorTests(unittest.TestCase):
    def test_accepts_named_graphs(self):
        for g in (complete_graph(4), prism(), petersen(), wheel(8)):
            self.assertEqual(GraphValidator(require_even=True, min_degree=3).validate(g), [])

    def test_reports_asymmetric_rows(self):
        broken = Graph(((1,), ()))
        issues = GraphValidator().validate(broken)
        paths = {issue.path for issue in issues}
        self.assertIn("adjacency[0]", paths)
        self.assertIn("m", paths)

    def test_reports_odd_order_and_low_degree(self):
        issues = GraphValidator(require_even=True, min_degree=3).validate(path_graph(3))
        messages = [issue.message for issue in issues]
        self.assertIn("odd order 3", messages)
        self.assertTrue(any(message.startswith("degree 1") for message in messages))

    def test_from_sets_rejects_asymmetry(self):
        with self.assertRaises(GraphError):
            Graph.from_sets([{1}, set()])

    @given(graphs())
    def test_random_graphs_are_simple_and_symmetric(self, g):
        assert_valid(g)
        self.assertEqual(2 * g.m, sum(g.degrees()))
        self.assertEqual(to_networkx(g).number_of_edges(), g.m)

    @given(graphs(min_n=3))
    def test_connectivity_matches_networkx(self, g):
        self.assertEqual(is_connected(g), nx.is_connected(to_networkx(g)))


if __name__ == "__main__":
    unittest.main()
