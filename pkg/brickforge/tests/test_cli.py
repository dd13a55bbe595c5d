import io
import os
import tempfile
import unittest
from contextlib import redirect_stderr

from brickforge.cli import EXIT_ERROR, EXIT_FAIL, EXIT_OK, build_parser, main
from brickforge.graphs.io import format_edgelist
from brickforge.graphs.named import complete_graph, cycle_graph, prism
from brickforge.sequences import format_sequence, triple_ladder_sequence


class CliTests(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)
        self.dir = self._tmp.name

    def _file(self, name: str, text: str) -> str:
        path = os.path.join(self.dir, name)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        return path

    def _run(self, *argv: str):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stderr(err):
            code = main(["--log-level", "warning", *argv], out=out)
        return code, out.getvalue(), err.getvalue()

    def test_check(self):
        k4 = self._file("k4.el", format_edgelist(complete_graph(4)))
        self.assertEqual(self._run("check", k4)[:2], (EXIT_OK, "brick: yes, minimal: yes\n"))

        c6 = self._file("c6.el", format_edgelist(cycle_graph(6)))
        self.assertEqual(self._run("check", c6)[:2], (EXIT_FAIL, "brick: no (CutPair(0, 2))\n"))

        k6 = self._file("k6.el", format_edgelist(complete_graph(6)))
        code, out, _ = self._run("check", k6)
        self.assertEqual((code, out), (EXIT_OK, "brick: yes, minimal: no (DeletableEdge(0, 1))\n"))
        self.assertEqual(self._run("check", k6, "--minimal")[0], EXIT_FAIL)

    def test_check_graph6(self):
        path = self._file("k4.g6", "C~\n")
        self.assertEqual(self._run("check", path, "--format", "graph6")[0], EXIT_OK)

    def test_extend(self):
        path = self._file("prism.el", format_edgelist(prism()))
        code, out, _ = self._run("extend", path, "--spec", "QQUAD u=0 v=4 x=1 y=3")
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(
            lines[:7],
            [
                "variant=QQUAD",
                "fundament=0,1,3,4",
                "new_vertices=6,7",
                "delta_n=2",
                "delta_m=5",
                "conservative=yes",
                "brick: yes",
            ],
        )
        self.assertEqual(lines[7], "8 14")

    def test_extend_to_file(self):
        path = self._file("prism.el", format_edgelist(prism()))
        target = os.path.join(self.dir, "out.el")
        code, out, _ = self._run("extend", path, "--spec", "QQUAD u=0 v=3 x=1 y=4", "--output", target)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("conservative=no", out)
        with open(target, encoding="ascii") as handle:
            self.assertEqual(handle.readline(), "8 13\n")

    def test_invalid_spec_is_an_error(self):
        path = self._file("prism.el", format_edgelist(prism()))
        code, _, err = self._run("extend", path, "--spec", "QQUAD u=0 v=3 x=0 y=4")
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("u≠x", err)

    def test_missing_file_is_an_error(self):
        code, _, err = self._run("stats", os.path.join(self.dir, "missing.el"))
        self.assertEqual(code, EXIT_ERROR)
        self.assertTrue(err.startswith("error:"))

    def test_stats(self):
        path = self._file("prism.el", format_edgelist(prism()))
        code, out, _ = self._run("stats", path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(
            out.splitlines(),
            ["n=6", "m=9", "avg_degree=3", "n_deg3=6", "n_deg_le4=6", "degree_3=6"],
        )

    def test_sequence(self):
        text = format_sequence(triple_ladder_sequence(1))
        path = self._file("ladder.seq", "start K4\n---\n" + text)
        code, out, _ = self._run("sequence", path)
        self.assertEqual(code, EXIT_OK)
        blocks = out.split("---\n")
        self.assertEqual(len(blocks), 2)
        self.assertTrue(blocks[0].startswith("start=K4 steps=0 n=4 m=6\n"))
        self.assertTrue(blocks[1].startswith("start=PRISM steps=2 n=12 m=20\n"))
        self.assertIn("identity n=nu0+nu1+nu2+nu3: 12=6+0+2+4 yes\n", blocks[1])
        self.assertTrue(blocks[1].endswith("minimal: yes\n"))

    def test_generate(self):
        code, out, _ = self._run("generate", "--max-n", "4", "--jobs", "1")
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], "C~")
        self.assertIn("# max_n=4", lines)
        self.assertIn("# n=4 count=1", lines)

    def test_generate_with_profile_and_output(self):
        profile = self._file("p.json", '{"profile_id": "tiny", "max_n": 4, "jobs": 1}')
        target = os.path.join(self.dir, "out")
        code, _, _ = self._run("generate", "--profile", profile, "--output-dir", target)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(os.path.exists(os.path.join(target, "tiny.g6")))

    def test_generate_needs_an_order(self):
        code, _, err = self._run("generate")
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("--max-n", err)

    def test_verify(self):
        corpus = os.path.join(self.dir, "corpus")
        os.mkdir(corpus)
        with open(os.path.join(corpus, "k4.el"), "w", encoding="ascii") as handle:
            handle.write(format_edgelist(complete_graph(4)))
        csv_path = os.path.join(self.dir, "rows.csv")
        code, out, _ = self._run("verify", "--dir", corpus, "--csv", csv_path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("checked=1\n", out)
        self.assertIn("violations=0\n", out)
        with open(csv_path, encoding="utf-8") as handle:
            self.assertTrue(handle.readline().startswith("graph_id,"))

    def test_sweep(self):
        code, out, _ = self._run(
            "sweep", "--lemma", "reorder", "--count", "3", "--seed", "1", "--graphs", "Prism"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "lemma=reorder instances=3 failures=0\n")

    def test_parser_requires_a_command(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                build_parser().parse_args([])


if __name__ == "__main__":
    unittest.main()
