"""
End-to-end tests for the unidist command line.
"""

import sys
import os
import json
import tempfile
import unittest

# Add parent dir to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from click.testing import CliRunner

from app.main import cli
from app.runner import EXIT_INVALID_INPUT, EXIT_NOT_UNIGRAPH, EXIT_OK, EXIT_TOO_LARGE, run
from app.schemas.cli_schema import CliConfig
from core.decomposition import DecompositionResult, SplitComponent, TailComponent, recompose_sequence
from core.degseq import DegreeSequence, PairedDegreeSequence
from processing.text_parser import parse_degree_sequence_text

EXAMPLE = "16^3,12^4,9^5,5^2,3,2,1^4"


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self.runner = CliRunner()
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def invoke(self, *args, input=None):
        return self.runner.invoke(cli, list(args), input=input)

    def write_edges(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path


class TestAnalysisCommands(CliTestCase):
    """Tests for dist, decompose, classify and iso."""

    def test_dist(self):
        result = self.invoke("dist", "--degseq", EXAMPLE)
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        self.assertEqual(result.stdout.strip(), "3")
        print("✓ dist prints the distinguishing number")

    def test_dist_json(self):
        result = self.invoke("dist", "--degseq", EXAMPLE, "--json")
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        payload = json.loads(result.stdout)
        self.assertEqual(payload["dist"], 3)
        self.assertTrue(payload["unigraph"])
        self.assertEqual([c["kind"] for c in payload["components"]], ["S3(1,2,1)", "S1", "S(2,2)", "C5"])

    def test_paired_input_is_accepted(self):
        result = self.invoke("dist", "--degseq", "3^3;1^3")
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        self.assertEqual(result.stdout.strip(), "2")

    def test_not_a_unigraph(self):
        result = self.invoke("dist", "--degseq", "2^3,1^2")
        self.assertEqual(result.exit_code, EXIT_NOT_UNIGRAPH)
        self.assertIn("not a unigraph", result.output)

    def test_invalid_input(self):
        self.assertEqual(self.invoke("dist", "--degseq", "3,3").exit_code, EXIT_INVALID_INPUT)
        self.assertEqual(self.invoke("dist").exit_code, EXIT_INVALID_INPUT)
        path = self.write_edges("g.txt", "2\n0 1\n")
        self.assertEqual(self.invoke("dist", "--degseq", "1^2", "--edges", path).exit_code, EXIT_INVALID_INPUT)
        self.assertEqual(self.invoke("dist", "--edges", "/nonexistent/graph.txt").exit_code, EXIT_INVALID_INPUT)

    def test_unreadable_edge_text_is_invalid_input(self):
        path = os.path.join(self.tmp.name, "latin1.txt")
        with open(path, "wb") as f:
            f.write(b"2\n0 1 # caf\xe9\n")
        result = self.invoke("dist", "--edges", path)
        self.assertEqual(result.exit_code, EXIT_INVALID_INPUT)
        self.assertIn("UTF-8", result.output)
        superscript = self.invoke("dist", "--edges", "-", input="2\n0 ²\n")
        self.assertEqual(superscript.exit_code, EXIT_INVALID_INPUT)
        self.assertIn("line 2", superscript.output)

    def test_threshold(self):
        result = self.invoke("dist", "--threshold", "--degseq", "1^2,0^4")
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        self.assertEqual(result.stdout.strip(), "4")
        self.assertEqual(self.invoke("dist", "--threshold", "--degseq", "2^5").exit_code, EXIT_NOT_UNIGRAPH)

    def test_decompose(self):
        result = self.invoke("decompose", "--degseq", "1^2,0^4")
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        lines = result.stdout.strip().splitlines()
        self.assertTrue(lines[0].startswith("canonical"))
        self.assertIn("compact:", lines)
        self.assertEqual(lines[-1], "dist 4")

    def test_decompose_non_unigraph_still_succeeds(self):
        result = self.invoke("decompose", "--degseq", "2^3,1^2", "--compact", "--json")
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        payload = json.loads(result.stdout)
        self.assertFalse(payload["unigraph"])
        self.assertIsNone(payload["canonical"])
        self.assertIsNone(payload["dist"])

    def test_classify(self):
        result = self.invoke("classify", "--degseq", "2^5")
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        lines = result.stdout.strip().splitlines()
        self.assertTrue(lines[0].startswith("C5"))
        self.assertIn("identity", lines[0])
        self.assertEqual(lines[-1], "dist 3")

    def test_iso(self):
        same = self.invoke("iso", "--degseq", "2,1^4", "--other-degseq", "2,1^4")
        self.assertEqual(same.stdout.strip(), "isomorphic")
        different = self.invoke("iso", "--degseq", "2,1^4", "--other-degseq", "2^5")
        self.assertEqual(different.stdout.strip(), "not isomorphic")
        self.assertEqual(self.invoke("iso", "--degseq", "2^5").exit_code, EXIT_INVALID_INPUT)


class TestOutputConsistency(CliTestCase):
    """JSON components rebuild the input, and text mode reports the same numbers."""

    INPUTS = [EXAMPLE, "5^2,2^4", "2^5", "3^3;1^3", "1^2,0^4", "8^2,4^5,1^4", "2^3,1^2"]

    @staticmethod
    def rebuild(reports):
        components = []
        for r in reports:
            if r["paired"]:
                components.append(SplitComponent(PairedDegreeSequence(r["k_part"], r["s_part"])))
            else:
                components.append(TailComponent(DegreeSequence(r["seq"])))
        return DecompositionResult(tuple(components))

    @staticmethod
    def expected_sequence(text):
        parsed = parse_degree_sequence_text(text)
        return parsed.flatten() if isinstance(parsed, PairedDegreeSequence) else parsed

    def test_json_components_recompose_to_input(self):
        for text in self.INPUTS:
            target = self.expected_sequence(text)
            payload = json.loads(self.invoke("decompose", "--degseq", text, "--json").stdout)
            self.assertEqual(recompose_sequence(self.rebuild(payload["canonical"])), target, text)
            self.assertEqual(recompose_sequence(self.rebuild(payload["components"])), target, text)
            classified = self.invoke("classify", "--degseq", text, "--json")
            if not payload["unigraph"]:
                self.assertEqual(classified.exit_code, EXIT_NOT_UNIGRAPH, text)
                continue
            components = json.loads(classified.stdout)["components"]
            self.assertEqual(recompose_sequence(self.rebuild(components)), target, text)
        print("✓ printed components recompose to the input")

    def test_text_and_json_agree(self):
        for text in self.INPUTS:
            decomposed_json = json.loads(self.invoke("decompose", "--degseq", text, "--json").stdout)
            decomposed_text = self.invoke("decompose", "--degseq", text, "--compact").stdout.strip().splitlines()
            compact_text = [line.strip() for line in decomposed_text[1:-1]]
            self.assertEqual(compact_text, [str(c) for c in self.rebuild(decomposed_json["components"]).components], text)
            if not decomposed_json["unigraph"]:
                self.assertEqual(decomposed_text[-1], "not a unigraph")
                continue
            self.assertEqual(decomposed_text[-1], f"dist {decomposed_json['dist']}", text)

            dist_json = json.loads(self.invoke("dist", "--degseq", text, "--json").stdout)
            self.assertEqual(self.invoke("dist", "--degseq", text).stdout.strip(), str(dist_json["dist"]), text)
            self.assertEqual(dist_json["dist"], decomposed_json["dist"], text)

            classify_json = json.loads(self.invoke("classify", "--degseq", text, "--json").stdout)
            classify_text = self.invoke("classify", "--degseq", text).stdout.strip().splitlines()
            self.assertEqual(classify_text[-1], f"dist {classify_json['dist']}", text)
            rows = [line.split() for line in classify_text[:-1]]
            self.assertEqual([row[0] for row in rows], [c["kind"] for c in classify_json["components"]], text)
            self.assertEqual([row[1] for row in rows], [c["relative"] for c in classify_json["components"]], text)
            self.assertEqual([row[2] for row in rows], [f"D={c['dist']}" for c in classify_json["components"]], text)

    def test_threshold_text_and_json_agree(self):
        for text in ("5^2,2^4", "1^2,0^4", "3^4"):
            payload = json.loads(self.invoke("dist", "--threshold", "--degseq", text, "--json").stdout)
            self.assertEqual(self.invoke("dist", "--threshold", "--degseq", text).stdout.strip(), str(payload["dist"]))


class TestToolCommands(CliTestCase):
    """Tests for gen and bench, including piping gen into dist."""

    def test_gen_into_dist(self):
        for args, expected in ((["c5"], "3"), (["mk2", "3"], "3"), (["s", "2", "2"], "2")):
            generated = self.invoke("gen", *args)
            self.assertEqual(generated.exit_code, EXIT_OK, generated.output)
            result = self.invoke("dist", "--edges", "-", input=generated.stdout)
            self.assertEqual(result.stdout.strip(), expected, args)
        print("✓ generated graphs round trip through dist")

    def test_gen_relative(self):
        generated = self.invoke("gen", "s3", "1", "2", "1", "--relative", "complement_inverse")
        self.assertEqual(generated.exit_code, EXIT_OK, generated.output)
        path = self.write_edges("s3.txt", generated.stdout)
        result = self.invoke("classify", "--edges", path)
        self.assertIn("S3(1,2,1)", result.stdout)
        self.assertIn("complement_inverse", result.stdout)

    def test_gen_random_is_seeded(self):
        first = self.invoke("gen", "random-unigraph", "3", "9", "--seed", "4")
        second = self.invoke("gen", "random-unigraph", "3", "9", "--seed", "4")
        self.assertEqual(first.exit_code, EXIT_OK, first.output)
        self.assertEqual(first.stdout, second.stdout)
        self.assertEqual(self.invoke("dist", "--edges", "-", input=first.stdout).exit_code, EXIT_OK)

    def test_gen_rejects_bad_family(self):
        self.assertEqual(self.invoke("gen", "petersen").exit_code, EXIT_INVALID_INPUT)
        self.assertEqual(self.invoke("gen", "s", "1", "1").exit_code, EXIT_INVALID_INPUT)
        self.assertEqual(self.invoke("gen", "s", "1").exit_code, EXIT_INVALID_INPUT)

    def test_bench(self):
        result = self.invoke("bench", "--sizes", "50,100", "--repeats", "1")
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        lines = result.stdout.strip().splitlines()
        self.assertEqual([line.split("\t")[0] for line in lines], ["50", "100"])


class TestOracleCommands(CliTestCase):
    """Tests for the brute-force oracle subcommands."""

    P4 = "4\n0 1\n1 2\n2 3\n"

    def test_oracle_dist_json(self):
        path = self.write_edges("c5.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
        result = self.invoke("oracle", "dist", "--edges", path, "--json")
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        payload = json.loads(result.stdout)
        self.assertEqual((payload["action"], payload["n"], payload["result"]), ("dist", 5, 3))
        self.assertEqual(len(payload["witness"]), 5)

    def test_oracle_count_and_aut(self):
        path = self.write_edges("p4.txt", self.P4)
        count = self.invoke("oracle", "count", "--edges", path, "--colors", "2")
        self.assertEqual(count.stdout.strip(), "6")
        aut = self.invoke("oracle", "aut", "--edges", path)
        self.assertEqual(aut.stdout.splitlines()[0], "|Aut| = 2")

    def test_oracle_split_and_iso(self):
        path = self.write_edges("p4.txt", self.P4)
        split = self.invoke("oracle", "split", "--edges", path)
        self.assertEqual(split.stdout.splitlines()[0], "split")
        other = self.write_edges("p4b.txt", "4\n3 1\n1 0\n0 2\n")
        iso = self.invoke("oracle", "iso", "--edges", path, "--other-edges", other)
        self.assertEqual(iso.stdout.strip(), "isomorphic")

    def test_cap(self):
        edges = "\n".join(["11"] + [f"{i} {i + 1}" for i in range(10)]) + "\n"
        path = self.write_edges("p11.txt", edges)
        result = self.invoke("oracle", "aut", "--edges", path)
        self.assertEqual(result.exit_code, EXIT_TOO_LARGE)
        self.assertIn("too large", result.output)
        self.assertEqual(self.invoke("oracle", "aut", "--edges", path, "--cap", "11").exit_code, EXIT_OK)
        self.assertEqual(self.invoke("oracle", "aut", "--edges", path, "--cap", "0").exit_code, EXIT_INVALID_INPUT)

    def test_malformed_edge_list(self):
        path = self.write_edges("bad.txt", "3\n0 0\n")
        result = self.invoke("oracle", "aut", "--edges", path)
        self.assertEqual(result.exit_code, EXIT_INVALID_INPUT)
        self.assertIn("line 2", result.output)


class TestRunner(unittest.TestCase):
    """Tests for the runner without click."""

    def test_run_maps_errors_to_codes(self):
        self.assertEqual(run(CliConfig(command="dist", degseq="2^5")).output, "3")
        self.assertEqual(run(CliConfig(command="dist", degseq="2^6")).exit_code, EXIT_NOT_UNIGRAPH)
        self.assertEqual(run(CliConfig(command="dist", degseq="9")).exit_code, EXIT_INVALID_INPUT)

    def test_config_validation(self):
        with self.assertRaises(ValueError):
            CliConfig(command="dist")
        with self.assertRaises(ValueError):
            CliConfig(command="oracle", action="count", edges="g.txt")
        with self.assertRaises(ValueError):
            CliConfig(command="oracle", action="dist", degseq="2^5")


if __name__ == '__main__':
    unittest.main()
