"""
Unit tests for degree sequence primitives.
"""

import sys
import os
import unittest

# Add parent dir to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from hypothesis import given, settings as hsettings, strategies as st

from core.degseq import (
    DegreeSequence,
    NotSplit,
    PairedDegreeSequence,
    RelativeTag,
    Split,
    abbreviate,
    complement_sequence,
    determine_split,
    expand,
    is_balanced,
    relatives,
    swing_info,
)
from core.errors import InvalidInput
from graphs.graph_model import SplitGraphWithPartition, degree_sequence_of
from oracle.brute_force import brute_is_split
from graph_strategies import graphic_sequences, small_graphs, split_graphs


class TestAbbreviate(unittest.TestCase):
    """Tests for the abbreviated sequence form."""

    def test_groups_and_sorts(self):
        seq = abbreviate([3, 1, 1, 2, 3, 3])
        self.assertEqual(seq.entries, ((3, 3), (2, 1), (1, 2)))
        self.assertEqual(seq.n, 6)
        self.assertEqual(seq.distinct, 3)
        self.assertEqual(str(seq), "3^3,2,1^2")
        print("✓ abbreviate groups equal degrees")

    def test_rejects_empty_and_negative(self):
        with self.assertRaises(InvalidInput):
            abbreviate([])
        with self.assertRaises(InvalidInput):
            abbreviate([2, -1, 1])

    def test_rejects_malformed_entries(self):
        with self.assertRaises(InvalidInput):
            DegreeSequence(((1, 2), (2, 2)))
        with self.assertRaises(InvalidInput):
            DegreeSequence(((1, 0),))
        with self.assertRaises(InvalidInput):
            DegreeSequence(((3, 2),))

    @given(st.lists(st.integers(min_value=0, max_value=30), min_size=1, max_size=40))
    def test_expand_inverts_abbreviate(self, degrees):
        degrees = [d % len(degrees) for d in degrees]
        self.assertEqual(expand(abbreviate(degrees)), sorted(degrees, reverse=True))


class TestDetermineSplit(unittest.TestCase):
    """Tests for the split test on degree sequences."""

    def test_star_is_split(self):
        result = determine_split(DegreeSequence(((3, 1), (1, 3))))
        self.assertIsInstance(result, Split)
        self.assertEqual(result.h, 2)
        self.assertEqual(result.paired, PairedDegreeSequence(((3, 1), (1, 1)), ((1, 2),)))
        print("✓ star recognised as split")

    def test_cycle_is_not_split(self):
        self.assertIsInstance(determine_split(DegreeSequence(((2, 4),))), NotSplit)
        self.assertIsInstance(determine_split(DegreeSequence(((2, 5),))), NotSplit)

    def test_needs_two_vertices(self):
        with self.assertRaises(InvalidInput):
            determine_split(DegreeSequence(((0, 1),)))

    @hsettings(max_examples=150, deadline=None)
    @given(small_graphs(min_n=2, max_n=7))
    def test_agrees_with_exhaustive_search(self, g):
        result = determine_split(degree_sequence_of(g))
        self.assertEqual(isinstance(result, Split), brute_is_split(g).is_split)


class TestRelatives(unittest.TestCase):
    """Tests for complement, inverse and complement-inverse sequences."""

    def test_complement_of_c5_is_c5(self):
        seq = DegreeSequence(((2, 5),))
        self.assertEqual(complement_sequence(seq), seq)

    @given(graphic_sequences(max_n=9))
    def test_complement_is_involution(self, seq):
        self.assertEqual(complement_sequence(complement_sequence(seq)), seq)

    def test_relatives_of_double_star(self):
        rel = relatives(PairedDegreeSequence(((4, 4),), ((2, 2),)))
        self.assertEqual(rel[RelativeTag.IDENTITY], PairedDegreeSequence(((4, 4),), ((2, 2),)))
        self.assertEqual(rel[RelativeTag.COMPLEMENT], PairedDegreeSequence(((3, 2),), ((1, 4),)))
        self.assertEqual(rel[RelativeTag.INVERSE], PairedDegreeSequence(((3, 2),), ((1, 4),)))
        self.assertEqual(rel[RelativeTag.COMPLEMENT_INVERSE], PairedDegreeSequence(((4, 4),), ((2, 2),)))
        print("✓ relatives computed")

    @hsettings(max_examples=100, deadline=None)
    @given(split_graphs(min_n=1, max_n=8))
    def test_complement_and_inverse_are_involutions(self, drawn):
        g, a_set, b_set = drawn
        pseq = SplitGraphWithPartition(g, a_set, b_set).paired_sequence()
        for tag in (RelativeTag.COMPLEMENT, RelativeTag.INVERSE):
            once = relatives(pseq)[tag]
            self.assertEqual(relatives(once)[tag], pseq)
        inverse_of_complement = relatives(relatives(pseq)[RelativeTag.COMPLEMENT])[RelativeTag.INVERSE]
        self.assertEqual(relatives(pseq)[RelativeTag.COMPLEMENT_INVERSE], inverse_of_complement)

    def test_path_is_its_own_inverse(self):
        p4 = PairedDegreeSequence(((2, 2),), ((1, 2),))
        self.assertEqual(relatives(p4)[RelativeTag.INVERSE], p4)

    def test_swing_detection(self):
        self.assertFalse(is_balanced(PairedDegreeSequence(((1, 2),), ())))
        info = swing_info(PairedDegreeSequence(((1, 2),), ()))
        self.assertTrue(info.k_side_swing)
        self.assertFalse(info.s_side_swing)
        self.assertTrue(is_balanced(PairedDegreeSequence(((3, 2),), ((1, 4),))))
        self.assertTrue(swing_info(PairedDegreeSequence(((2, 2),), ((2, 1),))).s_side_swing)


if __name__ == '__main__':
    unittest.main()
