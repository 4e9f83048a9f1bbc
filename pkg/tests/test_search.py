import unittest

from src.catalog.builtin import builtin
from src.catalog.search import SearchSpec, element_names, lattices, parse_predicate, search, structure_flags
from src.errors import CapacityExceeded, ParseError


class TestPredicates(unittest.TestCase):

    def test_symbol_spellings_agree(self):
        flags = {'a': False, 'b': True, 'c': True, 'd': True}
        for text in ('(c) ∧ ¬(a)', 'c and not a', 'c & !a'):
            self.assertTrue(parse_predicate(text)(flags), text)
        self.assertTrue(parse_predicate('a ∨ b')(flags))
        self.assertFalse(parse_predicate('a | !d')(flags))

    def test_rejects_unknown_flags_and_syntax(self):
        with self.assertRaises(ParseError):
            parse_predicate('e and a')
        with self.assertRaises(ParseError):
            parse_predicate('a +')
        with self.assertRaises(ParseError):
            parse_predicate('a == b')

    def test_structure_flags(self):
        flags = structure_flags(builtin('D4+singletons'))
        self.assertEqual({k: flags[k] for k in 'abcd'}, {'a': False, 'b': True, 'c': True, 'd': True})
        self.assertTrue(flags['boolean'])
        self.assertFalse(flags['full'])


class TestLatticeEnumeration(unittest.TestCase):

    def test_counts_up_to_isomorphism(self):
        self.assertEqual([len(list(lattices(n))) for n in range(2, 7)], [1, 1, 2, 5, 15])

    def test_bottom_and_top_positions(self):
        for le in lattices(5):
            self.assertTrue(le[0, :].all())
            self.assertTrue(le[:, -1].all())

    def test_element_names(self):
        self.assertEqual(element_names(4), ['0', 'x1', 'x2', '1'])
        self.assertEqual(element_names(2), ['0', '1'])


class TestSearch(unittest.TestCase):

    def test_complemented_but_not_boolean(self):
        result = search(SearchSpec('(c) ∧ ¬(b)', max_size=5))
        self.assertTrue(result.found)
        self.assertEqual(result.size, 5)
        self.assertEqual(len(result.witnesses), 2)
        self.assertTrue(all(L.name.endswith('+singletons') for L in result.witnesses))

    def test_boolean_frame_with_non_boolean_ideals(self):
        result = search(SearchSpec('(b) ∧ ¬(a)', max_size=4))
        self.assertEqual(result.size, 4)
        self.assertEqual(len(result.witnesses), 1)
        self.assertEqual(result.witnesses[0].selection.kind.value, 'singletons')
        data = result.as_dict()
        self.assertEqual(data['witnesses'][0]['flags']['a'], False)

    def test_no_witness(self):
        result = search(SearchSpec('b and not c', max_size=4))
        self.assertFalse(result.found)
        self.assertIsNone(result.size)
        self.assertGreater(result.examined, 0)

    def test_bound(self):
        with self.assertRaises(CapacityExceeded):
            search(SearchSpec('a', max_size=20))


if __name__ == '__main__':
    unittest.main()
