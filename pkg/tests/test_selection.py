import unittest

from src.catalog.builtin import LATTICES
from src.errors import CapacityExceeded, MissingSets, UnknownElement
from src.order.poset import ElementSet, MeetSemilattice
from src.order.selection import (Regime, SelectionKind, check_axioms, is_designated, make_selection)


def lattice(name):
    elements, covers = LATTICES[name]
    return MeetSemilattice.build(elements, covers)


class TestSelection(unittest.TestCase):

    def setUp(self):
        self.d4 = lattice('D4')

    def test_singletons_designate_empty_and_singletons(self):
        S = make_selection(self.d4, 'singletons')
        self.assertTrue(is_designated(S, ElementSet(0, 4)))
        self.assertTrue(is_designated(S, ElementSet.of([2], 4)))
        self.assertFalse(is_designated(S, ElementSet.of([1, 2], 4)))
        self.assertEqual(S.designated_sets(), [0, 1, 2, 4, 8])

    def test_finite_designates_everything(self):
        S = make_selection(self.d4, SelectionKind.FINITE)
        self.assertTrue(S.is_designated_bits(0b1111))
        self.assertEqual(len(S.designated_sets()), 16)

    def test_finite_family_is_bounded(self):
        names = [f"c{i}" for i in range(17)]
        chain = MeetSemilattice.build(names, list(zip(names, names[1:])))
        with self.assertRaises(CapacityExceeded):
            make_selection(chain, 'finite').designated_sets()

    def test_explicit_needs_sets(self):
        with self.assertRaises(MissingSets):
            make_selection(self.d4, 'explicit')

    def test_explicit_accepts_names_and_bitsets(self):
        S = make_selection(self.d4, 'explicit', [['a', 'b'], 0b0001])
        self.assertEqual(S.designated_sets(), [0, 0b0001, 0b0110])
        self.assertEqual(S.as_json(), {'kind': 'explicit', 'sets': [['0'], ['a', 'b']]})

    def test_explicit_rejects_foreign_elements(self):
        with self.assertRaises(UnknownElement):
            make_selection(self.d4, 'explicit', [['a', 'z']])
        with self.assertRaises(UnknownElement):
            make_selection(self.d4, 'explicit', [0b10000])


class TestAxioms(unittest.TestCase):

    def test_singletons_fail_only_sfin(self):
        report = check_axioms(make_selection(lattice('D4'), 'singletons'))
        self.assertEqual(report.regime, Regime.BASE)
        self.assertFalse(report.holds('SFin'))
        self.assertEqual(report.verdicts['SFin'].witness, [['0', 'a']])
        for axiom in ('S1', 'S2', "S2'", 'S3', 'SCov', 'SRef'):
            self.assertTrue(report.holds(axiom), axiom)

    def test_finite_is_full(self):
        report = check_axioms(make_selection(lattice('D4'), 'finite'))
        self.assertEqual(report.regime, Regime.FULL)
        self.assertIn('S4', report.deferred)

    def test_explicit_without_singletons_is_irregular(self):
        report = check_axioms(make_selection(lattice('D4'), 'explicit', [['a', 'b']]))
        self.assertFalse(report.holds('S1'))
        self.assertEqual(report.verdicts['S1'].witness, [['0']])
        self.assertEqual(report.regime, Regime.IRREGULAR)

    def test_report_json(self):
        data = check_axioms(make_selection(lattice('C3'), 'singletons')).as_json()
        self.assertEqual(data['regime'], 'BASE')
        self.assertEqual(set(data['axioms']), {'S1', 'S2', "S2'", 'S3', 'SFin', 'SCov', 'SRef'})
        self.assertFalse(data['axioms']['SFin']['holds'])


if __name__ == '__main__':
    unittest.main()
