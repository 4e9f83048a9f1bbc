import unittest

import numpy as np

from src.errors import CapacityExceeded, CycleDetected, DuplicateElement, NotMeetSemilattice, UnknownElement
from src.order.poset import (ElementSet, MeetSemilattice, Poset, build_poset, check_partial_order, glb,
                             has_n5_or_m3, iter_bits, lattice_profile, lub, pseudocomplement, submasks)
from src.catalog.builtin import LATTICES
from src.catalog.search import element_names, lattices


def lattice(name):
    elements, covers = LATTICES[name]
    return MeetSemilattice.build(elements, covers)


class TestBitsets(unittest.TestCase):

    def test_iter_bits_ascending(self):
        self.assertEqual(list(iter_bits(0b10110)), [1, 2, 4])

    def test_submasks_cover_every_subset(self):
        subsets = list(submasks(0b101))
        self.assertEqual(sorted(subsets), [0b000, 0b001, 0b100, 0b101])

    def test_element_set_width(self):
        s = ElementSet.of([0, 2], 3)
        self.assertIn(2, s)
        self.assertNotIn(1, s)
        self.assertEqual(len(s), 2)
        with self.assertRaises(ValueError):
            ElementSet(0b1000, 3)


class TestPoset(unittest.TestCase):

    def test_closure_of_cover_pairs(self):
        P = build_poset(['0', 'a', '1'], [('0', 'a'), ('a', '1')])
        self.assertTrue(P.leq(0, 2))
        self.assertFalse(P.leq(2, 0))

    def test_cycle_detected(self):
        with self.assertRaises(CycleDetected) as ctx:
            build_poset(['x', 'y'], [('x', 'y'), ('y', 'x')])
        self.assertEqual(set(ctx.exception.witness), {'x', 'y'})

    def test_duplicate_and_unknown_elements(self):
        with self.assertRaises(DuplicateElement):
            build_poset(['x', 'x'], [])
        with self.assertRaises(UnknownElement) as ctx:
            build_poset(['x'], [('x', 'z')])
        self.assertEqual(ctx.exception.witness, 'z')

    def test_carrier_bound(self):
        names = [f"e{i}" for i in range(65)]
        with self.assertRaises(CapacityExceeded):
            build_poset(names, [])

    def test_check_partial_order(self):
        le = np.array([[True, True], [False, True]])
        self.assertIsNone(check_partial_order(le))
        le = np.array([[True, True], [True, True]])
        self.assertEqual(check_partial_order(le)[0], 'antisymmetry')

    def test_from_matrix_rejects_non_transitive(self):
        le = np.eye(3, dtype=bool)
        le[0, 1] = le[1, 2] = True
        with self.assertRaises(ValueError):
            Poset.from_matrix(['x', 'y', 'z'], le)

    def test_cover_pairs(self):
        L = lattice('D4')
        self.assertEqual(sorted(L.poset.cover_pairs()), [(0, 1), (0, 2), (1, 3), (2, 3)])

    def test_glb_and_lub(self):
        P = lattice('D4').poset
        self.assertEqual(glb(P, ElementSet.of([1, 2], 4)), '0')
        self.assertEqual(lub(P, ElementSet.of([1, 2], 4)), '1')
        self.assertEqual(lub(P, ElementSet(0, 4)), '0')
        self.assertEqual(glb(P, ElementSet(0, 4)), '1')


class TestMeetSemilattice(unittest.TestCase):

    def test_missing_meet(self):
        with self.assertRaises(NotMeetSemilattice):
            MeetSemilattice.build(['a', 'b', '1'], [('a', '1'), ('b', '1')])

    def test_missing_top(self):
        with self.assertRaises(NotMeetSemilattice):
            MeetSemilattice.build(['0', 'a', 'b'], [('0', 'a'), ('0', 'b')])

    def test_operations(self):
        L = lattice('D4')
        self.assertEqual(L.meet(1, 2), 0)
        self.assertEqual(L.join(1, 2), 3)
        self.assertEqual(L.bottom, 0)
        self.assertEqual(L.top, 3)
        self.assertTrue(L.is_lattice())


class TestLatticeProfile(unittest.TestCase):

    def test_boolean_square(self):
        profile = lattice_profile(lattice('D4'))
        self.assertTrue(profile.is_boolean_algebra)
        self.assertTrue(profile.is_frame_finite)

    def test_chain_is_distributive_not_complemented(self):
        profile = lattice_profile(lattice('C3'))
        self.assertTrue(profile.is_distributive)
        self.assertFalse(profile.all_complemented)
        self.assertFalse(profile.is_boolean_algebra)

    def test_m3_and_n5(self):
        for name in ('M3', 'N5'):
            profile = lattice_profile(lattice(name))
            self.assertTrue(profile.is_lattice)
            self.assertFalse(profile.is_distributive)
            self.assertTrue(profile.all_complemented)

    def test_forbidden_sublattices(self):
        self.assertIsNone(has_n5_or_m3(lattice('D4')))
        self.assertEqual(has_n5_or_m3(lattice('N5'))[0], 'N5')
        self.assertEqual(has_n5_or_m3(lattice('M3')), ('M3', ('a', 'b', 'c')))

    def test_forbidden_sublattices_decide_distributivity(self):
        carriers = [lattice(name) for name in LATTICES]
        for n in range(2, 7):
            carriers += [MeetSemilattice(Poset(element_names(n), le)) for le in lattices(n)]
        self.assertEqual(len(carriers), len(LATTICES) + 24)
        for L in carriers:
            distributive = lattice_profile(L).is_distributive
            self.assertEqual(has_n5_or_m3(L) is None, distributive, L.poset.le.astype(int).tolist())

    def test_pseudocomplement(self):
        L = lattice('C3')
        self.assertEqual(pseudocomplement(L, 1), 0)
        self.assertEqual(pseudocomplement(L, 0), 2)


if __name__ == '__main__':
    unittest.main()
