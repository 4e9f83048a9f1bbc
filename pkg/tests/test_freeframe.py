import unittest

from src.catalog.builtin import builtin
from src.errors import CapacityExceeded, InvariantViolation
from src.frames.freeframe import (FreeFrame, annihilator, down_embed, enumerate_free_frame, free_extension,
                                  free_frame_dot, ideal_names, is_sideal, principal_join_law,
                                  s_lindelof_elements, sideal_closure_bits)
from src.frames.sframe import identity_map
from src.order.selection import Regime, make_selection


class TestSIdeals(unittest.TestCase):

    def setUp(self):
        self.L = builtin('D4+singletons')

    def test_closure_adds_bottom(self):
        self.assertEqual(sideal_closure_bits(self.L, 0), 0b0001)
        self.assertEqual(sideal_closure_bits(self.L, 0b0010), 0b0011)

    def test_singleton_selection_keeps_non_principal_ideal(self):
        self.assertTrue(is_sideal(self.L, 0b0111))
        self.assertFalse(is_sideal(self.L, 0b0110))
        self.assertFalse(is_sideal(self.L, 0))

    def test_finite_selection_closes_to_principal(self):
        self.assertEqual(sideal_closure_bits(builtin('D4+finite'), 0b0110), 0b1111)


class TestFreeFrame(unittest.TestCase):

    def setUp(self):
        self.L = builtin('D4+singletons')
        self.F = enumerate_free_frame(self.L)

    def test_labels(self):
        self.assertEqual(self.F.labels, ('↓0', '↓a', '↓b', '{0,a,b}', '↓1'))
        self.assertEqual(ideal_names(self.F)[3], ['0', 'a', 'b'])

    def test_principal_ideals(self):
        self.assertEqual(self.F.size, 5)
        self.assertEqual(len(set(self.F.principal_index)), 4)
        self.assertFalse(self.F.is_principal(3))

    def test_full_selection_gives_principal_ideals_only(self):
        F = enumerate_free_frame(builtin('D4+finite'))
        self.assertEqual(F.size, 4)
        self.assertTrue(all(F.is_principal(i) for i in range(F.size)))

    def test_frame_operations(self):
        H = self.F.frame
        self.assertEqual(H.regime, Regime.FULL)
        self.assertEqual(self.F.join(1, 2), 3)
        self.assertEqual(self.F.meet(1, 2), 0)
        self.assertEqual(H.join(1, 2), 3)

    def test_capacity(self):
        with self.assertRaises(CapacityExceeded):
            enumerate_free_frame(self.L, capacity=3)

    def test_from_ideals_rechecks(self):
        F = FreeFrame.from_ideals(self.L, self.F.ideals)
        self.assertEqual(F.ideals, self.F.ideals)
        with self.assertRaises(InvariantViolation):
            FreeFrame.from_ideals(self.L, [0b0110])

    def test_from_ideals_needs_a_complete_list(self):
        # ideals: {0}, ↓a, ↓b, {0,a,b}, ↓1
        without_principal = [b for b in self.F.ideals if b != 0b0011]
        with self.assertRaises(InvariantViolation) as ctx:
            FreeFrame.from_ideals(self.L, without_principal)
        self.assertEqual(ctx.exception.witness, 'a')
        without_join = [b for b in self.F.ideals if b != 0b0111]
        with self.assertRaises(InvariantViolation):
            FreeFrame.from_ideals(self.L, without_join)

    def test_down_embedding(self):
        down = down_embed(self.L, self.F)
        self.assertEqual(down.table, (0, 1, 2, 4))

    def test_free_extension_of_the_embedding_is_the_identity(self):
        ext = free_extension(down_embed(self.L, self.F), self.F)
        self.assertEqual(ext.table, tuple(range(self.F.size)))

    def test_free_extension_into_the_structure_itself(self):
        L = builtin('C3+singletons')
        ext = free_extension(identity_map(L))
        self.assertEqual(ext.table, (0, 1, 2))

    def test_dot(self):
        dot = free_frame_dot(self.F)
        self.assertIn('digraph "H(D4+singletons)"', dot)
        self.assertIn('{0,a,b}', dot)


class TestIdealLaws(unittest.TestCase):

    def setUp(self):
        self.L = builtin('D4+singletons')
        self.F = enumerate_free_frame(self.L)

    def test_principal_join_law_fails_without_finite_joins(self):
        ideal = self.F.ideal(self.F.principal_index[2])
        self.assertFalse(principal_join_law(self.L, 1, ideal))

    def test_principal_join_law_on_full_frame(self):
        L = builtin('D4+finite')
        F = enumerate_free_frame(L)
        for x in range(L.size):
            for i in range(F.size):
                self.assertTrue(principal_join_law(L, x, F.ideal(i)))

    def test_annihilator(self):
        self.assertEqual(annihilator(self.L, 1, self.F).bits, 0b0101)
        self.assertEqual(annihilator(self.L, 0).bits, 0b1111)
        self.assertEqual(annihilator(self.L, 3).bits, 0b0001)

    def test_s_lindelof_elements(self):
        H = self.F.frame
        lindelof = s_lindelof_elements(H, make_selection(H.carrier, 'singletons'))
        self.assertEqual(list(lindelof), [0, 1, 2, 4])
        everything = s_lindelof_elements(H, make_selection(H.carrier, 'finite'))
        self.assertEqual(len(everything), H.size)


if __name__ == '__main__':
    unittest.main()
