import unittest

from src.analysis.boolean import all_complemented, boolean_classify, ladder_verdict, prop_ci_cj_check
from src.catalog.builtin import builtin
from src.frames.congruence import e_map, enumerate_congruence_frame, nabla_embedding
from src.frames.freeframe import enumerate_free_frame


class TestBooleanLadder(unittest.TestCase):

    def test_square_with_singletons(self):
        ladder = boolean_classify(builtin('D4+singletons'))
        self.assertEqual(ladder.as_tuple(), (False, True, True, True))
        self.assertTrue(ladder.ladder_holds)
        self.assertIn('a', ladder.witnesses)

    def test_m3_with_singletons(self):
        ladder = boolean_classify(builtin('M3+singletons'))
        self.assertEqual(ladder.as_tuple(), (False, False, True, True))
        self.assertEqual(ladder.witnesses['b'], 'not distributive')

    def test_square_with_finite_selection(self):
        ladder = boolean_classify(builtin('D4+finite'))
        self.assertEqual(ladder.as_tuple(), (True, True, True, True))
        self.assertEqual(ladder.witnesses, {})

    def test_chain_is_not_d_reduced(self):
        ladder = boolean_classify(builtin('C3+singletons'))
        self.assertFalse(ladder.d_d_reduced)
        self.assertEqual(ladder.witnesses['c'], 'a has no complement')

    def test_ladder_verdict(self):
        L = builtin('D4+finite')
        v = ladder_verdict(L, boolean_classify(L))
        self.assertTrue(v.holds)
        self.assertTrue(v.asserted)

    def test_all_complemented(self):
        self.assertIsNone(all_complemented(builtin('D4+finite')))
        self.assertEqual(all_complemented(builtin('C3+finite')), 1)


class TestEquivalentConditions(unittest.TestCase):

    def check(self, name):
        L = builtin(name)
        F = enumerate_free_frame(L)
        C = enumerate_congruence_frame(L)
        return prop_ci_cj_check(L, F, C, e_map(L, F, C), nabla_embedding(L, C))

    def test_boolean_frame_satisfies_every_condition(self):
        for v in self.check('D4+finite'):
            self.assertTrue(v.holds, v.theorem)
            self.assertTrue(all(d.endswith('=True') for d in v.details), v.details)

    def test_chain_fails_every_condition(self):
        for name in ('C3+finite', 'two_diamonds+finite'):
            for v in self.check(name):
                self.assertTrue(v.holds, (name, v.theorem))
                self.assertTrue(all(d.endswith('=False') for d in v.details), (name, v.details))


if __name__ == '__main__':
    unittest.main()
