import unittest

from src.catalog.builtin import builtin
from src.errors import DistributivityFailure, JoinViolation, MeetViolation, TopViolation, UnknownElement
from src.frames.sframe import (compose, density_profile, enumerate_maps, identity_map, is_isomorphism,
                               left_adjoint, preservation_check, right_adjoint, validate_map)
from src.order.selection import Regime


class TestValidateSFrame(unittest.TestCase):

    def test_regimes(self):
        self.assertEqual(builtin('D4+finite').regime, Regime.FULL)
        self.assertEqual(builtin('D4+singletons').regime, Regime.BASE)
        self.assertEqual(builtin('M3+singletons').regime, Regime.BASE)

    def test_m3_finite_is_not_an_sframe(self):
        with self.assertRaises(DistributivityFailure) as ctx:
            builtin('M3+finite')
        self.assertEqual(ctx.exception.witness, ('a', ['b', 'c']))

    def test_n5_finite_is_not_an_sframe(self):
        with self.assertRaises(DistributivityFailure):
            builtin('N5+finite')


class TestMaps(unittest.TestCase):

    def setUp(self):
        self.c3 = builtin('C3+finite')
        self.c2 = builtin('C2+finite')
        self.h = validate_map({'0': '0', 'a': '1', '1': '1'}, self.c3, self.c2)

    def test_collapse_is_a_map_only_for_singletons(self):
        table = {'0': '0', 'a': '0', 'b': '0', '1': '1'}
        h = validate_map(table, builtin('D4+singletons'), builtin('C2+singletons'))
        self.assertEqual(h.as_names(), table)
        with self.assertRaises(JoinViolation) as ctx:
            validate_map(table, builtin('D4+finite'), builtin('C2+finite'))
        self.assertEqual(ctx.exception.witness, ['a', 'b'])

    def test_meet_and_top_violations(self):
        with self.assertRaises(TopViolation):
            validate_map({'0': '0', 'a': '0', '1': '0'}, self.c3, self.c2)
        d4 = builtin('D4+finite')
        with self.assertRaises(MeetViolation):
            validate_map({'0': '0', 'a': '1', 'b': '1', '1': '1'}, d4, self.c2)

    def test_partial_table(self):
        with self.assertRaises(UnknownElement):
            validate_map({'0': '0', '1': '1'}, self.c3, self.c2)
        with self.assertRaises(UnknownElement):
            validate_map({'0': '0', 'a': 'z', '1': '1'}, self.c3, self.c2)

    def test_adjoints(self):
        self.assertEqual(right_adjoint(self.h).table, (0, 2))
        self.assertEqual(left_adjoint(self.h).table, (0, 1))

    def test_missing_right_adjoint_witness(self):
        h = validate_map({'0': '0', 'a': '0', 'b': '0', '1': '1'},
                         builtin('D4+singletons'), builtin('C2+singletons'))
        r = right_adjoint(h)
        self.assertFalse(r.exists)
        self.assertEqual(r.witness, 0)

    def test_density(self):
        profile = density_profile(self.h)
        self.assertEqual(profile.as_dict(),
                         {'dense': True, 'codense': False, 'injective': False, 'surjective': True})

    def test_preservation(self):
        self.assertEqual(preservation_check(self.h), [])
        self.assertEqual(preservation_check(identity_map(self.c3)), [])

    def test_enumerate_maps(self):
        self.assertEqual(len(list(enumerate_maps(self.c2, self.c2))), 1)
        self.assertEqual(len(list(enumerate_maps(self.c2, self.c3))), 1)
        tables = {h.table for h in enumerate_maps(self.c3, self.c2)}
        self.assertIn(self.h.table, tables)

    def test_composition_and_isomorphism(self):
        ident = identity_map(self.c3)
        self.assertEqual(compose(self.h, ident).table, self.h.table)
        self.assertTrue(is_isomorphism(ident))
        self.assertFalse(is_isomorphism(self.h))
        self.assertEqual(self.h.regime, Regime.FULL)


if __name__ == '__main__':
    unittest.main()
