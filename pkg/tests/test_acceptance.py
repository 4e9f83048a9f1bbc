"""
End-to-end properties of the built-in catalog.
"""
import unittest

from src.analysis.boolean import boolean_classify
from src.analysis.theorems import catalog_maps, map_suite, run_suite
from src.catalog.builtin import builtin, builtin_catalog
from src.frames.congruence import congruences_by_partition_filter, congruences_by_principal_joins
from src.frames.freeframe import down_embed, enumerate_free_frame
from src.frames.sframe import is_isomorphism, right_adjoint, validate_map
from src.errors import JoinViolation
from src.order.selection import AXIOMS, SelectionKind, check_axioms


class TestCatalogAcceptance(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.catalog = builtin_catalog()
        cls.finite = [L for L in cls.catalog if L.selection.kind is SelectionKind.FINITE]
        cls.singletons = [L for L in cls.catalog if L.selection.kind is SelectionKind.SINGLETONS]

    def test_catalog_contents(self):
        names = {L.name for L in self.catalog}
        self.assertIn('two_diamonds+finite', names)
        self.assertNotIn('M3+finite', names)
        self.assertNotIn('N5+finite', names)
        self.assertEqual(len(self.singletons), 6)

    def test_axiom_suite(self):
        for L in self.finite:
            report = check_axioms(L.selection)
            self.assertTrue(all(report.holds(a) for a in AXIOMS), L.name)
        for L in self.singletons:
            if L.size < 3:
                continue
            report = check_axioms(L.selection)
            self.assertEqual([a for a in AXIOMS if not report.holds(a)], ['SFin'], L.name)
            self.assertEqual(len(report.verdicts['SFin'].witness[0]), 2)

    def test_free_frame_counts(self):
        self.assertEqual(enumerate_free_frame(builtin('C3+singletons')).size, 3)
        self.assertEqual(enumerate_free_frame(builtin('D4+singletons')).size, 5)
        self.assertEqual(enumerate_free_frame(builtin('D4+finite')).size, 4)
        for L in self.finite:
            F = enumerate_free_frame(L)
            self.assertEqual(len(set(F.principal_index)), F.size, L.name)
            self.assertTrue(is_isomorphism(down_embed(L, F)), L.name)

    def test_congruence_oracle(self):
        for L in self.catalog:
            self.assertEqual(set(congruences_by_principal_joins(L)), set(congruences_by_partition_filter(L)), L.name)

    def test_full_suite_has_no_failures(self):
        verdicts = run_suite(self.catalog, 'full')
        failures = [(v.theorem, v.instance, v.details) for v in verdicts if v.is_failure]
        self.assertEqual(failures, [])

    def test_base_divergence_finding(self):
        verdicts = run_suite([builtin('D4+singletons')], 'base')
        by_theorem = {v.theorem: v for v in verdicts if v.instance == 'D4+singletons'}
        self.assertFalse(by_theorem['f.iii'].holds)
        self.assertFalse(by_theorem['g.iv'].holds)
        self.assertEqual(by_theorem['g.iv'].witness, '{0,a,b}')

    def test_singleton_diamond_has_no_asserted_failures(self):
        verdicts = run_suite([builtin('D4+singletons')], 'all')
        failures = [(v.theorem, v.instance, v.details) for v in verdicts if v.is_failure]
        self.assertEqual(failures, [])
        by_theorem = {v.theorem: v for v in verdicts if v.instance == 'D4+singletons'}
        for theorem in ('dh', 'eb', 'ed', 'U'):
            self.assertTrue(by_theorem[theorem].holds, theorem)
        self.assertFalse(by_theorem['congruence.frame'].holds)
        self.assertTrue(any(v.theorem == 'eg' and v.holds for v in verdicts))

    def test_ladder_separations(self):
        self.assertEqual(boolean_classify(builtin('D4+singletons')).as_tuple(), (False, True, True, True))
        self.assertEqual(boolean_classify(builtin('M3+singletons')).as_tuple(), (False, False, True, True))
        for L in self.finite:
            self.assertTrue(boolean_classify(L).ladder_holds, L.name)

    def test_adjoint_free_collapse(self):
        table = {'0': '0', 'a': '0', 'b': '0', '1': '1'}
        h = validate_map(table, builtin('D4+singletons'), builtin('C2+singletons'))
        r = right_adjoint(h)
        self.assertFalse(r.exists)
        self.assertEqual(h.codomain.name_of(r.witness), '0')
        with self.assertRaises(JoinViolation) as ctx:
            validate_map(table, builtin('D4+finite'), builtin('C2+finite'))
        self.assertEqual(ctx.exception.witness, ['a', 'b'])

    def test_naturality_and_adjunctions_on_small_maps(self):
        maps = catalog_maps(self.catalog, 4)
        self.assertTrue(any(h.domain.selection.kind is SelectionKind.SINGLETONS for _, h in maps))
        verdicts = map_suite(maps, {})
        checked = [v for v in verdicts if v.theorem in ('eg', 'cs.adjunction', 'adjoint.composition')]
        self.assertTrue(checked)
        for v in checked:
            self.assertTrue(v.holds, (v.theorem, v.instance, v.details))


if __name__ == '__main__':
    unittest.main()
