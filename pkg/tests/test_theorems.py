import unittest

from src.analysis.report import COLUMNS, VerdictReport
from src.analysis.theorems import (Artifacts, catalog_maps, composition_check, comparison_checks,
                                   formula_identity_checks, map_checks, run_suite, select_structures,
                                   structure_suite, structural_checks, theorem_K_check, theorem_UV_check)
from src.analysis.verdict import required, sort_verdicts, verdict
from src.catalog.builtin import builtin
from src.frames.sframe import identity_map, validate_map
from src.order.selection import Regime


def by_theorem(verdicts):
    return {v.theorem: v for v in verdicts}


class TestVerdicts(unittest.TestCase):

    def test_required(self):
        self.assertTrue(required(Regime.FULL, Regime.FULL))
        self.assertTrue(required(Regime.BASE, Regime.BASE))
        self.assertFalse(required(Regime.BASE, Regime.FULL))
        self.assertFalse(required(Regime.IRREGULAR, Regime.BASE))

    def test_holding_verdict_drops_witness(self):
        v = verdict('K', 'x', Regime.FULL, Regime.FULL, True, witness='w')
        self.assertIsNone(v.witness)
        self.assertFalse(v.is_failure)
        failing = verdict('K', 'x', Regime.FULL, Regime.FULL, False, witness='w')
        self.assertTrue(failing.is_failure)
        self.assertEqual(failing.as_dict()['witness'], 'w')

    def test_sorting(self):
        vs = [verdict('b', 'y', Regime.FULL, Regime.FULL, True), verdict('a', 'z', Regime.FULL, Regime.FULL, True),
              verdict('b', 'x', Regime.FULL, Regime.FULL, True)]
        self.assertEqual([(v.theorem, v.instance) for v in sort_verdicts(vs)], [('a', 'z'), ('b', 'x'), ('b', 'y')])


class TestIdentities(unittest.TestCase):

    def test_full_frame_satisfies_identities(self):
        L = builtin('D4+finite')
        for v in formula_identity_checks(L, Artifacts(L)):
            self.assertTrue(v.holds, v.theorem)
            self.assertTrue(v.asserted)

    def test_singletons_are_findings(self):
        L = builtin('D4+singletons')
        results = by_theorem(formula_identity_checks(L, Artifacts(L)))
        self.assertFalse(results['f.iii'].holds)
        self.assertFalse(results['f.iii'].asserted)
        self.assertTrue(any('∇ formula/generated divergence at a' in d for d in results['f.iii'].details))
        self.assertFalse(results['g.iv'].holds)
        self.assertEqual(results['g.iv'].witness, '{0,a,b}')
        self.assertFalse(results['principal_join_law'].holds)


class TestStructuralChecks(unittest.TestCase):

    def test_comparison_checks_hold_without_finite_joins(self):
        for name in ('C3+singletons', 'D4+singletons'):
            L = builtin(name)
            results = by_theorem(comparison_checks(L, Artifacts(L)))
            for theorem in ('dh', 'dj', 'eb', 'ec.a.join', 'ec.b', 'ec.c', 'ed'):
                self.assertTrue(results[theorem].holds, (name, theorem, results[theorem].details))
                self.assertTrue(results[theorem].asserted)
        L = builtin('D4+singletons')
        frame_map = by_theorem(comparison_checks(L, Artifacts(L)))['dh.frame_map']
        self.assertFalse(frame_map.holds)
        self.assertFalse(frame_map.asserted)
        self.assertIn('MeetViolation', frame_map.details[0])

    def test_full_frame_checks_hold(self):
        L = builtin('D4+finite')
        art = Artifacts(L)
        for v in structural_checks(L, art) + comparison_checks(L, art):
            self.assertTrue(v.holds, (v.theorem, v.details))

    def test_principal_ideals_finding(self):
        L = builtin('D4+singletons')
        results = by_theorem(structural_checks(L, Artifacts(L)))
        self.assertFalse(results['free_frame.principal'].holds)
        self.assertEqual(results['free_frame.principal'].witness, ['{0,a,b}'])
        self.assertTrue(results['congruence.algorithms'].holds)
        self.assertFalse(results['congruence.frame'].holds)
        self.assertFalse(results['congruence.frame'].asserted)
        self.assertTrue(results['e.injective'].holds)
        self.assertTrue(results['free_extension'].holds)


class TestClosedOpenTheorems(unittest.TestCase):

    def test_K_on_full_frames(self):
        for name in ('C3+finite', 'D4+finite'):
            self.assertTrue(theorem_K_check(builtin(name)).holds, name)

    def test_UV(self):
        u, v = theorem_UV_check(builtin('D4+singletons'))
        self.assertTrue(u.holds)
        self.assertFalse(u.asserted)
        for name in ('D4+finite', 'C3+finite'):
            _, v = theorem_UV_check(builtin(name))
            self.assertTrue(v.holds, name)
            self.assertTrue(v.asserted)

    def test_map_checks(self):
        h = validate_map({'0': '0', 'a': '1', '1': '1'}, builtin('C3+finite'), builtin('C2+finite'))
        results = by_theorem(map_checks(h, 'h'))
        self.assertEqual(set(results), {'J', 'L', 'E.preservation'})
        self.assertTrue(all(v.holds for v in results.values()))

    def test_composition(self):
        c3, c2 = builtin('C3+finite'), builtin('C2+finite')
        h = validate_map({'0': '0', 'a': '1', '1': '1'}, c3, c2)
        v = composition_check(identity_map(c3), h, 'h∘id')
        self.assertTrue(v.holds)
        self.assertEqual(v.regime, Regime.FULL)


class TestSuites(unittest.TestCase):

    def test_catalog_maps_share_selection_kind(self):
        structures = [builtin('C2+finite'), builtin('C3+finite'), builtin('C2+singletons')]
        maps = catalog_maps(structures)
        self.assertTrue(maps)
        for label, h in maps:
            self.assertIs(h.domain.selection.kind, h.codomain.selection.kind)
            self.assertIn('→', label)

    def test_select_structures(self):
        structures = [builtin('C3+finite'), builtin('C3+singletons')]
        self.assertEqual([L.name for L in select_structures(structures, 'full')], ['C3+finite'])
        self.assertEqual([L.name for L in select_structures(structures, 'base')], ['C3+singletons'])
        self.assertEqual(len(select_structures(structures, 'all')), 2)

    def test_unknown_suite(self):
        with self.assertRaises(ValueError):
            run_suite([], 'everything')

    def test_full_structures_have_no_failures(self):
        verdicts = run_suite([builtin('C2+finite'), builtin('C3+finite'), builtin('D4+finite')], 'full')
        report = VerdictReport(verdicts)
        self.assertEqual(report.failures, [])
        self.assertEqual(report.exit_code, 0)
        theorems = {v.theorem for v in verdicts}
        for name in ('K', 'U', 'V', 'J', 'L', 'M', 'eg', 'ed', 'da.ladder', 'ci', 'cj'):
            self.assertIn(name, theorems)

    def test_structure_suite_names_maps(self):
        L = builtin('C3+finite')
        instances = {v.instance for v in structure_suite(L)}
        self.assertIn('↓[C3+finite]', instances)
        self.assertIn('madden[C3+finite]', instances)


class TestReport(unittest.TestCase):

    def setUp(self):
        self.report = VerdictReport([
            verdict('K', 'A', Regime.FULL, Regime.FULL, True),
            verdict('U', 'B', Regime.BASE, Regime.FULL, False, witness=['a']),
            verdict('V', 'C', Regime.FULL, Regime.FULL, False, witness={'x': 1}, details=['(a) True ⟺ False']),
        ])

    def test_exit_code(self):
        self.assertEqual(len(self.report.failures), 1)
        self.assertEqual(self.report.exit_code, 1)

    def test_compile_results(self):
        df = self.report.compile_results()
        self.assertEqual(list(df.columns), COLUMNS)
        self.assertEqual(len(df), 3)
        self.assertEqual(df.loc[2, 'witness'], '{"x": 1}')

    def test_text(self):
        text = self.report.to_text()
        self.assertIn('V [C]: (a) True ⟺ False', text)
        self.assertIn('3 verdicts, 2 asserted, 1 asserted failure(s)', text)

    def test_summary(self):
        self.assertEqual(self.report.summary(), {'verdicts': 3, 'asserted': 2, 'holding': 1, 'failures': 1})


if __name__ == '__main__':
    unittest.main()
