"""
Theorem checks over S-frames and maps between them.

Every check returns TheoremVerdict values. Statements needing the FULL
regime are asserted only on FULL instances and reported elsewhere;
statements known to survive without SFin are asserted on BASE instances
as well.
"""
import itertools
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.analysis.boolean import boolean_classify, ladder_verdict, prop_ci_cj_check
from src.analysis.comparison import D_table, E_map, galois_witness, naturality_check, theorem_ed_check
from src.analysis.maps import MapAnalysis, closed_open_profile, families, preimage_adjunction_witness
from src.analysis.verdict import TheoremVerdict, sort_verdicts, verdict
from src.config import Config
from src.errors import JoinUndefined, PFrameError
from src.frames.congruence import (CongruenceFrame, SCongruence, congruences_by_join_irreducibles,
                                   congruences_by_partition_filter, congruences_by_principal_joins,
                                   enumerate_congruence_frame, e_map, factor_through_congruence_frame,
                                   generate, madden, nabla_embedding, nabla_formula, nabla_generated,
                                   quotient, delta_formula, delta_generated, describe_congruence)
from src.frames.freeframe import (FreeFrame, down_embed, enumerate_free_frame, free_extension,
                                  principal_join_law)
from src.frames.sframe import (SFrame, SFrameMap, compose, enumerate_maps, identity_map, is_isomorphism,
                               join_failure, preservation_check, right_adjoint)
from src.order.poset import has_n5_or_m3, lattice_profile
from src.order.selection import Regime
from src.utils.helpers import get_logger

logger = get_logger('theorems')


class Artifacts:
    """Derived structures of one S-frame, built on first use."""

    def __init__(self, L: SFrame):
        self.L = L

    @cached_property
    def free(self) -> FreeFrame:
        return enumerate_free_frame(self.L)

    @cached_property
    def congruences(self) -> CongruenceFrame:
        return enumerate_congruence_frame(self.L)

    @cached_property
    def free_congruences(self) -> CongruenceFrame:
        return enumerate_congruence_frame(self.free.frame)

    @cached_property
    def down(self) -> SFrameMap:
        return down_embed(self.L, self.free)

    @cached_property
    def nabla(self) -> SFrameMap:
        return nabla_embedding(self.L, self.congruences)

    @cached_property
    def e(self) -> SFrameMap:
        return e_map(self.L, self.free, self.congruences)

    @cached_property
    def E(self) -> SFrameMap:
        return E_map(self.L, self.free, self.congruences, self.free_congruences, self.e)

    @cached_property
    def D(self) -> List[int]:
        return D_table(self.L, self.free, self.congruences, self.free_congruences)

    @cached_property
    def madden(self):
        return madden(self.L, self.free)

    @cached_property
    def families(self):
        return families(self.L)


def _guarded(theorem: str, instance: str, regime: Regime, needs: Regime,
             check: Callable[[], List[TheoremVerdict]]) -> List[TheoremVerdict]:
    """Run a check; a library error inside it becomes a failing verdict."""
    try:
        return check()
    except PFrameError as e:
        logger.warning(f"{theorem} on {instance}: {type(e).__name__}: {e}")
        return [verdict(theorem, instance, regime, needs, False, witness=str(e.witness),
                        details=[f"{type(e).__name__}: {e}"])]


# ========================== IDENTITIES ==========================
def formula_identity_checks(L: SFrame, art: Artifacts) -> List[TheoremVerdict]:
    """Closed/open congruence identities that need SFin."""
    C = art.congruences
    full, name = Regime.FULL, L.name
    out: List[TheoremVerdict] = []

    # ∇ and Δ formulas against ⟨(0,a)⟩ and ⟨(a,1)⟩
    problems = []
    for a in range(L.size):
        try:
            if nabla_formula(L, a) != nabla_generated(L, a):
                problems.append(f"∇ formula/generated divergence at {L.name_of(a)}")
        except JoinUndefined:
            problems.append(f"∇ formula undefined at {L.name_of(a)}")
        if delta_formula(L, a) != delta_generated(L, a):
            problems.append(f"Δ formula/generated divergence at {L.name_of(a)}")
    out.append(verdict('f.iii', name, L.regime, full, not problems,
                       witness=problems[0] if problems else None, details=problems))

    nablas, deltas = art.families
    index = C.index
    failure = None
    for a in range(L.size):
        for b in range(L.size):
            if L.leq(a, b) and deltas[a].meet(nablas[b]) != generate(L, [(a, b)]):
                failure = failure or (L.name_of(a), L.name_of(b))
    out.append(verdict('f.iv', name, L.regime, full, failure is None, witness=failure))

    failure = None
    for i, theta in enumerate(C.congruences):
        pieces = [C.meet(index[nablas[b]], index[deltas[a]])
                  for a in range(L.size) for b in range(L.size)
                  if L.leq(a, b) and theta.related(a, b) and nablas[b] in index and deltas[a] in index]
        if C.join_all(pieces) != i:
            failure = failure or C.describe(i)
    out.append(verdict('g.i', name, L.regime, full, failure is None, witness=failure))

    failure, notes = None, []
    for a in range(L.size):
        for theta in C.congruences:
            joins = [L.join(x, a) for x in range(L.size)]
            if None in joins:
                failure = failure or f"{L.name_of(a)}: join undefined"
                notes.append(f"join-undefined with {L.name_of(a)}")
                break
            lhs = C.congruences[C.join(index[nablas[a]], index[theta])] if nablas[a] in index else None
            rhs = SCongruence.from_labels([theta.class_of[j] for j in joins])
            if lhs != rhs:
                failure = failure or f"∇_{L.name_of(a)} ∨ {describe_congruence(L, theta)}"
    out.append(verdict('g.ii', name, L.regime, full, failure is None, witness=failure, details=notes[:1]))

    failure = None
    for a in range(L.size):
        for theta in C.congruences:
            lhs = C.congruences[C.join(index[deltas[a]], index[theta])] if deltas[a] in index else None
            rhs = SCongruence.from_labels([theta.class_of[L.meet(x, a)] for x in range(L.size)])
            if lhs != rhs:
                failure = failure or f"Δ_{L.name_of(a)} ∨ {describe_congruence(L, theta)}"
    out.append(verdict('g.iii', name, L.regime, full, failure is None, witness=failure))

    out.append(_union_of_nablas(L, art))

    failure, notes = None, []
    F = art.free
    for x in range(L.size):
        for i in range(F.size):
            try:
                if not principal_join_law(L, x, F.ideal(i)):
                    failure = failure or (L.name_of(x), F.labels[i])
            except JoinUndefined as e:
                failure = failure or (L.name_of(x), F.labels[i])
                if not notes:
                    notes.append(f"JoinUndefined: {e}")
    out.append(verdict('principal_join_law', name, L.regime, full, failure is None, witness=failure, details=notes))
    return out


def _union_of_nablas(L: SFrame, art: Artifacts) -> TheoremVerdict:
    """For every S-ideal I, the join of the ∇_x (x ∈ I) is their union."""
    C, F = art.congruences, art.free
    for i, I in enumerate(F.ideals):
        members = [C.congruences[C.nabla_index[x]] for x in range(L.size) if I >> x & 1]
        joined = C.congruences[C.join_all(C.nabla_index[x] for x in range(L.size) if I >> x & 1)]
        for x in range(L.size):
            for y in range(x + 1, L.size):
                if joined.related(x, y) != any(m.related(x, y) for m in members):
                    return verdict('g.iv', L.name, L.regime, Regime.FULL, False, witness=F.labels[i],
                                   details=[f"⋁ ≠ ⋃ for the ideal {F.labels[i]} at ({L.name_of(x)}, {L.name_of(y)})"])
    return verdict('g.iv', L.name, L.regime, Regime.FULL, True)


def structural_checks(L: SFrame, art: Artifacts) -> List[TheoremVerdict]:
    """Checks that hold in every regime: enumeration, embeddings, Madden, free extension."""
    base, name = Regime.BASE, L.name
    F, C = art.free, art.congruences
    out: List[TheoremVerdict] = []

    if L.size <= Config.ORACLE_MAX_CARRIER:
        primary = set(congruences_by_principal_joins(L))
        oracle = set(congruences_by_partition_filter(L))
        agree = primary == oracle == set(C.congruences)
        if L.is_full:
            agree = agree and set(congruences_by_join_irreducibles(L)) == oracle
        out.append(verdict('congruence.algorithms', name, L.regime, base, agree,
                           witness={'principal': len(primary), 'partition': len(oracle)}))

    failure = None
    for i, j in itertools.combinations(range(C.size), 2):
        if C.congruences[i].meet(C.congruences[j]) not in C.index:
            failure = failure or (C.labels[i], C.labels[j])
    out.append(verdict('congruence.intersections', name, L.regime, base, failure is None, witness=failure))
    # a lattice always; a frame only under SFin
    out.append(verdict('congruence.frame', name, L.regime, Regime.FULL, C.is_frame,
                       witness=None if C.is_frame else has_n5_or_m3(C.frame.carrier)))

    out.append(verdict('free_frame.distributive', name, L.regime, base,
                       lattice_profile(F.frame.carrier).is_distributive))
    out.append(verdict('free_frame.principal', name, L.regime, Regime.FULL,
                       len(set(F.principal_index)) == F.size,
                       witness=[F.labels[i] for i in range(F.size) if not F.is_principal(i)]))

    out.append(verdict('e.injective', name, L.regime, base, len(set(art.e.table)) == F.size))
    out.extend(_guarded('madden', name, L.regime, base, lambda: [
        verdict('madden', name, L.regime, base, art.madden.map is not None)]))

    def extension_checks():
        ext_down = free_extension(art.down, F)
        ext_nabla = free_extension(art.nabla, F)
        return [verdict('free_extension', name, L.regime, base,
                        ext_down.table == tuple(range(F.size)) and ext_nabla.table == art.e.table)]
    out.extend(_guarded('free_extension', name, L.regime, base, extension_checks))

    def factor_checks():
        fbar = factor_through_congruence_frame(art.nabla, C)
        return [verdict('nabla.factor', name, L.regime, Regime.FULL, fbar.table == tuple(range(C.size)))]
    out.extend(_guarded('nabla.factor', name, L.regime, Regime.FULL, factor_checks))
    return out


# ========================== COMPARISON ==========================
def comparison_checks(L: SFrame, art: Artifacts) -> List[TheoremVerdict]:
    """E, its right adjoint D, and the identities relating them."""
    base, name = Regime.BASE, L.name
    out: List[TheoremVerdict] = []

    def dh():
        E = art.E
        joins = join_failure(E)
        return [verdict('dh', name, L.regime, base, joins is None,
                        witness=joins.witness if joins else None, details=[str(joins)] if joins else None),
                verdict('dh.frame_map', name, L.regime, Regime.FULL, E.finding is None,
                        details=[E.finding] if E.finding else None),
                verdict('dj', name, L.regime, base,
                        all(E(art.e(i)) == art.free_congruences.nabla_index[i] for i in range(art.free.size)))]
    out.extend(_guarded('dh', name, L.regime, base, dh))

    def eb():
        C, CH, D, E = art.congruences, art.free_congruences, art.D, art.E
        witness = galois_witness(E, D)
        preserves = (D[CH.bottom] == C.bottom and D[CH.top] == C.top
                     and all(D[CH.meet(i, j)] == C.meet(D[i], D[j])
                             for i, j in itertools.combinations(range(CH.size), 2)))
        return [verdict('eb', name, L.regime, base, witness is None and preserves, witness=witness)]
    out.extend(_guarded('eb', name, L.regime, base, eb))
    out.extend(_guarded('ec', name, L.regime, base, lambda: lemma_ec_checks(L, art)))
    out.extend(_guarded('ed', name, L.regime, base, lambda: [theorem_ed_check(L, art.free, art.down, art.E)]))
    return out


def lemma_ec_checks(L: SFrame, art: Artifacts) -> List[TheoremVerdict]:
    C, CH, F, D = art.congruences, art.free_congruences, art.free, art.D
    name = L.name
    join_form = union_form = principality = None
    for i, I in enumerate(F.ideals):
        image = C.congruences[D[CH.nabla_index[i]]]
        members = [x for x in range(L.size) if I >> x & 1]
        if D[CH.nabla_index[i]] != C.join_all(C.nabla_index[x] for x in members):
            join_form = join_form or F.labels[i]
        nablas = [C.congruences[C.nabla_index[x]] for x in members]
        if any(image.related(x, y) != any(n.related(x, y) for n in nablas)
               for x in range(L.size) for y in range(L.size)):
            union_form = union_form or F.labels[i]
        principal = F.is_principal(i)
        if principal != (C.join(D[CH.nabla_index[i]], D[CH.delta_index[i]]) == C.top):
            principality = principality or F.labels[i]
    principal_images = None
    for a in range(L.size):
        down_a = F.principal_index[a]
        if D[CH.nabla_index[down_a]] != C.nabla_index[a] or D[CH.delta_index[down_a]] != C.delta_index[a]:
            principal_images = principal_images or L.name_of(a)
    return [
        verdict('ec.a.join', name, L.regime, Regime.BASE, join_form is None, witness=join_form),
        verdict('ec.a.union', name, L.regime, Regime.FULL, union_form is None, witness=union_form,
                details=[f"D(∇_I) ≠ ⋃∇_i for I = {union_form}"] if union_form else None),
        verdict('ec.b', name, L.regime, Regime.BASE, principal_images is None, witness=principal_images),
        verdict('ec.c', name, L.regime, Regime.BASE, principality is None, witness=principality),
    ]


# ========================== CLOSED / OPEN ==========================
def theorem_K_check(L: SFrame, art: Optional[Artifacts] = None) -> TheoremVerdict:
    """Quotient maps are closed exactly for ∇ congruences and open exactly for Δ congruences."""
    art = art or Artifacts(L)
    C = art.congruences
    nablas, deltas = art.families
    nabla_set, delta_set = set(nablas), set(deltas)
    for i, theta in enumerate(C.congruences):
        Q, q = quotient(L, theta)
        analysis = closed_open_profile(q, art.families, families(Q))
        if analysis.closed != (theta in nabla_set) or analysis.open != (theta in delta_set):
            return verdict('K', L.name, L.regime, Regime.FULL, False, witness=C.describe(i),
                           details=[f"closed={analysis.closed} open={analysis.open} for {C.describe(i)}"])
    return verdict('K', L.name, L.regime, Regime.FULL, True)


def theorem_UV_check(L: SFrame, art: Optional[Artifacts] = None) -> Tuple[TheoremVerdict, TheoremVerdict]:
    """Closedness and openness of ↓ and ∇ against iso, completeness, frame and Boolean conditions."""
    art = art or Artifacts(L)
    profile = lattice_profile(L.carrier)
    down = closed_open_profile(art.down, art.families, families(art.free.frame))
    down_iso = is_isomorphism(art.down)
    u = {
        'a': (down.right_adjoint is not None, down_iso),
        'b': (down.closed, down_iso),
        'c': (down.left_adjoint is not None, profile.is_lattice),
        'd': (down.open, profile.is_lattice and profile.is_distributive),
    }
    nabla = closed_open_profile(art.nabla, art.families, families(art.congruences.frame))
    v = {
        'a': (nabla.closed, is_isomorphism(art.nabla)),
        'b': (nabla.open, profile.is_boolean_algebra),
    }

    def make(theorem, sides):
        broken = [k for k, (lhs, rhs) in sides.items() if lhs != rhs]
        return verdict(theorem, L.name, L.regime, Regime.FULL, not broken, witness=broken,
                       details=[f"({k}) {lhs} ⟺ {rhs}" for k, (lhs, rhs) in sides.items()])
    return make('U', u), make('V', v)


def map_checks(h: SFrameMap, instance: str, analysis: Optional[MapAnalysis] = None) -> List[TheoremVerdict]:
    """Frobenius characterisations, density lemma and adjoint preservation for one map."""
    analysis = analysis or closed_open_profile(h)
    regime = h.regime
    out = [
        verdict('J', instance, regime, Regime.FULL,
                analysis.closed_characterised and analysis.open_characterised,
                witness={'closed': analysis.closed, 'closed_by_adjoint': analysis.closed_by_adjoint,
                         'open': analysis.open, 'open_by_adjoint': analysis.open_by_adjoint}),
    ]
    iso = is_isomorphism(h)
    lemma = [
        not (analysis.dense and analysis.closed) or analysis.injective,
        not (analysis.dense and analysis.closed and analysis.surjective) or iso,
        not (analysis.codense and analysis.open) or analysis.injective,
        not (analysis.codense and analysis.open and analysis.surjective) or iso,
    ]
    out.append(verdict('L', instance, regime, Regime.FULL, all(lemma), witness=lemma))
    if max(h.domain.size, h.codomain.size) <= Config.PRESERVATION_MAX_CARRIER:
        problems = preservation_check(h)
        out.append(verdict('E.preservation', instance, regime, Regime.BASE, not problems,
                           witness=problems[:1] or None))
    return out


def lemma_LM_suite(maps: Sequence[Tuple[str, SFrameMap]],
                   analyses: Optional[Dict[int, MapAnalysis]] = None,
                   family_cache: Optional[Dict[int, tuple]] = None) -> List[TheoremVerdict]:
    """Lemma L on every map and the composition lemma on every composable pair."""
    analyses = analyses if analyses is not None else {}
    family_cache = family_cache if family_cache is not None else {}

    def analyse(h):
        if id(h) not in analyses:
            analyses[id(h)] = closed_open_profile(h, _families(h.domain, family_cache),
                                                  _families(h.codomain, family_cache))
        return analyses[id(h)]

    out: List[TheoremVerdict] = []
    for label, h in maps:
        out.extend(v for v in map_checks(h, label, analyse(h)) if v.theorem == 'L')
    for (lf, f), (lg, g) in itertools.product(maps, repeat=2):
        if f.codomain is not g.domain:
            continue
        out.append(composition_check(f, g, f"{lg}∘{lf}", analyse(f), analyse(g), family_cache))
    return out


def _families(L: SFrame, cache: Dict[int, tuple]) -> tuple:
    if id(L) not in cache:
        cache[id(L)] = families(L)
    return cache[id(L)]


def _worst(*regimes: Regime) -> Regime:
    if Regime.IRREGULAR in regimes:
        return Regime.IRREGULAR
    return Regime.FULL if all(r is Regime.FULL for r in regimes) else Regime.BASE


def composition_check(f: SFrameMap, g: SFrameMap, instance: str,
                      af: Optional[MapAnalysis] = None, ag: Optional[MapAnalysis] = None,
                      family_cache: Optional[Dict[int, tuple]] = None) -> TheoremVerdict:
    """Composition lemma for closed and open maps on one composable pair."""
    cache = family_cache if family_cache is not None else {}
    af = af or closed_open_profile(f, _families(f.domain, cache), _families(f.codomain, cache))
    ag = ag or closed_open_profile(g, _families(g.domain, cache), _families(g.codomain, cache))
    agf = closed_open_profile(compose(g, f), _families(f.domain, cache), _families(g.codomain, cache))
    clauses = {}
    for kind in ('closed', 'open'):
        pf, pg, pgf = getattr(af, kind), getattr(ag, kind), getattr(agf, kind)
        clauses[f"{kind}.i"] = not (pf and pg) or pgf
        clauses[f"{kind}.ii"] = not (pgf and ag.injective) or pf
        clauses[f"{kind}.iii"] = not (pgf and af.surjective) or pg
    broken = [k for k, ok in clauses.items() if not ok]
    return verdict('M', instance, _worst(f.regime, g.regime), Regime.FULL, not broken, witness=broken)


def adjoint_composition_check(f: SFrameMap, g: SFrameMap, instance: str) -> Optional[TheoremVerdict]:
    """Right adjoint of g∘f is r_f ∘ r_g whenever both exist."""
    rf, rg = right_adjoint(f), right_adjoint(g)
    if not (rf.exists and rg.exists):
        return None
    rgf = right_adjoint(compose(g, f))
    expected = tuple(rf.table[rg.table[n]] for n in range(g.codomain.size))
    return verdict('adjoint.composition', instance, _worst(f.regime, g.regime), Regime.BASE,
                   rgf.exists and rgf.table == expected)


# ========================== SUITES ==========================
def structure_suite(L: SFrame, art: Optional[Artifacts] = None) -> List[TheoremVerdict]:
    """Every per-structure verdict for one S-frame."""
    art = art or Artifacts(L)
    name, regime = L.name, L.regime
    out: List[TheoremVerdict] = []
    out.extend(_guarded('identities', name, regime, Regime.FULL, lambda: formula_identity_checks(L, art)))
    out.extend(_guarded('structure', name, regime, Regime.BASE, lambda: structural_checks(L, art)))
    out.extend(comparison_checks(L, art))
    out.extend(_guarded('K', name, regime, Regime.FULL, lambda: [theorem_K_check(L, art)]))
    out.extend(_guarded('UV', name, regime, Regime.FULL, lambda: list(theorem_UV_check(L, art))))
    out.extend(_guarded('ci', name, regime, Regime.FULL,
                        lambda: list(prop_ci_cj_check(L, art.free, art.congruences, art.e, art.nabla))))
    out.extend(_guarded('da.ladder', name, regime, Regime.FULL,
                        lambda: [ladder_verdict(L, boolean_classify(L, art.free, art.madden))]))

    named_maps = [(f"id[{name}]", lambda: identity_map(L)), (f"↓[{name}]", lambda: art.down),
                  (f"∇[{name}]", lambda: art.nabla), (f"madden[{name}]", lambda: art.madden.map)]
    for label, build in named_maps:
        out.extend(_guarded('maps', label, regime, Regime.FULL, lambda: map_checks(build(), label)))
    return out


def catalog_maps(structures: Sequence[SFrame], max_size: int = 4) -> List[Tuple[str, SFrameMap]]:
    """Every S-frame map between small structures sharing a selection kind."""
    small = [L for L in structures if L.size <= max_size]
    maps: List[Tuple[str, SFrameMap]] = []
    for L, M in itertools.product(small, repeat=2):
        if L.selection.kind is not M.selection.kind:
            continue
        for k, h in enumerate(enumerate_maps(L, M)):
            maps.append((f"{L.name}→{M.name}#{k}", h))
    return maps


def map_suite(maps: Sequence[Tuple[str, SFrameMap]],
              artifacts: Dict[int, Artifacts]) -> List[TheoremVerdict]:
    """Per-map and per-pair verdicts, including naturality of E and the C(h) adjunction."""

    def art(L: SFrame) -> Artifacts:
        if id(L) not in artifacts:
            artifacts[id(L)] = Artifacts(L)
        return artifacts[id(L)]

    analyses: Dict[int, MapAnalysis] = {}
    out: List[TheoremVerdict] = []
    for label, h in maps:
        analyses[id(h)] = closed_open_profile(h, art(h.domain).families, art(h.codomain).families)
        out.extend(v for v in map_checks(h, label, analyses[id(h)]) if v.theorem != 'L')
        AL, AM = art(h.domain), art(h.codomain)

        def adjunction():
            witness = preimage_adjunction_witness(h, AL.congruences, AM.congruences)
            return [verdict('cs.adjunction', label, h.regime, Regime.BASE, witness is None, witness=witness)]
        out.extend(_guarded('cs.adjunction', label, h.regime, Regime.BASE, adjunction))
        out.extend(_guarded('eg', label, h.regime, Regime.BASE, lambda: [naturality_check(
            h, AL.congruences, AM.congruences, AL.free, AM.free,
            AL.free_congruences, AM.free_congruences, AL.E, AM.E, label)]))
    family_cache = {key: a.families for key, a in artifacts.items()}
    out.extend(lemma_LM_suite(maps, analyses, family_cache))
    for (lf, f), (lg, g) in itertools.product(maps, repeat=2):
        if f.codomain is g.domain:
            checked = adjoint_composition_check(f, g, f"{lg}∘{lf}")
            if checked is not None:
                out.append(checked)
    return out


SUITES = ('full', 'base', 'all')


def select_structures(structures: Iterable[SFrame], suite: str) -> List[SFrame]:
    if suite == 'full':
        return [L for L in structures if L.regime is Regime.FULL]
    if suite == 'base':
        return [L for L in structures if L.regime is not Regime.FULL]
    return list(structures)


def run_suite(structures: Sequence[SFrame], suite: str = 'all', map_bound: int = 4) -> List[TheoremVerdict]:
    """
    Run every check on the structures the suite selects and on all maps
    between the small ones; verdicts come back sorted by (theorem, instance).
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite '{suite}' (expected one of {', '.join(SUITES)})")
    chosen = select_structures(structures, suite)
    artifacts: Dict[int, Artifacts] = {}
    verdicts: List[TheoremVerdict] = []
    for L in chosen:
        artifacts[id(L)] = Artifacts(L)
        verdicts.extend(structure_suite(L, artifacts[id(L)]))
        logger.info(f"checked {L.name} ({L.regime.value})")
    maps = catalog_maps(chosen, map_bound)
    verdicts.extend(map_suite(maps, artifacts))
    failures = [v for v in verdicts if v.is_failure]
    logger.info(f"{len(verdicts)} verdicts over {len(chosen)} structures and {len(maps)} maps; "
                f"{len(failures)} asserted failure(s)")
    return sort_verdicts(verdicts)
