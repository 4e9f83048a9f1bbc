"""
Selection functions restricted to one finite carrier, and their axioms.

A selection is stored as a kind tag plus, for the explicit kind, the family
of designated bitsets. The finite kind designates every subset and is never
materialised as a family on large carriers.
"""
import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional

from src.config import Config
from src.errors import CapacityExceeded, MissingSets, UnknownElement
from src.order.poset import ElementSet, MeetSemilattice, bit, iter_bits, submasks
from src.utils.helpers import format_set, get_logger

logger = get_logger('selection')


class SelectionKind(str, Enum):
    SINGLETONS = 'singletons'
    FINITE = 'finite'
    EXPLICIT = 'explicit'


class Regime(str, Enum):
    """FULL: every checked axiom incl. SFin; BASE: all but SFin; IRREGULAR: anything else."""
    FULL = 'FULL'
    BASE = 'BASE'
    IRREGULAR = 'IRREGULAR'


AXIOMS = ('S1', 'S2', "S2'", 'S3', 'SFin', 'SCov', 'SRef')


@dataclass(frozen=True)
class SelectionFunction:
    carrier: MeetSemilattice
    kind: SelectionKind
    family: FrozenSet[int] = field(default_factory=frozenset)

    def is_designated_bits(self, bits: int) -> bool:
        if self.kind is SelectionKind.FINITE:
            return True
        if self.kind is SelectionKind.SINGLETONS:
            return bits & (bits - 1) == 0
        return bits in self.family

    def designated_sets(self) -> List[int]:
        """Every designated subset as a bitset, ascending."""
        n = self.carrier.size
        if self.kind is SelectionKind.SINGLETONS:
            return [0] + [bit(i) for i in range(n)]
        if self.kind is SelectionKind.FINITE:
            if n > Config.MAX_SUBSET_SCAN:
                raise CapacityExceeded(f"powerset of a {n}-element carrier", Config.MAX_SUBSET_SCAN)
            return list(range(1 << n))
        return sorted(self.family)

    def describe(self, bits: int) -> str:
        return format_set(self.carrier.poset.names(bits))

    def as_json(self) -> dict:
        data = {'kind': self.kind.value}
        if self.kind is SelectionKind.EXPLICIT:
            data['sets'] = [self.carrier.poset.names(b) for b in sorted(self.family) if b]
        return data


def make_selection(L: MeetSemilattice, kind, sets: Optional[Iterable] = None) -> SelectionFunction:
    """
    Build a selection over L.

    Args:
        L: the carrier
        kind: 'singletons' | 'finite' | 'explicit' (or a SelectionKind)
        sets: for the explicit kind, an iterable of ElementSet, bitsets, or
            collections of element identifiers

    Returns:
        SelectionFunction with the empty set always designated
    """
    kind = SelectionKind(kind)
    if kind is not SelectionKind.EXPLICIT:
        return SelectionFunction(L, kind)
    if sets is None:
        raise MissingSets("explicit selection requires a family of sets")
    family = {0}
    for s in sets:
        if isinstance(s, ElementSet):
            bits = s.bits
        elif isinstance(s, int):
            bits = s
        else:
            bits = L.poset.bits_for(s)
        if bits & ~L.poset.all_bits:
            raise UnknownElement(f"designated set {bits:b} is not a subset of the carrier", bits)
        family.add(bits)
    return SelectionFunction(L, kind, frozenset(family))


def is_designated(S: SelectionFunction, X: ElementSet) -> bool:
    return S.is_designated_bits(X.bits)


# ========================== AXIOM REPORT ==========================
@dataclass
class AxiomVerdict:
    holds: bool
    witness: Optional[List[List[str]]] = None
    notes: List[str] = field(default_factory=list)


@dataclass
class AxiomReport:
    verdicts: Dict[str, AxiomVerdict]
    deferred: Dict[str, str]

    def holds(self, axiom: str) -> bool:
        return self.verdicts[axiom].holds

    @property
    def regime(self) -> Regime:
        failed = [a for a in AXIOMS if not self.verdicts[a].holds]
        if not failed:
            return Regime.FULL
        if failed == ['SFin']:
            return Regime.BASE
        return Regime.IRREGULAR

    def as_json(self) -> dict:
        return {
            'regime': self.regime.value,
            'axioms': {a: {'holds': v.holds, 'witness': v.witness, 'notes': v.notes}
                       for a, v in self.verdicts.items()},
            'deferred': self.deferred,
        }


DEFERRED_NOTES = {
    'S4': 'enforced constructively: quotients and images carry {f[G] : G designated}',
    'SSub': 'enforced constructively: sub-structures inherit designated subsets',
}


def check_axioms(S: SelectionFunction) -> AxiomReport:
    """Check (S1)-(SRef) on the carrier by direct quantification."""
    L = S.carrier
    names = L.poset.names
    verdicts: Dict[str, AxiomVerdict] = {}

    if S.kind is SelectionKind.FINITE:
        # every subset is designated; only the definedness of joins can matter
        for axiom in AXIOMS:
            verdicts[axiom] = AxiomVerdict(True)
        verdicts["S2'"] = _check_s2_prime_finite(L)
        return AxiomReport(verdicts, dict(DEFERRED_NOTES))

    family = S.designated_sets()
    n = L.size

    # S1
    verdicts['S1'] = AxiomVerdict(True)
    for x in range(n):
        if not S.is_designated_bits(bit(x)):
            verdicts['S1'] = AxiomVerdict(False, [[L.name(x)]])
            break

    # S2 and S2'
    verdicts['S2'] = AxiomVerdict(True)
    verdicts["S2'"] = AxiomVerdict(True)
    for G, H in itertools.product(family, repeat=2):
        if verdicts['S2'].holds:
            meets = 0
            for x in iter_bits(G):
                for y in iter_bits(H):
                    meets |= bit(L.meet(x, y))
            if not S.is_designated_bits(meets):
                verdicts['S2'] = AxiomVerdict(False, [names(G), names(H)])
        if verdicts["S2'"].holds:
            joins = _pairwise_joins(L, G, H)
            if joins is None:
                if not verdicts["S2'"].notes:
                    verdicts["S2'"].notes.append(
                        f"join-undefined: skipped pairs such as ({format_set(names(G))}, {format_set(names(H))})")
            elif not S.is_designated_bits(joins):
                verdicts["S2'"] = AxiomVerdict(False, [names(G), names(H)])

    # S3
    verdicts['S3'] = _check_s3(S, family)

    # SFin: first non-designated subset in ascending bitset order
    if n > Config.MAX_SUBSET_SCAN:
        raise CapacityExceeded(f"SFin scan over a {n}-element carrier", Config.MAX_SUBSET_SCAN)
    verdicts['SFin'] = AxiomVerdict(True)
    for X in range(1 << n):
        if not S.is_designated_bits(X):
            verdicts['SFin'] = AxiomVerdict(False, [names(X)])
            break

    # SCov
    verdicts['SCov'] = AxiomVerdict(True)
    for H in family:
        if L.join_bits(H) != L.top:
            continue
        bad = next((G for G in submasks(H) if not S.is_designated_bits(G)), None)
        if bad is not None:
            verdicts['SCov'] = AxiomVerdict(False, [names(bad), names(H)])
            break

    # SRef
    verdicts['SRef'] = _check_sref(S, family)

    report = AxiomReport(verdicts, dict(DEFERRED_NOTES))
    logger.debug(f"axioms for {S.kind.value} selection on {n} elements: regime {report.regime.value}")
    return report


def _pairwise_joins(L: MeetSemilattice, G: int, H: int) -> Optional[int]:
    joins = 0
    for x in iter_bits(G):
        for y in iter_bits(H):
            j = L.join(x, y)
            if j is None:
                return None
            joins |= bit(j)
    return joins


def _check_s2_prime_finite(L: MeetSemilattice) -> AxiomVerdict:
    verdict = AxiomVerdict(True)
    for x in range(L.size):
        for y in range(L.size):
            if L.join(x, y) is None:
                verdict.notes.append(f"join-undefined: skipped pairs involving {L.name(x)} and {L.name(y)}")
                return verdict
    return verdict


def _check_s3(S: SelectionFunction, family: List[int]) -> AxiomVerdict:
    L = S.carrier
    decompositions: Dict[int, List[int]] = {}
    for H in family:
        j = L.join_bits(H)
        if j is not None:
            decompositions.setdefault(j, []).append(H)
    for G in family:
        options = []
        for x in iter_bits(G):
            if x not in decompositions:
                break
            options.append(decompositions[x])
        else:
            for choice in itertools.product(*options):
                union = 0
                for H in choice:
                    union |= H
                if not S.is_designated_bits(union):
                    return AxiomVerdict(False, [L.poset.names(G), L.poset.names(union)])
    return AxiomVerdict(True)


def _dominated(L: MeetSemilattice, X: int, Y: int) -> bool:
    """X <= Y: every x in X lies below some y in Y."""
    return all(L.poset.up[x] & Y for x in iter_bits(X))


def _check_sref(S: SelectionFunction, family: List[int]) -> AxiomVerdict:
    L = S.carrier
    for X in family:
        for Y in range(1 << L.size):
            if not _dominated(L, X, Y):
                continue
            found = any(C & ~Y == 0 and _dominated(L, X, C) for C in family)
            if not found:
                return AxiomVerdict(False, [L.poset.names(X), L.poset.names(Y)])
    return AxiomVerdict(True)
