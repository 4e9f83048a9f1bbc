"""
Boolean conditions on S-frames: the four-step ladder and the two groups of
equivalent characterisations through the ideal frame and the congruence
frame.
"""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from src.analysis.verdict import TheoremVerdict, verdict
from src.frames.congruence import CongruenceFrame, MaddenResult, madden
from src.frames.freeframe import FreeFrame, enumerate_free_frame
from src.frames.sframe import SFrame, SFrameMap, density_profile, is_isomorphism
from src.order.poset import is_complemented, lattice_profile, pseudocomplement
from src.order.selection import Regime
from src.utils.helpers import get_logger

logger = get_logger('boolean')


@dataclass
class BooleanLadder:
    """(a) ideal frame Boolean, (b) Boolean frame, (c) Boolean S-frame, (d) d-reduced."""
    a_free_frame_boolean: bool
    b_boolean_frame: bool
    c_boolean_sframe: bool
    d_d_reduced: bool
    witnesses: Dict[str, str] = field(default_factory=dict)

    def as_tuple(self) -> Tuple[bool, bool, bool, bool]:
        return self.a_free_frame_boolean, self.b_boolean_frame, self.c_boolean_sframe, self.d_d_reduced

    def as_dict(self) -> Dict[str, bool]:
        return dict(zip('abcd', self.as_tuple()))

    @property
    def ladder_holds(self) -> bool:
        """Each condition implies the next."""
        flags = self.as_tuple()
        return all(not flags[i] or flags[i + 1] for i in range(3))


def all_complemented(L: SFrame) -> Optional[int]:
    """First element of L without a complement, or None."""
    for x in range(L.size):
        if not is_complemented(L.carrier, x):
            return x
    return None


def boolean_classify(L: SFrame, F: Optional[FreeFrame] = None,
                     pi: Optional[MaddenResult] = None) -> BooleanLadder:
    F = F or enumerate_free_frame(L)
    pi = pi or madden(L, F)
    witnesses: Dict[str, str] = {}

    free_profile = lattice_profile(F.frame.carrier)
    a = free_profile.is_boolean_algebra
    if not a:
        bad = next(i for i in range(F.size) if not is_complemented(F.frame.carrier, i))
        witnesses['a'] = f"{F.labels[bad]} has no complement in the ideal frame"

    profile = lattice_profile(L.carrier)
    b = profile.is_boolean_algebra
    if not b:
        witnesses['b'] = 'not distributive' if profile.is_lattice and not profile.is_distributive else 'not Boolean'

    missing = all_complemented(L)
    c = missing is None
    if not c:
        witnesses['c'] = f"{L.name_of(missing)} has no complement"

    d = pi.d_reduced
    if not d:
        witnesses['d'] = f"Madden congruence has {pi.congruence.class_count} classes on {L.size} elements"

    ladder = BooleanLadder(a, b, c, d, witnesses)
    logger.debug(f"{L.name}: ladder {ladder.as_dict()}")
    return ladder


def ladder_verdict(L: SFrame, ladder: BooleanLadder) -> TheoremVerdict:
    return verdict('da.ladder', L.name, L.regime, Regime.FULL, ladder.ladder_holds,
                   witness=ladder.as_dict(), details=[f"{k}: {v}" for k, v in ladder.witnesses.items()])


def _agreement(theorem: str, L: SFrame, conditions: Dict[str, bool]) -> TheoremVerdict:
    holds = len(set(conditions.values())) == 1
    return verdict(theorem, L.name, L.regime, Regime.FULL, holds, witness=conditions,
                   details=[f"{k}={v}" for k, v in conditions.items()])


def prop_ci_cj_check(L: SFrame, F: FreeFrame, C: CongruenceFrame,
                     e: SFrameMap, nabla: SFrameMap) -> Tuple[TheoremVerdict, TheoremVerdict]:
    """
    Two groups of four conditions, each evaluated independently; a verdict
    holds when its four conditions agree.
    """
    H = F.frame.carrier
    every_join_of_nablas = True
    every_nabla = True
    for i in range(C.size):
        below = [C.nabla_index[a] for a in range(L.size) if C.leq(C.nabla_index[a], i)]
        if C.join_all(below) != i:
            every_join_of_nablas = False
        if not C.nabla_image >> i & 1:
            every_nabla = False
    ci = {
        'boolean': all_complemented(L) is None,
        'principal_ideals_complemented': all(is_complemented(H, F.principal_index[x]) for x in range(L.size)),
        'e_iso': is_isomorphism(e),
        'joins_of_nablas': every_join_of_nablas,
    }
    dense = [i for i in range(F.size) if pseudocomplement(H, i) == H.bottom]
    cj = {
        'free_frame_boolean': lattice_profile(H).is_boolean_algebra,
        'top_only_dense': dense == [H.top],
        'nabla_iso': density_profile(nabla).surjective and is_isomorphism(nabla),
        'all_nablas': every_nabla,
    }
    return _agreement('ci', L, ci), _agreement('cj', L, cj)
