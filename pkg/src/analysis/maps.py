"""
Closed and open S-frame maps.

A map h: L -> M is closed when the preimage of every ∇_m is some ∇_x, and
open when the preimage of every Δ_m is some Δ_x. The ∇/Δ families come
from the formulas on full frames and from the generated congruences
⟨(0,a)⟩, ⟨(a,1)⟩ otherwise.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.errors import InvariantViolation
from src.frames.congruence import (CongruenceFrame, SCongruence, delta_family, delta_formula,
                                   image_congruence, is_scongruence, nabla_family, nabla_formula)
from src.frames.sframe import SFrame, SFrameMap, density_profile, left_adjoint, right_adjoint
from src.order.selection import Regime, SelectionKind
from src.utils.helpers import get_logger

logger = get_logger('maps')


def families(L: SFrame) -> Tuple[List[SCongruence], List[SCongruence]]:
    """(∇_a for every a, Δ_a for every a): the formulas on frames, generated otherwise."""
    if L.is_full and L.regime is Regime.FULL:
        return ([nabla_formula(L, a) for a in range(L.size)],
                [delta_formula(L, a) for a in range(L.size)])
    return nabla_family(L), delta_family(L)


def preimage_cong(h: SFrameMap, phi: SCongruence) -> SCongruence:
    """(h×h)⁻¹(φ) = {(x, y) : h(x) φ h(y)}"""
    theta = SCongruence.from_labels([phi.class_of[h(x)] for x in range(h.domain.size)])
    check = is_scongruence(h.domain, theta)
    if not check:
        # explicit selections need not carry images of designated sets to designated sets
        if SelectionKind.EXPLICIT in (h.domain.selection.kind, h.codomain.selection.kind):
            logger.warning(f"preimage under {h!r} is not an S-congruence ({check.law} {check.witness})")
        else:
            raise InvariantViolation(f"preimage under {h!r} is not an S-congruence", check.witness)
    return theta


def preimage_adjunction_witness(h: SFrameMap, CL: CongruenceFrame,
                                CM: CongruenceFrame) -> Optional[Tuple[str, str]]:
    """
    First (θ, φ) breaking ⟨(h×h)[θ]⟩ ⊆ φ ⟺ θ ⊆ (h×h)⁻¹(φ), or None when the
    Galois condition holds everywhere.
    """
    images = [image_congruence(h, theta) for theta in CL.congruences]
    for j, phi in enumerate(CM.congruences):
        pre = preimage_cong(h, phi)
        for i, theta in enumerate(CL.congruences):
            if images[i].leq(phi) != theta.leq(pre):
                return CL.labels[i], CM.labels[j]
    return None


@dataclass
class MapAnalysis:
    closed: bool
    open: bool
    dense: bool
    codense: bool
    injective: bool
    surjective: bool
    right_adjoint: Optional[Dict[str, str]]
    left_adjoint: Optional[Dict[str, str]]
    closed_by_adjoint: bool
    open_by_adjoint: bool
    regime: Regime
    witnesses: Dict[str, Any] = field(default_factory=dict)

    @property
    def closed_characterised(self) -> bool:
        return self.closed == self.closed_by_adjoint

    @property
    def open_characterised(self) -> bool:
        return self.open == self.open_by_adjoint

    def as_dict(self) -> Dict[str, Any]:
        return {
            'closed': self.closed,
            'open': self.open,
            'dense': self.dense,
            'codense': self.codense,
            'injective': self.injective,
            'surjective': self.surjective,
            'right_adjoint': self.right_adjoint,
            'left_adjoint': self.left_adjoint,
            'closed_by_adjoint': self.closed_by_adjoint,
            'open_by_adjoint': self.open_by_adjoint,
            'regime': self.regime.value,
            'witnesses': self.witnesses,
        }


def _first_missing(h: SFrameMap, codomain_family: Sequence[SCongruence],
                   domain_family: Sequence[SCongruence]) -> Optional[int]:
    available = set(domain_family)
    for m, phi in enumerate(codomain_family):
        if preimage_cong(h, phi) not in available:
            return m
    return None


def _right_frobenius(h: SFrameMap, r: Sequence[int]) -> Optional[str]:
    """r(h(x) ∨ m) = x ∨ r(m) for all x, m; returns a description of the first failure."""
    L, M = h.domain, h.codomain
    for x in range(L.size):
        for m in range(M.size):
            top = M.join(h(x), m)
            rhs = L.join(x, r[m])
            if top is None or rhs is None:
                return f"join undefined at x={L.name_of(x)}, m={M.name_of(m)}"
            if r[top] != rhs:
                return f"r(h({L.name_of(x)}) ∨ {M.name_of(m)}) ≠ {L.name_of(x)} ∨ r({M.name_of(m)})"
    return None


def _left_frobenius(h: SFrameMap, l: Sequence[int]) -> Optional[str]:
    """l(h(x) ∧ m) = x ∧ l(m) for all x, m."""
    L, M = h.domain, h.codomain
    for x in range(L.size):
        for m in range(M.size):
            if l[M.meet(h(x), m)] != L.meet(x, l[m]):
                return f"l(h({L.name_of(x)}) ∧ {M.name_of(m)}) ≠ {L.name_of(x)} ∧ l({M.name_of(m)})"
    return None


def closed_open_profile(h: SFrameMap,
                        domain_families: Optional[Tuple[List[SCongruence], List[SCongruence]]] = None,
                        codomain_families: Optional[Tuple[List[SCongruence], List[SCongruence]]] = None
                        ) -> MapAnalysis:
    """Closedness, openness, density, adjoints and their Frobenius characterisations."""
    L, M = h.domain, h.codomain
    nabla_L, delta_L = domain_families or families(L)
    nabla_M, delta_M = codomain_families or families(M)
    witnesses: Dict[str, Any] = {}

    not_closed = _first_missing(h, nabla_M, nabla_L)
    if not_closed is not None:
        witnesses['closed'] = f"preimage of ∇_{M.name_of(not_closed)} is no ∇_x"
    not_open = _first_missing(h, delta_M, delta_L)
    if not_open is not None:
        witnesses['open'] = f"preimage of Δ_{M.name_of(not_open)} is no Δ_x"

    r = right_adjoint(h)
    l = left_adjoint(h)
    closed_by_adjoint = False
    if r.exists:
        failure = _right_frobenius(h, r.table)
        closed_by_adjoint = failure is None
        if failure:
            witnesses['right_frobenius'] = failure
    else:
        witnesses['right_adjoint'] = M.name_of(r.witness)
    open_by_adjoint = False
    if l.exists:
        failure = _left_frobenius(h, l.table)
        open_by_adjoint = failure is None
        if failure:
            witnesses['left_frobenius'] = failure
    else:
        witnesses['left_adjoint'] = M.name_of(l.witness)

    profile = density_profile(h)
    if not profile.dense:
        witnesses['dense'] = next(L.name_of(x) for x in range(L.size) if h(x) == M.bottom and x != L.bottom)
    if not profile.codense:
        witnesses['codense'] = next(L.name_of(x) for x in range(L.size) if h(x) == M.top and x != L.top)

    def as_names(table):
        return None if table is None else {M.name_of(m): L.name_of(x) for m, x in enumerate(table)}

    analysis = MapAnalysis(
        closed=not_closed is None,
        open=not_open is None,
        dense=profile.dense,
        codense=profile.codense,
        injective=profile.injective,
        surjective=profile.surjective,
        right_adjoint=as_names(r.table),
        left_adjoint=as_names(l.table),
        closed_by_adjoint=closed_by_adjoint,
        open_by_adjoint=open_by_adjoint,
        regime=h.regime,
        witnesses=witnesses,
    )
    logger.debug(f"{h!r}: closed={analysis.closed} open={analysis.open}")
    return analysis
