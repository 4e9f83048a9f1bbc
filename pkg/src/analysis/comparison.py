"""
Comparison of the S-congruences of L with the frame congruences of its
ideal frame: the frame map E, its right adjoint D, and the naturality of E.
"""
from typing import List, Optional, Tuple

from src.analysis.verdict import TheoremVerdict, verdict
from src.errors import InvariantViolation
from src.frames.congruence import (CongruenceFrame, SCongruence, cs_functor_map, generate,
                                   is_scongruence)
from src.frames.freeframe import FreeFrame, free_extension, s_lindelof_elements
from src.frames.sframe import (SFrame, SFrameMap, checked_map, compose, density_profile, is_isomorphism,
                               join_failure, validate_map)
from src.order.poset import lattice_profile
from src.order.selection import Regime
from src.utils.helpers import get_logger

logger = get_logger('comparison')


def E_map(L: SFrame, F: FreeFrame, C: CongruenceFrame, CH: CongruenceFrame,
          e: Optional[SFrameMap] = None) -> SFrameMap:
    """
    θ ↦ the congruence of the ideal frame generated by {(↓x, ↓y) : x θ y}.

    Checks E(∇_a) = ∇_↓a, E(Δ_a) = Δ_↓a, density, and E ∘ e = ∇ when e is
    given.
    """
    H = F.frame
    down = F.principal_index
    table = [CH.index[generate(H, ((down[x], down[y]) for x, y in theta.pairs()))]
             for theta in C.congruences]
    E = checked_map(table, C.frame, CH.frame, strict=L.regime is Regime.FULL)
    for a in range(L.size):
        if E(C.nabla_index[a]) != CH.nabla_index[down[a]]:
            raise InvariantViolation(f"E(∇_{L.name_of(a)}) ≠ ∇_↓{L.name_of(a)}", L.name_of(a))
        if E(C.delta_index[a]) != CH.delta_index[down[a]]:
            raise InvariantViolation(f"E(Δ_{L.name_of(a)}) ≠ Δ_↓{L.name_of(a)}", L.name_of(a))
    if not density_profile(E).dense:
        raise InvariantViolation(f"E is not dense on {L.name}", L.name)
    if e is not None:
        for i in range(F.size):
            if E(e(i)) != CH.nabla_index[i]:
                raise InvariantViolation(f"E ∘ e differs from ∇ at {F.labels[i]}", F.labels[i])
    return E


def D_table(L: SFrame, F: FreeFrame, C: CongruenceFrame, CH: CongruenceFrame) -> List[int]:
    """Φ ↦ {(x, y) : (↓x, ↓y) ∈ Φ}, as indices into the congruence frame of L."""
    down = F.principal_index
    table = []
    for Phi in CH.congruences:
        theta = SCongruence.from_labels([Phi.class_of[down[x]] for x in range(L.size)])
        if theta not in C.index:
            check = is_scongruence(L, theta)
            raise InvariantViolation(f"D of a frame congruence of H({L.name}) is not an S-congruence",
                                     check.witness)
        table.append(C.index[theta])
    return table


def galois_witness(lower: SFrameMap, upper: List[int]) -> Optional[Tuple[str, str]]:
    """First (θ, Φ) breaking E(θ) ≤ Φ ⟺ θ ≤ D(Φ)."""
    A, B = lower.domain, lower.codomain
    for i in range(A.size):
        for j in range(B.size):
            if B.leq(lower(i), j) != A.leq(i, upper[j]):
                return A.name_of(i), B.name_of(j)
    return None


def theorem_ed_check(L: SFrame, F: FreeFrame, down: SFrameMap, E: SFrameMap) -> TheoremVerdict:
    """Four conditions that must agree: ↓ iso, every ideal principal, frame of S-Lindelöf elements, E iso."""
    profile = lattice_profile(L.carrier)
    is_frame = profile.is_lattice and profile.is_distributive
    lindelof = False
    if is_frame:
        lindelof = len(s_lindelof_elements(L, L.selection)) == L.size
    conditions = {
        'down_iso': is_isomorphism(down),
        'all_principal': len(set(F.principal_index)) == F.size,
        'lindelof_frame': is_frame and lindelof,
        'E_iso': is_isomorphism(E),
    }
    holds = len(set(conditions.values())) == 1
    return verdict('ed', L.name, L.regime, Regime.BASE, holds, witness=conditions,
                   details=[f"{k}={v}" for k, v in conditions.items()])


def free_functor_map(h: SFrameMap, FL: FreeFrame, FM: FreeFrame) -> SFrameMap:
    """H(h): the frame map between ideal frames extending ↓ ∘ h."""
    down_M = validate_map(FM.principal_index, h.codomain, FM.frame)
    return free_extension(compose(down_M, h), FL)


def naturality_check(h: SFrameMap, CL: CongruenceFrame, CM: CongruenceFrame,
                     FL: FreeFrame, FM: FreeFrame, CHL: CongruenceFrame, CHM: CongruenceFrame,
                     EL: SFrameMap, EM: SFrameMap, instance: str) -> TheoremVerdict:
    """E_M ∘ C(h) = C(H(h)) ∘ E_L on every S-congruence of the domain."""
    Ch = cs_functor_map(h, CL, CM)
    CHh = cs_functor_map(free_functor_map(h, FL, FM), CHL, CHM)
    for i in range(CL.size):
        left = EM(Ch(i))
        right = CHh(EL(i))
        if left != right:
            return verdict('eg', instance, h.regime, Regime.BASE, False, witness=CL.describe(i),
                           details=[f"E_M(C(h)) = {CHM.describe(left)}, C(H(h))(E_L) = {CHM.describe(right)}"])
    return verdict('eg', instance, h.regime, Regime.BASE, True)
