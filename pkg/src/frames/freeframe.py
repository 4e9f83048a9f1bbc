"""
S-ideals and the free frame over an S-frame.

An S-ideal is a nonempty downset closed under designated joins. All of them,
ordered by inclusion, form a finite frame; x ↦ ↓x embeds the S-frame into it.
"""
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.config import Config
from src.errors import CapacityExceeded, InvariantViolation, JoinUndefined, MissingJoin
from src.order.poset import ElementSet, MeetSemilattice, Poset, bit, iter_bits, popcount, submasks
from src.order.selection import Regime, SelectionFunction, SelectionKind, make_selection
from src.frames.sframe import SFrame, SFrameMap, checked_map, validate_map, validate_sframe
from src.utils.helpers import format_set, get_logger, hasse_dot

logger = get_logger('freeframe')


@dataclass(frozen=True)
class SIdeal:
    members: ElementSet

    @property
    def bits(self) -> int:
        return self.members.bits

    def __contains__(self, x: int) -> bool:
        return x in self.members


def sideal_closure_bits(L: SFrame, bits: int) -> int:
    """Least S-ideal containing ``bits`` (the empty set closes to {0})."""
    down = L.carrier.poset.down
    if L.is_full:
        # every subset is designated: the closure is principal
        j = L.join_bits(bits)
        return down[j]
    current = L.carrier.poset.downclose(bits) | bit(L.bottom)
    designated = L.selection.designated_sets()
    changed = True
    while changed:
        changed = False
        for B in designated:
            if B & ~current:
                continue
            j = L.join_bits(B)
            if not current >> j & 1:
                current |= down[j]
                changed = True
    return current


def sideal_closure(L: SFrame, X: ElementSet) -> SIdeal:
    return SIdeal(ElementSet(sideal_closure_bits(L, X.bits), L.size))


def is_sideal(L: SFrame, bits: int) -> bool:
    return bits != 0 and sideal_closure_bits(L, bits) == bits


# ========================== FREE FRAME ==========================
class FreeFrame:
    """
    All S-ideals of ``source`` ordered by inclusion.

    ``ideals`` holds bitsets over the source carrier sorted by (size, bits);
    ``principal_index[x]`` is the position of ↓x.
    """

    def __init__(self, source: SFrame, ideals: Iterable[int]):
        self.source = source
        self.ideals: Tuple[int, ...] = tuple(sorted(set(ideals), key=lambda b: (popcount(b), b)))
        self.index: Dict[int, int] = {b: i for i, b in enumerate(self.ideals)}
        down = source.carrier.poset.down
        self.principal_index: Tuple[int, ...] = tuple(self.index[down[x]] for x in range(source.size))
        self.size = len(self.ideals)

    @classmethod
    def from_ideals(cls, source: SFrame, ideals: Iterable[int]) -> 'FreeFrame':
        """
        Rebuild from a stored ideal list. Every member is re-checked, every ↓x
        must be present, and I ∨ ↓x must be present for every stored I; as
        each S-ideal is the join of the ↓x it contains, that makes the list
        complete and so closed under every meet and join.
        """
        ideals = list(ideals)
        for b in ideals:
            if not is_sideal(source, b):
                raise InvariantViolation(f"{format_set(source.names(b))} is not an S-ideal of {source.name}",
                                         source.names(b))
        present = set(ideals)
        down = source.carrier.poset.down
        for x in range(source.size):
            if down[x] not in present:
                raise InvariantViolation(f"stored ideals of {source.name} lack ↓{source.name_of(x)}",
                                         source.name_of(x))
        for b in sorted(present):
            for x in range(source.size):
                if sideal_closure_bits(source, b | down[x]) not in present:
                    raise InvariantViolation(f"stored ideals of {source.name} are not closed under joins",
                                             (format_set(source.names(b)), source.name_of(x)))
        return cls(source, ideals)

    def __repr__(self):
        return f"FreeFrame({self.source.name}, {self.size} ideals)"

    @cached_property
    def labels(self) -> Tuple[str, ...]:
        principal = {self.principal_index[x]: x for x in range(self.source.size)}
        return tuple(f"↓{self.source.name_of(principal[i])}" if i in principal
                     else format_set(self.source.names(b))
                     for i, b in enumerate(self.ideals))

    @cached_property
    def principal(self) -> int:
        """Bitset over ideal indices marking the principal ones."""
        out = 0
        for i in self.principal_index:
            out |= bit(i)
        return out

    def is_principal(self, i: int) -> bool:
        return bool(self.principal >> i & 1)

    def ideal(self, i: int) -> SIdeal:
        return SIdeal(ElementSet(self.ideals[i], self.source.size))

    def meet(self, i: int, j: int) -> int:
        return self.index[self.ideals[i] & self.ideals[j]]

    def join(self, i: int, j: int) -> int:
        return self.index[sideal_closure_bits(self.source, self.ideals[i] | self.ideals[j])]

    def index_of_bits(self, bits: int) -> int:
        return self.index[bits]

    @cached_property
    def frame(self) -> SFrame:
        """The ideal frame as an S-frame with the finite selection."""
        n = self.size
        le = np.zeros((n, n), dtype=bool)
        for i, I in enumerate(self.ideals):
            for j, J in enumerate(self.ideals):
                le[i, j] = I & ~J == 0
        poset = Poset.from_matrix(self.labels, le, bound=max(Config.CAPACITY, n))
        carrier = MeetSemilattice(poset)
        frame = validate_sframe(carrier, make_selection(carrier, SelectionKind.FINITE), f"H({self.source.name})")
        for i in range(n):
            for j in range(i + 1, n):
                if frame.meet(i, j) != self.meet(i, j) or frame.join(i, j) != self.join(i, j):
                    raise InvariantViolation(f"ideal lattice operations disagree at ({self.labels[i]}, {self.labels[j]})",
                                             (self.labels[i], self.labels[j]))
        return frame


def enumerate_free_frame(L: SFrame, capacity: Optional[int] = None) -> FreeFrame:
    """
    Every S-ideal of L, by breadth-first closure of I ∪ {x} from {0}.

    Raises:
        CapacityExceeded: more ideals than the configured bound
    """
    capacity = capacity or Config.CAPACITY
    if L.is_full:
        ideals = set(L.carrier.poset.down)
    else:
        start = sideal_closure_bits(L, 0)
        ideals = {start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for x in range(L.size):
                if current >> x & 1:
                    continue
                nxt = sideal_closure_bits(L, current | bit(x))
                if nxt not in ideals:
                    ideals.add(nxt)
                    if len(ideals) > capacity:
                        raise CapacityExceeded(f"S-ideals of {L.name}", capacity)
                    queue.append(nxt)
    if len(ideals) > capacity:
        raise CapacityExceeded(f"S-ideals of {L.name}", capacity)
    F = FreeFrame(L, ideals)
    logger.info(f"free frame of {L.name}: {F.size} ideals, {len(set(F.principal_index))} principal")
    return F


def down_embed(L: SFrame, F: Optional[FreeFrame] = None) -> SFrameMap:
    """x ↦ ↓x into the ideal frame."""
    F = F or enumerate_free_frame(L)
    return validate_map(F.principal_index, L, F.frame)


def principal_join_law(L: SFrame, x: int, I: SIdeal) -> bool:
    """
    Compare the S-ideal generated by ↓x ∪ I with {t : t ≤ x ∨ s for some s ∈ I}.

    Raises:
        JoinUndefined: some x ∨ s does not exist in the carrier
    """
    lhs = sideal_closure_bits(L, L.carrier.poset.down[x] | I.bits)
    rhs = 0
    for s in iter_bits(I.bits):
        j = L.join(x, s)
        if j is None:
            raise JoinUndefined(f"{L.name_of(x)} ∨ {L.name_of(s)} does not exist in {L.name}",
                                (L.name_of(x), L.name_of(s)))
        rhs |= L.carrier.poset.down[j]
    return lhs == rhs


def annihilator(L: SFrame, x: int, F: Optional[FreeFrame] = None) -> SIdeal:
    """P_x = {t : t ∧ x = 0}, checked against the pseudocomplement of ↓x in the ideal frame."""
    bits = 0
    for t in range(L.size):
        if L.meet(t, x) == L.bottom:
            bits |= bit(t)
    if not is_sideal(L, bits):
        raise InvariantViolation(f"annihilator of {L.name_of(x)} is not an S-ideal", L.names(bits))
    if F is not None:
        down_x = L.carrier.poset.down[x]
        disjoint = [J for J in F.ideals if J & down_x == bit(L.bottom)]
        star = max(disjoint, key=popcount)
        if star != bits or any(J & ~star for J in disjoint):
            raise InvariantViolation(f"annihilator of {L.name_of(x)} is not the pseudocomplement of ↓{L.name_of(x)}",
                                     L.names(bits))
    return SIdeal(ElementSet(bits, L.size))


def s_lindelof_elements(M: SFrame, S: SelectionFunction) -> ElementSet:
    """
    Elements a of the full frame M such that every B with ⋁B = a contains a
    designated D with ⋁D = a.
    """
    if S.kind is SelectionKind.FINITE:
        return ElementSet(M.carrier.poset.all_bits, M.size)
    if M.size > Config.MAX_SUBSET_SCAN:
        raise CapacityExceeded(f"S-Lindelöf scan over {M.size} elements", Config.MAX_SUBSET_SCAN)
    out = 0
    for a in range(M.size):
        lindelof = True
        for B in submasks(M.carrier.poset.down[a]):
            if M.join_bits(B) != a:
                continue
            if not any(S.is_designated_bits(D) and M.join_bits(D) == a for D in submasks(B)):
                lindelof = False
                break
        if lindelof:
            out |= bit(a)
    return ElementSet(out, M.size)


def free_extension(f: SFrameMap, F: Optional[FreeFrame] = None) -> SFrameMap:
    """
    The frame map F(I) = ⋁f[I] out of the ideal frame of f's domain, the
    unique one with F(↓a) = f(a). Validated strictly only when M is a frame
    and f itself validated.
    """
    L, M = f.domain, f.codomain
    F = F or enumerate_free_frame(L)
    table: List[int] = []
    for I in F.ideals:
        j = M.join_bits(f.image_bits(I))
        if j is None:
            raise MissingJoin(f"{M.name} has no join for the image of {format_set(L.names(I))}", L.names(I))
        table.append(j)
    # uniqueness: every ideal is the join of the principal ideals it contains
    for i, I in enumerate(F.ideals):
        generated = F.principal_index[L.bottom]
        for x in iter_bits(I):
            generated = F.join(generated, F.principal_index[x])
        if generated != i:
            raise InvariantViolation(f"{F.labels[i]} is not generated by its principal ideals", F.labels[i])
    ext = checked_map(table, F.frame, M, strict=f.finding is None and M.regime is Regime.FULL)
    for a in range(L.size):
        if ext(F.principal_index[a]) != f(a):
            raise InvariantViolation(f"free extension disagrees with the map at ↓{L.name_of(a)}", L.name_of(a))
    return ext


def free_frame_dot(F: FreeFrame) -> str:
    highlight = {i: 'lightblue' for i in F.principal_index}
    return hasse_dot(f"H({F.source.name})", F.labels, F.frame.carrier.poset.cover_pairs(), highlight)


def ideal_names(F: FreeFrame) -> List[List[str]]:
    return [F.source.names(b) for b in F.ideals]
