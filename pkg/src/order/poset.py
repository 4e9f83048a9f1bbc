"""
Finite posets, meet-semilattices and lattices.

Elements are identified by strings externally and by dense indices
internally. Subsets of a carrier are Python ints used as bitsets (bit i set
iff element i is a member); the order itself is a read-only numpy boolean
matrix with ``le[i, j]`` true iff ``i <= j``.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.config import Config
from src.errors import (CapacityExceeded, CycleDetected, DuplicateElement, NotMeetSemilattice,
                        UnknownElement)


# ========================== BITSETS ==========================
def bit(i: int) -> int:
    return 1 << i


def iter_bits(bits: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def popcount(bits: int) -> int:
    return bin(bits).count('1')


def submasks(bits: int) -> Iterator[int]:
    """Every subset of ``bits``, from ``bits`` itself down to the empty set."""
    sub = bits
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & bits


def bits_of(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


@dataclass(frozen=True)
class ElementSet:
    """Fixed-width bitset over a carrier."""
    bits: int
    width: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"bitset {self.bits:b} does not fit width {self.width}")

    @classmethod
    def of(cls, indices: Iterable[int], width: int) -> 'ElementSet':
        return cls(bits_of(indices), width)

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)


# ========================== POSET ==========================
def check_partial_order(le: np.ndarray) -> Optional[Tuple[str, Tuple[int, int]]]:
    """Return the first violated law and a witness pair, or None for a partial order."""
    n = le.shape[0]
    for i in range(n):
        if not le[i, i]:
            return 'reflexivity', (i, i)
    both = le & le.T
    for i in range(n):
        for j in range(i + 1, n):
            if both[i, j]:
                return 'antisymmetry', (i, j)
    as_int = le.astype(np.int64)
    two_step = (as_int @ as_int) > 0
    bad = two_step & ~le
    if bad.any():
        i, j = (int(v) for v in np.argwhere(bad)[0])
        return 'transitivity', (i, j)
    return None


def transitive_reduction(le: np.ndarray) -> np.ndarray:
    """Cover relation: i < j with nothing strictly in between."""
    n = le.shape[0]
    lt = le & ~np.eye(n, dtype=bool)
    as_int = lt.astype(np.int64)
    any_between = (as_int @ as_int) > 0
    covers = lt & ~any_between
    covers.flags.writeable = False
    return covers


class Poset:
    """
    Immutable finite partial order.

    ``down[x]`` / ``up[x]`` are bitsets of the principal down-set / up-set
    of ``x``; every set-valued query below works on bitsets.
    """

    def __init__(self, elements: Sequence[str], le: np.ndarray):
        'assumes that le is indeed a partial order; use build_poset or from_matrix otherwise'
        self.elements: Tuple[str, ...] = tuple(elements)
        self.size = len(self.elements)
        self.index: Dict[str, int] = {name: i for i, name in enumerate(self.elements)}
        le = np.array(le, dtype=bool)
        le.flags.writeable = False
        self.le = le
        self.covers = transitive_reduction(le)
        n = self.size
        self.down: Tuple[int, ...] = tuple(bits_of(int(y) for y in np.flatnonzero(le[:, x])) for x in range(n))
        self.up: Tuple[int, ...] = tuple(bits_of(int(y) for y in np.flatnonzero(le[x, :])) for x in range(n))
        self.all_bits = (1 << n) - 1

    @classmethod
    def from_matrix(cls, elements: Sequence[str], le: np.ndarray, bound: Optional[int] = None) -> 'Poset':
        """
        Build from a full order matrix, failing rather than accepting a non-order.
        Derived structures (ideal and congruence frames) pass their own size bound.
        """
        _check_identifiers(elements, bound)
        le = np.array(le, dtype=bool)
        problem = check_partial_order(le)
        if problem is not None:
            law, (i, j) = problem
            witness = (elements[i], elements[j])
            if law == 'antisymmetry':
                raise CycleDetected(f"{witness[0]} and {witness[1]} are mutually below each other", witness)
            raise ValueError(f"order matrix violates {law} at {witness}")
        return cls(elements, le)

    def __repr__(self):
        return f"Poset({list(self.elements)})"

    # Element naming

    def name(self, i: int) -> str:
        return self.elements[i]

    def names(self, bits: int) -> List[str]:
        return [self.elements[i] for i in iter_bits(bits)]

    def element_set(self, bits: int) -> ElementSet:
        return ElementSet(bits, self.size)

    def bits_for(self, names: Iterable[str]) -> int:
        out = 0
        for name in names:
            if name not in self.index:
                raise UnknownElement(f"unknown element '{name}'", name)
            out |= 1 << self.index[name]
        return out

    # Order queries

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def downclose(self, bits: int) -> int:
        out = 0
        for x in iter_bits(bits):
            out |= self.down[x]
        return out

    def lower_bounds(self, bits: int) -> int:
        out = self.all_bits
        for x in iter_bits(bits):
            out &= self.down[x]
        return out

    def upper_bounds(self, bits: int) -> int:
        out = self.all_bits
        for x in iter_bits(bits):
            out &= self.up[x]
        return out

    def maximum(self, bits: int) -> Optional[int]:
        """Greatest element of the subset, if it has one."""
        for g in iter_bits(bits):
            if bits & ~self.down[g] == 0:
                return g
        return None

    def minimum(self, bits: int) -> Optional[int]:
        for g in iter_bits(bits):
            if bits & ~self.up[g] == 0:
                return g
        return None

    def glb_bits(self, bits: int) -> Optional[int]:
        return self.maximum(self.lower_bounds(bits))

    def lub_bits(self, bits: int) -> Optional[int]:
        return self.minimum(self.upper_bounds(bits))

    def cover_pairs(self) -> List[Tuple[int, int]]:
        return [(int(i), int(j)) for i, j in np.argwhere(self.covers)]


def _check_identifiers(elements: Sequence[str], bound: Optional[int] = None):
    seen = set()
    for name in elements:
        if name in seen:
            raise DuplicateElement(f"element '{name}' listed twice", name)
        seen.add(name)
    bound = bound or Config.MAX_CARRIER
    if len(elements) > bound:
        raise CapacityExceeded(f"carrier of {len(elements)} elements", bound)


def build_poset(elements: Sequence[str], pairs: Iterable[Tuple[str, str]]) -> Poset:
    """
    Build a poset from identifiers and (lesser, greater) pairs.

    The order is the reflexive-transitive closure of the pairs; pairs may be
    covers or any relation whose closure is intended.
    """
    elements = list(elements)
    _check_identifiers(elements)
    index = {name: i for i, name in enumerate(elements)}
    n = len(elements)
    le = np.eye(n, dtype=bool)
    for lesser, greater in pairs:
        for name in (lesser, greater):
            if name not in index:
                raise UnknownElement(f"pair ({lesser}, {greater}) references unknown element '{name}'", name)
        le[index[lesser], index[greater]] = True
    # Warshall closure
    for k in range(n):
        le |= np.outer(le[:, k], le[k, :])
    both = le & le.T & ~np.eye(n, dtype=bool)
    if both.any():
        i, j = (int(v) for v in np.argwhere(both)[0])
        raise CycleDetected(f"{elements[i]} and {elements[j]} are mutually below each other",
                            (elements[i], elements[j]))
    return Poset(elements, le)


def glb(P: Poset, X: ElementSet) -> Optional[str]:
    g = P.glb_bits(X.bits)
    return None if g is None else P.name(g)


def lub(P: Poset, X: ElementSet) -> Optional[str]:
    g = P.lub_bits(X.bits)
    return None if g is None else P.name(g)


# ========================== MEET-SEMILATTICE ==========================
class MeetSemilattice:
    """
    Finite meet-semilattice: a poset with all finite meets, hence a top.
    Binary joins are tabulated where they exist (``None`` otherwise).
    """

    def __init__(self, poset: Poset):
        self.poset = poset
        n = poset.size
        top = poset.glb_bits(0)
        if top is None:
            raise NotMeetSemilattice(f"{poset!r} has no top element")
        self.top = top
        meet_rows = []
        for x in range(n):
            row = []
            for y in range(n):
                g = poset.glb_bits(bit(x) | bit(y))
                if g is None:
                    raise NotMeetSemilattice(f"{poset.name(x)} and {poset.name(y)} have no meet",
                                             (poset.name(x), poset.name(y)))
                row.append(g)
            meet_rows.append(tuple(row))
        self.meet_table: Tuple[Tuple[int, ...], ...] = tuple(meet_rows)
        self.join_table: Tuple[Tuple[Optional[int], ...], ...] = tuple(
            tuple(poset.lub_bits(bit(x) | bit(y)) for y in range(n)) for x in range(n))
        self.bottom: Optional[int] = poset.lub_bits(0)

    @classmethod
    def build(cls, elements: Sequence[str], pairs: Iterable[Tuple[str, str]]) -> 'MeetSemilattice':
        return cls(build_poset(elements, pairs))

    def __repr__(self):
        return f"MeetSemilattice({list(self.elements)})"

    @property
    def elements(self) -> Tuple[str, ...]:
        return self.poset.elements

    @property
    def size(self) -> int:
        return self.poset.size

    def name(self, i: int) -> str:
        return self.poset.name(i)

    def leq(self, x: int, y: int) -> bool:
        return self.poset.leq(x, y)

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> Optional[int]:
        return self.join_table[x][y]

    def meet_bits(self, bits: int) -> int:
        out = self.top
        for x in iter_bits(bits):
            out = self.meet_table[out][x]
        return out

    def join_bits(self, bits: int) -> Optional[int]:
        return self.poset.lub_bits(bits)

    def is_lattice(self) -> bool:
        return self.bottom is not None and all(j is not None for row in self.join_table for j in row)


# ========================== LATTICE PROFILE ==========================
@dataclass(frozen=True)
class LatticeProfile:
    is_meet_semilattice: bool
    is_lattice: bool
    is_distributive: bool
    all_complemented: bool
    is_boolean_algebra: bool
    is_frame_finite: bool

    def as_dict(self) -> Dict[str, bool]:
        return {
            'meet_semilattice': self.is_meet_semilattice,
            'lattice': self.is_lattice,
            'distributive': self.is_distributive,
            'all_complemented': self.all_complemented,
            'boolean': self.is_boolean_algebra,
            'frame': self.is_frame_finite,
        }


def complements(L: MeetSemilattice, x: int) -> List[int]:
    """All complements of x (empty when L is not bounded)."""
    if L.bottom is None:
        return []
    return [y for y in range(L.size) if L.meet(x, y) == L.bottom and L.join(x, y) == L.top]


def is_complemented(L: MeetSemilattice, x: int) -> bool:
    return bool(complements(L, x))


def pseudocomplement(L: MeetSemilattice, x: int) -> Optional[int]:
    """Largest t with t ∧ x = 0, when it exists."""
    if L.bottom is None:
        return None
    disjoint = bits_of(t for t in range(L.size) if L.meet(t, x) == L.bottom)
    return L.poset.maximum(disjoint)


def _is_distributive(L: MeetSemilattice) -> bool:
    n = L.size
    for x in range(n):
        for y in range(n):
            for z in range(y + 1, n):
                if L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)):
                    return False
    return True


def lattice_profile(P: Union[Poset, MeetSemilattice]) -> LatticeProfile:
    """Structural flags of a finite poset; all-false beyond the first failing level."""
    if isinstance(P, MeetSemilattice):
        L = P
    else:
        try:
            L = MeetSemilattice(P)
        except NotMeetSemilattice:
            return LatticeProfile(False, False, False, False, False, False)
    if not L.is_lattice():
        return LatticeProfile(True, False, False, False, False, False)
    distributive = _is_distributive(L)
    complemented = all(is_complemented(L, x) for x in range(L.size))
    return LatticeProfile(
        is_meet_semilattice=True,
        is_lattice=True,
        is_distributive=distributive,
        all_complemented=complemented,
        is_boolean_algebra=distributive and complemented,
        is_frame_finite=distributive,
    )


def has_n5_or_m3(L: MeetSemilattice) -> Optional[Tuple[str, Tuple[str, ...]]]:
    """
    Look for a sublattice isomorphic to N5 or M3.

    Returns ('N5', (a, c, b)) for a < c with a∨b = c∨b and a∧b = c∧b, or
    ('M3', (x, y, z)) for three elements with equal pairwise meets and joins;
    None when neither exists (i.e. L is distributive).
    """
    if not L.is_lattice():
        raise NotMeetSemilattice(f"{L!r} is not a lattice")
    n = L.size
    for a in range(n):
        for c in range(n):
            if a == c or not L.leq(a, c):
                continue
            for b in range(n):
                if L.join(a, b) == L.join(c, b) and L.meet(a, b) == L.meet(c, b):
                    return 'N5', (L.name(a), L.name(c), L.name(b))
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                m, j = L.meet(x, y), L.join(x, y)
                if (L.meet(y, z) == m and L.meet(x, z) == m
                        and L.join(y, z) == j and L.join(x, z) == j):
                    return 'M3', (L.name(x), L.name(y), L.name(z))
    return None
