"""
S-congruences and the congruence frame.

A congruence is stored as a canonical class table: ``class_of[x]`` is the
least index in the class of x, so equal congruences have equal tables.
"""
import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.config import Config
from src.errors import (CapacityExceeded, ImageNotComplemented, InvariantViolation, JoinUndefined,
                        MissingJoin)
from src.order.poset import MeetSemilattice, Poset, bit, complements, iter_bits
from src.order.selection import Regime, SelectionKind, make_selection
from src.frames.freeframe import FreeFrame, annihilator, enumerate_free_frame
from src.frames.sframe import (SFrame, SFrameMap, checked_map, density_profile, lattice_frame, validate_map,
                               validate_sframe)
from src.utils.helpers import format_partition, get_logger, hasse_dot

logger = get_logger('congruence')


# ========================== CONGRUENCE VALUES ==========================
@dataclass(frozen=True)
class SCongruence:
    class_of: Tuple[int, ...]

    @classmethod
    def from_labels(cls, labels: Sequence) -> 'SCongruence':
        """Canonicalise any labelling: each element gets the least index sharing its label."""
        first: Dict = {}
        out = []
        for i, key in enumerate(labels):
            out.append(first.setdefault(key, i))
        return cls(tuple(out))

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], n: int) -> 'SCongruence':
        labels = list(range(n))
        for k, members in enumerate(classes):
            for x in members:
                labels[x] = n + k
        return cls.from_labels(labels)

    @classmethod
    def diagonal(cls, n: int) -> 'SCongruence':
        return cls(tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> 'SCongruence':
        return cls((0,) * n)

    @property
    def size(self) -> int:
        return len(self.class_of)

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def classes(self) -> List[int]:
        """Class bitsets ordered by least member."""
        by_root: Dict[int, int] = {}
        for x, r in enumerate(self.class_of):
            by_root[r] = by_root.get(r, 0) | bit(x)
        return [by_root[r] for r in sorted(by_root)]

    @property
    def class_count(self) -> int:
        return len(set(self.class_of))

    def pairs(self) -> Iterator[Tuple[int, int]]:
        """One generating pair (x, root) per non-root element."""
        for x, r in enumerate(self.class_of):
            if x != r:
                yield r, x

    def leq(self, other: 'SCongruence') -> bool:
        """Refinement: every pair related here is related in ``other``."""
        return all(other.class_of[x] == other.class_of[r] for x, r in enumerate(self.class_of))

    def is_diagonal(self) -> bool:
        return all(x == r for x, r in enumerate(self.class_of))

    def meet(self, other: 'SCongruence') -> 'SCongruence':
        return SCongruence.from_labels(list(zip(self.class_of, other.class_of)))


def describe_congruence(L: SFrame, theta: SCongruence) -> str:
    return format_partition([L.names(c) for c in theta.classes()])


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def congruence(self) -> SCongruence:
        return SCongruence.from_labels([self.find(x) for x in range(len(self.parent))])


# ========================== GENERATION ==========================
def _join_signature_groups(L: SFrame, uf: _UnionFind) -> Dict[frozenset, List[int]]:
    groups: Dict[frozenset, List[int]] = {}
    for B in L.selection.designated_sets():
        signature = frozenset(uf.find(x) for x in iter_bits(B))
        groups.setdefault(signature, []).append(L.join_bits(B))
    return groups


def generate(L: SFrame, pairs: Iterable[Tuple[int, int]]) -> SCongruence:
    """Least S-congruence containing ``pairs``."""
    n = L.size
    uf = _UnionFind(n)
    for x, y in pairs:
        uf.union(x, y)
    changed = True
    while changed:
        changed = False
        # meets: x ~ root(x) forces x ∧ z ~ root(x) ∧ z
        for x in range(n):
            r = uf.find(x)
            if r == x:
                continue
            for z in range(n):
                if uf.union(L.meet(x, z), L.meet(r, z)):
                    changed = True
        if L.is_full:
            for x in range(n):
                r = uf.find(x)
                if r == x:
                    continue
                for z in range(n):
                    if uf.union(L.join(x, z), L.join(r, z)):
                        changed = True
        elif L.selection.kind is SelectionKind.EXPLICIT:
            # designated families with the same classes have related joins
            for joins in _join_signature_groups(L, uf).values():
                for j in joins[1:]:
                    if uf.union(joins[0], j):
                        changed = True
    return uf.congruence()


def join(L: SFrame, theta: SCongruence, phi: SCongruence) -> SCongruence:
    return generate(L, itertools.chain(theta.pairs(), phi.pairs()))


def meet(theta: SCongruence, phi: SCongruence) -> SCongruence:
    return theta.meet(phi)


@dataclass
class CongruenceCheck:
    holds: bool
    law: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds


def is_scongruence(L: SFrame, theta: SCongruence) -> CongruenceCheck:
    """
    Check C2 and C3 on a partition (C1 holds for any partition). A C2
    witness is ((x, y), (c, d)) with x~y and c~d but x∧c ≁ y∧d.
    """
    n = L.size
    name = L.name_of
    for x in range(n):
        for y in range(x + 1, n):
            if not theta.related(x, y):
                continue
            for c in range(n):
                for d in range(n):
                    if theta.related(c, d) and not theta.related(L.meet(x, c), L.meet(y, d)):
                        return CongruenceCheck(False, 'C2', ((name(x), name(y)), (name(c), name(d))))
    if L.is_full:
        for x in range(n):
            for y in range(x + 1, n):
                if not theta.related(x, y):
                    continue
                for z in range(n):
                    if not theta.related(L.join(x, z), L.join(y, z)):
                        return CongruenceCheck(False, 'C3', ((name(x), name(y)), (name(z), name(z))))
    elif L.selection.kind is SelectionKind.EXPLICIT:
        groups: Dict[frozenset, List[int]] = {}
        for B in L.selection.designated_sets():
            signature = frozenset(theta.class_of[x] for x in iter_bits(B))
            groups.setdefault(signature, []).append(B)
        for members in groups.values():
            first = L.join_bits(members[0])
            for B in members[1:]:
                if not theta.related(first, L.join_bits(B)):
                    return CongruenceCheck(False, 'C3', (L.names(members[0]), L.names(B)))
    return CongruenceCheck(True)


# ========================== ∇ AND Δ ==========================
def nabla_formula(L: SFrame, a: int) -> SCongruence:
    """{(x, y) : x ∨ a = y ∨ a}"""
    labels = []
    for x in range(L.size):
        j = L.join(x, a)
        if j is None:
            raise JoinUndefined(f"{L.name_of(x)} ∨ {L.name_of(a)} does not exist in {L.name}",
                                (L.name_of(x), L.name_of(a)))
        labels.append(j)
    return SCongruence.from_labels(labels)


def delta_formula(L: SFrame, a: int) -> SCongruence:
    """{(x, y) : x ∧ a = y ∧ a}"""
    return SCongruence.from_labels([L.meet(x, a) for x in range(L.size)])


def nabla_generated(L: SFrame, a: int) -> SCongruence:
    return generate(L, [(L.bottom, a)])


def delta_generated(L: SFrame, a: int) -> SCongruence:
    return generate(L, [(a, L.top)])


@dataclass
class NablaDelta:
    element: str
    nabla_form: Optional[SCongruence]
    delta_form: SCongruence
    nabla_gen: SCongruence
    delta_gen: SCongruence
    findings: List[str] = field(default_factory=list)

    @property
    def nabla_agrees(self) -> bool:
        return self.nabla_form == self.nabla_gen

    @property
    def delta_agrees(self) -> bool:
        return self.delta_form == self.delta_gen


def nabla_delta(L: SFrame, a: int) -> NablaDelta:
    """
    Formula and generated variants of ∇_a and Δ_a. In the FULL regime they
    must coincide and the formulas must be congruences; elsewhere any
    divergence is recorded as a finding.
    """
    findings: List[str] = []
    try:
        nf = nabla_formula(L, a)
    except JoinUndefined as e:
        nf = None
        findings.append(f"∇ formula undefined at {L.name_of(a)}: {e}")
    df = delta_formula(L, a)
    result = NablaDelta(L.name_of(a), nf, df, nabla_generated(L, a), delta_generated(L, a), findings)
    for label, formula in (('∇', nf), ('Δ', df)):
        if formula is None:
            continue
        check = is_scongruence(L, formula)
        if not check:
            findings.append(f"{label} formula at {L.name_of(a)} is not an S-congruence ({check.law} {check.witness})")
    if nf is not None and not result.nabla_agrees:
        findings.append(f"∇ formula/generated divergence at {L.name_of(a)}: "
                        f"{describe_congruence(L, nf)} vs {describe_congruence(L, result.nabla_gen)}")
    if not result.delta_agrees:
        findings.append(f"Δ formula/generated divergence at {L.name_of(a)}: "
                        f"{describe_congruence(L, df)} vs {describe_congruence(L, result.delta_gen)}")
    if findings:
        if L.regime is Regime.FULL:
            raise InvariantViolation(f"{L.name}: {findings[0]}", L.name_of(a))
        for finding in findings:
            logger.warning(f"{L.name} ({L.regime.value}): {finding}")
    return result


def nabla_family(L: SFrame) -> List[SCongruence]:
    """∇_a = ⟨(0, a)⟩ for every element, in carrier order."""
    return [nabla_generated(L, a) for a in range(L.size)]


def delta_family(L: SFrame) -> List[SCongruence]:
    return [delta_generated(L, a) for a in range(L.size)]


# ========================== ENUMERATION ==========================
def _set_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """Restricted growth strings of length n."""
    if n == 0:
        yield ()
        return
    labels = [0] * n

    def extend(i: int, top: int):
        if i == n:
            yield tuple(labels)
            return
        for v in range(top + 2):
            labels[i] = v
            yield from extend(i + 1, max(top, v))

    yield from extend(1, 0)


def congruences_by_partition_filter(L: SFrame) -> List[SCongruence]:
    """Every partition of the carrier that is an S-congruence."""
    if L.size > Config.ORACLE_MAX_CARRIER:
        raise CapacityExceeded(f"partition filter over {L.size} elements", Config.ORACLE_MAX_CARRIER)
    out = []
    for labels in _set_partitions(L.size):
        theta = SCongruence.from_labels(labels)
        if is_scongruence(L, theta):
            out.append(theta)
    return out


def congruences_by_principal_joins(L: SFrame, capacity: Optional[int] = None) -> List[SCongruence]:
    """Principal congruences ⟨(a, b)⟩ closed under binary joins."""
    capacity = capacity or Config.CONGRUENCE_CAPACITY
    n = L.size
    principals = list(dict.fromkeys(generate(L, [(a, b)]) for a in range(n) for b in range(a + 1, n)))
    found = {SCongruence.diagonal(n)}
    found.update(principals)
    queue = deque(found)
    while queue:
        theta = queue.popleft()
        for p in principals:
            if p.leq(theta):
                continue
            joined = join(L, theta, p)
            if joined not in found:
                found.add(joined)
                if len(found) > capacity:
                    raise CapacityExceeded(f"S-congruences of {L.name}", capacity)
                queue.append(joined)
    return list(found)


def join_irreducibles(L: SFrame) -> List[int]:
    """Elements with exactly one lower cover."""
    covers = L.carrier.poset.covers
    return [x for x in range(L.size) if int(covers[:, x].sum()) == 1]


def congruences_by_join_irreducibles(L: SFrame, capacity: Optional[int] = None) -> List[SCongruence]:
    """
    Congruences of a finite distributive lattice: one per set S of
    join-irreducibles, identifying x and y when the same join-irreducibles
    outside S lie below them.
    """
    capacity = capacity or Config.CONGRUENCE_CAPACITY
    if not (L.is_full and L.regime is Regime.FULL):
        raise InvariantViolation(f"{L.name} is not a full finite frame", L.name)
    irreducibles = join_irreducibles(L)
    if 1 << len(irreducibles) > capacity:
        raise CapacityExceeded(f"S-congruences of {L.name}", capacity)
    down = L.carrier.poset.down
    j_bits = 0
    for j in irreducibles:
        j_bits |= bit(j)
    out = []
    for r in range(len(irreducibles) + 1):
        for S in itertools.combinations(irreducibles, r):
            keep = j_bits
            for j in S:
                keep &= ~bit(j)
            out.append(SCongruence.from_labels([down[x] & keep for x in range(L.size)]))
    return out


def _congruence_key(theta: SCongruence) -> Tuple[int, Tuple[int, ...]]:
    return theta.size - theta.class_count, theta.class_of


class CongruenceFrame:
    """
    All S-congruences of ``source`` ordered by refinement: the diagonal
    first and L×L last. ``nabla_index[a]`` / ``delta_index[a]`` locate ⟨(0,a)⟩
    and ⟨(a,1)⟩.
    """

    def __init__(self, source: SFrame, congruences: Iterable[SCongruence]):
        self.source = source
        self.congruences: Tuple[SCongruence, ...] = tuple(sorted(set(congruences), key=_congruence_key))
        self.index: Dict[SCongruence, int] = {t: i for i, t in enumerate(self.congruences)}
        self.size = len(self.congruences)
        try:
            self.nabla_index = tuple(self.index[t] for t in nabla_family(source))
            self.delta_index = tuple(self.index[t] for t in delta_family(source))
        except KeyError as e:
            raise InvariantViolation(f"congruence enumeration of {source.name} misses a generated congruence",
                                     str(e)) from None

    @classmethod
    def from_congruences(cls, source: SFrame, tables: Iterable[Sequence[int]]) -> 'CongruenceFrame':
        """
        Rebuild from stored class tables. Every member is re-checked, the
        diagonal and every principal congruence ⟨(x, y)⟩ must be present, and
        θ ∨ ⟨(x, y)⟩ must be present for every stored θ; each S-congruence is
        the join of the principal ones below it, so that makes the set
        complete and closed under every meet and join.
        """
        congruences = []
        for table in tables:
            theta = SCongruence.from_labels(table)
            check = is_scongruence(source, theta)
            if not check:
                raise InvariantViolation(f"stored partition is not an S-congruence of {source.name}", check.witness)
            congruences.append(theta)
        present = set(congruences)
        n = source.size
        if SCongruence.diagonal(n) not in present:
            raise InvariantViolation(f"stored congruences of {source.name} lack the diagonal", source.name)
        principal = list(dict.fromkeys(generate(source, [(x, y)]) for x, y in itertools.combinations(range(n), 2)))
        for pi in principal:
            if pi not in present:
                raise InvariantViolation(f"stored congruences of {source.name} lack a principal congruence",
                                         describe_congruence(source, pi))
        for theta in sorted(present, key=_congruence_key):
            for pi in principal:
                if join(source, theta, pi) not in present:
                    raise InvariantViolation(f"stored congruences of {source.name} are not closed under joins",
                                             (describe_congruence(source, theta), describe_congruence(source, pi)))
        return cls(source, congruences)

    def __repr__(self):
        return f"CongruenceFrame({self.source.name}, {self.size} congruences)"

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.size - 1

    @cached_property
    def labels(self) -> Tuple[str, ...]:
        return tuple(f"c{i}" for i in range(self.size))

    def describe(self, i: int) -> str:
        return describe_congruence(self.source, self.congruences[i])

    def join(self, i: int, j: int) -> int:
        return self.index[join(self.source, self.congruences[i], self.congruences[j])]

    def meet(self, i: int, j: int) -> int:
        return self.index[self.congruences[i].meet(self.congruences[j])]

    def join_all(self, indices: Iterable[int]) -> int:
        out = self.bottom
        for i in indices:
            out = self.join(out, i)
        return out

    def leq(self, i: int, j: int) -> bool:
        return self.congruences[i].leq(self.congruences[j])

    @cached_property
    def nabla_image(self) -> int:
        return sum(bit(i) for i in set(self.nabla_index))

    @cached_property
    def delta_image(self) -> int:
        return sum(bit(i) for i in set(self.delta_index))

    @cached_property
    def frame(self) -> SFrame:
        """
        The congruences as a finite lattice under the finite selection:
        regime FULL when it is distributive, BASE otherwise.
        """
        n = self.size
        le = np.zeros((n, n), dtype=bool)
        for i, theta in enumerate(self.congruences):
            for j, phi in enumerate(self.congruences):
                le[i, j] = theta.leq(phi)
        poset = Poset.from_matrix(self.labels, le, bound=max(Config.CONGRUENCE_CAPACITY, n))
        frame = lattice_frame(MeetSemilattice(poset), f"C({self.source.name})")
        for i in range(n):
            for j in range(i + 1, n):
                if frame.meet(i, j) != self.meet(i, j):
                    raise InvariantViolation(f"meet of c{i} and c{j} is not their intersection", (i, j))
                if frame.join(i, j) != self.join(i, j):
                    raise InvariantViolation(f"join of c{i} and c{j} is not the generated congruence", (i, j))
        return frame

    @property
    def is_frame(self) -> bool:
        return self.frame.regime is Regime.FULL


def enumerate_congruence_frame(L: SFrame, method: str = 'auto',
                               capacity: Optional[int] = None) -> CongruenceFrame:
    """
    All S-congruences of L.

    Args:
        method: 'principal', 'partition' or 'join-irreducible'; 'auto' uses
            join-irreducibles for full frames and principal joins otherwise
    """
    if method == 'auto':
        method = 'join-irreducible' if L.is_full and L.regime is Regime.FULL else 'principal'
    if method == 'principal':
        congruences = congruences_by_principal_joins(L, capacity)
    elif method == 'partition':
        congruences = congruences_by_partition_filter(L)
    elif method == 'join-irreducible':
        congruences = congruences_by_join_irreducibles(L, capacity)
    else:
        raise ValueError(f"unknown enumeration method '{method}'")
    C = CongruenceFrame(L, congruences)
    logger.info(f"congruence frame of {L.name}: {C.size} congruences ({method})")
    return C


# ========================== QUOTIENTS ==========================
def quotient(L: SFrame, theta: SCongruence) -> Tuple[SFrame, SFrameMap]:
    """L/θ ordered by [x] ≤ [y] iff x ~ x∧y, with selection {q[G] : G designated}."""
    reps = sorted(set(theta.class_of))
    position = {r: i for i, r in enumerate(reps)}
    table = tuple(position[theta.class_of[x]] for x in range(L.size))
    m = len(reps)
    le = np.zeros((m, m), dtype=bool)
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            le[i, j] = theta.related(x, L.meet(x, y))
    names = [f"[{L.name_of(r)}]" for r in reps]
    try:
        carrier = MeetSemilattice(Poset.from_matrix(names, le))
    except ValueError as e:
        raise InvariantViolation(f"quotient of {L.name} is not a meet-semilattice: {e}", names) from e
    kind = L.selection.kind
    if kind is SelectionKind.EXPLICIT:
        images = set()
        for G in L.selection.designated_sets():
            image = 0
            for x in iter_bits(G):
                image |= bit(table[x])
            images.add(image)
        selection = make_selection(carrier, kind, images)
    else:
        selection = make_selection(carrier, kind)
    Q = validate_sframe(carrier, selection, f"{L.name}/θ")
    q = validate_map(table, L, Q)
    return Q, q


@dataclass
class MaddenResult:
    congruence: SCongruence
    quotient: SFrame
    map: SFrameMap
    d_reduced: bool


def madden(L: SFrame, F: Optional[FreeFrame] = None) -> MaddenResult:
    """Identify elements with equal annihilators; the quotient map is dense and onto."""
    labels = [annihilator(L, x, F).bits for x in range(L.size)]
    pi = SCongruence.from_labels(labels)
    check = is_scongruence(L, pi)
    if not check:
        raise InvariantViolation(f"Madden relation of {L.name} is not an S-congruence", check.witness)
    Q, p = quotient(L, pi)
    profile = density_profile(p)
    if not (profile.dense and profile.surjective):
        raise InvariantViolation(f"Madden quotient map of {L.name} is not dense and onto", L.name)
    return MaddenResult(pi, Q, p, pi.is_diagonal())


# ========================== MAPS INTO CONGRUENCE FRAMES ==========================
def nabla_embedding(L: SFrame, C: Optional[CongruenceFrame] = None) -> SFrameMap:
    C = C or enumerate_congruence_frame(L)
    h = checked_map(C.nabla_index, L, C.frame, strict=L.regime is Regime.FULL)
    if not density_profile(h).injective:
        raise InvariantViolation(f"∇ is not injective on {L.name}", L.name)
    return h


def _complement(M: SFrame, y: int) -> Optional[int]:
    found = complements(M.carrier, y)
    return found[0] if found else None


def factor_through_congruence_frame(f: SFrameMap, C: Optional[CongruenceFrame] = None) -> SFrameMap:
    """
    The frame map f̄ out of the congruence frame with f̄(∇_a) = f(a) and
    f̄(Δ_a) = ¬f(a), given by f̄(θ) = ⋁{f(b) ∧ ¬f(a) : (a, b) ∈ θ, a ≤ b}.

    Raises:
        ImageNotComplemented: some f(a) has no complement in the codomain
    """
    L, M = f.domain, f.codomain
    C = C or enumerate_congruence_frame(L)
    neg = []
    for a in range(L.size):
        c = _complement(M, f(a))
        if c is None:
            raise ImageNotComplemented(f"f({L.name_of(a)}) = {M.name_of(f(a))} has no complement in {M.name}",
                                       L.name_of(a))
        neg.append(c)
    table = []
    for theta in C.congruences:
        parts = 0
        for a in range(L.size):
            for b in iter_bits(L.carrier.poset.up[a]):
                if theta.related(a, b):
                    parts |= bit(M.meet(f(b), neg[a]))
        value = M.join_bits(parts)
        if value is None:
            raise MissingJoin(f"{M.name} lacks a join needed to factor through C({L.name})", M.names(parts))
        table.append(value)
    fbar = validate_map(table, C.frame, M)
    for a in range(L.size):
        if fbar(C.nabla_index[a]) != f(a):
            raise InvariantViolation(f"factored map disagrees with f at ∇_{L.name_of(a)}", L.name_of(a))
    # uniqueness: every congruence is a join of ∇_b ∧ Δ_a
    for i, theta in enumerate(C.congruences):
        pieces = [C.meet(C.nabla_index[b], C.delta_index[a])
                  for a in range(L.size) for b in iter_bits(L.carrier.poset.up[a]) if theta.related(a, b)]
        if C.join_all(pieces) != i and L.regime is Regime.FULL:
            raise InvariantViolation(f"c{i} is not generated by ∇ and Δ congruences", C.describe(i))
    return fbar


def e_map(L: SFrame, F: Optional[FreeFrame] = None, C: Optional[CongruenceFrame] = None) -> SFrameMap:
    """e(I) = ⋁{∇_i : i ∈ I}, from the ideal frame into the congruence frame."""
    F = F or enumerate_free_frame(L)
    C = C or enumerate_congruence_frame(L)
    table = [C.join_all(C.nabla_index[x] for x in iter_bits(I)) for I in F.ideals]
    e = checked_map(table, F.frame, C.frame, strict=L.regime is Regime.FULL)
    for a in range(L.size):
        if e(F.principal_index[a]) != C.nabla_index[a]:
            raise InvariantViolation(f"e(↓{L.name_of(a)}) differs from ∇_{L.name_of(a)}", L.name_of(a))
    if L.regime is not Regime.IRREGULAR and not density_profile(e).injective:
        raise InvariantViolation(f"e is not injective on {L.name}", L.name)
    return e


def image_congruence(h: SFrameMap, theta: SCongruence) -> SCongruence:
    """Congruence of the codomain generated by (h×h)[θ]."""
    return generate(h.codomain, ((h(x), h(y)) for x, y in theta.pairs()))


def cs_functor_map(h: SFrameMap, CL: Optional[CongruenceFrame] = None,
                   CM: Optional[CongruenceFrame] = None) -> SFrameMap:
    """θ ↦ ⟨(h×h)[θ]⟩, checked against the square ∇_M ∘ h = C(h) ∘ ∇_L."""
    CL = CL or enumerate_congruence_frame(h.domain)
    CM = CM or enumerate_congruence_frame(h.codomain)
    table = [CM.index[image_congruence(h, theta)] for theta in CL.congruences]
    for a in range(h.domain.size):
        if table[CL.nabla_index[a]] != CM.nabla_index[h(a)]:
            raise InvariantViolation(f"∇ square fails at {h.domain.name_of(a)}", h.domain.name_of(a))
    return checked_map(table, CL.frame, CM.frame, strict=h.regime is Regime.FULL)


# ========================== EXPORT ==========================
def congruence_tables(C: CongruenceFrame) -> List[dict]:
    L = C.source
    rows = []
    for i, theta in enumerate(C.congruences):
        rows.append({
            'label': C.labels[i],
            'classes': [L.names(c) for c in theta.classes()],
            'nabla_of': [L.name_of(a) for a in range(L.size) if C.nabla_index[a] == i],
            'delta_of': [L.name_of(a) for a in range(L.size) if C.delta_index[a] == i],
        })
    return rows


def congruence_frame_dot(C: CongruenceFrame) -> str:
    highlight = {}
    for i in range(C.size):
        in_nabla = bool(C.nabla_image >> i & 1)
        in_delta = bool(C.delta_image >> i & 1)
        if in_nabla and in_delta:
            highlight[i] = 'plum'
        elif in_nabla:
            highlight[i] = 'lightblue'
        elif in_delta:
            highlight[i] = 'lightpink'
    labels = [f"c{i} {C.describe(i)}" for i in range(C.size)]
    return hasse_dot(f"C({C.source.name})", labels, C.frame.carrier.poset.cover_pairs(), highlight)
