"""
S-frames (partial frames) and S-frame maps: validation, adjoints and
density.
"""
import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from src.errors import (DistributivityFailure, InvariantViolation, JoinViolation, MapValidationError, MeetViolation,
                        MissingJoin, TopViolation, UnknownElement)
from src.order.poset import MeetSemilattice, bit, iter_bits
from src.order.selection import Regime, SelectionFunction, SelectionKind, check_axioms, make_selection
from src.utils.helpers import format_set, get_logger

logger = get_logger('sframe')


@dataclass(frozen=True, eq=False)
class SFrame:
    """Validated partial frame; build through validate_sframe."""
    name: str
    carrier: MeetSemilattice
    selection: SelectionFunction
    regime: Regime

    def __repr__(self):
        return f"SFrame({self.name})"

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def elements(self) -> Tuple[str, ...]:
        return self.carrier.elements

    @property
    def top(self) -> int:
        return self.carrier.top

    @property
    def bottom(self) -> int:
        return self.carrier.bottom

    @property
    def is_full(self) -> bool:
        """Finite selection: a finite frame where every join is designated."""
        return self.selection.kind is SelectionKind.FINITE

    def name_of(self, i: int) -> str:
        return self.carrier.name(i)

    def names(self, bits: int) -> List[str]:
        return self.carrier.poset.names(bits)

    def index_of(self, name: str) -> int:
        try:
            return self.carrier.poset.index[name]
        except KeyError:
            raise UnknownElement(f"'{name}' is not an element of {self.name}", name) from None

    def leq(self, x: int, y: int) -> bool:
        return self.carrier.leq(x, y)

    def meet(self, x: int, y: int) -> int:
        return self.carrier.meet(x, y)

    def join(self, x: int, y: int) -> Optional[int]:
        return self.carrier.join(x, y)

    def join_bits(self, bits: int) -> Optional[int]:
        return self.carrier.join_bits(bits)

    def describe(self, bits: int) -> str:
        return format_set(self.names(bits))


def validate_sframe(L: MeetSemilattice, S: SelectionFunction, name: str = 'L') -> SFrame:
    """
    Validate that every designated subset has a join and that binary meets
    distribute over designated joins.

    Raises:
        MissingJoin: a designated subset (possibly the empty one) has no join
        DistributivityFailure: a ∧ ⋁B differs from ⋁{a ∧ b : b ∈ B}
    """
    if L.bottom is None:
        raise MissingJoin(f"{name}: the empty set has no join (no bottom element)", [])
    n = L.size
    if S.kind is SelectionKind.FINITE:
        # binary joins and binary distributivity give the finite case by induction
        for x in range(n):
            for y in range(x + 1, n):
                if L.join(x, y) is None:
                    raise MissingJoin(f"{name}: {{{L.name(x)},{L.name(y)}}} has no join",
                                      [L.name(x), L.name(y)])
        for a in range(n):
            for x in range(n):
                for y in range(x + 1, n):
                    lhs = L.meet(a, L.join(x, y))
                    rhs = L.join(L.meet(a, x), L.meet(a, y))
                    if lhs != rhs:
                        raise DistributivityFailure(
                            f"{name}: {L.name(a)} ∧ ⋁{{{L.name(x)},{L.name(y)}}} = {L.name(lhs)} "
                            f"but the join of the meets is {L.name(rhs)}",
                            (L.name(a), [L.name(x), L.name(y)]))
    else:
        for B in S.designated_sets():
            j = L.join_bits(B)
            if j is None:
                raise MissingJoin(f"{name}: designated {S.describe(B)} has no join", L.poset.names(B))
            for a in range(n):
                meets = 0
                for b in iter_bits(B):
                    meets |= bit(L.meet(a, b))
                rhs = L.join_bits(meets)
                if rhs is None or rhs != L.meet(a, j):
                    raise DistributivityFailure(
                        f"{name}: {L.name(a)} ∧ ⋁{S.describe(B)} does not distribute",
                        (L.name(a), L.poset.names(B)))
    regime = check_axioms(S).regime
    logger.debug(f"validated S-frame {name} ({n} elements, {S.kind.value}, regime {regime.value})")
    return SFrame(name, L, S, regime)


def lattice_frame(L: MeetSemilattice, name: str) -> SFrame:
    """
    A finite lattice under the finite selection. Distributive lattices come
    back in regime FULL; a non-distributive one is kept in regime BASE, so
    frame-level statements about it are reported but not asserted.

    Raises:
        MissingJoin: some pair has no join
    """
    S = make_selection(L, SelectionKind.FINITE)
    try:
        return validate_sframe(L, S, name)
    except DistributivityFailure as e:
        logger.warning(f"{name} is a lattice but not a frame: {e}")
        return SFrame(name, L, S, Regime.BASE)


# ========================== MAPS ==========================
@dataclass(frozen=True, eq=False)
class SFrameMap:
    domain: SFrame
    codomain: SFrame
    table: Tuple[int, ...]
    # set by checked_map when a lenient build kept a map that failed validation
    finding: Optional[str] = None

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __repr__(self):
        return f"SFrameMap({self.domain.name} -> {self.codomain.name})"

    def image_bits(self, bits: int) -> int:
        out = 0
        for x in iter_bits(bits):
            out |= bit(self.table[x])
        return out

    def as_names(self) -> Dict[str, str]:
        return {self.domain.name_of(x): self.codomain.name_of(y) for x, y in enumerate(self.table)}

    @property
    def regime(self) -> Regime:
        regimes = {self.domain.regime, self.codomain.regime}
        if Regime.IRREGULAR in regimes:
            return Regime.IRREGULAR
        return Regime.FULL if regimes == {Regime.FULL} else Regime.BASE


MapTable = Union[Sequence[int], Mapping[str, str]]


def _as_index_table(f: MapTable, L: SFrame, M: SFrame) -> Tuple[int, ...]:
    if isinstance(f, Mapping):
        missing = [e for e in L.elements if e not in f]
        if missing:
            raise UnknownElement(f"map is not total on {L.name}: no image for {missing[0]}", missing[0])
        return tuple(M.index_of(f[e]) for e in L.elements)
    table = tuple(int(v) for v in f)
    if len(table) != L.size or any(not 0 <= v < M.size for v in table):
        raise UnknownElement(f"map table does not fit {L.name} -> {M.name}", table)
    return table


def join_failure(h: SFrameMap) -> Optional[JoinViolation]:
    """
    The first designated join h does not preserve, or None. On full domains
    that is the empty join and every binary join.
    """
    L, M, table = h.domain, h.codomain, h.table
    if L.is_full:
        if table[L.bottom] != M.bottom:
            return JoinViolation("f does not preserve the empty join", [])
        for x in range(L.size):
            for y in range(x + 1, L.size):
                if table[L.join(x, y)] != M.join(table[x], table[y]):
                    return JoinViolation(
                        f"f(⋁{{{L.name_of(x)},{L.name_of(y)}}}) ≠ ⋁f[{{{L.name_of(x)},{L.name_of(y)}}}]",
                        [L.name_of(x), L.name_of(y)])
        return None
    for B in L.selection.designated_sets():
        if table[L.join_bits(B)] != M.join_bits(h.image_bits(B)):
            return JoinViolation(f"f(⋁{L.describe(B)}) ≠ ⋁f[{L.describe(B)}]", L.names(B))
    return None


def validate_map(f: MapTable, L: SFrame, M: SFrame) -> SFrameMap:
    """
    Validate an S-frame map: finite meets, top and designated joins.

    Raises:
        MeetViolation, TopViolation, JoinViolation with the first witness
    """
    table = _as_index_table(f, L, M)
    n = L.size
    for x in range(n):
        for y in range(x + 1, n):
            if table[L.meet(x, y)] != M.meet(table[x], table[y]):
                raise MeetViolation(
                    f"f({L.name_of(x)} ∧ {L.name_of(y)}) ≠ f({L.name_of(x)}) ∧ f({L.name_of(y)})",
                    (L.name_of(x), L.name_of(y)))
    if table[L.top] != M.top:
        raise TopViolation(f"f({L.name_of(L.top)}) = {M.name_of(table[L.top])} is not the top of {M.name}",
                           L.name_of(L.top))
    h = SFrameMap(L, M, table)
    failure = join_failure(h)
    if failure is not None:
        raise failure
    return h


def checked_map(f: MapTable, L: SFrame, M: SFrame, strict: bool) -> SFrameMap:
    """
    validate_map when ``strict``. Otherwise a map that fails validation is
    still returned, with the violation logged and kept as its ``finding``;
    used between lattices that need not be frames.
    """
    if strict:
        return validate_map(f, L, M)
    try:
        return validate_map(f, L, M)
    except MapValidationError as e:
        finding = f"{type(e).__name__}: {e}"
        logger.warning(f"{L.name} -> {M.name} kept without validation: {finding}")
        return SFrameMap(L, M, _as_index_table(f, L, M), finding)


def identity_map(L: SFrame) -> SFrameMap:
    return SFrameMap(L, L, tuple(range(L.size)))


def compose(g: SFrameMap, f: SFrameMap) -> SFrameMap:
    """g ∘ f"""
    return SFrameMap(f.domain, g.codomain, tuple(g.table[v] for v in f.table))


def is_isomorphism(h: SFrameMap) -> bool:
    """Bijective with an inverse that is itself an S-frame map."""
    if len(set(h.table)) != h.codomain.size or h.domain.size != h.codomain.size:
        return False
    inverse = [0] * h.codomain.size
    for x, y in enumerate(h.table):
        inverse[y] = x
    try:
        validate_map(inverse, h.codomain, h.domain)
    except (MeetViolation, TopViolation, JoinViolation):
        return False
    return True


def enumerate_maps(L: SFrame, M: SFrame) -> Iterator[SFrameMap]:
    """Every S-frame map L -> M: monotone tables filtered by validate_map."""
    for table in itertools.product(range(M.size), repeat=L.size):
        if not all(M.leq(table[x], table[y]) for x in range(L.size) for y in range(L.size) if L.leq(x, y)):
            continue
        try:
            yield validate_map(table, L, M)
        except (MeetViolation, TopViolation, JoinViolation):
            continue


# ========================== ADJOINTS ==========================
@dataclass(frozen=True)
class Adjoint:
    """Adjoint table, or the element of the codomain where it breaks down."""
    table: Optional[Tuple[int, ...]]
    witness: Optional[int] = None

    @property
    def exists(self) -> bool:
        return self.table is not None


def right_adjoint(h: SFrameMap) -> Adjoint:
    """r(m) = max{x : h(x) ≤ m}, when every such set has a maximum."""
    L, M = h.domain, h.codomain
    table = []
    for m in range(M.size):
        below = 0
        for x in range(L.size):
            if M.leq(h(x), m):
                below |= bit(x)
        r = L.carrier.poset.maximum(below)
        if r is None:
            return Adjoint(None, m)
        table.append(r)
    table = tuple(table)
    for x in range(L.size):
        for m in range(M.size):
            if M.leq(h(x), m) != L.leq(x, table[m]):
                raise InvariantViolation(f"Galois condition fails for right adjoint of {h!r}",
                                         (L.name_of(x), M.name_of(m)))
    return Adjoint(table)


def left_adjoint(h: SFrameMap) -> Adjoint:
    """l(m) = min{x : m ≤ h(x)}, when every such set has a minimum."""
    L, M = h.domain, h.codomain
    table = []
    for m in range(M.size):
        above = 0
        for x in range(L.size):
            if M.leq(m, h(x)):
                above |= bit(x)
        lower = L.carrier.poset.minimum(above)
        if lower is None:
            return Adjoint(None, m)
        table.append(lower)
    table = tuple(table)
    for x in range(L.size):
        for m in range(M.size):
            if L.leq(table[m], x) != M.leq(m, h(x)):
                raise InvariantViolation(f"Galois condition fails for left adjoint of {h!r}",
                                         (L.name_of(x), M.name_of(m)))
    return Adjoint(table)


@dataclass(frozen=True)
class DensityProfile:
    dense: bool
    codense: bool
    injective: bool
    surjective: bool

    def as_dict(self) -> Dict[str, bool]:
        return {'dense': self.dense, 'codense': self.codense,
                'injective': self.injective, 'surjective': self.surjective}


def density_profile(h: SFrameMap) -> DensityProfile:
    L, M = h.domain, h.codomain
    return DensityProfile(
        dense=all(x == L.bottom for x in range(L.size) if h(x) == M.bottom),
        codense=all(x == L.top for x in range(L.size) if h(x) == M.top),
        injective=len(set(h.table)) == L.size,
        surjective=len(set(h.table)) == M.size,
    )


def preservation_check(h: SFrameMap) -> List[str]:
    """
    Exhaustive check that adjoints force preservation: with a right adjoint
    r, h preserves every existing join and r every existing meet; with a
    left adjoint l, h preserves every existing meet and l every existing
    join. Returns the violations found (empty when all hold).
    """
    L, M = h.domain, h.codomain
    problems: List[str] = []
    r = right_adjoint(h)
    l = left_adjoint(h)
    for X in range(1 << L.size):
        if r.exists:
            j = L.join_bits(X)
            if j is not None and h(j) != M.join_bits(h.image_bits(X)):
                problems.append(f"h does not preserve ⋁{L.describe(X)}")
        if l.exists:
            m = L.carrier.poset.glb_bits(X)
            if m is not None and h(m) != M.carrier.poset.glb_bits(h.image_bits(X)):
                problems.append(f"h does not preserve ⋀{L.describe(X)}")
    for Y in range(1 << M.size):
        if r.exists:
            m = M.carrier.poset.glb_bits(Y)
            if m is not None and r.table[m] != L.carrier.poset.glb_bits(_image(r.table, Y)):
                problems.append(f"r does not preserve ⋀{M.describe(Y)}")
        if l.exists:
            j = M.join_bits(Y)
            if j is not None and l.table[j] != L.join_bits(_image(l.table, Y)):
                problems.append(f"l does not preserve ⋁{M.describe(Y)}")
    return problems


def _image(table: Sequence[int], bits: int) -> int:
    out = 0
    for y in iter_bits(bits):
        out |= bit(table[y])
    return out
