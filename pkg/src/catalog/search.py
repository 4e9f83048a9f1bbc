"""
Witness search over small lattices.

Every finite meet-semilattice with a top is a lattice, so the search
enumerates lattices up to isomorphism, pairs each with the requested
selections and evaluates a boolean predicate over the Boolean ladder and
lattice profile flags.
"""
import ast
import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.analysis.boolean import boolean_classify
from src.catalog.io import structure_document
from src.config import Config
from src.errors import CapacityExceeded, ParseError, PFrameError
from src.frames.sframe import SFrame, validate_sframe
from src.order.poset import MeetSemilattice, Poset, lattice_profile
from src.order.selection import Regime, SelectionKind, make_selection
from src.utils.helpers import get_logger

logger = get_logger('search')

FLAGS = ('a', 'b', 'c', 'd', 'lattice', 'distributive', 'complemented', 'boolean', 'full')

_SYMBOLS = {'∧': ' and ', '∨': ' or ', '¬': ' not ', '&': ' and ', '|': ' or ', '!': ' not '}


# ========================== PREDICATES ==========================
def parse_predicate(text: str) -> Callable[[Dict[str, bool]], bool]:
    """
    Compile a predicate such as "(c) ∧ ¬(b)" or "b and not a".

    Raises:
        ParseError: unknown flag or unsupported syntax
    """
    source = text
    for symbol, word in _SYMBOLS.items():
        source = source.replace(symbol, word)
    try:
        tree = ast.parse(source.strip(), mode='eval')
    except SyntaxError as e:
        raise ParseError(f"cannot parse predicate '{text}': {e.msg}", text) from None

    def build(node) -> Callable[[Dict[str, bool]], bool]:
        if isinstance(node, ast.BoolOp):
            parts = [build(v) for v in node.values]
            if isinstance(node.op, ast.And):
                return lambda flags: all(p(flags) for p in parts)
            return lambda flags: any(p(flags) for p in parts)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
            inner = build(node.operand)
            return lambda flags: not inner(flags)
        if isinstance(node, ast.Name):
            if node.id not in FLAGS:
                raise ParseError(f"unknown flag '{node.id}' (expected one of {', '.join(FLAGS)})", node.id)
            return lambda flags: flags[node.id]
        raise ParseError(f"unsupported syntax in predicate '{text}'", type(node).__name__)

    return build(tree.body)


def structure_flags(L: SFrame) -> Dict[str, bool]:
    profile = lattice_profile(L.carrier)
    ladder = boolean_classify(L)
    flags = dict(ladder.as_dict())
    flags.update({
        'lattice': profile.is_lattice,
        'distributive': profile.is_distributive,
        'complemented': profile.all_complemented,
        'boolean': profile.is_boolean_algebra,
        'full': L.regime is Regime.FULL,
    })
    return flags


# ========================== LATTICE ENUMERATION ==========================
def _canonical_key(le: np.ndarray, middle: Sequence[Tuple[int, ...]]) -> bytes:
    n = le.shape[0]
    best = None
    for perm in middle:
        order = (0,) + perm + (n - 1,)
        key = le[np.ix_(order, order)].tobytes()
        if best is None or key < best:
            best = key
    return best


def lattices(n: int) -> Iterator[np.ndarray]:
    """
    Order matrices of all n-element lattices up to isomorphism, in
    canonical-key order. Index 0 is the bottom and n-1 the top; candidates
    number their middle elements along a linear extension. Needs n >= 2:
    a lattice here always has a distinct bottom and top.
    """
    middle = list(range(1, n - 1))
    candidates = list(itertools.combinations(middle, 2))
    perms = list(itertools.permutations(middle))
    found: Dict[bytes, np.ndarray] = {}
    for mask in range(1 << len(candidates)):
        le = np.eye(n, dtype=bool)
        le[0, :] = True
        le[:, n - 1] = True
        for k, (i, j) in enumerate(candidates):
            if mask >> k & 1:
                le[i, j] = True
        square = (le.astype(np.int64) @ le.astype(np.int64)) > 0
        if (square & ~le).any():
            continue
        try:
            MeetSemilattice(Poset(['_'] * n, le))
        except PFrameError:
            continue
        key = _canonical_key(le, perms)
        if key not in found:
            found[key] = np.frombuffer(key, dtype=bool).reshape(n, n).copy()
    for key in sorted(found):
        yield found[key]


def element_names(n: int) -> List[str]:
    return ['0'] + [f"x{i}" for i in range(1, n - 1)] + ['1']


# ========================== SEARCH ==========================
@dataclass
class SearchSpec:
    predicate: str
    max_size: int = Config.SEARCH_MAX_SIZE
    kinds: Tuple[SelectionKind, ...] = (SelectionKind.SINGLETONS, SelectionKind.FINITE)
    min_size: int = 2


@dataclass
class SearchResult:
    predicate: str
    max_size: int
    size: Optional[int] = None
    witnesses: List[SFrame] = field(default_factory=list)
    flags: List[Dict[str, bool]] = field(default_factory=list)
    examined: int = 0

    @property
    def found(self) -> bool:
        return bool(self.witnesses)

    def as_dict(self) -> dict:
        return {
            'predicate': self.predicate,
            'max_size': self.max_size,
            'examined': self.examined,
            'size': self.size,
            'witnesses': [dict(structure_document(L), flags=f) for L, f in zip(self.witnesses, self.flags)],
        }


def search(spec: SearchSpec) -> SearchResult:
    """
    All witnesses of the smallest size at which the predicate holds, or an
    empty result when none exists up to the bound.

    Raises:
        CapacityExceeded: max_size beyond the configured search bound
        ParseError: bad predicate
    """
    if spec.max_size > Config.SEARCH_MAX_SIZE:
        raise CapacityExceeded(f"search up to {spec.max_size} elements", Config.SEARCH_MAX_SIZE)
    predicate = parse_predicate(spec.predicate)
    result = SearchResult(spec.predicate, spec.max_size)
    for n in range(max(spec.min_size, 2), spec.max_size + 1):
        names = element_names(n)
        for k, le in enumerate(lattices(n)):
            carrier = MeetSemilattice(Poset(names, le))
            for kind in spec.kinds:
                try:
                    L = validate_sframe(carrier, make_selection(carrier, kind), f"L{n}_{k}+{SelectionKind(kind).value}")
                except PFrameError:
                    continue
                result.examined += 1
                flags = structure_flags(L)
                if predicate(flags):
                    result.witnesses.append(L)
                    result.flags.append(flags)
        logger.debug(f"searched size {n}: {result.examined} structures so far")
        if result.witnesses:
            result.size = n
            logger.info(f"'{spec.predicate}': {len(result.witnesses)} witness(es) at size {n}")
            return result
    logger.info(f"'{spec.predicate}': none up to size {spec.max_size}")
    return result
