"""
Built-in catalog: small lattices under the singleton and finite selections.

Entries are named ``<lattice>+<selection>``, e.g. ``D4+finite``.
"""
from typing import Dict, List, Tuple

from src.catalog.io import parse_structure
from src.errors import PFrameError, UnknownStructure
from src.order.selection import SelectionKind
from src.utils.helpers import get_logger

logger = get_logger('catalog')

# name -> (elements, cover pairs)
LATTICES: Dict[str, Tuple[List[str], List[Tuple[str, str]]]] = {
    'C2': (['0', '1'], [('0', '1')]),
    'C3': (['0', 'a', '1'], [('0', 'a'), ('a', '1')]),
    'D4': (['0', 'a', 'b', '1'], [('0', 'a'), ('0', 'b'), ('a', '1'), ('b', '1')]),
    'M3': (['0', 'a', 'b', 'c', '1'],
           [('0', 'a'), ('0', 'b'), ('0', 'c'), ('a', '1'), ('b', '1'), ('c', '1')]),
    'N5': (['0', 'a', 'b', 'c', '1'],
           [('0', 'a'), ('a', 'c'), ('0', 'b'), ('c', '1'), ('b', '1')]),
    # 2 x 3 grid: two diamonds stacked along a shared edge
    'two_diamonds': (['0', 'a', 'b', 'c', 'd', '1'],
                     [('0', 'a'), ('0', 'b'), ('a', 'c'), ('b', 'c'), ('b', 'd'), ('c', '1'), ('d', '1')]),
}

SELECTIONS = (SelectionKind.SINGLETONS, SelectionKind.FINITE)


def entry_name(lattice: str, kind: SelectionKind) -> str:
    return f"{lattice}+{SelectionKind(kind).value}"


def builtin_document(name: str) -> dict:
    """Structure document for a built-in entry name such as 'M3+finite'."""
    lattice, _, kind = name.partition('+')
    if lattice not in LATTICES or kind not in {k.value for k in SELECTIONS}:
        raise UnknownStructure(f"no built-in structure named '{name}'", name)
    elements, covers = LATTICES[lattice]
    return {
        'name': name,
        'elements': list(elements),
        'le': [list(pair) for pair in covers],
        'selection': {'kind': kind},
    }


def builtin_names() -> List[str]:
    return [entry_name(lattice, kind) for lattice in LATTICES for kind in SELECTIONS]


def builtin(name: str):
    """Parse and validate one built-in entry."""
    return parse_structure(builtin_document(name))


def builtin_catalog() -> list:
    """
    Every built-in entry that validates as an S-frame. Non-distributive
    lattices under the finite selection are not S-frames and are skipped.
    """
    structures = []
    for name in builtin_names():
        try:
            structures.append(builtin(name))
        except PFrameError as e:
            logger.info(f"skipping {name}: {type(e).__name__}: {e}")
    return structures
