"""
Structure and map files (UTF-8 JSON).

Structure: {"name", "elements", "le": [[lesser, greater]], "selection": {"kind", "sets"?}}
Map: {"domain", "codomain", "map": {element: element}}
"""
import json
import os
from typing import Callable, Dict, Union

from src.errors import ParseError, UnknownStructure
from src.frames.sframe import SFrame, SFrameMap, validate_map, validate_sframe
from src.order.poset import MeetSemilattice
from src.order.selection import SelectionKind, make_selection
from src.utils.helpers import dump_json, get_logger

logger = get_logger('io')

Document = Union[str, bytes, dict]


def _load(source: Document, what: str) -> dict:
    if isinstance(source, dict):
        return source
    try:
        data = json.loads(source)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ParseError(f"{what} is not valid JSON: {e}", str(e)) from None
    if not isinstance(data, dict):
        raise ParseError(f"{what} must be a JSON object", type(data).__name__)
    return data


def _require(data: dict, key: str, kind: type, what: str):
    if key not in data:
        raise ParseError(f"{what} lacks the '{key}' field", key)
    if not isinstance(data[key], kind):
        raise ParseError(f"{what} field '{key}' must be a {kind.__name__}", key)
    return data[key]


def read_file(path: str) -> str:
    if not os.path.exists(path):
        raise ParseError(f"file not found: {path}", path)
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


# ========================== STRUCTURES ==========================
def parse_structure(source: Document) -> SFrame:
    """
    Parse and validate a structure document.

    Raises:
        ParseError: malformed JSON or missing fields
        plus every order, selection and frame validation error, unchanged
    """
    data = _load(source, 'structure')
    name = data.get('name', 'L')
    if not isinstance(name, str):
        raise ParseError("structure field 'name' must be a string", 'name')
    elements = _require(data, 'elements', list, 'structure')
    if not all(isinstance(e, str) for e in elements):
        raise ParseError("structure elements must be strings", 'elements')
    pairs = []
    for pair in data.get('le', []):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(p, str) for p in pair)):
            raise ParseError(f"order pair {pair!r} must be a two-element list of strings", pair)
        pairs.append((pair[0], pair[1]))
    selection = data.get('selection', {'kind': SelectionKind.SINGLETONS.value})
    if not isinstance(selection, dict):
        raise ParseError("structure field 'selection' must be an object", 'selection')
    kind = selection.get('kind')
    if kind not in {k.value for k in SelectionKind}:
        raise ParseError(f"unknown selection kind {kind!r}", kind)

    carrier = MeetSemilattice.build(elements, pairs)
    sets = selection.get('sets')
    if sets is not None and not all(isinstance(s, list) for s in sets):
        raise ParseError("selection sets must be lists of element names", 'sets')
    S = make_selection(carrier, kind, sets)
    L = validate_sframe(carrier, S, name)
    logger.debug(f"parsed structure {name} ({L.size} elements, {L.regime.value})")
    return L


def structure_document(L: SFrame) -> dict:
    """Inverse of parse_structure: cover pairs only, elements in carrier order."""
    covers = L.carrier.poset.cover_pairs()
    return {
        'name': L.name,
        'elements': list(L.elements),
        'le': [[L.name_of(i), L.name_of(j)] for i, j in sorted(covers)],
        'selection': L.selection.as_json(),
    }


def dump_structure(L: SFrame) -> str:
    return dump_json(structure_document(L))


# ========================== MAPS ==========================
def parse_map(source: Document, resolve: Callable[[str], SFrame]) -> SFrameMap:
    """
    Parse a map document; ``resolve`` turns the domain and codomain names
    into structures (catalog entries or files).

    Raises:
        ParseError, UnknownStructure, or a map validation error
    """
    data = _load(source, 'map')
    domain = _require(data, 'domain', str, 'map')
    codomain = _require(data, 'codomain', str, 'map')
    table = _require(data, 'map', dict, 'map')
    L, M = resolve(domain), resolve(codomain)
    return validate_map({str(k): str(v) for k, v in table.items()}, L, M)


def map_document(h: SFrameMap) -> dict:
    return {'domain': h.domain.name, 'codomain': h.codomain.name, 'map': h.as_names()}


def resolver(structures: Dict[str, SFrame], loader: Callable[[str], SFrame] = None) -> Callable[[str], SFrame]:
    """
    Resolve a name against already loaded structures, then the loader
    (typically a catalog lookup), then a structure file on disk.
    """
    def resolve(name: str) -> SFrame:
        if name in structures:
            return structures[name]
        if loader is not None:
            try:
                structures[name] = loader(name)
                return structures[name]
            except UnknownStructure:
                pass
        if os.path.exists(name):
            structures[name] = parse_structure(read_file(name))
            return structures[name]
        raise UnknownStructure(f"cannot resolve structure '{name}'", name)
    return resolve

