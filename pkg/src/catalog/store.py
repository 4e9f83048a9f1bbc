"""
On-disk catalog: a directory of structure files plus ``cache/`` holding
derived artifacts keyed by the sha256 of the structure document.
"""
import hashlib
import json
import os
from typing import List, Optional

from src.catalog.builtin import builtin, builtin_document, builtin_names
from src.catalog.io import parse_structure, read_file, structure_document
from src.config import Config
from src.errors import PFrameError, ParseError, UnknownStructure
from src.frames.congruence import CongruenceFrame, enumerate_congruence_frame
from src.frames.freeframe import FreeFrame, enumerate_free_frame
from src.frames.sframe import SFrame
from src.utils.helpers import atomic_write, dump_json, get_logger

logger = get_logger('store')


def content_hash(document: dict) -> str:
    canonical = json.dumps(document, sort_keys=True, ensure_ascii=False, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


class CatalogStore:
    """Named structures in ``directory``; built-ins are always resolvable."""

    def __init__(self, directory: Optional[str] = None):
        self.directory = directory or Config.CATALOG_DIR
        self.cache_dir = os.path.join(self.directory, 'cache')

    def path_for(self, name: str) -> str:
        return os.path.join(self.directory, f"{name}.json")

    def names(self) -> List[str]:
        """Stored entries (sorted) followed by built-ins not overridden on disk."""
        stored = []
        if os.path.isdir(self.directory):
            stored = sorted(f[:-5] for f in os.listdir(self.directory) if f.endswith('.json'))
        return stored + [n for n in builtin_names() if n not in stored]

    def load(self, name: str) -> SFrame:
        path = self.path_for(name)
        if os.path.exists(path):
            return parse_structure(read_file(path))
        if name in builtin_names():
            return builtin(name)
        raise UnknownStructure(f"no structure named '{name}' in {self.directory}", name)

    def load_all(self) -> List[SFrame]:
        """Every entry that validates; invalid entries are logged and skipped."""
        structures = []
        for name in self.names():
            try:
                structures.append(self.load(name))
            except PFrameError as e:
                logger.info(f"skipping {name}: {type(e).__name__}: {e}")
        return structures

    def save(self, L: SFrame) -> str:
        path = self.path_for(L.name)
        atomic_write(path, dump_json(structure_document(L)))
        logger.info(f"saved {L.name} to {path}")
        return path

    def seed(self) -> List[str]:
        """Write every built-in document (valid or not) into the directory."""
        paths = []
        for name in builtin_names():
            path = self.path_for(name)
            atomic_write(path, dump_json(builtin_document(name)))
            paths.append(path)
        return paths

    # Cache

    def _cache_path(self, L: SFrame) -> str:
        return os.path.join(self.cache_dir, f"{content_hash(structure_document(L))}.json")

    def _read_cache(self, L: SFrame) -> dict:
        path = self._cache_path(L)
        if not os.path.exists(path):
            return {}
        try:
            data = json.loads(read_file(path))
        except (ParseError, json.JSONDecodeError):
            logger.warning(f"ignoring unreadable cache file {path}")
            return {}
        return data if isinstance(data, dict) else {}

    def _write_cache(self, L: SFrame, key: str, value) -> None:
        data = self._read_cache(L)
        data[key] = value
        atomic_write(self._cache_path(L), dump_json(data))

    def free_frame(self, L: SFrame) -> FreeFrame:
        cached = self._read_cache(L).get('free_frame')
        if cached is not None:
            try:
                F = FreeFrame.from_ideals(L, (L.carrier.poset.bits_for(names) for names in cached))
                logger.debug(f"free frame of {L.name} loaded from cache")
                return F
            except PFrameError as e:
                logger.warning(f"stale free-frame cache for {L.name}: {e}")
        F = enumerate_free_frame(L)
        self._write_cache(L, 'free_frame', [L.names(b) for b in F.ideals])
        return F

    def congruence_frame(self, L: SFrame) -> CongruenceFrame:
        cached = self._read_cache(L).get('congruences')
        if cached is not None:
            try:
                C = CongruenceFrame.from_congruences(L, cached)
                logger.debug(f"congruence frame of {L.name} loaded from cache")
                return C
            except PFrameError as e:
                logger.warning(f"stale congruence cache for {L.name}: {e}")
        C = enumerate_congruence_frame(L)
        self._write_cache(L, 'congruences', [list(theta.class_of) for theta in C.congruences])
        return C
