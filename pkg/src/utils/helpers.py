import json
import logging
import os
import tempfile
from typing import Dict, Iterable, Optional, Sequence, Tuple

import pydotplus

LOGGER_NAME = 'pframe'


# ========================== LOGGING SETUP ==========================
def setup_logging(log_file_path: Optional[str] = None, level: str = 'INFO') -> logging.Logger:
    """
    Set up logging for the pframe tools.
    Creates a console handler on stderr and, when a path is given, a file
    handler with detailed formatting. Child loggers ``pframe.<module>``
    propagate here.
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG)

    # Clear any existing handlers
    logger.handlers.clear()

    detailed_formatter = logging.Formatter(
        '%(asctime)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    console_formatter = logging.Formatter('%(levelname)s - %(message)s')

    if log_file_path:
        file_handler = logging.FileHandler(log_file_path, mode='w', encoding='utf-8')
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(detailed_formatter)
        logger.addHandler(file_handler)

    # Console handler goes to stderr so reports on stdout stay clean
    console_handler = logging.StreamHandler()
    console_handler.setLevel(getattr(logging, level.upper(), logging.INFO))
    console_handler.setFormatter(console_formatter)
    logger.addHandler(console_handler)

    return logger


def get_logger(module: str) -> logging.Logger:
    return logging.getLogger(f'{LOGGER_NAME}.{module}')


# ========================== FORMATTING ==========================
def format_set(names: Iterable[str]) -> str:
    return '{' + ','.join(names) + '}'


def format_partition(classes: Sequence[Sequence[str]]) -> str:
    return '{' + ', '.join(format_set(c) for c in classes) + '}'


def dump_json(data) -> str:
    """Stable JSON text: insertion order is the only ordering used."""
    return json.dumps(data, indent=2, ensure_ascii=False)


def atomic_write(path: str, text: str):
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.tmp-', suffix='.json')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            f.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


# ========================== DOT ==========================
def hasse_dot(name: str, labels: Sequence[str], covers: Iterable[Tuple[int, int]],
              highlight: Optional[Dict[int, str]] = None) -> str:
    """
    Render a Hasse diagram as Graphviz DOT text.

    Args:
        name: graph name
        labels: one label per node index
        covers: (lower, upper) cover pairs
        highlight: node index -> fill colour

    Returns:
        DOT source, bottom-to-top
    """
    highlight = highlight or {}
    graph = pydotplus.Dot(graph_name=_quoted(name), graph_type='digraph')
    graph.set_rankdir('BT')
    graph.set_node_defaults(shape='box')
    for i, label in enumerate(labels):
        style = {'style': 'filled', 'fillcolor': highlight[i]} if i in highlight else {}
        graph.add_node(pydotplus.Node(f"n{i}", label=_quoted(label), **style))
    for lower, upper in covers:
        graph.add_edge(pydotplus.Edge(f"n{lower}", f"n{upper}", arrowhead='none'))
    return graph.to_string()


def _quoted(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'
