"""
pframe command line: check | build | map | verify | search | export.

Exit codes: 0 ok, 1 a FULL-regime assertion failed, 2 input error.
"""
import argparse
import os
import sys
from typing import List, Optional

from src.analysis.maps import closed_open_profile
from src.analysis.report import VerdictReport
from src.analysis.theorems import SUITES, run_suite
from src.catalog.builtin import builtin_document, builtin_names
from src.catalog.io import dump_structure, parse_map, parse_structure, read_file, resolver
from src.catalog.search import FLAGS, SearchSpec, search
from src.catalog.store import CatalogStore
from src.config import Config
from src.errors import PFrameError
from src.frames.congruence import congruence_frame_dot, congruence_tables, madden
from src.frames.freeframe import free_frame_dot, ideal_names
from src.frames.sframe import SFrame
from src.order.poset import lattice_profile
from src.order.selection import SelectionKind, check_axioms
from src.utils.helpers import atomic_write, dump_json, get_logger, hasse_dot, setup_logging

logger = get_logger('cli')

EXIT_OK, EXIT_FAILURE, EXIT_INPUT = 0, 1, 2


class CommandContext:
    """Per-invocation state: output format and the catalog used to resolve names."""

    def __init__(self, args: argparse.Namespace):
        self.format = args.format
        self.store = CatalogStore(args.catalog_dir)
        self.structures = {}
        self.resolve = resolver(self.structures, self.store.load)

    def structure(self, ref: str) -> SFrame:
        """A structure file path, or a catalog entry name."""
        if os.path.exists(ref):
            L = parse_structure(read_file(ref))
            self.structures.setdefault(L.name, L)
            return self.structures[L.name]
        return self.resolve(ref)

    def emit(self, data: dict, text: str):
        sys.stdout.write(dump_json(data) + '\n' if self.format == 'json' else text)


# ========================== COMMANDS ==========================
def cmd_check(ctx: CommandContext, args) -> int:
    L = ctx.structure(args.structure)
    report = check_axioms(L.selection)
    profile = lattice_profile(L.carrier)
    data = {
        'name': L.name,
        'valid': True,
        'size': L.size,
        'regime': L.regime.value,
        'selection': L.selection.as_json(),
        'axioms': report.as_json(),
        'profile': profile.as_dict(),
    }
    lines = [f"{L.name}: valid S-frame, {L.size} elements, {L.selection.kind.value} selection, "
             f"regime {L.regime.value}"]
    for axiom, entry in data['axioms']['axioms'].items():
        witness = f"  witness {entry['witness']}" if entry['witness'] else ''
        lines.append(f"  {axiom}: {'✓' if entry['holds'] else '✗'}{witness}")
    ctx.emit(data, '\n'.join(lines) + '\n')
    return EXIT_OK


def cmd_build(ctx: CommandContext, args) -> int:
    L = ctx.structure(args.structure)
    if args.what == 'free-frame':
        F = ctx.store.free_frame(L)
        principal = len(set(F.principal_index))
        data = {'name': L.name, 'ideals': ideal_names(F), 'labels': list(F.labels),
                'size': F.size, 'principal': principal}
        text = f"{F.size} ideals, {principal} principal\n" + ''.join(
            f"  {label}: {ideal}\n" for label, ideal in zip(F.labels, ideal_names(F)))
        dot = free_frame_dot(F) if args.dot else None
    else:
        C = ctx.store.congruence_frame(L)
        image = len(set(C.nabla_index))
        nabla = '∇ surjective' if image == C.size else f"∇ image size {image}"
        data = {'name': L.name, 'size': C.size, 'nabla_image_size': image, 'congruences': congruence_tables(C)}
        text = f"{C.size} congruences; {nabla}\n" + ''.join(
            f"  {C.labels[i]}: {C.describe(i)}\n" for i in range(C.size))
        dot = congruence_frame_dot(C) if args.dot else None
    if args.dot:
        atomic_write(args.dot, dot)
    if args.json:
        atomic_write(args.json, dump_json(data))
    ctx.emit(data, text)
    return EXIT_OK


def cmd_map(ctx: CommandContext, args) -> int:
    if args.madden:
        L = ctx.structure(args.madden)
        h = madden(L, ctx.store.free_frame(L)).map
    elif args.mapfile:
        h = parse_map(read_file(args.mapfile), ctx.resolve)
    else:
        raise PFrameError("map needs a map file or --madden STRUCTURE")
    analysis = closed_open_profile(h)
    full = analysis.as_dict()
    keys = {'adjoints': ['right_adjoint', 'left_adjoint'], 'closed': ['closed', 'closed_by_adjoint'],
            'open': ['open', 'open_by_adjoint'], 'dense': ['dense', 'codense', 'injective', 'surjective']}
    wanted = [k for part in args.analyze.split(',') for k in keys.get(part.strip(), [])] if args.analyze else None
    shown = {k: v for k, v in full.items() if wanted is None or k in wanted or k in ('regime', 'witnesses')}
    data = {'domain': h.domain.name, 'codomain': h.codomain.name, 'map': h.as_names(), 'analysis': shown}
    lines = [f"{h.domain.name} -> {h.codomain.name}"]
    for key, value in shown.items():
        if key == 'witnesses':
            continue
        if key in ('right_adjoint', 'left_adjoint') and value is None:
            value = f"none (witness m={full['witnesses'][key]})"
        lines.append(f"  {key}: {value}")
    for key, value in full['witnesses'].items():
        lines.append(f"  witness[{key}]: {value}")
    ctx.emit(data, '\n'.join(lines) + '\n')
    return EXIT_OK


def cmd_verify(ctx: CommandContext, args) -> int:
    structures: List[SFrame] = []
    if args.catalog:
        structures.extend(ctx.store.load_all())
    for ref in args.structures:
        structures.append(ctx.structure(ref))
    if not structures:
        raise PFrameError("verify needs structure files, names, or --catalog")
    report = VerdictReport(run_suite(structures, args.suite, args.map_bound))
    if args.xlsx:
        report.save_results(args.xlsx)
    if ctx.format == 'json':
        sys.stdout.write(report.to_json() + '\n')
    else:
        sys.stdout.write(report.to_text())
    return report.exit_code


def cmd_search(ctx: CommandContext, args) -> int:
    kinds = tuple(SelectionKind(k) for k in args.kinds.split(','))
    result = search(SearchSpec(args.predicate, args.max_size, kinds))
    if result.found:
        text = f"{len(result.witnesses)} witness(es) at size {result.size} for '{args.predicate}':\n" + ''.join(
            f"  {L.name}: {hasse_label(L)}\n" for L in result.witnesses)
    else:
        text = f"none up to {args.max_size} elements for '{args.predicate}'\n"
    ctx.emit(result.as_dict(), text)
    return EXIT_OK


def hasse_label(L: SFrame) -> str:
    covers = L.carrier.poset.cover_pairs()
    return ', '.join(f"{L.name_of(i)}<{L.name_of(j)}" for i, j in covers)


def cmd_export(ctx: CommandContext, args) -> int:
    out_dir = ctx.store.directory if args.seed else args.out_dir
    if args.seed:
        written = ctx.store.seed()
    else:
        names = args.structures or builtin_names()
        written = []
        for ref in names:
            if ref in builtin_names() and not os.path.exists(ref):
                text, name = dump_json(builtin_document(ref)), ref
            else:
                L = ctx.structure(ref)
                text, name = dump_structure(L), L.name
                if args.dot:
                    poset = L.carrier.poset
                    atomic_write(os.path.join(out_dir, f"{name}.dot"),
                                 hasse_dot(name, list(L.elements), poset.cover_pairs()))
            path = os.path.join(out_dir, f"{name}.json")
            atomic_write(path, text + '\n')
            written.append(path)
    ctx.emit({'written': written}, ''.join(f"wrote {p}\n" for p in written))
    return EXIT_OK


COMMANDS = {
    'check': cmd_check,
    'build': cmd_build,
    'map': cmd_map,
    'verify': cmd_verify,
    'search': cmd_search,
    'export': cmd_export,
}


# ========================== PARSER ==========================
GLOBAL_DEFAULTS = {'format': 'text', 'capacity': None, 'congruence_capacity': None,
                   'catalog_dir': None, 'log_file': None, 'log_level': None}


def global_options(with_defaults: bool) -> argparse.ArgumentParser:
    """
    Options accepted before or after the command. The copy given to the
    subcommands has no defaults, so it never overwrites a value set before
    the command.
    """
    def default(key):
        return GLOBAL_DEFAULTS[key] if with_defaults else argparse.SUPPRESS

    p = argparse.ArgumentParser(add_help=False)
    p.add_argument('--format', choices=['json', 'text'], default=default('format'), help='Report format')
    p.add_argument('--capacity', type=int, default=default('capacity'), help='Bound on enumerated ideals')
    p.add_argument('--congruence-capacity', type=int, default=default('congruence_capacity'),
                   help='Bound on enumerated congruences')
    p.add_argument('--catalog-dir', default=default('catalog_dir'), help='Catalog directory')
    p.add_argument('--log-file', default=default('log_file'), help='Detailed log file')
    p.add_argument('--log-level', default=default('log_level'), help='Console log level')
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pframe',
        description='Finite partial frames: validation, free frames, congruence frames and theorem checks',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[global_options(True)],
        epilog="""
Examples:
  pframe check D4+finite
  pframe build D4+singletons free-frame --dot h.dot
  pframe map --madden C3+singletons
  pframe verify --catalog --suite all --format json
  pframe --format json verify D4+singletons --map-bound 3
  pframe search "(c) ∧ ¬(b)" --max-size 5
        """
    )
    common = [global_options(False)]
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('check', parents=common, help='Validate a structure and report its axioms')
    p.add_argument('structure', help='Structure file or catalog name')

    p = sub.add_parser('build', parents=common, help='Enumerate the free frame or the congruence frame')
    p.add_argument('structure', help='Structure file or catalog name')
    p.add_argument('what', choices=['free-frame', 'congruences'])
    p.add_argument('--dot', help='Write the Hasse diagram as DOT')
    p.add_argument('--json', help='Write the artifacts as JSON')

    p = sub.add_parser('map', parents=common, help='Analyse an S-frame map')
    p.add_argument('mapfile', nargs='?', help='Map file')
    p.add_argument('--madden', metavar='STRUCTURE', help='Analyse the Madden quotient map of a structure')
    p.add_argument('--analyze', help='Comma list of adjoints,closed,open,dense (default: everything)')

    p = sub.add_parser('verify', parents=common, help='Run the theorem suite')
    p.add_argument('structures', nargs='*', help='Structure files or catalog names')
    p.add_argument('--catalog', action='store_true', help='Include every catalog structure')
    p.add_argument('--suite', choices=SUITES, default='all')
    p.add_argument('--map-bound', type=int, default=4, help='Largest carrier whose maps are enumerated')
    p.add_argument('--xlsx', help='Also write the verdict table as xlsx')

    p = sub.add_parser('search', parents=common, help='Search small lattices for a predicate witness')
    p.add_argument('predicate', help=f"Boolean expression over {', '.join(FLAGS)}")
    p.add_argument('--max-size', type=int, default=Config.SEARCH_MAX_SIZE)
    p.add_argument('--kinds', default='singletons,finite', help='Comma list of selection kinds')

    p = sub.add_parser('export', parents=common, help='Write structure files (built-ins by default)')
    p.add_argument('structures', nargs='*', help='Structure files or catalog names')
    p.add_argument('--out-dir', default='.', help='Output directory')
    p.add_argument('--dot', action='store_true', help='Also write Hasse diagrams for loaded structures')
    p.add_argument('--seed', action='store_true', help='Seed the catalog directory with the built-ins')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    setup_logging(args.log_file or Config.LOG_FILE or None, args.log_level or Config.LOG_LEVEL)
    if args.capacity is not None:
        Config.CAPACITY = args.capacity
    if args.congruence_capacity is not None:
        Config.CONGRUENCE_CAPACITY = args.congruence_capacity
    try:
        return COMMANDS[args.command](CommandContext(args), args)
    except PFrameError as e:
        witness = f" (witness: {e.witness})" if e.witness is not None else ''
        logger.error(f"{type(e).__name__}: {e}{witness}")
        sys.stderr.write(f"error: {type(e).__name__}: {e}{witness}\n")
        return EXIT_INPUT
    except (OSError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
