# ------------------------------------------------------------------------------------------------
# License
# ------------------------------------------------------------------------------------------------

# Copyright (c) 2025 LSeu-Open
#
# This code is licensed under the MIT License.
# See LICENSE file in the root directory

# ------------------------------------------------------------------------------------------------
# Description
# ------------------------------------------------------------------------------------------------

"""
Command-line interface.

    srgnet gen --family triangular --nu 8 --out t8.g6
    srgnet check t8.g6
    srgnet stratify t8.g6 --root 0 --format json
    srgnet entropy t8.g6 --g 1 --partition 1:23
    srgnet spectrum t8.g6 --root 0 --format json
    srgnet distinguish a.g6 b.g6
    srgnet scan catalog.g6 --format csv
    srgnet sweep --family lattice --nu 4 --partition 12:3 --g-min 0.01 --g-max 100 --points 25

Data goes to stdout and diagnostics to stderr. Exit status is 0 on success,
1 on a domain error (printed as ``error: <code>: <message>``) and 2 on a
usage error.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import argparse
import logging
import sys
from types import ModuleType
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from . import __version__
from .core.constants import CLI_VERBS, OUTPUT_FORMATS, PARTITION_LABELS
from .core.exceptions import SrgNetError
from .core.types import Convention, Graph, LogBase
from .csv_reporter import (
    write_discrepancy_csv,
    write_scan_csv,
    write_signature_csv,
    write_sweep_csv,
)
from .data.loaders import load_graph, load_graphs, save_graphs
from .data.graph6 import write_graph6
from .data.validators import srg_params
from .entanglement.family_forms import family_closed_forms
from .entanglement.schmidt import CouplingConfig, EntanglementReport
from .graphs.families import Family, FamilySpec, generate
from .run_analysis import entanglement_report, scan_files, sweep
from .signature.a12 import a12_signature, canonical_signature, distinguish
from .spectral.serialization import block_diagonalization_to_dict, stratification_to_dict
from .spectral.stratification import block_diagonalize, extract_blocks, stratify
from .utils.config_loader import config_value, load_config_from_path
from .utils.formatting import dumps_json, format_number
from .utils.logging import configure_console_only_logging, configure_logging

logger = logging.getLogger(__name__)

LOG_BASES = {'nats': LogBase.NATURAL, 'bits': LogBase.BASE2}

# ------------------------------------------------------------------------------------------------
# Errors
# ------------------------------------------------------------------------------------------------

class UsageError(Exception):
    """Flags that parse but do not make sense together."""

# ------------------------------------------------------------------------------------------------
# CLI Setup
# ------------------------------------------------------------------------------------------------

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=OUTPUT_FORMATS, default=None,
                        help='Output format (default: text; csv for sweep).')
    common.add_argument('--config', type=str, default=None,
                        help='Path to a custom numerical configuration file.')
    common.add_argument('--tol', type=float, default=None,
                        help='Signature comparison tolerance (default: 1e-6).')
    common.add_argument('--log-file', type=str, default=None,
                        help='Also write diagnostics to this file.')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('--quiet', action='store_true', help='Only report errors.')
    verbosity.add_argument('--verbose', action='store_true', help='Report numerical residuals.')
    return common

def _graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('graph', nargs='?', default=None, help='graph6 file (or use --family).')
    parser.add_argument('--index', type=int, default=0, help='Graph to use from a multi-line file.')

def _family_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--family', choices=[family.value for family in Family], default=None,
                        help='Generate a family member instead of reading a file.')
    parser.add_argument('--m', type=int, default=None, help='Complete bipartite K_{m,m}.')
    parser.add_argument('--parts', type=int, default=None, help='Complete multipartite: number of parts.')
    parser.add_argument('--part-size', type=int, default=None, help='Complete multipartite: part size.')
    parser.add_argument('--q', type=int, default=None, help='Cocktail party K_{q x 2}.')
    parser.add_argument('--nu', type=int, default=None, help='Triangular, lattice or Latin square size.')

def _coupling_options(parser: argparse.ArgumentParser) -> None:
    side = parser.add_mutually_exclusive_group()
    side.add_argument('--partition', choices=PARTITION_LABELS, default=None,
                      help='Strata bipartition (default: 1:23).')
    side.add_argument('--subset', type=str, default=None, help='Explicit side-A vertices, e.g. 0,4,7.')
    parser.add_argument('--root', type=int, default=0, help='Root vertex of the stratification.')
    parser.add_argument('--log-base', choices=sorted(LOG_BASES), default=None,
                        help='Entropy unit (default: nats).')
    parser.add_argument('--convention', choices=[c.value for c in Convention], default=None,
                        help='Ground-state exponent: V (paper) or V^(1/2) (physical).')

def build_parser() -> argparse.ArgumentParser:
    """Parser with one sub-command per verb."""
    parser = argparse.ArgumentParser(
        prog='srgnet',
        description='Strongly regular graphs as quantum oscillator networks: '
                    'generation, stratification, entanglement and A12 signatures.',
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    common = _common_options()
    verbs = parser.add_subparsers(dest='verb', metavar='{' + ','.join(CLI_VERBS) + '}')
    verbs.required = True

    gen = verbs.add_parser('gen', parents=[common], help='Generate a family member as graph6.')
    _family_options(gen)
    gen.add_argument('--out', type=str, default=None, help='Write to this file instead of stdout.')

    check = verbs.add_parser('check', parents=[common], help='Verify SRG parameters.')
    check.add_argument('graph', help='graph6 file.')

    strat = verbs.add_parser('stratify', parents=[common], help='Strata and block decomposition.')
    _graph_source(strat)
    _family_options(strat)
    strat.add_argument('--root', type=int, default=0, help='Root vertex.')

    entropy = verbs.add_parser('entropy', parents=[common], help='Ground-state entanglement entropy.')
    _graph_source(entropy)
    _family_options(entropy)
    _coupling_options(entropy)
    entropy.add_argument('--g', type=float, default=None, help='Coupling strength (default: 1).')
    entropy.add_argument('--discrepancies', action='store_true',
                         help='Print printed-formula vs general-pipeline table (needs --family).')

    spectrum = verbs.add_parser('spectrum', parents=[common], help='A12 singular-value signature.')
    _graph_source(spectrum)
    _family_options(spectrum)
    roots = spectrum.add_mutually_exclusive_group()
    roots.add_argument('--root', type=int, default=0, help='Root vertex.')
    roots.add_argument('--all-roots', action='store_true', help='Distinct signatures over every root.')

    dist = verbs.add_parser('distinguish', parents=[common], help='Compare two SRGs by signature.')
    dist.add_argument('first', help='graph6 file of the first graph.')
    dist.add_argument('second', help='graph6 file of the second graph.')
    dist.add_argument('--index', type=int, nargs=2, default=(0, 0), metavar=('I', 'J'),
                      help='Graphs to use from the two files.')

    scan = verbs.add_parser('scan', parents=[common], help='Signature classes of graph6 catalogs.')
    scan.add_argument('paths', nargs='+', help='graph6 catalog files.')

    sweep_parser = verbs.add_parser('sweep', parents=[common], help='Entanglement over a coupling grid.')
    _graph_source(sweep_parser)
    _family_options(sweep_parser)
    _coupling_options(sweep_parser)
    sweep_parser.add_argument('--g-min', type=float, default=None, help='Smallest coupling (default: 0.01).')
    sweep_parser.add_argument('--g-max', type=float, default=None, help='Largest coupling (default: 100).')
    sweep_parser.add_argument('--points', type=int, default=None, help='Grid points (default: 25).')
    return parser

# ------------------------------------------------------------------------------------------------
# Input helpers
# ------------------------------------------------------------------------------------------------

def _family_spec(args: argparse.Namespace) -> FamilySpec:
    return FamilySpec.from_arguments(args.family, m=args.m, parts=args.parts, part_size=args.part_size,
                                     q=args.q, nu=args.nu)

def _input_graph(args: argparse.Namespace) -> Tuple[Graph, Optional[FamilySpec]]:
    family = getattr(args, 'family', None)
    if family is not None and args.graph is not None:
        raise UsageError("give either a graph6 file or --family, not both")
    if family is not None:
        spec = _family_spec(args)
        return generate(spec), spec
    if args.graph is None:
        raise UsageError("a graph6 file or --family is required")
    return load_graph(args.graph, args.index), None

def _subset(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError as e:
        raise UsageError(f"--subset expects comma-separated vertex indices, got '{text}'") from e

def _coupling(args: argparse.Namespace, config: Optional[ModuleType], g: Optional[float] = None) -> CouplingConfig:
    defaults = CouplingConfig.from_config(config, g)
    return CouplingConfig(
        g=defaults.g,
        log_base=LOG_BASES[args.log_base] if args.log_base else defaults.log_base,
        convention=args.convention or defaults.convention,
    )

def _tolerance(args: argparse.Namespace, config: Optional[ModuleType]) -> float:
    return args.tol if args.tol is not None else config_value(config, 'TOLERANCES', 'signature_compare')

# ------------------------------------------------------------------------------------------------
# Output helpers
# ------------------------------------------------------------------------------------------------

def _text_table(out: TextIO, columns: Sequence[str], rows: Sequence[Dict[str, object]],
                config: Optional[ModuleType]) -> None:
    out.write("\t".join(columns) + "\n")
    for row in rows:
        cells = []
        for column in columns:
            value = row.get(column)
            cells.append("" if value is None else value if isinstance(value, str) else format_number(value, config))
        out.write("\t".join(cells) + "\n")

def _write_report(out: TextIO, report: EntanglementReport, fmt: str, config: Optional[ModuleType]) -> None:
    if fmt == 'json':
        out.write(dumps_json(report.to_dict(), config) + "\n")
    elif fmt == 'csv':
        write_sweep_csv(out, [report], config)
    else:
        out.write(f"partition {report.partition}  g={format_number(report.g, config)}  "
                  f"convention={report.convention.value}  log_base={report.log_base.value}\n")
        _text_table(out, ['mode', 'd', 'gamma', 'entropy'], [
            {'mode': index, 'd': mode.d, 'gamma': mode.gamma, 'entropy': mode.entropy}
            for index, mode in enumerate(report.modes)
        ], config)
        out.write(f"total_entropy {format_number(report.total_entropy, config)}\n")

# ------------------------------------------------------------------------------------------------
# Verbs
# ------------------------------------------------------------------------------------------------

def _cmd_gen(args, config, out) -> None:
    if args.family is None:
        raise UsageError("gen needs --family")
    spec = _family_spec(args)
    graph = generate(spec)
    if args.out:
        save_graphs(args.out, [graph])
    else:
        out.write(write_graph6(graph).decode('ascii') + "\n")

def _cmd_check(args, config, out) -> None:
    params = [srg_params(graph) for graph in load_graphs(args.graph)]
    fmt = args.format or 'text'
    if fmt == 'json':
        out.write(dumps_json([p.to_dict() for p in params], config) + "\n")
    elif fmt == 'csv':
        _text_table(out, ['n', 'kappa', 'lambda', 'mu'], [p.to_dict() for p in params], config)
    else:
        out.write("".join(f"{p}\n" for p in params))

def _cmd_stratify(args, config, out) -> None:
    graph, _ = _input_graph(args)
    params = srg_params(graph)
    strat = stratify(graph, args.root)
    diag = block_diagonalize(extract_blocks(graph, strat, params), config)
    fmt = args.format or 'text'
    if fmt == 'json':
        out.write(dumps_json({'stratification': stratification_to_dict(strat),
                              'blocks': block_diagonalization_to_dict(diag)}, config) + "\n")
        return
    rows = [{'lambda1': p.lambda1, 'lambda2': p.lambda2, 'lambda12': p.lambda12, 'multiplicity': p.multiplicity}
            for p in diag.pairs]
    if fmt == 'csv':
        _text_table(out, ['lambda1', 'lambda2', 'lambda12', 'multiplicity'], rows, config)
        return
    out.write(f"{params} root {strat.root}: strata sizes {', '.join(map(str, strat.valencies))}\n")
    _text_table(out, ['lambda1', 'lambda2', 'lambda12', 'multiplicity'], rows, config)
    out.write(f"singlets2 {' '.join(format_number(v, config) for v in diag.singlets2)}\n")
    out.write(f"singlets3 {' '.join(format_number(v, config) for v in diag.singlets3)}\n")

def _cmd_entropy(args, config, out) -> None:
    graph, spec = _input_graph(args)
    coupling = _coupling(args, config, args.g)
    fmt = args.format or 'text'
    if args.discrepancies:
        if spec is None:
            raise UsageError("--discrepancies needs --family")
        rows = family_closed_forms(spec, coupling.g, config)
        if fmt == 'json':
            out.write(dumps_json(rows, config) + "\n")
        elif fmt == 'csv':
            write_discrepancy_csv(out, rows, config)
        else:
            _text_table(out, ['equation', 'partition', 'printed_value', 'general_value', 'discrepancy',
                              'consistent', 'exceeds_unity'], rows, config)
        return
    subset = _subset(args.subset)
    partition = None if subset is not None else (args.partition or PARTITION_LABELS[0])
    report = entanglement_report(graph, coupling.g, partition, subset, args.root, coupling, config)
    _write_report(out, report, fmt, config)

def _cmd_spectrum(args, config, out) -> None:
    graph, _ = _input_graph(args)
    if args.all_roots:
        signatures = canonical_signature(graph, _tolerance(args, config), config)
    else:
        signatures = [a12_signature(graph, args.root, config=config)]
    fmt = args.format or 'text'
    if fmt == 'json':
        payload = [sig.to_dict() for sig in signatures]
        out.write(dumps_json(payload if args.all_roots else payload[0], config) + "\n")
    elif fmt == 'csv':
        write_signature_csv(out, signatures, config)
    else:
        for sig in signatures:
            entries = " ".join(f"{format_number(v, config)}:{m}" for v, m in sig.values)
            out.write(f"{sig.params} root {sig.root}: {entries}\n")

def _cmd_distinguish(args, config, out) -> None:
    first, second = load_graph(args.first, args.index[0]), load_graph(args.second, args.index[1])
    verdict = distinguish(first, second, _tolerance(args, config), config)
    fmt = args.format or 'text'
    if fmt == 'json':
        out.write(dumps_json(verdict.to_dict(), config) + "\n")
    elif fmt == 'csv':
        witness = verdict.witness or (None, None)
        _text_table(out, ['outcome', 'first', 'second'], [{
            'outcome': verdict.outcome.value,
            'first': None if witness[0] is None else f"{format_number(witness[0][0], config)}:{witness[0][1]}",
            'second': None if witness[1] is None else f"{format_number(witness[1][0], config)}:{witness[1][1]}",
        }], config)
    else:
        out.write(verdict.describe() + "\n")

def _cmd_scan(args, config, out) -> None:
    result = scan_files(args.paths, _tolerance(args, config), config)
    fmt = args.format or 'text'
    if fmt == 'json':
        out.write(dumps_json(result.report.to_dict(), config) + "\n")
    elif fmt == 'csv':
        write_scan_csv(out, result.report, result.labels, config)
    else:
        out.write(f"{result.report.params}: {len(result.labels)} graph(s), "
                  f"{len(result.report.classes)} class(es)\n")
        for index, signature_class in enumerate(result.report.classes):
            members = ", ".join(result.labels[m] for m in signature_class.members)
            head = " ".join(f"{format_number(v, config)}:{m}" for v, m in signature_class.signature[0].values)
            out.write(f"class {index} ({len(signature_class.members)}): {head} <- {members}\n")

def _cmd_sweep(args, config, out) -> None:
    graph, _ = _input_graph(args)
    coupling = _coupling(args, config)
    subset = _subset(args.subset)
    partition = None if subset is not None else (args.partition or PARTITION_LABELS[0])
    reports = sweep(graph, partition, args.g_min, args.g_max, args.points, subset, args.root, coupling, config)
    fmt = args.format or 'csv'
    if fmt == 'json':
        out.write(dumps_json([report.to_dict() for report in reports], config) + "\n")
    elif fmt == 'csv':
        write_sweep_csv(out, reports, config)
    else:
        _text_table(out, ['g', 'total_entropy'], [
            {'g': report.g, 'total_entropy': report.total_entropy} for report in reports
        ], config)

COMMANDS: Dict[str, Callable[[argparse.Namespace, Optional[ModuleType], TextIO], None]] = {
    'gen': _cmd_gen,
    'check': _cmd_check,
    'stratify': _cmd_stratify,
    'entropy': _cmd_entropy,
    'spectrum': _cmd_spectrum,
    'distinguish': _cmd_distinguish,
    'scan': _cmd_scan,
    'sweep': _cmd_sweep,
}

# ------------------------------------------------------------------------------------------------
# Main
# ------------------------------------------------------------------------------------------------

def execute(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
            err: Optional[TextIO] = None) -> int:
    """
    Run one CLI invocation.

    Returns:
        int: 0 on success, 1 on a domain error, 2 on a usage error.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.log_file:
        level = logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.INFO
        configure_logging(level=level, log_file=args.log_file)
    else:
        configure_console_only_logging(quiet=args.quiet, verbose=args.verbose)

    try:
        config = load_config_from_path(args.config) if args.config else None
        COMMANDS[args.verb](args, config, out)
    except UsageError as e:
        parser.print_usage(err)
        err.write(f"srgnet {args.verb}: error: {e}\n")
        return 2
    except SrgNetError as e:
        err.write(f"error: {e.code}: {e}\n")
        return 1
    except FileNotFoundError as e:
        err.write(f"error: FileNotFound: {e}\n")
        return 1
    except ImportError as e:
        err.write(f"error: ConfigError: {e}\n")
        return 1
    except ValueError as e:
        err.write(f"error: InvalidValue: {e}\n")
        return 1
    return 0

def main() -> None:
    """Console-script entry point."""
    sys.exit(execute())


if __name__ == "__main__":
    main()
