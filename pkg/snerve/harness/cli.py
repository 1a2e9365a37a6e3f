"""
Command-line front end.

Every subcommand loads its inputs into a ``Workspace``, runs one construction
or check, writes the produced documents and the certificate to the output
directory and prints the rendered certificate. Exit status 0 means every
check passed, 1 a mathematical failure, 2 malformed input.
"""
import argparse
import logging
import sys
from typing import List, Optional, Tuple

from snerve.harness.certificate import report_render
from snerve.harness.codec import certificate_to_document
from snerve.types.certificate import Certificate
from snerve.types.enum import ExitStatus, ReportFormat
from snerve.types.error import BaseCategoryError, CapError, FunctorialityError, LevelError, \
    MalformedSimplexError, NotLocallyKanError, NotQuasicategoryError, SchemaError, SimplicialIdentityError
from snerve.workspace import Artifacts, Workspace

logger = logging.getLogger(__name__)

CHECKS = ('gr-relnerve', 'cotimes-gr', 'fibers', 'opposites', 'opfibration', 'quasicat', 'composite')

# errors in what the user handed over, as opposed to properties that fail
INPUT_ERRORS = (SchemaError, CapError, LevelError, FunctorialityError, BaseCategoryError, MalformedSimplexError,
                OSError)
PROPERTY_ERRORS = (NotLocallyKanError, NotQuasicategoryError, SimplicialIdentityError)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--cap', type=int, default=Workspace.DEFAULT_CAP,
                        help='dimension cap of every complex (default: %(default)s)')
    parser.add_argument('--delta-max', type=int, default=Workspace.DEFAULT_DELTA_MAX,
                        help='bound M of the truncated Delta^op (default: %(default)s)')
    parser.add_argument('--out', default=Workspace.OUTPUT_PATH, help='output directory (default: %(default)s)')
    parser.add_argument('--format', choices=[f.value for f in ReportFormat], default=ReportFormat.text.value,
                        help='certificate rendering on stdout')
    parser.add_argument('--no-time', action='store_true', help='leave the wall-clock field out of the rendering')
    parser.add_argument('--verbose', action='store_true', help='log progress at DEBUG')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='snerve',
                                     description='Nerves of simplicial categories, Grothendieck constructions '
                                                 'and operadic nerves, with pass/fail certificates.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('nerve', help='ordinary nerve of a finite category')
    p.add_argument('--base', required=True, help='fixture name or fincat document')
    _common(p)

    p = sub.add_parser('coherent-nerve', help='homotopy coherent nerve of a simplicial category')
    p.add_argument('--scat', required=True, help='fixture name or scat/monoidal document')
    _common(p)

    p = sub.add_parser('relative-nerve', help='relative nerve of N o F over the base')
    p.add_argument('--base', required=True)
    p.add_argument('--diagram', required=True)
    _common(p)

    p = sub.add_parser('grothendieck', help='Grothendieck construction of a diagram')
    p.add_argument('--diagram', required=True)
    _common(p)

    p = sub.add_parser('operadic-nerve', help='operadic nerve of a strict monoidal simplicial category')
    p.add_argument('--monoidal', required=True)
    _common(p)

    p = sub.add_parser('check', help='certificate-producing comparison checks')
    p.add_argument('which', choices=CHECKS)
    p.add_argument('--diagram', help='for gr-relnerve, opfibration and quasicat')
    p.add_argument('--monoidal', help='for cotimes-gr, fibers, opposites, composite and quasicat')
    p.add_argument('--scat', help='for quasicat on a bare simplicial category')
    p.add_argument('--nmax', type=int, help='top simplex dimension for gr-relnerve and composite')
    p.add_argument('--level', type=int, default=2, help='fiber level for fibers (default: %(default)s)')
    _common(p)

    p = sub.add_parser('corpus', help='list the fixtures and run their validators')
    _common(p)
    return parser


def _need(parser: argparse.ArgumentParser, args: argparse.Namespace, *names: str) -> str:
    for name in names:
        value = getattr(args, name, None)
        if value:
            return value
    parser.error('check {} needs {}'.format(args.which, ' or '.join('--' + n for n in names)))


def _dispatch(parser: argparse.ArgumentParser, ws: Workspace,
              args: argparse.Namespace) -> Tuple[Certificate, Artifacts]:
    if args.command == 'nerve':
        return ws.nerve(args.base)
    if args.command == 'coherent-nerve':
        return ws.coherent_nerve(args.scat)
    if args.command == 'relative-nerve':
        return ws.relative_nerve(args.base, args.diagram)
    if args.command == 'grothendieck':
        return ws.grothendieck(args.diagram)
    if args.command == 'operadic-nerve':
        return ws.operadic_nerve(args.monoidal)
    if args.command == 'corpus':
        return ws.check_corpus(), {}
    which = args.which
    if which == 'gr-relnerve':
        return ws.check_gr_relnerve(_need(parser, args, 'diagram'), args.nmax), {}
    if which == 'cotimes-gr':
        return ws.check_cotimes_gr(_need(parser, args, 'monoidal')), {}
    if which == 'fibers':
        return ws.check_fibers(_need(parser, args, 'monoidal'), args.level), {}
    if which == 'opposites':
        return ws.check_opposites(_need(parser, args, 'monoidal')), {}
    if which == 'composite':
        return ws.check_composite(_need(parser, args, 'monoidal'), args.nmax), {}
    if which == 'opfibration':
        return ws.check_opfibration(_need(parser, args, 'diagram')), {}
    return ws.check_quasicat(_need(parser, args, 'diagram', 'monoidal', 'scat')), {}


def _command_line(args: argparse.Namespace) -> str:
    return args.command + (' ' + args.which if args.command == 'check' else '')


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs one subcommand.

    Args:
        argv (list, optional): Arguments without the program name; defaults
            to ``sys.argv[1:]``.

    Returns:
        int: The exit status.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(asctime)s %(name)s %(levelname)s: %(message)s')
    try:
        ws = Workspace(cap=args.cap, delta_max=args.delta_max, output_dir=args.out)
        cert, artifacts = _dispatch(parser, ws, args)
    except INPUT_ERRORS as exc:
        logger.debug('malformed input', exc_info=True)
        sys.stderr.write('snerve: error: {}\n'.format(exc))
        return ExitStatus.MALFORMED_INPUT.value
    except PROPERTY_ERRORS as exc:
        cert = Certificate(command=_command_line(args))
        cert.record(type(exc).__name__, False, str(exc))
        cert.finish()
        artifacts = {}
    slug = _command_line(args).replace(' ', '-')
    try:
        for name, document in artifacts.items():
            ws.write(name, document)
        ws.write(slug + '.certificate', certificate_to_document(cert))
    except OSError as exc:
        sys.stderr.write('snerve: cannot write to {}: {}\n'.format(args.out, exc))
        return ExitStatus.MALFORMED_INPUT.value
    sys.stdout.write(report_render(cert, ReportFormat(args.format), with_time=not args.no_time))
    return (ExitStatus.PASS if cert.passed else ExitStatus.PROPERTY_FAILURE).value


if __name__ == '__main__':
    sys.exit(main())
