"""
Command-line front end.

    python -m listsource mk-code --q 5 --n 4 --k 2 --out-h h.lsc --out-d d.lsc
    python -m listsource analyze --q 5 --n 4 --k 2 --source uniform --epsilon 0

Exit codes: 0 success, 1 usage, 2 data or format error, 3 capacity exceeded.
"""

import argparse
import logging
import sys
from fractions import Fraction

from listsource.config import Config, configure_logging
from listsource.container import (
    MAGIC, Container, PayloadKind, bundle_from_containers, decode_symbols, encode_symbols,
    matrix_container, phase2_container, plaintext_container, syndrome_container,
)
from listsource.errors import (
    CapacityError, ConfigError, ContainerFormatError, DataError, DimensionMismatch, UsageError,
)
from listsource.models.code import CodeSpec
from listsource.models.field import FieldSpec
from listsource.models.source import SourceModel
from listsource.services.ciphers import PrgStreamCipher, make_cipher
from listsource.services.code_service import CodeService
from listsource.services.list_source_service import ListSourceService, PrefixEncoder
from listsource.services.report_store import ReportStore
from listsource.services.secrecy_analyzer import SecrecyAnalyzer
from listsource.services.sweep_runner import SweepRunner
from listsource.services.two_phase_service import TwoPhaseService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_CAPACITY = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _symbol_list(text):
    try:
        return [int(v) for v in text.split(',') if v.strip() != '']
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _int_any_base(text):
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a fraction such as 1/2, got {text!r}")


# Reading and writing

def _read_bytes(path):
    with open(path, 'rb') as handle:
        return handle.read()


def _write_bytes(path, data):
    with open(path, 'wb') as handle:
        handle.write(data)


def _read_container(path, kinds):
    container = Container.parse(_read_bytes(path))
    if container.payload_kind not in kinds:
        raise ContainerFormatError(
            f"payload kind {container.payload_kind.name.lower()} is not accepted here", 18)
    return container


def _check_matches_code(container, code):
    if container.field != code.field or container.n != code.n or container.k != code.k:
        raise DimensionMismatch(
            f"container is for q={container.field.order} n={container.n} k={container.k}, "
            f"code is q={code.q} n={code.n} k={code.k}")


def _read_plaintext(path, field):
    """A plaintext container, or raw symbols (one byte each, two LE bytes when q > 256)."""
    data = _read_bytes(path)
    if data[:len(MAGIC)] == MAGIC:
        container = Container.parse(data)
        if container.payload_kind != PayloadKind.PLAINTEXT:
            raise ContainerFormatError("expected a plaintext payload", 18)
        if container.field != field:
            raise DimensionMismatch("plaintext container is over a different field")
        return list(container.symbols)
    return list(decode_symbols(field, data))


# Code selection

def _add_code_arguments(parser, need_k=True):
    parser.add_argument('--code', help='H matrix container')
    parser.add_argument('--q', type=int)
    parser.add_argument('--n', type=int)
    if need_k:
        parser.add_argument('--k', type=int)
    parser.add_argument('--poly', type=_int_any_base, help='reduction polynomial for q = 256')
    parser.add_argument('--points', type=_symbol_list, help='distinct evaluation points')


def _field_from_args(args):
    if args.q is None:
        raise UsageError("--q is required")
    return FieldSpec.for_order(args.q, args.poly)


def _load_code(args, code_service):
    if args.code:
        container = _read_container(args.code, (PayloadKind.MATRIX,))
        if container.row_count != container.n - container.k:
            raise DimensionMismatch(
                f"{container.row_count}-row matrix is not a parity check for n={container.n}, k={container.k}")
        return CodeSpec.from_parity_check(container.to_matrix())
    if args.q is None or args.n is None or args.k is None:
        raise UsageError("give --code or all of --q, --n and --k")
    field = _field_from_args(args)
    return code_service.vandermonde_parity_check(field, args.n, args.k, args.points)


def _load_source(name, field):
    if name == 'uniform':
        return SourceModel.uniform(field)
    return SourceModel.from_file(field, name)


# Commands

def cmd_mk_code(args, config, out):
    code_service = CodeService(config.mds_subset_cap)
    code = _load_code(args, code_service)
    d = TwoPhaseService().derive_complement(code)
    _write_bytes(args.out_h, matrix_container(code.h, code.n, code.k).serialize())
    _write_bytes(args.out_d, matrix_container(d, code.n, code.k).serialize())
    out.write(f"code = {code.code_id}\n")
    if args.check_mds:
        out.write(f"mds = {'true' if code_service.is_mds(code) else 'false'}\n")
    return EXIT_OK


def cmd_encode(args, config, out):
    code = _load_code(args, CodeService(config.mds_subset_cap))
    x = _read_plaintext(args.input, code.field)
    syndrome = ListSourceService(config.list_cap).encode(code, x)
    _write_bytes(args.out, syndrome_container(syndrome).serialize())
    out.write(f"syndrome = {','.join(str(s) for s in syndrome.symbols)}\n")
    return EXIT_OK


def cmd_decode_list(args, config, out):
    code = _load_code(args, CodeService(config.mds_subset_cap))
    container = _read_container(args.syndrome, (PayloadKind.SYNDROME, PayloadKind.PHASE1))
    _check_matches_code(container, code)
    service = ListSourceService(config.list_cap)
    decoded = service.decode_list(code, container.to_syndrome(code))
    members = decoded.take(args.limit) if args.limit is not None else list(decoded)
    for member in members:
        out.write(','.join(str(v) for v in member) + '\n')
    logger.info("listed %d of %d coset members", len(members), len(decoded))
    return EXIT_OK


def _cipher_from_args(args, field):
    if args.cipher == 'otp':
        return make_cipher(field, 'otp', key=args.key)
    return make_cipher(field, 'prg', seed=args.seed)


def cmd_encrypt(args, config, out):
    code = _load_code(args, CodeService(config.mds_subset_cap))
    x = _read_plaintext(args.input, code.field)
    service = TwoPhaseService()
    d = service.derive_complement(code)
    bundle = service.two_phase_encrypt(x, code, d, _cipher_from_args(args, code.field),
                                       pre_randomize_seed=args.pre_randomize)
    _write_bytes(args.out_phase1, syndrome_container(bundle.phase1, PayloadKind.PHASE1).serialize())
    _write_bytes(args.out_phase2, phase2_container(bundle).serialize())
    return EXIT_OK


def cmd_decrypt(args, config, out):
    code = _load_code(args, CodeService(config.mds_subset_cap))
    phase1 = _read_container(args.phase1, (PayloadKind.PHASE1,))
    phase2 = _read_container(args.phase2, (PayloadKind.PHASE2,))
    _check_matches_code(phase1, code)
    _check_matches_code(phase2, code)
    bundle = bundle_from_containers(code, phase1, phase2, args.cipher)
    if args.cipher == 'prg' and args.seed is None:
        if bundle.seed_envelope is None:
            raise UsageError("--seed is required when phase II carries no seed")
        cipher = PrgStreamCipher.from_envelope(code.field, bundle.seed_envelope)
    else:
        cipher = _cipher_from_args(args, code.field)
    service = TwoPhaseService()
    x = service.two_phase_decrypt(bundle, code, service.derive_complement(code), cipher)
    if args.out_format == 'container':
        data = plaintext_container(code.field, code.n, code.k, x).serialize()
    else:
        data = encode_symbols(code.field, x)
    _write_bytes(args.out, data)
    return EXIT_OK


def cmd_analyze(args, config, out):
    analyzer = SecrecyAnalyzer(config.enumeration_cap)
    if args.scheme == 'trivial':
        if args.n is None or args.list_exponent is None:
            raise UsageError("the trivial scheme needs --q, --n and --list-exponent")
        field = _field_from_args(args)
        target = PrefixEncoder(field, args.n, args.list_exponent)
    else:
        target = _load_code(args, CodeService(config.mds_subset_cap))
        field = target.field
    source = _load_source(args.source, field)
    report = analyzer.secrecy_bounds_report(target, source, args.epsilon)
    out.write(report.to_text())
    if args.db is not None:
        store = ReportStore(args.db or config.database_url)
        try:
            store.create_tables()
            store.save_report(report, run_label='analyze')
        finally:
            store.close()
    return EXIT_OK


def cmd_tradeoff(args, config, out):
    if args.n is None:
        raise UsageError("--n is required")
    field = _field_from_args(args)
    frame = ListSourceService(config.list_cap).tradeoff_table(field, args.n)
    if args.csv:
        frame.to_csv(args.csv, index=False)
    out.write(frame.to_string(index=False) + '\n')
    return EXIT_OK


def cmd_sweep(args, config, out):
    store = None
    if args.db is not None:
        store = ReportStore(args.db or config.database_url)
        store.create_tables()
    try:
        runner = SweepRunner(SecrecyAnalyzer(config.enumeration_cap),
                             CodeService(config.mds_subset_cap), store)
        reports = runner.run(args.count, args.seed, run_label=f"sweep-{args.seed}")
    finally:
        if store is not None:
            store.close()
    frame = runner.summarize(reports)
    if args.csv:
        frame.to_csv(args.csv, index=False)
    violations = sum(1 for r in reports if not r.bounds_hold)
    out.write(f"reports = {len(reports)}\n")
    out.write(f"violations = {violations}\n")
    out.write(f"rate_matches = {sum(1 for r in reports if r.rate_matches_bound)}\n")
    return EXIT_OK


def build_parser():
    parser = _Parser(prog='listsource', description='List-source codes and two-phase encryption')
    parser.add_argument('--verbose', action='store_true', help='debug logging on stderr')
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)
    commands.required = True

    p = commands.add_parser('mk-code', help='write H and D containers')
    _add_code_arguments(p)
    p.add_argument('--out-h', required=True)
    p.add_argument('--out-d', required=True)
    p.add_argument('--check-mds', action='store_true')
    p.set_defaults(handler=cmd_mk_code)

    p = commands.add_parser('encode', help='syndrome of a plaintext')
    _add_code_arguments(p)
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--out', required=True)
    p.set_defaults(handler=cmd_encode)

    p = commands.add_parser('decode-list', help='members of the coset named by a syndrome')
    _add_code_arguments(p)
    p.add_argument('--syndrome', required=True)
    p.add_argument('--limit', type=int)
    p.set_defaults(handler=cmd_decode_list)

    for name, handler in (('encrypt', cmd_encrypt), ('decrypt', cmd_decrypt)):
        p = commands.add_parser(name, help=f'two-phase {name}ion')
        _add_code_arguments(p)
        p.add_argument('--cipher', choices=('otp', 'prg'), required=True)
        p.add_argument('--key', type=_symbol_list)
        p.add_argument('--seed', type=_int_any_base)
        p.set_defaults(handler=handler)
        if name == 'encrypt':
            p.add_argument('--in', dest='input', required=True)
            p.add_argument('--out-phase1', required=True)
            p.add_argument('--out-phase2', required=True)
            p.add_argument('--pre-randomize', type=_int_any_base, metavar='SEED',
                           help='add a splitmix64 keystream to the plaintext first')
        else:
            p.add_argument('--phase1', required=True)
            p.add_argument('--phase2', required=True)
            p.add_argument('--out', required=True)
            p.add_argument('--out-format', choices=('raw', 'container'), default='raw')

    p = commands.add_parser('analyze', help='exhaustive symbol secrecy report')
    _add_code_arguments(p)
    p.add_argument('--scheme', choices=('syndrome', 'trivial'), default='syndrome')
    p.add_argument('--list-exponent', type=_fraction)
    p.add_argument('--source', default='uniform', help="'uniform' or a pmf file")
    p.add_argument('--epsilon', type=float, default=0.0)
    p.add_argument('--db', nargs='?', const='', help='store the report (default LSC_DATABASE_URL)')
    p.set_defaults(handler=cmd_analyze)

    p = commands.add_parser('tradeoff', help='list size against phase sizes for every k')
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--poly', type=_int_any_base)
    p.add_argument('--csv')
    p.set_defaults(handler=cmd_tradeoff)

    p = commands.add_parser('sweep', help='bound checks over random codes')
    p.add_argument('--count', type=int, default=50)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--db', nargs='?', const='', help='store every report (default LSC_DATABASE_URL)')
    p.add_argument('--csv')
    p.set_defaults(handler=cmd_sweep)

    return parser


def run_command(argv=None, out=None, err=None):
    """Run one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        config = Config.from_env()
        configure_logging('DEBUG' if args.verbose else config.log_level)
        return args.handler(args, config, out)
    except (UsageError, ConfigError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except (DataError, OSError) as e:
        err.write(f"error: {e}\n")
        return EXIT_DATA
    except CapacityError as e:
        err.write(f"error: {e}\n")
        return EXIT_CAPACITY


def main():
    sys.exit(run_command())


if __name__ == '__main__':
    main()
