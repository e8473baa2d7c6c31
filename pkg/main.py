#!/usr/bin/env python3
"""
khbranch command line.

Exit codes: 0 success, 1 computation failure or failed claim, 2 bad usage.
"""
import argparse
import json
import logging
import os
import sys

from config import use_config, override, get_setting
from models.errors import KnotError, PDParseError, DiagramValidationError, GeneratorError, SlopeError
from diagrams import parse_pd, render
from generators.families import generate_family, FAMILY_ARGUMENTS
from khovanov import kh_ranks
from khovanov.ranks import ENGINES
from invariants import determinant, jones_polynomial, jones_determinant
from surgery import surgery_table
from verify import reproduce_paper, claims_exit_code, les_bound_check, growth_probe
from utils import formatting
from utils.validators import validate_odd_q, validate_tier, validate_positive_int

logger = logging.getLogger(__name__)

USAGE_ERRORS = (PDParseError, DiagramValidationError, GeneratorError, SlopeError)


class UsageError(Exception):
    """Bad arguments discovered after argparse"""


def _read_pd(source, stdin):
    if source == '-':
        text = stdin.read()
    else:
        try:
            with open(source, 'r', encoding='utf-8') as f:
                text = f.read()
        except OSError as e:
            raise UsageError(f'Cannot read {source}: {e}')
    return parse_pd(text, name=None if source == '-' else source)


def _check(result):
    is_valid, message = result
    if not is_valid:
        raise UsageError(message)


def cmd_gen(args, out, stdin):
    diagram = generate_family(args.family, *args.params)
    if args.json:
        out.write(json.dumps(formatting.diagram_summary(diagram), indent=2) + '\n')
    else:
        out.write(render(diagram) + '\n')
    return 0


def cmd_kh(args, out, stdin):
    diagram = _read_pd(args.source, stdin)
    ranks = kh_ranks(diagram, reduced=args.reduced, engine=args.engine)
    out.write((formatting.ranks_json(ranks) if args.json else formatting.ranks_text(ranks)) + '\n')
    return 0


def cmd_det(args, out, stdin):
    diagram = _read_pd(args.source, stdin)
    out.write(f'{determinant(diagram)}\n')
    return 0


def cmd_jones(args, out, stdin):
    diagram = _read_pd(args.source, stdin)
    poly = jones_polynomial(diagram)
    if args.json:
        out.write(json.dumps({
            'coefficients': poly.coefficients(),
            'determinant': jones_determinant(diagram),
        }, indent=2) + '\n')
    else:
        out.write(poly.format('q') + '\n')
    return 0


def cmd_surgery_table(args, out, stdin):
    _check(validate_odd_q(args.q))
    _check(validate_positive_int(args.n_max, 'n-max'))
    rows = surgery_table(args.q, args.n_max)
    out.write((formatting.surgery_json(rows) if args.json else formatting.surgery_csv(rows)) + '\n')
    return 0


def cmd_verify_paper(args, out, stdin):
    tier = args.tier or get_setting('VERIFY_DEFAULT_TIER')
    _check(validate_tier(tier))
    claims = reproduce_paper(int(tier))
    out.write(formatting.claims_text(claims) + '\n')
    if args.json:
        document = formatting.claims_json(claims)
        if args.json == '-':
            out.write(document + '\n')
        else:
            with open(args.json, 'w', encoding='utf-8') as f:
                f.write(document + '\n')
            logger.info(f'Claims written to {args.json}')
    return claims_exit_code(claims, strict=args.strict)


def cmd_les_check(args, out, stdin):
    _check(validate_positive_int(args.n_max, 'n-max'))
    report = les_bound_check(args.n_max)
    out.write((json.dumps(report.to_dict(), indent=2) if args.json else formatting.les_text(report)) + '\n')
    return 0 if report.passed else 1


def cmd_growth(args, out, stdin):
    report = growth_probe(args.q, p=args.p)
    out.write((json.dumps(report.to_dict(), indent=2) if args.json else formatting.growth_text(report)) + '\n')
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog='khbranch', description='Khovanov ranks of branch sets')
    parser.add_argument('--cache-dir', help='Result cache directory')
    parser.add_argument('--no-cache', action='store_true', help='Neither read nor write the cache')
    parser.add_argument('--max-generators', type=int, help='Generator ceiling for scanning')
    parser.add_argument('--threads', type=int, help='Threads for per-grading rank computations')
    parser.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING or ERROR')
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('gen', help='Emit PD text of a diagram family')
    gen.add_argument('family', choices=sorted(FAMILY_ARGUMENTS))
    gen.add_argument('params', nargs='*')
    gen.add_argument('--json', action='store_true')
    gen.set_defaults(handler=cmd_gen)

    kh = sub.add_parser('kh', help='Khovanov rank table of a PD diagram')
    kh.add_argument('source', nargs='?', default='-', help='PD file, or - for standard input')
    flavor = kh.add_mutually_exclusive_group()
    flavor.add_argument('--reduced', dest='reduced', action='store_true', default=True)
    flavor.add_argument('--unreduced', dest='reduced', action='store_false')
    kh.add_argument('--engine', choices=ENGINES, default='auto')
    kh.add_argument('--json', action='store_true')
    kh.set_defaults(handler=cmd_kh)

    det = sub.add_parser('det', help='Determinant from the Goeritz matrix')
    det.add_argument('source', nargs='?', default='-')
    det.set_defaults(handler=cmd_det)

    jones = sub.add_parser('jones', help='Jones polynomial in q with t = q^2')
    jones.add_argument('source', nargs='?', default='-')
    jones.add_argument('--json', action='store_true')
    jones.set_defaults(handler=cmd_jones)

    table = sub.add_parser('surgery-table', help='Branch sets of +-1/n surgery on T(2,q)')
    table.add_argument('--q', type=int, default=5)
    table.add_argument('--n-max', type=int, default=2)
    table.add_argument('--json', action='store_true', help='JSON instead of CSV')
    table.set_defaults(handler=cmd_surgery_table)

    verify = sub.add_parser('verify-paper', help='Reproduce the rank claims up to a tier')
    verify.add_argument('--tier', type=int)
    verify.add_argument('--json', nargs='?', const='-', help='Write claims as JSON to a file, or stdout')
    verify.add_argument('--strict', action='store_true', help='Skipped claims fail the run')
    verify.set_defaults(handler=cmd_verify_paper)

    les = sub.add_parser('les-check', help='Inductive rank bound for tau(+-1/n)')
    les.add_argument('--n-max', type=int, default=2)
    les.add_argument('--json', action='store_true')
    les.set_defaults(handler=cmd_les_check)

    growth = sub.add_parser('growth', help='Ranks of T(p,q) over a list of q')
    growth.add_argument('--q', type=int, nargs='+', default=[9, 11])
    growth.add_argument('--p', type=int, default=5)
    growth.add_argument('--json', action='store_true')
    growth.set_defaults(handler=cmd_growth)
    return parser


def run(argv=None, out=None, stdin=None):
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    use_config(os.environ.get('KH_ENV', 'default'))
    logging.basicConfig(
        level=(args.log_level or get_setting('LOG_LEVEL')).upper(),
        format='%(asctime)s [%(levelname)s] %(name)s: %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
    )
    override(
        KH_CACHE_DIR=args.cache_dir,
        KH_CACHE_ENABLED=False if args.no_cache else (True if args.cache_dir else None),
        KH_MAX_GENERATORS=args.max_generators,
        KH_THREADS=args.threads,
    )

    try:
        return args.handler(args, out, stdin)
    except (UsageError, *USAGE_ERRORS) as e:
        sys.stderr.write(f'error: {e}\n')
        return 2
    except KnotError as e:
        logger.error(f'{args.command} failed: {e}')
        return 1


if __name__ == '__main__':
    sys.exit(run())
