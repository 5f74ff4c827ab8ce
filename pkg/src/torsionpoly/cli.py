"""Command-line interface: ``torsionpoly compute | reps | verify``.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input,
3 an internal mathematical invariant was violated.
"""

import argparse
import json
import math
import os
import sys

import mpmath

from .errors import InternalMathError, InvalidInput
from .fixtures import KNOWN_MISPRINTS, PRINTED, check_fixture
from .oracle import collect_roots, compare, locate_roots, reconstruct
from .torsion import (DEFAULT_PRECISION, degree_formula, enumerate_reps, grid,
                      inverse_torsion_value, make_descriptor, normalization_value,
                      sigma, verify_three_term)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

SUITES = ('normalization', 'degree', 'relation', 'oracle', 'roots', 'fixtures')


def default_precision():
    value = os.environ.get('TORSIONPOLY_PRECISION')
    if not value:
        return DEFAULT_PRECISION
    try:
        bits = int(value)
    except ValueError:
        raise InvalidInput(f'TORSIONPOLY_PRECISION must be an integer, got {value!r}')
    if bits < 53:
        raise InvalidInput('TORSIONPOLY_PRECISION must be at least 53')
    return bits


def format_text(poly, var='t'):
    return poly.format(var)


def format_latex(poly, var='t'):
    """Descending powers, no spaces, braces around exponents above 9."""
    out = []
    for k in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[k]
        if not c:
            continue
        sign = '-' if c < 0 else ('+' if out else '')
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else (f'{var}^{{{k}}}' if k > 9 else f'{var}^{k}')
            body = mono if mag == 1 else f'{mag}{mono}'
        out.append(sign + body)
    return ''.join(out) or '0'


def _digits(precision):
    return max(15, int(precision * math.log10(2)))


def class_rows(d, precision, include_all=False):
    rows = []
    for r in enumerate_reps(d):
        if not (r.acyclic or include_all):
            continue
        inv = (mpmath.nstr(inverse_torsion_value(d, r, precision), _digits(precision))
               if r.acyclic else None)
        rows.append({'a': r.a, 'b': r.b, 'k': r.k, 'trace_x': r.trace_x,
                     'trace_y': r.trace_y, 'trace_m': r.trace_m,
                     'acyclic': r.acyclic, 'inv_torsion': inv})
    return rows


def output_record(tp, scaled=False, classes=None):
    """The JSON-ready record of a torsion polynomial, in canonical field order."""
    d = tp.descriptor
    rec = {
        'p': d.p, 'q': d.q, 'n': d.n, 'N': d.N,
        'degree': tp.degree,
        'normalization': normalization_value(d),
        'sign_corrected': tp.sign_corrected,
        'coefficients': [str(c) for c in tp.sigma.coeffs],
    }
    if scaled:
        rec['scaled_coefficients'] = [str(c) for c in tp.scaled(4).coeffs]
    if classes is not None:
        rec['acyclic_classes'] = [
            {k: row[k] for k in ('a', 'b', 'k', 'trace_x', 'trace_y', 'trace_m',
                                 'inv_torsion')}
            for row in classes if row['acyclic']]
    return rec


def dump_record(rec, compact=False):
    if compact:
        return json.dumps(rec, separators=(',', ':'))
    return json.dumps(rec, indent=2)


def cmd_compute(args):
    d = make_descriptor(args.p, args.q, args.n)
    tp = sigma(d)
    classes = class_rows(d, args.precision) if args.classes and d.n else (
        [] if args.classes else None)
    rec = output_record(tp, scaled=args.scaled, classes=classes)
    poly = tp.scaled(4) if args.scaled else tp.sigma
    if args.json:
        print(dump_record(rec))
    elif args.latex:
        print(format_latex(poly))
    else:
        print(format_text(poly))
    if args.cache:
        with open(args.cache, 'a', encoding='utf-8') as fh:
            fh.write(dump_record(rec, compact=True) + '\n')
    return EXIT_OK


def cmd_reps(args):
    d = make_descriptor(args.p, args.q, args.n)
    if d.n == 0:
        rows = []
    else:
        rows = class_rows(d, args.precision, include_all=args.all)
    if args.json:
        print(json.dumps({'p': d.p, 'q': d.q, 'n': d.n, 'N': d.N, 'classes': rows},
                         indent=2))
        return EXIT_OK
    if d.n == 0:
        print('S^3: no irreducible representations (0 classes)')
        return EXIT_OK
    print(f'# Sigma({d.p},{d.q},{d.N})  {len(rows)} classes')
    print(f'{"a":>3} {"b":>3} {"k":>5} {"tr x":>10} {"tr y":>10} {"tr m":>10} '
          f'{"acyclic":>7}  1/tau')
    for r in rows:
        inv = r['inv_torsion'] if r['acyclic'] else '-'
        print(f'{r["a"]:>3} {r["b"]:>3} {r["k"]:>5} {r["trace_x"]:>10.6f} '
              f'{r["trace_y"]:>10.6f} {r["trace_m"]:>10.6f} {str(r["acyclic"]):>7}  {inv}')
    return EXIT_OK


def _parse_grid(text):
    try:
        pmax, qmax, nmax = (int(x) for x in text.split(','))
    except ValueError:
        raise InvalidInput(f'--grid expects "pmax,qmax,nmax", got {text!r}')
    if pmax < 2 or qmax < 2 or nmax < 0:
        raise InvalidInput('--grid needs pmax, qmax >= 2 and nmax >= 0')
    return pmax, qmax, nmax


def _cells(args):
    if args.grid:
        if args.p is not None or args.q is not None:
            raise InvalidInput('use either --grid or --p/--q, not both')
        return grid(*_parse_grid(args.grid))
    if args.p is None and args.q is None:
        return grid(7, 7, 2)
    if args.p is None or args.q is None:
        raise InvalidInput('--p and --q must be given together')
    if args.n is not None:
        return [make_descriptor(args.p, args.q, args.n)]
    make_descriptor(args.p, args.q, 1)
    return [make_descriptor(args.p, args.q, n) for n in (-2, -1, 1, 2)]


def _label(d):
    return f'({d.p},{d.q},{d.n})'


def run_suite(name, cells, precision, emit):
    """Run one suite; ``emit(passed, text)`` receives one line per check."""
    ok = True

    def check(passed, text):
        nonlocal ok
        ok &= bool(passed)
        emit(passed, text)

    if name == 'fixtures':
        for key in PRINTED:
            r = check_fixture(key, precision)
            notes = ''.join(f'; t^{j} printed {tok!r} read as {val}'
                            for j, tok, val, _ in r.misprints)
            check(r.passed, f'fixtures {key}: 4^j-scaled match, oracle err '
                            f'{r.oracle_error:.1e}{notes}')
        return ok
    for d in cells:
        if name == 'relation':
            rep = verify_three_term(d)
            bad = [(c.a, c.b, c.first_mismatch) for c in rep.checks if not c.passed]
            check(rep.passed, f'relation {_label(d)} step {rep.step}: '
                              f'{len(rep.checks)} pairs' + (f' failures {bad}' if bad else ''))
            continue
        tp = sigma(d)
        if name == 'normalization':
            want = normalization_value(d)
            note = ' (sign corrected)' if tp.sign_corrected else ''
            check(tp.sigma[0] == want, f'normalization {_label(d)}: sigma(0)={tp.sigma[0]} '
                                       f'expected {want}{note}')
        elif name == 'degree':
            count = sum(r.acyclic for r in enumerate_reps(d)) if d.n else 0
            want = degree_formula(d)
            check(tp.degree == want == count,
                  f'degree {_label(d)}: deg={tp.degree} formula={want} classes={count}')
        elif name == 'oracle':
            approx = reconstruct(collect_roots(d, precision), tp.leading)
            rep = compare(tp.sigma, approx, 1e-9)
            check(rep.passed, f'oracle {_label(d)}: max rel err {rep.max_error:.1e}')
        elif name == 'roots':
            loc = locate_roots(tp.sigma, collect_roots(d, precision).roots, 1e-7)
            check(loc.passed, f'roots {_label(d)}: {len(loc.located)} of {tp.degree} '
                              f'roots bracketed within 1e-7')
    return ok


def cmd_verify(args):
    suites = SUITES if args.suite == 'all' else (args.suite,)
    cells = _cells(args) if any(s != 'fixtures' for s in suites) else []

    def emit(passed, text):
        print(('PASS ' if passed else 'FAIL ') + text)

    results = {s: run_suite(s, cells, args.precision, emit) for s in suites}
    failed = [s for s, ok in results.items() if not ok]
    print(f'{len(suites) - len(failed)}/{len(suites)} suites passed'
          + (f'; failed: {", ".join(failed)}' if failed else ''))
    return EXIT_FAIL if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog='torsionpoly',
        description='Torsion polynomials of 1/n-surgeries on (p,q)-torus knots')
    sub = parser.add_subparsers(dest='command', required=True)

    def pqn(p, n_required=True):
        p.add_argument('--p', type=int, required=n_required)
        p.add_argument('--q', type=int, required=n_required)
        p.add_argument('--n', type=int, required=n_required)
        p.add_argument('--precision', type=int, default=None, metavar='BITS')

    c = sub.add_parser('compute', help='print sigma_(p,q,n)(t)')
    pqn(c)
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument('--json', action='store_true')
    fmt.add_argument('--latex', action='store_true')
    c.add_argument('--scaled', action='store_true',
                   help='emit sigma(4t), the normalization used in published tables')
    c.add_argument('--classes', action='store_true',
                   help='include acyclic classes in JSON output')
    c.add_argument('--cache', metavar='FILE', help='append the record as NDJSON')
    c.set_defaults(func=cmd_compute)

    r = sub.add_parser('reps', help='list representation classes')
    pqn(r)
    r.add_argument('--all', action='store_true', help='include non-acyclic classes')
    r.add_argument('--json', action='store_true')
    r.set_defaults(func=cmd_reps)

    v = sub.add_parser('verify', help='run verification suites')
    pqn(v, n_required=False)
    v.add_argument('--suite', choices=SUITES + ('all',), default='all')
    v.add_argument('--grid', metavar='PMAX,QMAX,NMAX')
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.precision is None:
            args.precision = default_precision()
        elif args.precision < 53:
            raise InvalidInput('--precision must be at least 53 bits')
        return args.func(args)
    except InvalidInput as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_INPUT
    except InternalMathError as exc:
        print(f'internal error: {exc}', file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == '__main__':
    sys.exit(main())
