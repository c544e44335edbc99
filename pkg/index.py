import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

import pandas as pd

import cartan_type as ct
import chevalley as chev
import essentials as ess
import orbits
import tasks
from tasks import pipeline

"""
index.py is the command-line entry point of the workbench. It parses the global flags, resolves the run settings and
dispatches to one of four commands:

construct: builds an algebra (Chevalley, classical, Cartan type or exotic) and prints its dimension, centre and grading.
orbit: compares dim g_e of a catalogued orbit with its table value and optionally analyses the orbit.
verify: runs one or all registered verification tasks (see TASKS.md) and reports every check.
filtration: builds the Weisfeiler filtration of an analysed orbit and prints the shape of its graded algebra.

Exit codes: 0 when everything matches, 1 on a mismatch, 2 on bad input or a ModLieError.
"""

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

CLASSICAL = ('sl', 'psl')
COLUMNS = ['name', 'expected', 'got', 'pass', 'anchor']


class UsageError(ess.ModLieError):
    pass


def _exotic_n(text):
    parts = [int(t) for t in str(text).split(',') if t.strip()]
    return parts[0] if len(parts) == 1 else tuple(parts)


def build_algebra(args):
    """The algebra described by the `construct` flags."""
    if args.type:
        if args.type in CLASSICAL:
            if args.rank is None:
                raise UsageError(f'--type {args.type} needs --rank')
            return chev.classical_algebra(args.type, args.rank, args.p)
        return chev.chevalley_algebra(args.type, args.p)
    family = args.family
    if family in ct.EXOTIC_PRIMES:
        return ct.exotic_algebra(family, _exotic_n(args.n or '1'), args.p)
    if family == 'HS':
        if args.m is None:
            raise UsageError('--family HS needs --m')
        return ct.hamiltonian_special_subalgebra(args.m)
    if args.m is None:
        raise UsageError(f'--family {family} needs --m')
    return ct.cartan_algebra(family, args.m, _exotic_n(args.n or '1'), args.p)


def algebra_summary(g):
    out = {'name': g.name, 'p': g.p, 'dim': g.dim, 'center': g.center().dim}
    if g.grading is not None:
        out['grading'] = {int(k): int(v) for k, v in g.grading.dims().items()}
    return out


def cmd_construct(args, settings):
    g = build_algebra(args)
    for _ in range(args.derived):
        g = ct.derived_algebra(g)
    summary = algebra_summary(g)
    print(pd.Series({k: v for k, v in summary.items() if k != 'grading'}).to_string())
    if 'grading' in summary:
        print(pd.DataFrame({'degree': list(summary['grading']), 'dim': list(summary['grading'].values())})
              .to_string(index=False))
    if args.dump:
        ess.dump_json(g.to_json(), args.dump)
    return EXIT_OK


def cmd_orbit(args, settings):
    rec = orbits.lookup(args.group, args.orbit)
    s = pipeline.orbit_setup(args.group, args.p, rec.label)
    try:
        expected = orbits.expected_centralizer_dim(rec, args.p)
    except ess.UnknownType:
        logger.warning('%s %s has no centralizer row for p=%d', args.group, rec.label, args.p)
        expected = None
    got = s.ge.dim
    report = {'group': args.group, 'p': args.p, 'orbit': rec.label, 'g_e': got, 'expected': expected}
    status = EXIT_OK
    if expected is not None and expected != got:
        logger.warning('%s %s at p=%d: dim g_e = %d, catalog says %d', args.group, rec.label, args.p, got, expected)
        status = EXIT_MISMATCH
    if args.analyze:
        report.update(pipeline.analyze(s, seed=settings.seed).summary())
    print(pd.Series(report).to_string())
    if args.json:
        ess.dump_json(report, args.json)
    return status


def check_table(report):
    return pd.DataFrame(report['checks'], columns=COLUMNS)


def _run_one(key, seed):
    return tasks.run_task(key, seed)


def run_tasks(keys, seed, jobs):
    if jobs <= 1 or len(keys) <= 1:
        return [_run_one(key, seed) for key in keys]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, keys, [seed] * len(keys)))


def cmd_verify(args, settings):
    if args.list:
        print(pd.DataFrame(tasks.describe(), columns=['task', 'title']).to_string(index=False))
        return EXIT_OK
    known = tasks.keys()
    keys = known if args.all else [args.task]
    unknown = [key for key in keys if key not in known]
    if unknown:
        raise ess.UnknownType(f'unknown task {unknown[0]!r}')
    reports = run_tasks(keys, settings.seed, settings.jobs)
    for report in reports:
        verdict = 'PASS' if tasks.passed(report) else 'FAIL'
        print(f'{report["task"]}: {verdict}')
        print(check_table(report).to_string(index=False))
    if args.json:
        ess.dump_json(reports[0] if len(reports) == 1 else reports, args.json)
    return EXIT_OK if all(tasks.passed(report) for report in reports) else EXIT_MISMATCH


def cmd_filtration(args, settings):
    rec = orbits.lookup(args.group, args.orbit)
    s = pipeline.orbit_setup(args.group, args.p, rec.label)
    profile = pipeline.profile_for(args.group, args.p, rec.label)
    if args.relative_ideal == 'off' and profile.route == 'relative':
        profile = pipeline.Profile(profile.radical_of, None, None, 'step')
    analysis = pipeline.analyze(s, profile, seed=settings.seed, quotient=False)
    try:
        report = pipeline.filtration_report(analysis, settings.seed)
    except ess.ConstructionError as exc:
        logger.warning('%s %s at p=%d: %s', args.group, rec.label, args.p, exc)
        return EXIT_MISMATCH
    report = {'group': args.group, 'p': args.p, 'orbit': rec.label, **report}
    print(pd.Series({k: v for k, v in report.items() if k != 'component_dims'}).to_string())
    dims = report['component_dims']
    print(pd.DataFrame({'degree': list(dims), 'dim': list(dims.values())}).to_string(index=False))
    if args.json:
        ess.dump_json(report, args.json)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog='modlie', description='Modular Lie algebra workbench')
    parser.add_argument('--log-level', default=None, help='logging level (default MODLIE_LOG_LEVEL or WARNING)')
    parser.add_argument('--seed', type=int, default=None, help='seed of the randomized routines (default MODLIE_SEED)')
    parser.add_argument('--jobs', type=int, default=None,
                        help='worker processes for verify --all (default MODLIE_JOBS)')
    commands = parser.add_subparsers(dest='command', required=True)

    construct = commands.add_parser('construct', help='build an algebra and print its shape')
    source = construct.add_mutually_exclusive_group(required=True)
    source.add_argument('--type', help='G2, F4, E6, E7, E8, sl or psl')
    source.add_argument('--family', help=f'one of {", ".join(ct.FAMILIES + tuple(ct.EXOTIC_PRIMES))} or HS')
    construct.add_argument('--rank', type=int, help='n for sl(n) and psl(n)')
    construct.add_argument('--m', type=int, help='number of variables (2m for HS)')
    construct.add_argument('--n', help='truncation, e.g. 1 or 1,1')
    construct.add_argument('--p', type=int, default=None, help='characteristic')
    construct.add_argument('--derived', type=int, default=0, help='pass to the k-th derived algebra')
    construct.add_argument('--dump', help='write the structure constants as JSON')
    construct.set_defaults(func=cmd_construct)

    orbit = commands.add_parser('orbit', help='centraliser dimension and analysis of a catalogued orbit')
    orbit.add_argument('--group', required=True, choices=orbits.GROUPS)
    orbit.add_argument('--p', type=int, required=True)
    orbit.add_argument('--orbit', required=True)
    orbit.add_argument('--analyze', action='store_true', help='radical, normaliser and ideals')
    orbit.add_argument('--json', help='write the report as JSON')
    orbit.set_defaults(func=cmd_orbit)

    verify = commands.add_parser('verify', help='run verification tasks')
    which = verify.add_mutually_exclusive_group(required=True)
    which.add_argument('--task', help='task key, see --list')
    which.add_argument('--all', action='store_true')
    which.add_argument('--list', action='store_true')
    verify.add_argument('--json', help='write the report(s) as JSON')
    verify.set_defaults(func=cmd_verify)

    filtration = commands.add_parser('filtration', help='Weisfeiler filtration of an analysed orbit')
    filtration.add_argument('--group', required=True, choices=orbits.GROUPS)
    filtration.add_argument('--p', type=int, required=True)
    filtration.add_argument('--orbit', required=True)
    filtration.add_argument('--relative-ideal', default='auto', choices=('auto', 'off'),
                            help='use the ideal I of the orbit profile when it has one')
    filtration.add_argument('--json', help='write the report as JSON')
    filtration.set_defaults(func=cmd_filtration)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    settings = ess.load_settings().with_overrides(seed=args.seed, log_level=args.log_level, jobs=args.jobs)
    ess.configure_logging(settings.log_level)
    if args.command == 'construct' and args.p is None and args.family not in ct.EXOTIC_PRIMES \
            and args.family != 'HS':
        logger.error('--p is required')
        return EXIT_USAGE
    try:
        return args.func(args, settings)
    except ess.ModLieError as exc:
        logger.error('%s: %s', type(exc).__name__, exc)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
