"""
surplus-lab command-line harness

Generates graphs, computes cuts with the named algorithms, runs the invariant
suites and writes CSV sweeps.

Exit codes:
    0 - success
    2 - usage, edge-list, generator, config, parameter or oracle-size error
    3 - algorithm not applicable to the input graph
    4 - invariant violation or numeric failure (including a failed verify suite)

Usage:
    python surplus_lab.py generate paley 13 --output paley13.el
    python surplus_lab.py cut paley13.el hyperplane-srg --trials 1000
    python surplus_lab.py oracle k5.el
    python surplus_lab.py profile c5free.el --r 5
    python surplus_lab.py verify all
    python surplus_lab.py sweep experiment.json
"""

import argparse
import json
import logging
import sys

from lib.generators import GeneratorSpec
from lib.graph import bound_report, format_edge_list, read_edge_list, triangle_count
from lib.harness import (
    ALGORITHMS,
    COLUMNS,
    SUITES,
    TIMING_COLUMN,
    SweepSpec,
    describe_failure,
    get_algorithm,
    run_suite,
    run_sweep,
    write_csv,
)
from lib.oracle import max_cut_exact
from lib.structure import good_path_profile
from lib.utils.errors import InapplicableAlgorithmError, InvariantViolation, SpectralError, SurplusLabError
from lib.utils.seeding import STREAM_NAME
from lib.utils.settings import get_settings

log = logging.getLogger('surplus_lab')

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INAPPLICABLE = 3
EXIT_INVARIANT = 4


def _banner(title):
    print("=" * 60)
    print(title)
    print("=" * 60)


def cmd_generate(args):
    """Build a generator spec and write it as an edge list (stdout without --output)."""
    generator = GeneratorSpec.parse(args.spec, args.seed)
    g = generator.build()
    header = [f"generator: {generator.label}", f"stream: {STREAM_NAME}"]
    if args.output:
        with open(args.output, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(format_edge_list(g, header))
        print(f"✅ Wrote {generator.label}: n={g.n} m={g.m} → {args.output}")
    else:
        sys.stdout.write(format_edge_list(g, header))
    return EXIT_OK


def cmd_cut(args):
    """Run one named algorithm on an edge-list file and print its report."""
    g, labels = read_edge_list(args.graph)
    algorithm = get_algorithm(args.algorithm)
    report = algorithm.run(g, seed=args.seed, trials=args.trials, r=args.r)
    if report.surplus * 2 != 2 * report.crossing - g.m:
        raise InvariantViolation(f"{algorithm.name}: surplus {report.surplus} differs from crossing - m/2")

    bounds = bound_report(g, include_eigenvalue=True)
    _banner(f"{algorithm.name} on {args.graph}")
    print(f"n={g.n} m={g.m} triangles={triangle_count(g)}")
    print(f"crossing: {report.crossing}")
    print(f"surplus: {report.surplus} ({float(report.surplus):.6g})")
    print(f"edwards: {bounds.edwards:.6g}")
    if bounds.eigenvalue_upper is not None:
        print(f"eigenvalue bound: {bounds.eigenvalue_upper:.6g}")
    if report.target_name:
        value = '-' if report.target_value is None else f"{report.target_value:.6g}"
        print(f"target {report.target_name}: {value}")
    if report.note:
        print(f"stats: {report.note}")
    print(f"side: {report.cut.bitstring}")
    if args.labels:
        print("labels: " + ' '.join(labels))
    print(f"✅ {algorithm.name} complete")
    return EXIT_OK


def cmd_oracle(args):
    """Exact maximum cut with its witness."""
    g, _ = read_edge_list(args.graph)
    result = max_cut_exact(g)
    _banner(f"oracle on {args.graph}")
    print(f"mc: {result.mc}")
    print(f"surplus: {result.surplus}")
    print(f"witness: {result.witness.bitstring}")
    print(f"method: {result.method}")
    return EXIT_OK


def cmd_profile(args):
    """Dump the good-path profile of an edge-list graph as JSON."""
    g, _ = read_edge_list(args.graph)
    prof = good_path_profile(g, args.r or 5, seed=args.seed)
    print(json.dumps(prof.to_dict(), indent=2, sort_keys=True))
    return EXIT_OK


def cmd_verify(args):
    """Run an invariant suite; exit 4 when any check fails."""
    reports = run_suite(args.suite, seed=args.seed)
    failed = False
    for report in reports:
        if report.passed:
            print(f"✅ {report.suite}: {report.checks} checks passed")
            continue
        failed = True
        print(f"❌ {report.suite}: {len(report.failures)} of {report.checks} checks failed")
        for failure in report.failures:
            print(f"   - {failure.check} on {failure.label}: {failure.message}")
        print("   smallest failing instance:")
        print(describe_failure(report.minimal_failure()), end='')
    return EXIT_INVARIANT if failed else EXIT_OK


def cmd_sweep(args):
    """Compute a sweep spec and write the CSV (stdout without an output path)."""
    spec = SweepSpec.load(args.spec)
    rows = run_sweep(spec)
    target = args.output or spec.output
    text = write_csv(spec, rows, target)
    if target:
        skipped = sum(1 for row in rows if row['status'] == 'skipped')
        print(f"✅ Wrote {len(rows)} rows ({skipped} skipped) → {target}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_common_options(parser, settings, default):
    """--seed, --trials and --log-level; subcommand copies pass default=SUPPRESS."""
    parser.add_argument('--seed', type=int, default=default(settings.seed),
                        help=f'Master seed (default: {settings.seed})')
    parser.add_argument('--trials', type=int, default=default(settings.trials),
                        help=f'Trials for best-of-trials routines (default: {settings.trials})')
    parser.add_argument('--log-level', default=default(settings.log_level),
                        help=f'Logging level (default: {settings.log_level})')


def build_parser():
    settings = get_settings()
    parser = argparse.ArgumentParser(
        description='MaxCut surplus algorithms, oracles and experiment sweeps',
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_common_options(parser, settings, lambda value: value)
    # accepted after the subcommand too, without overwriting the top-level values
    common = argparse.ArgumentParser(add_help=False)
    _add_common_options(common, settings, lambda value: argparse.SUPPRESS)
    subparsers = parser.add_subparsers(dest='command', required=True)

    def add_parser(name, **kwargs):
        return subparsers.add_parser(name, parents=[common], **kwargs)

    generate = add_parser('generate', help='Write a generated graph as an edge list')
    generate.add_argument('spec', nargs='+', help='Family and parameters, e.g. paley 13 or blowup 3 cycle 5')
    generate.add_argument('--output', '-o', help='Edge-list path (default: stdout)')
    generate.set_defaults(func=cmd_generate)

    cut = add_parser('cut', help='Run a named cut algorithm',
                 epilog='algorithms:\n' + '\n'.join(
                     f"  {name:<20} {a.description}" for name, a in ALGORITHMS.items()),
                 formatter_class=argparse.RawDescriptionHelpFormatter)
    cut.add_argument('graph', help='Edge-list file')
    cut.add_argument('algorithm', help='Algorithm name')
    cut.add_argument('--r', type=int, default=None, help='Forbidden clique size or odd cycle length')
    cut.add_argument('--labels', action='store_true', help='Also print the vertex labels in side order')
    cut.set_defaults(func=cmd_cut)

    oracle = add_parser('oracle', help='Exact maximum cut (n ≤ 30)')
    oracle.add_argument('graph', help='Edge-list file')
    oracle.set_defaults(func=cmd_oracle)

    profile = add_parser('profile', help='Good-path profile as JSON')
    profile.add_argument('graph', help='Edge-list file')
    profile.add_argument('--r', type=int, default=5, help='Odd cycle length (default: 5)')
    profile.set_defaults(func=cmd_profile)

    verify = add_parser('verify', help='Run an invariant suite on the bundled corpus')
    verify.add_argument('suite', help=f"One of: {', '.join(SUITES)}, all")
    verify.set_defaults(func=cmd_verify)

    sweep = add_parser(
        'sweep', help='Run a JSON experiment spec and write CSV',
        epilog=f"columns: {','.join(COLUMNS)} (+ {TIMING_COLUMN} when timing is on)",
    )
    sweep.add_argument('spec', help='Experiment spec (JSON)')
    sweep.add_argument('--output', '-o', help='CSV path (overrides the spec; default: stdout)')
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    """Command-line entry point; returns the exit code."""
    try:
        parser = build_parser()
    except SurplusLabError as e:
        print(f"❌ Configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format='%(asctime)s %(levelname)s %(name)s %(message)s',
    )
    if args.trials < 1:
        print(f"❌ --trials must be ≥ 1, got {args.trials}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.func(args)
    except InapplicableAlgorithmError as e:
        print(f"❌ Not applicable: {e}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except (InvariantViolation, SpectralError) as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except SurplusLabError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
