"""Command-line front end: count, gen, verify, bench, expansions.

Standard output carries data only; diagnostics go to standard error.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
import json
import logging
import sys
from functools import wraps

import click

from models.bench import (ExperimentConfig, KRule, environment_description, run_experiment,
                          write_csv)
from models.domain import CompositionSpec, PartDomain
from models.generation import GeneratorKind, expansion_report
from models.query import CompositionQuery, parse_value_list
from models.verify import run_verification

log = logging.getLogger(__name__)

ALGORITHMS = [kind.value for kind in GeneratorKind]


def _usage_errors(func):
    """Turn input errors raised by the models into click usage errors (exit 2)."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ValueError as e:
            raise click.UsageError(str(e))
    return wrapper


def _domain_options(func):
    options = [
        click.option('--k', 'k', type=int, help='Exact number of parts.'),
        click.option('--kmin', type=int, help='Smallest number of parts.'),
        click.option('--kmax', type=int, help='Largest number of parts.'),
        click.option('--min', 'a', type=int, help='Smallest allowed part.'),
        click.option('--max', 'b', type=int, help='Largest allowed part.'),
        click.option('--set', 'values', help='Allowed parts as a comma list, e.g. 1,3,4.'),
        click.option('--objects', type=click.Choice(['compositions', 'partitions']),
                     default='compositions', show_default=True),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _query(n, k, kmin, kmax, a, b, values, objects, method=None, algo=None) -> CompositionQuery:
    return CompositionQuery(
        n=n, k=k, kmin=kmin, kmax=kmax, a=a, b=b,
        values=parse_value_list(values) if values is not None else None,
        objects=objects, method=method, algo=algo,
    )


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Debug logging on standard error.')
def cli(verbose):
    """Restricted integer compositions and partitions."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@cli.command()
@click.option('--n', 'n', type=int, required=True, help='Target sum.')
@_domain_options
@click.option('--method', type=click.Choice(['interval', 'binomial', 'set']),
              help='Counting recursion; defaults to interval, or set for --set.')
@_usage_errors
def count(n, k, kmin, kmax, a, b, values, objects, method):
    """Print the number of compositions (or partitions)."""
    query = _query(n, k, kmin, kmax, a, b, values, objects, method=method)
    click.echo(query.count())


@cli.command()
@click.option('--n', 'n', type=int, required=True, help='Target sum.')
@_domain_options
@click.option('--algo', type=click.Choice(ALGORITHMS),
              help='Generator; successor for compositions, binomial/naive for partitions by default.')
@click.option('--format', 'fmt', type=click.Choice(['lines', 'jsonl']), default='lines', show_default=True)
@click.option('--limit', type=int, help='Stop after this many outputs.')
@_usage_errors
def gen(n, k, kmin, kmax, a, b, values, objects, algo, fmt, limit):
    """Print every composition (or partition), one per line."""
    query = _query(n, k, kmin, kmax, a, b, values, objects, algo=algo)
    stream = query.stream(limit)
    out = click.get_text_stream('stdout')
    if fmt == 'lines':
        for parts in stream:
            out.write(' '.join(map(str, parts)) + '\n')
    else:
        for parts in stream:
            out.write(json.dumps(list(parts), separators=(',', ':')) + '\n')
    out.flush()


@cli.command()
@click.option('--nmax', type=int, default=12, show_default=True)
@click.option('--kmax', type=int, default=6, show_default=True)
@click.option('--bmax', type=int, default=5, show_default=True)
@click.pass_context
@_usage_errors
def verify(ctx, nmax, kmax, bmax):
    """Check every generator and counter against brute force."""
    report = run_verification(nmax=nmax, kmax=kmax, bmax=bmax)
    click.echo(report.summary())
    if not report.passed:
        ctx.exit(1)


@cli.command()
@click.option('--preset', type=click.Choice(['fig1', 'fig2', 'fig3', 'custom']), required=True)
@click.option('--n', 'n_values', type=int, multiple=True, help='Custom preset: target sums (repeatable).')
@click.option('--k', 'k', type=int, help='Custom preset: fixed k.')
@click.option('--kmin', type=int, help='Custom preset: sweep start.')
@click.option('--kmax', type=int, help='Custom preset: sweep end.')
@click.option('--min', 'a', type=int, help='Custom preset: smallest part (default 1).')
@click.option('--max', 'b', type=int, help='Custom preset: largest part (default 7).')
@click.option('--algo', 'algorithms', type=click.Choice(ALGORITHMS), multiple=True,
              help='Restrict to these generators (repeatable).')
@click.option('--reps', type=int, help='Timed repetitions per cell.')
@click.option('--warmup', type=int, help='Discarded runs per cell.')
@click.option('--timeout', 'cell_timeout', type=float, help='Seconds before a cell is abandoned.')
@click.option('--out', type=click.Path(dir_okay=False, writable=True), help='CSV path; standard output if omitted.')
@_usage_errors
def bench(preset, n_values, k, kmin, kmax, a, b, algorithms, reps, warmup, cell_timeout, out):
    """Time the four generators and emit CSV."""
    overrides = dict(repetitions=reps, warmup=warmup, cell_timeout=cell_timeout,
                     algorithms=list(algorithms) or None)
    custom_flags = n_values or any(v is not None for v in (k, kmin, kmax, a, b))
    if preset == 'custom':
        if not n_values:
            raise click.UsageError("--preset custom needs at least one --n")
        if k is not None and (kmin is not None or kmax is not None):
            raise click.UsageError("give either --k or --kmin/--kmax, not both")
        if k is not None:
            k_rule = KRule(rule='fixed', k=k)
        elif kmin is not None or kmax is not None:
            k_rule = KRule(rule='sweep', k_min=kmin, k_max=kmax)
        else:
            k_rule = KRule(rule='half_n')
        fields = dict(preset='custom', n_values=list(n_values), k_rule=k_rule,
                      a=1 if a is None else a, b=7 if b is None else b)
        fields.update({key: value for key, value in overrides.items() if value is not None})
        config = ExperimentConfig(**fields)
    elif custom_flags:
        raise click.UsageError(f"--n/--k/--kmin/--kmax/--min/--max only apply to --preset custom, not {preset}")
    else:
        config = ExperimentConfig.preset_config(preset, **overrides)

    log.info("bench %s: %d repetitions, %d warmup", config.preset, config.repetitions, config.warmup)
    rows = run_experiment(config)
    environment = environment_description()
    if out is None:
        stdout = click.get_text_stream('stdout')
        write_csv(rows, stdout, environment)
        stdout.flush()
    else:
        with open(out, 'w', encoding='utf-8', newline='') as handle:
            write_csv(rows, handle, environment)
        click.echo(f"wrote {len(rows)} rows to {out}", err=True)


@cli.command()
@click.option('--n', 'n', type=int, default=6, show_default=True)
@click.option('--k', 'k', type=int, default=5, show_default=True)
@click.option('--min', 'a', type=int, default=1, show_default=True)
@click.option('--max', 'b', type=int, default=3, show_default=True)
@_usage_errors
def expansions(n, k, a, b):
    """Node expansions of each generator on one instance."""
    spec = CompositionSpec(n=n, k=k, domain=PartDomain.interval(a, b))
    click.echo("algorithm,label,node_expansions,emitted,reference")
    for entry in expansion_report(spec):
        reference = '' if entry['reference'] is None else entry['reference']
        click.echo(f"{entry['algorithm']},{entry['label']},{entry['node_expansions']},"
                   f"{entry['emitted']},{reference}")


if __name__ == '__main__':
    cli()
