"""
CLI Module

Command line interface for CoinvKit providing:
- Enumeration of colored words, ordered set partitions and faces
- Statistics and descent monomials of a single object
- Garsia-Stanton bases, Hilbert series and Frobenius series
- Rewriting traces and the verification suite
"""

import functools
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import click

try:
    from rich.console import Console
    from rich.panel import Panel
    from rich.table import Table
    rich_available = True
except ImportError:
    rich_available = False

from common.python.utils import row_columns, text_cells, to_csv, to_json, write_output

from .combinatorics import (
    comaj_face,
    comaj_osp,
    count_faces,
    count_osp,
    count_words,
    descent_set,
    enumerate_faces,
    enumerate_osp,
    enumerate_words,
    format_blocks,
    format_face,
    format_osp,
    format_word,
    hrs_maj,
    maj,
    osp_to_blocks,
    parse_blocks,
    parse_face,
    parse_osp,
    parse_word,
)
from .env import COINVKIT_VERSION, Caps, env, get_config_summary, setup_logging
from .errors import CoinvKitError, DomainError, UnsupportedStatisticError
from .gs_basis import b_face, b_osp, b_word, basis_elements, tilde_b, tilde_b_face, tilde_b_osp
from .monomials import Setting, Variant, XMonomial, check_n, format_polynomial, parse_monomial
from .oracle import certify_standard_basis, graded_character_table, hilbert_combinatorial, hilbert_oracle
from .rewrite import STRATEGIES, normal_form_x, reduce_x_stratum_traced, reduce_y_traced
from .symmetric import (
    frobenius_from_characters,
    multigraded_frobenius_S,
    q_frobenius_formula,
)
from .verify import CheckContext, available_checks, run_checks

logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv', 'text')


@dataclass
class RunConfig:
    """Validated parameters shared by every subcommand"""

    n: int
    k: Optional[int] = None
    r: int = 1
    variant: Variant = Variant.S
    setting: Setting = Setting.Y
    format: str = 'text'
    caps: Caps = field(default_factory=Caps)
    seed: int = 0
    output: Optional[str] = None

    def __post_init__(self):
        check_n(self.n)
        if self.k is None:
            self.k = self.n
        if not 0 <= self.k <= self.n:
            raise DomainError(f"k must satisfy 0 <= k <= n, got k = {self.k}")
        if self.r < 1:
            raise DomainError(f"r must be at least 1, got {self.r}")
        self.variant = Variant(self.variant)
        self.setting = Setting(self.setting)
        if self.format not in FORMATS:
            raise DomainError(f"format must be one of {', '.join(FORMATS)}")

    def parameters(self) -> Dict[str, Any]:
        return {'n': self.n, 'k': self.k, 'r': self.r,
                'variant': self.variant.value, 'setting': self.setting.value}


class CoinvKitCLI:
    """Rendering side of the command line"""

    def __init__(self, config: RunConfig):
        self.config = config
        self.console = Console() if rich_available else None

    def _print(self, message: str, style: Optional[str] = None) -> None:
        """Print message with optional styling"""
        if self.console and rich_available:
            if style:
                self.console.print(message, style=style)
            else:
                self.console.print(message)
        else:
            print(message)

    def _print_panel(self, content: str, title: str, style: str = "blue") -> None:
        """Print content in a panel"""
        if self.console and rich_available:
            panel = Panel(content, title=title, border_style=style)
            self.console.print(panel)
        else:
            print(f"\n=== {title} ===")
            print(content)
            print("=" * (len(title) + 8))

    def _print_table(self, rows: Sequence[Dict[str, Any]], columns: List[str],
                     title: Optional[str] = None) -> None:
        cells = text_cells(rows, columns)
        if self.console and rich_available:
            table = Table(title=title, show_header=True, header_style="bold blue")
            for column in columns:
                table.add_column(column)
            for row in cells:
                table.add_row(*row)
            self.console.print(table)
        else:
            if title:
                print(title)
            print('\t'.join(columns))
            for row in cells:
                print('\t'.join(row))

    def emit(self, payload: Dict[str, Any], rows: Optional[Sequence[Dict[str, Any]]] = None,
             text: Optional[Callable[[], None]] = None, title: Optional[str] = None,
             footer: Optional[str] = None) -> None:
        """
        Render one result in the configured format

        Args:
            payload: Canonical JSON document
            rows: Row dictionaries for the CSV and table projections
            text: Custom text renderer, used instead of the table
            title: Table or panel title
            footer: Trailing summary line for text output
        """
        fmt = self.config.format
        if fmt == 'json' or (fmt == 'csv' and rows is None):
            rendered = to_json(payload)
        elif fmt == 'csv':
            rendered = to_csv(rows)
        else:
            rendered = None

        if rendered is not None:
            if self.config.output:
                path = write_output(rendered, self.config.output)
                click.echo(f"✅ wrote {path}", err=True)
            else:
                click.echo(rendered)
            return

        if self.config.output:
            write_output(to_json(payload), self.config.output)
            click.echo(f"✅ wrote {self.config.output}", err=True)
        if text is not None:
            text()
        elif rows is not None:
            self._print_table(rows, row_columns(rows), title)
        else:
            self._print_panel(to_json(payload), title or 'result')
        if footer:
            self._print(footer, style="dim")


# ---------------------------------------------------------------------------
# Shared options and error handling
# ---------------------------------------------------------------------------

class CoinvKitGroup(click.Group):
    """click group whose usage errors exit with 1 like every other bad input"""

    def main(self, *args, standalone_mode: bool = True, **kwargs):
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
            code = rv if isinstance(rv, int) else 0
        except click.ClickException as e:
            e.show()
            code = 1
        except click.Abort:
            click.echo("❌ aborted", err=True)
            code = 1
        if standalone_mode:
            sys.exit(code)
        return code


def common_options(func: Callable) -> Callable:
    options = [
        click.option('-n', 'n', type=int, required=True, help='Number of letters'),
        click.option('-k', 'k', type=int, default=None, help='Number of blocks (default n)'),
        click.option('-r', 'r', type=int, default=1, show_default=True, help='Number of colors'),
        click.option('--variant', type=click.Choice(['R', 'S']), default=None,
                     help='Quotient family (default S). S cuts at multichains of length kr, '
                          'R at kr+1; for r=1 these are the families often written '
                          'with lengths k and k+1'),
        click.option('--setting', type=click.Choice(['x', 'y']), default='y', show_default=True,
                     help='Polynomial (x) or Stanley-Reisner (y) presentation'),
        click.option('--format', 'fmt', type=click.Choice(FORMATS), default='text', show_default=True),
        click.option('--cap-degree', type=int, default=None, help='Largest degree the oracle visits'),
        click.option('--cap-slice', type=int, default=None, help='Largest slice the oracle builds'),
        click.option('--seed', type=int, default=None, help='Seed for randomized checks'),
        click.option('--output', '-o', type=click.Path(dir_okay=False), default=None,
                     help='Write the result to a file'),
        click.option('--verbose', '-v', is_flag=True, help='Debug logging'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def handle_errors(func: Callable) -> Callable:
    """Turn CoinvKit errors into a '❌' line and the matching exit code"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CoinvKitError as e:
            logger.debug("%s: %s", type(e).__name__, e)
            click.echo(f"❌ {e}", err=True)
            sys.exit(e.exit_code)
    return wrapper


def build_config(n, k, r, variant, setting, fmt, cap_degree, cap_slice, seed, output,
                 verbose) -> RunConfig:
    setup_logging('DEBUG' if verbose else None)
    caps = Caps.from_env().override(degree=cap_degree, slice=cap_slice)
    return RunConfig(n=n, k=k, r=r, variant=variant or Variant.S, setting=setting, format=fmt,
                     caps=caps, seed=env.seed if seed is None else seed, output=output)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

@click.group(cls=CoinvKitGroup)
@click.help_option('--help', '-h')
def cli():
    """
    CoinvKit - generalized coinvariant algebras of G(r,1,n)

    \b
    Example usage:
      coinvkit enumerate --osp -n 3 -k 2
      coinvkit hilbert -n 3 -k 3 --variant S
      coinvkit rewrite -n 5 -k 4 -r 2 --monomial "y{5}^3*y{2,5}^2*y{1,2,3,5}^2"
      coinvkit verify -n 4 -k 2 --all
    """


def _word_row(w) -> Dict[str, Any]:
    return {'word': format_word(w), 'des': len(descent_set(w)), 'maj': maj(w)}


@cli.command(name='enumerate')
@click.option('--words', 'kind', flag_value='words', help='Colored permutations')
@click.option('--osp', 'kind', flag_value='osp', default=True, help='Ordered set partitions (g, lambda)')
@click.option('--faces', 'kind', flag_value='faces', help='Faces (Z, g, lambda)')
@common_options
@handle_errors
def enumerate_cmd(kind, **options):
    """List combinatorial objects with des, maj and comaj"""
    cfg = build_config(**options)
    n, k, r = cfg.n, cfg.k, cfg.r
    rows = []
    if kind == 'words':
        rows = [_word_row(w) for w in enumerate_words(n, r)]
        expected = count_words(n, r)
    elif kind == 'osp':
        for p in enumerate_osp(n, k, r):
            row = {'osp': format_osp(p), 'blocks': format_blocks(osp_to_blocks(p, k))}
            row.update(_word_row(p.word))
            del row['word']
            row['comaj'] = comaj_osp(p)
            rows.append(row)
        expected = count_osp(n, k, r)
    else:
        for f in enumerate_faces(n, k, r):
            row = {'face': format_face(f)}
            row.update(_word_row(f.word))
            del row['word']
            row['comaj'] = comaj_face(f, n, k, r)
            rows.append(row)
        expected = count_faces(n, k, r)
    if len(rows) != expected:
        logger.warning("enumerated %d objects, closed form gives %d", len(rows), expected)
    payload = {'parameters': cfg.parameters(), 'kind': kind, 'rows': rows, 'count': len(rows)}
    CoinvKitCLI(cfg).emit(payload, rows, title=kind, footer=f"{len(rows)} rows")


@cli.command()
@click.option('--word', help="Colored word, e.g. '3^3 1^1 5^2 2^2 4^0'")
@click.option('--osp', help="Ordered set partition '(word; lambda)'")
@click.option('--blocks', help="Ordered set partition as blocks 'B1|B2|...'")
@click.option('--face', help="Face '({Z}; word; lambda)'")
@common_options
@handle_errors
def stats(word, osp, blocks, face, **options):
    """Statistics and descent monomials of one object"""
    cfg = build_config(**options)
    given = [v for v in (word, osp, blocks, face) if v is not None]
    if len(given) != 1:
        raise DomainError("give exactly one of --word, --osp, --blocks, --face")
    n, k, r = cfg.n, cfg.k, cfg.r
    if word is not None:
        w = parse_word(word, n, r)
        result = _word_row(w)
        result['descents'] = sorted(descent_set(w))
        if w.is_full:
            result['tilde_b'] = str(tilde_b(w))
            result['b'] = str(b_word(w))
    elif face is not None:
        f = parse_face(face, n, r)
        result = {'face': format_face(f), 'zero_block': sorted(f.zero_block),
                  'descents': sorted(descent_set(f.word)), 'maj': maj(f.word),
                  'comaj': comaj_face(f, n, k, r),
                  'tilde_b': str(tilde_b_face(f, n, k, r)), 'b': str(b_face(f, n, k, r))}
    else:
        p = parse_osp(osp, n, r) if osp is not None else parse_blocks(blocks, n, r)
        p.validate(k)
        result = {'osp': format_osp(p), 'blocks': format_blocks(osp_to_blocks(p, k)),
                  'descents': sorted(descent_set(p.word)), 'maj': maj(p.word),
                  'comaj': comaj_osp(p),
                  'tilde_b': str(tilde_b_osp(p)), 'b': str(b_osp(p))}
        if r == 1:
            result['hrs_maj'] = hrs_maj(p, k)
    payload = {'parameters': cfg.parameters(), 'stats': result}
    CoinvKitCLI(cfg).emit(payload, [result], title='statistics')


@cli.command()
@click.option('--check', 'certify', is_flag=True, help='Certify against the ideal oracle')
@common_options
@handle_errors
def basis(certify, **options):
    """Garsia-Stanton basis of R_{n,k} or S_{n,k}"""
    cfg = build_config(**options)
    elements = basis_elements(cfg.n, cfg.k, cfg.r, cfg.variant)
    rows = [e.to_dict() for e in elements]
    payload: Dict[str, Any] = {'parameters': cfg.parameters(), 'basis': rows, 'count': len(rows)}
    report = None
    if certify:
        report = certify_standard_basis(cfg.n, cfg.k, cfg.r, cfg.variant, cfg.caps)
        payload['certification'] = report.to_dict()
    footer = f"{len(rows)} basis elements"
    if report is not None:
        footer += ", certification " + ('passed' if report.passed else 'FAILED')
    CoinvKitCLI(cfg).emit(payload, rows, title=f"{cfg.variant.value}({cfg.n},{cfg.k}) r={cfg.r}",
                          footer=footer)
    if report is not None and not report.passed:
        for line in report.counterexamples:
            click.echo(f"❌ {line}", err=True)
        sys.exit(3)


@cli.command()
@click.option('--source', type=click.Choice(['combinatorial', 'oracle']), default='combinatorial',
              show_default=True, help='comaj generating function or ideal oracle')
@common_options
@handle_errors
def hilbert(source, **options):
    """Hilbert series as ascending coefficients, e.g. 1,2,2,1"""
    cfg = build_config(**options)
    payload: Dict[str, Any] = {'parameters': cfg.parameters(), 'source': source}
    if source == 'oracle':
        report = hilbert_oracle(cfg.n, cfg.k, cfg.r, cfg.variant, cfg.setting, cfg.caps)
        coefficients = report.quotient_dims
        payload['degrees'] = report.to_dict()['degrees']
    else:
        poly = hilbert_combinatorial(cfg.n, cfg.k, cfg.r, cfg.variant)
        coefficients = [int(c) for c in reversed(poly.all_coeffs())]
    payload['coefficients'] = coefficients
    payload['total'] = sum(coefficients)
    rows = [{'degree': d, 'dimension': c} for d, c in enumerate(coefficients)]
    text = ','.join(str(c) for c in coefficients)
    CoinvKitCLI(cfg).emit(payload, rows, text=lambda: click.echo(text))


@cli.command()
@click.option('--multigraded', is_flag=True, help='Keep t_1..t_n instead of specializing to q')
@click.option('--source', type=click.Choice(['formula', 'oracle']), default='formula',
              show_default=True, help='Closed formula or characters of the quotient')
@common_options
@handle_errors
def frobenius(multigraded, source, **options):
    """Graded Frobenius series in the Schur basis (r = 1)"""
    cfg = build_config(**options)
    if cfg.r != 1:
        raise UnsupportedStatisticError("Frobenius series are computed for r = 1")
    bound = cfg.caps.symmetric
    payload: Dict[str, Any] = {'parameters': cfg.parameters(), 'basis': 'schur', 'source': source}
    if multigraded:
        if cfg.variant is not Variant.S or source != 'formula':
            raise UnsupportedStatisticError("the multigraded series is the S formula")
        payload['terms'] = multigraded_frobenius_S(cfg.n, cfg.k, bound).multigraded_terms(bound)
        rows = [{'t_monomial': t['t_monomial'],
                 'schur': ' + '.join(f"{s['coeff']}*s{s['partition']}" for s in t['schur'])}
                for t in payload['terms']]
    else:
        if source == 'oracle':
            table = graded_character_table(cfg.n, cfg.k, cfg.variant, cfg.setting, caps=cfg.caps)
            vector = frobenius_from_characters(table, cfg.n, bound)
        elif cfg.variant is Variant.S:
            vector = q_frobenius_formula(cfg.n, cfg.k, bound)
        else:
            raise UnsupportedStatisticError("the closed formula covers S; use --source oracle for R")
        payload['terms'] = vector.to_json()
        rows = [{'partition': t['partition'], 'poly': t['poly']} for t in payload['terms']]
    CoinvKitCLI(cfg).emit(payload, rows, title='Frobenius series')


def _step_rows(trace) -> List[Dict[str, Any]]:
    return [{'step': i, 'item': step.item, 'target': str(step.target),
             'moved': str(step.moved), 'state': format_polynomial(step.state)}
            for i, step in enumerate(trace.steps, 1)]


@cli.command()
@click.option('--monomial', '-m', required=True, help="e.g. 'y{5}^3*y{2,5}^2' or 'x5^7*x2^4'")
@click.option('--strategy', type=click.Choice(STRATEGIES), default='largest', show_default=True)
@common_options
@handle_errors
def rewrite(monomial, strategy, **options):
    """Expand a monomial in the Garsia-Stanton basis, showing each move"""
    cfg = build_config(**options)
    n, k, r = cfg.n, cfg.k, cfg.r
    mono = parse_monomial(monomial, n)
    payload: Dict[str, Any] = {'parameters': cfg.parameters(), 'input': str(mono),
                               'strategy': strategy}
    if isinstance(mono, XMonomial):
        trace = reduce_x_stratum_traced(mono, n, k, r, cfg.variant, strategy)
        normal = normal_form_x(mono, n, k, r, cfg.variant, strategy)
        payload.update({'mu': list(trace.mu), 'admissibility': trace.admissibility.value,
                        'steps': _step_rows(trace),
                        'same_mu': format_polynomial(trace.final),
                        'higher_mu': format_polynomial(trace.higher),
                        'normal_form': format_polynomial(normal)})
        result = payload['normal_form']
    else:
        trace = reduce_y_traced(mono, n, k, r, cfg.variant, strategy)
        payload.update({'mu': list(trace.mu), 'admissibility': trace.admissibility.value,
                        'steps': _step_rows(trace),
                        'normal_form': format_polynomial(trace.final)})
        result = payload['normal_form']

    def text() -> None:
        lines = [f"{payload['input']}"]
        for row in payload['steps']:
            lines.append(f"  ({row['step']}) ≡ {row['state']}")
        if 'same_mu' in payload:
            lines.append(f"  same mu:   {payload['same_mu']}")
            lines.append(f"  higher mu: {payload['higher_mu']}")
        lines.append(f"  = {result}")
        title = f"mu = {tuple(trace.mu)} ({trace.admissibility.value})"
        CoinvKitCLI(cfg)._print_panel('\n'.join(lines), title)

    CoinvKitCLI(cfg).emit(payload, payload['steps'], text=text)


@cli.command()
@click.option('--check', 'names', multiple=True, help='Check to run (repeatable)')
@click.option('--all', 'run_all', is_flag=True, help='Run every registered check')
@common_options
@handle_errors
def verify(names, run_all, **options):
    """Run named verification checks; exit 3 when any fails"""
    variant = options.get('variant')
    cfg = build_config(**options)
    known = available_checks()
    if run_all:
        names = known
    if not names:
        raise DomainError(f"choose --all or --check NAME; available: {', '.join(known)}")
    unknown = [name for name in names if name not in known]
    if unknown:
        raise DomainError(f"unknown checks {', '.join(unknown)}; available: {', '.join(known)}")
    variants = (Variant(variant),) if variant else (Variant.R, Variant.S)
    ctx = CheckContext(cfg.n, cfg.k, cfg.r, variants, cfg.seed, cfg.caps)
    report = run_checks(list(names), ctx)
    rows = [{'check': res.name, 'group': res.group,
             'status': res.to_dict()['status'], 'note': res.reason or '; '.join(res.counterexamples[:3])}
            for res in report.results]
    failed = sum(1 for res in report.results if not res.passed)
    footer = "all checks passed" if report.passed else f"{failed} check(s) failed"
    CoinvKitCLI(cfg).emit(report.to_dict(), rows, title='verification', footer=footer)
    if not report.passed:
        sys.exit(3)


@cli.command()
def version():
    """Show version and effective configuration"""
    summary = get_config_summary()
    click.echo(f"coinvkit {COINVKIT_VERSION}")
    click.echo(to_json(summary))


def main():
    """Main entry point"""
    cli(prog_name='coinvkit')


if __name__ == '__main__':
    main()
