"""
LIL Audit - command line front end.

Subcommands:
    tables     theoretical probability tables (no corpus needed)
    generate   write a seeded corpus and its manifest (resumable)
    analyze    stream the corpus and persist LIL traces and snapshots
    evaluate   score the traces and write the report
    run        generate -> analyze -> evaluate

Exit codes: 0 success, 1 usage or input error, 2 numerical failure,
3 verdict FAIL.
"""

import logging
import sys
from functools import wraps
from typing import List, Optional

import typer

try:  # typer >= 0.26 vendors its own click and raises its exception classes
    from typer import _click as click
except ImportError:
    import click

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn
from rich.table import Table

from stages import RunConfig, audit_pipeline, run_analyze, run_evaluate, run_generate, run_tables
from tools import __version__
from tools.errors import ConfigError, LilAuditError, NumericalError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_VERDICT_FAIL = 3

app = typer.Typer(
    name="lil-audit",
    help="Law-of-the-iterated-logarithm randomness audit for pseudorandom generators",
    add_completion=False,
)
console = Console()
logger = logging.getLogger("lil_audit")


def handle_errors(func):
    """Map toolkit exceptions to exit codes with readable messages."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except typer.Exit:
            raise
        except NumericalError as e:
            console.print(f"[red]Numerical failure:[/red] {e}")
            raise typer.Exit(EXIT_NUMERICAL)
        except ConfigError as e:
            console.print(f"[red]Configuration error:[/red] {e}")
            raise typer.Exit(EXIT_USAGE)
        except LilAuditError as e:
            console.print(f"[red]Error:[/red] {e}")
            raise typer.Exit(EXIT_USAGE)

    return wrapper


@app.callback()
def main_callback(
    log_level: str = typer.Option("INFO", "--log-level", envvar="LILAUDIT_LOG_LEVEL", help="Logging level"),
):
    """Configure logging before any command runs."""
    logging.basicConfig(
        level=log_level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, rich_tracebacks=False, show_path=False)],
        force=True,
    )


def _config(command: str, config_file, alpha, base_exp, count, m, generator, out, **extra) -> RunConfig:
    return RunConfig.from_sources(
        command,
        config_file=config_file,
        alpha=alpha,
        checkpoint_base_exp=base_exp,
        checkpoint_count=count,
        m=m,
        generator=generator,
        out=out,
        **extra,
    )


def _progress_bar(description: str, total: int):
    progress = Progress(
        TextColumn("[bold blue]{task.description}"), BarColumn(), MofNCompleteColumn(), console=console
    )
    task = progress.add_task(description, total=total)
    return progress, lambda result: progress.advance(task)


def _fail_on_error(result: dict) -> None:
    if result["status"] == "error":
        console.print(f"[red]✗ {result.get('error', 'stage failed')}[/red]")
        raise typer.Exit(EXIT_USAGE)


def _print_verdict(result: dict) -> None:
    report = result["report"]
    table = Table(title=f"{report['generator']} (m={report['m']})")
    for column in ("checkpoint", "tvd", "hellinger", "rmsd", "tvd excess", "verdict"):
        table.add_column(column)
    for snap in report["snapshots"]:
        colour = "green" if snap["verdict"] == "PASS" else "red"
        table.add_row(
            str(snap["checkpoint"]),
            f"{snap['distances']['tvd']:.4f}",
            f"{snap['distances']['hellinger']:.4f}",
            f"{snap['distances']['rmsd']:.5f}",
            f"{snap['tvd_excess']:+.4f}",
            f"[{colour}]{snap['verdict']}[/{colour}]",
        )
    console.print(table)
    for alpha, section in report["weak"].items():
        console.print(
            f"alpha={alpha}: delta_wlil={section['delta_wlil']:.4f} rmsd_wlil={section['rmsd_wlil']:.6f}"
        )
    for warning in report["warnings"]:
        console.print(f"[yellow]⚠ {warning}[/yellow]")
    if result["verdict"] == "FAIL":
        console.print("[red bold]Verdict: FAIL[/red bold]")
        raise typer.Exit(EXIT_VERDICT_FAIL)
    console.print("[green bold]Verdict: PASS[/green bold]")


ConfigOpt = typer.Option(None, "--config", help="JSON file with RunConfig fields")
AlphaOpt = typer.Option(None, "--alpha", help="Significance level alpha (theta = 1 - alpha)")
BaseExpOpt = typer.Option(None, "--base-exp", help="First checkpoint is 2^base_exp")
CountOpt = typer.Option(None, "--count", help="Number of checkpoints")
MOpt = typer.Option(None, "--m", help="Corpus size")
GeneratorOpt = typer.Option(None, "--generator", help="counter-prng | hash-drbg | biased-wrapper | os-entropy")
OutOpt = typer.Option(None, "--out", help="Output directory")
HashOpt = typer.Option(None, "--hash", help="Hash primitive (sha1, sha256, ...)")
WorkersOpt = typer.Option(None, "--workers", help="Worker processes")


@app.command()
@handle_errors
def tables(
    config_file: Optional[str] = ConfigOpt,
    alpha: Optional[float] = AlphaOpt,
    base_exp: Optional[int] = BaseExpOpt,
    count: Optional[int] = CountOpt,
    out: Optional[str] = OutOpt,
):
    """Compute theoretical weak/strong/snapshot tables."""
    config = _config("tables", config_file, alpha, base_exp, count, None, None, out)
    console.print(f"[bold blue]Computing tables for checkpoints 2^{config.base_exp}..:[/bold blue] "
                  f"{config.checkpoint_count} points")
    result = run_tables(config)
    for path in result["files"]:
        console.print(f"[green]✓ {path}[/green]")


@app.command()
@handle_errors
def generate(
    config_file: Optional[str] = ConfigOpt,
    alpha: Optional[float] = AlphaOpt,
    base_exp: Optional[int] = BaseExpOpt,
    count: Optional[int] = CountOpt,
    m: Optional[int] = MOpt,
    generator: Optional[str] = GeneratorOpt,
    hash_name: Optional[str] = HashOpt,
    workers: Optional[int] = WorkersOpt,
    out: Optional[str] = OutOpt,
):
    """Generate a corpus of sequences and its manifest."""
    config = _config("generate", config_file, alpha, base_exp, count, m, generator, out,
                     hash=hash_name, workers=workers)
    progress, advance = _progress_bar("Generating", config.m)
    with progress:
        result = run_generate(config, progress=advance)
    _fail_on_error(result)
    console.print(f"[green]✓ {config.m} sequences in {result['corpus_dir']}[/green]")


@app.command()
@handle_errors
def analyze(
    config_file: Optional[str] = ConfigOpt,
    alpha: Optional[float] = AlphaOpt,
    base_exp: Optional[int] = BaseExpOpt,
    count: Optional[int] = CountOpt,
    m: Optional[int] = MOpt,
    generator: Optional[str] = GeneratorOpt,
    workers: Optional[int] = WorkersOpt,
    out: Optional[str] = OutOpt,
):
    """Compute LIL traces and snapshot distributions for the corpus."""
    config = _config("analyze", config_file, alpha, base_exp, count, m, generator, out, workers=workers)
    result = run_analyze(config)
    _fail_on_error(result)
    for failure in result["failures"]:
        console.print(f"[yellow]⚠ sequence {failure['index']}: {failure['error']}[/yellow]")
    console.print(f"[green]✓ {result['traces']} traces ({result['status']})[/green]")


@app.command()
@handle_errors
def evaluate(
    config_file: Optional[str] = ConfigOpt,
    alpha: Optional[float] = AlphaOpt,
    base_exp: Optional[int] = BaseExpOpt,
    count: Optional[int] = CountOpt,
    m: Optional[int] = MOpt,
    generator: Optional[str] = GeneratorOpt,
    out: Optional[str] = OutOpt,
):
    """Score analysed traces and write the evaluation report."""
    config = _config("evaluate", config_file, alpha, base_exp, count, m, generator, out)
    result = run_evaluate(config)
    _fail_on_error(result)
    _print_verdict(result)


@app.command()
@handle_errors
def run(
    config_file: Optional[str] = ConfigOpt,
    alpha: Optional[float] = AlphaOpt,
    base_exp: Optional[int] = BaseExpOpt,
    count: Optional[int] = CountOpt,
    m: Optional[int] = MOpt,
    generator: Optional[str] = GeneratorOpt,
    hash_name: Optional[str] = HashOpt,
    workers: Optional[int] = WorkersOpt,
    out: Optional[str] = OutOpt,
):
    """Generate, analyze and evaluate in one go."""
    config = _config("run", config_file, alpha, base_exp, count, m, generator, out,
                     hash=hash_name, workers=workers)
    result = audit_pipeline.run(
        config, on_stage=lambda name, stage: console.print(f"[dim]{name}: {stage['status']}[/dim]")
    )
    _fail_on_error(result["stages"][-1] if result["status"] == "error" else result)
    _print_verdict(result["stages"][-1])


@app.command()
def version():
    """Print the toolkit version."""
    console.print(__version__)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code (usage errors map to 1)."""
    load_dotenv()
    try:
        rv = app(args=argv if argv is not None else sys.argv[1:], standalone_mode=False)
    except click.exceptions.UsageError as e:
        console.print(f"[red]Usage error:[/red] {e.format_message()}")
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
