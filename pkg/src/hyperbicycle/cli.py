"""Command-line interface for building, analyzing and verifying hyperbicycle codes."""

import json
from pathlib import Path
from typing import Annotated

import typer
import yaml
from rich.console import Console
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from hyperbicycle.api import QuantumCode, load_code
from hyperbicycle.catalog import CATALOG, get_entry, select_entries, verify_entry
from hyperbicycle.classical import circulant, classical_params, transposed_params
from hyperbicycle.config import get_settings, tool_version
from hyperbicycle.exporters import EXPORTERS, write_table_csv
from hyperbicycle.layout import build_layout, render_svg, render_text
from hyperbicycle.logging import setup_logging
from hyperbicycle.models import FAMILIES, CodeSpecModel, FileBlock
from hyperbicycle.parser import load_spec, read_matrix, spec_from_model
from hyperbicycle.poly import BinPoly

console = Console()
app = typer.Typer(
    name="hyperbicycle",
    help="Construct and analyze hyperbicycle quantum LDPC codes and their special cases.",
    rich_markup_mode="rich",
)

# set by the global options callback
_state: dict[str, int | None] = {"seed": None, "workers": None}


@app.callback()
def main_options(
    workers: Annotated[
        int | None,
        typer.Option("--workers", "-w", help="Worker processes for randomized search"),
    ] = None,
    seed: Annotated[
        int | None, typer.Option("--seed", help="Seed for all randomized routines")
    ] = None,
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Debug logging")] = False,
    quiet: Annotated[bool, typer.Option("--quiet", "-q", help="Only log errors")] = False,
):
    """Global options shared by every command."""
    setup_logging(verbose=verbose, quiet=quiet)
    settings = get_settings()
    _state["seed"] = settings.seed if seed is None else seed
    _state["workers"] = settings.workers if workers is None else workers


def _seed() -> int:
    return _state["seed"] if _state["seed"] is not None else get_settings().seed


def _workers() -> int:
    return _state["workers"] if _state["workers"] is not None else get_settings().workers


def _matrix_or_poly(value: str | None) -> list[str] | FileBlock | str | None:
    """A flag value naming an existing file is a matrix file; anything else a polynomial."""
    if value is None:
        return None
    return FileBlock(file=value) if Path(value).is_file() else value


def _load_input(
    source: str | None, gx: str | None = None, gz: str | None = None, h: str | None = None
) -> QuantumCode:
    if source is not None:
        return load_code(source)
    return QuantumCode.from_matrix_files(gx=gx, gz=gz, h=h)


def _fmt(x: int | None) -> str:
    return "∞" if x is None else str(x)


@app.command("construct")
def construct(
    family: Annotated[
        str | None,
        typer.Option("--family", "-f", help=f"Code family: {', '.join(FAMILIES)}"),
    ] = None,
    spec: Annotated[str | None, typer.Option("--spec", "-s", help="JSON spec file")] = None,
    f1: Annotated[str | None, typer.Option("--f1", help="First polynomial, e.g. 1+x^3")] = None,
    f2: Annotated[str | None, typer.Option("--f2", help="Second polynomial")] = None,
    n: Annotated[int | None, typer.Option("--n", help="Circulant size")] = None,
    h1: Annotated[
        str | None, typer.Option("--h1", help="First matrix file or check polynomial")
    ] = None,
    h2: Annotated[
        str | None, typer.Option("--h2", help="Second matrix file or check polynomial")
    ] = None,
    n1: Annotated[int | None, typer.Option("--n1", help="Length of the first cyclic code")] = None,
    n2: Annotated[int | None, typer.Option("--n2", help="Length of the second cyclic code")] = None,
    c: Annotated[int | None, typer.Option("--c", help="Number of blocks")] = None,
    chi: Annotated[int, typer.Option("--chi", help="Boundary shift, coprime to c")] = 1,
    variant: Annotated[int | None, typer.Option("--variant", help="Tensor-product variant 1..4")] = None,
    size: Annotated[int | None, typer.Option("--L", help="Lattice size of tensor-product codes")] = None,
    out: Annotated[str, typer.Option("--out", "-o", help="Output directory")] = ".",
    name: Annotated[str, typer.Option("--name", help="Base name of the output files")] = "code",
):
    """Build a code and write its check matrices (dense01 and alist) plus a JSON code file.

    Examples:

        # Generalized bicycle code [[10,2]]
        hyperbicycle construct --family generalized-bicycle --f1 1+x^3 --f2 x+x^2 --n 5

        # Tensor-product code on a 2x2x2 lattice
        hyperbicycle construct --family haah --variant 1 --L 2

        # Hyperbicycle code from a spec file
        hyperbicycle construct --spec spec.json --out build/
    """
    try:
        with console.status("[bold blue]Constructing code..."):
            if spec is not None:
                qc = QuantumCode.from_spec_file(spec)
            else:
                if family is None:
                    raise ValueError("give --spec or --family")
                model = CodeSpecModel.model_validate(
                    {
                        "family": family,
                        "name": name,
                        "f1": f1,
                        "f2": f2,
                        "n": n,
                        "h1": _matrix_or_poly(h1),
                        "h2": _matrix_or_poly(h2),
                        "n1": n1,
                        "n2": n2,
                        "c": c,
                        "chi": chi,
                        "variant": variant,
                        "L": size,
                    }
                )
                qc = QuantumCode.from_model(model)
            base = Path(out) / name
            written = qc.export(base, "dense01") + qc.export(base, "alist")
            written += qc.export(base.with_suffix(".json"), "json")

        info_text = f"""[bold]{qc.family}[/bold]

📐 N: [green]{qc.n}[/green]
🔑 K (from ranks): [green]{qc.k}[/green]
✓ Checks commute"""
        console.print(Panel(info_text, title="[bold]Constructed[/bold]", border_style="blue"))
        for path in written:
            console.print(f"  [cyan]{path}[/cyan]")

    except Exception as e:
        console.print(f"[red]❌ Error: {e}[/red]")
        raise typer.Exit(1) from e


@app.command("analyze")
def analyze(
    source: Annotated[
        str | None, typer.Argument(help="JSON spec or json/yaml code file")
    ] = None,
    gx: Annotated[str | None, typer.Option("--gx", help="X-check matrix file")] = None,
    gz: Annotated[str | None, typer.Option("--gz", help="Z-check matrix file")] = None,
    h: Annotated[str | None, typer.Option("--h", help="Non-CSS check matrix file (A|B)")] = None,
    budget: Annotated[
        int | None,
        typer.Option("--distance-budget", "-b", help="Meet-in-the-middle half-set budget"),
    ] = None,
    rand_iters: Annotated[
        int | None, typer.Option("--rand-iters", help="Randomized search iterations")
    ] = None,
    no_distance: Annotated[
        bool, typer.Option("--no-distance", help="Skip the distance computation")
    ] = False,
    output: Annotated[
        str | None, typer.Option("--output", "-o", help="Write the report (.json or .yaml)")
    ] = None,
):
    """Compute K by every applicable method, the distance interval and theoretical bounds.

    Exits with status 1 when any internal cross-check fails.

    Examples:

        # Analyze a spec and save the report
        hyperbicycle analyze spec.json --output report.json

        # Analyze explicit check matrices
        hyperbicycle analyze --gx code_gx.txt --gz code_gz.txt
    """
    try:
        with console.status("[bold blue]Analyzing code..."):
            qc = _load_input(source, gx, gz, h)
            report = qc.analyze(
                budget=budget,
                rand_iters=rand_iters,
                seed=_seed(),
                workers=_workers(),
                with_distance=not no_distance,
            )

        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Quantity", style="cyan")
        table.add_column("Value", style="green")
        table.add_row("family", str(report.provenance.get("family", "custom")))
        table.add_row("N", str(report.n))
        table.add_row("K (rank)", str(report.k))
        if report.k_report is not None and report.k_report.k_class_sum is not None:
            table.add_row("K (class sum)", str(report.k_report.k_class_sum))
            table.add_row("K (symmetric form)", str(report.k_report.k_symmetric_form))
        if report.distance is not None:
            table.add_row("D", report.distance.interval)
            for key, method in report.distance.methods.items():
                table.add_row(f"  {key}", method)
        if report.bounds is not None:
            lo, hi = report.bounds.css_interval
            table.add_row("D (theory)", f"{_fmt(lo)}..{_fmt(hi)}")
        for check, ok in report.cross_checks.items():
            table.add_row(f"check {check}", "✓" if ok else "[red]✗[/red]")
        console.print(table)

        if output:
            path = Path(output)
            path.parent.mkdir(parents=True, exist_ok=True)
            data = report.to_dict()
            with path.open("w", encoding="utf-8") as f:
                if path.suffix in (".yaml", ".yml"):
                    yaml.dump(data, f, default_flow_style=False, allow_unicode=True, sort_keys=False)
                else:
                    json.dump(data, f, indent=2, default=str, ensure_ascii=False)
            console.print(f"[green]✓ Report written to {path}[/green]")

    except Exception as e:
        console.print(f"[red]❌ Error: {e}[/red]")
        raise typer.Exit(1) from e

    if not report.ok:
        console.print("[red]❌ Cross-check failed[/red]")
        raise typer.Exit(1)


@app.command("distance")
def distance(
    source: Annotated[str | None, typer.Argument(help="JSON spec or json/yaml code file")] = None,
    gx: Annotated[str | None, typer.Option("--gx", help="X-check matrix file")] = None,
    gz: Annotated[str | None, typer.Option("--gz", help="Z-check matrix file")] = None,
    h: Annotated[str | None, typer.Option("--h", help="Non-CSS check matrix file (A|B)")] = None,
    budget: Annotated[
        int | None,
        typer.Option("--distance-budget", "-b", help="Meet-in-the-middle half-set budget"),
    ] = None,
    rand_iters: Annotated[
        int | None, typer.Option("--rand-iters", help="Randomized search iterations")
    ] = None,
    witness: Annotated[
        str | None, typer.Option("--witness", help="Write the lightest logical found (dense01)")
    ] = None,
):
    """Distance interval [d_lo, d_hi] with a verified witness.

    Examples:

        hyperbicycle distance spec.json --witness logical.txt
        hyperbicycle --seed 7 distance --gx gx.alist --gz gz.alist
    """
    try:
        with console.status("[bold blue]Searching for light logical operators..."):
            qc = _load_input(source, gx, gz, h)
            result = qc.distance(budget, rand_iters, _seed(), _workers())

        if not result.applicable:
            console.print("[yellow]K = 0: distance not applicable[/yellow]")
            return
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Type", style="cyan")
        table.add_column("d_lo", justify="right", style="green")
        table.add_column("d_hi", justify="right", style="green")
        table.add_column("Lower by", style="yellow")
        table.add_column("Upper by", style="yellow")
        for side in result.sides:
            hi = "∞" if side.d_hi == float("inf") else str(int(side.d_hi))
            table.add_row(side.kind, str(int(side.d_lo)), hi, side.lower_method, side.upper_method)
        console.print(table)
        console.print(f"[bold][[{qc.n},{qc.k},{result.interval_str()}]][/bold]")

        if witness and result.witness is not None:
            qc.export_witness(witness, result)
            console.print(f"[green]✓ Witness written to {witness}[/green]")

    except Exception as e:
        console.print(f"[red]❌ Error: {e}[/red]")
        raise typer.Exit(1) from e


@app.command("classical")
def classical(
    matrix: Annotated[str | None, typer.Argument(help="Check matrix file (dense01 or alist)")] = None,
    poly: Annotated[
        str | None, typer.Option("--poly", "-p", help="Check polynomial of a circulant")
    ] = None,
    n: Annotated[int | None, typer.Option("--n", help="Circulant size")] = None,
    transposed: Annotated[
        bool, typer.Option("--transposed", "-t", help="Also report the transposed code")
    ] = False,
    enum_cap: Annotated[
        int | None, typer.Option("--enum-cap", help="Enumerate all codewords up to this k")
    ] = None,
):
    """Parameters [n, k, d] of the classical code ker H.

    Examples:

        # Hamming-like cyclic code
        hyperbicycle classical --poly 1+x+x^3 --n 7 --transposed

        hyperbicycle classical H.alist
    """
    try:
        with console.status("[bold blue]Computing classical parameters..."):
            if matrix is not None:
                H = read_matrix(matrix)
            elif poly is not None and n is not None:
                H = circulant(n, BinPoly.parse(poly))
            else:
                raise ValueError("give a matrix file, or --poly with --n")
            rows = [("ker H", classical_params(H, enum_cap=enum_cap, seed=_seed()))]
            if transposed:
                rows.append(("ker H^T", transposed_params(H, enum_cap=enum_cap, seed=_seed())))

        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Code", style="cyan")
        table.add_column("Parameters", style="green")
        table.add_column("Method", style="yellow")
        for label, params in rows:
            table.add_row(label, str(params), params.method)
        console.print(table)

    except Exception as e:
        console.print(f"[red]❌ Error: {e}[/red]")
        raise typer.Exit(1) from e


@app.command("verify-paper")
def verify_paper(
    tier: Annotated[str, typer.Option("--tier", help="quick or full")] = "quick",
    entries: Annotated[
        list[str] | None, typer.Option("--entry", "-e", help="Only these catalog entries")
    ] = None,
    csv: Annotated[str | None, typer.Option("--csv", help="Also write the table as CSV")] = None,
):
    """Rebuild every catalog code and compare N, K and D with the expected values.

    The quick tier checks N and K everywhere and skips distances expected to take
    longer than the configured quick-tier budget. Exits with status 1 on any mismatch.

    Examples:

        hyperbicycle verify-paper
        hyperbicycle verify-paper --tier full --csv results.csv
        hyperbicycle verify-paper --entry toric-3 --entry rotated-bicycle-t1
    """
    try:
        if tier not in ("quick", "full"):
            raise ValueError(f"unknown tier '{tier}'; expected quick or full")
        selected = select_entries(entries)
        checks = []
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=console,
        ) as progress:
            task = progress.add_task("Verifying catalog...", total=len(selected))
            for entry in selected:
                progress.update(task, description=f"Verifying {entry.name}...")
                checks.append(
                    verify_entry(entry, tier, seed=_seed(), workers=_workers())  # type: ignore[arg-type]
                )
                progress.update(task, advance=1)

        table = Table(show_header=True, header_style="bold magenta")
        for col in ("Entry", "N", "K", "D expected", "D computed", "Status", "Seconds"):
            table.add_column(col, style="cyan" if col == "Entry" else None)
        for chk in checks:
            n_cell = str(chk.n_computed) if chk.n_computed == chk.n_expected else f"[red]{chk.n_computed}≠{chk.n_expected}[/red]"
            if chk.k_computed != chk.k_target:
                k_cell = f"[red]{chk.k_computed}≠{chk.k_target}[/red]"
            elif chk.deviation:
                k_cell = f"[yellow]{chk.k_computed} (listed {chk.k_expected})[/yellow]"
            else:
                k_cell = str(chk.k_computed)
            if not chk.ok:
                status = "[red]✗[/red]"
            elif chk.deviation:
                status = "[yellow]≈[/yellow]"
            else:
                status = "[green]✓[/green]"
            d_cell = chk.d_computed or f"[dim]{chk.skipped or '-'}[/dim]"
            if chk.error:
                d_cell = f"[red]{chk.error}[/red]"
            table.add_row(
                chk.name,
                n_cell,
                k_cell,
                chk.d_expected,
                d_cell,
                status,
                f"{chk.seconds:.1f}",
            )
        console.print(table)
        for chk in checks:
            if chk.deviation:
                console.print(f"[yellow]≈ {chk.name}: {chk.deviation}[/yellow]")

        if csv:
            write_table_csv([chk.to_dict() for chk in checks], Path(csv))
            console.print(f"[green]✓ Table written to {csv}[/green]")

    except Exception as e:
        console.print(f"[red]❌ Error: {e}[/red]")
        raise typer.Exit(1) from e

    failed = [chk.name for chk in checks if not chk.ok]
    if failed:
        console.print(f"[red]❌ {len(failed)} mismatch(es): {', '.join(failed)}[/red]")
        raise typer.Exit(1)
    console.print(f"[green]✓ All {len(checks)} entries match[/green]")


@app.command("catalog")
def catalog(
    name: Annotated[str | None, typer.Argument(help="Show one entry in detail")] = None,
):
    """List the built-in reference codes.

    Examples:

        hyperbicycle catalog
        hyperbicycle catalog repeated-294
    """
    try:
        if name is not None:
            entry = get_entry(name)
            info_text = f"""[bold]{entry.name}[/bold]

🧩 Family: [cyan]{entry.family}[/cyan]
🧪 Recipe: [cyan]{entry.recipe}[/cyan]
📐 [[N,K,D]]: [green][[{entry.n},{entry.k},{entry.d_expected}]][/green]
🎯 Tier: [yellow]{entry.tier}[/yellow]
📝 {entry.note}"""
            if entry.deviation:
                info_text += f"\n⚠️  Rebuilt K={entry.k_reproduced}: {entry.deviation}"
            console.print(Panel(info_text, title="[bold]Catalog Entry[/bold]", border_style="blue"))
            return

        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Name", style="cyan")
        table.add_column("Family", style="yellow")
        table.add_column("[[N,K,D]]", style="green")
        table.add_column("Tier")
        for entry in CATALOG:
            table.add_row(entry.name, entry.family, f"[[{entry.n},{entry.k},{entry.d_expected}]]", entry.tier)
        console.print(table)

    except Exception as e:
        console.print(f"[red]❌ Error: {e}[/red]")
        raise typer.Exit(1) from e


@app.command("layout")
def layout(
    spec: Annotated[str, typer.Argument(help="JSON spec with square blocks")],
    out: Annotated[str, typer.Option("--out", help="Diagram format: txt or svg")] = "txt",
    output: Annotated[
        str | None, typer.Option("--output", "-o", help="Write to a file instead of stdout")
    ] = None,
):
    """Draw the two sublattices with one generator of each type and the logical region.

    Examples:

        hyperbicycle layout spec.json
        hyperbicycle layout spec.json --out svg --output layout.svg
    """
    try:
        if out not in ("txt", "svg"):
            raise ValueError(f"unknown format '{out}'; expected txt or svg")
        with console.status("[bold blue]Laying out code..."):
            path = Path(spec)
            lay = build_layout(spec_from_model(load_spec(path), path.parent))
            text = render_svg(lay) if out == "svg" else render_text(lay)

        if output:
            Path(output).parent.mkdir(parents=True, exist_ok=True)
            Path(output).write_text(text, encoding="utf-8")
            console.print(f"[green]✓ Layout written to {output}[/green]")
        else:
            console.print(text, markup=False, highlight=False)

    except Exception as e:
        console.print(f"[red]❌ Error: {e}[/red]")
        raise typer.Exit(1) from e


@app.command("export")
def export(
    source: Annotated[str | None, typer.Argument(help="JSON spec or json/yaml code file")] = None,
    output: Annotated[str, typer.Option("--output", "-o", help="Output file or base name")] = "code",
    format: Annotated[
        str, typer.Option("--format", "-f", help=f"Export format ({', '.join(EXPORTERS)})")
    ] = "json",
    gx: Annotated[str | None, typer.Option("--gx", help="X-check matrix file")] = None,
    gz: Annotated[str | None, typer.Option("--gz", help="Z-check matrix file")] = None,
    h: Annotated[str | None, typer.Option("--h", help="Non-CSS check matrix file (A|B)")] = None,
):
    """Convert a code between dense01, alist, json, yaml and csv.

    Examples:

        # Matrices to a single JSON code file
        hyperbicycle export --gx gx.txt --gz gz.txt --output code.json

        # JSON code file to alist (writes code_gx.alist and code_gz.alist)
        hyperbicycle export code.json --format alist --output code
    """
    try:
        with console.status(f"[bold blue]Exporting to {format}..."):
            qc = _load_input(source, gx, gz, h)
            written = qc.export(output, format)

        console.print(f"[green]✓ Exported [[{qc.n},{qc.k}]] to {len(written)} file(s)[/green]")
        for path in written:
            console.print(f"  [cyan]{path}[/cyan]")

    except Exception as e:
        console.print(f"[red]❌ Error: {e}[/red]")
        raise typer.Exit(1) from e


@app.command("version")
def version():
    """Show version information."""
    try:
        console.print(
            Panel(
                f"[bold]hyperbicycle[/bold] v{tool_version()}\n\nConstruct and analyze hyperbicycle\nquantum LDPC codes.",
                title="[bold]Version Info[/bold]",
                border_style="blue",
            )
        )

    except Exception as e:
        console.print(f"[red]❌ Error: {e}[/red]")
        raise typer.Exit(1) from e


if __name__ == "__main__":
    app()
