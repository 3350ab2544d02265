import subprocess

from funlog import log_calls
from rich import get_console, reconfigure
from rich import print as rprint

SRC_PATHS = ["src", "tests", "devtools"]
DOC_PATHS = ["README.md", "PYTHON_API.md", "development.md", "DESIGN.md"]

# GF(2) shorthand that codespell would otherwise "fix"
CODESPELL_IGNORE = "nd,ans,fo,te"

STEPS: list[tuple[str, list[str]]] = [
    (
        "spelling",
        ["codespell", "--write-changes", "-L", CODESPELL_IGNORE, *SRC_PATHS, *DOC_PATHS],
    ),
    ("ruff check", ["ruff", "check", "--fix", *SRC_PATHS]),
    ("ruff format", ["ruff", "format", *SRC_PATHS]),
    ("types", ["basedpyright", "--stats", *SRC_PATHS]),
]


reconfigure(emoji=not get_console().options.legacy_windows)  # No emojis on legacy windows.


def main() -> int:
    rprint()
    failed = [label for label, cmd in STEPS if run(cmd)]
    rprint()

    if failed:
        rprint(f"[bold red]:x: Lint failed: {', '.join(failed)}[/bold red]")
    else:
        rprint("[bold green]:white_check_mark: Lint passed![/bold green]")
    rprint()

    return len(failed)


@log_calls(level="warning", show_timing_only=True)
def run(cmd: list[str]) -> int:
    rprint()
    rprint(f"[bold green]>> {' '.join(cmd)}[/bold green]")
    try:
        subprocess.run(cmd, text=True, check=True)
    except KeyboardInterrupt:
        rprint("[yellow]Keyboard interrupt - Cancelled[/yellow]")
        return 1
    except subprocess.CalledProcessError as e:
        rprint(f"[bold red]Error: {e}[/bold red]")
        return 1
    return 0


if __name__ == "__main__":
    exit(main())
