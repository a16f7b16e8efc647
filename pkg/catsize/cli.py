"""
catsize - Command line
`catsize run`, `catsize reproduce-paper`, `catsize exact` and `catsize materials`
"""

import logging
import sys

from typing import Optional, Tuple

import click

from .estimators import material_table
from .models import CatSizeError, ExitCodes, ReportFormat, ScenarioError, ToolkitConfig
from .scenarios import (
    exact_report, load_scenario, load_state, render, render_reproduction, reproduce_paper, run_scenarios
)


logger = logging.getLogger(__name__)

FORMAT_OPTION = click.option(
    "--format", "fmt",
    type=click.Choice([f.value for f in ReportFormat]),
    default=ReportFormat.TABLE.value,
    show_default=True,
    help="Output format"
)

SCENARIO_PATH = click.Path(exists=True, dir_okay=False, readable=True)


class CatSizeGroup(click.Group):
    """Click group that maps failures onto the catsize exit codes"""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            result = super().main(
                args=args, prog_name=prog_name, complete_var=complete_var, standalone_mode=False, **extra
            )
            code = result if isinstance(result, int) else ExitCodes.SUCCESS
        except click.UsageError as e:
            e.show()
            code = ExitCodes.USAGE_ERROR
        except ScenarioError as e:
            click.echo(e.format(), err=True)
            code = ExitCodes.VALIDATION_ERROR
        except CatSizeError as e:
            click.echo(f"[{e.code}] {e}", err=True)
            code = ExitCodes.DOMAIN_ERROR
        except click.ClickException as e:
            e.show()
            code = e.exit_code
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = ExitCodes.USAGE_ERROR

        if not standalone_mode:
            return code
        sys.exit(code)


@click.group(cls=CatSizeGroup)
@click.version_option(version=ToolkitConfig.TOOLKIT_VERSION, prog_name="catsize")
@click.option("--verbose", "-v", is_flag=True, help="Log computation details")
def catsize(verbose: bool):
    """Cat-size estimates for quantum superpositions of many-particle states."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s"
    )


@catsize.command()
@click.argument("files", nargs=-1, required=True, type=SCENARIO_PATH)
@FORMAT_OPTION
def run(files: Tuple[str, ...], fmt: str):
    """Validate and evaluate scenario FILES."""
    try:
        scenarios = [load_scenario(path) for path in files]
    except OSError as e:
        raise click.FileError(e.filename or "", hint=e.strerror)
    logger.info(f"🚀 Running {len(scenarios)} scenario(s)")

    reports = run_scenarios(scenarios)
    if fmt == ReportFormat.JSON.value and len(reports) > 1:
        click.echo("[\n" + ",\n".join(render(r, ReportFormat.JSON) for r in reports) + "\n]")
        return
    click.echo("\n\n".join(render(r, ReportFormat(fmt)) for r in reports))


@catsize.command("reproduce-paper")
@FORMAT_OPTION
def reproduce_paper_command(fmt: str):
    """Recompute every quoted figure next to its quoted value."""
    reproduction = reproduce_paper()
    logger.info(f"✅ Reproduced {len(reproduction.rows)} figures")
    click.echo(render_reproduction(reproduction, ReportFormat(fmt)))


@catsize.command()
@click.option("--state-a", "state_a", required=True, type=SCENARIO_PATH, help="First state file")
@click.option("--state-b", "state_b", required=True, type=SCENARIO_PATH, help="Second state file")
@click.option("--name", default="exact", show_default=True, help="Name echoed into the report")
@FORMAT_OPTION
def exact(state_a: str, state_b: str, name: str, fmt: str):
    """Compare two exact many-body states."""
    a, b = load_state(state_a), load_state(state_b)
    click.echo(render(exact_report(a, b, name=name), ReportFormat(fmt)))


@catsize.command()
@click.option("--name", default=None, help="Show a single material")
def materials(name: Optional[str]):
    """List the material table (built-ins plus $CATSIZE_MATERIALS)."""
    table = material_table()
    selected = table.values() if name is None else [m for m in table.values() if m.name.casefold() == name.casefold()]
    if not selected:
        raise click.BadParameter(f"unknown material '{name}'", param_hint="--name")
    for material in selected:
        nuclei = " ".join(f"{n.symbol}{n.nucleons}x{n.per_formula_unit}" for n in material.nuclei)
        click.echo(
            f"{material.name:<6} rho={material.mass_density:g} g/cm^3  M={material.molar_mass:g} g/mol  "
            f"e/fu={material.electrons_per_formula_unit}  n/fu={material.nucleons_per_formula_unit}  "
            f"a={material.cell_dimension_a:g} cm  {nuclei}"
        )


def main():
    """Console entry point"""
    catsize()


if __name__ == "__main__":
    main()
