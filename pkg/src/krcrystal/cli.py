"""Command-line interface: graphs, Phi, fill, sigma and the verification suites."""

from __future__ import annotations

import json
import sys
from typing import Any

import click

from .affine import KRElement, affine_graph, kr_crystal, rc_crystal_single, sigma, sigma_rc
from .bijection import fill, phi
from .harness import DEFAULT_CAPS, SUITE_GROUPS, SUITES, Caps, CapExceeded, gating_ok, run_suite, two_factor_specs
from .rigged import RiggedConfiguration, TensorSpec, Validity, is_valid
from .serialize import graph_to_dot, graph_to_json, rc_from_json, tableau_from_json, to_json
from .tableaux import ClosureBudgetExceeded, KNTableau


def _emit(data: Any) -> None:
    click.echo(json.dumps(data))


def _load(path: str) -> Any:
    with click.open_file(path) as fh:
        return json.load(fh)


def _valid_rc(rc: RiggedConfiguration, hint: str) -> RiggedConfiguration:
    if is_valid(rc) is Validity.INVALID:
        raise click.BadParameter("a rigging exceeds its vacancy number", param_hint=hint)
    return rc


n_opt = click.option("--n", "n", type=click.IntRange(4), required=True, help="Rank of D_n.")
r_opt = click.option("--r", "r", type=click.IntRange(1), required=True, help="Node of the KR crystal.")
s_opt = click.option("--s", "s", type=click.IntRange(1), required=True, help="Number of columns.")
model_opt = click.option("--model", type=click.Choice(["kn", "rc"]), required=True)


@click.group()
def main() -> None:
    """Kirillov-Reshetikhin crystals of type D_n^(1) in the tableau and rigged configuration models."""


@main.command()
@model_opt
@n_opt
@r_opt
@s_opt
@click.option("--affine", is_flag=True, help="Include 0-arrows.")
@click.option("--out", type=click.Choice(["dot", "json"]), default="json", show_default=True)
def graph(model: str, n: int, r: int, s: int, affine: bool, out: str) -> None:
    """Emit the crystal graph of B^{r,s}."""
    if r > n:
        raise click.BadParameter("need r <= n", param_hint="--r")
    try:
        g = (kr_crystal if model == "kn" else rc_crystal_single)(n, r, s)
    except ClosureBudgetExceeded as exc:
        raise click.ClickException(str(exc)) from exc
    if affine:
        g = affine_graph(g, n)
    if out == "dot":
        click.echo(graph_to_dot(g), nl=False)
    else:
        _emit(graph_to_json(g))


@main.command("phi")
@click.option("--spec", required=True, help='Tensor factors as "r1,s1;r2,s2;...".')
@click.option("--rc", "rc_path", type=click.Path(exists=True, allow_dash=True), required=True)
@click.option("--n", "n", type=click.IntRange(4), default=None, help="Rank; defaults to the number of partitions.")
def phi_cmd(spec: str, rc_path: str, n: int | None) -> None:
    """Apply Phi to a rigged configuration; prints the tensor product of KR tableaux."""
    rc = _valid_rc(rc_from_json(_load(rc_path), TensorSpec.parse(spec), n), "--rc")
    try:
        _emit(to_json(phi(rc)))
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc


@main.command("fill")
@n_opt
@r_opt
@s_opt
@click.option("--tableau", "path", type=click.Path(exists=True, allow_dash=True), required=True)
def fill_cmd(n: int, r: int, s: int, path: str) -> None:
    """Convert a KN tableau of B^{r,s} to its rectangular KR tableau."""
    t = tableau_from_json(_load(path), n, KNTableau)
    try:
        _emit(to_json(fill(t, r, s)))
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc


@main.command("sigma")
@model_opt
@n_opt
@r_opt
@s_opt
@click.option("--in", "path", type=click.Path(exists=True, allow_dash=True), required=True)
def sigma_cmd(model: str, n: int, r: int, s: int, path: str) -> None:
    """Apply the involution exchanging the 0- and 1-arrows of B^{r,s}."""
    data = _load(path)
    try:
        if model == "kn":
            _emit(to_json(sigma(KRElement(r, s, tableau_from_json(data, n, KNTableau))).tableau))
        else:
            _emit(to_json(sigma_rc(_valid_rc(rc_from_json(data, TensorSpec.single(r, s), n), "--in"))))
    except (KeyError, ValueError) as exc:
        raise click.ClickException(f"input is not an element of B^{{{r},{s}}}: {exc}") from exc


@main.command()
@click.option(
    "--suite",
    type=click.Choice(sorted({*SUITES, *SUITE_GROUPS, "corpus"})),
    default="all",
    show_default=True,
)
@click.option("--max-n", type=int, default=DEFAULT_CAPS.max_n, show_default=True)
@click.option("--max-r", type=int, default=DEFAULT_CAPS.max_r, show_default=True)
@click.option("--max-s", type=int, default=DEFAULT_CAPS.max_s, show_default=True)
@click.option("--max-boxes", type=int, default=DEFAULT_CAPS.max_boxes, show_default=True)
@click.option("--max-vertices", type=int, default=DEFAULT_CAPS.max_vertices, show_default=True)
@click.option("--exhaustive", is_flag=True, help="Tensor suites: every two-factor product at n=4 within --max-boxes.")
@click.option("--jobs", type=click.IntRange(1), default=1, show_default=True, help="Worker processes.")
def verify(
    suite: str, max_n: int, max_r: int, max_s: int, max_boxes: int, max_vertices: int, exhaustive: bool, jobs: int
) -> None:
    """Run verification suites; exit status 0 iff every gating suite passes."""
    caps = Caps(max_n, max_r, max_s, max_boxes, max_vertices)
    reports = []
    for name in SUITE_GROUPS.get(suite, [suite]):
        instances = None
        if exhaustive and name in ("intertwine", "rmatrix"):
            instances = [(4, spec) for spec in two_factor_specs(4, max_boxes)]
        try:
            rep = run_suite(name, caps, instances, jobs)
        except CapExceeded as exc:
            raise click.ClickException(str(exc)) from exc
        click.echo(rep.summary(), err=True)
        reports.append(rep)
    _emit([r.to_json() for r in reports])
    sys.exit(0 if gating_ok(reports) else 1)


if __name__ == "__main__":
    main()
