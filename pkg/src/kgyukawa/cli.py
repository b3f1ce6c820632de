"""Command-line interface: single-state solve, table reproduction,
degeneracy scan, wavefunction export, potential comparison, eigensolver
cross-check and limit checks, with CSV or JSON output.

Exit codes: 0 success, 1 invalid input, 2 no solution / physics error,
3 internal numeric failure.
"""
from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Optional

import click

from .errors import (
    ComplexChannel,
    ConstraintViolation,
    ConvergenceFailure,
    DomainError,
    KgYukawaError,
    NegativeDiscriminant,
    NoRootInBracket,
    NonFinite,
    NormalizationFailure,
    OutOfDomain,
)
from .limits import NonRelParams, coulomb_energy, nonrel_energy, nonrel_limit_of_relativistic
from .oracle import cross_validate
from .params import ParticleParams, PotentialParams, QuantumNumbers, degeneracy_partner
from .potentials import profile
from .solver import (
    SolverOptions,
    count_nodes,
    default_radial_grid,
    radial_wavefunction,
    solve_energy,
    solve_table,
)

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_NO_SOLUTION = 2
EXIT_NUMERIC_FAILURE = 3


def fmt_energy(x: float) -> str:
    """Energies print with 8 decimal places (table convention)."""
    return f"{x:.8f}"


def fmt_num(x: Optional[float]) -> str:
    """Locale-independent 9-significant-digit formatting for other columns."""
    if x is None:
        return ""
    return f"{x:.9g}"


def _load_config(path: Optional[str]) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise DomainError(f"config {path} must hold a JSON object")
    return data


def _merged(ctx: click.Context, cfg: dict, name: str):
    """Config supplies values for flags not given on the command line."""
    value = ctx.params.get(name)
    src = ctx.get_parameter_source(name)
    if src is not None and src.name == "COMMANDLINE":
        return value
    if name in cfg:
        return cfg[name]
    return value


def _potential_from(ctx, cfg) -> PotentialParams:
    v0 = _merged(ctx, cfg, "v0")
    s0 = _merged(ctx, cfg, "s0")
    beta = _merged(ctx, cfg, "beta")
    a = _merged(ctx, cfg, "a")
    if v0 is None or a is None:
        raise DomainError("--v0 and --a are required")
    if (s0 is None) == (beta is None):
        raise DomainError("exactly one of --s0 or --beta must be given")
    if beta is not None:
        return PotentialParams.from_beta(v0=v0, beta=beta, a=a)
    return PotentialParams(v0=v0, s0=s0, a=a)


def _mass_from(ctx, cfg) -> ParticleParams:
    mass = _merged(ctx, cfg, "mass")
    return ParticleParams(mass=mass)


def _qn_from(ctx, cfg) -> QuantumNumbers:
    return QuantumNumbers(
        n=_merged(ctx, cfg, "n"), l=_merged(ctx, cfg, "l"), d=_merged(ctx, cfg, "dim")
    )


def _opts_from(ctx, cfg) -> SolverOptions:
    return SolverOptions(
        tolerance=_merged(ctx, cfg, "tolerance"),
        scan_points=_merged(ctx, cfg, "scan_points"),
    )


def parse_range(spec: str) -> list[int]:
    """'3:10' (inclusive) or '1,2,3' or a single integer."""
    spec = spec.strip()
    try:
        if ":" in spec:
            lo, hi = spec.split(":", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        if "," in spec:
            return [int(tok) for tok in spec.split(",") if tok.strip()]
        return [int(spec)]
    except ValueError:
        raise DomainError(f"cannot parse range {spec!r}; use LO:HI or a,b,c") from None


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def common_options(f):
    f = click.option("--config", "config_path", type=str, default=None,
                     help="JSON file mirroring the flags; flags override it.")(f)
    f = click.option("--out", "out", type=str, default=None, help="Output file (default stdout).")(f)
    f = click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
                     help="Structured output format.")(f)
    f = click.option("--scan-points", type=int, default=20000, show_default=True)(f)
    f = click.option("--tolerance", type=float, default=5e-14, show_default=True)(f)
    f = click.option("--mass", type=float, default=1.0, show_default=True, help="Rest mass M (fm^-1).")(f)
    f = click.option("--a", "a", type=float, default=None, help="Screening parameter (fm^-1).")(f)
    f = click.option("--beta", type=float, default=None, help="Mixing ratio s0/v0 (alternative to --s0).")(f)
    f = click.option("--s0", type=float, default=None, help="Scalar strength.")(f)
    f = click.option("--v0", type=float, default=None, help="Vector strength.")(f)
    return f


def state_options(f):
    f = click.option("--dim", type=int, default=3, show_default=True)(f)
    f = click.option("--l", "l", type=int, default=0, show_default=True)(f)
    f = click.option("--n", "n", type=int, default=1, show_default=True)(f)
    return f


@click.group()
@click.version_option(package_name="kgyukawa")
def cli():
    """Bound states of the D-dimensional Klein-Gordon equation with
    scalar/vector Yukawa couplings."""


@cli.command()
@common_options
@state_options
@click.pass_context
def solve(ctx, **_kw):
    """Solve a single (n, l, D) state and print energy diagnostics."""
    cfg = _load_config(ctx.params["config_path"])
    pp = _potential_from(ctx, cfg)
    mp = _mass_from(ctx, cfg)
    qn = _qn_from(ctx, cfg)
    opts = _opts_from(ctx, cfg)
    sol = solve_energy(pp, mp, qn, opts)
    if ctx.params["fmt"] == "json":
        payload = {
            "energy": sol.energy,
            "epsilon": sol.epsilon,
            "residual": sol.residual,
            "iterations": sol.iterations,
        }
        _emit(json.dumps(payload, indent=2) + "\n", ctx.params["out"])
    else:
        lines = [
            f"energy = {fmt_energy(sol.energy)}",
            f"epsilon = {fmt_energy(sol.epsilon)}",
            f"residual = {fmt_num(sol.residual)}",
            f"iterations = {sol.iterations}",
        ]
        _emit("\n".join(lines) + "\n", ctx.params["out"])


@cli.command()
@common_options
@click.option("--n-range", type=str, default="1:3", show_default=True)
@click.option("--l-range", type=str, default="0:2", show_default=True)
@click.option("--dim-range", type=str, default="3:10", show_default=True)
@click.option("--threads", type=int, default=1, show_default=True)
@click.pass_context
def table(ctx, **_kw):
    """Solve an energy grid over D x n x l and emit it as CSV/JSON."""
    cfg = _load_config(ctx.params["config_path"])
    pp = _potential_from(ctx, cfg)
    mp = _mass_from(ctx, cfg)
    opts = _opts_from(ctx, cfg)
    n_range = parse_range(_merged(ctx, cfg, "n_range"))
    l_range = parse_range(_merged(ctx, cfg, "l_range"))
    d_range = parse_range(_merged(ctx, cfg, "dim_range"))
    threads = _merged(ctx, cfg, "threads")
    tab = solve_table(pp, mp, n_range, l_range, d_range, opts, threads=threads)
    if ctx.params["fmt"] == "json":
        payload = [
            {
                "dim": c.dim, "n": c.n, "l": c.l,
                "energy": c.energy, "residual": c.residual, "status": c.status,
            }
            for c in tab.cells
        ]
        _emit(json.dumps(payload, indent=2) + "\n", ctx.params["out"])
    else:
        rows = [
            (
                c.dim, c.n, c.l,
                fmt_energy(c.energy) if c.energy is not None else "",
                fmt_num(c.residual),
                c.status,
            )
            for c in tab.cells
        ]
        _emit(_csv_text(tab.CSV_HEADER, rows), ctx.params["out"])


@cli.command()
@common_options
@click.option("--n-range", type=str, default="1:3", show_default=True)
@click.option("--l-range", type=str, default="0:2", show_default=True)
@click.option("--dim-range", type=str, default="3:10", show_default=True)
@click.option("--max-delta", type=float, default=1e-10, show_default=True,
              help="Acceptance threshold on |E - E_partner|.")
@click.pass_context
def degeneracy(ctx, **_kw):
    """Check interdimensional partner energies (n, l+-1, D-+2)."""
    cfg = _load_config(ctx.params["config_path"])
    pp = _potential_from(ctx, cfg)
    mp = _mass_from(ctx, cfg)
    opts = _opts_from(ctx, cfg)
    n_range = parse_range(_merged(ctx, cfg, "n_range"))
    l_range = parse_range(_merged(ctx, cfg, "l_range"))
    d_range = parse_range(_merged(ctx, cfg, "dim_range"))
    rows = []
    worst = 0.0
    for d in d_range:
        for n in n_range:
            for l in l_range:
                qn = QuantumNumbers(n=n, l=l, d=d)
                try:
                    e = solve_energy(pp, mp, qn, opts).energy
                except (NoRootInBracket, ComplexChannel):
                    continue
                for direction in ("up", "down"):
                    try:
                        partner = degeneracy_partner(qn, direction)
                    except OutOfDomain:
                        continue
                    try:
                        e_p = solve_energy(pp, mp, partner, opts).energy
                    except (NoRootInBracket, ComplexChannel):
                        continue
                    delta = abs(e - e_p)
                    worst = max(worst, delta)
                    rows.append(
                        (d, n, l, direction, partner.d, partner.l,
                         fmt_energy(e), fmt_energy(e_p), fmt_num(delta))
                    )
    header = ("dim", "n", "l", "direction", "partner_dim", "partner_l",
              "energy", "partner_energy", "delta")
    if ctx.params["fmt"] == "json":
        payload = [dict(zip(header, row)) for row in rows]
        _emit(json.dumps({"rows": payload, "max_delta": worst}, indent=2) + "\n",
              ctx.params["out"])
    else:
        _emit(_csv_text(header, rows), ctx.params["out"])
    click.echo(f"max |delta| = {fmt_num(worst)}", err=True)
    if worst > ctx.params["max_delta"]:
        raise NoRootInBracket(f"degeneracy violated: max |delta| = {worst}")


@cli.command()
@common_options
@state_options
@click.option("--points", type=int, default=4096, show_default=True)
@click.pass_context
def wavefunction(ctx, **_kw):
    """Export the normalized radial wavefunction as (r, R) samples."""
    cfg = _load_config(ctx.params["config_path"])
    pp = _potential_from(ctx, cfg)
    mp = _mass_from(ctx, cfg)
    qn = _qn_from(ctx, cfg)
    opts = _opts_from(ctx, cfg)
    sol = solve_energy(pp, mp, qn, opts)
    wf = radial_wavefunction(sol, pp, mp, qn, default_radial_grid(sol.epsilon, ctx.params["points"]))
    if ctx.params["fmt"] == "json":
        payload = {
            "energy": sol.energy,
            "jacobi_alpha": wf.jacobi_alpha,
            "jacobi_beta": wf.jacobi_beta,
            "norm": wf.norm,
            "nodes": count_nodes(wf),
            "samples": [[float(r), float(v)] for r, v in wf.samples],
        }
        _emit(json.dumps(payload, indent=2) + "\n", ctx.params["out"])
    else:
        rows = [(fmt_num(r), fmt_num(v)) for r, v in wf.samples]
        _emit(_csv_text(("r", "R"), rows), ctx.params["out"])
    click.echo(f"nodes = {count_nodes(wf)}", err=True)


@cli.command()
@common_options
@click.option("--r-min", type=float, default=0.1, show_default=True)
@click.option("--r-max", type=float, default=20.0, show_default=True)
@click.option("--points", type=int, default=400, show_default=True)
@click.pass_context
def potential(ctx, **_kw):
    """Tabulate the exact potential against its exponential approximant."""
    cfg = _load_config(ctx.params["config_path"])
    v0 = _merged(ctx, cfg, "v0")
    a = _merged(ctx, cfg, "a")
    if v0 is None or a is None:
        raise DomainError("--v0 and --a are required")
    prof = profile(v0, a, ctx.params["r_min"], ctx.params["r_max"], ctx.params["points"])
    if ctx.params["fmt"] == "json":
        payload = [
            {"r": r, "exact": e, "approx": ap, "abs_err": ae,
             "rel_err": None if math.isnan(re) else re}
            for r, e, ap, ae, re in prof.rows()
        ]
        _emit(json.dumps(payload, indent=2) + "\n", ctx.params["out"])
    else:
        rows = [
            (fmt_num(r), fmt_num(e), fmt_num(ap), fmt_num(ae),
             "" if math.isnan(re) else fmt_num(re))
            for r, e, ap, ae, re in prof.rows()
        ]
        _emit(_csv_text(prof.CSV_HEADER, rows), ctx.params["out"])


@cli.command()
@common_options
@state_options
@click.option("--mode", type=click.Choice(["approximated", "exact", "both"]),
              default="approximated", show_default=True)
@click.option("--points", type=int, default=16000, show_default=True)
@click.pass_context
def oracle(ctx, **_kw):
    """Cross-check the quantization-equation energy against the
    finite-difference eigensolver."""
    cfg = _load_config(ctx.params["config_path"])
    pp = _potential_from(ctx, cfg)
    mp = _mass_from(ctx, cfg)
    qn = _qn_from(ctx, cfg)
    modes = ["approximated", "exact"] if ctx.params["mode"] == "both" else [ctx.params["mode"]]
    results = []
    for mode in modes:
        cmp_ = cross_validate(pp, mp, qn, mode=mode, points=ctx.params["points"])
        results.append(cmp_)
    header = ("mode", "e_solver", "status", "eigen_index", "e_oracle",
              "richardson", "delta", "nearest_root", "nearest_delta")
    rows = [
        (
            c.mode, fmt_energy(c.e_solver), c.status, c.eigen_index,
            "" if c.e_oracle is None else fmt_energy(c.e_oracle),
            "" if c.richardson is None else fmt_energy(c.richardson),
            fmt_num(c.delta),
            "" if c.nearest_root is None else fmt_energy(c.nearest_root),
            fmt_num(c.nearest_delta),
        )
        for c in results
    ]
    if ctx.params["fmt"] == "json":
        payload = [dict(zip(header, row)) for row in rows]
        _emit(json.dumps(payload, indent=2) + "\n", ctx.params["out"])
    else:
        _emit(_csv_text(header, rows), ctx.params["out"])
    if any(c.status != "validated" for c in results):
        raise NoRootInBracket("eigensolver did not validate the solver energy; see output")


@cli.command()
@common_options
@state_options
@click.option("--a-sequence", type=str, default="0.002,0.001,0.0005", show_default=True,
              help="Comma-separated screening values for the convergence report.")
@click.pass_context
def limits(ctx, **_kw):
    """Print Schrodinger/Coulomb limit energies and the relativistic
    convergence report."""
    cfg = _load_config(ctx.params["config_path"])
    pp = _potential_from(ctx, cfg)
    mp = _mass_from(ctx, cfg)
    qn = _qn_from(ctx, cfg)
    try:
        a_seq = [float(tok) for tok in ctx.params["a_sequence"].split(",") if tok.strip()]
    except ValueError:
        raise DomainError(f"cannot parse --a-sequence {ctx.params['a_sequence']!r}") from None
    nr = NonRelParams(mu=mp.mass, v0=pp.v0, a=pp.a)
    lines = [
        f"nonrelativistic energy = {fmt_num(nonrel_energy(nr, qn))}",
        f"coulomb energy (a=0) = {fmt_num(coulomb_energy(nr, qn))}",
    ]
    report = nonrel_limit_of_relativistic(pp, mp, qn, a_seq)
    for row in report.rows:
        lines.append(
            f"a = {fmt_num(row.a)}: E_rel = {fmt_energy(row.e_relativistic)}, "
            f"E_rel - M = {fmt_num(row.e_relativistic - mp.mass)}, "
            f"E_nonrel = {fmt_num(row.e_nonrelativistic)}, gap = {fmt_num(row.gap)}"
        )
    _emit("\n".join(lines) + "\n", ctx.params["out"])


def main(argv=None) -> int:
    """Entry point mapping typed errors onto the documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.Abort:
        return EXIT_INVALID_INPUT
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_INVALID_INPUT
    except DomainError as exc:
        click.echo(f"invalid input: {exc}", err=True)
        return EXIT_INVALID_INPUT
    except (NoRootInBracket, ComplexChannel, OutOfDomain, NegativeDiscriminant) as exc:
        click.echo(f"no solution: {type(exc).__name__}: {exc}", err=True)
        return EXIT_NO_SOLUTION
    except (NonFinite, ConvergenceFailure, NormalizationFailure, ConstraintViolation) as exc:
        click.echo(f"numeric failure: {type(exc).__name__}: {exc}", err=True)
        return EXIT_NUMERIC_FAILURE
    except KgYukawaError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return EXIT_NUMERIC_FAILURE


if __name__ == "__main__":
    sys.exit(main())
