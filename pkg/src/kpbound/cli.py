"""``kpbound`` command line.

Exit codes: 0 success / PASS, 1 verification FAIL (or a numerical method
that did not converge), 2 input error.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from enum import Enum

import click

from . import _accel
from .bounds import CSV_HEADER, GridSpec, main_bound, sweep_bounds
from .conformal import DEFAULT_RESOLUTION
from .errors import ConvergenceError, InputDomainError
from .geometry import Point2, RadiiTriple, domain_from_dict, validate_radii
from .metrics import kp_distance_stadium_centers, quasihyperbolic_density

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class CliConfig:
    fmt: str = "json"
    out: str | None = None
    precision: int = 6
    paper_rounding: bool = False

    def number(self, x: float) -> float:
        if not math.isfinite(x):
            return x
        if self.paper_rounding:
            return round(x, 3)
        return float(f"{x:.{self.precision}g}")

    def render(self, obj):
        if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
            return obj
        if isinstance(obj, float):
            return self.number(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, dict):
            return {k: self.render(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [self.render(v) for v in obj]
        return obj


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}.")
    elif isinstance(obj, list):
        parts = (",".join(map(str, v)) if isinstance(v, list) else str(v) for v in obj)
        yield prefix[:-1], " ".join(parts)
    else:
        yield prefix[:-1], obj


def _emit_text(cfg: CliConfig, text: str) -> None:
    if cfg.out:
        try:
            with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputDomainError(f"cannot write {cfg.out}: {exc.strerror}") from exc
    else:
        click.echo(text, nl=False)


def _csv_text(cfg: CliConfig, header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([cfg.render(v) for v in row])
    return buf.getvalue()


def emit(cfg: CliConfig, payload: dict) -> None:
    data = cfg.render(payload)
    if cfg.fmt == "json":
        text = json.dumps(data, indent=2, sort_keys=False) + "\n"
    elif cfg.fmt == "csv":
        flat = list(_flatten(data))
        text = _csv_text(cfg, [k for k, _ in flat], [[v for _, v in flat]])
    else:
        text = "".join(f"{k}: {v}\n" for k, v in _flatten(data))
    _emit_text(cfg, text)


def _fail_input(msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(EXIT_INPUT)


def _guarded(fn):
    """Map library exceptions onto exit codes."""
    import functools

    @functools.wraps(fn)
    def inner(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputDomainError as exc:
            _fail_input(str(exc))
        except ConvergenceError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_FAIL)
    return inner


def output_options(fn):
    fn = click.option("--paper-rounding", is_flag=True, help="Round numbers to 3 decimals.")(fn)
    fn = click.option("--precision", type=click.IntRange(1, 17), default=6, show_default=True,
                      help="Significant digits in the output.")(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="Write to this file instead of stdout.")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["json", "csv", "plain"]),
                      default="json", show_default=True)(fn)
    return fn


def triple_options(fn):
    fn = click.option("--r-curv", type=float, required=True, help="Curvature radius R_C.")(fn)
    fn = click.option("--r-inner", type=float, required=True, help="Inner radius R_I.")(fn)
    fn = click.option("--r-outer", type=float, required=True, help="Outer radius R_O.")(fn)
    return fn


def _triple(r_outer, r_inner, r_curv) -> RadiiTriple:
    t = RadiiTriple(r_outer, r_inner, r_curv)
    verdict = validate_radii(t)
    if not verdict:
        _fail_input(verdict.violation)
    return t


@click.group()
@click.version_option(package_name="kpbound")
def main():
    """Kulkarni-Pinkall metric tools and derivative bounds for convex domains."""
    _accel.configure_threads()


@main.command()
@triple_options
@output_options
@_guarded
def validate(r_outer, r_inner, r_curv, fmt, out, precision, paper_rounding):
    """Check that a radii triple is admissible."""
    cfg = CliConfig(fmt, out, precision, paper_rounding)
    t = RadiiTriple(r_outer, r_inner, r_curv)
    verdict = validate_radii(t)
    emit(cfg, {"triple": t.to_dict(), "valid": verdict.valid, "violation": verdict.violation})
    sys.exit(EXIT_OK if verdict else EXIT_INPUT)


@main.command()
@triple_options
@output_options
@_guarded
def bound(r_outer, r_inner, r_curv, fmt, out, precision, paper_rounding):
    """New and old derivative bounds for a radii triple."""
    cfg = CliConfig(fmt, out, precision, paper_rounding)
    emit(cfg, main_bound(_triple(r_outer, r_inner, r_curv)).to_dict())


@main.command("kp-distance")
@click.option("--big", "-R", type=float, required=True, help="Radius of the larger disk.")
@click.option("--small", "-r", type=float, required=True, help="Radius of the smaller disk.")
@click.option("--distance", "-d", type=float, required=True, help="Distance between the centers.")
@output_options
@_guarded
def kp_distance(big, small, distance, fmt, out, precision, paper_rounding):
    """KP distance between the centers of a two-disk stadium."""
    cfg = CliConfig(fmt, out, precision, paper_rounding)
    value, branch = kp_distance_stadium_centers(big, small, distance)
    emit(cfg, {"value": value.value, "case": branch.tag.value, "theta": branch.theta,
               "threshold": branch.threshold})


def _load_domain(source: str):
    text = source
    if not source.lstrip().startswith("{"):
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputDomainError(f"cannot read domain file {source}: {exc.strerror}") from exc
    try:
        return domain_from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputDomainError(f"domain is not valid JSON: {exc.msg}") from exc


@main.command()
@click.option("--domain", "domain_spec", required=True,
              help="Domain JSON, inline or as a file path (see docs/formats.md).")
@click.option("--x", type=float, required=True)
@click.option("--y", type=float, default=0.0, show_default=True)
@click.option("--metric", type=click.Choice(["kp", "hyperbolic", "quasihyperbolic"]),
              default="kp", show_default=True)
@click.option("--resolution", type=click.IntRange(min=64), default=DEFAULT_RESOLUTION, show_default=True)
@output_options
@_guarded
def density(domain_spec, x, y, metric, resolution, fmt, out, precision, paper_rounding):
    """Metric density of a domain at a point."""
    from .extremal import extremal_disk
    from .verify import _default_map, hyperbolic_density_via_map

    cfg = CliConfig(fmt, out, precision, paper_rounding)
    domain = _load_domain(domain_spec)
    z = Point2(x, y)
    if not domain.contains(z):
        raise InputDomainError(f"({x:g}, {y:g}) is not inside the domain")
    payload = {"point": [x, y], "metric": metric}
    if metric == "kp":
        res = extremal_disk(domain, z)
        if not res.converged:
            raise ConvergenceError("extremal disk search hit its iteration cap")
        payload.update(res.density.to_dict())
        payload["extremal_disk"] = res.disk.to_dict()
        payload["contacts"] = [[p.position.x, p.position.y] for p in res.contact_points]
    elif metric == "quasihyperbolic":
        payload.update(quasihyperbolic_density(domain, z).to_dict())
    else:
        fmap = _default_map(domain, resolution)
        payload.update({"value": hyperbolic_density_via_map(fmap, z), "metric_kind": "hyperbolic",
                        "provenance": "closed_form" if fmap.kind == "exact_mobius" else "numeric"})
    emit(cfg, payload)


@main.command()
@triple_options
@click.option("--resolution", type=click.IntRange(min=64), default=DEFAULT_RESOLUTION, show_default=True)
@click.option("--samples", type=click.IntRange(min=8), default=4096, show_default=True,
              help="Boundary samples for the sup estimate.")
@click.option("--no-error-estimate", is_flag=True, help="Skip the resolution-doubling rerun.")
@output_options
@_guarded
def verify(r_outer, r_inner, r_curv, resolution, samples, no_error_estimate,
           fmt, out, precision, paper_rounding):
    """Compare a numerical sup|f'| on the canonical domain with the bound."""
    from .verify import check_main_bound

    cfg = CliConfig(fmt, out, precision, paper_rounding)
    t = _triple(r_outer, r_inner, r_curv)
    report = check_main_bound(t, resolution, samples, estimate_error=not no_error_estimate)
    emit(cfg, report.to_dict())
    sys.exit(EXIT_OK if report.passed else EXIT_FAIL)


def _axis(text: str) -> tuple[float, float, int]:
    try:
        lo, hi, n = text.split(":")
        return float(lo), float(hi), int(n)
    except ValueError:
        raise click.BadParameter(f"expected LO:HI:N, got {text!r}")


@main.command()
@click.option("--r-outer", "ro", default="0.1:1:10", show_default=True, help="Axis LO:HI:N.")
@click.option("--r-inner", "ri", default="0.1:1:10", show_default=True, help="Axis LO:HI:N.")
@click.option("--r-curv", "rc", default="0.1:1:10", show_default=True, help="Axis LO:HI:N.")
@click.option("--disk-family", is_flag=True,
              help="Sweep disk triples (r+a, r-a, r) over the --r-curv axis and a/r in --ratio.")
@click.option("--ratio", default="0:0.9:10", show_default=True, help="a/r axis for --disk-family.")
@click.option("--verify", "with_verify", is_flag=True, help="Add numerical verification columns.")
@click.option("--resolution", type=click.IntRange(min=64), default=256, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--precision", type=click.IntRange(1, 17), default=6, show_default=True)
@click.option("--paper-rounding", is_flag=True)
@_guarded
def sweep(ro, ri, rc, disk_family, ratio, with_verify, resolution, out, precision, paper_rounding):
    """CSV of bound reports over a grid of radii triples (invalid triples skipped)."""
    import numpy as np

    cfg = CliConfig("csv", out, precision, paper_rounding)
    if disk_family:
        rs = np.linspace(*_axis(rc)[:2], _axis(rc)[2])
        lo, hi, n = _axis(ratio)
        if not (0.0 <= lo <= hi < 1.0):
            raise InputDomainError("a/r must lie in [0, 1)")
        triples = [RadiiTriple(float(r + k * r), float(r - k * r), float(r))
                   for r in rs for k in np.linspace(lo, hi, n)]
    else:
        triples = GridSpec(_axis(ro), _axis(ri), _axis(rc)).triples()
    result = sweep_bounds(triples)
    if with_verify:
        from .verify import SWEEP_HEADER, verify_sweep

        reports = verify_sweep([r.triple for r in result.reports], resolution)
        text = _csv_text(cfg, SWEEP_HEADER, [r.csv_row() for r in reports])
        failed = sum(not r.passed for r in reports)
    else:
        text = _csv_text(cfg, CSV_HEADER, [r.csv_row() for r in result.reports])
        failed = 0
    _emit_text(cfg, text)
    click.echo(f"rows: {len(result.reports)}, skipped invalid: {result.skipped}, "
               f"new > old: {len(result.counterexamples)}", err=True)
    sys.exit(EXIT_FAIL if failed else EXIT_OK)


if __name__ == "__main__":  # pragma: no cover
    main()
