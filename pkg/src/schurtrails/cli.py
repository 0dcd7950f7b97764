"""Command-line front end for the verifiers, audits, orbits and pictures.

Exit codes: 0 verified/passed, 1 an identity or audit failed, 2 usage
error.  Reports are deterministic: JSON is emitted with sorted keys and
without timing fields, so identical invocations give identical bytes.
"""

from __future__ import annotations

import functools
import json
import os
from concurrent.futures import ThreadPoolExecutor

import click

from .identities import (
    bijection_audit,
    explore_orbit,
    verify_ciucu,
    verify_dodgson,
    verify_general,
    verify_kirillov,
    verify_kleber,
    verify_pluecker,
)
from .partitions import Partition, SkewShape
from .svg import render_svg
from .trails import TwoColouredGraph, count_noncrossing_matchings, trail_at_terminal

#: Schema for every verifier report the CLI prints in JSON format.
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["identity", "params", "equal", "lhs_terms", "rhs_terms"],
    "properties": {
        "identity": {
            "enum": ["general", "kirillov", "dodgson", "pluecker", "ciucu", "kleber"]
        },
        "params": {"type": "object"},
        "equal": {"type": "boolean"},
        "lhs_terms": {"type": "integer", "minimum": 0},
        "rhs_terms": {"type": "integer", "minimum": 0},
        "witness": {"type": "string"},
    },
    "additionalProperties": False,
}


def _ints(text):
    """None -> None, '' -> (), '5,4,3' -> (5, 4, 3)."""
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    return tuple(int(bit) for bit in text.split(","))


def _usage_guard(fn):
    """Turn domain validation errors into exit-code-2 usage errors."""

    @functools.wraps(fn)
    def wrapped(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ValueError as exc:
            raise click.UsageError(str(exc))

    return wrapped


def _emit(text, out):
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _report_json(rep) -> str:
    payload = rep.to_json()
    payload.pop("elapsed_ms", None)
    return json.dumps(payload, sort_keys=True) + "\n"


def _report_text(rep) -> str:
    verdict = "VERIFIED" if rep.equal else "FAILED (%s)" % rep.witness
    return "%s %s %s\n" % (rep.identity, json.dumps(rep.params, sort_keys=True), verdict)


def _finish_report(rep, fmt, out):
    _emit(_report_json(rep) if fmt == "json" else _report_text(rep), out)
    if not rep.equal:
        raise SystemExit(1)


def _pool_size(n_items: int) -> int:
    threads = os.environ.get("SCHURTRAILS_THREADS", "").strip()
    if threads:
        size = int(threads)
        if size < 1:
            raise ValueError("SCHURTRAILS_THREADS must be positive, got %r" % threads)
        return size
    return min(8, max(1, n_items))


def _run_sweep(worker, items):
    with ThreadPoolExecutor(max_workers=_pool_size(len(items))) as pool:
        return list(pool.map(worker, items))


fmt_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "text"]),
    default="text",
    show_default=True,
    help="Report format.",
)
out_option = click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write output to PATH instead of stdout.",
)
vars_option = click.option(
    "--vars", "n_vars", type=int, default=None, help="Number of variables N."
)


@click.group(no_args_is_help=False)
def main():
    """Exact checks and pictures for the lattice-path Schur calculus."""


@main.group()
def verify():
    """Run one of the identity verifiers."""


@verify.command()
@click.option("--lambda", "lam", default=None, help="Comma-separated weakly decreasing parts.")
@vars_option
@click.option(
    "--sweep",
    default=None,
    help="Semicolon-separated part lists; one JSON report per entry, in order.",
)
@fmt_option
@out_option
@_usage_guard
def general(lam, n_vars, sweep, fmt, out):
    """Exchange the first and last parts between consecutive windows."""
    if sweep is not None:
        shapes = [_ints(bit) for bit in sweep.split(";") if bit.strip()]
        if not shapes:
            raise click.UsageError("--sweep names no part lists")
        reports = _run_sweep(lambda parts: verify_general(parts, n_vars), shapes)
        _emit("".join(_report_json(rep) for rep in reports), out)
        if not all(rep.equal for rep in reports):
            raise SystemExit(1)
        return
    if lam is None:
        raise click.UsageError("--lambda is required without --sweep")
    _finish_report(verify_general(_ints(lam), n_vars), fmt, out)


@verify.command()
@click.option("--lambda", "lam", required=True, help="The constant window, e.g. 2,2,2.")
@vars_option
@fmt_option
@out_option
@_usage_guard
def kirillov(lam, n_vars, fmt, out):
    """Square of a rectangle against its widened and narrowed neighbours."""
    parts = _ints(lam)
    if not parts or len(set(parts)) != 1:
        raise click.UsageError("--lambda must repeat one part value, got %r" % (lam,))
    _finish_report(verify_kirillov(parts[0], len(parts) - 1, n_vars), fmt, out)


@verify.command()
@click.option("--k", type=int, required=True, help="Window length; matrices are (k+1) x (k+1).")
@fmt_option
@out_option
@_usage_guard
def dodgson(k, fmt, out):
    """Condensation of a generic determinant into corner minors."""
    _finish_report(verify_dodgson(k), fmt, out)


@verify.command()
@click.option("--k", type=int, default=None, help="Minor size; the generic matrix is 2k x k.")
@click.option("--rlist", default="", help="Comma-separated row indices to exchange.")
@click.option(
    "--mode",
    type=click.Choice(["formal", "schur"]),
    default="formal",
    show_default=True,
)
@click.option("--lambda", "lam", default=None, help="First shape (schur mode).")
@click.option("--sigma", default=None, help="Second shape (schur mode).")
@vars_option
@fmt_option
@out_option
@_usage_guard
def pluecker(k, rlist, mode, lam, sigma, n_vars, fmt, out):
    """Minor exchange on a generic tall matrix, formal or through Schur factors."""
    rep = verify_pluecker(
        k, _ints(rlist) or (), mode=mode, lam=_ints(lam), sigma=_ints(sigma), N=n_vars
    )
    _finish_report(rep, fmt, out)


@verify.command()
@click.option("--set", "index_set", required=True, help="Comma-separated index set T.")
@click.option("--k", type=int, required=True, help="Subset size; T needs 2k elements.")
@vars_option
@fmt_option
@out_option
@_usage_guard
def ciucu(index_set, k, n_vars, fmt, out):
    """Balanced splits of an index set against its alternating split."""
    _finish_report(verify_ciucu(_ints(index_set), k, n_vars), fmt, out)


@verify.command()
@click.option("--lambda", "lam", required=True, help="Comma-separated parts.")
@click.option("--k", type=int, required=True, help="Corner index, counted from the top.")
@vars_option
@fmt_option
@out_option
@_usage_guard
def kleber(lam, k, n_vars, fmt, out):
    """Square expansion over nested border strips at one corner."""
    _finish_report(verify_kleber(_ints(lam), k, n_vars), fmt, out)


@main.command()
@click.option("--lambda", "lam", required=True, help="Comma-separated parts (r+1 of them).")
@vars_option
@fmt_option
@out_option
@_usage_guard
def audit(lam, n_vars, fmt, out):
    """Replay the window-exchange bijection object by object."""
    try:
        rep = bijection_audit(_ints(lam), n_vars)
    except RuntimeError as exc:
        click.echo("audit failed: %s" % exc, err=True)
        raise SystemExit(1)
    payload = rep.to_json()
    payload.pop("elapsed_ms", None)
    if fmt == "json":
        text = json.dumps(payload, sort_keys=True) + "\n"
    else:
        text = "lambda %s N %d: %d objects = %d A + %d B\n" % (
            ",".join(str(p) for p in rep.lam),
            rep.N,
            rep.objects,
            rep.case_a,
            rep.case_b,
        )
    _emit(text, out)


@main.command()
@click.option("--lambda", "lam", required=True, help="Blue outer parts (offset 0).")
@click.option("--inner", default=None, help="Blue inner parts, for a skew layout.")
@click.option("--sigma", required=True, help="Green outer parts.")
@click.option("--tau", default=None, help="Green inner parts, for a skew layout.")
@click.option("--offset", "t", type=int, default=0, show_default=True, help="Green layout offset.")
@click.option("--rlist", "selected", default="", help="Selected Q-sequence indices, comma-separated.")
@vars_option
@fmt_option
@out_option
@_usage_guard
def orbit(lam, inner, sigma, tau, t, selected, n_vars, fmt, out):
    """Close the trail-recolouring move over families with fixed terminals."""
    blue = SkewShape(Partition(_ints(lam)), Partition(_ints(inner) or ()))
    green = SkewShape(Partition(_ints(sigma)), Partition(_ints(tau) or ()))
    try:
        res = explore_orbit(blue, green, t=t, selected=_ints(selected) or (), N=n_vars)
    except RuntimeError as exc:
        click.echo("orbit failed: %s" % exc, err=True)
        raise SystemExit(1)
    if fmt == "json":
        text = json.dumps(res.to_json(), sort_keys=True) + "\n"
    else:
        text = "initial %s N %d: side 0 has %d objects in %d patterns, side 1 has %d in %d%s\n" % (
            json.dumps([list(c) for c in res.initial]),
            res.N,
            res.O0_size,
            len(res.counts0),
            res.O1_size,
            len(res.counts1),
            " (degenerate)" if res.degenerate else "",
        )
    _emit(text, out)


@main.command()
@click.argument("config", type=click.Path(exists=True, dir_okay=False), required=False)
@click.option(
    "--trail",
    "trail_points",
    multiple=True,
    help="x,y of a terminal whose changing trail is overlaid; repeatable.",
)
@vars_option
@out_option
@_usage_guard
def render(config, trail_points, n_vars, out):
    """Draw a graph JSON file (or stdin) as a deterministic SVG."""
    if config is None:
        raw = click.get_text_stream("stdin").read()
    else:
        with open(config) as fh:
            raw = fh.read()
    try:
        graph = TwoColouredGraph.from_json(json.loads(raw))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise click.UsageError("malformed graph config: %s" % exc)
    trails = []
    for spec in trail_points:
        location = _ints(spec)
        if len(location) != 2:
            raise click.UsageError("--trail wants x,y, got %r" % (spec,))
        trails.append(trail_at_terminal(graph, location))
    _emit(render_svg(graph, tuple(trails), n_vars), out)


@main.command()
@click.option("--points", type=int, required=True, help="Number of matched points (even).")
@fmt_option
@out_option
@_usage_guard
def catalan(points, fmt, out):
    """Count perfect noncrossing matchings on cyclically arranged points."""
    count = count_noncrossing_matchings(points)
    if fmt == "json":
        text = json.dumps({"matchings": count, "points": points}, sort_keys=True) + "\n"
    else:
        text = "%d\n" % count
    _emit(text, out)
