"""Command-line surface.

Subcommands:

* ``exact``: evaluate a permanent, hafnian or tensor generalization,
* ``bounds``: compare upper bounds against the (normalized) exact value,
* ``table1``: run the embedded eight-dimensional phase-matrix benchmark and
  compare all cells against the frozen reference strings,
* ``verify``: run the randomized property suites,
* ``charfn``: characteristic-function report for a distribution grid.

Exit codes: 0 success, 1 verification or numeric failure, 2 input error,
3 feasibility limit.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from . import bounds, charfn, table1, verify
from .errors import DomainError, FeasibilityError, NumericError, ParseError
from .exact import hafnian, hyperhafnian, multidim_permanent, permanent
from .matrixio import (
    BoundRow,
    MatrixInput,
    load_matrix,
    matrix_from_json,
    report_to_csv,
    report_to_json,
    tensor_from_json,
)
from .parallel import map_in_order

PER_MAX_N = 24
HAF_MAX_N = 20
PER_ELL_MAX_K = 6
HAF_ELL_MAX_M = 6
EXACT_COLUMN_MAX_N = 12


# ---------------------------------------------------------------------------
# spec string parsers (1-based on the command line, 0-based internally)


def parse_partition(spec: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Parse blocks like ``"1,2|3,4"`` (1-based, comma-separated, | between
    blocks) into 0-based sorted tuples."""
    blocks: list[tuple[int, ...]] = []
    seen: set[int] = set()
    pos = 0
    for chunk in spec.split("|"):
        elems: list[int] = []
        cpos = pos
        for token in chunk.split(","):
            where = f"char {cpos}"
            value = _parse_index(token, where)
            if not 1 <= value <= n:
                raise ParseError(f"index {value} outside 1..{n}", position=where)
            if value - 1 in seen:
                raise ParseError(f"index {value} repeated", position=where)
            seen.add(value - 1)
            elems.append(value - 1)
            cpos += len(token) + 1
        blocks.append(tuple(sorted(elems)))
        pos += len(chunk) + 1
    return tuple(blocks)


def parse_composition(spec: str) -> tuple[int, ...]:
    """Parse ``"3,3,2"`` into a tuple of non-negative part sizes."""
    parts: list[int] = []
    pos = 0
    for token in spec.split(","):
        where = f"char {pos}"
        value = _parse_index(token, where, minimum=0)
        parts.append(value)
        pos += len(token) + 1
    return tuple(parts)


def parse_perm(spec: str, n: int) -> tuple[int, ...]:
    """Parse a 1-based permutation like ``"2,1,4,3"`` into 0-based form."""
    values = parse_composition(spec)
    perm = tuple(v - 1 for v in values)
    if sorted(perm) != list(range(n)):
        raise ParseError(f"expected a permutation of 1..{n}, got {spec!r}")
    return perm


def _parse_index(token: str, where: str, minimum: int = 1) -> int:
    text = token.strip()
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", position=where) from None
    if value < minimum:
        raise ParseError(f"expected an integer >= {minimum}, got {value}", position=where)
    return value


# ---------------------------------------------------------------------------
# input loading


def _load_input(path: str):
    """Load either a matrix file or a tensor file, depending on its keys."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}", position=str(path)) from None
    if isinstance(data, dict) and "shape" in data:
        return tensor_from_json(data)
    return matrix_from_json(data)


def _matrix_input(args) -> MatrixInput:
    mi = load_matrix(args.input)
    if getattr(args, "t", None) is not None:
        mi = mi.with_t(args.t)
    return mi


def _emit(args, payload: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# exact


def cmd_exact(args) -> int:
    loaded = _load_input(args.input)
    if isinstance(loaded, MatrixInput):
        if getattr(args, "t", None) is not None:
            loaded = loaded.with_t(args.t)
        array = loaded.z
    else:
        array = loaded
    kind = args.kind
    start = time.perf_counter()
    if kind == "per":
        if array.ndim != 2:
            raise DomainError("kind 'per' needs a matrix input")
        n = array.shape[0]
        if n > PER_MAX_N:
            raise FeasibilityError(f"permanent kernel limit n <= {PER_MAX_N}, got {n}")
        value = permanent(array)
    elif kind == "haf":
        if array.ndim != 2:
            raise DomainError("kind 'haf' needs a matrix input")
        n = array.shape[0]
        if n > HAF_MAX_N:
            raise FeasibilityError(f"hafnian kernel limit n <= {HAF_MAX_N}, got {n}")
        value = hafnian(array)
    elif kind == "per_ell":
        k = array.shape[0] if array.ndim else 0
        if k > PER_ELL_MAX_K:
            raise FeasibilityError(
                f"tensor permanent limit k <= {PER_ELL_MAX_K}, got {k}"
            )
        value = multidim_permanent(array)
    elif kind == "haf_ell":
        ell = array.ndim
        n = array.shape[0] if ell else 0
        if ell and n % ell == 0 and n // ell > HAF_ELL_MAX_M:
            raise FeasibilityError(
                f"tensor hafnian limit m <= {HAF_ELL_MAX_M}, got {n // ell}"
            )
        value = hyperhafnian(array)
    else:  # pragma: no cover - argparse restricts choices
        raise DomainError(f"unknown kind {kind!r}")
    elapsed = time.perf_counter() - start
    doc = {
        "kind": kind,
        "shape": list(array.shape),
        "value": {"re": value.real, "im": value.imag},
        "elapsed_seconds": elapsed,
    }
    if args.format == "json":
        _emit(args, json.dumps(doc, indent=2))
    else:
        print(f"{kind} = {value!r}  ({elapsed:.3f} s)")
        _emit(args, json.dumps(doc))
    return 0


# ---------------------------------------------------------------------------
# bounds


def _bounds_rows(mi: MatrixInput, args) -> list[BoundRow]:
    """Catalogue of normalized bound rows (everything divided by n!).

    Row order is fixed: operator norms, singular mean, column norms,
    unit-circle rows (unit_circle inputs only), rank bound, optional extra
    baselines, then the partition and composition rows when requested.
    """
    z = mi.z
    n = mi.n
    fact = float(math.factorial(n))
    ps = args.p if args.p else ["1", "2", "inf"]
    tasks = []
    names: list[tuple[str, dict]] = []

    def add(name, params, fn):
        names.append((name, params))
        tasks.append(fn)

    for p in ("1", "inf", "2"):
        if p in ps:
            add(f"opnorm_p{p}", {"p": p},
                lambda p=p: bounds.baseline_opnorm(z, p) / fact)
    add("singular_mean_power", {}, lambda: bounds.baseline_singular(z) / fact)
    add("hadamard_column_norm", {}, lambda: bounds.baseline_hadamard(z) / fact)
    if mi.form == "unit_circle":
        x, t = mi.phases, mi.t
        s_perm = parse_perm(args.s_perm, n) if args.s_perm else None
        params = {"t": t}
        if s_perm is not None:
            params = {"t": t, "s": [v + 1 for v in s_perm]}
        add("pair_cos", params,
            lambda: bounds.unit_circle_pair_bound(x, t, s_perm))
        add("avg_cos", {"t": t}, lambda: bounds.unit_circle_avg_bound(x, t))
        if args.theta:
            add("theta_cos", {"t": t},
                lambda: bounds.unit_circle_theta_bound(x, t))
    add("krauter_rank", {}, lambda: bounds.baseline_krauter(z))
    if args.all_baselines:
        # full-column minor average; its square root bounds |per| / n!
        add("ckp_column_mean", {},
            lambda: math.sqrt(bounds.baseline_ckp_minor(z)))
    if args.partition:
        blocks = parse_partition(args.partition, n)
        add("partition_subset_avg",
            {"blocks": [[v + 1 for v in b] for b in blocks]},
            lambda: bounds.permanent_bound_partition(z, blocks) / fact)
    if args.composition:
        parts = parse_composition(args.composition)
        add("composition_level_avg", {"parts": list(parts)},
            lambda: bounds.permanent_bound_composition(z, parts) / fact)

    values = map_in_order(tasks)
    exact_norm = None
    if n <= EXACT_COLUMN_MAX_N:
        exact_norm = abs(permanent(z)) / fact
    rows = []
    for (name, params), value in zip(names, values):
        if name == "krauter_rank":
            if value is None:
                rows.append(BoundRow(name=name, params=params, applicable=False))
                continue
            value = value / fact
        row = BoundRow(name=name, params=params, raw_value=float(value))
        if exact_norm is not None:
            row.exact_norm = exact_norm
            row.dominates_exact = row.raw_value >= exact_norm - 1e-12
        rows.append(row)
    return rows


def cmd_bounds(args) -> int:
    mi = _matrix_input(args)
    rows = _bounds_rows(mi, args)
    meta = {
        "n": mi.n,
        "form": mi.form,
        "normalization": "values are bounds on |per(z)| / n!",
    }
    if args.format == "csv":
        _emit(args, report_to_csv(rows))
    elif args.format == "json":
        _emit(args, json.dumps(report_to_json(rows, meta), indent=2))
    else:
        width = max(len(r.name) for r in rows)
        lines = []
        for r in rows:
            if not r.applicable:
                lines.append(f"{r.name:<{width}}  n.a.")
                continue
            text = f"{r.name:<{width}}  {r.raw_value:.9e}"
            if r.exact_norm is not None:
                text += f"  (exact {r.exact_norm:.9e})"
            lines.append(text)
        _emit(args, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# table1


def cmd_table1(args) -> int:
    result = table1.reproduce()
    if args.format == "json":
        _emit(args, json.dumps(result.to_json(), indent=2))
    elif args.format == "csv":
        flat: list[BoundRow] = []
        for label, rows in result.rows_by_t.items():
            for row in rows:
                merged = dict(row.params)
                merged["t"] = label
                flat.append(
                    BoundRow(
                        name=row.name,
                        params=merged,
                        raw_value=row.raw_value,
                        applicable=row.applicable,
                        exact_norm=row.exact_norm,
                        dominates_exact=row.dominates_exact,
                    )
                )
        _emit(args, report_to_csv(flat))
    else:
        lines = []
        for cell in (*result.cells, *result.exact_cells):
            lines.append(
                f"t={cell.t_label:<4} {cell.name:<22} reference={cell.printed:<9}"
                f" computed={cell.shown:<12} {'ok' if cell.match else 'MISMATCH'}"
            )
        lines.append(
            f"{'PASS' if result.passed else 'FAIL'}"
            f" ({len(result.cells)} bound cells, {len(result.exact_cells)} exact"
            f" cells, {result.elapsed:.2f} s)"
        )
        _emit(args, "\n".join(lines))
    return 0 if result.passed else 1


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    suites = [args.suite] if args.suite != "all" else sorted(verify.SUITES)
    results = [verify.run_suite(name, seed=args.seed, trials=args.trials)
               for name in suites]
    if args.format == "json":
        _emit(args, json.dumps([r.to_json() for r in results], indent=2))
    else:
        lines = []
        for r in results:
            lines.append(
                f"suite={r.suite} checks={r.checks} failures={len(r.failures)}"
                f" elapsed={r.elapsed:.2f}s {'PASS' if r.ok else 'FAIL'}"
            )
        for r in results:
            if not r.ok:
                lines.append("offending instances:")
                lines.append(json.dumps(r.failures[:3], indent=2))
        _emit(args, "\n".join(lines))
    return 0 if all(r.ok for r in results) else 1


# ---------------------------------------------------------------------------
# charfn


_CHARFN_COLUMNS = (
    "t", "exact_abs", "pair_bound", "avg_bound",
    "mc_re", "mc_im", "mc_stderr_re", "mc_stderr_im",
)


def cmd_charfn(args) -> int:
    model = charfn.load_model(args.input)
    ts = args.t if args.t else [0.0]
    s_perm = parse_perm(args.s_perm, model.n) if args.s_perm else None
    rows = []
    for t in ts:
        row: dict = {"t": t}
        row["exact_abs"] = (
            abs(charfn.exact_charfn(model, t))
            if model.n <= charfn.EXACT_MAX_N
            else None
        )
        row["pair_bound"] = charfn.pair_bound_charfn(model, t, s_perm)
        row["avg_bound"] = charfn.avg_bound_charfn(model, t)
        if args.mc:
            mc = charfn.monte_carlo_charfn(
                model, t, trials=args.mc, seed=args.seed
            )
            row.update(
                mc_re=mc.estimate.real, mc_im=mc.estimate.imag,
                mc_stderr_re=mc.stderr_re, mc_stderr_im=mc.stderr_im,
            )
        rows.append(row)
    if args.format == "csv":
        import csv as _csv
        import io as _io

        buf = _io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(_CHARFN_COLUMNS)
        for row in rows:
            writer.writerow([row.get(col) for col in _CHARFN_COLUMNS])
        _emit(args, buf.getvalue())
    elif args.format == "json":
        _emit(args, json.dumps({"n": model.n, "rows": rows}, indent=2))
    else:
        lines = []
        for row in rows:
            text = f"t={row['t']:g}"
            if row["exact_abs"] is not None:
                text += f" |exact|={row['exact_abs']:.9f}"
            text += (
                f" pair={row['pair_bound']:.9f} avg={row['avg_bound']:.9f}"
            )
            if "mc_re" in row:
                text += (
                    f" mc={row['mc_re']:.6f}{row['mc_im']:+.6f}i"
                    f" (se {row['mc_stderr_re']:.2e}, {row['mc_stderr_im']:.2e})"
                )
            lines.append(text)
        _emit(args, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# parser wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permbound",
        description="Exact permanents/hafnians and subset-average upper bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_exact = sub.add_parser("exact", help="evaluate an exact kernel")
    p_exact.add_argument("kind", choices=["per", "per_ell", "haf", "haf_ell"])
    p_exact.add_argument("--input", required=True)
    p_exact.add_argument("--t", type=float, default=None,
                         help="argument override for unit_circle inputs")
    p_exact.add_argument("--format", choices=["text", "json"], default="text")
    p_exact.add_argument("--output", default=None)
    p_exact.set_defaults(func=cmd_exact)

    p_bounds = sub.add_parser("bounds", help="bound comparison report")
    p_bounds.add_argument("--input", required=True)
    p_bounds.add_argument("--t", type=float, default=None)
    p_bounds.add_argument("--p", action="append", choices=["1", "2", "inf"],
                          default=None, help="operator norms to include")
    p_bounds.add_argument("--partition", default=None,
                          help='column blocks, e.g. "1,2|3,4" (1-based)')
    p_bounds.add_argument("--composition", default=None,
                          help='level sizes, e.g. "3,3,2"')
    p_bounds.add_argument("--s-perm", dest="s_perm", default=None,
                          help='column pairing order, e.g. "2,1,4,3" (1-based)')
    p_bounds.add_argument("--theta", action="store_true",
                          help="include the polynomial refinement row")
    p_bounds.add_argument("--all-baselines", action="store_true",
                          dest="all_baselines")
    p_bounds.add_argument("--format", choices=["text", "json", "csv"],
                          default="text")
    p_bounds.add_argument("--output", default=None)
    p_bounds.set_defaults(func=cmd_bounds)

    p_table = sub.add_parser("table1", help="embedded benchmark reproduction")
    p_table.add_argument("--format", choices=["text", "json", "csv"],
                         default="text")
    p_table.add_argument("--output", default=None)
    p_table.set_defaults(func=cmd_table1)

    p_verify = sub.add_parser("verify", help="randomized property suites")
    p_verify.add_argument("--suite", default="all",
                          choices=["all"] + sorted(verify.SUITES))
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=None)
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--output", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_charfn = sub.add_parser("charfn", help="characteristic-function report")
    p_charfn.add_argument("--input", required=True, help="model JSON file")
    p_charfn.add_argument("--t", type=float, action="append", default=None)
    p_charfn.add_argument("--mc", type=int, default=0,
                          help="Monte Carlo trials (0 = skip)")
    p_charfn.add_argument("--seed", type=int, default=0)
    p_charfn.add_argument("--s-perm", dest="s_perm", default=None)
    p_charfn.add_argument("--format", choices=["text", "json", "csv"],
                          default="text")
    p_charfn.add_argument("--output", default=None)
    p_charfn.set_defaults(func=cmd_charfn)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FeasibilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
