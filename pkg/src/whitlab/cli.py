"""Command-line front end.

Subcommands: whitney, charpoly, alpha, beta, gamma, crit, geometry (single
computations), table (grids to CSV/JSON with a persistent result cache), and
verify (the named verification suites).

Exit codes: 0 success, 1 verification failures, 2 invalid parameters,
3 cap or budget exceeded (the message names the cap).  All numeric output is
exact decimal; BigInts are serialized as decimal strings in JSON because
JSON numbers cannot carry arbitrary precision portably.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import distributions as dist
from . import hwdl
from .agreement import gamma, gamma_enum_oracle, gamma_poly
from .errors import BudgetExceeded, CapExceeded
from .exactmath import UniPolyQ, deflate_roots, qbinom
from .gfq import field_new
from .lattice import build_geometry, critical_exponent, whitney_and_charpoly
from .subspaces import hwdl_atoms, parse_atoms_file
from .verifysuites import SUITES, run_suites

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_PARAMS = 2
EXIT_CAP = 3


class ParamError(ValueError):
    pass


# ---------------------------------------------------------------------------
# result records
# ---------------------------------------------------------------------------


def make_record(kind: str, params: dict, values, method: str, runtime_ms: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "params": params,
        "values": values,
        "method": method,
        "runtime_ms": runtime_ms,
    }


def _ints_to_strings(values) -> list[str]:
    return [str(v) for v in values]


# ---------------------------------------------------------------------------
# whitney computation routes
# ---------------------------------------------------------------------------


def whitney_sequence(q: int, n: int, d: int, method: str, i: int | None = None) -> tuple[list[int], str]:
    """Whitney numbers w_0..w_n of H(q,n,d) by the requested route.

    'auto' prefers closed forms, then the enumeration transform, then the
    lattice closure.  Returns (sequence, method actually used).
    """
    params = hwdl.HwdlParams(q, n, d)
    if method in ("auto", "closed"):
        seq = hwdl.whitney_closed_sequence(params)
        if seq is not None:
            return seq, "closed"
        if method == "closed":
            if i is not None:
                v = hwdl.whitney_closed(params, i)
                if v is not None:
                    out = [0] * (n + 1)
                    out[i] = v
                    return out, "closed"
            raise ParamError(f"no closed form covers w_*({q},{n},{d})")
    if method in ("auto", "alpha"):
        alphas = [dist.alpha_hwdl(q, n, d, k) for k in range(n + 1)]
        return dist.whitney_from_alpha(alphas, n, q), "alpha"
    if method == "beta":
        alphas = [dist.alpha_hwdl(q, n, d, k) for k in range(n + 1)]
        betas = [qbinom(n, k, q) - alphas[k] for k in range(n + 1)]
        return dist.whitney_from_beta(betas, n, q), "beta"
    if method == "brute":
        g = build_geometry(hwdl_atoms(field_new(q), n, d))
        w, _ = whitney_and_charpoly(g)
        return w + [0] * (n + 1 - len(w)), "brute"
    if method == "reduction":
        if i is None:
            raise ParamError("--method reduction requires --i")
        if n < i * d:
            raise ParamError(f"reduction requires n >= i*d = {i * d}")
        lower = {}
        for t in range(i, i * d):
            v = hwdl.whitney_closed(hwdl.HwdlParams(q, t, d), i)
            if v is None:
                raise ParamError(f"reduction needs a closed w_{i}(q,{t},{d}); none known")
            lower[t] = v
        out = [0] * (n + 1)
        out[i] = hwdl.reduction_formula(q, n, d, i, lower)
        return out, "reduction"
    raise ParamError(f"unknown whitney method {method!r}")


def charpoly_of(q: int, n: int, d: int) -> tuple[UniPolyQ, str]:
    poly = hwdl.charpoly_closed(q, n, d)
    if poly is not None:
        return poly, "closed"
    w, _ = whitney_sequence(q, n, d, "alpha")
    return UniPolyQ([Fraction(w[n - e]) for e in range(n + 1)]), "alpha"


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _print_result(args, kind: str, params: dict, values, method: str, human: str, t0: float) -> None:
    runtime_ms = int((time.monotonic() - t0) * 1000)
    if getattr(args, "json", False):
        rec = make_record(kind, params, values, method, runtime_ms)
        print(json.dumps(rec, sort_keys=True))
    else:
        print(human)


def cmd_whitney(args) -> int:
    t0 = time.monotonic()
    w, method = whitney_sequence(args.q, args.n, args.d, args.method, args.i)
    params = {"q": args.q, "n": args.n, "d": args.d}
    if args.i is not None:
        params["i"] = args.i
        human = str(w[args.i])
        values = {"w": [str(w[args.i])]}
    else:
        human = " ".join(str(v) for v in w)
        values = {"w": _ints_to_strings(w)}
    _print_result(args, "whitney", params, values, method, human, t0)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    t0 = time.monotonic()
    poly, method = charpoly_of(args.q, args.n, args.d)
    deflated = 0
    if args.deflate_powers:
        r = 0
        while poly.degree > 0 and poly.evaluate(args.q**r) == 0:
            poly = deflate_roots(poly, [args.q**r])
            r += 1
            deflated += 1
    coeffs = poly.int_coeffs()
    params = {"q": args.q, "n": args.n, "d": args.d, "deflate_powers": bool(args.deflate_powers)}
    values = {"coefficients_low_to_high": _ints_to_strings(coeffs), "deflated_factors": str(deflated)}
    _print_result(args, "charpoly", params, values, method, poly.format("λ"), t0)
    return EXIT_OK


def cmd_alpha(args) -> int:
    t0 = time.monotonic()
    if args.method == "enum":
        val = dist.alpha_hwdl(args.q, args.n, args.d, args.k)
        method = "enum"
    elif args.method == "transform":
        w, _ = whitney_sequence(args.q, args.n, args.d, "auto")
        val = dist.alpha_from_whitney(w[: args.k + 1], args.n, args.q)[args.k]
        method = "transform"
    else:
        raise ParamError(f"unknown alpha method {args.method!r}")
    params = {"q": args.q, "n": args.n, "d": args.d, "k": args.k}
    _print_result(args, "alpha", params, {"alpha": [str(val)]}, method, str(val), t0)
    return EXIT_OK


def cmd_beta(args) -> int:
    t0 = time.monotonic()
    val = dist.beta_hwdl(args.q, args.n, args.d, args.k, method=args.method)
    params = {"q": args.q, "n": args.n, "d": args.d, "k": args.k}
    _print_result(args, "beta", params, {"beta": [str(val)]}, args.method, str(val), t0)
    return EXIT_OK


def cmd_gamma(args) -> int:
    t0 = time.monotonic()
    if args.method == "recursion":
        val = gamma(args.a, args.b, args.c, args.nu)
    elif args.method == "enum":
        val = gamma_enum_oracle(args.a, args.b, args.c, args.nu)
    elif args.method == "poly":
        v = gamma_poly(args.b, args.c, args.nu).evaluate(args.a)
        if v.denominator != 1:
            raise AssertionError("gamma polynomial evaluated to a non-integer")
        val = int(v)
    else:
        raise ParamError(f"unknown gamma method {args.method!r}")
    params = {"a": args.a, "b": args.b, "c": args.c, "nu": args.nu}
    _print_result(args, "gamma", params, {"gamma": [str(val)]}, args.method, str(val), t0)
    return EXIT_OK


def cmd_crit(args) -> int:
    t0 = time.monotonic()
    val = critical_exponent(hwdl_atoms(field_new(args.q), args.n, args.d))
    params = {"q": args.q, "n": args.n, "d": args.d}
    _print_result(args, "crit", params, {"crit": [str(val)]}, "chi-and-distribution", str(val), t0)
    return EXIT_OK


def cmd_geometry(args) -> int:
    t0 = time.monotonic()
    atoms = parse_atoms_file(Path(args.atoms).read_text(encoding="utf-8"))
    g = build_geometry(atoms)
    w, chi = whitney_and_charpoly(g)
    params = {"atoms": str(args.atoms), "q": atoms.spec.q, "n": atoms.n, "num_atoms": len(atoms)}
    lines = []
    values: dict = {"layer_sizes": _ints_to_strings(len(l) for l in g.layers)}
    if args.whitney or not (args.charpoly or args.crit):
        lines.append("whitney: " + " ".join(map(str, w)))
        values["w"] = _ints_to_strings(w)
    if args.charpoly:
        lines.append("charpoly: " + chi.format("λ"))
        values["coefficients_low_to_high"] = _ints_to_strings(chi.int_coeffs())
    if args.crit:
        c = critical_exponent(atoms, geometry=g)
        lines.append(f"crit: {c}")
        values["crit"] = [str(c)]
    _print_result(args, "geometry", params, values, "brute", "\n".join(lines), t0)
    return EXIT_OK


# ---------------------------------------------------------------------------
# table command with cache
# ---------------------------------------------------------------------------


def _parse_range(text: str) -> list[int]:
    """'2:5' -> [2,3,4,5]; '4' -> [4]."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _cache_path(cache_dir: Path, key: dict) -> Path:
    digest = hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()
    return cache_dir / f"{digest}.json"


def _cache_load(cache_dir: Path | None, key: dict) -> dict | None:
    if cache_dir is None:
        return None
    path = _cache_path(cache_dir, key)
    if not path.exists():
        return None
    try:
        rec = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        print(f"warning: ignoring unreadable cache entry {path}", file=sys.stderr)
        return None
    if rec.get("schema_version") != SCHEMA_VERSION or rec.get("cache_key") != key:
        print(f"warning: ignoring stale cache entry {path}", file=sys.stderr)
        return None
    return rec


def _cache_store(cache_dir: Path | None, key: dict, rec: dict) -> None:
    if cache_dir is None:
        return
    cache_dir.mkdir(parents=True, exist_ok=True)
    rec = dict(rec)
    rec["cache_key"] = key
    _cache_path(cache_dir, key).write_text(json.dumps(rec, sort_keys=True), encoding="utf-8")


def _compute_cell(cell: tuple[str, int, int, int]) -> dict:
    kind, q, n, d = cell
    t0 = time.monotonic()
    params = {"q": q, "n": n, "d": d}
    if kind == "whitney":
        w, method = whitney_sequence(q, n, d, "auto")
        values = {"w": _ints_to_strings(w)}
    elif kind == "charpoly":
        poly, method = charpoly_of(q, n, d)
        values = {"coefficients_low_to_high": _ints_to_strings(poly.int_coeffs())}
    elif kind == "alpha":
        vals = [dist.alpha_hwdl(q, n, d, k) for k in range(n + 1)]
        values = {"alpha": _ints_to_strings(vals)}
        method = "enum"
    elif kind == "beta":
        vals = [dist.beta_hwdl(q, n, d, k) for k in range(n + 1)]
        values = {"beta": _ints_to_strings(vals)}
        method = "complement"
    else:
        raise ParamError(f"unknown table kind {kind!r}")
    return make_record(kind, params, values, method, int((time.monotonic() - t0) * 1000))


_CSV_VALUE_KEY = {
    "whitney": "w",
    "charpoly": "coefficients_low_to_high",
    "alpha": "alpha",
    "beta": "beta",
}

_CSV_INDEX_NAME = {"whitney": "i", "charpoly": "i", "alpha": "k", "beta": "k"}


def cmd_table(args) -> int:
    qs = [int(tok) for tok in args.q_list.split(",") if tok]
    ns = _parse_range(args.n_range)
    ds = _parse_range(args.d_range)
    cache_dir = Path(args.cache) if args.cache else _default_cache_dir()
    cells = [(args.kind, q, n, d) for q in qs for n in ns for d in ds]

    records: list[dict | None] = [None] * len(cells)
    to_compute: list[tuple[int, tuple[str, int, int, int]]] = []
    for idx, cell in enumerate(cells):
        key = {
            "schema_version": SCHEMA_VERSION,
            "kind": cell[0],
            "params": {"q": cell[1], "n": cell[2], "d": cell[3]},
            "method": "auto",
        }
        rec = _cache_load(cache_dir, key)
        if rec is None:
            to_compute.append((idx, cell))
        else:
            records[idx] = rec

    if to_compute:
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                fresh = list(pool.map(_compute_cell, [c for _, c in to_compute]))
        else:
            fresh = [_compute_cell(c) for _, c in to_compute]
        for (idx, cell), rec in zip(to_compute, fresh):
            key = {
                "schema_version": SCHEMA_VERSION,
                "kind": cell[0],
                "params": {"q": cell[1], "n": cell[2], "d": cell[3]},
                "method": "auto",
            }
            _cache_store(cache_dir, key, rec)
            records[idx] = rec

    out_path = Path(args.out)
    try:
        if args.format == "json":
            out_path.write_text(
                json.dumps([_strip_cache_key(r) for r in records], sort_keys=True, indent=1)
                + "\n",
                encoding="utf-8",
            )
        else:
            idx_name = _CSV_INDEX_NAME[args.kind]
            lines = [f"q,n,d,{idx_name},value"]
            for rec in records:
                assert rec is not None
                p = rec["params"]
                for i, v in enumerate(rec["values"][_CSV_VALUE_KEY[args.kind]]):
                    lines.append(f"{p['q']},{p['n']},{p['d']},{i},{v}")
            out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    print(f"wrote {len(records)} records to {out_path}")
    return EXIT_OK


def _strip_cache_key(rec: dict | None) -> dict:
    assert rec is not None
    return {k: v for k, v in rec.items() if k != "cache_key"}


def _default_cache_dir() -> Path | None:
    env = os.environ.get("WHITLAB_CACHE")
    return Path(env) if env else None


# ---------------------------------------------------------------------------
# verify command
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        checks = run_suites([args.suite], seed=args.seed, budget_sec=args.budget_sec)
    except KeyError:
        print(
            f"error: unknown suite {args.suite!r}; choose from "
            f"{', '.join(list(SUITES) + ['all'])}",
            file=sys.stderr,
        )
        return EXIT_BAD_PARAMS
    for check in checks:
        print(check.line())
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whitlab",
        description="Exact Whitney numbers and code counts of restriction geometries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_qnd(p):
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("whitney", help="Whitney numbers of H(q,n,d)")
    add_qnd(p)
    p.add_argument("--i", type=int, default=None)
    p.add_argument(
        "--method",
        choices=["auto", "closed", "alpha", "beta", "brute", "reduction"],
        default="auto",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_whitney)

    p = sub.add_parser("charpoly", help="characteristic polynomial of H(q,n,d)")
    add_qnd(p)
    p.add_argument("--deflate-powers", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_charpoly)

    p = sub.add_parser("alpha", help="number of k-dim subspaces avoiding the atoms")
    add_qnd(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["enum", "transform"], default="enum")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_alpha)

    p = sub.add_parser("beta", help="number of k-dim codes with distance <= d")
    add_qnd(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["complement", "enum", "closed2"], default="complement")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_beta)

    p = sub.add_parser("gamma", help="agreement number gamma_a(b,c,nu)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--method", choices=["recursion", "enum", "poly"], default="recursion")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_gamma)

    p = sub.add_parser("crit", help="critical exponent of H(q,n,d)")
    add_qnd(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_crit)

    p = sub.add_parser("geometry", help="build a geometry from an atoms file")
    p.add_argument("--atoms", required=True)
    p.add_argument("--whitney", action="store_true")
    p.add_argument("--charpoly", action="store_true")
    p.add_argument("--crit", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_geometry)

    p = sub.add_parser("table", help="compute a grid and write CSV/JSON")
    p.add_argument("--kind", choices=["whitney", "charpoly", "alpha", "beta"], default="whitney")
    p.add_argument("--q-list", required=True, help="comma-separated field sizes")
    p.add_argument("--n-range", required=True, help="lo:hi or single value")
    p.add_argument("--d-range", required=True, help="lo:hi or single value")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--cache", default=None, help="cache dir (default: $WHITLAB_CACHE)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-sec", type=float, default=None)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS


if __name__ == "__main__":
    sys.exit(main())
