"""Command-line front end.

Every subcommand builds a report ``{"command", "status", "results",
"message"}``.  ``--json`` prints it as sorted JSON; otherwise a flat
``key: value`` listing is printed.  Exit codes: 0 ok, 1 domain error,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Sequence

from . import intersection_calc as ic
from . import quotient_sing as qs
from . import riemann_roch as rr
from . import weierstrass as ws
from .exact_algebra import UniPoly
from .serialize import SchemaError, load_model, params_from_json, read_json, to_json

DEFAULT_TRUNCATION = 150


class UsageError(Exception):
    pass


def truncation() -> int:
    raw = os.environ.get("T237_TRUNCATION", str(DEFAULT_TRUNCATION))
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"T237_TRUNCATION must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("T237_TRUNCATION must be nonnegative")
    return value


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").strip("[]").split(",") if x]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None


def _rational(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{what}: expected a rational 'p/q', got {text!r}") from None


def _rationals(text: str, what: str) -> list[Fraction]:
    return [_rational(x, what) for x in text.replace(" ", "").strip("[]").split(",") if x]


def _assignments(items: Sequence[str], what: str) -> dict[str, Fraction]:
    out = {}
    for item in items:
        for part in item.split(","):
            if not part:
                continue
            key, sep, value = part.partition("=")
            if not sep:
                raise UsageError(f"{what}: expected NAME=VALUE, got {part!r}")
            out[key.strip()] = _rational(value.strip(), f"{what} {key}")
    return out


def _load(source: str, kind: type, what: str):
    obj = load_model(source)
    if not isinstance(obj, kind):
        raise UsageError(f"{what}: {source} does not describe a {kind.__name__}")
    return obj


# -- subcommands --------------------------------------------------------------

def _chain_arg(args) -> qs.HJChain:
    if args.chain and args.type:
        raise UsageError("give either --chain or --type, not both")
    if args.chain:
        chain = _ints(args.chain, "--chain")
        try:
            return qs.HJChain(tuple(chain))
        except ValueError as exc:
            raise UsageError(f"--chain: {exc}") from None
    if args.type:
        nq = _ints(args.type, "--type")
        if len(nq) != 2:
            raise UsageError("--type: expected N,Q")
        return qs.hj_expand(*nq)
    raise UsageError("one of --chain or --type is required")


def cmd_delta(args) -> dict:
    chain = _chain_arg(args)
    if args.canonical == (args.incidence is not None):
        raise UsageError("give exactly one of --canonical or --incidence")
    if args.canonical:
        fn = lambda n: qs.delta_canonical(chain, n)  # noqa: E731
        index = qs.canonical_index(chain)
    else:
        inc = qs.SingularityIncidence(chain, tuple(_ints(args.incidence, "--incidence")))
        fn = lambda n: qs.delta(inc, n)  # noqa: E731
        index = qs.local_index(inc)
    out: dict[str, Any] = {"chain": list(chain.selfints), "type": str(qs.hj_evaluate(chain)), "index": index}
    if args.n_max is not None:
        out["table"] = {str(n): fn(n) for n in range(1, args.n_max + 1)}
    else:
        out["n"] = args.n
        out["delta"] = fn(args.n)
    return out


def cmd_hj(args) -> dict:
    if args.chain:
        chain = qs.HJChain(tuple(_ints(args.chain, "--chain")))
        cq = qs.hj_evaluate(chain)
        return {"chain": list(chain.selfints), "n": cq.n, "q": cq.q, "type": str(cq)}
    if args.n is None or args.q is None:
        raise UsageError("give --n and --q, or --chain")
    chain = qs.hj_expand(args.n, args.q)
    return {
        "chain": list(chain.selfints),
        "n": args.n,
        "q": args.q,
        "discrepancies": qs.discrepancies(chain),
    }


def cmd_plurigenera(args) -> dict:
    data = _load(args.input, rr.SurfaceRRData, "plurigenera")
    N = args.N if args.N is not None else truncation()
    table = rr.plurigenera(data, N)
    out: dict[str, Any] = {
        "mode": data.mode,
        "N": N,
        "P": {str(n): table[n] for n in range(1, N + 1)},
        "runs": [list(r) for r in table.runs()],
    }
    if args.weights:
        out["weights"] = _ints(args.weights, "--weights")
        out["numerator"] = rr.hilbert_numerator(table, out["weights"], N)
    return out


def cmd_hilbert(args) -> dict:
    weights = _ints(args.weights, "--weights")
    N = args.N if args.N is not None else truncation()
    out: dict[str, Any] = {"weights": weights, "N": N}
    if args.input:
        data = _load(args.input, rr.SurfaceRRData, "hilbert")
        num = rr.hilbert_numerator(rr.plurigenera(data, N), weights, N)
        out["numerator"] = num
        out["numerator_text"] = str(num)
    if args.degree is not None:
        series = rr.hypersurface_hilbert(weights, args.degree, N)
        out["degree"] = args.degree
        out["series"] = series
        if args.input:
            table = rr.plurigenera(data, N)
            out["matches_plurigenera"] = [int(c) for c in series.coeffs[: N + 1]] == list(table.values)
    if "numerator" not in out and "series" not in out:
        raise UsageError("give --input (numerator) and/or --degree (hypersurface series)")
    return out


def _config(args) -> ic.CurveConfig:
    return _load(args.input, ic.CurveConfig, "configuration")


def cmd_pullback(args) -> dict:
    config = _config(args)
    names = [x for x in (args.contract or "").split(",") if x]
    if args.keep:
        keep = set(x for x in args.keep.split(",") if x)
        unknown = keep - set(config.names)
        if unknown:
            raise UsageError(f"--keep: unknown curves {sorted(unknown)}")
        names = [n for n in config.names if n not in keep]
    if not names:
        raise UsageError("give --contract or --keep")
    for n in names:
        config.index(n)
    out: dict[str, Any] = {"contracted": names}
    if args.canonical:
        K = ic.QDivisor(_assignments(args.strict or [], "--strict"))
        D = ic.pullback_canonical(config, names, K)
        out["B"] = {n: D[n] for n in names}
    else:
        strict = ic.QDivisor(_assignments(args.strict or [], "--strict"))
        D = ic.pullback(config, names, strict)
    out["pullback"] = D
    out["self_intersection"] = ic.self_intersection(config, D)
    return out


def cmd_lattice(args) -> dict:
    config = _config(args)
    G = ic.gram(config)
    det = ic.determinant(G)
    sig = ic.signature(G)
    out: dict[str, Any] = {
        "rank": len(G),
        "determinant": det,
        "signature": list(sig),
        "even": all(G[i][i] % 2 == 0 for i in range(len(G))),
    }
    vectors = {}
    for spec in args.vector or []:
        name, _, coords = spec.partition("=")
        vectors[name] = _ints(coords, f"--vector {name}")
    if args.input == "t237":
        vectors.setdefault("h", list(ic.H_VECTOR))
        vectors.setdefault("s", list(ic.S_VECTOR))
        vectors.setdefault("f", list(ic.F_VECTOR))
    report = {}
    for name, v in vectors.items():
        if len(v) != len(G):
            raise UsageError(f"--vector {name}: expected {len(G)} coordinates")
        report[name] = {
            "square": ic.pairing(G, v, v),
            "roots": [ic.pairing(G, v, [int(i == k) for i in range(len(G))]) for k in range(len(G))],
        }
    if report:
        out["vectors"] = report
    if args.split:
        e = vectors.get(args.split) or _ints(args.split, "--split")
        sp = ic.split_hyperbolic(G, e)
        cg = [list(r) for r in sp.complement_gram]
        out["split"] = {
            "e": list(sp.e),
            "e_dual": list(sp.e_dual),
            "complement_rank": len(cg),
            "complement_determinant": ic.determinant(cg) if cg else 1,
            "complement_signature": list(ic.signature(cg)) if cg else [0, 0, 0],
            "complement_even": all(cg[i][i] % 2 == 0 for i in range(len(cg))),
        }
    return out


def _fiber_summary(reports) -> dict:
    return {
        "fibers": reports,
        "euler": ws.euler_sum(reports),
        "counts": dict(sorted(ws.fiber_counts(reports).items())),
    }


def cmd_weierstrass(args) -> dict:
    if args.input:
        m = _load(args.input, ws.WeierstrassModel, "weierstrass")
    else:
        if args.a is None or args.b is None:
            raise UsageError("give --input or both --a and --b")
        m = ws.WeierstrassModel(UniPoly(_rationals(args.a, "--a")), UniPoly(_rationals(args.b, "--b")), args.N)
    reports = ws.classify_places(m)
    out: dict[str, Any] = {"model": m, "discriminant": ws.discriminant(m), **_fiber_summary(reports)}
    if args.minimalize:
        for r in reports:
            if r.kodaira == ws.NON_MINIMAL:
                m = ws.minimalize(m, r.place)
        if m.N != out["model"].N:
            out["minimal"] = {"model": m, **_fiber_summary(ws.classify_places(m))}
    return out


def _surface(t: ws.BrieskornParams) -> dict:
    return {"params": t, "report": ws.classify_surface(t)}


def _sweep_one(raw) -> dict:
    try:
        return {"status": "ok", **to_json(_surface(params_from_json(raw)))}
    except (SchemaError, ValueError, ArithmeticError) as exc:
        return {"status": "error", "message": str(exc)}


def cmd_brieskorn(args) -> dict:
    chosen = [x is not None and x is not False for x in (args.input, args.special, args.sweep)] + [bool(args.t)]
    if sum(chosen) != 1:
        raise UsageError("give exactly one of --input, --t, --special or --sweep")
    if args.sweep:
        items = read_json(args.sweep)
        if not isinstance(items, list):
            raise SchemaError(f"{args.sweep}: expected a JSON list of parameter objects")
        if args.jobs > 1 and len(items) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_sweep_one, items))  # map keeps input order
        else:
            results = [_sweep_one(x) for x in items]
        return {"sweep": results}
    if args.special:
        ab = _rationals(args.special, "--special")
        if len(ab) != 2:
            raise UsageError("--special: expected A,B")
        a, b = ab
        out = _surface(ws.special_locus_params(a, b))
        out["special"] = {"a": a, "b": b}
        return out
    if args.t:
        return _surface(params_from_json({k: str(v) for k, v in _assignments(args.t, "--t").items()}))
    return _surface(_load(args.input, ws.BrieskornParams, "brieskorn"))


def cmd_volume(args) -> dict:
    c = _rational(args.c, "--c")
    return {"c": c, "volume": rr.min_volume(c)}


# -- parser -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="t237", description="Exact invariants of surfaces with quotient singularities and elliptic K3 models.")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print the report as JSON")
        sp.set_defaults(func=fn)
        return sp

    sp = add("delta", cmd_delta, "Riemann-Roch correction term at a cyclic quotient point")
    sp.add_argument("--chain", help="self-intersections b1,...,bk")
    sp.add_argument("--type", help="N,Q for 1/N(1,Q)")
    sp.add_argument("--canonical", action="store_true", help="correction for n*K")
    sp.add_argument("--incidence", help="strict-transform multiplicities along the chain")
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--n-max", type=int, help="print the table for n = 1..N_MAX")

    sp = add("hj", cmd_hj, "Hirzebruch-Jung continued fractions")
    sp.add_argument("--n", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--chain")

    sp = add("plurigenera", cmd_plurigenera, "plurigenera table from Riemann-Roch data")
    sp.add_argument("--input", required=True, help="JSON file or preset name")
    sp.add_argument("--N", type=int, help="last index (default T237_TRUNCATION)")
    sp.add_argument("--weights", help="also print the Hilbert numerator for these weights")

    sp = add("hilbert", cmd_hilbert, "Hilbert numerators and hypersurface series")
    sp.add_argument("--weights", required=True)
    sp.add_argument("--degree", type=int)
    sp.add_argument("--input")
    sp.add_argument("--N", type=int)

    sp = add("pullback", cmd_pullback, "numerical pullback under a contraction")
    sp.add_argument("--input", required=True, help="configuration file or preset")
    sp.add_argument("--contract", help="comma-separated curves to contract")
    sp.add_argument("--keep", help="contract every curve except these")
    sp.add_argument("--strict", action="append", help="NAME=COEFF for the strict transform (or K representative)")
    sp.add_argument("--canonical", action="store_true", help="pull back K instead of a strict transform")

    sp = add("lattice", cmd_lattice, "Gram matrix invariants and hyperbolic splitting")
    sp.add_argument("--input", required=True)
    sp.add_argument("--vector", action="append", help="NAME=c1,...,cn in the curve basis")
    sp.add_argument("--split", help="isotropic vector (name or coordinates) to split off")

    sp = add("weierstrass", cmd_weierstrass, "Kodaira fibres of a Weierstrass model")
    sp.add_argument("--input")
    sp.add_argument("--a", help="coefficients of A, constant term first")
    sp.add_argument("--b", help="coefficients of B, constant term first")
    sp.add_argument("--N", type=int, default=2)
    sp.add_argument("--minimalize", action="store_true")

    sp = add("brieskorn", cmd_brieskorn, "Brieskorn family of T237-polarized K3 surfaces")
    sp.add_argument("--input", help="JSON file with t4 ... t42")
    sp.add_argument("--t", action="append", help="tK=VALUE assignments")
    sp.add_argument("--special", help="A,B on the special locus")
    sp.add_argument("--sweep", help="JSON list of parameter objects")
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("volume", cmd_volume, "minimal volume v(c)")
    sp.add_argument("--c", required=True)
    return p


# -- rendering ----------------------------------------------------------------

def _is_scalar(x) -> bool:
    return not isinstance(x, (dict, list))


def _human(value: Any, prefix: str = "") -> list[str]:
    if isinstance(value, dict):
        lines = []
        for k in sorted(value):
            key = f"{prefix}.{k}" if prefix else k
            lines.extend(_human(value[k], key))
        return lines
    if isinstance(value, list):
        if all(_is_scalar(x) for x in value):
            return [f"{prefix}: [" + ",".join(str(x) for x in value) + "]"]
        lines = []
        for i, x in enumerate(value):
            lines.extend(_human(x, f"{prefix}[{i}]"))
        return lines
    return [f"{prefix}: {value}"]


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    report: dict[str, Any] = {"command": argv, "status": "ok", "results": None, "message": ""}
    code = 0
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
        report["results"] = to_json(args.func(args))
    except (UsageError, SchemaError) as exc:
        code, report["status"], report["message"] = 2, "error", str(exc)
    except (ValueError, ArithmeticError, KeyError) as exc:
        code, report["status"], report["message"] = 1, "error", f"{type(exc).__name__}: {exc}"
    if code:
        print(f"t237: {report['message']}", file=stderr)
    if want_json:
        print(json.dumps(report, sort_keys=True, indent=2), file=stdout)
    elif code == 0:
        print("\n".join(_human(report["results"])), file=stdout)
    else:
        print(f"error: {report['message']}", file=stdout)
    return code


def main() -> None:
    sys.exit(run())
