"""Command line front end.

Every operation is a subcommand; results go to stdout as a table (default),
csv, or line-delimited json records, diagnostics to stderr.  Output for
identical inputs is byte-identical, whatever the cache or scan partitioning
settings.  All integers are rendered as decimal strings in json so nothing
overflows downstream tools.

Exit codes: 0 success, 1 invalid arguments, 2 budget or scan limit,
3 violated precondition (e.g. a leading-digit scan over a dependent pair).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .blocks import block_certificate, normalize_dominant, perturbation_bound
from .digits import (
    AdicExpansion,
    LeadingString,
    block_decomposition,
    expand,
    leading_string,
)
from .equivalence import (
    decide_equivalence,
    distortion_table,
    equivalence_certificate,
    sampled_bilipschitz_check,
)
from .errors import HypothesisViolation, LimitError
from .powersearch import (
    block_growth_search,
    find_aligned_exponents,
    find_leading_exponents,
    multiplicative_dependence,
)
from .wordlen import minimal_length, oracle_length

CACHE_ENV = "POWERWORD_CACHE_DIR"
_CACHE_FILE = "lengths.txt"


class _Parser(argparse.ArgumentParser):
    # bad arguments exit 1, not argparse's default 2 (2 means budget here)
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _digit_str(exp: AdicExpansion) -> str:
    """Most-significant-first rendering with a base prefix, e.g. base2:1101."""
    if not exp.digits:
        body = "0"
    elif exp.base <= 10:
        body = "".join(str(d) for d in reversed(exp.digits))
    else:
        body = ".".join(str(d) for d in reversed(exp.digits))
    return f"base{exp.base}:{body}"


def _witness_str(rep) -> str:
    if not rep.terms:
        return "0"
    parts = []
    for e in sorted(rep.terms, reverse=True):
        c = rep.terms[e]
        sign = "+" if c > 0 else "-"
        coeff = "" if abs(c) == 1 else f"{abs(c)}*"
        parts.append(f"{sign}{coeff}{rep.base}^{e}")
    return "".join(parts)


def _parse_target(spec: str, base: int) -> LeadingString:
    """Digit window, most significant first: '701' or comma form '7,0,1'."""
    if "," in spec:
        digits = [int(p) for p in spec.split(",")]
    else:
        digits = [int(ch) for ch in spec]
    if not digits:
        raise ValueError("empty target window")
    return LeadingString(base, tuple(reversed(digits)))


def _parse_pairs(spec: str) -> list[tuple[int, int]]:
    """'x:y,x:y' pairs."""
    pairs = []
    for item in spec.split(","):
        x, _, y = item.partition(":")
        pairs.append((int(x), int(y)))
    return pairs


def _jsonable(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, (list, tuple)):
        return ";".join(_cell(v) for v in x)
    if isinstance(x, dict):
        return ";".join(f"{k}:{_cell(v)}" for k, v in x.items())
    return str(x)


def _render(fmt: str, command: str, inputs: dict, records: list[dict]) -> str:
    out = io.StringIO()
    if fmt == "json":
        for rec in records:
            line = json.dumps(
                {
                    "command": command,
                    "inputs": _jsonable(inputs),
                    "result": _jsonable(rec),
                    "version": __version__,
                },
                separators=(",", ":"),
            )
            out.write(line + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        if records:
            header = list(records[0])
            writer.writerow(header)
            for rec in records:
                writer.writerow([_cell(rec.get(h)) for h in header])
    else:
        if len(records) == 1:
            width = max(len(k) for k in records[0])
            for k, v in records[0].items():
                out.write(f"{k.ljust(width)}  {_cell(v)}\n")
        elif records:
            header = list(records[0])
            cells = [[_cell(rec.get(h)) for h in header] for rec in records]
            widths = [
                max(len(header[i]), max(len(row[i]) for row in cells))
                for i in range(len(header))
            ]
            out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
            for row in cells:
                out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
    return out.getvalue()


# -- length cache -----------------------------------------------------------

def _cache_path(args) -> str | None:
    if getattr(args, "no_cache", False):
        return None
    cache_dir = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV)
    if not cache_dir:
        return None
    return os.path.join(cache_dir, _CACHE_FILE)


def _cache_lookup(path: str, a: int, n: int) -> int | None:
    try:
        with open(path, "r", encoding="ascii") as fh:
            for line in fh:
                parts = line.strip().split(",")
                if len(parts) == 3 and parts[0] == str(a) and parts[1] == str(n):
                    return int(parts[2])
    except FileNotFoundError:
        return None
    return None


def _cache_append(path: str, a: int, n: int, length: int) -> None:
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "a", encoding="ascii") as fh:
        fh.write(f"{a},{n},{length}\n")


# -- handlers: each returns (inputs, records) -------------------------------

def _cmd_expand(args):
    exp = expand(args.n, args.base)
    rec = {
        "n": args.n,
        "base": args.base,
        "digits": _digit_str(exp),
        "order": exp.order if exp.digits else None,
    }
    return {"n": args.n, "base": args.base}, [rec]


def _cmd_blocks(args):
    dec = block_decomposition(args.n, args.base)
    rec = {
        "n": args.n,
        "base": args.base,
        "blocks": [f"[{u},{v})" for u, v in dec.blocks],
        "count": dec.count,
    }
    return {"n": args.n, "base": args.base}, [rec]


def _cmd_length(args):
    inputs = {"n": args.n, "base": args.base, "oracle": args.oracle}
    if args.oracle:
        length = oracle_length(
            args.n, args.base, args.slack, node_budget=args.node_budget
        )
        return inputs, [{"n": args.n, "base": args.base, "length": length}]
    if args.witness:
        res = minimal_length(args.n, args.base)
        rec = {
            "n": args.n,
            "base": args.base,
            "length": res.length,
            "witness": _witness_str(res.witness),
        }
        return inputs, [rec]
    path = _cache_path(args)
    length = _cache_lookup(path, args.base, args.n) if path else None
    if length is None:
        length = minimal_length(args.n, args.base).length
        if path:
            _cache_append(path, args.base, args.n, length)
    return inputs, [{"n": args.n, "base": args.base, "length": length}]


def _cmd_distance(args):
    res = minimal_length(args.x - args.y, args.base)
    rec = {"x": args.x, "y": args.y, "base": args.base, "distance": res.length}
    return {"x": args.x, "y": args.y, "base": args.base}, [rec]


def _cmd_lemma21(args):
    exps = [int(p) for p in args.exponents.split(",")]
    digs = [int(p) for p in args.digits.split(",")]
    result = normalize_dominant(exps, digs, args.base)
    rec = {
        "value": result.value(),
        "base": args.base,
        "digits": _digit_str(result),
        "blocks": len(result.block_runs()),
        "bound": len(exps) - 1,
    }
    return {"exponents": exps, "digits": digs, "base": args.base}, [rec]


def _cmd_perturb(args):
    adds = []
    if args.add:
        for item in args.add.split(","):
            w, _, d = item.partition(":")
            adds.append((int(w), int(d)))
    before, after = perturbation_bound(expand(args.n, args.base), adds)
    rec = {
        "n": args.n,
        "base": args.base,
        "added": len(adds),
        "blocks_before": before,
        "blocks_after": after,
    }
    return {"n": args.n, "base": args.base, "add": args.add or ""}, [rec]


def _cmd_certify_blocks(args):
    terms = []
    for item in args.terms.split(","):
        e, _, sd = item.partition(":")
        coeff = int(sd)
        terms.append((int(e), 1 if coeff > 0 else -1, abs(coeff)))
    cert = block_certificate(terms, args.base)
    rec = {
        "n": cert.n,
        "base": cert.base,
        "k": cert.k,
        "blocks": cert.block_count,
        "claimed_bound": cert.claimed_bound,
        "U": list(cert.U),
        "V": ["|".join(str(v) for v in part) for part in cert.V_parts],
        "W": list(cert.W),
        "n_parts": list(cert.n_parts),
    }
    return {"terms": args.terms, "base": args.base}, [rec]


def _cmd_dependence(args):
    dep = multiplicative_dependence(args.a, args.b)
    rec = {"a": args.a, "b": args.b, "dependent": dep.dependent}
    if dep.dependent:
        rec["m"], rec["n"] = dep.witness
        rec["root"], rec["p"], rec["q"] = dep.common_root
    return {"a": args.a, "b": args.b}, [rec]


def _cmd_search_leading(args):
    target = _parse_target(args.target, args.a)
    hits = find_leading_exponents(
        args.a,
        args.b,
        target,
        args.count,
        args.limit,
        chunk_size=args.chunk_size,
        workers=args.workers,
    )
    records = [{"n": n, "power": f"{args.b}^{n}"} for n in hits]
    inputs = {"a": args.a, "b": args.b, "target": args.target,
              "count": args.count, "limit": args.limit}
    return inputs, records


def _cmd_density(args):
    target = _parse_target(args.target, args.a)
    rep = find_aligned_exponents(
        args.a,
        args.b,
        target,
        args.limit,
        chunk_size=args.chunk_size,
        workers=args.workers,
    )
    rec = {
        "a": args.a,
        "b": args.b,
        "target": args.target,
        "k": target.k,
        "scan_limit": rep.scan_limit,
        "aligned_hits": len(rep.aligned_hits),
        "empirical_density": str(rep.empirical_density),
        "theoretical_density": rep.theoretical_density,
    }
    inputs = {"a": args.a, "b": args.b, "target": args.target, "limit": args.limit}
    return inputs, [rec]


def _cmd_grow_blocks(args):
    n, blocks = block_growth_search(args.a, args.b, args.ell, args.limit)
    rec = {"a": args.a, "b": args.b, "ell": args.ell, "n": n, "blocks": blocks}
    return {"a": args.a, "b": args.b, "ell": args.ell, "limit": args.limit}, [rec]


def _cmd_equivalent(args):
    rec = {"a": args.a, "b": args.b, "equivalent": decide_equivalence(args.a, args.b)}
    return {"a": args.a, "b": args.b}, [rec]


def _cmd_certify_equivalence(args):
    cert = equivalence_certificate(args.a, args.b, args.range)
    rec = {
        "a": cert.a,
        "b": cert.b,
        "m": cert.m,
        "n": cert.n,
        "H_A": cert.H_A,
        "H_B": cert.H_B,
        "K": cert.K,
        "checked_range": args.range,
    }
    return {"a": args.a, "b": args.b, "range": args.range}, [rec]


def _cmd_distortion(args):
    table = distortion_table(args.a, args.b, args.jmax)
    records = [
        {"j": j, "length": length, "blocks": blocks}
        for j, length, blocks in table.rows
    ]
    return {"a": args.a, "b": args.b, "jmax": args.jmax}, records


def _cmd_check_bilipschitz(args):
    if args.pairs:
        samples = _parse_pairs(args.pairs)
    else:
        import random

        rng = random.Random(args.seed)
        samples = [
            (rng.randint(-args.max_abs, args.max_abs),
             rng.randint(-args.max_abs, args.max_abs))
            for _ in range(args.random)
        ]
    ok = sampled_bilipschitz_check(args.a, args.b, args.K, samples)
    rec = {"a": args.a, "b": args.b, "K": args.K, "samples": len(samples), "ok": ok}
    inputs = {"a": args.a, "b": args.b, "K": args.K}
    return inputs, [rec]


_HANDLERS = {
    "expand": _cmd_expand,
    "blocks": _cmd_blocks,
    "length": _cmd_length,
    "distance": _cmd_distance,
    "lemma21": _cmd_lemma21,
    "perturb": _cmd_perturb,
    "certify-blocks": _cmd_certify_blocks,
    "dependence": _cmd_dependence,
    "search-leading": _cmd_search_leading,
    "density": _cmd_density,
    "grow-blocks": _cmd_grow_blocks,
    "equivalent": _cmd_equivalent,
    "certify-equivalence": _cmd_certify_equivalence,
    "distortion": _cmd_distortion,
    "check-bilipschitz": _cmd_check_bilipschitz,
}


def build_parser() -> _Parser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("table", "csv", "json"), default="table")

    parser = _Parser(prog="powerword", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[fmt], help="base-a digit expansion of n")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("n", type=int)

    p = sub.add_parser("blocks", parents=[fmt], help="maximal nonzero-digit runs of n")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("n", type=int)

    p = sub.add_parser("length", parents=[fmt], help="word length of n over powers of the base")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="exhaustive search instead of the solver")
    p.add_argument("--witness", action="store_true", help="print a representation attaining the length")
    p.add_argument("--slack", type=int, default=1, help="extra exponent headroom for the oracle")
    p.add_argument("--node-budget", type=int, default=10_000_000)
    p.add_argument("--cache-dir", default=None, help=f"length cache directory (or ${CACHE_ENV})")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("n", type=int)

    p = sub.add_parser("distance", parents=[fmt], help="word metric between two integers")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)

    p = sub.add_parser("lemma21", parents=[fmt],
                       help="expand a dominant power minus smaller terms, checking the digit layout")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--exponents", required=True, help="strictly decreasing, e.g. 4,1")
    p.add_argument("--digits", required=True, help="one digit per exponent, e.g. 1,1")

    p = sub.add_parser("perturb", parents=[fmt], help="block counts before/after adding fresh powers")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--add", default="", help="position:digit pairs, e.g. 1:1,3:2")
    p.add_argument("n", type=int)

    p = sub.add_parser("certify-blocks", parents=[fmt],
                       help="block-count certificate for a signed sum of powers")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--terms", required=True, help="exponent:signed-digit pairs, e.g. 4:+1,2:-1,1:+1")

    p = sub.add_parser("dependence", parents=[fmt], help="decide a**m == b**n with minimal witness")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = sub.add_parser("search-leading", parents=[fmt],
                       help="exponents n with b**n opening on a digit window in base a")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--target", required=True, help="window, most significant digit first")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--limit", type=int, default=10_000)
    p.add_argument("--chunk-size", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("density", parents=[fmt],
                       help="aligned-hit census vs. the predicted density")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--limit", type=int, default=10_000)
    p.add_argument("--chunk-size", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("grow-blocks", parents=[fmt],
                       help="least exponent whose power reaches a block count")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--limit", type=int, default=10_000)

    p = sub.add_parser("equivalent", parents=[fmt],
                       help="are the two word metrics within a constant factor?")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = sub.add_parser("certify-equivalence", parents=[fmt],
                       help="explicit equivalence constants for a dependent pair")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--range", type=int, default=60, help="verify exponents up to this")

    p = sub.add_parser("distortion", parents=[fmt],
                       help="per-exponent length and block count of b**j in base a")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--jmax", type=int, required=True)

    p = sub.add_parser("check-bilipschitz", parents=[fmt],
                       help="two-sided K comparison of the metrics on sample pairs")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--pairs", default=None, help="x:y,x:y ...")
    p.add_argument("--random", type=int, default=100, help="sample count when --pairs is absent")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-abs", type=int, default=10_000)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        inputs, records = _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"powerword: error: {exc}", file=sys.stderr)
        return 1
    except LimitError as exc:
        print(f"powerword: error: {exc}", file=sys.stderr)
        return 2
    except HypothesisViolation as exc:
        print(f"powerword: error: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(_render(args.format, args.command, inputs, records))
    return 0


if __name__ == "__main__":
    sys.exit(main())
