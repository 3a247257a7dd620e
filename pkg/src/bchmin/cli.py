"""Command-line interface: generate verified minimum-weight supports,
re-verify serialized supports, and reproduce the bundled golden tables.

Exit codes: 0 success / verified, 2 verification failure, 3 uncovered
parameter combination, 4 solver retries exhausted, 5 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from math import gcd

from . import construct, gflinalg, solvers, verify
from .construct import CodewordSupport
from .fixtures import BCH23_FIXTURE, BCH27_FIXTURES
from .gf2m import default_field, parse_poly

SPEC_VERSION = 1
SEED_ENV_VAR = "BCHMIN_SEED"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 2
EXIT_UNCOVERED = 3
EXIT_EXHAUSTED = 4
EXIT_PARSE = 5


class UncoveredCase(ValueError):
    """No solver route covers this (m, i, s, method) combination."""


class ParseError(ValueError):
    """Unreadable support file."""


# -- serialization -----------------------------------------------------------


def _elem_out(ctx, x: int):
    """Log index for m <= 24 (with -1 for the zero element), hex otherwise."""
    if ctx.m <= 24:
        return -1 if x == 0 else ctx.log(x)
    return hex(x)


def _elem_in(ctx, v) -> int:
    if isinstance(v, str):
        return int(v, 16)
    if v == -1:
        return 0
    return ctx.exp(v)


def _sorted_out(ctx, elems) -> list:
    if ctx.m <= 24:
        return sorted(_elem_out(ctx, x) for x in elems)
    return [hex(x) for x in sorted(elems)]


def render_json(ctx, cw: CodewordSupport, meta: dict) -> str:
    doc = {
        "spec_version": SPEC_VERSION,
        "m": ctx.m,
        "poly": hex(ctx.poly),
        "d": cw.claimed_distance,
        "extended": cw.extended,
        "support": _sorted_out(ctx, cw.elems),
        "verified": True,
    }
    doc.update(meta)
    return json.dumps(doc, indent=2)


def render_logsupport(ctx, cw: CodewordSupport) -> str:
    # falls back to hex element values when no log table exists (m > 24)
    header = (
        f"m={ctx.m} poly={hex(ctx.poly)} d={cw.claimed_distance} "
        f"extended={1 if cw.extended else 0}"
    )
    return header + "\n" + ",".join(str(e) for e in _sorted_out(ctx, cw.elems)) + "\n"


def render_bits(ctx, cw: CodewordSupport) -> str:
    header = (
        f"m={ctx.m} poly={hex(ctx.poly)} d={cw.claimed_distance} "
        f"extended={1 if cw.extended else 0}"
    )
    return header + "\n" + "\n".join(hex(x) for x in sorted(cw.elems)) + "\n"


def parse_support_file(text: str) -> CodewordSupport:
    """Accept the JSON document or the two-line log-support format."""
    text = text.strip()
    if not text:
        raise ParseError("empty input")
    if text.startswith("{"):
        try:
            doc = json.loads(text)
            ctx = default_field(int(doc["m"]), parse_poly(doc["poly"]))
            elems = frozenset(_elem_in(ctx, v) for v in doc["support"])
            return CodewordSupport(
                ctx, elems, int(doc["d"]), bool(doc["extended"])
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"bad JSON support file: {exc}") from exc
    try:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        fields = dict(part.split("=", 1) for part in lines[0].split())
        ctx = default_field(int(fields["m"]), parse_poly(fields["poly"]))
        body = [v.strip() for ln in lines[1:] for v in ln.split(",") if v.strip()]
        if body[0].lower().startswith("0x"):
            elems = frozenset(int(v, 16) for v in body)
        else:
            elems = frozenset(_elem_in(ctx, int(v)) for v in body)
        return CodewordSupport(
            ctx, elems, int(fields["d"]), fields["extended"] == "1"
        )
    except (KeyError, ValueError, IndexError) as exc:
        raise ParseError(f"bad log-support file: {exc}") from exc


# -- generation routing ------------------------------------------------------


def _route_method(m: int, i: int) -> str:
    if i == 2:
        if m >= 4 and m % 2 == 0:
            return solvers.I2_EVEN
        if m >= 5:
            return solvers.I2_ODD
    elif i == 3:
        if m >= 6 and m % 2 == 0:
            return solvers.I3_EVEN
        if m >= 7:
            return solvers.I3_HEURISTIC
    elif i == 4:
        if m >= 8 and m % 4 == 0:
            return solvers.I4_DIV4
    raise UncoveredCase(f"no solver covers i={i}, m={m}")


def _composite_split(m: int) -> tuple[int, int]:
    for a in range(2, m):
        if m % a == 0:
            b = m // a
            if min(a, b) >= 2 and max(a, b) >= 3 and gcd(a, b) == 1:
                return a, b
    raise UncoveredCase(f"m={m} has no coprime split with min >= 2, max >= 3")


def _solve(ctx, method: str, seed: int, max_retries: int | None) -> solvers.SolverReport:
    kw = {} if max_retries is None else {"max_retries": max_retries}
    if method == solvers.I2_EVEN:
        return solvers.solve_i2_even(ctx)
    if method == solvers.I2_ODD:
        return solvers.solve_i2_odd(ctx, seed, **kw)
    if method == solvers.I2_COMPOSITE:
        ell, t = _composite_split(ctx.m)
        return solvers.solve_i2_composite(ctx, ell, t)
    if method == solvers.I3_EVEN:
        return solvers.solve_i3_even(ctx, seed, **kw)
    if method == solvers.I3_HEURISTIC:
        return solvers.solve_i3_heuristic(ctx, seed, **kw)
    if method == solvers.I4_DIV4:
        return solvers.solve_i4(ctx)
    raise UncoveredCase(f"unknown method {method}")


def _upconvert_to_dim(cw: CodewordSupport, dim: int) -> CodewordSupport:
    """Up-convert over the span of the support completed greedily to the
    requested dimension."""
    ctx = cw.ctx
    basis: list[int] = []
    for x in sorted(cw.elems):
        if x and gflinalg.rank(basis + [x], ctx.m) > len(basis):
            basis.append(x)
    for k in range(ctx.m):
        if len(basis) >= dim:
            break
        cand = 1 << k
        if gflinalg.rank(basis + [cand], ctx.m) > len(basis):
            basis.append(cand)
    assert len(basis) == dim
    return construct.up_convert(cw, basis)


def generate(
    m: int,
    i: int,
    s: int,
    seed: int = 0,
    poly: int | str | None = None,
    method: str = "auto",
    max_retries: int | None = None,
) -> tuple[CodewordSupport, dict]:
    """Produce a verified support plus metadata; the support is refused
    (AssertionError) if self-verification fails."""
    ctx = default_field(m, parse_poly(poly) if poly is not None else None)

    if method == "gold":
        cw = construct.gold_support(ctx, i)
        native_s = m - 2 * i
        if not 0 <= s <= native_s:
            raise UncoveredCase(f"s must be in 0..{native_s} for the Gold route")
        if s < native_s:
            cw = _upconvert_to_dim(cw, 2 * i + s)
        meta = {"i": i, "s": s, "method": "gold", "seed": seed}
    elif method == "gk":
        if i != 2:
            raise UncoveredCase("the six-element route is an i=2 construction")
        native_s = m - 4
        if not 0 <= s <= native_s:
            raise UncoveredCase(f"s must be in 0..{native_s} for the gk route")
        rng = random.Random(seed)
        while True:
            y = rng.getrandbits(m)
            try:
                cw = construct.gk_support(ctx, y)
                break
            except construct.DegenerateY:
                continue
        if s < native_s:
            cw = _upconvert_to_dim(cw, 4 + s)
        meta = {"i": 2, "s": s, "method": "gk", "seed": seed}
    else:
        if method == "auto":
            method = _route_method(m, i)
        report = _solve(ctx, method, seed, max_retries)
        spec = construct.build_support(report.solution, s)
        cw = construct.expand(spec)
        meta = {
            "i": i,
            "s": s,
            "method": report.method,
            "seed": seed if report.rng_seed is not None else None,
            "X": _sorted_out(ctx, spec.x_set),
            "B": [_elem_out(ctx, x) for x in spec.basis],
        }

    verdict = verify.is_min_weight(cw)
    if not verdict.is_min_weight:
        raise RuntimeError(f"refusing to emit unverified support: {verdict}")
    return cw, meta


# -- subcommands -------------------------------------------------------------


def _cmd_generate(args) -> int:
    try:
        cw, meta = generate(
            args.m,
            args.i,
            args.s,
            seed=args.seed,
            poly=args.poly,
            method=args.method,
            max_retries=args.retries,
        )
    except (
        UncoveredCase,
        construct.BadS,
        solvers.BadParity,
        solvers.BadDegree,
        solvers.BadFactorization,
    ) as exc:
        print(f"uncovered case: {exc}", file=sys.stderr)
        return EXIT_UNCOVERED
    except solvers.RetriesExhausted as exc:
        print(f"solver exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED

    ctx = cw.ctx
    if args.format == "json":
        print(render_json(ctx, cw, meta))
    elif args.format == "logsupport":
        print(render_logsupport(ctx, cw), end="")
    else:
        print(render_bits(ctx, cw), end="")
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            cw = parse_support_file(fh.read())
    except OSError as exc:
        print(f"cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    try:
        verdict = verify.is_min_weight(cw)
    except (verify.BadDistanceParity, ValueError) as exc:
        print(f"malformed claim: {exc}", file=sys.stderr)
        return EXIT_PARSE
    doc = {
        "member": verdict.member,
        "weight": verdict.weight,
        "claimed_distance": verdict.claimed_distance,
        "is_min_weight": verdict.is_min_weight,
        "failing_syndrome": verdict.failing_syndrome,
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK if verdict.is_min_weight else EXIT_VERIFY_FAIL


def _fixture_support(m: int, poly: int, exps) -> CodewordSupport:
    ctx = default_field(m, poly)
    elems = frozenset(ctx.exp(e) for e in exps)
    d = len(exps)
    return CodewordSupport(ctx, elems, d, extended=False)


def _fresh_punctured(m: int, i: int, s: int, seed: int) -> CodewordSupport:
    cw, _ = generate(m, i, s, seed=seed)
    return construct.puncture(cw, min(cw.elems))


def _cmd_table(args) -> int:
    ok = True
    seed = args.seed
    if args.which == "t27":
        rows = [(m, poly, exps, 3, m - 6) for m, (poly, exps) in sorted(BCH27_FIXTURES.items())]
    else:
        m, poly, exps = BCH23_FIXTURE
        rows = [(m, poly, exps, 2, 10)]
    for m, poly, exps, i, s in rows:
        fix = _fixture_support(m, poly, exps)
        v_fix = verify.is_min_weight(fix)
        fresh = _fresh_punctured(m, i, s, seed)
        v_fresh = verify.is_min_weight(fresh)
        match = "set-equal" if fresh.elems == fix.elems else "different-but-valid"
        print(
            f"m={m} fixture: weight={v_fix.weight} verified={v_fix.is_min_weight} | "
            f"fresh: weight={v_fresh.weight} verified={v_fresh.is_min_weight} match={match}"
        )
        ok = ok and v_fix.is_min_weight and v_fresh.is_min_weight
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bchmin",
        description=(
            "Construct and verify supports of minimum-weight codewords of "
            "(extended) binary BCH codes of designed distance "
            "2^(m-1-s) - 2^(m-1-i-s)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_seed = int(os.environ.get(SEED_ENV_VAR, "0"))

    g = sub.add_parser("generate", help="construct one verified support")
    g.add_argument("--m", type=int, required=True, help="extension degree")
    g.add_argument("--i", type=int, required=True, help="distance family index")
    g.add_argument("--s", type=int, default=0, help="down-conversion level (default 0)")
    g.add_argument("--seed", type=int, default=default_seed)
    g.add_argument("--poly", type=str, default=None, help="primitive polynomial override")
    g.add_argument(
        "--method",
        choices=[
            "auto",
            solvers.I2_EVEN,
            solvers.I2_ODD,
            solvers.I2_COMPOSITE,
            solvers.I3_EVEN,
            solvers.I3_HEURISTIC,
            solvers.I4_DIV4,
            "gold",
            "gk",
        ],
        default="auto",
    )
    g.add_argument("--retries", type=int, default=None, help="solver retry cap override")
    g.add_argument("--format", choices=["json", "logsupport", "bits"], default="json")
    g.set_defaults(func=_cmd_generate)

    v = sub.add_parser("verify", help="verify a serialized support file")
    v.add_argument("input", help="path to a JSON or log-support file")
    v.set_defaults(func=_cmd_verify)

    t = sub.add_parser("table", help="verify a golden table and regenerate it")
    t.add_argument("which", choices=["t27", "t23"])
    t.add_argument("--seed", type=int, default=default_seed)
    t.set_defaults(func=_cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
