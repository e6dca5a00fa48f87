"""Command-line entry point: ``foursq <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field

from .congruence import CongruenceWitness, InvalidInput, is_prime, solve_root
from .gaussian import format_gaussian
from .hcf import HcfExpansion, InvalidWitness, hcf_from_root
from .quaternion import four_from_root_quaternion
from .squares import FourSquareRep, Method, decompose, four_from_root, hermite_two_squares, verify

EXIT_OK, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2

METHODS = {"hurwitz": Method.HURWITZ_CF, "quaternion": Method.QUATERNION}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


@dataclass
class OutputRecord:
    n: str
    squares: list[str]
    method: str
    witness: dict[str, str] | None = None
    steps: int = 0
    elapsed_ms: float = 0.0

    @classmethod
    def from_rep(cls, rep: FourSquareRep, elapsed_ms: float = 0.0) -> OutputRecord:
        wit = None
        if rep.witness is not None:
            wit = {"x": str(rep.witness.x), "y": str(rep.witness.y), "w": str(rep.witness.w)}
        return cls(
            n=str(rep.n),
            squares=[str(v) for v in rep.squares],
            method=rep.method.value,
            witness=wit,
            steps=rep.steps,
            elapsed_ms=elapsed_ms,
        )

    def to_json(self) -> str:
        return json.dumps(self.__dict__, separators=(",", ":"))


def render_expansion_table(e: HcfExpansion) -> str:
    """Rows ``n, a_n, P_n, Q_n`` (plus ``S_n`` when present), starting at ``n = -1``."""
    header = ["n", "a_n", "P_n", "Q_n"] + (["S_n"] if e.s_seq else [])
    rows = [header]
    for k in range(-1, e.depth + 1):
        row = [str(k), "" if k < 0 else format_gaussian(e.a(k)), format_gaussian(e.P(k)), format_gaussian(e.Q(k))]
        if e.s_seq:
            row.append(format_gaussian(e.S(k)))
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    return "\n".join("  ".join(cell.rjust(wd) for cell, wd in zip(r, widths)).rstrip() for r in rows)


def _expansion_json(e: HcfExpansion) -> str:
    rows = []
    for k in range(-1, e.depth + 1):
        row = {
            "n": k,
            "a": None if k < 0 else format_gaussian(e.a(k)),
            "P": format_gaussian(e.P(k)),
            "Q": format_gaussian(e.Q(k)),
        }
        if e.s_seq:
            row["S"] = format_gaussian(e.S(k))
        rows.append(row)
    return json.dumps({"w": str(e.w), "x": str(e.x), "y": str(e.y), "depth": e.depth, "rows": rows})


def _format_rep(rep: FourSquareRep) -> str:
    terms = " + ".join(f"{v}^2" for v in rep.squares)
    return f"{rep.n} = {terms}  ({rep.method.value}, steps={rep.steps})"


def _parse_int(text: str, name: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise InvalidInput(f"{name} must be an integer, got {text!r}") from None


def _emit(out, rep: FourSquareRep, as_json: bool, elapsed_ms: float) -> None:
    if as_json:
        print(OutputRecord.from_rep(rep, elapsed_ms).to_json(), file=out)
    else:
        print(_format_rep(rep), file=out)


def cmd_decompose(args, out) -> int:
    method = METHODS[args.method]
    if (args.x is None) != (args.y is None):
        raise InvalidInput("--x and --y must be given together")
    inputs = args.n
    if inputs == ["-"]:
        inputs = [line for line in sys.stdin.read().split() if line]
    if args.x is not None and len(inputs) != 1:
        raise InvalidInput("--x/--y apply to a single N")
    for text in inputs:
        n = _parse_int(text, "N")
        start = time.perf_counter()
        if args.x is not None:
            witness = CongruenceWitness(n, _parse_int(args.x, "--x"), _parse_int(args.y, "--y"))
            if n < 3:
                raise InvalidInput("a supplied witness needs an odd N >= 3")
            if method is Method.QUATERNION:
                rep = four_from_root_quaternion(witness)
            else:
                rep = four_from_root(witness)
        else:
            rep = decompose(n, seed=args.seed, method=method)
        elapsed = (time.perf_counter() - start) * 1000 if args.timing else 0.0
        _emit(out, rep, args.json, round(elapsed, 3))
    return EXIT_OK


def cmd_expand(args, out) -> int:
    e = hcf_from_root(_parse_int(args.w, "--w"), _parse_int(args.x, "--x"), _parse_int(args.y, "--y"))
    print(_expansion_json(e) if args.json else render_expansion_table(e), file=out)
    return EXIT_OK


def cmd_root(args, out) -> int:
    wit = solve_root(_parse_int(args.w, "W"), seed=args.seed)
    if args.json:
        print(json.dumps({"w": str(wit.w), "x": str(wit.x), "y": str(wit.y)}), file=out)
    else:
        print(f"{wit.x} {wit.y}", file=out)
    return EXIT_OK


def cmd_two_squares(args, out) -> int:
    rep = hermite_two_squares(_parse_int(args.p, "P"))
    _emit(out, rep, args.json, 0.0)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    n = _parse_int(args.n, "N")
    coords = [_parse_int(v, "square root") for v in args.values]
    rep = FourSquareRep.build(n, coords, Method.TRIVIAL)
    if verify(rep):
        print("OK", file=out)
        return EXIT_OK
    total = sum(v * v for v in coords)
    print(f"FAIL: sum of squares is {total}, expected {n}", file=out)
    return EXIT_INVALID


def random_prime_3mod4(bits: int, rng: random.Random) -> int:
    """A uniformly drawn prime ``p = 3 (mod 4)`` with exactly ``bits`` bits."""
    if bits < 3:
        raise InvalidInput("bits must be >= 3")
    while True:
        p = rng.getrandbits(bits) | (1 << (bits - 1)) | 3
        if is_prime(p):
            return p


@dataclass
class BenchRow:
    bits: int
    w: int
    steps: int
    witness_ms: float
    expansion_ms: float
    total_ms: float = field(init=False)

    def __post_init__(self):
        self.total_ms = self.witness_ms + self.expansion_ms


def bench(bits: int, count: int, seed: int = 0, method: Method = Method.HURWITZ_CF) -> list[BenchRow]:
    rng = random.Random(seed)
    rows = []
    for _ in range(count):
        p = random_prime_3mod4(bits, rng)
        t0 = time.perf_counter()
        wit = solve_root(p, seed)
        t1 = time.perf_counter()
        if method is Method.QUATERNION:
            rep = four_from_root_quaternion(wit)
        else:
            rep = four_from_root(wit)
        t2 = time.perf_counter()
        assert verify(rep)
        rows.append(BenchRow(bits, p, rep.steps, (t1 - t0) * 1000, (t2 - t1) * 1000))
    return rows


def cmd_bench(args, out) -> int:
    if args.count < 1:
        raise InvalidInput("--count must be positive")
    rows = bench(args.bits, args.count, args.seed, METHODS[args.method])
    if args.json:
        for r in rows:
            rec = dict(r.__dict__, w=str(r.w))
            print(json.dumps(rec), file=out)
        return EXIT_OK
    print(f"{'bits':>5} {'steps':>6} {'witness_ms':>11} {'expand_ms':>10} {'total_ms':>9}", file=out)
    for r in rows:
        print(f"{r.bits:>5} {r.steps:>6} {r.witness_ms:>11.3f} {r.expansion_ms:>10.3f} {r.total_ms:>9.3f}", file=out)
    mean = lambda xs: sum(xs) / len(xs)  # noqa: E731
    print(
        f"mean steps {mean([r.steps for r in rows]):.2f}, "
        f"mean total {mean([r.total_ms for r in rows]):.3f} ms over {len(rows)} primes",
        file=out,
    )
    return EXIT_OK


def _default_seed() -> int:
    env = os.environ.get("FOURSQ_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"FOURSQ_SEED must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    seed_default = _default_seed()
    parser = _Parser(prog="foursq", description="Sums of four squares via Hurwitz continued fractions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="write N as a sum of four squares")
    p.add_argument("n", nargs="+", metavar="N", help="positive integers, or - to read from stdin")
    p.add_argument("--x", help="witness x (skips the congruence solver)")
    p.add_argument("--y", help="witness y")
    p.add_argument("--method", choices=sorted(METHODS), default="hurwitz")
    p.add_argument("--seed", type=int, default=seed_default)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="report wall time in elapsed_ms")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("expand", help="print the Hurwitz expansion of (x+yi)/w")
    p.add_argument("--w", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("root", help="solve x^2 + y^2 = -1 (mod W)")
    p.add_argument("w", metavar="W")
    p.add_argument("--seed", type=int, default=seed_default)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_root)

    p = sub.add_parser("two-squares", help="Hermite's method for a prime P = 1 (mod 4)")
    p.add_argument("p", metavar="P")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_two_squares)

    p = sub.add_parser("verify", help="check N = a^2 + b^2 + c^2 + d^2")
    p.add_argument("n", metavar="N")
    p.add_argument("values", nargs=4, metavar="V")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time decompositions of random primes = 3 (mod 4)")
    p.add_argument("--bits", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--method", choices=sorted(METHODS), default="hurwitz")
    p.add_argument("--seed", type=int, default=seed_default)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"foursq: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InvalidInput, InvalidWitness, ValueError) as exc:
        print(f"foursq: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except AssertionError as exc:
        print(f"foursq: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
