"""Command-line interface.

Subcommands: eq, endo, decompose, comb, selftest, render.  Results go
to standard output, diagnostics to standard error.  Exit codes: 0
success (eq: equal), 1 eq: not-equal, 2 parse/usage errors, 3
unrealizable or stuck decomposition, 4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys

from .braids import BraidWord, NotPure, Underflow, format_braid, is_pure, parse_braid
from .combing import SearchBudgetExceeded, comb, format_combed, multiply_back
from .diagram import RenderStyle, render
from .recognition import (
    NotRealizable,
    PreconditionViolated,
    Stuck,
    check_boundary,
    decompose,
)
from .rep import compose, eq_endo, format_endo, parse_endo, rho_word, shift_c, twist
from .wordproblem import eq_plane, eq_punctured
from .words import GroupParams, IndexOutOfRange, ParamsMismatch, ParseError

_USAGE_ERRORS = (
    ParseError,
    IndexOutOfRange,
    ParamsMismatch,
    NotPure,
    Underflow,
    PreconditionViolated,
    OSError,
)


def _params(args: argparse.Namespace) -> GroupParams:
    return GroupParams(args.p, args.n)


def _cmd_eq(args: argparse.Namespace) -> int:
    params = _params(args)
    w1 = parse_braid(args.word1, params)
    w2 = parse_braid(args.word2, params)
    decide = eq_plane if args.space == "plane" else eq_punctured
    equal = decide(w1, w2, allow_rank_one=True)
    print("equal" if equal else "not-equal")
    return 0 if equal else 1


def _cmd_endo(args: argparse.Namespace) -> int:
    params = _params(args)
    sys.stdout.write(format_endo(rho_word(parse_braid(args.word, params))))
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    params = _params(args)
    text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    e = parse_endo(text, params)
    try:
        word, m = decompose(e)
    except (NotRealizable, Stuck) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(format_braid(word))
    print(f"twist: {m}")
    return 0


def _cmd_comb(args: argparse.Namespace) -> int:
    params = _params(args)
    w = parse_braid(args.word, params)
    try:
        form = comb(w, max_basis_length=args.max_basis_length)
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    sys.stdout.write(format_combed(form))
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    params = _params(args)
    w = parse_braid(args.word, params)
    style = RenderStyle(width=args.width, height=args.height)
    with open(args.out, "w") as fh:
        fh.write(render(w, style))
    return 0


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        return range(int(text), int(text) + 1)
    return range(int(lo), int(hi) + 1)


def _random_word(rng: random.Random, params: GroupParams, max_len: int) -> BraidWord:
    alphabet = [1, -1]
    for k in range(params.n - 1):
        alphabet.extend((k + 2, -(k + 2)))
    return BraidWord(params, rng.choices(alphabet, k=rng.randint(0, max_len)))


def _selftest_point(params: GroupParams, rng: random.Random, out: list[str]) -> bool:
    p, n = params.p, params.n
    ok = True

    def report(label: str, passed: bool) -> None:
        nonlocal ok
        out.append(f"{label} : {'PASS' if passed else 'FAIL'}")
        ok = ok and passed

    b = parse_braid("b", params)
    report("twist-law", eq_endo(rho_word(b**p), twist(params, 1)))

    relations = []
    for k in range(n - 2):
        u = parse_braid(f"b{k} b{k + 1} b{k}", params)
        v = parse_braid(f"b{k + 1} b{k} b{k + 1}", params)
        relations.append(eq_endo(rho_word(u), rho_word(v)))
    for k in range(n - 1):
        for l in range(k + 2, n - 1):
            u = parse_braid(f"b{k} b{l}", params)
            v = parse_braid(f"b{l} b{k}", params)
            relations.append(eq_endo(rho_word(u), rho_word(v)))
    for k in range(1, n - 1):
        u = parse_braid(f"b{k} b", params)
        v = parse_braid(f"b b{k}", params)
        relations.append(eq_endo(rho_word(u), rho_word(v)))
    report("braid-relations", all(relations))

    if n >= 2:
        lhs = rho_word(parse_braid("b b0", params) ** p)
        rhs = rho_word(parse_braid("b0 b", params) ** p)
        if p % 2 == 0:
            report("(bb0)^p == (b0b)^p", eq_endo(lhs, rhs))
        else:
            verdict = "equal" if eq_endo(lhs, rhs) else "not-equal"
            out.append(f"(bb0)^p == (b0b)^p : {verdict} (recorded)")

    shift = shift_c(params, 1)
    words = [_random_word(rng, params, 10) for _ in range(6)]
    report(
        "equivariance",
        all(eq_endo(compose(shift, rho_word(w)), compose(rho_word(w), shift)) for w in words),
    )
    report("boundary-conjugacy", all(check_boundary(rho_word(w)) is not None for w in words))

    round_ok = True
    for w in words[:4]:
        word, m = decompose(rho_word(w))
        round_ok = round_ok and eq_endo(compose(rho_word(word), twist(params, m)), rho_word(w))
    report("decompose-round-trip", round_ok)

    report(
        "plane-relator",
        all(eq_plane(w * b**p, w, allow_rank_one=True) for w in words[:4]),
    )

    comb_ok = True
    for _ in range(3):
        if n == 1:
            w = b ** (p * rng.randint(0, 2))
        else:
            w = _random_word(rng, params, 6)
            while not is_pure(w):
                w = _random_word(rng, params, 6)
        form = comb(w, max_basis_length=16)
        comb_ok = comb_ok and eq_punctured(multiply_back(form), w, allow_rank_one=True)
    report("comb-round-trip", comb_ok)

    if n >= 2:
        lhs_w = parse_braid("b0", params) * b**p
        rhs_w = b**p * parse_braid("b0", params)
        verdict = "equal" if eq_plane(lhs_w, rhs_w) else "not-equal"
        out.append(f"eq_plane(b0 b^p, b^p b0) : {verdict} (recorded)")
    return ok


def _cmd_selftest(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    all_ok = True
    for p in _parse_range(args.p):
        for n in _parse_range(args.n):
            out: list[str] = [f"[p={p} n={n}]"]
            all_ok = _selftest_point(GroupParams(p, n), rng, out) and all_ok
            print("\n".join(out))
    print("selftest:", "PASS" if all_ok else "FAIL")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitbraids", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pn(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--p", type=int, required=True, help="order of the cyclic action")
        sp.add_argument("--n", type=int, required=True, help="number of orbit strands")

    sp = sub.add_parser("eq", help="decide equality of two braid words")
    sp.add_argument("--space", choices=("plane", "punctured"), required=True)
    add_pn(sp)
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp.set_defaults(func=_cmd_eq)

    sp = sub.add_parser("endo", help="print the endomorphism of a braid word")
    add_pn(sp)
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_endo)

    sp = sub.add_parser("decompose", help="braid word and twist power of an endomorphism file")
    add_pn(sp)
    sp.add_argument("file", help="endomorphism file, or - for stdin")
    sp.set_defaults(func=_cmd_decompose)

    sp = sub.add_parser("comb", help="combing normal form of a pure braid word")
    add_pn(sp)
    sp.add_argument("--max-basis-length", type=int, default=8)
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_comb)

    sp = sub.add_parser("selftest", help="run the property suite over a parameter grid")
    sp.add_argument("--p", required=True, help="range, e.g. 2..4")
    sp.add_argument("--n", required=True, help="range, e.g. 2..4")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_selftest)

    sp = sub.add_parser("render", help="render a braid word as SVG")
    add_pn(sp)
    sp.add_argument("--out", required=True)
    sp.add_argument("--width", type=int, default=480)
    sp.add_argument("--height", type=int, default=360)
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
