"""Command-line front end.

Exit codes follow a strict contract: 0 for an affirmative result (equal,
member, inner, all checks pass), 1 for a negative result, 2 for input errors
(bad syntax, unknown generators, malformed JSON, wrong arities).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decide, isotropy, suites, translate, words
from .decide import QUANDLE, RACK
from .isotropy import ArityMismatchError
from .terms import Term, parse, render


class CliError(Exception):
    """User input error; message goes to stderr, exit status 2."""


def _parse_term(text: str, args) -> Term:
    return parse(text, args.gens, allow_aux=not args.no_aux)


def _parse_elem(text: str, args):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed element JSON: {exc}") from exc
    try:
        elem = isotropy.elem_from_json(data)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    expected = isotropy.RackElem if args.theory == RACK else isotropy.QuandleElem
    if not isinstance(elem, expected):
        raise CliError(f"element theory does not match --theory {args.theory}")
    return elem


def _emit_elem(elem, args) -> None:
    if args.json:
        print(json.dumps(isotropy.elem_to_json(elem)))
    else:
        print(isotropy.elem_to_text(elem))


def cmd_eq(args) -> int:
    if args.stdin:
        verdicts = []
        for lineno, line in enumerate(sys.stdin, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            if "\t" not in line:
                raise CliError(f"line {lineno}: expected two terms separated by a tab")
            left_text, right_text = line.split("\t", 1)
            left = _parse_term(left_text, args)
            right = _parse_term(right_text, args)
            verdicts.append(decide.term_equal(left, right, args.theory))
            if not args.json:
                print("equal" if verdicts[-1] else "not-equal")
        if args.json:
            print(json.dumps({"results": verdicts, "all_equal": all(verdicts)}))
        return 0 if all(verdicts) else 1
    left = _parse_term(args.term1, args)
    right = _parse_term(args.term2, args)
    equal = decide.term_equal(left, right, args.theory)
    if args.json:
        print(json.dumps({"equal": equal}))
    else:
        print("equal" if equal else "not-equal")
    return 0 if equal else 1


def cmd_nf(args) -> int:
    t = _parse_term(args.term, args)
    if args.theory == QUANDLE:
        image = translate.quandle_image(t)
        if args.json:
            print(json.dumps({"theory": QUANDLE, "word": words.to_json(image)}))
        else:
            print(words.render(image))
    else:
        head, tail = translate.rack_image(t)
        if args.json:
            print(json.dumps({"theory": RACK, "head": head, "tail": words.to_json(tail)}))
        else:
            print(f"head: {head}, tail: {words.render(tail)}")
    return 0


def cmd_canon(args) -> int:
    t = _parse_term(args.term, args)
    elem = isotropy.canon(t, args.theory)
    if elem is None:
        print(json.dumps({"member": False}) if args.json else "not-isotropy")
        return 1
    _emit_elem(elem, args)
    return 0


def cmd_mul(args) -> int:
    a = _parse_elem(args.elem1, args)
    b = _parse_elem(args.elem2, args)
    product = isotropy.rack_mul(a, b) if args.theory == RACK else isotropy.quandle_mul(a, b)
    _emit_elem(product, args)
    return 0


def cmd_inv(args) -> int:
    a = _parse_elem(args.elem, args)
    inverse = isotropy.rack_invert(a) if args.theory == RACK else isotropy.quandle_invert(a)
    _emit_elem(inverse, args)
    return 0


def cmd_apply(args) -> int:
    elem = _parse_elem(args.elem, args)
    images = [_parse_term(text, args) for text in args.images]
    q = _parse_term(args.arg, args)
    result = isotropy.apply_inner(elem, images, q)
    if args.json:
        print(json.dumps({"term": render(result)}))
    else:
        print(render(result))
    return 0


def cmd_inner_check(args) -> int:
    images = [_parse_term(text, args) for text in args.images]
    if args.theory == RACK:
        witness = isotropy.rack_inner_witness(images, args.gens)
    else:
        witness = isotropy.quandle_inner_witness(images, args.gens)
    if witness is None:
        print(json.dumps({"inner": False}) if args.json else "not-inner")
        return 1
    if args.json:
        print(json.dumps(isotropy.elem_to_json(witness)))
    else:
        print(f"witness {isotropy.elem_to_text(witness)}")
    return 0


_SUITE_OPTION_NAMES = {
    "axioms": ("samples", "max_size", "n"),
    "oracle": ("max_size", "max_steps", "n"),
    "theorem2": ("max_size", "n"),
    "theorem5": ("max_size", "n"),
    "iso-f_n": ("max_len", "n"),
    "iso-zxf_n": ("max_z", "max_len", "n"),
    "lemmas": ("samples", "word_len"),
    "global": ("max_size",),
    "naturality": ("samples",),
    "inner": ("max_len", "max_z", "n"),
}


def cmd_verify(args) -> int:
    if args.suite not in suites.SUITE_NAMES:
        raise CliError(f"unknown suite {args.suite!r}; choose from {', '.join(suites.SUITE_NAMES)}")
    provided = {
        "samples": args.samples,
        "max_size": args.max_size,
        "max_steps": args.steps,
        "max_len": args.max_len,
        "max_z": args.max_z,
        "word_len": args.word_len,
        "n": args.n,
    }
    allowed = _SUITE_OPTION_NAMES[args.suite]
    bounds = {}
    for key, value in provided.items():
        if value is None:
            continue
        if key not in allowed:
            raise CliError(f"option --{key.replace('_', '-')} does not apply to suite {args.suite!r}")
        bounds[key] = value
    report = suites.run_suite(args.suite, theory=args.theory, seed=args.seed, **bounds)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandles",
        description="Decide word problems and manipulate inner automorphisms "
        "of free racks and quandles.",
    )
    parser.add_argument("--theory", choices=(QUANDLE, RACK), default=QUANDLE)
    parser.add_argument("--gens", type=int, default=0, metavar="N",
                        help="number of generators y1..yN (default 0)")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    parser.add_argument("--no-aux", action="store_true",
                        help="reject the auxiliary atoms x0/x1 in input terms")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eq", help="decide whether two terms are provably equal")
    p.add_argument("term1", nargs="?", default=None)
    p.add_argument("term2", nargs="?", default=None)
    p.add_argument("--stdin", action="store_true",
                   help="read tab-separated term pairs from stdin, one per line")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("nf", help="print the free-group normal form of a term")
    p.add_argument("term")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("canon", help="canonical isotropy form of a term, if any")
    p.add_argument("term")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("mul", help="multiply two canonical elements (JSON)")
    p.add_argument("elem1")
    p.add_argument("elem2")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("inv", help="invert a canonical element (JSON)")
    p.add_argument("elem")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("apply", help="apply an element at a point, via generator images")
    p.add_argument("elem", help="canonical element as JSON")
    p.add_argument("arg", help="the term the induced map is applied to")
    p.add_argument("--images", nargs="*", default=[], metavar="TERM",
                   help="images of y1..yn (their count fixes the source arity)")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("inner-check",
                       help="decide whether generator images define an inner endomorphism")
    p.add_argument("images", nargs="*", metavar="TERM")
    p.set_defaults(func=cmd_inner_check)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", metavar="SUITE",
                   help=f"one of: {', '.join(suites.SUITE_NAMES)}")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--max-size", type=int, default=None, dest="max_size")
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None, dest="max_len")
    p.add_argument("--max-z", type=int, default=None, dest="max_z")
    p.add_argument("--word-len", type=int, default=None, dest="word_len")
    p.add_argument("--n", type=int, default=None, help="generator count of the sweep")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.gens < 0:
        parser.error("--gens must be >= 0")
    if args.command == "eq" and not args.stdin and (args.term1 is None or args.term2 is None):
        parser.error("eq needs two terms (or --stdin)")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArityMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
