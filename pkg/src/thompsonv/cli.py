"""Command-line front end: ``thompsonv {prm,embed,demo,pda} ...``.

Exit status is 0 on success, 1 on a negative verdict and 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import pda as pdamod
from .cantor import format_word, parse_word
from .demonstrative import ball_words, check_demonstration_node
from .modular import element_a, element_b, element_gz
from .prm import (
    PrmParseError,
    apply_to_word,
    compose,
    element_order,
    format_prm,
    image_of_cone,
    invert,
    parse_prm,
    reduce,
)

BUILTINS = {"a": element_a, "b": element_b, "gz": element_gz}


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_prm(path: str):
    return parse_prm(_read(path))


def _load_gens(specs: list[str]) -> dict:
    gm = {}
    for spec in specs or []:
        name, sep, path = spec.partition("=")
        if not sep or not name or not path:
            raise UsageError(f"--gen expects NAME=FILE, got {spec!r}")
        if name.endswith("-") or not name[0].isalpha() or not name.islower():
            raise UsageError(f"generator names are lowercase identifiers, got {name!r}")
        gm[name] = _load_prm(path)
    if not gm:
        raise UsageError("at least one --gen NAME=FILE is required")
    return gm


def _cmd_prm(args) -> int:
    op = args.prm_command
    if op == "compose":
        result = _load_prm(args.files[0])
        for path in args.files[1:]:
            result = compose(result, _load_prm(path))
        print(format_prm(result), end="")
    elif op == "invert":
        print(format_prm(invert(_load_prm(args.file))), end="")
    elif op == "reduce":
        print(format_prm(reduce(_load_prm(args.file))), end="")
    elif op == "order":
        k = element_order(_load_prm(args.file), args.max)
        print("unbounded" if k is None else k)
        return 1 if k is None else 0
    elif op == "apply":
        print(format_word(apply_to_word(_load_prm(args.file), parse_word(args.word))))
    elif op == "image":
        for label in sorted(image_of_cone(_load_prm(args.file), parse_word(args.word))):
            print(format_word(label))
    return 0


def _cmd_embed(args) -> int:
    print(format_prm(BUILTINS[args.target]()), end="")
    return 0


def _cmd_demo(args) -> int:
    gm = _load_gens(args.gen)
    node = parse_word(args.node)
    report = check_demonstration_node(gm, node, ball_words(gm, args.max_len))
    report = dataclasses.replace(report, max_len=args.max_len)
    print(report.serialize(), end="")
    return 0 if report.ok else 1


def _load_table(path: str) -> pdamod.Pda:
    return pdamod.parse_table(_read(path))


def _cmd_pda(args) -> int:
    op = args.pda_command
    if op == "build":
        p = pdamod.build_word_problem_pda(
            _load_gens(args.gen), parse_word(args.node), deepen=args.deepen, audit_len=args.audit_len
        )
        print(pdamod.serialize_table(p), end="")
    elif op == "determinize":
        p = _load_table(args.file)
        node = parse_word(args.node) if args.node is not None else None
        print(pdamod.serialize_table(pdamod.determinize_against_accept(p, node)), end="")
    elif op == "run":
        p = _load_table(args.file)
        result = pdamod.run(p, pdamod.parse_tokens(args.word))
        print("ACCEPT" if result.accepted else "REJECT")
        return 0 if result.accepted else 1
    elif op == "validate":
        p = _load_table(args.file)
        gm = _load_gens(args.gen)
        if set(pdamod.input_tokens(gm)) != set(p.alphabet):
            raise UsageError(
                f"automaton alphabet {','.join(p.alphabet)} does not match generators "
                f"{','.join(pdamod.input_tokens(gm))}"
            )
        mismatches = pdamod.cross_validate(p, gm, args.max_len)
        for m in mismatches:
            verdict = "ACCEPT" if m.pda_accepts else "REJECT"
            print(f"{' '.join(m.word) or '1'}\t{verdict}\tidentity={m.is_identity}")
        print(f"{len(mismatches)} mismatches")
        return 1 if mismatches else 0
    elif op == "table":
        print(pdamod.format_table(_load_table(args.file)), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompsonv",
        description="Prefix replacement maps, demonstrative subgroups of V and word-problem automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    prm = sub.add_parser("prm", help="algebra on prefix replacement tables")
    psub = prm.add_subparsers(dest="prm_command", required=True)
    c = psub.add_parser("compose", help="compose left to right (first file acts first)")
    c.add_argument("files", nargs="+")
    for name in ("invert", "reduce"):
        psub.add_parser(name, help=f"{name} a table").add_argument("file")
    o = psub.add_parser("order", help="order of an element, up to --max")
    o.add_argument("file")
    o.add_argument("--max", type=int, default=10)
    for name, text in (("apply", "image of a deep enough word"), ("image", "labels of the image of a cone")):
        s = psub.add_parser(name, help=text)
        s.add_argument("file")
        s.add_argument("word", help="binary word, 'e' for the root")
    prm.set_defaults(func=_cmd_prm)

    e = sub.add_parser("embed", help="print a built-in element: a, b (modular group) or gz (Z)")
    e.add_argument("target", choices=sorted(BUILTINS))
    e.set_defaults(func=_cmd_embed)

    d = sub.add_parser("demo", help="check a demonstration node against a ball of the group")
    d.add_argument("--gen", action="append", metavar="NAME=FILE")
    d.add_argument("--node", default="0")
    d.add_argument("--max-len", type=int, default=6)
    d.set_defaults(func=_cmd_demo)

    p = sub.add_parser("pda", help="build, run and validate word-problem automata")
    asub = p.add_subparsers(dest="pda_command", required=True)
    b = asub.add_parser("build", help="write the transition table for --gen generators at --node")
    b.add_argument("--gen", action="append", metavar="NAME=FILE")
    b.add_argument("--node", default="0")
    b.add_argument("--deepen", action="store_true", help="extend a shallow node with 0s")
    b.add_argument("--audit-len", type=int, default=8)
    dt = asub.add_parser("determinize", help="split moves that clash with accepting moves")
    dt.add_argument("file", nargs="?", default="-")
    dt.add_argument("--node")
    r = asub.add_parser("run", help="print ACCEPT or REJECT for a word")
    r.add_argument("file")
    r.add_argument("word", help="space-separated tokens, inverses as g- or B")
    v = asub.add_parser("validate", help="compare with direct composition on all short words")
    v.add_argument("file")
    v.add_argument("--gen", action="append", metavar="NAME=FILE")
    v.add_argument("--max-len", type=int, default=8)
    t = asub.add_parser("table", help="pretty-print a transition table")
    t.add_argument("file")
    p.set_defaults(func=_cmd_pda)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, PrmParseError, pdamod.PdaError, ValueError, KeyError, OSError) as exc:
        print(f"thompsonv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
