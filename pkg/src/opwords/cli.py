"""Command-line front end.

Subcommands: eval, equiv, check-algebra, verify-cert, lemmas.
Exit codes: 0 proved/pass, 1 disproved/fail, 2 unknown, 3 usage or parse
errors.
"""

from __future__ import annotations

import argparse
import sys

from .alphabet import Alphabet, Generator
from .certificate import decode, encode
from .dsl import parse_word
from .endo import Carrier, FinFunction
from .errors import OpwordsError, ReplayError
from .evaluate import GeneratorAssignment, eval_word
from .present import check_algebra, lemma_fixtures, load_presentation
from .rules import RuleContext
from .search import Disproved, Proved, SearchBudget, equivalent
from .present import equivalent_mod

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3


def _parse_rows(lines, m, carrier_size):
    rows = {}
    for line in lines:
        left, _, right = line.partition("->")
        xs = tuple(int(t) for t in left.split())
        ys = tuple(int(t) for t in right.split())
        if len(xs) != m:
            raise OpwordsError(f"row has {len(xs)} inputs, expected {m}")
        rows[xs] = ys
    c = Carrier(carrier_size)
    table = []
    for xs in c.tuples(m):
        if xs not in rows:
            raise OpwordsError(f"assignment table missing row for {xs}")
        table.append(rows[xs])
    n = len(table[0]) if table else 0
    return FinFunction(c, m, n, tuple(table))


def load_assignment(path: str, carrier_size: int | None):
    """Assignment file: optional ``carrier N`` line, then gen blocks."""
    blocks: list[tuple[str, list[str]]] = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("carrier"):
                declared = int(line.split()[1])
                if carrier_size is not None and carrier_size != declared:
                    raise OpwordsError(
                        f"carrier {declared} in file, {carrier_size} on the command line")
                carrier_size = declared
            elif line.startswith("gen"):
                blocks.append((line.split()[1], []))
            else:
                if not blocks:
                    raise OpwordsError(f"table row before any gen line: {line!r}")
                blocks[-1][1].append(line)
    if carrier_size is None:
        for name, lines in blocks:
            if lines:
                m = len(lines[0].partition("->")[0].split())
                if m == 1:
                    carrier_size = len(lines)
                    break
        else:
            raise OpwordsError("carrier size not given and not inferable")
    functions = {}
    for name, lines in blocks:
        m = len(lines[0].partition("->")[0].split()) if lines else 0
        fn = _parse_rows(lines, m, carrier_size)
        functions[Generator(name, fn.src, fn.tgt)] = fn
    carrier = Carrier(carrier_size)
    return GeneratorAssignment(carrier, functions)


def _assignment_alphabet(assignment: GeneratorAssignment) -> Alphabet:
    return Alphabet(sorted(assignment.functions, key=lambda g: g.name))


def _budget(args) -> SearchBudget:
    kwargs = {"seed": args.seed}
    if getattr(args, "max_steps", None) is not None:
        kwargs["max_steps"] = args.max_steps
    return SearchBudget(**kwargs)


def cmd_eval(args) -> int:
    assignment = load_assignment(args.assign, args.carrier)
    alphabet = _assignment_alphabet(assignment)
    word = parse_word(args.expr, alphabet)
    print(eval_word(word, assignment).dump())
    return EXIT_OK


def cmd_equiv(args) -> int:
    if args.pres:
        pres = load_presentation(args.pres)
        alphabet = pres.alphabet
    else:
        pres = None
        alphabet = Alphabet(())
    w = parse_word(args.expr, alphabet)
    w2 = parse_word(args.expr2, alphabet)
    budget = _budget(args)
    result = (equivalent_mod(w, w2, pres, budget) if pres is not None
              else equivalent(w, w2, budget))
    if isinstance(result, Proved):
        print(encode(result.certificate), end="")
        return EXIT_OK
    if isinstance(result, Disproved):
        wit = result.witness
        if wit.kind == "arity":
            print("disproved: source/target arities differ")
        else:
            print(f"disproved: carrier size {wit.assignment.carrier.size}, "
                  f"input {wit.input_tuple}: "
                  f"{wit.outputs[0]} != {wit.outputs[1]}")
        return EXIT_FAIL
    print(f"unknown: budget exhausted after visiting {result.visited} words")
    return EXIT_UNKNOWN


def cmd_check_algebra(args) -> int:
    pres = load_presentation(args.pres)
    assignment = load_assignment(args.assign, args.carrier)
    functions = dict(assignment.functions)
    by_name = {g.name: fn for g, fn in functions.items()}
    resolved = {}
    for g in pres.alphabet:
        if g.name not in by_name:
            print(f"fail: no table for generator {g.name}")
            return EXIT_FAIL
        resolved[g] = by_name[g.name]
    assignment = GeneratorAssignment(assignment.carrier, resolved)
    report = check_algebra(assignment, pres)
    for check in report.checks:
        if check.passed:
            print(f"relation {check.index}: pass")
        else:
            print(f"relation {check.index}: FAIL at input {check.input_tuple}: "
                  f"{check.lhs_out} != {check.rhs_out}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify_cert(args) -> int:
    if args.pres:
        pres = load_presentation(args.pres)
        alphabet, ctx = pres.alphabet, pres.context()
    else:
        alphabet, ctx = Alphabet(()), RuleContext(allow_card=True)
    if args.alphabet:
        extra = load_presentation(args.alphabet)
        alphabet = Alphabet(tuple(alphabet) + tuple(
            g for g in extra.alphabet if g.name not in alphabet))
    with open(args.file, encoding="utf-8") as fh:
        cert = decode(fh.read(), alphabet)
    try:
        cert.replay(ctx)
    except ReplayError as exc:
        print(f"certificate invalid: {exc}")
        return EXIT_FAIL
    print(f"certificate valid: {len(cert.steps)} steps")
    return EXIT_OK


def cmd_lemmas(args) -> int:
    failures = 0
    for fixture in lemma_fixtures():
        try:
            fixture.certificate.replay(fixture.context)
            fixture.certificate.reversed().replay(fixture.context)
            print(f"{fixture.name}: ok ({len(fixture.certificate.steps)} steps)")
        except OpwordsError as exc:
            failures += 1
            print(f"{fixture.name}: FAIL ({exc})")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opwords",
        description="word calculus for finitely presented operads")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized search probes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression on a carrier")
    p.add_argument("--carrier", type=int, default=None)
    p.add_argument("--assign", required=True)
    p.add_argument("expr")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("equiv", help="decide equivalence of two expressions")
    p.add_argument("--pres", default=None,
                   help="presentation file, @group, or @group-Z")
    p.add_argument("--max-steps", type=int, default=None, dest="max_steps",
                   help="visited-word budget for the search")
    p.add_argument("expr")
    p.add_argument("expr2")
    p.set_defaults(fn=cmd_equiv)

    p = sub.add_parser("check-algebra", help="check an assignment against a presentation")
    p.add_argument("--pres", required=True)
    p.add_argument("--assign", required=True)
    p.add_argument("--carrier", type=int, default=None)
    p.set_defaults(fn=cmd_check_algebra)

    p = sub.add_parser("verify-cert", help="replay a certificate file")
    p.add_argument("--pres", default=None)
    p.add_argument("--alphabet", default=None,
                   help="presentation file supplying extra generators")
    p.add_argument("file")
    p.set_defaults(fn=cmd_verify_cert)

    p = sub.add_parser("lemmas", help="replay all built-in lemma certificates")
    p.set_defaults(fn=cmd_lemmas)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except OpwordsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
