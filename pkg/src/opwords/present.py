"""Finitely presented operads: relation sets over an alphabet, equivalence
modulo relations, algebra checking, and the built-in group presentation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .alphabet import Alphabet, Generator
from .endo import Carrier, tabulate
from .errors import ArityError, AssignmentError, OpwordsError
from .evaluate import GeneratorAssignment, eval_word
from .finmap import f0, f2
from .rules import RuleContext
from .search import (Disproved, Proved, SearchBudget, equivalent,
                     probe_assignments)
from .words import (Word, compose_many, gen_word, identity_word, op_word,
                    tensor_words)


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        for i, (lhs, rhs) in enumerate(self.relations):
            if lhs.src != rhs.src or lhs.tgt != rhs.tgt:
                raise ArityError(
                    f"relation {i}: ({lhs.src},{lhs.tgt}) vs ({rhs.src},{rhs.tgt})")

    def context(self) -> RuleContext:
        return RuleContext(relations=self.relations, allow_card=True)


# ---------------------------------------------------------------------------
# The group presentation

MU = Generator("mu", 2, 1)
ETA = Generator("eta", 0, 1)
OMEGA = Generator("omega", 1, 1)
GROUP_ALPHABET = Alphabet((MU, ETA, OMEGA))


def group_relations() -> tuple[tuple[Word, Word], ...]:
    mu, eta, omega = gen_word(MU), gen_word(ETA), gen_word(OMEGA)
    id1 = identity_word(1)
    dup, drop = op_word(f2()), op_word(f0())
    return (
        (compose_many(tensor_words(mu, id1), mu),
         compose_many(tensor_words(id1, mu), mu)),
        (compose_many(tensor_words(eta, id1), mu), id1),
        (compose_many(tensor_words(id1, eta), mu), id1),
        (compose_many(dup, tensor_words(omega, id1), mu),
         compose_many(drop, eta)),
        (compose_many(dup, tensor_words(id1, omega), mu),
         compose_many(drop, eta)),
    )


def builtin_group() -> Presentation:
    return Presentation(GROUP_ALPHABET, group_relations())


def builtin_group_Z() -> Presentation:
    """The three left-axiom relations: associativity, left unit, left inverse."""
    rels = group_relations()
    return Presentation(GROUP_ALPHABET, (rels[0], rels[1], rels[3]))


# ---------------------------------------------------------------------------
# Algebra checking


@dataclass(frozen=True)
class RelationCheck:
    index: int
    passed: bool
    input_tuple: tuple[int, ...] | None = None
    lhs_out: tuple[int, ...] | None = None
    rhs_out: tuple[int, ...] | None = None


@dataclass(frozen=True)
class AlgebraReport:
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]


def check_algebra(assignment: GeneratorAssignment,
                  pres: Presentation) -> AlgebraReport:
    if not assignment.covers(pres.alphabet):
        raise AssignmentError("assignment does not cover the alphabet")
    checks = []
    for i, (lhs, rhs) in enumerate(pres.relations):
        t1, t2 = eval_word(lhs, assignment), eval_word(rhs, assignment)
        if t1 == t2:
            checks.append(RelationCheck(i, True))
            continue
        located = None
        for xs in assignment.carrier.tuples(lhs.src):
            if t1(xs) != t2(xs):
                located = RelationCheck(i, False, xs, t1(xs), t2(xs))
                break
        checks.append(located)
    return AlgebraReport(tuple(checks))


# ---------------------------------------------------------------------------
# Groups as tables


@dataclass(frozen=True)
class GroupTables:
    size: int
    mult: tuple[tuple[int, ...], ...]
    unit: int
    inverse: tuple[int, ...]


def verify_group(tables: GroupTables) -> None:
    n, mult, e, inv = tables.size, tables.mult, tables.unit, tables.inverse
    for a, b, c in itertools.product(range(n), repeat=3):
        if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
            raise OpwordsError(f"multiplication not associative at {(a, b, c)}")
    for a in range(n):
        if mult[e][a] != a or mult[a][e] != a:
            raise OpwordsError(f"{e} is not neutral at {a}")
        if mult[inv[a]][a] != e or mult[a][inv[a]] != e:
            raise OpwordsError(f"{inv[a]} does not invert {a}")


def cyclic_group(n: int) -> GroupTables:
    mult = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return GroupTables(n, mult, 0, tuple((-a) % n for a in range(n)))


def symmetric_group_3() -> GroupTables:
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    mult = tuple(
        tuple(index[tuple(q[p[k]] for k in range(3))] for q in perms)
        for p in perms)
    inv = tuple(index[tuple(sorted(range(3), key=lambda k, p=p: p[k]))]
                for p in perms)
    return GroupTables(6, mult, index[(0, 1, 2)], inv)


def algebra_from_group(tables: GroupTables) -> GeneratorAssignment:
    c = Carrier(tables.size)
    functions = {
        MU: tabulate(c, 2, 1, lambda xs: (tables.mult[xs[0]][xs[1]],)),
        ETA: tabulate(c, 0, 1, lambda xs: (tables.unit,)),
        OMEGA: tabulate(c, 1, 1, lambda xs: (tables.inverse[xs[0]],)),
    }
    return GeneratorAssignment(c, functions)


def group_from_algebra(assignment: GeneratorAssignment) -> GroupTables:
    report = check_algebra(assignment, builtin_group())
    if not report.passed:
        first = report.failures()[0]
        raise OpwordsError(
            f"not an algebra: relation {first.index} fails at "
            f"{first.input_tuple}: {first.lhs_out} != {first.rhs_out}")
    n = assignment.carrier.size
    mu, eta, omega = (assignment.functions[g] for g in (MU, ETA, OMEGA))
    tables = GroupTables(
        n,
        tuple(tuple(mu((a, b))[0] for b in range(n)) for a in range(n)),
        eta(())[0],
        tuple(omega((a,))[0] for a in range(n)))
    verify_group(tables)
    return tables


# ---------------------------------------------------------------------------
# Equivalence modulo a presentation


def _group_shaped(alphabet: Alphabet):
    """Map generators onto (mult, unit, inverse) roles by arity, if possible."""
    by_arity = {(2, 1): [], (0, 1): [], (1, 1): []}
    for g in alphabet:
        if (g.src, g.tgt) not in by_arity:
            return None
        by_arity[(g.src, g.tgt)].append(g)
    if any(len(v) != 1 for v in by_arity.values()):
        return None
    return by_arity[(2, 1)][0], by_arity[(0, 1)][0], by_arity[(1, 1)][0]


def _group_probe(tables: GroupTables, alphabet: Alphabet,
                 roles) -> GeneratorAssignment:
    mu_g, eta_g, omega_g = roles
    c = Carrier(tables.size)
    functions = {
        mu_g: tabulate(c, 2, 1, lambda xs: (tables.mult[xs[0]][xs[1]],)),
        eta_g: tabulate(c, 0, 1, lambda xs: (tables.unit,)),
        omega_g: tabulate(c, 1, 1, lambda xs: (tables.inverse[xs[0]],)),
    }
    return GeneratorAssignment(c, functions)


def satisfying_probes(pres: Presentation,
                      budget: SearchBudget) -> list[GeneratorAssignment]:
    """Probe assignments that pass check_algebra, so refutation is sound."""
    candidates = probe_assignments(tuple(pres.alphabet), budget)
    roles = _group_shaped(pres.alphabet)
    if roles is not None:
        for size in sorted(set(budget.probe_carriers) | {1}):
            if size >= 1:
                candidates.append(
                    _group_probe(cyclic_group(size), pres.alphabet, roles))
        candidates.append(_group_probe(symmetric_group_3(), pres.alphabet, roles))
    return [a for a in candidates if check_algebra(a, pres).passed]


def _relation_instance(w: Word, w2: Word, pres: Presentation):
    """A one-step certificate when (w, w2) is literally a relation pair."""
    from .certificate import Certificate
    from .finmap import identity
    from .rules import RewriteStep

    for i, (lhs, rhs) in enumerate(pres.relations):
        if (w, w2) == (lhs, rhs):
            direction = "fwd"
        elif (w, w2) == (rhs, lhs):
            direction = "bwd"
        else:
            continue
        step = RewriteStep(f"REL:{i}", direction, 0,
                           seam_left=identity(w.src),
                           seam_right=identity(w.tgt))
        cert = Certificate(w, (step,), w2)
        cert.replay(pres.context())
        return cert
    return None


def reindex_relations(cert, index_map: dict[int, int]):
    """Renumber REL steps, e.g. to lift a certificate into a superset
    presentation whose relation list orders the shared relations differently."""
    from dataclasses import replace as _replace

    from .certificate import Certificate
    steps = []
    for step in cert.steps:
        if step.rule.startswith("REL:"):
            steps.append(_replace(step,
                                  rule=f"REL:{index_map[int(step.rule[4:])]}"))
        else:
            steps.append(step)
    return Certificate(cert.start, tuple(steps), cert.end)


def known_certificates(pres: Presentation):
    """Built-in certificates that are valid verbatim under this presentation."""
    from .fixtures import lemma_fixtures

    y_rels = group_relations()
    z_rels = (y_rels[0], y_rels[1], y_rels[3])
    z_to_y = {0: 0, 1: 1, 2: 3}
    table = {}
    for fixture in lemma_fixtures():
        cert = fixture.certificate
        if fixture.context.relations == pres.relations:
            pass
        elif (fixture.context.relations == z_rels
              and pres.relations == y_rels):
            cert = reindex_relations(cert, z_to_y)
        else:
            continue
        table.setdefault((cert.start, cert.end), cert)
        table.setdefault((cert.end, cert.start), cert.reversed())
    return table


def equivalent_mod(w: Word, w2: Word, pres: Presentation,
                   budget: SearchBudget | None = None, *,
                   consult_builtin: bool = True):
    """Like equivalent, with the presentation's relations as extra moves.

    Pass consult_builtin=False to force an autonomous search instead of
    answering from the built-in lemma certificates.
    """
    budget = budget or SearchBudget()
    direct = _relation_instance(w, w2, pres)
    if direct is not None:
        return Proved(direct)
    if (consult_builtin and (w.src, w.tgt) == (w2.src, w2.tgt) and w != w2):
        known = known_certificates(pres).get((w, w2))
        if known is not None:
            return Proved(known)
    probes = satisfying_probes(pres, budget)
    result = equivalent(w, w2, budget, ctx=pres.context(), probes=probes)
    if isinstance(result, Disproved) and result.witness.kind == "evaluation":
        if not check_algebra(result.witness.assignment, pres).passed:
            raise OpwordsError("refutation witness violates the presentation")
    return result


def lemma_fixtures():
    """Named built-in certificates for the group presentation's lemmas."""
    from .fixtures import lemma_fixtures as _fixtures
    return _fixtures()


# ---------------------------------------------------------------------------
# Presentation files


def parse_presentation(text: str) -> Presentation:
    from .dsl import parse_word

    gens: list[Generator] = []
    relation_lines: list[tuple[str, str]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "generator":
            if len(parts) != 4:
                raise ArityError(f"bad generator line: {line!r}")
            gens.append(Generator(parts[1], int(parts[2]), int(parts[3])))
        elif parts[0] == "relation":
            body = line[len("relation"):].strip()
            if "==" not in body:
                raise ArityError(f"relation line needs '==': {line!r}")
            lhs, rhs = body.split("==", 1)
            relation_lines.append((lhs.strip(), rhs.strip()))
        else:
            raise ArityError(f"unrecognized presentation line: {line!r}")
    alphabet = Alphabet(gens)
    relations = tuple(
        (parse_word(l, alphabet), parse_word(r, alphabet))
        for l, r in relation_lines)
    return Presentation(alphabet, relations)


def load_presentation(source: str) -> Presentation:
    """Resolve @group / @group-Z or read a presentation file."""
    if source == "@group":
        return builtin_group()
    if source == "@group-Z":
        return builtin_group_Z()
    with open(source, encoding="utf-8") as fh:
        return parse_presentation(fh.read())
