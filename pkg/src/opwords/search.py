"""Word equivalence: bidirectional search for a certificate, evaluation
probes for a refutation, and an honest Unknown when the budget runs out.

A Proved result carries a replayable certificate. A Disproved result
carries a witness assignment that is re-validated (tables really differ at
the reported input, and for presentation queries the witness satisfies
every relation) before it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .alphabet import Generator
from .certificate import Certificate, step_key
from .endo import Carrier, FinFunction, tabulate
from .errors import OpwordsError
from .evaluate import GeneratorAssignment, eval_word
from .rules import RewriteStep, RuleBounds, RuleContext, moves
from .words import Word


@dataclass(frozen=True)
class SearchBudget:
    max_steps: int = 100_000
    max_word_len: int | None = None      # default: len(w) + len(w2) + 4
    a_max: int = 3
    pad_max: int | None = None           # default: w.src + w.tgt, floor 2
    max_width: int | None = None         # default: widest boundary arity + 2
    probe_carriers: tuple[int, ...] = (2, 3)
    probe_assignments: int = 5
    seam_cap: int = 64
    seed: int = 0


def word_width(w: Word) -> int:
    return max(max(b.src, b.tgt) for b in w.boundaries)


@dataclass(frozen=True)
class Witness:
    """Evidence that two words differ: an assignment and a separating input."""

    kind: str                            # "arity" or "evaluation"
    assignment: GeneratorAssignment | None = None
    input_tuple: tuple[int, ...] | None = None
    outputs: tuple[tuple[int, ...], tuple[int, ...]] | None = None


@dataclass(frozen=True)
class Proved:
    certificate: Certificate


@dataclass(frozen=True)
class Disproved:
    witness: Witness


@dataclass(frozen=True)
class Unknown:
    visited: int


def word_generators(*ws: Word) -> tuple[Generator, ...]:
    seen: dict[str, Generator] = {}
    for w in ws:
        for _, g, _ in w.letters:
            seen.setdefault(g.name, g)
    return tuple(seen[name] for name in sorted(seen))


# ---------------------------------------------------------------------------
# Probe assignments


def _cyclic_project(c: Carrier, m: int, n: int) -> FinFunction:
    if m == 0:
        return tabulate(c, 0, n, lambda xs: (0,) * n)
    return tabulate(c, m, n, lambda xs: tuple(xs[j % m] for j in range(n)))


def _constant(c: Carrier, m: int, n: int) -> FinFunction:
    return tabulate(c, m, n, lambda xs: (0,) * n)


def _shift_sum(c: Carrier, m: int, n: int) -> FinFunction:
    if c.size == 0:
        return tabulate(c, m, n, lambda xs: ())
    return tabulate(c, m, n,
                    lambda xs: tuple((sum(xs) + j) % c.size for j in range(n)))


def _random_fn(c: Carrier, m: int, n: int, rng: random.Random) -> FinFunction:
    rows = tuple(tuple(rng.randrange(c.size) for _ in range(n))
                 for _ in range(c.size ** m))
    return FinFunction(c, m, n, rows)


def probe_assignments(gens: tuple[Generator, ...],
                      budget: SearchBudget) -> list[GeneratorAssignment]:
    """Deterministic battery plus seeded random tables, per carrier size."""
    rng = random.Random(budget.seed)
    out = []
    for size in budget.probe_carriers:
        c = Carrier(size)
        if size == 0 and any(g.src > 0 or g.tgt > 0 for g in gens):
            continue
        for maker in (_cyclic_project, _constant, _shift_sum):
            out.append(GeneratorAssignment(
                c, {g: maker(c, g.src, g.tgt) for g in gens}))
        for _ in range(budget.probe_assignments):
            if size == 0:
                break
            out.append(GeneratorAssignment(
                c, {g: _random_fn(c, g.src, g.tgt, rng) for g in gens}))
    return out


def find_refutation(w: Word, w2: Word,
                    candidates: list[GeneratorAssignment]) -> Witness | None:
    for assignment in candidates:
        t1, t2 = eval_word(w, assignment), eval_word(w2, assignment)
        if t1 != t2:
            for xs in assignment.carrier.tuples(w.src):
                y1, y2 = t1(xs), t2(xs)
                if y1 != y2:
                    return Witness("evaluation", assignment, xs, (y1, y2))
    return None


def validate_witness(w: Word, w2: Word, witness: Witness) -> bool:
    if witness.kind == "arity":
        return w.src != w2.src or w.tgt != w2.tgt
    t1 = eval_word(w, witness.assignment)
    t2 = eval_word(w2, witness.assignment)
    return (t1(witness.input_tuple), t2(witness.input_tuple)) == witness.outputs \
        and witness.outputs[0] != witness.outputs[1]


# ---------------------------------------------------------------------------
# Bidirectional certificate search


def _reconstruct(meet: Word, parents_l, parents_r, w: Word, w2: Word,
                 ctx: RuleContext) -> Certificate:
    fwd_steps: list[RewriteStep] = []
    node = meet
    while True:
        prev, step = parents_l[node]
        if prev is None:
            break
        fwd_steps.append(step)
        node = prev
    fwd_steps.reverse()
    bwd_steps: list[RewriteStep] = []
    node = meet
    while True:
        prev, step = parents_r[node]
        if prev is None:
            break
        bwd_steps.append(step.inverted())
        node = prev
    cert = Certificate(w, tuple(fwd_steps) + tuple(bwd_steps), w2)
    cert.replay(ctx)
    return cert


def _certificate_search(w: Word, w2: Word, ctx: RuleContext,
                        budget: SearchBudget):
    """Tiered bidirectional search: one rule family at a time, then all.

    A shortest chain for one lemma family usually stays inside that family;
    restricting the branching first makes those chains reachable within the
    visited-word budget. Any tier's find is a valid certificate, and only
    exhausting the full tier yields Unknown.
    """
    pre = max(64, budget.max_steps // 256)
    scan = max(2, budget.max_steps // 32)
    tight = min(2, budget.seam_cap)
    tiers: list[tuple[tuple[str, ...] | None, int, int]] = [
        (("M2", "M3"), tight, pre),
        (("M4", "CARD"), tight, pre)]
    if ctx.relations:
        tiers.append((("REL", "CARD", "M1"), tight, scan))
    tiers.append((("M1",), tight, scan))
    deep = budget.max_steps - sum(cap for _, _, cap in tiers)
    tiers.append((("M1",), min(4, budget.seam_cap), max(2, deep // 3)))
    tiers.append((None, min(8, budget.seam_cap), max(2, deep // 3)))
    tiers.append((None, budget.seam_cap, max(2, deep - 2 * (deep // 3))))
    total = 0
    for families, seam_cap, cap in tiers:
        cert, visited = _search_pass(w, w2, ctx, budget, families, cap,
                                     seam_cap)
        total += visited
        if cert is not None:
            return cert, total
    return None, total


def _search_pass(w: Word, w2: Word, ctx: RuleContext, budget: SearchBudget,
                 families, max_steps: int, seam_cap: int | None = None):
    max_len = (budget.max_word_len if budget.max_word_len is not None
               else len(w) + len(w2) + 4)
    pad_max = (budget.pad_max if budget.pad_max is not None
               else max(2, w.src + w.tgt))
    max_width = (budget.max_width if budget.max_width is not None
                 else max(word_width(w), word_width(w2)) + 2)
    bounds = RuleBounds(a_max=budget.a_max, pad_max=pad_max,
                        seam_cap=seam_cap or budget.seam_cap,
                        families=families)
    parents_l: dict[Word, tuple[Word | None, RewriteStep | None]] = {w: (None, None)}
    parents_r: dict[Word, tuple[Word | None, RewriteStep | None]] = {w2: (None, None)}
    if w in parents_r:
        return _reconstruct(w, parents_l, parents_r, w, w2, ctx), 2
    frontier_l, frontier_r = [w], [w2]
    visited = 2
    # saturated components regenerate old successors endlessly; cap that work
    work, work_cap = 0, 12 * max_steps

    while (frontier_l or frontier_r) and visited < max_steps and work < work_cap:
        if not frontier_r:
            expand_left = True
        elif not frontier_l:
            expand_left = False
        else:
            expand_left = len(frontier_l) <= len(frontier_r)
        frontier = frontier_l if expand_left else frontier_r
        own = parents_l if expand_left else parents_r
        other = parents_r if expand_left else parents_l
        next_frontier: list[Word] = []
        meets: list[Word] = []
        for node in frontier:
            for step, succ in moves(node, ctx, bounds):
                work += 1
                if (len(succ) > max_len or succ in own
                        or word_width(succ) > max_width):
                    continue
                own[succ] = (node, step)
                next_frontier.append(succ)
                visited += 1
                if succ in other:
                    meets.append(succ)
            if meets or visited >= max_steps or work >= work_cap:
                break
        if meets:
            best = min(meets, key=_meet_key(parents_l, parents_r))
            return _reconstruct(best, parents_l, parents_r, w, w2, ctx), visited
        if expand_left:
            frontier_l = next_frontier
        else:
            frontier_r = next_frontier
    return None, visited


def _meet_key(parents_l, parents_r):
    def key(node: Word):
        length = 0
        lines = []
        for parents in (parents_l, parents_r):
            cur = node
            while True:
                prev, step = parents[cur]
                if prev is None:
                    break
                length += 1
                lines.append(step_key(step))
                cur = prev
        return (length, tuple(sorted(lines)))
    return key


# ---------------------------------------------------------------------------
# Public entry points


def equivalent(w: Word, w2: Word, budget: SearchBudget | None = None, *,
               ctx: RuleContext | None = None,
               probes: list[GeneratorAssignment] | None = None):
    """Decide w ~ w2: Proved(certificate), Disproved(witness), or Unknown."""
    budget = budget or SearchBudget()
    ctx = ctx if ctx is not None else RuleContext()
    if w.src != w2.src or w.tgt != w2.tgt:
        return Disproved(Witness("arity"))
    if w == w2:
        return Proved(Certificate(w, (), w2))
    if probes is None:
        # with relations in play only assignments satisfying them may refute;
        # the caller must supply those (equivalent_mod does)
        probes = ([] if ctx.relations
                  else probe_assignments(word_generators(w, w2), budget))
    witness = find_refutation(w, w2, probes)
    if witness is not None:
        if not validate_witness(w, w2, witness):
            raise OpwordsError("refutation witness failed re-validation")
        return Disproved(witness)
    cert, visited = _certificate_search(w, w2, ctx, budget)
    if cert is not None:
        return Proved(cert)
    return Unknown(visited)
