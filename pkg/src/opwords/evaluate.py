"""Evaluation of words on a finite carrier.

A word denotes the composite of coordinate pullbacks of its boundary maps
with the whiskered functions assigned to its letters, in standard
decomposition order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import Alphabet, Generator
from .endo import Carrier, FinFunction, ff_compose, ff_identity, ff_tensor, pullback
from .errors import AssignmentError
from .words import Word


@dataclass(frozen=True)
class GeneratorAssignment:
    """One function per generator, all over the same carrier."""

    carrier: Carrier
    functions: dict[Generator, FinFunction]

    def __post_init__(self):
        for g, fn in self.functions.items():
            if fn.carrier != self.carrier:
                raise AssignmentError(f"{g.name}: carrier mismatch")
            if fn.src != g.src or fn.tgt != g.tgt:
                raise AssignmentError(
                    f"{g.name}: assigned ({fn.src},{fn.tgt}), "
                    f"declared ({g.src},{g.tgt})")

    def __getitem__(self, g: Generator) -> FinFunction:
        try:
            return self.functions[g]
        except KeyError:
            raise AssignmentError(f"no function assigned to {g.name}") from None

    def covers(self, alphabet: Alphabet) -> bool:
        return all(g in self.functions for g in alphabet)


def eval_word(w: Word, assignment: GeneratorAssignment) -> FinFunction:
    carrier = assignment.carrier
    out = pullback(w.boundaries[0], carrier)
    for (l, g, r), b in zip(w.letters, w.boundaries[1:]):
        layer = ff_tensor(ff_identity(carrier, l),
                          ff_tensor(assignment[g], ff_identity(carrier, r)))
        out = ff_compose(ff_compose(out, layer), pullback(b, carrier))
    return out
