"""Automaton transformations that pre-substitute one vector component.

Fixing component ``f`` to digit ``z`` replaces the component by the
placeholder ``#`` in the alphabet and bakes ``z`` into the transitions,
so a run over the reduced alphabet simulates the original automaton on
words whose component ``f`` is constantly ``z``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import BLANK, AlphabetSpec, PARALLEL, SEQUENTIAL
from .automaton import Automaton


@dataclass(frozen=True)
class FixedAutomaton:
    """Parallel fixing: same state set, component ``component`` reads ``#``."""

    automaton: Automaton
    component: int
    digit: int


@dataclass(frozen=True)
class SequentialFixedAutomaton:
    """Sequential fixing of the last component.

    States are (source state, digit-class) pairs plus a fresh dead sink;
    ``state(q, i)`` translates source coordinates.
    """

    automaton: Automaton
    digit: int
    source_states: int
    dim: int

    def state(self, q, i=0):
        return q * self.dim + i

    @property
    def sink(self):
        return self.source_states * self.dim


def fix_parallel(aut: Automaton, f: int, z: int) -> FixedAutomaton:
    """Fix component ``f`` of a parallel automaton to the digit ``z``."""
    spec = aut.alphabet
    if spec.kind != PARALLEL:
        raise ValueError("parallel fixing needs a parallel alphabet")
    if f in spec.fixed or not (0 <= f < spec.dim):
        raise ValueError("component unavailable for fixing")
    if not (0 <= z < spec.base):
        raise ValueError("fixed digit out of range")
    new_spec = AlphabetSpec(spec.base, spec.dim, PARALLEL, spec.fixed | {f})
    delta = []
    filled = [
        spec.letter_index(
            tuple(z if i == f else sym for i, sym in enumerate(letter))
        )
        for letter in new_spec.digit_letters()
    ]
    star_old = spec.star_index
    for q in range(aut.n):
        row = aut.delta[q]
        delta.append([row[i] for i in filled] + [row[star_old]])
    fixed = Automaton(new_spec, aut.n, aut.initial, aut.accepting, delta)
    return FixedAutomaton(fixed, f, z)


def fix_sequential(aut: Automaton, z: int) -> SequentialFixedAutomaton:
    """Fix the last component of a sequential automaton to the digit ``z``.

    The result tracks the digit class alongside the state: digits are
    only enabled below class ``d-1``, the placeholder only at class
    ``d-1`` (where it simulates reading ``z``), the separator keeps the
    class, and everything else falls into a fresh dead sink.
    """
    spec = aut.alphabet
    if spec.kind != SEQUENTIAL or spec.fixed:
        raise ValueError("sequential fixing needs an unfixed sequential alphabet")
    if not (0 <= z < spec.base):
        raise ValueError("fixed digit out of range")
    d = spec.dim
    new_spec = AlphabetSpec(spec.base, d, SEQUENTIAL, frozenset({d - 1}))
    n_new = aut.n * d + 1
    sink = aut.n * d
    width = new_spec.num_letters
    blank_idx = new_spec.letter_index(BLANK)
    star_new = new_spec.star_index
    star_old = spec.star_index
    delta = []
    for q in range(aut.n):
        for i in range(d):
            row = [sink] * width
            if i < d - 1:
                for a in range(spec.base):
                    row[a] = aut.delta[q][a] * d + (i + 1)
            else:
                row[blank_idx] = aut.delta[q][z] * d
            row[star_new] = aut.delta[q][star_old] * d + i
            delta.append(row)
    delta.append([sink] * width)
    accepting = frozenset(
        q * d + i for q in aut.accepting for i in range(d)
    )
    fixed = Automaton(new_spec, n_new, aut.initial * d, accepting, delta)
    return SequentialFixedAutomaton(fixed, z, aut.n, d)
