"""The saturation decision procedures.

A weak automaton recognizes a saturated language exactly when, after
minimization, (1) it only accepts encoding-shaped words, (2) the initial
state absorbs the all-zero letter, and (3) for every accessible state
the two residual languages obtained by bumping one component of a digit
and fixing the tails to ``b-1`` respectively ``0`` coincide.  Condition
(3) is decided through joint minimization of the two fixed automata;
the dimension-1 procedure replaces it with a linear-time comparison of
output streams along the digit orbits.

Checks run cheapest condition first and return a structured witness for
the first violated one.
"""

from __future__ import annotations

from .alphabet import PARALLEL, SEQUENTIAL
from .automaton import Automaton, is_weak, sccs, trim_accessible
from .fixing import fix_parallel, fix_sequential
from .minimize import joint_equivalence, minimize_weak
from .shape import check_shape, empty_states
from .verdict import (
    ComplementInitialLanguage,
    ComplementPrefix,
    NotWeak,
    PairMismatch,
    Verdict,
    ZeroLoopBroken,
)


def _minimal_form(aut):
    """Trim, then quotient; returns None when the reachable part is not weak."""
    trimmed, _ = trim_accessible(aut)
    info = sccs(trimmed)
    if not is_weak(trimmed, info):
        return None
    return minimize_weak(trimmed, info).target


def _bump(letter, f, is_parallel):
    if is_parallel:
        return letter[:f] + (letter[f] + 1,) + letter[f + 1 :]
    return letter + 1


def check_rva_parallel(aut: Automaton) -> Verdict:
    """Is the parallel-alphabet automaton a real vector automaton?"""
    spec = aut.alphabet
    if spec.kind != PARALLEL or spec.fixed:
        raise ValueError("parallel check needs an unfixed parallel alphabet")
    m = _minimal_form(aut)
    if m is None:
        return Verdict(False, NotWeak())

    shape = check_shape(m, spec.dim, 1)
    if not shape:
        return Verdict(False, shape.witness, minimized=m)

    zero = spec.letter_index(spec.zero_letter())
    if m.delta[m.initial][zero] != m.initial:
        return Verdict(False, ZeroLoopBroken(m.initial), minimized=m)

    b = spec.base
    for f in range(spec.dim):
        hi = fix_parallel(m, f, b - 1).automaton
        lo = fix_parallel(m, f, 0).automaton
        table = joint_equivalence([hi, lo])
        for letter in spec.digit_letters():
            if letter[f] == b - 1:
                continue
            li = spec.letter_index(letter)
            lj = spec.letter_index(_bump(letter, f, True))
            for q in range(m.n):
                if not table.same_language(0, m.delta[q][li], 1, m.delta[q][lj]):
                    return Verdict(
                        False,
                        PairMismatch(f, q, letter, _bump(letter, f, True)),
                        minimized=m,
                    )
    return Verdict(True, minimized=m)


def check_rva_sequential(aut: Automaton) -> Verdict:
    """Is the sequential-alphabet automaton a real vector automaton?"""
    spec = aut.alphabet
    if spec.kind != SEQUENTIAL or spec.fixed:
        raise ValueError("sequential check needs an unfixed sequential alphabet")
    m = _minimal_form(aut)
    if m is None:
        return Verdict(False, NotWeak())

    shape = check_shape(m, 1, spec.dim)
    if not shape:
        return Verdict(False, shape.witness, minimized=m)

    q = m.initial
    for _ in range(spec.dim):
        q = m.delta[q][0]
    if q != m.initial:
        return Verdict(False, ZeroLoopBroken(m.initial), minimized=m)

    b = spec.base
    hi = fix_sequential(m, b - 1)
    lo = fix_sequential(m, 0)
    table = joint_equivalence([hi.automaton, lo.automaton])
    for a in range(b - 1):
        for q in range(m.n):
            x = hi.state(m.delta[q][a], 0)
            y = lo.state(m.delta[q][a + 1], 0)
            if not table.same_language(0, x, 1, y):
                return Verdict(
                    False, PairMismatch(spec.dim - 1, q, a, a + 1), minimized=m
                )
    return Verdict(True, minimized=m)


def _cycle_canonical(seq):
    """Booth's least-rotation algorithm; returns the canonical rotation offset."""
    doubled = seq + seq
    n = len(seq)
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        i = fail[j - k - 1]
        while i != -1 and doubled[j] != doubled[k + i + 1]:
            if doubled[j] < doubled[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if doubled[j] != doubled[k + i + 1]:
            if doubled[j] < doubled[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def _stream_classes(aut, digit, interner):
    """Equivalence classes of per-state output streams along a digit orbit.

    The orbit of a state under one digit is a functional graph.  Each
    state emits a pair: whether running the digit forever from it is
    accepted, and whether doing so after one separator step is accepted.
    Two states get the same class id exactly when their emitted streams
    coincide, which (given a shape-valid automaton) captures equality of
    the residual languages of the corresponding fixed automata.
    """
    n = aut.n
    li = digit  # 1-dimensional alphabets index their digit letters by value
    star = aut.alphabet.star_index
    nxt = [aut.delta[q][li] for q in range(n)]

    # locate the orbit cycles
    state_color = [0] * n  # 0 unvisited, 1 in progress, 2 done
    on_cycle = [False] * n
    for start in range(n):
        if state_color[start]:
            continue
        path = []
        q = start
        while state_color[q] == 0:
            state_color[q] = 1
            path.append(q)
            q = nxt[q]
        if state_color[q] == 1:  # found a fresh cycle; q is its entry
            idx = path.index(q)
            for c in path[idx:]:
                on_cycle[c] = True
        for c in path:
            state_color[c] = 2

    # acceptance of the pure digit orbit: true iff the eventual cycle
    # contains an accepting state
    tail = [None] * n
    for start in range(n):
        if tail[start] is not None:
            continue
        path = []
        q = start
        while tail[q] is None and not on_cycle[q]:
            path.append(q)
            q = nxt[q]
        if tail[q] is None:  # q on an unresolved cycle
            cyc = [q]
            p = nxt[q]
            while p != q:
                cyc.append(p)
                p = nxt[p]
            value = any(c in aut.accepting for c in cyc)
            for c in cyc:
                tail[c] = value
        value = tail[q]
        for c in reversed(path):
            tail[c] = value

    out = [
        (tail[q], tail[aut.delta[q][star]]) for q in range(n)
    ]

    classes = [None] * n
    cycle_shape = {}  # class id -> (canonical symbol tuple, phase)
    for start in range(n):
        if not on_cycle[start] or classes[start] is not None:
            continue
        cyc = [start]
        p = nxt[start]
        while p != start:
            cyc.append(p)
            p = nxt[p]
        syms = tuple(out[c] for c in cyc)
        rot = _cycle_canonical(syms)
        canon = syms[rot:] + syms[:rot]
        for pos, c in enumerate(cyc):
            phase = (pos - rot) % len(cyc)
            cid = interner.setdefault(("cycle", canon, phase), len(interner))
            classes[c] = cid
            cycle_shape[cid] = (canon, phase)

    for start in range(n):
        if classes[start] is not None:
            continue
        path = []
        q = start
        while classes[q] is None:
            path.append(q)
            q = nxt[q]
        for c in reversed(path):
            succ = classes[nxt[c]]
            shape = cycle_shape.get(succ)
            if shape is not None:
                canon, phase = shape
                back = (phase - 1) % len(canon)
                if canon[back] == out[c]:
                    cid = interner.setdefault(("cycle", canon, back), len(interner))
                    classes[c] = cid
                    cycle_shape[cid] = (canon, back)
                    continue
            classes[c] = interner.setdefault(("node", out[c], succ), len(interner))
    return classes


def check_rva_dim1(aut: Automaton) -> Verdict:
    """Linear-time saturation check for dimension-1 automata.

    Avoids joint minimization: with a single free component the fixed
    automata read one digit placeholder, so residual-language equality
    reduces to comparing acceptance streams along the ``b-1`` and ``0``
    digit orbits.
    """
    spec = aut.alphabet
    if spec.dim != 1 or spec.fixed:
        raise ValueError("dimension-1 check needs an unfixed 1-dimensional alphabet")
    m = _minimal_form(aut)
    if m is None:
        return Verdict(False, NotWeak())

    shape = check_shape(m, 1, 1)
    if not shape:
        return Verdict(False, shape.witness, minimized=m)

    zero = spec.letter_index(spec.zero_letter())
    if m.delta[m.initial][zero] != m.initial:
        return Verdict(False, ZeroLoopBroken(m.initial), minimized=m)

    b = spec.base
    interner = {}
    hi_classes = _stream_classes(m, b - 1, interner)
    lo_classes = _stream_classes(m, 0, interner)
    letters = list(spec.digit_letters())
    for a in range(b - 1):
        li = spec.letter_index(letters[a])
        lj = spec.letter_index(letters[a + 1])
        for q in range(m.n):
            if hi_classes[m.delta[q][li]] != lo_classes[m.delta[q][lj]]:
                return Verdict(
                    False, PairMismatch(0, q, letters[a], letters[a + 1]), minimized=m
                )
    return Verdict(True, minimized=m)


def check_rva_complement_parallel(aut: Automaton) -> Verdict:
    """Saturation over sign-extended (b-complement) parallel encodings.

    Valid complement words open with letters from {0, b-1}^d; repeated
    sign letters must be absorbed by the initial state, anything else
    must lead nowhere, dual-tail equality must hold away from the
    initial state, and the all-(b-1) and all-0 fixings must agree from
    the root so both sign paddings of zero are treated alike.
    """
    spec = aut.alphabet
    if spec.kind != PARALLEL or spec.fixed:
        raise ValueError("complement check needs an unfixed parallel alphabet")
    m = _minimal_form(aut)
    if m is None:
        return Verdict(False, NotWeak())
    b = spec.base

    sign_letters = [
        letter
        for letter in spec.digit_letters()
        if all(sym in (0, b - 1) for sym in letter)
    ]
    sign_set = set(sign_letters)

    for letter in sign_letters:
        li = spec.letter_index(letter)
        once = m.delta[m.initial][li]
        if m.delta[once][li] != once:
            return Verdict(False, ZeroLoopBroken(once), minimized=m)

    dead = empty_states(m)
    for letter in spec.letters():
        if letter in sign_set:
            continue
        li = spec.letter_index(letter)
        if m.delta[m.initial][li] not in dead:
            return Verdict(False, ComplementPrefix(letter), minimized=m)

    for f in range(spec.dim):
        hi = fix_parallel(m, f, b - 1).automaton
        lo = fix_parallel(m, f, 0).automaton
        table = joint_equivalence([hi, lo])
        for letter in spec.digit_letters():
            if letter[f] == b - 1:
                continue
            li = spec.letter_index(letter)
            lj = spec.letter_index(_bump(letter, f, True))
            for q in range(m.n):
                if q == m.initial:
                    continue
                if not table.same_language(0, m.delta[q][li], 1, m.delta[q][lj]):
                    return Verdict(
                        False,
                        PairMismatch(f, q, letter, _bump(letter, f, True)),
                        minimized=m,
                    )
        if not table.same_language(0, hi.initial, 1, lo.initial):
            return Verdict(False, ComplementInitialLanguage(f), minimized=m)
    return Verdict(True, minimized=m)
