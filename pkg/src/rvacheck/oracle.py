"""Independent ground truth: brute-force equivalence, bounded saturation
search, witness expansion, and corpus generators.

The searches here know nothing about minimization or component fixing.
They work on product graphs of automaton runs: two runs on the same word
for padding discrepancies, two runs on words differing in one component
with dual tails for rounding discrepancies, and one run against a small
separator monitor for shape violations.  Every "no" answer is returned
as a concrete word or pair of words and re-verified against the plain
acceptance semantics before being reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .alphabet import AlphabetSpec, BLANK, PARALLEL, SEQUENTIAL, STAR
from .automaton import Automaton, is_weak, sccs, trim_accessible
from .fixing import fix_parallel, fix_sequential
from .verdict import NotWeak, Verdict
from .words import (
    LassoWord,
    PairWord,
    alternative_encodings,
    format_lasso,
    lasso_to_pair,
    pair_to_lasso,
    value_real,
)


# ---------------------------------------------------------------------------
# generic product-graph machinery


def _tarjan(succ):
    """SCC ids and components (reverse topological) of an explicit digraph."""
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    scc_of = [-1] * n
    comps = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, ei = work[-1]
            if ei == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while ei < len(succ[v]):
                w = succ[v][ei]
                ei += 1
                if index[w] == -1:
                    work[-1] = (v, ei)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    scc_of[w] = len(comps)
                    comp.append(w)
                    if w == v:
                        break
                comp.reverse()
                comps.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return scc_of, comps


def _explore(start, succ_fn, depth_cap=None):
    """BFS closure of a labelled successor relation.

    Returns discovery-ordered nodes, per-node labelled edge lists, and
    per-node BFS depth.  ``depth_cap`` stops expanding nodes that sit
    deeper than the cap (their edge lists stay empty).
    """
    ids = {start: 0}
    order = [start]
    depth = [0]
    edges = []
    head = 0
    while head < len(order):
        node = order[head]
        d = depth[head]
        head += 1
        row = []
        if depth_cap is None or d < depth_cap:
            for label, t in succ_fn(node):
                tid = ids.get(t)
                if tid is None:
                    tid = len(order)
                    ids[t] = tid
                    order.append(t)
                    depth.append(d + 1)
                row.append((label, tid))
        edges.append(row)
    return order, edges, ids


def _find_bad_lasso(order, edges, is_bad_component):
    """Shortest path to a repeating bad component, plus a cycle inside it.

    Returns ``(prefix_labels, cycle_labels)`` or None.  Deterministic:
    BFS in discovery order, first qualifying component wins.
    """
    succ = [[t for _, t in row] for row in edges]
    scc_of, comps = _tarjan(succ)
    bad = set()
    for cid, comp in enumerate(comps):
        members = set(comp)
        recurrent = len(comp) > 1 or any(
            t == comp[0] for t in succ[comp[0]]
        )
        if recurrent and is_bad_component(order, comp):
            bad.add(cid)
    if not bad:
        return None

    parent = {0: None}
    queue = [0]
    head = 0
    entry = None
    while head < len(queue):
        v = queue[head]
        head += 1
        if scc_of[v] in bad:
            entry = v
            break
        for label, t in edges[v]:
            if t not in parent:
                parent[t] = (v, label)
                queue.append(t)
    if entry is None:
        return None
    prefix = []
    v = entry
    while parent[v] is not None:
        v, label = parent[v]
        prefix.append(label)
    prefix.reverse()

    comp = set(comps[scc_of[entry]])
    cycle_parent = {entry: None}
    cq = [entry]
    head = 0
    cycle_end = None
    while head < len(cq) and cycle_end is None:
        v = cq[head]
        head += 1
        for label, t in edges[v]:
            if t == entry:
                cycle_end = (v, label)
                break
            if t in comp and t not in cycle_parent:
                cycle_parent[t] = (v, label)
                cq.append(t)
    v, last_label = cycle_end
    cycle = [last_label]
    while cycle_parent[v] is not None:
        v, label = cycle_parent[v]
        cycle.append(label)
    cycle.reverse()
    return prefix, cycle


# ---------------------------------------------------------------------------
# state-language equivalence


def state_lang_equal_bruteforce(a: Automaton, q: int, b: Automaton, p: int) -> bool:
    """Exact language equality of two states, by product-graph search.

    Two weak automata disagree from (q, p) exactly when some reachable
    pair sits on a product cycle whose two sides have different
    acceptance; any distinguishing lasso fits inside the product, which
    is why lassos up to the product of the state counts suffice.
    """
    return distinguishing_lasso(a, q, b, p) is None


def distinguishing_lasso(a: Automaton, q: int, b: Automaton, p: int):
    """A lasso accepted from exactly one of two states, or None."""
    if a.alphabet != b.alphabet:
        raise ValueError("states must share an alphabet")
    width = a.alphabet.num_letters
    info_a = sccs(a)
    info_b = sccs(b)

    def succ(node):
        x, y = node
        return [
            (i, (a.delta[x][i], b.delta[y][i])) for i in range(width)
        ]

    def bad(order, comp):
        x, y = order[comp[0]]
        return info_a.accepting[info_a.scc_of[x]] != info_b.accepting[info_b.scc_of[y]]

    order, edges, _ = _explore((q, p), succ)
    found = _find_bad_lasso(order, edges, bad)
    if found is None:
        return None
    u, v = found
    letters = [a.alphabet.letter_at(i) for i in range(width)]
    return (
        tuple(letters[i] for i in u),
        tuple(letters[i] for i in v),
    )


# ---------------------------------------------------------------------------
# the saturation oracle


@dataclass(frozen=True)
class BadShapeWord:
    """An accepted word whose separator pattern is not a valid encoding."""

    word: LassoWord
    alphabet: AlphabetSpec
    kind = "shape-violation"

    def to_dict(self):
        return {"kind": self.kind, "word": format_lasso(self.word, self.alphabet)}


@dataclass(frozen=True)
class CounterexamplePair:
    """Two encodings of the same vector with different acceptance."""

    accepted: LassoWord
    rejected: LassoWord
    alphabet: AlphabetSpec
    kind = "equal-value-pair"

    def values(self):
        return value_real(lasso_to_pair(self.accepted), self.alphabet)

    def verify(self, aut: Automaton):
        """Both words re-checked against plain acceptance and exact values."""
        if not aut.accepts_lasso(self.accepted.prefix, self.accepted.period):
            return False
        if aut.accepts_lasso(self.rejected.prefix, self.rejected.period):
            return False
        va = value_real(lasso_to_pair(self.accepted), self.alphabet)
        vb = value_real(lasso_to_pair(self.rejected), self.alphabet)
        return va == vb

    def to_dict(self):
        return {
            "kind": self.kind,
            "accepted": format_lasso(self.accepted, self.alphabet),
            "rejected": format_lasso(self.rejected, self.alphabet),
            "value": [str(v) for v in self.values()],
        }


def _seq_dim(spec: AlphabetSpec):
    return spec.dim if spec.kind == SEQUENTIAL else 1


def _monitor_start():
    return (0, 0)  # (separators seen: 0/1/2, digit count mod d_seq)


def _monitor_step(state, is_star, d_seq):
    stars, cls = state
    if is_star:
        if stars == 0 and cls == 0:
            return (1, 0)
        return (2, 0)  # misaligned or repeated separator: invalid for good
    if stars >= 2:
        return (2, 0)
    return (stars, (cls + 1) % d_seq)


def shape_violation_word(aut: Automaton, depth_cap=None):
    """An accepted lasso whose separators do not form a valid encoding."""
    spec = aut.alphabet
    d_seq = _seq_dim(spec)
    width = spec.num_letters
    star = spec.star_index
    info = sccs(aut)

    def succ(node):
        q, mon = node
        out = []
        for i in range(width):
            out.append((i, (aut.delta[q][i], _monitor_step(mon, i == star, d_seq))))
        return out

    def bad(order, comp):
        q, mon = order[comp[0]]
        if not info.accepting[info.scc_of[q]]:
            return False
        # a cycle whose monitor never rests in the single-separator state
        # repeats an invalid pattern (no separator yet, or too many)
        return mon[0] != 1

    order, edges, _ = _explore((aut.initial, _monitor_start()), succ, depth_cap)
    found = _find_bad_lasso(order, edges, bad)
    if found is None:
        return None
    u, v = found
    letters = [spec.letter_at(i) for i in range(width)]
    word = LassoWord(
        tuple(letters[i] for i in u), tuple(letters[i] for i in v)
    )
    assert aut.accepts_lasso(word.prefix, word.period)
    return word


def pad_violation(aut: Automaton, depth_cap=None):
    """A valid encoding whose zero-padded variant is classified differently."""
    spec = aut.alphabet
    d_seq = _seq_dim(spec)
    width = spec.num_letters
    star = spec.star_index
    info = sccs(aut)
    zero = spec.letter_index(spec.zero_letter())
    padded_start = aut.initial
    for _ in range(d_seq):
        padded_start = aut.delta[padded_start][zero]
    if padded_start == aut.initial:
        return None

    def succ(node):
        x, y, mon = node
        out = []
        for i in range(width):
            nmon = _monitor_step(mon, i == star, d_seq)
            if nmon[0] == 2:
                continue  # word would stop being a valid encoding
            out.append((i, (aut.delta[x][i], aut.delta[y][i], nmon)))
        return out

    def bad(order, comp):
        x, y, mon = order[comp[0]]
        if mon[0] != 1:
            return False
        ax = info.accepting[info.scc_of[x]]
        ay = info.accepting[info.scc_of[y]]
        return ax != ay

    order, edges, _ = _explore((aut.initial, padded_start, _monitor_start()), succ, depth_cap)
    found = _find_bad_lasso(order, edges, bad)
    if found is None:
        return None
    u, v = found
    letters = [spec.letter_at(i) for i in range(width)]
    plain = LassoWord(tuple(letters[i] for i in u), tuple(letters[i] for i in v))
    pad = tuple([spec.zero_letter()] * d_seq)
    padded = LassoWord(pad + plain.prefix, plain.period)
    if aut.accepts_lasso(plain.prefix, plain.period):
        return CounterexamplePair(plain, padded, spec)
    return CounterexamplePair(padded, plain, spec)


def _dual_pairs(spec: AlphabetSpec, f: int):
    """Letter-pair tables for the one-component dual-tail product.

    Returns (flip, forced): ``flip`` maps a letter index to the index of
    the letter with component ``f`` incremented (when possible), and
    ``forced`` lists the (hi, lo) index pairs read after the flip, where
    the hi side carries ``b-1`` and the lo side ``0`` in component ``f``
    and the remaining components agree.
    """
    b = spec.base
    flip = {}
    forced = []
    if spec.kind == PARALLEL:
        for letter in spec.digit_letters():
            li = spec.letter_index(letter)
            if letter[f] < b - 1:
                bumped = letter[:f] + (letter[f] + 1,) + letter[f + 1 :]
                flip[li] = spec.letter_index(bumped)
            if letter[f] == b - 1:
                low = letter[:f] + (0,) + letter[f + 1 :]
                forced.append((li, spec.letter_index(low)))
    else:
        for a in range(b - 1):
            flip[a] = a + 1
        forced.append((b - 1, 0))
    return flip, forced


def dual_violation(aut: Automaton, f: int, depth_cap=None):
    """An accepted encoding whose dual tail flip at component ``f`` is rejected.

    Tracks two runs: both read the same letters until the flip, where
    the second run reads the component-``f``-incremented letter; from
    then on the first run reads ``b-1`` and the second ``0`` in that
    component.  By the dual-encoding identity the two words always have
    equal value, so any acceptance difference on a valid pair refutes
    saturation.
    """
    spec = aut.alphabet
    d_seq = _seq_dim(spec)
    width = spec.num_letters
    star = spec.star_index
    info = sccs(aut)
    flip, forced = _dual_pairs(spec, f)
    sequential = spec.kind == SEQUENTIAL

    def succ(node):
        x, y, phase, mon = node
        out = []
        for i in range(width):
            nmon = _monitor_step(mon, i == star, d_seq)
            if nmon[0] == 2:
                continue
            if i == star:
                out.append(((i, i), (aut.delta[x][star], aut.delta[y][star], phase, nmon)))
                continue
            if phase == 0:
                out.append(((i, i), (aut.delta[x][i], aut.delta[y][i], 0, nmon)))
                j = flip.get(i)
                if j is not None and (not sequential or mon[1] == f):
                    out.append(((i, j), (aut.delta[x][i], aut.delta[y][j], 1, nmon)))
            else:
                if sequential and mon[1] != f:
                    out.append(((i, i), (aut.delta[x][i], aut.delta[y][i], 1, nmon)))
        if phase == 1:
            stars_seen, cls = mon
            for i, j in forced:
                if sequential and cls != f:
                    continue
                nmon = _monitor_step(mon, False, d_seq)
                out.append(((i, j), (aut.delta[x][i], aut.delta[y][j], 1, nmon)))
        return out

    def bad(order, comp):
        x, y, phase, mon = order[comp[0]]
        if phase != 1 or mon[0] != 1:
            return False
        ax = info.accepting[info.scc_of[x]]
        ay = info.accepting[info.scc_of[y]]
        return ax != ay

    start = (aut.initial, aut.initial, 0, _monitor_start())
    order, edges, _ = _explore(start, succ, depth_cap)
    found = _find_bad_lasso(order, edges, bad)
    if found is None:
        return None
    u, v = found
    letters = [spec.letter_at(i) for i in range(width)]
    hi = LassoWord(
        tuple(letters[i] for i, _ in u), tuple(letters[i] for i, _ in v)
    )
    lo = LassoWord(
        tuple(letters[j] for _, j in u), tuple(letters[j] for _, j in v)
    )
    if aut.accepts_lasso(hi.prefix, hi.period):
        return CounterexamplePair(hi, lo, spec)
    return CounterexamplePair(lo, hi, spec)


def saturation_oracle(aut: Automaton, sample_bound=None) -> Verdict:
    """Word-level saturation search with verified counterexamples.

    Searches, in a fixed deterministic order, for an accepted word with
    an invalid separator pattern, a zero-padding discrepancy, and a
    dual-tail discrepancy per component.  ``sample_bound`` caps the
    length of counterexample prefixes considered; with the default
    (None) the search is exhaustive over the product graphs, so a "yes"
    means no counterexample of any prefix length exists in these
    families.
    """
    spec = aut.alphabet
    if spec.fixed:
        raise ValueError("the saturation oracle reads unfixed alphabets")
    if not is_weak(aut):
        return Verdict(False, NotWeak())
    aut, _ = trim_accessible(aut)

    word = shape_violation_word(aut, sample_bound)
    if word is not None:
        return Verdict(False, BadShapeWord(word, spec))

    pair = pad_violation(aut, sample_bound)
    if pair is None:
        dim = spec.dim
        for f in range(dim):
            pair = dual_violation(aut, f, sample_bound)
            if pair is not None:
                break
    if pair is not None:
        if not pair.verify(aut):
            raise AssertionError("oracle produced an unverifiable counterexample")
        return Verdict(False, pair)
    detail = (
        "no counterexample"
        if sample_bound is None
        else f"no counterexample with prefix length <= {sample_bound}"
    )
    return Verdict(True, detail=detail)


# ---------------------------------------------------------------------------
# expansion of structural witnesses into words


def _access_words(aut: Automaton):
    """Letter-index paths from the initial state to every reachable state."""
    width = aut.alphabet.num_letters
    paths = {aut.initial: ()}
    queue = [aut.initial]
    head = 0
    while head < len(queue):
        q = queue[head]
        head += 1
        for i in range(width):
            t = aut.delta[q][i]
            if t not in paths:
                paths[t] = paths[q] + (i,)
                queue.append(t)
    return paths


def accepted_lasso_from(aut: Automaton, state: int):
    """Some lasso accepted from ``state``, or None (weak automata)."""
    info = sccs(aut)
    width = aut.alphabet.num_letters

    def succ(node):
        return [(i, aut.delta[node][i]) for i in range(width)]

    def bad(order, comp):
        return info.accepting[info.scc_of[order[comp[0]]]]

    order, edges, _ = _explore(state, succ)
    found = _find_bad_lasso(order, edges, bad)
    if found is None:
        return None
    u, v = found
    letters = [aut.alphabet.letter_at(i) for i in range(width)]
    return (
        tuple(letters[i] for i in u),
        tuple(letters[i] for i in v),
    )


def _fill_blanks(word, f, z, parallel):
    """Replace the placeholder of a fixed-alphabet word by a digit."""
    def fill(letter):
        if letter == STAR:
            return STAR
        if parallel:
            return letter[:f] + (z,) + letter[f + 1 :]
        return z if letter == BLANK else letter

    return tuple(fill(a) for a in word)


def expand_witness(verdict: Verdict, mode: str):
    """Turn a structural "no" witness into a concrete word-level one.

    ``mode`` names the check that produced the verdict (parallel,
    sequential, dim1 or complement).  Returns a ``CounterexamplePair``,
    a ``BadShapeWord``, or None when the witness has no word form (a
    non-weak automaton).
    """
    if verdict.answer or verdict.minimized is None:
        return None
    m = verdict.minimized
    spec = m.alphabet
    b = spec.base
    w = verdict.witness
    kind = w.kind

    if kind == "not-shape":
        word = shape_violation_word(m)
        return BadShapeWord(word, spec) if word is not None else None

    if kind == "zero-loop-broken" and mode != "complement":
        return pad_violation(m)

    if kind == "zero-loop-broken":  # complement: sign absorption failed
        sign_digits = (0, b - 1)
        for letter in spec.digit_letters():
            if any(sym not in sign_digits for sym in letter):
                continue
            li = spec.letter_index(letter)
            once = m.delta[m.initial][li]
            if m.delta[once][li] == once:
                continue
            lasso = distinguishing_lasso(m, once, m, m.delta[once][li])
            if lasso is None:
                continue
            u, v = lasso
            short = LassoWord((letter,) + u, v)
            long = LassoWord((letter, letter) + u, v)
            if m.accepts_lasso(short.prefix, short.period):
                return CounterexamplePair(short, long, spec)
            return CounterexamplePair(long, short, spec)
        return None

    if kind == "complement-prefix":
        li = spec.letter_index(w.letter)
        lasso = accepted_lasso_from(m, m.delta[m.initial][li])
        if lasso is None:
            return None
        u, v = lasso
        return BadShapeWord(LassoWord((w.letter,) + u, v), spec)

    if kind == "complement-initial-language":
        hi = fix_parallel(m, w.component, b - 1).automaton
        lo = fix_parallel(m, w.component, 0).automaton
        lasso = distinguishing_lasso(hi, hi.initial, lo, lo.initial)
        if lasso is None:
            return None
        u, v = lasso
        hi_word = LassoWord(
            _fill_blanks(u, w.component, b - 1, True),
            _fill_blanks(v, w.component, b - 1, True),
        )
        lo_word = LassoWord(
            _fill_blanks(u, w.component, 0, True),
            _fill_blanks(v, w.component, 0, True),
        )
        if m.accepts_lasso(hi_word.prefix, hi_word.period):
            return CounterexamplePair(hi_word, lo_word, spec)
        return CounterexamplePair(lo_word, hi_word, spec)

    if kind == "pair-mismatch":
        access = _access_words(m)
        prefix_letters = tuple(spec.letter_at(i) for i in access[w.state])
        if spec.kind == PARALLEL:
            hi = fix_parallel(m, w.component, b - 1).automaton
            lo = fix_parallel(m, w.component, 0).automaton
            x = m.step(w.state, w.letter)
            y = m.step(w.state, w.bumped_letter)
            lasso = distinguishing_lasso(hi, x, lo, y)
            if lasso is None:
                return None
            u, v = lasso
            hi_word = LassoWord(
                prefix_letters + (w.letter,) + _fill_blanks(u, w.component, b - 1, True),
                _fill_blanks(v, w.component, b - 1, True),
            )
            lo_word = LassoWord(
                prefix_letters
                + (w.bumped_letter,)
                + _fill_blanks(u, w.component, 0, True),
                _fill_blanks(v, w.component, 0, True),
            )
        else:
            hi_fix = fix_sequential(m, b - 1)
            lo_fix = fix_sequential(m, 0)
            x = hi_fix.state(m.step(w.state, w.letter), 0)
            y = lo_fix.state(m.step(w.state, w.bumped_letter), 0)
            lasso = distinguishing_lasso(hi_fix.automaton, x, lo_fix.automaton, y)
            if lasso is None:
                return None
            u, v = lasso
            hi_word = LassoWord(
                prefix_letters + (w.letter,) + _fill_blanks(u, None, b - 1, False),
                _fill_blanks(v, None, b - 1, False),
            )
            lo_word = LassoWord(
                prefix_letters + (w.bumped_letter,) + _fill_blanks(u, None, 0, False),
                _fill_blanks(v, None, 0, False),
            )
        if m.accepts_lasso(hi_word.prefix, hi_word.period):
            return CounterexamplePair(hi_word, lo_word, spec)
        return CounterexamplePair(lo_word, hi_word, spec)

    return None


# ---------------------------------------------------------------------------
# literal enumeration (cross-validation of the product searches)


def enumerate_encoding_words(spec: AlphabetSpec, max_natural, max_period):
    """Every one-separator pair word within small natural/period bounds."""
    import itertools

    digits = list(spec.digit_letters())
    for nat_len in range(max_natural + 1):
        for per_len in range(1, max_period + 1):
            for nat in itertools.product(digits, repeat=nat_len):
                for per in itertools.product(digits, repeat=per_len):
                    yield PairWord(nat, per, frozenset({nat_len}))


def saturation_oracle_enumerative(aut: Automaton, max_natural=3, max_period=2):
    """Literal bounded enumeration: accepted encodings must keep all their
    alternative encodings accepted.  Exponential; only for tiny automata."""
    spec = aut.alphabet
    for pw in enumerate_encoding_words(spec, max_natural, max_period):
        word = pair_to_lasso(pw)
        if not aut.accepts_lasso(word.prefix, word.period):
            continue
        for alt in alternative_encodings(pw, spec):
            other = pair_to_lasso(alt)
            if not aut.accepts_lasso(other.prefix, other.period):
                return CounterexamplePair(word, other, spec)
    return None


# ---------------------------------------------------------------------------
# corpus generators


def parallelize_automaton(aut: Automaton) -> Automaton:
    """Read a sequential automaton one whole vector letter at a time.

    Same state set; a vector letter follows the chain of its component
    digits, the separator is unchanged.  Acceptance of encodings is
    preserved for weak automata since the sampled run settles in the
    same component as the original run.
    """
    spec = aut.alphabet
    if spec.kind != SEQUENTIAL or spec.fixed:
        raise ValueError("can only parallelize an unfixed sequential automaton")
    new_spec = AlphabetSpec(spec.base, spec.dim, PARALLEL)
    star_old = spec.star_index
    delta = []
    for q in range(aut.n):
        row = []
        for letter in new_spec.digit_letters():
            t = q
            for a in letter:
                t = aut.delta[t][a]
            row.append(t)
        row.append(aut.delta[q][star_old])
        delta.append(row)
    return Automaton(new_spec, aut.n, aut.initial, aut.accepting, delta)


def _known_full_space(spec: AlphabetSpec):
    if spec.is_parallel:
        width = spec.num_letters
        top, tail, dead = 0, 1, 2
        delta = [[top] * (width - 1) + [tail],
                 [tail] * (width - 1) + [dead],
                 [dead] * width]
        return Automaton(spec, 3, top, frozenset({tail}), delta)
    d = spec.dim
    b = spec.base
    tail, dead = d, d + 1
    delta = []
    for i in range(d):
        row = [(i + 1) % d] * b + [tail if i == 0 else dead]
        delta.append(row)
    delta.append([tail] * b + [dead])
    delta.append([dead] * (b + 1))
    return Automaton(spec, d + 2, 0, frozenset({tail}), delta)


def _known_zero_only(spec: AlphabetSpec):
    b = spec.base
    if spec.is_parallel:
        width = spec.num_letters
        zero = spec.letter_index(spec.zero_letter())
        pre, post, dead = 0, 1, 2
        pre_row = [dead] * width
        pre_row[zero] = pre
        pre_row[spec.star_index] = post
        post_row = [dead] * width
        post_row[zero] = post
        return Automaton(spec, 3, pre, frozenset({post}),
                         [pre_row, post_row, [dead] * width])
    d = spec.dim
    tail, dead = d, d + 1
    delta = []
    for i in range(d):
        row = [dead] * (b + 1)
        row[0] = (i + 1) % d
        row[spec.star_index] = tail if i == 0 else dead
        delta.append(row)
    tail_row = [dead] * (b + 1)
    tail_row[0] = tail
    delta.append(tail_row)
    delta.append([dead] * (b + 1))
    return Automaton(spec, d + 2, 0, frozenset({tail}), delta)


def _known_unit_box(spec: AlphabetSpec):
    """Componentwise values in [0, 1], with both encodings of 1 accepted."""
    b = spec.base
    d = spec.dim
    if spec.is_parallel:
        pre = {}   # frozenset of components that consumed their leading 1
        post = {}  # frozenset of components pinned to zero tails
        states = []

        def intern(table, key):
            if key not in table:
                table[key] = len(states)
                states.append(None)
            return table[key]

        start = intern(pre, frozenset())
        for r in range(2**d):
            intern(pre, frozenset(i for i in range(d) if (r >> i) & 1))
        for r in range(2**d):
            intern(post, frozenset(i for i in range(d) if (r >> i) & 1))
        dead = len(states)
        width = spec.num_letters
        delta = [[dead] * width for _ in range(len(states) + 1)]
        for done, sid in pre.items():
            for letter in spec.digit_letters():
                li = spec.letter_index(letter)
                if done or any(a > 1 for a in letter):
                    continue  # a component already holding 1 cannot extend
                target = frozenset(i for i in range(d) if letter[i] == 1)
                delta[sid][li] = pre[target]
            delta[sid][spec.star_index] = post[done]
        for pinned, sid in post.items():
            for letter in spec.digit_letters():
                li = spec.letter_index(letter)
                if all(letter[i] == 0 for i in pinned):
                    delta[sid][li] = sid
        accepting = frozenset(post.values())
        return Automaton(spec, len(states) + 1, start, accepting, delta)

    ids = {}
    rows = []

    def intern(key):
        if key not in ids:
            ids[key] = len(rows)
            rows.append(None)
        return ids[key]

    width = spec.num_letters
    start = intern(("pre", 0, frozenset()))
    todo = [("pre", 0, frozenset())]
    dead_key = ("dead",)
    dead = intern(dead_key)
    rows[dead] = [dead] * width
    head = 0
    seenq = {("pre", 0, frozenset()), dead_key}
    while head < len(todo):
        key = todo[head]
        head += 1
        tag = key[0]
        row = [dead] * width
        if tag == "pre":
            _, i, done = key
            for a in range(b):
                if i in done or a > 1:
                    continue
                ndone = done | {i} if a == 1 else done
                tkey = ("pre", (i + 1) % d, ndone)
                row[a] = intern(tkey)
                if tkey not in seenq:
                    seenq.add(tkey)
                    todo.append(tkey)
            if i == 0:
                tkey = ("post", 0, done)
                row[spec.star_index] = intern(tkey)
                if tkey not in seenq:
                    seenq.add(tkey)
                    todo.append(tkey)
        else:
            _, i, pinned = key
            for a in range(b):
                if i in pinned and a != 0:
                    continue
                tkey = ("post", (i + 1) % d, pinned)
                row[a] = intern(tkey)
                if tkey not in seenq:
                    seenq.add(tkey)
                    todo.append(tkey)
        rows[ids[key]] = row
    accepting = frozenset(v for k, v in ids.items() if k[0] == "post")
    return Automaton(spec, len(rows), start, accepting, rows)


def _known_complement_full(spec: AlphabetSpec):
    b = spec.base
    width = spec.num_letters
    root, top, tail, dead = 0, 1, 2, 3
    sign = {0, b - 1}
    root_row = [dead] * width
    for letter in spec.digit_letters():
        if all(a in sign for a in letter):
            root_row[spec.letter_index(letter)] = top
    top_row = [top] * (width - 1) + [tail]
    tail_row = [tail] * (width - 1) + [dead]
    return Automaton(spec, 4, root, frozenset({tail}),
                     [root_row, top_row, tail_row, [dead] * width])


def gen_known_rva(kind, base, dim, encoding=PARALLEL) -> Automaton:
    """Hand-built saturated automata used as positive fixtures.

    ``full-space`` accepts every encoding of every vector, ``zero-only``
    exactly the encodings of the origin, ``unit-box`` the encodings of
    [0,1]^d, and ``complement-full`` every sign-extended encoding (it is
    parallel-only).
    """
    spec = AlphabetSpec(base, dim, encoding)
    if kind == "full-space":
        return _known_full_space(spec)
    if kind == "zero-only":
        return _known_zero_only(spec)
    if kind == "unit-box":
        return _known_unit_box(spec)
    if kind == "complement-full":
        if encoding != PARALLEL:
            raise ValueError("the sign-extended family is parallel-only")
        return _known_complement_full(spec)
    raise ValueError(f"unknown family {kind!r}")


def gen_random_weak(n, base, dim, encoding=PARALLEL, seed=0) -> Automaton:
    """Seeded random total automaton, acceptance assigned per component.

    Identical seeds give identical automata; weakness holds by
    construction since whole components are flagged accepting.
    """
    spec = AlphabetSpec(base, dim, encoding)
    rng = random.Random(f"{seed}:{n}:{base}:{dim}:{encoding}")
    width = spec.num_letters
    delta = [[rng.randrange(n) for _ in range(width)] for _ in range(n)]
    aut = Automaton(spec, n, 0, frozenset(), delta)
    info = sccs(aut)
    accepting = set()
    for comp in info.components:
        if rng.random() < 0.5:
            accepting.update(comp)
    return Automaton(spec, n, 0, frozenset(accepting), delta)


def gen_random_sequential_shaped(n, base, dim, seed=0) -> Automaton:
    """Random weak sequential automaton that only accepts valid encodings.

    States are layered by digit class with a separator region behind
    them, so every accepted word has exactly one separator on a
    component boundary.  Used for cross-encoding comparisons, where
    misalignment-only defects would be invisible after parallelization.
    """
    spec = AlphabetSpec(base, dim, SEQUENTIAL)
    rng = random.Random(f"{seed}:{n}:{base}:{dim}:shaped")
    per_class = max(1, (n - 2) // (2 * dim))
    fra = max(1, n - dim * per_class - 1)

    def mod_state(i, k):
        return i * per_class + k

    fra_off = dim * per_class
    dead = fra_off + fra
    total = dead + 1
    width = spec.num_letters
    delta = []
    for i in range(dim):
        for _ in range(per_class):
            row = [
                mod_state((i + 1) % dim, rng.randrange(per_class))
                for _ in range(base)
            ]
            if i == 0 and rng.random() < 0.85:
                row.append(fra_off + rng.randrange(fra))
            else:
                row.append(dead)
            delta.append(row)
    for _ in range(fra):
        row = [fra_off + rng.randrange(fra) for _ in range(base)]
        row.append(dead)
        delta.append(row)
    delta.append([dead] * width)
    aut = Automaton(spec, total, 0, frozenset(), delta)
    info = sccs(aut)
    accepting = set()
    for comp in info.components:
        if all(fra_off <= q < dead for q in comp) and rng.random() < 0.6:
            accepting.update(comp)
    return Automaton(spec, total, 0, frozenset(accepting), delta)


def gen_residue_rva(n_states, base=2) -> Automaton:
    """Saturated residue automaton with an (almost) incompressible core.

    Accepts the encodings of ``{x : floor(x) mod M == 0}`` where ``M``
    is the largest odd number fitting the state budget.  A residue
    counter reads the natural part; behind the separator, an all-high
    tail from residue 0 must stay rejected (it would round the value up)
    while one from residue M-1 must be accepted.  With M odd the M
    counter states are pairwise inequivalent, so minimization keeps the
    automaton at full size.  Meant for small adversarial fixtures: the
    single-digit orbits of its component fixings are one long cycle, so
    refining their languages takes refinement depth close to M.
    """
    if n_states < 7:
        raise ValueError("need at least 7 states")
    m = n_states - 4
    spare = 0
    if m % 2 == 0:  # odd modulus keeps the digit action invertible
        m -= 1
        spare = 1
    spec = AlphabetSpec(base, 1, PARALLEL)
    nine_zero = m + spare      # read "= 0 mod M", fractional all high so far
    nine_last = nine_zero + 1  # read "= M-1 mod M", fractional all high so far
    acc_all = nine_zero + 2
    dead = nine_zero + 3
    width = spec.num_letters
    delta = []
    for r in range(m):
        row = [(r * base + a) % m for a in range(base)]
        if r == 0:
            row.append(nine_zero)
        elif r == m - 1:
            row.append(nine_last)
        else:
            row.append(dead)
        delta.append(row)
    if spare:  # one filler state so the requested size is exact
        delta.append([0] * base + [dead])
    delta.append([acc_all] * (base - 1) + [nine_zero, dead])
    delta.append([dead] * (base - 1) + [nine_last, dead])
    delta.append([acc_all] * base + [dead])
    delta.append([dead] * width)
    accepting = frozenset({nine_last, acc_all})
    return Automaton(spec, n_states, 0, accepting, delta)


def gen_interval_rva(n_states, base=2) -> Automaton:
    """Saturated interval automaton for [0, c] with a capped value counter.

    The value states largely collapse under minimization (capped sums
    saturate quickly), so this family exercises the pipeline on heavily
    reducible input; see :func:`gen_residue_rva` for the incompressible
    counterpart.
    """
    if n_states < 5:
        raise ValueError("need at least 5 states")
    c = n_states - 4
    spec = AlphabetSpec(base, 1, PARALLEL)
    zu = c + 1
    z0 = c + 2
    dead = c + 3
    width = spec.num_letters
    delta = []
    for v in range(c + 1):
        row = []
        for a in range(base):
            w = v * base + a
            row.append(w if w <= c else dead)
        row.append(zu if v < c else z0)
        delta.append(row)
    delta.append([zu] * base + [dead])
    delta.append([z0] + [dead] * (base - 1) + [dead])
    delta.append([dead] * width)
    return Automaton(spec, n_states, 0, frozenset({zu, z0}), delta)

