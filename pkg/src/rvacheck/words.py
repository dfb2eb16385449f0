"""Exact arithmetic on base-b encodings of reals and their word forms.

Words are handled in pair form: the digit stream (an ultimately periodic
sequence, finite when the period is empty) is kept apart from the set of
positions at which the separator ``*`` occurs in the combined word.  A
valid encoding of a real vector carries exactly one separator, but pair
words with zero or several separators are representable since rejection
of such words has to be testable.

All values are exact: integers for natural parts, ``fractions.Fraction``
everywhere else.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .alphabet import AlphabetSpec, BLANK, STAR


@dataclass(frozen=True)
class PairWord:
    """An ultimately periodic word split into digits and separator slots.

    ``prefix`` and ``period`` hold the digit symbols only (scalars for
    sequential words, ``dim``-tuples for parallel ones); ``stars`` holds
    the positions of ``*`` in the combined word.  An empty period makes
    the word finite.
    """

    prefix: tuple
    period: tuple
    stars: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.prefix, tuple):
            object.__setattr__(self, "prefix", tuple(self.prefix))
        if not isinstance(self.period, tuple):
            object.__setattr__(self, "period", tuple(self.period))
        if not isinstance(self.stars, frozenset):
            object.__setattr__(self, "stars", frozenset(self.stars))
        if any(s < 0 for s in self.stars):
            raise ValueError("separator positions must be non-negative")
        if not self.period:
            total = len(self.prefix) + len(self.stars)
            if any(s >= total for s in self.stars):
                raise ValueError("separator position beyond the end of a finite word")

    @property
    def star_position(self):
        if len(self.stars) != 1:
            raise ValueError("expected exactly one separator")
        return next(iter(self.stars))

    def digit_at(self, i):
        """Digit stream lookup (prefix followed by the unrolled period)."""
        if i < len(self.prefix):
            return self.prefix[i]
        if not self.period:
            raise IndexError("finite word exhausted")
        return self.period[(i - len(self.prefix)) % len(self.period)]


@dataclass(frozen=True)
class LassoWord:
    """An ultimately periodic word of letters, separators included."""

    prefix: tuple
    period: tuple

    def __post_init__(self):
        if not isinstance(self.prefix, tuple):
            object.__setattr__(self, "prefix", tuple(self.prefix))
        if not isinstance(self.period, tuple):
            object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("lasso period must be nonempty")


def value_natural(digits, base):
    """Value of a finite digit word read most significant digit first."""
    value = 0
    for d in digits:
        if not (0 <= d < base):
            raise ValueError(f"digit {d!r} out of range for base {base}")
        value = value * base + d
    return value


def value_fractional(prefix, period, base):
    """Exact value of the infinite digit word ``prefix period^w`` after the point.

    Closed form of the geometric sum, so periods like ``(b-1)`` evaluate
    to exactly 1.
    """
    prefix = tuple(prefix)
    period = tuple(period)
    if not period:
        raise ValueError("fractional part needs a nonempty period")
    head = value_natural(prefix, base)
    tail = Fraction(value_natural(period, base), base ** len(period) - 1)
    return (head + tail) / Fraction(base) ** len(prefix)


def split_at_star(pw: PairWord):
    """Natural digits, fractional prefix and fractional period of a one-star word."""
    s = pw.star_position
    nat = tuple(pw.digit_at(i) for i in range(s))
    if s <= len(pw.prefix):
        fra_prefix = pw.prefix[s:]
        fra_period = pw.period
    else:
        if not pw.period:
            raise ValueError("separator beyond the digits of a finite word")
        shift = (s - len(pw.prefix)) % len(pw.period)
        fra_prefix = ()
        fra_period = pw.period[shift:] + pw.period[:shift]
    if not fra_period:
        raise ValueError("no fractional part after the separator")
    return nat, fra_prefix, fra_period


def _component(symbols, i):
    return tuple(sym[i] for sym in symbols)


def value_real(pw: PairWord, alphabet: AlphabetSpec):
    """The vector of exact rationals encoded by a one-separator pair word."""
    if not alphabet.is_parallel:
        pw = parallelize(pw, alphabet.dim)
    nat, fpre, fper = split_at_star(pw)
    if any(BLANK in vec for vec in nat + fpre + fper):
        raise ValueError("cannot evaluate a word with fixed components")
    values = []
    for i in range(alphabet.dim):
        comp_nat = value_natural(_component(nat, i), alphabet.base)
        comp_fra = value_fractional(
            _component(fpre, i), _component(fper, i), alphabet.base
        )
        values.append(comp_nat + comp_fra)
    return tuple(values)


def _digit_counts_before_stars(stars):
    """Number of digit symbols preceding each separator, in order."""
    out = []
    for k, s in enumerate(sorted(stars)):
        out.append(s - k)
    return out


def parallelize(pw: PairWord, d):
    """Group a sequential word's digits into ``d``-vectors.

    Every separator must sit at a component boundary (its digit count is
    a multiple of ``d``); the digits themselves must tile into complete
    vectors.
    """
    if d == 1:
        return PairWord(
            tuple((x,) for x in pw.prefix), tuple((x,) for x in pw.period), pw.stars
        )
    for c in _digit_counts_before_stars(pw.stars):
        if c % d:
            raise ValueError("separator not aligned on a component boundary")
    prefix, period = pw.prefix, pw.period
    if period:
        if len(prefix) % d:
            take = d - len(prefix) % d
            reps = -(-take // len(period))
            rolled = (period * reps)[:take]
            shift = take % len(period)
            prefix = prefix + rolled
            period = period[shift:] + period[:shift]
        if len(period) % d:
            period = period * (d // gcd(len(period), d))
    elif len(prefix) % d:
        raise ValueError("finite digit word does not tile into vectors")
    vec_prefix = tuple(
        tuple(prefix[j * d : (j + 1) * d]) for j in range(len(prefix) // d)
    )
    vec_period = tuple(
        tuple(period[j * d : (j + 1) * d]) for j in range(len(period) // d)
    )
    stars = frozenset(
        c // d + k for k, c in enumerate(_digit_counts_before_stars(pw.stars))
    )
    return PairWord(vec_prefix, vec_period, stars)


def sequentialize(pw: PairWord):
    """Flatten a parallel word's vectors back into a digit sequence."""
    if not pw.prefix and not pw.period:
        d = 1
    else:
        sample = pw.prefix[0] if pw.prefix else pw.period[0]
        d = len(sample)
    prefix = tuple(x for vec in pw.prefix for x in vec)
    period = tuple(x for vec in pw.period for x in vec)
    stars = frozenset(
        c * d + k for k, c in enumerate(_digit_counts_before_stars(pw.stars))
    )
    return PairWord(prefix, period, stars)


def fix_component_word(pw: PairWord, f, z, dim=None):
    """Overwrite component ``f`` of every digit with the symbol ``z``.

    Parallel words are rewritten letter by letter.  For sequential words
    (`dim` required) the positions congruent to ``f`` modulo ``dim``,
    counted over digit symbols only, are replaced; the period is
    unrolled as needed so the congruence classes stay put.
    """
    sample = pw.prefix[0] if pw.prefix else (pw.period[0] if pw.period else None)
    if isinstance(sample, tuple):
        if not (0 <= f < len(sample)):
            raise ValueError("component index out of range")
        fix = lambda vec: vec[:f] + (z,) + vec[f + 1 :]
        return PairWord(
            tuple(fix(v) for v in pw.prefix),
            tuple(fix(v) for v in pw.period),
            pw.stars,
        )
    if dim is None:
        raise ValueError("sequential words need an explicit dimension")
    if not (0 <= f < dim):
        raise ValueError("component index out of range")
    prefix, period = pw.prefix, pw.period
    if period and len(period) % dim:
        period = period * (dim // gcd(len(period), dim))
    new_prefix = tuple(
        z if i % dim == f else x for i, x in enumerate(prefix)
    )
    off = len(prefix)
    new_period = tuple(
        z if (off + i) % dim == f else x for i, x in enumerate(period)
    )
    return PairWord(new_prefix, new_period, pw.stars)


def _expansion(frac: Fraction, base):
    """Greedy base-b expansion of a rational in [0, 1).

    Returns ``(prefix, period, terminates)``; a terminating expansion is
    reported with period ``(0,)``.
    """
    digits = []
    seen = {}
    num, den = frac.numerator, frac.denominator
    while True:
        if num == 0:
            return tuple(digits), (0,), True
        if num in seen:
            k = seen[num]
            return tuple(digits[:k]), tuple(digits[k:]), False
        seen[num] = len(digits)
        num *= base
        digits.append(num // den)
        num %= den


def natural_length_lower_bound(q, base):
    """Least natural-part length that can carry ``floor(q)``."""
    length = 0
    ipart = int(q)
    while base**length <= ipart:
        length += 1
    return length


def encodings_of_rational(q, base, natural_len):
    """All encodings of ``q >= 0`` whose natural part has the given length.

    Yields ``(natural, fractional_prefix, fractional_period)`` digit
    triples.  There are two exactly when ``q`` is a nonzero rational
    with a finite base-b expansion (the terminating form and its dual
    ending in ``(b-1)^w``), one otherwise, and none when the natural
    part cannot hold the integer digits.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError("only non-negative values are encodable")
    ipart = int(q)
    if natural_len < natural_length_lower_bound(q, base):
        return []
    nat = []
    rem = ipart
    for _ in range(natural_len):
        nat.append(rem % base)
        rem //= base
    nat.reverse()
    nat = tuple(nat)
    fpre, fper, terminates = _expansion(q - ipart, base)
    out = [(nat, fpre, fper)]
    if terminates and q != 0:
        stream = list(nat + fpre)
        last = max(i for i, d in enumerate(stream) if d)
        stream[last] -= 1
        head = stream[: last + 1]
        if last < natural_len:
            dual_nat = tuple(head) + (base - 1,) * (natural_len - last - 1)
            dual = (dual_nat, (), (base - 1,))
        else:
            dual = (nat, tuple(head[natural_len:]), (base - 1,))
        out.append(dual)
    return out


def make_encoding_word(parts, alphabet: AlphabetSpec):
    """Assemble per-component digit triples into a one-separator pair word."""
    nat_len = len(parts[0][0])
    fpre_len = max(len(p[1]) for p in parts)
    per_len = 1
    for p in parts:
        per_len = per_len * len(p[2]) // gcd(per_len, len(p[2]))
    comps = []
    for nat, fpre, fper in parts:
        pad = fpre + fper * (-(-(fpre_len - len(fpre)) // len(fper)) + 1)
        fpre_i = pad[:fpre_len]
        shift = (fpre_len - len(fpre)) % len(fper)
        rolled = fper[shift:] + fper[:shift]
        fper_i = (rolled * (per_len // len(rolled)))[:per_len]
        comps.append((nat, fpre_i, fper_i))
    prefix = tuple(
        tuple(c[0][j] for c in comps) for j in range(nat_len)
    ) + tuple(tuple(c[1][j] for c in comps) for j in range(fpre_len))
    period = tuple(tuple(c[2][j] for c in comps) for j in range(per_len))
    pw = PairWord(prefix, period, frozenset({nat_len}))
    if not alphabet.is_parallel:
        pw = sequentialize(pw)
    return pw


def alternative_encodings(pw: PairWord, alphabet: AlphabetSpec, max_natural_len=None):
    """Every encoding of ``value_real(pw)`` up to a natural-part length bound.

    The default bound is the least representable length plus the input's
    natural length plus two, which is enough to expose both zero-padding
    and dual-tail discrepancies.
    """
    if not alphabet.is_parallel:
        base_pw = parallelize(pw, alphabet.dim)
    else:
        base_pw = pw
    values = value_real(pw, alphabet)
    own_nat = base_pw.star_position
    floor_len = max(
        natural_length_lower_bound(v, alphabet.base) for v in values
    )
    if max_natural_len is None:
        max_natural_len = floor_len + own_nat + 2
    out = []
    for length in range(floor_len, max_natural_len + 1):
        per_comp = [
            encodings_of_rational(v, alphabet.base, length) for v in values
        ]
        if any(not options for options in per_comp):
            continue
        for combo in itertools.product(*per_comp):
            out.append(make_encoding_word(combo, alphabet))
    return out


def pair_to_lasso(pw: PairWord, alphabet: AlphabetSpec | None = None) -> LassoWord:
    """Present a pair word as a lasso of letters with ``*`` inlined."""
    if not pw.period:
        raise ValueError("finite words have no lasso form")
    digits_needed = max(
        [len(pw.prefix)] + [s - k for k, s in enumerate(sorted(pw.stars))]
    )
    combined_len = digits_needed + len(pw.stars)
    letters = []
    consumed = 0
    for i in range(combined_len):
        if i in pw.stars:
            letters.append(STAR)
        else:
            letters.append(pw.digit_at(consumed))
            consumed += 1
    shift = (consumed - len(pw.prefix)) % len(pw.period)
    period = pw.period[shift:] + pw.period[:shift]
    return LassoWord(tuple(letters), period)


def lasso_to_pair(word: LassoWord) -> PairWord:
    """Split a lasso's letters into digit stream plus separator positions.

    The period must be separator-free (a word with separators in its
    period has no pair form with finitely many separator positions).
    """
    if STAR in word.period:
        raise ValueError("separator inside the period has no pair form")
    digits = []
    stars = set()
    for i, a in enumerate(word.prefix):
        if a == STAR:
            stars.add(i)
        else:
            digits.append(a)
    return PairWord(tuple(digits), word.period, frozenset(stars))


def format_lasso(word: LassoWord, alphabet: AlphabetSpec) -> str:
    parts = [alphabet.format_letter(a) for a in word.prefix]
    parts.append("/")
    parts.extend(alphabet.format_letter(a) for a in word.period)
    return " ".join(parts)


def parse_lasso(text: str, alphabet: AlphabetSpec) -> LassoWord:
    """Parse the CLI word literal ``"<u letters> / <v letters>"``."""
    if "/" not in text:
        raise ValueError("word literal needs a '/' between prefix and period")
    head, _, tail = text.partition("/")
    prefix = tuple(alphabet.parse_letter(t) for t in head.split())
    period = tuple(alphabet.parse_letter(t) for t in tail.split())
    if not period:
        raise ValueError("lasso period must be nonempty")
    return LassoWord(prefix, period)


def component_distance(w1: PairWord, w2: PairWord, dim=None):
    """Number of components on which two parallel words differ.

    Both words must have the same separator set and compatible shapes;
    the periods are unrolled to a common length before comparison.
    """
    if w1.stars != w2.stars:
        raise ValueError("words differ in separator positions")
    sample = w1.prefix[0] if w1.prefix else (w1.period[0] if w1.period else None)
    if not isinstance(sample, tuple):
        raise ValueError("component distance is defined on parallel words")
    d = len(sample)
    lead = max(len(w1.prefix), len(w2.prefix))
    lcm = len(w1.period) * len(w2.period) // gcd(len(w1.period), len(w2.period))
    span = lead + lcm
    differing = 0
    for f in range(d):
        if any(w1.digit_at(i)[f] != w2.digit_at(i)[f] for i in range(span)):
            differing += 1
    return differing
