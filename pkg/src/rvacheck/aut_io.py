"""Line-oriented text format for automata.

::

    rva-automaton v1
    base: 2
    dim: 1
    encoding: parallel
    fixed: 0          # optional
    states: 3
    initial: 0
    accepting: 1
    transitions:
    0 0 -> 0
    0 1 -> 2
    0 * -> 1
    ...

``#`` starts a comment.  Parallel letters are comma-joined digits
("1,0"), sequential letters single digits, ``#`` marks a fixed
component and ``*`` the separator.  Parsing validates totality unless a
missing transition is allowed to fall into a fresh rejecting sink.
"""

from __future__ import annotations

from .alphabet import AlphabetSpec, PARALLEL, SEQUENTIAL
from .automaton import Automaton

FORMAT_HEADER = "rva-automaton v1"


class AutomatonFormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


def _strip(line):
    return line.split("#", 1)[0].strip()


def parse_automaton(text: str, complete_with_sink: bool = False) -> Automaton:
    lines = text.splitlines()
    fields = {}
    transitions_at = None
    header_seen = False
    for idx, raw in enumerate(lines, start=1):
        line = _strip(raw)
        if not line:
            continue
        if not header_seen:
            if line != FORMAT_HEADER:
                raise AutomatonFormatError(
                    f"expected header {FORMAT_HEADER!r}, found {line!r}", idx
                )
            header_seen = True
            continue
        if line == "transitions:":
            transitions_at = idx
            break
        key, sep, value = line.partition(":")
        if not sep:
            raise AutomatonFormatError(f"expected 'key: value', found {line!r}", idx)
        key = key.strip()
        if key in fields:
            raise AutomatonFormatError(f"duplicate field {key!r}", idx)
        fields[key] = (value.strip(), idx)
    if not header_seen:
        raise AutomatonFormatError("empty input, expected header")
    if transitions_at is None:
        raise AutomatonFormatError("missing 'transitions:' section")

    def need(key):
        if key not in fields:
            raise AutomatonFormatError(f"missing field {key!r}")
        return fields[key]

    def need_int(key, minimum):
        value, idx = need(key)
        try:
            out = int(value)
        except ValueError:
            raise AutomatonFormatError(f"field {key!r} must be an integer", idx)
        if out < minimum:
            raise AutomatonFormatError(f"field {key!r} must be >= {minimum}", idx)
        return out

    base = need_int("base", 2)
    dim = need_int("dim", 1)
    encoding, enc_line = need("encoding")
    if encoding not in (PARALLEL, SEQUENTIAL):
        raise AutomatonFormatError(
            f"encoding must be 'parallel' or 'sequential', found {encoding!r}", enc_line
        )
    fixed = frozenset()
    if "fixed" in fields:
        value, idx = fields["fixed"]
        try:
            fixed = frozenset(int(tok) for tok in value.split())
        except ValueError:
            raise AutomatonFormatError("fixed components must be integers", idx)
    try:
        spec = AlphabetSpec(base, dim, encoding, fixed)
    except ValueError as exc:
        raise AutomatonFormatError(str(exc))

    n = need_int("states", 1)
    initial = need_int("initial", 0)
    if initial >= n:
        raise AutomatonFormatError("initial state out of range", fields["initial"][1])
    accepting_text, acc_line = need("accepting")
    try:
        accepting = frozenset(int(tok) for tok in accepting_text.split())
    except ValueError:
        raise AutomatonFormatError("accepting states must be integers", acc_line)
    if any(not (0 <= q < n) for q in accepting):
        raise AutomatonFormatError("accepting state out of range", acc_line)

    width = spec.num_letters
    table = [[None] * width for _ in range(n)]
    for idx in range(transitions_at, len(lines)):
        line = _strip(lines[idx])
        if not line:
            continue
        head, arrow, dst_text = line.partition("->")
        if not arrow:
            raise AutomatonFormatError(
                f"expected '<src> <letter> -> <dst>', found {line!r}", idx + 1
            )
        parts = head.split()
        if len(parts) != 2:
            raise AutomatonFormatError(
                f"expected '<src> <letter>' before '->', found {head.strip()!r}", idx + 1
            )
        try:
            src = int(parts[0])
            dst = int(dst_text.strip())
        except ValueError:
            raise AutomatonFormatError("states must be integers", idx + 1)
        if not (0 <= src < n) or not (0 <= dst < n):
            raise AutomatonFormatError("transition state out of range", idx + 1)
        try:
            li = spec.letter_index(spec.parse_letter(parts[1]))
        except ValueError as exc:
            raise AutomatonFormatError(str(exc), idx + 1)
        if table[src][li] is not None:
            raise AutomatonFormatError(
                f"duplicate transition for state {src} letter {parts[1]}", idx + 1
            )
        table[src][li] = dst

    missing = [
        (q, li) for q in range(n) for li in range(width) if table[q][li] is None
    ]
    if missing:
        if not complete_with_sink:
            q, li = missing[0]
            raise AutomatonFormatError(
                f"missing transition for state {q} letter "
                f"{spec.format_letter(spec.letter_at(li))}; "
                "pass --complete-with-sink to add a rejecting sink"
            )
        sink = n
        n += 1
        for q, li in missing:
            table[q][li] = sink
        table.append([sink] * width)
    return Automaton(spec, n, initial, accepting, table)


def serialize_automaton(aut: Automaton) -> str:
    spec = aut.alphabet
    lines = [
        FORMAT_HEADER,
        f"base: {spec.base}",
        f"dim: {spec.dim}",
        f"encoding: {spec.kind}",
    ]
    if spec.fixed:
        lines.append("fixed: " + " ".join(str(f) for f in sorted(spec.fixed)))
    lines.append(f"states: {aut.n}")
    lines.append(f"initial: {aut.initial}")
    lines.append("accepting: " + " ".join(str(q) for q in sorted(aut.accepting)))
    lines.append("transitions:")
    letters = [spec.format_letter(spec.letter_at(i)) for i in range(spec.num_letters)]
    for q in range(aut.n):
        for li, text in enumerate(letters):
            lines.append(f"{q} {text} -> {aut.delta[q][li]}")
    return "\n".join(lines) + "\n"
