"""Command-line interface.

Exit codes: 0 when the queried property holds, 1 when it fails (a
witness is printed), 2 on usage or format errors.  ``--json`` switches
the verdict output to one machine-readable object on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .alphabet import PARALLEL, SEQUENTIAL
from .aut_io import AutomatonFormatError, parse_automaton, serialize_automaton
from .automaton import is_weak
from .check import (
    check_rva_complement_parallel,
    check_rva_dim1,
    check_rva_parallel,
    check_rva_sequential,
)
from .minimize import minimize_weak
from .oracle import expand_witness, gen_known_rva, saturation_oracle
from .shape import is_d_parallel, is_d_sequential
from .automaton import trim_accessible
from .words import format_lasso, parse_lasso

CHECKS = {
    "parallel": check_rva_parallel,
    "sequential": check_rva_sequential,
    "dim1": check_rva_dim1,
    "complement": check_rva_complement_parallel,
}


def _load(args):
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise AutomatonFormatError(str(exc))
    return parse_automaton(text, complete_with_sink=args.complete_with_sink)


def _emit(args, payload, human_lines):
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for line in human_lines:
            print(line)


def _verdict_payload(verdict, states, elapsed, extra=None):
    payload = verdict.to_dict()
    if extra:
        payload["witness"] = dict(payload["witness"] or {}, **extra)
    payload["stats"] = {"states": states, "time_ms": round(elapsed * 1000.0, 3)}
    return payload


def cmd_check(args):
    aut = _load(args)
    start = time.perf_counter()
    verdict = CHECKS[args.mode](aut)
    elapsed = time.perf_counter() - start
    extra = {}
    lines = []
    if verdict:
        lines.append(f"yes: the automaton is saturated ({args.mode} encoding)")
    else:
        lines.append(f"no: {verdict.witness.kind}")
        expansion = expand_witness(verdict, args.mode)
        if expansion is not None:
            extra = {"expansion": expansion.to_dict()}
            if expansion.kind == "equal-value-pair":
                lines.append(
                    "  accepted: "
                    + format_lasso(expansion.accepted, aut.alphabet)
                )
                lines.append(
                    "  rejected: "
                    + format_lasso(expansion.rejected, aut.alphabet)
                )
                lines.append(
                    "  value: ("
                    + ", ".join(str(v) for v in expansion.values())
                    + ")"
                )
            else:
                lines.append(
                    "  accepted non-encoding word: "
                    + format_lasso(expansion.word, aut.alphabet)
                )
    _emit(args, _verdict_payload(verdict, aut.n, elapsed, extra), lines)
    return 0 if verdict else 1


def cmd_classify(args):
    aut = _load(args)
    start = time.perf_counter()
    weak = is_weak(aut)
    trimmed, _ = trim_accessible(aut)
    par = is_d_parallel(trimmed) if aut.alphabet.kind == PARALLEL else None
    seq = is_d_sequential(trimmed) if aut.alphabet.kind == SEQUENTIAL else None
    elapsed = time.perf_counter() - start
    payload = {
        "weak": weak,
        "encoding": aut.alphabet.kind,
        "base": aut.alphabet.base,
        "dim": aut.alphabet.dim,
        "d_parallel": None if par is None else par.answer,
        "d_sequential": None if seq is None else seq.answer,
        "stats": {"states": aut.n, "time_ms": round(elapsed * 1000.0, 3)},
    }
    lines = [
        f"states: {aut.n}",
        f"weak: {weak}",
    ]
    if par is not None:
        lines.append(f"{aut.alphabet.dim}-parallel shape: {par.answer}")
    if seq is not None:
        lines.append(f"{aut.alphabet.dim}-sequential shape: {seq.answer}")
    _emit(args, payload, lines)
    return 0


def cmd_minimize(args):
    aut = _load(args)
    if not is_weak(aut):
        print("error: automaton is not weak", file=sys.stderr)
        return 1
    trimmed, trim_map = trim_accessible(aut)
    morphism = minimize_weak(trimmed)
    classes = {}
    for old, new in trim_map.items():
        classes.setdefault(morphism.mapping[new], []).append(old)
    text = serialize_automaton(morphism.target)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    payload = {
        "states": morphism.target.n,
        "classes": {str(k): sorted(v) for k, v in sorted(classes.items())},
    }
    lines = [f"minimal automaton has {morphism.target.n} states"]
    for target_state in sorted(classes):
        members = " ".join(str(q) for q in sorted(classes[target_state]))
        lines.append(f"  class {target_state}: {{{members}}}")
    if not args.output:
        lines.append(text.rstrip("\n"))
    _emit(args, payload, lines)
    return 0


def cmd_eval(args):
    aut = _load(args)
    word = parse_lasso(args.word, aut.alphabet)
    accepted = aut.accepts_lasso(word.prefix, word.period)
    payload = {"answer": accepted, "witness": None, "stats": {"states": aut.n}}
    _emit(args, payload, ["accepted" if accepted else "rejected"])
    return 0 if accepted else 1


def cmd_gen(args):
    aut = gen_known_rva(args.kind, args.base, args.dim, args.encoding)
    text = serialize_automaton(aut)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args):
    aut = _load(args)
    start = time.perf_counter()
    verdict = saturation_oracle(aut, args.bound)
    elapsed = time.perf_counter() - start
    lines = []
    if verdict:
        lines.append(f"yes (bounded): {verdict.detail}")
    else:
        lines.append(f"no: {verdict.witness.kind}")
        data = verdict.witness.to_dict()
        for key in ("word", "accepted", "rejected", "value"):
            if key in data:
                lines.append(f"  {key}: {data[key]}")
    _emit(args, _verdict_payload(verdict, aut.n, elapsed), lines)
    return 0 if verdict else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rvacheck",
        description="Decide whether weak Buchi automata over digit alphabets "
        "recognize saturated languages of real-vector encodings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    loads = argparse.ArgumentParser(add_help=False)
    loads.add_argument("file", help="automaton file")
    loads.add_argument(
        "--complete-with-sink",
        action="store_true",
        help="complete a partial transition table with a fresh rejecting sink",
    )

    p = sub.add_parser("check", parents=[common, loads], help="run a saturation check")
    p.add_argument("--mode", choices=sorted(CHECKS), required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser(
        "classify", parents=[common, loads], help="report weakness and encoding shape"
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser(
        "minimize", parents=[common, loads], help="minimize a weak automaton"
    )
    p.add_argument("-o", "--output", help="write the minimal automaton here")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser(
        "eval", parents=[common, loads], help="run a lasso word on the automaton"
    )
    p.add_argument("--word", required=True, help='lasso literal, e.g. "1 * / 0"')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("gen", parents=[common], help="emit a known saturated automaton")
    p.add_argument(
        "--kind",
        choices=["full-space", "zero-only", "unit-box", "complement-full"],
        required=True,
    )
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--encoding", choices=[PARALLEL, SEQUENTIAL], default=PARALLEL)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser(
        "oracle", parents=[common, loads], help="word-level saturation search"
    )
    p.add_argument(
        "--bound", type=int, default=None, help="cap on counterexample prefix length"
    )
    p.add_argument(
        "--seed", type=int, default=None,
        help="accepted for interface compatibility; the search is deterministic",
    )
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AutomatonFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
