"""Decision results with machine-readable failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class NotWeak:
    kind = "not-weak"

    def to_dict(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class NotShape:
    """Some accepted word has a missing, repeated or misplaced separator."""

    state: int
    kind = "not-shape"

    def to_dict(self):
        return {"kind": self.kind, "state": self.state}


@dataclass(frozen=True)
class ZeroLoopBroken:
    """Reading the all-zero letter moves the (minimal) initial state.

    Also reports a failed sign-digit absorption in the complement check,
    where the offending condition is likewise about the initial loop.
    """

    state: int
    kind = "zero-loop-broken"

    def to_dict(self):
        return {"kind": self.kind, "state": self.state}


@dataclass(frozen=True)
class PairMismatch:
    """Dual digit tails diverge: bumping component ``component`` of
    ``letter`` at ``state`` changes the residual language."""

    component: int
    state: int
    letter: object
    bumped_letter: object
    kind = "pair-mismatch"

    def to_dict(self):
        return {
            "kind": self.kind,
            "component": self.component,
            "state": self.state,
            "letter": _letter_json(self.letter),
            "bumped_letter": _letter_json(self.bumped_letter),
        }


@dataclass(frozen=True)
class ComplementPrefix:
    """A word not starting with a sign letter is accepted."""

    letter: object
    kind = "complement-prefix"

    def to_dict(self):
        return {"kind": self.kind, "letter": _letter_json(self.letter)}


@dataclass(frozen=True)
class ComplementInitialLanguage:
    """The two all-sign fixings of some component disagree from the root."""

    component: int
    kind = "complement-initial-language"

    def to_dict(self):
        return {"kind": self.kind, "component": self.component}


def _letter_json(letter):
    if isinstance(letter, tuple):
        return list(letter)
    return letter


@dataclass(frozen=True)
class Verdict:
    """Yes/no answer; a failing answer always carries a witness."""

    answer: bool
    witness: object = None
    detail: str | None = None
    minimized: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.answer and self.witness is not None:
            raise ValueError("positive verdicts carry no witness")
        if not self.answer and self.witness is None:
            raise ValueError("negative verdicts need a witness")

    def __bool__(self):
        return self.answer

    def to_dict(self):
        data = {
            "answer": self.answer,
            "witness": self.witness.to_dict() if self.witness is not None else None,
        }
        if self.detail:
            data["detail"] = self.detail
        return data
