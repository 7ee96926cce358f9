"""Two subjects, private perceptions, shared vocabulary.

Each subject turns an event into a private percept and then names the
percept with a token from its language table. Subjects can only compare
tokens, so they agree whenever the two composed maps coincide, even if
their percepts never do.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

Event = Hashable


class Verdict(str, enum.Enum):
    PERSONAL_UNIVERSE_CONSISTENT = "personal_universe_consistent"
    SHARED_EXPERIENCE = "shared_experience"
    DETECTABLE_DISAGREEMENT = "detectable_disagreement"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Step:
    event: Event
    percepts: tuple
    tokens: tuple
    agree: bool


@dataclass(frozen=True)
class Transcript:
    steps: tuple[Step, ...]
    all_agree: bool
    percepts_ever_differ: bool
    # subjects whose language maps two percepts to one token
    non_injective: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {
            "steps": [
                {"event": s.event, "percepts": list(s.percepts), "tokens": list(s.tokens), "agree": s.agree}
                for s in self.steps
            ],
            "all_agree": self.all_agree,
            "percepts_ever_differ": self.percepts_ever_differ,
            "non_injective_languages": list(self.non_injective),
        }


def _check_total(table: Mapping, domain, what: str, subject: int):
    missing = [x for x in domain if x not in table]
    if missing:
        raise KeyError(f"{what} of subject {subject} has no entry for {missing}")


def run_agreement_simulation(
    events: Sequence[Event],
    perceptions: Sequence[Mapping],
    languages: Sequence[Mapping],
    alphabet: Sequence[Event] | None = None,
) -> Transcript:
    if len(perceptions) != 2 or len(languages) != 2:
        raise ValueError("the agreement scenario has exactly two subjects")
    if alphabet is None:
        alphabet = sorted(set(perceptions[0]) | set(perceptions[1]), key=str)
    alpha = set(alphabet)
    unknown = [e for e in events if e not in alpha]
    if unknown:
        raise ValueError(f"events outside the alphabet: {unknown}")
    for i, (perc, lang) in enumerate(zip(perceptions, languages)):
        _check_total(perc, alphabet, "perception map", i)
        _check_total(lang, [perc[e] for e in alphabet], "language table", i)

    steps = []
    for e in events:
        percepts = tuple(perc[e] for perc in perceptions)
        tokens = tuple(lang[x] for lang, x in zip(languages, percepts))
        steps.append(Step(e, percepts, tokens, tokens[0] == tokens[1]))
    non_injective = tuple(
        i for i, lang in enumerate(languages) if len(set(lang.values())) < len(lang)
    )
    return Transcript(
        tuple(steps),
        all(s.agree for s in steps),
        any(s.percepts[0] != s.percepts[1] for s in steps),
        non_injective,
    )


def check_personal_universe(t: Transcript) -> Verdict:
    if not t.all_agree:
        return Verdict.DETECTABLE_DISAGREEMENT
    if t.percepts_ever_differ:
        return Verdict.PERSONAL_UNIVERSE_CONSISTENT
    return Verdict.SHARED_EXPERIENCE


def table1_scenario() -> dict:
    """Five events, distinct private percepts, one common vocabulary."""
    alphabet = list("abcde")
    tokens = list("uvwxy")
    return {
        "alphabet": alphabet,
        "perceptions": [{e: f"{e}{i}" for e in alphabet} for i in (1, 2)],
        "languages": [{f"{e}{i}": t for e, t in zip(alphabet, tokens)} for i in (1, 2)],
        "events": alphabet,
    }
