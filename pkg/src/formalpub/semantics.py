"""Brute-force evaluator of claim semantics over finite instance models.

A :class:`World` is a synthetic test artifact: a finite set of individuals
with class memberships, in-context pairs, and relation edges. Evaluating a
claim counts the condition pairs (subject instance in a context instance)
and how many of them have a witnessing object instance, then compares the
exact rational probability against the qualifier's acceptance region. The
whole point is exactness: the 0.9 boundary must be decided with rational
arithmetic, never floats.

Worlds are test scaffolding. Evaluating a claim against a world says nothing
about the real world; claims are formalized here, not fact-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ValidationError
from .superpattern import SuperPatternInstantiation

HOLDS = "holds"
FAILS = "fails"
VACUOUS = "vacuous"


class MalformedWorld(ValidationError):
    """A world references an undeclared individual."""


@dataclass(frozen=True)
class World:
    """Finite instance model.

    ``membership`` holds (individual, class IRI) pairs, ``in_context`` holds
    (member, context) pairs, and ``relations`` holds (relation IRI, source,
    target) triples. Every referenced individual must be declared.
    """

    individuals: frozenset[str]
    membership: frozenset[tuple[str, str]] = frozenset()
    in_context: frozenset[tuple[str, str]] = frozenset()
    relations: frozenset[tuple[str, str, str]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "individuals", frozenset(self.individuals))
        object.__setattr__(self, "membership", frozenset(self.membership))
        object.__setattr__(self, "in_context", frozenset(self.in_context))
        object.__setattr__(self, "relations", frozenset(self.relations))
        for ind, _ in self.membership:
            self._check(ind)
        for a, b in self.in_context:
            self._check(a)
            self._check(b)
        for _, a, b in self.relations:
            self._check(a)
            self._check(b)

    def _check(self, ind: str):
        if ind not in self.individuals:
            raise MalformedWorld(f"undeclared individual {ind!r}")

    def extension(self, class_iri: str) -> set[str]:
        """Instances of a class; classes the world never mentions are simply empty."""
        return {ind for ind, cls in self.membership if cls == class_iri}


@dataclass(frozen=True)
class Evaluation:
    satisfying: int
    condition: int
    probability: Fraction | None
    verdict: str

    def as_dict(self) -> dict:
        return {
            "satisfying": self.satisfying,
            "condition": self.condition,
            "probability": None if self.probability is None else str(self.probability),
            "verdict": self.verdict,
        }


def _compare(probability: Fraction, comparison: str, threshold: Fraction) -> bool:
    if comparison == "=":
        return probability == threshold
    if comparison == ">=":
        return probability >= threshold
    if comparison == ">":
        return probability > threshold
    raise ValueError(f"unknown comparison {comparison!r}")


def evaluate(sp: SuperPatternInstantiation, w: World) -> Evaluation:
    """Count condition pairs and witnesses, then apply the qualifier.

    With an unrestricted context the condition set is just the subject
    extension and the same-context constraint on witnesses is dropped. An
    empty condition set yields the ``vacuous`` verdict (the conditional
    probability is undefined there, which is neither success nor failure).
    A "can" qualifier holds exactly when at least one witness exists.
    """
    subjects = w.extension(sp.subject.iri)
    objects = w.extension(sp.object.iri)
    edges = {(a, b) for rel, a, b in w.relations if rel == sp.relation.iri}

    if sp.universal:
        condition: list[tuple[str, str | None]] = [(y, None) for y in sorted(subjects)]
    else:
        contexts = w.extension(sp.context.iri)
        condition = [(y, x) for (y, x) in sorted(w.in_context)
                     if y in subjects and x in contexts]

    satisfying = 0
    for y, x in condition:
        for z in objects:
            if (y, z) not in edges:
                continue
            if x is None or (z, x) in w.in_context:
                satisfying += 1
                break

    if not condition:
        return Evaluation(0, 0, None, VACUOUS)

    probability = Fraction(satisfying, len(condition))
    if sp.qualifier.can_modality:
        holds = satisfying >= 1
    else:
        holds = _compare(probability, sp.qualifier.comparison, sp.qualifier.threshold)
    return Evaluation(satisfying, len(condition), probability, HOLDS if holds else FAILS)


@dataclass(frozen=True)
class Conflict:
    first: SuperPatternInstantiation
    second: SuperPatternInstantiation
    reason: str


def check_conflicts(claims: Iterable[SuperPatternInstantiation]) -> list[Conflict]:
    """Flag claim pairs that no world can satisfy together.

    Two claims clash when they fill context, subject, object, and relation
    identically but one says "never" while the other asserts any positive
    frequency (or possibility): the acceptance region {0} is disjoint from
    every other region, including the existential reading of "can".
    Relations are otherwise treated as opaque.
    """
    def signature(sp: SuperPatternInstantiation):
        context = None if sp.universal else sp.context.iri
        return (context, sp.subject.iri, sp.object.iri, sp.relation.iri)

    claims = list(claims)
    conflicts: list[Conflict] = []
    for i, a in enumerate(claims):
        for b in claims[i + 1:]:
            if signature(a) != signature(b):
                continue
            a_never = a.qualifier.base == "never"
            b_never = b.qualifier.base == "never"
            if a_never != b_never:
                positive = b if a_never else a
                conflicts.append(Conflict(
                    a, b,
                    f'"never" excludes every witness that '
                    f'"{positive.qualifier}" requires'))
    return conflicts


# ---------------------------------------------------------------------------
# Line-oriented world files
# ---------------------------------------------------------------------------

def load_world(text: str) -> World:
    """Parse the line format: ``ind <id>``, ``class <id> <iri>``,
    ``ctx <id> <id>``, ``rel <iri> <id> <id>``. Blank lines and ``#``
    comments are skipped."""
    individuals: set[str] = set()
    membership: set[tuple[str, str]] = set()
    in_context: set[tuple[str, str]] = set()
    relations: set[tuple[str, str, str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "ind" and len(args) == 1:
            individuals.add(args[0])
        elif kind == "class" and len(args) == 2:
            membership.add((args[0], args[1]))
        elif kind == "ctx" and len(args) == 2:
            in_context.add((args[0], args[1]))
        elif kind == "rel" and len(args) == 3:
            relations.add((args[0], args[1], args[2]))
        else:
            raise MalformedWorld(f"line {lineno}: cannot parse {raw!r}")
    return World(frozenset(individuals), frozenset(membership),
                 frozenset(in_context), frozenset(relations))


def dump_world(w: World) -> str:
    lines = [f"ind {i}" for i in sorted(w.individuals)]
    lines += [f"class {i} {c}" for i, c in sorted(w.membership)]
    lines += [f"ctx {a} {b}" for a, b in sorted(w.in_context)]
    lines += [f"rel {r} {a} {b}" for r, a, b in sorted(w.relations)]
    return "\n".join(lines) + ("\n" if lines else "")
