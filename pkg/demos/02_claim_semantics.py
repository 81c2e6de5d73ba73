#!/usr/bin/env python3
"""Evaluate claim qualifiers against small synthetic worlds.

Run:  python demos/02_claim_semantics.py
"""

from formalpub import (ClassRef, Qualifier, SuperPatternInstantiation, World,
                       check_conflicts, evaluate, relation, render_sentence)

CTX = "urn:demo:class:dish"
SUBJ = "urn:demo:class:culture"
OBJ = "urn:demo:class:colony"


def claim(qualifier):
    return SuperPatternInstantiation(
        context=ClassRef(CTX, "petri dish"),
        subject=ClassRef(SUBJ, "bacterial culture"),
        qualifier=Qualifier.from_string(qualifier),
        relation=relation("affects"),
        object=ClassRef(OBJ, "colony growth"))


def world(pairs, witnessed):
    individuals, membership, in_context, relations = set(), set(), set(), set()
    for i in range(pairs):
        x, y, z = f"dish{i}", f"culture{i}", f"colony{i}"
        individuals |= {x, y}
        membership |= {(x, CTX), (y, SUBJ)}
        in_context.add((y, x))
        if i < witnessed:
            individuals.add(z)
            membership.add((z, OBJ))
            in_context.add((z, x))
            relations.add((relation("affects").iri, y, z))
    return World(frozenset(individuals), frozenset(membership),
                 frozenset(in_context), frozenset(relations))


print(render_sentence(claim("generally")))
print()
print(f"{'world':>14} {'qualifier':>14} {'probability':>12} verdict")
for pairs, witnessed in ((10, 9), (100, 89), (5, 0), (4, 1)):
    for qualifier in ("generally", "sometimes", "never", "can generally"):
        result = evaluate(claim(qualifier), world(pairs, witnessed))
        prob = "undefined" if result.probability is None else str(result.probability)
        print(f"{witnessed:>6}/{pairs:<7} {qualifier:>14} {prob:>12} {result.verdict}")

print()
print("conflicts between 'generally' and 'never' on the same slots:")
for conflict in check_conflicts([claim("generally"), claim("never")]):
    print(" -", conflict.reason)
