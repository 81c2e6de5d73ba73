#!/usr/bin/env python3
"""Mint a class, formalize a claim, tamper with it, watch verification fail.

Run:  python demos/01_publish_and_verify.py
"""

import tempfile

from formalpub import (ClassRef, Qualifier, Quad, Literal, Iri, Registry,
                       SuperPatternInstantiation, parse_trig, relation,
                       render_formula, render_sentence, serialize_trig, verify)
from formalpub.acts import class_definition_np, formalization_np
from formalpub.rdf import Dataset

WHEN = "2021-08-15T10:00:00Z"
ME = "https://orcid.org/0000-0000-0000-0001"

# 1. Mint the class the claim needs.
class_np, class_iri = class_definition_np(
    label="STX1B mutation",
    definition="mutation in STX1B",
    super_class="http://www.wikidata.org/entity/Q42918",
    related=("http://www.wikidata.org/entity/Q18048867",),
    creator=ME, timestamp=WHEN)
print("minted class:", class_iri)

# 2. Formalize the claim.
claim = SuperPatternInstantiation(
    context=ClassRef("http://www.wikidata.org/entity/Q5", "human"),
    subject=ClassRef(class_iri, "STX1B mutation"),
    qualifier=Qualifier("frequently"),
    relation=relation("co-occurs-with"),
    object=ClassRef("http://www.wikidata.org/entity/Q41571", "epilepsy"))
print()
print(render_sentence(claim))
print(render_formula(claim))

claim_np = formalization_np(claim, source="urn:example:source-article:demo",
                            quote="frequently accompanied by epileptic seizures",
                            creator=ME, timestamp=WHEN)
print()
print("claim publication:", claim_np.iri)

# 3. Publish both into a registry and fetch them back byte-identically.
with tempfile.TemporaryDirectory() as root:
    registry = Registry(root)
    registry.publish(class_np)
    code = registry.publish(claim_np)
    assert registry.fetch_trig(code) == serialize_trig(claim_np.dataset)
    print("published and fetched", code)

# 4. Immutability: any edit breaks verification.
print()
print("verify(original)  =", verify(claim_np.dataset))
tampered = Dataset(
    [q if not (isinstance(q.object, Literal) and q.object.form == "epilepsy")
     else Quad(q.subject, q.predicate, Literal("a different label"), q.graph)
     for q in claim_np.dataset.quads],
    claim_np.dataset.prefixes)
print("verify(tampered)  =", verify(tampered))
