"""High-level authoring operations: one finalized nanopublication per act.

Every workflow step a participant performs (minting a class, publishing a
formalization, submitting, reviewing, responding, updating, deciding) maps
to exactly one nanopublication. These helpers assemble the draft against the
temporary base, finalize it, and hand back the content-addressed result.
All of them take the clock as an argument; nothing here reads it.
"""

from __future__ import annotations

from datetime import datetime

from . import vocab
from .nanopub import (ASSERTION_FRAGMENT, TEMP_SELF, Nanopublication,
                      assemble, attribution_provenance, graph_iri, supersede)
from .rdf import Iri, Literal, Quad
from .superpattern import (ClassDefinition, SuperPatternInstantiation, class_label_quads,
                           emit_assertion, emit_class_definition, formalization_provenance,
                           mint_fragment)
from .trusty import finalize
from .workflow import Decision, ResponseComment, ReviewComment, decide, emit_response, \
    emit_review, submit

Timestamp = datetime | str


def _finalized(draft: Nanopublication) -> Nanopublication:
    final_dataset, _ = finalize(draft.dataset, draft.iri)
    return Nanopublication.from_dataset(final_dataset)


def class_definition_np(label: str, definition: str, super_class: str,
                        related: tuple[str, ...], creator: str,
                        timestamp: Timestamp) -> tuple[Nanopublication, str]:
    """Mint a class. Returns the publication and the class's final IRI."""
    fragment = mint_fragment(label)
    cd = ClassDefinition(f"{TEMP_SELF}#{fragment}", label, definition,
                         super_class, tuple(related))
    assertion = emit_class_definition(cd, graph_iri(TEMP_SELF, ASSERTION_FRAGMENT))
    draft = assemble(assertion, attribution_provenance(TEMP_SELF, creator), (),
                     creator, timestamp)
    np = _finalized(draft)
    return np, f"{np.iri}#{fragment}"


def formalization_np(sp: SuperPatternInstantiation, source: str | None,
                     quote: str | None, creator: str, timestamp: Timestamp,
                     supersedes: Nanopublication | None = None,
                     title: str | None = None) -> Nanopublication:
    """Publish a claim, optionally as the successor of an earlier version."""
    assertion_graph = graph_iri(TEMP_SELF, ASSERTION_FRAGMENT)
    assertion = emit_assertion(sp, assertion_graph) + class_label_quads(sp, assertion_graph)
    if source is not None:
        provenance = formalization_provenance(assertion_graph, source, quote)
    else:
        provenance = attribution_provenance(TEMP_SELF, creator)
    extras: tuple[Quad, ...] = ()
    if title is not None:
        extras = (Quad(Iri(TEMP_SELF), Iri(vocab.DCT_TITLE), Literal(title),
                       Iri(graph_iri(TEMP_SELF, "pubinfo"))),)
    if supersedes is None:
        draft = assemble(assertion, provenance, extras, creator, timestamp)
    else:
        draft = supersede(supersedes, assertion, provenance, extras, creator, timestamp)
    return _finalized(draft)


def submission_np(formalization: str, venue: str, creator: str,
                  timestamp: Timestamp) -> Nanopublication:
    assertion = submit(formalization, venue, graph_iri(TEMP_SELF, ASSERTION_FRAGMENT))
    draft = assemble(assertion, attribution_provenance(TEMP_SELF, creator), (),
                     creator, timestamp)
    return _finalized(draft)


def review_np(rc: ReviewComment, creator: str, timestamp: Timestamp) -> Nanopublication:
    assertion = emit_review(rc, graph_iri(TEMP_SELF, ASSERTION_FRAGMENT))
    draft = assemble(assertion, attribution_provenance(TEMP_SELF, creator), (),
                     creator, timestamp)
    return _finalized(draft)


def response_np(r: ResponseComment, creator: str, timestamp: Timestamp) -> Nanopublication:
    assertion = emit_response(r, graph_iri(TEMP_SELF, ASSERTION_FRAGMENT))
    draft = assemble(assertion, attribution_provenance(TEMP_SELF, creator), (),
                     creator, timestamp)
    return _finalized(draft)


def decision_np(d: Decision, creator: str, timestamp: Timestamp) -> Nanopublication:
    assertion = decide(d, graph_iri(TEMP_SELF, ASSERTION_FRAGMENT))
    draft = assemble(assertion, attribution_provenance(TEMP_SELF, creator), (),
                     creator, timestamp)
    return _finalized(draft)
