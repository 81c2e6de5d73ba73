"""The four-graph nanopublication structure: assembly, validation, versioning.

A nanopublication is one dataset split over four named graphs hanging off a
shared self IRI: ``#Head`` (declares the other three), ``#assertion`` (the
actual content), ``#provenance`` (how the assertion came about, stated about
the assertion graph), and ``#pubinfo`` (metadata about the publication
itself: creation time, creators, superseding links).

Drafts are built against the well-known temporary base :data:`TEMP_SELF`;
:func:`formalpub.trusty.finalize` rewrites it to the permanent
content-derived IRI. Assembly is pure: the clock is always passed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterable, Mapping

from . import vocab
from .errors import ValidationError, VerificationError
from .rdf import BlankNode, Dataset, Iri, Literal, Quad
from .trusty import verify

TEMP_SELF = "urn:np:temp"

HEAD_FRAGMENT = "Head"
ASSERTION_FRAGMENT = "assertion"
PROVENANCE_FRAGMENT = "provenance"
PUBINFO_FRAGMENT = "pubinfo"


class EmptyAssertion(ValidationError):
    """A nanopublication must assert something."""


class NotFinalized(VerificationError):
    """Operation requires a verified, content-addressed nanopublication."""


class MalformedNanopub(ValidationError):
    """Dataset does not contain exactly one well-formed head graph."""


class SupersedesCycle(ValidationError):
    """The superseding chain loops back on itself."""


class DanglingReference(ValidationError):
    """A referenced nanopublication is missing from the corpus."""

    def __init__(self, iri: str, context: str = ""):
        super().__init__(f"dangling reference to <{iri}>" + (f" ({context})" if context else ""))
        self.iri = iri


@dataclass(frozen=True)
class Finding:
    """One violated invariant, with a machine-readable code."""

    code: str
    message: str

    def as_dict(self) -> dict:
        return {"code": self.code, "message": self.message}


def graph_iri(base: str, fragment: str) -> str:
    return f"{base}#{fragment}"


def format_timestamp(ts: datetime) -> str:
    """ISO-8601 UTC with seconds precision, e.g. ``2021-08-15T10:00:00Z``."""
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def parse_timestamp(text: str) -> datetime:
    return datetime.fromisoformat(text.replace("Z", "+00:00"))


@dataclass(frozen=True)
class Nanopublication:
    """A four-graph nanopublication over one dataset."""

    iri: str
    dataset: Dataset

    @property
    def head_graph(self) -> str:
        return graph_iri(self.iri, HEAD_FRAGMENT)

    @property
    def assertion_graph(self) -> str:
        return graph_iri(self.iri, ASSERTION_FRAGMENT)

    @property
    def provenance_graph(self) -> str:
        return graph_iri(self.iri, PROVENANCE_FRAGMENT)

    @property
    def pubinfo_graph(self) -> str:
        return graph_iri(self.iri, PUBINFO_FRAGMENT)

    def assertion(self) -> tuple[Quad, ...]:
        return self.dataset.graph(self.assertion_graph)

    def provenance(self) -> tuple[Quad, ...]:
        return self.dataset.graph(self.provenance_graph)

    def pubinfo(self) -> tuple[Quad, ...]:
        return self.dataset.graph(self.pubinfo_graph)

    def created(self) -> str | None:
        for q in self.dataset.match(Iri(self.iri), Iri(vocab.DCT_CREATED)):
            if isinstance(q.object, Literal):
                return q.object.form
        return None

    def creators(self) -> tuple[str, ...]:
        return tuple(q.object.value
                     for q in self.dataset.match(Iri(self.iri), Iri(vocab.DCT_CREATOR))
                     if isinstance(q.object, Iri))

    def supersedes(self) -> str | None:
        for q in self.dataset.match(Iri(self.iri), Iri(vocab.NPX_SUPERSEDES)):
            if isinstance(q.object, Iri):
                return q.object.value
        return None

    def is_finalized(self) -> bool:
        try:
            return verify(self.dataset)
        except VerificationError:
            return False

    @classmethod
    def from_dataset(cls, d: Dataset) -> "Nanopublication":
        declarations = [q for q in d.match(None, Iri(vocab.RDF_TYPE), Iri(vocab.NP_NANOPUBLICATION))]
        if len(declarations) != 1:
            raise MalformedNanopub(
                f"expected exactly one nanopublication declaration, found {len(declarations)}")
        subject = declarations[0].subject
        if not isinstance(subject, Iri):
            raise MalformedNanopub("nanopublication IRI must be an IRI, not a blank node")
        return cls(subject.value, d)


def head_quads(base: str) -> tuple[Quad, ...]:
    head = Iri(graph_iri(base, HEAD_FRAGMENT))
    self_term = Iri(base)
    return (
        Quad(self_term, Iri(vocab.RDF_TYPE), Iri(vocab.NP_NANOPUBLICATION), head),
        Quad(self_term, Iri(vocab.NP_HAS_ASSERTION), Iri(graph_iri(base, ASSERTION_FRAGMENT)), head),
        Quad(self_term, Iri(vocab.NP_HAS_PROVENANCE), Iri(graph_iri(base, PROVENANCE_FRAGMENT)), head),
        Quad(self_term, Iri(vocab.NP_HAS_PUBINFO), Iri(graph_iri(base, PUBINFO_FRAGMENT)), head),
    )


def default_prefixes(base: str) -> dict[str, str]:
    prefixes = dict(vocab.PREFIXES)
    prefixes["sub"] = base + "#"
    return prefixes


def assemble(assertion: Iterable[Quad],
             provenance: Iterable[Quad],
             pubinfo_extras: Iterable[Quad],
             creator: str,
             timestamp: datetime | str,
             base: str = TEMP_SELF) -> Nanopublication:
    """Build a draft nanopublication around an assertion.

    The fragments must already target ``base``'s graph IRIs (the emitters in
    :mod:`formalpub.superpattern` and :mod:`formalpub.workflow` do). The head
    graph and the creation metadata are injected here; the result validates
    cleanly and is ready for :func:`formalpub.trusty.finalize`.
    """
    assertion = tuple(assertion)
    if not assertion:
        raise EmptyAssertion("assertion graph must not be empty")
    created = timestamp if isinstance(timestamp, str) else format_timestamp(timestamp)
    pubinfo_graph = Iri(graph_iri(base, PUBINFO_FRAGMENT))
    self_term = Iri(base)
    pubinfo = (
        Quad(self_term, Iri(vocab.DCT_CREATED),
             Literal(created, datatype=vocab.XSD_DATETIME), pubinfo_graph),
        Quad(self_term, Iri(vocab.DCT_CREATOR), Iri(creator), pubinfo_graph),
    )
    quads = head_quads(base) + assertion + tuple(provenance) + pubinfo + tuple(pubinfo_extras)
    return Nanopublication(base, Dataset(quads, default_prefixes(base)))


def attribution_provenance(base: str, creator: str) -> tuple[Quad, ...]:
    """Minimal provenance: the assertion is attributed to its creator."""
    return (Quad(Iri(graph_iri(base, ASSERTION_FRAGMENT)),
                 Iri(vocab.PROV_WAS_ATTRIBUTED_TO), Iri(creator),
                 Iri(graph_iri(base, PROVENANCE_FRAGMENT))),)


def validate(np: Nanopublication) -> list[Finding]:
    """Check every structural invariant; empty list means valid.

    Violations come back as findings rather than exceptions so that callers
    can report all of them at once.
    """
    findings: list[Finding] = []
    d = np.dataset
    expected = {np.head_graph, np.assertion_graph, np.provenance_graph, np.pubinfo_graph}

    head = d.graph(np.head_graph)
    self_term = Iri(np.iri)
    links = {
        vocab.NP_HAS_ASSERTION: np.assertion_graph,
        vocab.NP_HAS_PROVENANCE: np.provenance_graph,
        vocab.NP_HAS_PUBINFO: np.pubinfo_graph,
    }
    declared = any(q.subject == self_term and q.predicate.value == vocab.RDF_TYPE
                   and q.object == Iri(vocab.NP_NANOPUBLICATION) for q in head)
    if not declared:
        findings.append(Finding("MalformedHead", "head graph does not declare the nanopublication"))
    for predicate, target in links.items():
        matches = [q for q in head if q.subject == self_term and q.predicate.value == predicate]
        if len(matches) != 1 or matches[0].object != Iri(target):
            findings.append(Finding(
                "MalformedHead", f"head graph must link exactly one <{target}> via <{predicate}>"))
    extra_head = [q for q in head
                  if q.predicate.value not in links and q.predicate.value != vocab.RDF_TYPE]
    if extra_head:
        findings.append(Finding("MalformedHead", "head graph carries unexpected statements"))

    if not d.graph(np.assertion_graph):
        findings.append(Finding("EmptyAssertion", "assertion graph is empty"))

    prov_about_assertion = [q for q in d.graph(np.provenance_graph)
                            if q.subject == Iri(np.assertion_graph)]
    if not prov_about_assertion:
        findings.append(Finding(
            "MissingProvenance", "provenance graph says nothing about the assertion graph"))

    pubinfo = [q for q in d.graph(np.pubinfo_graph) if q.subject == self_term]
    if not pubinfo:
        findings.append(Finding(
            "MissingPubinfo", "pubinfo graph says nothing about the nanopublication"))
    if not any(q.predicate.value == vocab.DCT_CREATED and isinstance(q.object, Literal)
               for q in pubinfo):
        findings.append(Finding("MissingTimestamp", "pubinfo lacks a creation timestamp"))
    if not any(q.predicate.value == vocab.DCT_CREATOR for q in pubinfo):
        findings.append(Finding("MissingCreator", "pubinfo lacks a creator"))

    stray = sorted(set(d.graph_names()) - expected)
    if stray:
        findings.append(Finding("StrayGraph", f"quads outside the four graphs: {stray}"))

    if any(isinstance(t, BlankNode)
           for q in d.quads for t in (q.subject, q.predicate, q.object, q.graph)):
        findings.append(Finding("BlankNodeForbidden", "blank nodes are not allowed"))

    return findings


def supersede(old: Nanopublication,
              assertion: Iterable[Quad],
              provenance: Iterable[Quad],
              pubinfo_extras: Iterable[Quad],
              creator: str,
              timestamp: datetime | str,
              base: str = TEMP_SELF) -> Nanopublication:
    """Assemble a new version pointing back at a finalized predecessor.

    The old nanopublication is untouched; the new one records the link in
    its pubinfo. Only hash-verified versions may be superseded, which keeps
    chains acyclic by construction.
    """
    if not old.is_finalized():
        raise NotFinalized(f"<{old.iri}> is not a verified content-addressed nanopublication")
    link = Quad(Iri(base), Iri(vocab.NPX_SUPERSEDES), Iri(old.iri),
                Iri(graph_iri(base, PUBINFO_FRAGMENT)))
    return assemble(assertion, provenance, tuple(pubinfo_extras) + (link,),
                    creator, timestamp, base)


def extract_chain(corpus: Mapping[str, Nanopublication], member: str) -> list[str]:
    """The full superseding chain containing ``member``, oldest first.

    Walks both directions: down via each publication's own supersedes link,
    up via any publication in the corpus that supersedes the current head.
    Detects cycles defensively even though finalized chains cannot contain
    them.
    """
    if member not in corpus:
        raise DanglingReference(member, "chain member not in corpus")
    newer_of: dict[str, list[str]] = {}
    for iri, np in corpus.items():
        target = np.supersedes()
        if target is not None:
            newer_of.setdefault(target, []).append(iri)

    oldest = member
    seen = {member}
    while (target := corpus[oldest].supersedes()) is not None:
        if target in seen:
            raise SupersedesCycle(f"cycle through <{target}>")
        if target not in corpus:
            raise DanglingReference(target, f"superseded by <{oldest}>")
        seen.add(target)
        oldest = target

    chain = [oldest]
    current = oldest
    while successors := sorted(newer_of.get(current, [])):
        nxt = successors[0]
        if nxt in chain:
            raise SupersedesCycle(f"cycle through <{nxt}>")
        chain.append(nxt)
        current = nxt
    return chain
