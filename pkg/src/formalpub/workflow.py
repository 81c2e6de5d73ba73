"""Typed review, response, and decision acts plus submission-thread assembly.

Review comments carry three dimensions (aspect, disposition, required
action) encoded as extra rdf:type classes on the comment node, an integer
impact from 1 to 5, and a target. Responses record agreement and whether the
point was addressed, link back to the review, and point at the updated
version. Decisions attach a status and free-text description to the final
version. Submissions and decisions tie a formalization to a venue.

A :class:`SubmissionThread` is a derived view assembled from an immutable
corpus snapshot: the superseding version chain, the class definitions the
claim uses, the reviews and responses hanging off any of them, and the
decision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import vocab
from .errors import ValidationError
from .nanopub import (DanglingReference, Finding, Nanopublication, SupersedesCycle,
                      extract_chain, parse_timestamp)
from .rdf import Dataset, Iri, Literal, Quad, strip_fragment
from .trusty import is_trusty_iri

DRAFT = "draft"
SUBMITTED = "submitted"
UNDER_REVIEW = "under-review"
REVISED = "revised"
DECIDED = "decided"


class ImpactOutOfRange(ValidationError):
    """Review impact must be an integer between 1 and 5."""


class UnknownDimension(ValidationError):
    """A review/response carries an unrecognized dimension class."""


class EmptyText(ValidationError):
    """Comment text and decision descriptions must not be empty."""


class NotTrusty(ValidationError):
    """Workflow acts may only reference finalized nanopublications."""


def _require_trusty(iri: str, what: str) -> str:
    if not is_trusty_iri(iri):
        raise NotTrusty(f"{what} must be a content-addressed IRI, got <{iri}>")
    return iri


@dataclass(frozen=True)
class ReviewComment:
    target: str
    aspect: str          # syntax | style | content
    disposition: str     # positive | negative | neutral
    action: str          # compulsory | suggestion | no-action
    impact: int          # 1..5
    text: str
    refers_to_mentioning_of: str | None = None

    def __post_init__(self):
        _require_trusty(self.target, "review target")
        if self.aspect not in vocab.ASPECT_CLASSES:
            raise UnknownDimension(f"aspect {self.aspect!r}")
        if self.disposition not in vocab.DISPOSITION_CLASSES:
            raise UnknownDimension(f"disposition {self.disposition!r}")
        if self.action not in vocab.ACTION_CLASSES:
            raise UnknownDimension(f"action {self.action!r}")
        if not isinstance(self.impact, int) or not 1 <= self.impact <= 5:
            raise ImpactOutOfRange(f"impact {self.impact!r} not in 1..5")
        if not self.text:
            raise EmptyText("review text must not be empty")


@dataclass(frozen=True)
class ResponseComment:
    in_response_to: str
    agreement: str       # agree | partial | disagree
    addressed: str       # addressed | partially-addressed | not-addressed
    text: str
    refers_to: str       # the updated formalization version

    def __post_init__(self):
        _require_trusty(self.in_response_to, "responded-to review")
        _require_trusty(self.refers_to, "updated version")
        if self.agreement not in vocab.AGREEMENT_CLASSES:
            raise UnknownDimension(f"agreement {self.agreement!r}")
        if self.addressed not in vocab.ADDRESSED_CLASSES:
            raise UnknownDimension(f"addressed {self.addressed!r}")
        if not self.text:
            raise EmptyText("response text must not be empty")


@dataclass(frozen=True)
class Decision:
    target: str
    status: str          # accepted-for-publication | rejected | revision-requested
    description: str
    venue: str

    def __post_init__(self):
        _require_trusty(self.target, "decision target")
        if self.status not in vocab.DECISION_STATUS_IRIS:
            raise UnknownDimension(f"decision status {self.status!r}")
        if not self.description:
            raise EmptyText("decision description must not be empty")


# ---------------------------------------------------------------------------
# RDF mapping
# ---------------------------------------------------------------------------

def submit(formalization: str, venue: str, graph: str) -> tuple[Quad, ...]:
    """Assertion fragment declaring a formalization submitted to a venue."""
    _require_trusty(formalization, "submitted formalization")
    g = Iri(graph)
    subject = Iri(formalization)
    return (
        Quad(subject, Iri(vocab.PSO_WITH_STATUS), Iri(vocab.PSO_SUBMITTED), g),
        Quad(subject, Iri(vocab.FRBR_PART_OF), Iri(venue), g),
    )


def emit_review(rc: ReviewComment, graph: str) -> tuple[Quad, ...]:
    g = Iri(graph)
    node = Iri(f"{strip_fragment(graph)}#comment")
    rdf_type = Iri(vocab.RDF_TYPE)
    quads = [
        Quad(node, rdf_type, Iri(vocab.LFR_REVIEW_COMMENT), g),
        Quad(node, rdf_type, Iri(vocab.ASPECT_CLASSES[rc.aspect]), g),
        Quad(node, rdf_type, Iri(vocab.DISPOSITION_CLASSES[rc.disposition]), g),
        Quad(node, rdf_type, Iri(vocab.ACTION_CLASSES[rc.action]), g),
        Quad(node, Iri(vocab.LFR_HAS_COMMENT_TEXT), Literal(rc.text), g),
        Quad(node, Iri(vocab.LFR_HAS_IMPACT), Literal(str(rc.impact)), g),
        Quad(node, Iri(vocab.LFR_REFERS_TO), Iri(rc.target), g),
    ]
    if rc.refers_to_mentioning_of is not None:
        quads.append(Quad(node, Iri(vocab.LFR_REFERS_TO_MENTIONING_OF),
                          Iri(rc.refers_to_mentioning_of), g))
    return tuple(quads)


def _comment_node(quads: tuple[Quad, ...], type_iri: str, what: str):
    nodes = {q.subject for q in quads
             if q.predicate.value == vocab.RDF_TYPE and q.object == Iri(type_iri)}
    if len(nodes) != 1:
        raise UnknownDimension(f"expected exactly one {what}, found {len(nodes)}")
    return nodes.pop()


def _decode(types: set[str], table: dict[str, str], what: str) -> str:
    hits = [name for name, iri in table.items() if iri in types]
    if len(hits) != 1:
        raise UnknownDimension(f"expected exactly one {what} class, found {len(hits)}")
    return hits[0]


def parse_review(fragment: Iterable[Quad] | Dataset) -> ReviewComment:
    quads = tuple(fragment.quads if isinstance(fragment, Dataset) else fragment)
    node = _comment_node(quads, vocab.LFR_REVIEW_COMMENT, "review comment")
    types = {q.object.value for q in quads
             if q.subject == node and q.predicate.value == vocab.RDF_TYPE
             and isinstance(q.object, Iri)}
    text = impact = target = mention = None
    for q in quads:
        if q.subject != node:
            continue
        if q.predicate.value == vocab.LFR_HAS_COMMENT_TEXT and isinstance(q.object, Literal):
            text = q.object.form
        elif q.predicate.value == vocab.LFR_HAS_IMPACT and isinstance(q.object, Literal):
            impact = q.object.form
        elif q.predicate.value == vocab.LFR_REFERS_TO and isinstance(q.object, Iri):
            target = q.object.value
        elif q.predicate.value == vocab.LFR_REFERS_TO_MENTIONING_OF and isinstance(q.object, Iri):
            mention = q.object.value
    if target is None:
        raise UnknownDimension("review lacks a target")
    try:
        impact_value = int(impact) if impact is not None else None
    except ValueError:
        raise ImpactOutOfRange(f"impact {impact!r} is not an integer") from None
    if impact_value is None:
        raise ImpactOutOfRange("review lacks an impact")
    return ReviewComment(
        target=target,
        aspect=_decode(types, vocab.ASPECT_CLASSES, "aspect"),
        disposition=_decode(types, vocab.DISPOSITION_CLASSES, "disposition"),
        action=_decode(types, vocab.ACTION_CLASSES, "action"),
        impact=impact_value,
        text=text or "",
        refers_to_mentioning_of=mention,
    )


def emit_response(r: ResponseComment, graph: str) -> tuple[Quad, ...]:
    g = Iri(graph)
    node = Iri(f"{strip_fragment(graph)}#comment")
    rdf_type = Iri(vocab.RDF_TYPE)
    return (
        Quad(node, rdf_type, Iri(vocab.LFR_RESPONSE_COMMENT), g),
        Quad(node, rdf_type, Iri(vocab.AGREEMENT_CLASSES[r.agreement]), g),
        Quad(node, rdf_type, Iri(vocab.ADDRESSED_CLASSES[r.addressed]), g),
        Quad(node, Iri(vocab.LFR_HAS_COMMENT_TEXT), Literal(r.text), g),
        Quad(node, Iri(vocab.LFR_IS_RESPONSE_TO), Iri(r.in_response_to), g),
        Quad(node, Iri(vocab.LFR_REFERS_TO), Iri(r.refers_to), g),
    )


def parse_response(fragment: Iterable[Quad] | Dataset) -> ResponseComment:
    quads = tuple(fragment.quads if isinstance(fragment, Dataset) else fragment)
    node = _comment_node(quads, vocab.LFR_RESPONSE_COMMENT, "response comment")
    types = {q.object.value for q in quads
             if q.subject == node and q.predicate.value == vocab.RDF_TYPE
             and isinstance(q.object, Iri)}
    text = review = updated = None
    for q in quads:
        if q.subject != node:
            continue
        if q.predicate.value == vocab.LFR_HAS_COMMENT_TEXT and isinstance(q.object, Literal):
            text = q.object.form
        elif q.predicate.value == vocab.LFR_IS_RESPONSE_TO and isinstance(q.object, Iri):
            review = q.object.value
        elif q.predicate.value == vocab.LFR_REFERS_TO and isinstance(q.object, Iri):
            updated = q.object.value
    if review is None or updated is None:
        raise UnknownDimension("response lacks its review or updated-version link")
    return ResponseComment(
        in_response_to=review,
        agreement=_decode(types, vocab.AGREEMENT_CLASSES, "agreement"),
        addressed=_decode(types, vocab.ADDRESSED_CLASSES, "addressed"),
        text=text or "",
        refers_to=updated,
    )


def decide(d: Decision, graph: str) -> tuple[Quad, ...]:
    g = Iri(graph)
    subject = Iri(d.target)
    return (
        Quad(subject, Iri(vocab.DCT_DESCRIPTION), Literal(d.description), g),
        Quad(subject, Iri(vocab.PSO_WITH_STATUS),
             Iri(vocab.DECISION_STATUS_IRIS[d.status]), g),
        Quad(subject, Iri(vocab.FRBR_PART_OF), Iri(d.venue), g),
    )


# ---------------------------------------------------------------------------
# Corpus-level classification
# ---------------------------------------------------------------------------

FORMALIZATION = "F"
SUBMISSION = "S"
UPDATE = "U"
REVIEW = "R"
RESPONSE = "A"
CLASS_DEFINITION = "C"
DECISION = "D"

KIND_LABELS = {
    FORMALIZATION: "formalization",
    SUBMISSION: "submission",
    UPDATE: "updated formalization",
    REVIEW: "review",
    RESPONSE: "response",
    CLASS_DEFINITION: "class definition",
    DECISION: "decision",
}


def classify(np: Nanopublication) -> str | None:
    """Node type letter for a nanopublication, or None if unrecognized."""
    assertion = np.assertion()
    statuses = {q.object.value for q in assertion
                if q.predicate.value == vocab.PSO_WITH_STATUS and isinstance(q.object, Iri)}
    if vocab.PSO_SUBMITTED in statuses:
        return SUBMISSION
    if statuses & set(vocab.DECISION_STATUS_IRIS.values()):
        return DECISION
    types = {q.object.value for q in assertion
             if q.predicate.value == vocab.RDF_TYPE and isinstance(q.object, Iri)}
    if vocab.LFR_REVIEW_COMMENT in types:
        return REVIEW
    if vocab.LFR_RESPONSE_COMMENT in types:
        return RESPONSE
    if vocab.OWL_CLASS in types:
        return CLASS_DEFINITION
    if any(q.predicate.value == vocab.HAS_SUBJECT_CLASS for q in assertion):
        return UPDATE if np.supersedes() else FORMALIZATION
    return None


def assertion_references(np: Nanopublication) -> set[str]:
    """Nanopublication stems referenced by IRIs inside the assertion graph."""
    refs: set[str] = set()
    for q in np.assertion():
        for term in (q.subject, q.object):
            if isinstance(term, Iri):
                stem = strip_fragment(term.value)
                if is_trusty_iri(stem) and stem != np.iri:
                    refs.add(stem)
    return refs


@dataclass
class SubmissionThread:
    """Everything belonging to one submission, assembled from a corpus."""

    submission: str | None
    versions: list[str]
    class_definitions: list[str]
    reviews: list[str]
    responses: list[str]
    decision: str | None
    created_at: dict[str, str] = field(default_factory=dict)

    def members(self) -> list[str]:
        out = list(self.versions)
        if self.submission:
            out.append(self.submission)
        out += self.class_definitions + self.reviews + self.responses
        if self.decision:
            out.append(self.decision)
        return out

    @property
    def head_version(self) -> str:
        return self.versions[-1]


def _submitted_formalization(np: Nanopublication) -> str | None:
    for q in np.assertion():
        if (q.predicate.value == vocab.PSO_WITH_STATUS
                and q.object == Iri(vocab.PSO_SUBMITTED) and isinstance(q.subject, Iri)):
            return q.subject.value
    return None


def _decision_target(np: Nanopublication) -> str | None:
    statuses = set(vocab.DECISION_STATUS_IRIS.values())
    for q in np.assertion():
        if (q.predicate.value == vocab.PSO_WITH_STATUS and isinstance(q.object, Iri)
                and q.object.value in statuses and isinstance(q.subject, Iri)):
            return q.subject.value
    return None


def build_thread(corpus: Mapping[str, Nanopublication] | Iterable[Nanopublication],
                 submission: str) -> SubmissionThread:
    """Assemble the thread anchored at a submission nanopublication.

    ``submission`` may also name the initial formalization itself, which
    yields a draft thread (no submission act yet). Missing link targets
    raise :class:`DanglingReference`; superseding loops raise
    :class:`SupersedesCycle`.
    """
    if not isinstance(corpus, Mapping):
        corpus = {np.iri: np for np in corpus}
    if submission not in corpus:
        raise DanglingReference(submission, "thread anchor")
    anchor = corpus[submission]

    kind = classify(anchor)
    if kind == SUBMISSION:
        submission_iri = submission
        formalization = _submitted_formalization(anchor)
        if formalization not in corpus:
            raise DanglingReference(formalization or "?", "submitted formalization")
    elif kind in (FORMALIZATION, UPDATE):
        submission_iri = None
        formalization = submission
        for iri, np in corpus.items():
            if classify(np) == SUBMISSION and _submitted_formalization(np) == formalization:
                submission_iri = iri
                break
    else:
        raise DanglingReference(submission, "not a submission or formalization")

    versions = extract_chain(corpus, formalization)

    class_definitions: list[str] = []
    for version in versions:
        for stem in sorted(assertion_references(corpus[version])):
            if stem in corpus and classify(corpus[stem]) == CLASS_DEFINITION:
                if stem not in class_definitions:
                    class_definitions.append(stem)

    reviewable = set(versions) | set(class_definitions)
    reviews = [iri for iri, np in corpus.items()
               if classify(np) == REVIEW
               and parse_review(np.assertion()).target in reviewable]

    responses = []
    for iri, np in corpus.items():
        if classify(np) != RESPONSE:
            continue
        response = parse_response(np.assertion())
        if response.refers_to in reviewable or response.in_response_to in set(reviews):
            if response.in_response_to not in corpus:
                raise DanglingReference(response.in_response_to, f"response <{iri}>")
            if response.in_response_to in set(reviews):
                responses.append(iri)

    decision = None
    for iri, np in corpus.items():
        if classify(np) == DECISION and _decision_target(np) in set(versions):
            decision = iri
            break

    created = {iri: corpus[iri].created() or "" for iri in
               versions + class_definitions + reviews + responses
               + ([submission_iri] if submission_iri else [])
               + ([decision] if decision else [])}

    def by_time(iris: list[str]) -> list[str]:
        return sorted(iris, key=lambda i: (created.get(i) or "", i))

    return SubmissionThread(
        submission=submission_iri,
        versions=versions,
        class_definitions=by_time(class_definitions),
        reviews=by_time(reviews),
        responses=by_time(responses),
        decision=decision,
        created_at=created,
    )


def thread_status(t: SubmissionThread) -> str:
    """Derived workflow stage, with precedence
    decided > revised > under-review > submitted > draft."""
    if t.decision:
        return DECIDED
    if t.reviews and len(t.versions) > 1:
        head_created = t.created_at.get(t.head_version) or ""
        last_review = max((t.created_at.get(r) or "") for r in t.reviews)
        if head_created and parse_timestamp(head_created) > parse_timestamp(last_review):
            return REVISED
    if t.reviews:
        return UNDER_REVIEW
    if t.submission:
        return SUBMITTED
    return DRAFT


def check_integrity(corpus: Mapping[str, Nanopublication] | Iterable[Nanopublication]
                    ) -> list[Finding]:
    """Link-integrity scan over a corpus snapshot.

    Reports dangling references, duplicate submissions of one formalization
    to one venue, decisions that target a superseded version, responses
    whose review and updated version belong to different threads, and
    superseding cycles.
    """
    if not isinstance(corpus, Mapping):
        corpus = {np.iri: np for np in corpus}
    findings: list[Finding] = []

    def missing(iri: str, context: str):
        findings.append(Finding("DanglingReference",
                                f"<{iri}> referenced by {context} is not in the corpus"))

    chains: dict[str, list[str]] = {}
    for iri, np in corpus.items():
        target = np.supersedes()
        if target is not None and target not in corpus:
            missing(target, f"superseding publication <{iri}>")
        if target is not None and target in corpus:
            try:
                chains[iri] = extract_chain(corpus, iri)
            except SupersedesCycle as exc:
                findings.append(Finding("SupersedesCycle", str(exc)))
            except DanglingReference:
                pass

    submissions_seen: dict[tuple[str, str], list[str]] = {}
    for iri, np in corpus.items():
        kind = classify(np)
        if kind == SUBMISSION:
            formalization = _submitted_formalization(np)
            venue = next((q.object.value for q in np.assertion()
                          if q.predicate.value == vocab.FRBR_PART_OF
                          and isinstance(q.object, Iri)), "")
            if formalization not in corpus:
                missing(formalization or "?", f"submission <{iri}>")
            else:
                submissions_seen.setdefault((formalization, venue), []).append(iri)
        elif kind == REVIEW:
            target = parse_review(np.assertion()).target
            if target not in corpus:
                missing(target, f"review <{iri}>")
        elif kind == RESPONSE:
            response = parse_response(np.assertion())
            if response.in_response_to not in corpus:
                missing(response.in_response_to, f"response <{iri}>")
            if response.refers_to not in corpus:
                missing(response.refers_to, f"response <{iri}>")
            elif response.in_response_to in corpus:
                review_target = parse_review(
                    corpus[response.in_response_to].assertion()).target
                if review_target in corpus:
                    try:
                        review_chain = set(extract_chain(
                            corpus, strip_fragment(review_target)))
                        updated_chain = set(extract_chain(
                            corpus, strip_fragment(response.refers_to)))
                    except (DanglingReference, SupersedesCycle):
                        review_chain = updated_chain = set()
                    crosses = (review_chain and updated_chain
                               and review_chain.isdisjoint(updated_chain)
                               and classify(corpus[review_target]) != CLASS_DEFINITION)
                    if crosses:
                        findings.append(Finding(
                            "ResponseCrossesThreads",
                            f"response <{iri}> answers a review of a different thread"))
        elif kind == DECISION:
            target = _decision_target(np)
            if target not in corpus:
                missing(target or "?", f"decision <{iri}>")
            else:
                newer = [i for i, other in corpus.items() if other.supersedes() == target]
                if newer:
                    findings.append(Finding(
                        "DecisionTargetSuperseded",
                        f"decision <{iri}> targets <{target}>, which is superseded"))

    for (formalization, venue), iris in submissions_seen.items():
        if len(iris) > 1:
            findings.append(Finding(
                "DuplicateSubmission",
                f"<{formalization}> submitted to <{venue}> {len(iris)} times"))

    return findings
