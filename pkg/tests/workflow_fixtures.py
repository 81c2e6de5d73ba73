"""A scripted single-submission thread built through the public API.

Mirrors the canonical happy path: mint a class, publish the claim, submit,
receive two reviews (one on the claim, one on the class), respond twice,
publish an updated version, decide. Timestamps are injected and strictly
increasing so derived orderings are deterministic.
"""

from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone

from formalpub.acts import (class_definition_np, decision_np, formalization_np,
                            response_np, review_np, submission_np)
from formalpub.nanopub import Nanopublication, format_timestamp
from formalpub.superpattern import (ClassRef, Qualifier, SuperPatternInstantiation,
                                    relation)
from formalpub.workflow import Decision, ResponseComment, ReviewComment

VENUE = "https://w3id.org/fpsi/DataScienceSpecialIssue"
AUTHOR = "https://orcid.org/0000-0000-0000-1001"
REVIEWER = "https://orcid.org/0000-0000-0000-1002"
EDITOR = "https://orcid.org/0000-0000-0000-1003"
SOURCE = "urn:example:source-article:fixture"


@dataclass
class Clock:
    now: datetime = field(default_factory=lambda: datetime(2021, 8, 1, tzinfo=timezone.utc))

    def tick(self) -> str:
        self.now += timedelta(minutes=10)
        return format_timestamp(self.now)


@dataclass
class ThreadFixture:
    class_def: Nanopublication
    class_iri: str
    formalization: Nanopublication
    submission: Nanopublication
    reviews: list[Nanopublication]
    responses: list[Nanopublication]
    update: Nanopublication
    decision: Nanopublication

    def publications(self) -> list[Nanopublication]:
        return [self.class_def, self.formalization, self.submission,
                *self.reviews, *self.responses, self.update, self.decision]

    def corpus(self) -> dict[str, Nanopublication]:
        return {np.iri: np for np in self.publications()}


def claim_for(class_iri: str, qualifier="generally") -> SuperPatternInstantiation:
    return SuperPatternInstantiation(
        context=ClassRef("http://www.wikidata.org/entity/Q5", "human"),
        subject=ClassRef(class_iri, "test measure"),
        qualifier=Qualifier.from_string(qualifier),
        relation=relation("affects"),
        object=ClassRef("http://www.wikidata.org/entity/Q41571", "epilepsy"))


def build_thread_fixture(clock: Clock | None = None) -> ThreadFixture:
    clock = clock or Clock()
    class_def, class_iri = class_definition_np(
        "test measure", "a synthetic measure for thread tests",
        "http://www.wikidata.org/entity/Q35120", (), AUTHOR, clock.tick())
    formalization = formalization_np(claim_for(class_iri), SOURCE,
                                     "a phrase from the source", AUTHOR, clock.tick())
    submission = submission_np(formalization.iri, VENUE, AUTHOR, clock.tick())
    reviews = [
        review_np(ReviewComment(target=formalization.iri, aspect="content",
                                disposition="neutral", action="suggestion", impact=1,
                                text="Maybe a causal relation fits better here.",
                                refers_to_mentioning_of="https://w3id.org/linkflows/superpattern/hasRelation"),
                  REVIEWER, clock.tick()),
        review_np(ReviewComment(target=class_def.iri, aspect="style",
                                disposition="negative", action="compulsory", impact=3,
                                text="The class label is too vague."),
                  REVIEWER, clock.tick()),
    ]
    responses = [
        response_np(ResponseComment(in_response_to=reviews[0].iri, agreement="disagree",
                                    addressed="not-addressed",
                                    text="Only a correlation is proven.",
                                    refers_to=formalization.iri), AUTHOR, clock.tick()),
        response_np(ResponseComment(in_response_to=reviews[1].iri, agreement="agree",
                                    addressed="addressed",
                                    text="Renamed as suggested.",
                                    refers_to=formalization.iri), AUTHOR, clock.tick()),
    ]
    update = formalization_np(claim_for(class_iri, "mostly"), SOURCE, None, AUTHOR,
                              clock.tick(), supersedes=formalization)
    decision = decision_np(Decision(target=update.iri, status="accepted-for-publication",
                                    description="All review comments were addressed.",
                                    venue=VENUE), EDITOR, clock.tick())
    return ThreadFixture(class_def, class_iri, formalization, submission,
                         reviews, responses, update, decision)
