"""Synthetic 15-thread workload with fixed per-type totals.

Thread-by-thread distributions are chosen so the per-type totals come out
exactly at (15, 15, 34, 119, 46, 100, 34, 25, 15) in the canonical stats
order: submissions, claim definitions, class definitions, claim reviews,
class-definition reviews, responses to each, updated definitions, decisions.
"""

from datetime import datetime, timedelta, timezone

from formalpub.acts import (class_definition_np, decision_np, formalization_np,
                            response_np, review_np, submission_np)
from formalpub.nanopub import format_timestamp
from formalpub.superpattern import ClassRef, Qualifier, SuperPatternInstantiation, relation
from formalpub.workflow import Decision, ResponseComment, ReviewComment

VENUE = "https://w3id.org/fpsi/DataScienceSpecialIssue"

UPDATES = [2] * 10 + [1] * 5            # 25
CLASS_DEFS = [3] * 4 + [2] * 11         # 34
CLAIM_REVIEWS = [8] * 14 + [7]          # 119
CLASS_REVIEWS = [4] + [3] * 14          # 46
CLAIM_RESPONSES = [7] * 10 + [6] * 5    # 100
CLASS_RESPONSES = [3] * 4 + [2] * 11    # 34

EXPECTED_TOTALS = (15, 15, 34, 119, 46, 100, 34, 25, 15)
EXPECTED_AVERAGES = ("1.00", "1.00", "2.27", "7.93", "3.07", "6.67", "2.27", "1.67", "1.00")


def build_table2_corpus(registry):
    """Publish the full synthetic workload into a registry."""
    clock = datetime(2021, 5, 1, tzinfo=timezone.utc)

    def tick() -> str:
        nonlocal clock
        clock += timedelta(seconds=30)
        return format_timestamp(clock)

    for i in range(15):
        author = f"https://orcid.org/0000-0000-0000-2{i:03d}"
        reviewer = f"https://orcid.org/0000-0000-0000-3{i:03d}"
        editor = "https://orcid.org/0000-0000-0000-9999"

        class_defs = []
        for k in range(CLASS_DEFS[i]):
            np, class_iri = class_definition_np(
                f"measure {i + 1}.{k + 1}", f"synthetic measure {k + 1} of thread {i + 1}",
                "http://www.wikidata.org/entity/Q35120", (), author, tick())
            registry.publish(np)
            class_defs.append((np, class_iri))

        slots = [ClassRef(iri, f"measure {i + 1}.{k + 1}")
                 for k, (_, iri) in enumerate(class_defs)]
        if len(slots) >= 3:
            context, subject, objekt = slots[0], slots[1], slots[2]
        else:
            context = ClassRef("http://www.wikidata.org/entity/Q5", "human")
            subject, objekt = slots[0], slots[1]
        sp = SuperPatternInstantiation(context=context, subject=subject,
                                       qualifier=Qualifier("generally"),
                                       relation=relation("affects"), object=objekt)
        formalization = formalization_np(
            sp, f"urn:example:workload-source:{i + 1:02d}", None, author, tick())
        registry.publish(formalization)
        registry.publish(submission_np(formalization.iri, VENUE, author, tick()))

        claim_reviews = []
        for k in range(CLAIM_REVIEWS[i]):
            np = review_np(ReviewComment(
                target=formalization.iri, aspect=("syntax", "style", "content")[k % 3],
                disposition=("positive", "negative", "neutral")[k % 3],
                action=("compulsory", "suggestion", "no-action")[k % 3],
                impact=(k % 5) + 1, text=f"claim review {k + 1} of thread {i + 1}"),
                reviewer, tick())
            registry.publish(np)
            claim_reviews.append(np)

        class_reviews = []
        for k in range(CLASS_REVIEWS[i]):
            target_np, _ = class_defs[k % len(class_defs)]
            np = review_np(ReviewComment(
                target=target_np.iri, aspect="content", disposition="neutral",
                action="suggestion", impact=(k % 5) + 1,
                text=f"class review {k + 1} of thread {i + 1}"), reviewer, tick())
            registry.publish(np)
            class_reviews.append(np)

        head = formalization
        for k in range(UPDATES[i]):
            head = formalization_np(
                SuperPatternInstantiation(context=context, subject=subject,
                                          qualifier=Qualifier(("mostly", "generally")[k % 2]),
                                          relation=relation("affects"), object=objekt),
                f"urn:example:workload-source:{i + 1:02d}", None, author, tick(),
                supersedes=head)
            registry.publish(head)

        for k in range(CLAIM_RESPONSES[i]):
            registry.publish(response_np(ResponseComment(
                in_response_to=claim_reviews[k % len(claim_reviews)].iri,
                agreement=("agree", "partial", "disagree")[k % 3],
                addressed=("addressed", "partially-addressed", "not-addressed")[k % 3],
                text=f"claim response {k + 1} of thread {i + 1}",
                refers_to=head.iri), author, tick()))

        for k in range(CLASS_RESPONSES[i]):
            registry.publish(response_np(ResponseComment(
                in_response_to=class_reviews[k % len(class_reviews)].iri,
                agreement="agree", addressed="addressed",
                text=f"class response {k + 1} of thread {i + 1}",
                refers_to=head.iri), author, tick()))

        registry.publish(decision_np(Decision(
            target=head.iri, status="accepted-for-publication",
            description=f"thread {i + 1} accepted", venue=VENUE), editor, tick()))

    return registry
