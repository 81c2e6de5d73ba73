"""Single source of truth for every IRI the engine emits or matches.

All vocabulary bindings live in ``data/vocab.json`` (versioned); this module
resolves the compact names against the prefix table once at import time and
exposes them as constants. Tests assert against these constants, never
against ad-hoc strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

_RAW = json.loads(resources.files("formalpub.data").joinpath("vocab.json").read_text("utf-8"))

VERSION: int = _RAW["version"]
PREFIXES: dict[str, str] = dict(_RAW["prefixes"])


def expand(compact: str) -> str:
    """Resolve a ``pfx:local`` name against the prefix table."""
    pfx, local = compact.split(":", 1)
    return PREFIXES[pfx] + local


# Structure
RDF_TYPE = expand(_RAW["terms"]["type"])
RDFS_LABEL = expand(_RAW["terms"]["label"])
RDFS_SUBCLASSOF = expand(_RAW["terms"]["subClassOf"])
OWL_CLASS = expand(_RAW["terms"]["Class"])
SKOS_DEFINITION = expand(_RAW["terms"]["definition"])
SKOS_RELATED_MATCH = expand(_RAW["terms"]["relatedMatch"])
XSD_DATETIME = expand(_RAW["terms"]["dateTime"])
XSD_INTEGER = expand(_RAW["terms"]["integer"])

NP_NANOPUBLICATION = expand(_RAW["head"]["Nanopublication"])
NP_HAS_ASSERTION = expand(_RAW["head"]["hasAssertion"])
NP_HAS_PROVENANCE = expand(_RAW["head"]["hasProvenance"])
NP_HAS_PUBINFO = expand(_RAW["head"]["hasPublicationInfo"])

DCT_CREATED = expand(_RAW["pubinfo"]["created"])
DCT_CREATOR = expand(_RAW["pubinfo"]["creator"])
DCT_TITLE = expand(_RAW["pubinfo"]["title"])
NPX_SUPERSEDES = expand(_RAW["pubinfo"]["supersedes"])

PROV_WAS_GENERATED_BY = expand(_RAW["provenance"]["wasGeneratedBy"])
PROV_USED = expand(_RAW["provenance"]["used"])
PROV_WAS_ATTRIBUTED_TO = expand(_RAW["provenance"]["wasAttributedTo"])
FORMALIZATION_ACTIVITY = expand(_RAW["provenance"]["FormalizationActivity"])
QUOTED_PHRASE = expand(_RAW["provenance"]["quotedPhrase"])

# Claim slots
SLOT_PREDICATES: dict[str, str] = {k: expand(v) for k, v in _RAW["slots"].items()}
HAS_CONTEXT_CLASS = SLOT_PREDICATES["context"]
HAS_SUBJECT_CLASS = SLOT_PREDICATES["subject"]
HAS_QUALIFIER = SLOT_PREDICATES["qualifier"]
HAS_RELATION = SLOT_PREDICATES["relation"]
HAS_OBJECT_CLASS = SLOT_PREDICATES["object"]
UNIVERSAL_CONTEXT_IRI = expand(_RAW["universal_context"])


@dataclass(frozen=True)
class QualifierSpec:
    """Acceptance region for one qualifier: ``probability <comparison> threshold``."""

    iri: str
    comparison: str  # one of "=", ">=", ">"
    threshold: Fraction


QUALIFIERS: dict[str, QualifierSpec] = {
    name: QualifierSpec(expand(spec["iri"]), spec["comparison"], Fraction(spec["threshold"]))
    for name, spec in _RAW["qualifiers"].items()
}
CAN_QUALIFIER_IRIS: dict[str, str] = {
    base: expand(iri) for base, iri in _RAW["can_qualifiers"].items()
}
RELATION_IRIS: dict[str, str] = {
    name: expand(spec["iri"]) for name, spec in _RAW["relations"].items()}
RELATION_LABELS: dict[str, str] = {
    name: spec["label"] for name, spec in _RAW["relations"].items()}

# Review model
LFR_REVIEW_COMMENT = expand(_RAW["review"]["ReviewComment"])
LFR_HAS_COMMENT_TEXT = expand(_RAW["review"]["hasCommentText"])
LFR_HAS_IMPACT = expand(_RAW["review"]["hasImpact"])
LFR_REFERS_TO = expand(_RAW["review"]["refersTo"])
LFR_REFERS_TO_MENTIONING_OF = expand(_RAW["review"]["refersToMentioningOf"])
ASPECT_CLASSES: dict[str, str] = {k: expand(v) for k, v in _RAW["review"]["aspects"].items()}
DISPOSITION_CLASSES: dict[str, str] = {
    k: expand(v) for k, v in _RAW["review"]["dispositions"].items()}
ACTION_CLASSES: dict[str, str] = {k: expand(v) for k, v in _RAW["review"]["actions"].items()}

LFR_RESPONSE_COMMENT = expand(_RAW["response"]["ResponseComment"])
LFR_IS_RESPONSE_TO = expand(_RAW["response"]["isResponseTo"])
AGREEMENT_CLASSES: dict[str, str] = {
    k: expand(v) for k, v in _RAW["response"]["agreements"].items()}
ADDRESSED_CLASSES: dict[str, str] = {
    k: expand(v) for k, v in _RAW["response"]["addressed"].items()}

# Submission / decision workflow
PSO_WITH_STATUS = expand(_RAW["workflow"]["withStatus"])
PSO_SUBMITTED = expand(_RAW["workflow"]["submitted"])
FRBR_PART_OF = expand(_RAW["workflow"]["partOf"])
DCT_DESCRIPTION = expand(_RAW["workflow"]["description"])
DECISION_STATUS_IRIS: dict[str, str] = {
    k: expand(v) for k, v in _RAW["workflow"]["decision_statuses"].items()}


def as_tables() -> dict:
    """The raw constants table (for the HTTP constants endpoint)."""
    return json.loads(json.dumps(_RAW))
