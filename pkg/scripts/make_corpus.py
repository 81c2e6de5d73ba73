#!/usr/bin/env python3
"""Regenerate the bundled reference corpus under src/formalpub/data/corpus/.

Fifteen published claim formalizations, one fixture nanopublication each,
plus a manifest recording the submission number, whether the authors
formalized their own earlier claim, and how each class slot was minted
(nanopub = minted inside a class-definition nanopublication, wikidata-new =
newly created Wikidata item, wikidata = reused Wikidata item, external =
referenced from another ontology).

Deterministic: fixed per-row clocks and synthetic creator IRIs, so the
content-addressed fixture files never change between runs.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from formalpub.acts import formalization_np  # noqa: E402
from formalpub.rdf import serialize_trig  # noqa: E402
from formalpub.superpattern import (ClassRef, Qualifier, SuperPatternInstantiation,  # noqa: E402
                                    UNIVERSAL, relation)

OUT = ROOT / "src" / "formalpub" / "data" / "corpus"
WD = "http://www.wikidata.org/entity/"
OBO = "http://purl.obolibrary.org/obo/"

VENUE = "https://w3id.org/fpsi/DataScienceSpecialIssue"


def nb(label, np_code, fragment):
    return {"label": label, "iri": f"http://purl.org/np/{np_code}#{fragment}",
            "minted": "nanopub"}


def wd_new(label, qid):
    return {"label": label, "iri": WD + qid, "minted": "wikidata-new"}


def wd_old(label, qid):
    return {"label": label, "iri": WD + qid, "minted": "wikidata"}


def ext(label, iri):
    return {"label": label, "iri": iri, "minted": "external"}


UNIVERSAL_SLOT = {"minted": "universal"}

ENTRIES = [
    {"submission": 1, "own_claim": False, "qualifier": "generally", "relation": "affects",
     "context": nb("early human adipogenesis",
                   "RAtsHwzNs36rGrLnoSbGrPD351Qw033Acoe4zmdXhsYlM", "early-human-adipogenesis"),
     "subject": nb("regulatory element within the first intron of FTO",
                   "RAxLYvJ1JrRf2JAowYGbGJleQPmqtpXnXsIvse7GmLeT8",
                   "regulatory-element-within-the-first-intron-of-FTO"),
     "object": nb("expression of genes IRX3 and IRX5",
                  "RAwkXiTv7qCtqOYzlR6ozZRGLRtG6mlogrYdRQ1E4dRDg",
                  "expression-of-genes-IRX3-and-IRX5")},
    {"submission": 2, "own_claim": False, "qualifier": "can generally",
     "relation": "contributes-to",
     "context": wd_old("human motor neuron", "Q101404862"),
     "subject": wd_old("TAR DNA binding protein", "Q21133247"),
     "object": nb("transcription of stmn2",
                  "RAiUYY1dbEDbcsscapEmbMMHsgJmjEJ1yUoNsxZIH1r90", "transcription-of-stmn2")},
    {"submission": 3, "own_claim": True, "qualifier": "generally", "relation": "affects",
     "context": wd_new("dejellied fertilizable stage VI Xenopus laevis oocyte", "Q107644116"),
     "subject": wd_new("strong static magnetic field", "Q107644241"),
     "object": wd_old("cell cortex", "Q5058180")},
    {"submission": 4, "own_claim": True, "qualifier": "sometimes", "relation": "is-same-as",
     "context": UNIVERSAL_SLOT,
     "subject": wd_new("genes associated with CAKUT", "Q109406970"),
     "object": wd_new("targets of vitamin A", "Q109406949")},
    {"submission": 5, "own_claim": True, "qualifier": "generally", "relation": "enables",
     "context": nb("patient undergoing PCI",
                   "RA9pwySo43TIfbvPuhK4ZuisvMsDvZ6TeR5N6MNKft8Nw", "patient_undergoing_PCI"),
     "subject": nb("pharmacogenomics guided clopidogrel therapy",
                   "RAOxICL4ULhzr5mxC9cyzStCBtpoETQGin6Vr-Ns7JNtA",
                   "pharmacogenomics_guided_clopidogrel_therapy"),
     "object": nb("cost-effective treatment",
                  "RAlfRfPak2jsyyVy4knjOmxQSYtociP8Cc0O7gemMtqQY", "cost-effective_treatment")},
    {"submission": 6, "own_claim": False, "qualifier": "mostly", "relation": "affects",
     "context": wd_old("human", "Q5"),
     "subject": ext("smoothened signaling pathway", OBO + "GO_0007224"),
     "object": ext("astrocyte development", OBO + "GO_0014002")},
    {"submission": 7, "own_claim": True, "qualifier": "generally", "relation": "inhibits",
     "context": wd_old("biodiversity data", "Q28946370"),
     "subject": nb("license with non-commercial clause",
                   "RA5Txa3acYP9_MUWEw7s7wenDTB1QXNMB7UehJW-2E-_8",
                   "license-with-non-commercial-clause"),
     "object": wd_old("data reuse", "Q58023280")},
    {"submission": 8, "own_claim": True, "qualifier": "generally", "relation": "is-same-as",
     "context": nb("release of OpenBiodiv knowledge graph",
                   "RAlm6vh2zpFLg189qrDYPtppkL790Pqaw-q2KUhyfJtRY",
                   "release-of-openbiodiv-knowledge-graph"),
     "subject": nb("triple in OpenBiodiv knowledge graph",
                   "RAaEkIiJLmBJP5kK3JdYjseCRqwutYbdnI8Q3VbzrK9VA",
                   "triple-in-openbiodiv-knowledge-graph"),
     "object": nb("semantic triple extracted from biodiversity literature",
                  "RAEpHUXRKtaLE3Z24sgIUdaxwTBsK2bjshyq9yF00145Y",
                  "semantic-triples-extracted-from-biodiversity-literature")},
    {"submission": 9, "own_claim": False, "qualifier": "generally", "relation": "inhibits",
     "context": wd_old("UNC13A", "Q18036664"),
     "subject": wd_old("TAR DNA binding protein", "Q21133247"),
     "object": ext("inclusion of cryptic exon", OBO + "VariO_0504")},
    {"submission": 10, "own_claim": True, "qualifier": "can generally", "relation": "enables",
     "context": wd_old("data set", "Q1172284"),
     "subject": nb("adherence to the FAIR guiding principles",
                   "RAodU4AmRjfzyjwtJK3luO0iyRJJPUBjkijKWdlMHvack",
                   "adherenceToTheFAIRGuidingPrinciples"),
     "object": nb("automated discovery",
                  "RAFQovt9yQD7nZ2tdZ9_Uhpb7CsfT3k64pK7dh63xd-50", "automatedDiscovery")},
    {"submission": 11, "own_claim": False, "qualifier": "always", "relation": "is-caused-by",
     "context": wd_old("human", "Q5"),
     "subject": ext("NGLY1 deficiency", OBO + "MONDO_0014109"),
     "object": nb("dysfunction of ERAD pathway",
                  "RAZVLqlkbwiX40n0GNxcxJany2Cw3oxMCrNuZtjBClryU", "Dysfunction_of_ERAD_pathway")},
    {"submission": 12, "own_claim": False, "qualifier": "never", "relation": "affects",
     "context": wd_old("social group", "Q874405"),
     "subject": nb("relative neocortex size",
                   "RAhnnsMWVM8M29NixCJfVDLWzRzwwCPnUD7LI2kxT-FME", "relative-neocortex-size"),
     "object": nb("social group size",
                  "RAlKYv_sE8qwiSqsRdcr7KrkU1bsqlqiFmhDPtPBwpLrM", "social-group-size")},
    {"submission": 13, "own_claim": False, "qualifier": "generally", "relation": "increases",
     "context": nb("ecm bound cancer cell",
                   "RAaOAF90U6YxAvnchfj0dRtT5HRz320Pz202aGap-VfuI", "ecm-bound-cancer-cell"),
     "subject": nb("glycocayx bulk",
                   "RA-jkb7qPNTSOe_EXltW_rlQWQ9x3_Y1KOzW6J_bbPz4U", "glycocalyx-bulk"),
     "object": nb("integrin clustering",
                  "RAFH8AVn-wnTcSGxvPZ1Uiy_AtOhINlynnAxxiCdcTVWU", "integrin-clustering")},
    {"submission": 14, "own_claim": False, "qualifier": "frequently",
     "relation": "co-occurs-with",
     "context": wd_old("human", "Q5"),
     "subject": nb("STX1B mutation",
                   "RAPVWYH0x-xyDa9PfBcGUFly3m1FNEO43KG9s0uH-y6yo", "STX1B-mutation"),
     "object": wd_old("epilepsy", "Q41571")},
    {"submission": 15, "own_claim": True, "qualifier": "can generally",
     "relation": "contributes-to",
     "context": nb("digital humanities research",
                   "RAkCjYmMU3obIrC4IpwUw84JW1ymd312yz0N0g-R9yes0", "digital-humanities-research"),
     "subject": nb("usage of Linked Data Scopes",
                   "RAcPa1aO8kAt8QYwjQoJq-PIzYvo0jCzYrAiOX_XOyk1w", "usage-of-linked-data-scopes"),
     "object": wd_old("transparency", "Q535347")},
]


def to_instantiation(entry):
    def ref(slot):
        if slot["minted"] == "universal":
            return UNIVERSAL
        return ClassRef(slot["iri"], slot["label"])

    return SuperPatternInstantiation(
        context=ref(entry["context"]),
        subject=ref(entry["subject"]),
        qualifier=Qualifier.from_string(entry["qualifier"]),
        relation=relation(entry["relation"]),
        object=ref(entry["object"]))


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    manifest = {"venue": VENUE, "entries": []}
    for entry in ENTRIES:
        n = entry["submission"]
        np = formalization_np(
            to_instantiation(entry),
            source=f"urn:example:source-article:{n:02d}",
            quote=None,
            creator=f"https://orcid.org/0000-0000-0000-{n:04d}",
            timestamp=f"2021-06-{n:02d}T12:00:00Z")
        fixture = f"sub{n:02d}.trig"
        (OUT / fixture).write_text(serialize_trig(np.dataset), "utf-8")
        manifest["entries"].append({**entry, "fixture": fixture})
        print(f"{fixture}: {np.iri}")
    (OUT / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", "utf-8")


if __name__ == "__main__":
    main()
