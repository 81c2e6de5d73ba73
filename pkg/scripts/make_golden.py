#!/usr/bin/env python3
"""Generate the golden content-hash fixtures under tests/golden/.

Deliberately self-contained: substitution, ordering, hashing, and the TriG
writer are all (re)implemented here from the documented recipe, without
importing the library, so the committed *.code files act as an independent
oracle for the library's hashing path.

Recipe per fixture:
  1. replace every occurrence of the temporary self IRI in IRI values and
     literal forms with a single space;
  2. write one N-Quads line per quad and sort the lines by the
     (graph, subject, predicate, object) term key (IRI < blank < literal,
     then lexical form, then datatype, then language);
  3. SHA-256 the UTF-8 bytes, base64url-encode without padding, prefix RA;
  4. rewrite the temporary IRI to http://purl.org/np/{code} and write the
     dataset as TriG next to a .code file holding the code.

Run from the repository root:  python scripts/make_golden.py
"""

import base64
import hashlib
from pathlib import Path

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "golden"
TEMP = "urn:np:temp"
CODE_BASE = "http://purl.org/np/"

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
XSD = "http://www.w3.org/2001/XMLSchema#"
OWL = "http://www.w3.org/2002/07/owl#"
SKOS = "http://www.w3.org/2004/02/skos/core#"
DCT = "http://purl.org/dc/terms/"
PROV = "http://www.w3.org/ns/prov#"
NP = "http://www.nanopub.org/nschema#"
SP = "https://w3id.org/linkflows/superpattern/"
SPT = "https://w3id.org/linkflows/superpattern/terms/"
FPO = "https://w3id.org/formalization-papers/ontology/"
WD = "http://www.wikidata.org/entity/"

CREATOR = "https://orcid.org/0000-0000-0000-0001"
CREATED = ("lit", "2021-08-15T10:00:00Z", XSD + "dateTime", None)


def iri(value):
    return ("iri", value, None, None)


def lit(form, datatype=None):
    return ("lit", form, datatype, None)


def head_quads(base):
    head = iri(base + "#Head")
    return [
        (iri(base), iri(RDF + "type"), iri(NP + "Nanopublication"), head),
        (iri(base), iri(NP + "hasAssertion"), iri(base + "#assertion"), head),
        (iri(base), iri(NP + "hasProvenance"), iri(base + "#provenance"), head),
        (iri(base), iri(NP + "hasPublicationInfo"), iri(base + "#pubinfo"), head),
    ]


def pubinfo_quads(base, extras=()):
    g = iri(base + "#pubinfo")
    quads = [
        (iri(base), iri(DCT + "created"), CREATED, g),
        (iri(base), iri(DCT + "creator"), iri(CREATOR), g),
    ]
    quads += [(iri(base), p, o, g) for p, o in extras]
    return quads


def fixture_class_definition():
    base = TEMP
    g = iri(base + "#assertion")
    cls = iri(base + "#STX1B-mutation")
    assertion = [
        (cls, iri(RDF + "type"), iri(OWL + "Class"), g),
        (cls, iri(RDFS + "subClassOf"), iri(WD + "Q42918"), g),
        (cls, iri(RDFS + "label"), lit("STX1B mutation"), g),
        (cls, iri(SKOS + "definition"), lit("mutation in STX1B"), g),
        (cls, iri(SKOS + "relatedMatch"), iri(WD + "Q18048867"), g),
    ]
    provenance = [(g, iri(PROV + "wasAttributedTo"), iri(CREATOR),
                   iri(base + "#provenance"))]
    return head_quads(base) + assertion + provenance + pubinfo_quads(base)


def fixture_formalization():
    base = TEMP
    g = iri(base + "#assertion")
    subject = "http://purl.org/np/RAPVWYH0x-xyDa9PfBcGUFly3m1FNEO43KG9s0uH-y6yo#STX1B-mutation"
    assertion = [
        (g, iri(SP + "hasContextClass"), iri(WD + "Q5"), g),
        (g, iri(SP + "hasSubjectClass"), iri(subject), g),
        (g, iri(SP + "hasQualifier"), iri(SPT + "frequentlyQualifier"), g),
        (g, iri(SP + "hasRelation"), iri(SPT + "coOccursWith"), g),
        (g, iri(SP + "hasObjectClass"), iri(WD + "Q41571"), g),
        (iri(WD + "Q5"), iri(RDFS + "label"), lit("human"), g),
        (iri(subject), iri(RDFS + "label"), lit("STX1B mutation"), g),
        (iri(WD + "Q41571"), iri(RDFS + "label"), lit("epilepsy"), g),
    ]
    pg = iri(base + "#provenance")
    activity = iri(base + "#activity")
    provenance = [
        (g, iri(PROV + "wasGeneratedBy"), activity, pg),
        (activity, iri(RDF + "type"), iri(FPO + "FormalizationActivity"), pg),
        (activity, iri(PROV + "used"), iri("urn:example:source-article:14"), pg),
        (activity, iri(FPO + "quotedPhrase"),
         lit("mutations in STX1B are frequently accompanied by epileptic seizures"), pg),
    ]
    return head_quads(base) + assertion + provenance + pubinfo_quads(base)


def fixture_large():
    base = TEMP
    g = iri(base + "#assertion")
    cls = iri(base + "#broad-survey-class")
    assertion = [
        (cls, iri(RDF + "type"), iri(OWL + "Class"), g),
        (cls, iri(RDFS + "subClassOf"), iri(WD + "Q35120"), g),
        (cls, iri(RDFS + "label"), lit("broad survey class"), g),
        (cls, iri(SKOS + "definition"),
         lit("synthetic class with many related entries, for mutation sweeps"), g),
    ]
    assertion += [(cls, iri(SKOS + "relatedMatch"), iri(WD + f"Q9{n:04d}"), g)
                  for n in range(24)]
    provenance = [(g, iri(PROV + "wasAttributedTo"), iri(CREATOR),
                   iri(base + "#provenance"))]
    extras = [(iri(DCT + "title"), lit("A deliberately large publication"))]
    return head_quads(base) + assertion + provenance + pubinfo_quads(base, extras)


# --- oracle pipeline ---------------------------------------------------------

def substitute(quads, old, new):
    def sub_term(t):
        kind, value, datatype, lang = t
        value = value.replace(old, new)
        if datatype is not None:
            datatype = datatype.replace(old, new)
        return (kind, value, datatype, lang)
    return [tuple(sub_term(t) for t in q) for q in quads]


def term_sort_key(t):
    kind, value, datatype, lang = t
    rank = 0 if kind == "iri" else 2
    return (rank, value, datatype or "", lang or "")


def nq_term(t):
    kind, value, datatype, lang = t
    if kind == "iri":
        return f"<{value}>"
    escaped = (value.replace("\\", "\\\\").replace('"', '\\"')
               .replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t"))
    if datatype:
        return f'"{escaped}"^^<{datatype}>'
    if lang:
        return f'"{escaped}"@{lang}'
    return f'"{escaped}"'


def compute_code(quads, self_iri):
    masked = substitute(quads, self_iri, " ")
    ordered = sorted(masked, key=lambda q: (term_sort_key(q[3]), term_sort_key(q[0]),
                                            term_sort_key(q[1]), term_sort_key(q[2])))
    lines = [f"{nq_term(s)} {nq_term(p)} {nq_term(o)} {nq_term(g)} .\n"
             for s, p, o, g in ordered]
    digest = hashlib.sha256("".join(lines).encode("utf-8")).digest()
    return "RA" + base64.urlsafe_b64encode(digest).decode("ascii").rstrip("=")


def to_trig(quads):
    graphs = {}
    for s, p, o, g in quads:
        graphs.setdefault(g[1], []).append((s, p, o))
    out = []
    for gname in sorted(graphs):
        out.append(f"<{gname}> {{")
        for s, p, o in graphs[gname]:
            out.append(f"  {nq_term(s)} {nq_term(p)} {nq_term(o)} .")
        out.append("}")
        out.append("")
    return "\n".join(out)


def main():
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    fixtures = {
        "np1": fixture_class_definition(),
        "np2": fixture_formalization(),
        "np3": fixture_large(),
    }
    for name, quads in fixtures.items():
        code = compute_code(quads, TEMP)
        final = substitute(quads, TEMP, CODE_BASE + code)
        (GOLDEN_DIR / f"{name}.trig").write_text(to_trig(final), "utf-8")
        (GOLDEN_DIR / f"{name}.code").write_text(code + "\n", "utf-8")
        print(f"{name}: {code} ({len(quads)} quads)")


if __name__ == "__main__":
    main()
