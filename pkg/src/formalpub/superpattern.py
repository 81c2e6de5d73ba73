"""Five-slot claim model: context, subject, qualifier, relation, object.

A claim reads "every thing of the subject class that sits in the context of
a thing of the context class <qualifier> has the given relation to a thing
of the object class in the same context". The qualifier names an acceptance
region for the conditional probability of that statement (see
:mod:`formalpub.semantics` for the evaluator); the thresholds live in the
vocabulary table and are package policy, not an externally fixed scale,
except that "generally" means at least 0.9.

The module renders claims to the canonical English template and a logic
formula, and maps them to and from their RDF form.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable

from . import vocab
from .errors import ValidationError
from .rdf import Dataset, Iri, Literal, Quad, is_absolute_iri, strip_fragment


class InvalidInstantiation(ValidationError):
    """Slot combination violates the claim model."""


class MissingSlot(ValidationError):
    def __init__(self, slot: str):
        super().__init__(f"claim fragment lacks the {slot} slot")
        self.slot = slot


class UnknownQualifier(ValidationError):
    def __init__(self, value: str):
        super().__init__(f"unknown qualifier: {value}")
        self.value = value


class UnknownRelation(ValidationError):
    def __init__(self, value: str):
        super().__init__(f"unknown relation: {value}")
        self.value = value


class MultipleInstantiations(ValidationError):
    """Fragment holds more than one claim statement."""


_CAN_BASES = ("generally", "mostly", "frequently", "sometimes")


@dataclass(frozen=True)
class Qualifier:
    """Frequency marker, optionally weakened to a possibility reading with "can"."""

    base: str
    can_modality: bool = False

    def __post_init__(self):
        if self.base not in vocab.QUALIFIERS:
            raise UnknownQualifier(self.base)
        if self.can_modality and self.base not in _CAN_BASES:
            raise InvalidInstantiation(f'"can {self.base}" is not a legal qualifier form')

    def __str__(self) -> str:
        return f"can {self.base}" if self.can_modality else self.base

    @property
    def iri(self) -> str:
        if self.can_modality:
            return vocab.CAN_QUALIFIER_IRIS[self.base]
        return vocab.QUALIFIERS[self.base].iri

    @property
    def comparison(self) -> str:
        return vocab.QUALIFIERS[self.base].comparison

    @property
    def threshold(self) -> Fraction:
        return vocab.QUALIFIERS[self.base].threshold

    @classmethod
    def from_string(cls, text: str) -> "Qualifier":
        text = text.strip()
        if text.startswith("can "):
            return cls(text[4:].strip(), can_modality=True)
        return cls(text)

    @classmethod
    def from_iri(cls, iri: str) -> "Qualifier":
        for base, can_iri in vocab.CAN_QUALIFIER_IRIS.items():
            if iri == can_iri:
                return cls(base, can_modality=True)
        for base, spec in vocab.QUALIFIERS.items():
            if iri == spec.iri:
                return cls(base)
        raise UnknownQualifier(iri)


def all_qualifiers() -> list[Qualifier]:
    """Every legal qualifier form (plain bases plus the "can" variants)."""
    forms = [Qualifier(base) for base in vocab.QUALIFIERS]
    forms += [Qualifier(base, can_modality=True) for base in _CAN_BASES]
    return forms


@dataclass(frozen=True)
class RelationType:
    name: str
    iri: str
    display: str = field(compare=False, default="")

    def __str__(self) -> str:
        return self.display or self.name.replace("-", " ")


RELATIONS: dict[str, RelationType] = {
    name: RelationType(name, iri, vocab.RELATION_LABELS[name])
    for name, iri in vocab.RELATION_IRIS.items()
}


def relation(name: str) -> RelationType:
    try:
        return RELATIONS[name]
    except KeyError:
        raise UnknownRelation(name) from None


def relation_from_iri(iri: str) -> RelationType:
    for rel in RELATIONS.values():
        if rel.iri == iri:
            return rel
    raise UnknownRelation(iri)


@dataclass(frozen=True)
class ClassRef:
    """A class slot filler. Identity is the IRI; the label is display-only."""

    iri: str
    label: str = field(compare=False)

    def __post_init__(self):
        if not is_absolute_iri(self.iri):
            raise InvalidInstantiation(f"class IRI must be absolute: {self.iri!r}")
        if not self.label:
            raise InvalidInstantiation("class label must not be empty")


@dataclass(frozen=True)
class UniversalContext:
    """Marker for claims whose context slot is unrestricted."""

    def __str__(self) -> str:
        return "(no context class)"


UNIVERSAL = UniversalContext()

_SYMMETRICALLY_SAFE = {"is-same-as", "co-occurs-with"}


@dataclass(frozen=True)
class SuperPatternInstantiation:
    context: ClassRef | UniversalContext
    subject: ClassRef
    qualifier: Qualifier
    relation: RelationType
    object: ClassRef

    def __post_init__(self):
        if (self.subject.iri == self.object.iri
                and self.relation.name not in _SYMMETRICALLY_SAFE):
            raise InvalidInstantiation(
                f"subject and object coincide under relation {self.relation.name!r}")

    @property
    def universal(self) -> bool:
        return isinstance(self.context, UniversalContext)

    def class_refs(self) -> tuple[ClassRef, ...]:
        refs = [] if self.universal else [self.context]
        return tuple(refs + [self.subject, self.object])


def derive_label(iri: str) -> str:
    """Fallback display label when no rdfs:label is around: the fragment or
    last path segment with hyphens/underscores read as spaces."""
    tail = iri.rsplit("#", 1)[-1] if "#" in iri else iri.rstrip("/").rsplit("/", 1)[-1]
    return re.sub(r"[-_]+", " ", tail).strip() or iri


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def render_sentence(sp: SuperPatternInstantiation) -> str:
    """The canonical English reading of a claim.

    For an unrestricted context both the context clause and the trailing
    same-context clause are dropped.
    """
    if sp.universal:
        return (f"Every thing of type '{sp.subject.label}' {sp.qualifier} has a relation "
                f"of type '{sp.relation}' to a thing of type '{sp.object.label}'.")
    return (f"Every thing of type '{sp.subject.label}' that is in the context of a thing "
            f"of type '{sp.context.label}' {sp.qualifier} has a relation of type "
            f"'{sp.relation}' to a thing of type '{sp.object.label}' that is in the "
            f"same context.")


def slug(label: str) -> str:
    """Lowercased, hyphen-separated form used inside formulas."""
    return re.sub(r"\s+", "-", label.strip()).lower()


def _threshold_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):g}"


_COMPARISON_TEXT = {"=": "=", ">=": "≥", ">": ">"}


def render_formula(sp: SuperPatternInstantiation) -> str:
    """Conditional-probability reading with slugged predicate names.

    A "can" qualifier prefixes the formula with the possibility sign and is
    evaluated existentially (at least one witnessing pair).
    """
    s, o, r = slug(sp.subject.label), slug(sp.object.label), sp.relation.name
    if sp.universal:
        exists = f"∃z( {o}(z) ∧ {r}(y,z) )"
        given = f"{s}(y)"
    else:
        c = slug(sp.context.label)
        exists = f"∃z( {o}(z) ∧ in-context(z,x) ∧ {r}(y,z) )"
        given = f"{s}(y) ∧ {c}(x) ∧ in-context(y,x)"
    comparison = _COMPARISON_TEXT[sp.qualifier.comparison]
    body = f"P( {exists} | {given} ) {comparison} {_threshold_text(sp.qualifier.threshold)}"
    return f"◇ {body}" if sp.qualifier.can_modality else body


# ---------------------------------------------------------------------------
# RDF mapping
# ---------------------------------------------------------------------------

def emit_assertion(sp: SuperPatternInstantiation, graph: str) -> tuple[Quad, ...]:
    """The five slot quads, stated about the assertion graph itself."""
    g = Iri(graph)
    context_iri = vocab.UNIVERSAL_CONTEXT_IRI if sp.universal else sp.context.iri
    return (
        Quad(g, Iri(vocab.HAS_CONTEXT_CLASS), Iri(context_iri), g),
        Quad(g, Iri(vocab.HAS_SUBJECT_CLASS), Iri(sp.subject.iri), g),
        Quad(g, Iri(vocab.HAS_QUALIFIER), Iri(sp.qualifier.iri), g),
        Quad(g, Iri(vocab.HAS_RELATION), Iri(sp.relation.iri), g),
        Quad(g, Iri(vocab.HAS_OBJECT_CLASS), Iri(sp.object.iri), g),
    )


def class_label_quads(sp: SuperPatternInstantiation, graph: str) -> tuple[Quad, ...]:
    """Companion rdfs:label quads so rendered views keep the human labels."""
    g = Iri(graph)
    return tuple(Quad(Iri(ref.iri), Iri(vocab.RDFS_LABEL), Literal(ref.label), g)
                 for ref in sp.class_refs())


def _as_quads(fragment: Iterable[Quad] | Dataset) -> tuple[Quad, ...]:
    return tuple(fragment.quads if isinstance(fragment, Dataset) else fragment)


def _find_label(quads: tuple[Quad, ...], iri: str) -> str:
    for q in quads:
        if (q.subject == Iri(iri) and q.predicate.value == vocab.RDFS_LABEL
                and isinstance(q.object, Literal)):
            return q.object.form
    return derive_label(iri)


def parse_assertion(fragment: Iterable[Quad] | Dataset) -> SuperPatternInstantiation:
    """Inverse of :func:`emit_assertion`.

    The fragment must hold exactly one claim statement; labels are taken
    from accompanying rdfs:label quads when present and derived from the
    IRIs otherwise.
    """
    quads = _as_quads(fragment)
    slot_predicates = set(vocab.SLOT_PREDICATES.values())
    statements: dict[Term, dict[str, list[str]]] = {}
    for q in quads:
        if q.predicate.value in slot_predicates and isinstance(q.object, Iri):
            statements.setdefault(q.subject, {}).setdefault(
                q.predicate.value, []).append(q.object.value)
    if len(statements) > 1:
        raise MultipleInstantiations(f"{len(statements)} claim statements in one fragment")
    if not statements:
        raise MissingSlot("subject")
    slots = next(iter(statements.values()))

    values: dict[str, str] = {}
    for name, predicate in vocab.SLOT_PREDICATES.items():
        found = slots.get(predicate, [])
        if not found:
            raise MissingSlot(name)
        if len(found) > 1:
            raise MultipleInstantiations(f"slot {name!r} filled {len(found)} times")
        values[name] = found[0]

    context_iri = values["context"]
    context: ClassRef | UniversalContext
    if context_iri == vocab.UNIVERSAL_CONTEXT_IRI:
        context = UNIVERSAL
    else:
        context = ClassRef(context_iri, _find_label(quads, context_iri))
    return SuperPatternInstantiation(
        context=context,
        subject=ClassRef(values["subject"], _find_label(quads, values["subject"])),
        qualifier=Qualifier.from_iri(values["qualifier"]),
        relation=relation_from_iri(values["relation"]),
        object=ClassRef(values["object"], _find_label(quads, values["object"])),
    )


@dataclass(frozen=True)
class ClassDefinition:
    """A newly minted class: label, prose definition, super-class, related IRIs."""

    iri: str
    label: str
    definition: str
    super_class: str
    related: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.label:
            raise InvalidInstantiation("class label must not be empty")
        if not self.definition:
            raise InvalidInstantiation("class definition must not be empty")
        if not is_absolute_iri(self.super_class):
            raise InvalidInstantiation(f"super-class IRI must be absolute: {self.super_class!r}")


def emit_class_definition(cd: ClassDefinition, graph: str) -> tuple[Quad, ...]:
    g = Iri(graph)
    subject = Iri(cd.iri)
    quads = [
        Quad(subject, Iri(vocab.RDF_TYPE), Iri(vocab.OWL_CLASS), g),
        Quad(subject, Iri(vocab.RDFS_SUBCLASSOF), Iri(cd.super_class), g),
        Quad(subject, Iri(vocab.RDFS_LABEL), Literal(cd.label), g),
        Quad(subject, Iri(vocab.SKOS_DEFINITION), Literal(cd.definition), g),
    ]
    quads += [Quad(subject, Iri(vocab.SKOS_RELATED_MATCH), Iri(r), g) for r in cd.related]
    return tuple(quads)


def parse_class_definition(fragment: Iterable[Quad] | Dataset) -> ClassDefinition:
    """Inverse of :func:`emit_class_definition`; related IRIs come back sorted."""
    quads = _as_quads(fragment)
    subjects = [q.subject for q in quads
                if q.predicate.value == vocab.RDF_TYPE and q.object == Iri(vocab.OWL_CLASS)]
    if not subjects:
        raise MissingSlot("class")
    if len(subjects) > 1:
        raise MultipleInstantiations(f"{len(subjects)} class definitions in one fragment")
    subject = subjects[0]
    if not isinstance(subject, Iri):
        raise InvalidInstantiation("minted class must be named by an IRI")

    label: str | None = None
    definition: str | None = None
    super_class: str | None = None
    related: list[str] = []
    for q in quads:
        if q.subject != subject:
            continue
        if q.predicate.value == vocab.RDFS_LABEL and isinstance(q.object, Literal):
            label = q.object.form
        elif q.predicate.value == vocab.SKOS_DEFINITION and isinstance(q.object, Literal):
            definition = q.object.form
        elif q.predicate.value == vocab.RDFS_SUBCLASSOF and isinstance(q.object, Iri):
            super_class = q.object.value
        elif q.predicate.value == vocab.SKOS_RELATED_MATCH and isinstance(q.object, Iri):
            related.append(q.object.value)
    if label is None:
        raise MissingSlot("label")
    if definition is None:
        raise MissingSlot("definition")
    if super_class is None:
        raise MissingSlot("super_class")
    return ClassDefinition(subject.value, label, definition, super_class,
                           tuple(sorted(related)))


def mint_fragment(label: str) -> str:
    """Fragment identifier for a newly minted class: spaces become hyphens,
    anything outside [A-Za-z0-9_-] is dropped."""
    frag = re.sub(r"\s+", "-", label.strip())
    frag = re.sub(r"[^A-Za-z0-9_\-]", "", frag)
    if not frag:
        raise InvalidInstantiation(f"label {label!r} yields an empty fragment name")
    return frag


def formalization_provenance(sp_graph: str, source_paper: str,
                             quoted_phrase: str | None = None) -> tuple[Quad, ...]:
    """Provenance for a claim: the assertion was produced by a formalization
    activity that used the source publication, optionally quoting the exact
    phrase that was formalized."""
    if not is_absolute_iri(source_paper):
        raise InvalidInstantiation(f"source IRI must be absolute: {source_paper!r}")
    base = strip_fragment(sp_graph)
    prov_graph = Iri(f"{base}#provenance")
    activity = Iri(f"{base}#activity")
    quads = [
        Quad(Iri(sp_graph), Iri(vocab.PROV_WAS_GENERATED_BY), activity, prov_graph),
        Quad(activity, Iri(vocab.RDF_TYPE), Iri(vocab.FORMALIZATION_ACTIVITY), prov_graph),
        Quad(activity, Iri(vocab.PROV_USED), Iri(source_paper), prov_graph),
    ]
    if quoted_phrase is not None:
        quads.append(Quad(activity, Iri(vocab.QUOTED_PHRASE),
                          Literal(quoted_phrase), prov_graph))
    return tuple(quads)


def parse_formalization_provenance(fragment: Iterable[Quad] | Dataset,
                                   sp_graph: str) -> tuple[str | None, str | None]:
    """Best-effort extraction of (source IRI, quoted phrase) from provenance."""
    quads = _as_quads(fragment)
    activity = None
    for q in quads:
        if q.subject == Iri(sp_graph) and q.predicate.value == vocab.PROV_WAS_GENERATED_BY:
            activity = q.object
    if activity is None:
        return None, None
    source = quote = None
    for q in quads:
        if q.subject != activity:
            continue
        if q.predicate.value == vocab.PROV_USED and isinstance(q.object, Iri):
            source = q.object.value
        elif q.predicate.value == vocab.QUOTED_PHRASE and isinstance(q.object, Literal):
            quote = q.object.form
    return source, quote


# ---------------------------------------------------------------------------
# Bundled reference corpus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SlotRecord:
    """One class slot in the corpus manifest, with its minting provenance."""

    label: str
    iri: str | None
    minted: str  # nanopub | wikidata-new | wikidata | external | universal

    def class_ref(self) -> ClassRef | UniversalContext:
        if self.minted == "universal":
            return UNIVERSAL
        return ClassRef(self.iri, self.label)


@dataclass(frozen=True)
class CorpusEntry:
    number: int
    own_claim: bool
    context: SlotRecord
    subject: SlotRecord
    object: SlotRecord
    qualifier: str
    relation: str
    fixture: str

    def instantiation(self) -> SuperPatternInstantiation:
        return SuperPatternInstantiation(
            context=self.context.class_ref(),
            subject=self.subject.class_ref(),
            qualifier=Qualifier.from_string(self.qualifier),
            relation=relation(self.relation),
            object=self.object.class_ref(),
        )


def _corpus_dir():
    return resources.files("formalpub.data").joinpath("corpus")


def load_corpus() -> list[CorpusEntry]:
    """The bundled 15-claim reference corpus, one entry per submission."""
    raw = json.loads(_corpus_dir().joinpath("manifest.json").read_text("utf-8"))

    def slot(rec: dict) -> SlotRecord:
        return SlotRecord(rec.get("label", "(no context class)"),
                          rec.get("iri"), rec["minted"])

    return [CorpusEntry(
        number=e["submission"],
        own_claim=e["own_claim"],
        context=slot(e["context"]),
        subject=slot(e["subject"]),
        object=slot(e["object"]),
        qualifier=e["qualifier"],
        relation=e["relation"],
        fixture=e["fixture"],
    ) for e in raw["entries"]]


def corpus_venue() -> str:
    raw = json.loads(_corpus_dir().joinpath("manifest.json").read_text("utf-8"))
    return raw["venue"]


def load_corpus_fixture(entry: CorpusEntry) -> str:
    return _corpus_dir().joinpath(entry.fixture).read_text("utf-8")
