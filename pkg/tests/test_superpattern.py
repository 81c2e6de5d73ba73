import itertools
from fractions import Fraction

import pytest

from formalpub import vocab
from formalpub.nanopub import Nanopublication, validate
from formalpub.rdf import Iri, Literal, Quad, parse_trig
from formalpub.superpattern import (UNIVERSAL, ClassDefinition, ClassRef, InvalidInstantiation,
                                    MissingSlot, MultipleInstantiations, Qualifier,
                                    SuperPatternInstantiation, UnknownQualifier,
                                    UnknownRelation, all_qualifiers, class_label_quads,
                                    derive_label, emit_assertion, emit_class_definition,
                                    formalization_provenance, load_corpus,
                                    load_corpus_fixture, mint_fragment, parse_assertion,
                                    parse_class_definition, parse_formalization_provenance,
                                    relation, relation_from_iri, render_formula,
                                    render_sentence)
from formalpub.trusty import verify

GRAPH = "urn:np:temp#assertion"


def make_sp(qualifier="generally", rel="affects", universal=False):
    return SuperPatternInstantiation(
        context=UNIVERSAL if universal else ClassRef("http://example.org/ctx", "test context"),
        subject=ClassRef("http://example.org/subj", "test subject"),
        qualifier=Qualifier.from_string(qualifier),
        relation=relation(rel),
        object=ClassRef("http://example.org/obj", "test object"))


def row14():
    return SuperPatternInstantiation(
        context=ClassRef("http://www.wikidata.org/entity/Q5", "human"),
        subject=ClassRef(
            "http://purl.org/np/RAPVWYH0x-xyDa9PfBcGUFly3m1FNEO43KG9s0uH-y6yo#STX1B-mutation",
            "STX1B mutation"),
        qualifier=Qualifier("frequently"),
        relation=relation("co-occurs-with"),
        object=ClassRef("http://www.wikidata.org/entity/Q41571", "epilepsy"))


class TestQualifier:
    def test_display_forms(self):
        assert str(Qualifier("generally")) == "generally"
        assert str(Qualifier("generally", can_modality=True)) == "can generally"

    def test_never_cannot_take_can(self):
        with pytest.raises(InvalidInstantiation):
            Qualifier("never", can_modality=True)
        with pytest.raises(InvalidInstantiation):
            Qualifier("always", can_modality=True)

    def test_unknown_base(self):
        with pytest.raises(UnknownQualifier):
            Qualifier("rarely")

    def test_from_string_round_trip(self):
        for q in all_qualifiers():
            assert Qualifier.from_string(str(q)) == q

    def test_iri_round_trip(self):
        for q in all_qualifiers():
            assert Qualifier.from_iri(q.iri) == q

    def test_threshold_monotonicity(self):
        thresholds = [Qualifier(b).threshold
                      for b in ("always", "generally", "mostly", "frequently", "sometimes")]
        assert thresholds == sorted(thresholds, reverse=True)
        assert Qualifier("always").threshold == 1
        assert Qualifier("generally").threshold == Fraction(9, 10)
        assert Qualifier("never").threshold == 0
        assert Qualifier("never").comparison == "="
        # "sometimes" accepts strictly positive probabilities only
        assert Qualifier("sometimes").threshold == 0
        assert Qualifier("sometimes").comparison == ">"


class TestModel:
    def test_subject_object_must_differ(self):
        same = ClassRef("http://example.org/x", "x")
        with pytest.raises(InvalidInstantiation):
            SuperPatternInstantiation(context=UNIVERSAL, subject=same,
                                      qualifier=Qualifier("generally"),
                                      relation=relation("affects"), object=same)
        # symmetric relations may mention the same class twice
        SuperPatternInstantiation(context=UNIVERSAL, subject=same,
                                  qualifier=Qualifier("generally"),
                                  relation=relation("is-same-as"), object=same)

    def test_class_ref_identity_is_the_iri(self):
        a = ClassRef("http://example.org/x", "one label")
        b = ClassRef("http://example.org/x", "another label")
        assert a == b

    def test_unknown_relation(self):
        with pytest.raises(UnknownRelation):
            relation("prevents")
        with pytest.raises(UnknownRelation):
            relation_from_iri("http://example.org/not-a-relation")

    def test_derive_label(self):
        assert derive_label("http://x/np#STX1B-mutation") == "STX1B mutation"
        assert derive_label("http://www.wikidata.org/entity/Q41571") == "Q41571"

    def test_mint_fragment(self):
        assert mint_fragment("STX1B mutation") == "STX1B-mutation"
        assert mint_fragment("patient undergoing PCI!") == "patient-undergoing-PCI"
        with pytest.raises(InvalidInstantiation):
            mint_fragment("***")


class TestRendering:
    def test_row14_sentence_exact(self):
        assert render_sentence(row14()) == (
            "Every thing of type 'STX1B mutation' that is in the context of a thing of "
            "type 'human' frequently has a relation of type 'co-occurs with' to a thing "
            "of type 'epilepsy' that is in the same context.")

    def test_row1_sentence_contains_qualifier_and_relation(self):
        sp = SuperPatternInstantiation(
            context=ClassRef("http://example.org/c", "early human adipogenesis"),
            subject=ClassRef("http://example.org/s",
                             "regulatory element within the first intron of FTO"),
            qualifier=Qualifier("generally"),
            relation=relation("affects"),
            object=ClassRef("http://example.org/o", "expression of genes IRX3 and IRX5"))
        assert "generally has a relation of type 'affects'" in render_sentence(sp)

    def test_universal_sentence_drops_context_clauses(self):
        sp = SuperPatternInstantiation(
            context=UNIVERSAL,
            subject=ClassRef("http://www.wikidata.org/entity/Q109406970",
                             "genes associated with CAKUT"),
            qualifier=Qualifier("sometimes"),
            relation=relation("is-same-as"),
            object=ClassRef("http://www.wikidata.org/entity/Q109406949",
                            "targets of vitamin A"))
        assert render_sentence(sp) == (
            "Every thing of type 'genes associated with CAKUT' sometimes has a relation "
            "of type 'is same as' to a thing of type 'targets of vitamin A'.")

    def test_sentence_contains_labels_verbatim(self):
        for q, rel in itertools.product(all_qualifiers(), sorted(vocab.RELATION_IRIS)):
            sp = make_sp(str(q), rel)
            sentence = render_sentence(sp)
            assert sentence.startswith("Every thing of type 'test subject'")
            assert f"'{sp.object.label}'" in sentence
            assert f" {q} has a relation of type " in sentence

    def test_sentence_always_matches_the_template(self):
        import re
        contextful = re.compile(
            r"^Every thing of type '(?P<subject>.+)' that is in the context of a thing "
            r"of type '(?P<context>.+)' (?P<qualifier>[a-z ]+) has a relation of type "
            r"'(?P<relation>[a-z -]+)' to a thing of type '(?P<object>.+)' that is in "
            r"the same context\.$")
        universal = re.compile(
            r"^Every thing of type '(?P<subject>.+)' (?P<qualifier>[a-z ]+) has a "
            r"relation of type '(?P<relation>[a-z -]+)' to a thing of type "
            r"'(?P<object>.+)'\.$")
        for q, rel in itertools.product(all_qualifiers(), sorted(vocab.RELATION_IRIS)):
            for is_universal in (False, True):
                sp = make_sp(str(q), rel, universal=is_universal)
                pattern = universal if is_universal else contextful
                match = pattern.match(render_sentence(sp))
                assert match, render_sentence(sp)
                assert match.group("subject") == sp.subject.label
                assert match.group("object") == sp.object.label
                assert match.group("qualifier") == str(sp.qualifier)
                assert match.group("relation") == str(sp.relation)

    def test_formula_pgp_example(self):
        sp = SuperPatternInstantiation(
            context=ClassRef("http://example.org/c", "rat brain endothelial cell"),
            subject=ClassRef("http://example.org/s", "transient oxidative stress"),
            qualifier=Qualifier("generally"),
            relation=relation("affects"),
            object=ClassRef("http://example.org/o", "Pgp expression"))
        formula = render_formula(sp)
        assert formula == ("P( ∃z( pgp-expression(z) ∧ in-context(z,x) ∧ "
                           "affects(y,z) ) | transient-oxidative-stress(y) ∧ "
                           "rat-brain-endothelial-cell(x) ∧ in-context(y,x) ) "
                           "≥ 0.9")
        assert "≥ 0.9" in formula

    def test_formula_never_and_always(self):
        assert render_formula(make_sp("never")).endswith("= 0")
        assert render_formula(make_sp("always")).endswith("= 1")

    def test_formula_can_prefix_and_universal(self):
        formula = render_formula(make_sp("can generally", universal=True))
        assert formula.startswith("◇ P( ")
        assert "in-context" not in formula


class TestAssertionMapping:
    def test_row14_emits_five_quads(self):
        quads = emit_assertion(row14(), GRAPH)
        assert len(quads) == 5
        assert {q.predicate.value for q in quads} == set(vocab.SLOT_PREDICATES.values())
        assert all(q.subject == Iri(GRAPH) and q.graph == Iri(GRAPH) for q in quads)

    def test_universal_context_is_explicit(self):
        quads = emit_assertion(make_sp(universal=True), GRAPH)
        assert len(quads) == 5
        assert Quad(Iri(GRAPH), Iri(vocab.HAS_CONTEXT_CLASS),
                    Iri(vocab.UNIVERSAL_CONTEXT_IRI), Iri(GRAPH)) in quads

    def test_emit_parse_identity(self):
        sp = row14()
        assert parse_assertion(emit_assertion(sp, GRAPH)) == sp

    def test_labels_recovered_when_present(self):
        sp = row14()
        fragment = emit_assertion(sp, GRAPH) + class_label_quads(sp, GRAPH)
        parsed = parse_assertion(fragment)
        assert parsed.subject.label == "STX1B mutation"
        assert parsed.object.label == "epilepsy"
        assert parsed.context.label == "human"

    def test_full_grid_round_trips(self):
        for q, rel in itertools.product(all_qualifiers(), sorted(vocab.RELATION_IRIS)):
            sp = make_sp(str(q), rel)
            assert parse_assertion(emit_assertion(sp, GRAPH)) == sp

    def test_missing_slot(self):
        quads = [q for q in emit_assertion(row14(), GRAPH)
                 if q.predicate.value != vocab.HAS_QUALIFIER]
        with pytest.raises(MissingSlot) as err:
            parse_assertion(quads)
        assert err.value.slot == "qualifier"

    def test_unknown_qualifier_iri(self):
        quads = [Quad(q.subject, q.predicate,
                      Iri("http://example.org/bogus") if q.predicate.value == vocab.HAS_QUALIFIER
                      else q.object, q.graph)
                 for q in emit_assertion(row14(), GRAPH)]
        with pytest.raises(UnknownQualifier):
            parse_assertion(quads)

    def test_unknown_relation_iri(self):
        quads = [Quad(q.subject, q.predicate,
                      Iri("http://example.org/bogus") if q.predicate.value == vocab.HAS_RELATION
                      else q.object, q.graph)
                 for q in emit_assertion(row14(), GRAPH)]
        with pytest.raises(UnknownRelation):
            parse_assertion(quads)

    def test_multiple_instantiations(self):
        fragment = (emit_assertion(row14(), GRAPH)
                    + emit_assertion(make_sp(), "urn:np:temp#assertion2"))
        with pytest.raises(MultipleInstantiations):
            parse_assertion(fragment)


class TestClassDefinition:
    def stx1b(self):
        return ClassDefinition(
            "urn:np:temp#STX1B-mutation", "STX1B mutation", "mutation in STX1B",
            "http://www.wikidata.org/entity/Q42918",
            ("http://www.wikidata.org/entity/Q18048867",))

    def test_emits_the_five_quad_fragment(self):
        quads = emit_class_definition(self.stx1b(), GRAPH)
        assert len(quads) == 5
        expected = parse_trig("""\
@prefix sub: <urn:np:temp#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix skos: <http://www.w3.org/2004/02/skos/core#> .
@prefix wd: <http://www.wikidata.org/entity/> .

sub:assertion {
  sub:STX1B-mutation a owl:Class ;
    rdfs:subClassOf wd:Q42918 ;
    rdfs:label "STX1B mutation" ;
    skos:definition "mutation in STX1B" ;
    skos:relatedMatch wd:Q18048867 .
}
""")
        assert set(quads) == set(expected.quads)

    def test_empty_related_gives_four_quads(self):
        cd = ClassDefinition("urn:np:temp#x", "x", "an x", "http://example.org/super")
        assert len(emit_class_definition(cd, GRAPH)) == 4

    def test_synthetic_round_trips(self):
        import random
        rng = random.Random(34)
        for i in range(34):
            related = tuple(sorted(f"http://example.org/rel/{rng.randrange(100)}"
                                   for _ in range(rng.randrange(4))))
            cd = ClassDefinition(f"urn:np:temp#class-{i}", f"class {i}",
                                 f"definition of class {i}",
                                 f"http://example.org/super/{i}", related)
            assert parse_class_definition(emit_class_definition(cd, GRAPH)) == cd

    def test_missing_definition(self):
        quads = [q for q in emit_class_definition(self.stx1b(), GRAPH)
                 if q.predicate.value != vocab.SKOS_DEFINITION]
        with pytest.raises(MissingSlot):
            parse_class_definition(quads)


class TestFormalizationProvenance:
    def test_with_quote(self):
        quads = formalization_provenance(GRAPH, "https://doi.org/10.1000/example",
                                         "the exact phrase")
        assert len(quads) == 4
        assert any(isinstance(q.object, Literal) and q.object.form == "the exact phrase"
                   for q in quads)

    def test_without_quote(self):
        quads = formalization_provenance(GRAPH, "https://doi.org/10.1000/example")
        assert len(quads) == 3
        assert not any(q.predicate.value == vocab.QUOTED_PHRASE for q in quads)

    def test_subject_is_assertion_graph(self):
        quads = formalization_provenance(GRAPH, "https://doi.org/10.1000/example")
        assert quads[0].subject == Iri(GRAPH)

    def test_round_trip(self):
        quads = formalization_provenance(GRAPH, "https://doi.org/10.1000/example", "phrase")
        assert parse_formalization_provenance(quads, GRAPH) == (
            "https://doi.org/10.1000/example", "phrase")


class TestCorpus:
    def test_fifteen_entries(self):
        assert len(load_corpus()) == 15

    def test_qualifier_tally(self):
        tally = {}
        for entry in load_corpus():
            tally[entry.qualifier] = tally.get(entry.qualifier, 0) + 1
        assert tally == {"generally": 7, "can generally": 3, "sometimes": 1,
                         "mostly": 1, "always": 1, "never": 1, "frequently": 1}

    def test_relation_tally(self):
        tally = {}
        for entry in load_corpus():
            tally[entry.relation] = tally.get(entry.relation, 0) + 1
        assert tally == {"affects": 4, "contributes-to": 2, "is-same-as": 2,
                         "enables": 2, "inhibits": 2, "is-caused-by": 1,
                         "increases": 1, "co-occurs-with": 1}

    def test_minting_markers(self):
        minted = [slot.minted for entry in load_corpus()
                  for slot in (entry.context, entry.subject, entry.object)]
        assert minted.count("nanopub") == 22
        assert minted.count("wikidata-new") == 4
        assert minted.count("universal") == 1
        assert minted.count("external") == 4

    def test_own_claim_flags(self):
        assert sum(1 for e in load_corpus() if e.own_claim) == 7

    def test_fixtures_validate_verify_and_parse(self):
        for entry in load_corpus():
            d = parse_trig(load_corpus_fixture(entry))
            np = Nanopublication.from_dataset(d)
            assert validate(np) == []
            assert verify(d)
            parsed = parse_assertion(np.assertion())
            assert parsed == entry.instantiation()
            # label quads keep the display labels intact
            assert parsed.subject.label == entry.subject.label
            assert parsed.object.label == entry.object.label

    def test_corpus_emit_parse_round_trip(self):
        for entry in load_corpus():
            sp = entry.instantiation()
            assert parse_assertion(emit_assertion(sp, GRAPH)) == sp
