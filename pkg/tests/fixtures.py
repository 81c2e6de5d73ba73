"""Shared TriG fixtures: the canonical assertion shapes the engine handles."""

PREFIX_HEADER = """\
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix skos: <http://www.w3.org/2004/02/skos/core#> .
@prefix wd: <http://www.wikidata.org/entity/> .
@prefix pso: <http://purl.org/spar/pso/> .
@prefix frbr: <http://purl.org/vocab/frbr/core#> .
@prefix dct: <http://purl.org/dc/terms/> .
@prefix lfr: <https://w3id.org/linkflows/reviewing/> .
@prefix sp: <https://w3id.org/linkflows/superpattern/> .
@prefix fpsi: <https://w3id.org/fpsi/> .
"""

# Class definition assertion, wrapped in one named graph.
CLASS_DEFINITION_GRAPH = PREFIX_HEADER + """\
@prefix sub: <http://purl.org/np/RA_uqYtoBEELzYKz7H3Yqp9L_sHdU-kgL8R5EqmBsTVzE#> .

sub:assertion {
  sub:STX1B-mutation a owl:Class ;
    rdfs:subClassOf wd:Q42918 ;
    rdfs:label "STX1B mutation" ;
    skos:definition "mutation in STX1B" ;
    skos:relatedMatch wd:Q18048867 .
}
"""

SUBMISSION_GRAPH = PREFIX_HEADER + """\
@prefix sub: <http://purl.org/np/RAWI_6Wpnnvn5scKXazYTqMftavW-HW9S-Alqlh1lf6Eo#> .

sub:assertion {
  <http://purl.org/np/RAGo62Hb_Bx1klF4pn1q1Ty40860e3A7Sz4hr2vojZ2wA>
    pso:withStatus pso:submitted ;
    frbr:partOf fpsi:DataScienceSpecialIssue .
}
"""

REVIEW_GRAPH = PREFIX_HEADER + """\
@prefix sub: <http://purl.org/np/RAio--7IbPa3_ZSG3GspUsXeWP2ZwMIzy4Kzos0yZ7NIw#> .

sub:assertion {
  sub:comment a lfr:ReviewComment , lfr:ContentComment , lfr:NeutralComment ,
      lfr:SuggestionComment ;
    lfr:hasCommentText "Maybe the use of a causal relation like \\"contributes to\\" can also be used here." ;
    lfr:hasImpact "1" ;
    lfr:refersTo <http://purl.org/np/RAGo62Hb_Bx1klF4pn1q1Ty40860e3A7Sz4hr2vojZ2wA> ;
    lfr:refersToMentioningOf sp:hasRelation .
}
"""

RESPONSE_GRAPH = PREFIX_HEADER + """\
@prefix sub: <http://purl.org/np/RAAgR5ZKIIvujTwNwwxr6-bsjF1GXk_W7Zx7qxEeLrOX0#> .

sub:assertion {
  sub:comment a lfr:ResponseComment , lfr:DisagreementComment ,
      lfr:PointNotAddressedComment ;
    lfr:hasCommentText "I don't think the original publication shows a causal relationship. It seems to me only a correlation is proven." ;
    lfr:isResponseTo <http://purl.org/np/RAio--7IbPa3_ZSG3GspUsXeWP2ZwMIzy4Kzos0yZ7NIw> ;
    lfr:refersTo <http://purl.org/np/RAeRSya2qIYymsBxiqOZP_oaQpHXUVXiydKvPCFM-7DDQ> .
}
"""

DECISION_GRAPH = PREFIX_HEADER + """\
@prefix sub: <http://purl.org/np/RAKNnwB9sUaOdqUz3vk6FvIY8ckt5NsEn3scZb0MLux00#> .

sub:assertion {
  <http://purl.org/np/RAeRSya2qIYymsBxiqOZP_oaQpHXUVXiydKvPCFM-7DDQ>
    dct:description "All review comments were addressed and the formalization looks good." ;
    pso:withStatus pso:accepted-for-publication ;
    frbr:partOf fpsi:DataScienceSpecialIssue .
}
"""

ALL_GRAPHS = [CLASS_DEFINITION_GRAPH, SUBMISSION_GRAPH, REVIEW_GRAPH,
              RESPONSE_GRAPH, DECISION_GRAPH]
