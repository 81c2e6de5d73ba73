"""Semantic publishing engine for formalized scientific claims.

Claims are expressed as five-slot super-pattern instantiations (context,
subject, qualifier, relation, object) inside immutable, content-addressed
nanopublications, and the whole journal workflow around them (submission,
review, response, revision, decision) is itself published as
nanopublications. A registry persists and indexes the corpus; an HTTP
service and the ``fp`` command line drive it.
"""

from .errors import FormalpubError, NotFoundError, ValidationError, VerificationError
from .nanopub import (Finding, Nanopublication, assemble, extract_chain, supersede,
                      validate)
from .rdf import (BlankNode, Dataset, Iri, Literal, Quad, RelativeIriError,
                  TrigSyntaxError, parse_trig, serialize_canonical, serialize_trig)
from .registry import Registry, StatsReport
from .semantics import Evaluation, World, check_conflicts, evaluate
from .superpattern import (ClassDefinition, ClassRef, Qualifier, RelationType,
                           SuperPatternInstantiation, UNIVERSAL, emit_assertion,
                           emit_class_definition, load_corpus, parse_assertion,
                           parse_class_definition, relation, render_formula,
                           render_sentence)
from .trusty import (NoTrustyIri, SelfIriNotFound, compute_code, finalize,
                     is_trusty_iri, verify)
from .workflow import (Decision, ResponseComment, ReviewComment, SubmissionThread,
                       build_thread, check_integrity, thread_status)

__version__ = "0.1.0"
