"""Content-hash identifiers that make nanopublications immutable.

The scheme: every occurrence of the publication's own IRI (including as a
prefix of its fragment IRIs) is replaced by a single-space placeholder, the
result is canonically serialized, SHA-256 hashed, and the digest is
base64url-encoded without padding and prefixed with ``RA``. Because the
self-reference is masked before hashing, the code is independent of which
IRI the publication happens to use for itself, which is what makes
:func:`finalize` a fixed point.

The identifiers deliberately look like ``http://purl.org/np/RA...`` but make
no claim of wire compatibility with any deployed hashing scheme.
"""

from __future__ import annotations

import base64
import hashlib
import re

from .errors import VerificationError
from .rdf import Dataset, Iri, Literal, Quad, serialize_canonical

PLACEHOLDER = " "
CODE_BASE = "http://purl.org/np/"
CODE_RE = re.compile(r"^RA[A-Za-z0-9_-]{43}$")
_STEM_RE = re.compile(r"^(http://purl\.org/np/RA[A-Za-z0-9_-]{43})(#.*)?$")


class SelfIriNotFound(VerificationError):
    """The given self IRI occurs nowhere in the dataset."""


class NoTrustyIri(VerificationError):
    """No graph IRI carries an embedded artifact code."""


def _rewrite_term(term, old: str, new: str):
    if isinstance(term, Iri) and old in term.value:
        return Iri(term.value.replace(old, new))
    if isinstance(term, Literal):
        form = term.form.replace(old, new) if old in term.form else term.form
        dt = term.datatype
        if dt is not None and old in dt:
            dt = dt.replace(old, new)
        if form is not term.form or dt is not term.datatype:
            return Literal(form, datatype=dt, language=term.language)
    return term


def rewrite(d: Dataset, old: str, new: str) -> Dataset:
    """Replace every occurrence of ``old`` in IRI and literal strings."""
    quads = [
        Quad(
            _rewrite_term(q.subject, old, new),
            _rewrite_term(q.predicate, old, new),
            _rewrite_term(q.object, old, new),
            _rewrite_term(q.graph, old, new),
        )
        for q in d.quads
    ]
    prefixes = {pfx: iri.replace(old, new) for pfx, iri in d.prefixes.items()}
    return Dataset(quads, prefixes)


def _occurs(d: Dataset, self_iri: str) -> bool:
    for q in d.quads:
        for term in (q.subject, q.predicate, q.object, q.graph):
            if isinstance(term, Iri) and self_iri in term.value:
                return True
            if isinstance(term, Literal) and (
                    self_iri in term.form or (term.datatype and self_iri in term.datatype)):
                return True
    return False


def compute_code(d: Dataset, self_iri: str) -> str:
    """Artifact code of ``d`` relative to its own IRI.

    Pure function of the quad set: quad order, prefix maps, and the concrete
    self IRI spelling do not affect the result.
    """
    if not _occurs(d, self_iri):
        raise SelfIriNotFound(f"<{self_iri}> occurs nowhere in the dataset")
    masked = rewrite(d, self_iri, PLACEHOLDER)
    digest = hashlib.sha256(serialize_canonical(masked).encode("utf-8")).digest()
    return "RA" + base64.urlsafe_b64encode(digest).decode("ascii").rstrip("=")


def finalize(d: Dataset, temp_iri: str) -> tuple[Dataset, str]:
    """Rewrite ``temp_iri`` to its content-derived permanent IRI.

    Fragments are preserved (``temp#x`` becomes ``final#x``). Recomputing
    the code on the result with the final IRI yields the same code, and a
    second application is the identity.
    """
    code = compute_code(d, temp_iri)
    final_iri = CODE_BASE + code
    return rewrite(d, temp_iri, final_iri), code


def _stems(d: Dataset) -> set[str]:
    return {m.group(1) for g in d.graph_names() if (m := _STEM_RE.match(g))}


def embedded_code(d: Dataset) -> str:
    """Extract the artifact code shared by the dataset's graph IRIs."""
    stems = _stems(d)
    if not stems:
        raise NoTrustyIri("no graph IRI carries an artifact code")
    if len(stems) > 1:
        raise NoTrustyIri(f"graph IRIs disagree on the artifact code: {sorted(stems)}")
    return stems.pop()[len(CODE_BASE):]


def verify(d: Dataset) -> bool:
    """True iff the code recomputed from the content matches the embedded one.

    Raises :class:`NoTrustyIri` when no graph IRI carries a code at all;
    tampered datasets (disagreeing stems, self IRI edited away, content
    drift) simply return False.
    """
    stems = _stems(d)
    if not stems:
        raise NoTrustyIri("no graph IRI carries an artifact code")
    if len(stems) > 1:
        return False
    stem = stems.pop()
    try:
        return compute_code(d, stem) == stem[len(CODE_BASE):]
    except SelfIriNotFound:
        return False


def is_trusty_iri(iri: str) -> bool:
    return _STEM_RE.match(iri) is not None
