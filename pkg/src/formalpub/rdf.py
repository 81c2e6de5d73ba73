"""Minimal RDF data model with a TriG-subset parser and deterministic serializers.

The grammar accepted by :func:`parse_trig` is a deliberate subset of TriG:

* ``@prefix pfx: <iri> .`` declarations;
* named graph blocks ``<iri> { ... }`` or ``pfx:name { ... }`` (every triple
  lives in a named graph, there is no default graph);
* triples with ``;`` (predicate) and ``,`` (object) continuations, terminated
  by ``.``;
* terms: ``<IRI>``, prefixed names, ``_:label`` blank nodes, ``"string"``
  literals with optional ``^^datatype`` or ``@lang``, and bare integers as
  sugar for xsd:integer;
* ``#`` comments and the ``a`` keyword for rdf:type.

No collections, no quoted triples, no relative IRIs, no multi-line strings.
Anything outside the subset raises :class:`TrigSyntaxError`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ValidationError

XSD_INTEGER = "http://www.w3.org/2001/XMLSchema#integer"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_BLANK_LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")
_LANG_RE = re.compile(r"^[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*$")
# Local part of a prefixed name. May contain dots inside but not at the end,
# so the statement-terminating "." stays unambiguous.
_PN_LOCAL_RE = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_.\-]*$")
_PREFIX_LABEL_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_\-]*$")
_INTEGER_RE = re.compile(r"^[+-]?[0-9]+$")


class TrigSyntaxError(ValidationError):
    """Any deviation from the TriG subset grammar, with source position."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class RelativeIriError(TrigSyntaxError):
    """An IRI without a scheme was encountered."""


def is_absolute_iri(value: str) -> bool:
    return _SCHEME_RE.match(value) is not None


def strip_fragment(iri: str) -> str:
    return iri.split("#", 1)[0]


@dataclass(frozen=True)
class Iri:
    """An IRI reference.

    Absoluteness is enforced by the parser and by nanopublication
    validation, not here: hashing internals substitute a placeholder
    that is intentionally not a valid IRI.
    """

    value: str


@dataclass(frozen=True)
class Literal:
    form: str
    datatype: str | None = None
    language: str | None = None

    def __post_init__(self):
        if self.datatype is not None and self.language is not None:
            raise ValueError("literal cannot carry both a datatype and a language tag")


@dataclass(frozen=True)
class BlankNode:
    label: str

    def __post_init__(self):
        if not _BLANK_LABEL_RE.match(self.label):
            raise ValueError(f"invalid blank node label: {self.label!r}")


Term = Iri | Literal | BlankNode


@dataclass(frozen=True)
class Quad:
    subject: Term
    predicate: Term
    object: Term
    graph: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise ValueError("quad subject cannot be a literal")
        if not isinstance(self.predicate, Iri):
            raise ValueError("quad predicate must be an IRI")
        if not isinstance(self.graph, Iri):
            raise ValueError("quad graph must be an IRI")


def term_key(term: Term) -> tuple:
    """Total order over terms: Iri < BlankNode < Literal, then lexical form,
    then datatype IRI, then language tag, all compared code-point-wise."""
    if isinstance(term, Iri):
        return (0, term.value, "", "")
    if isinstance(term, BlankNode):
        return (1, term.label, "", "")
    return (2, term.form, term.datatype or "", term.language or "")


def quad_key(q: Quad) -> tuple:
    return (term_key(q.graph), term_key(q.subject), term_key(q.predicate), term_key(q.object))


class Dataset:
    """An ordered, duplicate-free collection of quads plus a prefix map.

    Instances are immutable after construction and safe to share across
    threads. Quads keep first-occurrence order; the prefix map must be
    injective (no two prefixes naming the same IRI) so that prefixed-name
    compaction is unambiguous.
    """

    __slots__ = ("quads", "prefixes")

    def __init__(self, quads=(), prefixes: dict[str, str] | None = None):
        ordered: list[Quad] = []
        seen: set[Quad] = set()
        for q in quads:
            if q not in seen:
                seen.add(q)
                ordered.append(q)
        object.__setattr__(self, "quads", tuple(ordered))
        prefixes = dict(prefixes or {})
        inverse: dict[str, str] = {}
        for pfx, iri in prefixes.items():
            if iri in inverse:
                raise ValueError(f"prefixes {inverse[iri]!r} and {pfx!r} both map to <{iri}>")
            inverse[iri] = pfx
        object.__setattr__(self, "prefixes", prefixes)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Dataset is immutable")

    def __len__(self) -> int:
        return len(self.quads)

    def __iter__(self):
        return iter(self.quads)

    def __contains__(self, quad: Quad) -> bool:
        return quad in set(self.quads)

    def quad_set(self) -> frozenset[Quad]:
        return frozenset(self.quads)

    def graph_names(self) -> tuple[str, ...]:
        names: list[str] = []
        for q in self.quads:
            g = q.graph.value
            if g not in names:
                names.append(g)
        return tuple(names)

    def match(self, subject=None, predicate=None, obj=None, graph=None):
        """Iterate quads matching the given terms; ``None`` matches anything."""
        for q in self.quads:
            if subject is not None and q.subject != subject:
                continue
            if predicate is not None and q.predicate != predicate:
                continue
            if obj is not None and q.object != obj:
                continue
            if graph is not None and q.graph != graph:
                continue
            yield q

    def graph(self, name: str) -> tuple[Quad, ...]:
        return tuple(q for q in self.quads if q.graph.value == name)


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str
    value: str
    line: int
    col: int


_PUNCT = {".": "dot", ";": "semi", ",": "comma", "{": "lbrace", "}": "rbrace"}
_ESCAPES = {"\\": "\\", '"': '"', "n": "\n", "t": "\t", "r": "\r"}


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def _error(self, message: str, line=None, col=None):
        raise TrigSyntaxError(line or self.line, col or self.col, message)

    def _advance(self, n: int = 1):
        for _ in range(n):
            if self.pos < len(self.text) and self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def _peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.text[i] if i < len(self.text) else ""

    def tokens(self) -> list[_Token]:
        out: list[_Token] = []
        while True:
            self._skip_trivia()
            if self.pos >= len(self.text):
                out.append(_Token("eof", "", self.line, self.col))
                return out
            out.append(self._next_token())

    def _skip_trivia(self):
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance()
            else:
                return

    def _next_token(self) -> _Token:
        line, col = self.line, self.col
        ch = self._peek()
        if ch in _PUNCT:
            self._advance()
            return _Token(_PUNCT[ch], ch, line, col)
        if ch == "^":
            if self._peek(1) == "^":
                self._advance(2)
                return _Token("dtmark", "^^", line, col)
            self._error("expected '^^'")
        if ch == "<":
            return self._iriref(line, col)
        if ch == '"':
            return self._string(line, col)
        if ch == "@":
            return self._at_word(line, col)
        if ch == "_" and self._peek(1) == ":":
            return self._blank(line, col)
        if ch.isdigit() or (ch in "+-" and self._peek(1).isdigit()):
            return self._integer(line, col)
        if ch.isalpha():
            return self._name(line, col)
        self._error(f"unexpected character {ch!r}")

    def _iriref(self, line, col) -> _Token:
        self._advance()  # <
        start = self.pos
        while True:
            ch = self._peek()
            if ch == ">":
                value = self.text[start:self.pos]
                self._advance()
                return _Token("iriref", value, line, col)
            if ch == "" or ch == "\n":
                self._error("unterminated IRI", line, col)
            if ch in ' "{}|^`\\<' or ord(ch) < 0x20:
                self._error(f"character {ch!r} not allowed in IRI")
            self._advance()

    def _string(self, line, col) -> _Token:
        self._advance()  # "
        parts: list[str] = []
        while True:
            ch = self._peek()
            if ch == '"':
                self._advance()
                return _Token("string", "".join(parts), line, col)
            if ch == "" or ch == "\n":
                self._error("unterminated string", line, col)
            if ch == "\\":
                esc = self._peek(1)
                if esc not in _ESCAPES:
                    self._error(f"unknown escape \\{esc}")
                parts.append(_ESCAPES[esc])
                self._advance(2)
                continue
            if ord(ch) < 0x20:
                self._error("raw control character in string; use an escape")
            parts.append(ch)
            self._advance()

    def _at_word(self, line, col) -> _Token:
        # Either the @prefix keyword or a language tag.
        rest = self.text[self.pos + 1:]
        if rest.startswith("prefix") and not (len(rest) > 6 and (rest[6].isalnum() or rest[6] == "-")):
            self._advance(7)
            return _Token("prefix_kw", "@prefix", line, col)
        m = re.match(r"[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*", rest)
        if not m:
            self._error("expected '@prefix' or a language tag")
        self._advance(1 + m.end())
        return _Token("langtag", m.group(0), line, col)

    def _blank(self, line, col) -> _Token:
        self._advance(2)  # _:
        start = self.pos
        while self._peek() and (self._peek().isalnum() or self._peek() == "_"):
            self._advance()
        label = self.text[start:self.pos]
        if not label:
            self._error("empty blank node label", line, col)
        return _Token("blank", label, line, col)

    def _integer(self, line, col) -> _Token:
        start = self.pos
        if self._peek() in "+-":
            self._advance()
        while self._peek().isdigit():
            self._advance()
        return _Token("integer", self.text[start:self.pos], line, col)

    def _name(self, line, col) -> _Token:
        # Bare 'a' keyword, or a prefixed name "pfx:" / "pfx:local".
        start = self.pos
        while self._peek() and (self._peek().isalnum() or self._peek() in "_-"):
            self._advance()
        word = self.text[start:self.pos]
        if self._peek() != ":":
            if word == "a":
                return _Token("a", "a", line, col)
            self._error(f"unexpected token {word!r}")
        if not _PREFIX_LABEL_RE.match(word):
            self._error(f"invalid prefix label {word!r}", line, col)
        self._advance()  # :
        lstart = self.pos
        while self._peek() and (self._peek().isalnum() or self._peek() in "_.-"):
            self._advance()
        local = self.text[lstart:self.pos]
        # A trailing dot belongs to the statement, not the name.
        while local.endswith("."):
            local = local[:-1]
            self.pos -= 1
            self.col -= 1
        if not local:
            return _Token("pname_ns", word, line, col)
        if not _PN_LOCAL_RE.match(local):
            self._error(f"invalid local name {local!r}", line, col)
        return _Token("pname", f"{word}:{local}", line, col)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = _Tokenizer(text).tokens()
        self.idx = 0
        self.prefixes: dict[str, str] = {}
        self.quads: list[Quad] = []

    def _peek(self) -> _Token:
        return self.tokens[self.idx]

    def _next(self) -> _Token:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def _expect(self, kind: str, what: str) -> _Token:
        tok = self._next()
        if tok.kind != kind:
            raise TrigSyntaxError(tok.line, tok.col, f"expected {what}, found {tok.value!r}")
        return tok

    def parse(self) -> Dataset:
        while True:
            tok = self._peek()
            if tok.kind == "eof":
                break
            if tok.kind == "prefix_kw":
                self._prefix_decl()
            elif tok.kind in ("iriref", "pname"):
                self._graph_block()
            else:
                raise TrigSyntaxError(
                    tok.line, tok.col,
                    f"expected '@prefix' or a named graph block, found {tok.value!r}")
        try:
            return Dataset(self.quads, self.prefixes)
        except ValueError as exc:
            raise TrigSyntaxError(1, 1, str(exc)) from exc

    def _prefix_decl(self):
        self._next()  # @prefix
        ns = self._expect("pname_ns", "a prefix label like 'ex:'")
        iri_tok = self._expect("iriref", "an IRI")
        if not is_absolute_iri(iri_tok.value):
            raise RelativeIriError(iri_tok.line, iri_tok.col,
                                   f"prefix IRI <{iri_tok.value}> has no scheme")
        self._expect("dot", "'.'")
        existing = self.prefixes.get(ns.value)
        if existing is not None and existing != iri_tok.value:
            raise TrigSyntaxError(ns.line, ns.col,
                                  f"prefix {ns.value!r} redeclared with a different IRI")
        self.prefixes[ns.value] = iri_tok.value

    def _iri_from(self, tok: _Token) -> Iri:
        if tok.kind == "iriref":
            if not is_absolute_iri(tok.value):
                raise RelativeIriError(tok.line, tok.col, f"IRI <{tok.value}> has no scheme")
            return Iri(tok.value)
        if tok.kind == "pname":
            pfx, local = tok.value.split(":", 1)
            if pfx not in self.prefixes:
                raise TrigSyntaxError(tok.line, tok.col, f"undeclared prefix {pfx!r}")
            return Iri(self.prefixes[pfx] + local)
        raise TrigSyntaxError(tok.line, tok.col, f"expected an IRI, found {tok.value!r}")

    def _graph_block(self):
        graph = self._iri_from(self._next())
        self._expect("lbrace", "'{'")
        while True:
            tok = self._peek()
            if tok.kind == "rbrace":
                self._next()
                return
            if tok.kind == "eof":
                raise TrigSyntaxError(tok.line, tok.col, "unterminated graph block")
            self._triples(graph)

    def _triples(self, graph: Iri):
        subject = self._subject()
        while True:
            predicate = self._predicate()
            while True:
                obj = self._object()
                self.quads.append(Quad(subject, predicate, obj, graph))
                if self._peek().kind == "comma":
                    self._next()
                    continue
                break
            tok = self._next()
            if tok.kind == "semi":
                # Tolerate a trailing ';' before '.'
                if self._peek().kind == "dot":
                    self._next()
                    return
                continue
            if tok.kind == "dot":
                return
            raise TrigSyntaxError(tok.line, tok.col, f"expected ';', ',' or '.', found {tok.value!r}")

    def _subject(self) -> Term:
        tok = self._next()
        if tok.kind == "blank":
            return BlankNode(tok.value)
        return self._iri_from(tok)

    def _predicate(self) -> Iri:
        tok = self._next()
        if tok.kind == "a":
            return Iri(RDF_TYPE)
        return self._iri_from(tok)

    def _object(self) -> Term:
        tok = self._next()
        if tok.kind == "blank":
            return BlankNode(tok.value)
        if tok.kind == "integer":
            return Literal(tok.value, datatype=XSD_INTEGER)
        if tok.kind == "string":
            nxt = self._peek()
            if nxt.kind == "dtmark":
                self._next()
                dt = self._iri_from(self._next())
                return Literal(tok.value, datatype=dt.value)
            if nxt.kind == "langtag":
                self._next()
                if not _LANG_RE.match(nxt.value):
                    raise TrigSyntaxError(nxt.line, nxt.col, f"invalid language tag {nxt.value!r}")
                return Literal(tok.value, language=nxt.value)
            return Literal(tok.value)
        return self._iri_from(tok)


def parse_trig(text: str) -> Dataset:
    """Parse a TriG-subset document into a :class:`Dataset`.

    Quads come back in document order with duplicates removed; prefix
    declarations are recorded on the dataset.
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Serializers
# ---------------------------------------------------------------------------

def _escape(form: str) -> str:
    return (form.replace("\\", "\\\\").replace('"', '\\"')
            .replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t"))


def _nq_term(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    body = f'"{_escape(term.form)}"'
    if term.datatype is not None:
        return f"{body}^^<{term.datatype}>"
    if term.language is not None:
        return f"{body}@{term.language}"
    return body


def serialize_canonical(d: Dataset) -> str:
    """Deterministic N-Quads-style serialization used for hashing.

    One quad per line, no prefixes, quads sorted by (graph, subject,
    predicate, object) under :func:`term_key`. Permuting the input quad
    order never changes the output bytes.
    """
    lines = []
    for q in sorted(d.quads, key=quad_key):
        lines.append(f"{_nq_term(q.subject)} {_nq_term(q.predicate)} "
                     f"{_nq_term(q.object)} {_nq_term(q.graph)} .\n")
    return "".join(lines)


def _compact(iri: str, prefixes: dict[str, str]) -> str | None:
    best: tuple[int, str, str] | None = None
    for pfx, ns in prefixes.items():
        if iri.startswith(ns):
            local = iri[len(ns):]
            if local and _PN_LOCAL_RE.match(local) and not local.endswith("."):
                cand = (len(ns), pfx, local)
                if best is None or cand[0] > best[0]:
                    best = cand
    if best is None:
        return None
    return f"{best[1]}:{best[2]}"


def _trig_term(term: Term, prefixes: dict[str, str]) -> str:
    if isinstance(term, Iri):
        return _compact(term.value, prefixes) or f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    if term.datatype == XSD_INTEGER and _INTEGER_RE.match(term.form):
        return term.form
    body = f'"{_escape(term.form)}"'
    if term.datatype is not None:
        dt = _compact(term.datatype, prefixes)
        return f"{body}^^{dt}" if dt else f"{body}^^<{term.datatype}>"
    if term.language is not None:
        return f"{body}@{term.language}"
    return body


def serialize_trig(d: Dataset) -> str:
    """Human-readable TriG in the accepted subset.

    Groups quads per graph (first-occurrence order), then per subject and
    predicate with ``;``/``,`` continuations. ``parse_trig`` of the output
    reproduces the input quad set exactly.
    """
    out: list[str] = []
    for pfx in sorted(d.prefixes):
        out.append(f"@prefix {pfx}: <{d.prefixes[pfx]}> .")
    if d.prefixes:
        out.append("")

    for gname in d.graph_names():
        gterm = _trig_term(Iri(gname), d.prefixes)
        out.append(f"{gterm} {{")
        by_subject: dict[Term, dict[Iri, list[Term]]] = {}
        for q in d.graph(gname):
            by_subject.setdefault(q.subject, {}).setdefault(q.predicate, []).append(q.object)
        for subject, po in by_subject.items():
            stext = _trig_term(subject, d.prefixes)
            plines = []
            for predicate, objects in po.items():
                ptext = ("a" if predicate.value == RDF_TYPE
                         else _trig_term(predicate, d.prefixes))
                otext = " , ".join(_trig_term(o, d.prefixes) for o in objects)
                plines.append(f"{ptext} {otext}")
            body = " ;\n    ".join(plines)
            out.append(f"  {stext} {body} .")
        out.append("}")
        out.append("")
    text = "\n".join(out)
    return text if text.endswith("\n") or not text else text + "\n"
