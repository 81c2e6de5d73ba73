"""Append-only store of verified nanopublications with derived indexes.

Layout on disk: one TriG file per publication under ``store/{code}.trig``
plus a ``log`` file listing codes in publication order. The files are the
truth; every index is rebuilt from them at startup, so a registry can be
inspected and repaired with a text editor. Writes are serialized through a
single lock and ordered so that any prefix of the log is a consistent
store: file write, then log append, then index update.

Instead of a query language the registry exposes a fixed set of named,
parameterized queries plus corpus statistics and a typed graph export.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping

from . import vocab, workflow
from .errors import NotFoundError, ValidationError, VerificationError
from .nanopub import Nanopublication, extract_chain, validate
from .rdf import Iri, parse_trig, serialize_trig
from .trusty import CODE_RE, embedded_code, verify
from .workflow import (CLASS_DEFINITION, DECISION, FORMALIZATION, RESPONSE, REVIEW,
                       SUBMISSION, UPDATE, SubmissionThread, assertion_references,
                       build_thread, classify, parse_response, parse_review)


class ValidationFailed(ValidationError):
    def __init__(self, findings):
        super().__init__("; ".join(f.message for f in findings))
        self.findings = list(findings)


class VerifyFailed(VerificationError):
    """Publication content does not match its embedded code."""


class NotFound(NotFoundError):
    pass


class UnknownQuery(NotFoundError):
    pass


class UnboundParameter(ValidationError):
    pass


@dataclass(frozen=True)
class StatRow:
    key: str
    label: str
    total: int
    per_submission: str


@dataclass(frozen=True)
class StatsReport:
    venue: str
    rows: tuple[StatRow, ...]

    def as_dict(self) -> dict:
        return {"venue": self.venue,
                "rows": [{"key": r.key, "label": r.label, "total": r.total,
                          "per_submission": r.per_submission} for r in self.rows]}


def round_half_up(numerator: int, denominator: int) -> str:
    """Exact rational rounded half-up to two decimals, e.g. 34/15 -> '2.27'."""
    shifted = Fraction(numerator * 100, denominator)
    whole = shifted.numerator // shifted.denominator
    if shifted - whole >= Fraction(1, 2):
        whole += 1
    return f"{whole // 100}.{whole % 100:02d}"


_STAT_ROWS = (
    ("submissions", "submissions"),
    ("superpattern-definitions", "super-pattern definitions"),
    ("class-definitions", "class definitions"),
    ("superpattern-reviews", "reviews of super-patterns"),
    ("class-definition-reviews", "reviews of class definitions"),
    ("superpattern-review-responses", "responses to super-pattern reviews"),
    ("class-definition-review-responses", "responses to class definition reviews"),
    ("updated-superpattern-definitions", "updated super-pattern definitions"),
    ("decisions", "decisions"),
)

QUERY_PARAMETERS: dict[str, tuple[str, ...]] = {
    "list-submissions": ("venue",),
    "reviews-for": ("target",),
    "responses-for": ("review",),
    "thread": ("submission",),
    "class-definitions": ("author",),
    "latest-version": ("formalization",),
}


class Registry:
    """Filesystem-backed registry; safe for concurrent readers, one writer."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.store_dir = self.root / "store"
        self.log_path = self.root / "log"
        self._lock = threading.Lock()
        self._codes: list[str] = []
        self._bytes: dict[str, str] = {}
        self._naps: dict[str, Nanopublication] = {}
        self._by_iri: dict[str, str] = {}
        self._kinds: dict[str, str | None] = {}
        self._referenced_by: dict[str, set[str]] = {}
        self._by_type: dict[str, list[str]] = {}
        self.store_dir.mkdir(parents=True, exist_ok=True)
        self.rebuild()

    # -- persistence -------------------------------------------------------

    def rebuild(self):
        """Drop all indexes and re-derive them from the log and files."""
        self._codes, self._bytes, self._naps = [], {}, {}
        self._by_iri, self._kinds = {}, {}
        self._referenced_by, self._by_type = {}, {}
        if not self.log_path.exists():
            return
        for line in self.log_path.read_text("utf-8").splitlines():
            code = line.strip()
            if not code:
                continue
            text = (self.store_dir / f"{code}.trig").read_text("utf-8")
            np = Nanopublication.from_dataset(parse_trig(text))
            self._index(code, np, text)

    def _index(self, code: str, np: Nanopublication, text: str):
        self._codes.append(code)
        self._bytes[code] = text
        self._naps[code] = np
        self._by_iri[np.iri] = code
        self._kinds[np.iri] = classify(np)
        refs = assertion_references(np)
        supersedes = np.supersedes()
        if supersedes:
            refs.add(supersedes)
        for ref in refs:
            self._referenced_by.setdefault(ref, set()).add(np.iri)
        for q in np.assertion():
            if q.predicate.value == vocab.RDF_TYPE and isinstance(q.object, Iri):
                self._by_type.setdefault(q.object.value, []).append(np.iri)

    def publish(self, np: Nanopublication) -> str:
        """Validate, verify, persist. Idempotent on identical content."""
        findings = validate(np)
        if findings:
            raise ValidationFailed(findings)
        try:
            if not verify(np.dataset):
                raise VerifyFailed(f"content of <{np.iri}> does not match its code")
            code = embedded_code(np.dataset)
        except VerificationError as exc:
            raise VerifyFailed(str(exc)) from exc
        with self._lock:
            if code in self._bytes:
                return code
            text = serialize_trig(np.dataset)
            path = self.store_dir / f"{code}.trig"
            path.write_text(text, "utf-8")
            with self.log_path.open("a", encoding="utf-8") as log:
                log.write(code + "\n")
            self._index(code, np, text)
        return code

    def fetch(self, code: str) -> Nanopublication:
        if code not in self._naps:
            raise NotFound(f"no nanopublication with code {code}")
        return self._naps[code]

    def fetch_trig(self, code: str) -> str:
        if code not in self._bytes:
            raise NotFound(f"no nanopublication with code {code}")
        return self._bytes[code]

    def __len__(self) -> int:
        return len(self._codes)

    def codes(self) -> tuple[str, ...]:
        return tuple(self._codes)

    def corpus(self) -> dict[str, Nanopublication]:
        return {np.iri: np for np in self._naps.values()}

    def resolve(self, ref: str) -> Nanopublication:
        """Accept a bare code or a (possibly fragment-carrying) trusty IRI."""
        if CODE_RE.match(ref):
            return self.fetch(ref)
        iri = ref.split("#", 1)[0]
        if iri in self._by_iri:
            return self._naps[self._by_iri[iri]]
        raise NotFound(f"<{ref}> is not in the registry")

    def code_of(self, iri: str) -> str:
        iri = iri.split("#", 1)[0]
        if iri not in self._by_iri:
            raise NotFound(f"<{iri}> is not in the registry")
        return self._by_iri[iri]

    def superseded_by(self, iri: str) -> str | None:
        for source in sorted(self._referenced_by.get(iri, ())):
            np = self._naps.get(self._by_iri.get(source, ""), None)
            if np is not None and np.supersedes() == iri:
                return source
        return None

    # -- derived views -----------------------------------------------------

    def _created(self, iri: str) -> str:
        code = self._by_iri.get(iri)
        np = self._naps.get(code) if code else None
        return (np.created() if np else None) or ""

    def _ordered(self, iris: Iterable[str]) -> list[str]:
        return sorted(iris, key=lambda i: (self._created(i), i))

    def _submissions_for(self, venue: str) -> list[str]:
        subs = []
        for np in self._naps.values():
            if self._kinds[np.iri] != SUBMISSION:
                continue
            venues = {q.object.value for q in np.assertion()
                      if q.predicate.value == vocab.FRBR_PART_OF and isinstance(q.object, Iri)}
            if venue in venues:
                subs.append(np.iri)
        return self._ordered(subs)

    def threads(self, venue: str) -> list[SubmissionThread]:
        corpus = self.corpus()
        return [build_thread(corpus, s) for s in self._submissions_for(venue)]

    def run_query(self, name: str, params: Mapping[str, str]) -> list[dict]:
        """Run one of the built-in parameterized queries.

        Rows are plain dictionaries, deterministically ordered by creation
        timestamp then IRI.
        """
        if name not in QUERY_PARAMETERS:
            raise UnknownQuery(f"no query named {name!r}")
        for required in QUERY_PARAMETERS[name]:
            if not params.get(required):
                raise UnboundParameter(f"query {name!r} requires parameter {required!r}")
        handler = getattr(self, "_query_" + name.replace("-", "_"))
        return handler(params)

    def _query_list_submissions(self, params) -> list[dict]:
        corpus = self.corpus()
        rows = []
        for iri in self._submissions_for(params["venue"]):
            thread = build_thread(corpus, iri)
            np = self._naps[self._by_iri[iri]]
            rows.append({
                "submission": iri,
                "formalization": thread.versions[0],
                "latest_version": thread.head_version,
                "status": workflow.thread_status(thread),
                "review_count": len(thread.reviews),
                "created": np.created() or "",
                "creator": next(iter(np.creators()), ""),
            })
        return rows

    def _query_reviews_for(self, params) -> list[dict]:
        target = params["target"]
        rows = []
        for iri in self._ordered(i for i, k in self._kinds.items() if k == REVIEW):
            np = self._naps[self._by_iri[iri]]
            review = parse_review(np.assertion())
            if review.target != target:
                continue
            rows.append({
                "review": iri,
                "target": review.target,
                "aspect": review.aspect,
                "disposition": review.disposition,
                "action": review.action,
                "impact": review.impact,
                "text": review.text,
                "created": np.created() or "",
                "creator": next(iter(np.creators()), ""),
            })
        return rows

    def _query_responses_for(self, params) -> list[dict]:
        review_iri = params["review"]
        rows = []
        for iri in self._ordered(i for i, k in self._kinds.items() if k == RESPONSE):
            np = self._naps[self._by_iri[iri]]
            response = parse_response(np.assertion())
            if response.in_response_to != review_iri:
                continue
            rows.append({
                "response": iri,
                "review": response.in_response_to,
                "agreement": response.agreement,
                "addressed": response.addressed,
                "refers_to": response.refers_to,
                "text": response.text,
                "created": np.created() or "",
                "creator": next(iter(np.creators()), ""),
            })
        return rows

    def _query_thread(self, params) -> list[dict]:
        thread = build_thread(self.corpus(), params["submission"])
        rows = []
        for iri in thread.members():
            kind = self._kinds.get(iri)
            if iri in thread.versions:
                kind = UPDATE if iri != thread.versions[0] else FORMALIZATION
            rows.append({"iri": iri, "kind": kind or "?",
                         "created": self._created(iri)})
        rows.sort(key=lambda r: (r["created"], r["iri"]))
        return rows

    def _query_class_definitions(self, params) -> list[dict]:
        author = params["author"]
        rows = []
        for iri in self._ordered(i for i, k in self._kinds.items() if k == CLASS_DEFINITION):
            np = self._naps[self._by_iri[iri]]
            if author not in np.creators():
                continue
            labels = [q.object.form for q in np.assertion()
                      if q.predicate.value == vocab.RDFS_LABEL]
            rows.append({"class_definition": iri, "label": labels[0] if labels else "",
                         "created": np.created() or "", "creator": author})
        return rows

    def _query_latest_version(self, params) -> list[dict]:
        chain = extract_chain(self.corpus(), params["formalization"].split("#", 1)[0])
        return [{"formalization": chain[0], "latest_version": chain[-1],
                 "version_count": len(chain)}]

    # -- statistics and graph export ----------------------------------------

    def stats(self, venue: str) -> StatsReport:
        """Per-type totals over the venue's threads and per-submission
        averages, rendered half-up to two decimals ('—' when undefined)."""
        threads = self.threads(venue)
        sets: dict[str, set[str]] = {key: set() for key, _ in _STAT_ROWS}
        for t in threads:
            if t.submission:
                sets["submissions"].add(t.submission)
            sets["superpattern-definitions"].add(t.versions[0])
            sets["updated-superpattern-definitions"].update(t.versions[1:])
            sets["class-definitions"].update(t.class_definitions)
            class_defs = set(t.class_definitions)
            for review_iri in t.reviews:
                review = parse_review(self.resolve(review_iri).assertion())
                key = ("class-definition-reviews" if review.target in class_defs
                       else "superpattern-reviews")
                sets[key].add(review_iri)
            for response_iri in t.responses:
                response = parse_response(self.resolve(response_iri).assertion())
                review = parse_review(self.resolve(response.in_response_to).assertion())
                key = ("class-definition-review-responses" if review.target in class_defs
                       else "superpattern-review-responses")
                sets[key].add(response_iri)
            if t.decision:
                sets["decisions"].add(t.decision)

        n_subs = len(sets["submissions"])
        rows = []
        for key, label in _STAT_ROWS:
            total = len(sets[key])
            per = round_half_up(total, n_subs) if n_subs else "—"
            rows.append(StatRow(key, label, total, per))
        return StatsReport(venue, tuple(rows))

    _NODE_COLORS = {
        FORMALIZATION: "#1f77b4", SUBMISSION: "#2ca02c", UPDATE: "#17becf",
        REVIEW: "#ff7f0e", RESPONSE: "#9467bd", CLASS_DEFINITION: "#8c564b",
        DECISION: "#d62728",
    }

    def graph_data(self, venue: str) -> tuple[list[dict], list[dict]]:
        """Typed nodes and reference/supersedes edges for a venue's corpus."""
        members: set[str] = set()
        kinds: dict[str, str] = {}
        for t in self.threads(venue):
            for iri in t.members():
                members.add(iri)
                kind = self._kinds.get(iri) or "?"
                if iri in t.versions:
                    kind = FORMALIZATION if iri == t.versions[0] else UPDATE
                kinds[iri] = kind
        nodes = [{"id": iri, "type": kinds[iri],
                  "label": workflow.KIND_LABELS.get(kinds[iri], kinds[iri])}
                 for iri in self._ordered(members)]
        edges: list[dict] = []
        for iri in self._ordered(members):
            np = self.resolve(iri)
            for ref in sorted(assertion_references(np)):
                if ref in members and ref != iri:
                    edges.append({"from": iri, "to": ref, "kind": "ref"})
            target = np.supersedes()
            if target and target in members:
                edges.append({"from": iri, "to": target, "kind": "supersedes"})
        return nodes, edges

    def export_graph(self, venue: str, format: str = "dot") -> str:
        nodes, edges = self.graph_data(venue)
        if format == "json":
            import json
            return json.dumps({"nodes": nodes, "edges": edges}, indent=2) + "\n"
        if format != "dot":
            raise ValidationError(f"unknown graph format {format!r}")
        lines = ["digraph corpus {", "  node [shape=circle];"]
        for node in nodes:
            color = self._NODE_COLORS.get(node["type"], "#999999")
            lines.append(f'  "{node["id"]}" [label="{node["type"]}", color="{color}"];')
        for edge in edges:
            attr = ' [color=red]' if edge["kind"] == "supersedes" else ""
            lines.append(f'  "{edge["from"]}" -> "{edge["to"]}"{attr};')
        lines.append("}")
        return "\n".join(lines) + "\n"
