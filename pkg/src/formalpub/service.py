"""HTTP facade over a registry: publish, fetch, queries, views, graph.

Stateless beyond the registry it wraps: every 2xx response is a pure
function of the store contents and the request, so restarting the service
never changes an answer. JSON everywhere except nanopublication bodies
(TriG) and the human-readable views (HTML). All endpoints are exposed both
at the root and under /api/v1.
"""

from __future__ import annotations

import html
import json
import os
from dataclasses import dataclass
from pathlib import Path

from fastapi import APIRouter, FastAPI, Request, Response
from fastapi.responses import HTMLResponse, JSONResponse

from . import vocab
from .errors import NotFoundError, ValidationError, VerificationError
from .nanopub import Nanopublication
from .rdf import Iri, Literal, TrigSyntaxError, parse_trig
from .registry import Registry, UnboundParameter, ValidationFailed
from .superpattern import (ClassRef, Qualifier, SuperPatternInstantiation, UNIVERSAL,
                           UniversalContext, parse_assertion,
                           parse_formalization_provenance, relation, render_formula,
                           render_sentence)
from .trusty import finalize, is_trusty_iri
from .workflow import classify

TRIG_MEDIA_TYPE = "application/trig"
DEFAULT_VENUE = "https://w3id.org/fpsi/DataScienceSpecialIssue"


@dataclass
class ApiConfig:
    store_path: str
    venue: str = DEFAULT_VENUE
    bind: str = "127.0.0.1:8338"
    assets_path: str | None = None

    @classmethod
    def from_env(cls, env=os.environ) -> "ApiConfig":
        return cls(store_path=env.get("FP_STORE", "./fp-store"),
                   venue=env.get("FP_VENUE", DEFAULT_VENUE),
                   bind=env.get("FP_BIND", "127.0.0.1:8338"),
                   assets_path=env.get("FP_ASSETS") or None)


def _error(status: int, code: str, message: str, findings=None) -> JSONResponse:
    body = {"error": message, "code": code}
    if findings is not None:
        body["findings"] = findings
    return JSONResponse(body, status_code=status)


def _wants_json(request: Request) -> bool:
    if request.query_params.get("format") == "json":
        return True
    accept = request.headers.get("accept", "")
    return "application/json" in accept and request.query_params.get("format") != "trig"


def _slot_ref(payload, name: str):
    slot = payload.get(name)
    if slot is None:
        raise ValidationError(f"missing slot {name!r}")
    return ClassRef(slot["iri"], slot.get("label") or slot["iri"])


def claim_from_json(payload: dict) -> SuperPatternInstantiation:
    context = (UNIVERSAL if payload.get("context") in (None, "", {})
               else _slot_ref(payload, "context"))
    return SuperPatternInstantiation(
        context=context,
        subject=_slot_ref(payload, "subject"),
        qualifier=Qualifier.from_string(payload["qualifier"]),
        relation=relation(payload["relation"]),
        object=_slot_ref(payload, "object"))


def create_app(config: ApiConfig, registry: Registry | None = None) -> FastAPI:
    registry = registry or Registry(config.store_path)
    app = FastAPI(title="formalpub", version="0.1.0", docs_url=None, redoc_url=None)
    router = APIRouter()

    @app.exception_handler(TrigSyntaxError)
    async def _syntax(request, exc):
        return _error(400, "SyntaxError", str(exc))

    @app.exception_handler(UnboundParameter)
    async def _unbound(request, exc):
        return _error(400, "UnboundParameter", str(exc))

    @app.exception_handler(ValidationFailed)
    async def _invalid(request, exc):
        return _error(422, "ValidationFailed", str(exc),
                      findings=[f.as_dict() for f in exc.findings])

    @app.exception_handler(VerificationError)
    async def _unverified(request, exc):
        return _error(422, "VerifyFailed", str(exc))

    @app.exception_handler(ValidationError)
    async def _validation(request, exc):
        return _error(422, type(exc).__name__, str(exc))

    @app.exception_handler(NotFoundError)
    async def _missing(request, exc):
        return _error(404, "NotFound", str(exc))

    @router.post("/np", status_code=201)
    async def publish(request: Request):
        text = (await request.body()).decode("utf-8")
        dataset = parse_trig(text)
        np = Nanopublication.from_dataset(dataset)
        if not is_trusty_iri(np.iri):
            final_dataset, _ = finalize(dataset, np.iri)
            np = Nanopublication.from_dataset(final_dataset)
        code = registry.publish(np)
        return JSONResponse({"code": code, "iri": np.iri}, status_code=201,
                            headers={"Location": f"/np/{code}"})

    @router.get("/np/{code}")
    async def fetch(code: str, request: Request):
        np = registry.fetch(code)
        if _wants_json(request):
            summary = {
                "iri": np.iri,
                "code": code,
                "kind": classify(np),
                "graphs": [np.head_graph, np.assertion_graph,
                           np.provenance_graph, np.pubinfo_graph],
                "quads": len(np.dataset.quads),
                "created": np.created(),
                "creators": list(np.creators()),
                "supersedes": np.supersedes(),
            }
            try:
                sp = parse_assertion(np.assertion())
                summary["claim"] = _claim_json(sp)
            except ValidationError:
                summary["claim"] = None
            return JSONResponse(summary)
        return Response(registry.fetch_trig(code), media_type=TRIG_MEDIA_TYPE)

    @router.get("/queries/{name}")
    async def query(name: str, request: Request):
        params = dict(request.query_params)
        params.pop("format", None)
        rows = registry.run_query(name, params)
        for row in rows:
            _attach_links(registry, name, row)
        return JSONResponse({"query": name, "rows": rows})

    @router.get("/view/{code}")
    async def view(code: str):
        return HTMLResponse(render_view(registry, code))

    @router.get("/graph")
    async def graph(request: Request):
        venue = request.query_params.get("venue", config.venue)
        fmt = request.query_params.get("format")
        if fmt is None:
            fmt = "json" if "application/json" in request.headers.get("accept", "") else "dot"
        payload = registry.export_graph(venue, fmt)
        media = "application/json" if fmt == "json" else "text/vnd.graphviz"
        return Response(payload, media_type=media)

    @router.get("/stats")
    async def stats(request: Request):
        venue = request.query_params.get("venue", config.venue)
        return JSONResponse(registry.stats(venue).as_dict())

    @router.get("/constants")
    async def constants():
        return JSONResponse(form_constants())

    @router.post("/render/sentence")
    async def render(request: Request):
        payload = json.loads((await request.body()).decode("utf-8"))
        sp = claim_from_json(payload)
        return JSONResponse({"sentence": render_sentence(sp),
                             "formula": render_formula(sp)})

    app.include_router(router)
    app.include_router(router, prefix="/api/v1")

    if config.assets_path and Path(config.assets_path).is_dir():
        from fastapi.staticfiles import StaticFiles
        app.mount("/ui", StaticFiles(directory=config.assets_path, html=True), name="ui")

    return app


def _claim_json(sp: SuperPatternInstantiation) -> dict:
    def slot(ref):
        if isinstance(ref, UniversalContext):
            return None
        return {"iri": ref.iri, "label": ref.label}

    return {
        "context": slot(sp.context),
        "subject": slot(sp.subject),
        "qualifier": str(sp.qualifier),
        "relation": sp.relation.name,
        "object": slot(sp.object),
        "sentence": render_sentence(sp),
        "formula": render_formula(sp),
    }


def _attach_links(registry: Registry, query_name: str, row: dict):
    """Deep links into the companion UI, mirroring follow-up actions."""
    if query_name == "list-submissions":
        row["review_link"] = f"/#/review?target={registry.code_of(row['latest_version'])}"
        row["thread_link"] = f"/#/thread?submission={registry.code_of(row['submission'])}"
        row["view_link"] = f"/view/{registry.code_of(row['latest_version'])}"
    elif query_name == "reviews-for":
        row["respond_link"] = f"/#/response?review={registry.code_of(row['review'])}"
    elif query_name == "thread":
        row["view_link"] = f"/view/{registry.code_of(row['iri'])}"


def form_constants() -> dict:
    """Vocabulary options for form building; one source of truth, served."""
    tables = vocab.as_tables()
    return {
        "vocabulary": tables,
        "qualifiers": (list(tables["qualifiers"])
                       + [f"can {b}" for b in tables["can_qualifiers"]]),
        "relations": list(tables["relations"]),
        "aspects": list(tables["review"]["aspects"]),
        "dispositions": list(tables["review"]["dispositions"]),
        "actions": list(tables["review"]["actions"]),
        "agreements": list(tables["response"]["agreements"]),
        "addressed": list(tables["response"]["addressed"]),
        "decision_statuses": list(tables["workflow"]["decision_statuses"]),
        "impacts": [1, 2, 3, 4, 5],
    }


# ---------------------------------------------------------------------------
# Classical HTML view
# ---------------------------------------------------------------------------

_PAGE = """<!doctype html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>{title}</title>
<style>
 body {{ font-family: Georgia, serif; max-width: 46rem; margin: 2rem auto; padding: 0 1rem; color: #222; }}
 h1 {{ font-size: 1.5rem; }}
 .banner {{ background: #fff3cd; border: 1px solid #e0c97f; padding: .6rem 1rem; margin-bottom: 1rem; }}
 .authors {{ color: #555; margin-bottom: 1.5rem; }}
 .sentence {{ font-size: 1.1rem; font-style: italic; margin: 1rem 0; }}
 .formula {{ font-family: "STIX Two Math", serif; background: #f6f6f6; padding: .8rem; overflow-x: auto; }}
 table {{ border-collapse: collapse; margin: 1rem 0; }}
 td, th {{ border: 1px solid #ccc; padding: .4rem .8rem; text-align: left; }}
 blockquote {{ border-left: 3px solid #999; margin-left: 0; padding-left: 1rem; color: #444; }}
 footer {{ margin-top: 2rem; font-size: .85rem; color: #777; border-top: 1px solid #ddd; padding-top: .5rem; }}
 pre {{ background: #f6f6f6; padding: .8rem; overflow-x: auto; font-size: .8rem; }}
</style>
</head>
<body>
{banner}
<h1>{title}</h1>
<div class="authors">{authors}</div>
{body}
<footer>{footer}</footer>
</body>
</html>
"""


def _slot_row(name: str, ref) -> str:
    if ref is None:
        return f"<tr><td>{name}</td><td>(no context class)</td><td></td></tr>"
    return (f"<tr><td>{name}</td><td>{html.escape(ref.label)}</td>"
            f'<td><a href="{html.escape(ref.iri)}">{html.escape(ref.iri)}</a></td></tr>')


def render_view(registry: Registry, code: str) -> str:
    """Classical page for a publication: claim view when the assertion holds
    exactly one claim, a generic quad table otherwise."""
    np = registry.fetch(code)
    titles = [q.object.form for q in np.dataset.match(Iri(np.iri), Iri(vocab.DCT_TITLE))
              if isinstance(q.object, Literal)]
    authors = ", ".join(
        f'<a href="{html.escape(c)}">{html.escape(c.rstrip("/").rsplit("/", 1)[-1])}</a>'
        for c in np.creators()) or "(no creator recorded)"

    newer = registry.superseded_by(np.iri)
    banner = ""
    if newer:
        newer_code = registry.code_of(newer)
        banner = (f'<div class="banner">A newer version of this publication exists: '
                  f'<a href="/view/{newer_code}">{newer_code}</a></div>')

    footer = (f'{html.escape(code)} &middot; created {html.escape(np.created() or "?")} '
              f'&middot; <a href="/np/{code}">source</a>')

    try:
        sp = parse_assertion(np.assertion())
    except ValidationError:
        rows = "".join(
            f"<tr><td>{html.escape(_short(q.subject))}</td>"
            f"<td>{html.escape(_short(q.predicate))}</td>"
            f"<td>{html.escape(_short(q.object))}</td>"
            f"<td>{html.escape(_short(q.graph))}</td></tr>"
            for q in np.dataset.quads)
        body = ("<table><tr><th>subject</th><th>predicate</th><th>object</th>"
                f"<th>graph</th></tr>{rows}</table>")
        return _PAGE.format(title=titles[0] if titles else code, banner=banner,
                            authors=authors, body=body, footer=footer)

    sentence = render_sentence(sp)
    title = titles[0] if titles else f"Formalizing: {sentence}"
    source, quote = parse_formalization_provenance(np.provenance(), np.assertion_graph)
    provenance = ""
    if source:
        provenance = (f'<p>Formalized from <a href="{html.escape(source)}">'
                      f"{html.escape(source)}</a>.</p>")
        if quote:
            provenance += f"<blockquote>{html.escape(quote)}</blockquote>"

    body = (
        f'<p class="sentence">{html.escape(sentence, quote=False)}</p>'
        f'<p class="formula">{html.escape(render_formula(sp), quote=False)}</p>'
        "<table><tr><th>slot</th><th>class</th><th>reference</th></tr>"
        + _slot_row("context", None if sp.universal else sp.context)
        + _slot_row("subject", sp.subject)
        + f"<tr><td>qualifier</td><td>{html.escape(str(sp.qualifier))}</td><td></td></tr>"
        + (f"<tr><td>relation</td><td>{html.escape(str(sp.relation))}</td>"
           f'<td><a href="{html.escape(sp.relation.iri)}">'
           f"{html.escape(sp.relation.iri)}</a></td></tr>")
        + _slot_row("object", sp.object)
        + "</table>"
        + provenance
    )
    return _PAGE.format(title=html.escape(title), banner=banner, authors=authors,
                        body=body, footer=footer)


def _short(term) -> str:
    if isinstance(term, Iri):
        return term.value
    if isinstance(term, Literal):
        return f'"{term.form}"'
    return f"_:{term.label}"


def main():  # pragma: no cover - thin launcher
    import uvicorn
    config = ApiConfig.from_env()
    host, _, port = config.bind.partition(":")
    app = create_app(config)
    uvicorn.run(app, host=host, port=int(port or 8338))


if __name__ == "__main__":  # pragma: no cover
    main()
