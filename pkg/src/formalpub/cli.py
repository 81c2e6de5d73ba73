"""Command-line workflow driver.

Every mutating subcommand publishes exactly one nanopublication. Commands
run against a local store directory (``--store`` / ``FP_STORE``) or a
running service (``--service`` / ``FP_SERVICE``); given the same actor and
injected clock, both modes produce byte-identical stores. The clock is
injectable (``--at`` / ``FP_AT``) so scripted runs are reproducible.

Exit codes: 0 success, 1 usage, 2 validation, 3 verification, 4 not found.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import click

from . import vocab
from .acts import (class_definition_np, decision_np, formalization_np, response_np,
                   review_np, submission_np)
from .errors import FormalpubError, NotFoundError, ValidationError, VerificationError
from .nanopub import Nanopublication, format_timestamp
from .rdf import parse_trig, serialize_trig
from .registry import Registry
from .rdf import Iri, Literal
from .superpattern import (ClassRef, Qualifier, SuperPatternInstantiation, UNIVERSAL,
                           all_qualifiers, derive_label, parse_assertion,
                           parse_formalization_provenance, relation)
from .trusty import CODE_RE, verify
from .workflow import Decision, ResponseComment, ReviewComment, check_integrity

QUALIFIER_CHOICES = [str(q) for q in all_qualifiers()]
RELATION_CHOICES = sorted(vocab.RELATION_IRIS)
ASPECT_CHOICES = sorted(vocab.ASPECT_CLASSES)
DISPOSITION_CHOICES = sorted(vocab.DISPOSITION_CLASSES)
ACTION_CHOICES = sorted(vocab.ACTION_CLASSES)
AGREEMENT_CHOICES = sorted(vocab.AGREEMENT_CLASSES)
ADDRESSED_CHOICES = sorted(vocab.ADDRESSED_CLASSES)
STATUS_CHOICES = sorted(vocab.DECISION_STATUS_IRIS)
SLOT_CHOICES = sorted(vocab.SLOT_PREDICATES)


class LocalBackend:
    def __init__(self, store: str):
        self.registry = Registry(store)

    def publish(self, np: Nanopublication) -> str:
        return self.registry.publish(np)

    def fetch_trig(self, ref: str) -> str:
        code = ref if CODE_RE.match(ref) else self.registry.code_of(ref)
        return self.registry.fetch_trig(code)

    def resolve(self, ref: str) -> Nanopublication:
        return self.registry.resolve(ref)

    def stats(self, venue: str) -> dict:
        return self.registry.stats(venue).as_dict()

    def graph(self, venue: str, fmt: str) -> str:
        return self.registry.export_graph(venue, fmt)


class RemoteBackend:
    def __init__(self, base_url: str):
        import httpx
        self.base_url = base_url.rstrip("/")
        self.client = httpx.Client(base_url=self.base_url, timeout=30.0)

    def _raise_for(self, response):
        if response.status_code < 400:
            return
        try:
            body = response.json()
        except ValueError:
            body = {"error": response.text, "code": "Error"}
        message = f"{body.get('code', 'Error')}: {body.get('error', '')}"
        code = body.get("code", "")
        if response.status_code == 404:
            raise NotFoundError(message)
        if code == "VerifyFailed":
            raise VerificationError(message)
        raise ValidationError(message)

    def publish(self, np: Nanopublication) -> str:
        response = self.client.post("/np", content=serialize_trig(np.dataset))
        self._raise_for(response)
        return response.json()["code"]

    def resolve(self, ref: str) -> Nanopublication:
        code = ref.rsplit("/", 1)[-1].split("#", 1)[0]
        response = self.client.get(f"/np/{code}", params={"format": "trig"})
        self._raise_for(response)
        return Nanopublication.from_dataset(parse_trig(response.text))

    def fetch_trig(self, ref: str) -> str:
        code = ref.rsplit("/", 1)[-1].split("#", 1)[0]
        response = self.client.get(f"/np/{code}", params={"format": "trig"})
        self._raise_for(response)
        return response.text

    def stats(self, venue: str) -> dict:
        response = self.client.get("/stats", params={"venue": venue})
        self._raise_for(response)
        return response.json()

    def graph(self, venue: str, fmt: str) -> str:
        response = self.client.get("/graph", params={"venue": venue, "format": fmt})
        self._raise_for(response)
        return response.text


@dataclass
class CliContext:
    backend: LocalBackend | RemoteBackend
    actor: str
    at: str | None
    as_json: bool
    store: str | None

    def now(self) -> str:
        if self.at:
            return self.at
        return format_timestamp(datetime.now(timezone.utc))

    def emit(self, human: str, payload: dict):
        if self.as_json:
            click.echo(json.dumps(payload))
        else:
            click.echo(human)

    def published(self, np: Nanopublication, code: str, extra: dict | None = None):
        payload = {"code": code, "iri": np.iri, **(extra or {})}
        self.emit(f"published {code}", payload)


@click.group(name="fp")
@click.option("--store", envvar="FP_STORE", default=None,
              help="Local registry directory (default ./fp-store).")
@click.option("--service", envvar="FP_SERVICE", default=None,
              help="Base URL of a running service; overrides --store.")
@click.option("--actor", envvar="FP_ACTOR", default="https://example.org/actor/anonymous",
              help="Creator IRI recorded in publication metadata.")
@click.option("--at", envvar="FP_AT", default=None, metavar="TIMESTAMP",
              help="Injected clock (ISO-8601 UTC), for reproducible runs.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.pass_context
def cli(ctx, store, service, actor, at, as_json):
    """Workflow driver for formalized scientific claims."""
    if service and store:
        raise click.UsageError("use either --store or --service, not both")
    backend = RemoteBackend(service) if service else LocalBackend(store or "./fp-store")
    ctx.obj = CliContext(backend=backend, actor=actor, at=at, as_json=as_json,
                         store=None if service else (store or "./fp-store"))


@cli.group(name="class")
def klass():
    """Class definition operations."""


@klass.command("new")
@click.option("--label", required=True)
@click.option("--definition", required=True)
@click.option("--super", "super_class", required=True, metavar="IRI")
@click.option("--related", multiple=True, metavar="IRI")
@click.pass_obj
def class_new(obj: CliContext, label, definition, super_class, related):
    """Mint a class inside a new nanopublication."""
    np, class_iri = class_definition_np(label, definition, super_class,
                                        tuple(related), obj.actor, obj.now())
    code = obj.backend.publish(np)
    obj.published(np, code, {"class_iri": class_iri})
    if not obj.as_json:
        click.echo(f"class {class_iri}")


@cli.group()
def claim():
    """Claim formalization operations."""


def _lookup_label(obj: CliContext, iri: str, explicit: str | None) -> str:
    """Explicit flag, else the minted class's recorded label, else the IRI tail."""
    if explicit:
        return explicit
    if "#" in iri:
        try:
            source = obj.backend.resolve(iri)
            for q in source.assertion():
                if (q.subject == Iri(iri) and q.predicate.value == vocab.RDFS_LABEL
                        and isinstance(q.object, Literal)):
                    return q.object.form
        except FormalpubError:
            pass
    return derive_label(iri)


def _claim_options(fn):
    options = [
        click.option("--context", "context_iri", default=None, metavar="IRI"),
        click.option("--universal", is_flag=True,
                     help="No context restriction (mutually exclusive with --context)."),
        click.option("--subject", "subject_iri", required=True, metavar="IRI"),
        click.option("--qualifier", required=True, type=click.Choice(QUALIFIER_CHOICES)),
        click.option("--relation", "relation_name", required=True,
                     type=click.Choice(RELATION_CHOICES)),
        click.option("--object", "object_iri", required=True, metavar="IRI"),
        click.option("--context-label", default=None),
        click.option("--subject-label", default=None),
        click.option("--object-label", default=None),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _build_claim(obj, context_iri, universal, subject_iri, qualifier, relation_name,
                 object_iri, context_label, subject_label, object_label):
    if universal == bool(context_iri):
        raise click.UsageError("provide exactly one of --context or --universal")
    context = UNIVERSAL if universal else ClassRef(
        context_iri, _lookup_label(obj, context_iri, context_label))
    return SuperPatternInstantiation(
        context=context,
        subject=ClassRef(subject_iri, _lookup_label(obj, subject_iri, subject_label)),
        qualifier=Qualifier.from_string(qualifier),
        relation=relation(relation_name),
        object=ClassRef(object_iri, _lookup_label(obj, object_iri, object_label)))


@claim.command("new")
@_claim_options
@click.option("--source", default=None, metavar="IRI",
              help="Publication the claim was formalized from.")
@click.option("--quote", default=None, help="Exact phrase from the source.")
@click.option("--title", default=None)
@click.pass_obj
def claim_new(obj: CliContext, context_iri, universal, subject_iri, qualifier,
              relation_name, object_iri, context_label, subject_label, object_label,
              source, quote, title):
    """Publish a claim formalization."""
    sp = _build_claim(obj, context_iri, universal, subject_iri, qualifier,
                      relation_name, object_iri, context_label, subject_label,
                      object_label)
    np = formalization_np(sp, source, quote, obj.actor, obj.now(), title=title)
    obj.published(np, obj.backend.publish(np))


@cli.command()
@click.option("--formalization", required=True, metavar="CODE|IRI")
@click.option("--venue", required=True, metavar="IRI")
@click.pass_obj
def submit(obj: CliContext, formalization, venue):
    """Submit a formalization to a venue."""
    target = obj.backend.resolve(formalization)
    np = submission_np(target.iri, venue, obj.actor, obj.now())
    obj.published(np, obj.backend.publish(np))


@cli.group()
def review():
    """Review operations."""


@review.command("add")
@click.option("--target", required=True, metavar="CODE|IRI")
@click.option("--aspect", required=True, type=click.Choice(ASPECT_CHOICES))
@click.option("--disposition", required=True, type=click.Choice(DISPOSITION_CHOICES))
@click.option("--action", required=True, type=click.Choice(ACTION_CHOICES))
@click.option("--impact", required=True, type=click.IntRange(1, 5))
@click.option("--text", required=True)
@click.option("--slot", type=click.Choice(SLOT_CHOICES), default=None,
              help="Claim slot the comment is about.")
@click.pass_obj
def review_add(obj: CliContext, target, aspect, disposition, action, impact, text, slot):
    """Publish a review comment."""
    target_np = obj.backend.resolve(target)
    rc = ReviewComment(target=target_np.iri, aspect=aspect, disposition=disposition,
                       action=action, impact=impact, text=text,
                       refers_to_mentioning_of=vocab.SLOT_PREDICATES[slot] if slot else None)
    np = review_np(rc, obj.actor, obj.now())
    obj.published(np, obj.backend.publish(np))


@cli.command()
@click.option("--review", "review_ref", required=True, metavar="CODE|IRI")
@click.option("--agreement", required=True, type=click.Choice(AGREEMENT_CHOICES))
@click.option("--addressed", required=True, type=click.Choice(ADDRESSED_CHOICES))
@click.option("--text", required=True)
@click.option("--updated", required=True, metavar="CODE|IRI",
              help="Formalization version the response refers to.")
@click.pass_obj
def respond(obj: CliContext, review_ref, agreement, addressed, text, updated):
    """Publish a response to a review comment."""
    review_np_obj = obj.backend.resolve(review_ref)
    updated_np = obj.backend.resolve(updated)
    response = ResponseComment(in_response_to=review_np_obj.iri, agreement=agreement,
                               addressed=addressed, text=text, refers_to=updated_np.iri)
    np = response_np(response, obj.actor, obj.now())
    obj.published(np, obj.backend.publish(np))


@cli.command()
@click.option("--old", required=True, metavar="CODE|IRI")
@click.option("--context", "context_iri", default=None, metavar="IRI")
@click.option("--universal", is_flag=True)
@click.option("--subject", "subject_iri", default=None, metavar="IRI")
@click.option("--qualifier", default=None, type=click.Choice(QUALIFIER_CHOICES))
@click.option("--relation", "relation_name", default=None,
              type=click.Choice(RELATION_CHOICES))
@click.option("--object", "object_iri", default=None, metavar="IRI")
@click.option("--source", default=None, metavar="IRI")
@click.option("--quote", default=None)
@click.pass_obj
def update(obj: CliContext, old, context_iri, universal, subject_iri, qualifier,
           relation_name, object_iri, source, quote):
    """Publish a new version of a formalization, superseding the old one."""
    if universal and context_iri:
        raise click.UsageError("provide at most one of --context or --universal")
    old_np = obj.backend.resolve(old)
    sp = parse_assertion(old_np.assertion())
    old_source, old_quote = parse_formalization_provenance(
        old_np.provenance(), old_np.assertion_graph)
    if universal:
        context = UNIVERSAL
    elif context_iri:
        context = ClassRef(context_iri, _lookup_label(obj, context_iri, None))
    else:
        context = sp.context
    updated = SuperPatternInstantiation(
        context=context,
        subject=(ClassRef(subject_iri, _lookup_label(obj, subject_iri, None))
                 if subject_iri else sp.subject),
        qualifier=Qualifier.from_string(qualifier) if qualifier else sp.qualifier,
        relation=relation(relation_name) if relation_name else sp.relation,
        object=(ClassRef(object_iri, _lookup_label(obj, object_iri, None))
                if object_iri else sp.object))
    np = formalization_np(updated, source or old_source, quote or old_quote,
                          obj.actor, obj.now(), supersedes=old_np)
    obj.published(np, obj.backend.publish(np))


@cli.command()
@click.option("--target", required=True, metavar="CODE|IRI",
              help="Final formalization version the decision applies to.")
@click.option("--status", required=True, type=click.Choice(STATUS_CHOICES))
@click.option("--text", required=True)
@click.option("--venue", required=True, metavar="IRI")
@click.pass_obj
def decide(obj: CliContext, target, status, text, venue):
    """Publish an editorial decision."""
    target_np = obj.backend.resolve(target)
    decision = Decision(target=target_np.iri, status=status, description=text,
                        venue=venue)
    np = decision_np(decision, obj.actor, obj.now())
    obj.published(np, obj.backend.publish(np))


@cli.command()
@click.option("--venue", required=True, metavar="IRI")
@click.pass_obj
def stats(obj: CliContext, venue):
    """Corpus statistics for a venue."""
    report = obj.backend.stats(venue)
    if obj.as_json:
        click.echo(json.dumps(report))
        return
    width = max(len(row["label"]) for row in report["rows"])
    click.echo(f"{'type':<{width}}  per submission  total")
    for row in report["rows"]:
        click.echo(f"{row['label']:<{width}}  {row['per_submission']:>14}  {row['total']:>5}")


@cli.command()
@click.option("--venue", required=True, metavar="IRI")
@click.option("--format", "fmt", default="dot", type=click.Choice(["dot", "json"]))
@click.pass_obj
def graph(obj: CliContext, venue, fmt):
    """Export the publication graph."""
    click.echo(obj.backend.graph(venue, fmt), nl=False)


@cli.command(name="verify")
@click.argument("target")
@click.pass_obj
def verify_cmd(obj: CliContext, target):
    """Verify a file or stored publication against its embedded code."""
    if Path(target).exists():
        dataset = parse_trig(Path(target).read_text("utf-8"))
    else:
        dataset = obj.backend.resolve(target).dataset
    if verify(dataset):
        obj.emit("verified", {"verified": True})
    else:
        obj.emit("verification FAILED", {"verified": False})
        raise VerificationError("content does not match its embedded code")


@cli.command()
@click.argument("ref")
@click.pass_obj
def show(obj: CliContext, ref):
    """Print a stored publication as TriG."""
    click.echo(obj.backend.fetch_trig(ref), nl=False)


@cli.command()
@click.pass_obj
def integrity(obj: CliContext):
    """Link-integrity scan over the local store (exit 2 on findings)."""
    if not isinstance(obj.backend, LocalBackend):
        raise click.UsageError("integrity checks run against a local store")
    findings = check_integrity(obj.backend.registry.corpus())
    if obj.as_json:
        click.echo(json.dumps([f.as_dict() for f in findings]))
    else:
        for finding in findings:
            click.echo(f"{finding.code}: {finding.message}")
        if not findings:
            click.echo("no findings")
    if findings:
        raise ValidationError(f"{len(findings)} integrity findings")


@cli.command()
@click.option("--bind", default="127.0.0.1:8338", metavar="HOST:PORT")
@click.option("--venue", default=None, metavar="IRI")
@click.option("--assets", default=None, metavar="DIR",
              help="Static directory for the web client, served at /ui.")
@click.pass_obj
def serve(obj: CliContext, bind, venue, assets):
    """Run the HTTP service over the local store."""
    import uvicorn

    from .service import ApiConfig, DEFAULT_VENUE, create_app
    if not isinstance(obj.backend, LocalBackend):
        raise click.UsageError("serve runs against a local store")
    config = ApiConfig(store_path=obj.store, venue=venue or DEFAULT_VENUE,
                       bind=bind, assets_path=assets)
    app = create_app(config, obj.backend.registry)
    host, _, port = bind.partition(":")
    uvicorn.run(app, host=host, port=int(port or 8338), log_level="warning")


def main(argv=None):
    try:
        cli(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        return 1
    except NotFoundError as exc:
        click.echo(f"error: {exc}", err=True)
        return 4
    except VerificationError as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    except ValidationError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except FormalpubError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
