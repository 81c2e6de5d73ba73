import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from formalpub.rdf import parse_trig, serialize_trig
from formalpub.registry import Registry
from formalpub.service import ApiConfig, create_app
from formalpub.superpattern import load_corpus, load_corpus_fixture, parse_assertion
from formalpub.trusty import rewrite

from workflow_fixtures import VENUE, build_thread_fixture

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def client(tmp_path):
    app = create_app(ApiConfig(store_path=str(tmp_path / "reg"), venue=VENUE))
    return TestClient(app)


@pytest.fixture
def thread_client(tmp_path):
    registry = Registry(tmp_path / "reg")
    fx = build_thread_fixture()
    for np in fx.publications():
        registry.publish(np)
    app = create_app(ApiConfig(store_path=str(tmp_path / "reg"), venue=VENUE), registry)
    return TestClient(app), fx


def golden_text(name="np1"):
    return (GOLDEN / f"{name}.trig").read_text("utf-8")


class TestPublishEndpoint:
    def test_golden_publishes_with_its_code(self, client):
        response = client.post("/np", content=golden_text())
        assert response.status_code == 201
        body = response.json()
        assert body["code"] == (GOLDEN / "np1.code").read_text().strip()
        assert body["iri"].endswith(body["code"])

    def test_malformed_trig_is_400(self, client):
        response = client.post("/np", content="@prefix broken")
        assert response.status_code == 400
        assert response.json()["code"] == "SyntaxError"

    def test_blank_node_payload_is_422(self, client):
        text = golden_text().replace(
            "<http://www.wikidata.org/entity/Q42918>", "_:b1")
        response = client.post("/np", content=text)
        assert response.status_code == 422
        body = response.json()
        assert body["code"] == "ValidationFailed"
        assert any(f["code"] == "BlankNodeForbidden" for f in body["findings"])

    def test_draft_is_finalized_server_side(self, client):
        code = (GOLDEN / "np1.code").read_text().strip()
        draft = rewrite(parse_trig(golden_text()),
                        f"http://purl.org/np/{code}", "urn:np:temp")
        response = client.post("/np", content=serialize_trig(draft))
        assert response.status_code == 201
        assert response.json()["code"] == code

    def test_tampered_payload_is_422(self, client):
        response = client.post("/np", content=golden_text().replace(
            "mutation in STX1B", "tampered definition"))
        assert response.status_code == 422
        assert response.json()["code"] == "VerifyFailed"


class TestFetchEndpoint:
    def test_publish_fetch_byte_identity(self, client):
        code = client.post("/np", content=golden_text()).json()["code"]
        first = client.get(f"/np/{code}")
        assert first.status_code == 200
        assert first.headers["content-type"].startswith("application/trig")
        assert client.get(f"/np/{code}").text == first.text

    def test_unknown_code_is_404(self, client):
        response = client.get("/np/RA" + "x" * 43)
        assert response.status_code == 404
        assert response.json()["code"] == "NotFound"

    def test_json_summary_lists_four_graphs(self, client):
        code = client.post("/np", content=golden_text()).json()["code"]
        summary = client.get(f"/np/{code}", params={"format": "json"}).json()
        assert len(summary["graphs"]) == 4
        assert summary["kind"] == "C"

    def test_api_v1_prefix_serves_same_bytes(self, client):
        code = client.post("/np", content=golden_text()).json()["code"]
        assert client.get(f"/api/v1/np/{code}").text == client.get(f"/np/{code}").text


class TestQueryEndpoints:
    def test_list_submissions_rows_carry_review_links(self, thread_client):
        client, fx = thread_client
        rows = client.get("/queries/list-submissions",
                          params={"venue": VENUE}).json()["rows"]
        assert len(rows) == 1
        assert rows[0]["review_link"].startswith("/#/review?target=RA")
        assert rows[0]["status"] == "decided"

    def test_unknown_query_is_404(self, client):
        assert client.get("/queries/select-everything").status_code == 404

    def test_unbound_parameter_is_400(self, client):
        response = client.get("/queries/list-submissions")
        assert response.status_code == 400
        assert response.json()["code"] == "UnboundParameter"

    def test_stats_endpoint(self, thread_client):
        client, fx = thread_client
        report = client.get("/stats", params={"venue": VENUE}).json()
        assert [row["total"] for row in report["rows"]] == [1] * 9


class TestViewEndpoint:
    def test_formalization_view_contains_sentence(self, thread_client):
        client, fx = thread_client
        code = client.get("/queries/list-submissions",
                          params={"venue": VENUE}).json()["rows"][0]
        view = client.get(view_path(fx, client))
        assert view.status_code == 200
        sp = parse_assertion(fx.formalization.assertion())
        from formalpub.superpattern import render_sentence
        assert render_sentence(sp) in view.text

    def test_superseded_version_shows_banner(self, thread_client):
        client, fx = thread_client
        view = client.get(view_path(fx, client))
        assert "newer version" in view.text.lower()

    def test_non_formalization_gets_quad_table(self, thread_client):
        client, fx = thread_client
        codes = client.get("/queries/thread", params={
            "submission": fx.submission.iri}).json()["rows"]
        review_row = next(r for r in codes if r["kind"] == "R")
        view = client.get(review_row["view_link"])
        assert view.status_code == 200
        assert "<table>" in view.text
        assert "predicate" in view.text


def view_path(fx, client):
    summary = client.get("/queries/latest-version",
                         params={"formalization": fx.formalization.iri}).json()
    # view the initial version, which is superseded by the update
    rows = client.get("/queries/thread",
                      params={"submission": fx.submission.iri}).json()["rows"]
    first = next(r for r in rows if r["iri"] == fx.formalization.iri)
    return first["view_link"]


class TestGraphEndpoint:
    def test_dot_by_default(self, thread_client):
        client, fx = thread_client
        response = client.get("/graph", params={"venue": VENUE})
        assert response.text.startswith("digraph")

    def test_json_on_request(self, thread_client):
        client, fx = thread_client
        payload = client.get("/graph", params={"venue": VENUE, "format": "json"}).json()
        assert {n["type"] for n in payload["nodes"]} == {"F", "S", "U", "R", "A", "C", "D"}

    def test_accept_header_negotiation(self, thread_client):
        client, fx = thread_client
        response = client.get("/graph", params={"venue": VENUE},
                              headers={"accept": "application/json"})
        assert response.json()["nodes"]


class TestUiSupportEndpoints:
    def test_constants_enumerate_vocabulary(self, client):
        constants = client.get("/constants").json()
        assert "can generally" in constants["qualifiers"]
        assert constants["impacts"] == [1, 2, 3, 4, 5]
        assert "affects" in constants["relations"]

    def test_render_sentence_endpoint(self, client):
        payload = {
            "context": {"iri": "http://www.wikidata.org/entity/Q5", "label": "human"},
            "subject": {"iri": "http://example.org/s", "label": "STX1B mutation"},
            "qualifier": "frequently",
            "relation": "co-occurs-with",
            "object": {"iri": "http://www.wikidata.org/entity/Q41571", "label": "epilepsy"},
        }
        body = client.post("/render/sentence", content=json.dumps(payload)).json()
        assert body["sentence"].startswith("Every thing of type 'STX1B mutation'")
        assert "0.1" in body["formula"]

    def test_render_universal_context(self, client):
        payload = {
            "context": None,
            "subject": {"iri": "http://example.org/s", "label": "genes"},
            "qualifier": "sometimes",
            "relation": "is-same-as",
            "object": {"iri": "http://example.org/o", "label": "targets"},
        }
        body = client.post("/render/sentence", content=json.dumps(payload)).json()
        assert "context" not in body["sentence"]


class TestReproducibility:
    def test_restart_preserves_responses(self, tmp_path):
        store = tmp_path / "reg"
        registry = Registry(store)
        fx = build_thread_fixture()
        for np in fx.publications():
            registry.publish(np)
        app1 = create_app(ApiConfig(store_path=str(store), venue=VENUE), registry)
        first = TestClient(app1).get("/queries/list-submissions",
                                     params={"venue": VENUE}).text
        app2 = create_app(ApiConfig(store_path=str(store), venue=VENUE))
        second = TestClient(app2).get("/queries/list-submissions",
                                      params={"venue": VENUE}).text
        assert first == second

    def test_corpus_fixture_can_be_published_via_http(self, client):
        entry = load_corpus()[13]
        response = client.post("/np", content=load_corpus_fixture(entry))
        assert response.status_code == 201
        summary = client.get(f"/np/{response.json()['code']}",
                             params={"format": "json"}).json()
        assert summary["claim"]["qualifier"] == "frequently"
        assert summary["claim"]["relation"] == "co-occurs-with"
