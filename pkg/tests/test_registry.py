import json
import re
import shutil
from pathlib import Path

import pytest

from formalpub.nanopub import Nanopublication
from formalpub.rdf import Dataset, Iri, Literal, Quad, parse_trig
from formalpub.registry import (NotFound, Registry, UnboundParameter, UnknownQuery,
                                ValidationFailed, VerifyFailed, round_half_up)
from formalpub.workflow import classify

from workflow_fixtures import AUTHOR, VENUE, build_thread_fixture

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def registry(tmp_path):
    return Registry(tmp_path / "reg")


@pytest.fixture
def golden_np():
    return Nanopublication.from_dataset(parse_trig((GOLDEN / "np1.trig").read_text("utf-8")))


@pytest.fixture
def thread_registry(tmp_path):
    reg = Registry(tmp_path / "reg")
    fx = build_thread_fixture()
    for np in fx.publications():
        reg.publish(np)
    return reg, fx


class TestPublishFetch:
    def test_publish_and_fetch(self, registry, golden_np):
        code = registry.publish(golden_np)
        assert registry.fetch(code).iri == golden_np.iri

    def test_idempotent_on_identical_content(self, registry, golden_np):
        code1 = registry.publish(golden_np)
        code2 = registry.publish(golden_np)
        assert code1 == code2
        assert len(registry) == 1
        assert len(registry.log_path.read_text().splitlines()) == 1

    def test_tampered_content_rejected(self, registry, golden_np):
        quads = list(golden_np.dataset.quads)
        quads[5] = Quad(quads[5].subject, quads[5].predicate,
                        Literal("tampered"), quads[5].graph)
        tampered = Nanopublication(golden_np.iri, Dataset(quads, golden_np.dataset.prefixes))
        with pytest.raises(VerifyFailed):
            registry.publish(tampered)

    def test_unfinalized_rejected(self, registry):
        from formalpub.nanopub import TEMP_SELF, assemble, attribution_provenance
        from formalpub.rdf import Iri as I
        draft = assemble(
            (Quad(I("http://example.org/s"), I("http://example.org/p"),
                  Literal("x"), I(f"{TEMP_SELF}#assertion")),),
            attribution_provenance(TEMP_SELF, AUTHOR), (), AUTHOR,
            "2021-08-15T10:00:00Z")
        with pytest.raises(VerifyFailed):
            registry.publish(draft)

    def test_invalid_rejected_with_findings(self, registry, golden_np):
        no_pubinfo = Dataset(
            [q for q in golden_np.dataset.quads
             if q.graph.value != golden_np.pubinfo_graph],
            golden_np.dataset.prefixes)
        with pytest.raises(ValidationFailed) as err:
            registry.publish(Nanopublication(golden_np.iri, no_pubinfo))
        assert err.value.findings

    def test_unknown_code(self, registry):
        with pytest.raises(NotFound):
            registry.fetch("RA" + "x" * 43)

    def test_fetch_bytes_identical_across_rebuild(self, tmp_path, golden_np):
        reg = Registry(tmp_path / "reg")
        code = reg.publish(golden_np)
        first = reg.fetch_trig(code)
        reopened = Registry(tmp_path / "reg")
        assert reopened.fetch_trig(code) == first
        assert reopened.fetch(code).dataset.quad_set() == golden_np.dataset.quad_set()

    def test_truncation_sweep(self, tmp_path):
        reg = Registry(tmp_path / "reg")
        fx = build_thread_fixture()
        codes = [reg.publish(np) for np in fx.publications()]
        log_lines = (tmp_path / "reg" / "log").read_text().splitlines()
        assert log_lines == codes
        for k in range(len(codes) + 1):
            stage = tmp_path / f"stage{k}"
            shutil.copytree(tmp_path / "reg", stage)
            (stage / "log").write_text("".join(c + "\n" for c in codes[:k]))
            reopened = Registry(stage)
            assert len(reopened) == k
            assert list(reopened.codes()) == codes[:k]
            for code in codes[:k]:
                assert reopened.fetch(code)

    def test_resolve_accepts_code_and_iri(self, registry, golden_np):
        code = registry.publish(golden_np)
        assert registry.resolve(code).iri == golden_np.iri
        assert registry.resolve(golden_np.iri).iri == golden_np.iri
        assert registry.resolve(golden_np.iri + "#assertion").iri == golden_np.iri


class TestQueries:
    def test_list_submissions(self, thread_registry):
        reg, fx = thread_registry
        rows = reg.run_query("list-submissions", {"venue": VENUE})
        assert len(rows) == 1
        row = rows[0]
        assert row["submission"] == fx.submission.iri
        assert row["formalization"] == fx.formalization.iri
        assert row["latest_version"] == fx.update.iri
        assert row["status"] == "decided"
        assert row["review_count"] == 2

    def test_reviews_for_version_without_reviews(self, thread_registry):
        reg, fx = thread_registry
        assert reg.run_query("reviews-for", {"target": fx.update.iri}) == []

    def test_reviews_for_formalization(self, thread_registry):
        reg, fx = thread_registry
        rows = reg.run_query("reviews-for", {"target": fx.formalization.iri})
        assert [r["review"] for r in rows] == [fx.reviews[0].iri]
        assert rows[0]["impact"] == 1

    def test_responses_for(self, thread_registry):
        reg, fx = thread_registry
        rows = reg.run_query("responses-for", {"review": fx.reviews[0].iri})
        assert [r["response"] for r in rows] == [fx.responses[0].iri]

    def test_thread_rows_match_builder(self, thread_registry):
        from formalpub.workflow import build_thread
        reg, fx = thread_registry
        rows = reg.run_query("thread", {"submission": fx.submission.iri})
        thread = build_thread(reg.corpus(), fx.submission.iri)
        assert len(rows) == len(thread.members())
        kinds = sorted(r["kind"] for r in rows)
        assert kinds == sorted(["F", "S", "U", "R", "R", "A", "A", "C", "D"])

    def test_latest_version(self, thread_registry):
        reg, fx = thread_registry
        (row,) = reg.run_query("latest-version", {"formalization": fx.formalization.iri})
        assert row == {"formalization": fx.formalization.iri,
                       "latest_version": fx.update.iri, "version_count": 2}

    def test_class_definitions_by_author(self, thread_registry):
        reg, fx = thread_registry
        rows = reg.run_query("class-definitions", {"author": AUTHOR})
        assert [r["class_definition"] for r in rows] == [fx.class_def.iri]
        assert rows[0]["label"] == "test measure"

    def test_unknown_query(self, registry):
        with pytest.raises(UnknownQuery):
            registry.run_query("select-everything", {})

    def test_unbound_parameter(self, registry):
        with pytest.raises(UnboundParameter):
            registry.run_query("list-submissions", {})

    def test_query_determinism(self, thread_registry):
        reg, fx = thread_registry
        a = json.dumps(reg.run_query("thread", {"submission": fx.submission.iri}))
        b = json.dumps(reg.run_query("thread", {"submission": fx.submission.iri}))
        assert a == b


class TestStats:
    def test_round_half_up_rendering(self):
        assert round_half_up(34, 15) == "2.27"
        assert round_half_up(119, 15) == "7.93"
        assert round_half_up(25, 15) == "1.67"
        assert round_half_up(1, 8) == "0.13"
        assert round_half_up(5, 2) == "2.50"

    def test_single_thread_totals(self, thread_registry):
        reg, fx = thread_registry
        report = reg.stats(VENUE)
        assert [r.total for r in report.rows] == [1] * 9
        assert {r.per_submission for r in report.rows} == {"1.00"}

    def test_totals_conserved(self, thread_registry):
        reg, fx = thread_registry
        report = reg.stats(VENUE)
        assert sum(r.total for r in report.rows) == len(reg)

    def test_totals_match_direct_recount(self, thread_registry):
        reg, fx = thread_registry
        recount: dict[str, int] = {}
        for code in reg.codes():
            kind = classify(reg.fetch(code))
            recount[kind] = recount.get(kind, 0) + 1
        report = {r.key: r.total for r in reg.stats(VENUE).rows}
        assert report["submissions"] == recount["S"]
        assert report["superpattern-definitions"] == recount["F"]
        assert report["updated-superpattern-definitions"] == recount["U"]
        assert report["class-definitions"] == recount["C"]
        assert (report["superpattern-reviews"]
                + report["class-definition-reviews"]) == recount["R"]
        assert (report["superpattern-review-responses"]
                + report["class-definition-review-responses"]) == recount["A"]
        assert report["decisions"] == recount["D"]

    def test_empty_venue(self, registry):
        report = registry.stats("https://w3id.org/fpsi/Nothing")
        assert all(r.total == 0 for r in report.rows)
        assert all(r.per_submission == "—" for r in report.rows)


class TestGraphExport:
    def test_node_multiset(self, thread_registry):
        reg, fx = thread_registry
        nodes, edges = reg.graph_data(VENUE)
        tally: dict[str, int] = {}
        for node in nodes:
            tally[node["type"]] = tally.get(node["type"], 0) + 1
        assert tally == {"F": 1, "S": 1, "U": 1, "R": 2, "A": 2, "C": 1, "D": 1}

    def test_exact_edge_list(self, thread_registry):
        reg, fx = thread_registry
        _, edges = reg.graph_data(VENUE)
        expected = {
            (fx.submission.iri, fx.formalization.iri, "ref"),
            (fx.formalization.iri, fx.class_def.iri, "ref"),
            (fx.update.iri, fx.class_def.iri, "ref"),
            (fx.update.iri, fx.formalization.iri, "supersedes"),
            (fx.reviews[0].iri, fx.formalization.iri, "ref"),
            (fx.reviews[1].iri, fx.class_def.iri, "ref"),
            (fx.responses[0].iri, fx.reviews[0].iri, "ref"),
            (fx.responses[0].iri, fx.formalization.iri, "ref"),
            (fx.responses[1].iri, fx.reviews[1].iri, "ref"),
            (fx.responses[1].iri, fx.formalization.iri, "ref"),
            (fx.decision.iri, fx.update.iri, "ref"),
        }
        assert {(e["from"], e["to"], e["kind"]) for e in edges} == expected

    def test_edge_count_matches_text_recount(self, thread_registry):
        # Independent recount: scan the stored TriG text for cross-references.
        reg, fx = thread_registry
        nodes, edges = reg.graph_data(VENUE)
        node_ids = {n["id"] for n in nodes}
        recount = 0
        for code in reg.codes():
            np = reg.fetch(code)
            text = reg.fetch_trig(code)
            stems = set(re.findall(r"http://purl\.org/np/RA[A-Za-z0-9_-]{43}", text))
            recount += len((stems - {np.iri}) & node_ids)
        assert len(edges) == recount

    def test_dot_output(self, thread_registry):
        reg, fx = thread_registry
        dot = reg.export_graph(VENUE, "dot")
        assert dot.startswith("digraph")
        assert "shape=circle" in dot
        assert dot.count("color=red") == 1  # exactly one superseding edge
        assert f'"{fx.decision.iri}" [label="D"' in dot

    def test_json_output(self, thread_registry):
        reg, fx = thread_registry
        payload = json.loads(reg.export_graph(VENUE, "json"))
        assert set(payload.keys()) == {"nodes", "edges"}
        assert all(e["kind"] in ("ref", "supersedes") for e in payload["edges"])

    def test_empty_venue_graph(self, registry):
        nodes, edges = registry.graph_data("https://w3id.org/fpsi/Nothing")
        assert nodes == [] and edges == []
