#!/usr/bin/env python3
"""Drive one submission through the whole review workflow via the CLI layer.

Run:  python demos/03_review_workflow.py
"""

import json
import tempfile

from formalpub.cli import main


def fp(store, *args, actor="https://orcid.org/0000-0000-0000-0001", at=None,
       as_json=True):
    argv = ["--store", store, "--actor", actor]
    if as_json:
        argv.append("--json")
    if at:
        argv += ["--at", at]
    code = main(argv + list(args))
    assert code == 0, f"fp {' '.join(args)} exited {code}"


VENUE = "https://w3id.org/fpsi/DataScienceSpecialIssue"

with tempfile.TemporaryDirectory() as store:
    import io
    from contextlib import redirect_stdout

    def fp_json(*args, **kwargs):
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            fp(store, *args, **kwargs)
        return json.loads(buffer.getvalue().splitlines()[0])

    klass = fp_json("class", "new", "--label", "demo measure",
                    "--definition", "a measure for the demo",
                    "--super", "http://www.wikidata.org/entity/Q35120",
                    at="2021-08-01T10:00:00Z")
    claim = fp_json("claim", "new",
                    "--context", "http://www.wikidata.org/entity/Q5",
                    "--subject", klass["class_iri"],
                    "--qualifier", "generally", "--relation", "affects",
                    "--object", "http://www.wikidata.org/entity/Q41571",
                    at="2021-08-01T10:01:00Z")
    submission = fp_json("submit", "--formalization", claim["code"],
                         "--venue", VENUE, at="2021-08-01T10:02:00Z")
    review = fp_json("review", "add", "--target", claim["code"],
                     "--aspect", "content", "--disposition", "neutral",
                     "--action", "suggestion", "--impact", "2",
                     "--text", "consider a causal relation", "--slot", "relation",
                     actor="https://orcid.org/0000-0000-0000-0002",
                     at="2021-08-01T10:03:00Z")
    fp_json("respond", "--review", review["code"], "--agreement", "partial",
            "--addressed", "partially-addressed",
            "--text", "kept 'affects', added a note", "--updated", claim["code"],
            at="2021-08-01T10:04:00Z")
    update = fp_json("update", "--old", claim["code"], "--qualifier", "mostly",
                     at="2021-08-01T10:05:00Z")
    fp_json("decide", "--target", update["code"],
            "--status", "accepted-for-publication",
            "--text", "all comments addressed", "--venue", VENUE,
            actor="https://orcid.org/0000-0000-0000-0003",
            at="2021-08-01T10:06:00Z")

    print("published acts:")
    for name, act in (("class", klass), ("claim", claim), ("submission", submission),
                      ("review", review), ("update", update)):
        print(f"  {name:>10}: {act['code']}")

    print()
    fp(store, "stats", "--venue", VENUE, as_json=False)
    print()
    fp(store, "graph", "--venue", VENUE, "--format", "dot", as_json=False)
