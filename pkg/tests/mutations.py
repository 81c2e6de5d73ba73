"""Single-quad mutation generators for tamper-evidence sweeps."""

from formalpub.rdf import Dataset, Iri, Literal, Quad

FRESH_IRI = "http://example.org/mutation/fresh"


def deletions(d: Dataset):
    quads = list(d.quads)
    for i in range(len(quads)):
        yield Dataset(quads[:i] + quads[i + 1:], d.prefixes)


def insertions(d: Dataset):
    fresh = Iri(FRESH_IRI)
    graphs = {q.graph for q in d.quads} | {Iri(FRESH_IRI + "/graph")}
    for graph in sorted(graphs, key=lambda g: g.value):
        quad = Quad(fresh, fresh, Literal("inserted"), graph)
        yield Dataset(list(d.quads) + [quad], d.prefixes)


def substitutions(d: Dataset):
    quads = list(d.quads)
    fresh = Iri(FRESH_IRI)
    for i, q in enumerate(quads):
        replacements = [
            Quad(fresh, q.predicate, q.object, q.graph),
            Quad(q.subject, fresh, q.object, q.graph),
            Quad(q.subject, q.predicate, fresh, q.graph),
            Quad(q.subject, q.predicate, q.object, fresh),
        ]
        if isinstance(q.object, Literal):
            replacements.append(Quad(q.subject, q.predicate,
                                     Literal(q.object.form + "~tampered"), q.graph))
        for replacement in replacements:
            if replacement != q:
                yield Dataset(quads[:i] + [replacement] + quads[i + 1:], d.prefixes)


def all_single_mutations(d: Dataset):
    yield from deletions(d)
    yield from insertions(d)
    yield from substitutions(d)


def random_mutations(d: Dataset, count: int, seed: int = 0):
    import random
    rng = random.Random(seed)
    quads = list(d.quads)
    fresh = Iri(FRESH_IRI)
    for _ in range(count):
        op = rng.choice(("delete", "insert", "substitute"))
        i = rng.randrange(len(quads))
        if op == "delete":
            yield Dataset(quads[:i] + quads[i + 1:], d.prefixes)
        elif op == "insert":
            quad = Quad(fresh, fresh, Literal(f"inserted-{rng.random()}"), quads[i].graph)
            yield Dataset(quads + [quad], d.prefixes)
        else:
            q = quads[i]
            position = rng.randrange(4)
            terms = [q.subject, q.predicate, q.object, q.graph]
            terms[position] = Iri(FRESH_IRI + f"/{rng.random()}")
            yield Dataset(quads[:i] + [Quad(*terms)] + quads[i + 1:], d.prefixes)
