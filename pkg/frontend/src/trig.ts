// Draft nanopublication assembly. The server finalizes drafts (computes the
// content hash and rewrites the temporary IRI), so the client only has to
// emit a structurally complete four-graph document against the well-known
// temporary base. Vocabulary IRIs come from the served constants; nothing
// here duplicates the vocabulary tables.

import type { Constants, SlotValue } from "./api.js";

export const TEMP_BASE = "urn:np:temp";

type Term = { iri: string } | { text: string; datatype?: string };
type Triple = [Term, string, Term];

export function iri(value: string): Term {
  return { iri: value };
}

export function text(value: string, datatype?: string): Term {
  return { text: value, datatype };
}

function escapeText(value: string): string {
  return value
    .replace(/\\/g, "\\\\")
    .replace(/"/g, '\\"')
    .replace(/\n/g, "\\n")
    .replace(/\r/g, "\\r")
    .replace(/\t/g, "\\t");
}

function term(t: Term): string {
  if ("iri" in t) return `<${t.iri}>`;
  const body = `"${escapeText(t.text)}"`;
  return t.datatype ? `${body}^^<${t.datatype}>` : body;
}

export class Vocabulary {
  private prefixes: Record<string, string>;

  constructor(private constants: Constants) {
    this.prefixes = constants.vocabulary.prefixes;
  }

  expand(curie: string): string {
    const colon = curie.indexOf(":");
    const prefix = curie.slice(0, colon);
    const expansion = this.prefixes[prefix];
    if (!expansion) throw new Error(`unknown prefix in ${curie}`);
    return expansion + curie.slice(colon + 1);
  }

  table(...path: string[]): Record<string, string> {
    let node: unknown = this.constants.vocabulary;
    for (const key of path) {
      node = (node as Record<string, unknown>)[key];
      if (node === undefined) throw new Error(`no vocabulary table ${path.join(".")}`);
    }
    return node as Record<string, string>;
  }

  term(...path: string[]): string {
    const leafPath = path.slice(0, -1);
    const leaf = path[path.length - 1];
    return this.expand(this.table(...leafPath)[leaf]);
  }

  qualifierIri(name: string): string {
    if (name.startsWith("can ")) {
      return this.expand(this.table("can_qualifiers")[name.slice(4)]);
    }
    const spec = this.constants.vocabulary["qualifiers"] as Record<
      string,
      { iri: string }
    >;
    return this.expand(spec[name].iri);
  }

  relationIri(name: string): string {
    const spec = this.constants.vocabulary["relations"] as Record<
      string,
      { iri: string }
    >;
    return this.expand(spec[name].iri);
  }

  universalContext(): string {
    return this.expand(this.constants.vocabulary["universal_context"] as string);
  }
}

export interface DraftParts {
  assertion: Triple[];
  provenance: Triple[];
  pubinfoExtras?: Triple[];
}

export function nowStamp(date = new Date()): string {
  return date.toISOString().replace(/\.\d{3}Z$/, "Z");
}

/** Assemble a complete draft document: head, assertion, provenance, pubinfo. */
export function assembleDraft(
  vocab: Vocabulary,
  parts: DraftParts,
  creator: string,
  timestamp = nowStamp(),
): string {
  const self = iri(TEMP_BASE);
  const graphs = {
    head: `${TEMP_BASE}#Head`,
    assertion: `${TEMP_BASE}#assertion`,
    provenance: `${TEMP_BASE}#provenance`,
    pubinfo: `${TEMP_BASE}#pubinfo`,
  };
  const head: Triple[] = [
    [self, vocab.term("terms", "type"), iri(vocab.term("head", "Nanopublication"))],
    [self, vocab.term("head", "hasAssertion"), iri(graphs.assertion)],
    [self, vocab.term("head", "hasProvenance"), iri(graphs.provenance)],
    [self, vocab.term("head", "hasPublicationInfo"), iri(graphs.pubinfo)],
  ];
  const pubinfo: Triple[] = [
    [self, vocab.term("pubinfo", "created"),
      text(timestamp, vocab.term("terms", "dateTime"))],
    [self, vocab.term("pubinfo", "creator"), iri(creator)],
    ...(parts.pubinfoExtras ?? []),
  ];

  const block = (graph: string, triples: Triple[]): string => {
    const lines = triples.map(([s, p, o]) => `  ${term(s)} <${p}> ${term(o)} .`);
    return `<${graph}> {\n${lines.join("\n")}\n}\n`;
  };

  return [
    block(graphs.head, head),
    block(graphs.assertion, parts.assertion),
    block(graphs.provenance, parts.provenance),
    block(graphs.pubinfo, pubinfo),
  ].join("\n");
}

function attribution(vocab: Vocabulary, creator: string): Triple[] {
  return [
    [iri(`${TEMP_BASE}#assertion`), vocab.term("provenance", "wasAttributedTo"),
      iri(creator)],
  ];
}

export interface ClassDefinitionValues {
  label: string;
  definition: string;
  superClass: string;
  related: string[];
}

export function mintFragment(label: string): string {
  const fragment = label.trim().replace(/\s+/g, "-").replace(/[^A-Za-z0-9_-]/g, "");
  if (!fragment) throw new Error(`label ${JSON.stringify(label)} yields no fragment`);
  return fragment;
}

export function classDefinitionDraft(
  vocab: Vocabulary,
  values: ClassDefinitionValues,
  creator: string,
  timestamp?: string,
): string {
  const cls = iri(`${TEMP_BASE}#${mintFragment(values.label)}`);
  const assertion: Triple[] = [
    [cls, vocab.term("terms", "type"), iri(vocab.term("terms", "Class"))],
    [cls, vocab.term("terms", "subClassOf"), iri(values.superClass)],
    [cls, vocab.term("terms", "label"), text(values.label)],
    [cls, vocab.term("terms", "definition"), text(values.definition)],
    ...values.related.map(
      (r): Triple => [cls, vocab.term("terms", "relatedMatch"), iri(r)],
    ),
  ];
  return assembleDraft(
    vocab, { assertion, provenance: attribution(vocab, creator) }, creator, timestamp);
}

export interface FormalizationValues {
  context: SlotValue | null; // null = unrestricted context
  subject: SlotValue;
  qualifier: string;
  relation: string;
  object: SlotValue;
  source?: string;
  quote?: string;
}

export function formalizationDraft(
  vocab: Vocabulary,
  values: FormalizationValues,
  creator: string,
  timestamp?: string,
): string {
  const statement = iri(`${TEMP_BASE}#assertion`);
  const contextIri = values.context ? values.context.iri : vocab.universalContext();
  const assertion: Triple[] = [
    [statement, vocab.term("slots", "context"), iri(contextIri)],
    [statement, vocab.term("slots", "subject"), iri(values.subject.iri)],
    [statement, vocab.term("slots", "qualifier"), iri(vocab.qualifierIri(values.qualifier))],
    [statement, vocab.term("slots", "relation"), iri(vocab.relationIri(values.relation))],
    [statement, vocab.term("slots", "object"), iri(values.object.iri)],
  ];
  const labelled = [values.context, values.subject, values.object].filter(
    (slot): slot is SlotValue => slot !== null,
  );
  for (const slot of labelled) {
    assertion.push([iri(slot.iri), vocab.term("terms", "label"), text(slot.label)]);
  }

  let provenance: Triple[];
  if (values.source) {
    const activity = iri(`${TEMP_BASE}#activity`);
    provenance = [
      [statement, vocab.term("provenance", "wasGeneratedBy"), activity],
      [activity, vocab.term("terms", "type"),
        iri(vocab.term("provenance", "FormalizationActivity"))],
      [activity, vocab.term("provenance", "used"), iri(values.source)],
    ];
    if (values.quote) {
      provenance.push([activity, vocab.term("provenance", "quotedPhrase"),
        text(values.quote)]);
    }
  } else {
    provenance = attribution(vocab, creator);
  }
  return assembleDraft(vocab, { assertion, provenance }, creator, timestamp);
}

export interface ReviewValues {
  target: string; // IRI of the reviewed publication
  aspect: string;
  disposition: string;
  action: string;
  impact: number;
  text: string;
  slot?: string; // claim slot the comment is about
}

export function reviewDraft(
  vocab: Vocabulary,
  values: ReviewValues,
  creator: string,
  timestamp?: string,
): string {
  const comment = iri(`${TEMP_BASE}#comment`);
  const rdfType = vocab.term("terms", "type");
  const assertion: Triple[] = [
    [comment, rdfType, iri(vocab.term("review", "ReviewComment"))],
    [comment, rdfType, iri(vocab.term("review", "aspects", values.aspect))],
    [comment, rdfType, iri(vocab.term("review", "dispositions", values.disposition))],
    [comment, rdfType, iri(vocab.term("review", "actions", values.action))],
    [comment, vocab.term("review", "hasCommentText"), text(values.text)],
    [comment, vocab.term("review", "hasImpact"), text(String(values.impact))],
    [comment, vocab.term("review", "refersTo"), iri(values.target)],
  ];
  if (values.slot) {
    assertion.push([comment, vocab.term("review", "refersToMentioningOf"),
      iri(vocab.term("slots", values.slot))]);
  }
  return assembleDraft(
    vocab, { assertion, provenance: attribution(vocab, creator) }, creator, timestamp);
}

export interface ResponseValues {
  review: string;
  agreement: string;
  addressed: string;
  text: string;
  updated: string;
}

export function responseDraft(
  vocab: Vocabulary,
  values: ResponseValues,
  creator: string,
  timestamp?: string,
): string {
  const comment = iri(`${TEMP_BASE}#comment`);
  const rdfType = vocab.term("terms", "type");
  const assertion: Triple[] = [
    [comment, rdfType, iri(vocab.term("response", "ResponseComment"))],
    [comment, rdfType, iri(vocab.term("response", "agreements", values.agreement))],
    [comment, rdfType, iri(vocab.term("response", "addressed", values.addressed))],
    [comment, vocab.term("review", "hasCommentText"), text(values.text)],
    [comment, vocab.term("response", "isResponseTo"), iri(values.review)],
    [comment, vocab.term("review", "refersTo"), iri(values.updated)],
  ];
  return assembleDraft(
    vocab, { assertion, provenance: attribution(vocab, creator) }, creator, timestamp);
}

export function submissionDraft(
  vocab: Vocabulary,
  formalization: string,
  venue: string,
  creator: string,
  timestamp?: string,
): string {
  const subject = iri(formalization);
  const assertion: Triple[] = [
    [subject, vocab.term("workflow", "withStatus"),
      iri(vocab.term("workflow", "submitted"))],
    [subject, vocab.term("workflow", "partOf"), iri(venue)],
  ];
  return assembleDraft(
    vocab, { assertion, provenance: attribution(vocab, creator) }, creator, timestamp);
}

export interface DecisionValues {
  target: string;
  status: string;
  description: string;
  venue: string;
}

export function decisionDraft(
  vocab: Vocabulary,
  values: DecisionValues,
  creator: string,
  timestamp?: string,
): string {
  const subject = iri(values.target);
  const assertion: Triple[] = [
    [subject, vocab.term("workflow", "description"), text(values.description)],
    [subject, vocab.term("workflow", "withStatus"),
      iri(vocab.term("workflow", "decision_statuses", values.status))],
    [subject, vocab.term("workflow", "partOf"), iri(values.venue)],
  ];
  return assembleDraft(
    vocab, { assertion, provenance: attribution(vocab, creator) }, creator, timestamp);
}
