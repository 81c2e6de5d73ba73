// Schema-driven forms. Templates are generated from the served constants
// (vocabulary options are never hard-coded here) plus optional prefill
// values carried in deep links. Submitting assembles a draft document and
// POSTs it; server findings are surfaced verbatim.

import type { ApiClient, ApiError, Constants, SlotValue } from "./api.js";
import {
  Vocabulary,
  classDefinitionDraft,
  decisionDraft,
  formalizationDraft,
  responseDraft,
  reviewDraft,
  submissionDraft,
} from "./trig.js";

export type FormKind =
  | "class-definition"
  | "formalization"
  | "review"
  | "response"
  | "decision"
  | "submission";

export interface FieldSpec {
  name: string;
  label: string;
  kind: "text" | "textarea" | "iri" | "select" | "slot";
  options?: (string | number)[];
  prefill?: string;
  required?: boolean;
  help?: string;
}

export interface FormTemplate {
  kind: FormKind;
  title: string;
  fields: FieldSpec[];
}

export type Prefill = Record<string, string>;

export function formTemplate(
  kind: FormKind,
  constants: Constants,
  prefill: Prefill = {},
): FormTemplate {
  const f = (spec: FieldSpec): FieldSpec => ({
    required: true,
    ...spec,
    prefill: prefill[spec.name] ?? spec.prefill,
  });
  switch (kind) {
    case "class-definition":
      return {
        kind,
        title: "Mint a class",
        fields: [
          f({ name: "label", label: "Label", kind: "text" }),
          f({ name: "definition", label: "Definition", kind: "textarea" }),
          f({ name: "superClass", label: "Super-class IRI", kind: "iri" }),
          f({ name: "related", label: "Related IRIs (one per line)", kind: "textarea",
              required: false }),
        ],
      };
    case "formalization":
      return {
        kind,
        title: "Formalize a claim",
        fields: [
          f({ name: "context", label: "Context class", kind: "slot", required: false,
              help: "Leave empty for an unrestricted context." }),
          f({ name: "subject", label: "Subject class", kind: "slot" }),
          f({ name: "qualifier", label: "Qualifier", kind: "select",
              options: constants.qualifiers }),
          f({ name: "relation", label: "Relation", kind: "select",
              options: constants.relations }),
          f({ name: "object", label: "Object class", kind: "slot" }),
          f({ name: "source", label: "Source publication IRI", kind: "iri",
              required: false }),
          f({ name: "quote", label: "Quoted phrase", kind: "textarea",
              required: false }),
        ],
      };
    case "review":
      return {
        kind,
        title: "Add a review comment",
        fields: [
          f({ name: "target", label: "Reviewed publication", kind: "iri" }),
          f({ name: "aspect", label: "Aspect", kind: "select",
              options: constants.aspects }),
          f({ name: "disposition", label: "Disposition", kind: "select",
              options: constants.dispositions }),
          f({ name: "action", label: "Required action", kind: "select",
              options: constants.actions }),
          f({ name: "impact", label: "Impact (1-5)", kind: "select",
              options: constants.impacts }),
          f({ name: "text", label: "Comment", kind: "textarea" }),
          f({ name: "slot", label: "Claim slot the comment is about", kind: "select",
              options: ["", "context", "subject", "qualifier", "relation", "object"],
              required: false }),
        ],
      };
    case "response":
      return {
        kind,
        title: "Respond to a review",
        fields: [
          f({ name: "review", label: "Review", kind: "iri" }),
          f({ name: "agreement", label: "Agreement", kind: "select",
              options: constants.agreements }),
          f({ name: "addressed", label: "Point addressed?", kind: "select",
              options: constants.addressed }),
          f({ name: "text", label: "Response", kind: "textarea" }),
          f({ name: "updated", label: "Formalization version it refers to",
              kind: "iri" }),
        ],
      };
    case "submission":
      return {
        kind,
        title: "Submit a formalization",
        fields: [
          f({ name: "formalization", label: "Formalization", kind: "iri" }),
          f({ name: "venue", label: "Venue IRI", kind: "iri" }),
        ],
      };
    case "decision":
      return {
        kind,
        title: "Record a decision",
        fields: [
          f({ name: "target", label: "Final formalization version", kind: "iri" }),
          f({ name: "status", label: "Status", kind: "select",
              options: constants.decision_statuses }),
          f({ name: "text", label: "Description", kind: "textarea" }),
          f({ name: "venue", label: "Venue IRI", kind: "iri" }),
        ],
      };
  }
}

export type FormValues = Record<string, string>;

function fieldControl(field: FieldSpec): HTMLElement {
  if (field.kind === "select") {
    const select = document.createElement("select");
    select.name = field.name;
    for (const option of field.options ?? []) {
      const element = document.createElement("option");
      element.value = String(option);
      element.textContent = String(option);
      select.append(element);
    }
    if (field.prefill) select.value = field.prefill;
    return select;
  }
  if (field.kind === "textarea") {
    const area = document.createElement("textarea");
    area.name = field.name;
    area.rows = 3;
    if (field.prefill) area.value = field.prefill;
    return area;
  }
  if (field.kind === "slot") {
    const wrap = document.createElement("div");
    wrap.className = "slot-pair";
    const iriInput = document.createElement("input");
    iriInput.name = `${field.name}.iri`;
    iriInput.placeholder = "class IRI";
    const labelInput = document.createElement("input");
    labelInput.name = `${field.name}.label`;
    labelInput.placeholder = "label";
    wrap.append(iriInput, labelInput);
    return wrap;
  }
  const input = document.createElement("input");
  input.name = field.name;
  if (field.kind === "iri") input.placeholder = "http(s) IRI or RA… code";
  if (field.prefill) input.value = field.prefill;
  return input;
}

export function renderForm(
  template: FormTemplate,
  onSubmit: (values: FormValues) => void,
): HTMLFormElement {
  const form = document.createElement("form");
  form.className = `fp-form fp-form-${template.kind}`;
  const heading = document.createElement("h2");
  heading.textContent = template.title;
  form.append(heading);

  for (const field of template.fields) {
    const row = document.createElement("label");
    row.className = "field";
    const caption = document.createElement("span");
    caption.textContent = field.label + (field.required ? "" : " (optional)");
    row.append(caption, fieldControl(field));
    if (field.help) {
      const help = document.createElement("small");
      help.textContent = field.help;
      row.append(help);
    }
    form.append(row);
  }

  const preview = document.createElement("p");
  preview.className = "preview";
  form.append(preview);

  const errors = document.createElement("div");
  errors.className = "errors";
  form.append(errors);

  const submit = document.createElement("button");
  submit.type = "submit";
  submit.textContent = "Publish";
  form.append(submit);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    onSubmit(readValues(form));
  });
  return form;
}

export function readValues(form: HTMLFormElement): FormValues {
  const values: FormValues = {};
  form.querySelectorAll<HTMLInputElement>("input, textarea, select").forEach((el) => {
    if (el.name) values[el.name] = el.value.trim();
  });
  return values;
}

export function showErrors(form: HTMLFormElement, failure: ApiError): void {
  const box = form.querySelector(".errors");
  if (!box) return;
  // surface the server's findings verbatim; nothing is fixed up client-side
  const lines = [`${failure.code}: ${failure.error}`];
  for (const finding of failure.findings ?? []) {
    lines.push(`${finding.code}: ${finding.message}`);
  }
  box.textContent = lines.join("\n");
}

function slotOf(values: FormValues, name: string): SlotValue | null {
  const slotIri = values[`${name}.iri`];
  if (!slotIri) return null;
  return { iri: slotIri, label: values[`${name}.label`] || slotIri };
}

function splitLines(value: string | undefined): string[] {
  return (value ?? "").split("\n").map((line) => line.trim()).filter(Boolean);
}

/** Build the draft document for a filled-in form. */
export function draftFor(
  kind: FormKind,
  vocab: Vocabulary,
  values: FormValues,
  creator: string,
): string {
  switch (kind) {
    case "class-definition":
      return classDefinitionDraft(vocab, {
        label: values.label,
        definition: values.definition,
        superClass: values.superClass,
        related: splitLines(values.related),
      }, creator);
    case "formalization": {
      const subject = slotOf(values, "subject");
      const object = slotOf(values, "object");
      if (!subject || !object) throw new Error("subject and object classes are required");
      return formalizationDraft(vocab, {
        context: slotOf(values, "context"),
        subject,
        qualifier: values.qualifier,
        relation: values.relation,
        object,
        source: values.source || undefined,
        quote: values.quote || undefined,
      }, creator);
    }
    case "review":
      return reviewDraft(vocab, {
        target: values.target,
        aspect: values.aspect,
        disposition: values.disposition,
        action: values.action,
        impact: Number(values.impact),
        text: values.text,
        slot: values.slot || undefined,
      }, creator);
    case "response":
      return responseDraft(vocab, {
        review: values.review,
        agreement: values.agreement,
        addressed: values.addressed,
        text: values.text,
        updated: values.updated,
      }, creator);
    case "submission":
      return submissionDraft(vocab, values.formalization, values.venue, creator);
    case "decision":
      return decisionDraft(vocab, {
        target: values.target,
        status: values.status,
        description: values.text,
        venue: values.venue,
      }, creator);
  }
}

/** Wire a form to the API: live sentence preview plus publish-on-submit. */
export function mountForm(
  root: HTMLElement,
  kind: FormKind,
  api: ApiClient,
  constants: Constants,
  prefill: Prefill,
  creator: string,
  onPublished: (result: { code: string; iri: string }) => void,
): HTMLFormElement {
  const vocab = new Vocabulary(constants);
  const template = formTemplate(kind, constants, prefill);
  const form = renderForm(template, async (values) => {
    try {
      const result = await api.publish(draftFor(kind, vocab, values, creator));
      onPublished(result);
    } catch (failure) {
      showErrors(form, failure as ApiError);
    }
  });

  if (kind === "formalization") {
    // one source of truth for the sentence: the server renders the preview
    const preview = form.querySelector<HTMLElement>(".preview")!;
    form.addEventListener("input", async () => {
      const values = readValues(form);
      const subject = slotOf(values, "subject");
      const object = slotOf(values, "object");
      if (!subject || !object) {
        preview.textContent = "";
        return;
      }
      try {
        const rendered = await api.renderSentence({
          context: slotOf(values, "context"),
          subject,
          qualifier: values.qualifier,
          relation: values.relation,
          object,
        });
        preview.textContent = rendered.sentence;
      } catch {
        preview.textContent = "";
      }
    });
  }

  root.append(form);
  return form;
}
