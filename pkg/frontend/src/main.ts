// Entry point: hash router dispatching to the dashboard, forms, thread view,
// and graph view. A hard refresh reproduces any page from the API alone.

import { ApiClient, codeOf } from "./api.js";
import { mountDashboard } from "./dashboard.js";
import type { FormKind } from "./forms.js";
import { mountForm } from "./forms.js";
import { mountGraph } from "./graph.js";
import { onRouteChange, routeHash } from "./router.js";
import { mountThread } from "./thread.js";

const DEFAULT_VENUE = "https://w3id.org/fpsi/DataScienceSpecialIssue";

function actorIri(): string {
  let actor = window.localStorage.getItem("fp-actor");
  if (!actor) {
    actor = window.prompt("Your creator IRI (e.g. an ORCID URL):",
      "https://example.org/actor/anonymous") || "https://example.org/actor/anonymous";
    window.localStorage.setItem("fp-actor", actor);
  }
  return actor;
}

const FORM_PAGES: Record<string, { kind: FormKind; map: Record<string, string> }> = {
  "class": { kind: "class-definition", map: {} },
  "compose": { kind: "formalization", map: {} },
  "review": { kind: "review", map: { target: "target" } },
  "response": { kind: "response", map: { review: "review" } },
  "submit": { kind: "submission", map: { formalization: "formalization" } },
  "decision": { kind: "decision", map: { target: "target" } },
};

async function prefillFromParams(
  api: ApiClient,
  map: Record<string, string>,
  params: Record<string, string>,
): Promise<Record<string, string>> {
  const prefill: Record<string, string> = { venue: DEFAULT_VENUE };
  for (const [field, param] of Object.entries(map)) {
    const value = params[param];
    if (!value) continue;
    // deep links carry codes; forms want the publication IRI
    try {
      prefill[field] = (await api.summary(codeOf(value))).iri;
    } catch {
      prefill[field] = value;
    }
  }
  return prefill;
}

async function dispatch(root: HTMLElement, api: ApiClient, page: string,
                        params: Record<string, string>): Promise<void> {
  root.replaceChildren();
  if (page in FORM_PAGES) {
    const { kind, map } = FORM_PAGES[page];
    const constants = await api.constants();
    const prefill = await prefillFromParams(api, map, params);
    mountForm(root, kind, api, constants, prefill, actorIri(), (result) => {
      const done = document.createElement("p");
      done.className = "published";
      const link = document.createElement("a");
      link.href = `/view/${result.code}`;
      link.textContent = result.code;
      done.append(document.createTextNode("Published "), link);
      root.prepend(done);
    });
    return;
  }
  if (page === "thread") {
    const submission = params.submission;
    if (!submission) throw new Error("missing submission parameter");
    const summary = await api.summary(codeOf(submission));
    await mountThread(root, api, summary.iri);
    return;
  }
  if (page === "graph") {
    const data = await api.graph(params.venue || DEFAULT_VENUE);
    mountGraph(root, data.nodes, data.edges);
    return;
  }
  await mountDashboard(root, api, params.venue || DEFAULT_VENUE);
}

export function start(): void {
  const api = new ApiClient();
  const root = document.getElementById("app")!;
  const nav = document.getElementById("nav")!;
  for (const [label, target] of [
    ["dashboard", routeHash("dashboard")],
    ["formalize", routeHash("compose")],
    ["mint class", routeHash("class")],
    ["graph", routeHash("graph")],
  ] as const) {
    const link = document.createElement("a");
    link.href = target;
    link.textContent = label;
    nav.append(link);
  }
  onRouteChange((route) => {
    dispatch(root, api, route.page, route.params).catch((failure) => {
      const message = document.createElement("p");
      message.className = "errors";
      message.textContent =
        failure instanceof Error ? failure.message : JSON.stringify(failure);
      root.replaceChildren(message);
    });
  });
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  start();
}
