// Thread view: the version chain (superseded versions struck through),
// reviews with their dimension badges, responses, and the decision.

import type { ApiClient, ReviewRow, ThreadRow } from "./api.js";
import { codeOf } from "./api.js";
import { routeHash } from "./router.js";

function badge(text: string, cls = ""): HTMLElement {
  const span = document.createElement("span");
  span.className = `badge ${cls}`.trim();
  span.textContent = text;
  return span;
}

function reviewItem(review: ReviewRow): HTMLElement {
  const item = document.createElement("li");
  item.className = "review";
  item.append(
    badge(review.aspect, "dim-aspect"),
    badge(review.disposition, "dim-disposition"),
    badge(review.action, "dim-action"),
    badge(`impact ${review.impact}`, "dim-impact"),
  );
  const text = document.createElement("p");
  text.textContent = review.text;
  const respond = document.createElement("a");
  respond.href = review.respond_link;
  respond.textContent = "respond";
  item.append(text, respond);
  return item;
}

export async function mountThread(
  root: HTMLElement,
  api: ApiClient,
  submission: string,
): Promise<ThreadRow[]> {
  const rows = await api.thread(submission);
  const heading = document.createElement("h2");
  heading.textContent = `Thread ${codeOf(submission)}`;
  root.append(heading);

  const versions = rows.filter((r) => r.kind === "F" || r.kind === "U");
  const versionList = document.createElement("ol");
  versionList.className = "versions";
  versions.forEach((version, index) => {
    const item = document.createElement("li");
    const link = document.createElement("a");
    link.href = version.view_link;
    link.textContent = codeOf(version.iri);
    const isHead = index === versions.length - 1;
    if (!isHead) {
      // superseded versions are struck through and point at the head
      const struck = document.createElement("s");
      struck.append(link);
      item.append(struck, document.createTextNode(" → superseded"));
    } else {
      item.append(link, document.createTextNode(" (current)"));
    }
    versionList.append(item);
  });
  root.append(versionList);

  const decision = rows.find((r) => r.kind === "D");
  if (decision) {
    const line = document.createElement("p");
    line.append(badge("decision", "status-decided"));
    const summary = await api.summary(codeOf(decision.iri));
    line.append(document.createTextNode(` recorded ${summary.created ?? ""} `));
    const view = document.createElement("a");
    view.href = decision.view_link;
    view.textContent = "view";
    line.append(view);
    root.append(line);
  }

  const reviewsHeading = document.createElement("h3");
  reviewsHeading.textContent = "Reviews";
  root.append(reviewsHeading);
  const list = document.createElement("ul");
  list.className = "reviews";
  const reviewable = rows.filter((r) => ["F", "U", "C"].includes(r.kind));
  for (const target of reviewable) {
    for (const review of await api.reviewsFor(target.iri)) {
      const item = reviewItem(review);
      for (const response of await api.responsesFor(review.review)) {
        const reply = document.createElement("p");
        reply.className = "response";
        reply.append(
          badge(response.agreement, "dim-agreement"),
          badge(response.addressed, "dim-addressed"),
          document.createTextNode(` ${response.text}`),
        );
        item.append(reply);
      }
      list.append(item);
    }
  }
  root.append(list);

  const compose = document.createElement("a");
  const head = versions[versions.length - 1];
  compose.href = routeHash("review", { target: codeOf(head.iri) });
  compose.textContent = "add a review of the current version";
  root.append(compose);
  return rows;
}
