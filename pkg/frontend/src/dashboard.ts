// Submission overview: one row per submission with status, review count,
// and follow-up action links. Every cell is re-fetchable state.

import type { ApiClient, SubmissionRow } from "./api.js";
import { codeOf } from "./api.js";

export function dashboardTable(rows: SubmissionRow[]): HTMLElement {
  if (rows.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No submissions yet for this venue.";
    return empty;
  }
  const table = document.createElement("table");
  table.className = "dashboard";
  const head = document.createElement("tr");
  for (const column of ["submission", "status", "reviews", "created", "actions"]) {
    const th = document.createElement("th");
    th.textContent = column;
    head.append(th);
  }
  table.append(head);

  for (const row of rows) {
    const tr = document.createElement("tr");
    tr.dataset.status = row.status;

    const submission = document.createElement("td");
    const threadLink = document.createElement("a");
    threadLink.href = row.thread_link;
    threadLink.textContent = codeOf(row.submission);
    submission.append(threadLink);

    const status = document.createElement("td");
    const badge = document.createElement("span");
    badge.className = `badge status-${row.status}`;
    badge.textContent = row.status;
    status.append(badge);

    const reviews = document.createElement("td");
    reviews.textContent = String(row.review_count);

    const created = document.createElement("td");
    created.textContent = row.created;

    const actions = document.createElement("td");
    const review = document.createElement("a");
    review.href = row.review_link;
    review.textContent = "add review";
    const view = document.createElement("a");
    view.href = row.view_link;
    view.textContent = "classical view";
    actions.append(review, document.createTextNode(" · "), view);

    tr.append(submission, status, reviews, created, actions);
    table.append(tr);
  }
  return table;
}

export async function mountDashboard(
  root: HTMLElement,
  api: ApiClient,
  venue: string,
): Promise<SubmissionRow[]> {
  const rows = await api.listSubmissions(venue);
  const heading = document.createElement("h2");
  heading.textContent = `Submissions (${rows.length})`;
  root.append(heading, dashboardTable(rows));
  return rows;
}
