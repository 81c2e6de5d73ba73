// Typed client for the /api/v1 endpoints. The UI holds no state of its own:
// everything rendered is re-fetchable from here.

export interface SlotValue {
  iri: string;
  label: string;
}

export interface ClaimSummary {
  context: SlotValue | null;
  subject: SlotValue;
  qualifier: string;
  relation: string;
  object: SlotValue;
  sentence: string;
  formula: string;
}

export interface PublicationSummary {
  iri: string;
  code: string;
  kind: string | null;
  graphs: string[];
  quads: number;
  created: string | null;
  creators: string[];
  supersedes: string | null;
  claim: ClaimSummary | null;
}

export interface SubmissionRow {
  submission: string;
  formalization: string;
  latest_version: string;
  status: string;
  review_count: number;
  created: string;
  creator: string;
  review_link: string;
  thread_link: string;
  view_link: string;
}

export interface ThreadRow {
  iri: string;
  kind: string;
  created: string;
  view_link: string;
}

export interface ReviewRow {
  review: string;
  target: string;
  aspect: string;
  disposition: string;
  action: string;
  impact: number;
  text: string;
  created: string;
  creator: string;
  respond_link: string;
}

export interface ResponseRow {
  response: string;
  review: string;
  agreement: string;
  addressed: string;
  refers_to: string;
  text: string;
  created: string;
  creator: string;
}

export interface GraphNode {
  id: string;
  type: string;
  label: string;
}

export interface GraphEdge {
  from: string;
  to: string;
  kind: "ref" | "supersedes";
}

export interface Constants {
  vocabulary: {
    prefixes: Record<string, string>;
    [table: string]: unknown;
  };
  qualifiers: string[];
  relations: string[];
  aspects: string[];
  dispositions: string[];
  actions: string[];
  agreements: string[];
  addressed: string[];
  decision_statuses: string[];
  impacts: number[];
}

export interface ApiError {
  status: number;
  code: string;
  error: string;
  findings?: { code: string; message: string }[];
}

export class ApiClient {
  constructor(private base = "/api/v1") {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await fetch(this.base + path, init);
    if (!response.ok) {
      let body: { code?: string; error?: string; findings?: ApiError["findings"] } = {};
      try {
        body = await response.json();
      } catch {
        /* non-JSON error body */
      }
      const failure: ApiError = {
        status: response.status,
        code: body.code ?? "Error",
        error: body.error ?? response.statusText,
        findings: body.findings,
      };
      throw failure;
    }
    return response;
  }

  async constants(): Promise<Constants> {
    return (await this.request("/constants")).json();
  }

  async publish(trig: string): Promise<{ code: string; iri: string }> {
    return (
      await this.request("/np", {
        method: "POST",
        headers: { "content-type": "application/trig" },
        body: trig,
      })
    ).json();
  }

  async summary(code: string): Promise<PublicationSummary> {
    return (await this.request(`/np/${code}?format=json`)).json();
  }

  async listSubmissions(venue: string): Promise<SubmissionRow[]> {
    const query = await this.request(
      `/queries/list-submissions?venue=${encodeURIComponent(venue)}`,
    );
    return (await query.json()).rows;
  }

  async thread(submission: string): Promise<ThreadRow[]> {
    const query = await this.request(
      `/queries/thread?submission=${encodeURIComponent(submission)}`,
    );
    return (await query.json()).rows;
  }

  async reviewsFor(target: string): Promise<ReviewRow[]> {
    const query = await this.request(
      `/queries/reviews-for?target=${encodeURIComponent(target)}`,
    );
    return (await query.json()).rows;
  }

  async responsesFor(review: string): Promise<ResponseRow[]> {
    const query = await this.request(
      `/queries/responses-for?review=${encodeURIComponent(review)}`,
    );
    return (await query.json()).rows;
  }

  async graph(venue: string): Promise<{ nodes: GraphNode[]; edges: GraphEdge[] }> {
    return (
      await this.request(`/graph?venue=${encodeURIComponent(venue)}&format=json`)
    ).json();
  }

  async renderSentence(claim: {
    context: SlotValue | null;
    subject: SlotValue;
    qualifier: string;
    relation: string;
    object: SlotValue;
  }): Promise<{ sentence: string; formula: string }> {
    return (
      await this.request("/render/sentence", {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(claim),
      })
    ).json();
  }
}

export function codeOf(iri: string): string {
  const tail = iri.split("/").pop() ?? iri;
  return tail.split("#")[0];
}
