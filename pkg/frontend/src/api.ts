/**
 * Typed client for the knowledge-graph service API.
 * Base URL is configurable so the client can be served separately
 * from the backend during development.
 */

export interface ResultRows {
  columns: string[];
  rows: string[][];
}

export interface ChatResponse {
  answer: string;
  cypher: string | null;
  rows: ResultRows | null;
  refused: boolean;
  trace_id: string;
}

export interface SchemaEdge {
  type: string;
  from: string;
  to: string;
}

export interface GraphSchema {
  nodes: Record<string, string[]>;
  edges: SchemaEdge[];
}

export interface ErrorEnvelope {
  code: string;
  message: string;
}

/** Thrown for non-2xx responses that carry the service error envelope. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let code = "unknown";
  let message = `request failed with status ${response.status}`;
  try {
    const body = (await response.json()) as ErrorEnvelope;
    if (body && typeof body.code === "string") {
      code = body.code;
      message = body.message ?? message;
    }
  } catch {
    // non-JSON error body; keep the fallback message
  }
  return new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  private url(path: string): string {
    return `${this.baseUrl.replace(/\/$/, "")}${path}`;
  }

  async chat(question: string): Promise<ChatResponse> {
    const response = await fetch(this.url("/api/chat"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ question }),
    });
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as ChatResponse;
  }

  async schema(): Promise<GraphSchema> {
    const response = await fetch(this.url("/api/schema"));
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as GraphSchema;
  }

  async health(): Promise<{ status: string; snapshot_checksum: string }> {
    const response = await fetch(this.url("/healthz"));
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as { status: string; snapshot_checksum: string };
  }
}
