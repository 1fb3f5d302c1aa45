/** Thin typed client for the session service.  Every state change in the UI
 * goes through one of these calls; nothing is computed locally and nothing is
 * retried — errors are surfaced to the caller exactly as the service sent
 * them. */

import type {
  ApplyResponse,
  HomologyResponse,
  MovesResponse,
  RecognizeResponse,
  SessionState,
  WireMove,
} from "./types.js";

/** An error response from the service; `detail` is the server's own text. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export interface Client {
  createFromDataset(name: string): Promise<SessionState>;
  createFromCategory(category: unknown): Promise<SessionState>;
  state(id: string): Promise<SessionState>;
  moves(id: string): Promise<MovesResponse>;
  apply(id: string, move: WireMove): Promise<ApplyResponse>;
  undo(id: string): Promise<SessionState>;
  homology(id: string, coeff: "Z" | "Z2"): Promise<HomologyResponse>;
  recognize(id: string): Promise<RecognizeResponse>;
  /** Raw response text, suitable for saving to a file unchanged. */
  traceText(id: string): Promise<string>;
}

async function parseError(response: Response): Promise<never> {
  const text = await response.text();
  let detail = text;
  try {
    const body = JSON.parse(text);
    if (body && typeof body.detail === "string") {
      detail = body.detail;
    }
  } catch {
    // Non-JSON error body: surface the raw text.
  }
  throw new ApiError(response.status, detail);
}

export function makeClient(base: string, fetchImpl?: FetchLike): Client {
  const doFetch: FetchLike =
    fetchImpl ?? ((input, init) => fetch(input, init));
  const root = base.replace(/\/$/, "");

  async function requestText(
    path: string,
    init?: RequestInit,
  ): Promise<string> {
    const response = await doFetch(root + path, init);
    if (!response.ok) {
      await parseError(response);
    }
    return response.text();
  }

  async function requestJson<T>(path: string, init?: RequestInit): Promise<T> {
    return JSON.parse(await requestText(path, init)) as T;
  }

  function post(body: unknown): RequestInit {
    return {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    };
  }

  return {
    createFromDataset: (name) =>
      requestJson<SessionState>("/sessions", post({ dataset: name })),
    createFromCategory: (category) =>
      requestJson<SessionState>("/sessions", post({ category })),
    state: (id) => requestJson<SessionState>(`/sessions/${id}`),
    moves: (id) => requestJson<MovesResponse>(`/sessions/${id}/moves`),
    apply: (id, move) =>
      requestJson<ApplyResponse>(`/sessions/${id}/apply`, post(move)),
    undo: (id) =>
      requestJson<SessionState>(`/sessions/${id}/undo`, {
        method: "POST",
      }),
    homology: (id, coeff) =>
      requestJson<HomologyResponse>(
        `/sessions/${id}/homology?coeff=${coeff}`,
      ),
    recognize: (id) =>
      requestJson<RecognizeResponse>(`/sessions/${id}/recognize`),
    traceText: (id) => requestText(`/sessions/${id}/trace`),
  };
}
