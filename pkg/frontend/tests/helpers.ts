/** Shared test plumbing: a recording fetch stub and DOM fixtures. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { FetchLike } from "../src/api.js";
import type { WireCategory, WireMove } from "../src/types.js";

export interface RecordedCall {
  url: string;
  method: string;
  body: string | null;
}

export interface CannedReply {
  status: number;
  /** Sent verbatim when a string; JSON-encoded otherwise. */
  body: unknown;
}

/** A fetch stub that replays canned responses and records every request. */
export function stubFetch(
  handler: (call: RecordedCall) => CannedReply,
): { fetch: FetchLike; calls: RecordedCall[] } {
  const calls: RecordedCall[] = [];
  const fetchImpl: FetchLike = async (url, init) => {
    const call: RecordedCall = {
      url,
      method: init?.method ?? "GET",
      body: typeof init?.body === "string" ? init.body : null,
    };
    calls.push(call);
    const reply = handler(call);
    const text =
      typeof reply.body === "string" ? reply.body : JSON.stringify(reply.body);
    return new Response(text, {
      status: reply.status,
      headers: { "content-type": "application/json" },
    });
  };
  return { fetch: fetchImpl, calls };
}

/** Load the real page chrome into the jsdom document. */
export function mountChrome(): void {
  const here = dirname(fileURLToPath(import.meta.url));
  const html = readFileSync(join(here, "..", "index.html"), "utf8");
  const body = html.match(/<body>([\s\S]*)<\/body>/);
  if (!body) {
    throw new Error("index.html has no <body>");
  }
  document.body.innerHTML = body[1]!.replace(/<script[\s\S]*?<\/script>/g, "");
}

export const sampleCategory: WireCategory = {
  objects: [
    { id: "b0", degree: 2, label: "+", quantum: 7 },
    { id: "a1", degree: 4 },
    { id: "a0", degree: 4 },
    { id: "m0", degree: 3 },
  ],
  moduli0: [
    {
      from: "m0",
      to: "b0",
      points: [
        { id: "p0", sign: "+" },
        { id: "p1", sign: "-" },
      ],
    },
  ],
  moduli1: [
    {
      from: "a0",
      to: "b0",
      components: [
        {
          kind: "interval",
          id: "e0",
          framing: 1,
          start: { mid: "m0", lower: "p0", upper: "P" },
          end: { mid: "m0", lower: "p1", upper: "P" },
        },
        { kind: "circle", id: "c0", framing: 0 },
      ],
    },
  ],
};

export const sampleMoves: WireMove[] = [
  { kind: "whitney", from: "a0", to: "b0", positive: "p0", negative: "p1" },
  { kind: "whitney", from: "a1", to: "b0", positive: "q0", negative: "q1" },
  { kind: "cancel", from: "m0", to: "b0", point: "p0" },
  { kind: "remove_circle_fr1", from: "a0", to: "b0", circles: ["c0"] },
  { kind: "split_summand", objects: ["a0", "b0", "m0"] },
];
