/** Wire types mirroring the session service's JSON payloads. */

export interface WireObject {
  id: string;
  degree: number;
  label?: string;
  quantum?: number;
}

export interface WirePoint {
  id: string;
  sign: "+" | "-";
}

export interface WireEnd {
  mid: string;
  lower: string;
  upper: string;
}

export interface WireComponent {
  kind: "interval" | "circle";
  id: string;
  framing: 0 | 1;
  start?: WireEnd;
  end?: WireEnd;
}

export interface WireModuli0 {
  from: string;
  to: string;
  points: WirePoint[];
}

export interface WireModuli1 {
  from: string;
  to: string;
  components: WireComponent[];
}

export interface WireCategory {
  objects: WireObject[];
  moduli0: WireModuli0[];
  moduli1: WireModuli1[];
}

/**
 * A move descriptor exactly as the service sends it.  The UI never builds
 * one of these itself: descriptors are parsed from `GET .../moves` and sent
 * back verbatim to `POST .../apply`.
 */
export interface WireMove {
  kind: string;
  [field: string]: unknown;
}

export interface SessionState {
  id: string;
  digest: string;
  category: WireCategory;
}

export interface ApplyResponse {
  category: WireCategory;
  move: WireMove;
  digest: string;
}

export interface MovesResponse {
  moves: WireMove[];
}

export interface HomologyResponse {
  coeff: "Z" | "Z2";
  groups: Record<string, string>;
}

export interface RecognizeResponse {
  summands: string[];
  notes: string[];
}

export interface TraceResponse {
  initial: string;
  moves: (WireMove & { digest?: string })[];
  result: string[];
}
