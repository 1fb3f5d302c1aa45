/** Presentation helpers for move descriptors.
 *
 * The descriptors themselves come from the service and are passed back to it
 * unchanged; this module only turns a received descriptor into a short label
 * and the canonical serialized form carried on each list row.
 */

import type { WireMove } from "./types.js";

/** Canonical byte representation of a descriptor as received. */
export function moveJson(move: WireMove): string {
  return JSON.stringify(move);
}

function field(move: WireMove, key: string): string {
  const value = move[key];
  return typeof value === "string" ? value : String(value ?? "?");
}

/** One-line human label for a descriptor.  Purely cosmetic. */
export function describeMove(move: WireMove): string {
  switch (move.kind) {
    case "whitney": {
      const pair = `${field(move, "from")} -> ${field(move, "to")}`;
      return `whitney ${pair} (${field(move, "positive")}, ${field(move, "negative")})`;
    }
    case "cancel": {
      const pair = `${field(move, "from")} -> ${field(move, "to")}`;
      return "point" in move
        ? `cancel ${pair} at ${field(move, "point")}`
        : `cancel ${pair}`;
    }
    case "remove_circle_fr1":
    case "remove_circle_fr0_pair": {
      const ids = move.circles;
      const listed = Array.isArray(ids) ? ids.join(", ") : String(ids);
      return `remove circles ${listed} in ${field(move, "from")} -> ${field(move, "to")}`;
    }
    case "split_summand": {
      const objs = move.objects;
      const listed = Array.isArray(objs) ? objs.join(", ") : String(objs);
      return `split off ${listed}`;
    }
    default:
      return moveJson(move);
  }
}

/** True when every listed move is a summand split (or the list is empty):
 * the category has no simplification left, so recognition is final. */
export function onlySplits(moves: WireMove[]): boolean {
  return moves.every((m) => m.kind === "split_summand");
}
