/** Column layout: objects grouped by degree, one vertical column per degree,
 * highest degree in the leftmost column. */

import type { WireCategory, WireModuli0, WireModuli1, WireObject } from "./types.js";

export interface Column {
  degree: number;
  objects: WireObject[];
}

export function columnsByDegree(category: WireCategory): Column[] {
  const byDegree = new Map<number, WireObject[]>();
  for (const obj of category.objects) {
    const bucket = byDegree.get(obj.degree);
    if (bucket) {
      bucket.push(obj);
    } else {
      byDegree.set(obj.degree, [obj]);
    }
  }
  const degrees = [...byDegree.keys()].sort((a, b) => b - a);
  return degrees.map((degree) => ({
    degree,
    objects: byDegree
      .get(degree)!
      .slice()
      .sort((a, b) => (a.id < b.id ? -1 : a.id > b.id ? 1 : 0)),
  }));
}

/** Compact text for a zero-dimensional space: its signed points. */
export function pointsSummary(space: WireModuli0): string {
  return space.points.map((p) => `${p.id}${p.sign}`).join(" ");
}

/** Compact text for a one-dimensional space: its framed components. */
export function componentsSummary(space: WireModuli1): string {
  return space.components
    .map((c) => {
      const shape = c.kind === "circle" ? "O" : "I";
      const ends =
        c.kind === "interval" && c.start && c.end
          ? ` [${c.start.mid}(${c.start.lower},${c.start.upper})--${c.end.mid}(${c.end.lower},${c.end.upper})]`
          : "";
      return `${c.id}=${shape} fr${c.framing}${ends}`;
    })
    .join("; ");
}
