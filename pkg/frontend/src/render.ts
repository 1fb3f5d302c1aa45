/** DOM rendering.  The static chrome lives in index.html; these functions
 * refresh the dynamic regions from the store state.  Move rows carry the
 * descriptor exactly as the service sent it (`data-move`), and clicking a row
 * posts that same descriptor back. */

import { columnsByDegree, componentsSummary, pointsSummary } from "./layout.js";
import { describeMove, moveJson } from "./movefmt.js";
import type { AppState } from "./state.js";
import type { WireCategory, WireMove } from "./types.js";

export interface Handlers {
  onApply(move: WireMove): void;
  onUndo(): void;
  onDismissToast(): void;
}

function clear(el: Element): void {
  while (el.firstChild) {
    el.removeChild(el.firstChild);
  }
}

export function renderBoard(el: HTMLElement, category: WireCategory | null): void {
  clear(el);
  if (!category) {
    const empty = el.ownerDocument.createElement("p");
    empty.className = "empty";
    empty.textContent = "Load a dataset or a category file to start.";
    el.appendChild(empty);
    return;
  }
  const doc = el.ownerDocument;
  for (const column of columnsByDegree(category)) {
    const col = doc.createElement("div");
    col.className = "column";
    const head = doc.createElement("h3");
    head.textContent = `degree ${column.degree}`;
    col.appendChild(head);
    for (const obj of column.objects) {
      const cell = doc.createElement("div");
      cell.className = "object";
      cell.dataset.id = obj.id;
      const name = doc.createElement("strong");
      name.textContent = obj.id;
      cell.appendChild(name);
      const meta: string[] = [];
      if (obj.label !== undefined) {
        meta.push(obj.label);
      }
      if (obj.quantum !== undefined) {
        meta.push(`q=${obj.quantum}`);
      }
      if (meta.length > 0) {
        const tag = doc.createElement("span");
        tag.className = "object-meta";
        tag.textContent = ` ${meta.join(" ")}`;
        cell.appendChild(tag);
      }
      col.appendChild(cell);
    }
    el.appendChild(col);
  }
}

export function renderSpaces(el: HTMLElement, category: WireCategory | null): void {
  clear(el);
  if (!category) {
    return;
  }
  const doc = el.ownerDocument;
  const rows: { from: string; to: string; text: string; dim: number }[] = [];
  for (const space of category.moduli0) {
    rows.push({
      from: space.from,
      to: space.to,
      text: pointsSummary(space),
      dim: 0,
    });
  }
  for (const space of category.moduli1) {
    rows.push({
      from: space.from,
      to: space.to,
      text: componentsSummary(space),
      dim: 1,
    });
  }
  rows.sort((a, b) =>
    a.from === b.from
      ? a.to === b.to
        ? a.dim - b.dim
        : a.to < b.to
          ? -1
          : 1
      : a.from < b.from
        ? -1
        : 1,
  );
  for (const row of rows) {
    const li = doc.createElement("li");
    li.className = `space space-dim${row.dim}`;
    const head = doc.createElement("code");
    head.textContent = `M(${row.from}, ${row.to})`;
    li.appendChild(head);
    const body = doc.createElement("span");
    body.textContent = ` ${row.text}`;
    li.appendChild(body);
    el.appendChild(li);
  }
}

export function renderMoves(
  el: HTMLElement,
  moves: WireMove[],
  onApply: (move: WireMove) => void,
): void {
  clear(el);
  const doc = el.ownerDocument;
  for (const move of moves) {
    const li = doc.createElement("li");
    li.className = `move move-${move.kind}`;
    li.dataset.move = moveJson(move);
    const button = doc.createElement("button");
    button.type = "button";
    button.textContent = describeMove(move);
    button.addEventListener("click", () => onApply(move));
    li.appendChild(button);
    el.appendChild(li);
  }
  if (moves.length === 0) {
    const li = doc.createElement("li");
    li.className = "move-none";
    li.textContent = "no moves apply";
    el.appendChild(li);
  }
}

export function renderBanner(el: HTMLElement, state: AppState): void {
  const banner = state.banner;
  if (!banner) {
    el.hidden = true;
    el.textContent = "";
    return;
  }
  clear(el);
  el.hidden = false;
  const doc = el.ownerDocument;
  const headline = doc.createElement("strong");
  headline.className = "banner-wedge";
  headline.textContent = banner.summands.join(" v ");
  el.appendChild(headline);
  for (const note of banner.notes) {
    const line = doc.createElement("div");
    line.className = "banner-note";
    line.textContent = note;
    el.appendChild(line);
  }
}

export function renderToast(
  el: HTMLElement,
  state: AppState,
  onDismiss: () => void,
): void {
  if (state.toast === null) {
    el.hidden = true;
    el.textContent = "";
    return;
  }
  clear(el);
  el.hidden = false;
  const doc = el.ownerDocument;
  const message = doc.createElement("span");
  message.className = "toast-detail";
  message.textContent = state.toast;
  el.appendChild(message);
  const close = doc.createElement("button");
  close.type = "button";
  close.className = "toast-close";
  close.textContent = "dismiss";
  close.addEventListener("click", onDismiss);
  el.appendChild(close);
}

export function renderMeta(el: HTMLElement, state: AppState): void {
  const session = state.session;
  el.textContent = session
    ? `session ${session.id} · digest ${session.digest.slice(0, 12)}…`
    : "no session";
}

/** Refresh every dynamic region under `root` (see index.html for the ids). */
export function render(root: ParentNode, state: AppState, handlers: Handlers): void {
  const board = root.querySelector<HTMLElement>("#board");
  const spaces = root.querySelector<HTMLElement>("#spaces");
  const moves = root.querySelector<HTMLElement>("#moves");
  const banner = root.querySelector<HTMLElement>("#banner");
  const toast = root.querySelector<HTMLElement>("#toast");
  const meta = root.querySelector<HTMLElement>("#session-meta");
  const undo = root.querySelector<HTMLButtonElement>("#undo");
  const download = root.querySelector<HTMLButtonElement>("#download-trace");

  if (board) {
    renderBoard(board, state.session?.category ?? null);
  }
  if (spaces) {
    renderSpaces(spaces, state.session?.category ?? null);
  }
  if (moves) {
    renderMoves(moves, state.moves, handlers.onApply);
  }
  if (banner) {
    renderBanner(banner, state);
  }
  if (toast) {
    renderToast(toast, state, handlers.onDismissToast);
  }
  if (meta) {
    renderMeta(meta, state);
  }
  if (undo) {
    undo.disabled = state.busy || state.appliedCount === 0;
  }
  if (download) {
    download.disabled = state.busy || state.session === null;
  }
}
