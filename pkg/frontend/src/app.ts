/** Entry point: wires the static chrome to the store and keeps the page in
 * sync.  Served by the session service itself, so the API base is simply the
 * page origin. */

import { makeClient } from "./api.js";
import { render } from "./render.js";
import { SessionStore } from "./state.js";
import type { WireMove } from "./types.js";

export function startApp(doc: Document): SessionStore {
  const client = makeClient("");
  const store = new SessionStore(client);

  const handlers = {
    onApply: (move: WireMove) => {
      void store.applyMove(move);
    },
    onUndo: () => {
      void store.undo();
    },
    onDismissToast: () => {
      store.dismissToast();
    },
  };

  store.subscribe((state) => render(doc, state, handlers));

  const datasetForm = doc.querySelector<HTMLFormElement>("#dataset-form");
  const datasetName = doc.querySelector<HTMLInputElement>("#dataset-name");
  datasetForm?.addEventListener("submit", (event) => {
    event.preventDefault();
    const name = datasetName?.value.trim();
    if (name) {
      void store.loadDataset(name);
    }
  });

  const fileInput = doc.querySelector<HTMLInputElement>("#load-file");
  fileInput?.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    if (!file) {
      return;
    }
    void file.text().then((text) => {
      let parsed: unknown;
      try {
        parsed = JSON.parse(text);
      } catch (error) {
        store.showToast(`file is not JSON: ${String(error)}`);
        return;
      }
      return store.loadCategory(parsed);
    });
  });

  doc.querySelector("#undo")?.addEventListener("click", handlers.onUndo);

  doc
    .querySelector("#download-trace")
    ?.addEventListener("click", () => {
      void store.traceText().then((text) => {
        if (text === null) {
          return;
        }
        const id = store.state.session?.id ?? "session";
        const blob = new Blob([text], { type: "application/json" });
        const url = URL.createObjectURL(blob);
        const link = doc.createElement("a");
        link.href = url;
        link.download = `flowcat-trace-${id}.json`;
        doc.body.appendChild(link);
        link.click();
        link.remove();
        URL.revokeObjectURL(url);
      });
    });

  render(doc, store.state, handlers);
  return store;
}

if (typeof document !== "undefined") {
  startApp(document);
}
