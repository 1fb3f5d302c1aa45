/** Single-session store.  One tab drives exactly one service session; every
 * state change round-trips through the HTTP API and the store only caches the
 * latest server responses. */

import { ApiError, type Client } from "./api.js";
import { onlySplits } from "./movefmt.js";
import type {
  RecognizeResponse,
  SessionState,
  WireMove,
} from "./types.js";

export interface AppState {
  session: SessionState | null;
  moves: WireMove[];
  /** Moves applied and not undone; the undo button is enabled iff > 0. */
  appliedCount: number;
  /** Recognition shown when the service lists no further simplifying moves. */
  banner: RecognizeResponse | null;
  /** Latest API error detail, verbatim from the service. */
  toast: string | null;
  busy: boolean;
}

export type Listener = (state: AppState) => void;

export class SessionStore {
  readonly state: AppState = {
    session: null,
    moves: [],
    appliedCount: 0,
    banner: null,
    toast: null,
    busy: false,
  };

  private listeners: Listener[] = [];

  constructor(private readonly client: Client) {}

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  private report(error: unknown): void {
    this.state.toast =
      error instanceof ApiError ? error.detail : String(error);
  }

  dismissToast(): void {
    this.state.toast = null;
    this.notify();
  }

  /** Surface a locally produced error (e.g. an unreadable file). */
  showToast(message: string): void {
    this.state.toast = message;
    this.notify();
  }

  /** Refresh the move list and, when nothing but splits remain, the
   * recognition banner.  Callers hold `busy`. */
  private async refresh(): Promise<void> {
    const session = this.state.session;
    if (!session) {
      this.state.moves = [];
      this.state.banner = null;
      return;
    }
    const { moves } = await this.client.moves(session.id);
    this.state.moves = moves;
    this.state.banner = onlySplits(moves)
      ? await this.client.recognize(session.id)
      : null;
  }

  private async transition(work: () => Promise<void>): Promise<void> {
    this.state.busy = true;
    this.state.toast = null;
    this.notify();
    try {
      await work();
    } catch (error) {
      this.report(error);
    } finally {
      this.state.busy = false;
      this.notify();
    }
  }

  /** Replace the tab's session with one created from a bundled dataset. */
  loadDataset(name: string): Promise<void> {
    return this.transition(async () => {
      this.state.session = await this.client.createFromDataset(name);
      this.state.appliedCount = 0;
      await this.refresh();
    });
  }

  /** Replace the tab's session with one created from a parsed file. */
  loadCategory(category: unknown): Promise<void> {
    return this.transition(async () => {
      this.state.session = await this.client.createFromCategory(category);
      this.state.appliedCount = 0;
      await this.refresh();
    });
  }

  /** Apply a descriptor exactly as received from the move list. */
  applyMove(move: WireMove): Promise<void> {
    return this.transition(async () => {
      const session = this.state.session;
      if (!session) {
        return;
      }
      const result = await this.client.apply(session.id, move);
      this.state.session = {
        id: session.id,
        digest: result.digest,
        category: result.category,
      };
      this.state.appliedCount += 1;
      await this.refresh();
    });
  }

  undo(): Promise<void> {
    return this.transition(async () => {
      const session = this.state.session;
      if (!session) {
        return;
      }
      this.state.session = await this.client.undo(session.id);
      this.state.appliedCount = Math.max(0, this.state.appliedCount - 1);
      await this.refresh();
    });
  }

  /** Raw trace text from the service, byte-for-byte. */
  async traceText(): Promise<string | null> {
    const session = this.state.session;
    if (!session) {
      return null;
    }
    try {
      return await this.client.traceText(session.id);
    } catch (error) {
      this.report(error);
      this.notify();
      return null;
    }
  }
}
