/**
 * View-state container for the explorer page.
 *
 * All geometry lives on the service side; the store's whole job is to keep
 * ViewState.construction in step with (n, d) while the user drags, types,
 * or snaps. Fetches are raced through one slot per control: a newer
 * request aborts the older one, and a stale response that slips through is
 * dropped by token. Drag moves are debounced; the release fetch is not.
 *
 * Dependencies (fetch, timers) are injected so tests can run the store
 * headless against a real service and count the traffic.
 */

import { ApiError, fetchCatalog, fetchConstruction, fetchSolve } from "./api.js";
import type { FetchLike } from "./api.js";
import { clampD, projectToPerimeter } from "./perimeter.js";
import type { ViewState } from "./types.js";

// trailing-edge debounce for drag refetches, spec bound is 60 ms
export const DRAG_DEBOUNCE_MS = 50;

export interface StoreDeps {
  fetchImpl: FetchLike;
  baseUrl: string;
  setTimer?: (fn: () => void, ms: number) => ReturnType<typeof setTimeout>;
  clearTimer?: (id: ReturnType<typeof setTimeout>) => void;
}

type Listener = (state: Readonly<ViewState>) => void;

function isAbort(err: unknown): boolean {
  return err instanceof Error && err.name === "AbortError";
}

export class ExplorerStore {
  readonly state: ViewState;

  private readonly fetchImpl: FetchLike;
  private readonly baseUrl: string;
  private readonly setTimer: (fn: () => void, ms: number) => ReturnType<typeof setTimeout>;
  private readonly clearTimer: (id: ReturnType<typeof setTimeout>) => void;
  private readonly listeners: Listener[] = [];

  // supersede bookkeeping: one slot per control
  private constructionToken = 0;
  private constructionAbort: AbortController | null = null;
  private solveToken = 0;
  private solveAbort: AbortController | null = null;

  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  private inflight = 0;
  private settleWaiters: (() => void)[] = [];

  constructor(deps: StoreDeps) {
    this.fetchImpl = deps.fetchImpl;
    this.baseUrl = deps.baseUrl;
    this.setTimer = deps.setTimer ?? ((fn, ms) => setTimeout(fn, ms));
    this.clearTimer = deps.clearTimer ?? ((id) => clearTimeout(id));
    this.state = {
      n: 4,
      d: 1.5,
      construction: null,
      targetM: null,
      catalog: [],
      banner: null,
      dragging: false,
    };
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      const i = this.listeners.indexOf(listener);
      if (i >= 0) this.listeners.splice(i, 1);
    };
  }

  /** Resolves once no fetch is in flight and no debounce timer is pending. */
  settle(): Promise<void> {
    if (this.inflight === 0 && this.debounceTimer === null) return Promise.resolve();
    return new Promise((resolve) => this.settleWaiters.push(resolve));
  }

  /** Ratio readout, 6 decimals, straight from the last service payload. */
  readoutM(): string {
    return this.state.construction === null ? "" : this.state.construction.ratio.toFixed(6);
  }

  /** Side-distance readout, 6 decimals. */
  readoutD(): string {
    return this.state.d.toFixed(6);
  }

  /** Fetch the construction for (n, d) and make it the displayed state. */
  async loadConstruction(n: number, d: number): Promise<void> {
    const token = this.beginConstruction();
    try {
      const payload = await fetchConstruction(
        this.fetchImpl,
        this.baseUrl,
        n,
        d,
        this.constructionAbort?.signal,
      );
      if (token !== this.constructionToken) return;
      this.state.n = n;
      this.state.d = d;
      this.state.construction = payload;
      this.state.banner = null;
      this.notify();
    } catch (err) {
      if (token === this.constructionToken) this.fail(err);
    } finally {
      this.endWork();
    }
  }

  /** Change the polygon, carrying d across clamped into the new domain. */
  async setN(n: number): Promise<void> {
    await this.loadConstruction(n, clampD(n, this.state.d));
  }

  /**
   * Pointer moved while dragging the handle: project onto the perimeter
   * the service described, clamp, move d right away, and schedule a
   * debounced re-fetch so chords and readout follow.
   */
  dragPoint(x: number, y: number): void {
    const outer = this.state.construction?.outer;
    if (outer === undefined) return;
    const projected = projectToPerimeter(outer, x, y);
    this.state.d = clampD(this.state.n, projected.d);
    this.state.dragging = true;
    this.notify();
    if (this.debounceTimer !== null) this.clearTimer(this.debounceTimer);
    this.debounceTimer = this.setTimer(() => {
      this.debounceTimer = null;
      void this.refetchForDrag();
    }, DRAG_DEBOUNCE_MS);
  }

  /** Pointer released: cancel the debounce and fetch the final position now. */
  async endDrag(): Promise<void> {
    if (this.debounceTimer !== null) {
      this.clearTimer(this.debounceTimer);
      this.debounceTimer = null;
      this.maybeSettle();
    }
    this.state.dragging = false;
    await this.refetchForDrag();
  }

  /**
   * Ask the service for the d that realizes an integer ratio, then load
   * that construction. The committed d is the solver's value verbatim.
   */
  async snapToInteger(m: number): Promise<void> {
    this.state.targetM = m;
    this.notify();
    const token = ++this.solveToken;
    this.solveAbort?.abort();
    this.solveAbort = new AbortController();
    this.inflight += 1;
    try {
      const solved = await fetchSolve(
        this.fetchImpl,
        this.baseUrl,
        this.state.n,
        m,
        this.solveAbort.signal,
      );
      if (token !== this.solveToken) return;
      await this.loadConstruction(this.state.n, solved.d);
    } catch (err) {
      if (token === this.solveToken) this.fail(err);
    } finally {
      this.endWork();
    }
  }

  /** Populate the catalog picker from /api/catalog. */
  async loadCatalog(): Promise<void> {
    this.inflight += 1;
    try {
      const payload = await fetchCatalog(this.fetchImpl, this.baseUrl);
      this.state.catalog = payload.entries;
      this.notify();
    } catch (err) {
      this.fail(err);
    } finally {
      this.endWork();
    }
  }

  /** Drag-path fetch: updates the drawing but never moves d backwards. */
  private async refetchForDrag(): Promise<void> {
    const token = this.beginConstruction();
    const { n, d } = this.state;
    try {
      const payload = await fetchConstruction(
        this.fetchImpl,
        this.baseUrl,
        n,
        d,
        this.constructionAbort?.signal,
      );
      if (token !== this.constructionToken) return;
      this.state.construction = payload;
      this.state.banner = null;
      this.notify();
    } catch (err) {
      if (token === this.constructionToken) this.fail(err);
    } finally {
      this.endWork();
    }
  }

  private beginConstruction(): number {
    this.constructionAbort?.abort();
    this.constructionAbort = new AbortController();
    this.inflight += 1;
    return ++this.constructionToken;
  }

  private fail(err: unknown): void {
    if (isAbort(err)) return;
    const message =
      err instanceof ApiError
        ? err.message
        : `service unreachable: ${err instanceof Error ? err.message : String(err)}`;
    this.state.banner = message;
    this.notify();
  }

  private endWork(): void {
    this.inflight -= 1;
    this.maybeSettle();
  }

  private maybeSettle(): void {
    if (this.inflight === 0 && this.debounceTimer === null) {
      for (const waiter of this.settleWaiters.splice(0)) waiter();
    }
  }

  private notify(): void {
    for (const listener of this.listeners) listener(this.state);
  }
}
