/** Shapes of the JSON bodies the chordal service returns, plus the view state. */

export type Pair = [number, number];

/** Body of GET /api/construction?n&d, geometry in the canonical unit-side frame. */
export interface ConstructionPayload {
  n: number;
  d: number;
  outer: Pair[];
  chords: [Pair, Pair][];
  inner: Pair[];
  t: number;
  ratio: number;
}

/** Body of GET /api/solve?n&m. */
export interface SolvePayload {
  n: number;
  m: number;
  d: number;
  residual: number;
  iterations: number;
}

export interface CatalogEntry {
  n: number;
  d: number;
  m: number;
  d_is_exact: boolean;
  d_printed_digits: number | null;
  provenance: string;
  verified?: boolean;
  observed?: number;
  deviation?: number;
}

export interface CatalogPayload {
  entries: CatalogEntry[];
}

/**
 * Everything the page shows. The construction field is always the last
 * payload the service returned; the client never derives chords, the inner
 * polygon, or the ratio on its own. While a drag is in progress d may run
 * ahead of construction.d; the trailing un-debounced fetch closes the gap.
 */
export interface ViewState {
  n: number;
  d: number;
  construction: ConstructionPayload | null;
  targetM: number | null;
  catalog: CatalogEntry[];
  banner: string | null;
  dragging: boolean;
}
