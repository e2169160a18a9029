/**
 * Drives ExplorerStore headless against a live chordal service process.
 * Every number asserted here comes back over HTTP; the client never
 * derives geometry on its own.
 */

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { constructionUrl } from "../src/api.js";
import type { FetchLike } from "../src/api.js";
import { ExplorerStore } from "../src/store.js";
import type { Pair } from "../src/types.js";
import { startService, type RunningService } from "./service.js";

let service: RunningService;

beforeAll(async () => {
  service = await startService();
});

afterAll(() => {
  service.stop();
});

const realFetch: FetchLike = (url, init) => fetch(url, init);

function makeStore(fetchImpl: FetchLike = realFetch, baseUrl?: string): ExplorerStore {
  return new ExplorerStore({ fetchImpl, baseUrl: baseUrl ?? service.url });
}

function edgePoint(outer: Pair[], i: number, t: number): Pair {
  const a = outer[i] as Pair;
  const b = outer[(i + 1) % outer.length] as Pair;
  return [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
}

/** Numeric leaves equal after rounding to 12 significant digits. */
function same12(a: unknown, b: unknown): boolean {
  if (typeof a === "number" && typeof b === "number") {
    return a.toPrecision(12) === b.toPrecision(12);
  }
  if (Array.isArray(a) && Array.isArray(b)) {
    return a.length === b.length && a.every((v, i) => same12(v, b[i]));
  }
  if (a !== null && b !== null && typeof a === "object" && typeof b === "object") {
    const ka = Object.keys(a).sort();
    const kb = Object.keys(b).sort();
    return (
      ka.length === kb.length &&
      ka.every(
        (k, i) =>
          k === kb[i] &&
          same12((a as Record<string, unknown>)[k], (b as Record<string, unknown>)[k]),
      )
    );
  }
  return Object.is(a, b);
}

describe("loading a construction", () => {
  it("(4, 1.5) displays 5.000000", async () => {
    const store = makeStore();
    await store.loadConstruction(4, 1.5);
    expect(store.state.banner).toBeNull();
    expect(store.readoutM()).toBe("5.000000");
    expect(store.readoutD()).toBe("1.500000");
    expect(store.state.construction?.outer).toHaveLength(4);
    expect(store.state.construction?.chords).toHaveLength(4);
    expect(store.state.construction?.inner).toHaveLength(4);
  });

  it("(6, 2.5) displays 13.000000", async () => {
    const store = makeStore();
    await store.loadConstruction(6, 2.5);
    expect(store.readoutM()).toBe("13.000000");
    expect(Math.abs((store.state.construction?.ratio ?? 0) - 13)).toBeLessThan(1e-4);
  });

  it("a degenerate request shows a banner and keeps the previous state", async () => {
    const store = makeStore();
    await store.loadConstruction(4, 1.5);
    await store.loadConstruction(4, 2.0);
    expect(store.state.banner).toMatch(/center/);
    expect(store.state.n).toBe(4);
    expect(store.state.d).toBe(1.5);
    expect(store.readoutM()).toBe("5.000000");
  });

  it("an unreachable service shows a banner and keeps the state", async () => {
    const store = makeStore(realFetch, "http://127.0.0.1:9");
    await store.loadConstruction(4, 1.5);
    expect(store.state.banner).toMatch(/unreachable/);
    expect(store.state.construction).toBeNull();
  });

  it("the displayed ratio is the service's number, rounded for display only", async () => {
    const store = makeStore();
    await store.loadConstruction(5, 1.37);
    const displayed = Number(store.readoutM());
    const served = store.state.construction?.ratio ?? NaN;
    expect(Math.abs(displayed - served)).toBeLessThanOrEqual(5e-7);
  });

  it("changing n carries d across, clamped into the new domain", async () => {
    const store = makeStore();
    await store.loadConstruction(4, 1.5);
    await store.setN(6);
    expect(store.state.n).toBe(6);
    expect(store.state.d).toBe(1.5);
    expect(store.state.construction?.n).toBe(6);

    await store.loadConstruction(6, 2.5);
    await store.setN(3);
    expect(store.state.n).toBe(3);
    expect(store.state.d).toBeCloseTo(2 - 1e-6, 12);
    expect(store.state.banner).toBeNull();
  });
});

describe("snap to integer ratio", () => {
  it("n=4, m=41 lands on d = 1.800000", async () => {
    const store = makeStore();
    await store.loadConstruction(4, 1.5);
    await store.snapToInteger(41);
    expect(store.readoutD()).toBe("1.800000");
    expect(store.readoutM()).toBe("41.000000");
    expect(store.state.targetM).toBe(41);
  });

  it("n=8, m=3 lands on d = 2.500000", async () => {
    const store = makeStore();
    await store.loadConstruction(8, 2.1);
    await store.snapToInteger(3);
    expect(store.readoutD()).toBe("2.500000");
    expect(store.readoutM()).toBe("3.000000");
  });

  it("n=6, m=7 lands on d = 2.333333", async () => {
    const store = makeStore();
    await store.loadConstruction(6, 2.0);
    await store.snapToInteger(7);
    expect(store.readoutD()).toBe("2.333333");
    expect(store.readoutM()).toBe("7.000000");
  });

  it("a rejected target shows the service's reason and keeps the state", async () => {
    const store = makeStore();
    await store.loadConstruction(4, 1.5);
    await store.snapToInteger(1);
    expect(store.state.banner).not.toBeNull();
    expect(store.state.d).toBe(1.5);
    expect(store.readoutM()).toBe("5.000000");
  });

  it("the committed d is the solver's value verbatim", async () => {
    const store = makeStore();
    await store.loadConstruction(4, 1.5);
    await store.snapToInteger(25);
    expect(store.state.construction?.d).toBe(store.state.d);
    expect(store.state.d).toBeCloseTo(1.75, 8);
  });
});

describe("dragging the handle", () => {
  it("the far-side midpoint of the square is d = 1.5, readout 5.000000", async () => {
    const store = makeStore();
    await store.loadConstruction(4, 1.9);
    const outer = store.state.construction?.outer as Pair[];
    const p = edgePoint(outer, 1, 0.5);
    store.dragPoint(p[0], p[1]);
    expect(store.state.d).toBe(1.5);
    await store.endDrag();
    await store.settle();
    expect(store.readoutM()).toBe("5.000000");
  });

  it("a hexagon vertex two sides along snaps d to 2.0, readout 3.000000", async () => {
    const store = makeStore();
    await store.loadConstruction(6, 1.7);
    const outer = store.state.construction?.outer as Pair[];
    const v2 = outer[2] as Pair;
    store.dragPoint(v2[0], v2[1]);
    expect(store.state.d).toBe(2.0);
    await store.endDrag();
    await store.settle();
    expect(store.readoutM()).toBe("3.000000");
  });

  it("readout grows monotonically toward the half-perimeter guard", async () => {
    const store = makeStore();
    await store.loadConstruction(4, 1.5);
    const outer = store.state.construction?.outer as Pair[];
    const ratios: number[] = [];
    for (const t of [0.7, 0.9, 0.99, 0.999, 1.0]) {
      const p = edgePoint(outer, 1, t);
      store.dragPoint(p[0], p[1]);
      await store.endDrag();
      await store.settle();
      ratios.push(store.state.construction?.ratio ?? NaN);
    }
    for (let i = 1; i < ratios.length; i += 1) {
      expect(ratios[i]).toBeGreaterThan(ratios[i - 1] as number);
    }
    expect(ratios[ratios.length - 1]).toBeGreaterThan(100);
    expect(store.state.banner).toBeNull();
    // the guard held the final position just short of the center
    expect(store.state.d).toBe(2 - 1e-4);
  });

  it("rapid moves are debounced, the release is fetched immediately", async () => {
    let constructionFetches = 0;
    const counting: FetchLike = (url, init) => {
      if (url.includes("/api/construction")) constructionFetches += 1;
      return realFetch(url, init);
    };
    const store = makeStore(counting);
    await store.loadConstruction(4, 1.5);
    expect(constructionFetches).toBe(1);

    const outer = store.state.construction?.outer as Pair[];
    for (const t of [0.2, 0.3, 0.4, 0.5, 0.6, 0.7]) {
      const p = edgePoint(outer, 1, t);
      store.dragPoint(p[0], p[1]);
    }
    await store.settle();
    // six moves inside one debounce window collapse to a single fetch
    expect(constructionFetches).toBe(2);

    await store.endDrag();
    await store.settle();
    expect(constructionFetches).toBe(3);
    expect(store.state.construction?.d).toBe(store.state.d);
  });

  it("later requests supersede earlier in-flight ones", async () => {
    const store = makeStore();
    const first = store.loadConstruction(6, 2.5);
    const second = store.loadConstruction(4, 1.75);
    await Promise.all([first, second]);
    await store.settle();
    expect(store.state.n).toBe(4);
    expect(store.state.d).toBe(1.75);
    expect(store.readoutM()).toBe("25.000000");
    expect(store.state.banner).toBeNull();
  });
});

describe("state never desynchronizes", () => {
  it("drag, snap, drag again: the view matches a fresh fetch to 12 digits", async () => {
    const store = makeStore();
    await store.loadConstruction(4, 1.5);
    const outer = store.state.construction?.outer as Pair[];

    let p = edgePoint(outer, 1, 0.37);
    store.dragPoint(p[0], p[1]);
    p = edgePoint(outer, 1, 0.61);
    store.dragPoint(p[0], p[1]);
    await store.endDrag();

    await store.snapToInteger(41);

    p = edgePoint(outer, 2, 0.83);
    store.dragPoint(p[0], p[1]);
    await store.endDrag();
    await store.settle();

    const fresh = await (
      await fetch(constructionUrl(service.url, store.state.n, store.state.d))
    ).json();
    expect(store.state.construction?.d).toBe(store.state.d);
    expect(same12(store.state.construction, fresh)).toBe(true);
  });

  it("a plain load also matches a fresh fetch to 12 digits", async () => {
    const store = makeStore();
    await store.loadConstruction(7, 2.31);
    const fresh = await (
      await fetch(constructionUrl(service.url, 7, 2.31))
    ).json();
    expect(same12(store.state.construction, fresh)).toBe(true);
  });
});

describe("catalog", () => {
  it("lists the fourteen published systems and can load one", async () => {
    const store = makeStore();
    await store.loadCatalog();
    expect(store.state.catalog).toHaveLength(14);
    const first = store.state.catalog[0];
    expect(first?.n).toBe(4);
    expect(first?.d).toBe(1.5);
    expect(first?.m).toBe(5);

    const hexagonSeventh = store.state.catalog[3];
    await store.loadConstruction(hexagonSeventh?.n as number, hexagonSeventh?.d as number);
    expect(store.readoutM()).toBe("7.000000");
  });
});
