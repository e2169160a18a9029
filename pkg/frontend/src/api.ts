/** Thin fetch wrappers for the three service endpoints the explorer uses. */

import type { CatalogPayload, ConstructionPayload, SolvePayload } from "./types.js";

/** Service rejected the request; message comes from the JSON error body. */
export class ApiError extends Error {
  readonly status: number;

  constructor(message: string, status: number) {
    super(message);
    this.name = "ApiError";
    this.status = status;
  }
}

/** Minimal slice of the fetch API the client needs, injectable in tests. */
export type FetchLike = (
  url: string,
  init?: { signal?: AbortSignal },
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

/**
 * Numbers go on the wire via String(), the shortest decimal that parses
 * back to the same double, so the service sees exactly the client's value.
 */
function num(value: number): string {
  return encodeURIComponent(String(value));
}

export function constructionUrl(base: string, n: number, d: number): string {
  return `${base}/api/construction?n=${num(n)}&d=${num(d)}`;
}

export function solveUrl(base: string, n: number, m: number): string {
  return `${base}/api/solve?n=${num(n)}&m=${num(m)}`;
}

export function catalogUrl(base: string): string {
  return `${base}/api/catalog`;
}

async function getJson(fetchImpl: FetchLike, url: string, signal?: AbortSignal): Promise<unknown> {
  const resp = await fetchImpl(url, { signal });
  const body = await resp.json().catch(() => null);
  if (!resp.ok) {
    const message =
      body !== null && typeof body === "object" && "error" in body
        ? String((body as { error: unknown }).error)
        : `HTTP ${resp.status}`;
    throw new ApiError(message, resp.status);
  }
  return body;
}

export async function fetchConstruction(
  fetchImpl: FetchLike,
  base: string,
  n: number,
  d: number,
  signal?: AbortSignal,
): Promise<ConstructionPayload> {
  return (await getJson(fetchImpl, constructionUrl(base, n, d), signal)) as ConstructionPayload;
}

export async function fetchSolve(
  fetchImpl: FetchLike,
  base: string,
  n: number,
  m: number,
  signal?: AbortSignal,
): Promise<SolvePayload> {
  return (await getJson(fetchImpl, solveUrl(base, n, m), signal)) as SolvePayload;
}

export async function fetchCatalog(
  fetchImpl: FetchLike,
  base: string,
  signal?: AbortSignal,
): Promise<CatalogPayload> {
  return (await getJson(fetchImpl, catalogUrl(base), signal)) as CatalogPayload;
}
