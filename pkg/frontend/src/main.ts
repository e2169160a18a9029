/** Page wiring: DOM controls on one side, ExplorerStore on the other. */

import { draw, fitViewport, hitsHandle, toWorld } from "./canvas.js";
import { ExplorerStore } from "./store.js";
import type { FetchLike } from "./api.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`missing element #${id}`);
  return el as T;
}

const canvas = byId<HTMLCanvasElement>("view");
const ctx = canvas.getContext("2d");
if (ctx === null) throw new Error("canvas 2d context unavailable");

const nSelect = byId<HTMLSelectElement>("n-select");
const dInput = byId<HTMLInputElement>("d-input");
const mInput = byId<HTMLInputElement>("m-input");
const snapButton = byId<HTMLButtonElement>("snap-button");
const catalogSelect = byId<HTMLSelectElement>("catalog-select");
const ratioOut = byId<HTMLElement>("ratio-readout");
const dOut = byId<HTMLElement>("d-readout");
const banner = byId<HTMLElement>("banner");

for (let n = 3; n <= 12; n += 1) {
  const option = document.createElement("option");
  option.value = String(n);
  option.textContent = `n = ${n}`;
  nSelect.appendChild(option);
}

const store = new ExplorerStore({
  fetchImpl: window.fetch.bind(window) as FetchLike,
  baseUrl: "",
});

store.subscribe((state) => {
  nSelect.value = String(state.n);
  if (document.activeElement !== dInput) dInput.value = state.d.toPrecision(12);
  ratioOut.textContent = state.construction === null ? "-" : store.readoutM();
  dOut.textContent = store.readoutD();
  banner.textContent = state.banner ?? "";
  banner.style.display = state.banner === null ? "none" : "block";
  if (state.catalog.length > 0 && catalogSelect.options.length === 1) {
    for (let i = 0; i < state.catalog.length; i += 1) {
      const entry = state.catalog[i];
      if (entry === undefined) continue;
      const option = document.createElement("option");
      option.value = String(i);
      option.textContent = `n=${entry.n}  m=${entry.m}`;
      catalogSelect.appendChild(option);
    }
  }
  draw(ctx, canvas.width, canvas.height, state.construction);
});

nSelect.addEventListener("change", () => {
  void store.setN(Number(nSelect.value));
});

dInput.addEventListener("change", () => {
  const d = Number(dInput.value);
  if (Number.isFinite(d)) void store.loadConstruction(store.state.n, d);
});

snapButton.addEventListener("click", () => {
  const m = Math.round(Number(mInput.value));
  if (Number.isFinite(m)) void store.snapToInteger(m);
});

catalogSelect.addEventListener("change", () => {
  const entry = store.state.catalog[Number(catalogSelect.value)];
  if (entry !== undefined) void store.loadConstruction(entry.n, entry.d);
});

let dragging = false;

canvas.addEventListener("pointerdown", (ev) => {
  const payload = store.state.construction;
  if (payload === null) return;
  const rect = canvas.getBoundingClientRect();
  const sx = ev.clientX - rect.left;
  const sy = ev.clientY - rect.top;
  const vp = fitViewport(payload.outer, canvas.width, canvas.height);
  if (hitsHandle(vp, payload, sx, sy)) {
    dragging = true;
    canvas.setPointerCapture(ev.pointerId);
  }
});

canvas.addEventListener("pointermove", (ev) => {
  if (!dragging) return;
  const payload = store.state.construction;
  if (payload === null) return;
  const rect = canvas.getBoundingClientRect();
  const vp = fitViewport(payload.outer, canvas.width, canvas.height);
  const [wx, wy] = toWorld(vp, ev.clientX - rect.left, ev.clientY - rect.top);
  store.dragPoint(wx, wy);
});

canvas.addEventListener("pointerup", (ev) => {
  if (!dragging) return;
  dragging = false;
  canvas.releasePointerCapture(ev.pointerId);
  void store.endDrag();
});

void (async () => {
  await store.loadCatalog();
  await store.loadConstruction(4, 1.5);
})();
