/** SVG rendering of the circular board from the last server state. */

import { labelPoint, sectorAngles, sectorPath } from "./geometry.js";
import { GameStore } from "./store.js";
import type { ServerState, TripartitionReport } from "./types.js";

const SIZE = 420;
const CENTER = SIZE / 2;
const RADIUS = SIZE / 2 - 14;

const PART_COLORS: Record<string, string> = {
  B: "#7aa2f7",
  M: "#9ece6a",
  W: "#e0af68",
};

function eaterOf(state: ServerState): Map<number, string> {
  const eaters = new Map<number, string>();
  for (const move of state.history) eaters.set(move.piece, move.player);
  return eaters;
}

function partShading(
  tri: TripartitionReport | undefined,
): Map<number, { color: string; major: boolean }> {
  const shading = new Map<number, { color: string; major: boolean }>();
  if (!tri) return shading;
  for (const label of ["B", "M", "W"] as const) {
    const part = tri.parts[label];
    for (const piece of part.pieces) {
      shading.set(piece, {
        color: PART_COLORS[label],
        major: part.majors.includes(piece),
      });
    }
  }
  return shading;
}

export function renderBoard(svg: SVGSVGElement, store: GameStore): void {
  const state = store.state;
  svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
  svg.innerHTML = "";
  if (!state) return;
  const eaters = eaterOf(state);
  const shading = partShading(store.analysis?.tripartition);
  const legal = new Set(state.legal_moves);
  for (let piece = 0; piece < state.n; piece++) {
    const sector = sectorAngles(state.n, piece);
    const path = document.createElementNS("http://www.w3.org/2000/svg", "path");
    path.setAttribute(
      "d",
      sectorPath(CENTER, CENTER, RADIUS, sector.startAngle, sector.endAngle),
    );
    path.dataset.piece = String(piece);
    const eater = eaters.get(piece);
    const classes = ["piece"];
    if (eater) classes.push(`eaten-${eater}`);
    else if (legal.has(piece) && !state.finished) classes.push("legal");
    path.classList.add(...classes);
    const shade = shading.get(piece);
    if (shade) {
      path.style.stroke = shade.color;
      path.style.strokeWidth = shade.major ? "5" : "2";
    }
    if (store.isClickable(piece)) {
      path.addEventListener("click", () => {
        void store.clickPiece(piece);
      });
    }
    svg.appendChild(path);

    const label = document.createElementNS("http://www.w3.org/2000/svg", "text");
    const at = labelPoint(CENTER, CENTER, RADIUS, sector);
    label.setAttribute("x", String(at.x));
    label.setAttribute("y", String(at.y));
    label.setAttribute("class", "size-label");
    label.textContent = String(state.sizes[piece]);
    svg.appendChild(label);

    if (store.hintsOn && store.hints && piece in store.hints) {
      const hint = document.createElementNS(
        "http://www.w3.org/2000/svg",
        "text",
      );
      const hintAt = labelPoint(CENTER, CENTER, RADIUS, sector, 0.88);
      hint.setAttribute("x", String(hintAt.x));
      hint.setAttribute("y", String(hintAt.y));
      hint.setAttribute("class", "hint-label");
      hint.textContent = `→${store.hints[piece]}`;
      svg.appendChild(hint);
    }

    const index = document.createElementNS("http://www.w3.org/2000/svg", "text");
    const idxAt = labelPoint(CENTER, CENTER, RADIUS, sector, 0.42);
    index.setAttribute("x", String(idxAt.x));
    index.setAttribute("y", String(idxAt.y));
    index.setAttribute("class", "index-label");
    index.textContent = `#${piece}`;
    svg.appendChild(index);
  }
}

export function renderScoreBar(container: HTMLElement, store: GameStore): void {
  const state = store.state;
  if (!state) {
    container.innerHTML = "";
    return;
  }
  const total = state.total || 1;
  const alicePct = (100 * state.scores.alice) / total;
  const bobPct = (100 * state.scores.bob) / total;
  const targetPct = (100 * 4) / 9;
  container.innerHTML = `
    <div class="bar">
      <div class="bar-alice" style="width:${alicePct}%"></div>
      <div class="bar-bob" style="width:${bobPct}%"></div>
      <div class="bar-target" style="left:${targetPct}%" title="4/9 of the pizza"></div>
    </div>
    <div class="scores">
      alice ${state.scores.alice} &middot; bob ${state.scores.bob} &middot; total ${state.total}
      ${state.finished ? "&middot; finished" : `&middot; ${state.turn} to move`}
    </div>`;
}
