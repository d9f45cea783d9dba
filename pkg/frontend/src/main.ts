/** DOM wiring: new-game form, board, hints toggle and the analysis panel. */

import { ApiClient } from "./api.js";
import { renderBoard, renderScoreBar } from "./board.js";
import { GameStore } from "./store.js";
import type { PlayerName } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

const params = new URLSearchParams(window.location.search);
const baseUrl =
  params.get("api") ??
  (window as { PIZZA_API_URL?: string }).PIZZA_API_URL ??
  "http://127.0.0.1:8000";

const store = new GameStore(new ApiClient(baseUrl));

const board = el<HTMLElement>("board").querySelector("svg") as SVGSVGElement;
const scoreBar = el<HTMLDivElement>("score-bar");
const status = el<HTMLDivElement>("status");
const analysisPanel = el<HTMLDivElement>("analysis");

function renderAnalysis(): void {
  const report = store.analysis;
  if (!report) {
    analysisPanel.innerHTML = "";
    return;
  }
  const ratio = report.ratio ? `${report.ratio.num}/${report.ratio.den}` : "n/a";
  const rows = Object.entries(report.strategy_values)
    .map(([sid, value]) => `<tr><td>${sid}</td><td>${value}</td></tr>`)
    .join("");
  let parts = "";
  if (report.tripartition) {
    const sizes = report.tripartition.sizes;
    parts = `<p>parts B/M/W shaded on the board (thick stroke = major piece);
      sizes: B ${sizes.b_major}/${sizes.b_minor},
      M ${sizes.m_major}/${sizes.m_minor},
      W ${sizes.w_major}/${sizes.w_minor} (major/minor)</p>`;
  }
  analysisPanel.innerHTML = `
    <h3>analysis</h3>
    <p>${report.hardness} pizza &middot; optimal ${report.optimal} of
       ${report.total} (${ratio}) &middot; best follow value ${report.best_fb_value}</p>
    ${parts}
    <table><tr><th>strategy</th><th>guaranteed</th></tr>${rows}</table>`;
}

function render(): void {
  renderBoard(board, store);
  renderScoreBar(scoreBar, store);
  renderAnalysis();
  el<HTMLButtonElement>("hints-toggle").textContent = store.hintsOn
    ? "hide hints"
    : "show hints";
  const messages: string[] = [];
  if (store.busy) messages.push("waiting for the server...");
  if (store.lastError) messages.push(`error: ${store.lastError}`);
  if (store.desyncDetected) messages.push("state desync detected (resynced)");
  status.textContent = messages.join(" | ");
  (document.querySelectorAll("button, input, select") as NodeListOf<HTMLInputElement>)
    .forEach((control) => {
      control.disabled = store.busy;
    });
}

store.subscribe(render);

el<HTMLFormElement>("new-game-form").addEventListener("submit", (event) => {
  event.preventDefault();
  const sizes = el<HTMLInputElement>("sizes").value;
  const role = el<HTMLSelectElement>("role").value as PlayerName;
  const opponent = el<HTMLInputElement>("opponent").value;
  void store.newGame(sizes, role, opponent);
});

el<HTMLButtonElement>("hints-toggle").addEventListener("click", () => {
  void store.toggleHints();
});

el<HTMLButtonElement>("analyze-button").addEventListener("click", () => {
  void store.analyzeCurrent();
});

render();
