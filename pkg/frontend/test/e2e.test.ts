/** End-to-end: a headless client plays a full game against the optimal
 * engine through the real HTTP server.
 *
 * The expected line and scores are frozen from the exact solver: on the
 * pizza 1,0,1,0 with deterministic lexicographic tie-breaks the game goes
 * 0 (human), 1 (engine), 2 (human), 3 (engine) and ends 2-0 for Alice.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { GameStore } from "../src/store.js";

const PORT = 8765 + (process.pid % 500);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const response = await fetch(`${BASE}/spec`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("game server did not come up");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "pizzagame.cli", "serve", "--port", String(PORT), "--bind", "127.0.0.1"],
    { stdio: "ignore" },
  );
  await waitForServer();
}, 30_000);

afterAll(() => {
  server?.kill();
});

describe("full game against the optimal engine", () => {
  it("follows the solver-precomputed line and scores", async () => {
    const store = new GameStore(new ApiClient(BASE));
    await store.newGame([1, 0, 1, 0], "alice", "optimal");
    expect(store.lastError).toBeNull();
    expect(store.state?.legal_moves).toEqual([0, 1, 2, 3]);

    await store.toggleHints();
    expect(store.hints).toEqual({ "0": 2, "1": 1, "2": 2, "3": 1 });
    // the hints overlay must equal the raw endpoint payload exactly
    const raw = await new ApiClient(BASE).getHints(store.gameId!);
    expect(store.hints).toEqual(raw.hints);

    await store.clickPiece(0);
    expect(store.desyncDetected).toBe(false);
    expect(store.state?.history.map((m) => m.piece)).toEqual([0, 1]);

    await store.clickPiece(2);
    expect(store.state?.finished).toBe(true);
    expect(store.state?.history.map((m) => m.piece)).toEqual([0, 1, 2, 3]);
    expect(store.state?.scores).toEqual({ alice: 2, bob: 0 });
  }, 20_000);

  it("keeps illegal clicks inert against the live server", async () => {
    const store = new GameStore(new ApiClient(BASE));
    await store.newGame([2, 3, 1], "alice", "optimal");
    await store.clickPiece(1);
    const after = store.state!;
    // piece 1 is eaten; clicking it again or clicking out of turn does nothing
    await store.clickPiece(1);
    expect(store.state).toEqual(after);
  }, 20_000);

  it("plays as bob against a strategy opponent", async () => {
    const store = new GameStore(new ApiClient(BASE));
    await store.newGame([0, 0, 1, 0, 0, 1, 0, 0, 1], "bob", "best-of-four");
    expect(store.state?.history.length).toBe(1);
    while (!store.state?.finished) {
      const legal = store.state!.legal_moves;
      await store.clickPiece(legal[0]);
      expect(store.lastError).toBeNull();
    }
    const scores = store.state!.scores;
    expect(scores.alice + scores.bob).toBe(3);
    // the engine plays a 4/9-guarantee strategy
    expect(9 * scores.alice).toBeGreaterThanOrEqual(4 * 3);
  }, 20_000);

  it("analysis panel data mirrors the analyze endpoint", async () => {
    const store = new GameStore(new ApiClient(BASE));
    await store.newGame([0, 4, 0, 1, 4, 1, 0, 4, 0], "alice", "optimal");
    await store.analyzeCurrent();
    expect(store.analysis?.hardness).toBe("hard");
    const sizes = store.analysis!.tripartition!.sizes;
    expect([
      sizes.b_major, sizes.b_minor, sizes.m_major,
      sizes.m_minor, sizes.w_major, sizes.w_minor,
    ]).toEqual([4, 0, 4, 0, 4, 2]);
  }, 20_000);
});
