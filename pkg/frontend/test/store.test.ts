import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { GameStore } from "../src/store.js";
import type { ServerState } from "../src/types.js";

function makeState(partial: Partial<ServerState> = {}): ServerState {
  return {
    sizes: [1, 0, 1, 0],
    n: 4,
    total: 2,
    eaten_pieces: [],
    history: [],
    turn: "alice",
    scores: { alice: 0, bob: 0 },
    finished: false,
    legal_moves: [0, 1, 2, 3],
    ...partial,
  };
}

const afterMove = makeState({
  eaten_pieces: [0, 1],
  history: [
    { piece: 0, side: "opening", player: "alice" },
    { piece: 1, side: "right", player: "bob" },
  ],
  turn: "alice",
  scores: { alice: 1, bob: 0 },
  legal_moves: [2, 3],
});

type FetchArgs = { url: string; init?: RequestInit };

function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

describe("GameStore", () => {
  let calls: FetchArgs[];
  let responses: Array<Response | (() => Response)>;
  let store: GameStore;

  beforeEach(() => {
    calls = [];
    responses = [];
    vi.stubGlobal(
      "fetch",
      vi.fn(async (url: string, init?: RequestInit) => {
        calls.push({ url, init });
        const next = responses.shift();
        if (!next) throw new Error(`unexpected fetch: ${url}`);
        return typeof next === "function" ? next() : next;
      }),
    );
    store = new GameStore(new ApiClient("http://test"));
  });

  afterEach(() => {
    vi.unstubAllGlobals();
  });

  it("creates a game and keeps only the server state", async () => {
    responses.push(jsonResponse({ id: "g1", state: makeState() }));
    await store.newGame("1,0,1,0", "alice", "optimal");
    expect(store.gameId).toBe("g1");
    expect(store.state?.legal_moves).toEqual([0, 1, 2, 3]);
    expect(calls[0].url).toBe("http://test/games");
  });

  it("sends no request for an illegal click", async () => {
    responses.push(jsonResponse({ id: "g1", state: makeState({ legal_moves: [0, 2] }) }));
    await store.newGame("1,0,1,0", "alice", "optimal");
    const before = calls.length;
    await store.clickPiece(1);
    expect(calls.length).toBe(before);
  });

  it("ignores clicks when it is not the human's turn", async () => {
    responses.push(
      jsonResponse({ id: "g1", state: makeState({ turn: "bob" }) }),
    );
    await store.newGame("1,0,1,0", "alice", "optimal");
    const before = calls.length;
    await store.clickPiece(0);
    expect(calls.length).toBe(before);
  });

  it("posts a legal click and re-fetches the authoritative state", async () => {
    responses.push(jsonResponse({ id: "g1", state: makeState() }));
    await store.newGame("1,0,1,0", "alice", "optimal");
    responses.push(
      jsonResponse({
        id: "g1",
        state: afterMove,
        human_move: { piece: 0, side: "opening" },
        engine_reply: { piece: 1, side: "right" },
      }),
      jsonResponse({ id: "g1", state: afterMove }),
    );
    await store.clickPiece(0);
    expect(store.state?.scores).toEqual({ alice: 1, bob: 0 });
    expect(store.desyncDetected).toBe(false);
    expect(calls.map((c) => c.url)).toEqual([
      "http://test/games",
      "http://test/games/g1/moves",
      "http://test/games/g1",
    ]);
  });

  it("flags a desync and keeps the fetched state", async () => {
    responses.push(jsonResponse({ id: "g1", state: makeState() }));
    await store.newGame("1,0,1,0", "alice", "optimal");
    const divergent = makeState({ scores: { alice: 99, bob: 0 } });
    responses.push(
      jsonResponse({
        id: "g1",
        state: divergent,
        human_move: { piece: 0, side: "opening" },
        engine_reply: null,
      }),
      jsonResponse({ id: "g1", state: afterMove }),
    );
    await store.clickPiece(0);
    expect(store.desyncDetected).toBe(true);
    expect(store.state).toEqual(afterMove);
  });

  it("blocks input while a request is in flight", async () => {
    responses.push(jsonResponse({ id: "g1", state: makeState() }));
    await store.newGame("1,0,1,0", "alice", "optimal");
    let release: (() => void) | undefined;
    const gate = new Promise<void>((resolve) => (release = resolve));
    responses.push(() => {
      void gate;
      return jsonResponse({
        id: "g1",
        state: afterMove,
        human_move: { piece: 0, side: "opening" },
        engine_reply: null,
      });
    });
    responses.push(jsonResponse({ id: "g1", state: afterMove }));
    const first = store.clickPiece(0);
    expect(store.busy).toBe(true);
    expect(store.isClickable(2)).toBe(false);
    const second = store.clickPiece(2); // inert: busy
    release?.();
    await Promise.all([first, second]);
    // only the first click produced traffic (move + refetch)
    expect(calls.length).toBe(3);
  });

  it("surfaces API errors without clobbering state", async () => {
    responses.push(jsonResponse({ id: "g1", state: makeState() }));
    await store.newGame("1,0,1,0", "alice", "optimal");
    responses.push(jsonResponse({ detail: "not your turn" }, 409));
    await store.clickPiece(0);
    expect(store.lastError).toContain("not your turn");
    expect(store.state?.history).toEqual([]);
  });

  it("toggles hints and fetches them", async () => {
    responses.push(jsonResponse({ id: "g1", state: makeState() }));
    await store.newGame("1,0,1,0", "alice", "optimal");
    responses.push(
      jsonResponse({ id: "g1", turn: "alice", hints: { "0": 2, "1": 1, "2": 2, "3": 1 } }),
    );
    await store.toggleHints();
    expect(store.hintsOn).toBe(true);
    expect(store.hints).toEqual({ "0": 2, "1": 1, "2": 2, "3": 1 });
    await store.toggleHints();
    expect(store.hints).toBeNull();
  });
});
