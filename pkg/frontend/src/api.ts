/** Thin typed client for the game server; the base URL is configurable. */

import type {
  AnalyzeResponse,
  CreateGameResponse,
  HintsResponse,
  MoveResponse,
  PlayerName,
  ServerState,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // fall back to the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(public baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  createGame(
    sizes: number[] | string,
    humanRole: PlayerName,
    opponent: string,
  ): Promise<CreateGameResponse> {
    return request(this.url("/games"), {
      method: "POST",
      body: JSON.stringify({ sizes, human_role: humanRole, opponent }),
    });
  }

  getGame(id: string): Promise<{ id: string; state: ServerState }> {
    return request(this.url(`/games/${id}`));
  }

  postMove(id: string, piece: number): Promise<MoveResponse> {
    return request(this.url(`/games/${id}/moves`), {
      method: "POST",
      body: JSON.stringify({ piece }),
    });
  }

  getHints(id: string): Promise<HintsResponse> {
    return request(this.url(`/games/${id}/hints`));
  }

  analyze(sizes: number[] | string): Promise<AnalyzeResponse> {
    return request(this.url("/analyze"), {
      method: "POST",
      body: JSON.stringify({ sizes }),
    });
  }
}
