/** Client-side game store.
 *
 * The store never constructs game state locally: every field of `state`
 * comes from the server, and after each move the authoritative state is
 * re-fetched and hash-compared against the move response.  While a request
 * is in flight all input is inert.
 */

import { ApiClient } from "./api.js";
import { stateHash } from "./geometry.js";
import type {
  AnalyzeResponse,
  PlayerName,
  ServerState,
} from "./types.js";

export type Listener = () => void;

export class GameStore {
  state: ServerState | null = null;
  gameId: string | null = null;
  humanRole: PlayerName = "alice";
  opponent = "optimal";
  hintsOn = false;
  hints: Record<string, number> | null = null;
  analysis: AnalyzeResponse | null = null;
  busy = false;
  lastError: string | null = null;
  /** set when a move response disagreed with the re-fetched state */
  desyncDetected = false;

  private listeners: Listener[] = [];

  constructor(public api: ApiClient) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  private async guard<T>(work: () => Promise<T>): Promise<T | undefined> {
    if (this.busy) return undefined;
    this.busy = true;
    this.lastError = null;
    this.emit();
    try {
      return await work();
    } catch (error) {
      this.lastError = error instanceof Error ? error.message : String(error);
      return undefined;
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  async newGame(
    sizes: number[] | string,
    humanRole: PlayerName,
    opponent: string,
  ): Promise<void> {
    await this.guard(async () => {
      const created = await this.api.createGame(sizes, humanRole, opponent);
      this.gameId = created.id;
      this.state = created.state;
      this.humanRole = humanRole;
      this.opponent = opponent;
      this.analysis = null;
      this.hints = null;
      this.desyncDetected = false;
      if (this.hintsOn) await this.refreshHints();
    });
  }

  /** True when clicking this piece right now would be a legal human move. */
  isClickable(piece: number): boolean {
    const state = this.state;
    return (
      !this.busy &&
      state !== null &&
      !state.finished &&
      state.turn === this.humanRole &&
      state.legal_moves.includes(piece)
    );
  }

  /** Send a click; silently inert unless the piece is clickable. */
  async clickPiece(piece: number): Promise<void> {
    if (!this.isClickable(piece) || this.gameId === null) return;
    const id = this.gameId;
    await this.guard(async () => {
      const moved = await this.api.postMove(id, piece);
      const fetched = await this.api.getGame(id);
      if (stateHash(fetched.state) !== stateHash(moved.state)) {
        // the server is the single source of truth; keep the fetched copy
        this.desyncDetected = true;
      }
      this.state = fetched.state;
      if (this.hintsOn) await this.refreshHints();
    });
  }

  async toggleHints(): Promise<void> {
    this.hintsOn = !this.hintsOn;
    if (this.hintsOn && this.gameId !== null) {
      await this.guard(() => this.refreshHints());
    } else {
      this.hints = null;
      this.emit();
    }
  }

  /** What-if values for the current position (engine-optimal continuations). */
  async refreshHints(): Promise<void> {
    if (this.gameId === null) return;
    const response = await this.api.getHints(this.gameId);
    this.hints = response.hints;
  }

  async analyzeCurrent(): Promise<void> {
    const state = this.state;
    if (state === null) return;
    await this.guard(async () => {
      this.analysis = await this.api.analyze(state.sizes);
    });
  }

  /** Alice's score relative to the 4/9 guarantee, as a percent of total. */
  guaranteeProgress(): { aliceShare: number; target: number } | null {
    const state = this.state;
    if (state === null || state.total === 0) return null;
    return {
      aliceShare: state.scores.alice / state.total,
      target: 4 / 9,
    };
  }
}
