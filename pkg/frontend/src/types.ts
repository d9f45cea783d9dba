/** Wire types for the game server's JSON API. */

export type PlayerName = "alice" | "bob";

export interface MoveRecord {
  piece: number;
  side: "left" | "right" | "opening";
  player: PlayerName;
}

export interface ServerState {
  sizes: number[];
  n: number;
  total: number;
  eaten_pieces: number[];
  history: MoveRecord[];
  turn: PlayerName | null;
  scores: { alice: number; bob: number };
  finished: boolean;
  legal_moves: number[];
}

export interface CreateGameResponse {
  id: string;
  state: ServerState;
}

export interface MoveResponse {
  id: string;
  state: ServerState;
  human_move: { piece: number; side: string };
  engine_reply: { piece: number; side: string } | null;
}

export interface HintsResponse {
  id: string;
  turn: PlayerName | null;
  hints: Record<string, number>;
}

export interface Ratio {
  num: number;
  den: number;
}

export interface PartReport {
  pieces: number[];
  minors: number[];
  majors: number[];
  minor_size: number;
  major_size: number;
  start_cut: number;
  end_cut: number;
}

export interface TripartitionReport {
  cuts: { worst: number; mid: number; best: number };
  special_pieces: { mid_anchor: number; answer_frontier: number };
  parts: { B: PartReport; M: PartReport; W: PartReport };
  sizes: Record<string, number>;
}

export interface AnalyzeResponse {
  sizes: number[];
  n: number;
  total: number;
  hardness: "easy" | "hard";
  best_fb_value: number;
  fb_witness: number | null;
  optimal: number;
  ratio: Ratio | null;
  strategy_values: Record<string, number>;
  tripartition?: TripartitionReport;
}
