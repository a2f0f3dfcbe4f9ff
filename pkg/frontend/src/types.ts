// Server payload shapes, mirroring the service's response models.

export interface GraphPayload {
    vertices: number[];
    edges: [number, number][];
    coords?: [number, number][] | null;
}

export interface LegalMove {
    target: number;
    kind: "eat" | "step" | "rotate";
}

export interface StatusView {
    outcome: "ongoing" | "snake_wins" | "snake_loses";
    loss_reason?: "stuck" | "repetition" | null;
}

export type Turn = "human-snake" | "human-placer" | "engine" | "over";

export interface SessionView {
    session_id: string;
    graph: GraphPayload;
    human_role: "snake" | "placer";
    body: number[];
    apple: number | null;
    length: number;
    status: StatusView;
    turn: Turn;
    legal_moves: LegalMove[];
    moves_played: number;
    engine_note?: string | null;
}

export interface GameEvent {
    type: "apple" | "move";
    by: "human" | "engine";
    vertex?: number | null;
    target?: number | null;
    kind?: string | null;
    source?: string | null;
}

export interface TurnResponse {
    events: GameEvent[];
    state: SessionView;
}

export interface HintResponse {
    vertex: number;
    source: string;
}

export interface ApiErrorDetail {
    error: string;
    message: string;
    rule?: string;
}

export interface LibraryEntry {
    name: string;
    description: string;
    graph: GraphPayload;
}
