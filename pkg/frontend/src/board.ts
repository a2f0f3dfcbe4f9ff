// Pure view model: folds server responses into what the board shows.
// The client never computes game rules; highlights come verbatim from the
// server's legal move list (or, for the placer, the unoccupied vertices,
// which only disables obviously illegal placements - the server still
// validates every click).

import type {
    ApiErrorDetail, GameEvent, HintResponse, SessionView, TurnResponse,
} from "./types.js";

export interface BoardViewModel {
    session: SessionView | null;
    banner: string;
    yourTurn: boolean;
    highlights: number[];
    hint: HintResponse | null;
    error: { message: string; rule?: string } | null;
    log: string[];
}

export function emptyBoard(): BoardViewModel {
    return {
        session: null,
        banner: "no game",
        yourTurn: false,
        highlights: [],
        hint: null,
        error: null,
        log: [],
    };
}

function banner(state: SessionView): string {
    const s = state.status;
    if (s.outcome === "snake_wins") {
        return `Snake wins at length ${state.length}`;
    }
    if (s.outcome === "snake_loses") {
        return `Snake loses (${s.loss_reason ?? "defeated"})`;
    }
    switch (state.turn) {
        case "human-snake":
            return "your move: pick a highlighted vertex";
        case "human-placer":
            return "your placement: pick an unoccupied vertex";
        case "engine":
            return "engine is thinking";
        default:
            return "game over";
    }
}

function highlightsFor(state: SessionView): number[] {
    if (state.status.outcome !== "ongoing") {
        return [];
    }
    if (state.turn === "human-snake") {
        return state.legal_moves.map((m) => m.target);
    }
    if (state.turn === "human-placer") {
        const occupied = new Set(state.body);
        return state.graph.vertices.filter((v) => !occupied.has(v));
    }
    return [];
}

function describeEvent(e: GameEvent): string {
    const who = e.by === "human" ? "you" : "engine";
    if (e.type === "apple") {
        const src = e.source ? ` [${e.source}]` : "";
        return `${who}: apple on ${e.vertex}${src}`;
    }
    const src = e.source ? ` [${e.source}]` : "";
    return `${who}: ${e.kind ?? "move"} to ${e.target}${src}`;
}

export function applyState(vm: BoardViewModel,
                           state: SessionView): BoardViewModel {
    return {
        ...vm,
        session: state,
        banner: banner(state),
        yourTurn: state.turn === "human-snake"
            || state.turn === "human-placer",
        highlights: highlightsFor(state),
        hint: null,
        error: null,
    };
}

export function applyTurn(vm: BoardViewModel,
                          turn: TurnResponse): BoardViewModel {
    const next = applyState(vm, turn.state);
    return { ...next, log: [...vm.log, ...turn.events.map(describeEvent)] };
}

export function applyError(vm: BoardViewModel,
                           detail: ApiErrorDetail): BoardViewModel {
    const rule = detail.rule ? ` (rule: ${detail.rule})` : "";
    return {
        ...vm,
        error: { message: `${detail.message}${rule}`, rule: detail.rule },
    };
}

export function applyHint(vm: BoardViewModel,
                          hint: HintResponse): BoardViewModel {
    return { ...vm, hint };
}

export function clearTransients(vm: BoardViewModel): BoardViewModel {
    return { ...vm, hint: null, error: null };
}

// What a click on a vertex should do, given the current view. The server
// remains authoritative; this only routes the click.
export type ClickAction =
    | { kind: "move"; target: number }
    | { kind: "place"; vertex: number }
    | { kind: "ignore" };

export function clickAction(vm: BoardViewModel, vertex: number): ClickAction {
    const s = vm.session;
    if (!s || s.status.outcome !== "ongoing") {
        return { kind: "ignore" };
    }
    if (s.turn === "human-snake") {
        return { kind: "move", target: vertex };
    }
    if (s.turn === "human-placer") {
        return { kind: "place", vertex };
    }
    return { kind: "ignore" };
}
