// App wiring: graph library, role choice, the turn loop against the
// service, hints, and trace download. Every transition waits for the
// server; there is no optimistic state.

import { ApiClient, ApiError } from "./api.js";
import {
    applyError, applyHint, applyTurn, applyState, clickAction, emptyBoard,
    BoardViewModel,
} from "./board.js";
import { BoardRenderer } from "./render.js";
import type { LibraryEntry } from "./types.js";

const api = new ApiClient();
let vm: BoardViewModel = emptyBoard();
let sessionId: string | null = null;
let busy = false;

const svg = document.querySelector<SVGSVGElement>("#board")!;
const bannerEl = document.querySelector<HTMLElement>("#banner")!;
const errorEl = document.querySelector<HTMLElement>("#error")!;
const logEl = document.querySelector<HTMLElement>("#log")!;
const graphSelect = document.querySelector<HTMLSelectElement>("#graph")!;
const roleSelect = document.querySelector<HTMLSelectElement>("#role")!;
const newGameBtn = document.querySelector<HTMLButtonElement>("#new-game")!;
const hintBtn = document.querySelector<HTMLButtonElement>("#hint")!;
const traceLink = document.querySelector<HTMLAnchorElement>("#trace")!;

const renderer = new BoardRenderer(svg, (vertex) => {
    void handleClick(vertex);
});

function refresh(next: BoardViewModel): void {
    vm = next;
    bannerEl.textContent = vm.banner;
    errorEl.textContent = vm.error ? vm.error.message : "";
    logEl.textContent = vm.log.slice(-14).join("\n");
    hintBtn.disabled = !vm.yourTurn;
    renderer.render(vm);
}

async function handleClick(vertex: number): Promise<void> {
    if (busy || sessionId === null) {
        return;
    }
    const action = clickAction(vm, vertex);
    if (action.kind === "ignore") {
        return;
    }
    busy = true;
    try {
        const turn = action.kind === "move"
            ? await api.move(sessionId, action.target)
            : await api.placeApple(sessionId, action.vertex);
        refresh(applyTurn(vm, turn));
    } catch (err) {
        if (err instanceof ApiError) {
            refresh(applyError(vm, err.detail));
        } else {
            throw err;
        }
    } finally {
        busy = false;
    }
}

async function newGame(): Promise<void> {
    const entry = libraryEntries.find((e) => e.name === graphSelect.value);
    if (!entry) {
        return;
    }
    const role = roleSelect.value === "placer" ? "placer" : "snake";
    busy = true;
    try {
        const turn = await api.createSession(entry.graph, role);
        sessionId = turn.state.session_id;
        traceLink.setAttribute("href", api.traceUrl(sessionId));
        refresh(applyTurn(emptyBoard(), turn));
    } catch (err) {
        if (err instanceof ApiError) {
            refresh(applyError(vm, err.detail));
        } else {
            throw err;
        }
    } finally {
        busy = false;
    }
}

async function showHint(): Promise<void> {
    if (sessionId === null) {
        return;
    }
    try {
        refresh(applyHint(vm, await api.hint(sessionId)));
    } catch (err) {
        if (err instanceof ApiError) {
            refresh(applyError(vm, err.detail));
        } else {
            throw err;
        }
    }
}

let libraryEntries: LibraryEntry[] = [];

async function boot(): Promise<void> {
    libraryEntries = await api.library();
    for (const entry of libraryEntries) {
        const option = document.createElement("option");
        option.value = entry.name;
        option.textContent = `${entry.name} - ${entry.description}`;
        graphSelect.appendChild(option);
    }
    newGameBtn.addEventListener("click", () => void newGame());
    hintBtn.addEventListener("click", () => void showHint());
    refresh(vm);
}

void boot();

export { applyTurn, applyState, applyError, clickAction };
