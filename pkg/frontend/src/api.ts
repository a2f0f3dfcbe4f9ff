// Thin fetch wrapper for the service API. Every call resolves to either the
// parsed payload or a typed error detail; callers feed both into the view
// model.

import type {
    ApiErrorDetail, GraphPayload, HintResponse, LibraryEntry, SessionView,
    TurnResponse,
} from "./types.js";

export class ApiError extends Error {
    constructor(public status: number, public detail: ApiErrorDetail) {
        super(detail.message);
    }
}

export class ApiClient {
    constructor(private baseUrl = "") {}

    private async request<T>(method: string, path: string,
                             body?: unknown): Promise<T> {
        const response = await fetch(`${this.baseUrl}/api/v1${path}`, {
            method,
            headers: body === undefined
                ? undefined : { "Content-Type": "application/json" },
            body: body === undefined ? undefined : JSON.stringify(body),
        });
        const payload = await response.json();
        if (!response.ok) {
            const detail: ApiErrorDetail =
                typeof payload.detail === "object" && payload.detail
                    ? payload.detail
                    : { error: "request-failed", message: String(payload.detail) };
            throw new ApiError(response.status, detail);
        }
        return payload as T;
    }

    library(): Promise<LibraryEntry[]> {
        return this.request("GET", "/library");
    }

    createSession(graph: GraphPayload, humanRole: "snake" | "placer"):
            Promise<TurnResponse> {
        return this.request("POST", "/sessions",
                            { graph, human_role: humanRole });
    }

    getState(sessionId: string): Promise<SessionView> {
        return this.request("GET", `/sessions/${sessionId}`);
    }

    move(sessionId: string, target: number): Promise<TurnResponse> {
        return this.request("POST", `/sessions/${sessionId}/move`, { target });
    }

    placeApple(sessionId: string, vertex: number): Promise<TurnResponse> {
        return this.request("POST", `/sessions/${sessionId}/apple`, { vertex });
    }

    hint(sessionId: string): Promise<HintResponse> {
        return this.request("GET", `/sessions/${sessionId}/hint`);
    }

    traceUrl(sessionId: string): string {
        return `${this.baseUrl}/api/v1/sessions/${sessionId}/trace`;
    }
}
