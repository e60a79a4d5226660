/** Typed client for the play service. The UI consumes this API only. */

export interface MoveRecord {
    v: number;
    c: number;
}

export type Turn = "human" | "engine" | "done";
export type Status = "in-progress" | "ann-won" | "ben-won";

export interface Snapshot {
    id: string;
    k: number;
    n: number;
    edges: [number, number][];
    colors: (number | null)[];
    turn: Turn;
    presented: number | null;
    legal: number[];
    available: number[][];
    blocked: number[];
    status: Status;
    moves: MoveRecord[];
    human_side: string;
    engine: string;
}

export interface NewGameRequest {
    graph: string;
    k: number;
    human_side: "ann" | "ben" | "both";
    engine: string;
}

export class ApiError extends Error {
    constructor(readonly status: number, message: string) {
        super(message);
    }
}

async function parseError(res: Response): Promise<never> {
    let detail = `${res.status} ${res.statusText}`;
    try {
        const body = await res.json();
        if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
        // leave the generic message
    }
    throw new ApiError(res.status, detail);
}

export class PlayClient {
    constructor(private readonly baseUrl: string = "") {}

    private async request(path: string, init?: RequestInit): Promise<Snapshot> {
        const res = await fetch(this.baseUrl + path, {
            headers: { "Content-Type": "application/json" },
            ...init,
        });
        if (!res.ok) await parseError(res);
        return (await res.json()) as Snapshot;
    }

    createSession(req: NewGameRequest): Promise<Snapshot> {
        return this.request("/sessions", {
            method: "POST",
            body: JSON.stringify(req),
        });
    }

    submitVertex(id: string, vertex: number): Promise<Snapshot> {
        return this.request(`/sessions/${id}/moves`, {
            method: "POST",
            body: JSON.stringify({ vertex }),
        });
    }

    submitColor(id: string, color: number): Promise<Snapshot> {
        return this.request(`/sessions/${id}/moves`, {
            method: "POST",
            body: JSON.stringify({ color }),
        });
    }

    getSession(id: string): Promise<Snapshot> {
        return this.request(`/sessions/${id}`);
    }
}
