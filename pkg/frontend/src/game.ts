/** Game controller: owns the session, routes clicks, renders snapshots.
 * One active session per controller (per tab); rendering is idempotent. */

import { ApiError, NewGameRequest, PlayClient, Snapshot } from "./api.js";
import {
    bannerText,
    renderBoard,
    renderSwatches,
    transcriptJson,
} from "./board.js";

export interface GameElements {
    board: HTMLElement;
    swatches: HTMLElement;
    banner: HTMLElement;
    transcript: HTMLElement;
    error: HTMLElement;
}

export class GameController {
    snapshot: Snapshot | null = null;
    busy = false;

    constructor(
        private readonly client: PlayClient,
        private readonly el: GameElements,
    ) {}

    async newGame(req: NewGameRequest): Promise<void> {
        this.el.error.textContent = "";
        try {
            this.render(await this.client.createSession(req));
        } catch (err) {
            // surface service errors verbatim
            this.el.error.textContent = err instanceof Error ? err.message : String(err);
            throw err;
        }
    }

    render(snap: Snapshot): void {
        this.snapshot = snap;
        renderBoard(this.el.board, snap, { onVertex: (v) => void this.clickVertex(v) });
        renderSwatches(this.el.swatches, snap, (c) => void this.clickColor(c));
        this.el.banner.textContent = bannerText(snap) ?? "";
        this.el.transcript.textContent = transcriptJson(snap);
    }

    /** Click a vertex (Ann's move). Ignored unless the snapshot marks the
     * vertex legal right now; rejected moves flash and revert. */
    async clickVertex(v: number): Promise<void> {
        const snap = this.snapshot;
        if (!snap || this.busy) return;
        if (snap.turn !== "human" || snap.presented !== null) return;
        if (!snap.legal.includes(v)) {
            this.flash(`vertex ${v} is not a legal move`);
            return;
        }
        this.highlight(v);
        await this.submit(() => this.client.submitVertex(snap.id, v));
    }

    /** Click a color swatch (Ben's move). */
    async clickColor(c: number): Promise<void> {
        const snap = this.snapshot;
        if (!snap || this.busy) return;
        if (snap.turn !== "human" || snap.presented === null) return;
        if (!snap.legal.includes(c)) {
            this.flash(`color ${c} is not proper here`);
            return;
        }
        await this.submit(() => this.client.submitColor(snap.id, c));
    }

    private async submit(send: () => Promise<Snapshot>): Promise<void> {
        const before = this.snapshot;
        this.busy = true;
        try {
            this.render(await send());
            this.el.error.textContent = "";
        } catch (err) {
            if (before) this.render(before); // revert the optimistic highlight
            this.flash(err instanceof ApiError ? err.message : String(err));
        } finally {
            this.busy = false;
        }
    }

    private highlight(v: number): void {
        const g = this.el.board.querySelector(`[data-vertex="${v}"] circle`);
        if (g) (g as SVGCircleElement).setAttribute("stroke", "#f1c40f");
    }

    private flash(message: string): void {
        this.el.error.textContent = message;
    }
}
