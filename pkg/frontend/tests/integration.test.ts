/** Scripted browser session against the real engine: spawns the Python
 * play service, drives the controller through both canonical P3 lines and
 * checks the banners plus the engine-reply latency bound (< 1 s, n <= 12).
 * Skipped when the service cannot be started. */

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { PlayClient } from "../src/api.js";
import { GameController, GameElements } from "../src/game.js";

const PORT = 8765 + (process.pid % 400);
const BASE = `http://127.0.0.1:${PORT}`;

const pythonAvailable = spawnSync(
    "python3", ["-c", "import indicated_coloring"], { stdio: "ignore" },
).status === 0;

let server: ChildProcess | null = null;

async function waitForServer(): Promise<void> {
    for (let i = 0; i < 100; i++) {
        try {
            const res = await fetch(`${BASE}/sessions/ping`);
            if (res.status === 404) return;
        } catch {
            // not up yet
        }
        await new Promise((resolve) => setTimeout(resolve, 100));
    }
    throw new Error("play service did not come up");
}

function elements(): GameElements {
    const make = () => document.createElement("div");
    return { board: make(), swatches: make(), banner: make(),
             transcript: make(), error: make() };
}

function clickVertex(el: GameElements, v: number): void {
    (el.board.querySelector(`[data-vertex="${v}"]`) as SVGGElement).dispatchEvent(
        new MouseEvent("click", { bubbles: true }),
    );
}

async function waitIdle(controller: GameController): Promise<void> {
    for (let i = 0; i < 200 && controller.busy; i++) {
        await new Promise((resolve) => setTimeout(resolve, 5));
    }
    await new Promise((resolve) => setTimeout(resolve, 0));
}

describe.skipIf(!pythonAvailable)("live play service", () => {
    beforeAll(async () => {
        server = spawn(
            "python3",
            ["-m", "indicated_coloring.cli", "serve", "--port", String(PORT)],
            { stdio: "ignore" },
        );
        await waitForServer();
    });

    afterAll(() => {
        server?.kill();
    });

    it("reproduces the winning center-first line with the win banner", async () => {
        const el = elements();
        const controller = new GameController(new PlayClient(BASE), el);
        await controller.newGame({ graph: "P3", k: 2, human_side: "ann",
                                   engine: "optimal" });
        for (const label of ["1", "0", "2"]) {
            const v = Number(label);
            const t0 = Date.now();
            clickVertex(el, v);
            await waitIdle(controller);
            expect(Date.now() - t0).toBeLessThan(1000); // engine reply latency
        }
        expect(controller.snapshot?.status).toBe("ann-won");
        expect(el.banner.textContent).toMatch(/Ann wins/);
    });

    it("reproduces the losing leaves-first line with the loss banner", async () => {
        const el = elements();
        const controller = new GameController(new PlayClient(BASE), el);
        await controller.newGame({ graph: "P3", k: 2, human_side: "ann",
                                   engine: "optimal" });
        clickVertex(el, 0);
        await waitIdle(controller);
        clickVertex(el, 2);
        await waitIdle(controller);
        expect(controller.snapshot?.status).toBe("ben-won");
        expect(controller.snapshot?.blocked).toEqual([1]);
        expect(el.banner.textContent).toMatch(/Ben wins/);
    });

    it("stays under the latency bound on a 12-vertex product game", async () => {
        const el = elements();
        const controller = new GameController(new PlayClient(BASE), el);
        await controller.newGame({ graph: "K3[C4]", k: 9, human_side: "ann",
                                   engine: "optimal" });
        const snap = controller.snapshot;
        expect(snap?.n).toBe(12);
        const t0 = Date.now();
        clickVertex(el, snap!.legal[0]);
        await waitIdle(controller);
        expect(Date.now() - t0).toBeLessThan(1000);
        expect(controller.snapshot?.moves.length).toBe(1);
    });
});
