/** Contract tests against recorded service snapshots: every indicator the
 * board shows comes from snapshot fields, nothing is re-derived. */

import { describe, expect, it } from "vitest";

import type { Snapshot } from "../src/api.js";
import {
    bannerText,
    circularLayout,
    colorFill,
    renderBoard,
    renderSwatches,
    swatchViews,
    transcriptJson,
    vertexViews,
} from "../src/board.js";
import fixtures from "./fixtures/snapshots.json";

const winLine = fixtures.win_line as Snapshot[];
const lossLine = fixtures.loss_line as Snapshot[];
const c5Mid = fixtures.c5_mid as Snapshot;

describe("vertexViews", () => {
    it("marks exactly the snapshot's blocked vertices", () => {
        const final = lossLine[lossLine.length - 1];
        const views = vertexViews(final);
        expect(views.filter((v) => v.blocked).map((v) => v.id)).toEqual(final.blocked);
    });

    it("derives danger marks from available-colors fields only", () => {
        for (const snap of [...winLine, ...lossLine, c5Mid]) {
            for (const view of vertexViews(snap)) {
                const expected = snap.colors[view.id] === null
                    && snap.available[view.id].length === 1
                    && !snap.blocked.includes(view.id);
                expect(view.danger).toBe(expected);
            }
        }
    });

    it("fills follow assigned colors through the fixed palette", () => {
        for (const view of vertexViews(c5Mid)) {
            const color = c5Mid.colors[view.id];
            expect(view.fill).toBe(color === null ? null : colorFill(color));
        }
    });

    it("clickability mirrors the legal list when presenting", () => {
        const views = vertexViews(c5Mid);
        for (const view of views) {
            expect(view.clickable).toBe(c5Mid.legal.includes(view.id));
        }
    });
});

describe("swatchViews", () => {
    it("renders k numbered swatches, enabled only when coloring", () => {
        const views = swatchViews(c5Mid);
        expect(views.map((v) => v.color)).toEqual([1, 2, 3]);
        expect(views.every((v) => !v.clickable)).toBe(true); // presenting phase
    });
});

describe("banner and transcript", () => {
    it("win and loss banners", () => {
        expect(bannerText(winLine[winLine.length - 1])).toMatch(/Ann wins/);
        expect(bannerText(lossLine[lossLine.length - 1])).toMatch(/Ben wins.*blocked/);
        expect(bannerText(winLine[0])).toBeNull();
    });

    it("transcript matches the engine's JSON shape", () => {
        const final = lossLine[lossLine.length - 1];
        expect(JSON.parse(transcriptJson(final))).toEqual({
            k: 2,
            moves: final.moves,
            outcome: "ben",
            blocked: 1,
        });
    });
});

describe("rendering", () => {
    it("circular layout spaces n points on the circle", () => {
        const pts = circularLayout(5, 0, 0, 100);
        expect(pts).toHaveLength(5);
        for (const p of pts) {
            expect(Math.hypot(p.x, p.y)).toBeCloseTo(100, 6);
        }
    });

    it("draws one group per vertex and one line per edge", () => {
        const host = document.createElement("div");
        renderBoard(host, c5Mid, { onVertex: () => undefined });
        expect(host.querySelectorAll("[data-vertex]")).toHaveLength(c5Mid.n);
        expect(host.querySelectorAll("line")).toHaveLength(c5Mid.edges.length);
    });

    it("clicking a vertex group reports its id", () => {
        const host = document.createElement("div");
        const clicks: number[] = [];
        renderBoard(host, c5Mid, { onVertex: (v) => clicks.push(v) });
        (host.querySelector('[data-vertex="3"]') as SVGGElement).dispatchEvent(
            new MouseEvent("click", { bubbles: true }),
        );
        expect(clicks).toEqual([3]);
    });

    it("swatch buttons always show their numbers", () => {
        const host = document.createElement("div");
        renderSwatches(host, c5Mid, () => undefined);
        const buttons = [...host.querySelectorAll("button")];
        expect(buttons.map((b) => b.textContent)).toEqual(["1", "2", "3"]);
    });
});
