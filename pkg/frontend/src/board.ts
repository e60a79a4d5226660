/** Render helpers. Everything shown is derived from snapshot fields alone:
 * legality from `legal`, danger marks from `available`, blocked marks from
 * `blocked`. The board never re-derives game rules. */

import type { Snapshot } from "./api.js";

/** Fixed ordered palette; swatch n renders color number n (1-based).
 * Numbers are always drawn on top for color-blind safety. */
export const PALETTE = [
    "#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2", "#eeca3b",
    "#b279a2", "#ff9da6", "#9d755d", "#bab0ac", "#2f4b7c", "#a05195",
];

export function colorFill(color: number): string {
    return PALETTE[(color - 1) % PALETTE.length];
}

export interface Point {
    x: number;
    y: number;
}

export function circularLayout(
    n: number, cx: number, cy: number, radius: number,
): Point[] {
    const pts: Point[] = [];
    for (let i = 0; i < n; i++) {
        const angle = (2 * Math.PI * i) / n - Math.PI / 2;
        pts.push({
            x: cx + radius * Math.cos(angle),
            y: cy + radius * Math.sin(angle),
        });
    }
    return pts;
}

export interface VertexView {
    id: number;
    fill: string | null;      // assigned color, or null when uncolored
    colorNumber: number | null;
    presented: boolean;        // halo: awaiting a color
    danger: boolean;           // exactly one available color remains
    blocked: boolean;
    clickable: boolean;        // legal vertex choice right now
}

export function vertexViews(snap: Snapshot): VertexView[] {
    const awaitingVertex = snap.turn === "human" && snap.presented === null;
    const views: VertexView[] = [];
    for (let v = 0; v < snap.n; v++) {
        const color = snap.colors[v];
        views.push({
            id: v,
            fill: color === null ? null : colorFill(color),
            colorNumber: color,
            presented: snap.presented === v,
            danger: color === null && snap.available[v].length === 1
                && !snap.blocked.includes(v),
            blocked: snap.blocked.includes(v),
            clickable: awaitingVertex && snap.legal.includes(v),
        });
    }
    return views;
}

export interface SwatchView {
    color: number;
    fill: string;
    clickable: boolean; // legal color choice right now
}

export function swatchViews(snap: Snapshot): SwatchView[] {
    const awaitingColor = snap.turn === "human" && snap.presented !== null;
    const views: SwatchView[] = [];
    for (let c = 1; c <= snap.k; c++) {
        views.push({
            color: c,
            fill: colorFill(c),
            clickable: awaitingColor && snap.legal.includes(c),
        });
    }
    return views;
}

export function bannerText(snap: Snapshot): string | null {
    if (snap.status === "ann-won") {
        return "Ann wins - the whole graph is colored.";
    }
    if (snap.status === "ben-won") {
        const witness = snap.blocked.length ? ` - vertex ${snap.blocked[0]} is blocked` : "";
        return `Ben wins${witness}.`;
    }
    return null;
}

/** Transcript in the engine's JSON order, ready to paste into the CLI. */
export function transcriptJson(snap: Snapshot): string {
    const out: Record<string, unknown> = {
        k: snap.k,
        moves: snap.moves,
    };
    if (snap.status !== "in-progress") {
        out.outcome = snap.status === "ann-won" ? "ann" : "ben";
        if (snap.status === "ben-won" && snap.blocked.length) {
            out.blocked = snap.blocked[0];
        }
    }
    return JSON.stringify(out);
}

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 420;

export interface BoardHandlers {
    onVertex(v: number): void;
}

export function renderBoard(
    container: HTMLElement, snap: Snapshot, handlers: BoardHandlers,
): void {
    container.textContent = "";
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
    svg.setAttribute("width", String(SIZE));
    svg.setAttribute("height", String(SIZE));
    const layout = circularLayout(snap.n, SIZE / 2, SIZE / 2, SIZE / 2 - 40);
    for (const [u, v] of snap.edges) {
        const line = document.createElementNS(SVG_NS, "line");
        line.setAttribute("x1", String(layout[u].x));
        line.setAttribute("y1", String(layout[u].y));
        line.setAttribute("x2", String(layout[v].x));
        line.setAttribute("y2", String(layout[v].y));
        line.setAttribute("stroke", "#666");
        svg.appendChild(line);
    }
    for (const view of vertexViews(snap)) {
        const g = document.createElementNS(SVG_NS, "g");
        g.setAttribute("data-vertex", String(view.id));
        if (view.presented) {
            const halo = document.createElementNS(SVG_NS, "circle");
            halo.setAttribute("cx", String(layout[view.id].x));
            halo.setAttribute("cy", String(layout[view.id].y));
            halo.setAttribute("r", "24");
            halo.setAttribute("fill", "none");
            halo.setAttribute("stroke", "#f1c40f");
            halo.setAttribute("stroke-width", "4");
            halo.setAttribute("class", "halo");
            g.appendChild(halo);
        }
        const circle = document.createElementNS(SVG_NS, "circle");
        circle.setAttribute("cx", String(layout[view.id].x));
        circle.setAttribute("cy", String(layout[view.id].y));
        circle.setAttribute("r", "16");
        circle.setAttribute("fill", view.fill ?? "#d9d9d9");
        circle.setAttribute("stroke", view.danger ? "#e45756" : "#333");
        circle.setAttribute("stroke-width", view.danger ? "3" : "1");
        if (view.clickable) circle.setAttribute("class", "clickable");
        g.appendChild(circle);
        const label = document.createElementNS(SVG_NS, "text");
        label.setAttribute("x", String(layout[view.id].x));
        label.setAttribute("y", String(layout[view.id].y + 4));
        label.setAttribute("text-anchor", "middle");
        label.setAttribute("font-size", "11");
        label.textContent = view.colorNumber === null
            ? String(view.id)
            : `${view.id}:${view.colorNumber}`;
        g.appendChild(label);
        if (view.blocked) {
            const mark = document.createElementNS(SVG_NS, "text");
            mark.setAttribute("x", String(layout[view.id].x));
            mark.setAttribute("y", String(layout[view.id].y - 20));
            mark.setAttribute("text-anchor", "middle");
            mark.setAttribute("class", "blocked-mark");
            mark.setAttribute("fill", "#c0392b");
            mark.textContent = "BLOCKED";
            g.appendChild(mark);
        }
        g.addEventListener("click", () => handlers.onVertex(view.id));
        svg.appendChild(g);
    }
    container.appendChild(svg);
}

export function renderSwatches(
    container: HTMLElement, snap: Snapshot, onColor: (c: number) => void,
): void {
    container.textContent = "";
    for (const view of swatchViews(snap)) {
        const button = document.createElement("button");
        button.setAttribute("data-color", String(view.color));
        button.style.background = view.fill;
        button.textContent = String(view.color); // numbers always shown
        button.disabled = !view.clickable;
        button.addEventListener("click", () => onColor(view.color));
        container.appendChild(button);
    }
}
