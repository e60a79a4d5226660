/** New-game form wiring for the standalone page. */

import { PlayClient } from "./api.js";
import { GameController, GameElements } from "./game.js";

const PRESETS = [
    "P3", "P4", "C4", "C5", "C6", "K4", "paw",
    "P3[K2]", "C5[P2]", "K[C5](1,2,1,2,1)", "K[P3](2)",
];

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
}

export function setUp(): GameController {
    const picker = el<HTMLSelectElement>("graph-picker");
    for (const preset of PRESETS) {
        const option = document.createElement("option");
        option.value = preset;
        option.textContent = preset;
        picker.appendChild(option);
    }
    const elements: GameElements = {
        board: el("board"),
        swatches: el("swatches"),
        banner: el("banner"),
        transcript: el("transcript"),
        error: el("error"),
    };
    const controller = new GameController(new PlayClient(""), elements);
    el<HTMLButtonElement>("start").addEventListener("click", () => {
        const pasted = el<HTMLInputElement>("graph-paste").value.trim();
        const graph = pasted || picker.value;
        const k = Number(el<HTMLInputElement>("palette").value);
        const side = el<HTMLSelectElement>("side").value as "ann" | "ben" | "both";
        const engine = el<HTMLSelectElement>("engine").value;
        void controller
            .newGame({ graph, k, human_side: side, engine })
            .catch(() => undefined); // error already shown inline
    });
    return controller;
}

if (typeof document !== "undefined" && document.getElementById("start")) {
    setUp();
}
