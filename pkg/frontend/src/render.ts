// SVG board renderer. Pure drawing: everything it shows comes out of the
// view model, and clicks are forwarded untouched.

import type { BoardViewModel } from "./board.js";
import { layoutPositions, Point } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export class BoardRenderer {
    private positions: Point[] = [];
    private graphKey = "";

    constructor(private svg: SVGSVGElement,
                private onVertexClick: (vertex: number) => void) {}

    render(vm: BoardViewModel): void {
        const svg = this.svg;
        while (svg.firstChild) {
            svg.removeChild(svg.firstChild);
        }
        const session = vm.session;
        if (!session) {
            return;
        }
        const key = JSON.stringify(session.graph.edges)
            + JSON.stringify(session.graph.coords ?? null);
        if (key !== this.graphKey) {
            this.positions = layoutPositions(session.graph);
            this.graphKey = key;
        }
        const pos = this.positions;
        for (const [u, v] of session.graph.edges) {
            const line = document.createElementNS(SVG_NS, "line");
            line.setAttribute("x1", String(pos[u].x));
            line.setAttribute("y1", String(pos[u].y));
            line.setAttribute("x2", String(pos[v].x));
            line.setAttribute("y2", String(pos[v].y));
            line.setAttribute("class", "edge");
            svg.appendChild(line);
        }
        const bodyIndex = new Map(session.body.map((v, i) => [v, i]));
        const highlights = new Set(vm.highlights);
        for (const v of session.graph.vertices) {
            const g = document.createElementNS(SVG_NS, "g");
            const circle = document.createElementNS(SVG_NS, "circle");
            circle.setAttribute("cx", String(pos[v].x));
            circle.setAttribute("cy", String(pos[v].y));
            circle.setAttribute("r", "16");
            const classes = ["vertex"];
            if (bodyIndex.has(v)) {
                classes.push(bodyIndex.get(v) === 0 ? "head" : "body");
                if (v === session.body[session.body.length - 1]
                        && session.body.length > 1) {
                    classes.push("tail");
                }
            }
            if (session.apple === v) {
                classes.push("apple");
            }
            if (highlights.has(v)) {
                classes.push("clickable");
            }
            if (vm.hint && vm.hint.vertex === v) {
                classes.push("hinted");
            }
            circle.setAttribute("class", classes.join(" "));
            circle.addEventListener("click", () => this.onVertexClick(v));
            g.appendChild(circle);
            const label = document.createElementNS(SVG_NS, "text");
            label.setAttribute("x", String(pos[v].x));
            label.setAttribute("y", String(pos[v].y + 4));
            label.setAttribute("class", "vertex-label");
            label.textContent = String(v);
            g.appendChild(label);
            svg.appendChild(g);
        }
    }
}
