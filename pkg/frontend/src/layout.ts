// Vertex positions: integer grid coordinates are used directly when the
// graph carries them; everything else gets a deterministic seeded
// force-directed layout so the same graph always renders the same way.

import type { GraphPayload } from "./types.js";

export interface Point {
    x: number;
    y: number;
}

function mulberry32(seed: number): () => number {
    let a = seed >>> 0;
    return () => {
        a = (a + 0x6d2b79f5) >>> 0;
        let t = a;
        t = Math.imul(t ^ (t >>> 15), t | 1);
        t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
        return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
    };
}

export function layoutPositions(graph: GraphPayload, size = 420,
                                margin = 40): Point[] {
    const n = graph.vertices.length;
    if (graph.coords && graph.coords.length === n) {
        return fitToBox(graph.coords.map(([x, y]) => ({ x, y: -y })),
                        size, margin);
    }
    const rand = mulberry32(0x5eed + n * 7919);
    const pts: Point[] = [];
    for (let i = 0; i < n; i++) {
        const angle = (2 * Math.PI * i) / n;
        pts.push({
            x: Math.cos(angle) + 0.05 * (rand() - 0.5),
            y: Math.sin(angle) + 0.05 * (rand() - 0.5),
        });
    }
    const adj: number[][] = graph.vertices.map(() => []);
    for (const [u, v] of graph.edges) {
        adj[u].push(v);
        adj[v].push(u);
    }
    const ideal = Math.sqrt(4.0 / Math.max(n, 1));
    for (let iter = 0; iter < 300; iter++) {
        const temp = 0.08 * (1 - iter / 300);
        const disp: Point[] = pts.map(() => ({ x: 0, y: 0 }));
        for (let i = 0; i < n; i++) {
            for (let j = i + 1; j < n; j++) {
                const dx = pts[i].x - pts[j].x;
                const dy = pts[i].y - pts[j].y;
                const d2 = dx * dx + dy * dy + 1e-9;
                const rep = (ideal * ideal) / d2;
                disp[i].x += dx * rep;
                disp[i].y += dy * rep;
                disp[j].x -= dx * rep;
                disp[j].y -= dy * rep;
            }
        }
        for (const [u, v] of graph.edges) {
            const dx = pts[u].x - pts[v].x;
            const dy = pts[u].y - pts[v].y;
            const d = Math.sqrt(dx * dx + dy * dy) + 1e-9;
            const att = d / ideal;
            disp[u].x -= (dx / d) * att * 0.05;
            disp[u].y -= (dy / d) * att * 0.05;
            disp[v].x += (dx / d) * att * 0.05;
            disp[v].y += (dy / d) * att * 0.05;
        }
        for (let i = 0; i < n; i++) {
            const d = Math.sqrt(disp[i].x ** 2 + disp[i].y ** 2) + 1e-9;
            const step = Math.min(d, temp);
            pts[i].x += (disp[i].x / d) * step;
            pts[i].y += (disp[i].y / d) * step;
        }
    }
    return fitToBox(pts, size, margin);
}

function fitToBox(pts: Point[], size: number, margin: number): Point[] {
    const xs = pts.map((p) => p.x);
    const ys = pts.map((p) => p.y);
    const minX = Math.min(...xs);
    const maxX = Math.max(...xs);
    const minY = Math.min(...ys);
    const maxY = Math.max(...ys);
    const span = Math.max(maxX - minX, maxY - minY, 1e-9);
    const scale = (size - 2 * margin) / span;
    return pts.map((p) => ({
        x: margin + (p.x - minX) * scale
            + (size - 2 * margin - (maxX - minX) * scale) / 2,
        y: margin + (p.y - minY) * scale
            + (size - 2 * margin - (maxY - minY) * scale) / 2,
    }));
}
