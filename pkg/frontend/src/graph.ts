// Corpus network rendered as inline SVG: typed circular nodes laid out on a
// ring per thread column, reference edges grey, superseding edges red.

import type { GraphEdge, GraphNode } from "./api.js";
import { codeOf } from "./api.js";

export const NODE_COLORS: Record<string, string> = {
  F: "#1f77b4",
  S: "#2ca02c",
  U: "#17becf",
  R: "#ff7f0e",
  A: "#9467bd",
  C: "#8c564b",
  D: "#d62728",
};

export const LEGEND: [string, string][] = [
  ["F", "formalization"],
  ["S", "submission"],
  ["U", "updated formalization"],
  ["R", "review"],
  ["A", "response"],
  ["C", "class definition"],
  ["D", "decision"],
];

export interface PlacedNode extends GraphNode {
  x: number;
  y: number;
}

/** Deterministic circular layout; stable for identical inputs. */
export function layoutGraph(
  nodes: GraphNode[],
  width = 800,
  height = 600,
): PlacedNode[] {
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) / 2 - 40;
  const count = Math.max(nodes.length, 1);
  return nodes.map((node, index) => {
    const angle = (2 * Math.PI * index) / count - Math.PI / 2;
    return {
      ...node,
      x: Math.round(cx + radius * Math.cos(angle)),
      y: Math.round(cy + radius * Math.sin(angle)),
    };
  });
}

export function renderGraphSvg(
  nodes: GraphNode[],
  edges: GraphEdge[],
  width = 800,
  height = 600,
): string {
  const placed = layoutGraph(nodes, width, height);
  const position = new Map(placed.map((n) => [n.id, n]));
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `width="${width}" height="${height}">`,
  ];
  for (const edge of edges) {
    const from = position.get(edge.from);
    const to = position.get(edge.to);
    if (!from || !to) continue;
    const stroke = edge.kind === "supersedes" ? "#d62728" : "#bbbbbb";
    const dash = edge.kind === "supersedes" ? "" : ' stroke-dasharray="4 3"';
    parts.push(
      `<line class="edge edge-${edge.kind}" x1="${from.x}" y1="${from.y}" ` +
        `x2="${to.x}" y2="${to.y}" stroke="${stroke}" stroke-width="1.5"${dash}/>`,
    );
  }
  for (const node of placed) {
    const color = NODE_COLORS[node.type] ?? "#999999";
    parts.push(
      `<g class="node node-${node.type}" data-id="${node.id}">` +
        `<circle cx="${node.x}" cy="${node.y}" r="14" fill="${color}"/>` +
        `<text x="${node.x}" y="${node.y}" dy="5" text-anchor="middle" ` +
        `fill="#ffffff" font-size="13">${node.type}</text>` +
        `<title>${node.label}: ${node.id}</title></g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderLegend(): HTMLElement {
  const list = document.createElement("ul");
  list.className = "legend";
  for (const [letter, meaning] of LEGEND) {
    const item = document.createElement("li");
    const dot = document.createElement("span");
    dot.className = "legend-dot";
    dot.style.background = NODE_COLORS[letter];
    dot.textContent = letter;
    item.append(dot, document.createTextNode(` ${meaning}`));
    list.append(item);
  }
  const edgeNote = document.createElement("li");
  edgeNote.textContent = "red solid edges: superseding; grey dashed: references";
  list.append(edgeNote);
  return list;
}

export function mountGraph(
  root: HTMLElement,
  nodes: GraphNode[],
  edges: GraphEdge[],
): void {
  const heading = document.createElement("h2");
  heading.textContent = `Corpus graph (${nodes.length} publications)`;
  const holder = document.createElement("div");
  holder.className = "graph-holder";
  holder.innerHTML = renderGraphSvg(nodes, edges);
  holder.querySelectorAll<SVGGElement>("g.node").forEach((g) => {
    g.style.cursor = "pointer";
    g.addEventListener("click", () => {
      const id = g.dataset.id;
      if (id) window.open(`/view/${codeOf(id)}`, "_blank");
    });
  });
  root.append(heading, renderLegend(), holder);
}
