"""DOT export of embedded graphs and SVG schematics of transition graphs."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .embedding import EmbeddedGraph, Multigraph
from .transition import TransitionGraph


def to_dot(graph: Multigraph | EmbeddedGraph, name: str = "G") -> str:
    """Undirected DOT view; white vertices w<i>, black vertices b<j>."""
    g = graph.graph if isinstance(graph, EmbeddedGraph) else graph
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for i in range(g.white_count):
        lines.append(f'  w{i} [style=filled, fillcolor=white, label="w{i}"];')
    for j in range(g.black_count):
        lines.append(f'  b{j} [style=filled, fillcolor=black, fontcolor=white, label="b{j}"];')
    for e, t, h in g.edges:
        lines.append(f'  w{t} -- b{h - g.white_count} [label="e{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def transition_svg(tg: TransitionGraph, size: int = 480) -> str:
    """Vertices on a circle; solid arcs bend outward, dotted arcs bend inward."""
    n = tg.n
    c = size / 2
    r = size * 0.36
    pos = [(c + r * math.sin(2 * math.pi * i / n), c - r * math.cos(2 * math.pi * i / n)) for i in range(n)]

    def arc(u: int, v: int, bend: float, style: str) -> str:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        dx, dy = mx - c, my - c
        d = math.hypot(dx, dy) or 1.0
        k = bend * r * 0.35
        qx, qy = mx + dx / d * k, my + dy / d * k
        return (
            f'<path d="M {x1:.1f} {y1:.1f} Q {qx:.1f} {qy:.1f} {x2:.1f} {y2:.1f}" '
            f'fill="none" stroke="black" {style} marker-end="url(#arrow)"/>'
        )

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"18\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>",
        f"<title>{escape(f'transition graph n={n}')}</title>",
    ]
    for cycle, bend, style in ((tg.solid, 1.0, 'stroke-width="1.5"'), (tg.dotted, -1.0, 'stroke-dasharray="4 3"')):
        for i, u in enumerate(cycle):
            parts.append(arc(u, cycle[(i + 1) % n], bend, style))
    for i, (x, y) in enumerate(pos):
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="11" fill="white" stroke="black"/>')
        parts.append(f'<text x="{x:.1f}" y="{y + 4:.1f}" text-anchor="middle" font-size="11">{i}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


__all__ = ["to_dot", "transition_svg"]
