"""Trellis containers, the tailbiting code-trellis builder, and exports.

States are the bit tuples themselves (encoder registers row-major,
syndrome-former cells in block order), so states match across modules
without translation.  A tailbiting subtrellis is identified by its
anchor: the state occupied at both cut 0 and cut N.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .gf2 import format_bits, format_state
from .state_machines import enc_state_space, encoder_step

DEFAULT_MAX_PATHS = 2**20


@dataclass(frozen=True)
class Edge:
    src: tuple
    label: tuple
    dst: tuple


@dataclass(frozen=True)
class Trellis:
    kind: str  # "code" | "error" | "backward-error"
    n_sections: int
    states_per_cut: tuple
    sections: tuple

    @property
    def anchors(self):
        """States present at both cut 0 and cut N, in tuple order."""
        last = set(self.states_per_cut[-1])
        return [s for s in self.states_per_cut[0] if s in last]


def _make_trellis(kind, states, section_edges):
    """Assemble a time-invariant trellis from one section's edge list."""
    n_sections = len(section_edges)
    if n_sections < 1:
        raise ValueError("a trellis needs at least one section")
    cuts = tuple(tuple(states) for _ in range(n_sections + 1))
    sections = tuple(tuple(sorted(es, key=lambda e: (e.src, e.label, e.dst))) for es in section_edges)
    return Trellis(kind=kind, n_sections=n_sections, states_per_cut=cuts, sections=sections)


def build_tailbiting_code_trellis(G, N):
    """N identical encoder sections over all encoder states."""
    if N < 1:
        raise ValueError("need N >= 1 sections")
    states = enc_state_space(G)
    k = G.rows
    edges = []
    for beta in states:
        for u in _all_symbols(k):
            nxt, y = encoder_step(G, beta, u)
            edges.append(Edge(src=beta, label=y, dst=nxt))
    return _make_trellis("code", states, [edges] * N)


def _all_symbols(width):
    return [tuple((v >> (width - 1 - i)) & 1 for i in range(width)) for v in range(2**width)]


def _adjacency(section):
    adj = {}
    for e in section:
        adj.setdefault(e.src, []).append(e)
    return adj


def count_paths(T, anchor):
    """Number of tailbiting paths through the subtrellis at ``anchor``."""
    _require_anchor(T, anchor)
    counts = {anchor: 1}
    for section in T.sections:
        nxt = {}
        adj = _adjacency(section)
        for state, c in counts.items():
            for e in adj.get(state, ()):
                nxt[e.dst] = nxt.get(e.dst, 0) + c
        counts = nxt
    return counts.get(anchor, 0)


def _require_anchor(T, anchor):
    if anchor not in T.states_per_cut[0] or anchor not in T.states_per_cut[-1]:
        raise ValueError(f"state {format_state(anchor)} is not an anchor of this trellis")


def _reach_back(T, anchor):
    """Per-cut sets of states from which the anchor is reachable at cut N."""
    back = [set() for _ in range(T.n_sections + 1)]
    back[-1] = {anchor}
    for t in range(T.n_sections - 1, -1, -1):
        ok = back[t + 1]
        back[t] = {e.src for e in T.sections[t] if e.dst in ok}
    return back


def enumerate_paths(T, anchor, max_paths=DEFAULT_MAX_PATHS):
    """All tailbiting paths of one subtrellis, ordered by label sequence.

    Each path is a (labels, states) pair: N edge labels and N+1 states.
    Raises if the subtrellis holds more than ``max_paths`` paths.
    """
    total = count_paths(T, anchor)
    if total > max_paths:
        raise ValueError(f"subtrellis has {total} paths, exceeding the bound {max_paths}")
    back = _reach_back(T, anchor)
    adjs = [_adjacency(s) for s in T.sections]
    paths = []
    stack = [((), (anchor,))]
    while stack:
        labels, states = stack.pop()
        t = len(labels)
        if t == T.n_sections:
            paths.append((labels, states))
            continue
        for e in adjs[t].get(states[-1], ()):
            if e.dst in back[t + 1]:
                stack.append((labels + (e.label,), states + (e.dst,)))
    paths.sort(key=lambda p: (p[0], p[1]))
    return paths


def _subtrellis_edges(T, anchor):
    """Edges lying on at least one tailbiting path of the subtrellis."""
    back = _reach_back(T, anchor)
    fwd = [set() for _ in range(T.n_sections + 1)]
    fwd[0] = {anchor}
    for t in range(T.n_sections):
        fwd[t + 1] = {e.dst for e in T.sections[t] if e.src in fwd[t]}
    chosen = set()
    for t, section in enumerate(T.sections):
        for e in section:
            if e.src in fwd[t] and e.dst in back[t + 1]:
                chosen.add((t, e))
    return chosen


def to_dot(T, highlight=None):
    """GraphViz rendering: cuts as ranked columns, labels as bit strings."""
    bold = _subtrellis_edges(T, highlight) if highlight is not None else set()
    lines = [f'digraph "{T.kind}-trellis" {{', "\trankdir=LR;", '\tnode [shape=ellipse fontsize=10];']
    for t, states in enumerate(T.states_per_cut):
        nodes = " ".join(f'"{t}|{format_state(s)}" [label="{format_state(s)}"];' for s in states)
        lines.append("\t{ rank=same; %s }" % nodes)
    for t, section in enumerate(T.sections):
        for e in section:
            style = " style=bold penwidth=2" if (t, e) in bold else ""
            lines.append(
                f'\t"{t}|{format_state(e.src)}" -> "{t + 1}|{format_state(e.dst)}"'
                f' [label="{format_bits(e.label)}"{style}];'
            )
    lines.append("}")
    return "\n".join(lines)


def to_json(T):
    """JSON rendering: {"cuts": [[state strings]], "sections": [[edges]]}."""
    obj = {
        "cuts": [[format_state(s) for s in states] for states in T.states_per_cut],
        "sections": [
            [
                {"from": format_state(e.src), "label": format_bits(e.label), "to": format_state(e.dst)}
                for e in section
            ]
            for section in T.sections
        ],
    }
    return json.dumps(obj, indent=2)
