"""Planar-diagram codes, oriented link diagrams, Wirtinger arcs and component walks.

A crossing ``X(a, b, c, d)`` lists its four edge labels counterclockwise,
starting from the incoming under-strand.  The under-strand therefore runs
``a -> c``; the over-strand joins ``b`` and ``d`` and its direction comes from
the orientation of the component it belongs to.  A crossing is positive when
the over-strand runs ``d -> b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

_TOKEN = re.compile(r"X\s*\(([^()]*)\)")


class PDError(ValueError):
    """Malformed or inconsistent planar-diagram code."""


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...]

    def __str__(self) -> str:
        return " ".join("X({},{},{},{})".format(*x) for x in self.crossings)

    def labels(self) -> set[int]:
        return {a for x in self.crossings for a in x}


def parse_pd(text: str) -> PDCode:
    """Parse whitespace-separated ``X(a,b,c,d)`` tokens.

    A JSON-ish list of 4-element lists is accepted as well.
    """
    stripped = text.strip()
    if not stripped:
        raise PDError("empty PD code")
    if stripped.startswith("["):
        import json

        try:
            raw = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise PDError(f"malformed PD list: {exc}") from None
        tuples = [tuple(x) if isinstance(x, list) else x for x in raw]
    else:
        pos = 0
        tuples = []
        for match in _TOKEN.finditer(stripped):
            gap = stripped[pos : match.start()].strip()
            if gap:
                raise PDError(f"unexpected text {gap!r}")
            pos = match.end()
            parts = [p.strip() for p in match.group(1).split(",")]
            tuples.append(tuple(parts))
        tail = stripped[pos:].strip()
        if tail:
            raise PDError(f"unexpected text {tail!r}")
    return pd_from_tuples(tuples)


def pd_from_tuples(tuples) -> PDCode:
    crossings = []
    for t in tuples:
        if not isinstance(t, (tuple, list)) or len(t) != 4:
            raise PDError(f"crossing {t!r} must have exactly 4 labels")
        try:
            labels = tuple(int(x) for x in t)
        except (TypeError, ValueError):
            raise PDError(f"crossing {t!r} has a non-integer label") from None
        if any(a < 1 for a in labels):
            raise PDError(f"crossing {t!r} has a non-positive label")
        crossings.append(labels)
    if not crossings:
        raise PDError("empty PD code")
    counts: dict[int, int] = {}
    for x in crossings:
        for a in x:
            counts[a] = counts.get(a, 0) + 1
    bad = sorted(a for a, c in counts.items() if c != 2)
    if bad:
        raise PDError(f"label {bad[0]} appears {counts[bad[0]]} time(s), expected exactly 2")
    return PDCode(tuple(crossings))


@dataclass(frozen=True)
class Crossing:
    index: int
    over_arc: int
    under_in: int
    under_out: int
    sign: int
    over_component: int
    under_component: int


@dataclass(frozen=True)
class WalkStep:
    alpha: int
    beta: int
    epsilon: int
    crossing: int


@dataclass
class Diagram:
    pd: PDCode
    num_components: int
    # arc id -> component (1-based); arcs are numbered 0..len-1
    arc_component: list[int]
    arc_edges: list[tuple[int, ...]]
    crossings: list[Crossing]
    base_arcs: list[int]
    walks: list[list[WalkStep]]
    component_edges: list[list[int]] = field(default_factory=list)

    @property
    def q(self) -> int:
        return self.num_components

    @property
    def num_arcs(self) -> int:
        return len(self.arc_component)

    def walk(self, j: int) -> list[WalkStep]:
        return self.walks[j - 1]


@dataclass(frozen=True)
class _Passage:
    """One pass of a component through a crossing: in at ``pos_in``, out at ``pos_out``."""

    crossing: int
    pos_in: int
    edge_in: int
    edge_out: int

    @property
    def pos_out(self) -> int:
        return (self.pos_in + 2) % 4


def _trace(pd: PDCode, ends: dict[int, list[tuple[int, int]]], edge: int) -> list[_Passage]:
    """Follow a component from ``edge`` until it closes up."""
    passages = []
    ci, pos = ends[edge][1]
    start = (ci, pos)
    while True:
        out_pos = (pos + 2) % 4
        nxt = pd.crossings[ci][out_pos]
        passages.append(_Passage(ci, pos, pd.crossings[ci][pos], nxt))
        occ = ends[nxt]
        ci, pos = occ[1] if occ[0] == (ci, out_pos) else occ[0]
        if (ci, pos) == start:
            return passages


def _reverse(passages: list[_Passage]) -> list[_Passage]:
    out = [_Passage(p.crossing, p.pos_out, p.edge_out, p.edge_in) for p in reversed(passages)]
    return out


def _components(pd: PDCode) -> list[list[_Passage]]:
    """Oriented components as passage cycles, ordered by smallest label.

    The direction of a component is forced by its under-passages (which must
    all enter at position 0); a component that never passes under is oriented
    so that labels increase from its smallest label.
    """
    ends: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(pd.crossings):
        for pos, a in enumerate(x):
            ends.setdefault(a, []).append((ci, pos))
    seen: set[int] = set()
    comps = []
    for start in sorted(ends):
        if start in seen:
            continue
        cyc = _trace(pd, ends, start)
        seen.update(p.edge_in for p in cyc)
        unders = {p.pos_in for p in cyc if p.pos_in in (0, 2)}
        if unders == {2}:
            cyc = _reverse(cyc)
        elif unders == {0, 2}:
            bad = next(p for p in cyc if p.pos_in == 2)
            raise PDError(
                f"no consistent orientation: crossing {bad.crossing + 1} is entered at its outgoing under-strand"
            )
        elif not unders:
            lo = min(p.edge_in for p in cyc)
            succ = next(p.edge_out for p in cyc if p.edge_in == lo)
            pred = next(p.edge_in for p in cyc if p.edge_out == lo)
            if not (succ == lo + 1 or (pred != lo + 1 and succ < pred)):
                cyc = _reverse(cyc)
        # rotate so the first passage is the one leaving the smallest label
        lo = min(p.edge_in for p in cyc)
        i = next(k for k, p in enumerate(cyc) if p.edge_in == lo)
        comps.append(cyc[i:] + cyc[:i])
    comps.sort(key=lambda c: min(p.edge_in for p in c))
    return comps


def build(pd: PDCode) -> Diagram:
    comps = _components(pd)
    edge_comp = {p.edge_in: k + 1 for k, cyc in enumerate(comps) for p in cyc}

    # Wirtinger arcs: runs of edges between consecutive under-passages
    arc_of_edge: dict[int, int] = {}
    arc_edges: list[tuple[int, ...]] = []
    arc_component: list[int] = []
    arc_end: list[int | None] = []  # crossing where the arc passes under, in traversal order
    for k, cyc in enumerate(comps):
        n = len(cyc)
        under = [i for i, p in enumerate(cyc) if p.pos_in == 0]
        if not under:
            arc = tuple(p.edge_in for p in cyc)
            aid = len(arc_edges)
            arc_edges.append(arc)
            arc_component.append(k + 1)
            arc_end.append(None)
            for e in arc:
                arc_of_edge[e] = aid
            continue
        # the base arc holds the smallest label, which is cyc[0].edge_in
        runs = []
        for bi, i in enumerate(under):
            j = under[bi - 1]
            length = (i - j - 1) % n + 1
            runs.append(([cyc[(j + 1 + t) % n].edge_in for t in range(length)], cyc[i].crossing))
        # runs[0] ends at the first under-passage and therefore contains cyc[0]
        for run, ci in runs:
            aid = len(arc_edges)
            arc_edges.append(tuple(run))
            arc_component.append(k + 1)
            arc_end.append(ci)
            for e in run:
                arc_of_edge[e] = aid

    over_pass: dict[int, _Passage] = {}
    for cyc in comps:
        for p in cyc:
            if p.pos_in in (1, 3):
                over_pass[p.crossing] = p
    crossings = []
    for ci, (a, b, c, _d) in enumerate(pd.crossings):
        sign = 1 if over_pass[ci].pos_in == 3 else -1
        crossings.append(Crossing(ci, arc_of_edge[b], arc_of_edge[a], arc_of_edge[c], sign, edge_comp[b], edge_comp[a]))

    walks: list[list[WalkStep]] = []
    base_arcs: list[int] = []
    for k in range(len(comps)):
        arcs = [aid for aid, comp in enumerate(arc_component) if comp == k + 1]
        base_arcs.append(arcs[0])
        steps = []
        for aid in arcs:
            ci = arc_end[aid]
            if ci is None:
                break
            x = crossings[ci]
            steps.append(WalkStep(aid, x.over_arc, x.sign, ci))
        walks.append(steps)

    return Diagram(
        pd=pd,
        num_components=len(comps),
        arc_component=arc_component,
        arc_edges=arc_edges,
        crossings=crossings,
        base_arcs=base_arcs,
        walks=walks,
        component_edges=[[p.edge_in for p in cyc] for cyc in comps],
    )


def linking_matrix(d: Diagram) -> list[list[int]]:
    """Linking numbers off the diagonal, writhe of each component on it."""
    q = d.q
    twice = [[0] * q for _ in range(q)]
    for x in d.crossings:
        i, j = x.over_component - 1, x.under_component - 1
        if i == j:
            twice[i][i] += 2 * x.sign
        else:
            twice[i][j] += x.sign
            twice[j][i] += x.sign
    return [[v // 2 for v in row] for row in twice]


def mirror(pd: PDCode) -> PDCode:
    """Mirror image: every crossing switches, keeping the counterclockwise convention."""
    out = list(pd.crossings)
    for cyc in _components(pd):
        for p in cyc:
            if p.pos_in in (1, 3):
                x = pd.crossings[p.crossing]
                # the old over-strand becomes the under-strand, listed from its incoming edge
                out[p.crossing] = x[p.pos_in :] + x[: p.pos_in]
    return PDCode(tuple(out))
