"""Escher walls: brick-wall cubic graphs with k crossing negative edges.

A wall is a stack of rows.  A row of length L is a ladder whose two paths
have ``2L + 1`` vertices, joined by verticals at every odd position; its
``L`` hexagons are the bricks.  Consecutive rows share a path, offset by one
position so that verticals from above and below alternate along it.  Rows
shrink by one brick per level away from the middle, and each outer row
starts at the second vertex of the row it is stuck to.

Terminals ``x_i`` are the first vertices of the paths read top to bottom,
``y_i`` the last vertices read bottom to top; the negative edges are
``x_i y_i``.  Divalent vertices left over (outer paths, trimmed verticals,
and the extra terminal pair of odd walls) are suppressed, so the result is
cubic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..core import Edge, Sign, SignedGraph, canonical_sorted
from ..exceptions import InternalInconsistencyError, PreconditionError


@dataclass(frozen=True)
class WallCoordinates:
    """Where every surviving vertex sits in the wall drawing.

    ``labels`` maps a vertex to ``(row, path, position)`` where ``row`` is
    the row label (``T<i>`` above the middle, ``M<i>`` the middle row,
    ``B<i>`` below), ``path`` is ``"P"`` (upper) or ``"Q"`` (lower) and
    ``position`` is 1-based within that row's path.  ``boundary`` is the
    outer face as a cyclic vertex sequence; ``x``/``y`` are the terminals.
    """

    labels: dict
    boundary: tuple
    x: tuple
    y: tuple
    rows: tuple = field(default=())


@dataclass
class _Row:
    label: str
    index: int
    length: int
    start: int = 0
    kept: tuple = ()

    def positions(self):
        return range(self.start, self.start + 2 * self.length + 1)

    def vertical_positions(self):
        return [self.start + 2 * m for m in range(self.length + 1)]


def _stack(middle: list, above: list, below: list) -> list:
    """Order rows top to bottom and fix their start offsets.

    ``middle`` holds the one or two central rows (top to bottom); ``above``
    and ``below`` list the outer rows from the centre outwards.
    """
    for r in middle:
        r.start = 0
    for r_prev, r in zip(middle, middle[1:]):
        r.start = r_prev.start + 1
    prev = middle[0]
    for r in above:
        r.start = prev.start + 1
        prev = r
    prev = middle[-1]
    for r in below:
        r.start = prev.start + 1
        prev = r
    return list(reversed(above)) + list(middle) + list(below)


def _trim(rows: list, limit, keep):
    for r in rows:
        verts = r.vertical_positions()
        if len(verts) > limit(r.index):
            h = keep(r.index)
            verts = verts[:h] + verts[-h:]
        r.kept = tuple(verts)


class _WallBuilder:
    def __init__(self, rows: list):
        self.rows = rows
        self.n_paths = len(rows) + 1
        self.name = {}
        self.label = {}
        self.path_range = []
        for p in range(self.n_paths):
            spans = []
            if p > 0:
                spans.append(rows[p - 1])
            if p < len(rows):
                spans.append(rows[p])
            lo = min(r.start for r in spans)
            hi = max(r.start + 2 * r.length for r in spans)
            self.path_range.append((lo, hi))
            # prefer the lower row's P naming when it covers the whole path
            owner, side = None, None
            if p < len(rows) and rows[p].start == lo and rows[p].start + 2 * rows[p].length == hi:
                owner, side = rows[p], "P"
            elif p > 0 and rows[p - 1].start == lo and rows[p - 1].start + 2 * rows[p - 1].length == hi:
                owner, side = rows[p - 1], "Q"
            else:  # pragma: no cover - rows always nest
                raise InternalInconsistencyError(f"path {p} is not covered by a single row")
            for x in range(lo, hi + 1):
                n = x - owner.start + 1
                vname = f"{owner.label}{side}{n}"
                self.name[(p, x)] = vname
                self.label[vname] = (owner.label, side, n)

    def skeleton(self):
        """Unsigned edge list ``(u, v)`` of the wall before terminals are joined."""
        edges = []
        for p, (lo, hi) in enumerate(self.path_range):
            for x in range(lo, hi):
                edges.append((self.name[(p, x)], self.name[(p, x + 1)]))
        for r_idx, r in enumerate(self.rows):
            for x in r.kept:
                edges.append((self.name[(r_idx, x)], self.name[(r_idx + 1, x)]))
        return edges

    def terminals(self):
        firsts = [self.name[(p, lo)] for p, (lo, hi) in enumerate(self.path_range)]
        lasts = [self.name[(p, hi)] for p, (lo, hi) in enumerate(self.path_range)]
        return firsts, list(reversed(lasts))

    def boundary(self):
        seq = []
        top = 0
        bottom = self.n_paths - 1
        # left side: down the staircase through each row's first vertical
        for p in range(self.n_paths):
            lo, _ = self.path_range[p]
            enter = self.rows[p - 1].kept[0] if p > 0 else lo
            leave = self.rows[p].kept[0] if p < len(self.rows) else None
            if p == bottom:
                seq.extend(self.name[(p, x)] for x in range(enter, lo - 1, -1))
                break
            step = 1 if leave >= enter else -1
            lo_x = min(enter, leave, lo)
            if lo_x < min(enter, leave):
                seq.extend(self.name[(p, x)] for x in range(enter, lo_x - 1, -1))
                seq.extend(self.name[(p, x)] for x in range(lo_x + 1, leave + 1))
            else:
                seq.extend(self.name[(p, x)] for x in range(enter, leave + step, step))
        # bottom path left to right
        lo, hi = self.path_range[bottom]
        seq.extend(self.name[(bottom, x)] for x in range(lo + 1, hi + 1))
        # right side: up the staircase through each row's last vertical
        for p in range(bottom - 1, -1, -1):
            lo, hi = self.path_range[p]
            enter = self.rows[p].kept[-1]
            leave = self.rows[p - 1].kept[-1] if p > 0 else hi
            if p == top:
                seq.extend(self.name[(p, x)] for x in range(enter, hi + 1))
                seq.extend(self.name[(p, x)] for x in range(hi - 1, lo, -1))
                break
            hi_x = max(enter, leave, hi)
            if hi_x > max(enter, leave):
                seq.extend(self.name[(p, x)] for x in range(enter, hi_x + 1))
                seq.extend(self.name[(p, x)] for x in range(hi_x - 1, leave - 1, -1))
            else:
                step = 1 if leave >= enter else -1
                seq.extend(self.name[(p, x)] for x in range(enter, leave + step, step))
        out = []
        for v in seq:
            if not out or out[-1] != v:
                out.append(v)
        if len(out) > 1 and out[0] == out[-1]:
            out.pop()
        return out


def _suppress_divalent(G: SignedGraph) -> SignedGraph:
    """Suppress every divalent vertex with two distinct neighbours, in canonical order."""
    from ..structure.subdivision import suppress_vertex

    sig = G.signature
    for v in G.vertices:
        if G.degree(v) == 2 and len(G.neighbors(v)) == 2:
            G, sig = suppress_vertex(G, sig, v)
    return G


def _finish(builder: _WallBuilder, k: int, drop_last_pair: bool, kind: str):
    firsts, lasts = builder.terminals()
    xs, ys = firsts[:k], lasts[:k]
    vertices = canonical_sorted(builder.label)
    edges = [(u, v, Sign.POSITIVE) for u, v in builder.skeleton()]
    edges += [(x, y, Sign.NEGATIVE) for x, y in zip(xs, ys)]
    if drop_last_pair:
        extra = {firsts[k], lasts[k]}
        deg = Counter()
        for u, v, _ in edges:
            deg[u] += 1
            deg[v] += 1
        for v in extra:
            if deg[v] != 2:
                raise InternalInconsistencyError(f"{kind}: terminal {v} to suppress has degree {deg[v]}")
    raw = SignedGraph(vertices, [Edge(f"w{i}", u, v, sg) for i, (u, v, sg) in enumerate(edges)])
    raw = _suppress_divalent(raw)
    G = _name_edges(raw.vertices, [(e.u, e.v, e.sign) for e in raw.edges], xs, ys)
    if not G.is_cubic():
        bad = {v: G.degree(v) for v in G.vertices if G.degree(v) != 3}
        raise InternalInconsistencyError(f"{kind}({k}) is not cubic: {bad}")
    if len(G.signature) != k:
        raise InternalInconsistencyError(f"{kind}({k}) has {len(G.signature)} negative edges")
    survivors = set(G.vertices)
    coords = WallCoordinates(
        labels={v: builder.label[v] for v in G.vertices},
        boundary=tuple(v for v in builder.boundary() if v in survivors),
        x=tuple(xs),
        y=tuple(ys),
        rows=tuple((r.label, r.length, r.start, len(r.kept)) for r in builder.rows),
    )
    return G, G.signature, coords


def _name_edges(vertices, edges, xs, ys) -> SignedGraph:
    sigma_names = {frozenset((x, y)): f"s{i + 1}" for i, (x, y) in enumerate(zip(xs, ys))}
    used = Counter()
    recs = []
    for u, v, s in edges:
        a, b = canonical_sorted((u, v))
        if s is Sign.NEGATIVE and frozenset((u, v)) in sigma_names and used[("s", a, b)] == 0:
            eid = sigma_names[frozenset((u, v))]
            used[("s", a, b)] += 1
        else:
            base = f"{a}--{b}"
            used[base] += 1
            eid = base if used[base] == 1 else f"{base}.{used[base]}"
        recs.append(Edge(eid, a, b, s))
    return SignedGraph(vertices, recs)


def generate_even_wall(k: int):
    """Escher wall ``E_k`` for even ``k >= 4``: returns ``(G, Σ, coordinates)``."""
    if k < 4 or k % 2:
        raise PreconditionError("even walls need an even k >= 4")
    t = k // 2
    middle = [_Row(f"M{t}", t, k - 1)]
    above = [_Row(f"T{t - j}", t - j, k - j - 1) for j in range(1, t)]
    below = [_Row(f"B{t - j}", t - j, k - j - 1) for j in range(1, t)]
    rows = _stack(middle, above, below)
    _trim(rows, lambda i: 4 * i, lambda i: 2 * i)
    return _finish(_WallBuilder(rows), k, drop_last_pair=False, kind="even wall")


def generate_odd_wall(k: int):
    """Escher wall ``E_k`` for odd ``k >= 3``: returns ``(G, Σ, coordinates)``."""
    if k < 3 or k % 2 == 0:
        raise PreconditionError("odd walls need an odd k >= 3")
    t = (k - 1) // 2
    middle = [_Row(f"M{t + 1}", t + 1, 2 * t)]
    above = [_Row(f"T{t + 1 - j}", t + 1 - j, 2 * t - j) for j in range(1, t + 1)]
    below = [_Row(f"B{t + 1 - j}", t + 1 - j, 2 * t - j) for j in range(1, t + 1)]
    rows = _stack(middle, above, below)
    _trim(rows, lambda i: 4 * i - 2, lambda i: 2 * i - 1)
    return _finish(_WallBuilder(rows), k, drop_last_pair=True, kind="odd wall")


def generate_escher_wall(k: int):
    if k < 3:
        raise PreconditionError("Escher walls are defined for k >= 3")
    return generate_even_wall(k) if k % 2 == 0 else generate_odd_wall(k)


def generate_wall_prime(k: int):
    """The second odd family ``E'_k`` (``k = 2t + 1 >= 3``)."""
    if k < 3 or k % 2 == 0:
        raise PreconditionError("E'_k needs an odd k >= 3")
    t = (k - 1) // 2
    middle = [_Row(f"T{t}", t, 2 * t), _Row(f"B{t}", t, 2 * t - 1)]
    above = [_Row(f"T{t - j}", t - j, 2 * t - j) for j in range(1, t)]
    below = [_Row(f"B{t - j}", t - j, 2 * t - 1 - j) for j in range(1, t)]
    rows = _stack(middle, above, below)
    # without trimming E'_7 has a non-essential vertical; the even-wall rule fixes it
    _trim(rows, lambda i: 4 * i, lambda i: 2 * i)
    return _finish(_WallBuilder(rows), k, drop_last_pair=False, kind="wall prime")
