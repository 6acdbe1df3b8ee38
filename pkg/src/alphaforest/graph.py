"""Simple undirected graphs stored as neighbour bit rows.

A :class:`Graph` holds ``n <= 64`` vertices labelled ``0..n-1``; ``adj[v]`` is an
int whose bit ``u`` is set iff ``uv`` is an edge. Graphs are immutable, so the
combinators below always return new objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapacityError, Graph6Error, ParameterError

MAX_VERTICES = 64
DEFAULT_CANONICAL_CAP = 10


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ParameterError("adjacency row count differs from n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ParameterError(f"vertex {v} has a neighbour index >= n")
            if row >> v & 1:
                raise ParameterError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ParameterError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # internal fast path for rows already known to satisfy the invariants
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graph order {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        n = a.shape[0]
        return cls.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Return the graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        pos = {v: i for i, v in enumerate(order)}
        if sorted(pos) != list(range(self.n)):
            raise ParameterError("order is not a permutation of the vertices")
        return Graph.from_edges(self.n, [(pos[u], pos[v]) for u, v in self.edges()])

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + [(u, v)])

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ParameterError(f"({u}, {v}) is not an edge")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(
            len(vs), [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        )

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph([u for u in range(self.n) if u != v])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def make_complete(n: int) -> Graph:
    if n < 0:
        raise ParameterError("n must be non-negative")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def make_path(k: int) -> Graph:
    if k < 1:
        raise ParameterError("a path needs at least one vertex")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def make_matching_graph(n: int) -> Graph:
    """``floor(n/2)`` disjoint edges plus an isolated vertex when ``n`` is odd."""
    if n < 0:
        raise ParameterError("n must be non-negative")
    return Graph.from_edges(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])


def make_star(leaves: int) -> Graph:
    return join(make_complete(1), empty_graph(leaves))


def union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise CapacityError(f"union would have {g.n + h.n} > {MAX_VERTICES} vertices")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise CapacityError(f"join would have {g.n + h.n} > {MAX_VERTICES} vertices")
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = tuple(row | h_mask for row in g.adj) + tuple((row << g.n) | g_mask for row in h.adj)
    return Graph(g.n + h.n, rows)


def disjoint_copies(k: int, g: Graph) -> Graph:
    out = empty_graph(0)
    for _ in range(k):
        out = union(out, g)
    return out


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(~row & full & ~(1 << v) for v, row in enumerate(g.adj)))


# graph6 ---------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    n = g.n
    out = [_graph6_header(n)]
    bits = [g.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    start = len(_G6_HEADER) if s.startswith(_G6_HEADER) else 0
    data = s[start:]
    if not data:
        raise Graph6Error("empty graph6 record", start)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", start + i)
    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    else:
        if len(data) >= 2 and data[1] == "~":
            raise CapacityError("graph6 8-byte order header exceeds the 64-vertex cap")
        if len(data) < 4:
            raise Graph6Error("truncated order header", start + len(data))
        n = 0
        for ch in data[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 order {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes, found {len(body)}", start + len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after graph6 record", start + pos + nbytes)
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits", start + len(data) - 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# canonical form -------------------------------------------------------------

def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until the partition is equitable.

    Cell order depends only on structure, so the result is isomorphism-invariant.
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                key = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not changed:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    # same bit order as graph6, first bit most significant
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for u in reps:
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                break
        else:
            reps.append(v)
    return reps


def _canonical(g: Graph, cap: int) -> tuple[int, list[int]]:
    """Minimum graph6 adjacency code over the admissible vertex orders.

    Admissible orders are those compatible with the iterated degree partition;
    ties inside a cell are broken by individualising one vertex and refining
    again. Swapping two twins is an automorphism, so only one twin per class
    is individualised.
    """
    if g.n > cap:
        raise CapacityError(f"canonical form capped at {cap} vertices, got {g.n}")
    adj = g.adj
    best_code = -1
    best_order: list[int] = []
    stack = [[list(range(g.n))]] if g.n else []
    while stack:
        cells = _refine(adj, stack.pop())
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            continue
        cell = cells[target]
        for v in _twin_representatives(adj, cell):
            rest = [w for w in cell if w != v]
            stack.append(cells[:target] + [[v], rest] + cells[target + 1:])
    return max(best_code, 0), best_order


def _graph6_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def _graph6_from_code(n: int, code: int) -> str:
    nbits = n * (n - 1) // 2
    pad = -nbits % 6
    code <<= pad
    nchars = (nbits + pad) // 6
    chars = [chr(((code >> (6 * (nchars - 1 - i))) & 63) + 63) for i in range(nchars)]
    return _graph6_header(n) + "".join(chars)


def canonical_order(g: Graph, cap: int = DEFAULT_CANONICAL_CAP) -> list[int]:
    """Vertex order giving the canonical labelling (see :func:`canonical_form`)."""
    return _canonical(g, cap)[1]


def canonical_form(g: Graph, cap: int = DEFAULT_CANONICAL_CAP) -> bytes:
    """graph6 bytes of the canonical relabelling; equal iff the graphs are isomorphic.

    The canonical labelling minimises the graph6 adjacency code over every vertex
    order compatible with the iterated degree partition.
    """
    return _graph6_from_code(g.n, _canonical(g, cap)[0]).encode("ascii")


def canonical_graph(g: Graph, cap: int = DEFAULT_CANONICAL_CAP) -> Graph:
    return g.relabel(canonical_order(g, cap))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (``2**C(n,2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
