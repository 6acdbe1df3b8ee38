"""Streams of pairwise non-isomorphic graphs.

Small orders are generated natively by one-vertex augmentation with
canonical-form deduplication. Larger orders come from graph6 files (for example
the output of ``geng``).
"""

from __future__ import annotations

import io
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator, TextIO

from .errors import CapacityError, Graph6Error, ParameterError
from .graph import Graph, canonical_form, encode_graph6, parse_graph6

NATIVE_CAP = 8
FILTERED_CAP = 10

KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def _extend(g: Graph, neighbours: int) -> Graph:
    m = g.n
    rows = tuple(row | ((neighbours >> v & 1) << m) for v, row in enumerate(g.adj))
    return Graph._trusted(m + 1, rows + (neighbours,))


def enumerate_nonisomorphic(
    n: int, keep: Callable[[Graph], bool] | None = None
) -> list[Graph]:
    """One canonical representative per isomorphism class of order ``n``.

    Each representative of order ``m-1`` is extended by a new vertex over every
    neighbour subset and the batch is deduplicated by canonical form. ``keep``
    must be hereditary (closed under deleting a vertex, as F-freeness is);
    classes it rejects are dropped at every level, which is what makes filtered
    generation feasible up to ``FILTERED_CAP``. Output is sorted by canonical form.
    """
    cap = NATIVE_CAP if keep is None else FILTERED_CAP
    if n < 0:
        raise ParameterError(f"graph order must be non-negative, got {n}")
    if n == 0:
        empty = Graph(0, ())
        return [empty] if keep is None or keep(empty) else []
    if n > cap:
        raise CapacityError(
            f"native enumeration is capped at n={cap}"
            f"{'' if keep is None else ' (filtered)'}; supply a graph6 stream for n={n}"
        )
    level = [Graph(1, (0,))]
    if keep is not None:
        level = [g for g in level if keep(g)]
    for m in range(1, n):
        seen: dict[bytes, Graph | None] = {}
        for g in level:
            for subset in range(1 << m):
                child = _extend(g, subset)
                cf = canonical_form(child)
                if cf in seen:
                    continue
                if keep is not None and not keep(child):
                    seen[cf] = None
                else:
                    seen[cf] = child
        level = [parse_graph6(cf.decode()) for cf in sorted(seen) if seen[cf] is not None]
    return level


@dataclass
class Diagnostic:
    line: int
    message: str


@dataclass
class GraphStream:
    """Iterable of graphs that counts what it has emitted."""

    source: str
    graphs: Iterable[Graph]
    count_emitted: int = 0
    diagnostics: list[Diagnostic] = field(default_factory=list)

    def __iter__(self) -> Iterator[Graph]:
        for g in self.graphs:
            self.count_emitted += 1
            yield g


def native_stream(n: int, keep: Callable[[Graph], bool] | None = None) -> GraphStream:
    return GraphStream(f"native({n})", enumerate_nonisomorphic(n, keep))


def _open_source(source) -> tuple[str, TextIO, bool]:
    if source == "-":
        return "<stdin>", sys.stdin, False
    if isinstance(source, (str, Path)):
        return str(source), open(source, encoding="ascii"), True
    if isinstance(source, io.IOBase) or hasattr(source, "read"):
        return getattr(source, "name", "<stream>"), source, False
    return "<lines>", iter(source), False


def read_graph6_stream(source, strict: bool = False) -> GraphStream:
    """Parse graph6 records one per line.

    ``source`` is a path, ``"-"`` for stdin, an open text file, or an iterable of
    lines. Blank lines are skipped. Bad lines become diagnostics, or raise
    immediately with ``strict``.
    """
    name, handle, owned = _open_source(source)
    stream = GraphStream(name, [])

    def gen() -> Iterator[Graph]:
        try:
            for lineno, line in enumerate(handle, start=1):
                text = line.strip()
                if not text:
                    continue
                try:
                    yield parse_graph6(text)
                except Graph6Error as exc:
                    if strict:
                        raise Graph6Error(f"line {lineno}: {exc.message}", exc.offset) from exc
                    stream.diagnostics.append(Diagnostic(lineno, str(exc)))
                except CapacityError as exc:
                    if strict:
                        raise CapacityError(f"line {lineno}: {exc}") from exc
                    stream.diagnostics.append(Diagnostic(lineno, str(exc)))
        finally:
            if owned:
                handle.close()

    stream.graphs = gen()
    return stream


def write_graph6(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(encode_graph6(g) + "\n")
        count += 1
    return count
