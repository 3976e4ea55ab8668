"""Simply-laced Cartan data and Dynkin-diagram paths.

Node numbering (vertices are 1-based everywhere in the public API):

    A_n  chain        1 - 2 - 3 - ... - n
    D_n  fork         1 - 2 - 4 - 5 - ... - n,  with 3 also attached to 2
                      (2 is the trivalent hub adjacent to 1, 3 and 4)
    E_n  (Bourbaki)   1 - 3 - 4 - 5 - 6 [- 7 [- 8]],  with 2 attached to 4
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

SERIES = ("A", "D", "E")


class InvalidCartanType(ValueError):
    pass


class UnknownVertex(KeyError):
    pass


def dynkin_edges(series: str, rank: int) -> list[tuple[int, int]]:
    if series == "A":
        if rank < 1:
            raise InvalidCartanType(f"A_{rank}: rank must be >= 1")
        return [(i, i + 1) for i in range(1, rank)]
    if series == "D":
        if rank < 4:
            raise InvalidCartanType(f"D_{rank}: rank must be >= 4")
        return [(1, 2), (2, 3), (2, 4)] + [(i, i + 1) for i in range(4, rank)]
    if series == "E":
        if rank not in (6, 7, 8):
            raise InvalidCartanType(f"E_{rank}: rank must be 6, 7 or 8")
        return [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, rank)]
    raise InvalidCartanType(f"unsupported series {series!r} (simply-laced only: A, D, E)")


@dataclass(frozen=True)
class CartanDatum:
    series: str
    rank: int
    matrix: tuple[tuple[int, ...], ...]
    adjacency: frozenset[frozenset[int]]

    @property
    def n(self) -> int:
        return self.rank

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    def a(self, i: int, j: int) -> int:
        """Cartan entry a_ij with 1-based vertices."""
        return self.matrix[i - 1][j - 1]

    def neighbours(self, i: int) -> list[int]:
        self._check(i)
        return [j for j in self.vertices if j != i and self.a(i, j)]

    def _check(self, v: int):
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in {self.name}")

    @cached_property
    def _dist(self) -> dict[int, dict[int, int]]:
        return {v: _bfs(self, v) for v in self.vertices}

    def distance(self, i: int, j: int) -> int:
        self._check(i)
        self._check(j)
        return self._dist[i][j]


def _bfs(datum: CartanDatum, base: int) -> dict[int, int]:
    dist = {base: 0}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for w in datum.neighbours(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def cartan_matrix(series: str, rank: int) -> CartanDatum:
    series = series.upper()
    edges = dynkin_edges(series, rank)
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    for i, j in edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    datum = CartanDatum(
        series=series,
        rank=rank,
        matrix=tuple(tuple(r) for r in a),
        adjacency=frozenset(frozenset(e) for e in edges),
    )
    if len(_bfs(datum, 1)) != rank:
        raise InvalidCartanType(f"{datum.name} diagram is not connected")
    return datum


def gamma(datum: CartanDatum, base: int, m: int) -> set[int]:
    """Vertices joined to ``base`` by a path of at most ``m`` edges (base included)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    datum._check(base)
    return {v for v, d in datum._dist[base].items() if d <= m}


def path(datum: CartanDatum, i: int, j: int) -> list[int]:
    """Shortest path i -> j; ties broken by the smallest next vertex."""
    datum._check(i)
    datum._check(j)
    out = [i]
    while out[-1] != j:
        here = out[-1]
        d = datum.distance(here, j)
        out.append(min(w for w in datum.neighbours(here) if datum.distance(w, j) == d - 1))
    return out
