"""
Simple undirected graphs stored as per-vertex neighbour bitsets.
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Tuple

from .exceptions import GraphInputError


Edge = Tuple[int, int]


def pair_index(u: int, v: int) -> int:
    """
    Position of the pair {u, v} in the column-major upper-triangle order used by
    graph6 and by the labeled enumeration: (0,1), (0,2), (1,2), (0,3), ...
    """
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True, repr=False)
class Graph:
    """
    An immutable simple undirected graph on the vertices 0..n-1. Row i of the
    adjacency is an integer whose bit j is set when i and j are adjacent, so rows
    can be intersected with a single & when searching for cliques.
    """

    n: int
    rows: Tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphInputError(f"expected {self.n} adjacency rows, got {len(self.rows)}")

        full = (1 << self.n) - 1
        degree_sum = 0
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphInputError(f"vertex {v} is adjacent to a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphInputError(f"self-loop at vertex {v}")
            degree_sum += row.bit_count()

        for v, row in enumerate(self.rows):
            for u in iter_vertices(row):
                if not self.rows[u] >> v & 1:
                    raise GraphInputError(f"adjacency is not symmetric at ({v}, {u})")

        object.__setattr__(self, "m", degree_sum // 2)

    @classmethod
    def from_bitmask(cls, n: int, mask: int) -> "Graph":
        """
        Builds the graph whose upper-triangle pairs, in column-major order, are the
        set bits of mask.
        """
        if mask < 0 or mask >> pair_count(n):
            raise GraphInputError(f"bitmask out of range for n={n}")

        rows = [0] * n
        k = 0
        for v in range(1, n):
            for u in range(v):
                if mask >> k & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                k += 1
        return cls(n, tuple(rows))

    @property
    def bitmask(self) -> int:
        mask = 0
        for u, v in self.edges:
            mask |= 1 << pair_index(u, v)
        return mask

    @property
    def edges(self) -> List[Edge]:
        """
        Edges as (u, v) pairs with u < v, in column-major pair order.
        """
        return [
            (u, v)
            for v in range(1, self.n)
            for u in range(v)
            if self.rows[v] >> u & 1
        ]

    @property
    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def isolated_vertices(self) -> List[int]:
        return [v for v, row in enumerate(self.rows) if row == 0]

    @property
    def is_complete(self) -> bool:
        return self.m == pair_count(self.n)

    @property
    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    @property
    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            reach = 0
            for v in iter_vertices(frontier):
                reach |= self.rows[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return [u for u in range(self.n) if self.rows[v] >> u & 1]

    def add_edge(self, u: int, v: int) -> "Graph":
        """
        Returns a new graph with the edge {u, v} added.
        """
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """
        Returns the graph in which vertex v is renamed perm[v].
        """
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphInputError("relabeling must be a permutation of the vertices")
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeStats:

    degrees: Tuple[int, ...]
    d: float

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)


def _check_pair(n: int, u: int, v: int):
    if not (0 <= u < n and 0 <= v < n):
        raise GraphInputError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
    if u == v:
        raise GraphInputError(f"self-loop at vertex {u}")


def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    """
    Builds a graph from vertex pairs. Repeated pairs are merged; self-loops and
    out-of-range vertices raise GraphInputError.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")

    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def parse_edge_list(text: str, n: int = None) -> Graph:
    """
    Parses one "u v" pair per line with 0-indexed vertices. Anything after a '#'
    is a comment. If n is not given it is one more than the largest vertex seen.
    """
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue

        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as e:
            raise GraphInputError(f"line {lineno}: vertex ids must be integers") from e

    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n} m={g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        raise GraphInputError("degree statistics are undefined for the empty vertex set")
    return DegreeStats(degrees=tuple(g.degrees), d=2 * g.m / g.n)


def triangle_count(g: Graph) -> int:
    """
    Number of 3-cliques, counting each triangle once at its two smallest vertices.
    """
    t = 0
    for u, v in g.edges:
        above = ~((1 << (v + 1)) - 1)
        t += (g.rows[u] & g.rows[v] & above).bit_count()
    return t


def iter_vertices(mask: int) -> Iterator[int]:
    """
    Yields the vertices whose bits are set in mask, in increasing order.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
