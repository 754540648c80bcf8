"""
Exact clique and chromatic numbers by branch and bound.

Both solvers are deterministic (ties are broken by vertex index) and honour an
optional node budget and time budget. Running out of budget never produces an
estimate: the result is tagged as aborted and carries no number.
"""

import time
import logging

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .graph import Graph, iter_vertices, triangle_count
from .types import SolveStatus
from .exceptions import ConsistencyError, GraphInputError, SolveAborted


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CliqueResult:

    status: SolveStatus
    size: Optional[int] = None
    witness: Tuple[int, ...] = ()
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.status == SolveStatus.EXACT


@dataclass(frozen=True)
class ColoringResult:

    status: SolveStatus
    colors: Optional[int] = None
    witness: Tuple[int, ...] = ()
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.status == SolveStatus.EXACT


@dataclass(frozen=True)
class CombinatorialInvariants:
    """
    Exact combinatorial invariants of one graph. chi and weakly_perfect are None
    when the chromatic number was not requested or the solve was aborted.
    """

    omega: Optional[int]
    chi: Optional[int]
    t: int
    triangle_free: bool
    weakly_perfect: Optional[bool]
    clique: CliqueResult
    coloring: Optional[ColoringResult] = None


class _Budget(object):
    """
    Counts search nodes and checks the wall clock every few hundred nodes.
    """

    CLOCK_EVERY = 256

    def __init__(self, node_budget: int = None, time_budget: float = None):
        self.node_budget = node_budget
        self.deadline = None if time_budget is None else time.monotonic() + time_budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise SolveAborted(f"node budget of {self.node_budget} exceeded")
        if self.deadline is not None and self.nodes % self.CLOCK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise SolveAborted("time budget exceeded")


def _require_vertices(g: Graph):
    if g.n == 0:
        raise GraphInputError("clique and chromatic numbers need at least one vertex")


def degeneracy_order(g: Graph) -> List[int]:
    """
    Vertices in the order they are removed by repeatedly deleting a vertex of
    minimum remaining degree (lowest index first on ties).
    """
    remaining = (1 << g.n) - 1
    order = []
    while remaining:
        best, best_degree = -1, g.n
        for v in iter_vertices(remaining):
            degree = (g.rows[v] & remaining).bit_count()
            if degree < best_degree:
                best, best_degree = v, degree
        order.append(best)
        remaining &= ~(1 << best)
    return order


def verify_clique(g: Graph, vertices) -> bool:
    vertices = list(vertices)
    return all(
        g.has_edge(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]
    )


def verify_coloring(g: Graph, colors) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges)


##########################################################################
## Maximum clique
##########################################################################

class _CliqueSearch(object):
    """
    Branch and bound in the style of Tomita's MCQ. Vertices are renumbered so that
    the densest core of the degeneracy ordering comes first; candidate sets are
    bitsets in the new numbering and each node is bounded by a greedy colouring of
    its candidates.
    """

    def __init__(self, g: Graph, budget: _Budget):
        self.order = list(reversed(degeneracy_order(g)))
        position = {v: i for i, v in enumerate(self.order)}
        self.rows = [0] * g.n
        for i, v in enumerate(self.order):
            for u in iter_vertices(g.rows[v]):
                self.rows[i] |= 1 << position[u]

        self.budget = budget
        self.best: List[int] = self._greedy()

    def _greedy(self) -> List[int]:
        clique, candidates = [], (1 << len(self.rows)) - 1
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            clique.append(v)
            candidates &= self.rows[v]
        return clique

    def _color_sort(self, candidates: int) -> Tuple[List[int], List[int]]:
        vertices, bounds = [], []
        color = 0
        uncolored = candidates
        while uncolored:
            color += 1
            available = uncolored
            while available:
                v = (available & -available).bit_length() - 1
                vertices.append(v)
                bounds.append(color)
                uncolored &= ~(1 << v)
                available &= ~(1 << v) & ~self.rows[v]
        return vertices, bounds

    def expand(self, clique: List[int], candidates: int):
        self.budget.tick()
        vertices, bounds = self._color_sort(candidates)
        for i in range(len(vertices) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(self.best):
                return

            v = vertices[i]
            clique.append(v)
            remaining = candidates & self.rows[v]
            if remaining:
                self.expand(clique, remaining)
            elif len(clique) > len(self.best):
                self.best = list(clique)
            clique.pop()
            candidates &= ~(1 << v)

    def run(self) -> Tuple[int, ...]:
        self.expand([], (1 << len(self.rows)) - 1)
        return tuple(sorted(self.order[i] for i in self.best))


def clique_number(g: Graph, node_budget: int = None, time_budget: float = None) -> CliqueResult:
    """
    Exact clique number with a witness clique, or an aborted result if the node or
    time budget ran out.
    """
    _require_vertices(g)
    budget = _Budget(node_budget, time_budget)
    search = _CliqueSearch(g, budget)
    try:
        witness = search.run()
    except SolveAborted as e:
        logger.warning(f"clique solve aborted on n={g.n}, m={g.m}: {e}")
        return CliqueResult(status=SolveStatus.ABORTED, nodes=budget.nodes)

    if not verify_clique(g, witness):
        raise ConsistencyError(f"clique witness {witness} is not a clique")
    return CliqueResult(
        status=SolveStatus.EXACT, size=len(witness), witness=witness, nodes=budget.nodes,
    )


##########################################################################
## Chromatic number
##########################################################################

def greedy_coloring(g: Graph) -> Tuple[int, ...]:
    """
    DSATUR greedy colouring: repeatedly colour the uncoloured vertex with the most
    distinct neighbour colours (then highest degree, then lowest index) with the
    smallest colour available.
    """
    colors = [-1] * g.n
    forbidden = [0] * g.n
    degrees = g.degrees
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if colors[u] < 0),
            key=lambda u: (forbidden[u].bit_count(), degrees[u], -u),
        )
        c = (~forbidden[v] & (forbidden[v] + 1)).bit_length() - 1
        colors[v] = c
        for u in iter_vertices(g.rows[v]):
            forbidden[u] |= 1 << c
    return tuple(colors)


class _ColoringSearch(object):
    """
    Decides k-colourability by DSATUR backtracking. The vertices of a maximum
    clique are precoloured 0..omega-1, and a new colour is only ever opened as the
    next unused one, which removes colour-permutation symmetry.
    """

    def __init__(self, g: Graph, k: int, clique: Tuple[int, ...], budget: _Budget):
        self.g = g
        self.k = k
        self.budget = budget
        self.degrees = g.degrees
        self.colors = [-1] * g.n
        self.forbidden = [0] * g.n
        self.used = 0
        for c, v in enumerate(clique):
            self._assign(v, c)
        self.used = len(clique)

    def _assign(self, v: int, c: int) -> List[int]:
        self.colors[v] = c
        changed = []
        bit = 1 << c
        for u in iter_vertices(self.g.rows[v]):
            if self.colors[u] < 0 and not self.forbidden[u] & bit:
                self.forbidden[u] |= bit
                changed.append(u)
        return changed

    def _select(self) -> int:
        best, best_key = -1, None
        for v in range(self.g.n):
            if self.colors[v] >= 0:
                continue
            key = (self.forbidden[v].bit_count(), self.degrees[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(self) -> bool:
        self.budget.tick()
        v = self._select()
        if v < 0:
            return True

        limit = min(self.k, self.used + 1)
        for c in range(limit):
            if self.forbidden[v] >> c & 1:
                continue

            opened = c == self.used
            changed = self._assign(v, c)
            if opened:
                self.used += 1

            if self.solve():
                return True

            if opened:
                self.used -= 1
            self.colors[v] = -1
            bit = ~(1 << c)
            for u in changed:
                self.forbidden[u] &= bit
        return False


def chromatic_number(
    g: Graph,
    node_budget: int = None,
    time_budget: float = None,
    clique: CliqueResult = None,
) -> ColoringResult:
    """
    Exact chromatic number with a witness colouring. Tries k = omega, omega + 1, ...
    below the DSATUR greedy bound; the first k that admits a colouring is chi.
    """
    _require_vertices(g)
    budget = _Budget(node_budget, time_budget)

    if clique is None or not clique.exact:
        clique = clique_number(g, node_budget=node_budget, time_budget=time_budget)
        if not clique.exact:
            return ColoringResult(status=SolveStatus.ABORTED, nodes=clique.nodes)

    best = greedy_coloring(g)
    upper = max(best) + 1

    try:
        for k in range(clique.size, upper):
            search = _ColoringSearch(g, k, clique.witness, budget)
            if search.solve():
                best = tuple(search.colors)
                break
    except SolveAborted as e:
        logger.warning(f"colouring solve aborted on n={g.n}, m={g.m}: {e}")
        return ColoringResult(status=SolveStatus.ABORTED, nodes=budget.nodes)

    if not verify_coloring(g, best):
        raise ConsistencyError(f"colouring witness {best} is not proper")
    return ColoringResult(
        status=SolveStatus.EXACT, colors=max(best) + 1, witness=best, nodes=budget.nodes,
    )


def is_weakly_perfect(g: Graph, node_budget: int = None, time_budget: float = None) -> bool:
    """
    True when omega = chi. Raises SolveAborted if either exact solve ran out of budget.
    """
    clique = clique_number(g, node_budget=node_budget, time_budget=time_budget)
    if not clique.exact:
        raise SolveAborted("clique number solve aborted")

    coloring = chromatic_number(g, node_budget=node_budget, time_budget=time_budget, clique=clique)
    if not coloring.exact:
        raise SolveAborted("chromatic number solve aborted")
    return clique.size == coloring.colors


def combinatorial_invariants(
    g: Graph,
    with_chi: bool = False,
    node_budget: int = None,
    time_budget: float = None,
    t: int = None,
) -> CombinatorialInvariants:
    """
    Computes omega (always), t, and optionally chi for one graph. Aborted solves
    leave the corresponding fields as None.
    """
    t = triangle_count(g) if t is None else t
    clique = clique_number(g, node_budget=node_budget, time_budget=time_budget)

    coloring = None
    if with_chi and clique.exact:
        coloring = chromatic_number(g, node_budget=node_budget, time_budget=time_budget, clique=clique)

    omega = clique.size if clique.exact else None
    chi = coloring.colors if coloring is not None and coloring.exact else None
    weakly_perfect = None
    if omega is not None and chi is not None:
        weakly_perfect = omega == chi

    return CombinatorialInvariants(
        omega=omega,
        chi=chi,
        t=t,
        triangle_free=t == 0,
        weakly_perfect=weakly_perfect,
        clique=clique,
        coloring=coloring,
    )
