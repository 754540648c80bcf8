"""
Deterministic graph families, seeded random graphs and exhaustive enumeration.
"""

import itertools

import numpy as np

from typing import Iterator, Sequence

from .graph import Graph, from_edge_list, pair_count
from .exceptions import GraphInputError


# Largest n for which every labeled graph can be enumerated (2^28 graphs).
ENUMERATION_CAP = 8

# Named generator for G(n, p): numpy's PCG64 bit generator seeded through
# SeedSequence. Only the raw 64-bit output stream is consumed so the edge sets do
# not depend on numpy's distribution code, which is not stream-stable.
PRNG_NAME = "PCG64/SeedSequence, raw uint64 >> 11 as 53-bit uniforms"
PRNG_VERSION = 1


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"empty graph needs n >= 1, got {n}")
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(k: int) -> Graph:
    """
    The star K_{1,k}: vertex 0 joined to k leaves.
    """
    if k < 1:
        raise GraphInputError(f"star needs at least one leaf, got {k}")
    return from_edge_list(k + 1, [(0, v) for v in range(1, k + 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """
    Complete multipartite graph with the given part sizes; vertices are numbered
    part by part.
    """
    if not parts:
        raise GraphInputError("complete multipartite graph needs at least one part")
    if any(size < 1 for size in parts):
        raise GraphInputError(f"part sizes must be positive, got {list(parts)}")

    label = []
    for index, size in enumerate(parts):
        label.extend([index] * size)

    n = len(label)
    return from_edge_list(n, [
        (u, v) for u, v in itertools.combinations(range(n), 2) if label[u] != label[v]
    ])


def kneser_subsets(p: int, k: int) -> list[tuple[int, ...]]:
    """
    The k-subsets of {1..p} in colexicographic order, which fixes the vertex ids of
    the Kneser graph.
    """
    subsets = itertools.combinations(range(1, p + 1), k)
    return sorted(subsets, key=lambda s: tuple(reversed(s)))


def kneser_graph(p: int, k: int) -> Graph:
    """
    KG_{p,k}: vertices are the k-subsets of a p-set, adjacent when disjoint.
    """
    if k < 1 or p < 2 * k:
        raise GraphInputError(f"Kneser graph needs p >= 2k >= 2, got p={p}, k={k}")

    subsets = [frozenset(s) for s in kneser_subsets(p, k)]
    return from_edge_list(len(subsets), [
        (u, v)
        for u, v in itertools.combinations(range(len(subsets)), 2)
        if subsets[u].isdisjoint(subsets[v])
    ])


def uniform_stream(seed: int, size: int) -> np.ndarray:
    """
    Returns size uniforms in [0, 1) with 53 bits of precision from the documented
    PCG64 stream for the seed.
    """
    bitgen = np.random.PCG64(np.random.SeedSequence(seed))
    raw = bitgen.random_raw(size)
    return (raw >> np.uint64(11)).astype(np.float64) * (1.0 / 9007199254740992.0)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """
    Erdos-Renyi G(n, p): pair k (in column-major order) is an edge when the k-th
    uniform of the seeded stream is below p.
    """
    if not 0.0 <= p <= 1.0:
        raise GraphInputError(f"edge probability must be in [0, 1], got {p}")
    if n < 1:
        raise GraphInputError(f"G(n, p) needs n >= 1, got {n}")
    if seed < 0 or seed >= 1 << 64:
        raise GraphInputError("seed must be an unsigned 64-bit integer")

    draws = uniform_stream(seed, pair_count(n)) < p
    mask = 0
    for k in np.flatnonzero(draws):
        mask |= 1 << int(k)
    return Graph.from_bitmask(n, mask)


def derive_seeds(master: int, count: int) -> list[int]:
    """
    Derives count independent 64-bit seeds from a master seed.
    """
    children = np.random.SeedSequence(master).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def labeled_graph_count(n: int) -> int:
    return 1 << pair_count(n)


def enumerate_labeled_graphs(n: int, start: int = 0, stop: int = None) -> Iterator[Graph]:
    """
    Yields every labeled graph on n vertices, in increasing order of the
    upper-triangle bitmask, optionally restricted to the range [start, stop).
    """
    if n < 1:
        raise GraphInputError(f"enumeration needs n >= 1, got {n}")
    if n > ENUMERATION_CAP:
        raise GraphInputError(f"enumeration is capped at n={ENUMERATION_CAP}, got {n}")

    total = labeled_graph_count(n)
    stop = total if stop is None else min(stop, total)
    if start < 0 or start > stop:
        raise GraphInputError(f"invalid bitmask range [{start}, {stop})")

    for mask in range(start, stop):
        yield Graph.from_bitmask(n, mask)
