"""Named graph families with known-width contraction sequences.

All families are plain graphs embedded as 2-letter e-free edge-labelled
graphs: edges get label 1, non-edges and the diagonal label 0.  Where a
family has a simple optimal-width sequence (cliques and cographs: width
1; cycles: width 3) the generator returns the raw merge list alongside
the graph; otherwise the merge list is ``None``.
"""

from __future__ import annotations

import random

from .graphs import EdgeLabelledGraph, from_adjacency, validate_sequence

FAMILY_NAMES = ("clique", "cycle", "path", "cograph_random", "erdos_renyi")


def _empty_adj(n):
    return [[0] * n for _ in range(n)]


def _clique(n):
    adj = [[1 if u != v else 0 for v in range(n)] for u in range(n)]
    merges = [(0, v) for v in range(1, n)]
    return from_adjacency(adj), merges


def _cycle(n):
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    adj = _empty_adj(n)
    for v in range(n):
        adj[v][(v + 1) % n] = adj[(v + 1) % n][v] = 1
    # Sweeping one endpoint along the cycle keeps at most one mixed
    # segment, touching the growing part, its front neighbour and the
    # fixed back neighbour: never more than 3 parts in an e-component.
    merges = [(0, v) for v in range(1, n)]
    return from_adjacency(adj), merges


def _path(n):
    if n < 1:
        raise ValueError("paths need at least 1 vertex")
    adj = _empty_adj(n)
    for v in range(n - 1):
        adj[v][v + 1] = adj[v + 1][v] = 1
    return from_adjacency(adj), None


def _cograph_random(n, rng):
    """Random cotree over n leaves; merges collapse sibling subtrees.

    Merging the collapsed representatives of two children of the same
    cotree node merges twins, so no off-diagonal pair ever becomes mixed
    and the sequence has width 1.
    """
    if n < 1:
        raise ValueError("cographs need at least 1 vertex")
    adj = _empty_adj(n)
    merges = []

    def build(vertices):
        # Returns the representative after collapsing this subtree.
        if len(vertices) == 1:
            return vertices[0]
        cut = rng.randrange(1, len(vertices))
        left, right = vertices[:cut], vertices[cut:]
        join = rng.random() < 0.5
        if join:
            for u in left:
                for v in right:
                    adj[u][v] = adj[v][u] = 1
        ra, rb = build(left), build(right)
        lo, hi = min(ra, rb), max(ra, rb)
        merges.append((lo, hi))
        return lo

    build(list(range(n)))
    return from_adjacency(adj), merges


def _erdos_renyi(n, p, rng):
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0,1]")
    adj = _empty_adj(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u][v] = adj[v][u] = 1
    return from_adjacency(adj), None


def family(name, n, seed=None, p=0.5):
    """Generate a named family member.

    Returns ``(graph, merges)`` where ``merges`` is a known-width raw
    merge list, or ``None`` when the family carries no canonical
    sequence.  ``seed`` fully determines the random families.
    """
    if name == "clique":
        return _clique(n)
    if name == "cycle":
        return _cycle(n)
    if name == "path":
        return _path(n)
    if name == "cograph_random":
        return _cograph_random(n, random.Random(seed))
    if name == "erdos_renyi":
        return _erdos_renyi(n, p, random.Random(seed))
    raise ValueError(f"unknown family {name!r}; choose from {FAMILY_NAMES}")


def family_with_sequence(name, n, seed=None, p=0.5):
    """Like :func:`family` but validates and returns the sequence."""
    G, merges = family(name, n, seed=seed, p=p)
    seq = validate_sequence(G, merges) if merges is not None else None
    return G, seq
