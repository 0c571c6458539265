"""Shared test utilities: small-graph enumeration, random inputs."""

import itertools
import random

from ctwcsp import EdgeLabelledGraph, MorphismRelation, from_adjacency
from ctwcsp.bench import random_weights


def clique(n):
    return from_adjacency([[1 if u != v else 0 for v in range(n)]
                           for u in range(n)])


def cycle(n):
    adj = [[0] * n for _ in range(n)]
    for v in range(n):
        adj[v][(v + 1) % n] = adj[(v + 1) % n][v] = 1
    return from_adjacency(adj)


def path(n):
    adj = [[0] * n for _ in range(n)]
    for v in range(n - 1):
        adj[v][v + 1] = adj[v + 1][v] = 1
    return from_adjacency(adj)


def all_simple_graphs_upto_iso(max_n):
    """All undirected loopless graphs with at most max_n vertices, one
    representative per isomorphism class, as 2-letter e-free graphs."""
    out = []
    for n in range(max_n + 1):
        edges = list(itertools.combinations(range(n), 2))
        seen = set()
        for bits in itertools.product((0, 1), repeat=len(edges)):
            adj = [[0] * n for _ in range(n)]
            for (u, v), b in zip(edges, bits):
                adj[u][v] = adj[v][u] = b
            canon = min(
                tuple(tuple(adj[p[u]][p[v]] for v in range(n))
                      for u in range(n))
                for p in itertools.permutations(range(n)))
            if canon not in seen:
                seen.add(canon)
                out.append(from_adjacency(canon))
    return out


def random_graph(rng, n, k=2):
    """Random e-free edge-labelled graph over a k-letter alphabet."""
    return EdgeLabelledGraph(
        n, k, [[rng.randrange(k) for _ in range(n)] for _ in range(n)])


def random_relation(rng, kg=2, kh=2, density=0.6):
    pairs = [(x, y) for x in range(kg) for y in range(kh)
             if rng.random() < density]
    return MorphismRelation.of(kg, kh, pairs)


def weights_for(pm, n_source, n_target, seed):
    if not pm.uses_weights:
        return None
    return random_weights(pm.weight_domain, n_source, n_target,
                          random.Random(seed))
