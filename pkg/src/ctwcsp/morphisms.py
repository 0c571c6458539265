"""Morphism relations and the feasibility tests gating table updates."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import E


@dataclass(frozen=True)
class MorphismRelation:
    """Allowed label pairs between a source and a target alphabet."""

    source_alphabet_size: int
    target_alphabet_size: int
    allowed: frozenset

    @staticmethod
    def of(source_alphabet_size, target_alphabet_size, pairs):
        pairs = frozenset((int(x), int(y)) for x, y in pairs)
        for x, y in pairs:
            if not (0 <= x < source_alphabet_size
                    and 0 <= y < target_alphabet_size):
                raise ValueError(f"pair ({x},{y}) outside the alphabets")
        return MorphismRelation(source_alphabet_size, target_alphabet_size,
                                pairs)

    def __contains__(self, pair):
        return pair in self.allowed


# Edges map to edges, non-edges map anywhere: plain graph homomorphisms.
HOM = MorphismRelation.of(2, 2, [(0, 0), (0, 1), (1, 1)])


def check_dimensions(G, H, R):
    if G.alphabet_size != R.source_alphabet_size:
        raise ValueError("source alphabet does not match the relation")
    if H.alphabet_size != R.target_alphabet_size:
        raise ValueError("target alphabet does not match the relation")


def is_morphism(G, H, R, f):
    """Whether f maps every ordered pair of G to an allowed pair of H.

    ``f`` maps every vertex of G to a vertex of H (sequence or mapping).
    """
    check_dimensions(G, H, R)
    try:
        images = [f[u] for u in range(G.n)]
    except (KeyError, IndexError) as exc:
        raise ValueError("f is not total on the vertices of G") from exc
    for u in range(G.n):
        for v in range(G.n):
            if (G.labels[u][v], H.labels[images[u]][images[v]]) not in R:
                return False
    return True


def feasible_fine(G, Hk, R, S, T):
    """Feasibility of preimage sets S against parts T of a contracted template.

    ``T`` is a tuple of distinct vertices of the contracted graph ``Hk``;
    ``S`` pairs each with a (possibly empty) subset of V_G, pairwise
    disjoint.  For every pair of parts whose contracted label is not E,
    every underlying source pair must be allowed by R.
    """
    if len(S) != len(T):
        raise ValueError("S and T must have equal length")
    p = len(T)
    for i in range(p):
        for j in range(p):
            y = Hk.labels[T[i]][T[j]]
            if y == E:
                continue
            for u in S[i]:
                for v in S[j]:
                    if (G.labels[u][v], y) not in R:
                        return False
    return True


def feasible_fpt(Gk, H, R, T, S):
    """Feasibility of image sets T against parts S of a contracted instance.

    ``S`` is a tuple of distinct vertices of the contracted graph ``Gk``;
    ``T`` pairs each with a nonempty subset of V_H (overlaps allowed).
    """
    if len(S) != len(T):
        raise ValueError("S and T must have equal length")
    for Ti in T:
        if not Ti:
            raise ValueError("image sets must be nonempty")
    p = len(S)
    for i in range(p):
        for j in range(p):
            x = Gk.labels[S[i]][S[j]]
            if x == E:
                continue
            for a in T[i]:
                for b in T[j]:
                    if (x, H.labels[a][b]) not in R:
                        return False
    return True
