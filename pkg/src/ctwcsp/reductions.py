"""Exact translations between binary CSP instances and morphism problems.

Both directions preserve the solution set pointwise: a variable
assignment solves the CSP instance exactly when the same map is an
admissible morphism, so every pre-morphism value carries over unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import EdgeLabelledGraph
from .morphisms import MorphismRelation


@dataclass(frozen=True)
class CspInstance:
    """Binary CSP: named binary relations over a finite domain."""

    domain_size: int
    relations: tuple  # ordered (name, frozenset of ordered pairs)
    num_vars: int
    constraints: tuple  # (relation name, u, v)

    def __post_init__(self):
        names = [name for name, _ in self.relations]
        if len(set(names)) != len(names):
            raise ValueError("duplicate relation names")
        by_name = dict(self.relations)
        for name, pairs in self.relations:
            for a, b in pairs:
                if not (0 <= a < self.domain_size
                        and 0 <= b < self.domain_size):
                    raise ValueError(
                        f"relation {name!r} pair ({a},{b}) outside domain")
        for name, u, v in self.constraints:
            if name not in by_name:
                raise ValueError(f"constraint uses unknown relation {name!r}")
            if not (0 <= u < self.num_vars and 0 <= v < self.num_vars):
                raise ValueError(f"constraint ({name},{u},{v}) out of range")

    def relation(self, name):
        return dict(self.relations)[name]

    def is_solution(self, f):
        """Direct check of every constraint; the test-side oracle."""
        by_name = dict(self.relations)
        return all((f[u], f[v]) in by_name[name]
                   for name, u, v in self.constraints)


@dataclass(frozen=True)
class LabelDictionary:
    """LabelId <-> relation-name-subset maps for both alphabets."""

    source_labels: tuple  # frozensets of relation names, indexed by LabelId
    target_labels: tuple


def csp_to_morphism(inst):
    """Build (template, relation, instance graph, dictionary) from a CSP.

    Template vertices are domain values labelled by the set of relations
    each pair satisfies; instance vertices are the variables labelled by
    the set of relations constraining each pair.  The relation is subset
    inclusion between those label sets.  Only label sets that actually
    occur get LabelIds, which never changes any membership query.
    """
    d, nv = inst.domain_size, inst.num_vars
    by_name = dict(inst.relations)

    target_sets = {}
    h_rows = []
    for a in range(d):
        row = []
        for b in range(d):
            sat = frozenset(name for name, pairs in inst.relations
                            if (a, b) in pairs)
            row.append(target_sets.setdefault(sat, len(target_sets)))
        h_rows.append(row)

    required = {}
    for name, u, v in inst.constraints:
        required.setdefault((u, v), set()).add(name)
    source_sets = {}
    g_rows = []
    for u in range(nv):
        row = []
        for v in range(nv):
            req = frozenset(required.get((u, v), ()))
            row.append(source_sets.setdefault(req, len(source_sets)))
        g_rows.append(row)

    src = sorted(source_sets, key=source_sets.get)
    tgt = sorted(target_sets, key=target_sets.get)
    R = MorphismRelation.of(
        len(src), len(tgt),
        [(i, j) for i, x in enumerate(src) for j, y in enumerate(tgt)
         if x <= y])
    H = EdgeLabelledGraph(d, len(tgt), h_rows)
    G = EdgeLabelledGraph(nv, len(src), g_rows)
    return H, R, G, LabelDictionary(tuple(src), tuple(tgt))


def morphism_to_csp(H, R, G):
    """Build an equivalent CSP: one relation per source label.

    The relation for source label x allows the domain pairs whose
    template label x may map to; every ordered variable pair becomes one
    constraint, diagonal included.
    """
    if not G.e_free or not H.e_free:
        raise ValueError("reduction is defined for e-free graphs")
    relations = []
    for x in range(G.alphabet_size):
        pairs = frozenset((a, b) for a in range(H.n) for b in range(H.n)
                          if (x, H.labels[a][b]) in R)
        relations.append((f"R{x}", pairs))
    constraints = tuple((f"R{G.labels[u][v]}", u, v)
                        for u in range(G.n) for v in range(G.n))
    return CspInstance(H.n, tuple(relations), G.n, constraints)
