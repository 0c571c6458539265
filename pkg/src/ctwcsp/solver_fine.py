"""Fine-grained DP over a contraction sequence of the template.

Profile tables live per e-connected component of the current contracted
template.  A table key assigns each source vertex to one of the
component's parts or leaves it unassigned, and the stored value is the
pre-morphism applied to the set of partial morphisms sending each
preimage set into its part.  Each merge step consumes the tables of the
components it fuses.

The operation counter reports the number of candidate (preimage tuple,
split) evaluations of the canonical enumeration, sum over steps of
(p+2)^|V_G|; infeasible prefixes are skipped in bulk, which changes no
table write and keeps the counter deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import E
from .morphisms import check_dimensions
from .semirings import singleton_value


@dataclass
class FineRun:
    """Result handle: semiring value plus the operation counter."""

    value: object
    op_count: int


def _check_inputs(G, H, R, seq, pm, W):
    if not G.e_free or not H.e_free:
        raise ValueError("solver inputs must be e-free graphs")
    check_dimensions(G, H, R)
    pm.check_weights(W)
    if pm.uses_weights and (W.n_source != G.n or W.n_target != H.n):
        raise ValueError("weight matrix shape does not match the graphs")
    if seq.base != H:
        raise ValueError("contraction sequence does not belong to this graph")


def _initial_tables(G, H, R, pm, W):
    """Per template vertex a, table over subsets S passing the self-pair check."""
    n = G.n
    tables = {}
    for a in range(H.n):
        ok = [[(G.labels[u][v], H.labels[a][a]) in R for v in range(n)]
              for u in range(n)]
        tab = {}
        chosen = []
        alpha = []

        def gen(u):
            if u == n:
                tab[tuple(alpha)] = singleton_value(pm, W, chosen, a)
                return
            alpha.append(0)
            gen(u + 1)
            alpha.pop()
            if ok[u][u] and all(ok[u][v] and ok[v][u] for v in chosen):
                chosen.append(u)
                alpha.append(1)
                gen(u + 1)
                alpha.pop()
                chosen.pop()

        gen(0)
        tables[(a,)] = tab
    return tables


def _step_classes(seq, t, H):
    """Class layout for merge step t.

    Classes are the parts the enumeration assigns source vertices to:
    the merged component's surviving parts first, then the two merged
    parts.  Returns reps, their vertex indices in the pre-merge graph,
    the pre-merge graph, the new component (rep tuple) and the pre-merge
    e-components (rep tuples).
    """
    ra, rb = seq.merges[t]
    rep0 = min(ra, rb)
    if t == 0:
        prev_graph = H
        prev_idx = {a: a for a in range(H.n)}
        prev_comps = tuple((a,) for a in range(H.n))
    else:
        prev = seq.steps[t - 1]
        prev_graph = prev.graph
        prev_idx = {r: i for i, r in
                    enumerate(prev.partition.representatives())}
        prev_comps = prev.components
    new_comp = next(c for c in seq.steps[t].components if rep0 in c)
    others = [r for r in new_comp if r != rep0]
    class_reps = others + [ra, rb]
    class_idx = [prev_idx[r] for r in class_reps]
    old_set = set(class_reps)
    old_comps = [c for c in prev_comps if old_set.intersection(c)]
    covered = set()
    for c in old_comps:
        covered.update(c)
    if covered != old_set:
        raise AssertionError("pre-merge components do not tile the merge set")
    return class_reps, class_idx, prev_graph, new_comp, tuple(old_comps)


def solve_fine(G, H, R, seq, pm, W=None):
    """Template-side dynamic program; returns a :class:`FineRun`.

    Works for every pre-morphism of the catalog, strong or not, since the
    preimage sets it enumerates are pairwise disjoint by construction.
    """
    _check_inputs(G, H, R, seq, pm, W)
    sr = pm.semiring
    zero, one, add, mul = sr.zero, sr.one, sr.add, sr.mul
    n = G.n
    if H.n == 0:
        return FineRun(one if n == 0 else zero, 0)

    comp_tables = _initial_tables(G, H, R, pm, W)
    op_count = 0
    Glab = G.labels

    for t in range(len(seq.merges)):
        class_reps, class_idx, prev_graph, new_comp, old_comps = \
            _step_classes(seq, t, H)
        nclasses = len(class_reps)
        op_count += (nclasses + 1) ** n

        # ok[i][j]: None when the pre-merge label is E (unconstrained),
        # else admissibility of each source label against that label.
        ok = [[None] * nclasses for _ in range(nclasses)]
        for i in range(nclasses):
            for j in range(nclasses):
                y = prev_graph.labels[class_idx[i]][class_idx[j]]
                if y != E:
                    ok[i][j] = [(x, y) in R for x in range(G.alphabet_size)]

        old_tables = [comp_tables[c] for c in old_comps]
        comp_of = {}
        pos_of = {}
        for j, comp in enumerate(old_comps):
            for pos, rep in enumerate(comp):
                comp_of[rep] = j
                pos_of[rep] = pos + 1
        class_comp = [comp_of[r] for r in class_reps]
        class_pos = [pos_of[r] for r in class_reps]
        rep0 = min(seq.merges[t])
        new_pos = {rep: i + 1 for i, rep in enumerate(new_comp)}
        class_new = [new_pos[r] for r in class_reps[:-2]] + \
            [new_pos[rep0], new_pos[rep0]]

        new_table = {}
        members = [[] for _ in range(nclasses)]

        def leaf():
            prod = one
            keys = [[0] * n for _ in old_comps]
            new_key = [0] * n
            for c in range(nclasses):
                kj = keys[class_comp[c]]
                pos = class_pos[c]
                npos = class_new[c]
                for u in members[c]:
                    kj[u] = pos
                    new_key[u] = npos
            for tab, key in zip(old_tables, keys):
                val = tab.get(tuple(key))
                if val is None:
                    return
                prod = mul(prod, val)
            nk = tuple(new_key)
            got = new_table.get(nk)
            new_table[nk] = prod if got is None else add(got, prod)

        def rec(u):
            if u == n:
                leaf()
                return
            rec(u + 1)  # u unassigned
            row = Glab[u]
            for c in range(nclasses):
                okc = ok[c]
                if okc[c] is not None and not okc[c][row[u]]:
                    continue
                feasible = True
                for d in range(nclasses):
                    fwd = okc[d]
                    bwd = ok[d][c]
                    if fwd is None and bwd is None:
                        continue
                    for v in members[d]:
                        if fwd is not None and not fwd[row[v]]:
                            feasible = False
                            break
                        if bwd is not None and not bwd[Glab[v][u]]:
                            feasible = False
                            break
                    if not feasible:
                        break
                if feasible:
                    members[c].append(u)
                    rec(u + 1)
                    members[c].pop()

        rec(0)
        for c in old_comps:
            del comp_tables[c]
        comp_tables[new_comp] = new_table

    (final_table,) = comp_tables.values()
    return FineRun(final_table.get((1,) * n, zero), op_count)
