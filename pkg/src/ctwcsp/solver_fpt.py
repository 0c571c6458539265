"""FPT DP over a contraction sequence of the instance.

Tables live per e-connected component of the contracted instance and are
keyed by tuples of nonempty target subsets with exact-image semantics:
the stored value is the pre-morphism applied to the partial morphisms
whose image on each part is exactly the paired subset.  Only strong,
corestriction-independent pre-morphisms are admitted; for the others the
exact-image bookkeeping is unsound, so ineligibility is a hard error.

The operation counter reports candidate (target tuple, cover) evaluations
of the canonical enumeration, sum over steps of (2^|V_H|-1)^(p+1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import E
from .morphisms import check_dimensions
from .semirings import CapabilityError, singleton_value


@dataclass
class FptRun:
    value: object
    op_count: int


def _check_eligibility(pm):
    if not pm.strong:
        raise CapabilityError(
            f"pre-morphism {pm.name!r} is not strong; the instance-side "
            "solver would merge overlapping images incorrectly")
    if not pm.corestriction_independent:
        raise CapabilityError(
            f"pre-morphism {pm.name!r} is not corestriction independent; "
            "the instance-side solver cannot track exact images for it")


def solve_fpt(G, seq, H, R, pm, W=None):
    """Instance-side DP; returns an :class:`FptRun`.

    Any validated contraction sequence of G is accepted; the sequence
    width only affects running time, never the answer.
    """
    _check_eligibility(pm)
    if not G.e_free or not H.e_free:
        raise ValueError("solver inputs must be e-free graphs")
    check_dimensions(G, H, R)
    pm.check_weights(W)
    if pm.uses_weights and (W.n_source != G.n or W.n_target != H.n):
        raise ValueError("weight matrix shape does not match the graphs")
    if seq.base != G:
        raise ValueError("contraction sequence does not belong to this graph")

    sr = pm.semiring
    zero, one, add, mul = sr.zero, sr.one, sr.add, sr.mul
    n, h = G.n, H.n
    if n == 0:
        # Only the empty map; neutral for the join.
        return FptRun(one, 0)
    if h == 0:
        return FptRun(zero, 0)

    subsets = [frozenset(a for a in range(h) if mask >> a & 1)
               for mask in range(1, 1 << h)]

    # Admissible target pairs per source label, as per-row target bitmasks.
    pair_rows = {}
    for x in range(G.alphabet_size):
        rows = []
        for a in range(h):
            m = 0
            for b in range(h):
                if (x, H.labels[a][b]) in R:
                    m |= 1 << b
            rows.append(m)
        pair_rows[x] = rows

    def images_ok(x, Ti, Tj):
        rows = pair_rows[x]
        mj = 0
        for b in Tj:
            mj |= 1 << b
        return all(mj & ~rows[a] == 0 for a in Ti)

    comp_tables = {}
    for s in range(G.n):
        tab = {}
        for t in range(h):
            if (G.labels[s][s], H.labels[t][t]) in R:
                tab[(frozenset((t,)),)] = singleton_value(pm, W, (s,), t)
        comp_tables[(s,)] = tab

    op_count = 0
    for t in range(len(seq.merges)):
        ra, rb = seq.merges[t]
        rep0 = min(ra, rb)
        if t == 0:
            prev_graph = G
            prev_idx = {s: s for s in range(n)}
            prev_comps = tuple((s,) for s in range(n))
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
        nclasses = len(class_reps)
        op_count += (len(subsets)) ** nclasses

        old_set = set(class_reps)
        old_comps = [c for c in prev_comps if old_set.intersection(c)]
        covered = set().union(*old_comps)
        if covered != old_set:
            raise AssertionError(
                "pre-merge components do not tile the merge set")
        old_tables = [comp_tables[c] for c in old_comps]
        comp_of = {}
        pos_of = {}
        for j, comp in enumerate(old_comps):
            for pos, rep in enumerate(comp):
                comp_of[rep] = j
                pos_of[rep] = pos
        class_comp = [comp_of[r] for r in class_reps]
        class_pos = [pos_of[r] for r in class_reps]
        new_pos = {rep: i for i, rep in enumerate(new_comp)}
        pos0 = new_pos[rep0]
        class_new = [new_pos[r] for r in others] + [pos0, pos0]

        # edge_lab[i][j]: pre-merge label between classes, E-free pairs
        # constrain the chosen image sets.
        edge_lab = [[prev_graph.labels[class_idx[i]][class_idx[j]]
                     for j in range(nclasses)] for i in range(nclasses)]

        new_table = {}
        chosen = [None] * nclasses

        def leaf():
            prod = one
            keys = [[None] * len(comp) for comp in old_comps]
            new_key = [None] * len(new_comp)
            for c in range(nclasses):
                keys[class_comp[c]][class_pos[c]] = chosen[c]
                if class_new[c] == pos0:
                    cur = new_key[pos0]
                    new_key[pos0] = chosen[c] if cur is None else \
                        cur | chosen[c]
                else:
                    new_key[class_new[c]] = chosen[c]
            for tab, key in zip(old_tables, keys):
                val = tab.get(tuple(key))
                if val is None:
                    return
                prod = mul(prod, val)
            nk = tuple(new_key)
            got = new_table.get(nk)
            new_table[nk] = prod if got is None else add(got, prod)

        def rec(c):
            if c == nclasses:
                leaf()
                return
            for T in subsets:
                feasible = True
                if edge_lab[c][c] != E and not images_ok(edge_lab[c][c], T, T):
                    continue
                for d in range(c):
                    if edge_lab[c][d] != E and \
                            not images_ok(edge_lab[c][d], T, chosen[d]):
                        feasible = False
                        break
                    if edge_lab[d][c] != E and \
                            not images_ok(edge_lab[d][c], chosen[d], T):
                        feasible = False
                        break
                if feasible:
                    chosen[c] = T
                    rec(c + 1)
        rec(0)

        for c in old_comps:
            del comp_tables[c]
        comp_tables[new_comp] = new_table

    (final_table,) = comp_tables.values()
    for key in final_table:
        assert all(T for T in key), "empty image set stored in a table key"
    total = zero
    for value in final_table.values():
        total = add(total, value)
    return FptRun(total, op_count)
