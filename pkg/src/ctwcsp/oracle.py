"""Brute-force reference solver and restricted-morphism enumerators.

Everything here evaluates pre-morphisms set-theoretically on explicitly
materialized function sets, never through the solvers' semiring
recursion, so solver bugs cannot confirm themselves.
"""

from __future__ import annotations

import itertools

from .graphs import E
from .morphisms import check_dimensions, is_morphism
from .semirings import omega_of_set


class EnumerationCapError(ValueError):
    pass


def _check_cap(count, cap):
    if count > cap:
        raise EnumerationCapError(
            f"{count} functions exceed the enumeration cap {cap}")


def all_maps(domain, codomain, cap=10**7):
    """All total functions domain -> codomain, deterministic order."""
    domain = sorted(domain)
    codomain = sorted(codomain)
    _check_cap(len(codomain) ** len(domain) if domain else 1, cap)
    for images in itertools.product(codomain, repeat=len(domain)):
        yield dict(zip(domain, images))


def solve_brute(G, H, R, pm, W, cap=10**7):
    """Filter all maps V_G -> V_H by the morphism predicate, then apply pm."""
    check_dimensions(G, H, R)
    sols = [f for f in all_maps(range(G.n), range(H.n), cap=cap)
            if is_morphism(G, H, R, f)]
    return omega_of_set(pm, W, range(G.n), range(H.n), sols)


def _induced_ok(G, H, R, f):
    for u in f:
        for v in f:
            if (G.labels[u][v], H.labels[f[u]][f[v]]) not in R:
                return False
    return True


def enumerate_restricted(G, H, R, S, T, exact_image=False, cap=10**7):
    """The set of R-morphisms of G[union S] into H[union T] respecting S -> T.

    With ``exact_image`` false this is containment semantics
    (f(S_i) subset of T_i); with it true, exact-image semantics
    (f(S_i) = T_i).
    """
    check_dimensions(G, H, R)
    if len(S) != len(T):
        raise ValueError("S and T must have equal length")
    S = [sorted(s) for s in S]
    T = [sorted(t) for t in T]
    total = 1
    for s, t in zip(S, T):
        total *= len(t) ** len(s) if s else 1
    _check_cap(total, cap)
    out = []
    for block_images in itertools.product(
            *[itertools.product(t, repeat=len(s)) for s, t in zip(S, T)]):
        f = {}
        for s, images in zip(S, block_images):
            f.update(zip(s, images))
        if exact_image and any(set(f[u] for u in s) != set(t)
                               for s, t in zip(S, T)):
            continue
        if _induced_ok(G, H, R, f):
            out.append(f)
    return out


def _function_key(f):
    return tuple(sorted(f.items()))


def _uniform_label(labels, A, B):
    """The common label over A x B, or E when the pairs disagree."""
    values = {labels[a][b] for a in A for b in B}
    return values.pop() if len(values) == 1 else E


def check_join_lemma(G, H, R, S, T, groups, exact_image=False, cap=10**6):
    """Verify the component factorization of a restricted morphism set.

    ``groups`` partitions the tuple indices like the e-components of a
    contracted graph: every pair of parts in different groups must be
    label-uniform (non-E), which is what makes the groups independent.
    The claim verified is two-sided: when the tuple is feasible, the full
    restricted set equals the join of the per-group restricted sets; when
    it is infeasible, the full set is empty.  With ``exact_image`` false
    the parts live on the template side (containment semantics), with it
    true on the instance side (exact-image semantics).
    """
    p = len(S)
    part_label = [[None] * p for _ in range(p)]
    for i in range(p):
        for j in range(p):
            if exact_image:
                part_label[i][j] = _uniform_label(G.labels, S[i], S[j])
            else:
                part_label[i][j] = _uniform_label(H.labels, T[i], T[j])
    group_of = {}
    for g, idx in enumerate(groups):
        for i in idx:
            group_of[i] = g
    for i in range(p):
        for j in range(p):
            if group_of[i] != group_of[j] and part_label[i][j] == E:
                raise ValueError("groups are not label-independent")

    feasible = True
    for i in range(p):
        for j in range(p):
            y = part_label[i][j]
            if y == E:
                continue
            if exact_image:
                if any((y, H.labels[a][b]) not in R
                       for a in T[i] for b in T[j]):
                    feasible = False
            else:
                if any((G.labels[u][v], y) not in R
                       for u in S[i] for v in S[j]):
                    feasible = False

    whole = enumerate_restricted(G, H, R, S, T, exact_image=exact_image,
                                 cap=cap)
    if not feasible:
        return whole == []
    factors = [enumerate_restricted(G, H, R,
                                    [S[i] for i in idx], [T[i] for i in idx],
                                    exact_image=exact_image, cap=cap)
               for idx in groups]
    joined = [{}]
    for fac in factors:
        joined = [{**g, **f} for g in joined for f in fac]
    return ({_function_key(f) for f in whole}
            == {_function_key(f) for f in joined})
