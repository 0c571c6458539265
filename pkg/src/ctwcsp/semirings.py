"""Semirings, weight matrices, and the pre-morphism catalog.

A pre-morphism maps explicit sets of functions (partial solutions) into a
semiring so that disjoint union becomes semiring addition and the join of
functions over disjoint domains becomes multiplication.  Seven are
provided: decision, list, counting, counting with lists, minimum cost with
tie counting, minimum weight with tie counting, and counting under
cardinality restrictions with lists.

Costs and weights are exact rationals (plus a +infinity element) so that
tie detection in the pair semirings is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

INF = math.inf


class WeightDomainError(ValueError):
    pass


class CapabilityError(ValueError):
    """A pre-morphism lacks a flag required by the requested algorithm."""


@dataclass(frozen=True)
class SemiringSpec:
    name: str
    add: object
    mul: object
    zero: object
    one: object


def _pair_add(x, y):
    (m1, c1), (m2, c2) = x, y
    if m1 < m2:
        return x
    if m2 < m1:
        return y
    return (m1, c1 + c2)


def _pair_mul(x, y):
    (m1, c1), (m2, c2) = x, y
    return (m1 + m2, c1 * c2)


BOOL = SemiringSpec("bool", lambda x, y: x or y, lambda x, y: x and y,
                    False, True)
NAT = SemiringSpec("nat", lambda x, y: x + y, lambda x, y: x * y, 0, 1)
# Pair carrier (extended cost, count): add keeps the smaller cost and sums
# counts on ties; mul adds costs and multiplies counts.
MIN_PAIR = SemiringSpec("min_pair", _pair_add, _pair_mul,
                        (INF, 0), (Fraction(0), 1))

# Weight-matrix domain tags.
UNUSED = "unused"
BITS = "bits"
EXT_RATIONAL = "extrational"
EXT_RATIONAL_NONNEG = "extrational_nonneg"
RESTRICTIVE_PAIR = "restrictive"


@dataclass(frozen=True)
class WeightMatrix:
    """|V_G| x |V_H| weight matrix in a tagged domain.

    For the restrictive domain each entry is a pair (cardinality target,
    list bit); cardinality targets are per target vertex and therefore
    constant along each column, kept separately in ``column_targets`` so
    they survive an empty source side.
    """

    domain: str
    n_source: int
    n_target: int
    entries: tuple
    column_targets: tuple = None

    @staticmethod
    def unused(n_source=0, n_target=0):
        return WeightMatrix(UNUSED, n_source, n_target, ())

    @staticmethod
    def bits(rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        for row in rows:
            for x in row:
                if x not in (0, 1):
                    raise WeightDomainError("bit entries must be 0 or 1")
        return WeightMatrix(BITS, len(rows), len(rows[0]) if rows else 0,
                            rows)

    @staticmethod
    def rationals(rows, nonneg=False):
        out = []
        for row in rows:
            conv = []
            for x in row:
                x = x if x == INF else Fraction(x)
                if nonneg and x != INF and x < 0:
                    raise WeightDomainError("weights must be nonnegative")
                conv.append(x)
            out.append(tuple(conv))
        domain = EXT_RATIONAL_NONNEG if nonneg else EXT_RATIONAL
        return WeightMatrix(domain, len(out), len(out[0]) if out else 0,
                            tuple(out))

    @staticmethod
    def restrictive(column_targets, bit_rows):
        targets = tuple(t if t == INF else int(t) for t in column_targets)
        for t in targets:
            if t != INF and t < 0:
                raise WeightDomainError("cardinality targets must be >= 0")
        rows = tuple(tuple(int(x) for x in row) for row in bit_rows)
        for row in rows:
            if len(row) != len(targets):
                raise WeightDomainError("bit row width mismatch")
            for x in row:
                if x not in (0, 1):
                    raise WeightDomainError("list bits must be 0 or 1")
        return WeightMatrix(RESTRICTIVE_PAIR, len(rows), len(targets), rows,
                            targets)

    def bit(self, u, v):
        return self.entries[u][v]

    def weight(self, u, v):
        return self.entries[u][v]


@dataclass(frozen=True)
class PreMorphismSpec:
    """A semiring plus singleton/set evaluators and capability flags."""

    name: str
    semiring: SemiringSpec
    weight_domain: str
    strong: bool
    corestriction_independent: bool
    _singleton: object
    _omega_set: object

    @property
    def uses_weights(self):
        return self.weight_domain != UNUSED

    def check_weights(self, W):
        if not self.uses_weights:
            return
        if W is None or W.domain != self.weight_domain:
            got = None if W is None else W.domain
            raise WeightDomainError(
                f"{self.name} needs weights in domain {self.weight_domain!r},"
                f" got {got!r}")


def singleton_value(pm, W, S, a):
    """Value of the one-element set holding the constant function S -> {a}."""
    pm.check_weights(W)
    return pm._singleton(W, frozenset(S), a)


def omega_of_set(pm, W, S, T, F):
    """Set-level evaluation on an explicit set of functions S -> T.

    The codomain ``T`` matters for the restrictive and minweight
    pre-morphisms, whose definitions quantify over the codomain rather
    than the image.
    """
    pm.check_weights(W)
    S, T = frozenset(S), frozenset(T)
    F = list(F)
    for f in F:
        if set(f) != S or any(v not in T for v in f.values()):
            raise ValueError("function not total on S with range in T")
    return pm._omega_set(W, S, T, F)


def sr_add(pm, x, y):
    return pm.semiring.add(x, y)


def sr_mul(pm, x, y):
    return pm.semiring.mul(x, y)


def _list_ok(W, f):
    return all(W.bit(u, v) == 1 for u, v in f.items())


def _cost_of(W, f):
    total = Fraction(0)
    for u, v in f.items():
        w = W.weight(u, v)
        if w == INF:
            return INF
        total += w
    return total


def _weight_of(W, T, f):
    # Sum over codomain vertices of the max weight of their preimage,
    # with max over the empty set being 0.
    total = Fraction(0)
    for v in T:
        best = Fraction(0)
        for u, img in f.items():
            if img == v:
                w = W.weight(u, v)
                if w == INF:
                    return INF
                if w > best:
                    best = w
        total += best
    return total


def _restrictive_ok(W, S, T, f):
    if any(W.bit(u, v) != 1 for u, v in f.items()):
        return False
    for v in T:
        target = W.column_targets[v]
        if target != INF and sum(1 for u in f if f[u] == v) != target:
            return False
    return True


def _min_and_ties(values):
    best, ties = INF, 0
    for m in values:
        if m < best:
            best, ties = m, 1
        elif m == best and m != INF:
            ties += 1
    return (best, ties) if best != INF else (INF, 0)


def _make_catalog():
    def indicator_single(W, S, a):
        return True

    def indicator_set(W, S, T, F):
        return bool(F)

    def list_single(W, S, a):
        return all(W.bit(u, a) == 1 for u in S)

    def list_set(W, S, T, F):
        return any(_list_ok(W, f) for f in F)

    def count_single(W, S, a):
        return 1

    def count_set(W, S, T, F):
        return len(F)

    def count_list_single(W, S, a):
        return 1 if all(W.bit(u, a) == 1 for u in S) else 0

    def count_list_set(W, S, T, F):
        return sum(1 for f in F if _list_ok(W, f))

    def mincost_single(W, S, a):
        total = Fraction(0)
        for u in S:
            w = W.weight(u, a)
            if w == INF:
                return (INF, 0)
            total += w
        return (total, 1)

    def mincost_set(W, S, T, F):
        return _min_and_ties(_cost_of(W, f) for f in F)

    def minweight_single(W, S, a):
        best = Fraction(0)
        for u in S:
            w = W.weight(u, a)
            if w == INF:
                return (INF, 0)
            if w > best:
                best = w
        return (best, 1)

    def minweight_set(W, S, T, F):
        return _min_and_ties(_weight_of(W, T, f) for f in F)

    def restrictive_single(W, S, a):
        target = W.column_targets[a]
        if target != INF and target != len(S):
            return 0
        return 1 if all(W.bit(u, a) == 1 for u in S) else 0

    def restrictive_set(W, S, T, F):
        return sum(1 for f in F if _restrictive_ok(W, S, T, f))

    return (
        PreMorphismSpec("indicator", BOOL, UNUSED, True, True,
                        indicator_single, indicator_set),
        PreMorphismSpec("list", BOOL, BITS, True, True,
                        list_single, list_set),
        PreMorphismSpec("count", NAT, UNUSED, True, True,
                        count_single, count_set),
        PreMorphismSpec("count_list", NAT, BITS, True, True,
                        count_list_single, count_list_set),
        PreMorphismSpec("mincost", MIN_PAIR, EXT_RATIONAL, True, True,
                        mincost_single, mincost_set),
        # Joining two functions into the same target vertex makes the
        # per-vertex max non-multiplicative, so minweight is not strong.
        PreMorphismSpec("minweight", MIN_PAIR, EXT_RATIONAL_NONNEG, False,
                        True, minweight_single, minweight_set),
        # A finite cardinality target on an unused codomain vertex changes
        # the value, so this one is not corestriction independent either.
        PreMorphismSpec("restrictive_list_count", NAT, RESTRICTIVE_PAIR,
                        False, False, restrictive_single, restrictive_set),
    )


_CATALOG = _make_catalog()
_BY_NAME = {pm.name: pm for pm in _CATALOG}
_BY_NAME["restrictive"] = _BY_NAME["restrictive_list_count"]


def premorphism_catalog():
    return list(_CATALOG)


def premorphism(name):
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown pre-morphism {name!r}; choose from "
                       f"{sorted(pm.name for pm in _CATALOG)}") from None


def format_value(value):
    """Tagged one-line text form of a semiring value."""
    if isinstance(value, bool):
        return f"bool:{1 if value else 0}"
    if isinstance(value, int):
        return f"nat:{value}"
    m, c = value
    cost = "inf" if m == INF else str(Fraction(m))
    return f"pair:{cost},{c}"


def parse_value(text):
    tag, _, body = text.strip().partition(":")
    if tag == "bool":
        return body == "1"
    if tag == "nat":
        return int(body)
    if tag == "pair":
        cost, count = body.split(",")
        m = INF if cost == "inf" else Fraction(cost)
        return (m, int(count))
    raise ValueError(f"unknown value tag {tag!r}")
