"""Edge-labelled graphs, contractions and contraction sequences.

An edge-labelled graph assigns a label to every ordered pair of vertices,
diagonal included.  Contracting a vertex partition keeps a pair label when
it is uniform over the underlying pairs and replaces it by the sentinel
label ``E`` otherwise.  The component width of a contraction sequence is
the largest E-connected component ever formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Sentinel label marking a non-uniform contracted pair.  Never a member of
# any graph alphabet; alphabet labels are 0..alphabet_size-1.
E = -1


class InvalidPartitionError(ValueError):
    pass


class SequenceValidationError(ValueError):
    """Malformed contraction sequence; carries the failing step index."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class GraphTooLargeError(ValueError):
    pass


class EdgeLabelledGraph:
    """Immutable edge-labelled graph with a dense label matrix.

    ``labels[u][v]`` is the label of the ordered pair (u, v); the diagonal
    is meaningful.  Entries are in [0, alphabet_size) or equal to ``E``
    when ``e_free`` is false.
    """

    __slots__ = ("n", "alphabet_size", "labels", "e_free")

    def __init__(self, n, alphabet_size, labels, e_free=True):
        labels = tuple(tuple(row) for row in labels)
        if n < 0:
            raise ValueError("negative vertex count")
        if len(labels) != n or any(len(row) != n for row in labels):
            raise ValueError("label matrix must be n x n")
        for u, row in enumerate(labels):
            for v, x in enumerate(row):
                if x == E:
                    if e_free:
                        raise ValueError(
                            f"E label at ({u},{v}) in a graph flagged e-free")
                elif not 0 <= x < alphabet_size:
                    raise ValueError(f"label {x} at ({u},{v}) out of range")
        self.n = n
        self.alphabet_size = alphabet_size
        self.labels = labels
        self.e_free = e_free

    def label(self, u, v):
        return self.labels[u][v]

    def __eq__(self, other):
        if not isinstance(other, EdgeLabelledGraph):
            return NotImplemented
        return (self.n, self.alphabet_size, self.labels, self.e_free) == (
            other.n, other.alphabet_size, other.labels, other.e_free)

    def __hash__(self):
        return hash((self.n, self.alphabet_size, self.labels, self.e_free))

    def __repr__(self):
        return (f"EdgeLabelledGraph(n={self.n}, "
                f"alphabet_size={self.alphabet_size}, e_free={self.e_free})")


def from_adjacency(adj):
    """Embed a plain graph (0/1 adjacency rows) as a 2-letter graph."""
    n = len(adj)
    return EdgeLabelledGraph(n, 2, [[1 if adj[u][v] else 0 for v in range(n)]
                                    for u in range(n)])


@dataclass(frozen=True)
class VertexPartition:
    """Proper partition of [n]; parts sorted by their minimum element."""

    n: int
    parts: tuple

    @staticmethod
    def of(n, parts):
        norm = tuple(sorted((tuple(sorted(p)) for p in parts),
                            key=lambda p: p[0] if p else -1))
        seen = set()
        for p in norm:
            if not p:
                raise InvalidPartitionError("empty part")
            for v in p:
                if v in seen:
                    raise InvalidPartitionError(f"vertex {v} in two parts")
                seen.add(v)
        if seen != set(range(n)):
            raise InvalidPartitionError("parts do not cover the vertex set")
        return VertexPartition(n, norm)

    @staticmethod
    def singletons(n):
        return VertexPartition(n, tuple((v,) for v in range(n)))

    def representatives(self):
        return tuple(p[0] for p in self.parts)

    def merge(self, rep_a, rep_b):
        """Merge the two parts named by these representatives."""
        if rep_a == rep_b:
            raise InvalidPartitionError("cannot merge a part with itself")
        by_rep = {p[0]: p for p in self.parts}
        if rep_a not in by_rep or rep_b not in by_rep:
            missing = rep_a if rep_a not in by_rep else rep_b
            raise InvalidPartitionError(f"unknown representative {missing}")
        merged = tuple(sorted(by_rep[rep_a] + by_rep[rep_b]))
        rest = [p for p in self.parts if p[0] not in (rep_a, rep_b)]
        return VertexPartition(self.n, tuple(sorted(rest + [merged])))


def contract(G, partition):
    """Contract G relative to a proper partition of its vertices.

    The label between two parts is the common label of all underlying
    ordered pairs when it is uniform, and ``E`` otherwise; the diagonal
    follows the same rule over the part's own pairs.
    """
    if not isinstance(partition, VertexPartition):
        partition = VertexPartition.of(G.n, partition)
    elif partition.n != G.n:
        raise InvalidPartitionError("partition size does not match graph")
    parts = partition.parts
    m = len(parts)
    lab = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            it = iter((u, v) for u in parts[i] for v in parts[j])
            u0, v0 = next(it)
            x = G.labels[u0][v0]
            for u, v in it:
                if G.labels[u][v] != x:
                    x = E
                    break
            lab[i][j] = x
    return EdgeLabelledGraph(m, G.alphabet_size, lab, e_free=False)


def e_components(G):
    """Connected components of the symmetric graph of E-labelled pairs.

    An E self-label does not connect a vertex to anything.  Returns a
    sorted list of sorted vertex tuples (a proper partition of V).
    """
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(G.n):
        for v in range(u + 1, G.n):
            if G.labels[u][v] == E or G.labels[v][u] == E:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)
    comps = {}
    for v in range(G.n):
        comps.setdefault(find(v), []).append(v)
    return sorted(tuple(c) for c in comps.values())


def e_components_bfs(G):
    """BFS reference for :func:`e_components`; used as a cross-check."""
    adj = [[] for _ in range(G.n)]
    for u in range(G.n):
        for v in range(G.n):
            if u != v and (G.labels[u][v] == E or G.labels[v][u] == E):
                adj[u].append(v)
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        queue, comp = [s], []
        seen[s] = True
        while queue:
            u = queue.pop()
            comp.append(u)
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


@dataclass(frozen=True)
class ContractionStep:
    """One contracted graph of a validated sequence.

    ``partition`` orders parts by minimum original vertex id; ``graph`` is
    the contraction of the base relative to it, with vertex i standing for
    ``partition.parts[i]``.  ``components`` lists e-components as tuples of
    part representatives.
    """

    merge: tuple
    partition: VertexPartition
    graph: EdgeLabelledGraph
    components: tuple


@dataclass(frozen=True)
class ContractionSequence:
    """Validated merge list with all contracted graphs cached."""

    base: EdgeLabelledGraph
    merges: tuple
    steps: tuple = field(repr=False)
    width: int = 1

    def __len__(self):
        return len(self.merges)


def validate_sequence(H, merges):
    """Check a raw merge list against H and cache the step data.

    Each step must name two distinct current part representatives
    (min-original-id naming).  Raises :class:`SequenceValidationError`
    with the failing 0-based step index.
    """
    merges = [tuple(m) for m in merges]
    if len(merges) != max(H.n - 1, 0):
        raise SequenceValidationError(
            f"expected {max(H.n - 1, 0)} merges, got {len(merges)}")
    part = VertexPartition.singletons(H.n)
    steps = []
    width = 1
    for k, (a, b) in enumerate(merges):
        try:
            part = part.merge(a, b)
        except InvalidPartitionError as exc:
            raise SequenceValidationError(f"step {k}: {exc}", step=k) from exc
        graph = contract(H, part)
        comps = e_components(graph)
        reps = part.representatives()
        comp_reps = tuple(tuple(reps[i] for i in c) for c in comps)
        width = max(width, max(len(c) for c in comps))
        steps.append(ContractionStep((a, b), part, graph, comp_reps))
    return ContractionSequence(H, tuple(merges), tuple(steps), width)


def component_width(seq):
    """Maximum e-component size over all contracted graphs of the sequence."""
    return seq.width


def ctww_exact(H, budget=None, max_vertices=13, deterministic=True):
    """Exact component twin-width by iterative-deepening search.

    Returns ``(width, sequence)`` with an optimal contraction sequence, or
    ``None`` when ``budget`` is given and no sequence of width <= budget
    exists.  Search states are partitions, memoized per width bound.
    ``deterministic`` fixes the merge tie-break (sorted pair order).
    """
    if not H.e_free:
        raise ValueError("ctww is defined for e-free graphs")
    if H.n > max_vertices:
        raise GraphTooLargeError(
            f"exact search capped at {max_vertices} vertices (got {H.n})")
    if H.n <= 1:
        return 1, validate_sequence(H, [])

    # partition (tuple of parts) -> (contracted graph, max e-component size)
    graph_cache = {}

    def info(part):
        key = part.parts
        got = graph_cache.get(key)
        if got is None:
            g = contract(H, part)
            got = (g, max(len(c) for c in e_components(g)))
            graph_cache[key] = got
        return got

    def candidate_merges(part):
        reps = part.representatives()
        pairs = [(reps[i], reps[j]) for i in range(len(reps))
                 for j in range(i + 1, len(reps))]
        return pairs if deterministic else pairs

    def search(part, bound, dead):
        if len(part.parts) == 1:
            return []
        if part.parts in dead:
            return None
        for a, b in candidate_merges(part):
            nxt = part.merge(a, b)
            _, comp = info(nxt)
            if comp > bound:
                continue
            rest = search(nxt, bound, dead)
            if rest is not None:
                return [(a, b)] + rest
        dead.add(part.parts)
        return None

    start = VertexPartition.singletons(H.n)
    upper = H.n if budget is None else min(budget, H.n)
    for bound in range(1, upper + 1):
        merges = search(start, bound, set())
        if merges is not None:
            return bound, validate_sequence(H, merges)
    return None
