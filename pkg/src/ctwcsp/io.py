"""Text formats: ELG (graphs), REL (relations), SEQ (sequences), WT
(weight matrices), CSP (instances).

Every parser raises :class:`FormatError` with the offending line number;
emit(parse(text)) reproduces canonical files byte for byte.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import EdgeLabelledGraph
from .morphisms import MorphismRelation
from .reductions import CspInstance
from .semirings import (BITS, EXT_RATIONAL, EXT_RATIONAL_NONNEG, INF,
                        RESTRICTIVE_PAIR, UNUSED, WeightMatrix)


class FormatError(ValueError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class _Lines:
    def __init__(self, text):
        self.lines = text.splitlines()
        self.pos = 0

    def next(self, expect=None):
        while self.pos < len(self.lines):
            raw = self.lines[self.pos]
            self.pos += 1
            line = raw.strip()
            if line:
                if expect is not None and not line.startswith(expect):
                    raise FormatError(f"expected {expect!r}, got {line!r}",
                                      self.pos)
                return line
        raise FormatError("unexpected end of file", self.pos)

    @property
    def lineno(self):
        return self.pos


def _ints(line, count, lineno, what):
    fields = line.split()
    if len(fields) != count:
        raise FormatError(f"expected {count} {what}, got {len(fields)}",
                          lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"non-integer {what} in {line!r}", lineno) from None


def parse_elg(text):
    src = _Lines(text)
    if src.next() != "elg 1":
        raise FormatError("missing 'elg 1' header", src.lineno)
    n = _ints(src.next("vertices").split(None, 1)[1], 1, src.lineno,
              "vertex count")[0]
    k = _ints(src.next("labels").split(None, 1)[1], 1, src.lineno,
              "label count")[0]
    rows = []
    for i in range(n):
        row = _ints(src.next(), n, src.lineno, "labels")
        for j, x in enumerate(row):
            if not 0 <= x < k:
                raise FormatError(
                    f"label {x} at row {i} column {j} outside [0,{k})",
                    src.lineno)
        rows.append(row)
    return EdgeLabelledGraph(n, k, rows)


def emit_elg(G):
    if not G.e_free:
        raise ValueError("ELG files hold e-free graphs only")
    out = ["elg 1", f"vertices {G.n}", f"labels {G.alphabet_size}"]
    out += [" ".join(str(x) for x in row) for row in G.labels]
    return "\n".join(out) + "\n"


def parse_rel(text):
    src = _Lines(text)
    head = src.next()
    fields = head.split()
    if len(fields) != 4 or fields[0] != "rel" or fields[1] != "1":
        raise FormatError("missing 'rel 1 <|X_G|> <|X_H|>' header",
                          src.lineno)
    kg, kh = int(fields[2]), int(fields[3])
    pairs = []
    while True:
        try:
            line = src.next()
        except FormatError:
            break
        pairs.append(tuple(_ints(line, 2, src.lineno, "labels")))
    try:
        return MorphismRelation.of(kg, kh, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def emit_rel(R):
    out = [f"rel 1 {R.source_alphabet_size} {R.target_alphabet_size}"]
    out += [f"{x} {y}" for x, y in sorted(R.allowed)]
    return "\n".join(out) + "\n"


def parse_seq(text):
    src = _Lines(text)
    if src.next() != "seq 1":
        raise FormatError("missing 'seq 1' header", src.lineno)
    merges = []
    while True:
        try:
            line = src.next()
        except FormatError:
            break
        merges.append(tuple(_ints(line, 2, src.lineno, "representatives")))
    return merges


def emit_seq(merges):
    out = ["seq 1"] + [f"{a} {b}" for a, b in merges]
    return "\n".join(out) + "\n"


_WT_TAGS = {"unused": UNUSED, "bits": BITS, "extrational": EXT_RATIONAL,
            "extrational_nonneg": EXT_RATIONAL_NONNEG,
            "restrictive": RESTRICTIVE_PAIR}


def _parse_rational(token, lineno):
    if token == "inf":
        return INF
    try:
        return Fraction(token)
    except ValueError:
        raise FormatError(f"bad rational {token!r}", lineno) from None


def parse_wt(text):
    src = _Lines(text)
    head = src.next().split()
    if len(head) != 5 or head[0] != "wt" or head[1] != "1":
        raise FormatError("missing 'wt 1 <domain> <nG> <nH>' header",
                          src.lineno)
    tag, ng, nh = head[2], int(head[3]), int(head[4])
    if tag not in _WT_TAGS:
        raise FormatError(f"unknown weight domain {tag!r}", src.lineno)
    domain = _WT_TAGS[tag]
    if domain == UNUSED:
        return WeightMatrix.unused(ng, nh)
    if ng == 0 and domain != RESTRICTIVE_PAIR:
        return WeightMatrix(domain, 0, nh, ())
    rows = []
    for _ in range(ng):
        fields = src.next().split()
        if len(fields) != nh:
            raise FormatError(f"expected {nh} entries, got {len(fields)}",
                              src.lineno)
        rows.append(fields)
    if domain == BITS:
        return WeightMatrix.bits([[int(x) for x in row] for row in rows])
    if domain in (EXT_RATIONAL, EXT_RATIONAL_NONNEG):
        conv = [[_parse_rational(x, src.lineno) for x in row]
                for row in rows]
        return WeightMatrix.rationals(conv,
                                      nonneg=domain == EXT_RATIONAL_NONNEG)
    targets = [INF] * nh
    bit_rows = []
    for row in rows:
        bits = []
        for v, entry in enumerate(row):
            w1, _, w2 = entry.partition(":")
            t = INF if w1 == "inf" else int(w1)
            if targets[v] != INF and targets[v] != t and t != INF:
                raise FormatError(
                    f"cardinality target differs within column {v}")
            if t != INF:
                if targets[v] not in (INF, t):
                    raise FormatError(
                        f"cardinality target differs within column {v}")
                targets[v] = t
            bits.append(int(w2))
        bit_rows.append(bits)
    # Re-check column constancy strictly: every row must agree.
    for row in rows:
        for v, entry in enumerate(row):
            w1 = entry.partition(":")[0]
            t = INF if w1 == "inf" else int(w1)
            if t != targets[v]:
                raise FormatError(
                    f"cardinality target differs within column {v}")
    return WeightMatrix.restrictive(targets, bit_rows)


def _emit_rational(x):
    return "inf" if x == INF else str(Fraction(x))


def emit_wt(W):
    tag = next(t for t, d in _WT_TAGS.items() if d == W.domain)
    out = [f"wt 1 {tag} {W.n_source} {W.n_target}"]
    if W.domain == BITS:
        out += [" ".join(str(x) for x in row) for row in W.entries]
    elif W.domain in (EXT_RATIONAL, EXT_RATIONAL_NONNEG):
        out += [" ".join(_emit_rational(x) for x in row)
                for row in W.entries]
    elif W.domain == RESTRICTIVE_PAIR:
        if W.n_source == 0 and any(t != INF for t in W.column_targets):
            raise ValueError("restrictive cardinality targets cannot be "
                             "written without at least one source row")
        w1 = [_emit_rational(t) if t == INF else str(t)
              for t in W.column_targets]
        out += [" ".join(f"{w1[v]}:{row[v]}" for v in range(W.n_target))
                for row in W.entries]
    return "\n".join(out) + "\n"


def parse_csp(text):
    src = _Lines(text)
    if src.next() != "csp 1":
        raise FormatError("missing 'csp 1' header", src.lineno)
    d = _ints(src.next("domain").split(None, 1)[1], 1, src.lineno,
              "domain size")[0]
    relations = []
    num_vars = None
    constraints = []
    while True:
        try:
            line = src.next()
        except FormatError:
            break
        fields = line.split()
        if fields[0] == "relation":
            if len(fields) != 2:
                raise FormatError("relation needs exactly one name",
                                  src.lineno)
            name = fields[1]
            pairs = set()
            while True:
                inner = src.next()
                if inner == "end":
                    break
                pf = inner.split()
                if pf[0] != "pair" or len(pf) != 3:
                    raise FormatError(f"expected 'pair <a> <b>' or 'end', "
                                      f"got {inner!r}", src.lineno)
                pairs.add((int(pf[1]), int(pf[2])))
            relations.append((name, frozenset(pairs)))
        elif fields[0] == "variables":
            num_vars = int(fields[1])
        elif fields[0] == "constraint":
            if num_vars is None:
                raise FormatError("constraint before 'variables'",
                                  src.lineno)
            if len(fields) != 4:
                raise FormatError("expected 'constraint <name> <u> <v>'",
                                  src.lineno)
            constraints.append((fields[1], int(fields[2]), int(fields[3])))
        else:
            raise FormatError(f"unexpected line {line!r}", src.lineno)
    if num_vars is None:
        raise FormatError("missing 'variables' line")
    try:
        return CspInstance(d, tuple(relations), num_vars, tuple(constraints))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def emit_csp(inst):
    out = ["csp 1", f"domain {inst.domain_size}"]
    for name, pairs in inst.relations:
        out.append(f"relation {name}")
        out += [f"pair {a} {b}" for a, b in sorted(pairs)]
        out.append("end")
    out.append(f"variables {inst.num_vars}")
    out += [f"constraint {name} {u} {v}" for name, u, v in inst.constraints]
    return "\n".join(out) + "\n"
