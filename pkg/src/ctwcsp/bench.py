"""Benchmark harness: run plans to CSV reports.

A plan file holds one run per non-empty, non-``#`` line, written as
``key=value`` tokens::

    algo=fine pm=count G=erdos_renyi:6 H=cycle:5 seed=3
    algo=fpt  pm=count G=cograph_random:10 H=clique:3 seed=1 wseed=7

Keys: ``algo`` (fine|fpt|brute), ``pm`` (catalog name), ``G`` and ``H``
(``family:n`` or ``family:n:p``), ``seed`` (graph randomness, default 0),
``wseed`` (weight randomness, defaults to ``seed``), ``rel`` (only
``hom`` for 2-letter families).

The report CSV has one row per plan line, in plan order.  The primary
scaling observable is the operation counter, which is machine
independent; wall time is reported for orientation only.  Runs execute
concurrently but rows are emitted in plan-index order.  A run hitting a
capability error still produces its row, with the error recorded.
"""

from __future__ import annotations

import csv
import io
import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .families import family_with_sequence
from .graphs import ctww_exact
from .morphisms import HOM
from .oracle import solve_brute
from .semirings import (BITS, EXT_RATIONAL, EXT_RATIONAL_NONNEG, INF,
                        RESTRICTIVE_PAIR, UNUSED, CapabilityError,
                        WeightMatrix, format_value, premorphism)
from .solver_fine import solve_fine
from .solver_fpt import solve_fpt

CSV_FIELDS = ("index", "algo", "pm", "G", "H", "seed", "wseed",
              "value", "op_count", "wall_time", "seq_width", "error")


def random_weights(domain, n_source, n_target, rng):
    """A random weight matrix in the given domain (UNUSED allowed)."""
    if domain == UNUSED:
        return WeightMatrix.unused(n_source, n_target)
    if n_source == 0 and domain != RESTRICTIVE_PAIR:
        # Empty matrices still carry their column count.
        return WeightMatrix(domain, 0, n_target, ())
    if domain == BITS:
        return WeightMatrix.bits(
            [[rng.randint(0, 1) for _ in range(n_target)]
             for _ in range(n_source)])
    if domain in (EXT_RATIONAL, EXT_RATIONAL_NONNEG):
        lo = 0 if domain == EXT_RATIONAL_NONNEG else -4

        def entry():
            if rng.random() < 0.1:
                return INF
            return Fraction(rng.randint(lo, 8), rng.randint(1, 4))

        return WeightMatrix.rationals(
            [[entry() for _ in range(n_target)] for _ in range(n_source)],
            nonneg=domain == EXT_RATIONAL_NONNEG)
    if domain == RESTRICTIVE_PAIR:
        targets = [INF if rng.random() < 0.5 else rng.randint(0, n_source)
                   for _ in range(n_target)]
        bits = [[1 if rng.random() < 0.8 else 0 for _ in range(n_target)]
                for _ in range(n_source)]
        return WeightMatrix.restrictive(targets, bits)
    raise ValueError(f"unknown weight domain {domain!r}")


class PlanError(ValueError):
    pass


def _parse_graph_spec(spec, seed):
    fields = spec.split(":")
    name = fields[0]
    try:
        n = int(fields[1])
        p = float(fields[2]) if len(fields) > 2 else 0.5
    except (IndexError, ValueError):
        raise PlanError(f"bad graph spec {spec!r}") from None
    return family_with_sequence(name, n, seed=seed, p=p)


def parse_plan(text):
    runs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        spec = {}
        for token in line.split():
            key, eq, value = token.partition("=")
            if not eq:
                raise PlanError(f"line {lineno}: token {token!r} "
                                "is not key=value")
            spec[key] = value
        for key in ("algo", "pm", "G", "H"):
            if key not in spec:
                raise PlanError(f"line {lineno}: missing {key!r}")
        if spec["algo"] not in ("fine", "fpt", "brute"):
            raise PlanError(f"line {lineno}: unknown algo {spec['algo']!r}")
        if spec.get("rel", "hom") != "hom":
            raise PlanError(f"line {lineno}: only rel=hom is supported "
                            "in plans")
        runs.append(spec)
    return runs


def _sequence_for(graph, seq):
    if seq is not None:
        return seq
    return ctww_exact(graph)[1]


def _execute(index, spec):
    row = {"index": index, "algo": spec["algo"], "pm": spec["pm"],
           "G": spec["G"], "H": spec["H"],
           "seed": spec.get("seed", "0"),
           "wseed": spec.get("wseed", spec.get("seed", "0")),
           "value": "", "op_count": "", "wall_time": "", "seq_width": "",
           "error": ""}
    try:
        seed = int(row["seed"])
        pm = premorphism(spec["pm"])
        G, seqG = _parse_graph_spec(spec["G"], seed)
        H, seqH = _parse_graph_spec(spec["H"], seed + 1)
        rng = random.Random(int(row["wseed"]))
        W = random_weights(pm.weight_domain, G.n, H.n, rng) \
            if pm.uses_weights else None
        start = time.perf_counter()
        if spec["algo"] == "fine":
            seq = _sequence_for(H, seqH)
            run = solve_fine(G, H, HOM, seq, pm, W)
            row["seq_width"] = seq.width
            row["op_count"] = run.op_count
            value = run.value
        elif spec["algo"] == "fpt":
            seq = _sequence_for(G, seqG)
            run = solve_fpt(G, seq, H, HOM, pm, W)
            row["seq_width"] = seq.width
            row["op_count"] = run.op_count
            value = run.value
        else:
            value = solve_brute(G, H, HOM, pm, W)
        row["wall_time"] = f"{time.perf_counter() - start:.6f}"
        row["value"] = format_value(value)
    except CapabilityError as exc:
        row["error"] = f"capability: {exc}"
    except (ValueError, KeyError) as exc:
        row["error"] = str(exc)
    return row


def run_plan(text, max_workers=4):
    """Execute a plan, returning report rows in plan order."""
    runs = parse_plan(text)
    if not runs:
        return []
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        rows = list(pool.map(_execute, range(len(runs)), runs))
    return rows


def report_csv(rows):
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=CSV_FIELDS)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return out.getvalue()


def bench(plan_text, max_workers=4):
    """Plan text in, CSV text out."""
    return report_csv(run_plan(plan_text, max_workers=max_workers))
