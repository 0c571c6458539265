"""Acceptance suite: one test per criterion, each recording a summary
line that the terminal reporter prints after the run."""

import itertools
import math
import random
import time

from ctwcsp import (HOM, CapabilityError, CspInstance, check_join_lemma,
                    csp_to_morphism, ctww_exact, enumerate_restricted,
                    is_morphism, premorphism, premorphism_catalog,
                    solve_brute, solve_fine, solve_fpt, validate_sequence)
from ctwcsp.families import family, family_with_sequence
from ctwcsp.oracle import all_maps, _function_key
from ctwcsp.semirings import omega_of_set

from conftest import record_acceptance
from helpers import (all_simple_graphs_upto_iso, clique, cycle, path,
                     random_graph, random_relation, weights_for)
import test_reductions
import test_semirings


def test_criterion_1_oracle_equivalence():
    start = time.perf_counter()
    graphs = all_simple_graphs_upto_iso(4)
    assert len(graphs) == 19
    templates = [clique(3), cycle(5), path(3)]
    rng = random.Random(99)
    relations = [HOM] + [random_relation(rng) for _ in range(10)]
    template_seqs = [ctww_exact(H)[1] for H in templates]
    checked = 0
    for G in graphs:
        seq_g = ctww_exact(G)[1]
        for H, seq_h in zip(templates, template_seqs):
            for R in relations:
                sols = [f for f in all_maps(range(G.n), range(H.n))
                        if is_morphism(G, H, R, f)]
                for pm in premorphism_catalog():
                    seeds = range(20) if pm.uses_weights else (None,)
                    for s in seeds:
                        W = weights_for(pm, G.n, H.n, s)
                        ref = omega_of_set(pm, W, range(G.n), range(H.n),
                                           sols)
                        assert solve_fine(G, H, R, seq_h, pm, W).value == \
                            ref, (pm.name, G.n)
                        checked += 1
                        if pm.strong and pm.corestriction_independent \
                                and G.n:
                            assert solve_fpt(G, seq_g, H, R, pm, W).value \
                                == ref, (pm.name, G.n)
                            checked += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 300
    record_acceptance(1, "oracle equivalence", True,
                      f"{checked} solves, {elapsed:.0f}s")


def test_criterion_2_named_widths():
    start = time.perf_counter()
    for q in range(3, 7):
        assert ctww_exact(clique(q))[0] == 1
    for n in range(2, 9):
        for seed in range(4):
            g, merges = family("cograph_random", n, seed=seed)
            assert validate_sequence(g, merges).width == 1
            assert ctww_exact(g, budget=1) is not None
    for n in (5, 6, 7):
        assert ctww_exact(cycle(n))[0] == 3
    assert ctww_exact(cycle(5), budget=2) is None
    elapsed = time.perf_counter() - start
    assert elapsed < 120
    record_acceptance(2, "named widths", True, f"{elapsed:.0f}s")


def test_criterion_3_concrete_counts():
    count = premorphism("count")

    def all_three(G, H):
        ref = solve_brute(G, H, HOM, count, None)
        assert solve_fine(G, H, HOM, ctww_exact(H)[1], count).value == ref
        assert solve_fpt(G, ctww_exact(G)[1], H, HOM, count).value == ref
        return ref

    assert all_three(clique(3), clique(3)) == 6
    assert all_three(clique(2), cycle(5)) == 10
    inst = CspInstance(2, (), 3, ())
    H, R, G, _ = csp_to_morphism(inst)
    ref = solve_brute(G, H, R, count, None)
    assert ref == 8
    assert solve_fine(G, H, R, ctww_exact(H)[1], count).value == 8
    assert solve_fpt(G, ctww_exact(G)[1], H, R, count).value == 8
    record_acceptance(3, "concrete counts", True)


def test_criterion_4_fine_scaling():
    count = premorphism("count")
    C5, merges = family("cycle", 5)
    seq = validate_sequence(C5, merges)
    ratios = []
    for n in range(6, 13):
        G, _ = family("erdos_renyi", n, seed=n)
        run = solve_fine(G, C5, HOM, seq, count)
        ratios.append(run.op_count / (5 ** n * n ** 2))
    spread = max(ratios) / min(ratios)
    assert spread <= 10
    record_acceptance(4, "fine-grained scaling", True,
                      f"normalized spread {spread:.2f}")


def test_criterion_5_fpt_scaling():
    count = premorphism("count")
    K3 = clique(3)
    points = []
    for n in range(4, 17):
        G, seq = family_with_sequence("cograph_random", n, seed=n)
        assert seq.width == 1
        run = solve_fpt(G, seq, K3, HOM, count)
        points.append((n, run.op_count))
    assert max(op / n ** 3 for n, op in points) <= 10
    # least-squares slope of log(op) against log(n)
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(op) for _, op in points]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / \
        sum((x - mx) ** 2 for x in xs)
    assert slope <= 3.5
    record_acceptance(5, "fpt scaling", True,
                      f"fitted exponent {slope:.2f}")


def test_criterion_6_axiom_suites():
    test_semirings.test_semiring_laws()
    test_semirings.test_union_axiom()
    test_semirings.test_join_axiom_disjoint_codomains()
    test_semirings.test_strong_join_axiom_overlapping_codomains()
    test_semirings.test_corestriction_independence()
    test_semirings.test_minweight_not_strong_regression()
    test_semirings.test_restrictive_not_corestriction_independent_regression()
    record_acceptance(6, "pre-morphism axiom suites", True)


def test_criterion_7_reduction_round_trips():
    test_reductions.test_round_trip_solution_sets_random()
    test_reductions.test_morphism_to_csp_round_trip_random()
    rng = random.Random(77)
    for trial in range(200):
        inst = test_reductions._random_instance(rng)
        H, R, G, _ = csp_to_morphism(inst)
        sols_csp = [f for f in all_maps(range(inst.num_vars),
                                        range(inst.domain_size))
                    if inst.is_solution(f)]
        sols_mor = [f for f in all_maps(range(G.n), range(H.n))
                    if is_morphism(G, H, R, f)]
        for pm in premorphism_catalog():
            W = weights_for(pm, G.n, H.n, seed=trial)
            assert omega_of_set(pm, W, range(G.n), range(H.n), sols_csp) \
                == omega_of_set(pm, W, range(G.n), range(H.n), sols_mor)
    record_acceptance(7, "reduction round-trips", True)


def _random_partition(rng, n, parts):
    out = [[] for _ in range(parts)]
    for v in range(n):
        out[rng.randrange(parts)].append(v)
    return [tuple(p) for p in out if p]


def test_criterion_8_lemma_checks():
    rng = random.Random(88)
    # containment variant: template-side parts grouped by e-components
    done = 0
    while done < 200:
        nH, nG = rng.randint(2, 5), rng.randint(1, 4)
        H, G = random_graph(rng, nH), random_graph(rng, nG)
        R = random_relation(rng)
        T = _random_partition(rng, nH, rng.randint(2, nH))
        if len(T) < 2:
            continue
        groups = _component_groups(H, T)
        if len(groups) < 2:
            continue
        S = _random_disjoint_subsets(rng, nG, len(T))
        assert check_join_lemma(G, H, R, S, T, groups)
        done += 1
    # exact-image variant: instance-side parts
    done = 0
    while done < 200:
        nG, nH = rng.randint(2, 4), rng.randint(1, 3)
        G, H = random_graph(rng, nG), random_graph(rng, nH)
        R = random_relation(rng)
        S = _random_partition(rng, nG, rng.randint(2, nG))
        if len(S) < 2:
            continue
        groups = _component_groups(G, S)
        if len(groups) < 2:
            continue
        T = tuple(tuple(sorted(rng.sample(range(nH),
                                          rng.randint(1, nH))))
                  for _ in S)
        assert check_join_lemma(G, H, R, S, T, groups, exact_image=True)
        done += 1
    # split identity, 200 random configurations
    done = 0
    while done < 200:
        nH, nG = rng.randint(2, 5), rng.randint(1, 4)
        H, G = random_graph(rng, nH), random_graph(rng, nG)
        R = random_relation(rng)
        pool = list(range(nH))
        rng.shuffle(pool)
        ka = rng.randint(1, nH - 1)
        kb = rng.randint(1, nH - ka)
        Tp, Tq = tuple(sorted(pool[:ka])), tuple(sorted(pool[ka:ka + kb]))
        T0 = tuple(sorted(Tp + Tq))
        S0 = tuple(u for u in range(nG) if rng.random() < 0.6)
        whole = enumerate_restricted(G, H, R, (S0,), (T0,))
        pieces = []
        for bits in itertools.product((0, 1), repeat=len(S0)):
            Sp = tuple(u for u, b in zip(S0, bits) if b == 0)
            Sq = tuple(u for u, b in zip(S0, bits) if b == 1)
            pieces.append(enumerate_restricted(G, H, R, (Sp, Sq),
                                               (Tp, Tq)))
        keys = [_function_key(f) for piece in pieces for f in piece]
        assert len(keys) == len(set(keys))  # disjoint union
        assert set(keys) == {_function_key(f) for f in whole}
        done += 1
    record_acceptance(8, "component-join and split identities", True)


def _component_groups(H, parts):
    """Indices of `parts` grouped by e-components of the contraction."""
    from ctwcsp import contract, e_components
    from ctwcsp.graphs import VertexPartition
    part = VertexPartition.of(H.n, parts)
    contracted = contract(H, part)
    order = {p: i for i, p in enumerate(part.parts)}
    reindex = [order[tuple(sorted(p))] for p in parts]
    groups = []
    for comp in e_components(contracted):
        groups.append([i for i in range(len(parts))
                       if reindex[i] in comp])
    return groups


def _random_disjoint_subsets(rng, n, count):
    pool = list(range(n))
    rng.shuffle(pool)
    out = []
    for _ in range(count):
        take = rng.randint(0, len(pool))
        out.append(tuple(sorted(pool[:take])))
        pool = pool[take:]
    return tuple(out)
