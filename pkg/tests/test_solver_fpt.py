import random

import pytest

from ctwcsp import (HOM, CapabilityError, EdgeLabelledGraph, WeightMatrix,
                    ctww_exact, premorphism, premorphism_catalog,
                    solve_brute, solve_fine, solve_fpt, validate_sequence)

from helpers import clique, cycle, random_graph, random_relation, \
    weights_for


def _seq(G):
    return ctww_exact(G)[1]


def test_count_example():
    K3 = clique(3)
    seq = validate_sequence(K3, [(0, 1), (0, 2)])
    assert seq.width == 1
    assert solve_fpt(K3, seq, K3, HOM, premorphism("count")).value == 6


def test_single_vertex_instance():
    G = EdgeLabelledGraph(1, 2, [[0]])
    seq = validate_sequence(G, [])
    assert solve_fpt(G, seq, clique(3), HOM, premorphism("count")).value == 3


def test_zero_vertex_instance_short_circuits():
    G = EdgeLabelledGraph(0, 2, [])
    run = solve_fpt(G, validate_sequence(G, []), clique(3), HOM,
                    premorphism("count"))
    assert run.value == 1 and run.op_count == 0


def test_count_list_example():
    # vertex 0 of G forbidden on colors 0 and 1 of K_3
    W = WeightMatrix.bits([[0, 0, 1], [1, 1, 1]])
    G = clique(2)
    run = solve_fpt(G, _seq(G), clique(3), HOM,
                    premorphism("count_list"), W)
    assert run.value == 2


def test_ineligible_premorphisms_rejected():
    G = clique(2)
    W = WeightMatrix.rationals([[1, 1, 1], [1, 1, 1]], nonneg=True)
    with pytest.raises(CapabilityError) as info:
        solve_fpt(G, _seq(G), clique(3), HOM, premorphism("minweight"), W)
    assert "strong" in str(info.value)
    Wr = WeightMatrix.restrictive([1, 1, 1], [[1, 1, 1], [1, 1, 1]])
    with pytest.raises(CapabilityError):
        solve_fpt(G, _seq(G), clique(3), HOM, premorphism("restrictive"),
                  Wr)


def test_eligible_premorphisms_match_brute_force():
    rng = random.Random(60)
    for trial in range(25):
        G = random_graph(rng, rng.randint(1, 4))
        H = random_graph(rng, rng.randint(1, 4))
        R = random_relation(rng)
        seq = _seq(G)
        for pm in premorphism_catalog():
            if not (pm.strong and pm.corestriction_independent):
                continue
            W = weights_for(pm, G.n, H.n, seed=trial)
            assert solve_fpt(G, seq, H, R, pm, W).value == \
                solve_brute(G, H, R, pm, W), pm.name


def test_matches_fine_solver():
    rng = random.Random(61)
    count = premorphism("count")
    for _ in range(15):
        G = random_graph(rng, rng.randint(1, 4))
        H = random_graph(rng, rng.randint(1, 4))
        R = random_relation(rng)
        a = solve_fpt(G, _seq(G), H, R, count).value
        b = solve_fine(G, H, R, ctww_exact(H)[1], count).value
        assert a == b


def test_answer_independent_of_sequence():
    rng = random.Random(62)
    count = premorphism("count")
    C5, K3 = cycle(5), clique(3)
    seq_a = validate_sequence(C5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    seq_b = validate_sequence(C5, [(1, 2), (3, 4), (0, 1), (0, 3)])
    va = solve_fpt(C5, seq_a, K3, HOM, count)
    vb = solve_fpt(C5, seq_b, K3, HOM, count)
    assert va.value == vb.value == solve_brute(C5, K3, HOM, count, None)


def test_op_counter_canonical():
    # cograph width-1 sequences against K_3: each step sees the two merged
    # classes only, so every step contributes (2^3-1)^2 candidates
    count = premorphism("count")
    K4 = clique(4)
    seq = validate_sequence(K4, [(0, 1), (0, 2), (0, 3)])
    run = solve_fpt(K4, seq, clique(3), HOM, count)
    assert run.op_count == 3 * 7 ** 2
    run2 = solve_fpt(K4, seq, clique(3), HOM, count)
    assert run2.op_count == run.op_count and run2.value == run.value
