import random

import pytest

from ctwcsp import (HOM, EdgeLabelledGraph, EnumerationCapError,
                    MorphismRelation, all_maps, check_join_lemma,
                    enumerate_restricted, is_morphism, premorphism,
                    solve_brute)

from helpers import clique, cycle, random_graph, random_relation


def test_solve_brute_examples():
    count = premorphism("count")
    assert solve_brute(clique(3), clique(3), HOM, count, None) == 6
    assert solve_brute(clique(2), cycle(5), HOM, count, None) == 10
    assert solve_brute(clique(2), clique(2), HOM, count, None) == 2
    empty_rel = MorphismRelation.of(2, 2, [])
    assert solve_brute(clique(2), clique(3), empty_rel, count, None) == 0
    empty_g = EdgeLabelledGraph(0, 2, [])
    assert solve_brute(empty_g, clique(3), empty_rel, count, None) == 1


def test_all_maps_sanity():
    maps = list(all_maps(range(2), range(3)))
    assert len(maps) == 9
    assert len({tuple(sorted(m.items())) for m in maps}) == 9
    assert list(all_maps([], range(3))) == [{}]
    rng = random.Random(30)
    G, H = random_graph(rng, 3), random_graph(rng, 3)
    R = random_relation(rng)
    sols = [f for f in all_maps(range(3), range(3))
            if is_morphism(G, H, R, f)]
    # filter idempotence
    assert [f for f in sols if is_morphism(G, H, R, f)] == sols


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        list(all_maps(range(10), range(10), cap=100))
    with pytest.raises(EnumerationCapError):
        solve_brute(clique(5), clique(5), HOM, premorphism("count"),
                    None, cap=100)


def test_enumerate_restricted_examples():
    K2, C5 = clique(2), cycle(5)
    assert enumerate_restricted(K2, C5, HOM, ((), ()), ((0,), (1,))) == [{}]
    # infeasible: both K2 endpoints into one loopless vertex
    assert enumerate_restricted(K2, C5, HOM, ((0, 1),), ((0,),)) == []
    # exact image can be empty while containment is not
    one = EdgeLabelledGraph(1, 2, [[0]])
    contain = enumerate_restricted(one, C5, HOM, ((0,),), ((0, 1),))
    exact = enumerate_restricted(one, C5, HOM, ((0,),), ((0, 1),),
                                 exact_image=True)
    assert len(contain) == 2 and exact == []


def test_check_join_lemma_small():
    K2, C5 = clique(2), cycle(5)
    # single group is trivially true
    assert check_join_lemma(K2, C5, HOM, ((0,), (1,)), ((0,), (1,)),
                            [[0, 1]])
    # two singleton groups with a uniform cross label, feasible branch
    assert check_join_lemma(K2, C5, HOM, ((0,), (1,)), ((0,), (1,)),
                            [[0], [1]])
    assert check_join_lemma(K2, C5, HOM, ((0,), (1,)), ((0,), (1,)),
                            [[0], [1]], exact_image=True)
    # infeasible branch: edge must land on a non-edge of the template
    assert check_join_lemma(K2, C5, HOM, ((0,), (1,)), ((0,), (2,)),
                            [[0], [1]])
    # non-uniform cross pairs are rejected as a misuse
    with pytest.raises(ValueError):
        check_join_lemma(K2, C5, HOM, ((0,), (1,)), ((0, 1), (2, 3)),
                         [[0], [1]])
