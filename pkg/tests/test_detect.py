"""Claw / induced-cycle detection and the five-set classifier."""

import random
from itertools import combinations

import pytest

from cubeclaw.detect import (
    Claw,
    FiveSetKind,
    InducedCycle,
    check_witness,
    classify_five_set,
    find_claw,
    find_induced_cycle,
    find_theorem_witness,
    induced_degree,
    witness_to_text,
)
from cubeclaw.hypercube import VertexSet, adjacent
from oracles import claw_exists, classify_five, induced_cycle_exists, path_order_of_p5

C6_SET = VertexSet.from_members([1, 2, 3, 4, 5, 6], 3)
EVEN_WEIGHT_Q4 = VertexSet.from_members(
    [v for v in range(16) if bin(v).count("1") % 2 == 0], 4
)


def random_set(rng, n, density=0.5):
    mask = 0
    for v in range(1 << n):
        if rng.random() < density:
            mask |= 1 << v
    return VertexSet(n, mask)


def test_induced_degree_examples():
    assert induced_degree(VertexSet.full(3), 0) == 3
    assert induced_degree(VertexSet.from_members([0], 3), 0) == 0
    for v in C6_SET.members():
        assert induced_degree(C6_SET, v) == 2
    with pytest.raises(ValueError):
        induced_degree(C6_SET, 0)


def test_find_claw_examples():
    assert find_claw(VertexSet.full(3)) == Claw(0, (1, 2, 4))
    assert find_claw(C6_SET) is None
    assert find_claw(VertexSet.empty(3)) is None


def test_find_claw_returned_witness_is_valid():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.choice((3, 4, 5))
        s = random_set(rng, n)
        claw = find_claw(s)
        if claw is not None:
            assert check_witness(claw, s)
            assert claw.leaves == tuple(sorted(claw.leaves))


def test_find_claw_agrees_with_naive_four_subset_search():
    rng = random.Random(23)
    for _ in range(120):
        n = rng.choice((3, 4, 5))
        s = random_set(rng, n)
        assert (find_claw(s) is not None) == claw_exists(s.members(), n)


def test_find_induced_cycle_c6():
    cycle = find_induced_cycle(C6_SET, 6)
    assert cycle == InducedCycle((1, 3, 2, 6, 4, 5))
    assert check_witness(cycle, C6_SET)


def test_find_induced_cycle_absent_on_independent_set():
    assert find_induced_cycle(EVEN_WEIGHT_Q4, 8) is None


def test_find_induced_cycle_full_q4():
    cycle = find_induced_cycle(VertexSet.full(4), 8)
    assert cycle is not None
    assert check_witness(cycle, VertexSet.full(4))
    # deterministic
    assert find_induced_cycle(VertexSet.full(4), 8) == cycle


def test_find_induced_cycle_rejects_bad_lengths():
    with pytest.raises(ValueError):
        find_induced_cycle(C6_SET, 5)
    with pytest.raises(ValueError):
        find_induced_cycle(C6_SET, 2)
    with pytest.raises(ValueError):
        find_induced_cycle(C6_SET, 8)  # longer than the set


def test_cycle_normalization_and_parity():
    rng = random.Random(37)
    seen = 0
    for _ in range(200):
        n = rng.choice((3, 4, 5))
        s = random_set(rng, n)
        k = rng.choice((4, 6, 8))
        if k > len(s):
            continue
        cycle = find_induced_cycle(s, k)
        if cycle is None:
            continue
        seen += 1
        vs = cycle.vertices
        assert len(vs) == k and len(vs) % 2 == 0
        assert vs[0] == min(vs)  # starts at the least label
        assert vs[1] < vs[-1]  # lexicographically smaller direction
        for i, v in enumerate(vs):  # weight parity alternates around the cycle
            assert bin(v).count("1") % 2 != bin(vs[(i + 1) % k]).count("1") % 2
        assert check_witness(cycle, s)
    assert seen > 20


def test_find_induced_cycle_agrees_with_oracle_on_small_sets():
    rng = random.Random(41)
    for _ in range(40):
        s = random_set(rng, 3, density=0.8)
        for k in (4, 6):
            if k > len(s):
                continue
            got = find_induced_cycle(s, k)
            expect = induced_cycle_exists(s.members(), 3, k)
            assert (got is not None) == expect


def test_find_theorem_witness_priorities_and_absence():
    half_plus = VertexSet.from_members([v for v in range(16) if v % 2 == 0] + [1], 4)
    w = find_theorem_witness(half_plus)
    assert isinstance(w, Claw)
    assert find_theorem_witness(EVEN_WEIGHT_Q4) is None  # the tight example
    assert find_theorem_witness(VertexSet.empty(4)) is None


def test_witness_monotone_under_supersets():
    rng = random.Random(53)
    for _ in range(100):
        s = random_set(rng, 4)
        w = find_theorem_witness(s)
        if w is None:
            continue
        extra = random_set(rng, 4, density=0.3)
        superset = s.union(extra)
        assert check_witness(w, superset)


def test_classify_five_set_matches_oracle_on_all_q3_subsets():
    kinds = {}
    for five in combinations(range(8), 5):
        s = VertexSet.from_members(five, 3)
        got = classify_five_set(s)
        expect = classify_five(five, 3)
        assert got.kind.value == expect
        kinds[expect] = kinds.get(expect, 0) + 1
        if got.kind is FiveSetKind.PATH_P5:
            order = path_order_of_p5(five, 3)
            assert got.endpoints == (order[0], order[4])
            assert got.internal == tuple(order[1:4])
            assert got.endpoints[0] < got.endpoints[1]
    # brute-forced census of the 56 five-subsets of Q_3
    assert kinds == {"has_degree3_vertex": 32, "path_p5": 24}


def test_classify_five_set_examples():
    s = VertexSet.from_members([0, 4, 6, 2, 3], 3)
    assert classify_five_set(s).kind is FiveSetKind.HAS_DEGREE3_VERTEX
    evens = [v for v in range(16) if bin(v).count("1") % 2 == 0][:5]
    assert classify_five_set(VertexSet.from_members(evens, 4)).kind is (
        FiveSetKind.HAS_ISOLATED_VERTEX
    )
    disconnected = VertexSet.from_members([0, 1, 3, 12, 13], 4)
    assert classify_five_set(disconnected).kind is FiveSetKind.DISCONNECTED


def test_classify_five_set_rejects_wrong_cardinality():
    with pytest.raises(ValueError):
        classify_five_set(C6_SET)


def test_check_witness_accepts_and_rejects():
    q3 = VertexSet.full(3)
    assert check_witness(Claw(0, (1, 2, 4)), q3)
    assert not check_witness(Claw(0, (1, 2, 4)), VertexSet.from_members([0, 1], 3))
    cycle = find_induced_cycle(C6_SET, 6)
    assert check_witness(cycle, C6_SET)
    assert check_witness(cycle, VertexSet.full(3))  # inducedness is ambient-level

    # malformed witnesses return False instead of raising
    assert not check_witness(Claw(0, (1, 1, 2)), q3)  # duplicate leaf
    assert not check_witness(Claw(0, (3, 5, 6)), q3)  # leaves not adjacent to center
    assert not check_witness(Claw(0, (1, 2)), q3)  # wrong arity
    assert not check_witness(InducedCycle((0, 1, 3, 2, 0, 1)), q3)  # repeats
    assert not check_witness(InducedCycle((0, 1, 3, 2, 6, 4)), q3)  # chord 0-2
    assert not check_witness(InducedCycle((0, 1, 3)), q3)  # odd length
    assert not check_witness("claw", q3)  # not a witness at all
    assert not check_witness(Claw(0, (1, 2, 16)), VertexSet.full(4))  # out of range


def test_witness_text_forms():
    assert witness_to_text(Claw(0, (1, 2, 4)), 3) == "claw 000 100 010 001"
    cycle = InducedCycle((1, 3, 2, 6, 4, 5))
    assert witness_to_text(cycle, 3) == "cycle 100 110 010 011 001 101"
    with pytest.raises(ValueError):
        witness_to_text(object(), 3)
