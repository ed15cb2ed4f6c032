import random

import pytest

from evoalg import GF2, QQ, EnumerationLimitError, PrimeField
from evoalg.ideals import Ideal, is_ideal
from evoalg.oracle import (
    RandomSpec,
    brute_force_absorption,
    brute_force_hereditary,
    brute_force_ideals,
    brute_force_is_ideal,
    brute_force_maximal_ideals,
    certify_fast_vs_brute,
    enumerate_subspaces,
    gaussian_binomial,
    iter_random_algebras,
    random_algebra,
    random_perfect_algebra,
    random_perfect_strongly_connected,
    random_with_sinks,
)

from helpers import (
    four_dim_all_to_third,
    six_dim_branching,
    three_dim_perfect,
    zero_algebra,
)


# -- subspace enumeration ------------------------------------------------------


def test_subspace_counts_over_gf2():
    assert sum(1 for _ in enumerate_subspaces(GF2, 3)) == 16
    assert sum(1 for _ in enumerate_subspaces(GF2, 0)) == 1
    assert sum(1 for _ in enumerate_subspaces(GF2, 6)) == 2825


def test_subspace_count_matches_gaussian_binomials():
    for n in range(0, 5):
        expected = sum(gaussian_binomial(n, k, 2) for k in range(n + 1))
        assert sum(1 for _ in enumerate_subspaces(GF2, n)) == expected
    F3 = PrimeField(3)
    assert sum(1 for _ in enumerate_subspaces(F3, 2)) == 6  # 1 + 4 + 1


def test_gaussian_binomial_values():
    assert gaussian_binomial(6, 3, 2) == 1395
    assert gaussian_binomial(6, 1, 2) == 63
    assert gaussian_binomial(2, 1, 3) == 4
    assert gaussian_binomial(4, 5, 2) == 0


def test_enumerated_subspaces_are_distinct_and_canonical():
    from evoalg import rref

    for field, n in [(GF2, 4), (PrimeField(3), 2)]:
        seen = set()
        for s in enumerate_subspaces(field, n):
            assert rref(field, n, s.basis) == s
            assert s not in seen
            seen.add(s)


def test_enumeration_guard():
    with pytest.raises(EnumerationLimitError):
        list(enumerate_subspaces(GF2, 17))
    with pytest.raises(ValueError):
        list(enumerate_subspaces(QQ, 2))


# -- brute-force hereditary -----------------------------------------------------


def test_brute_hereditary_on_branching_example():
    g = six_dim_branching().graph
    brute = brute_force_hereditary(g)
    assert len(brute) == 21
    full = frozenset(range(6))
    proper = [h for h in brute if h != full]
    maxima = {h for h in proper if not any(h < h2 for h2 in proper)}
    assert maxima == {
        frozenset({1, 2, 3, 4, 5}),
        frozenset({0, 1, 3, 4, 5}),
    }


def test_brute_hereditary_trivial_graphs():
    assert len(brute_force_hereditary(zero_algebra(3).graph)) == 8
    from evoalg import Digraph

    cycle = Digraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert brute_force_hereditary(cycle) == [frozenset(), frozenset({0, 1, 2})]


def test_brute_hereditary_guard():
    from evoalg import Digraph

    with pytest.raises(EnumerationLimitError):
        brute_force_hereditary(Digraph(21, [[] for _ in range(21)]))


# -- brute-force ideals -----------------------------------------------------------


def test_brute_maximal_ideals_of_branching_example_mod_two():
    A = six_dim_branching(GF2)
    ideals = brute_force_ideals(A)
    maximal = brute_force_maximal_ideals(A, ideals)
    # codim of the square span is 3, so exactly (2^3-1)/(2-1) = 7 hyperplanes
    # contain it, and every maximal ideal is one of them
    assert len(maximal) == 7
    for s in maximal:
        assert s.dim == 5
        assert s.contains_subspace(A.square_span)
    spans = {s.basis for s in maximal}
    i1 = [A.unit(i) for i in (1, 2, 3, 4, 5)]
    i2 = [A.unit(i) for i in (0, 1, 3, 4, 5)]
    from evoalg import rref

    assert rref(GF2, 6, i1).basis in spans
    assert rref(GF2, 6, i2).basis in spans


def test_brute_absorption_examples():
    A = four_dim_all_to_third(GF2)
    from evoalg import rref

    full = rref(GF2, 4, [A.unit(i) for i in range(4)])
    assert brute_force_absorption(A, full)
    hyper = rref(GF2, 4, [A.unit(0), A.unit(1), A.unit(2)])
    assert brute_force_is_ideal(A, hyper)
    assert not brute_force_absorption(A, hyper)


def test_brute_force_over_f3_agrees_with_fast_path():
    F3 = PrimeField(3)
    rng = random.Random(8)
    for _ in range(6):
        A = random_algebra(
            RandomSpec(field=F3, min_dim=2, max_dim=3, density=0.7, seed=rng.randint(0, 999))
        )
        for s in enumerate_subspaces(F3, A.n):
            brute = brute_force_is_ideal(A, s)
            assert is_ideal(A, s) == brute
            if brute:
                fast = Ideal(A, s, _validated=True).has_absorption()
                assert fast == brute_force_absorption(A, s)


def test_brute_maximality_over_f3_agrees_with_fast_path():
    F3 = PrimeField(3)
    for k in range(6):
        A = random_algebra(
            RandomSpec(
                field=F3,
                min_dim=3,
                max_dim=3,
                density=(0.2, 0.6, 1.0)[k % 3],
                seed=900 + k,
            )
        )
        ideals = brute_force_ideals(A)
        maximal = {s.basis for s in brute_force_maximal_ideals(A, ideals)}
        for s in ideals:
            if s.dim < A.n:
                fast = Ideal(A, s, _validated=True).is_maximal()
                assert fast == (s.basis in maximal)


# -- random generators --------------------------------------------------------------


def test_random_algebra_is_deterministic():
    spec = RandomSpec(field=QQ, min_dim=2, max_dim=5, density=0.5, seed=1)
    assert random_algebra(spec) == random_algebra(spec)
    stream = iter_random_algebras(spec)
    a, b = next(stream), next(stream)
    assert a != b or a.squares == b.squares  # stream advances deterministically


def test_zero_density_gives_zero_algebra_and_no_perfect_sample():
    spec = RandomSpec(field=QQ, min_dim=3, max_dim=3, density=0.0, seed=5)
    A = random_algebra(spec)
    assert A.square_span.dim == 0
    with pytest.raises(RuntimeError):
        random_perfect_algebra(spec, attempts=50)


def test_full_density_rational_sample_is_perfect():
    spec = RandomSpec(field=QQ, min_dim=4, max_dim=4, density=1.0, seed=7)
    A = random_perfect_algebra(spec)
    assert A.is_perfect()
    from evoalg.galois import run_theorem_suite

    assert run_theorem_suite(A, trials=5, seed=7).ok


def test_forced_shapes():
    spec = RandomSpec(field=GF2, min_dim=3, max_dim=5, density=0.4, seed=3)
    sc = random_perfect_strongly_connected(spec)
    assert sc.is_perfect()
    assert sc.graph.is_simple()
    sink = random_with_sinks(spec, min_sinks=2)
    assert len(sink.annihilator_vertices()) >= 2
    assert not sink.is_perfect()


def test_every_brute_ideal_of_perfect_f2_algebra_is_its_vertex_span():
    # exhaustive desk-scale certification of the perfect-case conclusions:
    # every ideal found by the oracle equals the span of its hereditary set
    from evoalg.ideals import ideal_from_hereditary

    found = 0
    for k in range(12):
        spec = RandomSpec(field=GF2, min_dim=2, max_dim=5, density=0.8, seed=500 + k)
        try:
            A = random_perfect_algebra(spec, attempts=200)
        except RuntimeError:
            continue
        found += 1
        for s in brute_force_ideals(A):
            ideal = Ideal(A, s, _validated=True)
            span = ideal_from_hereditary(A, ideal.hereditary_vertices)
            assert s == span.subspace
            assert brute_force_absorption(A, s)
    assert found >= 8


# -- certification -------------------------------------------------------------------


def test_certification_on_small_random_algebras():
    rng = random.Random(2718)
    for k in range(25):
        spec = RandomSpec(
            field=GF2,
            min_dim=2,
            max_dim=4,
            density=rng.choice([0.3, 0.5, 0.8]),
            seed=1000 + k,
        )
        A = random_algebra(spec)
        result = certify_fast_vs_brute(A)
        assert result["mismatches"] == []


def test_certification_sees_every_subspace_at_small_dims():
    A = three_dim_perfect(GF2)
    result = certify_fast_vs_brute(A)
    assert result["subspaces"] == 16
    assert result["compared"] == 16
    assert result["mismatches"] == []
