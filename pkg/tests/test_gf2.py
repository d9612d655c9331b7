import itertools
import random

import numpy as np
import pytest

from gaussdiag.gf2 import (
    DimensionTooLarge,
    Gf2Matrix,
    Gf2System,
    is_idempotent,
    solve,
    square,
    stz_bruteforce,
)
from gaussdiag.interlace import adjacency_matrix, interlacement_graph
from gaussdiag.codec import parse_code

from reference_data import NONREAL6_CODE, REAL6_CODE, REAL6_M, REAL6_M2, REAL6_SOLUTIONS, REAL6_SYSTEM


def naive_product(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % 2 for j in range(n)] for i in range(n)]


def exhaustive_solutions(system):
    return {x for x in itertools.product((0, 1), repeat=system.nvars) if system.satisfied_by(x)}


def random_system(rng, nvars, neq):
    eqs = []
    for _ in range(neq):
        support = [k for k in range(nvars) if rng.random() < 0.35]
        eqs.append((support, rng.randrange(2)))
    return Gf2System.from_pairs(nvars, eqs)


def system_from_pairs(n, pairs):
    return Gf2System.from_pairs(n, [((i - 1, j - 1), rhs) for (i, j), rhs in pairs])


def test_square_examples():
    m = Gf2Matrix.from_lists(REAL6_M)
    assert square(m).to_lists() == REAL6_M2
    assert square(Gf2Matrix.identity(5)) == Gf2Matrix.identity(5)
    nonreal = adjacency_matrix(interlacement_graph(parse_code(NONREAL6_CODE)))
    assert square(nonreal) == Gf2Matrix.zeros(6)


def test_idempotent_examples():
    assert is_idempotent(Gf2Matrix.zeros(4))
    assert is_idempotent(Gf2Matrix.identity(4))
    assert not is_idempotent(Gf2Matrix.from_lists(REAL6_M))


def test_matrix_basics():
    m = Gf2Matrix.from_lists([[0, 1], [1, 1]])
    assert m[0, 1] == 1 and m[0, 0] == 0
    assert (m + m) == Gf2Matrix.zeros(2)
    assert m.is_symmetric()
    assert m.to_numpy().tolist() == [[0, 1], [1, 1]]
    assert Gf2Matrix.diagonal(3, [0, 2]).to_lists() == [[1, 0, 0], [0, 0, 0], [0, 0, 1]]
    with pytest.raises(ValueError):
        Gf2Matrix(2, (4, 0))
    with pytest.raises(ValueError):
        Gf2Matrix.from_lists([[0, 1]])


def test_square_against_naive_product():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 10)
        entries = [[rng.randrange(2) for _ in range(n)] for _ in range(n)]
        assert square(Gf2Matrix.from_lists(entries)).to_lists() == naive_product(entries, entries)


def test_square_against_numpy():
    rng = np.random.default_rng(5)
    for n in (1, 7, 40, 70):
        a = rng.integers(0, 2, size=(n, n))
        expected = (a @ a) % 2
        assert square(Gf2Matrix.from_lists(a.tolist())).to_lists() == expected.tolist()


def test_solve_inconsistent_triangle():
    system = system_from_pairs(6, [((1, 3), 1), ((1, 5), 1), ((3, 5), 1)])
    sol = solve(system)
    assert not sol.consistent
    assert sorted(sol.witness) == [0, 1, 2]
    assert sol.count == 0


def test_solve_worked_system():
    sol = solve(system_from_pairs(6, REAL6_SYSTEM))
    assert sol.consistent
    assert len(sol.free_vars) == 1
    assert sol.rank == 5
    assert set(sol.solutions()) == REAL6_SOLUTIONS


def test_solve_empty_system():
    sol = solve(Gf2System(3, ()))
    assert sol.consistent
    assert sol.free_vars == (0, 1, 2)
    assert sol.count == 8


def test_pivot_rule_is_lowest_index():
    sol = solve(Gf2System.from_pairs(3, [((1, 2), 1), ((0, 2), 0)]))
    assert sol.free_vars == (2,)


def test_solve_against_exhaustive_search():
    rng = random.Random(2024)
    for _ in range(1000):
        nvars = rng.randint(1, 12)
        system = random_system(rng, nvars, rng.randint(0, 14))
        sol = solve(system)
        truth = exhaustive_solutions(system)
        assert sol.consistent == bool(truth)
        if sol.consistent:
            assert system.satisfied_by(sol.particular)
            assert sol.count == len(truth)
            assert set(sol.solutions()) == truth
            assert sol.rank == nvars - len(sol.free_vars)
        else:
            # the witness equations alone already sum to 0 = 1
            support = rhs = 0
            for k in sol.witness:
                support ^= system.equations[k].support
                rhs ^= system.equations[k].rhs
            assert support == 0 and rhs == 1


def test_equation_validation():
    with pytest.raises(ValueError):
        Gf2System.from_pairs(2, [((2,), 1)])


def test_stz_bruteforce_examples():
    assert stz_bruteforce(Gf2Matrix.zeros(1)) == frozenset()
    real = adjacency_matrix(interlacement_graph(parse_code(REAL6_CODE)))
    k = stz_bruteforce(real)
    assert k is not None
    assert is_idempotent(real + Gf2Matrix.diagonal(6, k))
    nonreal = adjacency_matrix(interlacement_graph(parse_code(NONREAL6_CODE)))
    assert stz_bruteforce(nonreal) is None


def test_stz_bruteforce_dimension_cap():
    with pytest.raises(DimensionTooLarge):
        stz_bruteforce(Gf2Matrix.zeros(25))
