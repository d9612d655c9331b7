"""Acceptance criteria, each run at its stated tolerance.

A summary line per criterion is printed at the end of the session by the
hook in ``conftest.py``.
"""

import random
import time

import pytest

from gaussdiag.codec import (
    GaussCode,
    apply_symmetry,
    canonical_key,
    enumerate_canonical,
    format_code,
    parse_code,
    to_diagram,
)
from gaussdiag.criteria import (
    CHECKS,
    EXACT,
    Criterion,
    check_all,
    check_evenness,
    check_gauss_parity,
    check_gl123,
    dehn_transform,
    check_dehn,
    realizability_system,
)
from gaussdiag.gf2 import Gf2Matrix, solve, square
from gaussdiag.interlace import adjacency_matrix, interlacement_graph
from gaussdiag.tablegen import count_table

import test_codec as codec_oracles
import test_gf2 as gf2_oracles

from reference_data import (
    DEHN_CODE,
    DEHN_INTERMEDIATE,
    DEHN_PARTS,
    DEHN_RESULT,
    FIG4_CODE,
    FIG5_DIAGRAMS,
    NONREAL6_CODE,
    NONREAL6_PRINTED_M,
    NONREAL6_TRIPLE,
    REAL6_CODE,
    REAL6_M,
    REAL6_M2,
    REAL6_SOLUTIONS,
    REAL6_SYSTEM,
    TABLE1,
)


def acceptance(number, title):
    return pytest.mark.acceptance(number, title)


def labeled_matrix(text):
    return adjacency_matrix(interlacement_graph(parse_code(text), by_label=True))


# -- 1 -----------------------------------------------------------------------

@acceptance(1, "count table for sizes 3-9, exact, within 30 minutes")
def test_criterion1_table_3_to_9():
    start = time.perf_counter()
    rows = count_table(3, 9, collect_gap=True)
    elapsed = time.perf_counter() - start
    assert [r.stz_count for r in rows] == [1, 1, 2, 3, 10, 27, 101]
    assert [r.gl123_count for r in rows] == [1, 1, 2, 3, 10, 27, 102]
    assert elapsed <= 30 * 60


# -- 2 -----------------------------------------------------------------------

@pytest.mark.slow
@acceptance(2, "size 10: 364 / 370 and the six gap diagrams, within 12 hours")
def test_criterion2_size_10():
    start = time.perf_counter()
    row = count_table(10, 10, collect_gap=True)[0]
    elapsed = time.perf_counter() - start
    assert (row.stz_count, row.gl123_count) == TABLE1[10]
    assert row.gap_count == 6
    gap_keys = {c.symbols for c in row.gap_examples}
    drawn = {canonical_key(d).symbols for d in FIG5_DIAGRAMS}
    assert drawn == gap_keys
    assert elapsed <= 12 * 3600


# -- 3 -----------------------------------------------------------------------

@acceptance(3, "unique size-9 gap diagram equals the nine-chord counterexample")
def test_criterion3_unique_gap_n9():
    row = count_table(9, 9, collect_gap=True)[0]
    assert row.gap_count == 1
    (gap,) = row.gap_examples
    code = parse_code(FIG4_CODE)
    assert canonical_key(code) == gap
    assert check_gl123(code).verdict
    reports = {r.criterion: r.verdict for r in check_all(code)}
    assert not any(reports[c] for c in EXACT)


# -- 4 -----------------------------------------------------------------------

@acceptance(4, "worked examples reproduce exactly")
def test_criterion4_nonrealizable_printed_matrix():
    assert labeled_matrix(NONREAL6_CODE).to_lists() == NONREAL6_PRINTED_M


@acceptance(4, "worked examples reproduce exactly")
def test_criterion4_nonrealizable_system():
    code = parse_code(NONREAL6_CODE)
    g = interlacement_graph(code, by_label=True)
    assert square(adjacency_matrix(g)) == Gf2Matrix.zeros(6)
    system = realizability_system(g)
    present = {(tuple(e.variables), e.rhs) for e in system.equations if e.support}
    triple = [((i - 1, j - 1), rhs) for (i, j), rhs in NONREAL6_TRIPLE]
    assert all(t in present for t in triple)
    # the triple alone is already inconsistent
    assert not solve(gf2_oracles.system_from_pairs(6, NONREAL6_TRIPLE)).consistent
    assert not solve(system).consistent
    reports = {r.criterion: r.verdict for r in check_all(code)}
    assert not any(reports[c] for c in EXACT)


@acceptance(4, "worked examples reproduce exactly")
def test_criterion4_realizable_example():
    code = parse_code(REAL6_CODE)
    g = interlacement_graph(code, by_label=True)
    m = adjacency_matrix(g)
    assert m.to_lists() == REAL6_M
    assert square(m).to_lists() == REAL6_M2
    system = realizability_system(g)
    edge_eqs = [(tuple(v + 1 for v in e.variables), e.rhs) for e in system.equations if e.support]
    assert edge_eqs == REAL6_SYSTEM
    assert all(e.rhs == 0 for e in system.equations if not e.support)
    sol = solve(system)
    assert set(sol.solutions()) == REAL6_SOLUTIONS
    reports = {r.criterion: r.verdict for r in check_all(code)}
    assert all(reports[c] for c in EXACT)


# -- 5 -----------------------------------------------------------------------

@acceptance(5, "reversal chain and bipartition of the transformed graph")
def test_criterion5_dehn_chain():
    result = dehn_transform(parse_code(DEHN_CODE))
    assert result.format() == DEHN_RESULT
    trace = result.format_trace()
    assert trace[0] == DEHN_CODE and trace[-1] == DEHN_RESULT
    assert all(w in trace for w in DEHN_INTERMEDIATE)
    report = check_dehn(parse_code(DEHN_CODE))
    assert report.verdict
    names = parse_code(DEHN_CODE).display_labels
    parts = [{names[v] for v in p} for p in report.witness["parts"]]
    assert sorted(parts, key=len, reverse=True) == list(DEHN_PARTS)


# -- 6 and 7 -----------------------------------------------------------------

def _all_classes(max_n=7):
    for n in range(0, max_n + 1):
        found = []
        enumerate_canonical(n, found.append)
        yield n, found


@acceptance(6, "five exact criteria agree on every class up to size 7, within 2 minutes")
def test_criterion6_agreement():
    start = time.perf_counter()
    prime_passing = {}
    for n, codes in _all_classes():
        # class counts from the enumerator equal an independent brute force
        if n <= 5:
            assert {c.symbols for c in codes} == codec_oracles.brute_force_classes(n)
        for code in codes:
            verdicts = {r.criterion: r.verdict for r in check_all(code)}
            exact = {verdicts[c] for c in EXACT}
            assert len(exact) == 1, format_code(code)
            if verdicts[Criterion.STZ_LINEAR] and interlacement_graph(code).is_connected():
                prime_passing[n] = prime_passing.get(n, 0) + 1
    elapsed = time.perf_counter() - start
    assert [prime_passing.get(n, 0) for n in range(3, 8)] == [TABLE1[n][0] for n in range(3, 8)]
    assert elapsed <= 120


@acceptance(6, "five exact criteria agree on every class up to size 7, within 2 minutes")
def test_criterion6_stated_pass_count():
    # 21 is the stated number of passing classes; the count here is of prime
    # classes of sizes 3-7 passing the exact criteria, the rows it is to be
    # cross-checked against.
    passing = 0
    for n, codes in _all_classes():
        if n < 3:
            continue
        for code in codes:
            g = interlacement_graph(code)
            if g.is_connected() and check_dehn(code).verdict:
                passing += 1
    assert passing == 21


@acceptance(7, "realizable classes up to size 7 pass GL123, evenness and parity")
def test_criterion7_necessity():
    for _, codes in _all_classes():
        for code in codes:
            if check_dehn(code).verdict:
                g = interlacement_graph(code)
                assert check_gl123(g).verdict
                assert check_evenness(g).verdict
                assert check_gauss_parity(code).verdict


# -- 8 -----------------------------------------------------------------------

@acceptance(8, "oracle suites: solver, matrix square, enumerator")
def test_criterion8_solver_oracle():
    rng = random.Random(1000)
    for _ in range(1000):
        nvars = rng.randint(1, 12)
        system = gf2_oracles.random_system(rng, nvars, rng.randint(0, 14))
        sol = solve(system)
        truth = gf2_oracles.exhaustive_solutions(system)
        assert sol.consistent == bool(truth)
        if truth:
            assert set(sol.solutions()) == truth


@acceptance(8, "oracle suites: solver, matrix square, enumerator")
def test_criterion8_square_oracle():
    rng = random.Random(1001)
    for _ in range(1000):
        n = rng.randint(1, 10)
        entries = [[rng.randrange(2) for _ in range(n)] for _ in range(n)]
        expected = gf2_oracles.naive_product(entries, entries)
        assert square(Gf2Matrix.from_lists(entries)).to_lists() == expected


@acceptance(8, "oracle suites: solver, matrix square, enumerator")
def test_criterion8_enumerator_oracle():
    for n in range(0, 6):
        found = []
        enumerate_canonical(n, found.append)
        assert len(found) == len(set(found))
        assert {c.symbols for c in found} == codec_oracles.brute_force_classes(n)


# -- 9 -----------------------------------------------------------------------

@acceptance(9, "every verdict is invariant under the dihedral action")
def test_criterion9_invariance():
    rng = random.Random(9)
    for _ in range(500):
        n = rng.randint(1, 8)
        word = list(range(n)) * 2
        rng.shuffle(word)
        code = GaussCode.from_word(word)
        base = [r.verdict for r in check_all(code)]
        d = to_diagram(code)
        for _ in range(10):
            image = apply_symmetry(d, rng.randrange(2 * n), rng.random() < 0.5).to_code()
            assert [r.verdict for r in check_all(image)] == base
        assert len(base) == len(CHECKS)
