from __future__ import annotations

import random
from fractions import Fraction as F
from itertools import combinations_with_replacement

import pytest

from tautrings.correlators import (CorrelatorKey, CorrelatorTable,
                                   default_table, genus0_closed_form,
                                   psi_intersection, string_reduce)


# ---------------------------------------------------------------------------
# Independent oracle: one-point values straight from the generating-function
# PDE.  Matching coefficients of t_{3g}t_0^2-monomials in the equation gives
#     (6g+1) <tau_{3g} tau_0^2>_g = <tau_{3g-1} tau_0>_g <tau_0^3>_0
#                                   + 1/4 <tau_{3g-1} tau_0^4>_{g-1},
# and the string equation collapses both gauge factors, leaving
#     <tau_{3g-2}>_g = <tau_{3g-1} tau_0^4>_{g-1} / (24 g).
# The genus-(g-1) input is reduced by the string equation alone, so this
# path never touches the production recursion.
# ---------------------------------------------------------------------------

def _string_only(genus, exps):
    """Evaluate by the string equation alone (fails if a zero-free,
    non-base correlator is reached)."""
    exps = tuple(sorted(exps, reverse=True))
    n = len(exps)
    if sum(exps) != 3 * genus - 3 + n:
        return F(0)
    if genus == 0 and exps == (0, 0, 0):
        return F(1)
    assert 0 in exps, "oracle input must be string-reducible"
    rest = list(exps)
    rest.remove(0)
    total = F(0)
    for i, k in enumerate(rest):
        if k:
            total += _string_only(genus, rest[:i] + [k - 1] + rest[i + 1:])
    return total


def one_point_pde_oracle(g):
    """<tau_{3g-2}>_g through the PDE identity alone.

    Four string steps send <tau_{3h-1} tau_0^4>_{h-1} to <tau_{3h-5}>_{h-1}
    (only one positive index to decrement), so the identity in the header
    iterates to value_h = value_{h-1}/(24h) with the genus-0 seed evaluated
    by the string equation.
    """
    value = _string_only(0, (2, 0, 0, 0, 0)) / 24
    for h in range(2, g + 1):
        value = value / (24 * h)
    return value


def test_initial_condition():
    assert psi_intersection(0, [0, 0, 0]) == 1


def test_string_equation_single_step():
    assert psi_intersection(0, [1, 0, 0, 0]) == 1


@pytest.mark.parametrize("g,expected", [(1, F(1, 24)), (2, F(1, 1152)),
                                        (3, F(1, 82944))])
def test_one_point_values_match_pde_oracle(g, expected):
    assert one_point_pde_oracle(g) == expected
    assert psi_intersection(g, [3 * g - 2]) == expected


def test_degree_mismatch_returns_zero():
    assert psi_intersection(0, [2, 0, 0]) == 0
    assert psi_intersection(2, [1, 1]) == 0


def test_unstable_and_negative_raise():
    with pytest.raises(ValueError):
        psi_intersection(0, [0, 0])
    with pytest.raises(ValueError):
        psi_intersection(0, [1, -1, 0])


def test_genus0_closed_form_examples():
    assert genus0_closed_form([0, 0, 0]) == 1
    assert genus0_closed_form([1, 0, 0, 0]) == 1
    assert genus0_closed_form([2, 0, 0, 0, 0]) == 1
    assert genus0_closed_form([1, 1, 0, 0, 0]) == 2
    assert genus0_closed_form([2, 1, 0, 0]) == 0  # degree mismatch


def test_genus0_agreement_up_to_eight_markings():
    for n in range(3, 9):
        deg = n - 3
        for exps in combinations_with_replacement(range(deg + 1), n):
            if sum(exps) == deg:
                assert psi_intersection(0, exps) == genus0_closed_form(exps)


def test_permutation_invariance():
    rng = random.Random(3)
    for _ in range(20):
        exps = [rng.randint(0, 3) for _ in range(5)]
        base = psi_intersection(1, exps)
        perm = exps[:]
        rng.shuffle(perm)
        assert psi_intersection(1, perm) == base


def _keys_of_degree(g, n):
    deg = 3 * g - 3 + n
    if deg < 0 or 2 * g - 2 + n <= 0:
        return []
    return [k for k in combinations_with_replacement(range(deg + 1), n)
            if sum(k) == deg]


def test_dilaton_cross_check():
    """<tau_1 X>_g = (2g-2+n) <X>_g, a standard consequence used purely as
    an oracle (never as a computation path); checked on every stable key
    with g <= 3 and n <= 6."""
    for g in range(0, 4):
        for n in range(1, 7):
            for exps in _keys_of_degree(g, n):
                lhs = psi_intersection(g, list(exps) + [1])
                rhs = (2 * g - 2 + n) * psi_intersection(g, exps)
                assert lhs == rhs, (g, exps)


def test_known_two_point_genus2_values():
    assert psi_intersection(2, [5, 0]) == F(1, 1152)
    assert psi_intersection(2, [4, 1]) == F(1, 384)
    assert psi_intersection(2, [3, 2]) == F(29, 5760)


def test_string_reduce_examples():
    pairs = string_reduce(CorrelatorKey(0, [0, 1, 0, 0]))
    assert pairs == [(CorrelatorKey(0, [0, 0, 0]), F(1))]
    pairs = string_reduce(CorrelatorKey(1, [0, 2]))
    assert pairs == [(CorrelatorKey(1, [1]), F(1))]
    with pytest.raises(ValueError):
        string_reduce(CorrelatorKey(0, [0, 0, 0]))
    with pytest.raises(ValueError):
        string_reduce(CorrelatorKey(1, [1, 1]))


def test_string_reduce_merges_equal_targets():
    pairs = string_reduce(CorrelatorKey(0, [0, 1, 1, 0, 0]))
    assert pairs == [(CorrelatorKey(0, [1, 0, 0, 0]), F(2))]


def test_cache_transparency():
    table = CorrelatorTable()
    values = {}
    for (g, exps) in [(1, (1,)), (2, (4,)), (1, (2, 0)), (2, (3, 2))]:
        values[(g, exps)] = psi_intersection(g, exps, table)
    table.clear()
    for (g, exps), v in values.items():
        assert psi_intersection(g, exps, table) == v


def test_table_snapshot_round_trip():
    table = CorrelatorTable()
    psi_intersection(2, [4], table)
    snap = table.snapshot()
    assert snap["2:4"] == "1/1152"
    fresh = CorrelatorTable()
    fresh.load(snap)
    assert fresh.get(2, (4,)) == F(1, 1152)


def test_canonical_key_sorting():
    k = CorrelatorKey(1, [0, 2, 1])
    assert k.exponents == (2, 1, 0)
    assert k.serialize() == "1:2,1,0"
    assert CorrelatorKey.deserialize("1:2,1,0") == k


def test_concurrent_queries_are_consistent():
    """Memo table behaves as a concurrent map with at-most-once semantics:
    hammer the same keys from several threads and compare against a serial
    run."""
    import threading

    serial = CorrelatorTable()
    keys = [(2, (4,)), (2, (3, 2)), (1, (1, 1, 1)), (3, (7,)), (2, (2, 2, 1))]
    expected = {k: psi_intersection(k[0], k[1], serial) for k in keys}

    table = CorrelatorTable()
    results = []
    errors = []

    def worker():
        try:
            got = {k: psi_intersection(k[0], k[1], table) for k in keys}
            results.append(got)
        except Exception as exc:  # pragma: no cover
            errors.append(exc)

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    for got in results:
        assert got == expected


def test_one_point_tower_closed_form():
    """<tau_{3g-2}>_g = 1/(24^g g!), the iterated form of the PDE identity
    value_g = value_{g-1}/(24 g)."""
    from math import factorial
    for g in range(1, 6):
        assert psi_intersection(g, [3 * g - 2]) == F(1, 24 ** g * factorial(g))
        assert one_point_pde_oracle(g) == F(1, 24 ** g * factorial(g))
