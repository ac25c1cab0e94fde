from __future__ import annotations

from fractions import Fraction as F
from itertools import combinations

import pytest

from tautrings.boundary import (BoundaryDivisor, h2_presentation, h2_rank,
                                kappa1_in_boundary_basis, keel_fourpoint_relations,
                                keel_generators, keel_pairing_check,
                                keel_quotient, keel_ring_dims,
                                psi_in_boundary_basis)
from tautrings.exactmath import SparseEchelon


def test_generator_counts():
    assert len(keel_generators(4)) == 3
    assert len(keel_generators(5)) == 10
    assert keel_generators(3) == []
    for n in range(3, 8):
        assert len(keel_generators(n)) == 2 ** (n - 1) - 1 - n


def test_generators_are_canonical():
    d1 = BoundaryDivisor(5, {1, 2})
    d2 = BoundaryDivisor(5, {3, 4, 5})
    assert d1 == d2 and hash(d1) == hash(d2)
    assert d1.side == frozenset({1, 2})
    with pytest.raises(ValueError):
        BoundaryDivisor(5, {1})
    with pytest.raises(ValueError):
        BoundaryDivisor(5, {1, 2, 3, 4})


def test_keel_ring_dims_golden():
    assert keel_ring_dims(4) == [1, 1]
    assert keel_ring_dims(5) == [1, 5, 1]
    assert keel_ring_dims(6) == [1, 16, 16, 1]


def test_keel_ring_dims_range():
    with pytest.raises(ValueError):
        keel_ring_dims(8)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_keel_pairing_perfect(n):
    assert keel_pairing_check(n)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_fourpoint_relations_reduce_to_zero(n):
    quotient = keel_quotient(n)
    for rel in keel_fourpoint_relations(n):
        assert not quotient.reduce(rel), (n, rel)


def test_psi_examples():
    p = psi_in_boundary_basis(4, 1, 2, 3)
    # the unique admissible side is {1,4}, canonically labeled {2,3}
    assert [sorted(m for m, e in zip(p.gens.names, mono) if e)
            for mono in p.terms] == [["D{2,3}"]]
    p5 = psi_in_boundary_basis(5, 1, 2, 3)
    names = {n for mono in p5.terms
             for n, e in zip(p5.gens.names, mono) if e}
    assert names == {"D{1,4}", "D{2,3}", "D{2,3,4}"}
    with pytest.raises(ValueError):
        psi_in_boundary_basis(5, 1, 1, 2)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_psi_choice_independent_modulo_relations(n):
    """Different auxiliary pairs give different formal sums but the same
    class modulo the degree-1 four-point relations."""
    rels = keel_fourpoint_relations(n)
    gens = rels[0].gens
    monos = gens.monomials(1)
    index = {m: i for i, m in enumerate(monos)}
    ech = SparseEchelon()
    for r in rels:
        ech.add_row({index[m]: c for m, c in r.terms.items()})
    for z in range(1, n + 1):
        rows = []
        for x, y in combinations(sorted(set(range(1, n + 1)) - {z}), 2):
            e = psi_in_boundary_basis(n, z, x, y)
            rows.append({index[m]: c for m, c in e.terms.items()})
        base = rows[0]
        for other in rows[1:]:
            diff = dict(base)
            for c, v in other.items():
                s = diff.get(c, F(0)) - v
                if s:
                    diff[c] = s
                else:
                    diff.pop(c, None)
            assert ech.contains(diff), (n, z)


def test_psi_expressions_differ_formally():
    a = psi_in_boundary_basis(4, 1, 2, 3)
    b = psi_in_boundary_basis(4, 2, 3, 4)
    assert a.terms != b.terms


def test_kappa1_conventions():
    k = kappa1_in_boundary_basis(4)
    by_name = {tuple(n for n, e in zip(k.gens.names, mono) if e): c
               for mono, c in k.terms.items()}
    assert by_name == {("D{1,2}",): 1, ("D{1,3}",): 1, ("D{2,3}",): 1}
    k5 = kappa1_in_boundary_basis(5)
    weights = sorted(set(k5.terms.values()))
    assert weights == [1, 2]
    alt = kappa1_in_boundary_basis(4, convention="all-subsets")
    assert set(alt.terms.values()) == {2}
    with pytest.raises(ValueError):
        kappa1_in_boundary_basis(4, convention="bogus")


def test_kappa1_nonzero_in_quotient():
    q = keel_quotient(4)
    for convention in ("canonical", "all-subsets"):
        k = kappa1_in_boundary_basis(4, convention=convention)
        assert q.reduce(k), convention


# ---------------------------------------------------------------------------
# H^2 presentations
# ---------------------------------------------------------------------------

def test_h2_rank_examples():
    assert h2_rank(1, 1) == 1
    assert h2_rank(2, 0) == 2
    assert h2_rank(0, 5) == 5


def test_h2_matches_keel_betti():
    for n in (4, 5, 6):
        assert h2_rank(0, n) == keel_ring_dims(n)[1]


def test_h2_known_ranks():
    # genus 1: kappa and the psi's are eliminated, leaving 2^n - n classes
    assert h2_rank(1, 2) == 2
    assert h2_rank(1, 3) == 5
    assert h2_rank(1, 4) == 12
    # unpointed: kappa_1, delta_irr and the floor(g/2) separating classes
    assert h2_rank(2, 1) == 3
    assert h2_rank(3, 0) == 3
    assert h2_rank(4, 0) == 4
    assert h2_rank(5, 0) == 4
    assert h2_rank(2, 2) == 6
    assert h2_rank(3, 1) == 5


def test_h2_generator_lists():
    pres = h2_presentation(1, 1)
    assert pres.names == ["kappa_1", "psi_1", "delta_irr"]
    pres2 = h2_presentation(2, 0)
    assert pres2.names == ["kappa_1", "delta_irr", "delta_1{}"]


def test_h2_unstable():
    with pytest.raises(ValueError):
        h2_rank(0, 2)


def test_h2_export_round_trip():
    pres = h2_presentation(1, 2)
    data = pres.export()
    assert data["g"] == 1 and data["n"] == 2
    assert set(data["generators"]) >= {"kappa_1", "psi_1", "psi_2", "delta_irr"}
    assert all(isinstance(row, list) for row in data["relations"])
