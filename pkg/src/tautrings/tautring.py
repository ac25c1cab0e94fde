from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exactmath import (GeneratorTable, GradedPolynomial, GradedQuotient,
                        QuotientReport, SparseEchelon, partition_count)
from .closedforms import hyperelliptic_coeff
from .relationgen import KappaRelation, fz_relation_set, sq_relation_set

__all__ = [
    "RingModel",
    "build_ring",
    "ring_dims",
    "gorenstein_check",
    "socle_class_check",
    "generation_check",
    "vanishing_check",
]


def _ring_generators(g: int) -> GeneratorTable:
    return GeneratorTable([(f"kappa_{i}", i) for i in range(1, g - 1)])


@dataclass
class RingModel:
    """The candidate tautological ring of genus g: the quotient of
    Q[kappa_1..kappa_{g-2}] by the FZ relation ideal, in degrees 0..g-2."""

    genus: int
    gens: GeneratorTable
    relations: List[KappaRelation]
    quotient: GradedQuotient

    @property
    def dims(self) -> List[int]:
        return self.quotient.dims

    def report(self, with_pairings: bool = True) -> QuotientReport:
        return self.quotient.report(with_pairings)


def build_ring(g: int, relations: Optional[Sequence[KappaRelation]] = None,
               source: str = "FZ") -> RingModel:
    """Assemble the ring model for genus g.  `relations` overrides the
    generated set (used for shuffle/equivalence experiments); `source`
    selects the FZ or the stable-quotient generator."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    gens = _ring_generators(g)
    if relations is None:
        relations = (fz_relation_set(g, g - 2) if source == "FZ"
                     else sq_relation_set(g, g - 2))
    polys = [rel.polynomial.map_to(gens) for rel in relations
             if not rel.polynomial.is_zero()]
    quotient = GradedQuotient(gens, polys, max(g - 2, 0))
    return RingModel(g, gens, list(relations), quotient)


def ring_dims(g: int, source: str = "FZ") -> List[int]:
    """Graded dimensions of the candidate ring in degrees 0..g-2."""
    return build_ring(g, source=source).dims


def gorenstein_check(g: int) -> QuotientReport:
    """Full Gorenstein verification: palindromic dims, one-dimensional
    socle, and nonsingular complementary pairings."""
    return build_ring(g).report(with_pairings=True)


def socle_class_check(g: int) -> Fraction:
    """Reduce kappa_{g-2} into the socle basis, assert it is nonzero there,
    and return the hyperelliptic-locus ratio [H_g]/kappa_{g-2}."""
    if g < 3:
        raise ValueError("genus must be >= 3")
    model = build_ring(g)
    top = g - 2
    if model.quotient.dim(top) != 1:
        raise ArithmeticError(f"socle of genus {g} model is not one-dimensional")
    kap = GradedPolynomial.generator(model.gens, f"kappa_{top}")
    reduced = model.quotient.reduce(kap)
    if not reduced:
        raise ArithmeticError(f"kappa_{top} vanishes in the genus-{g} model")
    return hyperelliptic_coeff(g)


def generation_check(g: int) -> bool:
    """Low kappa classes generate: dim R^d equals the partition count for
    d <= floor(g/3), and every graded piece is spanned by monomials in
    kappa_1..kappa_{floor(g/3)} modulo the relation ideal."""
    if g < 3:
        raise ValueError("genus must be >= 3")
    model = build_ring(g)
    cut = g // 3
    for d in range(0, cut + 1):
        if model.quotient.dim(d) != partition_count(d):
            return False
    # spanning test: low-index monomials fill each quotient piece
    for d in range(1, g - 1):
        monos = model.gens.monomials(d)
        index = {m: i for i, m in enumerate(monos)}
        ech = SparseEchelon()
        for row in _relation_rows(model, d, index):
            ech.add_row(row)
        base = ech.rank
        for mono in monos:
            if all(model.gens.degrees[i] <= cut or e == 0
                   for i, e in enumerate(mono)):
                ech.add_row({index[mono]: Fraction(1)})
        if ech.rank != len(monos):
            return False
    return True


def vanishing_check(g: int, beyond: int) -> bool:
    """Top-degree vanishing: with relations generated up to `beyond` (kappa
    indices still capped at g-2), the quotient must be zero in every degree
    g-1..beyond."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    if beyond < g - 1:
        raise ValueError("`beyond` must be at least g-1")
    gens = _ring_generators(g)
    rels = [r.polynomial.map_to(gens) for r in fz_relation_set(g, beyond)
            if not r.polynomial.is_zero()]
    quotient = GradedQuotient(gens, rels, beyond)
    return all(quotient.dim(d) == 0 for d in range(g - 1, beyond + 1))


def _relation_rows(model: RingModel, d: int,
                   index: Dict[Tuple[int, ...], int]) -> List[Dict[int, Fraction]]:
    rows: List[Dict[int, Fraction]] = []
    for rel in model.relations:
        poly = rel.polynomial.map_to(model.gens)
        if poly.is_zero():
            continue
        r = poly.degree()
        if r > d:
            continue
        for cof in model.gens.monomials(d - r):
            row: Dict[int, Fraction] = {}
            for mono, c in poly.terms.items():
                m = tuple(a + b for a, b in zip(mono, cof))
                row[index[m]] = row.get(index[m], Fraction(0)) + c
            rows.append(row)
    return rows
