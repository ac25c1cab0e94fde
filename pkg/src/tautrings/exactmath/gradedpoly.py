from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

__all__ = ["GeneratorTable", "GradedPolynomial"]

Scalar = Union[int, Fraction]
Monomial = Tuple[int, ...]


class GeneratorTable:
    """Ordered list of named generators with positive integer degrees.

    Shared by all polynomials of one ring so monomials can be plain exponent
    tuples.  The generator order also fixes the graded-lex monomial order
    used everywhere downstream (earlier generator = more significant).
    """

    __slots__ = ("names", "degrees", "_index")

    def __init__(self, gens: Iterable[Tuple[str, int]]) -> None:
        gens = tuple((str(n), int(d)) for n, d in gens)
        if any(d <= 0 for _, d in gens):
            raise ValueError("generator degrees must be positive")
        if len({n for n, _ in gens}) != len(gens):
            raise ValueError("generator names must be distinct")
        self.names = tuple(n for n, _ in gens)
        self.degrees = tuple(d for _, d in gens)
        self._index = {n: i for i, n in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def degree(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def monomials(self, degree: int) -> List[Monomial]:
        """All exponent tuples of the given weighted degree, graded-lex order
        (within the fixed degree: lexicographically decreasing exponents)."""
        out: List[Monomial] = []

        def rec(i: int, remaining: int, acc: Tuple[int, ...]) -> None:
            if i == len(self.degrees):
                if remaining == 0:
                    out.append(acc)
                return
            d = self.degrees[i]
            for e in range(remaining // d, -1, -1):
                rec(i + 1, remaining - e * d, acc + (e,))

        rec(0, degree, ())
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, GeneratorTable):
            return self.names == other.names and self.degrees == other.degrees
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.names, self.degrees))

    def __repr__(self) -> str:
        return "GeneratorTable(%s)" % (list(zip(self.names, self.degrees)),)


class GradedPolynomial:
    """Sparse polynomial over Q in weighted generators.

    Terms map exponent tuples to nonzero Fractions.  Addition and
    multiplication respect the grading; `degree()` is defined for
    homogeneous polynomials only.
    """

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GeneratorTable,
                 terms: Optional[Mapping[Monomial, Scalar]] = None) -> None:
        self.gens = gens
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    if len(mono) != len(gens):
                        raise ValueError("exponent tuple has wrong length")
                    clean[tuple(int(e) for e in mono)] = c
        self.terms = clean

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, gens: GeneratorTable) -> "GradedPolynomial":
        return cls(gens)

    @classmethod
    def constant(cls, gens: GeneratorTable, c: Scalar) -> "GradedPolynomial":
        return cls(gens, {(0,) * len(gens): Fraction(c)})

    @classmethod
    def generator(cls, gens: GeneratorTable, name: str) -> "GradedPolynomial":
        mono = [0] * len(gens)
        mono[gens.index(name)] = 1
        return cls(gens, {tuple(mono): Fraction(1)})

    # ---- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {self.gens.degree(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Weighted degree of a homogeneous polynomial (0 for the zero one)."""
        degs = {self.gens.degree(m) for m in self.terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop() if degs else 0

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.gens), Fraction(0))

    # ---- arithmetic ---------------------------------------------------

    def _check(self, other: "GradedPolynomial") -> None:
        if self.gens != other.gens:
            raise ValueError("mixed generator tables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GradedPolynomial.constant(self.gens, other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = GradedPolynomial.__new__(GradedPolynomial)
        out.gens, out.terms = self.gens, terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = GradedPolynomial.__new__(GradedPolynomial)
        out.gens = self.gens
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other if isinstance(other, GradedPolynomial)
                       else GradedPolynomial.constant(self.gens, -Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return GradedPolynomial.zero(self.gens)
            out = GradedPolynomial.__new__(GradedPolynomial)
            out.gens = self.gens
            out.terms = {m: v * c for m, v in self.terms.items()}
            return out
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        self._check(other)
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        out = GradedPolynomial.__new__(GradedPolynomial)
        out.gens, out.terms = self.gens, terms
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / Fraction(other))

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedPolynomial):
            return self.gens == other.gens and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.is_zero()
            return self.terms == {(0,) * len(self.gens): c}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.gens, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # ---- substitution & export ----------------------------------------

    def substitute(self, values: Mapping[str, Scalar]) -> "GradedPolynomial":
        """Replace named generators by rational constants (e.g. kappa_0 by
        2g-2, out-of-range kappas by 0).  Other generators are untouched."""
        idx = {self.gens.index(n): Fraction(v) for n, v in values.items()}
        terms: Dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            coef = c
            new = list(mono)
            for i, v in idx.items():
                e = mono[i]
                if e:
                    coef *= v ** e
                    new[i] = 0
                    if not coef:
                        break
            if coef:
                m = tuple(new)
                s = terms.get(m, Fraction(0)) + coef
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        out = GradedPolynomial.__new__(GradedPolynomial)
        out.gens, out.terms = self.gens, terms
        return out

    def map_to(self, gens: GeneratorTable) -> "GradedPolynomial":
        """Re-express over another generator table (by name); generators with
        nonzero exponent must exist there."""
        terms: Dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            new = [0] * len(gens)
            for i, e in enumerate(mono):
                if e:
                    new[gens.index(self.gens.names[i])] = e
            terms[tuple(new)] = terms.get(tuple(new), Fraction(0)) + c
        return GradedPolynomial(gens, terms)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in graded-lex order (degree, then lexicographically
        decreasing exponent tuple)."""
        return sorted(self.terms.items(),
                      key=lambda kv: (self.gens.degree(kv[0]), tuple(-e for e in kv[0])))

    def export(self) -> List[List[object]]:
        """JSON-ready form: [[exponent-vector, \"num/den\"], ...]."""
        return [[list(m), f"{c.numerator}/{c.denominator}"]
                for m, c in self.sorted_terms()]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono, c in self.sorted_terms():
            factors = [f"{n}^{e}" if e > 1 else n
                       for n, e in zip(self.gens.names, mono) if e]
            body = "*".join(factors) if factors else "1"
            bits.append(f"({c})*{body}")
        return " + ".join(bits)
