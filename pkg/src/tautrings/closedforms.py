from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from .exactmath import (GeneratorTable, GradedPolynomial, TruncatedSeries,
                        bernoulli, series_exp)

__all__ = [
    "HodgeEvalRequest",
    "lambda_g_base",
    "lambda_g_eval",
    "lambda_gm1_lambda_g_eval",
    "socle_constant",
    "lambda_from_kappa",
    "chern_character_even_check",
    "wl_class",
    "hyperelliptic_class",
    "hyperelliptic_coeff",
    "euler_orbifold",
    "kappa_table",
    "multinomial",
    "double_factorial",
]


def multinomial(top: int, parts: Sequence[int]) -> int:
    if top != sum(parts):
        raise ValueError("multinomial parts must sum to the top index")
    r = factorial(top)
    for p in parts:
        r //= factorial(p)
    return r


def double_factorial(m: int) -> int:
    """m!! with the conventions (-1)!! = 1 and 0!! = 1."""
    if m <= 0:
        return 1
    r = 1
    while m > 1:
        r *= m
        m -= 2
    return r


# ---------------------------------------------------------------------------
# Hodge integrals with one or two lambda insertions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HodgeEvalRequest:
    """A closed-form Hodge-integral request: genus, psi exponents, and the
    flavor ("lambda_g" or "lambda_gm1_lambda_g").  Off-degree requests
    evaluate to 0; the two-lambda flavor additionally needs every exponent
    positive."""

    genus: int
    alpha: Tuple[int, ...]
    flavor: str = "lambda_g"

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        if self.flavor not in ("lambda_g", "lambda_gm1_lambda_g"):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.genus < (1 if self.flavor == "lambda_g" else 2):
            raise ValueError("genus too small for this flavor")

    def degree_matches(self) -> bool:
        n = len(self.alpha)
        target = (2 * self.genus - 3 + n if self.flavor == "lambda_g"
                  else self.genus - 2 + n)
        return sum(self.alpha) == target

    def evaluate(self) -> Fraction:
        if self.flavor == "lambda_g":
            return lambda_g_eval(self.genus, self.alpha)
        return lambda_gm1_lambda_g_eval(self.genus, self.alpha)


def lambda_g_base(g: int) -> Fraction:
    """The one-point integral of psi^{2g-2} against the top Chern class of
    the Hodge bundle: (2^{2g-1}-1)/2^{2g-1} * |B_{2g}|/(2g)!."""
    if g <= 0:
        raise ValueError("genus must be >= 1")
    p = 2 ** (2 * g - 1)
    return Fraction(p - 1, p) * Fraction(abs(bernoulli(2 * g)), factorial(2 * g))


def lambda_g_eval(g: int, alpha: Sequence[int]) -> Fraction:
    """psi^alpha lambda_g integral: multinomial(2g-3+n; alpha) times the
    one-point base value.  Off-degree requests return 0."""
    if g <= 0:
        raise ValueError("genus must be >= 1")
    a = [int(x) for x in alpha]
    if any(x < 0 for x in a):
        raise ValueError("exponents must be non-negative")
    n = len(a)
    if sum(a) != 2 * g - 3 + n:
        return Fraction(0)
    return multinomial(2 * g - 3 + n, a) * lambda_g_base(g)


def lambda_gm1_lambda_g_constant(g: int) -> Fraction:
    """One-point psi^{g-1} lambda_{g-1} lambda_g integral:
    |B_{2g}| / (2^{2g-1} (2g-1)!! 2g)."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    return Fraction(abs(bernoulli(2 * g)),
                    2 ** (2 * g - 1) * double_factorial(2 * g - 1) * 2 * g)


def lambda_gm1_lambda_g_eval(g: int, alpha: Sequence[int]) -> Fraction:
    """psi^alpha lambda_{g-1} lambda_g integral,
    (2g+n-3)!(2g-1)!! / ((2g-1)! prod (2a_i-1)!!) times the one-point
    constant.  Requires every a_i >= 1; off-degree requests return 0."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    a = [int(x) for x in alpha]
    if any(x < 1 for x in a):
        raise ValueError("every exponent must be >= 1")
    n = len(a)
    if sum(a) != g - 2 + n:
        return Fraction(0)
    num = factorial(2 * g + n - 3) * double_factorial(2 * g - 1)
    den = factorial(2 * g - 1)
    for x in a:
        den *= double_factorial(2 * x - 1)
    return Fraction(num, den) * lambda_gm1_lambda_g_constant(g)


def socle_constant(g: int) -> Fraction:
    """kappa_{g-2} lambda_{g-1} lambda_g evaluated on the compactified
    moduli space: |B_{2g}| (g-1)! / (2^g (2g)!).  Nonzero for every g."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    return Fraction(abs(bernoulli(2 * g)) * factorial(g - 1),
                    2 ** g * factorial(2 * g))


def hyperelliptic_coeff(g: int) -> Fraction:
    """Coefficient of kappa_{g-2} in the hyperelliptic-locus class:
    (2^{2g}-1) 2^{g-2} / ((2g+1)(g+1)!)."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    return Fraction((2 ** (2 * g) - 1) * 2 ** (g - 2),
                    (2 * g + 1) * factorial(g + 1))


# ---------------------------------------------------------------------------
# Lambda classes as polynomials in odd kappa classes
# ---------------------------------------------------------------------------

def kappa_table(max_index: int) -> GeneratorTable:
    """Generators kappa_1..kappa_max (degree of kappa_i is i)."""
    return GeneratorTable([(f"kappa_{i}", i) for i in range(1, max_index + 1)])


def lambda_from_kappa(g: int, max_degree: int,
                      gens: Optional[GeneratorTable] = None) -> List[GradedPolynomial]:
    """Expand sum lambda_i t^i = exp(sum B_{2i} kappa_{2i-1} t^{2i-1} /
    (2i(2i-1))) and return lambda_0..lambda_max_degree as polynomials in the
    odd kappa classes.  The expansion is formal; `g` only documents intent
    (lambda_i vanishes for i > g on the actual moduli space)."""
    if gens is None:
        gens = kappa_table(max(max_degree, 1))
    arg = TruncatedSeries([("t", 1)], max_degree, None)
    i = 1
    while 2 * i - 1 <= max_degree:
        coef = bernoulli(2 * i) / Fraction(2 * i * (2 * i - 1))
        kap = GradedPolynomial.generator(gens, f"kappa_{2 * i - 1}") * coef
        arg = arg + TruncatedSeries([("t", 1)], max_degree, {(2 * i - 1,): kap})
        i += 1
    expo = series_exp(arg)
    out = []
    for d in range(max_degree + 1):
        c = expo.coefficient((d,))
        if isinstance(c, Fraction):
            c = GradedPolynomial.constant(gens, c)
        out.append(c)
    return out


def _power_sums_from_chern(lams: List[GradedPolynomial], top: int) -> List[GradedPolynomial]:
    """Newton's identities: power sums p_1..p_top of the Chern roots from
    the elementary symmetric functions lambda_1..lambda_top."""
    gens = lams[1].gens if len(lams) > 1 else lams[0].gens
    zero = GradedPolynomial.zero(gens)
    e = [lams[i] if i < len(lams) else zero for i in range(top + 1)]
    p: List[GradedPolynomial] = [zero]
    # p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
    for m in range(1, top + 1):
        pm = e[m] * ((-1) ** (m - 1) * m)
        for i in range(1, m):
            pm = pm + e[i] * p[m - i] * ((-1) ** (i - 1))
        p.append(pm)
    return p


def chern_character_even_check(max_k: int) -> bool:
    """Every even graded piece of the Chern character of the Hodge bundle,
    recovered from the lambda expansion via Newton's identities, must be the
    zero polynomial.  Checks degrees 2, 4, ..., 2*max_k."""
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    top = 2 * max_k
    lams = lambda_from_kappa(top, top)
    p = _power_sums_from_chern(lams, top)
    return all(p[2 * k].is_zero() for k in range(1, max_k + 1))


# ---------------------------------------------------------------------------
# Jet-bundle classes of the special-linear-system loci
# ---------------------------------------------------------------------------

def _lambda_kappa_table(g: int) -> GeneratorTable:
    gens = [(f"lambda_{i}", i) for i in range(1, g + 1)]
    gens += [(f"kappa_{i}", i) for i in range(1, max(g - 1, 1) + 1)]
    return GeneratorTable(gens)


def _complete_homogeneous(l: int, m: int) -> int:
    """h_m(1, 2, ..., l), from the generating identity
    prod_{k=1}^{l} (1 - k t)^{-1} = sum_m h_m(1..l) t^m."""
    if m == 0:
        return 1
    # h_m(1..l) = sum over multisets; recursion h_m(1..l) = h_m(1..l-1) + l*h_{m-1}(1..l)
    row = [1] + [0] * m
    for k in range(1, l + 1):
        for j in range(1, m + 1):
            row[j] = row[j] + k * row[j - 1]
    return row[m]


def wl_class(g: int, l: int, substitute_lambda: bool = False) -> GradedPolynomial:
    """Degree-(g-l) component of
    (1 - lambda_1 + lambda_2 - ... + (-1)^g lambda_g) *
    sum_{m>=1} h_m(1..l) kappa_{m-1},
    with kappa_0 = 2g-2; h_m is the complete homogeneous symmetric
    polynomial evaluated at (1, ..., l).

    This is the jet-bundle expansion of the locus of curves carrying a point
    x with h^0(l x) >= 2, pushed down with its generic fiber multiplicity.
    For l = 2 that multiplicity is the 2g+2 Weierstrass points; see
    `hyperelliptic_class` for the normalized divisor-free class.
    With `substitute_lambda`, lambdas are replaced by their odd-kappa
    polynomials.
    """
    if not (2 <= l <= g):
        raise ValueError("need 2 <= l <= g")
    gens = _lambda_kappa_table(g)
    target = g - l
    out = GradedPolynomial.zero(gens)
    for i in range(0, g + 1):
        m = target - i + 1  # kappa_{m-1} has degree m-1 = target - i
        if m < 1:
            continue
        h = _complete_homogeneous(l, m)
        sign = (-1) ** i
        if i == 0:
            lam_part = GradedPolynomial.constant(gens, 1)
        else:
            lam_part = GradedPolynomial.generator(gens, f"lambda_{i}")
        if m - 1 == 0:
            kap_part = GradedPolynomial.constant(gens, 2 * g - 2)
        else:
            kap_part = GradedPolynomial.generator(gens, f"kappa_{m - 1}")
        out = out + lam_part * kap_part * (sign * h)
    if substitute_lambda:
        out = _substitute_lambdas(out, g)
    return out


def _substitute_lambdas(poly: GradedPolynomial, g: int) -> GradedPolynomial:
    """Rewrite lambda generators through their odd-kappa expansions."""
    gens = poly.gens
    max_lam = max((i for i in range(1, g + 1)
                   if any(m[gens.index(f"lambda_{i}")] for m in poly.terms)),
                  default=0)
    if not max_lam:
        return poly
    kgens = GeneratorTable([(n, d) for n, d in zip(gens.names, gens.degrees)
                            if n.startswith("kappa_")])
    lams = lambda_from_kappa(g, max_lam, kgens)
    out = GradedPolynomial.zero(kgens)
    for mono, c in poly.terms.items():
        term = GradedPolynomial.constant(kgens, c)
        for idx, e in enumerate(mono):
            if not e:
                continue
            name = gens.names[idx]
            if name.startswith("lambda_"):
                base = lams[int(name.split("_")[1])]
            else:
                base = GradedPolynomial.generator(kgens, name)
            for _ in range(e):
                term = term * base
        out = out + term
    return out


def hyperelliptic_class(g: int) -> GradedPolynomial:
    """The hyperelliptic-locus class [H] (in the convention where it equals
    twice the Q-stack class), from the jet-bundle expansion: the l = 2 case
    of `wl_class`, with lambdas rewritten in kappas, divided by the g+1
    half-count of Weierstrass points."""
    raw = wl_class(g, 2, substitute_lambda=True)
    return raw / Fraction(g + 1)


# ---------------------------------------------------------------------------
# Orbifold Euler characteristics
# ---------------------------------------------------------------------------

def euler_orbifold(g: int, n: int) -> Fraction:
    """Orbifold Euler characteristic of the open moduli space of n-pointed
    genus-g curves: (-1)^n (2g+n-3)!/(2g(2g-2)!) B_{2g} for g > 0, and
    (-1)^{n+1} (n-3)! in genus 0."""
    if 2 * g - 2 + n <= 0:
        raise ValueError(f"unstable pair ({g}, {n})")
    if g == 0:
        return Fraction((-1) ** (n + 1) * factorial(n - 3))
    return (Fraction((-1) ** n * factorial(2 * g + n - 3),
                     2 * g * factorial(2 * g - 2)) * bernoulli(2 * g))
