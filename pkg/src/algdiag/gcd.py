"""Greatest common divisors, contents and square-free decompositions.

The gcd kernels delegate to sympy's dense integer-polynomial gcd (heuristic
GCD with a PRS fallback); everything built on top of them lives here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from gmpy2 import mpq
from sympy.polys.densebasic import dmp_from_dict, dmp_to_dict
from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dmp_gcd, dup_gcd

from .polynomials import BiPoly, UniPoly, canonical, integer_primitive_scale

__all__ = [
    "uni_gcd",
    "bi_gcd",
    "content_y",
    "primitive_part_y",
    "SquareFreeDecomposition",
    "squarefree_decomposition",
    "uni_squarefree_part",
]


def _uni_to_zz(p: UniPoly) -> list:
    s = integer_primitive_scale(p.coeffs)
    return [ZZ(int(v * s)) for v in reversed(p.coeffs)]


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    if not a:
        return b.monic() if b else b
    if not b:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return UniPoly((1,))
    g = dup_gcd(_uni_to_zz(a), _uni_to_zz(b), ZZ)
    return UniPoly([mpq(int(v)) for v in reversed(g)]).monic()


def uni_gcd_many(polys) -> UniPoly:
    polys = sorted((p for p in polys if p), key=lambda p: p.degree)
    g = UniPoly()
    for p in polys:
        g = uni_gcd(g, p)
        if g.degree == 0:
            break
    return g


def _bi_to_dmp(p: BiPoly):
    s = integer_primitive_scale([v for _, _, v in p.terms()])
    return dmp_from_dict({(j, i): ZZ(int(v * s)) for i, j, v in p.terms()}, 1, ZZ)


def bi_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Gcd in Q[x, y], returned in canonical form (main variable y)."""
    if not a:
        return canonical(b)
    if not b:
        return canonical(a)
    g = dmp_gcd(_bi_to_dmp(a), _bi_to_dmp(b), 1, ZZ)
    terms = dmp_to_dict(g, 1)
    return canonical(BiPoly.from_dict({(i, j): mpq(int(v)) for (j, i), v in terms.items()}))


def content_y(p: BiPoly) -> UniPoly:
    """Monic gcd of the coefficients of ``p`` wrt y, a polynomial in x."""
    return uni_gcd_many(p.y_coeffs())


def primitive_part_y(p: BiPoly) -> BiPoly:
    """``p`` divided by its content in x, in canonical form."""
    if not p:
        return p
    c = content_y(p)
    if c.degree > 0:
        p = BiPoly.from_y_coeffs([q.exact_div(c) for q in p.y_coeffs()])
    return canonical(p)


def uni_squarefree_part(p: UniPoly) -> UniPoly:
    if not p:
        raise ValueError("zero polynomial has no square-free decomposition")
    if p.degree <= 0:
        return UniPoly((1,))
    return p.exact_div(uni_gcd(p, p.derivative())).monic()


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """``content * prod(f**i for f, i in factors)`` reconstructs the input.

    Factors are square-free and pairwise coprime wrt the chosen variable,
    each of positive degree in it, listed by increasing multiplicity.
    """

    factors: tuple
    content: UniPoly
    wrt: str = "y"

    @property
    def m(self) -> int:
        return len(self.factors)

    def squarefree_part(self) -> BiPoly:
        """``prod(f for f, _ in factors)``; the content is left out."""
        return reduce(lambda acc, fi: acc * fi[0], self.factors, BiPoly.constant(1))

    def expand(self) -> BiPoly:
        acc = BiPoly.constant(1)
        for f, i in self.factors:
            acc = acc * f**i
        c = BiPoly._coerce(self.content)
        if self.wrt == "x":
            c = c.transpose()
        return acc * c

    def multiplicity_map(self) -> dict:
        return {i: f for f, i in self.factors}


def squarefree_decomposition(q: BiPoly, wrt: str = "y") -> SquareFreeDecomposition:
    """Square-free decomposition of a bivariate polynomial wrt ``wrt``.

    The part of ``q`` that does not involve ``wrt`` is returned as the
    content, a polynomial in the other variable.  Yun's algorithm runs on
    the primitive part.
    """
    if not q:
        raise ValueError("zero polynomial has no square-free decomposition")
    if wrt not in ("x", "y"):
        raise ValueError(f"unknown variable {wrt!r}")
    if wrt == "x":
        d = squarefree_decomposition(q.transpose(), "y")
        return SquareFreeDecomposition(
            tuple((f.transpose(), i) for f, i in d.factors), d.content, "x"
        )

    f = primitive_part_y(q)
    factors = []
    if f.deg_y > 0:
        fp = f.diff_y()
        a = bi_gcd(f, fp)
        b = f.exact_div(a)
        c = fp.exact_div(a)
        dd = c - b.diff_y()
        i = 1
        while b.deg_y > 0:
            a = bi_gcd(b, dd)
            if a.deg_y > 0:
                factors.append((canonical(a), i))
            b = b.exact_div(a)
            c = dd.exact_div(a)
            dd = c - b.diff_y()
            i += 1

    rest = q
    for g, i in factors:
        rest = rest.exact_div(g**i)
    if rest.deg_y > 0:
        raise ArithmeticError("square-free decomposition failed to reconstruct its input")
    content = rest.y_coeffs()[0] if rest else UniPoly()
    return SquareFreeDecomposition(tuple(factors), content, "y")

