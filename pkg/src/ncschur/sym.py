"""Classical symmetric functions over integer partitions: the m/p/e/h/s
bases, Jacobi-Trudi determinants, Kostka numbers and Littlewood-Richardson
coefficients.

Basis changes route through the monomial basis. A function in a
multiplicative basis is expanded exactly by multiplying out its generators
as polynomials in deg-many variables, which is faithful for the monomial
functions that can occur.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import cache

from . import ratlin
from .combinat import (
    Partition,
    SkewShape,
    check_partition,
    format_partition,
    kostka,
    parse_partition,
    partitions,
    sort_to_partition,
    transpose,
)
from .ncpoly import CPoly

BASES = "mpehs"


class SymExpr:
    """A finite rational linear combination of basis elements m/p/e/h/s
    indexed by integer partitions."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: dict[Partition, Fraction] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        object.__setattr__(self, "basis", basis)
        clean = {}
        for lam, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[check_partition(lam)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("SymExpr is immutable")

    @classmethod
    def zero(cls, basis: str = "m") -> "SymExpr":
        return cls(basis)

    @classmethod
    def single(cls, basis: str, lam: Partition, coeff=1) -> "SymExpr":
        return cls(basis, {tuple(lam): Fraction(coeff)})

    @classmethod
    def one(cls, basis: str = "m") -> "SymExpr":
        return cls.single(basis, ())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SymExpr") -> "SymExpr":
        if self.basis != other.basis:
            return self.to_m() + other.to_m()
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, Fraction(0)) + c
        return SymExpr(self.basis, terms)

    def __neg__(self) -> "SymExpr":
        return SymExpr(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymExpr") -> "SymExpr":
        return self + (-other)

    def scale(self, scalar) -> "SymExpr":
        scalar = Fraction(scalar)
        return SymExpr(self.basis, {lam: scalar * c for lam, c in self.terms.items()})

    def __mul__(self, other: "SymExpr") -> "SymExpr":
        return product(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymExpr):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return self.to_m().terms == other.to_m().terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.to_m().terms.items())))

    def to_m(self) -> "SymExpr":
        if self.basis == "m":
            return self
        terms: dict[Partition, Fraction] = {}
        for lam, coeff in self.terms.items():
            for gam, k in _index_to_m(self.basis, lam).items():
                terms[gam] = terms.get(gam, Fraction(0)) + coeff * k
        return SymExpr("m", terms)

    def to_s(self) -> "SymExpr":
        if self.basis == "s":
            return self
        return m_to_s(self.to_m())

    def to_json(self) -> str:
        items = sorted(self.terms.items())
        return json.dumps(
            {
                "algebra": "sym",
                "basis": self.basis,
                "terms": [
                    {"index": format_partition(lam), "coeff": str(c)}
                    for lam, c in items
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SymExpr":
        data = json.loads(text)
        return cls(
            data["basis"],
            {
                parse_partition(t["index"]): Fraction(t["coeff"])
                for t in data["terms"]
            },
        )

    def __str__(self):
        from .expr_format import format_terms

        return format_terms(self.basis, sorted(self.terms.items()), format_partition)

    def __repr__(self):
        return f"SymExpr({self})"


# ---------------------------------------------------------------------------
# monomial expansions

def _generator_cpoly(basis: str, r: int, k: int) -> CPoly:
    """The degree-r generator of a multiplicative basis in k variables."""
    terms: dict[tuple[int, ...], Fraction] = {}
    if basis == "p":
        for i in range(k):
            expo = [0] * k
            expo[i] = r
            terms[tuple(expo)] = Fraction(1)
    elif basis == "e":
        for support in itertools.combinations(range(k), r):
            expo = [0] * k
            for i in support:
                expo[i] = 1
            terms[tuple(expo)] = Fraction(1)
    elif basis == "h":
        for multi in itertools.combinations_with_replacement(range(k), r):
            expo = [0] * k
            for i in multi:
                expo[i] += 1
            terms[tuple(expo)] = Fraction(1)
    else:
        raise ValueError(basis)
    return CPoly(k, terms)


def _extract_m(poly: CPoly, k: int) -> dict[Partition, Fraction]:
    """Read off monomial-basis coefficients from a symmetric polynomial in
    k variables: the coefficient of m_gam is that of x^gam."""
    out = {}
    for expo, coeff in poly.terms.items():
        gam = sort_to_partition(expo)
        if tuple(gam) + (0,) * (k - len(gam)) == expo:
            out[gam] = coeff
    return out


@cache
def _index_to_m(basis: str, lam: Partition) -> dict[Partition, Fraction]:
    n = sum(lam)
    if n == 0:
        return {(): Fraction(1)}
    if basis == "s":
        return {
            gam: Fraction(kostka(SkewShape(lam, ()), gam))
            for gam in partitions(n)
            if kostka(SkewShape(lam, ()), gam)
        }
    poly = CPoly.one(n)
    for r in lam:
        poly = poly * _generator_cpoly(basis, r, n)
    return _extract_m(poly, n)


def expand(expr: SymExpr, k: int) -> CPoly:
    """Exact truncation of the expression to k commuting variables."""
    out = CPoly.zero(k)
    for lam, coeff in expr.to_m().terms.items():
        if len(lam) > k:
            continue
        terms = {}
        for perm in set(itertools.permutations(lam + (0,) * (k - len(lam)))):
            terms[perm] = Fraction(1)
        out = out + CPoly(k, terms).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# products

@cache
def _m_times_m(mu: Partition, nu: Partition) -> dict[Partition, Fraction]:
    k = max(sum(mu) + sum(nu), 1)
    prod = expand(SymExpr.single("m", mu), k) * expand(SymExpr.single("m", nu), k)
    return _extract_m(prod, k)


def product(f: SymExpr, g: SymExpr) -> SymExpr:
    if f.basis == g.basis and f.basis in "peh":
        terms: dict[Partition, Fraction] = {}
        for lam, c1 in f.terms.items():
            for mu, c2 in g.terms.items():
                idx = sort_to_partition(lam + mu)
                terms[idx] = terms.get(idx, Fraction(0)) + c1 * c2
        return SymExpr(f.basis, terms)
    fm, gm = f.to_m(), g.to_m()
    terms = {}
    for mu, c1 in fm.terms.items():
        for nu, c2 in gm.terms.items():
            for lam, k in _m_times_m(mu, nu).items():
                terms[lam] = terms.get(lam, Fraction(0)) + c1 * c2 * k
    return SymExpr("m", terms)


# ---------------------------------------------------------------------------
# Schur functions

def jacobi_trudi(shape: SkewShape, flavor: str = "h") -> SymExpr:
    """The (dual) Jacobi-Trudi expansion of a skew Schur function in the
    h-basis (flavor "h") or e-basis (flavor "e")."""
    if flavor == "e":
        outer, inner = transpose(shape.outer), transpose(shape.inner)
    elif flavor == "h":
        outer, inner = shape.outer, shape.inner
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    ell = len(outer)
    if ell == 0:
        return SymExpr.one(flavor)
    terms: dict[Partition, Fraction] = {}

    def inner_at(j):
        return inner[j] if j < len(inner) else 0

    def rec(i: int, used: int, sign: int, entries: tuple[int, ...]):
        if i == ell:
            idx = sort_to_partition(entries)
            terms[idx] = terms.get(idx, Fraction(0)) + sign
            return
        for j in range(ell):
            if used >> j & 1:
                continue
            c = outer[i] - inner_at(j) - i + j
            if c < 0:
                continue
            # columns already used above this one each contribute an inversion
            inversions = (used >> (j + 1)).bit_count()
            step = -1 if inversions % 2 else 1
            rec(i + 1, used | 1 << j, sign * step, entries + (c,))

    rec(0, 0, 1, ())
    return SymExpr(flavor, {lam: c for lam, c in terms.items() if c})


@cache
def _kostka_inverse(n: int):
    lams = list(partitions(n))
    mat = [
        [Fraction(kostka(SkewShape(lam, ()), gam)) for lam in lams] for gam in lams
    ]
    return lams, ratlin.inverse(mat)


def m_to_s(expr: SymExpr) -> SymExpr:
    """Rewrite a monomial-basis expression in the Schur basis by inverting
    the Kostka matrix degree by degree."""
    if expr.basis != "m":
        raise ValueError("m_to_s needs a monomial-basis expression")
    by_degree: dict[int, dict[Partition, Fraction]] = {}
    for lam, c in expr.terms.items():
        by_degree.setdefault(sum(lam), {})[lam] = c
    out: dict[Partition, Fraction] = {}
    for n, terms in by_degree.items():
        if n == 0:
            out[()] = out.get((), Fraction(0)) + terms[()]
            continue
        lams, inv = _kostka_inverse(n)
        vec = [terms.get(gam, Fraction(0)) for gam in lams]
        for lam, coeff in zip(lams, ratlin.mat_vec(inv, vec)):
            if coeff:
                out[lam] = out.get(lam, Fraction(0)) + coeff
    return SymExpr("s", out)


def schur(lam: Partition) -> SymExpr:
    return SymExpr.single("s", lam)


def skew_schur(shape: SkewShape, basis: str = "h") -> SymExpr:
    """A skew Schur function in the requested basis."""
    if basis in ("h", "e"):
        return jacobi_trudi(shape, basis)
    if basis == "m":
        return jacobi_trudi(shape, "h").to_m()
    if basis == "s":
        return jacobi_trudi(shape, "h").to_s()
    raise ValueError(f"cannot produce a skew Schur function in basis {basis!r}")


def littlewood_richardson(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The coefficient of s_nu in the skew Schur function on lam/mu."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    from .combinat import contains

    if not contains(lam, mu):
        return 0
    coeff = skew_schur(SkewShape(lam, mu), "s").terms.get(nu, Fraction(0))
    if coeff.denominator != 1 or coeff < 0:
        raise ArithmeticError(f"non-integral LR coefficient for {lam}/{mu}, {nu}")
    return int(coeff)
