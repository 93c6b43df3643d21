"""Noncommutative symmetric functions indexed by compositions: the
complete homogeneous basis H, the ribbon basis R, and the immaculate basis
S, together with the embedding into symmetric functions in noncommuting
variables and the forgetful map onto classical symmetric functions.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import cache

from .combinat import (
    Composition,
    check_composition,
    coarsenings,
    format_composition,
    interval_partition,
    parse_composition,
    parts_factorial,
    sort_to_partition,
)
from .ncsym import NCSymExpr
from .sym import SymExpr

BASES = ("H", "R", "S")


class NSymExpr:
    """A finite rational linear combination of basis elements indexed by
    compositions."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: dict[Composition, Fraction] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown NSym basis {basis!r}")
        object.__setattr__(self, "basis", basis)
        clean = {}
        for alpha, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[check_composition(alpha)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("NSymExpr is immutable")

    @classmethod
    def zero(cls, basis: str = "H") -> "NSymExpr":
        return cls(basis)

    @classmethod
    def single(cls, basis: str, alpha: Composition, coeff=1) -> "NSymExpr":
        return cls(basis, {tuple(alpha): Fraction(coeff)})

    @classmethod
    def one(cls, basis: str = "H") -> "NSymExpr":
        return cls.single(basis, ())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "NSymExpr") -> "NSymExpr":
        if self.basis != other.basis:
            return self.to_H() + other.to_H()
        terms = dict(self.terms)
        for alpha, c in other.terms.items():
            terms[alpha] = terms.get(alpha, Fraction(0)) + c
        return NSymExpr(self.basis, terms)

    def __neg__(self) -> "NSymExpr":
        return NSymExpr(self.basis, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other: "NSymExpr") -> "NSymExpr":
        return self + (-other)

    def scale(self, scalar) -> "NSymExpr":
        scalar = Fraction(scalar)
        return NSymExpr(self.basis, {a: scalar * c for a, c in self.terms.items()})

    def __mul__(self, other: "NSymExpr") -> "NSymExpr":
        return product(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NSymExpr):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return self.to_H().terms == other.to_H().terms

    def __hash__(self):
        return hash(frozenset(self.to_H().terms.items()))

    def to_H(self) -> "NSymExpr":
        if self.basis == "H":
            return self
        fn = ribbon_to_H if self.basis == "R" else immaculate_to_H
        terms: dict[Composition, Fraction] = {}
        for alpha, coeff in self.terms.items():
            for beta, c in fn(alpha).items():
                terms[beta] = terms.get(beta, Fraction(0)) + coeff * c
        return NSymExpr("H", terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def to_json(self) -> str:
        return json.dumps(
            {
                "algebra": "nsym",
                "basis": self.basis,
                "terms": [
                    {"index": format_composition(a), "coeff": str(c)}
                    for a, c in self.sorted_terms()
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "NSymExpr":
        data = json.loads(text)
        return cls(
            data["basis"],
            {
                parse_composition(t["index"]): Fraction(t["coeff"])
                for t in data["terms"]
            },
        )

    def __str__(self):
        from .expr_format import format_terms

        return format_terms(self.basis, self.sorted_terms(), format_composition)

    def __repr__(self):
        return f"NSymExpr({self})"


@cache
def ribbon_to_H(alpha: Composition) -> dict[Composition, Fraction]:
    """Expand a ribbon basis element over the coarsenings of its index."""
    ell = len(alpha)
    out: dict[Composition, Fraction] = {}
    for beta in coarsenings(alpha):
        sign = -1 if (ell - len(beta)) % 2 else 1
        out[beta] = out.get(beta, Fraction(0)) + sign
    return out


@cache
def immaculate_to_H(alpha: Composition) -> dict[Composition, Fraction]:
    """Expand an immaculate basis element as the signed sum over
    permutations of the shifted index, skipping negative parts and dropping
    zero parts."""
    ell = len(alpha)
    out: dict[Composition, Fraction] = {}
    for sigma in itertools.permutations(range(ell)):
        parts = []
        ok = True
        sign = 1
        for i in range(ell):
            c = alpha[i] + sigma[i] - i
            if c < 0:
                ok = False
                break
            if c:
                parts.append(c)
        if not ok:
            continue
        inv = sum(
            1
            for i in range(ell)
            for j in range(i + 1, ell)
            if sigma[i] > sigma[j]
        )
        sign = -1 if inv % 2 else 1
        beta = tuple(parts)
        out[beta] = out.get(beta, Fraction(0)) + sign
    return {b: c for b, c in out.items() if c}


def product(f: NSymExpr, g: NSymExpr) -> NSymExpr:
    """Bilinear product; the H-basis indices multiply by concatenation."""
    if f.basis == "H" and g.basis == "H":
        terms: dict[Composition, Fraction] = {}
        for a, c1 in f.terms.items():
            for b, c2 in g.terms.items():
                idx = a + b
                terms[idx] = terms.get(idx, Fraction(0)) + c1 * c2
        return NSymExpr("H", terms)
    return product(f.to_H(), g.to_H())


def iota(expr: NSymExpr) -> NCSymExpr:
    """The embedding into NCSym: H on a composition maps to the complete
    homogeneous element on the matching interval set partition, scaled by
    the reciprocal of the parts factorial."""
    expr = expr.to_H()
    terms = {}
    for alpha, coeff in expr.terms.items():
        pi = interval_partition(alpha)
        terms[pi] = terms.get(pi, Fraction(0)) + coeff / parts_factorial(alpha)
    return NCSymExpr("h", terms)


def chi(expr: NSymExpr) -> SymExpr:
    """The forgetful map onto classical symmetric functions: H on a
    composition maps to h on the sorted index."""
    expr = expr.to_H()
    terms: dict = {}
    for alpha, coeff in expr.terms.items():
        lam = sort_to_partition(alpha)
        terms[lam] = terms.get(lam, Fraction(0)) + coeff
    return SymExpr("h", terms)
