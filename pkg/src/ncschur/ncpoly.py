"""Exact truncated polynomials: noncommuting words over x_1..x_k with
rational coefficients, plus their commutative images.

These are the independent ground truth for every symbolic identity in the
package: an expression is expanded into words and compared term by term.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable

Word = tuple[int, ...]


class CutoffMismatch(ValueError):
    pass


def _check_same_k(p: "NCPoly | CPoly", q: "NCPoly | CPoly"):
    if p.k != q.k:
        raise CutoffMismatch(f"variable cutoffs differ: {p.k} != {q.k}")


class NCPoly:
    """A finite linear combination of words over {1,..,k}.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict[Word, Fraction] | None = None):
        if k < 1:
            raise ValueError("variable cutoff must be at least 1")
        object.__setattr__(self, "k", k)
        clean = {}
        for word, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if any(not 1 <= x <= k for x in word):
                raise ValueError(f"word {word} has letters outside 1..{k}")
            clean[tuple(word)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("NCPoly is immutable")

    @classmethod
    def zero(cls, k: int) -> "NCPoly":
        return cls(k)

    @classmethod
    def one(cls, k: int) -> "NCPoly":
        return cls(k, {(): Fraction(1)})

    @classmethod
    def monomial(cls, k: int, word: Iterable[int], coeff=1) -> "NCPoly":
        return cls(k, {tuple(word): Fraction(coeff)})

    def __add__(self, other: "NCPoly") -> "NCPoly":
        _check_same_k(self, other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, Fraction(0)) + coeff
        return NCPoly(self.k, terms)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.k, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def scale(self, scalar) -> "NCPoly":
        scalar = Fraction(scalar)
        return NCPoly(self.k, {w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        _check_same_k(self, other)
        terms: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                terms[word] = terms.get(word, Fraction(0)) + c1 * c2
        return NCPoly(self.k, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        _check_same_k(self, other)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def commutative_image(self) -> "CPoly":
        """Let the variables commute: each word maps to its exponent vector."""
        terms: dict[Word, Fraction] = {}
        for word, coeff in self.terms.items():
            expo = tuple(word.count(i) for i in range(1, self.k + 1))
            terms[expo] = terms.get(expo, Fraction(0)) + coeff
        return CPoly(self.k, terms)

    def to_json(self) -> str:
        items = sorted(self.terms.items())
        return json.dumps(
            {
                "k": self.k,
                "terms": [{"word": list(w), "coeff": str(c)} for w, c in items],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "NCPoly":
        data = json.loads(text)
        return cls(
            data["k"],
            {tuple(t["word"]): Fraction(t["coeff"]) for t in data["terms"]},
        )

    def __repr__(self):
        return f"NCPoly(k={self.k}, {len(self.terms)} terms)"


class CPoly:
    """A commutative polynomial in x_1..x_k, keyed by exponent vectors of
    length k. The image of :meth:`NCPoly.commutative_image`."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict[Word, Fraction] | None = None):
        if k < 1:
            raise ValueError("variable cutoff must be at least 1")
        object.__setattr__(self, "k", k)
        clean = {}
        for expo, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if len(expo) != k or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent vector {expo} for k={k}")
            clean[tuple(expo)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("CPoly is immutable")

    @classmethod
    def zero(cls, k: int) -> "CPoly":
        return cls(k)

    @classmethod
    def one(cls, k: int) -> "CPoly":
        return cls(k, {(0,) * k: Fraction(1)})

    def __add__(self, other: "CPoly") -> "CPoly":
        _check_same_k(self, other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            terms[expo] = terms.get(expo, Fraction(0)) + coeff
        return CPoly(self.k, terms)

    def __neg__(self) -> "CPoly":
        return CPoly(self.k, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "CPoly") -> "CPoly":
        return self + (-other)

    def scale(self, scalar) -> "CPoly":
        scalar = Fraction(scalar)
        return CPoly(self.k, {e: scalar * c for e, c in self.terms.items()})

    def __mul__(self, other: "CPoly") -> "CPoly":
        _check_same_k(self, other)
        terms: dict[Word, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                terms[expo] = terms.get(expo, Fraction(0)) + c1 * c2
        return CPoly(self.k, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CPoly):
            return NotImplemented
        _check_same_k(self, other)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"CPoly(k={self.k}, {len(self.terms)} terms)"
