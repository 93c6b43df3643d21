"""Symmetric functions in noncommuting variables: the m/p/e/h bases over
set partitions, exact basis change, products, the omega involution, the
permutation action, the projection to commuting variables, the coproduct,
and the word-expansion bridge to the polynomial oracle.

The Schur-type bases ("s", "st") are carried by the same expression class;
their expansions into the h- and e-bases live in :mod:`ncschur.schur` and
are pulled in lazily to avoid an import cycle.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import cache

from . import ratlin
from .combinat import (
    Perm,
    SetPartition,
    format_set_partition,
    meet,
    parse_set_partition,
    parts_factorial,
    permute_set_partition,
    refines,
    set_partitions,
    shape_of,
    slash,
    sp_size,
    multiplicity_factorial,
)
from .ncpoly import NCPoly
from .sym import SymExpr

BASES = ("m", "p", "e", "h", "s", "st")

# expansion into words costs k^n; anything past this is a mistake, not a job
ORACLE_DEGREE_LIMIT = 8


class DegreeGuardError(ValueError):
    pass


def sp_order_key(pi: SetPartition):
    """Basis order: reverse of the block-size partition, zero-padded to the
    degree, in lexicographic order; ties broken by the canonical string
    encoding. This order refines dominance of the shapes."""
    n = sp_size(pi)
    lam = shape_of(pi)
    padded = (0,) * (n - len(lam)) + tuple(reversed(lam))
    return (padded, format_set_partition(pi))


@cache
def basis_order(n: int) -> tuple[SetPartition, ...]:
    return tuple(sorted(set_partitions(n), key=sp_order_key))


class NCSymExpr:
    """A finite rational linear combination of NCSym basis elements indexed
    by set partitions. Indices of different sizes may coexist; every
    per-degree operation treats the homogeneous components separately."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: dict[SetPartition, Fraction] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown NCSym basis {basis!r}")
        object.__setattr__(self, "basis", basis)
        clean = {}
        for pi, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[tuple(tuple(b) for b in pi)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("NCSymExpr is immutable")

    @classmethod
    def zero(cls, basis: str = "m") -> "NCSymExpr":
        return cls(basis)

    @classmethod
    def single(cls, basis: str, pi: SetPartition, coeff=1) -> "NCSymExpr":
        return cls(basis, {tuple(tuple(b) for b in pi): Fraction(coeff)})

    @classmethod
    def one(cls, basis: str = "h") -> "NCSymExpr":
        return cls.single(basis, ())

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({sp_size(pi) for pi in self.terms}))

    def map_terms(self, fn) -> "NCSymExpr":
        """Linear extension of an index-to-expression map fn."""
        out: dict = {}
        basis = None
        for pi, coeff in self.terms.items():
            image = fn(pi)
            basis = image.basis
            for sig, c in image.terms.items():
                out[sig] = out.get(sig, Fraction(0)) + coeff * c
        return NCSymExpr(basis or self.basis, out)

    def __add__(self, other: "NCSymExpr") -> "NCSymExpr":
        if self.basis != other.basis:
            return to_m(self) + to_m(other)
        terms = dict(self.terms)
        for pi, c in other.terms.items():
            terms[pi] = terms.get(pi, Fraction(0)) + c
        return NCSymExpr(self.basis, terms)

    def __neg__(self) -> "NCSymExpr":
        return NCSymExpr(self.basis, {pi: -c for pi, c in self.terms.items()})

    def __sub__(self, other: "NCSymExpr") -> "NCSymExpr":
        return self + (-other)

    def scale(self, scalar) -> "NCSymExpr":
        scalar = Fraction(scalar)
        return NCSymExpr(self.basis, {pi: scalar * c for pi, c in self.terms.items()})

    def __mul__(self, other: "NCSymExpr") -> "NCSymExpr":
        return product(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCSymExpr):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return to_m(self).terms == to_m(other).terms

    def __hash__(self):
        return hash((frozenset(to_m(self).terms.items()),))

    def sorted_terms(self):
        # leading indices first: descending basis order within each degree
        by_key = sorted(self.terms.items(), key=lambda item: sp_order_key(item[0]), reverse=True)
        return sorted(by_key, key=lambda item: sp_size(item[0]))

    def to_json(self) -> str:
        return json.dumps(
            {
                "algebra": "ncsym",
                "basis": self.basis,
                "terms": [
                    {"index": format_set_partition(pi), "coeff": str(c)}
                    for pi, c in self.sorted_terms()
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "NCSymExpr":
        data = json.loads(text)
        return cls(
            data["basis"],
            {
                parse_set_partition(t["index"]): Fraction(t["coeff"])
                for t in data["terms"]
            },
        )

    def __str__(self):
        from .expr_format import format_terms

        label = {"st": "s^t"}.get(self.basis, self.basis)
        return format_terms(label, self.sorted_terms(), format_set_partition)

    def __repr__(self):
        return f"NCSymExpr({self})"


# ---------------------------------------------------------------------------
# basis change

def _h_to_m_index(pi: SetPartition) -> dict[SetPartition, Fraction]:
    return {
        sig: Fraction(parts_factorial(shape_of(meet(sig, pi))))
        for sig in set_partitions(sp_size(pi))
    }


def _p_to_m_index(pi: SetPartition) -> dict[SetPartition, Fraction]:
    return {
        sig: Fraction(1)
        for sig in set_partitions(sp_size(pi))
        if refines(pi, sig)
    }


def _e_to_m_index(pi: SetPartition) -> dict[SetPartition, Fraction]:
    n = sp_size(pi)
    bottom = tuple((i,) for i in range(1, n + 1))
    return {
        sig: Fraction(1) for sig in set_partitions(n) if meet(sig, pi) == bottom
    }


_INDEX_TO_M = {"h": _h_to_m_index, "p": _p_to_m_index, "e": _e_to_m_index}


def to_m(expr: NCSymExpr) -> NCSymExpr:
    """Exact monomial-basis expansion."""
    if expr.basis == "m":
        return expr
    if expr.basis in ("s", "st"):
        return to_m(to_h_or_e(expr))
    fn = _INDEX_TO_M[expr.basis]
    return expr.map_terms(lambda pi: NCSymExpr("m", fn(pi)))


@cache
def _to_m_matrix(basis: str, n: int):
    order = basis_order(n)
    pos = {pi: i for i, pi in enumerate(order)}
    fn = _INDEX_TO_M[basis]
    mat = [[Fraction(0)] * len(order) for _ in order]
    for j, pi in enumerate(order):
        for sig, c in fn(pi).items():
            mat[pos[sig]][j] = c
    return mat


@cache
def _from_m_matrix(basis: str, n: int):
    return ratlin.inverse(_to_m_matrix(basis, n))


def from_m(expr: NCSymExpr, target: str) -> NCSymExpr:
    """Invert the monomial expansion of the p/e/h bases, degree by degree."""
    if expr.basis != "m":
        raise ValueError("from_m needs a monomial-basis expression")
    if target not in ("p", "e", "h"):
        raise ValueError(f"cannot convert into basis {target!r}")
    out: dict[SetPartition, Fraction] = {}
    by_degree: dict[int, dict[SetPartition, Fraction]] = {}
    for pi, c in expr.terms.items():
        by_degree.setdefault(sp_size(pi), {})[pi] = c
    for n, terms in by_degree.items():
        if n == 0:
            out[()] = out.get((), Fraction(0)) + terms[()]
            continue
        order = basis_order(n)
        vec = [terms.get(pi, Fraction(0)) for pi in order]
        coords = ratlin.mat_vec(_from_m_matrix(target, n), vec)
        for pi, c in zip(order, coords):
            if c:
                out[pi] = out.get(pi, Fraction(0)) + c
    return NCSymExpr(target, out)


def to_h_or_e(expr: NCSymExpr) -> NCSymExpr:
    """Expand the Schur-type bases: "s" into the h-basis, "st" into the
    e-basis."""
    from .schur import standard_schur, transposed_schur

    fn = standard_schur if expr.basis == "s" else transposed_schur
    return expr.map_terms(fn)


def to_h(expr: NCSymExpr) -> NCSymExpr:
    if expr.basis == "h":
        return expr
    if expr.basis == "s":
        return to_h_or_e(expr)
    return from_m(to_m(expr), "h")


# ---------------------------------------------------------------------------
# product, involution, actions

def product(f: NCSymExpr, g: NCSymExpr) -> NCSymExpr:
    """Bilinear product. On the p/e/h bases the indices multiply by the
    slash product; everything else routes through the h-basis and converts
    back."""
    if f.basis == g.basis and f.basis in ("p", "e", "h"):
        terms: dict[SetPartition, Fraction] = {}
        for pi, c1 in f.terms.items():
            for sig, c2 in g.terms.items():
                idx = slash(pi, sig)
                terms[idx] = terms.get(idx, Fraction(0)) + c1 * c2
        return NCSymExpr(f.basis, terms)
    prod_h = product(to_h(f), to_h(g))
    if f.basis == g.basis == "m":
        return to_m(prod_h)
    if f.basis == g.basis == "s":
        from .schur import h_to_schur

        return h_to_schur(prod_h)
    return prod_h


def sp_sign(pi: SetPartition) -> int:
    """Sign of any permutation with one cycle per block."""
    return -1 if (sp_size(pi) - len(pi)) % 2 else 1


def omega(expr: NCSymExpr) -> NCSymExpr:
    """The involution exchanging the h- and e-type bases."""
    if expr.basis == "h":
        return NCSymExpr("e", expr.terms)
    if expr.basis == "e":
        return NCSymExpr("h", expr.terms)
    if expr.basis == "p":
        return NCSymExpr(
            "p", {pi: c * sp_sign(pi) for pi, c in expr.terms.items()}
        )
    if expr.basis == "m":
        return to_m(omega(from_m(expr, "h")))
    if expr.basis == "s":
        return NCSymExpr("st", expr.terms)
    return NCSymExpr("s", expr.terms)


def delta_action(delta: Perm, expr: NCSymExpr) -> NCSymExpr:
    """Relabel every index by the permutation. Defined on the m/p/e/h bases."""
    if expr.basis not in ("m", "p", "e", "h"):
        raise ValueError("the permutation action needs an m/p/e/h expression")
    terms: dict[SetPartition, Fraction] = {}
    for pi, c in expr.terms.items():
        idx = permute_set_partition(delta, pi)
        terms[idx] = terms.get(idx, Fraction(0)) + c
    return NCSymExpr(expr.basis, terms)


_RHO_SCALE = {
    "m": lambda lam: multiplicity_factorial(lam),
    "p": lambda lam: 1,
    "e": lambda lam: parts_factorial(lam),
    "h": lambda lam: parts_factorial(lam),
}


def rho(expr: NCSymExpr) -> SymExpr:
    """The projection that lets the variables commute."""
    if expr.basis in ("s", "st"):
        return rho(to_h_or_e(expr))
    scale = _RHO_SCALE[expr.basis]
    terms: dict = {}
    for pi, c in expr.terms.items():
        lam = shape_of(pi)
        terms[lam] = terms.get(lam, Fraction(0)) + c * scale(lam)
    return SymExpr(expr.basis, terms)


# ---------------------------------------------------------------------------
# coproduct

def standardize(block_family) -> SetPartition:
    """Renumber the entries of a family of disjoint blocks onto an initial
    interval, preserving relative order."""
    entries = sorted(x for b in block_family for x in b)
    rank = {x: i + 1 for i, x in enumerate(entries)}
    from .combinat import canonical_set_partition

    return canonical_set_partition(
        tuple(rank[x] for x in b) for b in block_family
    )


def coproduct(expr: NCSymExpr, i: int | None = None) -> dict:
    """The monomial-basis coproduct: each index splits over all subsets of
    its blocks, both sides standardized. Returns a map
    (left index, right index) -> coefficient, restricted to left degree i
    when i is given."""
    expr_m = to_m(expr)
    out: dict[tuple[SetPartition, SetPartition], Fraction] = {}
    for pi, coeff in expr_m.terms.items():
        ell = len(pi)
        for picks in itertools.product((0, 1), repeat=ell):
            left = tuple(b for b, take in zip(pi, picks) if take)
            right = tuple(b for b, take in zip(pi, picks) if not take)
            if i is not None and sum(len(b) for b in left) != i:
                continue
            key = (standardize(left), standardize(right))
            out[key] = out.get(key, Fraction(0)) + coeff
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# expansion into noncommuting words

def _check_degree(n: int):
    if n > ORACLE_DEGREE_LIMIT:
        raise DegreeGuardError(
            f"oracle expansion of degree {n} exceeds the limit {ORACLE_DEGREE_LIMIT}"
        )


@cache
def _expand_m(pi: SetPartition, k: int) -> dict:
    n = sp_size(pi)
    words: dict = {}
    for values in itertools.permutations(range(1, k + 1), len(pi)):
        word = [0] * n
        for b, v in zip(pi, values):
            for x in b:
                word[x - 1] = v
        words[tuple(word)] = words.get(tuple(word), 0) + 1
    return words


@cache
def _expand_p(pi: SetPartition, k: int) -> dict:
    n = sp_size(pi)
    words: dict = {}
    for values in itertools.product(range(1, k + 1), repeat=len(pi)):
        word = [0] * n
        for b, v in zip(pi, values):
            for x in b:
                word[x - 1] = v
        words[tuple(word)] = words.get(tuple(word), 0) + 1
    return words


@cache
def _expand_e(pi: SetPartition, k: int) -> dict:
    n = sp_size(pi)
    words: dict = {}
    pools = [itertools.permutations(range(1, k + 1), len(b)) for b in pi]
    for choice in itertools.product(*pools):
        word = [0] * n
        for b, values in zip(pi, choice):
            for x, v in zip(b, values):
                word[x - 1] = v
        words[tuple(word)] = words.get(tuple(word), 0) + 1
    return words


@cache
def _expand_h(pi: SetPartition, k: int) -> dict:
    # the double sum over block-fixing permutations composed with weakly
    # increasing values per block, collapsed: within one block every tuple
    # of values occurs, and the number of (sorted tuple, permutation) pairs
    # producing it is the product of its value-multiplicity factorials
    from math import factorial

    n = sp_size(pi)

    def block_words(b):
        out = {}
        for vals in itertools.product(range(1, k + 1), repeat=len(b)):
            mult = 1
            for v in set(vals):
                mult *= factorial(vals.count(v))
            out[vals] = mult
        return out

    words: dict = {}
    pools = [block_words(b) for b in pi]
    for choice in itertools.product(*pools):
        word = [0] * n
        mult = 1
        for b, vals, pool in zip(pi, choice, pools):
            mult *= pool[vals]
            for x, v in zip(b, vals):
                word[x - 1] = v
        words[tuple(word)] = words.get(tuple(word), 0) + mult
    return words


_EXPANDERS = {"m": _expand_m, "p": _expand_p, "e": _expand_e, "h": _expand_h}


def oracle_expand(expr: NCSymExpr, k: int) -> NCPoly:
    """Exact truncated expansion into words over x_1..x_k."""
    if k < 1:
        raise ValueError("need at least one variable")
    if expr.basis in ("s", "st"):
        return oracle_expand(to_h_or_e(expr), k)
    expander = _EXPANDERS[expr.basis]
    out = NCPoly.zero(k)
    for pi, coeff in expr.terms.items():
        _check_degree(sp_size(pi))
        words = expander(pi, k)
        out = out + NCPoly(k, {w: Fraction(c) for w, c in words.items()}).scale(coeff)
    return out


def naive_expand(basis: str, pi: SetPartition, k: int) -> NCPoly:
    """Independent brute-force expansion straight from the tuple-pattern
    definitions: every tuple in {1..k}^n is tested against the membership
    condition. The h-basis goes through its defining monomial expansion."""
    n = sp_size(pi)
    _check_degree(n)
    if basis == "h":
        out = NCPoly.zero(k)
        for sig in set_partitions(n):
            c = parts_factorial(shape_of(meet(sig, pi)))
            out = out + naive_expand("m", sig, k).scale(c)
        return out
    where = {x: i for i, b in enumerate(pi) for x in b}
    terms: dict = {}
    for word in itertools.product(range(1, k + 1), repeat=n):
        ok = True
        for j in range(n):
            for l in range(j + 1, n):
                same_block = where[j + 1] == where[l + 1]
                if basis == "m" and (word[j] == word[l]) != same_block:
                    ok = False
                elif basis == "p" and same_block and word[j] != word[l]:
                    ok = False
                elif basis == "e" and same_block and word[j] == word[l]:
                    ok = False
                if not ok:
                    break
            if not ok:
                break
        if ok:
            terms[word] = terms.get(word, Fraction(0)) + 1
    return NCPoly(k, terms)
