"""Semigroup analogs: Rees-type M_inf(P) and the semigroup P^(c).

P^(c) is generated by t, t^-1, e_00(1) and c_0N inside F_2[P] wr F_2[t^-1, t].
Elements are evaluated with the wreath normal form; since every product of
generators is monomial (each matrix entry a single element of P), distinct
normal forms are distinct semigroup elements.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .algebra import (Algebra, MonomialQuotientAlgebra, PolynomialAlgebra,
                      StructureConstantAlgebra)
from .errors import AssociativityError, PreconditionError
from .fields import Field
from .growth import GrowthSeries
from .sequence import GeneratingSequence
from .wreath import GEN_NAMES, WreathElement, WreathProduct

GF2 = Field(2)


class SemigroupSpec:
    """A semigroup P together with its semigroup algebra F_2[P].

    Kinds: ``free_monogenic`` (x^0, x^1, ...), ``table`` (Cayley table on
    0..d-1), ``free_monoid`` (words over an alphabet, length capped).
    """

    def __init__(self, kind: str, *, table=None, alphabet=None, cap: int | None = None,
                 unit: bool = True):
        self.kind = kind
        self.unit = unit
        self.cap = cap
        if kind == "free_monogenic":
            self.algebra: Algebra = PolynomialAlgebra(GF2, ["x"])
        elif kind == "table":
            if table is None:
                raise PreconditionError("table semigroup needs a Cayley table")
            self.cayley = [list(map(int, row)) for row in table]
            d = len(self.cayley)
            if any(len(r) != d or any(not 0 <= v < d for v in r) for r in self.cayley):
                raise PreconditionError("Cayley table must be square with entries in range")
            self._check_table()
            sc = [[{self.cayley[i][j]: 1} for j in range(d)] for i in range(d)]
            self.algebra = StructureConstantAlgebra(GF2, sc, is_unital=None if unit else False,
                                                    names=[f"p{i}" for i in range(d)])
        elif kind == "free_monoid":
            if cap is None:
                raise PreconditionError("free_monoid semigroups need a length cap")
            self.algebra = MonomialQuotientAlgebra(GF2, alphabet or ["a", "b"], cap=cap)
        else:
            raise PreconditionError(f"unknown semigroup kind {kind!r}")

    def _check_table(self):
        T = self.cayley
        for a, b, c in itertools.product(range(len(T)), repeat=3):
            if T[T[a][b]][c] != T[a][T[b][c]]:
                raise AssociativityError((a, b, c))

    @classmethod
    def trivial(cls) -> "SemigroupSpec":
        return cls("table", table=[[0]])

    @classmethod
    def free_monogenic(cls) -> "SemigroupSpec":
        return cls("free_monogenic")

    def mul(self, a, b):
        """Product of two elements of P given as basis labels of F_2[P]."""
        (label, _), = self.algebra.basis_mul(a, b) or [(None, None)]
        return label

    def element(self, text: str):
        """Label of a semigroup element written like ``x^3``, ``p2`` or ``ab``."""
        x = self.algebra.parse(text)
        if len(x.terms) != 1:
            raise PreconditionError(f"{text!r} is not a single semigroup element")
        return next(iter(x.terms))

    def elements(self):
        if self.kind != "table":
            raise PreconditionError("only table semigroups are enumerable")
        return list(range(len(self.cayley)))

    def describe(self) -> dict:
        out = {"kind": self.kind, "unit": self.unit}
        if self.cap is not None:
            out["cap"] = self.cap
            out["truncated_at_length"] = self.cap
        return out


@dataclass(frozen=True)
class ReesElement:
    """Zero (``p is None``) or the matrix unit e_ij(p)."""

    i: int = 0
    j: int = 0
    p: object = None

    @property
    def is_zero(self) -> bool:
        return self.p is None

    @classmethod
    def zero(cls) -> "ReesElement":
        return cls()


def rees_mul(x: ReesElement, y: ReesElement, P: SemigroupSpec) -> ReesElement:
    """e_ij(a) e_kq(b) = delta_jk e_iq(ab); zero absorbs."""
    if x.is_zero or y.is_zero or x.j != y.i:
        return ReesElement.zero()
    prod = P.mul(x.p, y.p)
    if prod is None:
        return ReesElement.zero()
    return ReesElement(x.i, y.j, prod)


def semigroup_context(P: SemigroupSpec, c: GeneratingSequence, *,
                      unit_position: int = 0) -> WreathProduct:
    # finite support: honest collapsed form; infinite: symbolic tails
    return WreathProduct(P.algebra, c, unit_position=unit_position)


def is_monomial(x: WreathElement) -> bool:
    """Each stored coefficient is a single element of P with coefficient 1, and
    the element is purely Laurent or purely matrix/tail."""
    if x.laurent and (x.mat or x.tails):
        return False
    if len(x.laurent) > 1:
        return False
    return all(len(b.terms) == 1 for b in x.mat.values()) and \
        all(len(w.terms) == 1 for w in x.tails.values())


@dataclass
class SemigroupGrowth:
    series: GrowthSeries
    zero_reached: dict[int, bool]
    non_monomial: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = self.series.to_json()
        out["zero_reached"] = [[n, z] for n, z in sorted(self.zero_reached.items())]
        out["monomial_closure_violations"] = self.non_monomial
        return out


def semigroup_growth(P: SemigroupSpec, c: GeneratingSequence, N: int, *,
                     unit_position: int = 0) -> SemigroupGrowth:
    """Count distinct nonzero elements of P^(c) given by words of length <= n."""
    if N < 1:
        raise PreconditionError("horizon must be >= 1")
    ctx = semigroup_context(P, c, unit_position=unit_position)
    exact = c.is_finite or (c.gap_mode and P.algebra.is_domain)
    gens = ctx.generators()
    seen: set[WreathElement] = set()
    frontier = []
    for g in gens:
        if g not in seen:
            seen.add(g)
            frontier.append(g)
    counts = {1: len(seen)}
    zero = {1: False}
    zero_seen = False
    bad = []
    for n in range(2, N + 1):
        new = []
        for u in frontier:
            for g in gens:
                x = ctx.mul(u, g)
                if not x:
                    zero_seen = True
                    continue
                if not is_monomial(x) and len(bad) < 10:
                    bad.append({"n": n, "element": x.to_json()})
                if x not in seen:
                    seen.add(x)
                    new.append(x)
        frontier = new
        counts[n] = len(seen)
        zero[n] = zero_seen
    meta = {"mode": "exact" if exact else "formal", "horizon": N,
            "unit_position": unit_position, "semigroup": P.describe()}
    series = GrowthSeries(counts, meta, "g", quantity="count")
    return SemigroupGrowth(series, zero, bad)


@dataclass
class SemigroupIdealReport:
    passed: bool
    checked: int
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": "left_ideal_semigroup", "passed": self.passed,
                "checked": self.checked, "witnesses": self.witnesses}


def as_rees(x: WreathElement) -> ReesElement | None:
    """The Rees element equal to ``x``, or None if ``x`` is not in M_inf(P) u {0}."""
    if not x:
        return ReesElement.zero()
    if x.laurent or x.tails or len(x.mat) != 1:
        return None
    (i, j), b = next(iter(x.mat.items()))
    if len(b.terms) != 1:
        return None
    return ReesElement(i, j, next(iter(b.terms)))


def verify_left_ideal_semigroup(P: SemigroupSpec, c: GeneratingSequence, sample_count: int = 200,
                                degree: int = 6, seed: int = 0, *, unit_position: int = 0,
                                index_range: int = 6) -> SemigroupIdealReport:
    """word * e_ij(p) must evaluate to a Rees element (a matrix atom) or zero."""
    ctx = semigroup_context(P, c, unit_position=unit_position)
    alg = P.algebra
    rng = random.Random(seed)
    witnesses = []
    for _ in range(sample_count):
        word = ctx.random_word(rng, degree)
        i, j = rng.randint(-index_range, index_range), rng.randint(-index_range, index_range)
        label = alg.random_label(rng, 3)
        while label is None:
            label = alg.random_label(rng, 3)
        prod = ctx.mul(ctx.word(word), ctx.matrix_unit(i, j, alg.basis(label)))
        if as_rees(prod) is None:
            witnesses.append({"word": "*".join(GEN_NAMES[g] for g in word) or "1",
                              "i": i, "j": j, "p": alg.format_label(label),
                              "product": prod.to_json()})
    return SemigroupIdealReport(not witnesses, sample_count, witnesses)
