"""Coefficient algebras A with exact multiplication and canonical basis labels.

Three kinds are supported:

* :class:`PolynomialAlgebra` -- commutative polynomials, labels are exponent tuples;
* :class:`MonomialQuotientAlgebra` -- free algebra modulo monomial relations,
  labels are normal-form words;
* :class:`StructureConstantAlgebra` -- finite dimensional, labels are ints.

Elements are :class:`AlgElement` values: finitely supported maps from labels to
nonzero scalars.  Every algebra here has a unit; a non-unital structure-constant
table gets a formal unit label adjoined (``unit_adjoined`` records this).
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Iterable

from .errors import (AssociativityError, CapError, MalformedElementError,
                     PreconditionError)
from .fields import Field


class AlgElement:
    """Immutable element of a coefficient algebra."""

    __slots__ = ("alg", "terms", "_hash")

    def __init__(self, alg: "Algebra", terms: dict):
        # terms is trusted to be canonical: valid labels, no zero coefficients
        self.alg = alg
        self.terms = terms
        self._hash = None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        return self.alg.add(self, self.alg.coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.alg.sub(self, self.alg.coerce(other))

    def __rsub__(self, other):
        return self.alg.sub(self.alg.coerce(other), self)

    def __neg__(self):
        return self.alg.neg(self)

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return self.alg.mul(self, self.alg.coerce(other))
        return self.alg.scale(self, self.alg.field(other))

    def __rmul__(self, other):
        return self.alg.scale(self, self.alg.field(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self):
        key = self.alg.label_key
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]))

    def to_json(self):
        f = self.alg.field
        return [[self.alg.label_to_json(l), f.to_json(c)] for l, c in self.sorted_terms()]

    def __repr__(self):
        return self.alg.format(self)


class Algebra:
    """Common machinery; subclasses supply the basis product and label handling."""

    kind = "abstract"

    def __init__(self, field: Field, *, is_domain: bool = False):
        self.field = field
        self.is_domain = is_domain
        self.is_unital = True
        self.unit_adjoined = False
        self.assumptions: list[str] = []

    # subclass hooks -------------------------------------------------------
    def basis_mul(self, l1, l2) -> list:
        raise NotImplementedError

    def unit_label(self):
        raise NotImplementedError

    def label_key(self, label):
        return label

    def validate_label(self, label):
        raise NotImplementedError

    def format_label(self, label) -> str:
        return str(label)

    def label_to_json(self, label):
        return self.format_label(label)

    def label_degree(self, label) -> int:
        return 0

    def generator_names(self) -> list[str]:
        raise NotImplementedError

    def gen(self, name: str) -> AlgElement:
        raise NotImplementedError

    def random_label(self, rng, max_degree: int):
        raise NotImplementedError

    # elements -------------------------------------------------------------
    def element(self, terms: dict | Iterable) -> AlgElement:
        """Build a canonical element from a label->scalar mapping."""
        items = terms.items() if isinstance(terms, dict) else terms
        out = {}
        f = self.field
        for label, c in items:
            self.validate_label(label)
            c = f(c)
            if label in out:
                c = f.add(out[label], c)
            if c:
                out[label] = c
            else:
                out.pop(label, None)
        return AlgElement(self, out)

    def zero(self) -> AlgElement:
        return AlgElement(self, {})

    def one(self) -> AlgElement:
        return AlgElement(self, {self.unit_label(): self.field.one})

    def basis(self, label) -> AlgElement:
        self.validate_label(label)
        return AlgElement(self, {label: self.field.one})

    def coerce(self, x) -> AlgElement:
        if isinstance(x, AlgElement):
            if x.alg is not self and x.alg != self:
                raise MalformedElementError("element belongs to a different algebra")
            return x
        return self.scale(self.one(), self.field(x))

    def add(self, x: AlgElement, y: AlgElement) -> AlgElement:
        f = self.field
        out = dict(x.terms)
        for label, c in y.terms.items():
            s = f.add(out.get(label, f.zero), c)
            if s:
                out[label] = s
            else:
                out.pop(label, None)
        return AlgElement(self, out)

    def neg(self, x: AlgElement) -> AlgElement:
        f = self.field
        return AlgElement(self, {l: f.neg(c) for l, c in x.terms.items()})

    def sub(self, x: AlgElement, y: AlgElement) -> AlgElement:
        return self.add(x, self.neg(y))

    def scale(self, x: AlgElement, s) -> AlgElement:
        if not s:
            return self.zero()
        f = self.field
        return AlgElement(self, {l: f.mul(c, s) for l, c in x.terms.items()})

    def mul(self, x: AlgElement, y: AlgElement) -> AlgElement:
        f = self.field
        out = {}
        for l1, c1 in x.terms.items():
            for l2, c2 in y.terms.items():
                c12 = f.mul(c1, c2)
                for label, c in self.basis_mul(l1, l2):
                    s = f.add(out.get(label, f.zero), f.mul(c12, c))
                    if s:
                        out[label] = s
                    else:
                        out.pop(label, None)
        return AlgElement(self, out)

    def check_element(self, x: AlgElement) -> None:
        """Raise :class:`MalformedElementError` unless ``x`` is canonical here."""
        if not isinstance(x, AlgElement):
            raise MalformedElementError(f"{x!r} is not an algebra element")
        for label, c in x.terms.items():
            self.validate_label(label)
            if not c:
                raise MalformedElementError("explicit zero coefficient stored")

    def random_element(self, rng, max_degree: int = 4, max_terms: int = 3) -> AlgElement:
        """Random nonzero element with labels of degree at most ``max_degree``."""
        while True:
            terms = {}
            for _ in range(rng.randint(1, max_terms)):
                label = self.random_label(rng, max_degree)
                if label is not None:
                    terms[label] = self._random_scalar(rng)
            x = self.element(terms)
            if x:
                return x

    def _random_scalar(self, rng):
        p = self.field.modulus
        if p is not None:
            return rng.randint(1, p - 1)
        return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))

    def format(self, x: AlgElement) -> str:
        if not x.terms:
            return "0"
        parts = []
        for label, c in x.sorted_terms():
            name = self.format_label(label)
            if c == self.field.one:
                parts.append(name)
            elif name == "1":
                parts.append(str(c))
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts)

    def parse(self, text: str) -> AlgElement:
        return _ExprParser(self, text).parse()

    def describe(self) -> dict:
        return {"kind": self.kind, "field": repr(self.field),
                "is_domain": self.is_domain, "unit_adjoined": self.unit_adjoined,
                "assumptions": list(self.assumptions)}


class PolynomialAlgebra(Algebra):
    """Commutative polynomial algebra F[x_1, ..., x_m]; always a domain.

    With no variables this is the ground field F itself.
    """

    kind = "polynomial"

    def __init__(self, field: Field, variables: Iterable[str]):
        super().__init__(field, is_domain=True)
        self.variables = list(variables)
        if len(set(self.variables)) != len(self.variables):
            raise PreconditionError("polynomial algebra needs distinct variable names")
        self.nvars = len(self.variables)
        self._unit = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, PolynomialAlgebra) and other.field == self.field
                and other.variables == self.variables)

    def __hash__(self):
        return hash(("poly", self.field, tuple(self.variables)))

    def basis_mul(self, l1, l2):
        return [(tuple(a + b for a, b in zip(l1, l2)), 1)]

    def unit_label(self):
        return self._unit

    def label_key(self, label):
        return (sum(label), tuple(-e for e in label))

    def label_degree(self, label):
        return sum(label)

    def validate_label(self, label):
        if (not isinstance(label, tuple) or len(label) != self.nvars
                or any(not isinstance(e, int) or e < 0 for e in label)):
            raise MalformedElementError(f"{label!r} is not an exponent vector of length {self.nvars}")

    def format_label(self, label):
        parts = []
        for v, e in zip(self.variables, label):
            if e == 1:
                parts.append(v)
            elif e:
                parts.append(f"{v}^{e}")
        return "*".join(parts) or "1"

    def label_to_json(self, label):
        return list(label)

    def generator_names(self):
        return list(self.variables)

    def gen(self, name):
        if name not in self.variables:
            raise MalformedElementError(f"unknown variable {name!r}")
        label = tuple(int(v == name) for v in self.variables)
        return AlgElement(self, {label: self.field.one})

    def random_label(self, rng, max_degree):
        if not self.nvars:
            return ()
        deg = rng.randint(0, max_degree)
        label = [0] * self.nvars
        for _ in range(deg):
            label[rng.randrange(self.nvars)] += 1
        return tuple(label)


class MonomialQuotientAlgebra(Algebra):
    """Free associative algebra on ``alphabet`` modulo the ideal of ``forbidden`` words.

    Normal forms are the words with no forbidden factor, so the rewriting is
    trivially confluent.  ``cap`` bounds word length; exceeding it raises
    :class:`CapError` (used for truncated free monoids).
    """

    kind = "monomial_quotient"

    def __init__(self, field: Field, alphabet: Iterable[str], forbidden: Iterable = (),
                 *, cap: int | None = None, assume_domain: bool = False):
        super().__init__(field, is_domain=bool(assume_domain))
        self.alphabet = list(alphabet)
        if not self.alphabet or len(set(self.alphabet)) != len(self.alphabet):
            raise PreconditionError("alphabet letters must be distinct and nonempty")
        self._char = {a: chr(0xE000 + i) for i, a in enumerate(self.alphabet)}
        self._letter = {c: a for a, c in self._char.items()}
        words = {self.word(w) for w in forbidden}
        if "" in words:
            raise PreconditionError("the empty word cannot be forbidden")
        # keep only minimal forbidden words; longer ones are redundant
        self.forbidden = tuple(sorted(
            (w for w in words if not any(v != w and v in w for v in words)),
            key=self.label_key))
        self.cap = cap
        if assume_domain:
            self.assumptions.append("is_domain asserted by user for a monomial quotient")

    def __eq__(self, other):
        return (isinstance(other, MonomialQuotientAlgebra) and other.field == self.field
                and other.alphabet == self.alphabet and other.forbidden == self.forbidden
                and other.cap == self.cap)

    def __hash__(self):
        return hash(("mq", self.field, tuple(self.alphabet), self.forbidden, self.cap))

    def word(self, w) -> str:
        """Internal label for a word given as a string of letters or a letter list."""
        if isinstance(w, str):
            if all(ch in self._letter for ch in w):
                return w
            letters = _split_word(w, self.alphabet)
        else:
            letters = list(w)
        try:
            return "".join(self._char[a] for a in letters)
        except KeyError as exc:
            raise MalformedElementError(f"letter {exc.args[0]!r} not in alphabet") from None

    def is_normal(self, label: str) -> bool:
        return not any(f in label for f in self.forbidden)

    def basis_mul(self, l1, l2):
        w = l1 + l2
        if self.cap is not None and len(w) > self.cap:
            raise CapError(f"word length {len(w)} exceeds cap {self.cap}")
        # only factors straddling the junction can be new
        for f in self.forbidden:
            if f in w:
                return []
        return [(w, 1)]

    def unit_label(self):
        return ""

    def label_key(self, label):
        return (len(label), label)

    def label_degree(self, label):
        return len(label)

    def validate_label(self, label):
        if not isinstance(label, str) or any(ch not in self._letter for ch in label):
            raise MalformedElementError(f"{label!r} is not a word over {self.alphabet}")
        if not self.is_normal(label):
            raise MalformedElementError(f"{self.format_label(label)} contains a forbidden factor")
        if self.cap is not None and len(label) > self.cap:
            raise CapError(f"word length {len(label)} exceeds cap {self.cap}")

    def format_label(self, label):
        if not label:
            return "1"
        return "*".join(self._letter[ch] for ch in label)

    def generator_names(self):
        return list(self.alphabet)

    def gen(self, name):
        if name not in self._char:
            raise MalformedElementError(f"unknown letter {name!r}")
        return self.element({self._char[name]: 1})

    def random_label(self, rng, max_degree):
        if self.cap is not None:
            max_degree = min(max_degree, self.cap)
        w = "".join(rng.choice(list(self._letter)) for _ in range(rng.randint(0, max_degree)))
        return w if self.is_normal(w) else None


class StructureConstantAlgebra(Algebra):
    """Finite dimensional algebra with basis ``0..d-1`` and a product table.

    ``table[i][j]`` is a mapping label -> scalar giving ``e_i * e_j``.  The table
    is checked for associativity on all ``d**3`` basis triples at construction.
    If ``unit`` is None and no basis element acts as a unit, a formal unit
    label ``-1`` is adjoined.
    """

    kind = "structure_constants"
    ADJOINED_UNIT = -1

    def __init__(self, field: Field, table, *, unit: int | None = None,
                 is_unital: bool | None = None, names: list[str] | None = None):
        super().__init__(field, is_domain=False)
        self.dimension = d = len(table)
        self.names = list(names) if names else [f"e{i}" for i in range(d)]
        self.table = []
        for i, row in enumerate(table):
            if len(row) != d:
                raise MalformedElementError(f"table row {i} has length {len(row)}, expected {d}")
            out_row = []
            for entry in row:
                items = entry.terms.items() if isinstance(entry, AlgElement) else dict(entry).items()
                prod = {}
                for l, c in items:
                    if not (isinstance(l, int) and 0 <= l < d):
                        raise MalformedElementError(f"table entry label {l!r} out of range")
                    c = field(c)
                    if c:
                        prod[l] = c
                out_row.append(tuple(sorted(prod.items())))
            self.table.append(out_row)
        self._unit = None
        self.check_associativity()
        if unit is None and is_unital is not False:
            unit = self._find_unit()
        if unit is not None:
            if not self._acts_as_unit(unit):
                raise PreconditionError(f"e{unit} is not a two-sided unit")
            self._unit = unit
        else:
            if is_unital:
                raise PreconditionError("is_unital set but no basis element is a unit")
            self._unit = self.ADJOINED_UNIT
            self.unit_adjoined = True
        self.is_unital = not self.unit_adjoined

    def __eq__(self, other):
        return (isinstance(other, StructureConstantAlgebra) and other.field == self.field
                and other.table == self.table and other._unit == self._unit)

    def __hash__(self):
        return hash(("sc", self.field, self.dimension, self._unit))

    def basis_mul(self, l1, l2):
        if l1 == self._unit and self.unit_adjoined:
            return [(l2, 1)]
        if l2 == self._unit and self.unit_adjoined:
            return [(l1, 1)]
        return self.table[l1][l2]

    def _vec_mul_basis(self, vec: dict, j: int, left: bool) -> dict:
        f = self.field
        out = {}
        for l, c in vec.items():
            prod = self.table[l][j] if not left else self.table[j][l]
            for m, cm in prod:
                s = f.add(out.get(m, f.zero), f.mul(c, cm))
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return out

    def check_associativity(self):
        d = self.dimension
        for i, j, k in itertools.product(range(d), repeat=3):
            left = self._vec_mul_basis(dict(self.table[i][j]), k, left=False)
            right = self._vec_mul_basis(dict(self.table[j][k]), i, left=True)
            if left != right:
                raise AssociativityError((i, j, k))

    def _acts_as_unit(self, u):
        one = self.field.one
        return all(self.table[u][i] == ((i, one),) and self.table[i][u] == ((i, one),)
                   for i in range(self.dimension))

    def _find_unit(self):
        for u in range(self.dimension):
            if self._acts_as_unit(u):
                return u
        return None

    def unit_label(self):
        return self._unit

    def validate_label(self, label):
        ok = isinstance(label, int) and (0 <= label < self.dimension
                                         or (self.unit_adjoined and label == self.ADJOINED_UNIT))
        if not ok:
            raise MalformedElementError(f"{label!r} is not a basis index")

    def format_label(self, label):
        if label == self.ADJOINED_UNIT:
            return "1"
        return self.names[label]

    def label_to_json(self, label):
        return label

    def label_degree(self, label):
        return 0 if label == self._unit else 1

    def generator_names(self):
        return list(self.names)

    def gen(self, name):
        if name not in self.names:
            raise MalformedElementError(f"unknown basis name {name!r}")
        return self.basis(self.names.index(name))

    def random_label(self, rng, max_degree):
        return rng.randrange(self.dimension)


def _split_word(text: str, alphabet: list[str]) -> list[str]:
    """Greedy longest-match split of a concatenated word into letters."""
    letters = sorted(alphabet, key=len, reverse=True)
    out, pos = [], 0
    text = text.replace("*", "")
    while pos < len(text):
        for a in letters:
            if text.startswith(a, pos):
                out.append(a)
                pos += len(a)
                break
        else:
            raise MalformedElementError(f"cannot read {text!r} as a word over {alphabet}")
    return out


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _ExprParser:
    """Recursive-descent reader for sums of products, e.g. ``x^2*y - 1/2*y*x + 1``."""

    def __init__(self, alg: Algebra, text: str):
        self.alg = alg
        self.text = text
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(1):
                self.tokens.append(("num", m.group(1)))
            elif m.group(2):
                self.tokens.append(("name", m.group(2)))
            elif m.group(3):
                self.tokens.append(("op", m.group(3)))
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def _take(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def _fail(self, msg):
        raise MalformedElementError(f"cannot parse {self.text!r}: {msg}")

    def parse(self) -> AlgElement:
        if not self.tokens:
            self._fail("empty expression")
        x = self._expr()
        if self.pos != len(self.tokens):
            self._fail(f"unexpected token {self._peek()[1]!r}")
        return x

    def _expr(self):
        sign = 1
        if self._peek() == ("op", "-"):
            self._take()
            sign = -1
        acc = self._term()
        if sign < 0:
            acc = -acc
        while self._peek() in (("op", "+"), ("op", "-")):
            op = self._take()[1]
            t = self._term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def _term(self):
        acc = self._factor()
        while self._peek() == ("op", "*"):
            self._take()
            acc = acc * self._factor()
        return acc

    def _factor(self):
        kind, val = self._take()
        if kind == "num":
            base = self.alg.coerce(Fraction(val))
        elif kind == "name":
            base = self._name(val)
        elif (kind, val) == ("op", "("):
            base = self._expr()
            if self._take() != ("op", ")"):
                self._fail("missing ')'")
        else:
            self._fail(f"unexpected token {val!r}")
        if self._peek() == ("op", "^"):
            self._take()
            k, e = self._take()
            if k != "num" or "/" in e:
                self._fail("exponent must be a nonnegative integer")
            base = base ** int(e)
        return base

    def _name(self, name):
        alg = self.alg
        if name in alg.generator_names():
            return alg.gen(name)
        if isinstance(alg, MonomialQuotientAlgebra):
            return alg.element({alg.word(_split_word(name, alg.alphabet)): 1})
        self._fail(f"unknown symbol {name!r}")


def weighted_filtration_W(c, n: int, alg: Algebra) -> list[AlgElement]:
    """Spanning set of W_n: products a_{i_1}...a_{i_r}, r >= 1, with i_1+...+i_r <= n.

    Each index tuple over the nonzero entries of ``c`` is visited once; zero
    products are dropped.  The list is not reduced to a basis.
    """
    support = [m for m in c.positions_upto(n)]
    out: list[AlgElement] = []

    def extend(prefix: AlgElement, budget: int):
        for m in support:
            if m > budget:
                break
            x = c.entry(m) if prefix is None else prefix * c.entry(m)
            # a zero prefix stays zero, so its extensions are skipped
            if x:
                out.append(x)
                extend(x, budget - m)

    extend(None, n)
    return out
