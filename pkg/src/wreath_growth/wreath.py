"""The subalgebra S = <t, t^-1, e_00(1), c_0N> of the matrix wreath product.

Elements are kept in a closed three-part normal form

    x = sum_k  lambda_k t^k                       (``laurent``)
      + sum_{i,j} e_ij(b_ij)                      (``mat``)
      + sum_{i,j} e_i0(w_ij) c_0N t^j             (``tails``)

where c_0N is the row matrix sum_{m>=1} e_0m(a_m).  The honest matrix of a
tail term (i, j, w) has the entry w*a_{q+j} at (i, q) whenever q + j >= 1.
Products of the nine component types close up on this form, so the infinite
row c_0N never has to be truncated.

When the sequence has finite support every tail is an honest finite matrix
and ``canonicalize`` rewrites it into ``mat``; with infinite support tails
stay symbolic.
"""

from __future__ import annotations

import json
import random
from collections import defaultdict
from dataclasses import dataclass, field

from .algebra import AlgElement, Algebra
from .errors import PreconditionError, UnsupportedModeError
from .sequence import GeneratingSequence

GEN_NAMES = ("t", "t^-1", "e00", "c")


class WreathElement:
    """Immutable element of S in normal form; arithmetic goes through ``ctx``."""

    __slots__ = ("ctx", "laurent", "mat", "tails", "_hash")

    def __init__(self, ctx: "WreathProduct", laurent=None, mat=None, tails=None):
        self.ctx = ctx
        self.laurent = laurent or {}
        self.mat = mat or {}
        self.tails = tails or {}
        self._hash = None

    def __bool__(self):
        return bool(self.laurent or self.mat or self.tails)

    def __eq__(self, other):
        if not isinstance(other, WreathElement):
            return NotImplemented
        return (self.laurent == other.laurent and self.mat == other.mat
                and self.tails == other.tails)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.laurent.items()), frozenset(self.mat.items()),
                               frozenset(self.tails.items())))
        return self._hash

    def __add__(self, other):
        return self.ctx.add(self, other)

    def __sub__(self, other):
        return self.ctx.add(self, self.ctx.scale(other, self.ctx.field.neg(self.ctx.field.one)))

    def __neg__(self):
        return self.ctx.scale(self, self.ctx.field.neg(self.ctx.field.one))

    def __mul__(self, other):
        if isinstance(other, WreathElement):
            return self.ctx.mul(self, other)
        return self.ctx.scale(self, self.ctx.field(other))

    def __rmul__(self, other):
        return self.ctx.scale(self, self.ctx.field(other))

    @property
    def in_finitary_matrices(self) -> bool:
        """True when the element lies in M_inf(A): no Laurent and no tail part."""
        return not self.laurent and not self.tails

    def to_json(self) -> dict:
        f = self.ctx.field
        return {
            "laurent": [[k, f.to_json(c)] for k, c in sorted(self.laurent.items())],
            "mat": [[i, j, b.to_json()] for (i, j), b in sorted(self.mat.items())],
            "tails": [[i, j, w.to_json()] for (i, j), w in sorted(self.tails.items())],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def __repr__(self):
        parts = []
        for k, c in sorted(self.laurent.items()):
            parts.append(f"{c}*t^{k}")
        for (i, j), b in sorted(self.mat.items()):
            parts.append(f"e[{i},{j}]({b!r})")
        for (i, j), w in sorted(self.tails.items()):
            parts.append(f"e[{i},0]({w!r})*c*t^{j}")
        return " + ".join(parts) or "0"


@dataclass
class HonestWindow:
    rows: tuple[int, int]
    cols: tuple[int, int]
    entries: list[list[AlgElement]]
    laurent: dict

    def entry(self, i: int, q: int) -> AlgElement:
        return self.entries[i - self.rows[0]][q - self.cols[0]]

    def __eq__(self, other):
        return (isinstance(other, HonestWindow) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries
                and self.laurent == other.laurent)


@dataclass
class IdealReport:
    name: str
    passed: bool
    checked: int
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "witnesses": self.witnesses}


def _acc(store: dict, key, value: AlgElement):
    prev = store.get(key)
    store[key] = value if prev is None else prev + value


def _drop_zero(store: dict) -> dict:
    return {k: v for k, v in store.items() if v}


class WreathProduct:
    """Arithmetic context for S built from an algebra and a generating sequence.

    ``symbolic_tails=True`` keeps tails symbolic even for finite-support
    sequences (formal coordinates; used for shape checks and monomial
    bookkeeping).  ``unit_position`` selects the idempotent generator e_pp(1).
    """

    def __init__(self, alg: Algebra, seq: GeneratingSequence, *,
                 symbolic_tails: bool = False, unit_position: int = 0):
        if seq.alg is not alg and seq.alg != alg:
            raise PreconditionError("sequence and algebra disagree")
        self.alg = alg
        self.field = alg.field
        self.seq = seq
        self.symbolic_tails = symbolic_tails
        self.unit_position = unit_position
        self.collapse = seq.is_finite and not symbolic_tails

    # constructors ---------------------------------------------------------
    def zero(self) -> WreathElement:
        return WreathElement(self)

    def one(self) -> WreathElement:
        """t^0, the identity of the Laurent part (acts as identity on S)."""
        return WreathElement(self, laurent={0: self.field.one})

    def t_power(self, k: int, coeff=1) -> WreathElement:
        c = self.field(coeff)
        return WreathElement(self, laurent={k: c} if c else {})

    def matrix_unit(self, i: int, j: int, b=None) -> WreathElement:
        b = self.alg.one() if b is None else self.alg.coerce(b)
        return WreathElement(self, mat={(i, j): b} if b else {})

    def tail(self, i: int, j: int, w=None) -> WreathElement:
        w = self.alg.one() if w is None else self.alg.coerce(w)
        return self.canonicalize(WreathElement(self, tails={(i, j): w} if w else {}))

    def generators(self) -> tuple[WreathElement, ...]:
        """(t, t^-1, e_pp(1), c_0N) with p = ``unit_position``."""
        p = self.unit_position
        return (self.t_power(1), self.t_power(-1), self.matrix_unit(p, p), self.tail(0, 0))

    def word(self, letters) -> WreathElement:
        """Evaluate a word given as indices into :data:`GEN_NAMES`; empty word is t^0."""
        gens = self.generators()
        out = self.one()
        for g in letters:
            out = self.mul(out, gens[g])
        return out

    # arithmetic -----------------------------------------------------------
    def add(self, x: WreathElement, y: WreathElement) -> WreathElement:
        f = self.field
        lau = dict(x.laurent)
        for k, c in y.laurent.items():
            lau[k] = f.add(lau.get(k, f.zero), c)
        mat = dict(x.mat)
        for key, b in y.mat.items():
            _acc(mat, key, b)
        tails = dict(x.tails)
        for key, w in y.tails.items():
            _acc(tails, key, w)
        return self.canonicalize(WreathElement(self, lau, mat, tails))

    def scale(self, x: WreathElement, s) -> WreathElement:
        if not s:
            return self.zero()
        f, alg = self.field, self.alg
        return WreathElement(self, {k: f.mul(c, s) for k, c in x.laurent.items()},
                             {k: alg.scale(b, s) for k, b in x.mat.items()},
                             {k: alg.scale(w, s) for k, w in x.tails.items()})

    def _seq_entry(self, m: int):
        return self.seq.entry(m) if m >= 1 else None

    def mul(self, x: WreathElement, y: WreathElement) -> WreathElement:
        """Product in S via the closed rules on L(k), E(i,j,b), T(i,j,w)."""
        f, alg = self.field, self.alg
        lau: dict = {}
        mat: dict = {}
        tails: dict = {}
        y_mat_rows = defaultdict(list)
        for (k, l), b in y.mat.items():
            y_mat_rows[k].append((l, b))
        y_tail_rows = defaultdict(list)
        for (k, l), w in y.tails.items():
            y_tail_rows[k].append((l, w))

        for k, a in x.laurent.items():
            for m, b in y.laurent.items():
                lau[k + m] = f.add(lau.get(k + m, f.zero), f.mul(a, b))
            for (i, j), b in y.mat.items():
                _acc(mat, (i + k, j), alg.scale(b, a))
            for (i, j), w in y.tails.items():
                _acc(tails, (i + k, j), alg.scale(w, a))

        for (i, j), b in x.mat.items():
            for m, s in y.laurent.items():
                _acc(mat, (i, j - m), alg.scale(b, s))
            for l, b2 in y_mat_rows.get(j, ()):
                _acc(mat, (i, l), b * b2)
            for l, w in y_tail_rows.get(j, ()):
                _acc(tails, (i, l), b * w)

        for (i, j), w in x.tails.items():
            for m, s in y.laurent.items():
                _acc(tails, (i, j + m), alg.scale(w, s))
            for (k, l), b in y.mat.items():
                a = self._seq_entry(k + j)
                if a is not None:
                    _acc(mat, (i, l), w * a * b)
            for (k, l), w2 in y.tails.items():
                a = self._seq_entry(k + j)
                if a is not None:
                    _acc(tails, (i, l), w * a * w2)

        return self.canonicalize(WreathElement(self, lau, mat, tails))

    def canonicalize(self, x: WreathElement, *, collapse: bool | None = None) -> WreathElement:
        """Drop zeros; for finite-support sequences rewrite tails into ``mat``."""
        collapse = self.collapse if collapse is None else collapse
        lau = {k: c for k, c in x.laurent.items() if c}
        mat = _drop_zero(x.mat)
        tails = _drop_zero(x.tails)
        if collapse and tails:
            if not self.seq.is_finite:
                raise PreconditionError("cannot collapse tails of an infinite-support sequence")
            for (i, j), w in tails.items():
                for m, a in self.seq.items():
                    _acc(mat, (i, m - j), w * a)
            mat = _drop_zero(mat)
            tails = {}
        return WreathElement(self, lau, mat, tails)

    def is_zero(self, x: WreathElement, mode: str = "formal") -> bool:
        if mode == "formal":
            return not self.canonicalize(x)
        if mode != "exact":
            raise ValueError(f"unknown mode {mode!r}")
        if self.seq.is_finite:
            return not self.canonicalize(x, collapse=True)
        self.require_exact()
        # a nonzero tail coefficient w would have to kill infinitely many
        # nonzero a_m; impossible in a domain once gaps grow
        return not self.canonicalize(x)

    def require_exact(self) -> None:
        if self.seq.is_finite:
            return
        if not self.seq.gap_mode or not self.alg.is_domain:
            raise UnsupportedModeError(
                "exact mode with an infinite-support sequence needs gap_mode and a domain")

    # honest evaluation ----------------------------------------------------
    def honest_entry(self, x: WreathElement, i: int, q: int) -> AlgElement:
        out = x.mat.get((i, q), self.alg.zero())
        for (r, j), w in x.tails.items():
            if r == i and q + j >= 1:
                a = self.seq.entry(q + j)
                if a is not None:
                    out = out + w * a
        return out

    def honest_window(self, x: WreathElement, rows: tuple[int, int],
                      cols: tuple[int, int]) -> HonestWindow:
        """Literal entries of the matrix part on ``rows`` x ``cols`` (inclusive)."""
        r0, r1 = rows
        q0, q1 = cols
        entries = [[self.honest_entry(x, i, q) for q in range(q0, q1 + 1)]
                   for i in range(r0, r1 + 1)]
        return HonestWindow((r0, r1), (q0, q1), entries, dict(x.laurent))

    def literal_product_window(self, x: WreathElement, y: WreathElement,
                               rows: tuple[int, int], cols: tuple[int, int]) -> HonestWindow:
        """Oracle: the window of x*y computed from honest entries of x and y only.

        (Lx + Mx)(Ly + My) = LxLy + Lx.My + Mx.Ly + Mx.My, where the row shift
        (t^k X)_{i,q} = X_{i-k,q}, the column shift (X t^m)_{i,q} = X_{i,q+m},
        and the sum over r in Mx.My only meets the finitely many rows of y.
        """
        f, alg = self.field, self.alg
        lau: dict = {}
        for k, a in x.laurent.items():
            for m, b in y.laurent.items():
                lau[k + m] = f.add(lau.get(k + m, f.zero), f.mul(a, b))
        lau = {k: c for k, c in lau.items() if c}
        y_rows = sorted({i for i, _ in y.mat} | {i for i, _ in y.tails})
        r0, r1 = rows
        q0, q1 = cols
        entries = []
        for i in range(r0, r1 + 1):
            row = []
            for q in range(q0, q1 + 1):
                acc = alg.zero()
                for k, a in x.laurent.items():
                    acc = acc + alg.scale(self.honest_entry(y, i - k, q), a)
                for m, s in y.laurent.items():
                    acc = acc + alg.scale(self.honest_entry(x, i, q + m), s)
                for r in y_rows:
                    left = self.honest_entry(x, i, r)
                    if left:
                        acc = acc + left * self.honest_entry(y, r, q)
                row.append(acc)
            entries.append(row)
        return HonestWindow((r0, r1), (q0, q1), entries, lau)

    # random elements --------------------------------------------------------
    def random_element(self, rng: random.Random, *, max_support: int = 5,
                       index_range: int = 6, max_degree: int = 4) -> WreathElement:
        f, alg = self.field, self.alg
        lo, hi = -index_range, index_range

        def coeff():
            return alg._random_scalar(rng)

        lau = {rng.randint(lo, hi): f(coeff()) for _ in range(rng.randint(0, max_support))}
        mat = {(rng.randint(lo, hi), rng.randint(lo, hi)): alg.random_element(rng, max_degree)
               for _ in range(rng.randint(0, max_support))}
        tails = {(rng.randint(lo, hi), rng.randint(lo, hi)): alg.random_element(rng, max_degree)
                 for _ in range(rng.randint(0, max_support))}
        return self.canonicalize(WreathElement(self, lau, mat, tails))

    def random_word(self, rng: random.Random, max_length: int) -> tuple[int, ...]:
        return tuple(rng.randrange(4) for _ in range(rng.randint(0, max_length)))


def make_generators(c: GeneratingSequence, spec: Algebra, **kw):
    """(t, t^-1, e_00(1), c_0N) in a fresh :class:`WreathProduct` context."""
    return WreathProduct(spec, c, **kw).generators()


def wreath_mul(x: WreathElement, y: WreathElement) -> WreathElement:
    return x.ctx.mul(x, y)


def canonicalize(x: WreathElement) -> WreathElement:
    return x.ctx.canonicalize(x)


def is_zero(x: WreathElement, mode: str = "formal") -> bool:
    return x.ctx.is_zero(x, mode)


def honest_window(x: WreathElement, rows, cols) -> HonestWindow:
    return x.ctx.honest_window(x, rows, cols)


def _word_name(word) -> str:
    return "*".join(GEN_NAMES[g] for g in word) or "1"


def verify_left_ideal(ctx: WreathProduct, sample_count: int = 200, degree: int = 6,
                      seed: int = 0, index_range: int = 6) -> IdealReport:
    """Check s * e_ij(a) lies in M_inf(A) for random generator words s."""
    rng = random.Random(seed)
    witnesses = []
    for _ in range(sample_count):
        word = ctx.random_word(rng, degree)
        i, j = rng.randint(-index_range, index_range), rng.randint(-index_range, index_range)
        a = ctx.alg.random_element(rng)
        prod = ctx.mul(ctx.word(word), ctx.matrix_unit(i, j, a))
        if not prod.in_finitary_matrices:
            witnesses.append({"word": _word_name(word), "i": i, "j": j, "a": repr(a),
                              "product": prod.to_json()})
    return IdealReport("left_ideal", not witnesses, sample_count, witnesses)


def verify_two_sided_banded(ctx: WreathProduct, sample_count: int = 200, degree: int = 6,
                            seed: int = 0, index_range: int = 6) -> IdealReport:
    """Check e_ij(a) * s lies in M_inf(A); needs finitely many nonzero diagonals."""
    if not ctx.seq.is_finite:
        raise PreconditionError("two-sided check needs a finite-support sequence "
                                "(finitely many nonzero diagonals)")
    if ctx.symbolic_tails:
        raise PreconditionError("two-sided check needs collapsed tails")
    rng = random.Random(seed)
    witnesses = []
    for _ in range(sample_count):
        word = ctx.random_word(rng, degree)
        i, j = rng.randint(-index_range, index_range), rng.randint(-index_range, index_range)
        a = ctx.alg.random_element(rng)
        prod = ctx.mul(ctx.matrix_unit(i, j, a), ctx.word(word))
        if not prod.in_finitary_matrices:
            witnesses.append({"word": _word_name(word), "i": i, "j": j, "a": repr(a),
                              "product": prod.to_json()})
    return IdealReport("two_sided_ideal", not witnesses, sample_count, witnesses)
