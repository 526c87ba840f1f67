"""Growth series g(n) = dim V^n of A^(c) and w(n) = dim W_n.

V is spanned by the four generators t, t^-1, e_00(1), c_0N; V^n is the span of
products of length 1..n (no empty product).  Layer n is obtained by
multiplying the elements that were new in layer n-1 by the generators on the
right, since V^n = V^(n-1) + (new part of layer n-1) * V.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .algebra import AlgElement, Algebra, weighted_filtration_W
from .echelon import LabelIndex, SpanBasis
from .errors import LayerRangeError, PreconditionError
from .sequence import GeneratingSequence
from .wreath import WreathElement, WreathProduct

MODES = ("formal", "exact")


@dataclass
class GrowthSeries:
    """Table n -> value with a metadata block; ``name`` is the CSV column."""

    values: dict[int, int]
    meta: dict = field(default_factory=dict)
    name: str = "g"
    quantity: str = "dimension"

    def __getitem__(self, n: int) -> int:
        try:
            return self.values[n]
        except KeyError:
            raise LayerRangeError(f"{self.name}({n}) not computed (horizon {self.horizon})") from None

    @property
    def horizon(self) -> int:
        return max(self.values, default=0)

    def as_list(self) -> list[int]:
        return [self.values[n] for n in sorted(self.values)]

    def is_monotone(self) -> bool:
        vals = self.as_list()
        return all(a <= b for a, b in zip(vals, vals[1:]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["n", self.name, "mode"]
        if self.quantity != "dimension":
            header.append("quantity")
        writer.writerow(header)
        mode = self.meta.get("mode", "")
        for n in sorted(self.values):
            row = [n, self.values[n], mode]
            if self.quantity != "dimension":
                row.append(self.quantity)
            writer.writerow(row)
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"name": self.name, "quantity": self.quantity, "meta": self.meta,
                "values": [[n, self.values[n]] for n in sorted(self.values)]}

    @classmethod
    def from_function(cls, fn, horizon: int, name: str = "g", **meta) -> "GrowthSeries":
        return cls({n: fn(n) for n in range(1, horizon + 1)}, dict(meta), name)


def _threads(threads: int | None) -> int:
    # the environment variable wins over any configured value
    env = os.environ.get("WREATH_GROWTH_THREADS")
    if env:
        threads = int(env)
    return max(1, threads or 1)


class Coordinatizer:
    """Maps WreathElements to sparse vectors over LAUR / MAT / TAIL labels."""

    def __init__(self):
        self.index = LabelIndex()

    def __call__(self, x: WreathElement) -> dict:
        col = self.index.col
        v = {}
        for k, c in x.laurent.items():
            v[col(("L", k))] = c
        for (i, j), b in x.mat.items():
            for beta, c in b.terms.items():
                v[col(("M", i, j, beta))] = c
        for (i, j), w in x.tails.items():
            for beta, c in w.terms.items():
                v[col(("T", i, beta, j))] = c
        return v


class GrowthRun:
    """A computed growth series plus everything needed for membership queries."""

    def __init__(self, ctx: WreathProduct, mode: str, horizon: int, threads: int | None = None):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if horizon < 1:
            raise PreconditionError("horizon must be >= 1")
        if mode == "exact":
            ctx.require_exact()
        self.ctx = ctx
        self.mode = mode
        self.horizon = horizon
        self.threads = _threads(threads)
        self.coords = Coordinatizer()
        self.basis = SpanBasis(ctx.field)
        # layers[n-1] = products that raised the rank in layer n
        self.layers: list[list[WreathElement]] = []
        self.values: dict[int, int] = {}
        self._bases: dict[int, SpanBasis] = {}
        self._compute()

    def _insert_all(self, candidates) -> list[WreathElement]:
        new = []
        for x in candidates:
            if x and self.basis.insert(self.coords(x)):
                new.append(x)
        return new

    def _compute(self):
        gens = self.ctx.generators()
        mul = self.ctx.mul
        frontier = self._insert_all(gens)
        self.layers.append(frontier)
        self.values[1] = self.basis.rank
        pool = ThreadPoolExecutor(self.threads) if self.threads > 1 else None
        try:
            for n in range(2, self.horizon + 1):
                pairs = [(u, g) for u in frontier for g in gens]
                if pool is not None:
                    cands = list(pool.map(lambda p: mul(*p), pairs))
                else:
                    cands = [mul(u, g) for u, g in pairs]
                frontier = self._insert_all(cands)
                self.layers.append(frontier)
                self.values[n] = self.basis.rank
        finally:
            if pool is not None:
                pool.shutdown()

    @property
    def flagged_upper_bound(self) -> bool:
        """Formal mode on an infinite-support instance without exactness guarantees."""
        seq, alg = self.ctx.seq, self.ctx.alg
        return (self.mode == "formal" and not seq.is_finite
                and not (seq.gap_mode and alg.is_domain))

    def series(self, **extra_meta) -> GrowthSeries:
        meta = {"mode": self.mode, "horizon": self.horizon,
                "symbolic_tails": self.ctx.symbolic_tails,
                "upper_bound_only": self.flagged_upper_bound}
        meta.update(extra_meta)
        return GrowthSeries(dict(self.values), meta, "g")

    def basis_at(self, n: int) -> SpanBasis:
        """Echelon basis of V^n rebuilt from the first n layers (cached)."""
        if not 1 <= n <= self.horizon:
            raise LayerRangeError(f"layer {n} not computed (horizon {self.horizon})")
        if n == self.horizon:
            return self.basis
        if n not in self._bases:
            b = SpanBasis(self.ctx.field)
            for layer in self.layers[:n]:
                for x in layer:
                    b.insert(self.coords(x))
            self._bases[n] = b
        return self._bases[n]

    def membership(self, x: WreathElement, n: int) -> bool:
        basis = self.basis_at(n)
        return basis.contains(self.coords(x))

    def decoded_rows(self, n: int):
        """Rows of the echelon basis of V^n, grouped by component.

        Yields dicts ``{"L": {k: c}, "M": {(i,j): AlgElement}, "T": {(i,j): AlgElement}}``.
        """
        alg = self.ctx.alg
        label = self.coords.index.label
        for _, row in self.basis_at(n).sorted_rows():
            lau, mat, tails = {}, {}, {}
            for col, c in row.items():
                lab = label(col)
                if lab[0] == "L":
                    lau[lab[1]] = c
                elif lab[0] == "M":
                    mat.setdefault((lab[1], lab[2]), {})[lab[3]] = c
                else:
                    tails.setdefault((lab[1], lab[3]), {})[lab[2]] = c
            yield {"L": lau,
                   "M": {k: AlgElement(alg, v) for k, v in mat.items()},
                   "T": {k: AlgElement(alg, v) for k, v in tails.items()}}


def run_growth(c: GeneratingSequence, spec: Algebra, N: int, mode: str = "exact", *,
               symbolic_tails: bool = False, unit_position: int = 0,
               threads: int | None = None) -> GrowthRun:
    ctx = WreathProduct(spec, c, symbolic_tails=symbolic_tails, unit_position=unit_position)
    return GrowthRun(ctx, mode, N, threads)


def growth_series(c: GeneratingSequence, spec: Algebra, N: int, mode: str = "exact",
                  **kw) -> GrowthSeries:
    return run_growth(c, spec, N, mode, **kw).series()


def membership(x: WreathElement, n: int, run: GrowthRun) -> bool:
    return run.membership(x, n)


class AlgebraSpan:
    """Echelon span inside A (coordinates are A's basis labels)."""

    def __init__(self, alg: Algebra):
        self.alg = alg
        self.index = LabelIndex()
        self.basis = SpanBasis(alg.field)

    def vector(self, x: AlgElement) -> dict:
        col = self.index.col
        return {col(l): c for l, c in x.terms.items()}

    def insert(self, x: AlgElement) -> bool:
        return self.basis.insert(self.vector(x))

    def contains(self, x: AlgElement) -> bool:
        # labels never seen cannot lie in the span
        if any(l not in self.index for l in x.terms):
            return False
        return self.basis.contains(self.vector(x))

    @property
    def rank(self) -> int:
        return self.basis.rank


def w_filtration_spans(c: GeneratingSequence, spec: Algebra, N: int, *,
                       include_unit: bool = False) -> list[AlgebraSpan]:
    """Spans of W_1, ..., W_N (index n-1), built from exact-weight pieces.

    The weight-n piece E_n is spanned by a_n together with a_i * E_{n-i}.
    """
    exact: dict[int, list[AlgElement]] = {}
    spans = []
    total = AlgebraSpan(spec)
    if include_unit:
        total.insert(spec.one())
    for n in range(1, N + 1):
        local = AlgebraSpan(spec)
        piece = []
        cands = []
        a_n = c.entry(n)
        if a_n is not None:
            cands.append(a_n)
        for i in c.positions_upto(n - 1):
            a_i = c.entry(i)
            cands.extend(a_i * e for e in exact.get(n - i, ()))
        for x in cands:
            if x and local.insert(x):
                piece.append(x)
        exact[n] = piece
        for x in piece:
            total.insert(x)
        snap = AlgebraSpan(spec)
        snap.index, snap.basis = total.index, _copy_basis(total.basis)
        spans.append(snap)
    return spans


def _copy_basis(b: SpanBasis) -> SpanBasis:
    out = SpanBasis(b.field)
    out.rows = {p: dict(r) for p, r in b.rows.items()}
    for c, s in b._occurs.items():
        out._occurs[c] = set(s)
    return out


def w_series(c: GeneratingSequence, spec: Algebra, N: int, *,
             include_unit: bool = False) -> GrowthSeries:
    """w(n) = dim W_n for n = 1..N (products with r >= 1 unless ``include_unit``)."""
    if N < 1:
        raise PreconditionError("horizon must be >= 1")
    spans = w_filtration_spans(c, spec, N, include_unit=include_unit)
    return GrowthSeries({n: spans[n - 1].rank for n in range(1, N + 1)},
                        {"horizon": N, "include_unit": include_unit}, "w")


@dataclass
class CheckReport:
    name: str
    passed: bool
    checked: int
    witnesses: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "witnesses": self.witnesses, "notes": self.notes}


def check_filtration_in_power(run: GrowthRun, n_max: int) -> CheckReport:
    """e_00(w) lies in V^(2n+1) for every spanning product w of W_n, n <= n_max."""
    if 2 * n_max + 1 > run.horizon:
        raise LayerRangeError(f"need layers up to {2 * n_max + 1}, have {run.horizon}")
    ctx = run.ctx
    witnesses, checked = [], 0
    for n in range(1, n_max + 1):
        for w in weighted_filtration_W(ctx.seq, n, ctx.alg):
            checked += 1
            if not run.membership(ctx.matrix_unit(0, 0, w), 2 * n + 1):
                witnesses.append({"n": n, "w": repr(w)})
    return CheckReport("filtration_in_power", not witnesses, checked, witnesses)


def check_power_shape(run: GrowthRun, n_max: int) -> CheckReport:
    """Every echelon row of V^n is supported on the labels allowed for n.

    Allowed: t^k with |k| <= n; e_ij(b) with |i|, |j| <= n and b in W_n;
    e_i0(w) c_0N t^j with |i| <= n, 1 + |j| <= n and w in W_{n-|j|}.
    W here contains the unit, since e_00(1) itself is a length-one product.
    """
    if n_max > run.horizon:
        raise LayerRangeError(f"need layers up to {n_max}, have {run.horizon}")
    ctx = run.ctx
    if ctx.collapse and any(m != 1 for m in ctx.seq.support()):
        raise PreconditionError("collapsed tails leave the box; run with symbolic_tails=True")
    spans = w_filtration_spans(ctx.seq, ctx.alg, n_max, include_unit=True)
    witnesses, checked = [], 0
    for n in range(1, n_max + 1):
        for row in run.decoded_rows(n):
            checked += 1
            bad = []
            bad += [("L", k) for k in row["L"] if abs(k) > n]
            for (i, j), b in row["M"].items():
                if abs(i) > n or abs(j) > n or not spans[n - 1].contains(b):
                    bad.append(("M", i, j, repr(b)))
            for (i, j), w in row["T"].items():
                m = n - abs(j)
                if abs(i) > n or m < 1 or not spans[m - 1].contains(w):
                    bad.append(("T", i, j, repr(w)))
            if bad:
                witnesses.append({"n": n, "offending": [list(map(str, b)) for b in bad]})
    return CheckReport("power_shape", not witnesses, checked, witnesses)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
