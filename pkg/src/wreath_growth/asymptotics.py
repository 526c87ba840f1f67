"""Executable function-theoretic constructions on finite horizons.

Every real comparison (against e^{m/k}, n^alpha, ln n, ...) is decided with
outward-rounded interval arithmetic from :mod:`mpmath`.  A comparison whose
intervals overlap is *indeterminate*; it is counted and never resolved by
guessing.  "For all n >= n_k" statements are verified on ``[n_k, horizon]``
only and reported as such.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import mpmath
from mpmath.ctx_iv import MPIntervalContext

from .algebra import AlgElement, Algebra
from .echelon import LabelIndex, SpanBasis
from .errors import HorizonTooSmallError, LayerRangeError, PreconditionError
from .growth import GrowthSeries
from .sequence import GeneratingSequence

PRECISION = 256

iv = MPIntervalContext()
iv.prec = PRECISION


def _ivq(q) -> "iv.mpf":
    """Enclosure of a rational (or int) as an interval."""
    q = Fraction(q)
    if q.denominator == 1:
        return iv.mpf(q.numerator)
    return iv.mpf(q.numerator) / q.denominator


# --------------------------------------------------------------------------
# function descriptors

class FunctionDescriptor:
    """An evaluable function N -> [1, inf) with declared properties.

    ``log_interval(n)`` encloses ln f(n); ``exact(n)`` returns a Fraction when
    the value is rational and cheaply known, else None.
    """

    def __init__(self, family: str, params: dict, log_fn: Callable[[int], object],
                 exact_fn: Callable[[int], Fraction | None] | None = None, *,
                 increasing: bool = True, claimed_subexponential: bool = False,
                 domain: tuple[int, int] | None = None):
        self.family = family
        self.params = dict(params)
        self._log = log_fn
        self._exact = exact_fn
        self.increasing = increasing
        self.claimed_subexponential = claimed_subexponential
        self.domain = domain

    def _check(self, n):
        if n < 1 or (self.domain and not self.domain[0] <= n <= self.domain[1]):
            raise LayerRangeError(f"{self.family} evaluated outside its domain at n={n}")

    def log_interval(self, n: int):
        self._check(n)
        return self._log(n)

    def interval(self, n: int):
        ex = self.exact(n)
        if ex is not None:
            return _ivq(ex)
        return iv.exp(self.log_interval(n))

    def exact(self, n: int) -> Fraction | None:
        self._check(n)
        return self._exact(n) if self._exact else None

    def __call__(self, n: int) -> float:
        """Float approximation, for display only."""
        ex = self.exact(n)
        if ex is not None:
            return float(ex)
        return float(mpmath.mpf(iv.exp(self.log_interval(n)).mid))

    def check_increasing(self, horizon: int) -> list[int]:
        """Points n on [1, horizon) where f(n) <= f(n+1) is decided false."""
        bad = []
        for n in range(1, horizon):
            if _le(self.exact(n), self.log_interval(n), self.exact(n + 1),
                   self.log_interval(n + 1)) is False:
                bad.append(n)
        return bad

    def to_json(self) -> dict:
        return {"family": self.family,
                "params": {k: _jsonable(v) for k, v in self.params.items()},
                "increasing": self.increasing,
                "claimed_subexponential": self.claimed_subexponential}

    def __repr__(self):
        inner = ", ".join(f"{k}={_jsonable(v)}" for k, v in self.params.items()
                          if k not in ("values", "pieces"))
        return f"{self.family}({inner})"


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _le(a_exact, a_log, b_exact, b_log) -> bool | None:
    if a_exact is not None and b_exact is not None:
        return a_exact <= b_exact
    return a_log <= b_log


def _lt(a_exact, a_log, b_exact, b_log) -> bool | None:
    if a_exact is not None and b_exact is not None:
        return a_exact < b_exact
    return a_log < b_log


def power(d) -> FunctionDescriptor:
    """n^d for rational d >= 0."""
    d = Fraction(d)
    if d < 0:
        raise PreconditionError("power family needs d >= 0")
    exact = (lambda n: Fraction(n) ** d.numerator) if d.denominator == 1 else None
    return FunctionDescriptor("power", {"d": d}, lambda n: _ivq(d) * iv.log(n), exact,
                              increasing=True, claimed_subexponential=True)


def exp_power(beta) -> FunctionDescriptor:
    """e^{n^beta}; subexponential exactly when beta < 1."""
    beta = Fraction(beta)
    if beta <= 0:
        raise PreconditionError("exp_power needs beta > 0")
    b = _ivq(beta)
    return FunctionDescriptor("exp_power", {"beta": beta}, lambda n: iv.mpf(n) ** b, None,
                              increasing=True, claimed_subexponential=beta < 1)


def exponential(alpha) -> FunctionDescriptor:
    """e^{alpha n}."""
    alpha = Fraction(alpha)
    if alpha < 0:
        raise PreconditionError("exponential needs alpha >= 0")
    a = _ivq(alpha)
    return FunctionDescriptor("exponential", {"alpha": alpha}, lambda n: a * n,
                              (lambda n: Fraction(1)) if alpha == 0 else None,
                              increasing=True, claimed_subexponential=alpha == 0)


def constant(value=1) -> FunctionDescriptor:
    v = Fraction(value)
    if v < 1:
        raise PreconditionError("descriptors take values >= 1")
    return FunctionDescriptor("constant", {"value": v}, lambda n: iv.log(_ivq(v)),
                              lambda n: v, increasing=True, claimed_subexponential=True)


def table(values: dict, *, extension: str = "error", increasing: bool = True,
          claimed_subexponential: bool = False, family: str = "table") -> FunctionDescriptor:
    """Explicit table n -> value; ``extension='hold'`` repeats the last value."""
    vals = {int(n): Fraction(v) for n, v in values.items()}
    if not vals:
        raise PreconditionError("empty table")
    if any(v < 1 for v in vals.values()):
        raise PreconditionError("descriptors take values >= 1")
    lo, hi = min(vals), max(vals)
    if extension not in ("error", "hold"):
        raise PreconditionError(f"unknown table extension {extension!r}")

    def exact(n):
        if n in vals:
            return vals[n]
        if extension == "hold" and n > hi:
            return vals[hi]
        raise LayerRangeError(f"table has no value at n={n}")

    domain = (lo, hi) if extension == "error" else (lo, 10 ** 18)
    return FunctionDescriptor(family, {"values": vals, "extension": extension},
                              lambda n: iv.log(_ivq(exact(n))), exact, increasing=increasing,
                              claimed_subexponential=claimed_subexponential, domain=domain)


def n_ln_n(plus=0) -> FunctionDescriptor:
    """n ln n + plus*n."""
    plus = Fraction(plus)

    def log_fn(n):
        val = iv.mpf(n) * iv.log(n) + _ivq(plus) * n
        return iv.log(val)

    return FunctionDescriptor("n_ln_n", {"plus": plus}, log_fn, None, increasing=True,
                              claimed_subexponential=True)


def ceil_ln(n: int) -> int:
    """Exact ceiling of ln n: the least integer m with e^m >= n."""
    if n < 1:
        raise ValueError("ln undefined")
    m = 0
    while True:
        r = iv.exp(iv.mpf(m)) >= n
        if r is None:
            raise ArithmeticError(f"cannot decide e^{m} >= {n} at {PRECISION} bits")
        if r:
            return m
        m += 1


def n_ceil_ln_n() -> FunctionDescriptor:
    """n * max(1, ceil(ln n)), the exact stand-in for n ln n used for GK bounds."""

    def exact(n):
        return Fraction(n * max(1, ceil_ln(n)))

    return FunctionDescriptor("n_ceil_ln_n", {}, lambda n: iv.log(_ivq(exact(n))), exact,
                              increasing=True, claimed_subexponential=True)


def theorem3_h() -> FunctionDescriptor:
    return n_ceil_ln_n()


def compose(f: FunctionDescriptor, h: FunctionDescriptor) -> FunctionDescriptor:
    """n -> f(h(n)) for integer-valued h."""

    def inner(n):
        v = h.exact(n)
        if v is None or v.denominator != 1:
            raise PreconditionError("compose needs an integer-valued inner function")
        return int(v)

    return FunctionDescriptor("compose", {"outer": repr(f), "inner": repr(h)},
                              lambda n: f.log_interval(inner(n)),
                              lambda n: f.exact(inner(n)),
                              increasing=f.increasing and h.increasing,
                              claimed_subexponential=False, domain=h.domain)


def piecewise(starts: Sequence[int], pieces: Sequence[FunctionDescriptor],
              horizon: int) -> FunctionDescriptor:
    """f(n) = pieces[k](n) for starts[k] <= n < starts[k+1], on [starts[0], horizon]."""
    starts = list(starts)

    def which(n):
        k = 0
        while k + 1 < len(starts) and starts[k + 1] <= n:
            k += 1
        return k

    fd = FunctionDescriptor("piecewise",
                            {"starts": starts, "pieces": [repr(p) for p in pieces]},
                            lambda n: pieces[which(n)].log_interval(n),
                            lambda n: pieces[which(n)].exact(n),
                            increasing=all(p.increasing for p in pieces),
                            claimed_subexponential=all(p.claimed_subexponential for p in pieces),
                            domain=(starts[0], horizon))
    fd.piece_index = lambda n: which(n) + 1
    return fd


FAMILIES = {"power": power, "exp_power": exp_power, "exponential": exponential,
            "constant": constant, "n_ln_n": n_ln_n, "n_ceil_ln_n": n_ceil_ln_n}


# --------------------------------------------------------------------------
# horizon scans

def _threshold(ok: Callable[[int], bool | None], lower: int, horizon: int) -> tuple[int, int]:
    """Least n >= lower with ok(m) true for every m in [n, horizon].

    Scans down from the horizon; an undecided point counts as a failure.
    Returns (threshold, number of undecided points met).
    """
    m = horizon
    undecided = 0
    while m >= lower:
        r = ok(m)
        if r is None:
            undecided += 1
        if r is not True:
            break
        m -= 1
    n = m + 1
    if n > horizon:
        raise HorizonTooSmallError(f"no threshold >= {lower} within horizon {horizon}")
    return n, undecided


@dataclass
class MergeResult:
    f: FunctionDescriptor
    thresholds: list[int]
    horizon: int
    undecided: int

    def to_json(self) -> dict:
        return {"thresholds": self.thresholds, "horizon": self.horizon,
                "undecided": self.undecided, "f": self.f.to_json(),
                "note": "thresholds verified on [n_k, horizon] only"}


def merge_subexponential(gs: Sequence[FunctionDescriptor], horizon: int) -> MergeResult:
    """Glue increasing subexponential g_1 <= g_2 <= ... into one f.

    n_k is the least n > n_{k-1} with g_k(m) e^{-m/k} <= 1/k on [n, horizon];
    f = g_k on [n_k, n_{k+1}).  Then g_k <= f on [n_k, horizon] for every k.
    """
    if not gs:
        raise PreconditionError("need at least one function")
    for k, g in enumerate(gs, 1):
        if not g.claimed_subexponential:
            raise PreconditionError(f"g_{k} is not claimed subexponential")
    for k in range(len(gs) - 1):
        a, b = gs[k], gs[k + 1]
        for n in range(1, horizon + 1):
            r = _le(a.exact(n), a.log_interval(n), b.exact(n), b.log_interval(n))
            if r is not True:
                raise PreconditionError(
                    f"g_{k + 1}({n}) <= g_{k + 2}({n}) is {'undecided' if r is None else 'false'}")
    thresholds: list[int] = []
    undecided = 0
    for k, g in enumerate(gs, 1):
        logk = iv.log(k)
        inv_k = _ivq(Fraction(1, k))

        def ok(m, g=g, logk=logk, inv_k=inv_k):
            # k g(m) <= e^{m/k}  <=>  ln k + ln g(m) <= m/k
            return logk + g.log_interval(m) <= inv_k * m

        lower = thresholds[-1] + 1 if thresholds else 1
        n_k, u = _threshold(ok, lower, horizon)
        thresholds.append(n_k)
        undecided += u
    return MergeResult(piecewise(thresholds, gs, horizon), thresholds, horizon, undecided)


@dataclass
class SuperlinearPlan:
    h: FunctionDescriptor
    mu: dict[int, int]
    thresholds: list[int]
    horizon: int
    undecided: int

    def to_json(self) -> dict:
        return {"thresholds": self.thresholds, "horizon": self.horizon,
                "undecided": self.undecided, "mu_max": max(self.mu.values()),
                "note": "thresholds verified on [n_k, horizon] only"}


def superlinearize(f: FunctionDescriptor, horizon: int, max_pieces: int | None = None
                   ) -> SuperlinearPlan:
    """h(n) = n mu(n) with mu(n) = k on [n_k, n_{k+1}), where n_k is the least
    n > n_{k-1} such that f(k m) < e^{m/k}/k for all m in [n, horizon]."""
    if not f.claimed_subexponential:
        raise PreconditionError("superlinearize needs a function claimed subexponential")
    if not f.increasing:
        raise PreconditionError("superlinearize needs an increasing function")
    thresholds: list[int] = []
    undecided = 0
    k = 1
    while max_pieces is None or k <= max_pieces:
        logk = iv.log(k)
        inv_k = _ivq(Fraction(1, k))

        def ok(m, k=k, logk=logk, inv_k=inv_k):
            return logk + f.log_interval(k * m) < inv_k * m

        lower = thresholds[-1] + 1 if thresholds else 1
        try:
            n_k, u = _threshold(ok, lower, horizon)
        except HorizonTooSmallError:
            if not thresholds:
                raise
            break
        thresholds.append(n_k)
        undecided += u
        k += 1
    mu = {}
    k = 0
    for n in range(thresholds[0], horizon + 1):
        while k < len(thresholds) and thresholds[k] <= n:
            k += 1
        mu[n] = k
    h = table({n: n * m for n, m in mu.items()}, family="superlinear_table",
              increasing=True, claimed_subexponential=False)
    return SuperlinearPlan(h, mu, thresholds, horizon, undecided)


@dataclass
class CompositionProbe:
    alpha: Fraction
    tail: tuple[int, int]
    holds: bool
    undecided: int
    first_failure: int | None

    def to_json(self) -> dict:
        return {"alpha": str(self.alpha), "tail": list(self.tail), "holds": self.holds,
                "undecided": self.undecided, "first_failure": self.first_failure}


def probe_composition(f: FunctionDescriptor, plan: SuperlinearPlan, alphas: Iterable,
                      tail_start: int | None = None) -> list[CompositionProbe]:
    """Check f(h(n)) < e^{alpha n} on the tail [tail_start, horizon] of the plan."""
    H = plan.horizon
    start = tail_start if tail_start is not None else max(plan.thresholds[0], H // 2)
    out = []
    for alpha in alphas:
        alpha = Fraction(alpha)
        a = _ivq(alpha)
        undecided, first = 0, None
        for n in range(start, H + 1):
            r = f.log_interval(n * plan.mu[n]) < a * n
            if r is None:
                undecided += 1
            if r is not True and first is None:
                first = n
        out.append(CompositionProbe(alpha, (start, H), first is None, undecided, first))
    return out


# --------------------------------------------------------------------------
# dilution planning

@dataclass
class DilutionPlan:
    generators: list[AlgElement]
    c: list[int]
    eps: list[Fraction] | None
    h: FunctionDescriptor
    thresholds: list[int]
    horizon: int
    sequence: GeneratingSequence

    def to_json(self) -> dict:
        return {"generators": [repr(b) for b in self.generators], "c": self.c,
                "eps": None if self.eps is None else [str(e) for e in self.eps],
                "h": self.h.to_json(), "thresholds": self.thresholds,
                "horizon": self.horizon, "sequence": self.sequence.to_json(),
                "note": "c_k m <= h(m) verified on [n_k, horizon] only"}


def build_dilution(generators: Sequence[AlgElement], c_list: Sequence[int],
                   eps_list: Sequence | None, f: FunctionDescriptor | None,
                   h: FunctionDescriptor, spec: Algebra, horizon: int) -> DilutionPlan:
    """Place b_k at n_k, the least n > n_{k-1} with c_k m <= h(m) on [n, horizon]."""
    if len(c_list) != len(generators):
        raise PreconditionError("one constant c_k per generator is required")
    if any(int(c) < 1 for c in c_list):
        raise PreconditionError("constants c_k must be >= 1")
    eps = None
    if eps_list is not None:
        eps = [Fraction(e) for e in eps_list]
        if len(eps) != len(generators):
            raise PreconditionError("one exponent eps_k per generator is required")
        if any(e <= 0 for e in eps) or any(b > a for a, b in zip(eps, eps[1:])):
            raise PreconditionError("eps_k must be positive and nonincreasing")
    # h(n)/n nondecreasing is what makes the scan meaningful
    for n in range(1, horizon):
        lhs = h.log_interval(n) - iv.log(n)
        rhs = h.log_interval(n + 1) - iv.log(n + 1)
        if (lhs <= rhs) is False:
            raise PreconditionError(f"h(n)/n decreases at n={n}")
    thresholds: list[int] = []
    for ck in c_list:
        ck = int(ck)
        logc = iv.log(ck)

        def ok(m, ck=ck, logc=logc):
            hm = h.exact(m)
            if hm is not None:
                return ck * m <= hm
            return logc + iv.log(m) <= h.log_interval(m)

        lower = thresholds[-1] + 1 if thresholds else 1
        n_k, _ = _threshold(ok, lower, horizon)
        thresholds.append(n_k)
    seq = GeneratingSequence(spec, {n: b for n, b in zip(thresholds, generators)})
    return DilutionPlan(list(generators), [int(c) for c in c_list], eps, h, thresholds,
                        horizon, seq)


def subalgebra_growth(spec: Algebra, generators: Sequence[AlgElement], horizon: int) -> list[int]:
    """dim of span of products of length 1..n of the generators, n = 1..horizon."""
    index = LabelIndex()
    basis = SpanBasis(spec.field)

    def vec(x):
        return {index.col(l): c for l, c in x.terms.items()}

    frontier = [b for b in generators if b and basis.insert(vec(b))]
    dims = [basis.rank]
    for _ in range(2, horizon + 1):
        new = []
        for u in frontier:
            for b in generators:
                x = u * b
                if x and basis.insert(vec(x)):
                    new.append(x)
        frontier = new
        dims.append(basis.rank)
    return dims


@dataclass
class FitResult:
    k: int
    c: int | None
    eps: Fraction
    dims: list[int]
    failure: dict | None = None

    def to_json(self) -> dict:
        return {"k": self.k, "c": self.c, "eps": str(self.eps), "dims": self.dims,
                "failure": self.failure}


def fit_eq1(spec: Algebra, generators: Sequence[AlgElement], f: FunctionDescriptor,
            horizon: int, eps_list: Sequence, cap: int = 1024) -> list[FitResult]:
    """Least integer c_k <= cap with dim V_k^n <= f(c_k n) n^{eps_k} for n <= horizon."""
    eps = [Fraction(e) for e in eps_list]
    if len(eps) != len(generators):
        raise PreconditionError("one exponent eps_k per generator is required")
    results = []
    for k in range(1, len(generators) + 1):
        dims = subalgebra_growth(spec, generators[:k], horizon)
        e = eps[k - 1]
        found, worst = None, None
        for c in range(1, cap + 1):
            bad = None
            for n, d in enumerate(dims, 1):
                if e.denominator == 1 and f.exact(c * n) is not None:
                    r = d <= f.exact(c * n) * n ** e.numerator
                else:
                    r = iv.log(d) <= f.log_interval(c * n) + _ivq(e) * iv.log(n)
                if r is not True:
                    bad = {"n": n, "dim": d, "undecided": r is None}
                    break
            if bad is None:
                found = c
                break
            worst = bad
        failure = None if found else {"cap": cap, "first_violation": worst}
        results.append(FitResult(k, found, e, dims, failure))
    return results


# --------------------------------------------------------------------------
# growth-series diagnostics

@dataclass
class Corollary1Report:
    passed: bool
    checked: int
    first_violation: dict | None
    violations: int

    def to_json(self) -> dict:
        return {"name": "corollary1", "passed": self.passed, "checked": self.checked,
                "first_violation": self.first_violation, "violations": self.violations}


def corollary1_check(w: GrowthSeries, g: GrowthSeries) -> Corollary1Report:
    """w(n) <= g(2n+1) and g(n) <= 2(2n+1)^2 w(n) + 2n + 1 for n = 1..horizon(w)."""
    N = w.horizon
    if g.horizon < 2 * N + 1:
        raise LayerRangeError(f"g needs horizon {2 * N + 1}, has {g.horizon}")
    first, count = None, 0
    for n in range(1, N + 1):
        problems = []
        if not w[n] <= g[2 * n + 1]:
            problems.append("w(n) <= g(2n+1)")
        if not g[n] <= 2 * (2 * n + 1) ** 2 * w[n] + 2 * n + 1:
            problems.append("g(n) <= 2(2n+1)^2 w(n) + 2n + 1")
        if problems:
            count += 1
            if first is None:
                first = {"n": n, "w": w[n], "g_n": g[n], "g_2n+1": g[2 * n + 1],
                         "failed": problems}
    return Corollary1Report(first is None, N, first, count)


@dataclass
class SlopeEstimate:
    slope: Fraction
    window: tuple[int, int]
    precision_bits: int

    def __float__(self):
        return float(self.slope)

    def to_json(self) -> dict:
        return {"slope": float(self.slope), "slope_exact": str(self.slope),
                "window": list(self.window), "precision_bits": self.precision_bits}


def _fixed_log(n: int, prec: int) -> Fraction:
    with mpmath.workprec(prec):
        man, exp = mpmath.log(n).man_exp
    return Fraction(man) * Fraction(2) ** exp


def gk_slope(g: GrowthSeries, window: tuple[int, int], precision_bits: int = 128) -> SlopeEstimate:
    """Least-squares slope of log g(n) against log n over the window, in exact arithmetic."""
    n0, n1 = window
    if n0 < 2 or n1 <= n0:
        raise PreconditionError("window must satisfy 2 <= n0 < n1")
    if n1 > g.horizon:
        raise LayerRangeError(f"window end {n1} beyond horizon {g.horizon}")
    xs, ys = [], []
    for n in range(n0, n1 + 1):
        if g[n] <= 0:
            raise PreconditionError(f"log undefined: g({n}) = {g[n]}")
        xs.append(_fixed_log(n, precision_bits))
        ys.append(_fixed_log(g[n], precision_bits) if g[n] != 1 else Fraction(0))
    m = len(xs)
    sx, sy = sum(xs), sum(ys)
    sxx = sum(x * x for x in xs)
    sxy = sum(x * y for x, y in zip(xs, ys))
    slope = (m * sxy - sx * sy) / (m * sxx - sx * sx)
    return SlopeEstimate(slope, (n0, n1), precision_bits)


@dataclass
class WitnessReport:
    holds: bool
    witness: int | None
    undecided: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": self.witness, "undecided": self.undecided,
                "note": "finite-range witness check, not a proof of the asymptotic relation"}


def preceq_witness(f: FunctionDescriptor, g: FunctionDescriptor, c: int, alpha,
                   n_range: tuple[int, int]) -> WitnessReport:
    """Check f(n) <= c g(c n) n^alpha for every n in the (inclusive) range."""
    alpha = Fraction(alpha)
    if c < 1 or alpha < 0:
        raise PreconditionError("need c >= 1 and alpha >= 0")
    undecided = []
    for n in range(n_range[0], n_range[1] + 1):
        fe, ge = f.exact(n), g.exact(c * n)
        if fe is not None and ge is not None and alpha.denominator == 1:
            r = fe <= c * ge * n ** alpha.numerator
        elif f is g and c == 1:
            r = True
        else:
            r = f.log_interval(n) <= iv.log(c) + g.log_interval(c * n) + _ivq(alpha) * iv.log(n)
        if r is None:
            undecided.append(n)
        elif r is False:
            return WitnessReport(False, n, undecided)
    return WitnessReport(not undecided, None, undecided)


@dataclass
class SubexpProbe:
    alpha: Fraction
    tail: tuple[int, int]
    max_ratio: float
    trend: str
    nth_root: float

    @property
    def looks_subexponential(self) -> bool:
        return self.trend == "decreasing"

    def to_json(self) -> dict:
        return {"alpha": str(self.alpha), "tail": list(self.tail), "max_ratio": self.max_ratio,
                "trend": self.trend, "nth_root_at_horizon": self.nth_root,
                "looks_subexponential": self.looks_subexponential,
                "label": "horizon evidence, not a limit proof"}


def subexp_probe(g: GrowthSeries, alphas: Iterable, tail_start: int | None = None
                 ) -> list[SubexpProbe]:
    """Ratios g(n)/e^{alpha n} on the tail of the horizon and their trend."""
    H = g.horizon
    start = tail_start if tail_start is not None else max(1, H // 2)
    out = []
    with mpmath.workprec(113):
        for alpha in alphas:
            alpha = Fraction(alpha)
            a = mpmath.mpf(alpha.numerator) / alpha.denominator
            ratios = [mpmath.mpf(g[n]) / mpmath.exp(a * n) for n in range(start, H + 1)]
            if all(y < x for x, y in zip(ratios, ratios[1:])):
                trend = "decreasing"
            elif all(y > x for x, y in zip(ratios, ratios[1:])):
                trend = "increasing"
            else:
                trend = "mixed"
            root = mpmath.mpf(g[H]) ** (mpmath.mpf(1) / H) if g[H] > 0 else mpmath.mpf(0)
            out.append(SubexpProbe(alpha, (start, H), float(max(ratios)), trend, float(root)))
    return out


def function_series(f: FunctionDescriptor, horizon: int, name: str = "g") -> GrowthSeries:
    """Integer-valued descriptor as a series (for probes on synthetic inputs)."""
    vals = {}
    for n in range(1, horizon + 1):
        v = f.exact(n)
        if v is None or v.denominator != 1:
            raise PreconditionError("function_series needs integer values")
        vals[n] = int(v)
    return GrowthSeries(vals, {"source": repr(f)}, name)
