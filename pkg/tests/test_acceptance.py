"""Acceptance criteria 1-12, each run at its stated size and tolerance.

Every test records one ``PASS``/``FAIL`` line; the lines are printed as they
happen (visible with ``-s``) and again in the terminal summary.  Running this
file directly with ``python3 tests/test_acceptance.py`` prints the same lines.
"""

from __future__ import annotations

import itertools
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest
from mpmath import iv

from wreath_growth import (Field, GeneratingSequence, PolynomialAlgebra, ReesElement,
                           SemigroupSpec, StructureConstantAlgebra, WreathProduct,
                           build_dilution, check_filtration_in_power, check_power_shape,
                           corollary1_check, gk_slope, merge_subexponential,
                           probe_composition, rees_mul, run_growth, semigroup_growth,
                           superlinearize, verify_left_ideal, verify_two_sided_banded, w_series)
from wreath_growth import asymptotics as asy
from wreath_growth.checks import check_oracle_equivalence, check_wreath_associativity
from wreath_growth.cli import main as cli_main
from wreath_growth.dense import dense_semigroup_counts

RESULTS: list[str] = []
CONFIGS = Path(__file__).resolve().parent.parent / "configs"

F2 = Field.gf(2)
F2X = PolynomialAlgebra(F2, ["x"])
X = F2X.gen("x")


def record(number: int, title: str, passed: bool, detail: str) -> None:
    line = f"[criterion {number:2d}] {'PASS' if passed else 'FAIL'}  {title}: {detail}"
    RESULTS.append(line)
    print(line)
    assert passed, line


def finite_x():
    return GeneratingSequence(F2X, {1: X})


def triangular_x():
    # positions 1, 3, 6, 10, ... (gaps 2, 3, 4, ...) with b_k = x
    return GeneratingSequence(F2X, positions=lambda k: k * (k + 1) // 2, elements=lambda k: X,
                              horizon=400, gap_mode=True)


# ---------------------------------------------------------------- 1

def test_criterion_01_growth_bounds():
    t0 = time.time()
    seq = finite_x()
    g = run_growth(seq, F2X, 29).series()
    w = w_series(seq, F2X, 14)
    rep = corollary1_check(w, g)
    # the two inequalities once more, spelled out, as an independent reading
    direct = all(w[n] <= g[2 * n + 1] and g[n] <= 2 * (2 * n + 1) ** 2 * w[n] + 2 * n + 1
                 for n in range(1, 15))
    elapsed = time.time() - t0
    record(1, "two-sided growth bounds on F2[x], c={a1=x}, n<=14",
           rep.passed and direct and elapsed < 120,
           f"g(29)={g[29]}, w(14)={w[14]}, {elapsed:.1f}s")


# ---------------------------------------------------------------- 2, 3

def test_criterion_02_left_ideal():
    reports = {name: verify_left_ideal(WreathProduct(F2X, seq), 200, 6, seed=2)
               for name, seq in [("finite", finite_x()), ("infinite", triangular_x())]}
    record(2, "left ideal, 200 samples, word length <= 6",
           all(r.passed and r.checked == 200 for r in reports.values()),
           ", ".join(f"{k}: {len(r.witnesses)} witnesses" for k, r in reports.items()))


def test_criterion_03_two_sided_ideal():
    F2XY = PolynomialAlgebra(F2, ["x", "y"])
    seqs = {"{a1=x}": finite_x(),
            "{a1=x,a3=y}": GeneratingSequence(F2XY, {1: F2XY.gen("x"), 3: F2XY.gen("y")})}
    reports = {k: verify_two_sided_banded(WreathProduct(s.alg, s), 200, 6, seed=3)
               for k, s in seqs.items()}
    record(3, "two-sided ideal, finite support, 200 samples",
           all(r.passed and r.checked == 200 for r in reports.values()),
           ", ".join(f"{k}: {len(r.witnesses)} witnesses" for k, r in reports.items()))


# ---------------------------------------------------------------- 4, 5

def test_criterion_04_filtration_in_power():
    run = run_growth(finite_x(), F2X, 17)
    rep = check_filtration_in_power(run, 8)
    record(4, "filtration: e00(W_n) in V^(2n+1), n<=8", rep.passed,
           f"{rep.checked} products checked")


def test_criterion_05_power_shape():
    details, ok = [], True
    # both runs are exact: support {1} collapses inside the box, and the
    # triangular instance keeps tails under gap mode over a domain
    for name, seq in [("finite", finite_x()), ("infinite", triangular_x())]:
        run = run_growth(seq, F2X, 12)
        rep = check_power_shape(run, 12)
        ok &= rep.passed
        details.append(f"{name}: {rep.checked} rows")
    record(5, "shape of V^n, n<=12", ok, ", ".join(details))


# ---------------------------------------------------------------- 6

def _instances():
    F2XY = PolynomialAlgebra(F2, ["x", "y"])
    Q = Field.rationals()
    QX = PolynomialAlgebra(Q, ["x"])
    dual = StructureConstantAlgebra(Field.gf(3), [[{0: 1}, {1: 1}], [{1: 1}, {}]])
    return {
        "F2[x] {a1=x}": WreathProduct(F2X, finite_x()),
        "F2[x] triangular": WreathProduct(F2X, triangular_x()),
        "F2[x,y] {a1=x,a3=y}": WreathProduct(
            F2XY, GeneratingSequence(F2XY, {1: F2XY.gen("x"), 3: F2XY.gen("y")})),
        "Q[x] {a1=x,a2=1/2+x^2}": WreathProduct(
            QX, GeneratingSequence(QX, {1: QX.gen("x"), 2: QX.parse("1/2 + x^2")})),
        "GF3[e]/e^2 {a1=e,a2=1}": WreathProduct(
            dual, GeneratingSequence(dual, {1: dual.basis(1), 2: dual.one()})),
    }


def test_criterion_06_associativity_and_oracle():
    ok, details = True, []
    for name, ctx in _instances().items():
        a = check_wreath_associativity(ctx, 1000, seed=6)
        o = check_oracle_equivalence(ctx, 500, seed=7)
        ok &= a.passed and o.passed and a.checked == 1000 and o.checked == 500
        details.append(f"{name}: {len(a.witnesses)}+{len(o.witnesses)} failures")
    record(6, "wreath associativity (1000) and oracle equivalence (500)", ok, "; ".join(details))


# ---------------------------------------------------------------- 7

def test_criterion_07_gk_slope():
    F2pt = PolynomialAlgebra(F2, [])
    t0 = time.time()
    g_x = run_growth(finite_x(), F2X, 40).series()
    t1 = time.time()
    g_1 = run_growth(GeneratingSequence(F2pt, {1: F2pt.one()}), F2pt, 40).series()
    t2 = time.time()
    s_x, s_1 = float(gk_slope(g_x, (20, 40))), float(gk_slope(g_1, (20, 40)))
    ok = 2.5 <= s_x <= 3.3 and 1.6 <= s_1 <= 2.3 and t1 - t0 < 600 and t2 - t1 < 600
    record(7, "GK slope over [20,40]", ok,
           f"F2[x]: {s_x:.4f} in [2.5,3.3] ({t1 - t0:.1f}s); F2: {s_1:.4f} in [1.6,2.3] "
           f"({t2 - t1:.1f}s)")


# ---------------------------------------------------------------- 8

def test_criterion_08_subexp_merge():
    H = 10_000
    gs = [asy.power(k) for k in (1, 2, 3)]
    res = merge_subexponential(gs, H)
    th = res.thresholds
    undecided = res.undecided
    ok = undecided == 0 and th == sorted(set(th))
    # independent re-check with fresh interval evaluations
    for k, n_k in enumerate(th, 1):
        for n in range(n_k, H + 1):
            f_n = res.f.exact(n)
            if not Fraction(n) ** k <= f_n:
                ok = False
    for s, n_s in enumerate(th, 1):
        for n in range(n_s, H + 1):
            # f(n)/e^{n/s} <= 1/s  <=>  s f(n) <= e^{n/s}
            r = iv.mpf(s) * iv.mpf(int(res.f.exact(n))) <= iv.exp(iv.mpf(n) / s)
            if r is None:
                undecided += 1
            if r is not True:
                ok = False
    record(8, "subexponential merge of n, n^2, n^3 at H=10^4", ok and undecided == 0,
           f"thresholds {th}, undecided comparisons {undecided}")


# ---------------------------------------------------------------- 9

def test_criterion_09_superlinear():
    H = 10_000
    f = asy.exp_power(Fraction(1, 2))
    plan = superlinearize(f, H)
    mus = [plan.mu[n] for n in sorted(plan.mu)]
    alphas = [Fraction(1), Fraction(1, 2), Fraction(1, 4)]
    probes = probe_composition(f, plan, alphas)
    ok = mus == sorted(mus) and plan.mu[H] >= 4 and plan.undecided == 0
    ok &= all(p.holds for p in probes)
    # independent check on the same tails: sqrt(n mu(n)) < alpha n
    for p in probes:
        a = iv.mpf(p.alpha.numerator) / p.alpha.denominator
        for n in range(p.tail[0], p.tail[1] + 1):
            if (iv.sqrt(iv.mpf(n * plan.mu[n])) < a * n) is not True:
                ok = False
                break
    record(9, "superlinearization of e^sqrt(n) at H=10^4", ok,
           f"mu(H)={plan.mu[H]}, tails {[list(p.tail) for p in probes]}")


# ---------------------------------------------------------------- 10

def test_criterion_10_dilution_thresholds():
    gens = [X ** k for k in range(1, 51)]
    plan = build_dilution(gens, list(range(1, 51)), None, None, asy.power(2), F2X, 500)
    record(10, "dilution with c_k=k, h=n^2", plan.thresholds == list(range(1, 51)),
           f"n_k = k for k <= 50: {plan.thresholds == list(range(1, 51))}")


# ---------------------------------------------------------------- 11

def _small_tables():
    """Associative Cayley tables with 1 to 6 elements."""
    out = {}
    for n in range(1, 7):
        out[f"Z/{n}"] = [[(a + b) % n for b in range(n)] for a in range(n)]
        out[f"min-chain {n}"] = [[min(a, b) for b in range(n)] for a in range(n)]
        out[f"left-zero {n}"] = [[a for _ in range(n)] for a in range(n)]
        # x^0..x^(n-1) with x^(n-1) absorbing: truncated monogenic monoid
        out[f"trunc {n}"] = [[min(a + b, n - 1) for b in range(n)] for a in range(n)]
    return out


def test_criterion_11_semigroup():
    N = 10
    ok, details = True, []
    P = SemigroupSpec.trivial()
    c = GeneratingSequence(P.algebra, {1: P.algebra.one()})
    got = semigroup_growth(P, c, N).series.as_list()
    want = dense_semigroup_counts(2, {1: [1]}, N)[0]
    ok &= got == want
    details.append(f"trivial P: {got[-1]} vs {want[-1]}")
    P = SemigroupSpec.free_monogenic()
    c = GeneratingSequence(P.algebra, {1: P.algebra.gen("x")})
    got = semigroup_growth(P, c, N).series.as_list()
    want = dense_semigroup_counts(2, {1: [0, 1]}, N)[0]
    ok &= got == want
    details.append(f"free monogenic: {got[-1]} vs {want[-1]}")
    tables = _small_tables()
    triples = 0
    for table in tables.values():
        S = SemigroupSpec("table", table=table)
        els = [ReesElement.zero()] + [ReesElement(i, j, p) for i in range(2) for j in range(2)
                                      for p in S.elements()]
        for x, y, z in itertools.product(els, repeat=3):
            triples += 1
            if rees_mul(rees_mul(x, y, S), z, S) != rees_mul(x, rees_mul(y, z, S), S):
                ok = False
    details.append(f"Rees associativity: {len(tables)} tables, {triples} triples")
    record(11, "semigroup counts n<=10 vs dense enumerator; Rees associativity", ok,
           "; ".join(details))


# ---------------------------------------------------------------- 12

def test_criterion_12_determinism(tmp_path):
    jobs = [("growth", "f2x.toml", ["--horizon", "12"]),
            ("verify", "dual_numbers.toml", []),
            ("dilute", "dilute_two_generators.toml", []),
            ("semigroup", "semigroup_monogenic.toml", []),
            ("report", "f2.toml", [])]
    ok, compared = True, 0
    for verb, cfg, extra in jobs:
        outs = []
        for rep in ("a", "b"):
            out = tmp_path / f"{verb}_{rep}"
            code = cli_main([verb, "--config", str(CONFIGS / cfg), "--out", str(out),
                             "--seed", "12", *extra])
            ok &= code == 0
            outs.append(out)
        files_a = sorted(p.name for p in outs[0].iterdir())
        ok &= files_a == sorted(p.name for p in outs[1].iterdir()) and bool(files_a)
        for name in files_a:
            compared += 1
            ok &= (outs[0] / name).read_bytes() == (outs[1] / name).read_bytes()
    record(12, "byte-identical reruns for every command", ok, f"{compared} file pairs compared")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
