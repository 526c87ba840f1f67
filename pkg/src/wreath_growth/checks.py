"""Randomized law checks shared by the test-suite and the ``verify`` command."""

from __future__ import annotations

import random

from .algebra import Algebra
from .growth import CheckReport
from .wreath import WreathProduct


def check_algebra_laws(alg: Algebra, samples: int = 1000, seed: int = 0) -> CheckReport:
    """Associativity and left distributivity on random triples, exact equality."""
    rng = random.Random(seed)
    witnesses = []
    for _ in range(samples):
        a, b, c = (alg.random_element(rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            witnesses.append({"law": "associativity", "a": repr(a), "b": repr(b), "c": repr(c)})
        if a * (b + c) != a * b + a * c:
            witnesses.append({"law": "distributivity", "a": repr(a), "b": repr(b), "c": repr(c)})
        if len(witnesses) >= 10:
            break
    return CheckReport("algebra_laws", not witnesses, samples, witnesses)


def check_wreath_associativity(ctx: WreathProduct, triples: int = 1000, seed: int = 0
                               ) -> CheckReport:
    rng = random.Random(seed)
    witnesses = []
    for _ in range(triples):
        x, y, z = (ctx.random_element(rng) for _ in range(3))
        if ctx.mul(ctx.mul(x, y), z) != ctx.mul(x, ctx.mul(y, z)):
            witnesses.append({"x": x.to_json(), "y": y.to_json(), "z": z.to_json()})
            if len(witnesses) >= 5:
                break
    return CheckReport("wreath_associativity", not witnesses, triples, witnesses,
                       {"seed": seed})


def check_oracle_equivalence(ctx: WreathProduct, pairs: int = 500, seed: int = 0,
                             radius: int = 12) -> CheckReport:
    """honest_window(x*y) against the literal product of honest entries."""
    rng = random.Random(seed)
    window = (-radius, radius)
    witnesses = []
    for _ in range(pairs):
        x, y = ctx.random_element(rng), ctx.random_element(rng)
        got = ctx.honest_window(ctx.mul(x, y), window, window)
        want = ctx.literal_product_window(x, y, window, window)
        if got != want:
            witnesses.append({"x": x.to_json(), "y": y.to_json()})
            if len(witnesses) >= 5:
                break
    return CheckReport("oracle_equivalence", not witnesses, pairs, witnesses,
                       {"seed": seed, "window": list(window)})


def check_canonicalize(ctx: WreathProduct, samples: int = 200, seed: int = 0,
                       radius: int = 8) -> CheckReport:
    """canonicalize is idempotent and leaves honest windows unchanged."""
    rng = random.Random(seed)
    window = (-radius, radius)
    witnesses = []
    for _ in range(samples):
        x = ctx.random_element(rng)
        y = ctx.canonicalize(x)
        if ctx.canonicalize(y) != y or ctx.honest_window(x, window, window) != \
                ctx.honest_window(y, window, window):
            witnesses.append({"x": x.to_json()})
    return CheckReport("canonicalize", not witnesses, samples, witnesses)
