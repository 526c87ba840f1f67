"""Generating sequences c = (a_1, a_2, ...) with implicit zeros.

A sequence is either an explicit finite map ``position -> element`` or a rule
pair ``(k -> n_k, k -> b_k)`` for k = 1, 2, ... that is only evaluated up to a
declared horizon.  Asking for an entry past the horizon raises
:class:`HorizonError`; it never silently returns zero.
"""

from __future__ import annotations

import bisect
from typing import Callable, Mapping

from .algebra import AlgElement, Algebra
from .errors import HorizonError, PreconditionError


class GeneratingSequence:
    def __init__(self, alg: Algebra, entries: Mapping[int, AlgElement] | None = None, *,
                 positions: Callable[[int], int] | None = None,
                 elements: Callable[[int], AlgElement] | None = None,
                 horizon: int | None = None, gap_mode: bool = False,
                 description: dict | None = None):
        self.alg = alg
        self.gap_mode = bool(gap_mode)
        self.description = dict(description or {})
        if entries is not None:
            if positions is not None or elements is not None:
                raise PreconditionError("give either explicit entries or a rule, not both")
            items = sorted((int(m), alg.coerce(b)) for m, b in entries.items())
            self._finite = True
            self.horizon = None
        else:
            if positions is None or elements is None or horizon is None:
                raise PreconditionError("rule sequences need positions, elements and a horizon")
            self._finite = False
            self.horizon = int(horizon)
            items = []
            k = 1
            while True:
                m = int(positions(k))
                if m > self.horizon:
                    break
                items.append((m, alg.coerce(elements(k))))
                k += 1
        self._positions = [m for m, _ in items]
        self._entries = dict(items)
        self._validate()

    def _validate(self):
        pos = self._positions
        if any(m < 1 for m in pos):
            raise PreconditionError("sequence positions must be >= 1")
        if any(b >= a for a, b in zip(pos[1:], pos)):
            raise PreconditionError("sequence positions must be strictly increasing")
        for m, b in self._entries.items():
            self.alg.check_element(b)
            if not b:
                raise PreconditionError(f"sequence entry a_{m} is zero; zeros are implicit")
        if self.gap_mode:
            gaps = [b - a for a, b in zip(pos, pos[1:])]
            if any(g2 <= g1 for g1, g2 in zip(gaps, gaps[1:])):
                raise PreconditionError("gap_mode set but gaps are not strictly increasing")

    @classmethod
    def finite(cls, alg: Algebra, entries: Mapping[int, AlgElement], **kw):
        return cls(alg, entries, **kw)

    @property
    def is_finite(self) -> bool:
        return self._finite

    def support(self) -> list[int]:
        """Known nonzero positions (all of them for finite sequences)."""
        return list(self._positions)

    def entry(self, m: int) -> AlgElement | None:
        """a_m, or None when a_m = 0."""
        if not self._finite and m > self.horizon:
            raise HorizonError(f"entry a_{m} lies beyond the sequence horizon {self.horizon}")
        return self._entries.get(m)

    def positions_upto(self, n: int) -> list[int]:
        if not self._finite and n > self.horizon:
            raise HorizonError(f"positions up to {n} requested; horizon is {self.horizon}")
        return self._positions[:bisect.bisect_right(self._positions, n)]

    def items(self):
        return [(m, self._entries[m]) for m in self._positions]

    def to_json(self) -> dict:
        out = {"finite": self._finite,
               "entries": [[m, b.to_json()] for m, b in self.items()]}
        if not self._finite:
            out["horizon"] = self.horizon
            out["gap_mode"] = self.gap_mode
        if self.description:
            out["rule"] = self.description
        return out

    def __repr__(self):
        body = ", ".join(f"a_{m}={b!r}" for m, b in self.items()[:6])
        tail = "" if self._finite else f", ... (horizon {self.horizon})"
        return f"GeneratingSequence({body}{tail})"
