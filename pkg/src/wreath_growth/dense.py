"""Dense honest-matrix oracles for A = F_p[x] (or F_p) with finite-support sequences.

Nothing here uses the symbolic normal form: elements are a Laurent coefficient
vector plus a dense window of polynomial entries, multiplied literally, and
ranks are taken by numpy Gaussian elimination mod p.  The window is sized so
that no entry can leave it; a shift that would drop a nonzero entry raises.
"""

from __future__ import annotations

import itertools

import numpy as np


class DenseModel:
    """Truncated honest model of F_p[x] wr F_p[t^-1, t] around the origin.

    ``seq`` maps positions m >= 1 to coefficient lists of a_m (lowest degree
    first).  ``radius`` bounds row/column/Laurent indices, ``degree`` the
    polynomial degree of entries.
    """

    def __init__(self, p: int, seq: dict[int, list[int]], radius: int, degree: int):
        self.p = p
        self.R = radius
        self.D = degree
        self.size = 2 * radius + 1
        self.seq = {m: list(cs) for m, cs in seq.items() if any(c % p for c in cs)}
        if any(m > radius for m in self.seq):
            raise ValueError("radius too small for the sequence support")

    def zero(self):
        return (np.zeros(self.size, dtype=np.int64),
                np.zeros((self.size, self.size, self.D + 1), dtype=np.int64))

    def generators(self, unit_position: int = 0):
        R = self.R
        t = self.zero()
        t[0][R + 1] = 1
        ti = self.zero()
        ti[0][R - 1] = 1
        e = self.zero()
        e[1][R + unit_position, R + unit_position, 0] = 1
        c = self.zero()
        for m, cs in self.seq.items():
            for d, coef in enumerate(cs):
                c[1][R, R + m, d] = coef % self.p
        return t, ti, e, c

    def _shift_rows(self, M, k):
        # (t^k X)_{i,q} = X_{i-k,q}
        out = np.zeros_like(M)
        if k > 0:
            if M[self.size - k:].any():
                raise OverflowError("row shift leaves the window")
            out[k:] = M[:self.size - k]
        elif k == 0:
            out[:] = M
        else:
            if M[:-k].any():
                raise OverflowError("row shift leaves the window")
            out[:k] = M[-k:]
        return out

    def _shift_cols(self, M, m):
        # (X t^m)_{i,q} = X_{i,q+m}
        out = np.zeros_like(M)
        if m > 0:
            if M[:, :m].any():
                raise OverflowError("column shift leaves the window")
            out[:, :self.size - m] = M[:, m:]
        elif m < 0:
            if M[:, self.size + m:].any():
                raise OverflowError("column shift leaves the window")
            out[:, -m:] = M[:, :self.size + m]
        else:
            out[:] = M
        return out

    def _matmul(self, A, B):
        p, D = self.p, self.D
        out = np.zeros_like(A)
        for d1 in range(D + 1):
            Ad = A[:, :, d1]
            if not Ad.any():
                continue
            prod = np.einsum("ir,rqd->iqd", Ad, B) % p
            if prod[:, :, D + 1 - d1:].any():
                raise OverflowError("polynomial degree leaves the window")
            out[:, :, d1:] += prod[:, :, :D + 1 - d1]
        return out % p

    def mul(self, x, y):
        p, R = self.p, self.R
        Lx, Mx = x
        Ly, My = y
        L = np.zeros_like(Lx)
        M = self._matmul(Mx, My)
        for k in np.nonzero(Lx)[0]:
            a = Lx[k]
            for m in np.nonzero(Ly)[0]:
                idx = k + m - R
                if not 0 <= idx < self.size:
                    raise OverflowError("Laurent degree leaves the window")
                L[idx] += a * Ly[m]
            M += a * self._shift_rows(My, int(k) - R)
        for m in np.nonzero(Ly)[0]:
            M += Ly[m] * self._shift_cols(Mx, int(m) - R)
        return L % p, M % p

    def flatten(self, x) -> np.ndarray:
        return np.concatenate([x[0], x[1].ravel()])

    def key(self, x) -> bytes:
        return self.flatten(x).astype(np.int8 if self.p < 128 else np.int64).tobytes()


class DenseRank:
    """Incremental reduced row echelon form mod p on dense numpy vectors."""

    def __init__(self, p: int, dim: int):
        self.p = p
        self.rows = np.zeros((0, dim), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, v: np.ndarray) -> bool:
        p = self.p
        v = v % p
        if self.pivots:
            v = (v - v[self.pivots] @ self.rows) % p
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        piv = int(nz[0])
        v = v * pow(int(v[piv]), -1, p) % p
        if self.pivots:
            col = self.rows[:, piv].copy()
            self.rows = (self.rows - np.outer(col, v)) % p
        self.rows = np.vstack([self.rows, v])
        self.pivots.append(piv)
        return True


def _model_for(p, seq, horizon):
    top = max(seq, default=1)
    deg = max((len(cs) - 1 for cs in seq.values()), default=0)
    return DenseModel(p, seq, radius=horizon + top + 1, degree=max(deg * horizon, 0))


def dense_growth(p: int, seq: dict[int, list[int]], horizon: int,
                 unit_position: int = 0) -> list[int]:
    """g(1..horizon) by span recursion on honest dense elements."""
    model = _model_for(p, seq, horizon)
    gens = model.generators(unit_position)
    rank = DenseRank(p, model.size + model.size ** 2 * (model.D + 1))
    frontier = [g for g in gens if rank.insert(model.flatten(g))]
    out = [rank.rank]
    for _ in range(2, horizon + 1):
        new = []
        for u in frontier:
            for g in gens:
                x = model.mul(u, g)
                if rank.insert(model.flatten(x)):
                    new.append(x)
        frontier = new
        out.append(rank.rank)
    return out


def dense_all_words_rank(p: int, seq: dict[int, list[int]], horizon: int) -> list[int]:
    """g(1..horizon) by evaluating every word of length <= n; only for tiny n."""
    model = _model_for(p, seq, horizon)
    gens = model.generators()
    rank = DenseRank(p, model.size + model.size ** 2 * (model.D + 1))
    out = []
    for n in range(1, horizon + 1):
        for word in itertools.product(range(4), repeat=n):
            x = gens[word[0]]
            for g in word[1:]:
                x = model.mul(x, gens[g])
            rank.insert(model.flatten(x))
        out.append(rank.rank)
    return out


def dense_semigroup_counts(p: int, seq: dict[int, list[int]], horizon: int,
                           unit_position: int = 0) -> tuple[list[int], list[bool]]:
    """Distinct nonzero honest elements representable by words of length <= n."""
    model = _model_for(p, seq, horizon)
    gens = model.generators(unit_position)
    seen: set[bytes] = set()
    zero_seen = False
    frontier = []
    for g in gens:
        k = model.key(g)
        if k not in seen:
            seen.add(k)
            frontier.append(g)
    counts, zeros = [len(seen)], [False]
    for _ in range(2, horizon + 1):
        new = []
        for u in frontier:
            for g in gens:
                x = model.mul(u, g)
                if not (x[0].any() or x[1].any()):
                    zero_seen = True
                    continue
                k = model.key(x)
                if k not in seen:
                    seen.add(k)
                    new.append(x)
        frontier = new
        counts.append(len(seen))
        zeros.append(zero_seen)
    return counts, zeros
