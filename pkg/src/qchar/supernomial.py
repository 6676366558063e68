"""q-supernomial coefficients and the site-vector bookkeeping behind them.

A SiteVector packages the data (N_+, N_-; N_0, ..., N_{d-1}) of a graded
subalgebra cutoff.  Its profile (N_0, ..., N_{d-1}, N_+ + N_-) is turned
into the multiplicity vector L by the tridiagonal second-difference matrix;
L counts how many elementary constituents of each width the cutoff fuses,
and it indexes the supernomial coefficients.

supernomial(L, a) generalizes the Gaussian binomial: at q = 1 it is the
coefficient of x^a in prod_j (1 + x + ... + x^j)^(L_j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .laurent import BiLaurent, _qdict_mul
from .qbinom import qbinomial

__all__ = [
    "SiteVector",
    "multiplicities",
    "second_diff_matrix",
    "supernomial",
    "supernomial_at1",
]


def second_diff_matrix(m: int) -> tuple[tuple[int, ...], ...]:
    """Tridiagonal m x m matrix with 2 on the diagonal (1 in the last slot)
    and -1 off-diagonal; its inverse has entries min(i, j)."""
    if m < 1:
        raise ValueError("matrix size must be >= 1")
    rows = []
    for i in range(m):
        row = [0] * m
        row[i] = 2 if i < m - 1 else 1
        if i > 0:
            row[i - 1] = -1
        if i < m - 1:
            row[i + 1] = -1
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class SiteVector:
    """Cutoff vector (N_+, N_-; N_0, ..., N_{d-1}) for the rank-p lattice
    algebra, with d = len(levels) and 0 <= d <= 2p-3."""

    p: int
    plus: int
    minus: int
    levels: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(int(v) for v in self.levels))
        if self.p < 2:
            raise ValueError("p must be >= 2")
        if len(self.levels) > 2 * self.p - 3:
            raise ValueError("too many levels: need d <= 2p-3")

    @property
    def d(self) -> int:
        return len(self.levels)

    @property
    def total(self) -> int:
        return self.plus + self.minus

    def components(self) -> tuple[int, ...]:
        """(N_+, N_-, N_0, ..., N_{d-1}) in enumeration order."""
        return (self.plus, self.minus) + self.levels

    def profile(self) -> tuple[int, ...]:
        """(N_0, ..., N_{d-1}, N_+ + N_-), the input of the L-transform."""
        return self.levels + (self.total,)

    def is_monotone(self) -> bool:
        """0 <= N_0 <= ... <= N_{d-1} <= N_+ + N_-."""
        seq = (0,) + self.levels + (self.total,)
        return all(a <= b for a, b in zip(seq, seq[1:]))

    def flowed(self, theta: int) -> "SiteVector":
        """Shift along the spectral-flow direction (plus + theta, minus - theta)."""
        return SiteVector(self.p, self.plus + theta, self.minus - theta, self.levels)

    def shifted_by(self, vec) -> "SiteVector":
        """Componentwise shift by a vector over (+, -, 0, ..., d-1)."""
        if len(vec) != self.d + 2:
            raise ValueError("shift vector has wrong length")
        return SiteVector(
            self.p,
            self.plus + vec[0],
            self.minus + vec[1],
            tuple(a + b for a, b in zip(self.levels, vec[2:])),
        )


def multiplicities(site: SiteVector) -> tuple[int, ...]:
    """The multiplicity vector L = profile * T of length d+1.

    L_j is a second difference of the profile, with a first-difference last
    entry; elementary sites of width i have L = e_i.
    """
    prof = site.profile()
    t = second_diff_matrix(len(prof))
    return tuple(
        sum(prof[i] * t[i][j] for i in range(len(prof))) for j in range(len(prof))
    )


# -- supernomials ----------------------------------------------------------

_SUP: dict[tuple[tuple[int, ...], int], BiLaurent] = {}
_SUP1: dict[tuple[tuple[int, ...], int], int] = {}


def _check_entries(entries) -> tuple[int, ...]:
    entries = tuple(int(v) for v in entries)
    if not entries:
        raise ValueError("need at least one entry")
    if any(v < 0 for v in entries):
        raise ValueError("supernomial entries must be nonnegative")
    return entries


def supernomial(entries, a: int) -> BiLaurent:
    """q-supernomial coefficient for the nonnegative vector (L_1, ..., L_k).

    The sum over compositions n_1 + ... + n_k = a of

        q^(sum_{i=2..k} n_{i-1} (S_i - n_i)) *
        qbin(L_k, n_k) qbin(L_{k-1} + n_k, n_{k-1}) ... qbin(L_1 + n_2, n_1)

    with S_i = L_i + ... + L_k.  Zero outside 0 <= a <= sum_j j*L_j.
    """
    entries = _check_entries(entries)
    key = (entries, a)
    poly = _SUP.get(key)
    if poly is None:
        acc: dict = {}
        for exp, factors in _compositions(entries, a):
            for e, c in factors.items():
                k = exp + e
                v = acc.get(k, 0) + c
                if v:
                    acc[k] = v
                elif k in acc:
                    del acc[k]
        poly = BiLaurent.from_qdict(acc)
        _SUP[key] = poly
    return poly


def supernomial_at1(entries, a: int) -> int:
    """The supernomial evaluated at q = 1: the coefficient of x^a in
    prod_j (1 + x + ... + x^j)^(L_j)."""
    entries = _check_entries(entries)
    key = (entries, a)
    val = _SUP1.get(key)
    if val is None:
        val = 0
        for _, top_bot in _compositions(entries, a, weights=False):
            term = 1
            for top, bot in top_bot:
                term *= math.comb(top, bot)
            val += term
        _SUP1[key] = val
    return val


def _compositions(entries: tuple[int, ...], a: int, weights: bool = True):
    """Enumerate contributing compositions (n_1, ..., n_k) of a.

    Yields (exponent, factor_qdict) when weights is True, else
    (0, ((top, bottom), ...)).  Bounds follow the vanishing of the binomial
    factors: n_k in [0, L_k], then n_{i} in [0, L_i + n_{i+1}]."""
    k = len(entries)
    if a < 0 or a > sum((i + 1) * v for i, v in enumerate(entries)):
        return
    suffix = [0] * (k + 2)
    for i in range(k, 0, -1):
        suffix[i] = suffix[i + 1] + entries[i - 1]

    # Assign n_k, ..., n_2 recursively; n_1 is forced by the total.
    def rec(pos: int, remaining: int, next_n: int, exp: int, factors):
        if pos == 1:
            n1 = remaining
            top = entries[0] + (next_n if k > 1 else 0)
            if 0 <= n1 <= top:
                if k > 1:
                    exp = exp + n1 * (suffix[2] - next_n)
                if weights:
                    f = _qdict_mul(factors, _qbin_qdict(top, n1))
                    if f:
                        yield exp, f
                else:
                    yield 0, factors + ((top, n1),)
            return
        top = entries[pos - 1] + (next_n if pos < k else 0)
        for n in range(0, min(top, remaining) + 1):
            e2 = exp + (n * (suffix[pos + 1] - next_n) if pos < k else 0)
            if weights:
                f = _qdict_mul(factors, _qbin_qdict(top, n))
                if not f:
                    continue
                yield from rec(pos - 1, remaining - n, n, e2, f)
            else:
                yield from rec(pos - 1, remaining - n, n, e2, factors + ((top, n),))

    start = {0: 1} if weights else ()
    yield from rec(k, a, 0, 0, start)


_QBIN_QDICT: dict[tuple[int, int], dict] = {}


def _qbin_qdict(n: int, m: int) -> dict:
    d = _QBIN_QDICT.get((n, m))
    if d is None:
        d = {q: c for (q, _), c in qbinomial(n, m)._terms.items()}
        _QBIN_QDICT[(n, m)] = d
    return d
