"""q-Pochhammer symbols and Gaussian (q-binomial) coefficients, together
with the two-branch extension of the q-binomial to a negative upper index.

The extended coefficient qbinomial_ext(n, m) agrees with qbinomial(n, m)
for n >= 0 and continues it to n < 0 as a Laurent polynomial.  It is the
unique family satisfying both q-Pascal recurrences

    X(n, m) = q^m X(n-1, m) + X(n-1, m-1)
    X(n, m) = X(n-1, m) + q^(n-m) X(n-1, m-1)

at every integer (n, m), with X(m, m) = 1 and X(n, 0) = 0 for n < 0.

All functions are pure; the memo tables are written idempotently, so
concurrent use (threads or forked workers) is safe.
"""

from __future__ import annotations

from .laurent import BiLaurent

__all__ = ["qpochhammer", "qbinomial", "qbinomial_ext", "ext_min_qexp"]

_POCH: dict[int, BiLaurent] = {0: BiLaurent.one()}
_QBIN: dict[tuple[int, int], BiLaurent] = {}
_EXT: dict[tuple[int, int], BiLaurent] = {}
_EXT_QDICT: dict[tuple[int, int], dict] = {}


def qpochhammer(n: int) -> BiLaurent:
    """(q)_n = (1-q)(1-q^2)...(1-q^n); (q)_0 = 1."""
    if n < 0:
        raise ValueError("qpochhammer needs n >= 0")
    poly = _POCH.get(n)
    if poly is None:
        poly = qpochhammer(n - 1) * BiLaurent({(0, 0): 1, (n, 0): -1})
        _POCH[n] = poly
    return poly


def qbinomial(n: int, m: int) -> BiLaurent:
    """Gaussian binomial coefficient; zero unless n >= m >= 0.

    Computed as the exact quotient (q)_n / ((q)_{n-m} (q)_m); the division
    routine verifies that no remainder is left, which doubles as a self-test.
    """
    if not (n >= m >= 0):
        return BiLaurent.zero()
    key = (n, m)
    poly = _QBIN.get(key)
    if poly is None:
        den = qpochhammer(n - m) * qpochhammer(m)
        poly = qpochhammer(n).divide_exact(den)
        _QBIN[key] = poly
    return poly


def qbinomial_ext(n: int, m: int) -> BiLaurent:
    """Extended q-binomial coefficient, defined for all integer n, m.

    For n >= 0 it is the Gaussian binomial.  For n < 0 it equals

        (-1)^(n-m) q^(-((n-m)^2 + (n-m))/2) * qbinomial(-m-1, -n-1)

    with q replaced by 1/q, realized here by negating the q-exponents of the
    computed Gaussian binomial.  At q = 1 it specializes to the coefficient
    of z^(-m) in the expansion of (1 + 1/z)^n around z = 0.
    """
    if n >= 0:
        return qbinomial(n, m)
    key = (n, m)
    poly = _EXT.get(key)
    if poly is None:
        base = qbinomial(-m - 1, -n - 1)
        if not base:
            poly = base
        else:
            d = n - m  # here m <= n < 0, so d >= 0 and d^2 + d is even
            shift = -((d * d + d) // 2)
            sign = -1 if d % 2 else 1
            poly = BiLaurent._raw(
                {(shift - q, 0): sign * c for (q, _), c in base._terms.items()}
            )
        _EXT[key] = poly
    return poly


def ext_min_qexp(n: int, m: int):
    """Lowest q-exponent of qbinomial_ext(n, m), or None if it is zero.

    Closed form, cheap enough to use as a pruning bound before the
    polynomial itself is ever materialized.
    """
    if n >= 0:
        return 0 if 0 <= m <= n else None
    if m > n:
        return None
    d = n - m
    # reversed-binomial degree: qbinomial(-m-1, -n-1) has degree (n-m)(-n-1)
    return -((d * d + d) // 2) - d * (-n - 1)


def _ext_qdict(n: int, m: int) -> dict:
    """Raw {q_exp: coeff} form of qbinomial_ext(n, m), for the lattice sums."""
    key = (n, m)
    d = _EXT_QDICT.get(key)
    if d is None:
        d = {q: c for (q, _), c in qbinomial_ext(n, m)._terms.items()}
        _EXT_QDICT[key] = d
    return d
