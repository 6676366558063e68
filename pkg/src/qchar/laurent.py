"""Exact sparse arithmetic for Laurent polynomials in q and z.

A value is a finite integer-coefficient sum of monomials q^s z^m, where the
q-exponent s is rational (fractions.Fraction) and the z-exponent m is an
integer.  This is the universal value type of the library: q-binomial
coefficients, supernomial coefficients, lattice sums and character
polynomials are all BiLaurent values.

Representation: a dict mapping (q_exp, z_exp) -> coefficient with no zero
coefficient ever stored, so equality of values is equality of dicts.
Integral q-exponents are kept as plain int (int and Fraction hash alike,
but one stored form keeps repr and term order canonical).  Instances are
immutable; every operation returns a new value, which makes them safe to
share between threads or worker processes.

Coefficients are arbitrary-precision Python ints throughout; nothing is
ever rounded or reduced modulo anything.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Exp = Union[int, Fraction]

__all__ = [
    "BiLaurent",
    "CyclotomicVector",
    "Fraction",
    "bounded_partition_counts",
    "cyclic_convolve",
    "partition_series",
]


def norm_exp(e):
    """Collapse integral Fractions to int; reject anything inexact."""
    if type(e) is int:
        return e
    if isinstance(e, Fraction):
        return int(e) if e.denominator == 1 else e
    if isinstance(e, int):  # bool etc.
        return int(e)
    raise TypeError(f"exponent must be int or Fraction, not {type(e).__name__}")


class BiLaurent:
    """Immutable Laurent polynomial in q (rational exponents) and z (integer
    exponents) with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        data: dict = {}
        if terms:
            for key, c in terms.items():
                if not isinstance(c, int):
                    raise TypeError("coefficients must be int")
                c = int(c)  # collapse bool
                if c == 0:
                    continue
                q, z = key
                q = norm_exp(q)
                if not isinstance(z, int):
                    raise TypeError("z-exponents must be int")
                k = (q, z)
                v = data.get(k, 0) + c
                if v:
                    data[k] = v
                elif k in data:
                    del data[k]
        self._terms = data

    @classmethod
    def _raw(cls, data: dict) -> "BiLaurent":
        # Internal: `data` must already be canonical (no zero coefficients).
        self = object.__new__(cls)
        self._terms = data
        return self

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "BiLaurent":
        return cls._raw({})

    @classmethod
    def one(cls) -> "BiLaurent":
        return cls._raw({(0, 0): 1})

    @classmethod
    def term(cls, coef: int, q: Exp = 0, z: int = 0) -> "BiLaurent":
        if coef == 0:
            return cls.zero()
        return cls._raw({(norm_exp(q), z): coef})

    @classmethod
    def from_qdict(cls, d: Mapping[Exp, int]) -> "BiLaurent":
        """Build a z-free value from a {q_exp: coefficient} mapping."""
        return cls._raw({(norm_exp(q), 0): c for q, c in d.items() if c})

    # -- basics ------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            if other == 0:
                return not self._terms
            return self._terms == {(0, 0): other}
        if isinstance(other, BiLaurent):
            return self._terms == other._terms
        return NotImplemented

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[Exp, int, int]]:
        """Terms as (q_exp, z_exp, coefficient), sorted lexicographically."""
        return [(q, z, c) for (q, z), c in sorted(self._terms.items())]

    def coefficient(self, q: Exp = 0, z: int = 0) -> int:
        return self._terms.get((norm_exp(q), z), 0)

    def q_min(self):
        return min((q for q, _ in self._terms), default=None)

    def q_max(self):
        return max((q for q, _ in self._terms), default=None)

    def is_q_only(self) -> bool:
        return all(z == 0 for _, z in self._terms)

    def qdict(self) -> dict:
        """The {q_exp: coefficient} dict of a z-free value."""
        if not self.is_q_only():
            raise ValueError("value depends on z")
        return {q: c for (q, _), c in self._terms.items()}

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = BiLaurent.term(other)
        if not isinstance(other, BiLaurent):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return BiLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiLaurent._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = BiLaurent.term(other)
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return BiLaurent.zero()
            if other == 1:
                return self
            return BiLaurent._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BiLaurent):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for (qa, za), ca in a.items():
            for (qb, zb), cb in b.items():
                k = (qa + qb, za + zb)
                v = get(k, 0) + ca * cb
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        return BiLaurent._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = BiLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, dq: Exp = 0, dz: int = 0) -> "BiLaurent":
        """Multiply by the monomial q^dq z^dz."""
        if dq == 0 and dz == 0:
            return self
        dq = norm_exp(dq)
        return BiLaurent._raw({(q + dq, z + dz): c for (q, z), c in self._terms.items()})

    # -- specializations and reshaping ---------------------------------------

    def substitute_z(self, c: Exp) -> "BiLaurent":
        """Apply z -> z*q^c: each term q^s z^m becomes q^(s + c*m) z^m."""
        c = norm_exp(c)
        if c == 0:
            return self
        return BiLaurent._raw(
            {(norm_exp(q + c * z), z): v for (q, z), v in self._terms.items()}
        )

    def at_q1_z1(self) -> int:
        """Sum of all coefficients (the q = 1, z = 1 specialization)."""
        return sum(self._terms.values())

    def truncate_q(self, max_exp: Exp | None) -> "BiLaurent":
        """Drop all terms with q-exponent above max_exp (None keeps everything)."""
        if max_exp is None:
            return self
        return BiLaurent._raw({k: c for k, c in self._terms.items() if k[0] <= max_exp})

    def clip_z(self, window: int | None) -> "BiLaurent":
        """Keep only terms with |z-exponent| <= window (None keeps everything)."""
        if window is None:
            return self
        return BiLaurent._raw(
            {k: c for k, c in self._terms.items() if -window <= k[1] <= window}
        )

    def cyclotomic(self, p: int) -> "CyclotomicVector":
        """Reduce a z-only Laurent polynomial modulo z^p = 1."""
        if p < 1:
            raise ValueError("p must be positive")
        coeffs = [0] * p
        for (q, z), c in self._terms.items():
            if q != 0:
                raise ValueError("cyclotomic reduction needs a q-free value")
            coeffs[z % p] += c
        return CyclotomicVector(p, tuple(coeffs))

    # -- exact division ------------------------------------------------------

    def divide_exact(self, divisor: "BiLaurent") -> "BiLaurent":
        """Exact quotient of z-free values; raises ValueError if the division
        leaves a remainder."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        num = self.qdict()
        den = divisor.qdict()
        if not num:
            return BiLaurent.zero()
        dlead = max(den)
        dcoef = den[dlead]
        min_quot = min(num) - min(den)
        rem = num
        quot: dict = {}
        while rem:
            rlead = max(rem)
            e = rlead - dlead
            if e < min_quot:
                raise ValueError("not exactly divisible")
            c, r = divmod(rem[rlead], dcoef)
            if r:
                raise ValueError("not exactly divisible")
            quot[e] = c
            for de, dc in den.items():
                k = e + de
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                elif k in rem:
                    del rem[k]
        return BiLaurent.from_qdict(quot)

    # -- rendering -------------------------------------------------------------

    @staticmethod
    def _fmt_exp(e) -> str:
        s = str(e)
        return s if s.isdigit() else f"({s})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for q, z, c in self.terms():
            factors = []
            if q != 0:
                factors.append("q" if q == 1 else f"q^{self._fmt_exp(q)}")
            if z != 0:
                factors.append("z" if z == 1 else f"z^{self._fmt_exp(z)}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiLaurent({str(self)})"

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for q, z, c in self.terms():
            factors = []
            if q != 0:
                factors.append(f"q^{{{q}}}")
            if z != 0:
                factors.append(f"z^{{{z}}}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = " ".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    # -- serialization ---------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"q": str(q), "z": z, "c": str(c)} for q, z, c in self.terms()
            ]
        }

    def dumps(self, **kwargs) -> str:
        return json.dumps(self.to_json_obj(), **kwargs)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "BiLaurent":
        data = {}
        for t in obj["terms"]:
            key = (norm_exp(Fraction(t["q"])), int(t["z"]))
            data[key] = data.get(key, 0) + int(t["c"])
        return cls(data)

    @classmethod
    def loads(cls, s: str) -> "BiLaurent":
        return cls.from_json_obj(json.loads(s))


# -- z^p = 1 quotient ring ------------------------------------------------------


def cyclic_convolve(a: Iterable[int], b: Iterable[int]) -> tuple[int, ...]:
    a = tuple(a)
    b = tuple(b)
    p = len(a)
    if len(b) != p:
        raise ValueError("length mismatch")
    out = [0] * p
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[(i + j) % p] += x * y
    return tuple(out)


@dataclass(frozen=True)
class CyclotomicVector:
    """Element of Z[x]/(x^p - 1), stored as the coefficients of x^0..x^(p-1)."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be positive")
        if len(self.coeffs) != self.p:
            raise ValueError("need exactly p coefficients")

    @classmethod
    def unit(cls, p: int) -> "CyclotomicVector":
        return cls(p, (1,) + (0,) * (p - 1))

    def __mul__(self, other: "CyclotomicVector") -> "CyclotomicVector":
        if not isinstance(other, CyclotomicVector):
            return NotImplemented
        if self.p != other.p:
            raise ValueError("mismatched ring sizes")
        return CyclotomicVector(self.p, cyclic_convolve(self.coeffs, other.coeffs))


# -- partition series ---------------------------------------------------------


@lru_cache(maxsize=None)
def bounded_partition_counts(parts: int, max_deg: int) -> tuple[int, ...]:
    """Numbers of partitions of 0..max_deg into parts of size at most `parts`.

    These are the series coefficients of 1/((1-q)(1-q^2)...(1-q^parts)).
    """
    if parts < 0 or max_deg < 0:
        raise ValueError("parts and max_deg must be nonnegative")
    dp = [0] * (max_deg + 1)
    dp[0] = 1
    for part in range(1, min(parts, max_deg) + 1):
        for j in range(part, max_deg + 1):
            dp[j] += dp[j - part]
    return tuple(dp)


def partition_series(max_deg: int) -> BiLaurent:
    """The partition generating function 1/(q)_inf truncated at q^max_deg."""
    counts = bounded_partition_counts(max_deg, max_deg)
    return BiLaurent._raw({(j, 0): c for j, c in enumerate(counts) if c})


# -- internal helpers for hot loops -------------------------------------------
# Raw {q_exp: coefficient} dicts avoid tuple keys inside the lattice sums.


def _qdict_mul(a: dict, b: dict, cap=None) -> dict:
    """Product of two q-exponent dicts, optionally dropping exponents > cap."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    if cap is None:
        for ea, ca in a.items():
            for eb, cb in b.items():
                k = ea + eb
                v = get(k, 0) + ca * cb
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
    else:
        for ea, ca in a.items():
            for eb, cb in b.items():
                k = ea + eb
                if k > cap:
                    continue
                v = get(k, 0) + ca * cb
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
    return out
