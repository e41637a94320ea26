"""Independent ground truth for differential tests.

Everything here recomputes results by a route the library never takes:
integer binary exponentiation, exact rational partial sums reduced mod
p^N in one final step, and characteristic polynomials by cofactor
expansion over Z[x].  No code is shared with the series or linear
algebra modules; that independence is the point.  Test-only; nothing
here tracks precision or aims to be fast.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DenominatorNotInvertible

__all__ = ["oracle_power", "oracle_series", "oracle_char_poly", "reduce_fraction"]


def oracle_power(base: int, exp: int, p: int, prec: int) -> int:
    """base^exp mod p^prec by plain binary exponentiation."""
    if exp < 0:
        raise ValueError("exponent must be >= 0")
    return pow(base, exp, p**prec)


def reduce_fraction(q: Fraction, p: int, prec: int) -> int:
    """Image of a p-integral rational in Z/p^prec."""
    if q.denominator % p == 0:
        raise DenominatorNotInvertible(
            f"denominator {q.denominator} is divisible by {p}; "
            "the partial sum kept too few terms"
        )
    mod = p**prec
    return q.numerator * pow(q.denominator, -1, mod) % mod


def _binomial(lam, n: int) -> Fraction:
    acc = Fraction(1)
    for i in range(n):
        acc *= Fraction(lam) - i
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return acc / fact


def oracle_series(kind: str, arg, terms: int, p: int, prec: int, exponent=None) -> int:
    """Exact rational partial sum of a named series, reduced mod p^prec.

    kind "log":    sum_{k=1}^{terms} (-1)^(k-1) (arg - 1)^k / k  (arg = u)
    kind "exp":    sum_{k=0}^{terms} arg^k / k!
    kind "mahler": sum_{n=0}^{terms-1} arg^n P_n(exponent)        (arg = z)

    The whole sum is accumulated as one Fraction and reduced once at the
    end; a denominator still divisible by p signals too few terms.
    """
    if kind == "log":
        x = Fraction(arg) - 1
        total = Fraction(0)
        power = Fraction(1)
        for k in range(1, terms + 1):
            power *= x
            total += power / k if k % 2 == 1 else -power / k
        return reduce_fraction(total, p, prec)
    if kind == "exp":
        x = Fraction(arg)
        total = Fraction(1)
        power = Fraction(1)
        fact = 1
        for k in range(1, terms + 1):
            power *= x
            fact *= k
            total += power / fact
        return reduce_fraction(total, p, prec)
    if kind == "mahler":
        if exponent is None:
            raise ValueError("mahler series needs the exponent argument")
        z = Fraction(arg)
        total = Fraction(0)
        for n in range(terms):
            total += z**n * _binomial(exponent, n)
        return reduce_fraction(total, p, prec)
    raise ValueError(f"unknown series kind {kind!r}")


def _poly_add(a: list, b: list) -> list:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_det(m: list) -> list:
    if len(m) == 1:
        return m[0][0]
    acc = [0]
    for j, cell in enumerate(m[0]):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = _poly_mul(cell, _poly_det(minor))
        if j % 2 == 1:
            term = [-c for c in term]
        acc = _poly_add(acc, term)
    return acc


def oracle_char_poly(rows) -> list[int]:
    """det(xI - A) for an integer matrix, by Laplace expansion over Z[x].

    Ascending coefficients.  Exponential in n; strictly for checking the
    production Faddeev-LeVerrier route on small matrices.
    """
    n = len(rows)
    m = [
        [[-rows[i][j], 1] if i == j else [-rows[i][j]] for j in range(n)]
        for i in range(n)
    ]
    det = _poly_det(m)
    return _poly_add(det, [0] * (n + 1))[: n + 1]
