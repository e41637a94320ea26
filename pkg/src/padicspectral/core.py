"""Fixed-precision arithmetic in the ring Z_p of p-adic integers.

An element is stored as a single canonical residue in ``[0, p^N)``
together with the prime ``p`` and the number ``N`` of tracked base-p
digits.  All operations are exact integer arithmetic mod p^N; nothing
here ever touches a float.  Binary operations require equal primes and
return results at the minimum of the two operand precisions; exact
division records its precision loss explicitly instead of hiding it.

The prime 2 is rejected everywhere: the group-theoretic results this
package implements need p odd (exp must converge on pZ_p).
"""

from __future__ import annotations

from functools import lru_cache, total_ordering

from .errors import (
    DivisionByHigherValuation,
    InsufficientPrecision,
    PrecisionExceeded,
    PrimeMismatch,
)

__all__ = ["Prime", "Valuation", "PadicInt", "validate_prime"]


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    # Trial division; the package targets desk-scale primes (p <= ~10^4).
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def validate_prime(p: int) -> int:
    """Check that ``p`` is an odd prime >= 3 and return it.

    Raises ValueError for composites and for p = 2 (excluded globally:
    the one-parameter-group results require p odd).
    """
    p = int(p)
    if p == 2:
        raise ValueError("p = 2 is not supported (odd primes only)")
    if p < 3 or not _is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return p


class Prime(int):
    """An odd prime, validated at construction."""

    def __new__(cls, p: int) -> "Prime":
        return super().__new__(cls, validate_prime(p))


@total_ordering
class Valuation:
    """A p-adic valuation: an exact value v >= 0 or "at least N".

    ``Valuation.at_least(N)`` is the valuation of a residue that is zero
    at precision N: all that is known is v >= N.  The absolute value
    |x| = p^(-v) is represented by this object (together with p), never
    as a float.  Ordering compares the known lower bound, with the
    open-ended form sorting above an exact value of the same size.
    """

    __slots__ = ("value", "bounded")

    def __init__(self, value: int, bounded: bool = True):
        if value < 0:
            raise ValueError("valuation must be nonnegative")
        self.value = int(value)
        self.bounded = bounded  # False: only "v >= value" is known

    @classmethod
    def exact(cls, v: int) -> "Valuation":
        return cls(v, True)

    @classmethod
    def at_least(cls, n: int) -> "Valuation":
        return cls(n, False)

    @property
    def is_finite(self) -> bool:
        return self.bounded

    def _key(self):
        return (self.value, not self.bounded)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Valuation):
            return NotImplemented
        return self.value == other.value and self.bounded == other.bounded

    def __lt__(self, other) -> bool:
        if not isinstance(other, Valuation):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __add__(self, other: "Valuation") -> "Valuation":
        if not isinstance(other, Valuation):
            return NotImplemented
        return Valuation(self.value + other.value, self.bounded and other.bounded)

    def cap(self, prec: int) -> "Valuation":
        """Clamp to what precision ``prec`` can distinguish."""
        if self.value >= prec:
            return Valuation.at_least(prec)
        return self

    def abs_exponent(self) -> int:
        """Exponent e with |x| = p^e (a bound -value when unbounded)."""
        return -self.value

    def __repr__(self):
        return f"v={self.value}" if self.bounded else f"v>={self.value}"


class PadicInt:
    """An element of Z_p known modulo p^N.

    ``PadicInt(n, p, prec)`` reduces any signed integer ``n`` to its
    canonical residue in ``[0, p^prec)``.  Instances are immutable;
    arithmetic returns new objects.  ``==`` is structural (same prime,
    same precision, same residue); use :meth:`congruent` for equality
    at a chosen number of digits.
    """

    __slots__ = ("p", "prec", "residue")

    def __init__(self, n: int, p: int, prec: int):
        p = validate_prime(p)
        prec = int(prec)
        if prec < 1:
            raise ValueError("precision must be >= 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "residue", int(n) % p**prec)

    def __setattr__(self, name, value):
        raise AttributeError("PadicInt is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, p: int, prec: int) -> "PadicInt":
        return cls(0, p, prec)

    @classmethod
    def one(cls, p: int, prec: int) -> "PadicInt":
        return cls(1, p, prec)

    # -- basic queries -----------------------------------------------

    @property
    def modulus(self) -> int:
        return self.p**self.prec

    def is_zero(self) -> bool:
        """True when the residue vanishes, i.e. valuation is at least N."""
        return self.residue == 0

    def is_unit(self) -> bool:
        return self.residue % self.p != 0

    def valuation(self) -> Valuation:
        """Largest v < prec with p^v dividing the residue, else at_least(prec)."""
        if self.residue == 0:
            return Valuation.at_least(self.prec)
        r, v = self.residue, 0
        while r % self.p == 0:
            r //= self.p
            v += 1
        return Valuation.exact(v)

    def reduce_mod_p(self) -> int:
        """Image in the residue field F_p."""
        return self.residue % self.p

    def digits(self) -> tuple[int, ...]:
        """The prec tracked base-p digits, least significant first."""
        out = []
        r = self.residue
        for _ in range(self.prec):
            r, d = divmod(r, self.p)
            out.append(d)
        return tuple(out)

    # -- precision management ----------------------------------------

    def truncate_to(self, prec: int) -> "PadicInt":
        """Drop digits down to ``prec`` (must be >= 1)."""
        if prec > self.prec:
            raise PrecisionExceeded(
                f"cannot truncate to {prec} digits, only {self.prec} tracked"
            )
        if prec == self.prec:
            return self
        return PadicInt(self.residue, self.p, prec)

    def lift_to(self, prec: int) -> "PadicInt":
        """Reinterpret at higher precision with zero digits appended.

        This is the canonical lift: the new digits are a choice, so the
        result represents *some* preimage of the value.  Series code uses
        it internally and accounts for the ambiguity in its error bounds.
        """
        if prec < self.prec:
            raise ValueError("lift_to cannot lower precision; use truncate_to")
        if prec == self.prec:
            return self
        return PadicInt(self.residue, self.p, prec)

    # -- ring operations ---------------------------------------------

    def _coerce(self, other) -> "PadicInt":
        if isinstance(other, PadicInt):
            if other.p != self.p:
                raise PrimeMismatch(f"p={self.p} vs p={other.p}")
            return other
        if isinstance(other, int):
            return PadicInt(other, self.p, self.prec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        return PadicInt(self.residue + other.residue, self.p, prec)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        return PadicInt(self.residue - other.residue, self.p, prec)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        return PadicInt(self.residue * other.residue, self.p, prec)

    __rmul__ = __mul__

    def __neg__(self):
        return PadicInt(-self.residue, self.p, self.prec)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer exponents")
        return PadicInt(pow(self.residue, k, self.modulus), self.p, self.prec)

    def divide_exact(self, other) -> "PadicInt":
        """Exact division in Z_p with explicit precision loss.

        With w = valuation(divisor), the quotient is correct mod
        p^(N - w) where N = min of the operand precisions; the result
        carries precision N - w so the loss is never silent.
        """
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot divide by this operand")
        w_val = other.valuation()
        if not w_val.is_finite:
            raise DivisionByHigherValuation("divisor is zero at its precision")
        w = w_val.value
        my_val = self.valuation()
        if my_val.is_finite and my_val.value < w:
            raise DivisionByHigherValuation(
                f"divisor valuation {w} exceeds dividend valuation {my_val.value}"
            )
        prec = min(self.prec, other.prec) - w
        if prec < 1:
            raise InsufficientPrecision(
                f"division by valuation {w} leaves no digits at precision "
                f"{min(self.prec, other.prec)}"
            )
        pw = self.p**w
        unit = other.residue // pw
        num = self.residue // pw
        inv = pow(unit, -1, self.p**prec)
        return PadicInt(num * inv, self.p, prec)

    def inverse(self) -> "PadicInt":
        """Multiplicative inverse; requires a unit."""
        if not self.is_unit():
            raise DivisionByHigherValuation("only units are invertible in Z_p")
        return PadicInt(pow(self.residue, -1, self.modulus), self.p, self.prec)

    # -- comparisons ---------------------------------------------------

    def congruent(self, other, digits: int) -> bool:
        """True iff self - other vanishes mod p^digits.

        ``digits`` may not exceed either operand's precision: asking about
        digits nobody tracked is an error, not a guess.
        """
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot compare with this operand")
        if digits > min(self.prec, other.prec):
            raise PrecisionExceeded(
                f"congruence at {digits} digits exceeds tracked precision "
                f"{min(self.prec, other.prec)}"
            )
        if digits < 0:
            raise ValueError("digits must be >= 0")
        return (self.residue - other.residue) % self.p**digits == 0

    def __eq__(self, other):
        if isinstance(other, PadicInt):
            return (
                self.p == other.p
                and self.prec == other.prec
                and self.residue == other.residue
            )
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.prec, self.residue))

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        """JSON form: prime and precision always travel with the value."""
        return {"p": self.p, "prec": self.prec, "val": str(self.residue)}

    @classmethod
    def from_dict(cls, d: dict) -> "PadicInt":
        return cls(int(d["val"]), int(d["p"]), int(d["prec"]))

    def __repr__(self):
        return f"PadicInt({self.residue}, p={self.p}, prec={self.prec})"

    def __str__(self):
        return f"{self.residue} + O({self.p}^{self.prec})"
