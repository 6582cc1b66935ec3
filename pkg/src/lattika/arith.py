"""Exact modular integer arithmetic in the symmetric representation.

Residues mod q are carried as the unique integer in [-q/2, q/2).  All
arithmetic is done on Python ints, so wide intermediates (up to q*p for
the relinearization path) never overflow.
"""

from dataclasses import dataclass

from .errors import NotInvertible

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class Modulus:
    """An odd modulus q >= 3, validated once at construction."""

    __slots__ = ("q", "half")

    def __init__(self, q):
        if not isinstance(q, int):
            raise TypeError("modulus must be an int, got %r" % type(q).__name__)
        if q < 3:
            raise ValueError("modulus must be >= 3, got %d" % q)
        if q % 2 == 0:
            raise ValueError("modulus must be odd, got %d" % q)
        self.q = q
        self.half = q // 2

    def reduce(self, x):
        """Reduce an int to the symmetric range [-q/2, q/2)."""
        return (x + self.half) % self.q - self.half

    def __eq__(self, other):
        return isinstance(other, Modulus) and self.q == other.q

    def __hash__(self):
        return hash(("Modulus", self.q))

    def __repr__(self):
        return "Modulus(%d)" % self.q


@dataclass(frozen=True)
class ZqInt:
    """A residue mod q in symmetric representation."""

    value: int
    q: int

    def __post_init__(self):
        if not (-(self.q // 2) <= self.value < self.q - self.q // 2):
            raise ValueError("value %d outside symmetric range mod %d" % (self.value, self.q))


def reduce_symmetric(x, q):
    """Reduce x into [-q/2, q/2) mod q."""
    m = q if isinstance(q, Modulus) else Modulus(q)
    return ZqInt(m.reduce(x), m.q)


def mod_inverse(a):
    """Multiplicative inverse of a ZqInt; raises NotInvertible for non-units."""
    try:
        inv = pow(a.value, -1, a.q)
    except ValueError:
        raise NotInvertible("gcd(%d, %d) != 1" % (a.value, a.q)) from None
    return ZqInt((inv + a.q // 2) % a.q - a.q // 2, a.q)


def mod_pow(base, e):
    """base^e mod q in symmetric range; e must be non-negative."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    m = Modulus(base.q)
    return ZqInt(m.reduce(pow(base.value, e, base.q)), base.q)


def round_div(num, den):
    """Nearest integer to num/den, ties rounded away from zero."""
    if den < 0:
        num, den = -num, -den
    quot, rem = divmod(num, den)
    if 2 * rem > den or (2 * rem == den and quot >= 0):
        quot += 1
    return quot


def multiply_round(x, num, den):
    """Apply v -> round(num*v/den) to every entry of x."""
    if den == 0:
        raise ZeroDivisionError("den must be nonzero")
    return [round_div(num * v, den) for v in x]


def is_prime(n):
    """Deterministic Miller-Rabin, exact for every input below 3.3 * 10^24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
