"""Cyclotomic polynomials over Z and their factorization over prime fields.

The n-th cyclotomic polynomial is computed exactly from the product rule
x^n - 1 = prod_{d | n} Phi_d(x) by integer long division, so no floating
point ever enters.  Factorization over F_q is supported for the two cases
the rest of the library needs: a fully split Phi_n (the modulus has order 1
mod n, giving linear factors from the primitive roots of unity) and an
irreducible Phi_n (order phi(n)).
"""

import math
from functools import lru_cache

from .arith import Modulus, ZqInt, is_prime
from .errors import NotPrime, Unsupported


class IntPolynomial:
    """Integer polynomial; coefficients ascending by degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def divmod_exact(self, divisor):
        """Long division by a monic divisor; returns (quotient, remainder)."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        quot = [0] * max(len(rem) - d, 0)
        for k in range(len(rem) - d - 1, -1, -1):
            coef = rem[k + d]
            if coef == 0:
                continue
            quot[k] = coef
            for j, b in enumerate(divisor.coeffs):
                rem[k + j] -= coef * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def evaluate_mod(self, x, q):
        """Horner evaluation of the polynomial at x modulo q."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % q
        return acc

    def reduce_mod(self, q):
        """Coefficients reduced into the symmetric range mod q."""
        m = q if isinstance(q, Modulus) else Modulus(q)
        return IntPolynomial([m.reduce(c) for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "IntPolynomial(%r)" % (self.coeffs,)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                sign = "-" if c < 0 else ""
                pow_part = "x" if i == 1 else "x^%d" % i
                terms.append(sign + mag + pow_part)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def x_pow_minus_one(n):
    """The polynomial x^n - 1."""
    coeffs = [0] * (n + 1)
    coeffs[0] = -1
    coeffs[n] = 1
    return IntPolynomial(coeffs)


def euler_phi(n):
    """Euler's totient; phi(1) = 1 by convention."""
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """The n-th cyclotomic polynomial, monic of degree phi(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return IntPolynomial((-1, 1))
    quotient = x_pow_minus_one(n)
    for d in _divisors(n):
        if d == n:
            continue
        quotient, rem = quotient.divmod_exact(cyclotomic_poly(d))
        assert rem.degree == -1
    return quotient


def multiplicative_order(a, n):
    """Order of a in (Z/nZ)*; requires gcd(a, n) = 1."""
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError("element not a unit mod %d" % n)
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
    return k


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def primitive_roots_mod(n, q):
    """All elements of Z_q with multiplicative order exactly n.

    Empty when n does not divide q - 1.  Works for large prime q since the
    set is built from one order-n element rather than by scanning Z_q.
    """
    m = q if isinstance(q, Modulus) else Modulus(q)
    if not is_prime(m.q):
        raise NotPrime("%d is not prime" % m.q)
    if math.gcd(m.q, n) != 1:
        raise ValueError("gcd(q, n) must be 1")
    if (m.q - 1) % n != 0:
        return []
    if n == 1:
        return [ZqInt(1, m.q)]
    cof = (m.q - 1) // n
    primes = _prime_factors(n)
    root = None
    for base in range(2, m.q):
        h = pow(base, cof, m.q)
        if h != 1 and all(pow(h, n // p, m.q) != 1 for p in primes):
            root = h
            break
    assert root is not None, "Z_q* is cyclic, an order-n element must exist"
    values = sorted(pow(root, k, m.q) for k in range(1, n + 1) if math.gcd(k, n) == 1)
    return [ZqInt(m.reduce(v), m.q) for v in values]


def factor_cyclotomic_mod(n, q):
    """Monic factorization of Phi_n over F_q for the split and irreducible cases.

    Each irreducible factor has degree equal to the order of q mod n, so
    order 1 yields linear factors (x - r) over the primitive n-th roots of
    unity, and order phi(n) returns Phi_n itself.  Intermediate splitting
    orders raise Unsupported.
    """
    m = q if isinstance(q, Modulus) else Modulus(q)
    if not is_prime(m.q):
        raise NotPrime("%d is not prime" % m.q)
    if math.gcd(m.q, n) != 1:
        raise ValueError("gcd(q, n) must be 1")
    order = multiplicative_order(m.q, n)
    if order == 1:
        roots = primitive_roots_mod(n, m)
        return [IntPolynomial((m.reduce(-r.value), 1)) for r in roots]
    if order == euler_phi(n):
        return [cyclotomic_poly(n).reduce_mod(m)]
    raise Unsupported(
        "Phi_%d splits into degree-%d factors mod %d; only the linear and "
        "irreducible cases are implemented" % (n, order, m.q)
    )
