"""Arithmetic in R_q = Z_q[x]/(x^n + 1) for power-of-two n.

Elements are coefficient vectors in the symmetric range.  Two multipliers
are provided: a direct negacyclic convolution (the permanent testing
oracle and default path) and a negacyclic NTT usable whenever q is prime
with q = 1 mod 2n.  Both produce identical output by contract.

The direct convolution is exact for arbitrarily wide coefficients: inputs
are split into 16-bit limbs so the heavy lifting runs as int64 numpy
convolutions, and the limb recombination happens on Python ints.
"""

from functools import lru_cache

import numpy as np

from .arith import Modulus, is_prime
from .cyclotomic import primitive_roots_mod
from .errors import NttUnavailable, ParamMismatch

_LIMB_BITS = 16
_LIMB_MASK = (1 << _LIMB_BITS) - 1


class RingParams:
    """Degree n (a power of two, >= 2) and odd modulus q."""

    __slots__ = ("n", "q", "modulus", "ntt_enabled")

    def __init__(self, n, q):
        if not isinstance(n, int) or n < 2 or n & (n - 1):
            raise ValueError("n must be a power of two >= 2, got %r" % (n,))
        self.modulus = q if isinstance(q, Modulus) else Modulus(q)
        self.q = self.modulus.q
        self.n = n
        self.ntt_enabled = self.q % (2 * n) == 1 and is_prime(self.q)

    def __eq__(self, other):
        return isinstance(other, RingParams) and self.n == other.n and self.q == other.q

    def __hash__(self):
        return hash((self.n, self.q))

    def __repr__(self):
        return "RingParams(n=%d, q=%d)" % (self.n, self.q)


class RingElement:
    """Immutable element of R_q; coeffs[i] is the coefficient of x^i."""

    __slots__ = ("params", "coeffs")

    def __init__(self, params, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != params.n:
            raise ValueError("expected %d coefficients, got %d" % (params.n, len(coeffs)))
        red = params.modulus.reduce
        self.params = params
        self.coeffs = tuple(red(c) for c in coeffs)

    @classmethod
    def zero(cls, params):
        return cls(params, [0] * params.n)

    @classmethod
    def one(cls, params):
        return cls(params, [1] + [0] * (params.n - 1))

    @classmethod
    def monomial(cls, params, degree, coeff=1):
        c = [0] * params.n
        c[degree] = coeff
        return cls(params, c)

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.params == other.params
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.params, self.coeffs))

    def __repr__(self):
        return "RingElement(n=%d, q=%d, %r)" % (self.params.n, self.params.q, self.coeffs)


def _check_same_params(a, b):
    if a.params != b.params:
        raise ParamMismatch("%r vs %r" % (a.params, b.params))


def ring_add(a, b):
    _check_same_params(a, b)
    red = a.params.modulus.reduce
    return RingElement(a.params, [red(x + y) for x, y in zip(a.coeffs, b.coeffs)])


def ring_sub(a, b):
    _check_same_params(a, b)
    red = a.params.modulus.reduce
    return RingElement(a.params, [red(x - y) for x, y in zip(a.coeffs, b.coeffs)])


def scalar_mul(k, a):
    red = a.params.modulus.reduce
    return RingElement(a.params, [red(k * x) for x in a.coeffs])


def inf_norm(a):
    """Max absolute coefficient over the symmetric representatives."""
    return max(abs(c) for c in a.coeffs)


def expansion_factor(params):
    """Worst-case infinity-norm growth factor of one multiplication; n for x^n + 1."""
    return params.n


def _split_limbs(values):
    """Split signed ints into sign-carrying 16-bit limb arrays (int64)."""
    arr = np.array([abs(v) for v in values], dtype=object)
    signs = np.array([1 if v >= 0 else -1 for v in values], dtype=np.int64)
    limbs = []
    while True:
        low = np.array([int(x) & _LIMB_MASK for x in arr], dtype=np.int64)
        limbs.append(low * signs)
        arr = arr >> _LIMB_BITS
        if not arr.any():
            break
    return limbs


def convolve_int(a, b):
    """Exact linear convolution of two signed integer sequences.

    Limb products stay below 2^32 and each convolution sums at most
    min(len(a), len(b)) of them, safe in int64 for lengths up to 2^30.
    """
    if not a or not b:
        return []
    la, lb = _split_limbs(a), _split_limbs(b)
    out_len = len(a) + len(b) - 1
    groups = {}
    for i, x in enumerate(la):
        for j, y in enumerate(lb):
            c = np.convolve(x, y)
            s = i + j
            if s in groups:
                groups[s] += c
            else:
                groups[s] = c
    total = np.zeros(out_len, dtype=object)
    for s, arr in groups.items():
        total += arr.astype(object) << (_LIMB_BITS * s)
    return total.tolist()


def negacyclic_product(a, b):
    """Exact coefficients of a*b in Z[x]/(x^n + 1), no modular reduction."""
    n = len(a)
    if len(b) != n:
        raise ParamMismatch("length %d vs %d" % (n, len(b)))
    conv = convolve_int(a, b)
    conv += [0] * (2 * n - 1 - len(conv))
    return [conv[k] - conv[k + n] if k + n < 2 * n - 1 else conv[k] for k in range(n)]


def ring_mul_schoolbook(a, b):
    """Direct negacyclic convolution, reduced coefficient-wise; the oracle path."""
    _check_same_params(a, b)
    red = a.params.modulus.reduce
    return RingElement(a.params, [red(c) for c in negacyclic_product(a.coeffs, b.coeffs)])


# ---------------------------------------------------------------------------
# negacyclic NTT

@lru_cache(maxsize=None)
def _ntt_tables(n, q):
    """Twiddle tables for the size-n negacyclic NTT mod q.

    psi is the smallest positive primitive 2n-th root of unity mod q, fixed
    for reproducibility; omega = psi^2 drives the cyclic transform.
    """
    roots = primitive_roots_mod(2 * n, Modulus(q))
    psi = min(r.value % q for r in roots)
    psi_inv = pow(psi, -1, q)
    omega = psi * psi % q
    omega_inv = pow(omega, -1, q)
    n_inv = pow(n, -1, q)
    psi_pows = [pow(psi, i, q) for i in range(n)]
    psi_inv_pows = [pow(psi_inv, i, q) * n_inv % q for i in range(n)]
    stage_w = []
    stage_w_inv = []
    length = 2
    while length <= n:
        stage_w.append(pow(omega, n // length, q))
        stage_w_inv.append(pow(omega_inv, n // length, q))
        length <<= 1
    # bit-reversal permutation
    perm = [0] * n
    bits = n.bit_length() - 1
    for i in range(n):
        perm[i] = int(format(i, "0%db" % bits)[::-1], 2) if bits else 0
    return psi_pows, psi_inv_pows, stage_w, stage_w_inv, perm


def _ntt_core(vals, stage_roots, perm, q):
    a = [vals[p] for p in perm]
    n = len(a)
    length = 2
    for w_len in stage_roots:
        half = length >> 1
        for start in range(0, n, length):
            w = 1
            for k in range(start, start + half):
                u = a[k]
                v = a[k + half] * w % q
                a[k] = (u + v) % q
                a[k + half] = (u - v) % q
                w = w * w_len % q
        length <<= 1
    return a


def ring_mul_ntt(a, b):
    """NTT-based negacyclic multiply; requires prime q with q = 1 mod 2n."""
    _check_same_params(a, b)
    params = a.params
    if not params.ntt_enabled:
        raise NttUnavailable("q=%d is not a prime with q = 1 mod %d" % (params.q, 2 * params.n))
    n, q = params.n, params.q
    psi_pows, psi_inv_pows, stage_w, stage_w_inv, perm = _ntt_tables(n, q)
    fa = _ntt_core([c * psi_pows[i] % q for i, c in enumerate(a.coeffs)], stage_w, perm, q)
    fb = _ntt_core([c * psi_pows[i] % q for i, c in enumerate(b.coeffs)], stage_w, perm, q)
    prod = [x * y % q for x, y in zip(fa, fb)]
    out = _ntt_core(prod, stage_w_inv, perm, q)
    red = params.modulus.reduce
    return RingElement(params, [red(c * psi_inv_pows[i]) for i, c in enumerate(out)])


def ring_mul(a, b):
    """Default multiplier used by the schemes.

    The vectorized direct convolution outperforms the pure-Python NTT at
    every parameter size in scope and works for all moduli, so it is the
    default; ring_mul_ntt stays available and is held equal to the
    schoolbook path by the test suite.
    """
    return ring_mul_schoolbook(a, b)
