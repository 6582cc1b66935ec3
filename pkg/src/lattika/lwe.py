"""The Regev public-key scheme over Z_q vectors.

Keys and ciphertexts are exact Python ints in symmetric representation.
The two matrix-heavy steps (public-key generation and encryption) run on
int64 numpy with a 15-bit limb split when a conservative overflow bound
holds, and fall back to exact Python loops otherwise, so results are
identical either way.
"""

import numpy as np

from .arith import Modulus, round_div
from .errors import DimMismatch
from .sampling import GaussianParams, sample_gauss_vector, sample_uniform_vector

_SPLIT = 15
_SPLIT_MASK = (1 << _SPLIT) - 1


class LweParams:
    """Dimension n, odd modulus q, sample count N, and noise width."""

    __slots__ = ("n", "q", "modulus", "N", "gauss")

    def __init__(self, n, q, big_n, gauss=None):
        if n < 1 or big_n < 1:
            raise ValueError("n and N must be >= 1")
        self.modulus = q if isinstance(q, Modulus) else Modulus(q)
        self.q = self.modulus.q
        self.n = n
        self.N = big_n
        self.gauss = gauss if gauss is not None else GaussianParams(1.0)

    def __eq__(self, other):
        return (
            isinstance(other, LweParams)
            and (self.n, self.q, self.N, self.gauss) == (other.n, other.q, other.N, other.gauss)
        )

    def __repr__(self):
        return "LweParams(n=%d, q=%d, N=%d)" % (self.n, self.q, self.N)


class LweSecretKey:
    """s = (1, t) with t uniform over Z_q^n."""

    __slots__ = ("s", "params")

    def __init__(self, s, params):
        if s[0] != 1:
            raise ValueError("secret key must start with 1")
        if len(s) != params.n + 1:
            raise DimMismatch("secret length %d, expected %d" % (len(s), params.n + 1))
        self.s = tuple(s)
        self.params = params


class LwePublicKey:
    """P = [b | -A], an N x (n+1) matrix of LWE samples."""

    __slots__ = ("rows", "params", "_np_cache")

    def __init__(self, rows, params):
        if len(rows) != params.N or any(len(r) != params.n + 1 for r in rows):
            raise DimMismatch("public key must be %d x %d" % (params.N, params.n + 1))
        self.rows = tuple(tuple(r) for r in rows)
        self.params = params
        self._np_cache = None

    def as_array(self):
        if self._np_cache is None:
            self._np_cache = np.array(self.rows, dtype=np.int64)
        return self._np_cache


class LweCiphertext:
    __slots__ = ("c", "params")

    def __init__(self, c, params):
        if len(c) != params.n + 1:
            raise DimMismatch("ciphertext length %d, expected %d" % (len(c), params.n + 1))
        self.c = tuple(c)
        self.params = params

    def __eq__(self, other):
        return isinstance(other, LweCiphertext) and self.c == other.c


def _np_matvec_safe(params):
    h = params.q // 2 + 1
    return (
        params.q < 2**62
        and params.n * h * (1 << _SPLIT) < 2**61
        and params.n * ((h * h) >> _SPLIT) < 2**61
    )


def _np_rowsum_safe(params):
    return params.q < 2**62 and params.N * (params.q // 2 + 1) < 2**61


def _matvec_mod(rows_np, vec, q):
    """Exact A @ v mod q via 15-bit limb splitting of A."""
    v = np.array(vec, dtype=np.int64)
    lo = rows_np & _SPLIT_MASK
    hi = (rows_np - lo) >> _SPLIT
    s_lo = lo @ v
    s_hi = hi @ v
    return (((s_hi % q) << _SPLIT) + s_lo) % q


def lwe_keygen(params, rng, noise=None):
    """Sample s = (1, t) and publish P = [b | -A] with b = A t + e.

    `noise` overrides the Gaussian error vector e (test hook).
    """
    m = params.modulus
    t = sample_uniform_vector(m, params.n, rng)
    a_rows = [sample_uniform_vector(m, params.n, rng) for _ in range(params.N)]
    e = list(noise) if noise is not None else sample_gauss_vector(params.gauss, params.N, rng)
    if len(e) != params.N:
        raise DimMismatch("noise length %d, expected %d" % (len(e), params.N))
    if _np_matvec_safe(params):
        at = _matvec_mod(np.array(a_rows, dtype=np.int64), t, params.q)
        b = [m.reduce(int(v) + ei) for v, ei in zip(at, e)]
    else:
        b = [m.reduce(sum(x * y for x, y in zip(row, t)) + ei) for row, ei in zip(a_rows, e)]
    rows = [[bi] + [m.reduce(-x) for x in row] for bi, row in zip(b, a_rows)]
    sk = LweSecretKey([1] + list(t), params)
    pk = LwePublicKey(rows, params)
    return sk, pk


def lwe_encrypt(pk, message, rng, randomizer=None):
    """c = [P^T r + floor(q/2) (m, 0, ..., 0)]_q for a fresh binary r."""
    if message not in (0, 1):
        raise ValueError("message must be a single bit")
    params = pk.params
    m = params.modulus
    r = list(randomizer) if randomizer is not None else [rng.randbits(1) for _ in range(params.N)]
    if len(r) != params.N:
        raise DimMismatch("randomizer length %d, expected %d" % (len(r), params.N))
    if _np_rowsum_safe(params) and set(r) <= {0, 1}:
        mask = np.array(r, dtype=bool)
        acc = pk.as_array()[mask].sum(axis=0, dtype=np.int64) if mask.any() else np.zeros(
            params.n + 1, dtype=np.int64
        )
        c = [int(v) for v in acc]
    else:
        c = [0] * (params.n + 1)
        for ri, row in zip(r, pk.rows):
            if ri:
                c = [x + ri * y for x, y in zip(c, row)]
    c[0] += (params.q // 2) * message
    return LweCiphertext([m.reduce(x) for x in c], params)


def lwe_decrypt(sk, ct):
    """m = [round((2/q) [c . s]_q)]_2."""
    params = sk.params
    v = params.modulus.reduce(sum(x * y for x, y in zip(ct.c, sk.s)))
    return round_div(2 * v, params.q) % 2


def lwe_sample_stream(s, params, rng, noise=None):
    """Generate LWE samples (a, b = [s . a + eps]_q) under the secret s.

    Infinite generator; when `noise` is given (test hook) it yields exactly
    one pair per supplied noise value.
    """
    m = params.modulus
    n = len(s)

    def one(eps):
        a = sample_uniform_vector(m, n, rng)
        b = m.reduce(sum(x * y for x, y in zip(s, a)) + eps)
        return a, b

    if noise is not None:
        for eps in noise:
            yield one(eps)
    else:
        while True:
            yield one(sample_gauss_vector(params.gauss, 1, rng)[0])
