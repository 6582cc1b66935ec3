"""All randomness used by the schemes.

A deterministic byte stream (SHA-256 in counter mode, keyed by a 32-byte
seed) backs every sampler, so a fixed seed reproduces every key and
ciphertext bit for bit.  The integer Gaussian uses a precomputed
inverse-CDF table over the truncated support, which costs exactly one
uniform draw per sample and keeps seeded streams aligned.
"""

import hashlib
import math
import secrets
from bisect import bisect_right
from functools import lru_cache

from .arith import Modulus, ZqInt
from .ring import RingElement


class Seed:
    """A 32-byte seed value."""

    __slots__ = ("value",)

    def __init__(self, value):
        if not isinstance(value, (bytes, bytearray)) or len(value) != 32:
            raise ValueError("seed must be exactly 32 bytes")
        self.value = bytes(value)

    @classmethod
    def from_hex(cls, text):
        raw = bytes.fromhex(text)
        if len(raw) != 32:
            raise ValueError("seed hex must encode 32 bytes (64 hex digits)")
        return cls(raw)

    @classmethod
    def random(cls):
        return cls(secrets.token_bytes(32))

    def hex(self):
        return self.value.hex()

    def __eq__(self, other):
        return isinstance(other, Seed) and self.value == other.value

    def __repr__(self):
        return "Seed(%s...)" % self.value[:4].hex()


class Rng:
    """Deterministic stream generator; single-owner, not shareable mid-stream."""

    def __init__(self, seed=None):
        if seed is None:
            seed = Seed.random()
        self.seed = seed
        self._counter = 0
        self._buf = b""

    def child(self, label):
        """Derive an independent generator for a parallel workload."""
        if isinstance(label, str):
            label = label.encode()
        return Rng(Seed(hashlib.sha256(self.seed.value + b"/" + label).digest()))

    def randbytes(self, k):
        while len(self._buf) < k:
            block = hashlib.sha256(
                self.seed.value + self._counter.to_bytes(8, "little")
            ).digest()
            self._counter += 1
            self._buf += block
        out, self._buf = self._buf[:k], self._buf[k:]
        return out

    def randbits(self, k):
        nbytes = (k + 7) // 8
        v = int.from_bytes(self.randbytes(nbytes), "little")
        return v >> (8 * nbytes - k)

    def randrange(self, n):
        """Uniform integer in [0, n) by rejection, avoiding modulo bias."""
        k = (n - 1).bit_length() if n > 1 else 1
        while True:
            v = self.randbits(k)
            if v < n:
                return v

    def randfloat(self):
        return self.randbits(53) / (1 << 53)


class GaussianParams:
    """Width sigma of the integer Gaussian and the tail truncation multiplier."""

    __slots__ = ("sigma", "tail_cut")

    def __init__(self, sigma, tail_cut=10.0):
        if not sigma > 0:
            raise ValueError("sigma must be positive")
        if tail_cut < 6:
            raise ValueError("tail_cut must be at least 6")
        self.sigma = float(sigma)
        self.tail_cut = float(tail_cut)

    @property
    def support_bound(self):
        """Largest magnitude the sampler can emit."""
        return math.ceil(self.tail_cut * self.sigma)

    def __eq__(self, other):
        return (
            isinstance(other, GaussianParams)
            and self.sigma == other.sigma
            and self.tail_cut == other.tail_cut
        )

    def __hash__(self):
        return hash((self.sigma, self.tail_cut))

    def __repr__(self):
        return "GaussianParams(sigma=%g, tail_cut=%g)" % (self.sigma, self.tail_cut)


@lru_cache(maxsize=None)
def _gauss_cdf_table(sigma, tail_cut):
    bound = math.ceil(tail_cut * sigma)
    support = range(-bound, bound + 1)
    weights = [math.exp(-(z * z) / (2.0 * sigma * sigma)) for z in support]
    total = sum(weights)
    cdf = []
    acc = 0.0
    for w in weights:
        acc += w / total
        cdf.append(acc)
    cdf[-1] = 1.0
    return list(support), cdf


def sample_dgauss_int(params, rng):
    """One draw from the discrete Gaussian on Z with width params.sigma."""
    support, cdf = _gauss_cdf_table(params.sigma, params.tail_cut)
    return support[bisect_right(cdf, rng.randfloat())]


def sample_uniform_zq(q, rng):
    """Uniform residue mod q in symmetric representation."""
    m = q if isinstance(q, Modulus) else Modulus(q)
    return ZqInt(m.reduce(rng.randrange(m.q)), m.q)


def sample_uniform_ring(params, rng):
    """Uniform element of R_q, coefficients independent."""
    q, half = params.q, params.q // 2
    return RingElement(params, [rng.randrange(q) - half for _ in range(params.n)])


def sample_binary_ring(params, rng):
    """Element of R_2 embedded in R_q: coefficients i.i.d. uniform on {0, 1}."""
    return RingElement(params, [rng.randbits(1) for _ in range(params.n)])


def sample_gauss_ring(params, g, rng):
    """Ring element with i.i.d. discrete Gaussian coefficients."""
    support, cdf = _gauss_cdf_table(g.sigma, g.tail_cut)
    coeffs = [support[bisect_right(cdf, rng.randfloat())] for _ in range(params.n)]
    return RingElement(params, coeffs)


def sample_uniform_vector(q, length, rng):
    m = q if isinstance(q, Modulus) else Modulus(q)
    half = m.q // 2
    return [rng.randrange(m.q) - half for _ in range(length)]


def sample_binary_vector(length, rng):
    return [rng.randbits(1) for _ in range(length)]


def sample_gauss_vector(g, length, rng):
    support, cdf = _gauss_cdf_table(g.sigma, g.tail_cut)
    return [support[bisect_right(cdf, rng.randfloat())] for _ in range(length)]
