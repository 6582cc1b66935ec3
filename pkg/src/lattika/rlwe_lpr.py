"""The LPR public-key scheme over R_q = Z_q[x]/(x^n + 1).

One message bit per coefficient, scaled by floor(q/2).  The secret key and
all encryption randomness are drawn from the Gaussian noise distribution,
which keeps the scheme aligned with its own description; the binary-secret
optimization belongs to the BFV module.
"""

from .arith import round_div
from .errors import NotBinary
from .ring import RingElement, ring_add, ring_mul, scalar_mul
from .sampling import sample_gauss_ring, sample_uniform_ring


class LprPublicKey:
    """Pair (b, a) with b = -[a s + e]_q."""

    __slots__ = ("b", "a")

    def __init__(self, b, a):
        self.b = b
        self.a = a

    @property
    def params(self):
        return self.b.params


class LprKeys:
    __slots__ = ("sk", "pk")

    def __init__(self, sk, pk):
        self.sk = sk
        self.pk = pk


def lpr_keygen(params, gauss, rng, noise=None, secret=None):
    """Sample s and e from the noise distribution, publish (-(a s + e), a).

    `noise` and `secret` are test hooks overriding the Gaussian draws.
    """
    s = secret if secret is not None else sample_gauss_ring(params, gauss, rng)
    a = sample_uniform_ring(params, rng)
    e = noise if noise is not None else sample_gauss_ring(params, gauss, rng)
    b = scalar_mul(-1, ring_add(ring_mul(a, s), e))
    return LprKeys(s, LprPublicKey(b, a))


def lpr_encrypt(pk, message, gauss, rng, randomizer=None, noise1=None, noise2=None):
    """Encrypt a binary polynomial: (b r + e1 + floor(q/2) m, a r + e2)."""
    params = pk.params
    if not set(message.coeffs) <= {0, 1}:
        raise NotBinary("message coefficients must be 0 or 1")
    r = randomizer if randomizer is not None else sample_gauss_ring(params, gauss, rng)
    e1 = noise1 if noise1 is not None else sample_gauss_ring(params, gauss, rng)
    e2 = noise2 if noise2 is not None else sample_gauss_ring(params, gauss, rng)
    scaled = scalar_mul(params.q // 2, message)
    u = ring_add(ring_add(ring_mul(pk.b, r), e1), scaled)
    v = ring_add(ring_mul(pk.a, r), e2)
    return u, v


def lpr_decrypt(sk, ciphertext):
    """Recover the bits: [round((2/q) [u + v s]_q)]_2 per coefficient."""
    u, v = ciphertext
    params = u.params
    w = ring_add(u, ring_mul(v, sk))
    bits = [round_div(2 * c, params.q) % 2 for c in w.coeffs]
    return RingElement(params, bits)
