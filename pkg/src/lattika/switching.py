"""Ciphertext maintenance primitives: bit decomposition, powers of two,
modulus switching, and key switching over Z_q vectors.

Bit decomposition works on the canonical [0, q) representatives, since the
binary expansion of a negative representative is not well defined; the
moduli here are plain ints >= 2 (q = 4 is a legitimate input for the
decomposition pair, unlike everywhere else in the library where moduli
are odd).  Scale ties are broken toward minus infinity between the two
parity-respecting candidates; the switching lemma's bound is strict, so
any fixed rule preserves it.
"""

from .arith import Modulus
from .errors import BadModuli, DimMismatch
from .sampling import sample_gauss_vector, sample_uniform_vector


def decomp_layers(q):
    """Number of bit layers needed to cover every residue of Z_q."""
    if q < 2:
        raise ValueError("q must be >= 2")
    return max(1, (q - 1).bit_length())


def bit_decomp(x, q):
    """Layer-major bits of the canonical residues of x: (w_0, ..., w_{l-1}).

    Satisfies x = sum_i 2^i w_i (mod q) componentwise.
    """
    l = decomp_layers(q)
    canon = [v % q for v in x]
    out = []
    for i in range(l):
        out.extend((v >> i) & 1 for v in canon)
    return out


def powers_of_two(y, q):
    """Concatenation of [y * 2^i mod q] for i = 0..l-1, canonical residues."""
    l = decomp_layers(q)
    out = []
    for i in range(l):
        out.extend((v << i) % q for v in y)
    return out


def _round_half_down(num, den):
    """Nearest integer to num/den with ties toward minus infinity (den > 0)."""
    return -((den - 2 * num) // (2 * den))


def scale(x, q, p, r=2):
    """Componentwise nearest integer to (p/q) x among those congruent mod r."""
    if not (q > p >= 2):
        raise BadModuli("need q > p >= 2, got q=%d p=%d" % (q, p))
    if q % r != 1 or p % r != 1:
        raise BadModuli("q and p must both be 1 mod r=%d" % r)
    out = []
    for v in x:
        rem = v % r
        k = _round_half_down(p * v - rem * q, r * q)
        out.append(r * k + rem)
    return out


class SwitchKey:
    """Auxiliary matrix transporting ciphertexts from secret s1 to secret s2."""

    __slots__ = ("rows", "q", "n1", "n2")

    def __init__(self, rows, q, n1, n2):
        self.rows = tuple(tuple(r) for r in rows)
        self.q = q
        self.n1 = n1
        self.n2 = n2
        expect = (n1 + 1) * decomp_layers(q)
        if len(self.rows) != expect or any(len(r) != n2 + 1 for r in self.rows):
            raise DimMismatch(
                "switch key must be %d x %d, got %d x %s"
                % (expect, n2 + 1, len(self.rows), len(self.rows[0]) if self.rows else 0)
            )


def switch_keygen(s1, s2, q, gauss, rng, noise=None):
    """Publish P = [b | -A] with b = A t2 + e + powers_of_two(s1) mod q.

    s1 and s2 must both start with 1.  `noise` overrides the Gaussian noise
    vector e, a hook the tests use to check the exact identity.
    """
    m = q if isinstance(q, Modulus) else Modulus(q)
    if s1[0] != 1 or s2[0] != 1:
        raise ValueError("secret keys must have leading coefficient 1")
    n1, n2 = len(s1) - 1, len(s2) - 1
    t2 = list(s2[1:])
    big_n = (n1 + 1) * decomp_layers(m.q)
    a = [sample_uniform_vector(m, n2, rng) for _ in range(big_n)]
    e = list(noise) if noise is not None else sample_gauss_vector(gauss, big_n, rng)
    if len(e) != big_n:
        raise DimMismatch("noise length %d, expected %d" % (len(e), big_n))
    p2 = powers_of_two(list(s1), m.q)
    rows = []
    for i in range(big_n):
        at2 = sum(x * y for x, y in zip(a[i], t2))
        b_i = m.reduce(at2 + e[i] + p2[i])
        rows.append([b_i] + [m.reduce(-x) for x in a[i]])
    return SwitchKey(rows, m.q, n1, n2)


def switch_key(key, c1):
    """Transform ciphertext c1 to the target secret: [bit_decomp(c1)^T P]_q."""
    if len(c1) != key.n1 + 1:
        raise DimMismatch("ciphertext length %d, expected %d" % (len(c1), key.n1 + 1))
    m = Modulus(key.q)
    d = bit_decomp(list(c1), key.q)
    out = []
    for j in range(key.n2 + 1):
        acc = sum(d[i] * key.rows[i][j] for i in range(len(d)))
        out.append(m.reduce(acc))
    return out
