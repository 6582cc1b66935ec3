import random

import pytest

from lattika.arith import Modulus
from lattika.errors import NttUnavailable, ParamMismatch
from lattika.ring import (
    RingElement,
    RingParams,
    convolve_int,
    expansion_factor,
    inf_norm,
    negacyclic_product,
    ring_add,
    ring_mul,
    ring_mul_ntt,
    ring_mul_schoolbook,
    ring_sub,
    scalar_mul,
)


def naive_negacyclic_mul(a, b):
    """Quadratic reference multiplier, the oracle for the oracle."""
    params = a.params
    n = params.n
    full = [0] * (2 * n)
    for i in range(n):
        for j in range(n):
            full[i + j] += a.coeffs[i] * b.coeffs[j]
    return RingElement(params, [full[k] - full[k + n] for k in range(n)])


def random_element(params, rng):
    half = params.q // 2
    return RingElement(params, [rng.randrange(-half, half + 1) for _ in range(params.n)])


def test_params_validation():
    RingParams(2, 17)
    RingParams(1024, 6620830889)
    with pytest.raises(ValueError):
        RingParams(3, 17)
    with pytest.raises(ValueError):
        RingParams(1000, 17)
    with pytest.raises(ValueError):
        RingParams(8, 16)  # even modulus


def test_ntt_flag():
    assert RingParams(8, 17).ntt_enabled  # 17 = 1 mod 16
    assert RingParams(1024, 655360001).ntt_enabled  # 1 mod 2048, prime
    assert not RingParams(1024, 6620830889).ntt_enabled  # prime but not 1 mod 2048
    assert not RingParams(2, 15).ntt_enabled  # 15 = 1 mod 4 but composite? 15 % 4 == 3 anyway


def test_add_identity_and_inverse():
    params = RingParams(4, 17)
    rng = random.Random(0)
    a = random_element(params, rng)
    zero = RingElement.zero(params)
    assert ring_add(a, zero) == a
    assert ring_add(a, scalar_mul(-1, a)) == zero
    assert ring_sub(a, a) == zero


def test_add_example_symmetric_wrap():
    params = RingParams(2, 11)
    a = RingElement(params, [1, 2])
    b = RingElement(params, [3, 4])
    assert ring_add(a, b).coeffs == (4, -5)  # 6 = -5 mod 11


def test_negacyclic_shift_example():
    # (1 + 2x + 3x^2 + 4x^3) * x = -4 + x + 2x^2 + 3x^3 in Z[x]/(x^4+1)
    params = RingParams(4, 17)
    a = RingElement(params, [1, 2, 3, 4])
    x = RingElement.monomial(params, 1)
    assert ring_mul_schoolbook(a, x).coeffs == (-4, 1, 2, 3)


def test_mul_by_x_n_times_negates():
    params = RingParams(8, 17)
    rng = random.Random(1)
    a = random_element(params, rng)
    x = RingElement.monomial(params, 1)
    out = a
    for _ in range(params.n):
        out = ring_mul_schoolbook(out, x)
    assert out == scalar_mul(-1, a)


def test_mul_identity_and_squares():
    params = RingParams(2, 17)
    x = RingElement.monomial(params, 1)
    assert ring_mul_schoolbook(x, x) == scalar_mul(-1, RingElement.one(params))
    params8 = RingParams(8, 17)
    h = RingElement.monomial(params8, 4)
    assert ring_mul_schoolbook(h, h) == scalar_mul(-1, RingElement.one(params8))
    rng = random.Random(2)
    a = random_element(params8, rng)
    assert ring_mul_schoolbook(a, RingElement.one(params8)) == a
    assert ring_mul_schoolbook(a, RingElement.zero(params8)) == RingElement.zero(params8)


def test_ring_axioms_random():
    params = RingParams(4, 17)
    rng = random.Random(3)
    for _ in range(100):
        a, b, c = (random_element(params, rng) for _ in range(3))
        assert ring_mul_schoolbook(a, b) == ring_mul_schoolbook(b, a)
        assert ring_mul_schoolbook(ring_mul_schoolbook(a, b), c) == ring_mul_schoolbook(
            a, ring_mul_schoolbook(b, c)
        )
        assert ring_mul_schoolbook(a, ring_add(b, c)) == ring_add(
            ring_mul_schoolbook(a, b), ring_mul_schoolbook(a, c)
        )


def test_schoolbook_matches_naive():
    rng = random.Random(4)
    for n, q in [(2, 17), (4, 97), (8, 17), (16, 6620830889), (64, 2**61 - 1)]:
        params = RingParams(n, q)
        for _ in range(25):
            a, b = random_element(params, rng), random_element(params, rng)
            assert ring_mul_schoolbook(a, b) == naive_negacyclic_mul(a, b)


def test_convolve_int_edges():
    assert convolve_int([], [1]) == []
    assert convolve_int([3], [4]) == [12]
    assert convolve_int([1, -2], [0, 5]) == [0, 5, -10]
    big = 2**80 + 7
    assert convolve_int([big], [-big]) == [-(big * big)]


def test_negacyclic_product_is_unreduced():
    # products keep full integer size, no wraparound mod q
    a = [2**30, 0]
    b = [2**30, 0]
    assert negacyclic_product(a, b) == [2**60, 0]
    assert negacyclic_product([0, 1], [0, 1]) == [-1, 0]


def test_ntt_equals_schoolbook_small():
    params = RingParams(8, 17)
    rng = random.Random(5)
    for _ in range(200):
        a, b = random_element(params, rng), random_element(params, rng)
        assert ring_mul_ntt(a, b) == ring_mul_schoolbook(a, b)


def test_ntt_equals_schoolbook_lpr_modulus():
    params = RingParams(1024, 655360001)
    rng = random.Random(6)
    for _ in range(5):
        a, b = random_element(params, rng), random_element(params, rng)
        assert ring_mul_ntt(a, b) == ring_mul_schoolbook(a, b)


def test_ntt_unavailable():
    params = RingParams(1024, 6620830889)
    a = RingElement.one(params)
    with pytest.raises(NttUnavailable):
        ring_mul_ntt(a, a)


def test_param_mismatch():
    a = RingElement.one(RingParams(4, 17))
    b = RingElement.one(RingParams(4, 97))
    with pytest.raises(ParamMismatch):
        ring_add(a, b)
    with pytest.raises(ParamMismatch):
        ring_mul_schoolbook(a, b)


def test_inf_norm_examples():
    params = RingParams(2, 17)
    assert inf_norm(RingElement.zero(params)) == 0
    assert inf_norm(RingElement(params, [-4, 3])) == 4
    assert inf_norm(scalar_mul(params.q // 2, RingElement.one(params))) == params.q // 2


def test_expansion_factor_attained_exhaustively():
    # over all +-1 coefficient vectors the norm ratio reaches exactly n
    for n in (2, 4):
        params = RingParams(n, 97)
        best = 0
        for bits_a in range(2**n):
            a = RingElement(params, [1 if bits_a >> i & 1 else -1 for i in range(n)])
            for bits_b in range(2**n):
                b = RingElement(params, [1 if bits_b >> i & 1 else -1 for i in range(n)])
                best = max(best, inf_norm(naive_negacyclic_mul(a, b)))
        assert best == n == expansion_factor(params)
    assert expansion_factor(RingParams(1024, 6620830889)) == 1024


def test_norm_bound_random():
    params = RingParams(8, 6620830889)
    rng = random.Random(7)
    for _ in range(100):
        a, b = random_element(params, rng), random_element(params, rng)
        prod_raw = negacyclic_product(a.coeffs, b.coeffs)
        assert max(abs(c) for c in prod_raw) <= params.n * inf_norm(a) * inf_norm(b)


def test_ring_mul_dispatch_equals_oracle():
    rng = random.Random(8)
    for n, q in [(8, 17), (16, 97), (32, 655360001)]:
        params = RingParams(n, q)
        for _ in range(20):
            a, b = random_element(params, rng), random_element(params, rng)
            assert ring_mul(a, b) == naive_negacyclic_mul(a, b)
