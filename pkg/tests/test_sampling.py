import math

import pytest

from lattika.arith import Modulus
from lattika.ring import RingParams
from lattika.sampling import (
    GaussianParams,
    Rng,
    Seed,
    sample_binary_ring,
    sample_binary_vector,
    sample_dgauss_int,
    sample_gauss_ring,
    sample_gauss_vector,
    sample_uniform_ring,
    sample_uniform_vector,
    sample_uniform_zq,
)

SEED = Seed(bytes(range(32)))


def test_seed_validation():
    with pytest.raises(ValueError):
        Seed(b"short")
    with pytest.raises(ValueError):
        Seed.from_hex("ab" * 31)
    assert Seed.from_hex("00" * 32).value == bytes(32)
    assert Seed.random() != Seed.random()


def test_gaussian_params_validation():
    GaussianParams(1.0)
    GaussianParams(2.0, tail_cut=6)
    with pytest.raises(ValueError):
        GaussianParams(0.0)
    with pytest.raises(ValueError):
        GaussianParams(-1.0)
    with pytest.raises(ValueError):
        GaussianParams(1.0, tail_cut=5.9)


def test_fixed_seed_reproduces_streams():
    g = GaussianParams(1.0)
    params = RingParams(16, 97)
    for maker in (
        lambda r: [sample_dgauss_int(g, r) for _ in range(50)],
        lambda r: [sample_uniform_zq(Modulus(11), r).value for _ in range(50)],
        lambda r: sample_binary_ring(params, r).coeffs,
        lambda r: sample_gauss_ring(params, g, r).coeffs,
        lambda r: sample_uniform_ring(params, r).coeffs,
    ):
        assert maker(Rng(SEED)) == maker(Rng(SEED))


def test_child_streams_differ():
    base = Rng(SEED)
    a = base.child("a")
    b = base.child("b")
    assert a.randbytes(16) != b.randbytes(16)


@pytest.mark.parametrize("sigma", [1.0, 2.0])
def test_gaussian_moments(sigma):
    g = GaussianParams(sigma)
    rng = Rng(SEED)
    n = 10**5
    draws = [sample_dgauss_int(g, rng) for _ in range(n)]
    mean = sum(draws) / n
    var = sum(d * d for d in draws) / n - mean * mean
    assert abs(mean) <= max(0.02, 3 * sigma / math.sqrt(n))
    assert abs(var - sigma * sigma) <= 0.05 * sigma * sigma


def test_gaussian_support_truncated():
    g = GaussianParams(1.0, tail_cut=10)
    rng = Rng(SEED)
    for _ in range(5000):
        assert abs(sample_dgauss_int(g, rng)) <= g.support_bound == 10


def test_uniform_zq_frequencies():
    rng = Rng(SEED)
    n = 30000
    counts = {-1: 0, 0: 0, 1: 0}
    for _ in range(n):
        v = sample_uniform_zq(Modulus(3), rng).value
        counts[v] += 1
    for v, c in counts.items():
        assert abs(c / n - 1 / 3) < 0.02, (v, c)


def test_uniform_zq_range():
    rng = Rng(SEED)
    for q in (3, 11, 97):
        m = Modulus(q)
        for _ in range(500):
            v = sample_uniform_zq(m, rng).value
            assert -q // 2 <= v < q / 2


def test_binary_ring_frequency_and_range():
    params = RingParams(1024, 97)
    rng = Rng(SEED)
    el = sample_binary_ring(params, rng)
    assert set(el.coeffs) <= {0, 1}
    ones = sum(el.coeffs)
    assert abs(ones / params.n - 0.5) < 0.06


def test_gauss_ring_norm_bound():
    params = RingParams(64, 6620830889)
    g = GaussianParams(1.0)
    rng = Rng(SEED)
    for _ in range(50):
        el = sample_gauss_ring(params, g, rng)
        assert max(abs(c) for c in el.coeffs) <= 10


def test_vector_samplers():
    rng = Rng(SEED)
    v = sample_uniform_vector(Modulus(11), 100, rng)
    assert all(-5 <= x <= 5 for x in v)
    b = sample_binary_vector(100, rng)
    assert set(b) <= {0, 1}
    g = sample_gauss_vector(GaussianParams(2.0), 100, rng)
    assert all(abs(x) <= 20 for x in g)


def test_rejection_sampling_unbiased_small():
    # q = 3 needs 2-bit draws with rejection; all residues reachable
    rng = Rng(SEED)
    seen = set()
    for _ in range(100):
        seen.add(rng.randrange(3))
    assert seen == {0, 1, 2}
