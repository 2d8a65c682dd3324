import pytest

from sqrtpoly import canonical_sqrt, legendre, make_field_ctx, root_of_unity
from sqrtpoly.errors import (EvenInput, NotAResidue, NotPrime,
                             OrderDoesNotDivide)
from sqrtpoly.field import is_prime


@pytest.mark.parametrize("p,s,q,r,gamma", [
    (13, 2, 3, 6, 2),
    (41, 3, 5, 20, 6),
    (7, 1, 3, 3, 3),
    (17, 4, 1, 8, 3),
    (97, 5, 3, 48, 5),
])
def test_ctx_factorization(p, s, q, r, gamma):
    ctx = make_field_ctx(p)
    assert (ctx.s, ctx.q, ctx.r) == (s, q, r)
    assert ctx.gamma == gamma
    assert (1 << ctx.s) * ctx.q == p - 1
    assert ctx.q % 2 == 1


def test_ctx_rejects_bad_input():
    with pytest.raises(EvenInput):
        make_field_ctx(10)
    with pytest.raises(NotPrime):
        make_field_ctx(15)
    with pytest.raises(NotPrime):
        make_field_ctx(1)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(2, 50):
        assert is_prime(n) == (n in primes)
    assert is_prime(2 ** 31 - 1)  # Mersenne
    assert not is_prime(2 ** 31 - 3)


def test_gamma_is_primitive():
    for p in (13, 29, 41, 113):
        ctx = make_field_ctx(p)
        seen = set()
        v = 1
        for _ in range(p - 1):
            seen.add(v)
            v = v * ctx.gamma % p
        assert len(seen) == p - 1


def test_legendre():
    ctx = make_field_ctx(13)
    assert legendre(2, ctx) == -1  # 2^6 = 64 = 12 mod 13
    assert legendre(0, ctx) == 0
    assert legendre(4, make_field_ctx(7)) == 1
    # multiplicativity
    for a in range(1, 13):
        for b in range(1, 13):
            assert legendre(a, ctx) * legendre(b, ctx) == legendre(a * b, ctx)


def test_root_of_unity():
    ctx = make_field_ctx(13)
    assert root_of_unity(ctx, 12) == 2
    assert root_of_unity(ctx, 2) == 12
    ctx41 = make_field_ctx(41)
    assert root_of_unity(ctx41, 4) == pow(6, 10, 41)
    with pytest.raises(OrderDoesNotDivide):
        root_of_unity(ctx, 5)
    # exact multiplicative order
    for m in (1, 2, 3, 4, 6, 12):
        z = root_of_unity(ctx, m)
        assert pow(z, m, 13) == 1
        assert all(pow(z, k, 13) != 1 for k in range(1, m))


def test_canonical_sqrt():
    assert canonical_sqrt(make_field_ctx(7), 4) == 2  # 4 = 3^4, branch 3^2
    ctx = make_field_ctx(13)
    assert canonical_sqrt(ctx, 1) == 1
    assert canonical_sqrt(ctx, 4) == 2
    with pytest.raises(NotAResidue):
        canonical_sqrt(ctx, 2)
    # squares back to the input, with exponent in [0, r)
    for p in (13, 29, 41):
        c = make_field_ctx(p)
        for a in range(1, p):
            if legendre(a, c) == 1:
                v = canonical_sqrt(c, a)
                assert v * v % p == a
                assert c.dlog(v) < c.r


def test_ctx_deterministic():
    a, b = make_field_ctx(41), make_field_ctx(41)
    assert (a.gamma, a.zeta2r, a.zetaR, a.zetaTS) == \
           (b.gamma, b.zeta2r, b.zetaR, b.zetaTS)
    assert a.zetaTS is not None
    assert pow(a.zetaTS, 1 << (a.s - 1), 41) == 1
    assert pow(a.zetaTS, 1 << (a.s - 2), 41) == 41 - 1


def test_s1_has_no_zeta_ts():
    assert make_field_ctx(7).zetaTS is None


def test_dlog_bsgs_path():
    # force the BSGS branch with a tiny table cap
    ctx = make_field_ctx(101, dlog_cap=4)
    for a in (1, 2, 50, 100):
        assert pow(ctx.gamma, ctx.dlog(a), 101) == a
