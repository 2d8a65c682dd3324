"""The sign-vector <-> polynomial dictionary and the vanishing counts.

A square-root polynomial on S is determined by which of the two roots it
takes at each point: f(gamma^(2n)) = eps_n * gamma^n.  Inverting that
interpolation is a DFT over F_p, so every coefficient is a signed half
sum c_k = (1/r) H_{r,1-2k}(eps), and questions about degrees become
questions about vanishing half sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, _modmat, poly
from .errors import (InvalidDivisor, LengthMismatch, NotASqrtPoly, NotCoprime,
                     PeriodDoesNotDivide, TooLarge, UnresolvedHalfRoot)
from .field import FieldCtx, legendre, root_of_unity
from .poly import Poly
from .signs import SignVector

BRUTE_FORCE_CAP = 30


@dataclass(frozen=True)
class HalfSumSpec:
    d: int
    k: int
    zeta: int  # a primitive 2d-th root of unity


def half_sum_spec(ctx: FieldCtx, d: int, k: int) -> HalfSumSpec:
    if ctx.r % d != 0:
        raise InvalidDivisor(f"d = {d} does not divide r = {ctx.r}")
    return HalfSumSpec(d=d, k=k, zeta=root_of_unity(ctx, 2 * d))


def half_sum(spec: HalfSumSpec, eps: SignVector, p: int) -> int:
    """H_{d,k}(eps) = sum_n eps_n zeta^(nk) in F_p."""
    if eps.d != spec.d:
        raise LengthMismatch(f"eps length {eps.d} != d = {spec.d}")
    w = pow(spec.zeta, spec.k % (2 * spec.d), p)
    acc = 0
    cur = 1
    for n in range(spec.d):
        acc += cur if eps.sign(n) == 1 else -cur
        cur = cur * w % p
    return acc % p


def coeffs_from_signs(ctx: FieldCtx, eps: SignVector) -> Poly:
    """The unique f with f(gamma^(2n)) = eps_n gamma^n, mod x^r - 1."""
    if eps.d != ctx.r:
        raise LengthMismatch(f"eps length {eps.d} != r = {ctx.r}")
    row = np.array(eps.signs(), dtype=np.int64)
    c = _modmat.signed_dft(ctx, row)[0]
    return Poly(ctx, [int(v) for v in c])


def signs_from_poly(ctx: FieldCtx, f: Poly) -> SignVector:
    """eps_n = f(gamma^(2n)) * gamma^(-n); must be +-1 everywhere."""
    p, r = ctx.p, ctx.r
    vals = _modmat.eval_on_squares(ctx, np.asarray(f.coeffs, dtype=np.int64))[0]
    bits = 0
    g_inv = pow(ctx.gamma, -1, p)
    w = 1  # gamma^(-n)
    for n in range(r):
        ratio = int(vals[n]) * w % p
        if ratio == p - 1:
            bits |= 1 << n
        elif ratio != 1:
            raise NotASqrtPoly(f"f(gamma^{2 * n}) / gamma^{n} = {ratio}")
        w = w * g_inv % p
    return SignVector(bits, r)


def subgroup_coeffs(ctx: FieldCtx, d: int, eps: SignVector) -> Poly:
    """Square-root polynomial of degree < d on the subgroup mu_d, d odd.

    On an odd-order subgroup the half root is canonical: a^(1/2) = a^((d+1)/2),
    so g(zeta_d^n) = eps_n * zeta_d^(n(d+1)/2) and the coefficients come out
    of one inverse DFT of size d.
    """
    if ctx.r % d != 0:
        raise InvalidDivisor(f"d = {d} does not divide r = {ctx.r}")
    if d % 2 == 0:
        raise UnresolvedHalfRoot("even-order subgroups have no canonical branch")
    if eps.d != d:
        raise LengthMismatch(f"eps length {eps.d} != d = {d}")
    p = ctx.p
    zd = root_of_unity(ctx, d)
    inv_d = pow(d, -1, p)
    m = (d + 1) // 2
    out = [0] * d
    for k in range(d):
        w = pow(zd, (m - k) % d, p)
        acc = 0
        cur = 1  # zeta_d^(n(m-k))
        for n in range(d):
            acc += cur if eps.sign(n) == 1 else -cur
            cur = cur * w % p
        out[k] = acc % p * inv_d % p
    return poly.from_coeffs(ctx, out)


def periodic_pattern_poly(ctx: FieldCtx, pattern: SignVector) -> Poly:
    """Sparse member of F_0 from an N-periodic sign pattern, N | q.

    The resulting polynomial has at most N nonzero monomials, all at
    exponents congruent to (q+1)/2 mod Q with Q = q/N.
    """
    q = ctx.q
    n_len = pattern.d
    if q % n_len != 0:
        raise PeriodDoesNotDivide(f"N = {n_len} does not divide q = {q}")
    from .signs import from_signs

    ext = from_signs([pattern.sign(n % n_len) for n in range(q)])
    f = subgroup_coeffs(ctx, q, ext)
    # sparsity sanity: exponents land in one residue class mod Q
    big_q = q // n_len
    for k, _c in f.sparse():
        assert k % big_q == ((q + 1) // 2) % big_q
    assert len(f.sparse()) <= n_len
    return f


def count_vanishing_formula(ctx: FieldCtx, ell: int) -> int:
    """|V_{r,ell}| = (2^r + (p-1)(2/p)) / p, valid for odd ell coprime to p-1."""
    p, r = ctx.p, ctx.r
    if ell % 2 == 0:
        raise NotCoprime(f"ell = {ell} is even")
    if math.gcd(ell, p - 1) != 1:
        raise NotCoprime(f"gcd({ell}, {p - 1}) != 1; use the brute-force oracle")
    num = (1 << r) + (p - 1) * legendre(2, ctx)
    assert num % p == 0
    return num // p


def count_vanishing_bruteforce(ctx: FieldCtx, d: int, ell: int,
                               shard: tuple[int, int] | None = None,
                               zeta: int | None = None) -> int:
    """#{eps in E_d : H_{d,ell}(eps) = 0} by Gray-code enumeration.

    shard = (index, total) restricts to one contiguous slice of the 2^d
    indices; slices sum to the full count.  zeta overrides the canonical
    primitive 2d-th root (the count is root-independent; tested).
    """
    if d > BRUTE_FORCE_CAP:
        raise TooLarge(f"d = {d} exceeds enumeration cap {BRUTE_FORCE_CAP}")
    p = ctx.p
    if zeta is None:
        zeta = root_of_unity(ctx, 2 * d)
    w = pow(zeta, ell % (2 * d), p)
    tab = np.empty(d, dtype=np.int64)
    cur = 1
    for n in range(d):
        tab[n] = 2 * cur % p
        cur = cur * w % p
    total = 1 << d
    if shard is None:
        lo, hi = 0, total
    else:
        idx, nshards = shard
        if not (0 <= idx < nshards):
            raise TooLarge(f"bad shard {shard}")
        lo = total * idx // nshards
        hi = total * (idx + 1) // nshards
    if lo >= hi:
        return 0
    g0 = lo ^ (lo >> 1)
    signs0 = _kernels.gray_signs(g0, d)
    h0 = 0
    cur = 1  # zeta^(n ell)
    for n in range(d):
        h0 += cur * int(signs0[n])
        cur = cur * w % p
    h0 %= p
    return int(_kernels.vanish_gray_kernel(tab, p, lo, hi, h0))
