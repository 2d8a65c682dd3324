"""Prime-field context: the factorization p - 1 = 2^s * q and canonical roots.

Everything downstream (polynomial families, Fourier inversion, censuses)
is phrased relative to one generator gamma of F_p^x.  We always pick the
least primitive root, so identical p gives an identical context and all
golden values are reproducible.
"""

from __future__ import annotations

from functools import cached_property

from .errors import EvenInput, NotAResidue, NotPrime, OrderDoesNotDivide, TooLarge

# Deterministic Miller-Rabin witnesses, valid for all n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_DLOG_CAP = 1 << 24


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n == b:
            return True
        if n % b == 0:
            return False
    d = n - 1
    t = 0
    while d % 2 == 0:
        d //= 2
        t += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(t - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factor(n: int) -> dict[int, int]:
    """Trial-division factorization; n < 2^31 so this is instant."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _least_primitive_root(p: int) -> int:
    prime_factors = list(_factor(p - 1))
    g = 2
    while True:
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in prime_factors):
            return g
        g += 1


class FieldCtx:
    """All fixed-per-prime data; immutable after construction."""

    def __init__(self, p: int, dlog_cap: int = DEFAULT_DLOG_CAP):
        if p % 2 == 0:
            raise EvenInput(f"p = {p} is even")
        if p < 3 or not is_prime(p):
            raise NotPrime(f"p = {p} is not an odd prime")
        self.p = p
        s, q = 0, p - 1
        while q % 2 == 0:
            q //= 2
            s += 1
        self.s = s
        self.q = q
        self.r = (p - 1) // 2
        self.gamma = _least_primitive_root(p)
        # primitive 2r-th root (= gamma), r-th root, and 2^{s-1}-th root
        self.zeta2r = self.gamma
        self.zetaR = self.gamma * self.gamma % p
        self.zetaTS = pow(self.gamma, 2 * q, p) if s >= 2 else None
        self._dlog_cap = dlog_cap

    def __repr__(self):
        return (f"FieldCtx(p={self.p}, s={self.s}, q={self.q}, r={self.r}, "
                f"gamma={self.gamma})")

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.p == self.p

    def __hash__(self):
        return hash(("FieldCtx", self.p))

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)

    def pow_gamma(self, e: int) -> int:
        return pow(self.gamma, e % (self.p - 1), self.p)

    @cached_property
    def gamma_powers(self):
        """numpy table gamma^j for 0 <= j < p-1 (lazy; used by vectorized paths)."""
        import numpy as np

        out = np.empty(self.p - 1, dtype=np.int64)
        v = 1
        for j in range(self.p - 1):
            out[j] = v
            v = v * self.gamma % self.p
        return out

    @cached_property
    def _dlog_table(self) -> dict[int, int]:
        if self.p - 1 > self._dlog_cap:
            raise TooLarge(
                f"discrete-log table for p={self.p} exceeds cap {self._dlog_cap}")
        table = {}
        v = 1
        for n in range(self.p - 1):
            table[v] = n
            v = v * self.gamma % self.p
        return table

    def dlog(self, a: int) -> int:
        """n with gamma^n = a.  Table lookup below the cap, BSGS above."""
        a %= self.p
        if a == 0:
            raise NotAResidue("0 has no discrete log")
        if self.p - 1 <= self._dlog_cap:
            return self._dlog_table[a]
        # baby-step giant-step
        m = 1
        while m * m < self.p - 1:
            m += 1
        baby = {}
        v = 1
        for j in range(m):
            baby.setdefault(v, j)
            v = v * self.gamma % self.p
        giant = pow(self.inv(self.gamma), m, self.p)
        cur = a
        for i in range(m + 1):
            if cur in baby:
                return (i * m + baby[cur]) % (self.p - 1)
            cur = cur * giant % self.p
        raise NotAResidue(f"no discrete log for {a}")  # pragma: no cover


def make_field_ctx(p: int, dlog_cap: int = DEFAULT_DLOG_CAP) -> FieldCtx:
    return FieldCtx(p, dlog_cap=dlog_cap)


def legendre(a: int, ctx: FieldCtx) -> int:
    """Euler's criterion a^((p-1)/2), mapped to {-1, 0, +1}."""
    v = pow(a % ctx.p, ctx.r, ctx.p)
    if v == 0:
        return 0
    return 1 if v == 1 else -1


def root_of_unity(ctx: FieldCtx, m: int) -> int:
    """The canonical primitive m-th root gamma^((p-1)/m)."""
    if m <= 0 or (ctx.p - 1) % m != 0:
        raise OrderDoesNotDivide(f"m = {m} does not divide p-1 = {ctx.p - 1}")
    return pow(ctx.gamma, (ctx.p - 1) // m, ctx.p)


def canonical_sqrt(ctx: FieldCtx, a: int) -> int:
    """The branch sqrt(gamma^(2n)) := gamma^n with 0 <= n < r."""
    if legendre(a, ctx) != 1:
        raise NotAResidue(f"{a} is not a quadratic residue mod {ctx.p}")
    n = ctx.dlog(a)
    assert n % 2 == 0
    return pow(ctx.gamma, (n // 2) % ctx.r, ctx.p)
