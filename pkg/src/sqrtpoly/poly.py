"""The quotient ring F_p[x]/(x^r - 1) and the two gluing constructions."""

from __future__ import annotations

from dataclasses import dataclass

from . import _modmat
from .errors import (ContextMismatch, DegreeTooLarge, EqualInputsCancellation,
                     LevelOutOfRange, WrongPartCount)
from .field import FieldCtx

#: degree of the zero polynomial; compares below every real degree
NEG_INF = float("-inf")


@dataclass
class Poly:
    ctx: FieldCtx
    coeffs: list[int]  # dense, length exactly r

    def __post_init__(self):
        assert len(self.coeffs) == self.ctx.r

    @property
    def degree(self):
        for k in range(self.ctx.r - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return NEG_INF

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.ctx.p == self.ctx.p
                and other.coeffs == self.coeffs)

    def __neg__(self):
        p = self.ctx.p
        return Poly(self.ctx, [(-c) % p for c in self.coeffs])

    def sparse(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, descending by exponent."""
        return [(k, c) for k, c in reversed(list(enumerate(self.coeffs))) if c]

    def render(self) -> str:
        """Human form 'c*x^k + ...' descending, like the tables print it."""
        terms = []
        for k, c in self.sparse():
            if k == 0:
                terms.append(f"{c}")
            else:
                xs = "x" if k == 1 else f"x^{k}"
                terms.append(xs if c == 1 else f"{c}{xs}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"Poly(p={self.ctx.p}, {self.render()})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def from_coeffs(ctx: FieldCtx, coeffs) -> Poly:
    """Build a Poly from any coefficient list of length <= r (zero padded)."""
    c = [v % ctx.p for v in coeffs]
    if len(c) > ctx.r:
        raise DegreeTooLarge(f"{len(c)} coefficients but r = {ctx.r}")
    return Poly(ctx, c + [0] * (ctx.r - len(c)))


def monomial(ctx: FieldCtx, coeff: int, exp: int) -> Poly:
    c = [0] * ctx.r
    c[exp % ctx.r] = coeff % ctx.p
    return Poly(ctx, c)


def _same_ctx(a: Poly, b: Poly):
    if a.ctx.p != b.ctx.p:
        raise ContextMismatch(f"p={a.ctx.p} vs p={b.ctx.p}")


def add(a: Poly, b: Poly) -> Poly:
    _same_ctx(a, b)
    p = a.ctx.p
    return Poly(a.ctx, [(x + y) % p for x, y in zip(a.coeffs, b.coeffs)])


def sub(a: Poly, b: Poly) -> Poly:
    _same_ctx(a, b)
    p = a.ctx.p
    return Poly(a.ctx, [(x - y) % p for x, y in zip(a.coeffs, b.coeffs)])


def scalar_mul(c: int, a: Poly) -> Poly:
    p = a.ctx.p
    c %= p
    return Poly(a.ctx, [c * x % p for x in a.coeffs])


def mul_cyclic(a: Poly, b: Poly) -> Poly:
    """Schoolbook product with exponents reduced mod r.  O(r^2) on purpose."""
    _same_ctx(a, b)
    p, r = a.ctx.p, a.ctx.r
    out = [0] * r
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if y:
                k = i + j
                if k >= r:
                    k -= r
                out[k] = (out[k] + x * y) % p
    return Poly(a.ctx, out)


def eval_poly(f: Poly, a: int) -> int:
    """Horner evaluation."""
    p = f.ctx.p
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * a + c) % p
    return acc


def _eval_sparse(f: Poly, a: int) -> int:
    p = f.ctx.p
    return sum(c * pow(a, k, p) for k, c in f.sparse()) % p


def is_sqrt_poly(ctx: FieldCtx, f: Poly) -> bool:
    """True iff f(a)^2 = a for every quadratic residue a."""
    p, r, g = ctx.p, ctx.r, ctx.gamma
    nnz = sum(1 for c in f.coeffs if c)
    if r > 512 and nnz > 8:
        import numpy as np

        vals = _modmat.eval_on_squares(ctx, np.asarray(f.coeffs, dtype=np.int64))[0]
        ns = np.arange(r, dtype=np.int64)
        targets = ctx.gamma_powers[(2 * ns) % (p - 1)]
        return bool(np.all(vals * vals % p == targets))
    g2 = g * g % p
    a = 1
    if nnz <= 8:
        for _ in range(r):
            v = _eval_sparse(f, a)
            if v * v % p != a:
                return False
            a = a * g2 % p
    else:
        for _ in range(r):
            v = eval_poly(f, a)
            if v * v % p != a:
                return False
            a = a * g2 % p
    return True


def glue_crt(ctx: FieldCtx, parts: list[Poly], check: bool = False) -> Poly:
    """Combine per-block polynomials f_k (degree < q) into one f on all of S.

    f is the unique polynomial of degree < r with f = f_k mod (x^q - zeta^k)
    for every block k.  Computed per coefficient column by a size-2^{s-1}
    inverse DFT at the nodes zeta^k.
    """
    if ctx.s < 2:
        raise LevelOutOfRange(f"glue_crt needs s >= 2, got s = {ctx.s}")
    p, q = ctx.p, ctx.q
    d = 1 << (ctx.s - 1)
    if len(parts) != d:
        raise WrongPartCount(f"expected {d} parts, got {len(parts)}")
    for f in parts:
        if f.degree != NEG_INF and f.degree >= q:
            raise DegreeTooLarge(f"part degree {f.degree} >= q = {q}")
    zeta_inv = pow(ctx.zetaTS, -1, p)
    inv_d = pow(d, -1, p)
    out = [0] * ctx.r
    for j in range(q):
        col = [f.coeffs[j] for f in parts]
        if not any(col):
            continue
        w = 1  # zeta^{-t}
        for t in range(d):
            b = 0
            wk = 1  # zeta^{-kt}
            for k in range(d):
                b += col[k] * wk
                wk = wk * w % p
            b = b % p * inv_d % p
            out[j + t * q] = b
            w = w * zeta_inv % p
    result = Poly(ctx, out)
    if check:
        assert is_sqrt_poly(ctx, result)
    return result


def glue_pair(ctx: FieldCtx, f_i: Poly, f_j: Poly, k: int, i: int,
              check: bool = False) -> Poly:
    """One gluing step: f on S_i^{k+1} from f_i on S_i^k, f_j on the partner block.

    f = (1/2a) * [x^{M_k} (f_i - f_j) + a (f_i + f_j)],  a = zeta^{2^k i}.
    deg f = M_k + deg(f_i - f_j).
    """
    if ctx.s < 2 or not (0 <= k <= ctx.s - 2):
        raise LevelOutOfRange(f"level k = {k} not in [0, {ctx.s - 2}]")
    p = ctx.p
    m = (1 << k) * ctx.q
    for f in (f_i, f_j):
        if f.degree != NEG_INF and f.degree >= m:
            raise DegreeTooLarge(f"input degree {f.degree} >= M_k = {m}")
    if f_i.coeffs == f_j.coeffs:
        raise EqualInputsCancellation("glue_pair inputs identical")
    alpha = pow(ctx.zetaTS, ((1 << k) * i) % (1 << (ctx.s - 1)), p)
    c = pow(2 * alpha % p, -1, p)
    out = [0] * ctx.r
    for j in range(m):
        lo = (f_i.coeffs[j] + f_j.coeffs[j]) % p
        hi = (f_i.coeffs[j] - f_j.coeffs[j]) % p
        out[j] = alpha * lo % p * c % p
        out[m + j] = hi * c % p
    result = Poly(ctx, out)
    if check:
        assert result.degree == m + sub(f_i, f_j).degree
    return result
