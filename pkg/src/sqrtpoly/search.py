"""Meet-in-the-middle search for the minimal-degree square-root polynomial.

Every f on S splits uniquely as a pair (f_0, f_1) of halves on the two
level-(s-2) blocks, and deg f = M + deg(f_0 - f_1), so the minimum is
found by building both 2^((p-1)/4)-member families, sorting the
coefficient vectors highest-degree-first, and matching the longest
cross-family common prefix.  Total work O(p * 2^((p-1)/4)).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import poly
from .errors import (CancellationImpossible, LevelOutOfRange, TooLarge,
                     WrongResidue)
from .field import FieldCtx, root_of_unity
from .poly import Poly, glue_pair, is_sqrt_poly, monomial
from .ts import shift_family

SEARCH_CAP = 26  # max (p-1)/4
DEFAULT_PAIR_CAP = 10 ** 6


@dataclass
class LevelFamily:
    level: int
    block: int
    modulus: int  # M_k = 2^k * q
    members: np.ndarray  # (2^{M_k}, M_k), each row a poly of degree < M_k
    order_tag: str = "unsorted"

    def member_poly(self, ctx: FieldCtx, idx: int) -> Poly:
        return poly.from_coeffs(ctx, [int(v) for v in self.members[idx]])


@dataclass
class SearchReport:
    min_degree: int
    minimizer_count: int
    representatives: list[Poly]
    prefix_length: int | None
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "min_degree": self.min_degree,
            "minimizer_count": str(self.minimizer_count),
            "prefix_length": self.prefix_length,
            "representatives": [f.to_json() for f in self.representatives],
            "stats": {k: v for k, v in self.stats.items()},
        }


def _storage_dtype(p: int):
    return np.uint8 if p < 256 else np.int32


def _base_members(ctx: FieldCtx) -> np.ndarray:
    """All 2^q polynomials on S_0 = mu_q (rows indexed by sign word)."""
    p, q = ctx.p, ctx.q
    if q > SEARCH_CAP:
        raise TooLarge(f"q = {q} exceeds search cap {SEARCH_CAP}")
    zd = root_of_unity(ctx, q)
    zpow = np.empty(q, dtype=np.int64)
    v = 1
    for j in range(q):
        zpow[j] = v
        v = v * zd % p
    m = (q + 1) // 2
    ns = np.arange(q, dtype=np.int64)
    z = zpow[(ns[:, None] * ((m - np.arange(q, dtype=np.int64)[None, :]) % q)) % q]
    inv_q = pow(q, -1, p)
    words = np.arange(1 << q, dtype=np.int64)
    signs = 1 - 2 * ((words[:, None] >> ns[None, :]) & 1)
    from ._modmat import matmul_mod

    c = matmul_mod(signs, z, p) * inv_q % p
    return c.astype(_storage_dtype(p))


def _shift_members(ctx: FieldCtx, members: np.ndarray, i: int) -> np.ndarray:
    """Column scaling realizing f |-> gamma^i f(gamma^(-2i) x)."""
    p = ctx.p
    js = np.arange(members.shape[1], dtype=np.int64)
    scales = ctx.gamma_powers[(i - 2 * i * js) % (p - 1)]
    return (members.astype(np.int64) * scales % p).astype(members.dtype)


def _glue_all(ctx: FieldCtx, a: np.ndarray, b: np.ndarray, k: int,
              i: int = 0) -> np.ndarray:
    """All |a| x |b| gluings of level-k families into level k+1."""
    p = ctx.p
    m = (1 << k) * ctx.q
    alpha = pow(ctx.zetaTS, ((1 << k) * i) % (1 << (ctx.s - 1)), p)
    c = pow(2 * alpha % p, -1, p)
    ac = alpha * c % p
    a_lo = a.astype(np.int64) * ac % p
    a_hi = a.astype(np.int64) * c % p
    b_lo = b.astype(np.int64) * ac % p
    b_hi = b.astype(np.int64) * c % p
    na, nb = len(a), len(b)
    out = np.empty((na * nb, 2 * m), dtype=_storage_dtype(p))
    chunk = max(1, (1 << 22) // max(1, nb * m))
    for a0 in range(0, na, chunk):
        a1 = min(a0 + chunk, na)
        lo = (a_lo[a0:a1, None, :] + b_lo[None, :, :]) % p
        hi = (a_hi[a0:a1, None, :] - b_hi[None, :, :]) % p
        out[a0 * nb:a1 * nb, :m] = lo.reshape(-1, m)
        out[a0 * nb:a1 * nb, m:] = hi.reshape(-1, m)
    return out


def _level_zero_members(ctx: FieldCtx, i: int) -> np.ndarray:
    base = _base_members(ctx)
    return _shift_members(ctx, base, i) if i else base


def _level_members(ctx: FieldCtx, k: int) -> np.ndarray:
    """F_0^k member matrix, built recursively."""
    if k == 0:
        return _level_zero_members(ctx, 0)
    child = _level_members(ctx, k - 1)
    partner = _shift_members(ctx, child, 1 << (ctx.s - 1 - k))
    return _glue_all(ctx, child, partner, k - 1, i=0)


def build_level_zero(ctx: FieldCtx, i: int = 0) -> LevelFamily:
    """All 2^q square-root polynomials on the block S_i."""
    if ctx.s < 2:
        raise LevelOutOfRange("level families need s >= 2")
    return LevelFamily(level=0, block=i, modulus=ctx.q,
                       members=_level_zero_members(ctx, i))


def build_level(ctx: FieldCtx, k: int, i: int = 0) -> LevelFamily:
    """F_i^k with all 2^(2^k q) members."""
    if ctx.s < 2 or not (0 <= k <= ctx.s - 2):
        raise LevelOutOfRange(f"level {k} not in [0, {ctx.s - 2}]")
    m = (1 << k) * ctx.q
    if m > SEARCH_CAP:
        raise TooLarge(f"M_k = {m} exceeds search cap {SEARCH_CAP}")
    members = _level_members(ctx, k)
    if i:
        members = _shift_members(ctx, members, i)
    return LevelFamily(level=k, block=i, modulus=m, members=members)


def _sorted_merge(a: np.ndarray, b: np.ndarray):
    """Sort the union of two member matrices highest coefficient first.

    Returns (rows, src, order_in_own_family) in sorted order.
    """
    m = a.shape[1]
    rows = np.vstack([a, b]).astype(np.int64)
    src = np.concatenate([np.zeros(len(a), dtype=np.int8),
                          np.ones(len(b), dtype=np.int8)])
    own = np.concatenate([np.arange(len(a)), np.arange(len(b))])
    order = np.lexsort(tuple(rows[:, j] for j in range(m)))
    return rows[order], src[order], own[order]


def minimal_search(ctx: FieldCtx, threads: int = 1,
                   keep_representatives: int | None = 16,
                   pair_cap: int = DEFAULT_PAIR_CAP) -> SearchReport:
    """Find the minimal degree over all of F and all its attainers.

    p = 3 mod 4 is delegated to min_degree_direct (single block, monomial
    answer).  keep_representatives=None keeps every minimizer (subject
    to pair_cap).
    """
    if ctx.p % 4 == 3:
        return min_degree_direct(ctx)
    t0 = time.monotonic()
    m = (ctx.p - 1) // 4
    if m > SEARCH_CAP:
        raise TooLarge(f"(p-1)/4 = {m} exceeds search cap {SEARCH_CAP}")
    k = ctx.s - 2
    fam_a = _level_members(ctx, k)
    fam_b = _shift_members(ctx, fam_a, 1)
    assert fam_a.shape[1] == m

    rows, src, _own = _sorted_merge(fam_a, fam_b)
    eq = rows[:-1] == rows[1:]
    eq_rev = eq[:, ::-1]  # column 0 = top coefficient
    lcp = np.where(eq_rev.all(axis=1), m, (~eq_rev).argmax(axis=1))
    cross = src[:-1] != src[1:]
    if not cross.any():  # pragma: no cover - both families always nonempty
        raise CancellationImpossible("no cross-family adjacency")
    best = int(lcp[cross].max())
    if best >= m:
        raise CancellationImpossible("identical polynomials across families")

    # group rows into runs whose top-`best` coefficients agree
    breaks = np.flatnonzero(lcp < best)
    starts = np.concatenate([[0], breaks + 1])
    ends = np.concatenate([breaks + 1, [len(rows)]])
    minimizer_count = 0
    rep_pairs: list[tuple[np.ndarray, np.ndarray]] = []
    want = keep_representatives if keep_representatives is not None else pair_cap
    for s0, s1 in zip(starts, ends):
        grp_src = src[s0:s1]
        a_rows = rows[s0:s1][grp_src == 0]
        b_rows = rows[s0:s1][grp_src == 1]
        n_pairs = len(a_rows) * len(b_rows)
        if n_pairs == 0:
            continue
        minimizer_count += n_pairs
        for ar in a_rows:
            for br in b_rows:
                if len(rep_pairs) < want:
                    rep_pairs.append((ar, br))
            if len(rep_pairs) >= want:
                break
    count_only = minimizer_count > pair_cap

    reps = []
    for ar, br in rep_pairs:
        f0 = poly.from_coeffs(ctx, [int(v) for v in ar])
        f1 = poly.from_coeffs(ctx, [int(v) for v in br])
        reps.append(glue_pair(ctx, f0, f1, k, 0))
    min_degree = m + (m - 1 - best)
    assert min_degree >= -(-(ctx.p - 1) // 3), "(p-1)/3 lower bound violated"
    assert min_degree <= ctx.r - (ctx.q - 1) // 2
    for f in reps:
        assert f.degree == min_degree
    stats = {
        "wall_seconds": round(time.monotonic() - t0, 6),
        "threads": threads,
        "family_size": int(len(fam_a)),
        "modulus": m,
        "memory_bytes": int(fam_a.nbytes + fam_b.nbytes + rows.nbytes),
        "comparisons": int(2 * len(rows) * m),  # lexsort key passes, upper bound
        "count_only": count_only,
        "top_level_cancellation": m - 1 - best,
    }
    return SearchReport(min_degree=min_degree, minimizer_count=minimizer_count,
                        representatives=reps, prefix_length=best, stats=stats)


def min_degree_direct(ctx: FieldCtx) -> SearchReport:
    """p = 3 mod 4: x^((p+1)/4) and its negation are the minimal pair."""
    if ctx.p % 4 != 3:
        raise WrongResidue(f"p = {ctx.p} is 1 mod 4; use minimal_search")
    e = (ctx.p + 1) // 4
    f = monomial(ctx, 1, e)
    assert is_sqrt_poly(ctx, f)
    return SearchReport(min_degree=e, minimizer_count=2,
                        representatives=[f, -f], prefix_length=None,
                        stats={"route": "direct", "threads": 1})


@dataclass
class TreeNode:
    level: int
    block: int
    modulus: int  # M_level
    beta: int  # vanishing polynomial is x^modulus - beta
    coeffs: list[int]
    children: list["TreeNode"] = field(default_factory=list)

    def poly(self, ctx: FieldCtx) -> Poly:
        return poly.from_coeffs(ctx, self.coeffs)


def decompose_tree(ctx: FieldCtx, f: Poly) -> TreeNode:
    """Reduce f modulo every node's vanishing polynomial x^{M_k} - zeta^{2^k i}."""
    from .errors import NotASqrtPoly

    if not is_sqrt_poly(ctx, f):
        raise NotASqrtPoly("decompose_tree input must compute square roots on S")
    root = TreeNode(level=ctx.s - 1, block=0, modulus=ctx.r, beta=1,
                    coeffs=list(f.coeffs))
    _split(ctx, root)
    return root


def _split(ctx: FieldCtx, node: TreeNode):
    if node.level == 0:
        return
    p = ctx.p
    k = node.level - 1
    m = (1 << k) * ctx.q
    d = 1 << (ctx.s - 1)
    for child_block in (node.block, node.block + (1 << (ctx.s - 2 - k))):
        beta = pow(ctx.zetaTS, ((1 << k) * child_block) % d, p)
        cc = [(node.coeffs[j] + beta * node.coeffs[m + j]) % p for j in range(m)]
        child = TreeNode(level=k, block=child_block, modulus=m, beta=beta,
                         coeffs=cc)
        node.children.append(child)
        _split(ctx, child)


def render_tree(ctx: FieldCtx, node: TreeNode, indent: int = 0) -> str:
    pad = "  " * indent
    body = poly.from_coeffs(ctx, node.coeffs).render()
    line = (f"{pad}F block={node.block} level={node.level} "
            f"(mod x^{node.modulus} - {node.beta}): {body}")
    return "\n".join([line] + [render_tree(ctx, ch, indent + 1)
                               for ch in node.children])
