"""Exhaustive degree censuses over sign vectors.

full_census walks all 2^r sign vectors in Gray-code order, maintaining
the whole coefficient vector under one sign flip per step (O(r)/step),
and tallies degrees.  family_census does the same for the 2^d
alternating-periodic subfamily, where orthogonality collapses the
coefficients to d residue-class positions and the whole job becomes one
(2^d x d) modular matrix product.
"""

from __future__ import annotations

import json
import os
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, _modmat, fourier
from .errors import InvalidDivisor, SqrtPolyError, TooLarge
from .field import FieldCtx
from .signs import SignVector, orbit_stats

DEFAULT_CENSUS_CAP = 30
CAP_ENV_VAR = "SQRTPOLY_CAP_R"

_CKPT_MAGIC = b"SQPC"
_CKPT_VERSION = 1


@dataclass
class DegreeHistogram:
    counts: dict[int, int]
    meta: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: "DegreeHistogram") -> "DegreeHistogram":
        out = dict(self.counts)
        for deg, n in other.counts.items():
            out[deg] = out.get(deg, 0) + n
        return DegreeHistogram(out, dict(self.meta))

    def min_degree(self) -> int:
        return min(self.counts)

    def to_json(self) -> dict:
        # counts as decimal strings: values can exceed 2^53
        return {
            "meta": {k: v for k, v in self.meta.items()},
            "total": str(self.total),
            "counts": {str(d): str(n) for d, n in sorted(self.counts.items())},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DegreeHistogram":
        counts = {int(d): int(n) for d, n in obj["counts"].items()}
        return cls(counts, dict(obj.get("meta", {})))

    def to_csv_rows(self) -> list[list]:
        p = self.meta.get("p", "")
        s = self.meta.get("s", "")
        q = self.meta.get("q", "")
        fam = self.meta.get("family", "all")
        shards = self.meta.get("shards", 1)
        return [[p, s, q, deg, str(n), fam, shards]
                for deg, n in sorted(self.counts.items())]


CSV_HEADER = ["p", "s", "q", "degree", "count", "family", "shard_count"]


def census_cap(max_r: int | None = None) -> int:
    if max_r is not None:
        return max_r
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_CENSUS_CAP


def _delta_table(ctx: FieldCtx) -> np.ndarray:
    """delta[n, k] = (2/r) * gamma^(n(1-2k)) mod p."""
    p, r = ctx.p, ctx.r
    ns = np.arange(r, dtype=np.int64)
    ks = (1 - 2 * np.arange(r, dtype=np.int64)) % (p - 1)
    w = _modmat.power_block(ctx, ns, ks)
    scale = 2 * pow(r, -1, p) % p
    return w * scale % p


def _seed_coeffs(ctx: FieldCtx, word: int) -> np.ndarray:
    signs = _kernels.gray_signs(word, ctx.r)
    return _modmat.signed_dft(ctx, signs)[0].copy()


def _run_shard(ctx: FieldCtx, delta: np.ndarray, lo: int, hi: int) -> np.ndarray:
    r = ctx.r
    c = _seed_coeffs(ctx, lo ^ (lo >> 1))
    hist = np.zeros(r + 1, dtype=np.int64)
    _kernels.census_gray_kernel(delta, ctx.p, r, lo, hi, c, hist)
    # exact contract: the incrementally maintained vector must equal a
    # fresh DFT of the last vector in the shard
    expect = _seed_coeffs(ctx, (hi - 1) ^ ((hi - 1) >> 1))
    if not np.array_equal(c, expect):
        raise SqrtPolyError("incremental coefficient drift detected")
    return hist


def full_census(ctx: FieldCtx, shards: int = 1, threads: int = 1,
                checkpoint: str | None = None,
                max_r: int | None = None) -> DegreeHistogram:
    """Exact degree histogram of f_eps over all eps in E_r."""
    cap = census_cap(max_r)
    if ctx.r > cap:
        raise TooLarge(f"r = {ctx.r} exceeds census cap {cap}")
    r = ctx.r
    total = 1 << r
    shards = max(1, min(shards, total))
    delta = _delta_table(ctx)
    bounds = [(total * i // shards, total * (i + 1) // shards)
              for i in range(shards)]

    done: dict[int, dict[int, int]] = {}
    if checkpoint and os.path.exists(checkpoint):
        state = _load_checkpoint(checkpoint)
        if state["p"] == ctx.p and state["shards"] == shards:
            done = state["done"]

    def work(i):
        lo, hi = bounds[i]
        return i, _run_shard(ctx, delta, lo, hi)

    todo = [i for i in range(shards) if i not in done]
    if threads > 1 and len(todo) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for i, hist in pool.map(work, todo):
                done[i] = _hist_to_counts(hist)
                if checkpoint:
                    _save_checkpoint(checkpoint, ctx.p, shards, done)
    else:
        for i in todo:
            _, hist = work(i)
            done[i] = _hist_to_counts(hist)
            if checkpoint:
                _save_checkpoint(checkpoint, ctx.p, shards, done)

    counts: dict[int, int] = {}
    for i in range(shards):
        for deg, n in done[i].items():
            counts[deg] = counts.get(deg, 0) + n
    out = DegreeHistogram(counts, {"p": ctx.p, "s": ctx.s, "q": ctx.q,
                                   "family": "all", "shards": shards})
    assert out.total == total
    if checkpoint and os.path.exists(checkpoint):
        os.unlink(checkpoint)
    return out


def _hist_to_counts(hist: np.ndarray) -> dict[int, int]:
    assert hist[0] == 0, "the zero polynomial cannot arise from signs"
    return {deg: int(n) for deg, n in enumerate(hist[1:]) if n}


def _save_checkpoint(path: str, p: int, shards: int, done: dict):
    payload = json.dumps({
        "done": {str(i): {str(d): str(n) for d, n in c.items()}
                 for i, c in done.items()},
    }).encode()
    header = struct.pack("<4sHII", _CKPT_MAGIC, _CKPT_VERSION, p, shards)
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(header + payload)
    os.replace(tmp, path)


def _load_checkpoint(path: str) -> dict:
    with open(path, "rb") as fh:
        blob = fh.read()
    magic, version, p, shards = struct.unpack("<4sHII", blob[:14])
    if magic != _CKPT_MAGIC or version != _CKPT_VERSION:
        raise SqrtPolyError(f"bad checkpoint file {path}")
    payload = json.loads(blob[14:])
    done = {int(i): {int(d): int(n) for d, n in c.items()}
            for i, c in payload["done"].items()}
    return {"p": p, "shards": shards, "done": done}


def family_admissible_degrees(ctx: FieldCtx, d: int) -> list[int]:
    """Degrees r - (D-1)/2 - tD, t = 0..d-1, descending (D = r/d odd)."""
    big_d = ctx.r // d
    return [ctx.r - (big_d - 1) // 2 - t * big_d for t in range(d)]


def _check_family_divisor(ctx: FieldCtx, d: int):
    if d < 1 or ctx.r % d != 0:
        raise InvalidDivisor(f"d = {d} does not divide r = {ctx.r}")
    if (ctx.r // d) % 2 == 0:
        raise InvalidDivisor(f"r/d = {ctx.r // d} must be odd")


def family_census(ctx: FieldCtx, d: int, chunk: int = 1 << 16) -> DegreeHistogram:
    """Degree histogram over the 2^d block-sign choices of the order-d family.

    Orthogonality puts all nonzero coefficients in one residue class mod
    D, so only d coefficients c_{k_t} need computing, and
    c_{k_t} = (1/d) sum_y h_y gamma^(y(1-2 k_t)).
    """
    _check_family_divisor(ctx, d)
    if d > DEFAULT_CENSUS_CAP:
        raise TooLarge(f"d = {d} exceeds cap {DEFAULT_CENSUS_CAP}")
    p = ctx.p
    k_ts = family_admissible_degrees(ctx, d)  # descending
    ys = np.arange(d, dtype=np.int64)
    exps = (1 - 2 * np.asarray(k_ts, dtype=np.int64)) % (p - 1)
    z = _modmat.power_block(ctx, ys, exps)  # (d, d)
    inv_d = pow(d, -1, p)
    counts: dict[int, int] = {}
    total = 1 << d
    k_arr = np.asarray(k_ts, dtype=np.int64)
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        words = np.arange(lo, hi, dtype=np.int64)
        bits = (words[:, None] >> ys[None, :]) & 1
        signs = 1 - 2 * bits
        c = _modmat.matmul_mod(signs, z, p) * inv_d % p
        nz = c != 0
        assert nz.any(axis=1).all(), "family member cannot be the zero polynomial"
        first = nz.argmax(axis=1)
        degs, cnt = np.unique(k_arr[first], return_counts=True)
        for deg, n in zip(degs, cnt):
            counts[int(deg)] = counts.get(int(deg), 0) + int(n)
    out = DegreeHistogram(counts, {"p": ctx.p, "s": ctx.s, "q": ctx.q,
                                   "family": f"alt-{d}", "shards": 1})
    assert out.total == total
    return out


def coefficient_vanish_census(ctx: FieldCtx, k: int) -> int:
    """#{eps : c_k(f_eps) = 0}, by enumeration (works for any k)."""
    if ctx.r > DEFAULT_CENSUS_CAP:
        raise TooLarge(f"r = {ctx.r} exceeds cap {DEFAULT_CENSUS_CAP}")
    return fourier.count_vanishing_bruteforce(ctx, ctx.r, 1 - 2 * k)


def orbit_divisibility_check(ctx: FieldCtx, ells: list[int],
                             max_r: int = 24) -> tuple[bool, dict[int, int]]:
    """Partition the joint vanishing set V_{r,K} by sigma-orbit order.

    Returns (every order divides its class size, {order: class size}).
    """
    r = ctx.r
    if r > max_r:
        raise TooLarge(f"r = {r} exceeds cap {max_r}")
    p = ctx.p
    total = 1 << r
    mask = np.ones(total, dtype=bool)
    ns = np.arange(r, dtype=np.int64)
    words = np.arange(total, dtype=np.int64)
    signs = (1 - 2 * ((words[:, None] >> ns[None, :]) & 1)).astype(np.int64)
    for ell in ells:
        w = ctx.gamma_powers[(ns * (ell % (p - 1))) % (p - 1)]
        h = _modmat.matmul_mod(signs, w[:, None], p)[:, 0]
        mask &= h == 0
    by_order: dict[int, int] = {}
    for word in words[mask]:
        o = orbit_stats(SignVector(int(word), r)).order
        by_order[o] = by_order.get(o, 0) + 1
    ok = all(n % o == 0 for o, n in by_order.items())
    return ok, by_order
