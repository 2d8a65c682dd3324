"""Hot loops for the exhaustive censuses.

Both kernels walk a contiguous index range of E_d in reflected Gray-code
order; one sign flips per step, so coefficients are maintained by adding
or subtracting a precomputed delta row (O(r) per step) and the single
half sum by one addition.  Compiled with numba when available; the pure
Python bodies are kept importable as a slow fallback and as an oracle.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True, nogil=True)
def census_gray_kernel(delta, p, r, lo, hi, c, hist):
    """Degree histogram over Gray-coded sign vectors with indices in [lo, hi).

    delta[n, k] = 2/r * gamma^(n(1-2k)) mod p; c must hold the coefficient
    vector of the vector gray(lo) on entry and is left at gray(hi-1).
    hist[j+1] counts degree j; hist[0] would count the zero polynomial.
    """
    k = r - 1
    while k >= 0 and c[k] == 0:
        k -= 1
    hist[k + 1] += 1
    for i in range(lo + 1, hi):
        t = i
        n = 0
        while t & 1 == 0:
            t >>= 1
            n += 1
        row = delta[n]
        if ((i ^ (i >> 1)) >> n) & 1:
            # sign at n became -1: subtract the delta row
            for k in range(r):
                v = c[k] - row[k]
                if v < 0:
                    v += p
                c[k] = v
        else:
            for k in range(r):
                v = c[k] + row[k]
                if v >= p:
                    v -= p
                c[k] = v
        k = r - 1
        while k >= 0 and c[k] == 0:
            k -= 1
        hist[k + 1] += 1


@njit(cache=True, nogil=True)
def vanish_gray_kernel(tab, p, lo, hi, h):
    """Count Gray-coded vectors with index in [lo, hi) whose half sum is 0.

    tab[n] = 2 * zeta^(n*ell) mod p; h is the half sum at gray(lo).
    """
    cnt = 0
    if h == 0:
        cnt += 1
    for i in range(lo + 1, hi):
        t = i
        n = 0
        while t & 1 == 0:
            t >>= 1
            n += 1
        if ((i ^ (i >> 1)) >> n) & 1:
            h -= tab[n]
            if h < 0:
                h += p
        else:
            h += tab[n]
            if h >= p:
                h -= p
        if h == 0:
            cnt += 1
    return cnt


def gray_signs(word: int, d: int) -> np.ndarray:
    """+-1 row for a raw bit word (bit set means -1)."""
    bits = (word >> np.arange(d, dtype=np.int64)) & 1
    return (1 - 2 * bits).astype(np.int64)
