"""Independent little oracles used to cross-check the library.

Everything here is deliberately naive (Lagrange interpolation, direct
sums) so that agreement with the fast paths actually means something.
"""


def lagrange_interpolate(p, points):
    """Coefficients of the unique poly through (x_i, y_i), naive O(n^3)."""
    n = len(points)
    coeffs = [0] * n
    for i, (xi, yi) in enumerate(points):
        # basis poly prod_{j != i} (x - x_j) / (x_i - x_j)
        basis = [1]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            new = [0] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] = (new[k] - c * xj) % p
                new[k + 1] = (new[k + 1] + c) % p
            basis = new
            denom = denom * (xi - xj) % p
        scale = yi * pow(denom, -1, p) % p
        for k, c in enumerate(basis):
            coeffs[k] = (coeffs[k] + scale * c) % p
    return coeffs


def naive_half_sum(p, zeta, ell, signs):
    """sum_n eps_n zeta^(n*ell) mod p by direct powering."""
    return sum(s * pow(zeta, (n * ell) % (p - 1), p)
               for n, s in enumerate(signs)) % p


def naive_flip_shift(signs, n):
    """sigma^n by the index formula, as a plain list of +-1."""
    d = len(signs)
    out = []
    for i in range(d):
        j = i + n
        sgn = -1 if (j // d) % 2 else 1
        out.append(sgn * signs[j % d])
    return out
