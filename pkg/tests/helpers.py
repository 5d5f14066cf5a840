"""Independent brute-force oracles used to freeze expected test values.

These deliberately avoid the library's own code paths: trial division
instead of Pollard rho, exhaustive height enumeration instead of the
rational root theorem, and so on.
"""

from fractions import Fraction
from math import gcd


def trial_factorize(n: int) -> dict[int, int]:
    """Full factorization of |n| by unbounded trial division."""
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def brute_rational_roots(coeffs, height: int) -> set[Fraction]:
    """All rational roots p/q of the ascending-coefficient polynomial
    with |p| <= height and 1 <= q <= height, by exhaustive search."""
    roots = set()
    for q in range(1, height + 1):
        for p in range(-height, height + 1):
            if gcd(p, q) != 1:
                continue
            x = Fraction(p, q)
            if sum(c * x**i for i, c in enumerate(coeffs)) == 0:
                roots.add(x)
    return roots


def naive_elem_square(m: int, comps):
    """(r + s*w + t*w^2)^2 expanded by schoolbook distribution over the
    nine basis products, reducing w^3 -> m and w^4 -> m*w by hand."""
    r, s, t = comps
    # basis-product table: (1,w,w^2) x (1,w,w^2)
    c0 = r * r + m * (s * t) + m * (t * s)
    c1 = r * s + s * r + m * (t * t)
    c2 = r * t + s * s + t * r
    return (c0, c1, c2)
