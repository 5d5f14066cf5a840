"""Arbitrary-precision integer and rational kernels.

Everything downstream leans on four primitives implemented here:
exact factorization with an explicit effort budget, perfect-square
detection for rationals, rational roots of integer polynomials, and
reconstruction of a rational from a high-precision real approximation.

Rationals are plain ``fractions.Fraction`` values (always reduced,
positive denominator), re-exported as ``Rat``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm

import mpmath as mp

from .errors import EffortExceeded

Rat = Fraction

#: Default budget for Pollard rho iterations in one factorize() call.
DEFAULT_EFFORT = 500_000

_TRIAL_BOUND = 10_000

# Strong-pseudoprime bases that make Miller-Rabin deterministic below
# _CERTIFIED_BOUND (covers all 64-bit integers with a wide margin).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_CERTIFIED_BOUND = 3_317_044_064_679_887_385_961_981


def _miller_rabin_witness(n: int, a: int) -> bool:
    """True if a witnesses compositeness of odd n > 2."""
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def certified_prime(n: int) -> bool:
    """Deterministic primality test.

    Raises EffortExceeded for n at or beyond the certified Miller-Rabin
    range when no compositeness witness is found, rather than reporting
    a probable prime as prime.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    for a in _MR_BASES:
        if _miller_rabin_witness(n, a):
            return False
    if n >= _CERTIFIED_BOUND:
        raise EffortExceeded(f"primality of {n} not certifiable at this size")
    return True


def _rho_split(n: int, budget: int) -> tuple[int | None, int]:
    """Find a nontrivial factor of odd composite n.

    Brent-cycle Pollard rho with deterministic parameters; returns
    (factor or None, iterations used). The polynomial constant is
    stepped on cycle failure so retries stay reproducible.
    """
    used = 0
    c = 1
    while used < budget:
        x = y = 2
        d = 1
        power = lam = 1
        while d == 1 and used < budget:
            if power == lam:
                y = x
                power *= 2
                lam = 0
            x = (x * x + c) % n
            lam += 1
            used += 1
            d = gcd(abs(x - y), n)
        if 1 < d < n:
            return d, used
        c += 1
    return None, used


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization: sign * prod(p**e)."""

    sign: int
    prime_powers: tuple[tuple[int, int], ...]  # strictly increasing primes

    def value(self) -> int:
        v = self.sign
        for p, e in self.prime_powers:
            v *= p**e
        return v

    def divisors(self) -> list[int]:
        """All positive divisors of |n|, ascending."""
        ds = [1]
        for p, e in self.prime_powers:
            ds = [d * p**i for d in ds for i in range(e + 1)]
        return sorted(ds)

    def __iter__(self):
        return iter(self.prime_powers)


def factorize(n: int, effort_bound: int = DEFAULT_EFFORT) -> Factorization:
    """Exact factorization of n != 0.

    Trial division up to a fixed bound, then Pollard rho on remaining
    cofactors. Raises EffortExceeded if a cofactor cannot be split (or
    certified prime) within the budget; never returns a pseudo-prime.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    original = n
    sign = 1 if n > 0 else -1
    n = abs(n)
    powers: dict[int, int] = {}

    for p in (2, 3, 5):
        while n % p == 0:
            powers[p] = powers.get(p, 0) + 1
            n //= p
    d = 7
    while d <= _TRIAL_BOUND and d * d <= n:
        while n % d == 0:
            powers[d] = powers.get(d, 0) + 1
            n //= d
        d += 2

    budget = effort_bound
    stack = [n] if n > 1 else []
    while stack:
        c = stack.pop()
        if c == 1:
            continue
        if c <= _TRIAL_BOUND * _TRIAL_BOUND or certified_prime(c):
            # below the trial bound squared a surviving cofactor is prime
            powers[c] = powers.get(c, 0) + 1
            continue
        f, used = _rho_split(c, budget)
        budget -= used
        if f is None:
            raise EffortExceeded(f"could not split cofactor {c} within effort bound")
        stack.append(f)
        stack.append(c // f)

    fac = Factorization(sign, tuple(sorted(powers.items())))
    assert fac.value() == original
    return fac


def perfect_square_root(q: Rat | int) -> Rat | None:
    """The nonnegative rational square root of q, or None if q is not a square."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    if rn * rn != q.numerator:
        return None
    rd = isqrt(q.denominator)
    if rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def perfect_cube_root(n: int) -> int | None:
    """Exact integer cube root of n (any sign), or None."""
    if n == 0:
        return 0
    s = 1 if n > 0 else -1
    a = abs(n)
    r = round(a ** (1.0 / 3.0))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**3 == a:
            return s * c
    return None


def cubefree_and_noncube(m: int, effort_bound: int = DEFAULT_EFFORT) -> tuple[bool, bool]:
    """(is_cubefree, is_cube) flags of m != 0, from its factorization."""
    if m == 0:
        raise ValueError("m must be nonzero")
    fac = factorize(m, effort_bound)
    is_cubefree = all(e < 3 for _, e in fac)
    is_cube = all(e % 3 == 0 for _, e in fac)  # sign is absorbed: -1 = (-1)^3
    return is_cubefree, is_cube


@dataclass(frozen=True)
class IntPoly:
    """Univariate integer polynomial, coefficients ascending by degree.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_rationals(cls, coeffs) -> "IntPoly":
        """Clear denominators of a rational coefficient list (ascending)."""
        fracs = [Fraction(c) for c in coeffs]
        scale = 1
        for c in fracs:
            scale = lcm(scale, c.denominator)
        return cls(tuple(int(c * scale) for c in fracs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        """Exact evaluation; x may be int, Fraction, or any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def format(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()


def rational_roots(p: IntPoly, effort_bound: int = DEFAULT_EFFORT) -> set[Rat]:
    """All rational roots of a nonzero integer polynomial.

    Strips powers of x first (recording the root 0), then enumerates
    candidates num/den with num dividing the constant term and den
    dividing the leading coefficient; each candidate is verified by
    exact evaluation.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every rational as a root")
    cs = list(p.coeffs)
    roots: set[Fraction] = set()
    while cs[0] == 0:
        roots.add(Fraction(0))
        cs = cs[1:]
    if len(cs) == 1:
        return roots
    stripped = IntPoly(tuple(cs))
    num_divs = factorize(cs[0], effort_bound).divisors()
    den_divs = factorize(cs[-1], effort_bound).divisors()
    seen: set[Fraction] = set()
    for dn in den_divs:
        for nm in num_divs:
            if gcd(nm, dn) != 1:
                continue
            for cand in (Fraction(nm, dn), Fraction(-nm, dn)):
                if cand in seen:
                    continue
                seen.add(cand)
                if stripped(cand) == 0:
                    roots.add(cand)
    return roots


def _to_fraction_exact(x) -> Fraction:
    """Exact Fraction value of a binary float / mpf / int / Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    v = mp.mpf(x)
    sign, man, exp, _ = v._mpf_
    man = int(man)
    if sign:
        man = -man
    if exp >= 0:
        return Fraction(man * (1 << exp))
    return Fraction(man, 1 << (-exp))


def rational_reconstruct(approx, height_bound: int, tol: Fraction | None = None) -> Rat | None:
    """Recover a rational of bounded height from a real approximation.

    Walks the continued-fraction convergents of the (exact binary)
    value of ``approx`` and returns the last convergent p/q with
    |p|, q <= height_bound lying within ``tol`` of it, or None. The
    default tolerance is 2**-(prec//2) at the current mpmath working
    precision; callers are expected to re-verify the result exactly.
    """
    target = _to_fraction_exact(approx)
    if tol is None:
        tol = Fraction(1, 1 << max(8, mp.mp.prec // 2))
    else:
        tol = _to_fraction_exact(tol)

    best = None
    p0, q0 = 1, 0
    rem = target
    a = rem.numerator // rem.denominator
    p1, q1 = a, 1
    while True:
        if abs(p1) > height_bound or q1 > height_bound:
            break
        if abs(target - Fraction(p1, q1)) <= tol:
            best = Fraction(p1, q1)
        rem -= a
        if rem == 0:
            break
        rem = 1 / rem
        a = rem.numerator // rem.denominator
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
    return best


_RAT_RE = None


def parse_rat(text: str) -> Rat:
    """Parse 'p' or 'p/q' with arbitrary-precision integers; reject anything else."""
    global _RAT_RE
    if _RAT_RE is None:
        import re

        _RAT_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")
    if not _RAT_RE.match(text):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)
