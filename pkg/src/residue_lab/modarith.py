"""Prime-field substrate: quadratic character tables, prime enumeration,
and Gaussian-integer decompositions p = a^2 + b^2.

Every counting kernel in the package works off a FieldContext, which holds
the full Legendre-symbol table chi for one odd prime.  The table costs O(p)
once and turns each square-root count into a single array lookup, which is
what makes the O(p^2) surface kernels feasible.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotOddPrime, WrongResidueClass

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for the 64-bit range."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class GaussianInteger:
    """a + b*i with integer parts; for decompositions of p, a^2 + b^2 = p."""

    a: int
    b: int

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b


class FieldContext:
    """Immutable arithmetic context for one odd prime p.

    Attributes:
        p: the prime.
        k: (p - 1) // 4 when p = 4k + 1, else None.
        chi: int8 array, chi[a] = Legendre symbol (a/p) in {-1, 0, +1}.
        delta: the smallest quadratic non-residue in 1..p-1.
        root_counts: int64 array, root_counts[t] = #{y : y^2 = t mod p}.
        squares: int64 array, squares[i] = i^2 mod p.
    """

    __slots__ = ("p", "k", "chi", "delta", "root_counts", "squares")

    def __init__(self, p, k, chi, delta, root_counts, squares):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "root_counts", root_counts)
        object.__setattr__(self, "squares", squares)

    def __setattr__(self, name, value):
        raise AttributeError("FieldContext is immutable")

    def __repr__(self):
        return f"FieldContext(p={self.p})"


def build_context(p: int, counting_oracle: bool = False) -> FieldContext:
    """Build the FieldContext for an odd prime p.

    With counting_oracle=True the root-count table is rebuilt by tallying
    y^2 over all y instead of being derived from chi, giving an independent
    path through every counting kernel.

    Raises NotOddPrime for anything that is not an odd prime.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    idx = np.arange(p, dtype=np.int64)
    squares = idx * idx % p
    chi = np.full(p, -1, dtype=np.int8)
    chi[squares] = 1
    chi[0] = 0
    delta = int(np.argmax(chi == -1))
    if counting_oracle:
        root_counts = np.bincount(squares, minlength=p).astype(np.int64)
    else:
        root_counts = (1 + chi).astype(np.int64)
    chi.flags.writeable = False
    squares.flags.writeable = False
    root_counts.flags.writeable = False
    k = (p - 1) // 4 if p % 4 == 1 else None
    return FieldContext(p, k, chi, delta, root_counts, squares)


def legendre(ctx: FieldContext, a: int) -> int:
    """Legendre symbol (a/p): +1 for nonzero squares, -1 otherwise, 0 at 0."""
    return int(ctx.chi[a % ctx.p])


def sqrt_count(ctx: FieldContext, t: int) -> int:
    """Number of y in 0..p-1 with y^2 = t mod p (0, 1, or 2)."""
    return int(ctx.root_counts[t % ctx.p])


def primes_in(lo: int, hi: int, residue_filter: tuple[int, int] | None = None) -> list[int]:
    """Ascending primes in [lo, hi], optionally restricted to p = r mod m."""
    if not 2 <= lo <= hi:
        raise ValueError(f"need 2 <= lo <= hi, got [{lo}, {hi}]")
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, math.isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q:: q] = bytearray(len(sieve[q * q:: q]))
    out = [n for n in range(lo, hi + 1) if sieve[n]]
    if residue_filter is not None:
        r, m = residue_filter
        out = [n for n in out if n % m == r % m]
    return out


def _divisible_by_two_plus_two_i(a: int, b: int) -> bool:
    # (a - 1 + b*i) / (2 + 2i) = ((a-1+b) + (b-a+1)i) / 4
    return (a - 1 + b) % 4 == 0 and (b - a + 1) % 4 == 0


def _cornacchia_two_squares(p: int, nonresidue: int) -> tuple[int, int]:
    """One solution (x, y) of x^2 + y^2 = p with x, y > 0, via Cornacchia."""
    x0 = pow(nonresidue, (p - 1) // 4, p)  # square root of -1 mod p
    if 2 * x0 < p:
        x0 = p - x0
    a, b = p, x0
    limit = math.isqrt(p)
    while b > limit:
        a, b = b, a % b
    y2 = p - b * b
    y = math.isqrt(y2)
    if y * y != y2:
        raise ArithmeticError(f"Cornacchia descent failed for p={p}")
    return b, y


def cm_decompose(ctx: FieldContext) -> tuple[GaussianInteger, GaussianInteger]:
    """Both normalized writings of p = a^2 + b^2 (a odd, b even, b > 0).

    Returns (gauss, mod4): `gauss` is the representative whose a - 1 + b*i
    is divisible by 2 + 2i, `mod4` the one with a = 1 mod 4.  The two agree
    up to the sign of a.  Requires p = 1 mod 4.
    """
    if ctx.k is None:
        raise WrongResidueClass(f"p={ctx.p} is 3 mod 4, not a sum of two squares")
    x, y = _cornacchia_two_squares(ctx.p, ctx.delta)
    a0, b0 = (x, y) if x % 2 == 1 else (y, x)
    want = 1 if b0 % 4 == 0 else 3
    gauss_a = a0 if a0 % 4 == want else -a0
    mod4_a = a0 if a0 % 4 == 1 else -a0
    # The 2+2i condition must pick out exactly two of the eight
    # unit/conjugate variants, both with the same real part.
    variants = [(a0, b0), (-b0, a0), (-a0, -b0), (b0, -a0),
                (a0, -b0), (b0, a0), (-a0, b0), (-b0, -a0)]
    passing = [(a, b) for a, b in variants if _divisible_by_two_plus_two_i(a, b)]
    if len(passing) != 2 or {a for a, _ in passing} != {gauss_a}:
        raise ArithmeticError(f"2+2i normalization not unique for p={ctx.p}: {passing}")
    return GaussianInteger(gauss_a, b0), GaussianInteger(mod4_a, b0)
