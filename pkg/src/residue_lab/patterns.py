"""Residue words and pattern counts.

The word for p lists positions 1..p-1, writing X for quadratic residues
and Y for non-residues.  Pattern occurrences are counted two independent
ways: a direct window scan, and the complete-character-sum expansion that
rewrites the count through sums of chi over products of shifted linear
factors.  Both must agree exactly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .errors import PatternTooLong, WrongResidueClass
from .modarith import FieldContext


@dataclass(frozen=True)
class PatternWord:
    """A finite word over the alphabet {X, Y}."""

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ValueError("empty pattern")
        bad = set(self.letters) - {"X", "Y"}
        if bad:
            raise ValueError(f"pattern letters must be X or Y, got {sorted(bad)}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing offsets i_1 < ... < i_r used to shift a variable."""

    offsets: tuple[int, ...]

    def __post_init__(self):
        if not self.offsets:
            raise ValueError("empty index set")
        if any(i < 0 for i in self.offsets):
            raise ValueError("offsets must be nonnegative")
        if any(b <= a for a, b in zip(self.offsets, self.offsets[1:])):
            raise ValueError("offsets must be strictly increasing")


def parse_pattern(s) -> str:
    """Normalize a pattern given as str or PatternWord; case-insensitive."""
    if isinstance(s, PatternWord):
        return s.letters
    return PatternWord(str(s).upper()).letters


def all_patterns(ell: int) -> list[str]:
    """All 2^ell patterns of length ell, in lexicographic order."""
    return ["".join(t) for t in product("XY", repeat=ell)]


def residue_word(ctx: FieldContext) -> PatternWord:
    """The length-(p-1) word of residue/non-residue letters for positions 1..p-1."""
    letters = np.where(ctx.chi[1:] == 1, "X", "Y")
    return PatternWord("".join(letters))


def count_pattern(ctx: FieldContext, S) -> int:
    """Number of windows of consecutive positions in the word equal to S."""
    s = parse_pattern(S)
    ell = len(s)
    p = ctx.p
    if ell > p - 1:
        raise PatternTooLong(f"pattern of length {ell} cannot occur for p={p}")
    is_x = ctx.chi[1:] == 1
    n = p - ell  # number of windows
    match = np.ones(n, dtype=bool)
    for j, ch in enumerate(s):
        match &= is_x[j:j + n] == (ch == "X")
    return int(match.sum())


def jacobsthal(ctx: FieldContext) -> int:
    """Sum of chi(a(a+1)(a+2)) over all a mod p, for p = 4k + 1.

    The three terms with a zero factor vanish, so this complete sum equals
    the classical truncated one over 1..p-3.
    """
    if ctx.k is None:
        raise WrongResidueClass(f"p={ctx.p} is not 1 mod 4")
    p = ctx.p
    a = np.arange(p, dtype=np.int64)
    f = a * ((a + 1) % p) % p * ((a + 2) % p) % p
    return int(ctx.chi[f].sum())


def char_sum(ctx: FieldContext, I) -> int:
    """Sum over a in F_p of chi((a+i_1) * ... * (a+i_r))."""
    offsets = I.offsets if isinstance(I, IndexSet) else IndexSet(tuple(I)).offsets
    p = ctx.p
    a = np.arange(p, dtype=np.int64)
    f = np.ones(p, dtype=np.int64)
    for i in offsets:
        f = f * ((a + i) % p) % p
    return int(ctx.chi[f].sum())


def count_pattern_charsum(ctx: FieldContext, S) -> int:
    """count_pattern recomputed through complete character sums.

    2^ell * n_p(S) equals the full sum over a in F_p of
    prod_j (1 + eps_j * chi(a + j)) minus the same product summed over the
    ell window starts whose window crosses position 0.
    """
    s = parse_pattern(S)
    ell = len(s)
    p = ctx.p
    if ell > p - 1:
        raise PatternTooLong(f"pattern of length {ell} cannot occur for p={p}")
    eps = [1 if ch == "X" else -1 for ch in s]
    total = p  # empty index set contributes sum_a 1
    for r in range(1, ell + 1):
        for I in combinations(range(ell), r):
            sign = math.prod(eps[j] for j in I)
            total += sign * char_sum(ctx, I)
    crossing = 0
    for j0 in range(ell):
        a = (-j0) % p
        term = 1
        for j in range(ell):
            term *= 1 + eps[j] * int(ctx.chi[(a + j) % p])
        crossing += term
    diff = total - crossing
    if diff % (1 << ell):
        raise ArithmeticError(f"character-sum expansion not divisible by 2^{ell} at p={p}")
    return diff >> ell


def pattern_curve_genus(ell: int) -> int:
    """Genus of the chain-of-quadrics curve behind the all-X pattern of length ell."""
    if ell < 2:
        raise ValueError("need ell >= 2")
    return (1 << (ell - 2)) * (ell - 3) + 1


def pattern_curve_count(ctx: FieldContext, ell: int) -> int:
    """Points with all coordinates nonzero on the chain x_{j+1}^2 - x_j^2 = 1.

    Equals 2^ell times the count of the all-X pattern of length ell.
    """
    p = ctx.p
    if not 2 <= ell <= p - 1:
        raise ValueError(f"need 2 <= ell <= p-1, got ell={ell}, p={p}")
    nz_roots = ctx.root_counts.copy()
    nz_roots[0] = 0  # zero coordinates are excluded
    sq = ctx.squares[1:]  # x_1 runs over 1..p-1
    total = np.ones(p - 1, dtype=np.int64)
    for j in range(1, ell):
        total *= nz_roots[(sq + j) % p]
    return int(total.sum())


def weil_deviation(ctx: FieldContext, S) -> tuple[Fraction, float]:
    """Deviation of a length-4 pattern count from (p-1)/16, with its bound.

    Returns (n_p(S) - (p-1)/16 as an exact fraction, (11*sqrt(p)+16)/16).
    """
    s = parse_pattern(S)
    if len(s) != 4:
        raise ValueError("deviation is defined for length-4 patterns")
    if ctx.p < 17:
        raise ValueError("need p >= 17")
    n = count_pattern(ctx, s)
    deviation = Fraction(16 * n - (ctx.p - 1), 16)
    bound = (11.0 * math.sqrt(ctx.p) + 16.0) / 16.0
    return deviation, bound


def weil_bound_ok(ctx: FieldContext, S) -> bool:
    """Exact check |n_p(S) - (p-1)/16| <= (11*sqrt(p)+16)/16, in integers."""
    s = parse_pattern(S)
    if len(s) != 4:
        raise ValueError("bound is defined for length-4 patterns")
    n = count_pattern(ctx, s)
    d16 = abs(16 * n - (ctx.p - 1))
    if d16 <= 16:
        return True
    return (d16 - 16) ** 2 <= 121 * ctx.p
