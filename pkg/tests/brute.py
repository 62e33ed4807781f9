"""Slow reference implementations used by the tests.

Everything here is pure Python over Euler-criterion Legendre symbols and
nested loops, independent of the package's chi tables and numpy kernels.
"""

from itertools import combinations, product


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def nroots(t, p):
    t %= p
    return sum(1 for y in range(p) if y * y % p == t)


def word(p):
    return "".join("X" if legendre(i, p) == 1 else "Y" for i in range(1, p))


def count_pattern_scan(p, s):
    w = word(p)
    return sum(1 for i in range(len(w) - len(s) + 1) if w[i:i + len(s)] == s)


def jacobsthal_truncated(p):
    return sum(legendre(i * (i + 1) * (i + 2), p) for i in range(1, p - 2))


def char_sum(p, offsets):
    total = 0
    for a in range(p):
        f = 1
        for i in offsets:
            f = f * (a + i) % p
        total += legendre(f, p)
    return total


def chain_curve_count(p, ell):
    """Nonzero-coordinate points on x_{j+1}^2 - x_j^2 = 1 by full recursion."""
    count = 0
    stack = [(x,) for x in range(1, p)]
    while stack:
        pt = stack.pop()
        if len(pt) == ell:
            count += 1
            continue
        t = (pt[-1] * pt[-1] + 1) % p
        for y in range(1, p):
            if y * y % p == t:
                stack.append(pt + (y,))
    return count


def affine_count(p, coeffs, twist=1):
    total = 0
    for x in range(p):
        f = 0
        for c in reversed(coeffs):
            f = (f * x + c) % p
        total += sum(1 for y in range(p) if twist * y * y % p == f)
    return total


def edwards_affine(p):
    return sum(1 for x, y in product(range(p), repeat=2)
               if (x * x + y * y - (1 - x * x * y * y)) % p == 0)


def count_Mp(p):
    return sum(nroots((x * x * y * y + 1) * (x * x + y * y), p)
               for x, y in product(range(p), repeat=2))


def count_S_5loop(p):
    n = 0
    for y12, y23, y34, y13, y24 in product(range(p), repeat=5):
        if ((y12 * y12 + y23 * y23 - y13 * y13) % p == 0
                and (y23 * y23 + y34 * y34 - y24 * y24) % p == 0
                and (y12 * y12 + y23 * y23 + y34 * y34 - 1) % p == 0):
            n += 1
    return n


def count_S_rootloop(p):
    n = 0
    for y12, y23 in product(range(p), repeat=2):
        for y34 in range(p):
            if (y12 * y12 + y23 * y23 + y34 * y34 - 1) % p:
                continue
            n += nroots(y12 * y12 + y23 * y23, p) * nroots(y23 * y23 + y34 * y34, p)
    return n


def xprime_counts(p):
    total = boundary = 0
    for x1, t in product(range(p), repeat=2):
        rhs = (t * t * pow(x1, 4, p) + 1) * (t * t + 1) % p
        for y1 in range(p):
            if y1 * y1 % p != rhs:
                continue
            total += 1
            if x1 == 0 or y1 == 0 or t == 0:
                boundary += 1
    return total, boundary


DEGREE_KEYS = {
    (0, 0, 0, 0): "Empty", (0, 0, 1, 1): "OneEdge", (1, 1, 1, 1): "TwoDisjointEdges",
    (0, 1, 1, 2): "PathP3", (0, 2, 2, 2): "TrianglePlusVertex", (1, 1, 2, 2): "PathP4",
    (1, 1, 1, 3): "StarK13", (2, 2, 2, 2): "CycleC4", (1, 2, 2, 3): "Paw",
    (2, 2, 3, 3): "Diamond", (3, 3, 3, 3): "K4",
}


def classify(p, quad):
    deg = [0, 0, 0, 0]
    for i, j in combinations(range(4), 2):
        if legendre(quad[i] - quad[j], p) == 1:
            deg[i] += 1
            deg[j] += 1
    return DEGREE_KEYS[tuple(sorted(deg))]


def count_classes(p):
    tallies = {name: 0 for name in DEGREE_KEYS.values()}
    for abc in combinations(range(1, p), 3):
        tallies[classify(p, (0,) + abc)] += 1
    assert all(v % 4 == 0 for v in tallies.values())
    return {name: v // 4 for name, v in tallies.items()}


def cubic_trace(p, coeffs):
    return p - affine_count(p, coeffs)


def isomorphism_classes_on_4_vertices():
    """All 64 labeled graphs grouped under vertex permutations."""
    import itertools
    pairs = list(combinations(range(4), 2))
    classes = {}
    for bits in range(64):
        edges = frozenset(pairs[i] for i in range(6) if bits >> i & 1)
        canon = min(
            tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            for perm in itertools.permutations(range(4)))
        classes.setdefault(canon, []).append(edges)
    return classes
