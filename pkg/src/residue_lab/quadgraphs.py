"""Difference graphs of residue quadruples.

Four pairwise distinct residues mod p (p = 4k + 1, so the edge relation is
symmetric) span a graph: i and j are joined when a_i - a_j is a nonzero
square.  Quadruples are counted up to permutation and translation, which is
implemented by enumerating 4-subsets containing 0 and dividing tallies by 4.
The degree multiset is a complete isomorphism invariant on 4 vertices, so
classification is a table lookup.
"""

from enum import Enum
from itertools import combinations

import numpy as np

from .errors import DuplicateResidues, NotIntegral, WrongResidueClass
from .modarith import FieldContext
from .patterns import jacobsthal


class GraphClass(Enum):
    EMPTY = "Empty"
    ONE_EDGE = "OneEdge"
    TWO_DISJOINT_EDGES = "TwoDisjointEdges"
    PATH_P3 = "PathP3"
    TRIANGLE_PLUS_VERTEX = "TrianglePlusVertex"
    PATH_P4 = "PathP4"
    STAR_K13 = "StarK13"
    CYCLE_C4 = "CycleC4"
    PAW = "Paw"
    DIAMOND = "Diamond"
    K4 = "K4"


# Sorted degree multiset of each isomorphism class; all eleven are distinct,
# so the multiset alone is a canonical key (the tests verify this against a
# brute-force isomorphism check over all 64 labeled graphs).
DEGREE_KEY = {
    GraphClass.EMPTY: (0, 0, 0, 0),
    GraphClass.ONE_EDGE: (0, 0, 1, 1),
    GraphClass.TWO_DISJOINT_EDGES: (1, 1, 1, 1),
    GraphClass.PATH_P3: (0, 1, 1, 2),
    GraphClass.TRIANGLE_PLUS_VERTEX: (0, 2, 2, 2),
    GraphClass.PATH_P4: (1, 1, 2, 2),
    GraphClass.STAR_K13: (1, 1, 1, 3),
    GraphClass.CYCLE_C4: (2, 2, 2, 2),
    GraphClass.PAW: (1, 2, 2, 3),
    GraphClass.DIAMOND: (2, 2, 3, 3),
    GraphClass.K4: (3, 3, 3, 3),
}

EDGE_COUNT = {cls: sum(key) // 2 for cls, key in DEGREE_KEY.items()}

_KEY_TO_CLASS = {key: cls for cls, key in DEGREE_KEY.items()}

# Packed key: sum over vertices of 5^degree encodes the degree multiset
# in one small integer (each degree count is at most 4 < 5).
_CODE_TO_CLASS = {sum(5 ** d for d in key): cls for cls, key in DEGREE_KEY.items()}


def classify_quadruple(ctx: FieldContext, quad) -> GraphClass:
    """Isomorphism class of the difference graph of four distinct residues."""
    if ctx.k is None:
        raise WrongResidueClass(f"p={ctx.p} is not 1 mod 4; edge relation not symmetric")
    a = [x % ctx.p for x in quad]
    if len(a) != 4 or len(set(a)) != 4:
        raise DuplicateResidues(f"need 4 pairwise distinct residues, got {quad}")
    deg = [0, 0, 0, 0]
    for i, j in combinations(range(4), 2):
        if ctx.chi[(a[i] - a[j]) % ctx.p] == 1:
            deg[i] += 1
            deg[j] += 1
    return _KEY_TO_CLASS[tuple(sorted(deg))]


def count_graph_classes(ctx: FieldContext) -> dict[GraphClass, int]:
    """n_p for each of the 11 classes, counting quadruples up to
    permutation and translation.

    Enumerates the C(p-1, 3) subsets {0, a, b, c}; each translation class
    contains exactly four of them, so tallies are divided by 4.  The scan
    is vectorized per smallest nonzero element a over the (b, c) square;
    the square counts every unordered pair twice, hence a further factor 2.
    """
    if ctx.k is None:
        raise WrongResidueClass(f"p={ctx.p} is not 1 mod 4; edge relation not symmetric")
    p = ctx.p
    is_r = (ctx.chi == 1).astype(np.uint8)
    pow5 = np.array([1, 5, 25, 125], dtype=np.int16)
    m_max = p - 2
    off = np.arange(m_max, dtype=np.int32)
    # |c - b| table; chi(-x) = chi(x) for p = 1 mod 4, so the absolute
    # difference indexes the edge relation for both triangle halves.
    absdiff = np.abs(off[None, :] - off[:, None])
    hist = np.zeros(501, dtype=np.int64)
    for a in range(1, p - 2):
        m = p - 1 - a  # b, c run over a+1 .. p-1
        if m < 2:
            break
        e1 = int(is_r[a])
        rb = is_r[a + 1: p]          # edge 0-b
        rba = is_r[1: m + 1]         # edge a-b, index b - a
        rcb = is_r[absdiff[:m, :m]]  # edge b-c
        d0 = (e1 + rb)[:, None] + rb[None, :]
        da = (e1 + rba)[:, None] + rba[None, :]
        s = rb + rba
        db = s[:, None] + rcb
        dc = s[None, :] + rcb
        key = pow5[d0] + pow5[da] + pow5[db] + pow5[dc]
        hist += np.bincount(key.ravel(), minlength=501)
        # remove the b == c diagonal, then halve for the double cover
        key_diag = pow5[e1 + 2 * rb] + pow5[e1 + 2 * rba] + 2 * pow5[s]
        hist -= np.bincount(key_diag, minlength=501)
    out = {}
    for code, cls in _CODE_TO_CLASS.items():
        tally = int(hist[code])
        if tally % 8:
            raise ArithmeticError(f"tally for {cls} not divisible by 8 at p={p}")
        out[cls] = tally // 8
    return out


def d_of_J(J: int) -> int:
    """(J^2 - 4) / 32, defined only when the division is exact."""
    num = J * J - 4
    if num % 32:
        raise NotIntegral(f"({J}^2 - 4) is not divisible by 32")
    return num // 32


def goncharova_K4(ctx: FieldContext) -> int:
    """Closed form for the K4 class count at p = 4k + 1:
    (k(k-1)(k-4) + 2k*d) / 24 with d = (J^2 - 4) / 32."""
    if ctx.k is None:
        raise WrongResidueClass(f"p={ctx.p} is not 1 mod 4")
    k = ctx.k
    d = d_of_J(jacobsthal(ctx))
    num = k * (k - 1) * (k - 4) + 2 * k * d
    if num % 24:
        raise NotIntegral(f"K4 numerator {num} not divisible by 24 at p={ctx.p}")
    return num // 24
