"""Point counts on the two K3 surfaces and the identities tying them to
the CM cubic.

Surface X:  z^2 = (x^2 y^2 + 1)(x^2 + y^2)  in 3-space.
Surface S:  y12^2 + y23^2 = y13^2,  y23^2 + y34^2 = y24^2,
            y12^2 + y23^2 + y34^2 = 1  in 5-space.
Chart X':   y1^2 = (t^2 x1^4 + 1)(t^2 + 1), with #X = #X' + p.

All kernels iterate the two free coordinates and resolve the rest through
the root-count table, so each count is O(p^2) array work.
"""

import numpy as np

from .errors import WrongResidueClass
from .modarith import FieldContext
from .patterns import jacobsthal
from .records import VerificationRecord
from . import curves


def count_Mp(ctx: FieldContext) -> int:
    """Number of solutions of z^2 = (x^2 y^2 + 1)(x^2 + y^2)."""
    p = ctx.p
    sq = ctx.squares
    rc = ctx.root_counts
    total = 0
    for x in range(p):
        x2 = int(sq[x])
        idx = (x2 * sq + 1) % p * ((x2 + sq) % p) % p
        total += int(rc[idx].sum())
    return total


def count_Np(ctx: FieldContext) -> int:
    """Affine count of y^2 = x^3 - x."""
    return curves.affine_count(ctx, curves.WEIERSTRASS_CM)


def verify_identity5(ctx: FieldContext) -> VerificationRecord:
    """Check M = (p+1)^2 + (N-p)^2 + 1 at one prime."""
    p = ctx.p
    m = count_Mp(ctx)
    n = count_Np(ctx)
    expected = (p + 1) ** 2 + (n - p) ** 2 + 1
    return VerificationRecord(p, "identity5", expected, m, expected == m)


def count_S(ctx: FieldContext) -> int:
    """Points on the three-quadric surface in 5-space.

    For fixed (y12, y23) the last equation forces y34^2 = 1 - y12^2 - y23^2,
    and every root leads to y23^2 + y34^2 = 1 - y12^2, so the two remaining
    coordinates contribute root-count factors independent of the root chosen.
    """
    p = ctx.p
    sq = ctx.squares
    rc = ctx.root_counts
    total = 0
    for y12 in range(p):
        u2 = int(sq[y12])
        outer = int(rc[(1 - u2) % p])  # choices of y24
        if outer == 0:
            continue
        roots34 = rc[(1 - u2 - sq) % p]        # choices of y34 per y23
        pairs13 = rc[(u2 + sq) % p]            # choices of y13 per y23
        total += outer * int((roots34 * pairs13).sum())
    return total


def verify_formula2(ctx: FieldContext) -> VerificationRecord:
    """Check #S = (p-1)^2 + J^2 + 4 for p = 1 mod 4."""
    if ctx.k is None:
        raise WrongResidueClass(f"p={ctx.p} is not 1 mod 4")
    p = ctx.p
    s = count_S(ctx)
    expected = (p - 1) ** 2 + jacobsthal(ctx) ** 2 + 4
    return VerificationRecord(p, "formula2", expected, s, expected == s)


def _locus_X_count(ctx: FieldContext) -> int:
    """Points of X with y = 0 or z = 0, by direct count."""
    p = ctx.p
    sq = ctx.squares
    rc = ctx.root_counts
    on_y0 = int(rc[sq].sum())  # z^2 = x^2
    z0 = 0
    for x in range(p):
        x2 = int(sq[x])
        vals = (x2 * sq + 1) % p * ((x2 + sq) % p) % p
        z0 += int((vals == 0).sum())
    overlap = 1  # y = z = 0 forces x = 0
    return on_y0 + z0 - overlap


def _locus_S_count(ctx: FieldContext) -> int:
    """Points of S with y13 = y12 or y23 = y34, by direct count."""
    p = ctx.p
    sq = ctx.squares
    rc = ctx.root_counts
    # y13 = y12 forces y23 = 0, leaving y12^2 + y34^2 = 1 with y24^2 = y34^2
    t = (1 - sq) % p
    v = rc[t] ** 2
    v[t == 0] = 1
    l1 = int(v.sum())
    # y23 = y34 = w: y12^2 = 1 - 2w^2, y13^2 = 1 - w^2, y24^2 = 2w^2
    l2 = int((rc[(1 - 2 * sq) % p] * rc[(1 - sq) % p] * rc[2 * sq % p]).sum())
    overlap = 2  # both conditions force (+-1, 0, 0, +-1, 0)
    return l1 + l2 - overlap


def verify_lemma_bookkeeping(ctx: FieldContext, m_count: int | None = None,
                             s_count: int | None = None) -> VerificationRecord:
    """Check the transfer identity M - #S = 4p - 3.

    The individual divisor loci are also counted directly and reported in
    `detail` next to the stated values 6p-4 and 2p-1; only the net
    difference is gated, since the locus definitions admit several readings
    and only the difference is forced by the counts.
    """
    if ctx.k is None:
        raise WrongResidueClass(f"p={ctx.p} is not 1 mod 4")
    p = ctx.p
    m = count_Mp(ctx) if m_count is None else m_count
    s = count_S(ctx) if s_count is None else s_count
    expected = 4 * p - 3
    detail = {
        "locus_X_measured": _locus_X_count(ctx),
        "locus_X_stated": 6 * p - 4,
        "locus_S_measured": _locus_S_count(ctx),
        "locus_S_stated": 2 * p - 1,
    }
    return VerificationRecord(p, "bookkeeping", expected, m - s,
                              expected == m - s, detail=detail)


def _xprime_scan(ctx: FieldContext) -> tuple[int, int, np.ndarray]:
    """One pass over the chart X': total count, boundary count
    (x1 = 0 or y1 = 0 or t = 0), and the interior fiber count per t."""
    p = ctx.p
    sq = ctx.squares
    rc = ctx.root_counts
    x4 = sq[sq]  # x1^4 mod p
    total = 0
    fibers = np.zeros(p, dtype=np.int64)
    for t in range(p):
        t2 = int(sq[t])
        w = (t2 + 1) % p
        idx = (t2 * x4 + 1) % p * w % p
        row = rc[idx]
        total += int(row.sum())
        if t != 0:
            inner = row[1:]
            # y1 = 0 happens exactly where the right side vanishes
            fibers[t] = int(inner.sum()) - int((idx[1:] == 0).sum())
    boundary = total - int(fibers.sum())
    return total, boundary, fibers


def count_Xprime(ctx: FieldContext) -> tuple[int, int]:
    """(total, boundary) for the chart X'."""
    total, boundary, _ = _xprime_scan(ctx)
    return total, boundary


def verify_fibration(ctx: FieldContext, m_count: int | None = None) -> VerificationRecord:
    """All chart-level identities at one prime p = 1 mod 4:

    - #X = #X' + p,
    - boundary #X'_0 = 7p - 15,
    - interior = (1/4) sum of squared quartic interior counts
               = p^2 - 6p + 17 + a^2 with a the quartic trace,
    - each interior fiber count equals the interior count of the quartic
      matching the residue pattern of (t, t^2 + 1).
    """
    if ctx.k is None:
        raise WrongResidueClass(f"p={ctx.p} is not 1 mod 4")
    p = ctx.p
    total, boundary, fibers = _xprime_scan(ctx)
    interior = total - boundary
    m = count_Mp(ctx) if m_count is None else m_count
    rows = curves.quartic_rows(ctx)
    circ = [curves.quartic_interior_count(r) for r in rows]
    quarter_sum = sum(c * c for c in circ)
    if quarter_sum % 4:
        raise ArithmeticError(f"sum of squared interior counts not divisible by 4 at p={p}")
    quarter_sum //= 4
    a = rows[0].trace
    closed = p * p - 6 * p + 17 + a * a
    # per-fiber: bucket each valid t by (chi(t), chi(t^2+1))
    t = np.arange(1, p, dtype=np.int64)
    tt1 = (ctx.squares[1:] + 1) % p
    valid = tt1 != 0
    t_res = ctx.chi[t] == 1
    s_res = ctx.chi[tt1] == 1
    masks = (t_res & s_res, t_res & ~s_res, ~t_res & s_res, ~t_res & ~s_res)
    inner_fibers = fibers[1:]
    fibers_ok = all(
        bool((inner_fibers[valid & mask] == circ[i]).all())
        for i, mask in enumerate(masks))
    expected = {"total_plus_p": m, "boundary": 7 * p - 15,
                "interior": quarter_sum, "interior_closed": closed,
                "fibers_ok": True}
    actual = {"total_plus_p": total + p, "boundary": boundary,
              "interior": interior, "interior_closed": interior,
              "fibers_ok": fibers_ok}
    return VerificationRecord(p, "fibration", expected, actual,
                              expected == actual,
                              detail={"quartic_traces": [r.trace for r in rows]})
