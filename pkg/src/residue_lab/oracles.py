"""Slow reference paths used by --oracle runs and by the test suite.

These deliberately avoid the chi table: root multiplicities come from
tallying y^2 over all y, and the scalar helpers use Euler's criterion.
"""

import numpy as np


def square_root_counts(p: int) -> np.ndarray:
    """root_counts rebuilt by enumeration: bincount of y^2 over all y."""
    y = np.arange(p, dtype=np.int64)
    return np.bincount(y * y % p, minlength=p).astype(np.int64)


def euler_legendre(a: int, p: int) -> int:
    """Legendre symbol via Euler's criterion, independent of any table."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1
