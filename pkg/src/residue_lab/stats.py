"""Distribution of normalized Frobenius traces over prime ranges.

For a fixed curve the traces a_p / (2 sqrt p) land in (-1, 1); the module
collects them, compares the empirical CDF against the uniform law and the
semicircle law by Kolmogorov-Smirnov distance, and bins them into fixed
40-bin histograms.  It also exports the scaled remainder of the
all-X length-4 pattern count around (p-1)/16.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptySample, OutOfDomain, SingularCurve, UnknownCurve
from .modarith import build_context, primes_in
from .patterns import count_pattern
from . import curves

HISTOGRAM_BINS = 40

# Trace functions per curve id; every registered model has good reduction
# at all p >= 5.
_REGISTRY = dict(curves.NAMED_CURVES)
_REGISTRY["weierstrass"] = curves.WEIERSTRASS_CM


@dataclass(frozen=True)
class TraceSample:
    p: int
    t: float


@dataclass
class TraceCollection:
    curve: str
    samples: list[TraceSample] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)


@dataclass
class DistributionReport:
    curve: str
    max_p: int
    sample_count: int
    ks_uniform: float
    ks_semicircle: float
    histogram: list[tuple[float, float, int]]
    skipped: list[int] = field(default_factory=list)


def curve_ids() -> list[str]:
    return sorted(_REGISTRY)


def trace_of(ctx, curve: str) -> int:
    spec = _REGISTRY.get(curve)
    if spec is None:
        raise UnknownCurve(f"unknown curve {curve!r}; known: {curve_ids()}")
    if spec.degree() == 3:
        return curves.weierstrass_trace(ctx, spec)
    return curves.quartic_trace(ctx, spec)


def collect_traces(curve: str, bound: int,
                   residue_filter: tuple[int, int] | None = None) -> TraceCollection:
    """Normalized traces at all good primes in [5, bound] passing the filter.

    Primes below 5 stay out of every collection (the quartic models lose
    good reduction there); bad-reduction primes inside the range are
    recorded in `skipped`.
    """
    if curve not in _REGISTRY:
        raise UnknownCurve(f"unknown curve {curve!r}; known: {curve_ids()}")
    if bound < 5:
        raise ValueError("need bound >= 5")
    coll = TraceCollection(curve)
    for p in primes_in(5, bound, residue_filter):
        ctx = build_context(p)
        try:
            trace = trace_of(ctx, curve)
        except SingularCurve:
            coll.skipped.append(p)
            continue
        coll.samples.append(TraceSample(p, curves.normalized_trace(p, trace)))
    return coll


def semicircle_cdf(t: float) -> float:
    """CDF of the semicircle density (2/pi) sqrt(1 - t^2) on [-1, 1]."""
    if not -1.0 <= t <= 1.0:
        raise OutOfDomain(f"t={t} outside [-1, 1]")
    return 0.5 + (t * math.sqrt(1.0 - t * t) + math.asin(t)) / math.pi


def _cdf_values(xs: np.ndarray, law: str) -> np.ndarray:
    if law == "uniform":
        return (xs + 1.0) / 2.0
    if law == "semicircle":
        return 0.5 + (xs * np.sqrt(1.0 - xs * xs) + np.arcsin(xs)) / math.pi
    raise ValueError(f"unknown law {law!r}; use 'uniform' or 'semicircle'")


def ks_distance(samples, law: str) -> float:
    """One-sample two-sided Kolmogorov-Smirnov distance to a target law
    on [-1, 1]."""
    xs = np.sort(np.asarray(list(samples), dtype=np.float64))
    n = xs.size
    if n == 0:
        raise EmptySample("no samples")
    cdf = _cdf_values(np.clip(xs, -1.0, 1.0), law)
    steps = np.arange(1, n + 1) / n
    return float(max(np.abs(cdf - steps).max(), np.abs(cdf - steps + 1.0 / n).max()))


def _histogram(values) -> list[tuple[float, float, int]]:
    counts, edges = np.histogram(np.asarray(list(values), dtype=np.float64),
                                 bins=HISTOGRAM_BINS, range=(-1.0, 1.0))
    return [(float(edges[i]), float(edges[i + 1]), int(c))
            for i, c in enumerate(counts)]


def st_report(curve: str, bound: int,
              residue_filter: tuple[int, int] | None = None) -> DistributionReport:
    """Full distribution report for one curve over primes up to bound."""
    if bound < 100:
        raise ValueError("need bound >= 100")
    coll = collect_traces(curve, bound, residue_filter)
    ts = [s.t for s in coll.samples]
    return DistributionReport(
        curve=curve,
        max_p=bound,
        sample_count=len(ts),
        ks_uniform=ks_distance(ts, "uniform"),
        ks_semicircle=ks_distance(ts, "semicircle"),
        histogram=_histogram(ts),
        skipped=coll.skipped,
    )


def residual_histogram(bound: int) -> DistributionReport:
    """Histogram of (n_p(XXXX) - (p-1)/16) / (2 sqrt p) over primes
    17 <= p <= bound.  Exploratory output; nothing is asserted about the
    limiting shape."""
    if bound < 100:
        raise ValueError("need bound >= 100")
    xs = []
    for p in primes_in(17, bound):
        ctx = build_context(p)
        n = count_pattern(ctx, "XXXX")
        xs.append((n - (p - 1) / 16.0) / (2.0 * math.sqrt(p)))
    return DistributionReport(
        curve="xxxx-residual",
        max_p=bound,
        sample_count=len(xs),
        ks_uniform=ks_distance(xs, "uniform"),
        ks_semicircle=ks_distance(xs, "semicircle"),
        histogram=_histogram(xs),
    )
