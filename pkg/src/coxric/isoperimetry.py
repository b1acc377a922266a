"""Edge-boundary verification against the spectral isoperimetric bounds.

Two bounds are checked for every subset A:

    theorem:   |bd A| >= 1/2 min{sqrt(l), l / sqrt(2|K|)} |A| (1 - |A|/|V|)
    corollary: |bd A| >= 1/2 |A| (1 - |A|/|V|)

with l the measured spectral gap and K the measured Ricci curvature.
The size factor is computed as |A| (|V| - |A|) / |V| so that the bound
is bit-identical under complementation.

Subset sampling uses a self-contained xorshift64* generator (seeded
through a splitmix64 step) so identical seeds give identical subsets on
every platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph

EXHAUSTIVE_LIMIT = 20
FULL_REPORT_LIMIT = 16
SLACK_TOL = 1e-9

_MASK = (1 << 64) - 1


class Xorshift64Star:
    """xorshift64* with splitmix64 seeding; integer-only, portable."""

    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & _MASK
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next_word(self) -> int:
        s = self.state
        s ^= s >> 12
        s = (s ^ (s << 25)) & _MASK
        s ^= s >> 27
        self.state = s
        return (s * 2685821657736338717) & _MASK

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            w = self.next_word()
            if w < limit:
                return w % n

    def bernoulli_row(self, n: int) -> np.ndarray:
        """n independent fair bits; bit j of each word covers vertex j."""
        nwords = (n + 63) // 64
        raw = b"".join(self.next_word().to_bytes(8, "little")
                       for _ in range(nwords))
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8),
                             bitorder="little")
        return bits[:n].astype(bool)

    def size_k_subset(self, n: int, k: int) -> list[int]:
        """Uniform k-subset of range(n) by partial Fisher-Yates."""
        arr = list(range(n))
        for i in range(k):
            j = i + self.below(n - i)
            arr[i], arr[j] = arr[j], arr[i]
        return sorted(arr[:k])


@dataclass
class IsoReport:
    label: str
    size: int
    boundary: int
    bound: float
    bound_corollary: float
    bound_theorem: float | None
    slack: float
    passed: bool
    subset: tuple[int, ...] | None = None


@dataclass
class IsoResult:
    mode: str
    seed: int | None
    n: int
    gap: float | None
    ric: float | None
    checked: int
    failures: int
    min_slack: float
    reports: list[IsoReport] = field(repr=False)


def boundary_size(g: Graph, subset) -> int:
    """Edges with exactly one endpoint in the subset."""
    members = np.zeros(g.n, dtype=bool)
    for v in subset:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        members[v] = True
    us, vs = g.edge_arrays()
    if len(us) == 0:
        return 0
    return int(np.count_nonzero(members[us] != members[vs]))


def _size_factor(size_a: int, size_v: int) -> float:
    return size_a * (size_v - size_a) / size_v


def iso_bound(size_a: int, size_v: int, lam: float, k: float) -> float:
    """The spectral bound coefficient times |A| (1 - |A|/|V|)."""
    if k == 0:
        raise ValueError("the bound requires a nonzero curvature K")
    if lam <= 0:
        raise ValueError("the bound requires a positive spectral gap")
    coeff = 0.5 * min(math.sqrt(lam), lam / math.sqrt(2.0 * abs(k)))
    return coeff * _size_factor(size_a, size_v)


def corollary_bound(size_a: int, size_v: int) -> float:
    return 0.5 * _size_factor(size_a, size_v)


def _judge(sizes: np.ndarray, boundaries: np.ndarray, n: int,
           lam: float | None, ric: float | None):
    """Vectorized bounds, slacks, verdicts for a batch of subsets."""
    factor = (sizes * (n - sizes)).astype(float) / n
    cor = 0.5 * factor
    if lam is not None and lam > 0 and ric is not None and ric != 0:
        coeff = 0.5 * min(math.sqrt(lam), lam / math.sqrt(2.0 * abs(ric)))
        theo = coeff * factor
    else:
        theo = None
    bound = cor if theo is None else np.maximum(cor, theo)
    slack = boundaries - bound
    return cor, theo, bound, slack, slack >= -SLACK_TOL


def verify_isoperimetry(g: Graph, mode: str = "sampled", seed: int = 0,
                        samples: int = 10_000, lam: float | None = None,
                        ric: float | None = None) -> IsoResult:
    """Check every (or many) subsets against both bounds.

    Exhaustive mode enumerates all 2^n subsets for n <= 20; reports for
    every subset are materialized only up to n <= 16, beyond that the
    failures alone are kept (everything is still checked and counted).
    Sampled mode draws ``samples`` uniform subsets, then one uniform
    subset of each size 1..n-1; reports are ordered by (size, index).

    ``lam`` and ``ric`` default to measured values when not supplied.
    """
    if lam is None or ric is None:
        from .curvature import global_ricci
        from .spectral import GraphTooLargeError, spectral_gap
        if ric is None:
            ric = global_ricci(g).ric
        if lam is None:
            try:
                lam = spectral_gap(g).gap
            except (GraphTooLargeError, ValueError):
                lam = None

    if mode == "exhaustive":
        if g.n > EXHAUSTIVE_LIMIT:
            raise ValueError(
                f"exhaustive mode is limited to {EXHAUSTIVE_LIMIT} vertices"
            )
        return _verify_exhaustive(g, lam, ric)
    if mode == "sampled":
        return _verify_sampled(g, seed, samples, lam, ric)
    raise ValueError(f"unknown mode {mode!r}")


def _verify_exhaustive(g: Graph, lam, ric) -> IsoResult:
    n = g.n
    us, vs = g.edge_arrays()
    keep_all = n <= FULL_REPORT_LIMIT
    reports = []
    failures = 0
    checked = 0
    min_slack = math.inf
    chunk = 1 << 16
    for start in range(0, 1 << n, chunk):
        masks = np.arange(start, min(start + chunk, 1 << n), dtype=np.uint64)
        sizes = _popcount(masks)
        boundaries = np.zeros(len(masks), dtype=np.uint64)
        for u, v in zip(us, vs):
            boundaries += ((masks >> np.uint64(u)) ^ (masks >> np.uint64(v))) & np.uint64(1)
        boundaries = boundaries.astype(np.int64)
        cor, theo, bound, slack, ok = _judge(sizes, boundaries, n, lam, ric)
        checked += len(masks)
        failures += int((~ok).sum())
        min_slack = min(min_slack, float(slack.min()))
        emit = range(len(masks)) if keep_all else np.nonzero(~ok)[0]
        for i in emit:
            mask = int(masks[i])
            subset = tuple(j for j in range(n) if (mask >> j) & 1)
            reports.append(IsoReport(
                label=f"exhaustive:{mask}",
                size=int(sizes[i]),
                boundary=int(boundaries[i]),
                bound=float(bound[i]),
                bound_corollary=float(cor[i]),
                bound_theorem=None if theo is None else float(theo[i]),
                slack=float(slack[i]),
                passed=bool(ok[i]),
                subset=subset,
            ))
    reports.sort(key=lambda r: r.size)
    return IsoResult("exhaustive", None, n, lam, ric, checked, failures,
                     min_slack, reports)


def _verify_sampled(g: Graph, seed: int, samples: int, lam, ric) -> IsoResult:
    n = g.n
    rng = Xorshift64Star(seed)
    rows = []
    labels = []
    subsets = []
    for i in range(samples):
        rows.append(rng.bernoulli_row(n))
        labels.append(f"uniform:{i}")
        subsets.append(None)
    for k in range(1, n):
        chosen = rng.size_k_subset(n, k)
        row = np.zeros(n, dtype=bool)
        row[chosen] = True
        rows.append(row)
        labels.append(f"stratified:{k}")
        subsets.append(tuple(chosen))
    members = np.stack(rows)
    us, vs = g.edge_arrays()
    if len(us):
        boundaries = (members[:, us] != members[:, vs]).sum(axis=1)
    else:
        boundaries = np.zeros(len(rows), dtype=np.int64)
    sizes = members.sum(axis=1)
    cor, theo, bound, slack, ok = _judge(sizes, boundaries, n, lam, ric)
    reports = []
    for i, label in enumerate(labels):
        subset = subsets[i]
        if subset is None and not ok[i]:
            subset = tuple(np.nonzero(members[i])[0].tolist())
        reports.append(IsoReport(
            label=label,
            size=int(sizes[i]),
            boundary=int(boundaries[i]),
            bound=float(bound[i]),
            bound_corollary=float(cor[i]),
            bound_theorem=None if theo is None else float(theo[i]),
            slack=float(slack[i]),
            passed=bool(ok[i]),
            subset=subset,
        ))
    reports.sort(key=lambda r: r.size)
    return IsoResult("sampled", seed, n, lam, ric, len(reports),
                     int((~ok).sum()), float(slack.min()), reports)


def _popcount(masks: np.ndarray) -> np.ndarray:
    bytes_view = masks.view(np.uint8).reshape(len(masks), 8)
    return np.unpackbits(bytes_view, axis=1).sum(axis=1).astype(np.int64)


def summarize(result: IsoResult) -> dict:
    return {
        "mode": result.mode,
        "seed": result.seed,
        "vertices": result.n,
        "gap": result.gap,
        "ric": result.ric,
        "checked": result.checked,
        "failures": result.failures,
        "min_slack": result.min_slack,
        "passed": result.failures == 0,
    }
