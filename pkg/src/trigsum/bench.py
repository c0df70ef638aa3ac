"""Wall-clock comparison of the literal sum against its closed form."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .angle import Angle
from .formatting import fmt17
from .kernels import Family, SumSpec, halfangle_free_sum, naive_trig_sum

#: Fixed benchmark angle, comfortably away from every singularity.
BENCH_PHI = 1.0


@dataclass(frozen=True)
class BenchResult:
    naive_ns_per_eval: float
    closed_ns_per_eval: float

    @property
    def speedup(self) -> float:
        return self.naive_ns_per_eval / self.closed_ns_per_eval

    def to_json(self) -> str:
        return (
            "{"
            f'"naive_ns_per_eval": {fmt17(self.naive_ns_per_eval)}, '
            f'"closed_ns_per_eval": {fmt17(self.closed_ns_per_eval)}, '
            f'"speedup": {fmt17(self.speedup)}'
            "}\n"
        )


def _ns_per_eval(fn, repeats: int) -> float:
    # First tenth of the repeats is warmup and stays untimed.
    warmup = repeats // 10
    for _ in range(warmup):
        fn()
    measured = repeats - warmup
    start = time.perf_counter_ns()
    for _ in range(measured):
        fn()
    return (time.perf_counter_ns() - start) / measured


def measure(m: int, repeats: int, *, phi: float = BENCH_PHI) -> BenchResult:
    """Time the term-by-term sum against the closed form at the same (phi, m).

    Each route runs `repeats` times; the mean wall time per evaluation over
    the post-warmup repeats is reported in nanoseconds.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    spec = SumSpec(Angle(phi), m, Family.FULL)
    naive_ns = _ns_per_eval(lambda: naive_trig_sum(spec), repeats)
    closed_ns = _ns_per_eval(lambda: halfangle_free_sum(phi, m), repeats)
    return BenchResult(naive_ns, closed_ns)
