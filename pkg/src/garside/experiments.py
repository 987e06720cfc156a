"""Monte Carlo experiment runner over spheres and balls.

Each experiment kind maps one statistic over uniformly sampled braids and
reports one row per length: counts, the observed proportion, and a Wilson
score interval.  Every success is re-verified from its own certificate
before being counted; nothing is trusted on the sampler's word alone.

Data emission is deterministic: identical (kind, config, lengths) reproduce
byte-identical CSV/JSON.  Wall-clock timings are therefore zeroed in data
files unless explicitly requested (the bench kind always keeps them).
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .census import SampleConfig, sample_ball, sample_sphere
from .conjugacy import CERTIFIED, fast_rigid_conjugate, strict_witness_patterns
from .genericity import (
    DEFAULT_SCHEME,
    blocking_braid,
    decompose,
    is_nonintrusive,
    observation_test,
    prefix_of_complement,
)
from .normal import NormalForm, contains_factor_subword, is_rigid
from .normal import conjugate as _conjugate

EXPERIMENT_KINDS = (
    "rigid-proportion",
    "blocking-subword",
    "prefix-rare",
    "conjugacy-success",
    "conjugacy-bench",
    "pa-proportion",
)

_SPHERE_KINDS = {"rigid-proportion", "blocking-subword", "prefix-rare"}

Z95 = 1.959963984540054
Z99 = 2.5758293035489004

CSV_HEADER = "n,l,samples,successes,proportion,ci_low,ci_high,seed,elapsed_ms"


class UndefinedFitError(ValueError):
    """No usable points for the decay fit (all proportions at 1.0)."""


@dataclass(frozen=True)
class ExperimentRow:
    n: int
    l: int
    samples: int
    successes: int
    proportion: float
    ci_low: float
    ci_high: float
    seed: int
    elapsed_ms: float

    def __post_init__(self):
        if not 0 <= self.successes <= self.samples:
            raise ValueError("successes out of range")
        if not self.ci_low <= self.proportion <= self.ci_high:
            raise ValueError("interval does not contain the proportion")


def wilson_interval(
    successes: int, samples: int, z: float = Z95
) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if samples <= 0:
        raise ValueError("need at least one sample")
    p = successes / samples
    denom = 1 + z * z / samples
    center = p + z * z / (2 * samples)
    rad = z * math.sqrt(p * (1 - p) / samples + z * z / (4 * samples * samples))
    low = max(0.0, (center - rad) / denom)
    high = min(1.0, (center + rad) / denom)
    # the score interval always contains the point estimate; pin that
    # against floating-point round-off at the endpoints
    return min(low, p), max(high, p)


def _mix(seed: int, l: int) -> int:
    """Stable 63-bit derivation of a per-length stream seed."""
    h = (seed * 0x9E3779B97F4A7C15 + l * 0xBF58476D1CE4E5B9 + 0x94D049BB133111EB) % (
        1 << 63
    )
    return h


def _verified_observation(x: NormalForm, scheme: str) -> bool:
    got = observation_test(x, scheme)
    if got is None:
        return False
    rigid, conj = got
    if not is_rigid(rigid):
        raise AssertionError("observation test returned a non-rigid braid")
    if _conjugate(x, conj) != rigid:
        raise AssertionError("observation test conjugator failed verification")
    if not is_nonintrusive(x, rigid, scheme):
        raise AssertionError("observation test conjugation was intrusive")
    return True


def _verified_certificate(x: NormalForm, patterns, scheme: str):
    cert = fast_rigid_conjugate(x, patterns, scheme)
    if cert is not None and not cert.verify(x):
        raise AssertionError("certificate failed re-verification")
    return cert


def run_experiment(
    kind: str,
    cfg: SampleConfig,
    l_list: Sequence[int],
    *,
    scheme: str = DEFAULT_SCHEME,
    strict_paper: bool = False,
    witness_patterns=None,
    witnesses: Sequence[NormalForm] = (),
) -> list[ExperimentRow]:
    """Run one statistic over the given lengths; one row per length.

    Sphere statistics (rigid-proportion, blocking-subword, prefix-rare) need
    l >= 5; ball statistics accept any radius.  Rows are a deterministic
    function of (kind, cfg, l_list) and the remaining flags.
    """
    if kind not in EXPERIMENT_KINDS:
        raise ValueError(f"unknown experiment kind {kind!r}")
    if not l_list or list(l_list) != sorted(set(l_list)):
        raise ValueError("l_list must be nonempty and strictly ascending")
    if kind in _SPHERE_KINDS and min(l_list) < 5:
        raise ValueError(f"{kind} needs lengths >= 5")
    if strict_paper and witness_patterns is None:
        witness_patterns = strict_witness_patterns(cfg.n)
    block = blocking_braid(cfg.n) if kind == "blocking-subword" else None

    rows = []
    for l in l_list:
        rng = random.Random(_mix(cfg.seed, l))
        successes = 0
        per_call: list[float] = []
        t_row = time.perf_counter()
        for _ in range(cfg.sample_count):
            if kind in _SPHERE_KINDS:
                x = sample_sphere(replace(cfg, l=l), rng)
            else:
                x = sample_ball(cfg.n, l, rng)
            if kind == "rigid-proportion":
                if strict_paper:
                    cert = _verified_certificate(x, witness_patterns, scheme)
                    ok = cert is not None and cert.uniqueness == CERTIFIED
                else:
                    ok = _verified_observation(x, scheme)
            elif kind == "blocking-subword":
                ok = contains_factor_subword(decompose(x, scheme).p2, block)
            elif kind == "prefix-rare":
                ok = prefix_of_complement(x, scheme)
            elif kind in ("conjugacy-success", "conjugacy-bench"):
                t0 = time.perf_counter()
                cert = _verified_certificate(x, witness_patterns, scheme)
                per_call.append(time.perf_counter() - t0)
                ok = cert is not None and cert.uniqueness == CERTIFIED
            else:  # pa-proportion
                cert = _verified_certificate(x, witness_patterns, scheme)
                ok = cert is not None and cert.uniqueness == CERTIFIED
                if ok and witnesses:
                    mid = decompose(x, scheme).p3
                    ok = all(contains_factor_subword(mid, w) for w in witnesses)
            successes += ok
        if kind == "conjugacy-bench":
            elapsed = 1000.0 * sorted(per_call)[len(per_call) // 2]
        else:
            elapsed = 1000.0 * (time.perf_counter() - t_row)
        low, high = wilson_interval(successes, cfg.sample_count)
        rows.append(
            ExperimentRow(
                n=cfg.n,
                l=l,
                samples=cfg.sample_count,
                successes=successes,
                proportion=successes / cfg.sample_count,
                ci_low=low,
                ci_high=high,
                seed=cfg.seed,
                elapsed_ms=elapsed,
            )
        )
    return rows


@dataclass(frozen=True)
class DecayFit:
    slope: float
    intercept: float
    r_squared: float


def fit_decay(rows: Sequence[ExperimentRow]) -> DecayFit:
    """Least-squares fit of log(1 - proportion) against l.

    Rows with proportion == 1.0 carry no information about the decay and are
    skipped; fewer than two usable rows make the fit undefined.
    """
    pts = [(row.l, math.log(1.0 - row.proportion)) for row in rows if row.proportion < 1.0]
    if len(pts) < 2:
        raise UndefinedFitError("need at least two rows with proportion < 1")
    xs = np.array([p[0] for p in pts], dtype=float)
    ys = np.array([p[1] for p in pts], dtype=float)
    slope, intercept = np.polyfit(xs, ys, 1)
    pred = slope * xs + intercept
    ss_res = float(np.sum((ys - pred) ** 2))
    ss_tot = float(np.sum((ys - ys.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return DecayFit(float(slope), float(intercept), r2)


def monotone_within_ci(
    rows: Sequence[ExperimentRow], *, decreasing: bool = False, z: float = Z99
) -> bool:
    """No significant violation of monotonicity between consecutive rows.

    Consecutive proportions may fluctuate; a violation only counts when the
    z-level Wilson intervals of the two rows fail to overlap in the wrong
    direction.
    """
    for a, b in zip(rows, rows[1:]):
        lo_a, hi_a = wilson_interval(a.successes, a.samples, z)
        lo_b, hi_b = wilson_interval(b.successes, b.samples, z)
        if decreasing:
            if lo_b > hi_a:
                return False
        else:
            if hi_b < lo_a:
                return False
    return True


def _format_row(row: ExperimentRow, include_timing: bool) -> list[str]:
    elapsed = f"{row.elapsed_ms:.3f}" if include_timing else "0"
    return [
        str(row.n),
        str(row.l),
        str(row.samples),
        str(row.successes),
        f"{row.proportion:.6f}",
        f"{row.ci_low:.6f}",
        f"{row.ci_high:.6f}",
        str(row.seed),
        elapsed,
    ]


def rows_to_csv(rows: Sequence[ExperimentRow], include_timing: bool = False) -> str:
    lines = [CSV_HEADER]
    lines.extend(",".join(_format_row(r, include_timing)) for r in rows)
    return "\n".join(lines) + "\n"


def rows_to_json(rows: Sequence[ExperimentRow], include_timing: bool = False) -> str:
    keys = CSV_HEADER.split(",")
    out = []
    for r in rows:
        vals = _format_row(r, include_timing)
        rec = {}
        for k, v in zip(keys, vals):
            rec[k] = float(v) if "." in v else int(v)
        out.append(rec)
    return json.dumps(out, separators=(",", ":")) + "\n"
