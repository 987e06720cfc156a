"""Exact counting and uniform sampling of normal forms.

Normal forms of a fixed canonical length are walks in a finite automaton
whose states are the proper simple braids and whose edges are the
left-weighted pairs.  Path counts (kept as exact big integers) give sphere
cardinalities, the disjoint-union formula gives ball cardinalities, and
backward path-count weighting turns the same tables into an exactly uniform
sampler.
"""

from __future__ import annotations

import functools
import random
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from typing import Iterator

from . import permutations as pm
from .normal import NormalForm
from .simple import SimpleBraid

_MAX_TABULATED_STRANDS = 8


@dataclass
class TransitionGraph:
    """The left-weighted-pair automaton on the proper simple braids of B_n.

    perms lists the n! - 2 nodes in a fixed (lexicographic) order; follows
    holds successor index lists (edge a -> b iff the pair (a, b) is
    left-weighted); path-count tables grow lazily per requested length.
    """

    strand_count: int
    perms: tuple[pm.Perm, ...]
    index: dict[pm.Perm, int]
    follows: tuple[tuple[int, ...], ...]
    _counts: list[list[int]] = field(default_factory=list, repr=False)
    _cums: dict = field(default_factory=dict, repr=False)

    @property
    def nodes(self) -> tuple[SimpleBraid, ...]:
        n = self.strand_count
        return tuple(SimpleBraid(n, p) for p in self.perms)

    def counts_for(self, length: int) -> list[int]:
        """counts_for(l)[s] = number of normal sequences of length l starting at s."""
        if length < 1:
            raise ValueError("length must be >= 1")
        counts = self._counts
        if not counts:
            counts.append([1] * len(self.perms))
        while len(counts) < length:
            prev = counts[-1]
            counts.append(
                [sum(prev[j] for j in succ) for succ in self.follows]
            )
        return counts[length - 1]

    def sphere_size(self, length: int) -> int:
        if length == 0:
            return 1
        return sum(self.counts_for(length))

    def _cumulative(self, state: int | None, length: int):
        """Cumulative continuation weights for the sampler, memoised."""
        key = (state, length)
        try:
            return self._cums[key]
        except KeyError:
            weights = self.counts_for(length)
            choices = (
                list(range(len(self.perms)))
                if state is None
                else list(self.follows[state])
            )
            cums = list(accumulate(weights[j] for j in choices))
            self._cums[key] = (choices, cums)
            return choices, cums

    def sample_sequence(self, length: int, rng: random.Random) -> tuple[int, ...]:
        """Uniformly random normal sequence of the given length (indices)."""
        out = []
        state: int | None = None
        for t in range(length, 0, -1):
            choices, cums = self._cumulative(state, t)
            if not cums or cums[-1] == 0:
                raise ValueError(
                    f"no normal sequences of length {length} in B_{self.strand_count}"
                )
            r = rng.randrange(cums[-1])
            state = choices[bisect_right(cums, r)]
            out.append(state)
        return tuple(out)


@functools.lru_cache(maxsize=None)
def transition_graph(n: int) -> TransitionGraph:
    """Build (once per strand count) the proper-simple-braid automaton."""
    if n < 2:
        raise ValueError("need at least 2 strands")
    if n > _MAX_TABULATED_STRANDS:
        raise ValueError(
            f"refusing to tabulate all {n}! simple braids; census supports n <= {_MAX_TABULATED_STRANDS}"
        )
    perms = tuple(
        p for p in pm.all_perms(n) if not pm.is_identity(p) and not pm.is_delta(p)
    )
    index = {p: i for i, p in enumerate(perms)}
    fins = [pm.finishing_mask(p) for p in perms]
    starts = [pm.starting_mask(p) for p in perms]
    follows = tuple(
        tuple(j for j, sm in enumerate(starts) if sm & ~fin == 0) for fin in fins
    )
    return TransitionGraph(n, perms, index, follows)


@dataclass(frozen=True)
class SampleConfig:
    """Parameters of a sampling run; the seed pins the whole stream."""

    n: int
    l: int
    eps: int = 0
    sample_count: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("length must be >= 0")
        if self.sample_count < 1:
            raise ValueError("sample_count must be >= 1")


def count_sphere(n: int, l: int) -> int:
    """Exact number of braids with inf = eps and canonical length l.

    The count is independent of eps (multiplication by Delta^eps is a
    bijection between spheres), so only (n, l) matter.
    """
    if l < 0:
        raise ValueError("length must be >= 0")
    return transition_graph(n).sphere_size(l)


def count_ball(n: int, l: int) -> int:
    """Exact size of the radius-l ball for the simple-braid generating set.

    The ball is the disjoint union over canonical length k <= l and
    infimum -l <= i <= l-k of the corresponding spheres.
    """
    if l < 0:
        raise ValueError("radius must be >= 0")
    return sum(
        (2 * l - k + 1) * count_sphere(n, k) for k in range(l + 1)
    )


@dataclass(frozen=True)
class GrowthEstimate:
    """Consecutive sphere-size ratios; the last one estimates the growth rate."""

    ratios: tuple[tuple[int, Fraction], ...]

    @property
    def estimate(self) -> Fraction:
        return self.ratios[-1][1]


def growth_rate(n: int, l_max: int, window: int = 5) -> GrowthEstimate:
    """Estimate the exponential growth rate of sphere sizes.

    Returns the ratios |sphere(l)| / |sphere(l-1)| for the last `window`
    lengths up to l_max.  B_2 has no proper simple braids, hence no growth
    rate; that case raises.
    """
    if l_max < 2:
        raise ValueError("need l_max >= 2")
    if count_sphere(n, 1) == 0:
        raise ValueError(f"B_{n} spheres are empty for l >= 1; growth undefined")
    ls = range(max(2, l_max - window + 1), l_max + 1)
    ratios = tuple(
        (l, Fraction(count_sphere(n, l), count_sphere(n, l - 1))) for l in ls
    )
    return GrowthEstimate(ratios)


def _nf_from_indices(
    graph: TransitionGraph, eps: int, seq: tuple[int, ...]
) -> NormalForm:
    n = graph.strand_count
    return NormalForm(
        n, eps, tuple(SimpleBraid(n, graph.perms[i]) for i in seq)
    )


def sample_sphere(cfg: SampleConfig, rng: random.Random | None = None) -> NormalForm:
    """One braid uniform over the sphere {inf = eps, canonical length = l}.

    With no explicit rng, a fresh generator seeded from cfg.seed is used, so
    the draw is a deterministic function of the config.
    """
    if rng is None:
        rng = random.Random(cfg.seed)
    graph = transition_graph(cfg.n)
    if cfg.l == 0:
        return NormalForm(cfg.n, cfg.eps, ())
    seq = graph.sample_sequence(cfg.l, rng)
    return _nf_from_indices(graph, cfg.eps, seq)


def sample_spheres(cfg: SampleConfig) -> Iterator[NormalForm]:
    """cfg.sample_count independent sphere samples from one seeded stream."""
    rng = random.Random(cfg.seed)
    for _ in range(cfg.sample_count):
        yield sample_sphere(cfg, rng)


def sample_ball(n: int, l: int, rng: random.Random) -> NormalForm:
    """One braid uniform over the radius-l ball.

    Stratified: pick the (length, infimum) cell with probability
    proportional to its sphere size, then sample the sphere and shift by
    Delta^i (a bijection between spheres of different infima).
    """
    if l < 0:
        raise ValueError("radius must be >= 0")
    graph = transition_graph(n)
    sizes = [count_sphere(n, k) for k in range(l + 1)]
    cums = list(accumulate((2 * l - k + 1) * sizes[k] for k in range(l + 1)))
    r = rng.randrange(cums[-1])
    k = bisect_right(cums, r)
    rem = r - (cums[k - 1] if k else 0)
    i = -l + rem // sizes[k]
    if k == 0:
        return NormalForm(n, i, ())
    seq = graph.sample_sequence(k, rng)
    return _nf_from_indices(graph, i, seq)


def enumerate_sphere(n: int, l: int, eps: int = 0) -> Iterator[NormalForm]:
    """All braids with inf = eps and canonical length l, deterministic order."""
    graph = transition_graph(n)
    if l == 0:
        yield NormalForm(n, eps, ())
        return

    def walk(prefix: list[int], state: int | None, remaining: int):
        if remaining == 0:
            yield _nf_from_indices(graph, eps, tuple(prefix))
            return
        succ = (
            range(len(graph.perms)) if state is None else graph.follows[state]
        )
        for j in succ:
            prefix.append(j)
            yield from walk(prefix, j, remaining - 1)
            prefix.pop()

    yield from walk([], None, l)


def enumerate_ball(n: int, l: int) -> Iterator[NormalForm]:
    """All braids of the radius-l ball, stratified by (length, infimum)."""
    for k in range(l + 1):
        for i in range(-l, l - k + 1):
            yield from enumerate_sphere(n, k, eps=i)
