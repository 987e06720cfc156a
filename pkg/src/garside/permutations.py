"""Permutation arithmetic underlying simple (permutation) braids.

Conventions used throughout the package:

- A permutation is a tuple ``p`` of length n with values 1..n in one-line
  notation: the strand entering at bottom position ``i`` leaves at top
  position ``p[i-1]``.
- Braid words compose left to right (stacking below to above), so the
  permutation of a product ``a . b`` is "apply a, then b":
  ``braid_mul(a, b)[i] = b[a[i] - 1]``.
- Generator indices are 1-based: ``sigma i`` crosses the strands currently
  at positions i and i+1.

Descent sets are kept as bitmasks (bit ``i-1`` set iff generator i is in the
set); the binary operations that dominate normal-form computations are
memoised in module-level tables, so repeated work on the same small braid
group is cheap.
"""

from __future__ import annotations

from typing import Iterator

Perm = tuple[int, ...]

_IDENTITY: dict[int, Perm] = {}
_DELTA: dict[int, Perm] = {}
_STARTING: dict[Perm, int] = {}
_FINISHING: dict[Perm, int] = {}
_TAU: dict[Perm, Perm] = {}
_COMPLEMENT: dict[Perm, Perm] = {}
_MOVE: dict[tuple[Perm, Perm], tuple[Perm, Perm] | None] = {}
_WORD: dict[Perm, tuple[int, ...]] = {}


def identity_perm(n: int) -> Perm:
    try:
        return _IDENTITY[n]
    except KeyError:
        p = _IDENTITY[n] = tuple(range(1, n + 1))
        return p


def delta_perm(n: int) -> Perm:
    """Permutation of the positive half-twist: i -> n+1-i."""
    try:
        return _DELTA[n]
    except KeyError:
        p = _DELTA[n] = tuple(range(n, 0, -1))
        return p


def sigma_perm(n: int, i: int) -> Perm:
    """Permutation of the Artin generator sigma_i (1 <= i <= n-1)."""
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def is_identity(p: Perm) -> bool:
    return p == identity_perm(len(p))


def is_delta(p: Perm) -> bool:
    return p == delta_perm(len(p))


def check_perm(p: Perm) -> None:
    """Raise ValueError unless p is a bijection of {1..n} in one-line notation."""
    n = len(p)
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p!r}")


def inv_count(p: Perm) -> int:
    """Number of inversions; equals the positive word length of the braid."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def invert_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def braid_mul(a: Perm, b: Perm) -> Perm:
    """Permutation of the braid product a . b (a first, then b)."""
    return tuple(b[v - 1] for v in a)


def tau_perm(p: Perm) -> Perm:
    """Conjugation by the half-twist: Delta^-1 . p . Delta."""
    try:
        return _TAU[p]
    except KeyError:
        n = len(p)
        out = _TAU[p] = tuple(n + 1 - p[n - 1 - i] for i in range(n))
        return out


def tau_perm_pow(p: Perm, k: int) -> Perm:
    """tau^k; only the parity of k matters because Delta^2 is central."""
    return tau_perm(p) if k % 2 else p


def complement_perm(p: Perm) -> Perm:
    """Right complement: the simple braid d with p . d = Delta."""
    try:
        return _COMPLEMENT[p]
    except KeyError:
        n = len(p)
        inv = invert_perm(p)
        out = _COMPLEMENT[p] = tuple(n + 1 - inv[i] for i in range(n))
        return out


def delta_sigma_inv_perm(n: int, i: int) -> Perm:
    """Permutation of the simple braid Delta . sigma_i^-1."""
    return braid_mul(delta_perm(n), sigma_perm(n, i))


def full_mask(n: int) -> int:
    return (1 << (n - 1)) - 1


def starting_mask(p: Perm) -> int:
    """Bitmask of the starting set: descents of the one-line notation."""
    try:
        return _STARTING[p]
    except KeyError:
        mask = 0
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                mask |= 1 << i
        _STARTING[p] = mask
        return mask


def finishing_mask(p: Perm) -> int:
    """Bitmask of the finishing set: descents of the inverse permutation."""
    try:
        return _FINISHING[p]
    except KeyError:
        mask = starting_mask(invert_perm(p))
        _FINISHING[p] = mask
        return mask


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def is_left_weighted_perm(a: Perm, b: Perm) -> bool:
    """True iff the pair (a, b) is left-weighted: S(b) is a subset of F(a)."""
    return starting_mask(b) & ~finishing_mask(a) == 0


def left_divides_perm(a: Perm, b: Perm) -> bool:
    """a left-divides b, by additivity of inversion counts."""
    q = braid_mul(invert_perm(a), b)
    return inv_count(a) + inv_count(q) == inv_count(b)


def right_divides_perm(a: Perm, b: Perm) -> bool:
    """b is a suffix of a (a >= b in the suffix order)."""
    q = braid_mul(a, invert_perm(b))
    return inv_count(q) + inv_count(b) == inv_count(a)


def meet_perm(a: Perm, b: Perm) -> Perm:
    """Greatest common prefix of two simple braids.

    Greedy extraction of common starting atoms: any generator dividing both
    operands divides the meet, and each extraction strictly shortens the
    operands, so the loop reaches the meet in at most inv(a) steps.
    """
    n = len(a)
    x, y = list(a), list(b)
    m = list(range(1, n + 1))
    minv = list(range(1, n + 1))
    while True:
        common = starting_mask(tuple(x)) & starting_mask(tuple(y))
        if not common:
            return tuple(m)
        i = (common & -common).bit_length()  # lowest common atom, 1-based
        x[i - 1], x[i] = x[i], x[i - 1]
        y[i - 1], y[i] = y[i], y[i - 1]
        # append sigma_i on the right of m: swap the values i, i+1
        pi, pj = minv[i - 1] - 1, minv[i] - 1
        m[pi], m[pj] = m[pj], m[pi]
        minv[i - 1], minv[i] = minv[i], minv[i - 1]


def local_move(a: Perm, b: Perm) -> tuple[Perm, Perm] | None:
    """One left-weighting step on the pair (a, b).

    Transfers t = complement(a) ^ b from the head of b to the tail of a.
    Returns the new pair, or None when (a, b) is already left-weighted.
    """
    key = (a, b)
    try:
        return _MOVE[key]
    except KeyError:
        t = meet_perm(complement_perm(a), b)
        if is_identity(t):
            res = None
        else:
            res = (braid_mul(a, t), braid_mul(invert_perm(t), b))
        _MOVE[key] = res
        return res


def canonical_word(p: Perm) -> tuple[int, ...]:
    """Deterministic reduced word for a simple braid.

    Inversion-table order: for each target position j = 2..n in increasing
    order, emit the descending run sigma_{j-1} ... sigma_{j-c} where c counts
    the inversions (i < j, p(i) > p(j)).  Output length equals inv_count(p).
    """
    try:
        return _WORD[p]
    except KeyError:
        w: list[int] = []
        for j in range(1, len(p)):
            c = sum(1 for i in range(j) if p[i] > p[j])
            w.extend(range(j, j - c, -1))
        out = _WORD[p] = tuple(w)
        return out


def perm_from_word(n: int, letters) -> Perm:
    """Evaluate a positive word (1-based generator indices) to a permutation."""
    occ = list(range(1, n + 1))  # occ[pos0] = strand currently at pos0+1
    for i in letters:
        if not 1 <= i < n:
            raise ValueError(f"generator index {i} out of range for {n} strands")
        occ[i - 1], occ[i] = occ[i], occ[i - 1]
    out = [0] * n
    for pos0, strand in enumerate(occ):
        out[strand - 1] = pos0 + 1
    return tuple(out)


def crossing_pairs(n: int, letters) -> set[frozenset[int]]:
    """Pairs of strands (by starting position) that cross in a positive word."""
    occ = list(range(1, n + 1))
    crossed: set[frozenset[int]] = set()
    for i in letters:
        crossed.add(frozenset((occ[i - 1], occ[i])))
        occ[i - 1], occ[i] = occ[i], occ[i - 1]
    return crossed


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations of 1..n in lexicographic order."""
    from itertools import permutations

    return iter(permutations(range(1, n + 1)))
