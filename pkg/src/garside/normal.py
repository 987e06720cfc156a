"""Left normal forms for arbitrary braids.

Every braid has a unique writing ``Delta^p x1 ... xr`` where the xi are
simple braids distinct from 1 and Delta and every consecutive pair is
left-weighted.  NormalForm stores exactly this data, so structural equality
is braid equality and no separate word-problem routine is needed.

Normalisation is the standard left-greedy rewriting: the pairwise move
``(a, b) -> (a t, t^-1 b)`` with ``t = complement(a) ^ b`` is applied with
local backtracking until every pair is left-weighted; Delta factors migrate
to the front and trivial factors are dropped.  The cost is quadratic in the
input length, with memoised pair operations doing the heavy lifting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import permutations as pm
from .simple import ArtinWord, SimpleBraid


class EmptyNormalFormError(ValueError):
    """Raised when an initial/final factor of a length-0 braid is requested."""


@dataclass(frozen=True)
class NormalForm:
    """A braid in left normal form: Delta^inf_power followed by the factors."""

    strand_count: int
    inf_power: int
    factors: tuple[SimpleBraid, ...]

    def __post_init__(self):
        n = self.strand_count
        if n < 2:
            raise ValueError("need at least 2 strands")
        object.__setattr__(self, "factors", tuple(self.factors))
        prev = None
        for f in self.factors:
            if f.strand_count != n:
                raise ValueError("factor strand count mismatch")
            if not f.is_proper():
                raise ValueError(f"factor {f!r} is trivial or Delta")
            if prev is not None and not pm.is_left_weighted_perm(prev, f.perm):
                raise ValueError("factors are not left-weighted")
            prev = f.perm

    @property
    def inf(self) -> int:
        return self.inf_power

    @property
    def sup(self) -> int:
        return self.inf_power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.inf_power == 0 and not self.factors

    def factor_perms(self) -> tuple[pm.Perm, ...]:
        return tuple(f.perm for f in self.factors)

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        return multiply(self, other)

    def __pow__(self, k: int) -> "NormalForm":
        return power(self, k)

    def __repr__(self) -> str:
        return f"NormalForm({self.strand_count}, {render(self)!r})"


# ---------------------------------------------------------------------------
# construction

def _nf(n: int, p: int, perms: Iterable[pm.Perm]) -> NormalForm:
    return NormalForm(n, p, tuple(SimpleBraid(n, q) for q in perms))


def identity_nf(n: int) -> NormalForm:
    return NormalForm(n, 0, ())


def delta_nf(n: int, k: int = 1) -> NormalForm:
    """Delta^k as a normal form."""
    if n < 2:
        raise ValueError("need at least 2 strands")
    return NormalForm(n, k, ())


def from_simple(s: SimpleBraid) -> NormalForm:
    if s.is_trivial():
        return identity_nf(s.strand_count)
    if s.is_delta():
        return delta_nf(s.strand_count)
    return NormalForm(s.strand_count, 0, (s,))


def _normalize_factor_perms(n: int, perms: list[pm.Perm]) -> tuple[int, list[pm.Perm]]:
    """Rewrite a factor sequence to left-weighted form.

    Returns the number of leading Delta factors (merged into the infimum)
    and the remaining proper factors.  Local moves only invalidate the
    neighbouring pairs, so a forward scan with single-step backtracking
    reaches the unique fixpoint.
    """
    idp = pm.identity_perm(n)
    dp = pm.delta_perm(n)
    fs = [q for q in perms if q != idp]
    i = 0
    while i + 1 < len(fs):
        mv = pm.local_move(fs[i], fs[i + 1])
        if mv is None:
            i += 1
            continue
        a2, b2 = mv
        fs[i] = a2
        if b2 == idp:
            del fs[i + 1]
        else:
            fs[i + 1] = b2
        if i:
            i -= 1
    d = 0
    while fs and fs[0] == dp:
        d += 1
        del fs[0]
    return d, fs


def normalize_letters(n: int, letters: Iterable[int]) -> NormalForm:
    """Normal form of a signed word in the Artin generators."""
    factors: list[pm.Perm] = []
    dpows: list[int] = []
    for x in letters:
        i = abs(x)
        if x > 0:
            factors.append(pm.sigma_perm(n, i))
            dpows.append(0)
        else:
            # sigma_i^-1 = Delta^-1 . (Delta sigma_i^-1)
            factors.append(pm.delta_sigma_inv_perm(n, i))
            dpows.append(-1)
    # Commute the Delta^-1 powers to the front; each crossing applies tau.
    total = 0
    for j in range(len(factors) - 1, -1, -1):
        if total % 2:
            factors[j] = pm.tau_perm(factors[j])
        total += dpows[j]
    d, proper = _normalize_factor_perms(n, factors)
    return _nf(n, total + d, proper)


def normalize(word: ArtinWord) -> NormalForm:
    """The unique left normal form of the braid represented by the word."""
    return normalize_letters(word.strand_count, word.letters)


# ---------------------------------------------------------------------------
# arithmetic

def _check_same_group(x: NormalForm, y: NormalForm) -> None:
    if x.strand_count != y.strand_count:
        raise ValueError(
            f"strand counts differ: {x.strand_count} vs {y.strand_count}"
        )


def multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    """Normal form of the product x . y."""
    _check_same_group(x, y)
    n = x.strand_count
    q = y.inf_power
    perms = [pm.tau_perm_pow(f.perm, q) for f in x.factors]
    perms.extend(f.perm for f in y.factors)
    d, proper = _normalize_factor_perms(n, perms)
    return _nf(n, x.inf_power + q + d, proper)


def _complement_perms(x: NormalForm) -> list[pm.Perm]:
    """Factor permutations of the complement, rightmost source factor first."""
    fs = x.factor_perms()
    r = len(fs)
    return [
        pm.tau_perm_pow(pm.complement_perm(fs[r - j]), j - 1) for j in range(1, r + 1)
    ]


def complement(y: NormalForm) -> NormalForm:
    """The unique braid dy with y . dy = Delta^sup(y).

    Depends only on the factors of y; inf(dy) = 0 and sup(dy) = len(y).
    """
    n = y.strand_count
    d, proper = _normalize_factor_perms(n, _complement_perms(y))
    return _nf(n, d, proper)


def inverse(x: NormalForm) -> NormalForm:
    """Group inverse: x^-1 = Delta^-sup(x) . tau^sup(x)(complement factors)."""
    n = x.strand_count
    s = x.sup
    perms = [pm.tau_perm_pow(q, s) for q in _complement_perms(x)]
    d, proper = _normalize_factor_perms(n, perms)
    return _nf(n, -s + d, proper)


def power(x: NormalForm, k: int) -> NormalForm:
    acc = identity_nf(x.strand_count)
    base = x if k >= 0 else inverse(x)
    e = abs(k)
    while e:
        if e & 1:
            acc = multiply(acc, base)
        base = multiply(base, base)
        e >>= 1
    return acc


def conjugate(x: NormalForm, c: NormalForm) -> NormalForm:
    """The conjugate of x by c, namely c . x . c^-1."""
    return multiply(multiply(c, x), inverse(c))


# ---------------------------------------------------------------------------
# structure

def initial_factor(x: NormalForm) -> SimpleBraid:
    """iota(x) = tau^-inf(x)(x1)."""
    if not x.factors:
        raise EmptyNormalFormError("initial factor of a Delta power")
    return SimpleBraid(
        x.strand_count, pm.tau_perm_pow(x.factors[0].perm, x.inf_power)
    )


def final_factor(x: NormalForm) -> SimpleBraid:
    """phi(x) = xr, the last normal-form factor."""
    if not x.factors:
        raise EmptyNormalFormError("final factor of a Delta power")
    return x.factors[-1]


def is_rigid(x: NormalForm) -> bool:
    """True iff the pair (phi(x), iota(x)) is left-weighted."""
    if not x.factors:
        raise EmptyNormalFormError("rigidity of a Delta power")
    return pm.is_left_weighted_perm(
        final_factor(x).perm, initial_factor(x).perm
    )


def is_in_normal_form_as_concatenation(x: NormalForm, y: NormalForm) -> bool:
    """True iff the word "normal form of x, then normal form of y" is normal.

    Requires inf(y) = 0 and both parts nonempty; the test reduces to
    S(first factor of y) being contained in F(last factor of x).
    """
    _check_same_group(x, y)
    if y.inf_power != 0:
        raise ValueError("right operand must have infimum 0")
    if not x.factors or not y.factors:
        raise ValueError("both operands must have positive canonical length")
    return pm.is_left_weighted_perm(x.factors[-1].perm, y.factors[0].perm)


def gcd(x: NormalForm, y: NormalForm) -> NormalForm:
    """Greatest common prefix of x and y.

    Delta^m with m = min(inf x, inf y) is factored out first, the positive
    remainder is handled by greedy extraction of common starting atoms.
    """
    _check_same_group(x, y)
    n = x.strand_count
    m = min(x.inf_power, y.inf_power)
    u = NormalForm(n, x.inf_power - m, x.factors)
    v = NormalForm(n, y.inf_power - m, y.factors)
    atoms: list[int] = []
    while True:
        su = _head_mask(u)
        sv = _head_mask(v)
        common = su & sv
        if not common:
            break
        i = (common & -common).bit_length()
        u = _divide_by_atom(u, i)
        v = _divide_by_atom(v, i)
        atoms.append(i)
    return multiply(delta_nf(n, m), normalize_letters(n, atoms))


def _head_mask(x: NormalForm) -> int:
    """Bitmask of atoms dividing a positive braid on the left."""
    if x.inf_power > 0:
        return pm.full_mask(x.strand_count)
    if not x.factors:
        return 0
    return pm.starting_mask(x.factors[0].perm)


def _divide_by_atom(x: NormalForm, i: int) -> NormalForm:
    return multiply(normalize_letters(x.strand_count, (-i,)), x)


def cycling(x: NormalForm) -> NormalForm:
    """Conjugate of x by its initial factor: Delta^p x2 ... xr tau^-p(x1)."""
    if not x.factors:
        raise EmptyNormalFormError("cycling of a Delta power")
    n = x.strand_count
    p = x.inf_power
    perms = [f.perm for f in x.factors[1:]]
    perms.append(pm.tau_perm_pow(x.factors[0].perm, p))
    d, proper = _normalize_factor_perms(n, perms)
    return _nf(n, p + d, proper)


def tau_conjugate(x: NormalForm) -> NormalForm:
    """Conjugate of x by Delta (the tau automorphism applied to x)."""
    return NormalForm(
        x.strand_count,
        x.inf_power,
        tuple(SimpleBraid(x.strand_count, pm.tau_perm(f.perm)) for f in x.factors),
    )


def rigid_orbit(z: NormalForm) -> set[NormalForm]:
    """Closure of a rigid braid under cycling and tau; at most 2 len(z) braids."""
    return set(rigid_orbit_with_conjugators(z))


def rigid_orbit_with_conjugators(z: NormalForm) -> dict[NormalForm, NormalForm]:
    """Rigid orbit mapping each member m to a braid g with m = g . z . g^-1."""
    if not is_rigid(z):
        raise ValueError("rigid_orbit requires a rigid braid")
    n = z.strand_count
    seen: dict[NormalForm, NormalForm] = {z: identity_nf(n)}
    queue = [z]
    while queue:
        m = queue.pop()
        g = seen[m]
        steps = (
            (cycling(m), inverse(from_simple(initial_factor(m)))),
            (tau_conjugate(m), delta_nf(n, -1)),
        )
        for m2, h in steps:
            if m2 not in seen:
                seen[m2] = multiply(h, g)
                queue.append(m2)
    return seen


def contains_factor_subword(x: NormalForm, w: NormalForm) -> bool:
    """True iff the factor sequence of w occurs contiguously in that of x."""
    if w.inf_power != 0:
        raise ValueError("subword must have infimum 0")
    needle = w.factor_perms()
    if not needle:
        return True
    hay = x.factor_perms()
    k = len(needle)
    return any(hay[i : i + k] == needle for i in range(len(hay) - k + 1))


def max_simple_suffix(x: NormalForm) -> SimpleBraid:
    """The maximal simple right-divisor of a positive braid.

    Computed through the reversal anti-automorphism: the first factor of the
    left normal form of the reversed word, read backwards.
    """
    n = x.strand_count
    if x.inf_power < 0 or x.is_identity():
        raise ValueError("max_simple_suffix needs a nontrivial positive braid")
    if x.inf_power >= 1:
        return SimpleBraid(n, pm.delta_perm(n))
    letters: list[int] = []
    for f in x.factors:
        letters.extend(pm.canonical_word(f.perm))
    rev = normalize_letters(n, reversed(letters))
    if rev.inf_power >= 1:
        return SimpleBraid(n, pm.delta_perm(n))
    return SimpleBraid(n, pm.invert_perm(rev.factors[0].perm))


def noncrossing_pair_exists(x: NormalForm) -> tuple[int, int] | None:
    """A pair of strand start-positions that never cross in x.

    Requires a positive braid with exactly two proper factors; such a braid
    always leaves some pair of strands uncrossed.  Returns the
    lexicographically smallest pair.
    """
    n = x.strand_count
    if x.inf_power != 0 or x.canonical_length != 2:
        raise ValueError("need a positive braid with exactly two proper factors")
    letters: list[int] = []
    for f in x.factors:
        letters.extend(pm.canonical_word(f.perm))
    crossed = pm.crossing_pairs(n, letters)
    for r in range(1, n + 1):
        for s in range(r + 1, n + 1):
            if frozenset((r, s)) not in crossed:
                return (r, s)
    return None


# ---------------------------------------------------------------------------
# text format

def word_of(x: NormalForm) -> ArtinWord:
    """A signed word evaluating to x (Delta powers expanded)."""
    n = x.strand_count
    delta_letters = pm.canonical_word(pm.delta_perm(n))
    letters: list[int] = []
    if x.inf_power >= 0:
        letters.extend(list(delta_letters) * x.inf_power)
    else:
        letters.extend([-i for i in reversed(delta_letters)] * (-x.inf_power))
    for f in x.factors:
        letters.extend(pm.canonical_word(f.perm))
    return ArtinWord(n, tuple(letters))


def render(x: NormalForm) -> str:
    """Stable textual form: ``D^p | w1 . w2 . ... . wr``.

    Each factor is printed as its canonical reduced word, space-separated.
    """
    parts = [" ".join(map(str, pm.canonical_word(f.perm))) for f in x.factors]
    body = " " + " . ".join(parts) if parts else ""
    return f"D^{x.inf_power} |{body}"


def parse_normal_form(text: str, n: int) -> NormalForm:
    """Parse the render() format back into a NormalForm."""
    head, sep, rest = text.partition("|")
    head = head.strip()
    if not sep or not head.startswith("D^"):
        raise ValueError(f"malformed normal form text: {text!r}")
    p = int(head[2:])
    perms = []
    rest = rest.strip()
    if rest:
        for part in rest.split("."):
            letters = [int(tok) for tok in part.split()]
            perms.append(pm.perm_from_word(n, letters))
    return _nf(n, p, perms)
