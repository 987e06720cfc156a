"""Piece decomposition, non-intrusive rigidification, and blocking braids.

A braid of canonical length l >= 5 is cut into five consecutive pieces
P1 P2 P3 P4 P5 of roughly equal size.  Rotating the last two pieces to the
front produces a conjugate that is rigid whenever the normal-form
recomputation stays confined between P5 and P1; the observation test below
detects exactly that.  Blocking braids are the reason the confinement is
generic: once one occurs inside a piece, the rewriting chain reaction cannot
cross it.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import permutations as pm
from .normal import (
    NormalForm,
    complement,
    contains_factor_subword,
    final_factor,
    gcd,
    initial_factor,
    inverse,
    max_simple_suffix,
    multiply,
    normalize_letters,
)
from .simple import SimpleBraid


PAPER_CEILING = "paper"
FLOOR_BALANCED = "floor"
SCHEMES = (PAPER_CEILING, FLOOR_BALANCED)

DEFAULT_SCHEME = FLOOR_BALANCED


class TooShortError(ValueError):
    """Canonical length below 5: no piece decomposition exists."""


class SchemeDegenerateError(ValueError):
    """The ceiling-based piece sizes leave no room for a middle piece."""


@dataclass(frozen=True)
class PieceDecomposition:
    """The five-piece cut of a normal form.

    p4_raw and p5_raw are the literal trailing pieces of the normal form;
    p4 and p5 are their tau^eps twists, which is what the rigidification
    criteria work with.  Outer pieces have equal factor counts.
    """

    eps: int
    p1: NormalForm
    p2: NormalForm
    p3: NormalForm
    p4_raw: NormalForm
    p5_raw: NormalForm
    scheme: str

    def _twist(self, piece: NormalForm) -> NormalForm:
        if self.eps % 2 == 0:
            return piece
        n = piece.strand_count
        return NormalForm(
            n,
            0,
            tuple(SimpleBraid(n, pm.tau_perm(f.perm)) for f in piece.factors),
        )

    @property
    def p4(self) -> NormalForm:
        return self._twist(self.p4_raw)

    @property
    def p5(self) -> NormalForm:
        return self._twist(self.p5_raw)

    @property
    def p12(self) -> NormalForm:
        return NormalForm(
            self.p1.strand_count, 0, self.p1.factors + self.p2.factors
        )

    @property
    def p45(self) -> NormalForm:
        p4 = self.p4
        return NormalForm(p4.strand_count, 0, p4.factors + self.p5.factors)

    @property
    def conjugator(self) -> NormalForm:
        """The untwisted tail p4_raw . p5_raw, read off the source braid."""
        return NormalForm(
            self.p1.strand_count, 0, self.p4_raw.factors + self.p5_raw.factors
        )


def _piece_width(l: int, scheme: str) -> int:
    if scheme == PAPER_CEILING:
        k = -(-l // 5)
        if l - 4 * k < 1:
            raise SchemeDegenerateError(
                f"ceiling piece size {k} leaves no middle piece at length {l}"
            )
        return k
    if scheme == FLOOR_BALANCED:
        return l // 5
    raise ValueError(f"unknown scheme {scheme!r}")


def decompose(x: NormalForm, scheme: str = DEFAULT_SCHEME) -> PieceDecomposition:
    """Cut the normal form of x into the five pieces."""
    l = x.canonical_length
    if l < 5:
        raise TooShortError(f"canonical length {l} < 5")
    k = _piece_width(l, scheme)
    n = x.strand_count
    fs = x.factors

    def piece(a: int, b: int) -> NormalForm:
        return NormalForm(n, 0, fs[a:b])

    return PieceDecomposition(
        eps=x.inf_power,
        p1=piece(0, k),
        p2=piece(k, 2 * k),
        p3=piece(2 * k, l - 2 * k),
        p4_raw=piece(l - 2 * k, l - k),
        p5_raw=piece(l - k, l),
        scheme=scheme,
    )


def middle_fifth(x: NormalForm, scheme: str = DEFAULT_SCHEME) -> NormalForm:
    """The middle piece P3 of x, as a positive normal form with infimum 0."""
    return decompose(x, scheme).p3


def is_nonintrusive(
    x: NormalForm, y: NormalForm, scheme: str = DEFAULT_SCHEME
) -> bool:
    """True iff the normal form of y still contains the middle fifth of x."""
    return contains_factor_subword(y, middle_fifth(x, scheme))


def observation_test(
    x: NormalForm, scheme: str = DEFAULT_SCHEME
) -> tuple[NormalForm, NormalForm] | None:
    """Try to rigidify x by rotating its last two pieces to the front.

    Computes z = fn(P4 P5 . P1 P2) and checks that iota(z) = iota(P4 P5) and
    phi(z) = phi(P1 P2).  On success returns ``(rigid, c)`` where
    ``rigid = Delta^eps P4 P5 P1 P2 P3`` in normal form and
    ``c = p4_raw . p5_raw`` satisfies ``rigid = c . x . c^-1``; the result is
    rigid and the conjugation is non-intrusive.  Returns None otherwise.
    """
    pieces = decompose(x, scheme)
    return _observation(pieces)


def _observation(
    pieces: PieceDecomposition,
) -> tuple[NormalForm, NormalForm] | None:
    p45 = pieces.p45
    p12 = pieces.p12
    z = multiply(p45, p12)
    if not z.factors:
        return None
    if initial_factor(z) != initial_factor(p45):
        return None
    if final_factor(z) != final_factor(p12):
        return None
    n = z.strand_count
    rigid = NormalForm(
        n, pieces.eps + z.inf_power, z.factors + pieces.p3.factors
    )
    return rigid, pieces.conjugator


def symmetric_criterion(x: NormalForm, scheme: str = DEFAULT_SCHEME) -> bool:
    """The symmetric sufficient condition for the observation test.

    With t = (P1 P2) ^ complement(P4 P5), requires the final factor of
    t^-1 P1 P2 to equal phi(P1 P2) and the final factor of
    t^-1 complement(P4 P5) to equal phi(complement(P4 P5)).  When this holds
    the observation test is guaranteed to succeed (the converse may fail).
    """
    pieces = decompose(x, scheme)
    p12 = pieces.p12
    dp45 = complement(pieces.p45)
    t = gcd(p12, dp45)
    t_inv = inverse(t)

    def _phi_preserved(y: NormalForm) -> bool:
        reduced = multiply(t_inv, y)
        return bool(reduced.factors) and final_factor(reduced) == final_factor(y)

    return _phi_preserved(p12) and _phi_preserved(dp45)


def prefix_of_complement(x: NormalForm, scheme: str = DEFAULT_SCHEME) -> bool:
    """True iff P1 is a prefix of the complement of P5 (the rare event)."""
    pieces = decompose(x, scheme)
    dp5 = complement(pieces.p5)
    return gcd(pieces.p1, dp5) == pieces.p1


# ---------------------------------------------------------------------------
# blocking braids

def _half_twist_letters(j: int) -> list[int]:
    """Reduced word of the half-twist on strands 1..j."""
    out: list[int] = []
    for top in range(j - 1, 0, -1):
        out.extend(range(1, top + 1))
    return out


def blocking_braid_factor_words(n: int) -> list[list[int]]:
    """Letter lists of the blocking-braid factors, one list per factor."""
    if n < 4:
        raise ValueError("the blocking construction needs at least 4 strands")
    words = [_half_twist_letters(n - 1) + [n - 1]]
    for j in range(2, n - 1):
        words.append(_half_twist_letters(n - j) + [n - j + 1, n - j])
    words.append([2])
    return words


def blocking_braid(n: int) -> NormalForm:
    """The explicit blocking braid on n >= 4 strands.

    The word is simultaneously in left and right normal form, its starting
    set is {1..n-2} and its finishing set is {2}: any normal form extended by
    it on the right admits sigma_2 as its only nontrivial simple suffix.
    """
    words = blocking_braid_factor_words(n)
    letters = [i for w in words for i in w]
    braid = normalize_letters(n, letters)
    expected = tuple(pm.perm_from_word(n, w) for w in words)
    if braid.inf_power != 0 or braid.factor_perms() != expected:
        raise AssertionError("blocking construction is not left normal as written")
    return braid


def verify_blocking(candidate: NormalForm, max_prefix_len: int) -> bool:
    """Exhaustively check the blocking property up to a prefix length bound.

    Enumerates every X with inf(X) = 0 and len(X) <= max_prefix_len such
    that X . candidate is in normal form as a concatenation, and checks that
    the maximal simple suffix of X . candidate is one fixed generator
    sigma_i throughout (X empty included).
    """
    n = candidate.strand_count
    if candidate.inf_power != 0 or not candidate.factors:
        return False
    base = max_simple_suffix(candidate)
    if base.word_length != 1:
        return False
    target = base.perm

    head = candidate.factors[0].perm
    need = pm.starting_mask(head)
    proper = [p for p in pm.all_perms(n) if not pm.is_identity(p) and not pm.is_delta(p)]
    enders = [p for p in proper if need & ~pm.finishing_mask(p) == 0]

    def _check(prefix_perms: tuple[pm.Perm, ...]) -> bool:
        braid = NormalForm(
            n,
            0,
            tuple(SimpleBraid(n, q) for q in prefix_perms) + candidate.factors,
        )
        return max_simple_suffix(braid).perm == target

    stack: list[tuple[pm.Perm, ...]] = [(p,) for p in enders]
    while stack:
        prefix = stack.pop()
        if not _check(prefix):
            return False
        if len(prefix) < max_prefix_len:
            first = prefix[0]
            mask = pm.starting_mask(first)
            stack.extend(
                (q,) + prefix
                for q in proper
                if mask & ~pm.finishing_mask(q) == 0
            )
    return True


def search_blocking_braids(n: int, max_len: int, max_prefix_len: int):
    """Bounded exhaustive search for blocking braids (expensive; no claims).

    Yields every positive braid with infimum 0 and canonical length up to
    max_len that passes verify_blocking at the given prefix bound.  Useful
    for probing small strand counts the explicit construction does not cover.
    """
    from .census import enumerate_sphere

    for l in range(1, max_len + 1):
        for x in enumerate_sphere(n, l):
            if verify_blocking(x, max_prefix_len):
                yield x
