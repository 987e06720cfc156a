"""Simple (permutation) braids: the finite lattice of divisors of Delta.

A simple braid is a positive braid in which any two strands cross at most
once; these are in bijection with permutations and form the alphabet of
Garside normal forms.  This module exposes the lattice structure (prefix
order, meet), the starting/finishing sets, complement, and the half-twist
automorphism tau.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import permutations as pm


@dataclass(frozen=True)
class ArtinWord:
    """A raw braid word: signed generator letters over a fixed strand count.

    A letter ``+i`` is the positive crossing sigma_i, ``-i`` its inverse.
    """

    strand_count: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strand_count < 2:
            raise ValueError("need at least 2 strands")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not isinstance(x, int) or x == 0 or not 1 <= abs(x) < self.strand_count:
                raise ValueError(
                    f"letter {x!r} out of range for {self.strand_count} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class SimpleBraid:
    """A permutation braid, stored by its one-line permutation."""

    strand_count: int
    perm: pm.Perm

    def __post_init__(self):
        if self.strand_count < 2:
            raise ValueError("need at least 2 strands")
        object.__setattr__(self, "perm", tuple(self.perm))
        if len(self.perm) != self.strand_count:
            raise ValueError("permutation length does not match strand count")
        pm.check_perm(self.perm)

    @property
    def word_length(self) -> int:
        return pm.inv_count(self.perm)

    def is_trivial(self) -> bool:
        return pm.is_identity(self.perm)

    def is_delta(self) -> bool:
        return pm.is_delta(self.perm)

    def is_proper(self) -> bool:
        """Neither trivial nor Delta: allowed as a normal-form factor."""
        return not (self.is_trivial() or self.is_delta())

    def __repr__(self) -> str:
        word = " ".join(map(str, pm.canonical_word(self.perm))) or "e"
        return f"SimpleBraid({self.strand_count}, <{word}>)"


def identity_simple(n: int) -> SimpleBraid:
    return SimpleBraid(n, pm.identity_perm(n))


def delta(n: int) -> SimpleBraid:
    """The positive half-twist Delta; its permutation is i -> n+1-i."""
    if n < 2:
        raise ValueError("need at least 2 strands")
    return SimpleBraid(n, pm.delta_perm(n))


def sigma(n: int, i: int) -> SimpleBraid:
    """The Artin generator sigma_i as a simple braid."""
    return SimpleBraid(n, pm.sigma_perm(n, i))


def all_simples(n: int):
    """All n! simple braids of B_n."""
    return (SimpleBraid(n, p) for p in pm.all_perms(n))


def proper_simples(n: int):
    """The n! - 2 simple braids distinct from 1 and Delta."""
    return (s for s in all_simples(n) if s.is_proper())


def _check_same_group(a: SimpleBraid, b: SimpleBraid) -> None:
    if a.strand_count != b.strand_count:
        raise ValueError(
            f"strand counts differ: {a.strand_count} vs {b.strand_count}"
        )


def multiply_simple(a: SimpleBraid, b: SimpleBraid) -> SimpleBraid:
    """The braid product a . b as a permutation braid.

    Only meaningful when the product is again simple (word lengths add);
    callers that need the general product should use normal forms.
    """
    _check_same_group(a, b)
    return SimpleBraid(a.strand_count, pm.braid_mul(a.perm, b.perm))


def left_divides(a: SimpleBraid, b: SimpleBraid) -> bool:
    """True iff a is a prefix of b (a^-1 b is positive)."""
    _check_same_group(a, b)
    return pm.left_divides_perm(a.perm, b.perm)


def right_divides(a: SimpleBraid, b: SimpleBraid) -> bool:
    """True iff b is a suffix of a (a b^-1 is positive)."""
    _check_same_group(a, b)
    return pm.right_divides_perm(a.perm, b.perm)


def starting_set(s: SimpleBraid) -> frozenset[int]:
    """{ i : sigma_i is a prefix of s }."""
    return pm.mask_to_set(pm.starting_mask(s.perm))


def finishing_set(s: SimpleBraid) -> frozenset[int]:
    """{ i : sigma_i is a suffix of s }."""
    return pm.mask_to_set(pm.finishing_mask(s.perm))


def is_left_weighted(s1: SimpleBraid, s2: SimpleBraid) -> bool:
    """True iff no generator can slide from the head of s2 into the tail of s1.

    Equivalently: S(s2) is contained in F(s1).
    """
    _check_same_group(s1, s2)
    return pm.is_left_weighted_perm(s1.perm, s2.perm)


def meet(a: SimpleBraid, b: SimpleBraid) -> SimpleBraid:
    """The lattice meet: greatest common prefix of a and b."""
    _check_same_group(a, b)
    return SimpleBraid(a.strand_count, pm.meet_perm(a.perm, b.perm))


def complement_simple(s: SimpleBraid) -> SimpleBraid:
    """The complement ds = s^-1 Delta, so that s . ds = Delta."""
    return SimpleBraid(s.strand_count, pm.complement_perm(s.perm))


def tau_simple(s: SimpleBraid, k: int = 1) -> SimpleBraid:
    """tau^k(s): conjugation of s by Delta^k (tau^2 is the identity)."""
    return SimpleBraid(s.strand_count, pm.tau_perm_pow(s.perm, k))


def simple_to_canonical_word(s: SimpleBraid) -> ArtinWord:
    """Deterministic positive reduced word for s (inversion-table order)."""
    return ArtinWord(s.strand_count, pm.canonical_word(s.perm))


def simple_from_letters(n: int, letters) -> SimpleBraid:
    """Evaluate a positive word that must be a reduced word of a simple braid."""
    letters = tuple(letters)
    p = pm.perm_from_word(n, letters)
    if pm.inv_count(p) != len(letters):
        raise ValueError(f"word {letters} is not reduced (not a simple braid)")
    return SimpleBraid(n, p)
