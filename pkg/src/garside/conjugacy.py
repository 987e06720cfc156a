"""Generic fast conjugacy: rigid certificates and the pair solver.

The five-step procedure rigidifies a long braid by rotating its last two
fifths to the front (steps 1-3 are the observation test), then looks inside
the untouched middle piece for a factor pair of the form
``(Delta sigma_j^-1) . sigma_i``.  After rotating that pair to the seam the
initial factor and the complement of the final factor are single Artin
generators, which have no strict prefixes; this certifies that the set of
rigid conjugates is exactly one cycling/tau orbit, making orbit membership a
complete conjugacy test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import permutations as pm
from .genericity import DEFAULT_SCHEME, _observation, decompose
from .normal import (
    NormalForm,
    conjugate,
    inverse,
    is_rigid,
    multiply,
    rigid_orbit_with_conjugators,
)
from .simple import SimpleBraid

CERTIFIED = "certified"
RIGID_NO_CERT = "rigid-no-cert"

CONJUGATE = "conjugate"
NOT_CONJUGATE = "not_conjugate"
UNKNOWN = "unknown"

WitnessPattern = tuple[SimpleBraid, SimpleBraid]


@dataclass(frozen=True)
class ConjugacyCertificate:
    """A rigid conjugate plus the conjugating element, re-checkable at will.

    The stored relation is ``rigid = conjugator . source . conjugator^-1``.
    uniqueness == "certified" guarantees that the rigid conjugates of the
    source form exactly the cycling/tau orbit of `rigid`; witness_position
    then records where the certifying factor pair sat inside the middle
    piece.
    """

    rigid: NormalForm
    conjugator: NormalForm
    uniqueness: str
    witness_position: int | None = None

    def __post_init__(self):
        if self.uniqueness not in (CERTIFIED, RIGID_NO_CERT):
            raise ValueError(f"bad uniqueness tag {self.uniqueness!r}")
        if self.uniqueness == CERTIFIED and self.witness_position is None:
            raise ValueError("certified certificates need a witness position")

    def verify(self, source: NormalForm) -> bool:
        """Re-check rigidity and the stored conjugation against `source`."""
        return is_rigid(self.rigid) and verify_conjugator(
            source, self.rigid, self.conjugator
        )


@dataclass(frozen=True)
class ConjugacyAnswer:
    """Outcome of the pair solver.

    `conjugate` answers carry a braid c with c . x1 . c^-1 = x2;
    `not_conjugate` is only ever emitted when both inputs were certified.
    """

    kind: str
    conjugator: NormalForm | None = None

    def __post_init__(self):
        if self.kind not in (CONJUGATE, NOT_CONJUGATE, UNKNOWN):
            raise ValueError(f"bad answer kind {self.kind!r}")
        if (self.kind == CONJUGATE) != (self.conjugator is not None):
            raise ValueError("conjugator present iff the answer is 'conjugate'")


def verify_conjugator(x: NormalForm, y: NormalForm, c: NormalForm) -> bool:
    """True iff conjugating x by c gives y, i.e. c . x . c^-1 = y."""
    return conjugate(x, c) == y


def default_witness_patterns(n: int) -> tuple[WitnessPattern, ...]:
    """All factor pairs (Delta sigma_j^-1, sigma_i) with i != j."""
    out = []
    for j in range(1, n):
        big = SimpleBraid(n, pm.delta_sigma_inv_perm(n, j))
        for i in range(1, n):
            if i != j:
                out.append((big, SimpleBraid(n, pm.sigma_perm(n, i))))
    return tuple(out)


def strict_witness_patterns(n: int) -> tuple[WitnessPattern, ...]:
    """Only (Delta sigma_2^-1, sigma_1) and its tau mirror."""
    pats = {
        (
            SimpleBraid(n, pm.delta_sigma_inv_perm(n, 2)),
            SimpleBraid(n, pm.sigma_perm(n, 1)),
        ),
        (
            SimpleBraid(n, pm.delta_sigma_inv_perm(n, n - 2)),
            SimpleBraid(n, pm.sigma_perm(n, n - 1)),
        ),
    }
    return tuple(sorted(pats, key=lambda p: (p[0].perm, p[1].perm)))


def _rotate_rigid(
    rigid: NormalForm, t: int
) -> tuple[NormalForm, NormalForm]:
    """Cycle a rigid braid t times; returns (result, g) with result = g rigid g^-1.

    For rigid braids cycling is a pure rotation of the factors, and the
    accumulated conjugating element is tau^-p(x1...xt)^-1.
    """
    n = rigid.strand_count
    p = rigid.inf_power
    head = rigid.factors[:t]
    twisted = tuple(
        SimpleBraid(n, pm.tau_perm_pow(f.perm, p)) for f in head
    )
    rotated = NormalForm(n, p, rigid.factors[t:] + twisted)
    g = inverse(NormalForm(n, 0, twisted))
    return rotated, g


def fast_rigid_conjugate(
    x: NormalForm,
    witness_patterns: Sequence[WitnessPattern] | None = None,
    scheme: str = DEFAULT_SCHEME,
) -> ConjugacyCertificate | None:
    """The quadratic-time rigidification with orbit-uniqueness certificate.

    Returns None ("I don't know") when the braid is too short or the
    observation test fails.  Otherwise the rigid conjugate is returned; if
    some witness pattern occurs as a consecutive factor pair of the middle
    piece, the result is rotated so the pattern sits at the seam and the
    certificate is marked `certified`.
    """
    if x.canonical_length < 5:
        return None
    pieces = decompose(x, scheme)
    got = _observation(pieces)
    if got is None:
        return None
    rigid, conj = got
    n = x.strand_count
    patterns = (
        default_witness_patterns(n)
        if witness_patterns is None
        else tuple(witness_patterns)
    )
    pairset = {(a.perm, b.perm) for a, b in patterns}
    p3 = pieces.p3.factor_perms()
    pos = next(
        (
            j
            for j in range(len(p3) - 1)
            if (p3[j], p3[j + 1]) in pairset
        ),
        None,
    )
    if pos is None:
        cert = ConjugacyCertificate(rigid, conj, RIGID_NO_CERT)
    else:
        seam = rigid.canonical_length - len(p3) + pos + 1
        rotated, g = _rotate_rigid(rigid, seam)
        cert = ConjugacyCertificate(rotated, multiply(g, conj), CERTIFIED, pos)
    # every emitted certificate is checked, never assumed
    if not cert.verify(x):
        raise AssertionError("rigidification certificate failed verification")
    return cert


def solve_conjugacy(
    x1: NormalForm,
    x2: NormalForm,
    witness_patterns: Sequence[WitnessPattern] | None = None,
    scheme: str = DEFAULT_SCHEME,
) -> ConjugacyAnswer:
    """Decide conjugacy of two braids through their rigid certificates.

    Both inputs must certify; the certified orbit is a complete conjugacy
    invariant, so membership of one rigid conjugate in the other's orbit
    settles the question either way.  Conjugators are assembled from both
    certificates and the orbit path, and verified before being returned.
    """
    if x1.strand_count != x2.strand_count:
        raise ValueError("strand counts differ")
    c1 = fast_rigid_conjugate(x1, witness_patterns, scheme)
    c2 = fast_rigid_conjugate(x2, witness_patterns, scheme)
    if (
        c1 is None
        or c2 is None
        or c1.uniqueness != CERTIFIED
        or c2.uniqueness != CERTIFIED
    ):
        return ConjugacyAnswer(UNKNOWN)
    z1, z2 = c1.rigid, c2.rigid
    if (z1.inf_power, z1.canonical_length) != (z2.inf_power, z2.canonical_length):
        return ConjugacyAnswer(NOT_CONJUGATE)
    orbit = rigid_orbit_with_conjugators(z1)
    if z2 not in orbit:
        return ConjugacyAnswer(NOT_CONJUGATE)
    d = orbit[z2]  # z2 = d . z1 . d^-1
    c = multiply(inverse(c2.conjugator), multiply(d, c1.conjugator))
    if not verify_conjugator(x1, x2, c):
        raise AssertionError("assembled conjugator failed verification")
    return ConjugacyAnswer(CONJUGATE, c)
