"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import random

import pytest

import garside as g
from garside import permutations as pm

# The worked conjugation example used as a golden vector throughout:
# a 4-strand braid of canonical length 5, its rigid conjugate, and the
# conjugating tail.  Factor words are spelled letter for letter.
EX_N = 4
EX_X_FACTOR_WORDS = (
    (2, 3, 2, 1),
    (1, 3, 2, 1),
    (1, 2, 1, 3, 2),
    (3, 2, 1, 3),
    (1, 3, 2, 1),
)
EX_XT_INF = 1
EX_XT_FACTOR_WORDS = (
    (1, 2, 3, 1),
    (1, 3),
    (1, 3, 2, 1),
    (1, 2, 1, 3, 2),
)
EX_CONJ_FACTOR_WORDS = ((3, 2, 1, 3), (1, 3, 2, 1))
EX_MIDDLE_WORD = (1, 2, 1, 3, 2)


def _from_factor_words(n, inf, words):
    return g.NormalForm(
        n, inf, tuple(g.simple_from_letters(n, w) for w in words)
    )


@pytest.fixture(scope="session")
def ex_x():
    return _from_factor_words(EX_N, 0, EX_X_FACTOR_WORDS)


@pytest.fixture(scope="session")
def ex_xt():
    return _from_factor_words(EX_N, EX_XT_INF, EX_XT_FACTOR_WORDS)


@pytest.fixture(scope="session")
def ex_conjugator():
    return _from_factor_words(EX_N, 0, EX_CONJ_FACTOR_WORDS)


# ---------------------------------------------------------------------------
# independent oracles (reduced-word peeling; no shared code path with the
# production divisibility predicates)

def reduced_prefix_perms(p: pm.Perm) -> set[pm.Perm]:
    """All prefixes of reduced words of p, as permutations.

    Peels single letters off the left using raw inversion counting only:
    sigma_i can start a reduced word of q iff swapping entries i, i+1 of q
    drops the inversion count by one.
    """
    n = len(p)
    seen_remainders = {p}
    stack = [p]
    while stack:
        q = stack.pop()
        for i in range(n - 1):
            if pm.inv_count(q) == 0:
                break
            swapped = list(q)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            swapped = tuple(swapped)
            if pm.inv_count(swapped) == pm.inv_count(q) - 1:
                if swapped not in seen_remainders:
                    seen_remainders.add(swapped)
                    stack.append(swapped)
    # prefix = p . remainder^-1
    return {pm.braid_mul(p, pm.invert_perm(r)) for r in seen_remainders}


def oracle_left_divides(a: pm.Perm, b: pm.Perm) -> bool:
    return a in reduced_prefix_perms(b)


def oracle_right_divides(a: pm.Perm, b: pm.Perm) -> bool:
    # b is a suffix of a iff rev(b) is a prefix of rev(a); rev inverts perms
    return pm.invert_perm(b) in reduced_prefix_perms(pm.invert_perm(a))


def oracle_left_weighted(a: pm.Perm, b: pm.Perm) -> bool:
    """Definitional check: no sigma_i with a.sigma_i and sigma_i^-1.b simple."""
    n = len(a)
    for i in range(1, n):
        grown = pm.braid_mul(a, pm.sigma_perm(n, i))
        if pm.inv_count(grown) != pm.inv_count(a) + 1:
            continue
        shrunk = list(b)
        shrunk[i - 1], shrunk[i] = shrunk[i], shrunk[i - 1]
        if pm.inv_count(tuple(shrunk)) == pm.inv_count(b) - 1:
            return False
    return True


def nf_divisors(x: g.NormalForm) -> set[g.NormalForm]:
    """All positive prefixes of a braid, by breadth-first atom extension."""
    n = x.strand_count
    seen = {g.identity_nf(n)}
    frontier = [g.identity_nf(n)]
    while frontier:
        d = frontier.pop()
        for i in range(1, n):
            d2 = g.multiply(d, g.normalize_letters(n, (i,)))
            if d2 in seen:
                continue
            if g.multiply(g.inverse(d2), x).inf_power >= 0:
                seen.add(d2)
                frontier.append(d2)
    return seen


def nf_word_length(x: g.NormalForm) -> int:
    n = x.strand_count
    return sum(f.word_length for f in x.factors) + x.inf_power * (n * (n - 1) // 2)


# ---------------------------------------------------------------------------
# constructive sampler for certified braids

def build_certified(n: int, l: int, rng: random.Random, dense: bool = True):
    """A random braid whose fast rigidification is certified, plus its certificate.

    Walks the normal-form automaton and splices witness factor pairs into the
    middle stretch (densely by default, so short conjugations keep at least
    one pair inside the middle fifth).  Retries until the certificate check
    passes; the walk is deterministic in the supplied rng.
    """
    graph = g.transition_graph(n)
    patterns = g.default_witness_patterns(n)
    pat_idx = [
        (graph.index[a.perm], graph.index[b.perm]) for a, b in patterns
    ]
    lo, hi = l // 3, 2 * l // 3
    for _ in range(400):
        seq: list[int] = []
        while len(seq) < l:
            j = len(seq)
            inject = lo <= j < hi - 1 and (dense and j % 4 == 0 or not dense and j == l // 2)
            if inject:
                options = [
                    (a, b)
                    for a, b in pat_idx
                    if not seq
                    or a in graph.follows[seq[-1]]
                ]
                if options:
                    a, b = options[rng.randrange(len(options))]
                    seq.extend((a, b))
                    continue
            succ = (
                graph.follows[seq[-1]] if seq else range(len(graph.perms))
            )
            succ = list(succ)
            if not succ:
                break
            seq.append(succ[rng.randrange(len(succ))])
        if len(seq) < l:
            continue
        x = g.NormalForm(
            n, 0, tuple(g.SimpleBraid(n, graph.perms[i]) for i in seq[:l])
        )
        cert = g.fast_rigid_conjugate(x)
        if cert is not None and cert.uniqueness == g.CERTIFIED and cert.verify(x):
            return x, cert
    raise AssertionError(f"could not build a certified braid (n={n}, l={l})")
