"""Normal form engine: golden vectors, algebraic laws, and word-problem oracles."""

import random

import pytest
from hypothesis import given, settings, strategies as st

import garside as g
from garside import permutations as pm
from conftest import (
    EX_CONJ_FACTOR_WORDS,
    EX_MIDDLE_WORD,
    EX_X_FACTOR_WORDS,
    EX_XT_FACTOR_WORDS,
    nf_divisors,
    nf_word_length,
)


def _word_strategy():
    return st.integers(3, 5).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.integers(1, n - 1).flatmap(
                    lambda i: st.sampled_from((i, -i))
                ),
                max_size=16,
            ),
        )
    )


def _flatten(words):
    return [x for w in words for x in w]


def test_normalize_golden_example(ex_x, ex_xt):
    n = 4
    x = g.normalize(g.ArtinWord(n, tuple(_flatten(EX_X_FACTOR_WORDS))))
    assert x == ex_x
    assert (x.inf_power, x.canonical_length) == (0, 5)

    xt_word = _flatten(EX_CONJ_FACTOR_WORDS) + _flatten(EX_X_FACTOR_WORDS[:3])
    xt = g.normalize(g.ArtinWord(n, tuple(xt_word)))
    assert xt == ex_xt
    assert (xt.inf_power, xt.canonical_length) == (1, 4)
    assert [tuple(f.perm) for f in xt.factors] == [
        g.simple_from_letters(n, w).perm for w in EX_XT_FACTOR_WORDS
    ]


def test_normalize_trivia():
    assert g.normalize_letters(3, (1, 2, 1)) == g.delta_nf(3)
    assert g.normalize_letters(3, (1, -1)).is_identity()
    assert g.normalize_letters(3, ()).is_identity()


def test_normal_form_validation():
    with pytest.raises(ValueError):
        g.NormalForm(3, 0, (g.delta(3),))
    with pytest.raises(ValueError):
        g.NormalForm(3, 0, (g.identity_simple(3),))
    with pytest.raises(ValueError):
        g.NormalForm(3, 0, (g.sigma(3, 1), g.sigma(3, 2)))  # not left-weighted


def test_multiply_identity_and_inverse():
    x = g.normalize_letters(4, (1, -2, 3, 3, -1))
    assert g.multiply(x, g.identity_nf(4)) == x
    assert g.multiply(g.identity_nf(4), x) == x
    assert g.multiply(x, g.inverse(x)).is_identity()
    assert g.multiply(g.inverse(x), x).is_identity()
    assert g.multiply(
        g.normalize_letters(3, (1,)), g.normalize_letters(3, (2, 1))
    ) == g.delta_nf(3)


def test_inverse_examples():
    assert g.inverse(g.identity_nf(3)).is_identity()
    assert g.inverse(g.delta_nf(3)) == g.delta_nf(3, -1)
    inv = g.inverse(g.normalize_letters(3, (1,)))
    # sigma1^-1 = Delta^-1 . (sigma1 sigma2): check by re-multiplying
    assert inv.inf_power == -1 and inv.canonical_length == 1
    assert inv.factors[0] == g.simple_from_letters(3, (1, 2))
    assert g.multiply(g.normalize_letters(3, (1,)), inv).is_identity()
    x = g.normalize_letters(4, (1, 2, -3, 1))
    assert g.inverse(x).inf_power == -x.sup


@settings(max_examples=60, deadline=None)
@given(_word_strategy(), _word_strategy())
def test_multiply_agrees_with_concatenation(wa, wb):
    n = max(wa[0], wb[0])
    u = [x for x in wa[1]]
    v = [x for x in wb[1]]
    lhs = g.multiply(g.normalize_letters(n, u), g.normalize_letters(n, v))
    assert lhs == g.normalize_letters(n, u + v)


def _mutate(word, n, rng, steps):
    w = list(word)
    for _ in range(steps):
        op = rng.randrange(3)
        if op == 0:
            i = rng.randrange(1, n)
            pos = rng.randrange(len(w) + 1)
            s = rng.choice((1, -1))
            w[pos:pos] = [s * i, -s * i]
        elif op == 1:
            occ = [
                k
                for k in range(len(w) - 2)
                if w[k] > 0
                and w[k + 1] > 0
                and abs(w[k] - w[k + 1]) == 1
                and w[k + 2] == w[k]
            ]
            if occ:
                k = rng.choice(occ)
                i, j = w[k], w[k + 1]
                w[k : k + 3] = [j, i, j]
        else:
            occ = [
                k
                for k in range(len(w) - 1)
                if abs(abs(w[k]) - abs(w[k + 1])) >= 2
            ]
            if occ:
                k = rng.choice(occ)
                w[k], w[k + 1] = w[k + 1], w[k]
    return w


def test_normal_form_invariant_under_relators():
    rng = random.Random(414243)
    for _ in range(400):
        n = rng.choice((3, 4, 5))
        w = [rng.choice((1, -1)) * rng.randrange(1, n) for _ in range(rng.randrange(0, 18))]
        w2 = _mutate(w, n, rng, rng.randrange(1, 10))
        assert g.normalize_letters(n, w) == g.normalize_letters(n, w2)


@settings(max_examples=60, deadline=None)
@given(_word_strategy(), st.randoms(use_true_random=False))
def test_normal_form_invariant_under_relators_hypothesis(word, rng):
    n, w = word
    w2 = _mutate(list(w), n, rng, 6)
    assert g.normalize_letters(n, w) == g.normalize_letters(n, w2)


def test_is_in_normal_form_as_concatenation():
    s1 = g.from_simple(g.sigma(3, 1))
    s2 = g.from_simple(g.sigma(3, 2))
    s21 = g.from_simple(g.simple_from_letters(3, (2, 1)))
    s12 = g.from_simple(g.simple_from_letters(3, (1, 2)))
    assert g.is_in_normal_form_as_concatenation(s1, s1)
    assert not g.is_in_normal_form_as_concatenation(s1, s2)
    assert g.is_in_normal_form_as_concatenation(s21, s12)
    with pytest.raises(ValueError):
        g.is_in_normal_form_as_concatenation(s1, g.delta_nf(3))


def test_initial_final_factor(ex_xt):
    assert g.initial_factor(ex_xt) == g.simple_from_letters(4, (3, 2, 1, 3))
    x = g.normalize_letters(3, (1, 1))
    assert g.initial_factor(x) == g.final_factor(x) == g.sigma(3, 1)
    with pytest.raises(g.EmptyNormalFormError):
        g.initial_factor(g.delta_nf(3))
    with pytest.raises(g.EmptyNormalFormError):
        g.final_factor(g.delta_nf(3))


def test_is_rigid(ex_xt):
    assert g.is_rigid(g.normalize_letters(3, (1, 1)))
    assert not g.is_rigid(g.from_simple(g.simple_from_letters(3, (1, 2))))
    assert g.is_rigid(ex_xt)


def test_gcd_examples():
    x = g.normalize_letters(4, (1, -2, 3))
    assert g.gcd(x, x) == x
    assert g.gcd(
        g.normalize_letters(3, (1,)), g.normalize_letters(3, (2,))
    ).is_identity()
    assert g.gcd(
        g.normalize_letters(4, (1, 2)), g.normalize_letters(4, (1, 3))
    ) == g.normalize_letters(4, (1,))


def test_gcd_against_divisor_enumeration():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.choice((3, 4))
        x = g.sample_sphere(g.SampleConfig(n=n, l=rng.randrange(0, 4), seed=rng.randrange(1 << 30)))
        y = g.sample_sphere(g.SampleConfig(n=n, l=rng.randrange(0, 4), seed=rng.randrange(1 << 30)))
        got = g.gcd(x, y)
        common = nf_divisors(x) & nf_divisors(y)
        assert got in common
        assert nf_word_length(got) == max(nf_word_length(d) for d in common)
        for d in common:
            assert g.multiply(g.inverse(d), got).inf_power >= 0


def test_gcd_delta_shift():
    rng = random.Random(7)
    for _ in range(25):
        n = 4
        x = g.sample_sphere(g.SampleConfig(n=n, l=3, seed=rng.randrange(1 << 30)))
        y = g.sample_sphere(g.SampleConfig(n=n, l=3, seed=rng.randrange(1 << 30)))
        base = g.gcd(x, y)
        for m in (-2, -1, 1, 3):
            shifted = g.gcd(
                g.NormalForm(n, x.inf_power + m, x.factors),
                g.NormalForm(n, y.inf_power + m, y.factors),
            )
            assert shifted == g.multiply(g.delta_nf(n, m), base)


def test_complement_examples():
    assert g.complement(g.delta_nf(3)).is_identity()
    assert g.complement(g.normalize_letters(3, (1,))) == g.normalize_letters(3, (2, 1))
    y = g.normalize_letters(3, (1, 1))
    dy = g.complement(y)
    assert g.multiply(y, dy) == g.delta_nf(3, 2)


def test_complement_properties_random():
    rng = random.Random(606)
    for _ in range(300):
        n = rng.choice((3, 4))
        y = g.sample_sphere(
            g.SampleConfig(n=n, l=rng.randrange(0, 13), eps=rng.randrange(-2, 3),
                           seed=rng.randrange(1 << 30))
        )
        dy = g.complement(y)
        assert g.multiply(y, dy) == g.delta_nf(n, y.sup)
        assert dy.inf_power == 0
        assert dy.canonical_length == y.canonical_length
        # factorwise formula: j-th factor is tau^-(j-1) of the complement
        # of the (l-j+1)-th factor of y
        l = y.canonical_length
        for j in range(1, l + 1):
            want = pm.tau_perm_pow(
                pm.complement_perm(y.factors[l - j].perm), j - 1
            )
            assert dy.factors[j - 1].perm == want
        if l:
            assert g.final_factor(dy) == g.tau_simple(
                g.complement_simple(g.initial_factor(y)), -y.sup + 1
            )


def test_complement_injective_on_fixed_length():
    # the complement restricted to {inf=0, len=k} is a bijection; check
    # injectivity exhaustively for B_3 and by sampling for B_4
    for n, k in ((3, 3), (3, 4)):
        xs = list(g.enumerate_sphere(n, k))
        images = {g.complement(x) for x in xs}
        assert len(images) == len(xs)
        assert all(y.canonical_length == k for y in images)
    rng = random.Random(17)
    seen = {}
    for _ in range(300):
        x = g.sample_sphere(g.SampleConfig(n=4, l=4, seed=rng.randrange(1 << 30)))
        dx = g.complement(x)
        assert seen.setdefault(dx, x) == x


def test_cycling_and_tau_conjugate(ex_xt):
    x = g.normalize_letters(3, (1, 1))
    assert g.cycling(x) == x
    y = g.normalize_letters(4, (1, -2, 3, 1))
    assert g.tau_conjugate(g.tau_conjugate(y)) == y
    assert g.tau_conjugate(y) == g.conjugate(y, g.delta_nf(4, -1))
    # cycling conjugates by the initial factor
    z = ex_xt
    assert g.cycling(z) == g.conjugate(z, g.inverse(g.from_simple(g.initial_factor(z))))
    # one full rotation of a rigid braid with odd infimum lands on its tau image
    w = z
    for _ in range(z.canonical_length):
        w = g.cycling(w)
    assert w == g.tau_conjugate(z)
    for _ in range(z.canonical_length):
        w = g.cycling(w)
    assert w == z
    with pytest.raises(g.EmptyNormalFormError):
        g.cycling(g.delta_nf(4))


def test_rigid_orbit_small():
    z = g.normalize_letters(3, (1, 1))
    orbit = g.rigid_orbit(z)
    assert orbit == {z, g.normalize_letters(3, (2, 2))}
    # central Delta^2 shifts do not change the orbit size
    z2 = g.NormalForm(3, 2, z.factors)
    assert len(g.rigid_orbit(z2)) == 2
    with pytest.raises(ValueError):
        g.rigid_orbit(g.from_simple(g.simple_from_letters(3, (1, 2))))


def test_rigid_orbit_bound_and_membership():
    rng = random.Random(321)
    found = 0
    for _ in range(2000):
        if found >= 60:
            break
        l = rng.randrange(1, 9)
        x = g.sample_sphere(g.SampleConfig(n=4, l=l, seed=rng.randrange(1 << 30)))
        if not g.is_rigid(x):
            continue
        found += 1
        orbit = g.rigid_orbit_with_conjugators(x)
        assert len(orbit) <= 2 * x.canonical_length
        for m, c in orbit.items():
            assert g.is_rigid(m)
            assert g.conjugate(x, c) == m
    assert found >= 60


def test_contains_factor_subword(ex_xt):
    x = g.NormalForm(4, 0, (g.sigma(4, 1),) * 3)
    assert g.contains_factor_subword(x, g.from_simple(x.factors[0]))
    longer = g.NormalForm(4, 0, (g.sigma(4, 1),) * 4)
    assert not g.contains_factor_subword(x, longer)
    mid = g.from_simple(g.simple_from_letters(4, EX_MIDDLE_WORD))
    assert g.contains_factor_subword(ex_xt, mid)
    assert g.contains_factor_subword(x, g.identity_nf(4))
    with pytest.raises(ValueError):
        g.contains_factor_subword(x, g.delta_nf(4))


def test_max_simple_suffix_examples():
    assert g.max_simple_suffix(g.delta_nf(3)) == g.delta(3)
    s = g.simple_from_letters(3, (1, 2))
    assert g.max_simple_suffix(g.from_simple(s)) == s
    assert g.max_simple_suffix(g.normalize_letters(3, (1, 1))) == g.sigma(3, 1)
    with pytest.raises(ValueError):
        g.max_simple_suffix(g.identity_nf(3))
    with pytest.raises(ValueError):
        g.max_simple_suffix(g.normalize_letters(3, (-1,)))


def test_max_simple_suffix_against_exhaustive_divisors():
    rng = random.Random(55)
    for _ in range(40):
        n = rng.choice((3, 4))
        l = rng.randrange(1, 4)
        x = g.sample_sphere(g.SampleConfig(n=n, l=l, seed=rng.randrange(1 << 30)))
        suffixes = [
            s
            for s in g.all_simples(n)
            if g.multiply(x, g.inverse(g.from_simple(s))).inf_power >= 0
        ]
        best = g.max_simple_suffix(x)
        assert best in suffixes
        for s in suffixes:
            assert g.right_divides(best, s)


def test_noncrossing_pair():
    x = g.normalize_letters(3, (1, 1))
    pair = g.noncrossing_pair_exists(x)
    assert pair is not None and pair[0] < pair[1]
    r, s = pair
    assert frozenset((r, s)) not in pm.crossing_pairs(3, (1, 1))

    # the 6-strand staircase forces strands 4 and 6 to cross; the returned
    # pair must genuinely avoid each other
    y = g.normalize_letters(6, (1, 2, 3, 3, 4, 5))
    assert y.canonical_length == 2
    crossed = pm.crossing_pairs(6, (1, 2, 3, 3, 4, 5))
    assert frozenset((4, 6)) in crossed
    got = g.noncrossing_pair_exists(y)
    assert got is not None and frozenset(got) not in crossed

    with pytest.raises(ValueError):
        g.noncrossing_pair_exists(g.normalize_letters(3, (1,)))


@pytest.mark.parametrize("n", [3, 4])
def test_noncrossing_pair_always_exists(n):
    # the two-factor fact behind the prefix-rarity argument, exhaustively
    for x in g.enumerate_sphere(n, 2):
        letters = [i for f in x.factors for i in pm.canonical_word(f.perm)]
        pair = g.noncrossing_pair_exists(x)
        assert pair is not None
        assert frozenset(pair) not in pm.crossing_pairs(n, letters)


def test_render_and_parse(ex_xt):
    assert g.render(g.delta_nf(3)) == "D^1 |"
    assert g.render(g.identity_nf(3)) == "D^0 |"
    assert g.render(g.normalize_letters(3, (2,))) == "D^0 | 2"
    for x in (ex_xt, g.normalize_letters(4, (1, -2, 3, 1, 1, 2))):
        assert g.parse_normal_form(g.render(x), x.strand_count) == x
    with pytest.raises(ValueError):
        g.parse_normal_form("garbage", 3)


def test_word_of_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.choice((3, 4))
        w = [rng.choice((1, -1)) * rng.randrange(1, n) for _ in range(rng.randrange(0, 12))]
        x = g.normalize_letters(n, w)
        assert g.normalize(g.word_of(x)) == x


def test_power():
    x = g.normalize_letters(4, (1, -2, 3))
    assert g.power(x, 0).is_identity()
    assert g.power(x, 3) == g.multiply(g.multiply(x, x), x)
    assert g.power(x, -2) == g.inverse(g.multiply(x, x))
    assert x ** 2 == g.multiply(x, x)
