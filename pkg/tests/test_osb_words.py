import json
import random

import pytest
from hypothesis import given, strategies as st

from fsbcat.fsb_core import BMorphism, act, enumerate_hom, identity
from fsbcat.osb_words import (
    LemmaViolation,
    Word,
    enumerate_osb,
    ideal_series,
    iota,
    iota_order_key,
    is_osb_morphism,
    lift_order,
    minimal_elements,
    morphism_leq,
    osb_compose,
    osb_flags,
    principal_ideal_automaton,
    union_accepts,
    word_leq,
    word_leq_bruteforce,
    words_of_length,
)
from fsbcat.series import Polynomial, RationalFunction, pole_set


def W(alpha, text):
    return Word.parse(alpha, text)


def words(alpha=2, max_len=6):
    return st.lists(st.integers(-alpha, alpha), max_size=max_len).map(lambda xs: Word(alpha, tuple(xs)))


@pytest.mark.parametrize("images,expected", [((1, 1), True), ((-1, 1), False), ((0, 1), True), ((1, 0), True)])
def test_osb_examples(images, expected):
    assert is_osb_morphism(BMorphism(2, 1, images)) is expected


def test_osb_flags_split():
    # (ii) fails, (i) holds
    assert osb_flags(BMorphism(2, 2, (2, 1))) == (True, False)
    assert osb_flags(BMorphism(2, 1, (-1, 1))) == (False, True)
    for n in range(4):
        assert is_osb_morphism(identity(n))


def test_osb_compose_example():
    phi = BMorphism(3, 2, (1, 1, 2))
    psi = BMorphism(2, 1, (1, 1))
    assert osb_compose(psi, phi).images == (1, 1, 1)
    with pytest.raises(ValueError):
        osb_compose(psi, BMorphism(3, 2, (2, 1, 1)))


def test_osb_compose_exhaustive():
    for n in range(4):
        for m in range(n + 1):
            for k in range(m + 1):
                for phi in enumerate_osb(n, m):
                    for psi in enumerate_osb(m, k):
                        assert is_osb_morphism(osb_compose(psi, phi))


def test_osb_compose_randomized():
    rng = random.Random(5)
    for _ in range(150):
        n = rng.randint(4, 6)
        m = rng.randint(0, 3)
        k = rng.randint(0, m)
        phi = rng.choice(enumerate_osb(n, m))
        psi = rng.choice(enumerate_osb(m, k))
        assert is_osb_morphism(osb_compose(psi, phi))


def test_orbit_representatives_are_ordered():
    # exactly one ordered member per W_d orbit
    from fsbcat.fsb_core import orbit_classes
    for n in range(5):
        for d in range(n + 1):
            assert set(enumerate_osb(n, d)) == set(orbit_classes(n, d))


def test_lemma_violation_is_assertion():
    assert issubclass(LemmaViolation, AssertionError)


def test_word_leq_examples():
    assert word_leq(W(1, "1"), W(1, "1 1"))
    assert not word_leq(W(2, "1"), W(2, "2 1"))
    assert word_leq(W(2, "1 2"), W(2, "1 -1 2 1 -2"))
    assert not word_leq(W(2, "1 2"), W(2, "2 1 2"))


def test_zero_exemption():
    assert word_leq(W(1, "1"), W(1, "1 0"))
    assert word_leq(W(1, "1"), W(1, "0 1"))
    assert not word_leq(W(1, "1"), W(1, "1 0"), exempt_zero=False)
    assert word_leq(W(1, "1 0"), W(1, "1 0"), exempt_zero=False)


@given(words(), words())
def test_word_leq_matches_definition(v, w):
    for ez in (True, False):
        assert word_leq(v, w, ez) == word_leq_bruteforce(v, w, ez)


def test_word_leq_partial_order_random():
    rng = random.Random(11)
    letters = (-2, -1, 0, 1, 2)
    for _ in range(3000):
        u, v, w = (Word(2, tuple(rng.choice(letters) for _ in range(rng.randint(0, 8)))) for _ in range(3))
        assert word_leq(u, u)
        if word_leq(u, v) and word_leq(v, u):
            assert u == v
        if word_leq(u, v) and word_leq(v, w):
            assert word_leq(u, w)


def test_word_json_roundtrip():
    w = W(3, "1 -2 0 3")
    assert Word.from_json(3, w.to_json()) == w
    assert json.loads(w.to_json()) == [1, -2, 0, 3]
    with pytest.raises(ValueError):
        Word(1, (2,))


def test_iota_examples():
    assert iota(identity(2)) == W(2, "1 2")
    assert iota(BMorphism(2, 1, (1, 1))) == W(1, "1 1")
    phis = enumerate_osb(3, 1)
    keys = sorted(phis, key=iota_order_key)
    assert keys[0].images < keys[-1].images


def test_iota_order_equivalence():
    for m in range(3):
        homs = [phi for n in range(m, 5) for phi in enumerate_osb(n, m)]
        for p in homs:
            for q in homs:
                assert morphism_leq(p, q) == word_leq(iota(p), iota(q)), (p, q)


def test_iota_image_is_ideal():
    for m in range(3):
        aut = principal_ideal_automaton(Word(m, tuple(range(1, m + 1))))
        for n in range(m, 5):
            image = {iota(phi).letters for phi in enumerate_osb(n, m)}
            assert image == {v.letters for v in words_of_length(m, n) if aut.accepts(v)}


def test_iota_image_fails_without_exemption():
    # the reading with {0} as an orbit breaks the order embedding
    phi, phi2 = identity(1), BMorphism(2, 1, (1, 0))
    assert morphism_leq(phi, phi2)
    assert not word_leq(iota(phi), iota(phi2), exempt_zero=False)


def brute_counts(w, max_len, ez=True):
    return [sum(1 for v in words_of_length(w.alphabet_n, ell) if word_leq(w, v, ez)) for ell in range(max_len + 1)]


@pytest.mark.parametrize("alpha,text", [(1, "1"), (2, "1 2"), (1, "1 1"), (2, "2 -1"), (2, "0 1"), (1, ""), (2, "1 0 -1")])
def test_automaton_counts(alpha, text):
    w = W(alpha, text)
    for ez in (True, False):
        aut = principal_ideal_automaton(w, ez)
        assert aut.count_by_length(6) == brute_counts(w, 6, ez)
        assert aut.accepts(w)
        assert len(aut.states) <= len(w) + 2


def test_literal_reading_examples():
    aut = principal_ideal_automaton(W(1, "1"), exempt_zero=False)
    assert aut.count_by_length(6)[1:] == [2 ** (ell - 1) for ell in range(1, 7)]
    t = Polynomial([0, 1])
    assert ideal_series(aut) == RationalFunction.from_polys(t, Polynomial([1, -2]))
    aut2 = principal_ideal_automaton(W(2, "1 2"), exempt_zero=False)
    assert ideal_series(aut2) == RationalFunction.from_polys(t * t, Polynomial([1, -2]) * Polynomial([1, -4]))


def test_default_reading_series():
    t = Polynomial([0, 1])
    r = ideal_series(principal_ideal_automaton(W(1, "1")))
    assert r == RationalFunction.from_polys(t, Polynomial([1, -1]) * Polynomial([1, -3]))
    r2 = ideal_series(principal_ideal_automaton(W(2, "1 2")))
    assert pole_set(r2) == {1, 3, 5}


def test_empty_language_series():
    aut = principal_ideal_automaton(W(1, "1"))
    from fsbcat.osb_words import IdealAutomaton
    empty = IdealAutomaton(1, aut.states, aut.start, frozenset(), aut.transitions)
    assert ideal_series(empty).is_zero()


@given(words(max_len=4))
def test_series_poles_and_coefficients(w):
    aut = principal_ideal_automaton(w)
    r = ideal_series(aut)
    assert pole_set(r) <= set(range(1, 2 * w.alphabet_n + 2))
    assert [int(x) for x in r.series(7)] == aut.count_by_length(6)


def test_automaton_exports():
    aut = principal_ideal_automaton(W(2, "1 2"))
    table = aut.transition_table()
    assert table.splitlines()[0] == "state\tletter\tnext"
    assert "accepting\t2" in table
    dot = aut.to_dot()
    assert dot.startswith("digraph") and "doublecircle" in dot


def test_union_accepts():
    gens = [W(2, "1 1"), W(2, "2")]
    assert union_accepts(gens, W(2, "1 1 -1"))
    assert not union_accepts(gens, W(2, "1 -1"))
    assert union_accepts(gens, W(2, "2 2"))
    assert not union_accepts(gens, W(2, "1 2"))


def test_minimal_elements():
    w = W(2, "1 2")
    assert minimal_elements([w], 8) == {w}
    assert minimal_elements([W(1, "1 1"), W(1, "1")], 8) == {W(1, "1")}
    rng = random.Random(3)
    for _ in range(10):
        gens = [Word(2, tuple(rng.choice((-2, -1, 0, 1, 2)) for _ in range(rng.randint(1, 4)))) for _ in range(5)]
        mins = minimal_elements(gens, 8)
        assert all(not word_leq(a, b) for a in mins for b in mins if a != b)
        # every closure member of length <= 5 dominates a minimal element
        for ell in range(5):
            for v in words_of_length(2, ell):
                if union_accepts(gens, v):
                    assert any(word_leq(m, v) for m in mins)


def test_lift_order():
    phi = BMorphism(2, 1, (-1, 1))
    w, lifted = lift_order(phi)
    assert lifted.images == (1, 1)
    assert act(w, phi) == lifted
    ident = identity(3)
    assert lift_order(ident)[1] == ident
    for n in range(5):
        for d in range(min(n, 2) + 1):
            for phi in enumerate_hom(n, d):
                w, lifted = lift_order(phi)
                assert is_osb_morphism(lifted) and act(w, phi) == lifted
