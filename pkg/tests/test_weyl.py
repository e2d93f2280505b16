import random

import pytest

from spinhecke.weyl import weyl_group


def test_orders():
    assert weyl_group("A", 3).order() == 6
    assert weyl_group("A", 4).order() == 24
    assert weyl_group("B", 2).order() == 8
    assert weyl_group("B", 3).order() == 48
    assert weyl_group("D", 4).order() == 192


def test_rank_gating():
    with pytest.raises(ValueError):
        weyl_group("D", 3)
    with pytest.raises(ValueError):
        weyl_group("B", 1)
    assert weyl_group("D", 3, allow_degenerate=True).order() == 24
    assert weyl_group("A", 2).order() == 2


def test_group_axioms_random():
    for family, n in (("A", 3), ("B", 2), ("D", 4)):
        g = weyl_group(family, n)
        rng = random.Random(13)
        elements = g.elements()
        for _ in range(60):
            p, q, r = (rng.choice(elements) for _ in range(3))
            assert g.mul(g.mul(p, q), r) == g.mul(p, g.mul(q, r))
            assert g.mul(p, g.inverse(p)) == g.identity()


def test_canonical_words_are_reduced_and_lex_smallest():
    g = weyl_group("B", 2)
    words = {w: g.canonical_word(w) for w in g.elements()}
    # every canonical word reproduces its element with the right length
    for w, word in words.items():
        assert g.word_to_element(word) == w
    # lex-smallest among all reduced words (brute force at this size)
    from itertools import product

    for w, word in words.items():
        L = len(word)
        candidates = [
            cand
            for cand in product(range(1, g.num_gens + 1), repeat=L)
            if g.word_to_element(cand) == w
        ]
        assert min(candidates) == word


def test_coxeter_orders():
    b3 = weyl_group("B", 3)
    assert b3.coxeter_order(1, 2) == 3
    assert b3.coxeter_order(2, 3) == 4
    assert b3.coxeter_order(1, 3) == 2
    d4 = weyl_group("D", 4)
    assert d4.coxeter_order(2, 4) == 3
    assert d4.coxeter_order(3, 4) == 2
    assert d4.coxeter_order(1, 4) == 2
    # (s_i s_j)^m = identity for the claimed m
    for g in (b3, d4):
        for i in range(1, g.num_gens + 1):
            for j in range(i + 1, g.num_gens + 1):
                m = g.coxeter_order(i, j)
                prod = g.identity()
                for _ in range(m):
                    prod = g.mul(prod, g.mul(g.generator(i), g.generator(j)))
                assert prod == g.identity()


def test_action_on_exponents():
    g = weyl_group("B", 2)
    sn = g.generator(2)  # negates the last coordinate
    exps, sign = g.act_on_exponents(sn, (0, 3))
    assert exps == (0, 3) and sign == -1
    exps, sign = g.act_on_exponents(sn, (2, 2))
    assert exps == (2, 2) and sign == 1
