import random

import pytest

from spinhecke.clifford import (
    CliffordElt,
    beta,
    beta_braid_defect,
    num_simple_roots,
    weyl_act_clifford,
)
from spinhecke.scalars import Scalar
from spinhecke.weyl import weyl_group


def test_generator_relations():
    n = 4
    c = [CliffordElt.generator(n, i) for i in range(1, n + 1)]
    one = CliffordElt.one(n)
    for i in range(n):
        assert c[i] * c[i] == one
        for j in range(n):
            if i != j:
                assert c[i] * c[j] == -(c[j] * c[i])


def test_associativity_random():
    rng = random.Random(17)
    n = 6
    gens = [CliffordElt.generator(n, i) for i in range(1, n + 1)]
    for _ in range(500):
        a, b, c = (rng.choice(gens) * rng.choice(gens) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_beta_squares_to_one():
    for family, n in (("A", 4), ("B", 3), ("D", 4)):
        for i in range(1, num_simple_roots(family, n) + 1):
            b = beta(family, n, i)
            assert b * b == CliffordElt.one(b.N)


def test_beta_braid_all_finite_types():
    for family, n in (("A", 4), ("B", 4), ("D", 4), ("F4", 4), ("G2", 2)):
        num = num_simple_roots(family, n)
        for i in range(1, num + 1):
            for j in range(i, num + 1):
                assert not beta_braid_defect(family, n, i, j), (family, i, j)


def test_g2_single_beta_not_representable():
    with pytest.raises(ValueError):
        beta("G2", 2, 2)


def test_weyl_action_is_automorphism():
    g = weyl_group("B", 2)
    rng = random.Random(19)
    gens = [CliffordElt.generator(2, i) for i in range(1, 3)]
    for w in g.elements():
        for _ in range(10):
            a = rng.choice(gens) * rng.choice(gens).scale(Scalar.u())
            b = rng.choice(gens)
            assert weyl_act_clifford(g, w, a * b) == weyl_act_clifford(
                g, w, a
            ) * weyl_act_clifford(g, w, b)
