import random

from spinhecke.covering import cover_algebra, upsilon_minus, upsilon_plus
from spinhecke.scalars import Scalar
from spinhecke.spin_affine import sah_algebra


def test_z_is_central_of_order_two():
    C = cover_algebra("B", 2)
    z = C.z()
    assert z * z == C.one()
    for g in C.generators():
        assert z * g == g * z


def test_golden_z_squared_renders_to_one():
    from spinhecke.parser import Context, eval_text, render

    assert render(eval_text("z*z", Context("cover", "A", 2))) == "1"


def test_twisted_commutation():
    C = cover_algebra("A", 3)
    z = C.z()
    assert C.x(1) * C.x(2) == z * C.x(2) * C.x(1)
    assert C.t(1) * C.x(3) == z * C.x(3) * C.t(1)
    u = Scalar.u()
    for i in (1, 2):
        assert C.t(i) * C.x(i + 1) == z * C.x(i) * C.t(i) + C.one().scale(u)
        assert C.t(i) * C.x(i) == z * C.x(i + 1) * C.t(i) - z.scale(u)


def test_type_b_and_d_last_relations():
    B = cover_algebra("B", 2)
    assert B.t(2) * B.x(2) == -(B.x(2) * B.t(2)) + B.one().scale(Scalar.v())
    D = cover_algebra("D", 4)
    z = D.z()
    u = Scalar.u()
    # the last-node relations carry -z*u (the +u variant breaks associativity)
    assert D.t(4) * D.x(4) == -(D.x(3) * D.t(4)) - z.scale(u)
    assert D.t(4) * D.x(3) == -(D.x(4) * D.t(4)) - z.scale(u)


def test_braid_lifts():
    for family, n in (("A", 3), ("B", 2), ("D", 4)):
        C = cover_algebra(family, n)
        num = C.group.num_gens
        for i in range(1, num + 1):
            assert C.t(i) * C.t(i) == C.one()
            for j in range(i + 1, num + 1):
                m = C.group.coxeter_order(i, j)
                l, r = C.one(), C.one()
                for k in range(m):
                    l = l * (C.t(i) if k % 2 == 0 else C.t(j))
                    r = r * (C.t(j) if k % 2 == 0 else C.t(i))
                # braid words agree up to z for even order, exactly for odd
                assert l == (r if m % 2 else C.z() * r), (family, i, j, m)


def test_associativity_sweep():
    rng = random.Random(61)
    for family, n in (("A", 3), ("B", 2), ("D", 4)):
        C = cover_algebra(family, n)
        gens = C.generators()
        for _ in range(50):
            a = rng.choice(gens) * rng.choice(gens) + rng.choice(gens)
            b = rng.choice(gens) * rng.choice(gens)
            c = rng.choice(gens)
            assert (a * b) * c == a * (b * c)


def test_upsilon_quotients():
    rng = random.Random(63)
    for family, n in (("A", 3), ("B", 2), ("D", 4)):
        C = cover_algebra(family, n)
        S = sah_algebra(family, n)
        assert upsilon_plus(C.z()) == C.lusztig_one()
        assert upsilon_minus(C.z()) == -S.one()
        gens = C.generators()
        for _ in range(30):
            a = rng.choice(gens) * rng.choice(gens)
            b = rng.choice(gens)
            assert upsilon_plus(a * b) == C.lusztig_mul(
                upsilon_plus(a), upsilon_plus(b)
            )
            assert upsilon_minus(a * b) == upsilon_minus(a) * upsilon_minus(b)


def test_lusztig_quotient_has_commuting_x():
    C = cover_algebra("A", 3)
    xs = [upsilon_plus(C.x(i)) for i in range(1, 4)]
    assert C.lusztig_mul(xs[0], xs[1]) == C.lusztig_mul(xs[1], xs[0])


def test_lift_multiply_project_matches_spin_product():
    # multiplying in the cover and projecting at z = -1 agrees with the
    # spin algebra product on all generator pairs
    for family, n in (("A", 3), ("B", 2), ("D", 4)):
        C = cover_algebra(family, n)
        S = sah_algebra(family, n)
        cg = C.generators()
        sg = S.generators()
        for a, sa in zip(cg, sg):
            for b, sb in zip(cg, sg):
                assert upsilon_minus(a * b) == sa * sb
