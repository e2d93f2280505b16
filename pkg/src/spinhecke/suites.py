"""Verification suites: every property the kernel promises, addressable by id.

Each suite is a function (family, rank) -> (cases, failures) where failures is
a list of {lhs, rhs, diff} dicts rendered through the frontend.  run_suite
wraps that in the JSON report schema
{suite, params: {type, rank}, cases, failures, millis}.

Known deviation, by design: the "intertwiner braid" laws fail for the last
two generators in types B (m=4) and D (m=2).  The failure is structural, not
numerical: the braid-element action on x_{n-1}, x_n coincides with
conjugation by c_{n-1}c_n, so terms carrying c_{n-1}c_n survive.  The suites
therefore check the exact corrected identities (closed-form defects below)
for those two pairs, the plain (signed) braid law everywhere else, and the
braid law after specializing u -> 0, v -> 0, which kills every defect term.
"""

import random
import time

from .affine_hc import AHCElt, ahc_algebra
from .clifford import beta_braid_defect, num_simple_roots
from .covering import cover_algebra, upsilon_minus, upsilon_plus
from .parser import render, specialize_element
from .scalars import Scalar, named_constant
from .spin_affine import (
    phi_affine,
    psi_affine,
    sah_algebra,
    tensor_spin_algebra,
)
from .spin_weyl import act_mask, spin_algebra


def _fail(failures, lhs, rhs, label=""):
    try:
        diff = render(lhs - rhs)
    except Exception:
        diff = "%r vs %r" % (lhs, rhs)
    failures.append(
        {
            "lhs": "%s%s" % (label + ": " if label else "", render(lhs)),
            "rhs": render(rhs),
            "diff": diff,
        }
    )


def _check(state, lhs, rhs, label=""):
    state["cases"] += 1
    if lhs != rhs:
        _fail(state["failures"], lhs, rhs, label)


def _state():
    return {"cases": 0, "failures": []}


def _done(state):
    return state["cases"], state["failures"]


def _random_element(gens, rng, factors=3, terms=2):
    out = rng.choice(gens)
    for _ in range(factors - 1):
        out = out * rng.choice(gens)
    for _ in range(terms - 1):
        extra = rng.choice(gens)
        for _ in range(factors - 1):
            extra = extra * rng.choice(gens)
        out = out + extra.scale(rng.randint(-2, 2))
    return out


# -- finite level ---------------------------------------------------------------


def suite_beta_braid(family, rank):
    st = _state()
    num = num_simple_roots(family, rank)
    for i in range(1, num + 1):
        for j in range(i, num + 1):
            st["cases"] += 1
            defect = beta_braid_defect(family, rank, i, j)
            if defect:
                st["failures"].append(
                    {
                        "lhs": "(beta_%d beta_%d)^m [%s %s]" % (i, j, family, rank),
                        "rhs": "(-1)^(m+1)",
                        "diff": repr(defect),
                    }
                )
    return _done(st)


def suite_cocycle_crosscheck(family, rank):
    alg = spin_algebra(family, rank, family == "D" and rank < 4)
    st = _state()
    elements = alg.group.elements()
    for w in elements:
        for w2 in elements:
            st["cases"] += 1
            a = alg.cocycle(w, w2)
            b = alg.cocycle_by_words(w, w2)
            if a != b:
                st["failures"].append(
                    {
                        "lhs": "mu%r = %d (Clifford route)" % ((w, w2), a),
                        "rhs": "%d (word-rewriting route)" % b,
                        "diff": "sign mismatch",
                    }
                )
    return _done(st)


def suite_spin_assoc(family, rank):
    alg = spin_algebra(family, rank)
    st = _state()
    basis = [alg.t_basis(w) for w in alg.group.elements()]
    for a in basis:
        for b in basis:
            ab = a * b
            for c in basis:
                _check(st, ab * c, a * (b * c), "spin assoc")
    return _done(st)


def suite_phi_psi_fin_inverse(family, rank):
    alg = spin_algebra(family, rank)
    st = _state()
    semi_gens = [alg.semidirect_c(i) for i in range(1, rank + 1)]
    semi_gens += [alg.semidirect_s(i) for i in range(1, alg.group.num_gens + 1)]
    tens_gens = [alg.tensor_c(i) for i in range(1, rank + 1)]
    tens_gens += [alg.tensor_t(i) for i in range(1, alg.group.num_gens + 1)]
    for g in semi_gens:
        _check(st, alg.psi_fin(alg.phi_fin(g)), g, "psi_fin . phi_fin")
    for g in tens_gens:
        _check(st, alg.phi_fin(alg.psi_fin(g)), g, "phi_fin . psi_fin")
    for a in semi_gens:
        for b in semi_gens:
            _check(st, alg.phi_fin(a * b), alg.phi_fin(a) * alg.phi_fin(b), "phi_fin hom")
    for a in tens_gens:
        for b in tens_gens:
            _check(st, alg.psi_fin(a * b), alg.psi_fin(a) * alg.psi_fin(b), "psi_fin hom")
    rng = random.Random(11)
    for _ in range(100):
        e = _random_element(semi_gens, rng)
        _check(st, alg.psi_fin(alg.phi_fin(e)), e, "roundtrip random")
    return _done(st)


# -- Hecke-Clifford relations ------------------------------------------------------


def suite_ahc_relations(family, rank):
    H = ahc_algebra(family, rank)
    st = _state()
    n, num = rank, H.group.num_gens
    one = H.one()
    u = Scalar.u()
    sqrt2v = Scalar.from_cyc8(named_constant("sqrt2")) * Scalar.v()
    x = {i: H.x(i) for i in range(1, n + 1)}
    c = {i: H.c(i) for i in range(1, n + 1)}
    s = {i: H.s(i) for i in range(1, num + 1)}
    cox = H.group.coxeter_order
    for i in range(1, num + 1):
        _check(st, s[i] * s[i], one, "s%d^2" % i)
        for j in range(i + 1, num + 1):
            m = cox(i, j)
            l = one
            r = one
            for k in range(m):
                l = l * (s[i] if k % 2 == 0 else s[j])
                r = r * (s[j] if k % 2 == 0 else s[i])
            _check(st, l, r, "s-braid (%d,%d)" % (i, j))
    for i in range(1, n + 1):
        _check(st, c[i] * c[i], one, "c%d^2" % i)
        _check(st, x[i] * c[i], -(c[i] * x[i]), "x%d c%d" % (i, i))
        for j in range(1, n + 1):
            if i == j:
                continue
            _check(st, c[i] * c[j], -(c[j] * c[i]), "c%d c%d" % (i, j))
            _check(st, x[i] * x[j], x[j] * x[i], "x%d x%d" % (i, j))
            _check(st, x[i] * c[j], c[j] * x[i], "x%d c%d" % (i, j))
    for i in range(1, num + 1):
        last = family != "A" and i == n
        for j in range(1, n + 1):
            if last and family == "B":
                if j == n:
                    _check(st, s[n] * c[n], -(c[n] * s[n]), "s_n c_n B")
                    _check(st, s[n] * x[n] + x[n] * s[n], -one.scale(sqrt2v), "s_n x_n B")
                else:
                    _check(st, s[n] * c[j], c[j] * s[n], "s_n c_j B")
                    _check(st, s[n] * x[j], x[j] * s[n], "s_n x_j B")
            elif last:
                if j == n:
                    _check(st, s[n] * c[n], -(c[n - 1] * s[n]), "s_n c_n D")
                    _check(
                        st,
                        s[n] * x[n] + x[n - 1] * s[n],
                        -(one + c[n - 1] * c[n]).scale(u),
                        "s_n x_n D",
                    )
                elif j == n - 1:
                    _check(st, s[n] * c[n - 1], -(c[n] * s[n]), "s_n c_{n-1} D")
                else:
                    _check(st, s[n] * c[j], c[j] * s[n], "s_n c_j D")
                    _check(st, s[n] * x[j], x[j] * s[n], "s_n x_j D")
            else:
                if j == i:
                    _check(st, s[i] * c[i], c[i + 1] * s[i], "s_i c_i")
                    _check(
                        st,
                        x[i + 1] * s[i] - s[i] * x[i],
                        (one + c[i] * c[i + 1]).scale(u),
                        "x_{i+1} s_i - s_i x_i",
                    )
                elif j == i + 1:
                    _check(st, s[i] * c[i + 1], c[i] * s[i], "s_i c_{i+1}")
                else:
                    _check(st, s[i] * c[j], c[j] * s[i], "s_i c_j")
                    _check(st, s[i] * x[j], x[j] * s[i], "s_i x_j")
    return _done(st)


def suite_ahc_assoc(family, rank):
    H = ahc_algebra(family, rank)
    st = _state()
    rng = random.Random(23)
    gens = H.generators()
    for _ in range(70):
        a, b, c = (_random_element(gens, rng, factors=2) for _ in range(3))
        _check(st, (a * b) * c, a * (b * c), "ahc assoc")
    return _done(st)


def suite_ind_consistency(family, rank):
    H = ahc_algebra(family, rank)
    st = _state()
    rng = random.Random(29)
    gens = H.generators()
    start = H.ind_one()
    for _ in range(70):
        a = _random_element(gens, rng, factors=2)
        b = _random_element(gens, rng, factors=2)
        m = H.ind_act(rng.choice(gens), start)
        _check(st, H.ind_act(a * b, m), H.ind_act(a, H.ind_act(b, m)), "ind act")
    return _done(st)


def suite_ahc_involutions(family, rank):
    H = ahc_algebra(family, rank)
    st = _state()
    rng = random.Random(31)
    gens = H.generators()
    which = ["tau1", "tau2", "sigma"] if family == "D" else []
    for name in which:
        for g in gens:
            _check(
                st,
                H.apply_involution(name, H.apply_involution(name, g)),
                g,
                "%s^2" % name,
            )
        for _ in range(20):
            a = _random_element(gens, rng, factors=2)
            b = _random_element(gens, rng, factors=2)
            if name == "sigma":
                _check(
                    st,
                    H.apply_involution(name, a * b),
                    H.apply_involution(name, a) * H.apply_involution(name, b),
                    "sigma hom",
                )
            else:
                _check(
                    st,
                    H.apply_involution(name, a * b),
                    H.apply_involution(name, b) * H.apply_involution(name, a),
                    "%s anti" % name,
                )
    if not which:
        st["cases"] += 1  # nothing to verify outside type D; count a no-op case
    return _done(st)


# -- intertwiners -----------------------------------------------------------------


def _phi_square_expected(H, i):
    n = H.n
    u2 = Scalar.u() * Scalar.u()
    if H.family != "A" and i == n:
        if H.family == "B":
            v2 = Scalar.v() * Scalar.v()
            return H.x(n, 4).scale(Scalar.from_cyc8(4)) - H.x(n, 2).scale(
                Scalar.from_cyc8(2) * v2
            )
        a, b = n - 1, n
    else:
        a, b = i, i + 1
    diff = H.x(b, 2) - H.x(a, 2)
    return (H.x(b, 2) + H.x(a, 2)).scale(Scalar.from_cyc8(2) * u2) - diff * diff


def suite_intertwiner(family, rank):
    H = ahc_algebra(family, rank)
    st = _state()
    rng = random.Random(37)
    n, num = rank, H.group.num_gens
    for i in range(1, num + 1):
        phi = H.intertwiner_phi(i)
        _check(st, phi * phi, _phi_square_expected(H, i), "phi_%d^2" % i)
        si = H.group.generator(i)
        for j in range(1, n + 1):
            sgn, mask = act_mask(H.group, si, 1 << (j - 1))
            img = AHCElt(H, {((0,) * n, mask, H.group.identity()): Scalar.from_cyc8(sgn)})
            _check(st, phi * H.c(j), img * phi, "phi_%d c_%d" % (i, j))
        for _ in range(50):
            exps = tuple(rng.randint(0, 2) for _ in range(n))
            f = {exps: Scalar.one()}
            fe = H.from_poly(f)
            img_exps, sgn = H.group.act_on_exponents(si, exps)
            fw = H.from_poly({img_exps: Scalar.from_cyc8(sgn)})
            _check(st, phi * fe, fw * phi, "phi_%d f" % i)
    return _done(st)


def _alternating(factors, i, j, m):
    out = None
    for k in range(m):
        f = factors[i] if k % 2 == 0 else factors[j]
        out = f if out is None else out * f
    return out


def _ahc_braid_defect_expected(H, i, j, m):
    """Closed-form corrected identities for the two exceptional pairs."""
    n = H.n
    if H.family == "B" and m == 4 and {i, j} == {n - 1, n}:
        u2 = Scalar.u() * Scalar.u()
        v2 = Scalar.v() * Scalar.v()
        poly = H.x(n - 1, 2) + H.x(n, 2) - H.from_scalar(v2)
        core = H.x(n - 1, 2) * H.x(n, 2) * poly * H.c(n - 1) * H.c(n)
        defect = core.scale(Scalar.from_cyc8(16) * u2)
        return defect if i == n - 1 else -defect
    if H.family == "D" and m == 2 and {i, j} == {n - 1, n}:
        u2 = Scalar.u() * Scalar.u()
        core = (H.x(n - 1, 2) + H.x(n, 2)) * H.c(n - 1) * H.c(n)
        defect = core.scale(Scalar.from_cyc8(4) * u2)
        return defect if i == n - 1 else -defect
    return None


def suite_intertwiner_braid(family, rank):
    H = ahc_algebra(family, rank)
    st = _state()
    num = H.group.num_gens
    phis = {i: H.intertwiner_phi(i) for i in range(1, num + 1)}
    cox = H.group.coxeter_order
    for i in range(1, num + 1):
        for j in range(1, num + 1):
            if i == j:
                continue
            m = cox(i, j)
            l = _alternating(phis, i, j, m)
            r = _alternating(phis, j, i, m)
            expected = _ahc_braid_defect_expected(H, i, j, m)
            if expected is None:
                _check(st, l, r, "phi braid (%d,%d) m=%d" % (i, j, m))
            else:
                _check(st, l - r, expected, "phi braid defect (%d,%d) m=%d" % (i, j, m))
            # the u -> 0, v -> 0 coefficient specialization braids exactly
            _check(
                st,
                specialize_element(l - r, 0, 0),
                H.zero(),
                "phi braid at u=v=0 (%d,%d)" % (i, j),
            )
    return _done(st)


# -- spin affine -----------------------------------------------------------------


def suite_sah_relations(family, rank):
    A = sah_algebra(family, rank)
    st = _state()
    n, num = rank, A.group.num_gens
    one = A.one()
    u, v = Scalar.u(), Scalar.v()
    b = {i: A.b(i) for i in range(1, n + 1)}
    t = {i: A.t(i) for i in range(1, num + 1)}
    cox = A.group.coxeter_order
    for i in range(1, num + 1):
        _check(st, t[i] * t[i], one, "t%d^2" % i)
        for j in range(i + 1, num + 1):
            m = cox(i, j)
            l = _alternating(t, i, j, m)
            r = _alternating(t, j, i, m)
            r = r if m % 2 else -r  # (t_i t_j)^m = (-1)^(m+1)
            _check(st, l, r, "t-braid (%d,%d) m=%d" % (i, j, m))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                _check(st, b[i] * b[j], -(b[j] * b[i]), "b%d b%d" % (i, j))
    for i in range(1, num + 1):
        last = family != "A" and i == n
        for j in range(1, n + 1):
            if last and family == "B":
                if j == n:
                    _check(st, t[n] * b[n] + b[n] * t[n], one.scale(v), "t_n b_n B")
                else:
                    _check(st, t[n] * b[j], -(b[j] * t[n]), "t_n b_j B")
            elif last:
                if j == n:
                    _check(st, t[n] * b[n] + b[n - 1] * t[n], one.scale(u), "t_n b_n D")
                elif j == n - 1:
                    _check(st, t[n] * b[n - 1] + b[n] * t[n], one.scale(u), "t_n b_{n-1} D")
                else:
                    _check(st, t[n] * b[j], -(b[j] * t[n]), "t_n b_j D")
            else:
                if j == i:
                    _check(st, t[i] * b[i] + b[i + 1] * t[i], one.scale(u), "t_i b_i")
                elif j == i + 1:
                    _check(st, t[i] * b[i + 1] + b[i] * t[i], one.scale(u), "t_i b_{i+1}")
                else:
                    _check(st, t[i] * b[j], -(b[j] * t[i]), "t_i b_j")
    return _done(st)


def suite_sah_assoc(family, rank):
    A = sah_algebra(family, rank)
    st = _state()
    rng = random.Random(41)
    gens = A.generators()
    for _ in range(70):
        a, b, c = (_random_element(gens, rng, factors=2) for _ in range(3))
        _check(st, (a * b) * c, a * (b * c), "sah assoc")
    return _done(st)


def suite_sah_involutions(family, rank):
    A = sah_algebra(family, rank)
    st = _state()
    rng = random.Random(43)
    gens = A.generators()
    for name in ("tau1", "tau2"):
        for g in gens:
            _check(
                st,
                A.apply_involution(name, A.apply_involution(name, g)),
                g,
                "%s^2" % name,
            )
        for _ in range(20):
            a = _random_element(gens, rng, factors=2)
            b = _random_element(gens, rng, factors=2)
            _check(
                st,
                A.apply_involution(name, a * b),
                A.apply_involution(name, b) * A.apply_involution(name, a),
                "%s anti" % name,
            )
    return _done(st)


def suite_spincomm(family, rank):
    A = sah_algebra(family, rank)
    st = _state()
    n, num = rank, A.group.num_gens
    for i in range(1, num + 1):
        I = A.intertwiner_I(i)
        last = family != "A" and i == n
        for j in range(1, n + 1):
            if last and family == "B":
                target = j
            elif last:
                target = {n: n - 1, n - 1: n}.get(j, j)
            else:
                target = {i: i + 1, i + 1: i}.get(j, j)
            _check(st, I * A.b(j), -(A.b(target) * I), "I_%d b_%d" % (i, j))
    return _done(st)


def suite_spintert(family, rank):
    A = sah_algebra(family, rank)
    st = _state()
    n, num = rank, A.group.num_gens
    u2 = Scalar.u() * Scalar.u()
    for i in range(1, num + 1):
        I = A.intertwiner_I(i)
        if family == "B" and i == n:
            v2 = Scalar.v() * Scalar.v()
            expected = A.b(n, 4).scale(Scalar.from_cyc8(4)) - A.b(n, 2).scale(v2)
        else:
            a, c = (n - 1, n) if (family == "D" and i == n) else (i, i + 1)
            diff = A.b(c, 2) - A.b(a, 2)
            expected = (A.b(c, 2) + A.b(a, 2)).scale(u2) - diff * diff
        _check(st, I * I, expected, "I_%d^2" % i)
    return _done(st)


def _sah_braid_defect_expected(A, i, j, m):
    n = A.n
    if A.family == "B" and m == 4 and {i, j} == {n - 1, n}:
        u2 = Scalar.u() * Scalar.u()
        v2 = Scalar.v() * Scalar.v()
        two = Scalar.from_cyc8(2)
        poly = A.b(n - 1, 2).scale(two) + A.b(n, 2).scale(two) - A.from_scalar(v2)
        core = A.b(n - 1, 2) * A.b(n, 2) * poly
        return core.scale(Scalar.from_cyc8(-4) * u2)
    if A.family == "D" and m == 2 and {i, j} == {n - 1, n}:
        u2 = Scalar.u() * Scalar.u()
        return (A.b(n - 1, 2) + A.b(n, 2)).scale(Scalar.from_cyc8(2) * u2)
    return None


def suite_spinterbraided(family, rank):
    A = sah_algebra(family, rank)
    st = _state()
    num = A.group.num_gens
    Is = {i: A.intertwiner_I(i) for i in range(1, num + 1)}
    cox = A.group.coxeter_order
    for i in range(1, num + 1):
        for j in range(1, num + 1):
            if i == j:
                continue
            m = cox(i, j)
            l = _alternating(Is, i, j, m)
            r = _alternating(Is, j, i, m)
            signed = l - r if m % 2 else l + r  # target: l = (-1)^(m+1) r
            expected = _sah_braid_defect_expected(A, i, j, m)
            if expected is None:
                _check(st, signed, A.zero(), "I braid (%d,%d) m=%d" % (i, j, m))
            else:
                _check(st, signed, expected, "I braid defect (%d,%d) m=%d" % (i, j, m))
            _check(
                st,
                specialize_element(signed, 0, 0),
                A.zero(),
                "I braid at u=v=0 (%d,%d)" % (i, j),
            )
    return _done(st)


# -- affine isomorphisms ------------------------------------------------------------


def suite_phi_psi_inverse(family, rank):
    H = ahc_algebra(family, rank)
    T = tensor_spin_algebra(family, rank)
    st = _state()
    gens = H.generators()
    tgens = [T.c(i) for i in range(1, rank + 1)]
    tgens += [T.b(i) for i in range(1, rank + 1)]
    tgens += [T.t(i) for i in range(1, T.group.num_gens + 1)]
    for g in gens:
        _check(st, psi_affine(phi_affine(g)), g, "psi . phi")
    for g in tgens:
        _check(st, phi_affine(psi_affine(g)), g, "phi . psi")
    for a in gens:
        for b in gens:
            _check(st, phi_affine(a * b), phi_affine(a) * phi_affine(b), "phi hom")
    rng = random.Random(47)
    rounds = 100 if rank <= 3 else 10
    for _ in range(rounds):
        e = _random_element(gens, rng, factors=2)
        _check(st, psi_affine(phi_affine(e)), e, "roundtrip random")
    return _done(st)


def suite_isom_intertw(family, rank):
    H = ahc_algebra(family, rank)
    T = tensor_spin_algebra(family, rank)
    A = T.sah
    st = _state()
    n, num = rank, H.group.num_gens
    sm2 = Scalar.from_cyc8(named_constant("sqrtm2"))
    two_i = Scalar.from_cyc8(2) * Scalar.from_cyc8(named_constant("i"))
    for i in range(1, num + 1):
        img = phi_affine(H.intertwiner_phi(i))
        I = T.embed_spin(A.intertwiner_I(i))
        if family == "B" and i == n:
            expected = (T.c(n) * I).scale(-two_i)
        elif family == "D" and i == n:
            expected = ((T.c(n - 1) + T.c(n)) * I).scale(-sm2)
        else:
            expected = ((T.c(i) - T.c(i + 1)) * I).scale(-sm2)
        _check(st, img, expected, "phi(phi_%d)" % i)
    return _done(st)


# -- centers ---------------------------------------------------------------------


def suite_center_ahc(family, rank):
    H = ahc_algebra(family, rank)
    st = _state()
    for k in (1, 2, 3):
        pk = {}
        for i in range(rank):
            exps = [0] * rank
            exps[i] = k
            pk[tuple(exps)] = Scalar.one()
        st["cases"] += 1
        if not H.center_commutator_check(pk):
            st["failures"].append(
                {"lhs": "p_%d(x^2)" % k, "rhs": "central", "diff": "does not commute"}
            )
    witness = {tuple([2] + [0] * (rank - 1)): Scalar.one()}  # x_1^4: not invariant
    st["cases"] += 1
    if H.center_commutator_check(witness):
        st["failures"].append(
            {"lhs": "x_1^4", "rhs": "non-central witness", "diff": "commutes unexpectedly"}
        )
    return _done(st)


def suite_center_sah(family, rank):
    A = sah_algebra(family, rank)
    st = _state()
    for k in (1, 2, 3):
        pk = {}
        for i in range(rank):
            exps = [0] * rank
            exps[i] = k
            pk[tuple(exps)] = Scalar.one()
        st["cases"] += 1
        if not A.center_commutator_check(pk):
            st["failures"].append(
                {"lhs": "p_%d(b^2)" % k, "rhs": "central", "diff": "does not commute"}
            )
    witness = {tuple([2] + [0] * (rank - 1)): Scalar.one()}
    st["cases"] += 1
    if A.center_commutator_check(witness):
        st["failures"].append(
            {"lhs": "b_1^4", "rhs": "non-central witness", "diff": "commutes unexpectedly"}
        )
    return _done(st)


# -- covering --------------------------------------------------------------------


def suite_cover_relations(family, rank):
    alg = cover_algebra(family, rank)
    st = _state()
    n, num = rank, alg.group.num_gens
    one, z = alg.one(), alg.z()
    u, v = Scalar.u(), Scalar.v()
    X = {i: alg.x(i) for i in range(1, n + 1)}
    T = {i: alg.t(i) for i in range(1, num + 1)}
    _check(st, z * z, one, "z^2")
    for g in alg.generators():
        _check(st, z * g, g * z, "z central")
    cox = alg.group.coxeter_order
    for i in range(1, num + 1):
        _check(st, T[i] * T[i], one, "t%d^2" % i)
        for j in range(i + 1, num + 1):
            m = cox(i, j)
            l = _alternating(T, i, j, m)
            r = _alternating(T, j, i, m)
            r = r if m % 2 else z * r  # lifted braid: l = z^(m+1) r
            _check(st, l, r, "T-braid (%d,%d)" % (i, j))
    for i in X:
        for j in X:
            if i != j:
                _check(st, X[i] * X[j], z * (X[j] * X[i]), "X%d X%d" % (i, j))
    for i in range(1, num + 1):
        last = family != "A" and i == n
        for j in range(1, n + 1):
            lhs = T[i] * X[j]
            if last and family == "B":
                rhs = -(X[n] * T[n]) + one.scale(v) if j == n else z * (X[j] * T[n])
            elif last:
                if j == n:
                    rhs = -(X[n - 1] * T[n]) - z.scale(u)
                elif j == n - 1:
                    rhs = -(X[n] * T[n]) - z.scale(u)
                else:
                    rhs = z * (X[j] * T[n])
            else:
                if j == i + 1:
                    rhs = z * (X[i] * T[i]) + one.scale(u)
                elif j == i:
                    rhs = z * (X[i + 1] * T[i]) - z.scale(u)
                else:
                    rhs = z * (X[j] * T[i])
            _check(st, lhs, rhs, "T%d X%d" % (i, j))
    return _done(st)


def suite_cover_assoc(family, rank):
    alg = cover_algebra(family, rank)
    st = _state()
    rng = random.Random(53)
    gens = alg.generators()
    for _ in range(70):
        a, b, c = (_random_element(gens, rng, factors=2) for _ in range(3))
        _check(st, (a * b) * c, a * (b * c), "cover assoc")
    return _done(st)


def suite_upsilon(family, rank):
    alg = cover_algebra(family, rank)
    sah = sah_algebra(family, rank)
    st = _state()
    rng = random.Random(59)
    gens = alg.generators()
    _check(st, upsilon_plus(alg.z()), alg.lusztig_one(), "upsilon_plus(z)")
    _check(st, upsilon_minus(alg.z()), -sah.one(), "upsilon_minus(z)")
    for _ in range(70):
        a = _random_element(gens, rng, factors=2)
        b = _random_element(gens, rng, factors=2)
        _check(st, upsilon_plus(a * b), upsilon_plus(a) * upsilon_plus(b), "up hom")
        _check(st, upsilon_minus(a * b), upsilon_minus(a) * upsilon_minus(b), "um hom")
    lx1, lx2 = alg.lusztig_x(1), alg.lusztig_x(2)
    _check(st, lx1 * lx2, lx2 * lx1, "z=1 quotient: x1 x2 = x2 x1")
    # compatibility triangle: lift (zbit=0), cover-multiply, project = sah_mul
    sgens = [sah.b(i) for i in range(1, rank + 1)]
    sgens += [sah.t(i) for i in range(1, sah.group.num_gens + 1)]

    def lift(e):
        from .covering import CoverElt

        return CoverElt(alg, {(a0, 0, w): val for (a0, w), val in e.terms.items()})

    for a in sgens:
        for b in sgens:
            _check(st, upsilon_minus(alg.mul(lift(a), lift(b))), a * b, "triangle")
    return _done(st)


# -- registry ---------------------------------------------------------------------

_AB_RANKS4 = [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("D", 4)]
_AB_RANKS3 = [("A", 2), ("A", 3), ("B", 2), ("B", 3)]
_SMALL = [("A", 3), ("B", 2), ("D", 4)]

SUITES = {
    "beta-braid": (
        suite_beta_braid,
        [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("D", 4),
         ("F4", 4), ("G2", 2)],
        "finite-type braid relations of the Clifford generators beta_i",
    ),
    "cocycle-crosscheck": (
        suite_cocycle_crosscheck,
        [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("D", 2), ("D", 3)],
        "Clifford-route cocycle equals the word-rewriting oracle on all pairs",
    ),
    "spin-assoc": (
        suite_spin_assoc,
        [("A", 3), ("B", 2), ("B", 3)],
        "associativity of the spin group algebra on all basis triples",
    ),
    "phi-psi-fin-inverse": (
        suite_phi_psi_fin_inverse,
        [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("D", 4)],
        "finite-level isomorphisms are mutually inverse homomorphisms",
    ),
    "ahc-relations": (
        suite_ahc_relations,
        _AB_RANKS4,
        "defining relations of the affine Hecke-Clifford algebra",
    ),
    "ahc-assoc": (suite_ahc_assoc, _SMALL, "associativity on random triples"),
    "ind-consistency": (
        suite_ind_consistency,
        _SMALL,
        "polynomial-Clifford module action is consistent with multiplication",
    ),
    "ahc-involutions": (
        suite_ahc_involutions,
        [("D", 4)],
        "tau1/tau2 anti-involutions and the sigma automorphism (type D)",
    ),
    "thm-intertwiner": (
        suite_intertwiner,
        _AB_RANKS3 + [("D", 4)],
        "intertwiner squares and commutation laws",
    ),
    "thm-intertwiner-braid": (
        suite_intertwiner_braid,
        _AB_RANKS3 + [("D", 4)],
        "intertwiner braid laws (corrected identities for the last pair in B/D)",
    ),
    "sah-relations": (
        suite_sah_relations,
        _AB_RANKS4,
        "defining relations of the spin affine Hecke algebra",
    ),
    "sah-assoc": (suite_sah_assoc, _SMALL, "associativity on random triples"),
    "sah-involutions": (
        suite_sah_involutions,
        _SMALL,
        "tau1/tau2 anti-involutions of the spin affine Hecke algebra",
    ),
    "spincomm": (
        suite_spincomm,
        _AB_RANKS3 + [("D", 4)],
        "spin intertwiners skew-commute with the odd generators",
    ),
    "spintert": (
        suite_spintert,
        _AB_RANKS3 + [("D", 4)],
        "spin intertwiner squared values",
    ),
    "spinterbraided": (
        suite_spinterbraided,
        _AB_RANKS3 + [("D", 4)],
        "signed braid laws for spin intertwiners (corrected for the last pair)",
    ),
    "phi-psi-inverse": (
        suite_phi_psi_inverse,
        _AB_RANKS3 + [("D", 4)],
        "affine isomorphisms are mutually inverse homomorphisms",
    ),
    "isom-intertw": (
        suite_isom_intertw,
        _AB_RANKS3 + [("D", 4)],
        "images of the intertwiners under the affine isomorphism",
    ),
    "center-ahc": (
        suite_center_ahc,
        _AB_RANKS3 + [("D", 4)],
        "power sums in squared variables are central; a witness is not",
    ),
    "center-sah": (
        suite_center_sah,
        _AB_RANKS3 + [("D", 4)],
        "power sums in squared odd variables are central; a witness is not",
    ),
    "cover-relations": (
        suite_cover_relations,
        _AB_RANKS4,
        "defining relations of the covering algebra",
    ),
    "cover-assoc": (suite_cover_assoc, _SMALL, "associativity on random triples"),
    "upsilon": (
        suite_upsilon,
        _SMALL,
        "the two central quotients are homomorphisms with the right targets",
    ),
}


def list_suites():
    return [
        {"suite": name, "params": [{"type": f, "rank": r} for f, r in params],
         "description": desc}
        for name, (fn, params, desc) in sorted(SUITES.items())
    ]


def run_suite(name, family=None, rank=None):
    """Run one suite; returns a list of reports (one per parameter set)."""
    if name not in SUITES:
        raise KeyError("unknown suite %r" % (name,))
    fn, params, _ = SUITES[name]
    chosen = [
        (f, r)
        for f, r in params
        if (family is None or f == family) and (rank is None or r == rank)
    ]
    reports = []
    for f, r in chosen:
        start = time.time()
        cases, failures = fn(f, r)
        reports.append(
            {
                "suite": name,
                "params": {"type": f, "rank": r},
                "cases": cases,
                "failures": failures,
                "millis": int((time.time() - start) * 1000),
            }
        )
    return reports


def run_all(family=None, rank=None):
    reports = []
    for name in sorted(SUITES):
        reports.extend(run_suite(name, family, rank))
    return reports
