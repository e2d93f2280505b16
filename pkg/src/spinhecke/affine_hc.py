"""Degenerate affine Hecke-Clifford algebras for types A, B, D.

Elements live in the PBW basis x^alpha c^eps w.  Products are normalized by
left-multiplying generators one at a time; a simple reflection moves past a
whole polynomial via the closed divided-difference formulas

  s_i f = f^{s_i} s_i + u (f - f^{s_i})/(x_{i+1} - x_i)
                      + u (f^{nu} - f^{s_i})/(x_{i+1} + x_i) c_i c_{i+1}

(nu negates x_i, x_{i+1}) and the type-D / type-B variants for the last
generator.  Every division is exact; a nonzero remainder raises, since it
would mean the straightening rules are inconsistent.
"""

import functools
from fractions import Fraction

from .clifford import mul_masks
from .linear import LinComb, add_into
from .scalars import Scalar, named_constant
from .spin_weyl import act_mask
from .weyl import weyl_group

# -- sparse polynomials: dict exponent-tuple -> Scalar -----------------------


def padd_into(out, key, val):
    add_into(out, key, val)


def psub(f, g):
    out = dict(f)
    for key, val in g.items():
        padd_into(out, key, -val)
    return out


def pscale(f, s):
    out = {}
    for key, val in f.items():
        sv = s * val
        if sv:
            out[key] = sv
    return out


def pmul(f, g):
    out = {}
    for ka, va in f.items():
        for kb, vb in g.items():
            key = tuple(a + b for a, b in zip(ka, kb))
            padd_into(out, key, va * vb)
    return out


def pact(group, w, f):
    """f^w, substituting x_i -> sign(w(i)) x_|w(i)|."""
    out = {}
    for exps, val in f.items():
        exps2, sign = group.act_on_exponents(w, exps)
        padd_into(out, exps2, sign * val)
    return out


def pneg_vars(f, idxs):
    """Substitute x_i -> -x_i for i in idxs (1-based)."""
    out = {}
    for exps, val in f.items():
        flips = sum(exps[i - 1] for i in idxs)
        padd_into(out, exps, -val if flips % 2 else val)
    return out


class NonExactDivision(ArithmeticError):
    """A straightening numerator failed to divide; invariant breach."""


def pdiv_linear(f, a, sgn, b):
    """Exact division of f by (x_a + sgn*x_b), a != b, sgn = +-1."""
    work = dict(f)
    out = {}
    ia, ib = a - 1, b - 1
    while work:
        exps = max(work, key=lambda e: (e[ia], e))
        if exps[ia] == 0:
            raise NonExactDivision("remainder %r dividing by x%d %s x%d" % (work, a, "+" if sgn > 0 else "-", b))
        val = work.pop(exps)
        q = list(exps)
        q[ia] -= 1
        q = tuple(q)
        padd_into(out, q, val)
        r = list(q)
        r[ib] += 1
        padd_into(work, tuple(r), -val if sgn > 0 else val)
    return out


def pdiv_var(f, i, const):
    """Exact division of f by const * x_i (const a nonzero rational)."""
    inv = Fraction(1, 1) / Fraction(const)
    out = {}
    ii = i - 1
    for exps, val in f.items():
        if exps[ii] == 0:
            raise NonExactDivision("term %r not divisible by x%d" % (exps, i))
        q = list(exps)
        q[ii] -= 1
        out[tuple(q)] = inv * val
    return out


# -- the algebra --------------------------------------------------------------


class AHCElt(LinComb):
    """PBW normal form: keys (alpha, mask, w)."""

    def __mul__(self, other):
        if not isinstance(other, LinComb):
            return self.scale(other)
        self._check(other)
        return self.alg.mul(self, other)


class IndElt(LinComb):
    """Element of IND = C[x_1..x_n] (x) C_n: keys (alpha, mask)."""


class AffineHeckeClifford:
    """ℌc_W for W of type A, B, or D at the given rank."""

    def __init__(self, family, n, allow_degenerate=False):
        self.group = weyl_group(family, n, allow_degenerate)
        self.family = family
        self.n = n
        self._zero_exps = (0,) * n
        self._u = Scalar.u()
        self._sqrt2v = Scalar({(0, 1): named_constant("sqrt2")})

    # -- constructors --------------------------------------------------------

    def zero(self):
        return AHCElt(self, {})

    def one(self):
        return AHCElt(self, {(self._zero_exps, 0, self.group.identity()): Scalar.one()})

    def from_scalar(self, s):
        return AHCElt(self, {(self._zero_exps, 0, self.group.identity()): s})

    def x(self, i, power=1):
        exps = [0] * self.n
        exps[i - 1] = power
        return AHCElt(self, {(tuple(exps), 0, self.group.identity()): Scalar.one()})

    def c(self, i):
        return AHCElt(self, {(self._zero_exps, 1 << (i - 1), self.group.identity()): Scalar.one()})

    def s(self, i):
        return AHCElt(self, {(self._zero_exps, 0, self.group.generator(i)): Scalar.one()})

    def from_poly(self, f):
        return AHCElt(self, {(exps, 0, self.group.identity()): val for exps, val in f.items()})

    def generators(self):
        gens = [self.x(i) for i in range(1, self.n + 1)]
        gens += [self.c(i) for i in range(1, self.n + 1)]
        gens += [self.s(i) for i in range(1, self.group.num_gens + 1)]
        return gens

    # -- straightening -------------------------------------------------------

    def _si_parts(self, i, f):
        """s_i * f as [(poly, extra-clifford-mask, si-attached?)] triples."""
        group = self.group
        si = group.generator(i)
        fs = pact(group, si, f)
        n = self.n
        if self.family != "A" and i == n:
            if self.family == "B":
                dd = pdiv_var(psub(f, fs), n, 2)
                return [
                    (fs, 0, True),
                    (pscale(dd, -self._sqrt2v), 0, False),
                ]
            # type D last generator
            fnu = pneg_vars(f, (n - 1, n))
            d1 = pdiv_linear(psub(f, fs), n, +1, n - 1)
            d2 = pdiv_linear(psub(fnu, fs), n, -1, n - 1)
            cc = (1 << (n - 2)) | (1 << (n - 1))
            return [
                (fs, 0, True),
                (pscale(d1, -self._u), 0, False),
                (pscale(d2, self._u), cc, False),
            ]
        fnu = pneg_vars(f, (i, i + 1))
        d1 = pdiv_linear(psub(f, fs), i + 1, -1, i)
        d2 = pdiv_linear(psub(fnu, fs), i + 1, +1, i)
        cc = (1 << (i - 1)) | (1 << i)
        return [
            (fs, 0, True),
            (pscale(d1, self._u), 0, False),
            (pscale(d2, self._u), cc, False),
        ]

    def _lmul_s(self, i, elt):
        group = self.group
        si = group.generator(i)
        out = {}
        for (exps, mask, w), coef in elt.terms.items():
            f = {exps: coef}
            for poly, ccmask, with_si in self._si_parts(i, f):
                if with_si:
                    sgn_act, mask2 = act_mask(group, si, mask)
                    w2 = group.mul(si, w)
                    for exps2, val in poly.items():
                        add_into(out, (exps2, mask2, w2), sgn_act * val)
                else:
                    if ccmask:
                        sgn_cc, mask2 = mul_masks(ccmask, mask)
                    else:
                        sgn_cc, mask2 = 1, mask
                    for exps2, val in poly.items():
                        add_into(out, (exps2, mask2, w), sgn_cc * val)
        return AHCElt(self, out)

    def _lmul_c(self, i, elt):
        ci = 1 << (i - 1)
        out = {}
        for (exps, mask, w), coef in elt.terms.items():
            sign = -1 if exps[i - 1] % 2 else 1
            sgn_m, mask2 = mul_masks(ci, mask)
            add_into(out, (exps, mask2, w), sign * sgn_m * coef)
        return AHCElt(self, out)

    def _lmul_x(self, i, power, elt):
        # x_i is already leftmost in the normal form, so no sign appears
        out = {}
        for (exps, mask, w), coef in elt.terms.items():
            exps2 = list(exps)
            exps2[i - 1] += power
            add_into(out, (tuple(exps2), mask, w), coef)
        return AHCElt(self, out)

    def mul(self, a, b):
        out = {}
        for (exps, mask, w), coef in a.terms.items():
            cur = b
            for j in reversed(self.group.canonical_word(w)):
                cur = self._lmul_s(j, cur)
            for i in range(self.n, 0, -1):
                if (mask >> (i - 1)) & 1:
                    cur = self._lmul_c(i, cur)
            for i in range(self.n, 0, -1):
                if exps[i - 1]:
                    cur = self._lmul_x(i, exps[i - 1], cur)
            for key, val in cur.terms.items():
                add_into(out, key, coef * val)
        return AHCElt(self, out)

    # -- the induced module IND ------------------------------------------------

    def ind_one(self):
        return IndElt(self, {(self._zero_exps, 0): Scalar.one()})

    def ind_from(self, f=None, mask=0):
        if f is None:
            f = {self._zero_exps: Scalar.one()}
        return IndElt(self, {(exps, mask): val for exps, val in f.items()})

    def _ind_s(self, i, m):
        group = self.group
        si = group.generator(i)
        out = {}
        for (exps, mask), coef in m.terms.items():
            f = {exps: coef}
            for poly, ccmask, with_si in self._si_parts(i, f):
                if with_si:
                    sgn_act, mask2 = act_mask(group, si, mask)
                    for exps2, val in poly.items():
                        add_into(out, (exps2, mask2), sgn_act * val)
                else:
                    if ccmask:
                        sgn_cc, mask2 = mul_masks(ccmask, mask)
                    else:
                        sgn_cc, mask2 = 1, mask
                    for exps2, val in poly.items():
                        add_into(out, (exps2, mask2), sgn_cc * val)
        return IndElt(self, out)

    def _ind_c(self, i, m):
        ci = 1 << (i - 1)
        out = {}
        for (exps, mask), coef in m.terms.items():
            sign = -1 if exps[i - 1] % 2 else 1
            sgn_m, mask2 = mul_masks(ci, mask)
            add_into(out, (exps, mask2), sign * sgn_m * coef)
        return IndElt(self, out)

    def _ind_x(self, i, power, m):
        out = {}
        for (exps, mask), coef in m.terms.items():
            exps2 = list(exps)
            exps2[i - 1] += power
            add_into(out, (tuple(exps2), mask), coef)
        return IndElt(self, out)

    def ind_act(self, g, m):
        """Action of g on IND; the PBW-independence witness."""
        out = {}
        for (exps, mask, w), coef in g.terms.items():
            cur = m
            for j in reversed(self.group.canonical_word(w)):
                cur = self._ind_s(j, cur)
            for i in range(self.n, 0, -1):
                if (mask >> (i - 1)) & 1:
                    cur = self._ind_c(i, cur)
            for i in range(self.n, 0, -1):
                if exps[i - 1]:
                    cur = self._ind_x(i, exps[i - 1], cur)
            for key, val in cur.terms.items():
                add_into(out, key, coef * val)
        return IndElt(self, out)

    # -- intertwiners ----------------------------------------------------------

    def intertwiner_phi(self, i):
        n = self.n
        u = self._u
        e = self.group.identity()
        si = self.group.generator(i)

        def exps(**kw):
            out = [0] * n
            for k, v in kw.items():
                out[int(k[1:]) - 1] = v
            return tuple(out)

        if self.family != "A" and i == n:
            if self.family == "B":
                return AHCElt(
                    self,
                    {
                        (exps(**{"x%d" % n: 2}), 0, si): Scalar.from_cyc8(2),
                        (exps(**{"x%d" % n: 1}), 0, e): self._sqrt2v,
                    },
                )
            cc = (1 << (n - 2)) | (1 << (n - 1))
            return AHCElt(
                self,
                {
                    (exps(**{"x%d" % n: 2}), 0, si): Scalar.one(),
                    (exps(**{"x%d" % (n - 1): 2}), 0, si): -Scalar.one(),
                    (exps(**{"x%d" % n: 1}), 0, e): u,
                    (exps(**{"x%d" % (n - 1): 1}), 0, e): -u,
                    (exps(**{"x%d" % n: 1}), cc, e): -u,
                    (exps(**{"x%d" % (n - 1): 1}), cc, e): -u,
                },
            )
        cc = (1 << (i - 1)) | (1 << i)
        return AHCElt(
            self,
            {
                (exps(**{"x%d" % (i + 1): 2}), 0, si): Scalar.one(),
                (exps(**{"x%d" % i: 2}), 0, si): -Scalar.one(),
                (exps(**{"x%d" % (i + 1): 1}), 0, e): -u,
                (exps(**{"x%d" % i: 1}), 0, e): -u,
                (exps(**{"x%d" % (i + 1): 1}), cc, e): -u,
                (exps(**{"x%d" % i: 1}), cc, e): u,
            },
        )

    # -- (anti-)involutions ------------------------------------------------------

    def apply_involution(self, which, a):
        if which == "sigma":
            if self.family != "D":
                raise ValueError("sigma is defined for type D only")
            return self._sigma(a)
        if which not in ("tau1", "tau2"):
            raise ValueError("unknown involution %r" % (which,))
        if self.family != "D":
            raise ValueError("%s is implemented for type D only" % which)
        out = self.zero()
        for (exps, mask, w), coef in a.terms.items():
            k = bin(mask).count("1")
            sign = -1 if (k * (k - 1) // 2) % 2 else 1
            if which == "tau2" and k % 2:
                sign = -sign
            part = AHCElt(self, {(self._zero_exps, 0, self.group.inverse(w)): Scalar.one()})
            part = self.mul(part, AHCElt(self, {(self._zero_exps, mask, self.group.identity()): Scalar.one()}))
            part = self.mul(part, AHCElt(self, {(exps, 0, self.group.identity()): Scalar.one()}))
            out = out + part.scale(sign * coef)
        return out

    def _sigma(self, a):
        n = self.n
        group = self.group
        out = {}
        swap = {n: n - 1, n - 1: n}
        for (exps, mask, w), coef in a.terms.items():
            sign = 1
            if exps[n - 1] % 2:
                sign = -sign
            if (mask >> (n - 1)) & 1:
                sign = -sign
            w2 = group.identity()
            for j in group.canonical_word(w):
                w2 = group.mul(w2, group.generator(swap.get(j, j)))
            add_into(out, (exps, mask, w2), sign * coef)
        return AHCElt(self, out)

    # -- center ----------------------------------------------------------------

    def commutes_with_generators(self, elt):
        for g in self.generators():
            if self.mul(g, elt) != self.mul(elt, g):
                return False
        return True

    def center_commutator_check(self, f_squared):
        """f_squared: poly in the squared variables, keys are exponent tuples
        of x_i^2 (i.e. stored exponents get doubled)."""
        f = {tuple(2 * e for e in exps): val for exps, val in f_squared.items()}
        return self.commutes_with_generators(self.from_poly(f))

    # -- type-B dilation (test-only) ---------------------------------------------

    def dilate(self, elt, factor):
        """x_i -> factor * x_i on basis keys; pairs with u,v -> factor*u, factor*v."""
        out = {}
        for (exps, mask, w), coef in elt.terms.items():
            scale = Scalar.one()
            for _ in range(sum(exps)):
                scale = scale * Scalar.from_cyc8(factor)
            add_into(out, (exps, mask, w), scale * coef)
        return AHCElt(self, out)


def ahc_algebra(family, n, allow_degenerate=False):
    return _ahc_algebra(family, n, bool(allow_degenerate))


@functools.lru_cache(maxsize=None)
def _ahc_algebra(family, n, allow_degenerate):
    return AffineHeckeClifford(family, n, allow_degenerate)


def ahc_mul(a, b):
    return a.alg.mul(a, b)
