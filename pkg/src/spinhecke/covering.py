"""Degenerate covering affine Hecke algebras and their two quotients.

The covering algebra has PBW basis z^k x~^alpha t~_w (k in {0,1}); keys are
(alpha, zbit, w).  The central element z has order 2 and interpolates:

  * Upsilon_+ (z = 1) gives the usual degenerate affine Hecke algebra
    (Lusztig's graded Hecke algebra) with commuting polynomial generators;
  * Upsilon_- (z = -1) gives the degenerate spin affine Hecke algebra.

The t~-part multiplies through the same sign cocycle as the spin Weyl group
algebra: t~_w t~_{w'} = z^{(1 - mu(w,w'))/2} t~_{ww'}.
"""

import functools

from .linear import LinComb, add_into
from .scalars import Scalar
from .spin_affine import SpinAHElt, sah_algebra
from .spin_weyl import spin_algebra


def sort_letters_z(letters):
    """Sort ascending; returns (z-exponent, sorted) counting distinct-index
    inversions (equal indices commute without z)."""
    zexp = 0
    for p in range(len(letters)):
        for q in range(p + 1, len(letters)):
            if letters[p] > letters[q]:
                zexp += 1
    return zexp, sorted(letters)


class CoverElt(LinComb):
    """PBW normal form: keys (alpha, zbit, w)."""

    def __mul__(self, other):
        if not isinstance(other, LinComb):
            return self.scale(other)
        self._check(other)
        return self.alg.mul(self, other)


class LusztigElt(LinComb):
    """The z = 1 quotient: keys (alpha, w); commuting polynomial part."""

    def __mul__(self, other):
        if not isinstance(other, LinComb):
            return self.scale(other)
        self._check(other)
        return self.alg.lusztig_mul(self, other)


class CoveringAlgebra:
    """H~_W for W of type A, B, or D at the given rank."""

    def __init__(self, family, n, allow_degenerate=False):
        self.spin = spin_algebra(family, n, allow_degenerate)
        self.group = self.spin.group
        self.family = family
        self.n = n
        self._zero_exps = (0,) * n
        self._u = Scalar.u()
        self._v = Scalar.v()

    # -- constructors --------------------------------------------------------

    def zero(self):
        return CoverElt(self, {})

    def one(self):
        return CoverElt(self, {(self._zero_exps, 0, self.group.identity()): Scalar.one()})

    def z(self):
        return CoverElt(self, {(self._zero_exps, 1, self.group.identity()): Scalar.one()})

    def x(self, i, power=1):
        exps = [0] * self.n
        exps[i - 1] = power
        return CoverElt(self, {(tuple(exps), 0, self.group.identity()): Scalar.one()})

    def t(self, i):
        return CoverElt(self, {(self._zero_exps, 0, self.group.generator(i)): Scalar.one()})

    def generators(self):
        gens = [self.x(i) for i in range(1, self.n + 1)]
        gens += [self.t(i) for i in range(1, self.group.num_gens + 1)]
        gens.append(self.z())
        return gens

    # -- straightening -------------------------------------------------------

    def _t_rules(self, i):
        """letter -> (replacement, z-on-continue, sign, param, z-on-param).

        t~_i x~_l = sign * z^zc * x~_repl t~_i + param * z^zp, with z^1 shorthand
        for multiplying by the central z.
        """
        n = self.n
        if self.family != "A" and i == n:
            if self.family == "B":
                return {n: (n, 0, -1, self._v, 0)}
            # Type D: the scalar term must be -z*u, not +u.  With +u the m=3
            # braid between generators n-2 and n forces u*(1 - t_{n-2}t_n) = 0
            # in the z = 1 quotient (all reflections are conjugate in type D,
            # so the parameter sign cannot be absorbed); -z*u is the unique
            # choice compatible with both central quotients.
            return {
                n: (n - 1, 0, -1, -self._u, 1),
                n - 1: (n, 0, -1, -self._u, 1),
            }
        return {
            i + 1: (i, 1, 1, self._u, 0),
            i: (i + 1, 1, 1, -self._u, 1),
        }

    def _lmul_t(self, i, elt):
        group = self.group
        si = group.generator(i)
        rules = self._t_rules(i)
        out = {}
        for (exps, zbit, w), coef in elt.terms.items():
            letters = []
            for idx in range(1, self.n + 1):
                letters.extend([idx] * exps[idx - 1])
            stack = [(coef, 0, [], letters, True)]
            while stack:
                c, zexp, prefix, rest, has_t = stack.pop()
                if not has_t or not rest:
                    dz, ordered = sort_letters_z(prefix + rest)
                    zexp += dz
                    exps2 = [0] * self.n
                    for l in ordered:
                        exps2[l - 1] += 1
                    if has_t:
                        mu = self.spin.cocycle(si, w)
                        if mu < 0:
                            zexp += 1
                        key = (tuple(exps2), (zbit + zexp) % 2, group.mul(si, w))
                    else:
                        key = (tuple(exps2), (zbit + zexp) % 2, w)
                    add_into(out, key, c)
                    continue
                l, rest2 = rest[0], rest[1:]
                rule = rules.get(l)
                if rule is None:
                    stack.append((c, zexp + 1, prefix + [l], rest2, True))
                else:
                    repl, zc, sign, param, zp = rule
                    stack.append((param * c, zexp + zp, prefix, rest2, False))
                    cc = -c if sign < 0 else c
                    stack.append((cc, zexp + zc, prefix + [repl], rest2, True))
        return CoverElt(self, out)

    def _lmul_x(self, i, power, elt):
        out = {}
        for (exps, zbit, w), coef in elt.terms.items():
            below = sum(exps[:i - 1])
            zexp = power * below
            exps2 = list(exps)
            exps2[i - 1] += power
            add_into(out, (tuple(exps2), (zbit + zexp) % 2, w), coef)
        return CoverElt(self, out)

    def mul(self, a, b):
        out = {}
        for (exps, zbit, w), coef in a.terms.items():
            cur = b
            for j in reversed(self.group.canonical_word(w)):
                cur = self._lmul_t(j, cur)
            for i in range(self.n, 0, -1):
                if exps[i - 1]:
                    cur = self._lmul_x(i, exps[i - 1], cur)
            for (exps2, zbit2, w2), val in cur.terms.items():
                add_into(out, (exps2, (zbit + zbit2) % 2, w2), coef * val)
        return CoverElt(self, out)

    # -- the Lusztig quotient (z = 1) ----------------------------------------

    def lusztig_one(self):
        return LusztigElt(self, {(self._zero_exps, self.group.identity()): Scalar.one()})

    def lusztig_x(self, i, power=1):
        exps = [0] * self.n
        exps[i - 1] = power
        return LusztigElt(self, {(tuple(exps), self.group.identity()): Scalar.one()})

    def lusztig_t(self, i):
        return LusztigElt(self, {(self._zero_exps, self.group.generator(i)): Scalar.one()})

    def lusztig_generators(self):
        gens = [self.lusztig_x(i) for i in range(1, self.n + 1)]
        gens += [self.lusztig_t(i) for i in range(1, self.group.num_gens + 1)]
        return gens

    def lift(self, a):
        """LusztigElt -> CoverElt section with zbit = 0."""
        return CoverElt(
            self, {(alpha, 0, w): val for (alpha, w), val in a.terms.items()}
        )

    def lusztig_mul(self, a, b):
        return upsilon_plus(self.mul(self.lift(a), self.lift(b)))


def upsilon_plus(a):
    """Quotient by z = 1: CoverElt -> LusztigElt."""
    alg = a.alg
    out = {}
    for (alpha, zbit, w), val in a.terms.items():
        add_into(out, (alpha, w), val)
    return LusztigElt(alg, out)


def upsilon_minus(a):
    """Quotient by z = -1: CoverElt -> SpinAHElt (x~_i -> b_i, t~_i -> t_i)."""
    alg = a.alg
    sah = sah_algebra(alg.family, alg.n, alg.group.n < _min_rank(alg.family))
    out = {}
    for (alpha, zbit, w), val in a.terms.items():
        add_into(out, (alpha, w), -val if zbit else val)
    return SpinAHElt(sah, out)


def _min_rank(family):
    return {"A": 2, "B": 2, "D": 4}[family]


def cover_algebra(family, n, allow_degenerate=False):
    return _cover_algebra(family, n, bool(allow_degenerate))


@functools.lru_cache(maxsize=None)
def _cover_algebra(family, n, allow_degenerate):
    return CoveringAlgebra(family, n, allow_degenerate)


def cover_mul(a, b):
    return a.alg.mul(a, b)


def lusztig_mul(a, b):
    return a.alg.lusztig_mul(a, b)
