"""Degenerate spin affine Hecke algebras for types A, B, D.

Elements live in the PBW basis b^alpha t_w, where the b_i are the skew
polynomial generators (b_i b_j = -b_j b_i for i != j, b_i^2 commuting) and
the t_w form the spin Weyl group algebra basis.  Products are normalized by
pushing t-letters through b-monomials with the local rewrite rules

  t_i b_i = u - b_{i+1} t_i        (and its companion t_i b_{i+1} = u - b_i t_i)
  t_i b_j = -b_j t_i               (j distant)

together with the type-D and type-B variants for the last generator.  The
t-part multiplies through the sign cocycle of the spin Weyl group algebra.

The module also hosts the Clifford-tensor model C_n (x) H^- and the affine
isomorphisms phi_affine / psi_affine connecting it with the affine
Hecke-Clifford algebra.
"""

import functools

from .affine_hc import AHCElt, ahc_algebra
from .clifford import mul_masks
from .linear import LinComb, add_into
from .scalars import Scalar, named_constant
from .spin_weyl import spin_algebra


def sort_b_letters(letters):
    """Sort a b-letter sequence ascending; returns (sign, exponent-sorted list).

    Distinct letters anticommute, equal letters commute, so the sign is the
    parity of inversions between distinct indices.
    """
    sign = 1
    for p in range(len(letters)):
        for q in range(p + 1, len(letters)):
            if letters[p] > letters[q]:
                sign = -sign
    return sign, sorted(letters)


class SpinAHElt(LinComb):
    """PBW normal form: keys (alpha, w)."""

    def __mul__(self, other):
        if not isinstance(other, LinComb):
            return self.scale(other)
        self._check(other)
        return self.alg.mul(self, other)

    def parity(self):
        ps = set()
        for (alpha, w), _ in self.terms.items():
            ps.add((sum(alpha) + self.alg.group.length(w)) % 2)
        if len(ps) > 1:
            raise ValueError("element is not Z2-homogeneous")
        return ps.pop() if ps else 0


class SpinAffineHecke:
    """H^-_W for W of type A, B, or D at the given rank."""

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
        return SpinAHElt(self, {})

    def one(self):
        return SpinAHElt(self, {(self._zero_exps, self.group.identity()): Scalar.one()})

    def from_scalar(self, s):
        return SpinAHElt(self, {(self._zero_exps, self.group.identity()): s})

    def b(self, i, power=1):
        exps = [0] * self.n
        exps[i - 1] = power
        return SpinAHElt(self, {(tuple(exps), self.group.identity()): Scalar.one()})

    def t(self, i):
        return SpinAHElt(self, {(self._zero_exps, self.group.generator(i)): Scalar.one()})

    def generators(self):
        gens = [self.b(i) for i in range(1, self.n + 1)]
        gens += [self.t(i) for i in range(1, self.group.num_gens + 1)]
        return gens

    # -- straightening -------------------------------------------------------

    def _t_rules(self, i):
        """Rewrites for t_i b_l: (l -> (scalar-term?, replacement-letter))."""
        n = self.n
        if self.family != "A" and i == n:
            if self.family == "B":
                return {n: (self._v, n)}
            return {n: (self._u, n - 1), n - 1: (self._u, n)}
        return {i: (self._u, i + 1), i + 1: (self._u, i)}

    def _lmul_t(self, i, elt):
        group = self.group
        si = group.generator(i)
        rules = self._t_rules(i)
        out = {}
        for (exps, w), coef in elt.terms.items():
            letters = []
            for idx in range(1, self.n + 1):
                letters.extend([idx] * exps[idx - 1])
            # branches: (coefficient sign/scalar, prefix letters, remaining, has_t)
            stack = [(coef, [], letters, True)]
            while stack:
                c, prefix, rest, has_t = stack.pop()
                if not has_t or not rest:
                    seq = prefix + (rest if has_t else rest)
                    sgn, ordered = sort_b_letters(seq)
                    exps2 = [0] * self.n
                    for l in ordered:
                        exps2[l - 1] += 1
                    if has_t:
                        mu = self.spin.cocycle(si, w)
                        key = (tuple(exps2), group.mul(si, w))
                        add_into(out, key, (sgn * mu) * c)
                    else:
                        key = (tuple(exps2), w)
                        add_into(out, key, sgn * c)
                    continue
                l, rest2 = rest[0], rest[1:]
                rule = rules.get(l)
                if rule is None:
                    stack.append((-c, prefix + [l], rest2, True))
                else:
                    param, repl = rule
                    stack.append((param * c, prefix, rest2, False))
                    stack.append((-c, prefix + [repl], rest2, True))
        return SpinAHElt(self, out)

    def _lmul_b(self, i, power, elt):
        out = {}
        for (exps, w), coef in elt.terms.items():
            below = sum(exps[:i - 1])
            sign = -1 if (below * power) % 2 else 1
            exps2 = list(exps)
            exps2[i - 1] += power
            add_into(out, (tuple(exps2), w), sign * coef)
        return SpinAHElt(self, out)

    def mul(self, a, b):
        out = {}
        for (exps, w), coef in a.terms.items():
            cur = b
            for j in reversed(self.group.canonical_word(w)):
                cur = self._lmul_t(j, cur)
            for i in range(self.n, 0, -1):
                if exps[i - 1]:
                    cur = self._lmul_b(i, exps[i - 1], cur)
            for key, val in cur.terms.items():
                add_into(out, key, coef * val)
        return SpinAHElt(self, out)

    # -- intertwiners ----------------------------------------------------------

    def intertwiner_I(self, i):
        n = self.n
        u = self._u
        e = self.group.identity()
        ti = self.group.generator(i)

        def exps(j, p):
            out = [0] * n
            out[j - 1] = p
            return tuple(out)

        if self.family != "A" and i == n:
            if self.family == "B":
                return SpinAHElt(
                    self,
                    {
                        (exps(n, 2), ti): Scalar.from_cyc8(2),
                        (exps(n, 1), e): -self._v,
                    },
                )
            return SpinAHElt(
                self,
                {
                    (exps(n, 2), ti): Scalar.one(),
                    (exps(n - 1, 2), ti): -Scalar.one(),
                    (exps(n, 1), e): -u,
                    (exps(n - 1, 1), e): u,
                },
            )
        return SpinAHElt(
            self,
            {
                (exps(i + 1, 2), ti): Scalar.one(),
                (exps(i, 2), ti): -Scalar.one(),
                (exps(i + 1, 1), e): -u,
                (exps(i, 1), e): u,
            },
        )

    # -- anti-involutions --------------------------------------------------------

    def apply_involution(self, which, a):
        if which not in ("tau1", "tau2"):
            raise ValueError("unknown involution %r" % (which,))
        out = self.zero()
        for (exps, w), coef in a.terms.items():
            # reversal sign of the b-monomial: distinct-index pairs flip
            cross = 0
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    cross += exps[i] * exps[j]
            sign = -1 if cross % 2 else 1
            if which == "tau1" and (sum(exps) + self.group.length(w)) % 2:
                sign = -sign
            part = self.one()
            for j in reversed(self.group.canonical_word(w)):
                part = self.mul(part, self.t(j))
            part = self.mul(part, SpinAHElt(self, {(exps, self.group.identity()): Scalar.one()}))
            out = out + part.scale(sign * coef)
        return out

    # -- center ----------------------------------------------------------------

    def commutes_with_generators(self, elt):
        for g in self.generators():
            if self.mul(g, elt) != self.mul(elt, g):
                return False
        return True

    def center_commutator_check(self, f_squared):
        """f_squared: poly in the squared b's; exponents get doubled."""
        terms = {
            (tuple(2 * e for e in exps), self.group.identity()): val
            for exps, val in f_squared.items()
        }
        return self.commutes_with_generators(SpinAHElt(self, terms))


# -- the Clifford-tensor model C_n (x) H^- -------------------------------------


class TensorSpinElt(LinComb):
    """Element of C_n (x) H^-; keys (mask, alpha, w)."""

    def _basis_mul(self, ka, kb):
        maska, alpha_a, wa = ka
        maskb, alpha_b, wb = kb
        sah = self.alg.sah
        ha = SpinAHElt(sah, {(alpha_a, wa): Scalar.one()})
        hb = SpinAHElt(sah, {(alpha_b, wb): Scalar.one()})
        parity_a = (sum(alpha_a) + sah.group.length(wa)) % 2
        koszul = -1 if parity_a and (bin(maskb).count("1") % 2) else 1
        sgn, mask = mul_masks(maska, maskb)
        prod = sah.mul(ha, hb)
        for (alpha, w), val in prod.terms.items():
            yield (mask, alpha, w), (koszul * sgn) * val


class TensorSpinAlgebra:
    """Holds the pair (C_n, H^-_W) and the affine isomorphisms."""

    def __init__(self, family, n, allow_degenerate=False):
        self.sah = SpinAffineHecke(family, n, allow_degenerate)
        self.group = self.sah.group
        self.family = family
        self.n = n
        self._zero_exps = (0,) * n

    def one(self):
        return TensorSpinElt(
            self, {(0, self._zero_exps, self.group.identity()): Scalar.one()}
        )

    def c(self, i):
        return TensorSpinElt(
            self, {(1 << (i - 1), self._zero_exps, self.group.identity()): Scalar.one()}
        )

    def b(self, i):
        exps = [0] * self.n
        exps[i - 1] = 1
        return TensorSpinElt(
            self, {(0, tuple(exps), self.group.identity()): Scalar.one()}
        )

    def t(self, i):
        return TensorSpinElt(
            self, {(0, self._zero_exps, self.group.generator(i)): Scalar.one()}
        )

    def embed_spin(self, a):
        """H^- element -> 1 (x) a."""
        return TensorSpinElt(
            self, {(0, alpha, w): val for (alpha, w), val in a.terms.items()}
        )


def sah_algebra(family, n, allow_degenerate=False):
    return _sah_algebra(family, n, bool(allow_degenerate))


@functools.lru_cache(maxsize=None)
def _sah_algebra(family, n, allow_degenerate):
    return SpinAffineHecke(family, n, allow_degenerate)


def tensor_spin_algebra(family, n, allow_degenerate=False):
    return _tensor_spin_algebra(family, n, bool(allow_degenerate))


@functools.lru_cache(maxsize=None)
def _tensor_spin_algebra(family, n, allow_degenerate):
    return TensorSpinAlgebra(family, n, allow_degenerate)


def sah_mul(a, b):
    return a.alg.mul(a, b)


# -- the affine isomorphisms ---------------------------------------------------


def _needs_degenerate(family, n):
    return (family == "B" and n < 2) or (family == "D" and n < 4)


def phi_affine(a):
    """AHC -> C_n (x) H^-:  x_i -> sqrt(-2) c_i b_i, c_i -> c_i,
    s_i -> -sqrt(-1) beta_i t_i."""
    H = a.alg
    T = tensor_spin_algebra(H.family, H.n, _needs_degenerate(H.family, H.n))
    sm2 = Scalar.from_cyc8(named_constant("sqrtm2"))
    mi = Scalar.from_cyc8(-named_constant("i"))
    betas = T.sah.spin.betas
    ximg = {i: (T.c(i) * T.b(i)).scale(sm2) for i in range(1, H.n + 1)}
    simg = {}
    for j, bj in betas.items():
        img = TensorSpinElt(T, {})
        for mask, val in bj.terms.items():
            img = img + TensorSpinElt(
                T, {(mask, T._zero_exps, T.group.generator(j)): mi * val}
            )
        simg[j] = img
    out = TensorSpinElt(T, {})
    for (exps, mask, w), coef in a.terms.items():
        img = T.one()
        for i in range(1, H.n + 1):
            for _ in range(exps[i - 1]):
                img = img * ximg[i]
        for i in range(1, H.n + 1):
            if (mask >> (i - 1)) & 1:
                img = img * T.c(i)
        for j in H.group.canonical_word(w):
            img = img * simg[j]
        out = out + img.scale(coef)
    return out


def psi_affine(a):
    """C_n (x) H^- -> AHC:  c_i -> c_i, b_i -> (1/sqrt(-2)) c_i x_i,
    t_i -> sqrt(-1) beta_i s_i."""
    T = a.alg
    H = ahc_algebra(T.family, T.n, _needs_degenerate(T.family, T.n))
    inv_sm2 = Scalar.from_cyc8(named_constant("inv_sqrtm2"))
    pi = Scalar.from_cyc8(named_constant("i"))
    betas = T.sah.spin.betas
    bimg = {i: (H.c(i) * H.x(i)).scale(inv_sm2) for i in range(1, T.n + 1)}
    timg = {}
    for j, bj in betas.items():
        img = H.zero()
        for mask, val in bj.terms.items():
            img = img + AHCElt(
                H, {((0,) * T.n, mask, H.group.generator(j)): pi * val}
            )
        timg[j] = img
    out = H.zero()
    for (mask, exps, w), coef in a.terms.items():
        img = H.one()
        for i in range(1, T.n + 1):
            if (mask >> (i - 1)) & 1:
                img = H.mul(img, H.c(i))
        for i in range(1, T.n + 1):
            for _ in range(exps[i - 1]):
                img = H.mul(img, bimg[i])
        for j in T.group.canonical_word(w):
            img = H.mul(img, timg[j])
        out = out + img.scale(coef)
    return out
