"""The spin Weyl group algebra CW^-, its multiplication cocycle, the map
Omega: t_i -> beta_i into the Clifford algebra, and the finite-level
isomorphisms between C_W x| CW and C_W (x) CW^-.

The basis element t_w is the product t_{i1}...t_{ik} along the canonical
(lex-smallest) reduced word of w.  The cocycle mu(w, w') with
t_w t_{w'} = mu(w, w') t_{ww'} is computed through the Clifford model:
Omega(t_w)Omega(t_{w'}) = mu * Omega(t_{ww'}), each Omega image being an
invertible product of beta's.  An independent word-rewriting oracle
(cocycle_by_words) recomputes mu using only the double-cover relations,
via sign-tracked braid moves between reduced words (Tits' theorem).
"""

import functools

from .clifford import CliffordElt, beta, mul_masks, weyl_act_clifford
from .linear import LinComb, add_into
from .scalars import Scalar, named_constant
from .weyl import weyl_group


def act_mask(group, w, mask):
    """Image of the ordered monomial c^mask under w; returns (sign, mask)."""
    sign = 1
    letters = []
    i = 0
    mm = mask
    while mm:
        if mm & 1:
            wi = group.act_index(w, i + 1)
            if wi < 0:
                sign = -sign
            letters.append(abs(wi))
        mm >>= 1
        i += 1
    for p in range(len(letters)):
        for q in range(p + 1, len(letters)):
            if letters[p] > letters[q]:
                sign = -sign
    newmask = 0
    for l in letters:
        newmask |= 1 << (l - 1)
    return sign, newmask


class SpinWeylAlgebra:
    """Per-(family, rank) context holding all memo tables."""

    def __init__(self, family, n, allow_degenerate=False):
        self.group = weyl_group(family, n, allow_degenerate)
        self.family = family
        self.n = n
        self.betas = {
            i: beta(family, n, i) for i in range(1, self.group.num_gens + 1)
        }
        self._omega = {self.group.identity(): CliffordElt.one(n)}
        self._cocycle = {}
        self._word_signs = {}

    # -- Clifford route ------------------------------------------------------

    def omega_basis(self, w):
        cached = self._omega.get(w)
        if cached is not None:
            return cached
        img = CliffordElt.one(self.n)
        for j in self.group.canonical_word(w):
            img = img * self.betas[j]
        self._omega[w] = img
        return img

    def cocycle(self, w, w2):
        key = (w, w2)
        cached = self._cocycle.get(key)
        if cached is not None:
            return cached
        prod = self.omega_basis(w) * self.omega_basis(w2)
        target = self.omega_basis(self.group.mul(w, w2))
        if prod == target:
            sign = 1
        elif prod == -target:
            sign = -1
        else:
            raise RuntimeError(
                "cocycle is not +-1; beta table or canonical words are broken"
            )
        self._cocycle[key] = sign
        return sign

    # -- word-rewriting oracle -------------------------------------------------

    def _braid_moves(self, word):
        """Length-preserving sign-tracked rewrites from the CW^- relations."""
        cox = self.group.coxeter_order
        for p in range(len(word) - 1):
            i, j = word[p], word[p + 1]
            if i == j:
                continue
            m = cox(i, j)
            if m == 2:
                yield word[:p] + (j, i) + word[p + 2 :], -1
            elif m == 3:
                if p + 2 < len(word) and word[p + 2] == i:
                    yield word[:p] + (j, i, j) + word[p + 3 :], 1
            elif m == 4:
                if p + 3 < len(word) and word[p + 2] == i and word[p + 3] == j:
                    yield word[:p] + (j, i, j, i) + word[p + 4 :], -1

    def word_signs(self, elt):
        """All reduced words of elt with their sign relative to the canonical one."""
        cached = self._word_signs.get(elt)
        if cached is not None:
            return cached
        start = self.group.canonical_word(elt)
        signs = {start: 1}
        frontier = [start]
        while frontier:
            nxt = []
            for word in frontier:
                s = signs[word]
                for word2, factor in self._braid_moves(word):
                    s2 = s * factor
                    if word2 in signs:
                        if signs[word2] != s2:
                            raise RuntimeError("inconsistent signs among reduced words")
                    else:
                        signs[word2] = s2
                        nxt.append(word2)
            frontier = nxt
        self._word_signs[elt] = signs
        return signs

    def _signed_append(self, sign, rword, elt, j):
        """Multiply t_{rword} (a reduced word of elt) by t_j on the right."""
        g = self.group.generator(j)
        elt2 = self.group.mul(elt, g)
        if self.group.length(elt2) > len(rword):
            return sign, rword + (j,), elt2
        signs = self.word_signs(elt)
        for word in signs:
            if word and word[-1] == j:
                # t_rword = signs[rword]*signs[word] * t_word; then t_j^2 = 1
                return sign * signs[rword] * signs[word], word[:-1], elt2
        raise RuntimeError("exchange condition failed; group tables are broken")

    def cocycle_by_words(self, w, w2):
        """mu(w, w2) recomputed with word rewriting only (no Clifford model)."""
        sign = 1
        rword = self.group.canonical_word(w)
        elt = w
        for j in self.group.canonical_word(w2):
            sign, rword, elt = self._signed_append(sign, rword, elt, j)
        return sign * self.word_signs(elt)[rword]

    # -- element constructors --------------------------------------------------

    def spin_one(self):
        return SpinWeylElt(self, {self.group.identity(): Scalar.one()})

    def t(self, i):
        return SpinWeylElt(self, {self.group.generator(i): Scalar.one()})

    def t_basis(self, w):
        return SpinWeylElt(self, {w: Scalar.one()})

    def semidirect_one(self):
        return SemidirectElt(self, {(0, self.group.identity()): Scalar.one()})

    def semidirect_c(self, i):
        return SemidirectElt(self, {(1 << (i - 1), self.group.identity()): Scalar.one()})

    def semidirect_s(self, i):
        return SemidirectElt(self, {(0, self.group.generator(i)): Scalar.one()})

    def tensor_one(self):
        return TensorElt(self, {(0, self.group.identity()): Scalar.one()})

    def tensor_c(self, i):
        return TensorElt(self, {(1 << (i - 1), self.group.identity()): Scalar.one()})

    def tensor_t(self, i):
        return TensorElt(self, {(0, self.group.generator(i)): Scalar.one()})

    # -- Omega and the finite isomorphisms --------------------------------------

    def omega(self, a):
        """Linear extension of t_w -> product of beta's along the canonical word."""
        out = CliffordElt(self.n)
        for w, coef in a.terms.items():
            out = out + self.omega_basis(w).scale(coef)
        return out

    def phi_fin(self, a):
        """C_W x| CW -> C_W (x) CW^-: identity on C_W, s_i -> -sqrt(-1) beta_i t_i."""
        mi = Scalar.from_cyc8(-named_constant("i"))
        images = {
            j: TensorElt(
                self,
                {(m, self.group.generator(j)): mi * v for m, v in self.betas[j].terms.items()},
            )
            for j in self.betas
        }
        out = {}
        for (mask, w), coef in a.terms.items():
            img = TensorElt(self, {(mask, self.group.identity()): Scalar.one()})
            for j in self.group.canonical_word(w):
                img = img * images[j]
            for key, val in img.scale(coef).terms.items():
                add_into(out, key, val)
        return TensorElt(self, out)

    def psi_fin(self, b):
        """C_W (x) CW^- -> C_W x| CW: identity on C_W, t_i -> sqrt(-1) beta_i s_i."""
        pi = Scalar.from_cyc8(named_constant("i"))
        images = {
            j: SemidirectElt(
                self,
                {(m, self.group.generator(j)): pi * v for m, v in self.betas[j].terms.items()},
            )
            for j in self.betas
        }
        out = {}
        for (mask, w), coef in b.terms.items():
            img = SemidirectElt(self, {(mask, self.group.identity()): Scalar.one()})
            for j in self.group.canonical_word(w):
                img = img * images[j]
            for key, val in img.scale(coef).terms.items():
                add_into(out, key, val)
        return SemidirectElt(self, out)


class SpinWeylElt(LinComb):
    """Element of CW^- in the t_w basis."""

    def _basis_mul(self, wa, wb):
        sign = self.alg.cocycle(wa, wb)
        yield self.alg.group.mul(wa, wb), Scalar.from_cyc8(sign)


class SemidirectElt(LinComb):
    """Element of C_W x| CW in the basis c^eps w."""

    def _basis_mul(self, ka, kb):
        maska, wa = ka
        maskb, wb = kb
        s1, maskb_img = act_mask(self.alg.group, wa, maskb)
        s2, mask = mul_masks(maska, maskb_img)
        yield (mask, self.alg.group.mul(wa, wb)), Scalar.from_cyc8(s1 * s2)


class TensorElt(LinComb):
    """Element of C_W (x) CW^-; super tensor sign uses |t_w| = length(w) mod 2."""

    def _basis_mul(self, ka, kb):
        maska, wa = ka
        maskb, wb = kb
        koszul = -1 if (self.alg.group.length(wa) % 2) and (bin(maskb).count("1") % 2) else 1
        s, mask = mul_masks(maska, maskb)
        mu = self.alg.cocycle(wa, wb)
        yield (mask, self.alg.group.mul(wa, wb)), Scalar.from_cyc8(koszul * s * mu)


def spin_mul(a, b):
    return a * b


def spin_algebra(family, n, allow_degenerate=False):
    return _spin_algebra(family, n, bool(allow_degenerate))


@functools.lru_cache(maxsize=None)
def _spin_algebra(family, n, allow_degenerate):
    return SpinWeylAlgebra(family, n, allow_degenerate)
