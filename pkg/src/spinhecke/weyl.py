"""Classical Weyl groups of types A, B, D as (signed) permutation groups.

Elements are tuples `images` of signed 1-based integers: position i holds
w(i) = +-pi(i).  Multiplication mul(p, q) is "q first, then p", so acting
on polynomials by a then b matches mul(b, a).  Canonical reduced words are
the lexicographically smallest reduced expressions, found by breadth-first
search from the identity; they fix the labeling of the spin basis t_w.
"""

import functools

FAMILIES = ("A", "B", "D")

# |W|: A_{n-1} -> n!, B_n -> 2^n n!, D_n -> 2^(n-1) n!


class WeylGroup:
    """Type/rank pair; rank is the number of x-variables (n)."""

    def __init__(self, family, n, allow_degenerate=False):
        if family not in FAMILIES:
            raise ValueError("unknown family %r" % (family,))
        if family == "A" and n < 2:
            raise ValueError("type A needs n >= 2")
        if family == "B" and n < 2 and not allow_degenerate:
            raise ValueError("type B needs n >= 2 (pass allow_degenerate to override)")
        if family == "D" and n < 4 and not allow_degenerate:
            raise ValueError("type D needs n >= 4 (pass allow_degenerate to override)")
        if family == "D" and n < 2:
            raise ValueError("type D needs n >= 2 even when degenerate")
        self.family = family
        self.n = n
        self.num_gens = n - 1 if family == "A" else n
        self._words = None  # element -> canonical word, built once

    # -- elements ----------------------------------------------------------

    def identity(self):
        return tuple(range(1, self.n + 1))

    def generator(self, i):
        if not 1 <= i <= self.num_gens:
            raise ValueError("generator index %d out of range" % i)
        img = list(range(1, self.n + 1))
        n = self.n
        if self.family == "B" and i == n:
            img[n - 1] = -n
        elif self.family == "D" and i == n:
            img[n - 2] = -n
            img[n - 1] = -(n - 1)
        else:
            img[i - 1] = i + 1
            img[i] = i
        return tuple(img)

    def mul(self, p, q):
        """p after q: (p*q)(i) = sign(q(i)) * p(|q(i)|)."""
        if len(p) != self.n or len(q) != self.n:
            raise ValueError("rank mismatch")
        out = []
        for qi in q:
            pi = p[abs(qi) - 1]
            out.append(pi if qi > 0 else -pi)
        return tuple(out)

    def inverse(self, w):
        out = [0] * self.n
        for i, wi in enumerate(w, start=1):
            out[abs(wi) - 1] = i if wi > 0 else -i
        return tuple(out)

    def word_to_element(self, word):
        elt = self.identity()
        for j in word:
            elt = self.mul(elt, self.generator(j))
        return elt

    def is_valid(self, w):
        if len(w) != self.n or sorted(abs(x) for x in w) != list(range(1, self.n + 1)):
            return False
        negs = sum(1 for x in w if x < 0)
        if self.family == "A":
            return negs == 0
        if self.family == "D":
            return negs % 2 == 0
        return True

    def order(self):
        f = 1
        for k in range(2, self.n + 1):
            f *= k
        if self.family == "A":
            return f
        if self.family == "B":
            return f * 2 ** self.n
        return f * 2 ** (self.n - 1)

    # -- Coxeter data ------------------------------------------------------

    def coxeter_order(self, i, j):
        """m_ij from the Coxeter diagram."""
        for k in (i, j):
            if not 1 <= k <= self.num_gens:
                raise ValueError("generator index %d out of range" % k)
        if i == j:
            return 1
        i, j = min(i, j), max(i, j)
        n = self.n
        if self.family == "B" and j == n:
            return 4 if i == n - 1 else 2
        if self.family == "D" and j == n:
            return 3 if i == n - 2 else 2
        return 3 if j - i == 1 else 2

    # -- canonical words ---------------------------------------------------

    def _build_words(self):
        words = {self.identity(): ()}
        frontier = [((), self.identity())]
        gens = [(j, self.generator(j)) for j in range(1, self.num_gens + 1)]
        while frontier:
            nxt = []
            for word, elt in frontier:
                for j, g in gens:
                    elt2 = self.mul(elt, g)
                    if elt2 not in words:
                        w2 = word + (j,)
                        words[elt2] = w2
                        nxt.append((w2, elt2))
            nxt.sort(key=lambda p: p[0])
            frontier = nxt
        self._words = words

    @property
    def words(self):
        if self._words is None:
            self._build_words()
        return self._words

    def canonical_word(self, w):
        """Lex-smallest reduced expression for w, stable across runs."""
        try:
            return self.words[w]
        except KeyError:
            raise ValueError("not a valid element of %s_%d: %r" % (self.family, self.n, w)) from None

    def length(self, w):
        return len(self.canonical_word(w))

    def elements(self):
        return list(self.words)

    # -- actions -----------------------------------------------------------

    def act_index(self, w, i):
        """Signed image of index i under w."""
        return w[i - 1]

    def act_on_exponents(self, w, exps):
        """(x^exps)^w = sign * x^(new exps), substituting x_i -> sgn(w(i)) x_|w(i)|."""
        if len(exps) != self.n:
            raise ValueError("rank mismatch")
        out = [0] * self.n
        sign = 1
        for i, e in enumerate(exps):
            wi = w[i]
            out[abs(wi) - 1] += e
            if wi < 0 and e % 2:
                sign = -sign
        return tuple(out), sign


def weyl_group(family, n, allow_degenerate=False):
    """Shared per-(family, rank) instance so BFS tables are built once."""
    return _weyl_group(family, n, bool(allow_degenerate))


@functools.lru_cache(maxsize=None)
def _weyl_group(family, n, allow_degenerate):
    return WeylGroup(family, n, allow_degenerate)
