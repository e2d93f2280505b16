"""Exact Clifford algebra arithmetic: C_N on generators c_1..c_N with
c_i^2 = 1 and c_i c_j = -c_j c_i, plus the reflection-representation
generators beta_i spanning C_W for each Weyl type.

Basis monomials c^eps are encoded as bit masks (bit i-1 set means c_i is
present); the global ordering c_1^{e1}...c_N^{eN} fixes all signs.
"""

import math
from fractions import Fraction

from .scalars import Cyc8, Scalar, named_constant, _as_scalar
from .weyl import weyl_group


def mul_masks(a, b):
    """Ordered product c^a * c^b -> (sign, mask) using c_i^2=1, anticommutation."""
    sign = 1
    acc = a
    i = 0
    bb = b
    while bb:
        if bb & 1:
            bit = 1 << i
            above = acc >> (i + 1)
            if bin(above).count("1") % 2:
                sign = -sign
            acc ^= bit
        bb >>= 1
        i += 1
    return sign, acc


class CliffordElt:
    """Finitely supported map mask -> Scalar in C_N."""

    __slots__ = ("N", "terms")

    def __init__(self, N, terms=None):
        self.N = N
        self.terms = {}
        if terms:
            for key, val in terms.items():
                val = _as_scalar(val)
                if val:
                    self.terms[key] = val

    @staticmethod
    def one(N):
        return CliffordElt(N, {0: Scalar.one()})

    @staticmethod
    def generator(N, i):
        if not 1 <= i <= N:
            raise ValueError("generator index %d out of range" % i)
        return CliffordElt(N, {1 << (i - 1): Scalar.one()})

    @staticmethod
    def from_scalar(N, s):
        return CliffordElt(N, {0: _as_scalar(s)})

    def _binop(self, other, sgn):
        out = dict(self.terms)
        for key, val in other.terms.items():
            s = out.get(key, Scalar.zero()) + sgn * val
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return CliffordElt(self.N, out)

    def __add__(self, other):
        return self._binop(self._coerce(other), 1)

    def __sub__(self, other):
        return self._binop(self._coerce(other), -1)

    def __neg__(self):
        return CliffordElt(self.N, {k: -v for k, v in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, CliffordElt):
            if other.N != self.N:
                raise ValueError("Clifford rank mismatch")
            return other
        return CliffordElt.from_scalar(self.N, other)

    def __mul__(self, other):
        if not isinstance(other, CliffordElt):
            return self.scale(other)
        if other.N != self.N:
            raise ValueError("Clifford rank mismatch")
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                sign, key = mul_masks(ka, kb)
                s = out.get(key, Scalar.zero()) + sign * va * vb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return CliffordElt(self.N, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s):
        s = _as_scalar(s)
        return CliffordElt(self.N, {k: s * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, CliffordElt):
            other = CliffordElt.from_scalar(self.N, other)
        return self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset((k, hash(v)) for k, v in self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def parity(self):
        """Z2-degree; defined only for homogeneous elements."""
        ps = {bin(k).count("1") % 2 for k in self.terms}
        if len(ps) > 1:
            raise ValueError("element is not Z2-homogeneous")
        return ps.pop() if ps else 0

    def __repr__(self):
        return "CliffordElt(N=%d, %r)" % (self.N, self.terms)


def cliff_mul(a, b):
    return a * b


# -- beta tables -------------------------------------------------------------
#
# Each simple root is stored unnormalized with integer coordinates together
# with its squared length nsq (as computed in the Clifford algebra, v^2=nsq).
# beta_i = v_i / sqrt(nsq); for G2's second root nsq=6, whose square root is
# outside Q(zeta8), so only the scaled form is available there.

_EXTRA_COXETER = {
    "F4": {(1, 2): 3, (2, 3): 4, (3, 4): 3, (1, 3): 2, (1, 4): 2, (2, 4): 2},
    "G2": {(1, 2): 6},
}


def clifford_rank(family, n=None):
    if family in ("A", "B", "D"):
        if n is None:
            raise ValueError("rank required for classical families")
        return n
    if family == "F4":
        return 4
    if family == "G2":
        return 3
    raise ValueError("unknown family %r" % (family,))


def num_simple_roots(family, n=None):
    if family == "A":
        return n - 1
    if family in ("B", "D"):
        return n
    return 4 if family == "F4" else 2


def root_coxeter_order(family, n, i, j):
    if family in ("A", "B", "D"):
        return weyl_group(family, n, allow_degenerate=True).coxeter_order(i, j)
    if i == j:
        return 1
    key = (min(i, j), max(i, j))
    return _EXTRA_COXETER[family].get(key, 2)


def simple_root_vector(family, n, i):
    """Unnormalized root as a CliffordElt with integer coords, plus nsq."""
    N = clifford_rank(family, n)
    m = num_simple_roots(family, n)
    if not 1 <= i <= m:
        raise ValueError("root index %d out of range for %s" % (i, family))

    def vec(coeffs):
        terms = {}
        for idx, a in coeffs.items():
            terms[1 << (idx - 1)] = Scalar.from_cyc8(a)
        return CliffordElt(N, terms)

    if family in ("A", "B", "D") and i <= (n - 1):
        return vec({i: 1, i + 1: -1}), Fraction(2)
    if family == "B":
        return vec({n: 1}), Fraction(1)
    if family == "D":
        return vec({n - 1: 1, n: 1}), Fraction(2)
    if family == "F4":
        if i in (1, 2):
            return vec({i: 1, i + 1: -1}), Fraction(2)
        if i == 3:
            return vec({3: 1}), Fraction(1)
        return vec({4: 1, 1: -1, 2: -1, 3: -1}), Fraction(4)
    if family == "G2":
        if i == 1:
            return vec({1: 1, 2: -1}), Fraction(2)
        return vec({1: -2, 2: 1, 3: 1}), Fraction(6)
    raise ValueError("unknown family %r" % (family,))


def _inv_sqrt(nsq):
    """1/sqrt(nsq) as a Cyc8 element, for nsq in {1, 2, 4}."""
    if nsq == 1:
        return Cyc8(1)
    if nsq == 2:
        return named_constant("inv_sqrt2")
    if nsq == 4:
        return Cyc8(Fraction(1, 2))
    raise ValueError("sqrt(%s) is not in Q(zeta8)" % (nsq,))


def beta(family, n, i):
    """Normalized generator beta_i of C_W (beta_i^2 = 1)."""
    v, nsq = simple_root_vector(family, n, i)
    return v.scale(Scalar.from_cyc8(_inv_sqrt(nsq)))


def beta_braid_defect(family, n, i, j):
    """(beta_i beta_j)^{m_ij} - (-1)^{m_ij + 1}, computed with scaled roots.

    Works even when a single beta is not representable over Q(zeta8) (G2):
    the even total number of root factors keeps everything rational.
    """
    vi, nsqi = simple_root_vector(family, n, i)
    vj, nsqj = simple_root_vector(family, n, j)
    m = root_coxeter_order(family, n, i, j)
    if i == j:
        prod = vi * vi
        expect = Scalar.from_cyc8(nsqi)
    else:
        N = vi.N
        prod = CliffordElt.one(N)
        for _ in range(m):
            prod = prod * vi * vj
        scale2 = (nsqi * nsqj) ** m  # (nsq_i * nsq_j)^m must be a perfect square
        root = Fraction(_isqrt_exact(scale2.numerator), _isqrt_exact(scale2.denominator))
        expect = Scalar.from_cyc8((-1) ** (m + 1) * root)
    return prod - CliffordElt.from_scalar(prod.N, expect)


def _isqrt_exact(k):
    r = math.isqrt(k)
    if r * r != k:
        raise ValueError("%d is not a perfect square" % (k,))
    return r


def weyl_act_clifford(group, w, elt):
    """Automorphism action: c_i -> sign(w(i)) c_|w(i)|, extended multiplicatively."""
    if group.n != elt.N:
        raise ValueError("rank mismatch")
    out = {}
    for mask, val in elt.terms.items():
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
        # re-sort the image letters (all distinct) into mask order
        newmask = 0
        for p in range(len(letters)):
            for q in range(p + 1, len(letters)):
                if letters[p] > letters[q]:
                    sign = -sign
        for l in letters:
            newmask |= 1 << (l - 1)
        s = out.get(newmask, Scalar.zero()) + sign * val
        if s:
            out[newmask] = s
        else:
            out.pop(newmask, None)
    return CliffordElt(elt.N, out)
