"""Exact arithmetic in the coefficient ring Q(zeta_8)[u, v].

Cyc8 is the cyclotomic field Q(zeta) with zeta a primitive 8th root of
unity (zeta^4 = -1).  It contains sqrt(-1) = zeta^2, sqrt(2) = zeta - zeta^3
and sqrt(-2) = zeta + zeta^3, which covers every constant needed by the
algebras in this package.  Scalar is a sparse polynomial in two central
formal parameters u, v with Cyc8 coefficients.
"""

from fractions import Fraction


class Cyc8:
    """a + b*zeta + c*zeta^2 + d*zeta^3 with zeta^4 = -1, coefficients in Q."""

    __slots__ = ("coords",)

    def __init__(self, a=0, b=0, c=0, d=0):
        self.coords = (Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    @staticmethod
    def _from_coords(coords):
        z = Cyc8.__new__(Cyc8)
        z.coords = tuple(coords)
        return z

    def __add__(self, other):
        other = _as_cyc8(other)
        return Cyc8._from_coords(x + y for x, y in zip(self.coords, other.coords))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_cyc8(other)
        return Cyc8._from_coords(x - y for x, y in zip(self.coords, other.coords))

    def __rsub__(self, other):
        return _as_cyc8(other) - self

    def __neg__(self):
        return Cyc8._from_coords(-x for x in self.coords)

    def __mul__(self, other):
        other = _as_cyc8(other)
        out = [Fraction(0)] * 4
        for k, x in enumerate(self.coords):
            if not x:
                continue
            for l, y in enumerate(other.coords):
                if not y:
                    continue
                m = k + l
                if m >= 4:
                    out[m - 4] -= x * y
                else:
                    out[m] += x * y
        return Cyc8._from_coords(out)

    __rmul__ = __mul__

    def galois(self, k):
        """Apply zeta -> zeta^k for odd k; the four maps form Gal(Q(zeta8)/Q)."""
        out = [Fraction(0)] * 4
        for j, x in enumerate(self.coords):
            m = (j * k) % 8
            if m >= 4:
                out[m - 4] -= x
            else:
                out[m] += x
        return Cyc8._from_coords(out)

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta8)")
        conj = self.galois(3) * self.galois(5) * self.galois(7)
        norm = self * conj
        assert norm.is_rational(), "norm must be rational"
        return Cyc8._from_coords(x / norm.coords[0] for x in conj.coords)

    def __truediv__(self, other):
        return self * _as_cyc8(other).inverse()

    def __eq__(self, other):
        try:
            other = _as_cyc8(other)
        except TypeError:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def rational_part(self):
        return self.coords[0]

    def __repr__(self):
        return "Cyc8(%s, %s, %s, %s)" % self.coords


def _as_cyc8(x):
    if isinstance(x, Cyc8):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc8(x)
    raise TypeError("cannot coerce %r to Cyc8" % (x,))


ONE = Cyc8(1)
ZERO = Cyc8()

_CONSTANTS = {
    "i": Cyc8(0, 0, 1, 0),
    "sqrt2": Cyc8(0, 1, 0, -1),
    "sqrtm2": Cyc8(0, 1, 0, 1),
    "inv_sqrt2": Cyc8(0, Fraction(1, 2), 0, Fraction(-1, 2)),
    "inv_sqrtm2": Cyc8(0, Fraction(-1, 2), 0, Fraction(-1, 2)),
}


def named_constant(name):
    """Canonical embeddings of i, sqrt2, sqrt(-2) and their inverses."""
    try:
        return _CONSTANTS[name]
    except KeyError:
        raise ValueError("unknown constant %r" % (name,)) from None


class Scalar:
    """Sparse polynomial in u, v over Cyc8; keys (deg_u, deg_v), no zero values."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, val in terms.items():
                if val:
                    self.terms[key] = val

    @staticmethod
    def zero():
        return Scalar()

    @staticmethod
    def one():
        return Scalar({(0, 0): ONE})

    @staticmethod
    def u():
        return Scalar({(1, 0): ONE})

    @staticmethod
    def v():
        return Scalar({(0, 1): ONE})

    @staticmethod
    def from_cyc8(c):
        return Scalar({(0, 0): _as_cyc8(c)})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        try:
            other = _as_scalar(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for key, val in other.terms.items():
            s = out.get(key, ZERO) + val
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        res = Scalar.__new__(Scalar)
        res.terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_scalar(other))

    def __rsub__(self, other):
        return _as_scalar(other) + (-self)

    def __neg__(self):
        res = Scalar.__new__(Scalar)
        res.terms = {k: -v for k, v in self.terms.items()}
        return res

    def __mul__(self, other):
        try:
            other = _as_scalar(other)
        except TypeError:
            return NotImplemented
        out = {}
        for (a, b), x in self.terms.items():
            for (c, d), y in other.terms.items():
                key = (a + c, b + d)
                s = out.get(key, ZERO) + x * y
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        res = Scalar.__new__(Scalar)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def specialize(self, u0, v0):
        """Evaluate at u = u0, v = v0 (Cyc8 values); a ring homomorphism."""
        u0 = _as_cyc8(u0)
        v0 = _as_cyc8(v0)
        total = ZERO
        for (a, b), coef in self.terms.items():
            piece = coef
            for _ in range(a):
                piece = piece * u0
            for _ in range(b):
                piece = piece * v0
            total = total + piece
        return total

    def constant_cyc8(self):
        """The Cyc8 value of a degree-zero scalar; error otherwise."""
        if not self.terms:
            return ZERO
        if set(self.terms) != {(0, 0)}:
            raise ValueError("scalar has positive degree in u or v")
        return self.terms[(0, 0)]

    def __repr__(self):
        return "Scalar(%r)" % (self.terms,)


def _as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, Cyc8)):
        return Scalar.from_cyc8(x)
    raise TypeError("cannot coerce %r to Scalar" % (x,))


def scalar_arith(a, b, op):
    """Exact add/sub/mul on Scalars, canonical sparse result."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % (op,))
