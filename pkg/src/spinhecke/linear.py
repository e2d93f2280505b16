"""Shared machinery for sparse linear combinations over Scalar."""

from .scalars import Scalar, _as_scalar


def add_into(out, key, val):
    s = out.get(key, Scalar.zero()) + val
    if s:
        out[key] = s
    else:
        out.pop(key, None)


class LinComb:
    """Finitely supported map basis-key -> Scalar, attached to an algebra.

    Subclasses implement _basis_mul(ka, kb) yielding (key, scalar) pairs.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {}
        if terms:
            for key, val in terms.items():
                val = _as_scalar(val)
                if val:
                    self.terms[key] = val

    def _new(self, terms):
        elt = type(self).__new__(type(self))
        elt.alg = self.alg
        elt.terms = terms
        return elt

    def _check(self, other):
        if type(other) is not type(self) or other.alg is not self.alg:
            raise ValueError("algebra mismatch in %s operation" % type(self).__name__)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, val in other.terms.items():
            add_into(out, key, val)
        return self._new(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def scale(self, s):
        s = _as_scalar(s)
        out = {}
        for key, val in self.terms.items():
            sv = s * val
            if sv:
                out[key] = sv
        return self._new(out)

    def __mul__(self, other):
        if not isinstance(other, LinComb):
            return self.scale(other)
        self._check(other)
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                coef = va * vb
                for key, s in self._basis_mul(ka, kb):
                    add_into(out, key, coef * s)
        return self._new(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.alg is self.alg
            and other.terms == self.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, self.terms)

    def _basis_mul(self, ka, kb):
        raise NotImplementedError
