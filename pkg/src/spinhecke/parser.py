"""Expression language: lexer, parser, evaluator, and deterministic renderer.

Grammar (whitespace-insensitive; '*' mandatory between atoms):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' nat)? | '(' expr ')'
    atom   := x<i> | c<i> | s<i> | t<i> | b<i> | X<i> | T<i> | z
            | u | v | i | r2 | nat ('/' nat)?

Which atoms are legal depends on the target algebra.  Rendering is fixed
globally: terms with a positive leading coefficient come first, then negative
ones; within each sign block terms sort by (total x-degree, exponent vector,
Clifford mask / z-bit, canonical word).  Coefficients print with i and r2
sugar (r2 denotes sqrt(2)); the output re-parses to the same element.
"""

import re
from fractions import Fraction

from .affine_hc import AHCElt, IndElt, ahc_algebra
from .clifford import CliffordElt
from .covering import CoverElt, LusztigElt, cover_algebra
from .scalars import Cyc8, Scalar
from .spin_affine import (
    SpinAHElt,
    TensorSpinElt,
    sah_algebra,
    tensor_spin_algebra,
)
from .spin_weyl import SemidirectElt, SpinWeylElt, TensorElt, spin_algebra


class ParseError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<atom>[xcstbXT]\d+|z\b|u\b|v\b|i\b|r2\b)"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<op>[-+*^()]))"
)


def tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            if src[pos:].strip() == "":
                break
            raise ParseError("lexical error at position %d: %r" % (pos, src[pos:]))
        pos = m.end()
        if m.group("atom"):
            tokens.append(("atom", m.group("atom")))
        elif m.group("num"):
            tokens.append(("num", Fraction(m.group("num"))))
        else:
            tokens.append(("op", m.group("op")))
    tokens.append(("end", None))
    return tokens


def parse(src):
    """Text -> AST of tuples ('add'|'sub'|'mul'|'neg'|'pow'|'atom'|'num', ...)."""
    tokens = tokenize(src)
    idx = [0]

    def peek():
        return tokens[idx[0]]

    def take():
        tok = tokens[idx[0]]
        idx[0] += 1
        return tok

    def factor():
        kind, val = peek()
        if (kind, val) == ("op", "-"):
            take()
            return ("neg", factor())
        if (kind, val) == ("op", "("):
            take()
            node = expr()
            if take() != ("op", ")"):
                raise ParseError("expected ')'")
        elif kind == "atom":
            take()
            node = ("atom", val)
        elif kind == "num":
            take()
            node = ("num", val)
        else:
            raise ParseError("unexpected token %r" % (val,))
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num" or val.denominator != 1 or val < 0:
                raise ParseError("exponent must be a nonnegative integer")
            node = ("pow", node, int(val))
        return node

    def term():
        node = factor()
        while peek() == ("op", "*"):
            take()
            node = ("mul", node, factor())
        return node

    def expr():
        node = term()
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            node = ("add" if op == "+" else "sub", node, term())
        return node

    node = expr()
    if peek()[0] != "end":
        raise ParseError("trailing input: %r" % (peek()[1],))
    return node


# -- evaluation contexts --------------------------------------------------------

_SCALAR_ATOMS = {
    "u": Scalar.u,
    "v": Scalar.v,
    "i": lambda: Scalar.from_cyc8(Cyc8(0, 0, 1, 0)),
    "r2": lambda: Scalar.from_cyc8(Cyc8(0, 1, 0, -1)),
}


class Context:
    """Target-algebra configuration: legal atoms and element constructors."""

    def __init__(self, algebra, family, rank):
        self.algebra = algebra
        self.family = family
        self.rank = rank
        if algebra == "ahc":
            alg = ahc_algebra(family, rank)
            self._one = alg.one()
            self._atoms = {"x": alg.x, "c": alg.c, "s": alg.s}
            self._ngens = alg.group.num_gens
        elif algebra == "spin":
            alg = sah_algebra(family, rank)
            self._one = alg.one()
            self._atoms = {"b": alg.b, "t": alg.t}
            self._ngens = alg.group.num_gens
        elif algebra == "cover":
            alg = cover_algebra(family, rank)
            self._one = alg.one()
            self._atoms = {"X": alg.x, "T": alg.t, "z": alg.z}
            self._ngens = alg.group.num_gens
        elif algebra == "lusztig":
            alg = cover_algebra(family, rank)
            self._one = alg.lusztig_one()
            self._atoms = {"x": alg.lusztig_x, "t": alg.lusztig_t}
            self._ngens = alg.group.num_gens
        elif algebra == "finite-spin":
            alg = spin_algebra(family, rank)
            self._one = alg.spin_one()
            self._atoms = {"t": alg.t}
            self._ngens = alg.group.num_gens
        elif algebra == "clifford":
            self._one = CliffordElt.one(rank)
            self._atoms = {"c": lambda i: CliffordElt.generator(rank, i)}
            self._ngens = rank
            alg = None
        elif algebra == "semidirect":
            alg = spin_algebra(family, rank)
            self._one = alg.semidirect_one()
            self._atoms = {"c": alg.semidirect_c, "s": alg.semidirect_s}
            self._ngens = alg.group.num_gens
        elif algebra == "tensor-fin":
            alg = spin_algebra(family, rank)
            self._one = alg.tensor_one()
            self._atoms = {"c": alg.tensor_c, "t": alg.tensor_t}
            self._ngens = alg.group.num_gens
        elif algebra == "tensor-spin":
            alg = tensor_spin_algebra(family, rank)
            self._one = alg.one()
            self._atoms = {"c": alg.c, "b": alg.b, "t": alg.t}
            self._ngens = alg.group.num_gens
        else:
            raise ValueError("unknown algebra %r" % (algebra,))
        self.alg = alg

    def one(self):
        return self._one

    def atom(self, name):
        if name in _SCALAR_ATOMS:
            return _SCALAR_ATOMS[name]()
        letter, digits = name[0], name[1:]
        if letter not in self._atoms:
            raise ParseError(
                "atom %r not available in algebra %r" % (name, self.algebra)
            )
        if letter == "z":
            return self._atoms["z"]()
        index = int(digits)
        bound = self._ngens if letter in "stT" else self.rank
        if not 1 <= index <= bound:
            raise ParseError("index out of range in %r (max %d)" % (name, bound))
        return self._atoms[letter](index)


def _is_scalar(val):
    return isinstance(val, Scalar)


def _promote(ctx, val):
    return ctx.one().scale(val) if _is_scalar(val) else val


def evaluate(ast, ctx):
    """AST -> normal-form element of the context's algebra."""
    kind = ast[0]
    if kind == "atom":
        return ctx.atom(ast[1])
    if kind == "num":
        return Scalar.from_cyc8(Cyc8(ast[1]))
    if kind == "neg":
        return -evaluate(ast[1], ctx)
    if kind == "pow":
        base = evaluate(ast[1], ctx)
        out = Scalar.one()
        for _ in range(ast[2]):
            prod = _mul(ctx, out, base)
            out = prod
        return out
    left = evaluate(ast[1], ctx)
    right = evaluate(ast[2], ctx)
    if kind == "mul":
        return _mul(ctx, left, right)
    if kind == "sub":
        right = -right
    if _is_scalar(left) and _is_scalar(right):
        return left + right
    return _promote(ctx, left) + _promote(ctx, right)


def _mul(ctx, a, b):
    if _is_scalar(a) and _is_scalar(b):
        return a * b
    if _is_scalar(a):
        return b.scale(a)
    if _is_scalar(b):
        return a.scale(b)
    return a * b


def eval_text(src, ctx):
    return _promote(ctx, evaluate(parse(src), ctx))


def specialize_element(elt, u0, v0):
    """Apply the coefficient homomorphism u -> u0, v -> v0 termwise.
    Passing None for u0 or v0 keeps that parameter symbolic."""
    out = {}
    for key, coef in elt.terms.items():
        acc = {}
        for (du, dv), c in coef.terms.items():
            if u0 is not None:
                for _ in range(du):
                    c = c * u0
                du = 0
            if v0 is not None:
                for _ in range(dv):
                    c = c * v0
                dv = 0
            prev = acc.get((du, dv))
            c = c if prev is None else prev + c
            if c:
                acc[(du, dv)] = c
            elif prev is not None:
                del acc[(du, dv)]
        if acc:
            out[key] = Scalar(acc)
    if isinstance(elt, CliffordElt):
        return CliffordElt(elt.N, out)
    return elt._new(out)


# -- deterministic rendering ------------------------------------------------------


def _cyc8_pieces(c):
    """Expand a + b*zeta + c*zeta^2 + d*zeta^3 as p + q*r2 + (r + s*r2)*i."""
    a, b, cc, d = c.coords
    return (
        (a, ""),
        ((b - d) / 2, "r2"),
        (cc, "i"),
        ((b + d) / 2, "r2*i"),
    )


def _frac_str(q):
    return str(q)


def _signed_join(pieces):
    """pieces: list of (Fraction, suffix str); returns (sign, body string)."""
    live = [(q, suf) for q, suf in pieces if q]
    if not live:
        return 1, "0"
    sign = 1 if live[0][0] > 0 else -1
    parts = []
    for k, (q, suf) in enumerate(live):
        mag = abs(q)
        if suf and mag == 1:
            txt = suf
        elif suf:
            txt = "%s*%s" % (_frac_str(mag), suf)
        else:
            txt = _frac_str(mag)
        if k == 0:
            parts.append(txt)
        else:
            parts.append((" + " if q * sign > 0 else " - ") + txt)
    return sign, "".join(parts)


def _cyc8_str(c):
    return _signed_join(_cyc8_pieces(c))


def _scalar_str(s):
    """Returns (sign, body, atomic) with sign pulled out of the leading term."""
    monos = sorted(s.terms, reverse=True)
    if not monos:
        return 1, "0", True
    lead_sign = _cyc8_str(s.terms[monos[0]])[0]
    parts = []
    for k, (du, dv) in enumerate(monos):
        csign, cbody = _cyc8_str(s.terms[(du, dv)])
        uv = []
        if du:
            uv.append("u" if du == 1 else "u^%d" % du)
        if dv:
            uv.append("v" if dv == 1 else "v^%d" % dv)
        composite = " + " in cbody or " - " in cbody
        if uv and composite:
            txt = "(%s)*%s" % (cbody, "*".join(uv))
        elif uv and cbody == "1":
            txt = "*".join(uv)
        elif uv:
            txt = "%s*%s" % (cbody, "*".join(uv))
        else:
            txt = cbody
        rel = csign * lead_sign
        if k == 0:
            parts.append(txt)
        else:
            parts.append((" + " if rel > 0 else " - ") + txt)
    body = "".join(parts)
    atomic = len(parts) == 1 and not (
        " + " in body or " - " in body
    )
    return lead_sign, body, atomic


def _mono_str(alpha, letter):
    out = []
    for j, e in enumerate(alpha, start=1):
        if e == 1:
            out.append("%s%d" % (letter, j))
        elif e:
            out.append("%s%d^%d" % (letter, j, e))
    return out


def _mask_str(mask, letter):
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append("%s%d" % (letter, j))
        mask >>= 1
        j += 1
    return out


def _word_str(word, letter):
    return ["%s%d" % (letter, j) for j in word]


def _term_key_parts(elt, key):
    """(sort tuple sans sign, basis-atom list) for one PBW key."""
    zeros = ()
    if isinstance(elt, AHCElt):
        alpha, mask, w = key
        word = elt.alg.group.canonical_word(w)
        atoms = _mono_str(alpha, "x") + _mask_str(mask, "c") + _word_str(word, "s")
        return (sum(alpha), alpha, mask, word), atoms
    if isinstance(elt, SpinAHElt):
        alpha, w = key
        word = elt.alg.group.canonical_word(w)
        atoms = _mono_str(alpha, "b") + _word_str(word, "t")
        return (sum(alpha), alpha, 0, word), atoms
    if isinstance(elt, CoverElt):
        alpha, zbit, w = key
        word = elt.alg.group.canonical_word(w)
        atoms = (["z"] if zbit else []) + _mono_str(alpha, "X") + _word_str(word, "T")
        return (sum(alpha), alpha, zbit, word), atoms
    if isinstance(elt, LusztigElt):
        alpha, w = key
        word = elt.alg.group.canonical_word(w)
        atoms = _mono_str(alpha, "x") + _word_str(word, "t")
        return (sum(alpha), alpha, 0, word), atoms
    if isinstance(elt, SpinWeylElt):
        word = elt.alg.group.canonical_word(key)
        return (0, zeros, 0, word), _word_str(word, "t")
    if isinstance(elt, SemidirectElt):
        mask, w = key
        word = elt.alg.group.canonical_word(w)
        return (0, zeros, mask, word), _mask_str(mask, "c") + _word_str(word, "s")
    if isinstance(elt, TensorElt):
        mask, w = key
        word = elt.alg.group.canonical_word(w)
        return (0, zeros, mask, word), _mask_str(mask, "c") + _word_str(word, "t")
    if isinstance(elt, TensorSpinElt):
        mask, alpha, w = key
        word = elt.alg.group.canonical_word(w)
        atoms = _mask_str(mask, "c") + _mono_str(alpha, "b") + _word_str(word, "t")
        return (sum(alpha), alpha, mask, word), atoms
    if isinstance(elt, IndElt):
        alpha, mask = key
        return (sum(alpha), alpha, mask, zeros), _mono_str(alpha, "x") + _mask_str(mask, "c")
    if isinstance(elt, CliffordElt):
        return (0, zeros, key, zeros), _mask_str(key, "c")
    raise TypeError("cannot render %r" % (type(elt).__name__,))


def render(elt):
    """Deterministic text form; parses back to the same element."""
    rows = []
    for key, coef in elt.terms.items():
        sort_key, atoms = _term_key_parts(elt, key)
        sign, body, atomic = _scalar_str(coef)
        rows.append(((0 if sign > 0 else 1,) + sort_key, sign, body, atomic, atoms))
    if not rows:
        return "0"
    rows.sort(key=lambda r: r[0])
    out = []
    for k, (_, sign, body, atomic, atoms) in enumerate(rows):
        if atoms and body == "1":
            txt = "*".join(atoms)
        elif atoms and atomic:
            txt = "%s*%s" % (body, "*".join(atoms))
        elif atoms:
            txt = "(%s)*%s" % (body, "*".join(atoms))
        else:
            txt = body
        if k == 0:
            out.append(txt if sign > 0 else "-" + txt)
        else:
            out.append((" + " if sign > 0 else " - ") + txt)
    return "".join(out)
